"""Complete lattices of truth degrees and their connective registries.

Two carrier shapes are supported: a closed real interval (the default
``[0, 1]``) and finite carriers given by named elements plus an explicit
ordering.  Connectives (t-norms, t-conorms and aggregators) live in a
registry keyed by ``(kind, label)`` where kind is ``"and"``, ``"or"`` or
``"agr"``.

User-defined lattices are loaded from a small declarative text format, see
``parse_lattice``.  Connective truth functions in that format are written in
an expression language limited to the declared parameters, numeric literals,
``+ - * / ^``, ``min``/``max`` and parentheses; on finite carriers ``min``
and ``max`` mean the order-theoretic meet and join, and arithmetic is
rejected.  Explicit truth tables are the alternative for finite carriers.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .errors import EvalError, LatticeError
from .terms import Value, format_value

KINDS = ("and", "or", "agr")


@dataclass(frozen=True)
class Connective:
    """A named truth function over the carrier."""

    kind: str
    label: str
    arity: int
    fn: Callable

    def __post_init__(self):
        if self.kind not in KINDS:
            raise LatticeError(f"unknown connective kind {self.kind!r}")
        if self.arity < 1:
            raise LatticeError(f"{self.name} must have positive arity")

    @property
    def name(self) -> str:
        return f"{self.kind}_{self.label}"


@dataclass(frozen=True)
class UnitInterval:
    """Carrier: all reals in [lo, hi]."""

    lo: float = 0.0
    hi: float = 1.0

    def describe(self) -> str:
        return f"real in [{format_value(self.lo)}, {format_value(self.hi)}]"


@dataclass(frozen=True)
class FiniteCarrier:
    """Carrier: named elements plus a reflexive-transitive order relation."""

    elements: tuple
    order: frozenset = field(default_factory=frozenset)  # closed set of (lo, hi) pairs

    def describe(self) -> str:
        return ", ".join(self.elements)


def closed_order(elements: Sequence[str], pairs: Iterable[tuple]) -> frozenset:
    """Reflexive-transitive closure of declared `a < b` pairs."""
    order = {(e, e) for e in elements}
    order.update(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(order):
            for (c, d) in list(order):
                if b == c and (a, d) not in order:
                    order.add((a, d))
                    changed = True
    return frozenset(order)


class Lattice:
    """A bounded lattice of truth degrees with named connectives.

    Immutable after construction; evaluation is pure.
    """

    def __init__(
        self,
        name: str,
        carrier,
        bot: Value,
        top: Value,
        connectives: Iterable[Connective] = (),
        leq_fn: Optional[Callable[[Value, Value], bool]] = None,
    ):
        self.name = name
        self.carrier = carrier
        self.bot = bot
        self.top = top
        self._leq_fn = leq_fn
        self.connectives: dict = {}
        for c in connectives:
            key = (c.kind, c.label)
            if key in self.connectives:
                raise LatticeError(f"duplicate connective {c.name}")
            self.connectives[key] = c
        for role, v in (("bot", bot), ("top", top)):
            if not self.is_member(v):
                raise LatticeError(f"{role} value {format_value(v)} is not a member")

    # -- carrier ------------------------------------------------------------

    def is_member(self, v) -> bool:
        if isinstance(self.carrier, UnitInterval):
            return (
                isinstance(v, (int, float))
                and not isinstance(v, bool)
                and self.carrier.lo <= v <= self.carrier.hi
            )
        return isinstance(v, str) and v in self.carrier.elements

    @property
    def is_finite(self) -> bool:
        return isinstance(self.carrier, FiniteCarrier)

    def element_names(self) -> tuple:
        return self.carrier.elements if self.is_finite else ()

    def is_truth_name(self, name: str) -> bool:
        """Whether a bare identifier denotes a carrier element (finite lattices)."""
        return self.is_finite and name in self.carrier.elements

    def parse_value(self, text: str) -> Value:
        """Turn a source token into a carrier member, or raise LatticeError."""
        if self.is_finite:
            if text in self.carrier.elements:
                return text
            raise LatticeError(f"{text!r} is not an element of lattice {self.name}")
        try:
            v = float(text)
        except ValueError:
            raise LatticeError(f"{text!r} is not a truth value of lattice {self.name}")
        if not self.is_member(v):
            raise LatticeError(
                f"{format_value(v)} is outside {self.carrier.describe()}"
            )
        return v

    def format(self, v: Value) -> str:
        return format_value(v)

    # -- order --------------------------------------------------------------

    def leq(self, a: Value, b: Value) -> bool:
        for v in (a, b):
            if not self.is_member(v):
                raise LatticeError(f"{v!r} is not a member of lattice {self.name}")
        if isinstance(self.carrier, UnitInterval):
            if self._leq_fn is not None:
                return bool(self._leq_fn(a, b))
            return a <= b
        return (a, b) in self.carrier.order

    def _bound(self, a: Value, b: Value, lower: bool) -> Value:
        order = self.carrier.order
        if lower:
            cands = [c for c in self.carrier.elements if (c, a) in order and (c, b) in order]
            best = [c for c in cands if all((d, c) in order for d in cands)]
        else:
            cands = [c for c in self.carrier.elements if (a, c) in order and (b, c) in order]
            best = [c for c in cands if all((c, d) in order for d in cands)]
        if not best:
            kind = "infimum" if lower else "supremum"
            raise LatticeError(f"no {kind} of {a} and {b} in lattice {self.name}")
        return best[0]

    def meet(self, a: Value, b: Value) -> Value:
        if not self.is_finite:
            return min(a, b)
        return self._bound(a, b, lower=True)

    def join(self, a: Value, b: Value) -> Value:
        if not self.is_finite:
            return max(a, b)
        return self._bound(a, b, lower=False)

    # -- connectives ----------------------------------------------------------

    def connective(self, kind: str, label: str) -> Connective:
        try:
            return self.connectives[(kind, label)]
        except KeyError:
            raise EvalError(f"unknown connective {kind}_{label} in lattice {self.name}")

    def eval(self, ref, args: Sequence[Value]) -> Value:
        """Apply a registered connective; checks membership on both sides.

        ``ref`` is a ConnectiveRef or a ``(kind, label)`` pair.
        """
        kind, label = (ref.kind, ref.label) if hasattr(ref, "kind") else ref
        conn = self.connective(kind, label)
        if len(args) != conn.arity:
            raise EvalError(
                f"{conn.name} expects {conn.arity} argument(s), got {len(args)}"
            )
        for a in args:
            if not self.is_member(a):
                shown = format_value(a) if isinstance(a, (int, float, str)) else repr(a)
                raise EvalError(
                    f"argument {shown} of {conn.name} is not a member of lattice {self.name}"
                )
        try:
            result = conn.fn(*args)
        except ZeroDivisionError:
            raise EvalError(f"{conn.name} divided by zero on {args!r}")
        if isinstance(self.carrier, UnitInterval) and isinstance(result, float):
            # absorb float fuzz at the carrier edges
            if self.carrier.lo - 1e-9 <= result < self.carrier.lo:
                result = self.carrier.lo
            elif self.carrier.hi < result <= self.carrier.hi + 1e-9:
                result = self.carrier.hi
        if not self.is_member(result):
            raise EvalError(f"{conn.name} produced non-member value {result!r}")
        return result

    def describe(self) -> str:
        lines = [
            f"lattice {self.name}",
            f"members: {self.carrier.describe()}",
            f"bot: {format_value(self.bot)}",
            f"top: {format_value(self.top)}",
        ]
        for (kind, label) in sorted(
            self.connectives, key=lambda k: (KINDS.index(k[0]), k[1])
        ):
            lines.append(f"{kind} {label}/{self.connectives[(kind, label)].arity}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"<Lattice {self.name}>"


def builtin_unit_interval() -> Lattice:
    """The built-in lattice ([0,1], <=) with the product, Goedel and
    Lukasiewicz connective families plus the average and very aggregators."""
    conns = [
        Connective("and", "prod", 2, lambda x, y: x * y),
        Connective("and", "godel", 2, lambda x, y: min(x, y)),
        Connective("and", "luka", 2, lambda x, y: max(x + y - 1.0, 0.0)),
        Connective("or", "prod", 2, lambda x, y: x + y - x * y),
        Connective("or", "godel", 2, lambda x, y: max(x, y)),
        Connective("or", "luka", 2, lambda x, y: min(x + y, 1.0)),
        Connective("agr", "aver", 2, lambda x, y: (x + y) / 2.0),
        Connective("agr", "very", 1, lambda x: x * x),
    ]
    return Lattice("unit", UnitInterval(), 0.0, 1.0, conns)


# ---------------------------------------------------------------------------
# Expression language for connective definitions
# ---------------------------------------------------------------------------

_EXPR_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+\.\d+|\d+)|(?P<id>[a-zA-Z_][A-Za-z0-9_]*)"
    r"|(?P<op><=|>=|==|[<>+\-*/^(),]))"
)


def _tokenize_expr(src: str):
    out = []
    pos = 0
    while pos < len(src):
        m = _EXPR_TOKEN.match(src, pos)
        if not m or m.end() == pos:
            rest = src[pos:].strip()
            if not rest:
                break
            raise LatticeError(f"cannot read expression near {rest[:10]!r}")
        pos = m.end()
        if m.group("num"):
            out.append(("num", float(m.group("num"))))
        elif m.group("id"):
            out.append(("id", m.group("id")))
        else:
            out.append(("op", m.group("op")))
    out.append(("end", ""))
    return out


class _ExprParser:
    """Compiles a connective body to a closure over its parameter tuple."""

    def __init__(self, src: str, params: Sequence[str], lat: "Lattice", allow_compare: bool):
        self.tokens = _tokenize_expr(src)
        self.i = 0
        self.params = list(params)
        self.lat = lat
        self.allow_compare = allow_compare
        self.src = src

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, text = self.take()
        if kind != "op" or text != op:
            raise LatticeError(f"expected {op!r} in expression {self.src!r}")

    def _numeric_only(self, what: str):
        if self.lat.is_finite:
            raise LatticeError(
                f"{what} is not available on finite carrier expressions ({self.src!r})"
            )

    def parse(self):
        fn = self.comparison() if self.allow_compare else self.additive()
        kind, text = self.take()
        if kind != "end":
            raise LatticeError(f"trailing input {text!r} in expression {self.src!r}")
        return fn

    def comparison(self):
        left = self.additive()
        kind, text = self.peek()
        if kind == "op" and text in ("<=", "<", ">=", ">", "=="):
            self.take()
            right = self.additive()
            ops = {
                "<=": lambda a, b: a <= b,
                "<": lambda a, b: a < b,
                ">=": lambda a, b: a >= b,
                ">": lambda a, b: a > b,
                "==": lambda a, b: a == b,
            }
            cmp = ops[text]
            return lambda env, l=left, r=right, c=cmp: c(l(env), r(env))
        return left

    def additive(self):
        fn = self.multiplicative()
        while True:
            kind, text = self.peek()
            if kind == "op" and text in ("+", "-"):
                self.take()
                self._numeric_only(f"operator {text!r}")
                rhs = self.multiplicative()
                if text == "+":
                    fn = lambda env, l=fn, r=rhs: l(env) + r(env)
                else:
                    fn = lambda env, l=fn, r=rhs: l(env) - r(env)
            else:
                return fn

    def multiplicative(self):
        fn = self.unary()
        while True:
            kind, text = self.peek()
            if kind == "op" and text in ("*", "/"):
                self.take()
                self._numeric_only(f"operator {text!r}")
                rhs = self.unary()
                if text == "*":
                    fn = lambda env, l=fn, r=rhs: l(env) * r(env)
                else:
                    fn = lambda env, l=fn, r=rhs: l(env) / r(env)
            else:
                return fn

    def unary(self):
        kind, text = self.peek()
        if kind == "op" and text == "-":
            self.take()
            self._numeric_only("unary minus")
            inner = self.unary()
            return lambda env, f=inner: -f(env)
        return self.power()

    def power(self):
        base = self.atom()
        kind, text = self.peek()
        if kind == "op" and text == "^":
            self.take()
            self._numeric_only("operator '^'")
            exp = self.unary()  # right-associative
            return lambda env, b=base, e=exp: b(env) ** e(env)
        return base

    def atom(self):
        kind, text = self.take()
        if kind == "num":
            self._numeric_only("a numeric literal")
            return lambda env, v=text: v
        if kind == "op" and text == "(":
            inner = self.comparison() if self.allow_compare else self.additive()
            self.expect_op(")")
            return inner
        if kind == "id":
            if text in ("min", "max"):
                self.expect_op("(")
                args = [self.additive()]
                while True:
                    k, t = self.peek()
                    if k == "op" and t == ",":
                        self.take()
                        args.append(self.additive())
                    else:
                        break
                self.expect_op(")")
                if len(args) < 2:
                    raise LatticeError(f"{text} needs at least two arguments")
                combine = self.lat.meet if text == "min" else self.lat.join

                def fold(env, fns=tuple(args), op=combine):
                    acc = fns[0](env)
                    for f in fns[1:]:
                        acc = op(acc, f(env))
                    return acc

                return fold
            if text in self.params:
                idx = self.params.index(text)
                return lambda env, i=idx: env[i]
            if self.lat.is_truth_name(text):
                return lambda env, v=text: v
            raise LatticeError(f"unknown operator or name {text!r} in {self.src!r}")
        raise LatticeError(f"unexpected {text!r} in expression {self.src!r}")


def compile_connective_expr(
    src: str, params: Sequence[str], lat: Lattice, allow_compare: bool = False
) -> Callable:
    """Compile the right-hand side of a connective or leq declaration."""
    body = _ExprParser(src, params, lat, allow_compare).parse()

    def fn(*args):
        return body(args)

    return fn


# ---------------------------------------------------------------------------
# Lattice definition files
# ---------------------------------------------------------------------------

_HEADER_RE = re.compile(r"^lattice\s+([A-Za-z_][A-Za-z0-9_]*)$")
_MEMBERS_REAL_RE = re.compile(
    r"^members:\s*real\s+in\s*\[\s*([-+0-9.eE]+)\s*,\s*([-+0-9.eE]+)\s*\]$"
)
_MEMBERS_LIST_RE = re.compile(r"^members:\s*(.+)$")
_BOT_RE = re.compile(r"^bot:\s*(\S+)$")
_TOP_RE = re.compile(r"^top:\s*(\S+)$")
_LEQ_PAIR_RE = re.compile(r"^leq:\s*(\S+)\s*<\s*(\S+)$")
_LEQ_EXPR_RE = re.compile(r"^leq\(\s*(\w+)\s*,\s*(\w+)\s*\)\s*:\s*(.+)$")
_CONN_RE = re.compile(
    r"^(and|or|agr)\s+([a-z][A-Za-z0-9_]*)\s*(?:/(\d+)|\(([^)]*)\))\s*:\s*(.+)$"
)
_TABLE_ROW_RE = re.compile(r"^(.*?)->\s*(\S+)$")


def parse_lattice(text: str) -> Lattice:
    """Load a lattice from its definition text.

    The format is line-oriented: a ``lattice <name>`` header, a mandatory
    ``members:`` line (``real in [lo,hi]`` or a comma-separated element
    list), mandatory ``bot:`` / ``top:`` lines, the ordering (``leq: a < b``
    pairs for finite carriers, ``leq(x,y): <comparison>`` for numeric ones)
    and connective declarations ``and|or|agr label(params): <expr>`` or
    ``and|or|agr label/arity: table`` followed by ``e1 e2 -> e`` rows.
    ``#`` starts a comment.
    """
    name = "unnamed"
    carrier_spec = None  # ("real", lo, hi) | ("finite", [elements])
    bot_txt = top_txt = None
    leq_pairs: list = []
    leq_expr = None  # (params, src)
    decls: list = []  # (kind, label, params|None, arity, rhs, lineno)
    tables: dict = {}  # decl index -> list of (args_tuple, result)

    pending_table: Optional[int] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        m = _TABLE_ROW_RE.match(line)
        if m and pending_table is not None and not _CONN_RE.match(line):
            lhs = [t for t in re.split(r"[\s,]+", m.group(1).strip()) if t]
            tables.setdefault(pending_table, []).append((tuple(lhs), m.group(2)))
            continue

        pending_table = None
        if m2 := _HEADER_RE.match(line):
            name = m2.group(1)
            continue
        if m2 := _MEMBERS_REAL_RE.match(line):
            carrier_spec = ("real", float(m2.group(1)), float(m2.group(2)))
            continue
        if line.startswith("members:"):
            m2 = _MEMBERS_LIST_RE.match(line)
            elems = (
                [e.strip() for e in m2.group(1).split(",") if e.strip()] if m2 else []
            )
            if not elems:
                raise LatticeError(f"line {lineno}: empty members list")
            carrier_spec = ("finite", elems)
            continue
        if m2 := _BOT_RE.match(line):
            bot_txt = m2.group(1)
            continue
        if m2 := _TOP_RE.match(line):
            top_txt = m2.group(1)
            continue
        if m2 := _LEQ_EXPR_RE.match(line):
            leq_expr = ([m2.group(1), m2.group(2)], m2.group(3))
            continue
        if m2 := _LEQ_PAIR_RE.match(line):
            leq_pairs.append((m2.group(1), m2.group(2)))
            continue
        if m2 := _CONN_RE.match(line):
            kind, label, arity_txt, params_txt, rhs = m2.groups()
            if params_txt is not None:
                params = [p.strip() for p in params_txt.split(",") if p.strip()]
                arity = len(params)
            else:
                arity = int(arity_txt)
                params = [f"x{i}" for i in range(1, arity + 1)]
            if arity < 1:
                raise LatticeError(f"line {lineno}: {kind} {label} needs arity >= 1")
            if kind in ("and", "or") and arity != 2:
                raise LatticeError(
                    f"line {lineno}: {kind} {label} must be binary"
                )
            decls.append((kind, label, params, arity, rhs.strip(), lineno))
            if rhs.strip() == "table":
                pending_table = len(decls) - 1
            continue
        raise LatticeError(f"line {lineno}: cannot parse {line!r}")

    if carrier_spec is None:
        raise LatticeError("missing mandatory section: members")
    if bot_txt is None:
        raise LatticeError("missing mandatory section: bot")
    if top_txt is None:
        raise LatticeError("missing mandatory section: top")

    if carrier_spec[0] == "real":
        carrier = UnitInterval(carrier_spec[1], carrier_spec[2])
        if leq_expr is None:
            raise LatticeError("missing mandatory section: leq")
        try:
            bot = float(bot_txt)
            top = float(top_txt)
        except ValueError:
            raise LatticeError("bot/top of a numeric carrier must be numbers")
    else:
        elements = carrier_spec[1]
        if len(elements) != len(set(elements)):
            raise LatticeError("duplicate element names in members")
        if len(elements) > 1 and not leq_pairs:
            raise LatticeError("missing mandatory section: leq")
        for a, b in leq_pairs:
            for e in (a, b):
                if e not in elements:
                    raise LatticeError(f"leq mentions unknown element {e!r}")
        if leq_expr is not None:
            raise LatticeError("finite carriers declare leq as `leq: a < b` pairs")
        carrier = FiniteCarrier(tuple(elements), closed_order(elements, leq_pairs))
        bot = bot_txt
        top = top_txt

    # a bare skeleton lets the expression compiler resolve element names and
    # meet/join before the registry exists
    skeleton = Lattice(name, carrier, bot, top, ())

    leq_fn = None
    if leq_expr is not None:
        leq_fn = compile_connective_expr(
            leq_expr[1], leq_expr[0], skeleton, allow_compare=True
        )

    connectives = []
    for i, (kind, label, params, arity, rhs, lineno) in enumerate(decls):
        if rhs == "table":
            if not skeleton.is_finite:
                raise LatticeError(
                    f"line {lineno}: truth tables need a finite carrier"
                )
            rows = tables.get(i, [])
            mapping = {}
            for args, result in rows:
                if len(args) != arity:
                    raise LatticeError(
                        f"line {lineno}: table row of {kind} {label} has"
                        f" {len(args)} argument(s), expected {arity}"
                    )
                for e in args + (result,):
                    if e not in carrier.elements:
                        raise LatticeError(
                            f"table of {kind} {label} mentions unknown element {e!r}"
                        )
                mapping[args] = result
            expected = len(carrier.elements) ** arity
            if len(mapping) != expected:
                raise LatticeError(
                    f"table of {kind} {label} has {len(mapping)} of"
                    f" {expected} entries"
                )
            fn = (lambda m: (lambda *args: m[tuple(args)]))(mapping)
        else:
            fn = compile_connective_expr(rhs, params, skeleton)
        connectives.append(Connective(kind, label, arity, fn))

    return Lattice(name, carrier, bot, top, connectives, leq_fn=leq_fn)


# ---------------------------------------------------------------------------
# Axiom checking
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    axiom: str
    connective: Optional[str]
    witness: tuple

    def __str__(self) -> str:
        where = f" in {self.connective}" if self.connective else ""
        args = ", ".join(format_value(w) if isinstance(w, (int, float, str)) else repr(w) for w in self.witness)
        return f"{self.axiom}{where} (witness: {args})"


@dataclass
class AxiomReport:
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "all axioms hold"
        return "\n".join(str(v) for v in self.violations)


def _approx_eq(a, b) -> bool:
    if isinstance(a, float) and isinstance(b, float):
        return abs(a - b) <= 1e-12
    return a == b


def check_axioms(lat: Lattice, samples: int = 1000, seed: int = 0) -> AxiomReport:
    """Verify the partial-order, bound, t-norm/t-conorm and aggregator axioms.

    Finite carriers are checked exhaustively; interval carriers on ``samples``
    pseudo-random tuples plus the carrier bounds.  Violations are report
    content, never exceptions.
    """
    out: list = []
    rng = random.Random(seed)

    if lat.is_finite:
        pool = list(lat.carrier.elements)
        pairs = [(a, b) for a in pool for b in pool]
        triples = [(a, b, c) for a in pool for b in pool for c in pool]
    else:
        lo, hi = lat.carrier.lo, lat.carrier.hi
        pool = [lo, hi] + [rng.uniform(lo, hi) for _ in range(samples)]
        pairs = [(lo, lo), (lo, hi), (hi, lo), (hi, hi)] + [
            (rng.uniform(lo, hi), rng.uniform(lo, hi)) for _ in range(samples)
        ]
        triples = [
            (rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi))
            for _ in range(samples)
        ]

    # partial order and bounds
    for x in pool:
        if not lat.leq(x, x):
            out.append(Violation("leq not reflexive", None, (x,)))
        if not lat.leq(lat.bot, x):
            out.append(Violation("bot not a lower bound", None, (x,)))
        if not lat.leq(x, lat.top):
            out.append(Violation("top not an upper bound", None, (x,)))
    for a, b in pairs:
        if lat.leq(a, b) and lat.leq(b, a) and not _approx_eq(a, b):
            out.append(Violation("leq not antisymmetric", None, (a, b)))
    for a, b, c in triples:
        if lat.leq(a, b) and lat.leq(b, c) and not lat.leq(a, c):
            out.append(Violation("leq not transitive", None, (a, b, c)))
    if lat.is_finite:
        for a, b in pairs:
            try:
                lat.meet(a, b)
                lat.join(a, b)
            except LatticeError:
                out.append(Violation("missing infimum or supremum", None, (a, b)))

    def leq_tol(a, b) -> bool:
        if isinstance(a, float) and isinstance(b, float):
            return a <= b + 1e-12
        return lat.leq(a, b)

    for (kind, label), conn in sorted(
        lat.connectives.items(), key=lambda kv: (KINDS.index(kv[0][0]), kv[0][1])
    ):
        ev = lambda *args: lat.eval((kind, label), list(args))
        if kind in ("and", "or"):
            unit = lat.top if kind == "and" else lat.bot
            for a, b in pairs:
                if not _approx_eq(ev(a, b), ev(b, a)):
                    out.append(Violation("not commutative", conn.name, (a, b)))
            for a, b, c in triples:
                if not _approx_eq(ev(a, ev(b, c)), ev(ev(a, b), c)):
                    out.append(Violation("not associative", conn.name, (a, b, c)))
            for x in pool:
                if not _approx_eq(ev(x, unit), x):
                    out.append(Violation("identity element fails", conn.name, (x,)))
            for a, b, c in triples:
                if lat.leq(a, b) and not leq_tol(ev(a, c), ev(b, c)):
                    out.append(Violation("not monotone", conn.name, (a, b, c)))
        else:
            tops = (lat.top,) * conn.arity
            bots = (lat.bot,) * conn.arity
            if not _approx_eq(ev(*tops), lat.top):
                out.append(Violation("boundary at top fails", conn.name, tops))
            if not _approx_eq(ev(*bots), lat.bot):
                out.append(Violation("boundary at bottom fails", conn.name, bots))
            if lat.is_finite:
                arg_tuples = list(itertools.product(pool, repeat=conn.arity))
            else:
                arg_tuples = [
                    tuple(rng.uniform(lat.carrier.lo, lat.carrier.hi) for _ in range(conn.arity))
                    for _ in range(samples)
                ]
            for args in arg_tuples:
                for pos in range(conn.arity):
                    for e in (pool if lat.is_finite else [rng.uniform(lat.carrier.lo, lat.carrier.hi)]):
                        if not lat.leq(args[pos], e):
                            continue
                        bumped = list(args)
                        bumped[pos] = e
                        if not leq_tol(ev(*args), ev(*bumped)):
                            out.append(
                                Violation(
                                    f"not monotone in argument {pos + 1}",
                                    conn.name,
                                    tuple(args) + (e,),
                                )
                            )
    return AxiomReport(out)
