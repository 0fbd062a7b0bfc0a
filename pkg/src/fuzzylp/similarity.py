"""Similarity relations on symbols and their extension to whole terms.

A relation is built from user equations ``f/n ~ g/n = r`` by taking the
reflexive, symmetric and transitive closure under a chosen conjunction
(t-norm).  The transitive pass is repeated until a fixpoint is reached, so
the result really is transitive whatever the input; a ``single_pass`` switch
exposes the non-iterated variant for comparison.

Only symbol pairs are stored.  The extension to terms is computed on demand
by structural induction, and symbols that appear in no equation fall back to
the identity relation (similar only to themselves, at top degree).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import EvalError, LatticeError, ParseError, SimilarityError
from .lattice import Lattice, builtin_unit_interval
from .parser import tokenize
from .terms import Atom, Compound, ConnApp, Symbol, TruthLit, Value, Var, format_value


@dataclass(frozen=True)
class SimilarityEquation:
    """One user-written proximity statement between equal-arity symbols."""

    left: Symbol
    right: Symbol
    degree: Value

    def __str__(self) -> str:
        return f"{self.left} ~ {self.right} = {format_value(self.degree)}"


def parse_sim(
    text: str, lattice: Optional[Lattice] = None, source: Optional[str] = None
) -> tuple:
    """Parse similarity equations and an optional t-norm directive.

    Statements are ``f[/n] ~ g[/n] = r.`` and ``~tnorm = <label>.``; an
    omitted arity means 0.  When several directives appear only the last one
    is kept.  Returns ``(equations, tnorm_label_or_None)``.
    """
    lattice = lattice or builtin_unit_interval()
    tokens = tokenize(text, source)
    i = 0
    equations = []
    tnorm = None

    def err(msg, tok):
        raise ParseError(msg, tok.line, tok.col, source)

    def expect(kind, text_=None):
        nonlocal i
        tok = tokens[i]
        if tok.kind != kind or (text_ is not None and tok.text != text_):
            err(f"expected {text_ or kind}", tok)
        i += 1
        return tok

    def symbol() -> Symbol:
        nonlocal i
        tok = tokens[i]
        if tok.kind == "id":
            name = tok.text
        elif tok.kind == "number":
            name = format_value(float(tok.text))
        else:
            err("expected a symbol", tok)
        i += 1
        arity = 0
        if tokens[i].kind == "punct" and tokens[i].text == "/":
            i += 1
            ar = tokens[i]
            if ar.kind != "number" or "." in ar.text:
                err("expected an integer arity", ar)
            arity = int(ar.text)
            i += 1
        return Symbol(name, arity)

    while tokens[i].kind != "eof":
        tok = tokens[i]
        if tok.kind == "punct" and tok.text == "~":
            # ~tnorm = label.
            i += 1
            expect("id", "tnorm")
            expect("punct", "=")
            label = expect("id")
            expect("punct", ".")
            tnorm = label.text
            continue
        left = symbol()
        expect("punct", "~")
        right = symbol()
        if left.arity != right.arity:
            err(
                f"arity mismatch: {left} vs {right} (both arities have to be equal)",
                tok,
            )
        expect("punct", "=")
        deg_tok = tokens[i]
        if deg_tok.kind not in ("number", "id"):
            err("expected a truth degree", deg_tok)
        i += 1
        try:
            degree = lattice.parse_value(deg_tok.text)
        except LatticeError as e:
            err(str(e), deg_tok)
        expect("punct", ".")
        equations.append(SimilarityEquation(left, right, degree))
    return equations, tnorm


class SimilarityRelation:
    """A closed fuzzy binary relation on symbols, with its t-norm.

    Immutable after construction; query and term extension are pure.
    """

    def __init__(
        self,
        entries: dict,
        lattice: Lattice,
        tnorm: str,
        warnings: Sequence[str] = (),
    ):
        self.entries = dict(entries)
        self.lattice = lattice
        self.tnorm = tnorm
        self.warnings = tuple(warnings)
        self._conn = lattice.connective("and", tnorm)

    def conj(self, a: Value, b: Value) -> Value:
        return self.lattice.eval(("and", self.tnorm), [a, b])

    def query(self, f: Symbol, g: Symbol) -> Value:
        """Stored degree; top for identical symbols; bottom otherwise."""
        hit = self.entries.get((f, g))
        if hit is not None:
            return hit
        return self.lattice.top if f == g else self.lattice.bot

    def symbols(self) -> set:
        return {s for pair in self.entries for s in pair}

    def extend_to_terms(self, t1, t2) -> Value:
        """Approximation degree of two terms (or atoms), by structural induction.

        A variable matches only itself at top degree; equal-arity compounds
        combine the root degree with the argument degrees under the t-norm;
        everything else is bottom.
        """
        lat = self.lattice
        if isinstance(t1, Var) or isinstance(t2, Var):
            return lat.top if t1 == t2 else lat.bot
        if isinstance(t1, TruthLit) or isinstance(t2, TruthLit):
            if isinstance(t1, TruthLit) and isinstance(t2, TruthLit):
                return lat.top if t1.value == t2.value else lat.bot
            return lat.bot
        if isinstance(t1, ConnApp) or isinstance(t2, ConnApp):
            if (
                isinstance(t1, ConnApp)
                and isinstance(t2, ConnApp)
                and t1.conn == t2.conn
                and len(t1.args) == len(t2.args)
            ):
                degree = lat.top
            else:
                return lat.bot
            args1, args2 = t1.args, t2.args
        else:
            f = t1.symbol if isinstance(t1, Compound) else t1.predicate
            g = t2.symbol if isinstance(t2, Compound) else t2.predicate
            if f.arity != g.arity:
                return lat.bot
            degree = self.query(f, g)
            if degree == lat.bot:
                return lat.bot
            args1, args2 = t1.args, t2.args
        for a, b in zip(args1, args2):
            degree = self.conj(degree, self.extend_to_terms(a, b))
            if degree == lat.bot:
                return lat.bot
        return degree

    def __len__(self) -> int:
        return len(self.entries)

    def __repr__(self) -> str:
        return f"<SimilarityRelation {len(self.entries)} entries, tnorm={self.tnorm}>"


def close(
    equations: Iterable[SimilarityEquation],
    lattice: Optional[Lattice] = None,
    tnorm: str = "godel",
    single_pass: bool = False,
) -> SimilarityRelation:
    """Reflexive, symmetric and transitive closure of the given equations.

    The symmetric closure keeps the larger degree when both orientations are
    given.  The transitive update R(a,c) := max(R(a,c), R(a,b) /\\ R(b,c)) is
    repeated until nothing changes (or run once when ``single_pass``).  When
    a candidate degree is incomparable with the stored one the stored entry
    wins and a warning is recorded.
    """
    lattice = lattice or builtin_unit_interval()
    try:
        lattice.connective("and", tnorm)
    except EvalError:
        raise SimilarityError(
            f"tnorm {tnorm!r} is not a conjunction of lattice {lattice.name}"
        )

    eqs = list(equations)
    for eq in eqs:
        if eq.left.arity != eq.right.arity:
            raise SimilarityError(f"arity mismatch in equation {eq}")
        if not lattice.is_member(eq.degree):
            raise SimilarityError(f"degree of {eq} is outside the carrier")

    top, bot = lattice.top, lattice.bot
    entries: dict = {}
    warnings: list = []

    def put(a: Symbol, b: Symbol, r: Value) -> bool:
        """Upgrade the (a,b)/(b,a) entries to r if it is larger; report change."""
        cur = entries.get((a, b))
        if cur is None:
            entries[(a, b)] = entries[(b, a)] = r
            return True
        if cur == r:
            return False
        if lattice.leq(cur, r):
            entries[(a, b)] = entries[(b, a)] = r
            return True
        if not lattice.leq(r, cur):
            warnings.append(
                f"incomparable degrees for {a} ~ {b}:"
                f" kept {format_value(cur)}, ignored {format_value(r)}"
            )
        return False

    # reflexive closure over every mentioned symbol
    for eq in eqs:
        for s in (eq.left, eq.right):
            entries[(s, s)] = top
    # user equations plus symmetric closure
    for eq in eqs:
        put(eq.left, eq.right, eq.degree)

    # transitive closure, iterated to a fixpoint
    while True:
        changed = False
        by_first: dict = {}
        for (a, b), r in entries.items():
            by_first.setdefault(a, []).append((b, r))
        for (a, b), r1 in list(entries.items()):
            for c, r2 in by_first.get(b, ()):
                r = lattice.eval(("and", tnorm), [r1, r2])
                if r == bot:
                    continue
                if put(a, c, r):
                    changed = True
        if single_pass or not changed:
            break

    return SimilarityRelation(entries, lattice, tnorm, warnings)


def identity_relation(
    lattice: Optional[Lattice] = None, tnorm: str = "godel"
) -> SimilarityRelation:
    """The relation where every symbol is similar only to itself."""
    return close([], lattice, tnorm)
