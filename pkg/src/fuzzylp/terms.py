"""Core syntax: symbols, terms, expressions, rules and substitutions.

All values here are immutable after construction and safe to share between
threads.  Truth degrees are plain Python values: ``float`` on numeric
carriers, ``str`` (the element name) on finite ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Union

Value = Union[float, str]


def format_value(v: Value) -> str:
    """Render a truth degree.

    Floats print as the shortest decimal that round-trips to within 1e-9 of
    the stored value, so arithmetic noise like 0.38000000000000006 renders as
    "0.38".  Finite-lattice elements are already names and print verbatim.
    """
    if isinstance(v, str):
        return v
    for places in range(0, 13):
        s = f"{v:.{places}f}"
        if abs(float(s) - v) <= 1e-9:
            if "." in s:
                s = s.rstrip("0").rstrip(".")
            return s if s else "0"
    return repr(v)


@dataclass(frozen=True)
class Symbol:
    """A function or predicate symbol keyed by name and arity."""

    name: str
    arity: int

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError(f"negative arity for symbol {self.name}")

    def __str__(self) -> str:
        return f"{self.name}/{self.arity}"


@dataclass(frozen=True)
class Var:
    """A logic variable."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Compound:
    """A function symbol applied to terms; constants have no arguments."""

    symbol: Symbol
    args: tuple = ()

    def __post_init__(self):
        if len(self.args) != self.symbol.arity:
            raise ValueError(
                f"{self.symbol} applied to {len(self.args)} argument(s)"
            )

    def __str__(self) -> str:
        if not self.args:
            return self.symbol.name
        return f"{self.symbol.name}({', '.join(str(a) for a in self.args)})"


Term = Union[Var, Compound]


def const(name: str) -> Compound:
    """Shorthand for an arity-0 compound."""
    return Compound(Symbol(name, 0), ())


@dataclass(frozen=True)
class ConnectiveRef:
    """Reference to a connective by kind ("and" | "or" | "agr") and label.

    Resolution against the active lattice's registry happens at evaluation
    time, not at parse time.
    """

    kind: str
    label: str

    def __str__(self) -> str:
        return f"{self.kind}_{self.label}"


SIGIL = {"and": "&", "or": "|", "agr": "@"}


@dataclass(frozen=True)
class TruthLit:
    """A truth degree used as a formula."""

    value: Value

    def __str__(self) -> str:
        return format_value(self.value)


@dataclass(frozen=True)
class Atom:
    """A predicate applied to terms."""

    predicate: Symbol
    args: tuple = ()

    def __post_init__(self):
        if len(self.args) != self.predicate.arity:
            raise ValueError(
                f"{self.predicate} applied to {len(self.args)} argument(s)"
            )

    def __str__(self) -> str:
        if not self.args:
            return self.predicate.name
        return f"{self.predicate.name}({', '.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class ConnApp:
    """A connective applied to formulas."""

    conn: ConnectiveRef
    args: tuple

    def __str__(self) -> str:
        inner = ", ".join(str(a) for a in self.args)
        return f"{SIGIL[self.conn.kind]}{self.conn.label}({inner})"


Expression = Union[TruthLit, Atom, ConnApp]


@dataclass(frozen=True)
class Rule:
    """A program rule ``head <- body.`` with a stable ordinal id."""

    id: int
    head: Atom
    body: Expression

    @property
    def is_fact(self) -> bool:
        return isinstance(self.body, TruthLit)

    def __str__(self) -> str:
        return f"{self.head} <- {self.body}."


def variables(x) -> list:
    """Distinct variable names of a term or expression, in first-occurrence order."""
    seen: dict = {}

    def walk(node):
        if isinstance(node, Var):
            seen.setdefault(node.name, None)
        elif isinstance(node, (Compound, Atom, ConnApp)):
            for a in node.args:
                walk(a)

    walk(x)
    return list(seen)


class Substitution:
    """Finite mapping from variable names to terms, applied simultaneously.

    Instances are treated as immutable; bindings keep insertion order so
    printed answers are stable.
    """

    __slots__ = ("_bindings",)

    def __init__(self, bindings: Mapping[str, Term] | None = None):
        self._bindings = dict(bindings or {})

    @classmethod
    def identity(cls) -> "Substitution":
        return cls()

    @property
    def bindings(self) -> Mapping[str, Term]:
        return MappingProxyType(self._bindings)

    def is_identity(self) -> bool:
        return not self._bindings

    def apply(self, x):
        """Replace every bound variable in a term or expression by its image."""
        if not self._bindings:
            return x
        return self._apply(x)

    def _apply(self, x):
        if isinstance(x, Var):
            return self._bindings.get(x.name, x)
        if isinstance(x, Compound):
            if not x.args:
                return x
            return Compound(x.symbol, tuple(self._apply(a) for a in x.args))
        if isinstance(x, TruthLit):
            return x
        if isinstance(x, Atom):
            if not x.args:
                return x
            return Atom(x.predicate, tuple(self._apply(a) for a in x.args))
        if isinstance(x, ConnApp):
            return ConnApp(x.conn, tuple(self._apply(a) for a in x.args))
        raise TypeError(f"cannot substitute into {type(x).__name__}")

    def compose(self, other: "Substitution") -> "Substitution":
        """Substitution that behaves as ``self`` followed by ``other``.

        Identity bindings produced by the composition are dropped.
        """
        out: dict = {}
        for name, term in self._bindings.items():
            image = other.apply(term)
            if isinstance(image, Var) and image.name == name:
                continue
            out[name] = image
        for name, term in other._bindings.items():
            if name not in self._bindings:
                out[name] = term
        return Substitution(out)

    def restrict(self, names: Iterable[str]) -> "Substitution":
        keep = set(names)
        return Substitution({k: v for k, v in self._bindings.items() if k in keep})

    def is_idempotent(self) -> bool:
        bound = set(self._bindings)
        return all(bound.isdisjoint(variables(t)) for t in self._bindings.values())

    def items(self):
        return self._bindings.items()

    def __len__(self) -> int:
        return len(self._bindings)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Substitution):
            return NotImplemented
        return self._bindings == other._bindings

    __hash__ = None  # mutable-looking container; not hashable

    def __str__(self) -> str:
        inner = ", ".join(f"{k}/{v}" for k, v in self._bindings.items())
        return "{" + inner + "}"

    def __repr__(self) -> str:
        return f"Substitution({self._bindings!r})"


class FreshCounter:
    """Source of fresh variable names for renaming rules apart.

    Every renaming call consumes one index and renames all variables of the
    rule with it (X -> X1, Y -> Y1, ...), which is what makes displayed
    derivations reproducible.  Produced names are remembered and never
    reissued; names passed as ``reserved`` (typically the goal's variables)
    are never produced.
    """

    def __init__(self, reserved: Iterable[str] = ()):
        self._next = 1
        self._taken = set(reserved)

    def rename_map(self, names: list) -> dict:
        while True:
            idx = self._next
            self._next += 1
            mapping = {n: f"{n}{idx}" for n in names}
            produced = set(mapping.values())
            if not (produced & self._taken):
                self._taken |= produced
                return mapping


def rename_apart(rule: Rule, counter: FreshCounter) -> Rule:
    """Rename all variables of a rule with fresh names from the counter.

    Ground rules come back unchanged and do not consume an index.
    """
    head_vars = variables(rule.head)
    names = head_vars + [n for n in variables(rule.body) if n not in head_vars]
    if not names:
        return rule
    mapping = counter.rename_map(names)
    sub = Substitution({n: Var(m) for n, m in mapping.items()})
    return Rule(rule.id, sub.apply(rule.head), sub.apply(rule.body))
