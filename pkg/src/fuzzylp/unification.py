"""Weak unification: terms unify when their root symbols are similar.

The algorithm is a six-rule transition system over states holding a multiset
of equations, the substitution built so far and the unification degree
accumulated so far:

1. decompose ``f(t...) ~ g(s...)`` when the roots are similar at degree
   r > bottom, combining r into the degree with the relation's t-norm
2. drop ``X ~ X``
3. bind ``X ~ t`` when X does not occur in t, substituting through the
   remaining equations
4. flip ``t ~ X`` so rule 3 can fire
5. fail on ``X ~ t`` when X occurs in t (occur check)
6. fail when the roots are not similar at all (including arity mismatches)

Equation selection is leftmost and decomposition pushes the argument
equations at the front, which reproduces displayed derivations step for
step.  A successful run with a degree that collapsed to bottom counts as a
failure: such a "success" is operationally indistinguishable from one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import FuzzylpError
from .similarity import SimilarityRelation
from .terms import Atom, Compound, ConnApp, Substitution, TruthLit, Value, Var


def occurs(name: str, t) -> bool:
    """Whether the variable called ``name`` occurs in a term or expression."""
    if isinstance(t, Var):
        return t.name == name
    if isinstance(t, (Compound, Atom, ConnApp)):
        return any(occurs(name, a) for a in t.args)
    return False


@dataclass(frozen=True)
class UnifState:
    """One state of the transition system."""

    equations: tuple
    theta: Substitution
    alpha: Value
    failed: bool = False

    def __str__(self) -> str:
        from .terms import format_value

        if self.failed:
            return f"<Fail, {self.theta}, {format_value(self.alpha)}>"
        eqs = ", ".join(f"{a} ~ {b}" for a, b in self.equations)
        return f"<{{{eqs}}}, {self.theta}, {format_value(self.alpha)}>"


@dataclass(frozen=True)
class WmguResult:
    """A weak most general unifier together with its unification degree."""

    theta: Substitution
    degree: Value


def initial_state(e1, e2, lattice) -> UnifState:
    return UnifState(((e1, e2),), Substitution.identity(), lattice.top)


def _root(x):
    """(root key, args) of a non-variable; Symbols compare via the relation,
    marker tuples only via equality."""
    if isinstance(x, Compound):
        return x.symbol, x.args
    if isinstance(x, Atom):
        return x.predicate, x.args
    if isinstance(x, ConnApp):
        return ("conn", x.conn.kind, x.conn.label, len(x.args)), x.args
    if isinstance(x, TruthLit):
        return ("lit", x.value), ()
    raise FuzzylpError(f"cannot unify {type(x).__name__}")


def step(state: UnifState, rel: SimilarityRelation) -> UnifState:
    """Apply exactly one transition to the leftmost equation.

    Precondition: the state is not failed and has at least one equation.
    Failure is a returned state, never an exception.
    """
    if state.failed or not state.equations:
        raise FuzzylpError("step needs a live state with pending equations")
    (left, right), rest = state.equations[0], state.equations[1:]
    lat = rel.lattice

    if isinstance(left, Var):
        if isinstance(right, Var) and right.name == left.name:
            return UnifState(rest, state.theta, state.alpha)  # rule 2
        if occurs(left.name, right):
            return UnifState(rest, state.theta, state.alpha, failed=True)  # rule 5
        if not isinstance(right, (Var, Compound)):
            # an expression is not a term; nothing a variable can stand for
            return UnifState(rest, state.theta, state.alpha, failed=True)
        bind = Substitution({left.name: right})  # rule 3
        new_rest = tuple((bind.apply(a), bind.apply(b)) for a, b in rest)
        return UnifState(new_rest, state.theta.compose(bind), state.alpha)

    if isinstance(right, Var):  # rule 4
        return UnifState(((right, left),) + rest, state.theta, state.alpha)

    fa, args1 = _root(left)
    ga, args2 = _root(right)
    if isinstance(fa, tuple) or isinstance(ga, tuple):
        degree = lat.top if fa == ga else lat.bot
    else:
        degree = rel.query(fa, ga)
    if degree == lat.bot or len(args1) != len(args2):
        return UnifState(rest, state.theta, state.alpha, failed=True)  # rule 6
    # rule 1; the identity axiom lets top-degree matches keep alpha exact
    if degree == lat.top:
        alpha = state.alpha
    elif state.alpha == lat.top:
        alpha = degree
    else:
        alpha = rel.conj(state.alpha, degree)
    return UnifState(tuple(zip(args1, args2)) + rest, state.theta, alpha)


def transition_states(e1, e2, rel: SimilarityRelation) -> Iterator[UnifState]:
    """Yield the full transition sequence, initial state included."""
    state = initial_state(e1, e2, rel.lattice)
    yield state
    while not state.failed and state.equations:
        state = step(state, rel)
        yield state


def weak_unify(e1, e2, rel: SimilarityRelation, max_steps: int = 100000) -> Optional[WmguResult]:
    """Weak most general unifier of two terms/atoms, or None on failure.

    Returns a substitution and a unification degree strictly above bottom.
    The run also fails when the accumulated degree collapses to bottom even
    though no failure rule fired.
    """
    lat = rel.lattice
    state = initial_state(e1, e2, lat)
    steps = 0
    while True:
        if state.failed or state.alpha == lat.bot:
            return None
        if not state.equations:
            return WmguResult(state.theta, state.alpha)
        state = step(state, rel)
        steps += 1
        if steps > max_steps:
            raise FuzzylpError("weak unification exceeded the step bound")
