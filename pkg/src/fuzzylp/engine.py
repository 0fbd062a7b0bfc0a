"""Operational semantics: derivation trees and fuzzy computed answers.

A goal is rewritten by three kinds of steps:

* successful step (SS): the selected atom weakly unifies with a renamed
  program rule head at degree d > bottom; the atom is replaced by the rule
  body conjoined with d (the conjunction is the program's t-norm; when
  d = top the wrapper is omitted) and the unifier is composed into the
  answer substitution,
* failure step (FS): no rule head weakly unifies with the selected atom, so
  the atom is replaced by bottom,
* interpretive step (IS): every connective application whose arguments are
  all truth literals is replaced by its value.  Reducing all such innermost
  redexes at once is what matches displayed derivations, where e.g.
  ``@aver(&godel(0.9, 0.6), @very(&godel(0.7, 0.4)))`` steps to
  ``@aver(0.6, @very(0.4))`` in one move.

Atom selection is leftmost (depth-first, left to right).  Trees expand SS/FS
while any atom remains, then IS chains down to a truth-literal leaf; SS
children of a node are ordered by program rule id, so identical inputs
always produce identical trees.  Leaves carrying a truth literal yield the
fuzzy computed answers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .errors import EvalError
from .lattice import Lattice
from .similarity import SimilarityRelation
from .terms import (
    Atom,
    ConnApp,
    ConnectiveRef,
    Expression,
    FreshCounter,
    Rule,
    Substitution,
    TruthLit,
    Value,
    rename_apart,
    variables,
)
from .unification import WmguResult, weak_unify

DEFAULT_MAX_DEPTH = 30


@dataclass(frozen=True)
class Program:
    """Rules plus the lattice and closed similarity relation they run under."""

    rules: tuple
    lattice: Lattice
    relation: SimilarityRelation

    @property
    def tnorm(self) -> str:
        return self.relation.tnorm


@dataclass(frozen=True)
class GoalState:
    goal: Expression
    sigma: Substitution

    def __str__(self) -> str:
        return f"⟨{self.goal}, {self.sigma}⟩"


@dataclass(frozen=True)
class SS:
    """Successful step via the rule with this id, at this wmgu degree."""

    rule_id: int
    degree: Value


@dataclass(frozen=True)
class FS:
    """Failure step: no rule head is close enough to the selected atom."""


@dataclass(frozen=True)
class IS:
    """Interpretive step; labels of the connectives that were evaluated."""

    labels: tuple = ()


StepLabel = object  # SS | FS | IS


@dataclass
class TreeNode:
    goal: Expression
    sigma: Substitution
    label: Optional[StepLabel]  # edge from the parent; None at the root
    depth: int
    children: list = field(default_factory=list)
    error: Optional[str] = None

    @property
    def state(self) -> GoalState:
        return GoalState(self.goal, self.sigma)


@dataclass
class DerivationTree:
    root: TreeNode
    goal_vars: tuple
    max_depth: int


@dataclass(frozen=True)
class FuzzyComputedAnswer:
    """A leaf truth value paired with the goal-variable bindings."""

    value: Value
    answer: Substitution

    def __str__(self) -> str:
        from .terms import format_value

        return f"⟨{format_value(self.value)}, {self.answer}⟩"


# -- selection and replacement ------------------------------------------------


def select_atom(q: Expression) -> Optional[tuple]:
    """Path of the leftmost atom in a depth-first traversal, or None."""
    if isinstance(q, Atom):
        return ()
    if isinstance(q, ConnApp):
        for i, a in enumerate(q.args):
            path = select_atom(a)
            if path is not None:
                return (i,) + path
    return None


def subexpr(q: Expression, path: tuple) -> Expression:
    for i in path:
        q = q.args[i]
    return q


def replace_subexpr(q: Expression, path: tuple, new: Expression) -> Expression:
    if not path:
        return new
    i, rest = path[0], path[1:]
    args = list(q.args)
    args[i] = replace_subexpr(args[i], rest, new)
    return ConnApp(q.conn, tuple(args))


# -- the three step kinds -----------------------------------------------------

Unifier = Callable[[Atom, Atom, SimilarityRelation], Optional[WmguResult]]


def ss_step(
    state: GoalState,
    rule: Rule,
    prog: Program,
    counter: Optional[FreshCounter] = None,
    unify: Optional[Unifier] = None,
) -> Optional[tuple]:
    """Resolve the selected atom against one rule.

    Returns ``(next_state, degree)`` or None when the rule does not apply.
    The rule is renamed apart with ``counter`` before unification, and the
    unifier runs head-against-atom so that renamed head variables bind to
    goal terms, which is what makes displayed bindings like {X1/X} come out.
    """
    path = select_atom(state.goal)
    if path is None:
        return None
    atom = subexpr(state.goal, path)
    lat = prog.lattice
    if unify is None:
        # root symbols unrelated: rule 6 would fail immediately, so skip the
        # rename and keep fresh-name indices for rules that can match
        if prog.relation.query(rule.head.predicate, atom.predicate) == lat.bot:
            return None
    fresh = rename_apart(rule, counter or FreshCounter(variables(state.goal)))
    result = (unify or weak_unify)(fresh.head, atom, prog.relation)
    if result is None:
        return None
    if result.degree == lat.top:
        replacement: Expression = fresh.body
    else:
        replacement = ConnApp(
            ConnectiveRef("and", prog.tnorm),
            (fresh.body, TruthLit(result.degree)),
        )
    new_goal = result.theta.apply(replace_subexpr(state.goal, path, replacement))
    return GoalState(new_goal, state.sigma.compose(result.theta)), result.degree


def fs_step(
    state: GoalState, prog: Program, unify: Optional[Unifier] = None
) -> Optional[GoalState]:
    """Replace the selected atom by bottom when no rule applies, else None."""
    path = select_atom(state.goal)
    if path is None:
        return None
    counter = FreshCounter(variables(state.goal))
    for rule in prog.rules:
        if ss_step(state, rule, prog, counter, unify) is not None:
            return None
    new_goal = replace_subexpr(state.goal, path, TruthLit(prog.lattice.bot))
    return GoalState(new_goal, state.sigma)


def is_step(state: GoalState, lattice: Lattice) -> Optional[tuple]:
    """Evaluate every connective application whose arguments are all literals.

    Returns ``(next_state, labels)`` or None when nothing is evaluable.
    Connective resolution failures propagate as EvalError.
    """
    labels: list = []

    def reduce(e: Expression) -> Expression:
        if isinstance(e, ConnApp):
            if e.args and all(isinstance(a, TruthLit) for a in e.args):
                value = lattice.eval(e.conn, [a.value for a in e.args])
                labels.append(e.conn.label)
                return TruthLit(value)
            return ConnApp(e.conn, tuple(reduce(a) for a in e.args))
        return e

    new_goal = reduce(state.goal)
    if not labels:
        return None
    return GoalState(new_goal, state.sigma), tuple(labels)


# -- tree construction ----------------------------------------------------------


def _children(
    state: GoalState,
    prog: Program,
    counter: FreshCounter,
    unify: Optional[Unifier],
):
    """Labelled successor states of a node, or an EvalError."""
    path = select_atom(state.goal)
    if path is not None:
        out = []
        for rule in prog.rules:
            res = ss_step(state, rule, prog, counter, unify)
            if res is not None:
                nxt, degree = res
                out.append((SS(rule.id, degree), nxt))
        if not out:
            fail_goal = replace_subexpr(state.goal, path, TruthLit(prog.lattice.bot))
            out.append((FS(), GoalState(fail_goal, state.sigma)))
        return out
    try:
        res = is_step(state, prog.lattice)
    except EvalError as e:
        return e
    if res is None:
        return []
    nxt, labels = res
    return [(IS(labels), nxt)]


def build_tree(
    prog: Program,
    goal: Expression,
    max_depth: int = DEFAULT_MAX_DEPTH,
    unify: Optional[Unifier] = None,
) -> DerivationTree:
    """Exhaustive derivation tree for a goal, down to a depth bound.

    The root holds the goal with the identity substitution.  Runtime
    connective failures are recorded on the offending node and prune that
    branch only.  ``unify`` swaps the unification procedure (used to compare
    against classical unification); the default is weak unification.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    counter = FreshCounter(variables(goal))
    root = TreeNode(goal, Substitution.identity(), None, 0)

    def expand(node: TreeNode):
        if node.depth >= max_depth:
            return
        result = _children(node.state, prog, counter, unify)
        if isinstance(result, EvalError):
            node.error = str(result)
            return
        for label, nxt in result:
            child = TreeNode(nxt.goal, nxt.sigma, label, node.depth + 1)
            node.children.append(child)
            expand(child)

    expand(root)
    return DerivationTree(root, tuple(variables(goal)), max_depth)


def fcas(tree: DerivationTree, goal_vars=None) -> list:
    """Fuzzy computed answers of a tree, in left-to-right leaf order.

    Every truth-literal leaf contributes, bottom-valued ones included; the
    substitution is restricted to the goal variables.
    """
    names = tuple(goal_vars) if goal_vars is not None else tree.goal_vars
    out: list = []

    def walk(node: TreeNode):
        if node.children:
            for c in node.children:
                walk(c)
        elif isinstance(node.goal, TruthLit) and node.error is None:
            out.append(FuzzyComputedAnswer(node.goal.value, node.sigma.restrict(names)))

    walk(tree.root)
    return out


def iter_answers(
    prog: Program,
    goal: Expression,
    max_depth: int = DEFAULT_MAX_DEPTH,
    unify: Optional[Unifier] = None,
) -> Iterator[FuzzyComputedAnswer]:
    """Stream answers depth-first without materialising the tree.

    Yields exactly what ``fcas(build_tree(...))`` returns, in the same order.
    """
    names = tuple(variables(goal))
    counter = FreshCounter(names)

    def walk(state: GoalState, depth: int) -> Iterator[FuzzyComputedAnswer]:
        if depth >= max_depth:
            if isinstance(state.goal, TruthLit):
                yield FuzzyComputedAnswer(state.goal.value, state.sigma.restrict(names))
            return
        result = _children(state, prog, counter, unify)
        if isinstance(result, EvalError):
            return
        if not result:
            if isinstance(state.goal, TruthLit):
                yield FuzzyComputedAnswer(state.goal.value, state.sigma.restrict(names))
            return
        for _, nxt in result:
            yield from walk(nxt, depth + 1)

    yield from walk(GoalState(goal, Substitution.identity()), 0)


def tree_errors(tree: DerivationTree) -> list:
    """Error messages recorded on nodes, in tree order."""
    out: list = []

    def walk(node: TreeNode):
        if node.error is not None:
            out.append(node.error)
        for c in node.children:
            walk(c)

    walk(tree.root)
    return out
