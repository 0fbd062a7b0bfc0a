"""Independent reference implementations used as test oracles.

Nothing in here calls the weak unifier, the closure algorithm or the engine
paths it is checking against: the classical unifier is a plain Robinson
implementation, the relation closure is max-min matrix self-composition in
numpy, and the ground degree is a direct recursive fold.
"""

from itertools import product

import numpy as np

from fuzzylp import Atom, Compound, Substitution, Symbol, Var


# -- classical syntactic unification ------------------------------------------


def _walk(t, bindings):
    while isinstance(t, Var) and t.name in bindings:
        t = bindings[t.name]
    return t


def _occurs(name, t, bindings):
    t = _walk(t, bindings)
    if isinstance(t, Var):
        return t.name == name
    if isinstance(t, (Compound, Atom)):
        return any(_occurs(name, a, bindings) for a in t.args)
    return False


def classical_unify(e1, e2):
    """Robinson unification of terms/atoms; an mgu Substitution or None."""
    bindings = {}

    def unify(a, b):
        a, b = _walk(a, bindings), _walk(b, bindings)
        if isinstance(a, Var) and isinstance(b, Var) and a.name == b.name:
            return True
        if isinstance(a, Var):
            if _occurs(a.name, b, bindings):
                return False
            bindings[a.name] = b
            return True
        if isinstance(b, Var):
            return unify(b, a)
        fa = a.symbol if isinstance(a, Compound) else a.predicate
        fb = b.symbol if isinstance(b, Compound) else b.predicate
        if fa != fb or type(a) is not type(b):
            return False
        return all(unify(x, y) for x, y in zip(a.args, b.args))

    if not unify(e1, e2):
        return None

    def resolve(t):
        t = _walk(t, bindings)
        if isinstance(t, Compound):
            return Compound(t.symbol, tuple(resolve(a) for a in t.args))
        if isinstance(t, Atom):
            return Atom(t.predicate, tuple(resolve(a) for a in t.args))
        return t

    return Substitution({name: resolve(Var(name)) for name in bindings})


def is_variant(t1, t2):
    """Whether two terms are equal up to a variable renaming bijection."""
    fwd, bwd = {}, {}

    def walk(a, b):
        if isinstance(a, Var) and isinstance(b, Var):
            if fwd.setdefault(a.name, b.name) != b.name:
                return False
            if bwd.setdefault(b.name, a.name) != a.name:
                return False
            return True
        if isinstance(a, Compound) and isinstance(b, Compound):
            return a.symbol == b.symbol and all(walk(x, y) for x, y in zip(a.args, b.args))
        if isinstance(a, Atom) and isinstance(b, Atom):
            return a.predicate == b.predicate and all(
                walk(x, y) for x, y in zip(a.args, b.args)
            )
        return False

    return walk(t1, t2)


# -- max-min closure oracle ------------------------------------------------------


def maxmin_closure(matrix):
    """Fixpoint of R := max(R, R o R) with o = max-min composition.

    ``matrix`` is a square numpy array holding a reflexive symmetric
    relation; returns the transitive closure.
    """
    r = np.array(matrix, dtype=float)
    while True:
        composed = np.max(np.minimum(r[:, :, None], r[None, :, :]), axis=1)
        merged = np.maximum(r, composed)
        if np.array_equal(merged, r):
            return r
        r = merged


# -- ground approximation degree --------------------------------------------------


def ground_degree(entries, t1, t2, top=1.0, bot=0.0, conj=min):
    """Direct recursive fold for the degree of two ground terms."""
    f = t1.symbol if isinstance(t1, Compound) else t1.predicate
    g = t2.symbol if isinstance(t2, Compound) else t2.predicate
    if f.arity != g.arity:
        return bot
    d = top if f == g else entries.get((f, g), bot)
    if d == bot:
        return bot
    for a, b in zip(t1.args, t2.args):
        d = conj(d, ground_degree(entries, a, b, top, bot, conj))
        if d == bot:
            return bot
    return d


# -- term generation -----------------------------------------------------------


def ground_terms(constants, functions, depth):
    """All ground terms over the signature up to the given depth.

    ``constants`` is a list of names; ``functions`` a list of (name, arity).
    """
    level = [Compound(Symbol(c, 0)) for c in constants]
    out = list(level)
    for _ in range(depth):
        below = list(out)
        new = []
        for name, arity in functions:
            for args in product(below, repeat=arity):
                new.append(Compound(Symbol(name, arity), args))
        out = list(dict.fromkeys(out + new))
    return out
