"""From weak to genuine equivariant Groebner bases, and membership.

Saturation alone yields only a weak basis: Example-7-style gaps remain
because a reducer may drag in atoms outside the target's domain.  Running
the saturation over a doubled universe, where every finite choice of
variables has been recoloured into a lower copy, and erasing the colours
afterwards closes exactly that gap: the result is an equivariant Groebner
basis, so membership is decided by domain-respecting reduction.
"""

from __future__ import annotations

from .orbitset import OrbitSet
from .poly import Monomial, Polynomial, lm, lc
from .saturation import (Decomposition, SaturationBudgetError, weakgb)
from .structures import Doubled, InputError, EqualityAtoms, shared_embeddings


def _map_atoms(p: Polynomial, f, target) -> Polynomial:
    """Rebuild p over another structure through an injective atom map."""
    return Polynomial.from_dict(
        target,
        {Monomial.from_dict({f(a): e for a, e in m.pairs}): c for m, c in p.terms})


def col(p: Polynomial, V, target: Doubled) -> Polynomial:
    """Recolour: atoms in V into the first (lower) copy, the rest into the
    second."""
    V = set(V)
    return _map_atoms(p, lambda a: target.atom(1 if a in V else 2, a), target)


def freecol(H: OrbitSet) -> OrbitSet:
    """All recolourings of the representatives over subsets of their own
    domains; outputs are colour-consistent (one tag per base atom)."""
    target = Doubled(H.structure)
    out = []
    for h in H.reps:
        d = h.dom_tuple()
        for mask in range(1 << len(d)):
            V = {d[i] for i in range(len(d)) if mask >> i & 1}
            out.append(col(h, V, target))
    return OrbitSet.from_polys(target, out)


def forget(B: OrbitSet) -> OrbitSet:
    """Erase copy tags (a ring morphism); exponents of the two copies of an
    atom merge, and colliding terms may cancel."""
    if not isinstance(B.structure, Doubled):
        raise InputError("forget expects a doubled structure")
    base = B.structure.base
    out = []
    for p in B.reps:
        acc = {}
        for m, c in p.terms:
            exps = {}
            for a, e in m.pairs:
                x = a.value[1]
                exps[x] = exps.get(x, 0) + e
            n = Monomial.from_dict(exps)
            acc[n] = acc.get(n, 0) + c
        out.append(Polynomial.from_dict(base, acc))
    return OrbitSet.from_polys(base, out)


def egb(H: OrbitSet, max_rounds: int = 64, trace=None,
        single_remainder: bool = False) -> OrbitSet:
    """An equivariant Groebner basis of the ideal generated by H."""
    if isinstance(H.structure, EqualityAtoms):
        raise InputError("equality-atom ideals are handled through the base world")
    try:
        B = weakgb(freecol(H), max_rounds, trace, single_remainder)
    except SaturationBudgetError as err:
        raise SaturationBudgetError(forget(err.partial), err.rounds) from None
    return forget(B)


def _candidates(B: OrbitSet, p: Polynomial, target):
    """Reduction steps whose embeddings land inside ``target`` and whose
    moved leading monomial divides LM(p); deterministic order."""
    lmp, lcp = p.terms[0]
    for q in B.reps:
        lmq, lcq = q.terms[0]
        for emb in shared_embeddings(B.structure, q.dom_tuple(), target):
            moved = lmq.rename(emb)
            if moved.divides(lmp):
                yield q, emb, lmp.divide(moved), lcp / lcq


def reduce_to_zero(B: OrbitSet, p: Polynomial, pool=None):
    """Greedy domain-respecting reduction of p by B.  Returns the found
    decomposition, or None if a nonzero normal form is reached.

    With ``pool`` unset every step embeds into the current domain (the
    membership discipline); with a fixed atom pool the search may use any
    pool atoms, which is the weak-basis witness discipline."""
    summands = []
    cur = p
    while not cur.is_zero:
        target = cur.dom() if pool is None else pool
        step = next(iter(_candidates(B, cur, target)), None)
        if step is None:
            return None
        q, emb, cof, coeff = step
        summands.append((coeff, cof, q,
                         tuple(sorted(emb.items(), key=lambda kv: kv[0].key))))
        cur = cur - q.act(emb).mul_monomial(cof, coeff)
    return Decomposition(p.structure, tuple(summands))


def member(B: OrbitSet, p: Polynomial, certificate: bool = False):
    """Decide membership of p in the ideal represented by the equivariant
    Groebner basis B; optionally return the reduction certificate."""
    if p.structure != B.structure:
        raise InputError("query over a different structure")
    cert = reduce_to_zero(B, p)
    if certificate:
        return cert is not None, cert
    return cert is not None
