"""Equivariant ideals with decidable membership, inclusion and algebra.

An ideal is normalised at construction: the stored basis is a full
equivariant Groebner basis computed in the base world.  Equality-atom
ideals are transferred to the ordered base world by expanding every
generator over all order patterns of its own atoms; membership, handled
in the base world, is then correct for the bigger group.
"""

from __future__ import annotations

from .basis import _map_atoms, egb, member, reduce_to_zero
from .orbitset import OrbitSet, pairs
from .poly import Polynomial
from .structures import (EqualityAtoms, FiniteOrd, InputError, Sum,
                         reduct_expand)


def _reinterpret(p: Polynomial, structure) -> Polynomial:
    """The same polynomial viewed over a structure with the same universe."""
    return Polynomial(structure, p.terms)


def _expand_equality_generator(s: EqualityAtoms, p: Polynomial):
    """Base-world generators covering the full symmetric-group orbit of p:
    one translate per order pattern of dom(p)."""
    base = s.base
    d = p.dom_tuple()
    q = _reinterpret(p, base)
    return [q.act(dict(zip(d, t))) for t in reduct_expand(s, d)]


class EquivariantIdeal:
    __slots__ = ("structure", "base_structure", "generators",
                 "base_generators", "basis")

    def __init__(self, structure, generators: OrbitSet,
                 base_generators: OrbitSet, basis: OrbitSet):
        object.__setattr__(self, "structure", structure)
        object.__setattr__(self, "base_structure", basis.structure)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "base_generators", base_generators)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, val):
        raise AttributeError("ideals are immutable")

    def to_base(self, p: Polynomial) -> Polynomial:
        if p.structure == self.structure:
            return _reinterpret(p, self.base_structure)
        if p.structure == self.base_structure:
            return p
        raise InputError("query over a different structure")


def ideal_from_generators(s, gens, max_rounds: int = 64,
                          trace=None) -> EquivariantIdeal:
    """Build the ideal generated by the orbits of ``gens``, normalising to
    an equivariant Groebner basis."""
    gens = [g for g in gens if not g.is_zero]
    generators = OrbitSet.from_polys(s, gens)
    if isinstance(s, EqualityAtoms):
        expanded = []
        for g in generators.reps:
            expanded.extend(_expand_equality_generator(s, g))
        base_gens = OrbitSet.from_polys(s.base, expanded)
    else:
        base_gens = generators
    basis = egb(base_gens, max_rounds, trace)
    ideal = EquivariantIdeal(s, generators, base_gens, basis)
    for g in base_gens.reps:
        assert member(basis, g), "generators must lie in the computed ideal"
    return ideal


def _from_base_generators(surface, base_gens: OrbitSet, max_rounds: int = 64):
    basis = egb(base_gens, max_rounds)
    if isinstance(surface, EqualityAtoms):
        generators = OrbitSet.from_polys(
            surface, [_reinterpret(g, surface) for g in base_gens.reps])
    else:
        generators = base_gens
    return EquivariantIdeal(surface, generators, base_gens, basis)


def ideal_member(I: EquivariantIdeal, p: Polynomial,
                 certificate: bool = False):
    return member(I.basis, I.to_base(p), certificate)


def ideal_includes(I: EquivariantIdeal, J: EquivariantIdeal) -> bool:
    """Whether J is contained in I."""
    if I.structure != J.structure:
        raise InputError("ideals over different structures")
    return all(member(I.basis, q) for q in J.basis.reps)


def ideal_equal(I: EquivariantIdeal, J: EquivariantIdeal) -> bool:
    return ideal_includes(I, J) and ideal_includes(J, I)


def ideal_sum(I: EquivariantIdeal, J: EquivariantIdeal,
              max_rounds: int = 64) -> EquivariantIdeal:
    if I.structure != J.structure:
        raise InputError("ideals over different structures")
    return _from_base_generators(
        I.structure, I.base_generators.union(J.base_generators), max_rounds)


def ideal_product(I: EquivariantIdeal, J: EquivariantIdeal,
                  max_rounds: int = 64) -> EquivariantIdeal:
    if I.structure != J.structure:
        raise InputError("ideals over different structures")
    prods = [g * h for (g, h) in pairs(I.basis, J.basis)]
    return _from_base_generators(
        I.structure, OrbitSet.from_polys(I.base_structure, prods), max_rounds)


_ELIM_SYMBOL = "t"


def ideal_intersect(I: EquivariantIdeal, J: EquivariantIdeal,
                    max_rounds: int = 64) -> EquivariantIdeal:
    """Classical elimination adapted to the equivariant case: a fresh
    indeterminate above every atom, generators t*h_i and (1-t)*h_j, then
    keep the basis elements that avoid t."""
    if I.structure != J.structure:
        raise InputError("ideals over different structures")
    base = I.base_structure
    ext = Sum(base, FiniteOrd((_ELIM_SYMBOL,)))
    t_atom = ext.atom_right(FiniteOrd((_ELIM_SYMBOL,)).atom(_ELIM_SYMBOL))
    t_poly = Polynomial.atom(ext, t_atom)
    one = Polynomial.constant(ext, 1)

    def lift(p: Polynomial) -> Polynomial:
        return _map_atoms(p, ext.atom_left, ext)

    gens = [t_poly * lift(h) for h in I.basis.reps]
    gens += [(one - t_poly) * lift(h) for h in J.basis.reps]
    B = egb(OrbitSet.from_polys(ext, gens), max_rounds)
    kept = []
    for h in B.reps:
        if t_atom not in h.dom():
            kept.append(_map_atoms(h, lambda a: a.value[1], base))
    # the kept representatives already form an equivariant Groebner basis
    # of the intersection (domain-respecting reductions never reach t)
    base_set = OrbitSet.from_polys(base, kept)
    if isinstance(I.structure, EqualityAtoms):
        generators = OrbitSet.from_polys(
            I.structure, [_reinterpret(g, I.structure) for g in kept])
    else:
        generators = base_set
    result = EquivariantIdeal(I.structure, generators, base_set, base_set)
    for g in base_set.reps:
        assert reduce_to_zero(result.basis, g) is not None
    return result
