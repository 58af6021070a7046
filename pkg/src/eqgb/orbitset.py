"""Orbit-finite equivariant sets of polynomials.

An OrbitSet denotes the union of the group orbits of its representatives.
Representatives are kept canonical (monic, domain renamed onto the
canonical tuple), pairwise distinct, and sorted by their printed form, so
equal sets have identical representations.
"""

from __future__ import annotations

from .poly import Polynomial, poly_canonical, render_poly
from .structures import InputError, merge_reps


class OrbitSet:
    __slots__ = ("structure", "reps")

    def __init__(self, structure, reps):
        object.__setattr__(self, "structure", structure)
        object.__setattr__(self, "reps", tuple(reps))

    def __setattr__(self, name, val):
        raise AttributeError("orbit sets are immutable")

    @classmethod
    def empty(cls, structure) -> "OrbitSet":
        return cls(structure, ())

    @classmethod
    def from_polys(cls, structure, polys) -> "OrbitSet":
        """Canonicalise, drop zeros, dedupe, sort."""
        seen = {}
        for p in polys:
            if p.structure != structure:
                raise InputError("polynomial over a different structure")
            if p.is_zero:
                continue
            c = poly_canonical(p)
            seen[c.terms] = c
        reps = sorted(seen.values(), key=render_poly)
        return cls(structure, reps)

    def __eq__(self, other):
        return (isinstance(other, OrbitSet) and self.structure == other.structure
                and self.reps == other.reps)

    def __hash__(self):
        return hash((self.structure, self.reps))

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)

    def __repr__(self):
        body = "\n".join("  " + render_poly(r) for r in self.reps)
        return "{\n" + body + "\n}" if self.reps else "{}"

    def contains(self, p: Polynomial) -> bool:
        if p.structure != self.structure:
            raise InputError("polynomial over a different structure")
        if p.is_zero:
            return False
        c = poly_canonical(p)
        return any(c == r for r in self.reps)

    def insert(self, p: Polynomial):
        """Add the orbit of p; returns (set, changed)."""
        if p.is_zero or self.contains(p):
            return self, False
        return OrbitSet.from_polys(self.structure, self.reps + (p,)), True

    def union(self, other: "OrbitSet") -> "OrbitSet":
        if self.structure != other.structure:
            raise InputError("orbit sets over different structures")
        return OrbitSet.from_polys(self.structure, self.reps + other.reps)

    def issubset(self, other: "OrbitSet") -> bool:
        theirs = {r.terms for r in other.reps}
        return all(r.terms in theirs for r in self.reps)

    def map_equivariant(self, f, structure=None) -> "OrbitSet":
        """Image under an equivariant polynomial map (may be list-valued);
        the target structure defaults to this set's."""
        target = self.structure if structure is None else structure
        out = []
        for r in self.reps:
            img = f(r)
            if isinstance(img, Polynomial):
                out.append(img)
            else:
                out.extend(img)
        return OrbitSet.from_polys(target, out)


def pairs(S: OrbitSet, T: OrbitSet) -> list:
    """One concrete pair per orbit of S x T under the diagonal action."""
    if S.structure != T.structure:
        raise InputError("orbit sets over different structures")
    s = S.structure
    out = []
    for p in S.reps:
        dp = p.dom_tuple()
        for q in T.reps:
            dq = q.dom_tuple()
            for (c1, img) in merge_reps(s, dp, dq):
                assert c1 == dp, "representatives carry canonical domains"
                out.append((p, q.act(dict(zip(dq, img)))))
    return out
