"""Exact multivariate polynomials whose indeterminates are atoms.

Coefficients are arbitrary-precision rationals.  Monomials order their
atoms descending, so the reverse lexicographic comparison (largest atom
decides) is a single merge walk, and a polynomial stores its terms in
descending revlex order, which makes leading data O(1).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from typing import NamedTuple

from .structures import (Atom, EqualityAtoms, InputError, LT, EQ, GT,
                         canonical_tuple, embeddings, render_atom)


class Monomial:
    """A finite map from atoms to positive exponents; () is the unit."""

    __slots__ = ("pairs", "_hash")

    def __init__(self, pairs):
        object.__setattr__(self, "pairs", tuple(pairs))
        object.__setattr__(self, "_hash", hash(self.pairs))
        if any(e <= 0 for _, e in self.pairs):
            raise InputError("monomial exponents must be positive")

    def __setattr__(self, name, val):
        raise AttributeError("monomials are immutable")

    @classmethod
    def unit(cls):
        return cls(())

    @classmethod
    def atom(cls, a: Atom, e: int = 1):
        return cls(((a, e),))

    @classmethod
    def from_dict(cls, exps):
        return cls(sorted(((a, e) for a, e in exps.items() if e != 0),
                          key=lambda p: p[0].key, reverse=True))

    def __eq__(self, other):
        return self is other or (isinstance(other, Monomial)
                                 and self.pairs == other.pairs)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.pairs:
            return "1"
        return "*".join(f"{render_atom(a)}^{e}" if e > 1 else render_atom(a)
                        for a, e in reversed(self.pairs))

    @property
    def is_unit(self):
        return not self.pairs

    @property
    def degree(self):
        return sum(e for _, e in self.pairs)

    def atoms(self):
        """Domain as a set of atoms."""
        return {a for a, _ in self.pairs}

    def exponent(self, a: Atom) -> int:
        for b, e in self.pairs:
            if b == a:
                return e
        return 0

    def key(self):
        return tuple((a.key, e) for a, e in self.pairs)

    def mul(self, other: "Monomial") -> "Monomial":
        d = {a: e for a, e in self.pairs}
        for a, e in other.pairs:
            d[a] = d.get(a, 0) + e
        return Monomial.from_dict(d)

    def divides(self, other: "Monomial") -> bool:
        return all(e <= other.exponent(a) for a, e in self.pairs)

    def divide(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other; other must divide self."""
        d = {a: e for a, e in self.pairs}
        for a, e in other.pairs:
            d[a] = d.get(a, 0) - e
            if d[a] < 0:
                raise InputError("not divisible")
        return Monomial.from_dict(d)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = {a: e for a, e in self.pairs}
        for a, e in other.pairs:
            d[a] = max(d.get(a, 0), e)
        return Monomial.from_dict(d)

    def rename(self, emb) -> "Monomial":
        out = {}
        for a, e in self.pairs:
            b = emb.get(a)
            if b is None:
                raise InputError(f"renaming undefined on atom {a!r}")
            out[b] = e
        return Monomial.from_dict(out)


def divides(m: Monomial, n: Monomial) -> bool:
    return m.divides(n)


def lcm(m: Monomial, n: Monomial) -> Monomial:
    return m.lcm(n)


def revlex_compare(m: Monomial, n: Monomial) -> int:
    """-1/0/1 under the reverse lexicographic order: of the two exponent
    rows the one that is larger at the largest atom where they differ wins."""
    pm, pn = m.pairs, n.pairs
    i = j = 0
    while i < len(pm) or j < len(pn):
        am = pm[i][0] if i < len(pm) else None
        an = pn[j][0] if j < len(pn) else None
        if an is None or (am is not None and am > an):
            return GT
        if am is None or an > am:
            return LT
        em, en = pm[i][1], pn[j][1]
        if em != en:
            return GT if em > en else LT
        i += 1
        j += 1
    return EQ


_term_key = cmp_to_key(lambda s, t: revlex_compare(s[0], t[0]))


class LeadingData(NamedTuple):
    lm: Monomial
    lc: Fraction
    lt: tuple
    cm: Monomial


class Polynomial:
    """Terms in descending revlex order, no zero coefficients stored."""

    __slots__ = ("structure", "terms", "_canon", "_dom", "_domt")

    def __init__(self, structure, terms):
        object.__setattr__(self, "structure", structure)
        object.__setattr__(self, "terms", tuple(terms))
        object.__setattr__(self, "_canon", None)
        object.__setattr__(self, "_dom", None)
        object.__setattr__(self, "_domt", None)

    def __setattr__(self, name, val):
        raise AttributeError("polynomials are immutable")

    @classmethod
    def from_dict(cls, structure, coeffs) -> "Polynomial":
        terms = [(m, Fraction(c)) for m, c in coeffs.items() if c != 0]
        terms.sort(key=_term_key, reverse=True)
        return cls(structure, terms)

    @classmethod
    def zero(cls, structure) -> "Polynomial":
        return cls(structure, ())

    @classmethod
    def constant(cls, structure, c) -> "Polynomial":
        return cls.from_dict(structure, {Monomial.unit(): Fraction(c)})

    @classmethod
    def atom(cls, structure, a: Atom) -> "Polynomial":
        return cls.from_dict(structure, {Monomial.atom(a): Fraction(1)})

    @classmethod
    def monomial(cls, structure, m: Monomial, c=1) -> "Polynomial":
        return cls.from_dict(structure, {m: Fraction(c)})

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.structure == other.structure
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.structure, self.terms))

    def __repr__(self):
        return render_poly(self)

    @property
    def is_zero(self):
        return not self.terms

    def dom(self):
        if self._dom is None:
            out = set()
            for m, _ in self.terms:
                out.update(m.atoms())
            object.__setattr__(self, "_dom", frozenset(out))
        return self._dom

    def dom_tuple(self):
        if self._domt is None:
            object.__setattr__(self, "_domt", tuple(sorted(self.dom())))
        return self._domt

    def coefficient(self, m: Monomial) -> Fraction:
        for n, c in self.terms:
            if n == m:
                return c
        return Fraction(0)

    def _check_same(self, other):
        if self.structure != other.structure:
            raise InputError("polynomials over different structures")

    def __add__(self, other):
        self._check_same(other)
        d = {m: c for m, c in self.terms}
        for m, c in other.terms:
            d[m] = d.get(m, Fraction(0)) + c
        return Polynomial.from_dict(self.structure, d)

    def __neg__(self):
        return Polynomial(self.structure, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero(self.structure)
        return Polynomial(self.structure, tuple((m, c * k) for m, k in self.terms))

    def mul_monomial(self, m: Monomial, c=1) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero(self.structure)
        terms = [(n.mul(m), c * k) for n, k in self.terms]
        terms.sort(key=_term_key, reverse=True)
        return Polynomial(self.structure, terms)

    def __mul__(self, other):
        self._check_same(other)
        d = {}
        for m, c in self.terms:
            for n, k in other.terms:
                mn = m.mul(n)
                d[mn] = d.get(mn, Fraction(0)) + c * k
        return Polynomial.from_dict(self.structure, d)

    def substitute(self, assignment) -> "Polynomial":
        """Replace every atom by a polynomial; the assignment must cover
        the whole domain."""
        missing = self.dom() - set(assignment)
        if missing:
            raise InputError(f"substitution undefined on {sorted(missing)!r}")
        acc = Polynomial.zero(self.structure)
        for m, c in self.terms:
            prod = Polynomial.constant(self.structure, c)
            for a, e in m.pairs:
                for _ in range(e):
                    prod = prod * assignment[a]
            acc = acc + prod
        return acc

    def act(self, emb) -> "Polynomial":
        """Rename atoms through a finite restriction of a group element."""
        terms = [(m.rename(emb), c) for m, c in self.terms]
        terms.sort(key=_term_key, reverse=True)
        return Polynomial(self.structure, terms)

    def evaluate(self, assignment) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms:
            v = c
            for a, e in m.pairs:
                if a not in assignment:
                    raise InputError(f"evaluation undefined on {a!r}")
                v *= Fraction(assignment[a]) ** e
            total += v
        return total

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lc = self.terms[0][1]
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def sort_key(self):
        return tuple((m.key(), c) for m, c in self.terms)


def leading_data(p: Polynomial) -> LeadingData:
    """Leading monomial/coefficient/term and the characteristic monomial
    (leading monomial times the other atoms appearing in p)."""
    if p.is_zero:
        raise InputError("the zero polynomial has no leading monomial")
    lm, lc = p.terms[0]
    extra = {a: 1 for a in p.dom() if lm.exponent(a) == 0}
    cm = lm.mul(Monomial.from_dict(extra))
    return LeadingData(lm, lc, (lm, lc), cm)


def lm(p: Polynomial) -> Monomial:
    if p.is_zero:
        raise InputError("the zero polynomial has no leading monomial")
    return p.terms[0][0]


def lc(p: Polynomial) -> Fraction:
    if p.is_zero:
        raise InputError("the zero polynomial has no leading coefficient")
    return p.terms[0][1]


def divides_upto_G(s, m: Monomial, n: Monomial) -> bool:
    """Whether m divides some group translate of n (equivalently: some
    embedding of dom(m) into dom(n) dominates m's exponents)."""
    if isinstance(s, EqualityAtoms):
        raise InputError("divisibility up to the group runs in the base world")
    src = tuple(sorted(m.atoms()))
    tgt = n.atoms()
    for emb in embeddings(s, src, tgt):
        if all(e <= n.exponent(emb[a]) for a, e in m.pairs):
            return True
    return False


def rename_canonical(p: Polynomial):
    """Rename dom(p) onto its canonical orbit representative.  Returns the
    renamed polynomial and the renaming used."""
    d = p.dom_tuple()
    c = canonical_tuple(p.structure, d)
    emb = dict(zip(d, c))
    return p.act(emb), emb


def poly_canonical(p: Polynomial) -> Polynomial:
    """Canonical orbit representative, monic.  Constant on orbits; for
    structures whose group ignores part of the order (equality atoms) the
    minimum over all renamings onto the canonical domain is taken."""
    if p._canon is not None:
        return p._canon
    if p.is_zero:
        return p
    s = p.structure
    d = p.dom_tuple()
    c = canonical_tuple(s, d)
    if isinstance(s, EqualityAtoms):
        cand = [p.act(e).monic() for e in embeddings(s, d, set(c))]
        result = min(cand, key=Polynomial.sort_key)
    else:
        result = p.act(dict(zip(d, c))).monic()
    object.__setattr__(p, "_canon", result)
    object.__setattr__(result, "_canon", result)
    return result


def poly_orbit_equal(p: Polynomial, q: Polynomial) -> bool:
    """Whether some group element maps p to q exactly (coefficients
    included)."""
    p._check_same(q)
    if p.is_zero or q.is_zero:
        return p.is_zero and q.is_zero
    s = p.structure
    dp, dq = p.dom_tuple(), q.dom_tuple()
    if len(dp) != len(dq):
        return False
    if isinstance(s, EqualityAtoms):
        return any(p.act(e) == q for e in embeddings(s, dp, set(dq)))
    cp, _ = rename_canonical(p)
    cq, _ = rename_canonical(q)
    return cp == cq


def render_poly(p: Polynomial) -> str:
    """Canonical text: terms descending by revlex, atoms ascending inside a
    term, explicit coefficients except the unit."""
    if p.is_zero:
        return "0"
    parts = []
    for i, (m, c) in enumerate(p.terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if m.is_unit:
            body = str(mag)
        elif mag == 1:
            body = repr(m)
        else:
            body = f"{mag}*{m!r}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
