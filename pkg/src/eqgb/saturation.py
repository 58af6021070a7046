"""Equivariant rewriting of polynomials and the saturation loop.

A reduction step subtracts a monomial multiple of a translated basis
element so that the leading monomial strictly drops and no new atom
enters the domain.  Exhaustive reduction yields the finite set of normal
forms (remainders); saturating a generating set with remainders of
S-polynomials until no new orbit appears yields a weak equivariant
Groebner basis.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .orbitset import OrbitSet, pairs
from .poly import (Monomial, Polynomial, lcm, lm, lc, rename_canonical,
                   revlex_compare)
from .structures import GT, InputError, shared_embeddings

# Worker count for per-round pair processing.  Output is sequential-
# equivalent for any value; the CLI sets this from --workers.
WORKERS = 1


class SaturationBudgetError(RuntimeError):
    """Round budget exhausted; carries the partial basis reached so far."""

    def __init__(self, partial: OrbitSet, rounds: int):
        super().__init__(f"saturation did not stabilise within {rounds} rounds")
        self.partial = partial
        self.rounds = rounds


@dataclass(frozen=True)
class ReductionStep:
    """One application of the rewriting relation to some polynomial p:
    p = coefficient * cofactor * (reducer renamed through embedding) + r."""

    reducer: Polynomial
    embedding: tuple
    cofactor_monomial: Monomial
    coefficient: Fraction

    def subtrahend(self) -> Polynomial:
        moved = self.reducer.act(dict(self.embedding))
        return moved.mul_monomial(self.cofactor_monomial, self.coefficient)

    def apply(self, p: Polynomial) -> Polynomial:
        r = p - self.subtrahend()
        assert r.dom() <= p.dom(), "reduction may not grow the domain"
        assert r.is_zero or revlex_compare(lm(p), lm(r)) == GT, \
            "reduction must drop the leading monomial"
        return r


@dataclass(frozen=True)
class Decomposition:
    """A sum of monomial multiples of translated basis elements; test-only
    witness object, also used as membership certificate."""

    structure: object
    summands: tuple  # (coefficient, monomial, basis rep, embedding items)

    def evaluate(self) -> Polynomial:
        acc = Polynomial.zero(self.structure)
        for coeff, mono, rep, emb in self.summands:
            acc = acc + rep.act(dict(emb)).mul_monomial(mono, coeff)
        return acc

    def dom(self) -> set:
        out = set()
        for _, mono, rep, emb in self.summands:
            out |= rep.act(dict(emb)).mul_monomial(mono).dom()
        return out

    def leading_monomial(self) -> Monomial:
        best = None
        for coeff, mono, rep, emb in self.summands:
            cand = lm(rep.act(dict(emb)).mul_monomial(mono, coeff))
            if best is None or revlex_compare(cand, best) == GT:
                best = cand
        if best is None:
            raise InputError("empty decomposition has no leading monomial")
        return best


def reduction_candidates(H: OrbitSet, p: Polynomial) -> list:
    """Every reduction step available on p: a representative of H, an
    embedding of its domain into dom(p), and leading-monomial divisibility."""
    if p.is_zero:
        return []
    target = p.dom_tuple()
    lmp, lcp = p.terms[0]
    out = []
    for q in H.reps:
        lmq, lcq = q.terms[0]
        for emb in shared_embeddings(H.structure, q.dom_tuple(), target):
            moved_lm = lmq.rename(emb)
            if moved_lm.divides(lmp):
                out.append(ReductionStep(
                    reducer=q,
                    embedding=tuple(sorted(emb.items(), key=lambda kv: kv[0].key)),
                    cofactor_monomial=lmp.divide(moved_lm),
                    coefficient=lcp / lcq,
                ))
    return out


def remainders(H: OrbitSet, p: Polynomial, single_remainder: bool = False,
               _memo=None) -> list:
    """All normal forms reachable from p by exhaustive reduction, exactly
    deduplicated.  ``single_remainder`` keeps only the first normal form
    per node (off by default: the saturation theory uses the full set).

    The memo is keyed on the monic canonical form, so reductions are
    shared across orbit translates and scalar multiples; callers running
    many reductions against the same H may pass a shared ``_memo``."""
    memo = {} if _memo is None else _memo

    def rec(q: Polynomial):
        if q.is_zero:
            return (q,)
        cq, emb = rename_canonical(q)
        lcq = cq.terms[0][1]
        if lcq != 1:
            cq = cq.scale(1 / lcq)
        cached = memo.get(cq.terms)
        if cached is None:
            cands = reduction_candidates(H, cq)
            if not cands:
                cached = (cq,)
            else:
                acc, seen = [], set()
                for step in cands:
                    for nf in rec(step.apply(cq)):
                        if nf.terms not in seen:
                            seen.add(nf.terms)
                            acc.append(nf)
                    if single_remainder and acc:
                        break
                cached = tuple(acc)
            memo[cq.terms] = cached
        back = {b: a for a, b in emb.items()}
        return [nf.act(back).scale(lcq) for nf in cached]

    if p.is_zero:
        return [p]
    out, seen = [], set()
    for nf in rec(p):
        if nf.terms not in seen:
            seen.add(nf.terms)
            out.append(nf)
    if single_remainder:
        out = out[:1]
    return out


def s_polynomial(p: Polynomial, q: Polynomial) -> Polynomial:
    """The leading-term-cancelling combination of p and q."""
    if p.is_zero or q.is_zero:
        raise InputError("S-polynomial of the zero polynomial")
    p._check_same(q)
    delta = lcm(lm(p), lm(q))
    left = p.mul_monomial(delta.divide(lm(p)), 1 / lc(p))
    right = q.mul_monomial(delta.divide(lm(q)), 1 / lc(q))
    assert left.terms[0] == right.terms[0], "leading terms must agree"
    return left - right


def _pair_remainders(B: OrbitSet, pq, single_remainder: bool, memo):
    p, q = pq
    s = s_polynomial(p, q)
    if s.is_zero:
        return []
    return [r for r in remainders(B, s, single_remainder, _memo=memo)
            if not r.is_zero]


def sset(B: OrbitSet, single_remainder: bool = False) -> OrbitSet:
    """Remainders of all S-polynomials over the orbit pairs of B x B."""
    todo, seen = [], set()
    for (p, q) in pairs(B, B):
        # the transposed concrete pair contributes the negated S-polynomial,
        # hence the same monic orbits
        key = frozenset((p.terms, q.terms))
        if key in seen:
            continue
        seen.add(key)
        todo.append((p, q))
    memo = {}
    if WORKERS > 1:
        with ThreadPoolExecutor(max_workers=WORKERS) as pool:
            results = list(pool.map(
                lambda pq: _pair_remainders(B, pq, single_remainder, memo), todo))
    else:
        results = [_pair_remainders(B, pq, single_remainder, memo) for pq in todo]
    acc = []
    for chunk in results:
        acc.extend(chunk)
    return OrbitSet.from_polys(B.structure, acc)


def weakgb(H: OrbitSet, max_rounds: int = 64, trace=None,
           single_remainder: bool = False) -> OrbitSet:
    """Saturate H with S-polynomial remainders until no new orbit appears.

    Terminates whenever divisibility up to the group is a well-quasi-order
    on the structure's monomials; raises SaturationBudgetError with the
    partial basis otherwise."""
    B = H
    for rnd in range(1, max_rounds + 1):
        S = sset(B, single_remainder)
        added = [r for r in S.reps if not B.contains(r)]
        if trace is not None:
            trace(rnd, added)
        if not added:
            assert S.issubset(B), "stabilisation is exactly sset containment"
            return B
        B = B.union(S)
    raise SaturationBudgetError(B, max_rounds)
