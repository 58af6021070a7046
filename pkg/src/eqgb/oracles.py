"""Independent desk oracles used by the test suites and the selftest.

Nothing here shares code with the main pipeline: the classical Groebner
oracle works on exponent tuples over a fixed variable list, the subword
oracle is a greedy scan, the rewrite oracle is a bounded breadth-first
search on exponent dictionaries, and the linear oracle solves an exact
Gaussian system.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


# ---------------------------------------------------------------------------
# classical Buchberger over a fixed finite variable list (grevlex)

def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


class ClassicalPoly:
    """Dict from exponent tuples to Fraction, over n implicit variables."""

    def __init__(self, n, coeffs=None):
        self.n = n
        self.coeffs = {}
        for e, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                self.coeffs[tuple(e)] = c

    def is_zero(self):
        return not self.coeffs

    def lt(self):
        e = max(self.coeffs, key=_grevlex_key)
        return e, self.coeffs[e]

    def sub_scaled(self, other, factor, shift):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            key = tuple(a + b for a, b in zip(e, shift))
            out[key] = out.get(key, Fraction(0)) - factor * c
            if not out[key]:
                del out[key]
        return ClassicalPoly(self.n, out)


def _divides_exp(e, f):
    return all(a <= b for a, b in zip(e, f))


def classical_reduce(p: ClassicalPoly, basis) -> ClassicalPoly:
    """Full multivariate division remainder."""
    rem = ClassicalPoly(p.n)
    cur = p
    while not cur.is_zero():
        e, c = cur.lt()
        for q in basis:
            f, d = q.lt()
            if _divides_exp(f, e):
                shift = tuple(a - b for a, b in zip(e, f))
                cur = cur.sub_scaled(q, c / d, shift)
                break
        else:
            rem.coeffs[e] = c
            del cur.coeffs[e]
    return rem


def classical_spoly(p: ClassicalPoly, q: ClassicalPoly) -> ClassicalPoly:
    e, c = p.lt()
    f, d = q.lt()
    g = tuple(max(a, b) for a, b in zip(e, f))
    zero = ClassicalPoly(p.n)
    left = zero.sub_scaled(p, Fraction(-1) / c, tuple(a - b for a, b in zip(g, e)))
    return left.sub_scaled(q, Fraction(1) / d, tuple(a - b for a, b in zip(g, f)))


def classical_groebner(gens) -> list:
    basis = [g for g in gens if not g.is_zero()]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop(0)
        r = classical_reduce(classical_spoly(basis[i], basis[j]), basis)
        if not r.is_zero():
            basis.append(r)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    return basis


def classical_member(p: ClassicalPoly, groebner_basis) -> bool:
    return classical_reduce(p, groebner_basis).is_zero()


# ---------------------------------------------------------------------------
# labelled scattered subword embedding (dense-order divisibility oracle)

def subword_embeds(small, big) -> bool:
    """Greedy check that the label sequence ``small`` embeds in ``big`` with
    componentwise dominance; sequences are exponent lists in atom order."""
    i = 0
    for e in big:
        if i < len(small) and small[i] <= e:
            i += 1
    return i == len(small)


# ---------------------------------------------------------------------------
# bounded BFS over equality-atom monomial rewriting

def _canon_state(state):
    return tuple(sorted(state.values(), reverse=True))


def _apply_rule(state, lhs, rhs, max_atoms, max_exp):
    """All successors of ``state`` by one application of lhs -> rhs, where
    the rule atoms map injectively to state atoms or fresh ones."""
    atoms = sorted(state)
    rule_atoms = sorted(set(lhs) | set(rhs))
    base = max(atoms, default=0) + 1
    candidates = atoms + list(range(base, base + len(rule_atoms)))
    out = []
    for image in itertools.permutations(candidates, len(rule_atoms)):
        m = dict(zip(rule_atoms, image))
        nxt = dict(state)
        ok = True
        for x, e in lhs.items():
            nxt[m[x]] = nxt.get(m[x], 0) - e
            if nxt[m[x]] < 0:
                ok = False
                break
        if not ok:
            continue
        for x, e in rhs.items():
            nxt[m[x]] = nxt.get(m[x], 0) + e
        nxt = {a: e for a, e in nxt.items() if e > 0}
        if len(nxt) > max_atoms or any(e > max_exp for e in nxt.values()):
            continue
        out.append(nxt)
    return out


def bfs_reachable(rules, src, tgt, max_atoms, max_exp, max_states=200000):
    """Whether ``src`` rewrites to ``tgt`` (exponent dicts over equality
    atoms) inside the given bounds.  Sound but only complete up to the
    bounds: False means not found within them."""
    start = {a: e for a, e in src.items() if e > 0}
    goal = _canon_state({a: e for a, e in tgt.items() if e > 0})
    seen = {_canon_state(start)}
    queue = [start]
    if _canon_state(start) == goal:
        return True
    while queue and len(seen) < max_states:
        state = queue.pop(0)
        for lhs, rhs in rules:
            for direction in ((lhs, rhs), (rhs, lhs)):
                for nxt in _apply_rule(state, *direction, max_atoms, max_exp):
                    key = _canon_state(nxt)
                    if key in seen:
                        continue
                    if key == goal:
                        return True
                    seen.add(key)
                    queue.append(nxt)
    return False


# ---------------------------------------------------------------------------
# bounded linear-algebra membership oracle

def solve_exact(rows, rhs):
    """Solvability of rows * x = rhs over the rationals (Gaussian
    elimination); rows are lists of Fractions."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    n_rows = len(m)
    n_cols = len(m[0]) - 1 if m else 0
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        m[rank] = [v / pv for v in m[rank]]
        for r in range(n_rows):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == n_rows:
            break
    return all(not row[-1] or any(row[:-1]) for row in m)


def linear_member(generators, query, atoms, degree, ordered) -> bool:
    """Whether ``query`` is a combination sum c_i * m_i * (pi_i . g) with
    products of total degree <= ``degree`` and atoms inside ``atoms``.

    Generators and query are dicts {exponent-dict-over-atom-index: coeff}
    together with their own atom counts: concretely each generator is a
    pair (natoms, {exps: coeff}) with exps a tuple of length natoms read in
    increasing atom order.  ``ordered`` selects monotone injections only.
    """
    k = len(atoms)
    columns = []
    seen_cols = set()
    for natoms, coeffs in generators:
        if natoms > k:
            continue
        injections = (itertools.combinations(range(k), natoms) if ordered
                      else itertools.permutations(range(k), natoms))
        for inj in injections:
            translated = {}
            for exps, c in coeffs.items():
                e = [0] * k
                for pos, ex in enumerate(exps):
                    e[inj[pos]] = ex
                translated[tuple(e)] = translated.get(tuple(e), Fraction(0)) + c
            gdeg = max((sum(e) for e in translated), default=0)
            for mono in _monomials_upto(k, degree - gdeg):
                col = {}
                for e, c in translated.items():
                    key = tuple(a + b for a, b in zip(e, mono))
                    col[key] = col.get(key, Fraction(0)) + c
                frozen = tuple(sorted(col.items()))
                if frozen not in seen_cols:
                    seen_cols.add(frozen)
                    columns.append(col)
    support = sorted({e for col in columns for e in col} | set(query))
    rows = [[col.get(e, Fraction(0)) for col in columns] for e in support]
    rhs = [Fraction(query.get(e, 0)) for e in support]
    return solve_exact(rows, rhs)


def _monomials_upto(k, max_degree):
    if max_degree < 0:
        return
    exps = [0] * k

    def rec(i, left):
        if i == k:
            yield tuple(exps)
            return
        for v in range(left + 1):
            exps[i] = v
            yield from rec(i + 1, left - v)
        exps[i] = 0

    yield from rec(0, max_degree)
