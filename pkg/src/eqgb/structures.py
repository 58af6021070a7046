"""Atom universes carrying an oligomorphic group action.

A structure descriptor names a concrete universe of atoms together with
the group that acts on it, and provides the three computability services
everything else is built on: a decidable total order on atoms, orbit
equality with canonical orbit representatives for tuples, and
enumeration of embeddings (finite restrictions of group elements).

Group elements are never materialised as total bijections; only their
finite restrictions exist, which is enough because all universes here
are homogeneous: a structure-preserving map between finite subsets
always extends to a full automorphism.

Atoms are immutable and carry a precomputed sort key, so monomial code
can compare and hash atoms without consulting the descriptor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class InputError(ValueError):
    """Bad input to a structure service (universe or arity mismatch)."""


class Atom:
    """An immutable point of some atom universe.

    ``value`` is the printable payload (a Fraction, a symbol, or a
    tagged/nested combination); ``key`` is a comparison key that realises
    the structure's total order through plain tuple/Fraction comparison.
    """

    __slots__ = ("value", "key", "_hash")

    def __init__(self, value, key):
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, val):
        raise AttributeError("atoms are immutable")

    def __eq__(self, other):
        return self is other or (isinstance(other, Atom) and self.key == other.key)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self.key >= other.key

    def __repr__(self):
        return render_atom(self)


def render_atom(a: Atom) -> str:
    """Canonical textual form of an atom; parseable back in context."""
    v = a.value
    if isinstance(v, Fraction):
        return f"a({v})"
    if isinstance(v, str):
        return v
    tag, rest = v
    if tag in ("L", "R"):
        return f"{tag}.{render_atom(rest)}"
    if tag in (1, 2):
        return f"{tag}.{render_atom(rest)}"
    return f"({render_atom(tag)},{render_atom(rest)})"


def _weave(tags, first, second, pick):
    """Reassemble a tuple from two sub-tuples according to a tag word."""
    it1, it2 = iter(first), iter(second)
    return tuple(next(it1) if pick(t) else next(it2) for t in tags)


@dataclass(frozen=True)
class DenseOrder:
    """The dense linear order of rationals; order-preserving bijections act."""

    def atom(self, q) -> Atom:
        q = Fraction(q)
        return Atom(q, q)

    def contains_atom(self, a: Atom) -> bool:
        return isinstance(a.value, Fraction)

    def canonical_tuple(self, t):
        ranks = {v: i + 1 for i, v in enumerate(sorted({a.value for a in t}))}
        return tuple(self.atom(ranks[a.value]) for a in t)

    def tuple_reps(self, n):
        return [tuple(self.atom(v) for v in pat) for pat in _order_patterns(n)]

    def embeddings(self, source, target):
        src = sorted({a for a in source})
        tgt = sorted({a for a in target})
        if len(src) > len(tgt):
            return []
        return [dict(zip(src, combo)) for combo in itertools.combinations(tgt, len(src))]

    def realize(self, pattern, anchors):
        distinct = sorted({a for a in pattern})
        images = {a: anchors[a] for a in distinct if a in anchors}
        vals = [images[a].value for a in distinct if a in images]
        if any(y <= x for x, y in zip(vals, vals[1:])):
            raise InputError("anchor images must be strictly increasing")
        # fill each unanchored run: unit steps beyond the extremes, recursive
        # midpoints strictly between two anchors
        i = 0
        while i < len(distinct):
            if distinct[i] in images:
                i += 1
                continue
            j = i
            while j < len(distinct) and distinct[j] not in images:
                j += 1
            lo = images[distinct[i - 1]].value if i > 0 else None
            hi = images[distinct[j]].value if j < len(distinct) else None
            for a, v in zip(distinct[i:j], _fresh_values(j - i, lo, hi)):
                images[a] = self.atom(v)
            i = j
        return tuple(images[a] for a in pattern)

    def joint_reps(self, t1, t2):
        cls1, k1 = _rank_classes(t1)
        cls2, k2 = _rank_classes(t2)
        out = []
        for f, g in _chain_merges(k1, k2):
            u = tuple(self.atom(f[c]) for c in cls1)
            v = tuple(self.atom(g[c]) for c in cls2)
            out.append((u, v))
        return out


@dataclass(frozen=True)
class EqualityAtoms:
    """Rational atoms with the full symmetric group: only equality matters.

    This is the reduct of the dense order (same universe, bigger group).
    Polynomial pipelines over it compute in the DenseOrder base world;
    the descriptor itself only answers the pure atom services.
    """

    @property
    def base(self) -> DenseOrder:
        return DenseOrder()

    def atom(self, q) -> Atom:
        q = Fraction(q)
        return Atom(q, q)

    def contains_atom(self, a: Atom) -> bool:
        return isinstance(a.value, Fraction)

    def canonical_tuple(self, t):
        ranks = {}
        for a in t:
            if a.value not in ranks:
                ranks[a.value] = len(ranks) + 1
        return tuple(self.atom(ranks[a.value]) for a in t)

    def tuple_reps(self, n):
        return [tuple(self.atom(v) for v in pat) for pat in _partition_patterns(n)]

    def embeddings(self, source, target):
        src = sorted({a for a in source})
        tgt = sorted({a for a in target})
        if len(src) > len(tgt):
            return []
        return [dict(zip(src, perm)) for perm in itertools.permutations(tgt, len(src))]

    def realize(self, pattern, anchors):
        images = dict(anchors)
        used = {a.value for a in images.values()}
        nxt = int(max(used, default=0)) + 1
        for a in pattern:
            if a not in images:
                images[a] = self.atom(nxt)
                used.add(Fraction(nxt))
                nxt += 1
        return tuple(images[a] for a in pattern)

    def joint_reps(self, t1, t2):
        occ1, k1 = _occurrence_classes(t1)
        occ2, k2 = _occurrence_classes(t2)
        out = []
        for match in _partial_matchings(k1, k2):
            val2, fresh = {}, k1 + 1
            for j in range(k2):
                if match[j] is not None:
                    val2[j] = match[j] + 1
                else:
                    val2[j] = fresh
                    fresh += 1
            u = tuple(self.atom(c + 1) for c in occ1)
            v = tuple(self.atom(val2[c]) for c in occ2)
            out.append((u, v))
        return out

    def expand_tuple(self, t):
        """One DenseOrder orbit representative per order pattern consistent
        with the equality pattern of ``t``."""
        base = self.base
        seen_vals, order = {}, []
        for a in t:
            if a.value not in seen_vals:
                seen_vals[a.value] = len(order)
                order.append(a.value)
        k = len(order)
        out, seen = [], set()
        for perm in itertools.permutations(range(1, k + 1)):
            cand = tuple(base.atom(perm[seen_vals[a.value]]) for a in t)
            canon = base.canonical_tuple(cand)
            if canon not in seen:
                seen.add(canon)
                out.append(canon)
        return out


@dataclass(frozen=True)
class FiniteOrd:
    """A finite chain of named symbols with the trivial group."""

    symbols: tuple

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise InputError("duplicate symbols in finite structure")

    def atom(self, sym) -> Atom:
        try:
            return Atom(sym, self.symbols.index(sym))
        except ValueError:
            raise InputError(f"unknown symbol {sym!r}") from None

    def contains_atom(self, a: Atom) -> bool:
        return a.value in self.symbols and isinstance(a.key, int)

    def canonical_tuple(self, t):
        return tuple(t)

    def tuple_reps(self, n):
        atoms = [self.atom(s) for s in self.symbols]
        return [tuple(p) for p in itertools.product(atoms, repeat=n)]

    def embeddings(self, source, target):
        tgt = set(target)
        if all(a in tgt for a in source):
            return [{a: a for a in set(source)}]
        return []

    def realize(self, pattern, anchors):
        for a, b in anchors.items():
            if a != b:
                raise InputError("trivial group admits only identity anchors")
        return tuple(pattern)

    def joint_reps(self, t1, t2):
        return [(tuple(t1), tuple(t2))]


@dataclass(frozen=True)
class Sum:
    """Lexicographic sum: every left atom below every right atom, the two
    component groups acting independently on their own sides."""

    left: object
    right: object

    def atom_left(self, a: Atom) -> Atom:
        return Atom(("L", a), (0, a.key))

    def atom_right(self, a: Atom) -> Atom:
        return Atom(("R", a), (1, a.key))

    def lift(self, side, a):
        return self.atom_left(a) if side == "L" else self.atom_right(a)

    def contains_atom(self, a: Atom) -> bool:
        if not (isinstance(a.value, tuple) and len(a.value) == 2 and a.value[0] in ("L", "R")):
            return False
        side, inner = a.value
        comp = self.left if side == "L" else self.right
        return comp.contains_atom(inner)

    def _split(self, t):
        tags = tuple(a.value[0] for a in t)
        lpart = tuple(a.value[1] for a in t if a.value[0] == "L")
        rpart = tuple(a.value[1] for a in t if a.value[0] == "R")
        return tags, lpart, rpart

    def canonical_tuple(self, t):
        tags, lpart, rpart = self._split(t)
        lc = self.left.canonical_tuple(lpart)
        rc = self.right.canonical_tuple(rpart)
        return _weave(tags, [self.atom_left(a) for a in lc],
                      [self.atom_right(a) for a in rc], lambda tg: tg == "L")

    def tuple_reps(self, n):
        out = []
        for tags in itertools.product("LR", repeat=n):
            nl = tags.count("L")
            for u in self.left.tuple_reps(nl):
                for v in self.right.tuple_reps(n - nl):
                    out.append(_weave(tags, [self.atom_left(a) for a in u],
                                      [self.atom_right(a) for a in v],
                                      lambda tg: tg == "L"))
        return out

    def embeddings(self, source, target):
        src_l = [a.value[1] for a in source if a.value[0] == "L"]
        src_r = [a.value[1] for a in source if a.value[0] == "R"]
        tgt_l = [a.value[1] for a in target if a.value[0] == "L"]
        tgt_r = [a.value[1] for a in target if a.value[0] == "R"]
        out = []
        for el in self.left.embeddings(tuple(src_l), tuple(tgt_l)):
            for er in self.right.embeddings(tuple(src_r), tuple(tgt_r)):
                m = {self.atom_left(a): self.atom_left(b) for a, b in el.items()}
                m.update({self.atom_right(a): self.atom_right(b) for a, b in er.items()})
                out.append(m)
        return out

    def realize(self, pattern, anchors):
        anch_l, anch_r = {}, {}
        for a, b in anchors.items():
            if a.value[0] != b.value[0]:
                raise InputError("anchors must preserve the sum side")
            (anch_l if a.value[0] == "L" else anch_r)[a.value[1]] = b.value[1]
        tags, lpart, rpart = self._split(pattern)
        lr = self.left.realize(lpart, anch_l)
        rr = self.right.realize(rpart, anch_r)
        return _weave(tags, [self.atom_left(a) for a in lr],
                      [self.atom_right(a) for a in rr], lambda tg: tg == "L")

    def joint_reps(self, t1, t2):
        tags1, l1, r1 = self._split(t1)
        tags2, l2, r2 = self._split(t2)
        out = []
        for (lu, lv) in self.left.joint_reps(l1, l2):
            for (ru, rv) in self.right.joint_reps(r1, r2):
                u = _weave(tags1, [self.atom_left(a) for a in lu],
                           [self.atom_right(a) for a in ru], lambda tg: tg == "L")
                v = _weave(tags2, [self.atom_left(a) for a in lv],
                           [self.atom_right(a) for a in rv], lambda tg: tg == "L")
                out.append((u, v))
        return out


@dataclass(frozen=True)
class Doubled:
    """Two ordered copies of a base universe (first copy below the second),
    with one base group element acting diagonally across both copies."""

    base: object

    def atom(self, copy, a: Atom) -> Atom:
        if copy not in (1, 2):
            raise InputError("copy tag must be 1 or 2")
        return Atom((copy, a), (copy - 1, a.key))

    def contains_atom(self, a: Atom) -> bool:
        return (isinstance(a.value, tuple) and len(a.value) == 2
                and a.value[0] in (1, 2) and self.base.contains_atom(a.value[1]))

    def _strip(self, t):
        return tuple(a.value[0] for a in t), tuple(a.value[1] for a in t)

    def canonical_tuple(self, t):
        tags, base_part = self._strip(t)
        bc = self.base.canonical_tuple(base_part)
        return tuple(self.atom(tg, b) for tg, b in zip(tags, bc))

    def tuple_reps(self, n):
        out = []
        base_reps = self.base.tuple_reps(n)
        for tags in itertools.product((1, 2), repeat=n):
            for b in base_reps:
                out.append(tuple(self.atom(tg, x) for tg, x in zip(tags, b)))
        return out

    def embeddings(self, source, target):
        bsrc = tuple(sorted({a.value[1] for a in source}))
        btgt = tuple(sorted({a.value[1] for a in target}))
        tgt = set(target)
        out = []
        for f in self.base.embeddings(bsrc, btgt):
            m = {a: self.atom(a.value[0], f[a.value[1]]) for a in set(source)}
            if all(b in tgt for b in m.values()):
                out.append(m)
        return out

    def realize(self, pattern, anchors):
        banch = {}
        for a, b in anchors.items():
            if a.value[0] != b.value[0]:
                raise InputError("anchors must preserve the copy tag")
            prev = banch.get(a.value[1])
            if prev is not None and prev != b.value[1]:
                raise InputError("anchors disagree on a shared base atom")
            banch[a.value[1]] = b.value[1]
        tags, base_part = self._strip(pattern)
        br = self.base.realize(base_part, banch)
        return tuple(self.atom(tg, x) for tg, x in zip(tags, br))

    def joint_reps(self, t1, t2):
        tags1, b1 = self._strip(t1)
        tags2, b2 = self._strip(t2)
        out = []
        for (u, v) in self.base.joint_reps(b1, b2):
            out.append((tuple(self.atom(tg, x) for tg, x in zip(tags1, u)),
                        tuple(self.atom(tg, x) for tg, x in zip(tags2, v))))
        return out


@dataclass(frozen=True)
class LexProduct:
    """Pairs ordered lexicographically; the outer group permutes first
    components while every outer point carries an independent copy of the
    inner group acting on its fibre."""

    outer: object
    inner: object

    def atom(self, ao: Atom, ai: Atom) -> Atom:
        return Atom((ao, ai), (ao.key, ai.key))

    def contains_atom(self, a: Atom) -> bool:
        return (isinstance(a.value, tuple) and len(a.value) == 2
                and isinstance(a.value[0], Atom) and isinstance(a.value[1], Atom)
                and self.outer.contains_atom(a.value[0])
                and self.inner.contains_atom(a.value[1]))

    @staticmethod
    def _classes(outer_part):
        """Positions grouped by equal outer atom, classes in ascending order."""
        groups = {}
        for i, a in enumerate(outer_part):
            groups.setdefault(a, []).append(i)
        return [groups[a] for a in sorted(groups)]

    def canonical_tuple(self, t):
        outer_part = tuple(a.value[0] for a in t)
        inner_part = tuple(a.value[1] for a in t)
        oc = self.outer.canonical_tuple(outer_part)
        result = [None] * len(t)
        for positions in self._classes(outer_part):
            sub = self.inner.canonical_tuple(tuple(inner_part[i] for i in positions))
            for i, b in zip(positions, sub):
                result[i] = self.atom(oc[i], b)
        return tuple(result)

    def tuple_reps(self, n):
        out = []
        for o in self.outer.tuple_reps(n):
            classes = self._classes(o)
            choices = [self.inner.tuple_reps(len(pos)) for pos in classes]
            for combo in itertools.product(*choices):
                result = [None] * n
                for positions, sub in zip(classes, combo):
                    for i, b in zip(positions, sub):
                        result[i] = self.atom(o[i], b)
                out.append(tuple(result))
        return out

    def embeddings(self, source, target):
        src_fibres, tgt_fibres = {}, {}
        for a in source:
            src_fibres.setdefault(a.value[0], set()).add(a.value[1])
        for a in target:
            tgt_fibres.setdefault(a.value[0], set()).add(a.value[1])
        src_outer = sorted(src_fibres)
        out = []
        for f in self.outer.embeddings(tuple(src_outer), tuple(tgt_fibres)):
            per_class = []
            for v in src_outer:
                fibre = tuple(sorted(src_fibres[v]))
                tgt = tuple(sorted(tgt_fibres.get(f[v], ())))
                per_class.append(self.inner.embeddings(fibre, tgt))
            for combo in itertools.product(*per_class):
                m = {}
                for v, g in zip(src_outer, combo):
                    for y, y2 in g.items():
                        m[self.atom(v, y)] = self.atom(f[v], y2)
                out.append(m)
        return out

    def realize(self, pattern, anchors):
        oanch, ianch = {}, {}
        for a, b in anchors.items():
            prev = oanch.get(a.value[0])
            if prev is not None and prev != b.value[0]:
                raise InputError("anchors disagree on a shared outer atom")
            oanch[a.value[0]] = b.value[0]
            ianch.setdefault(a.value[0], {})[a.value[1]] = b.value[1]
        outer_part = tuple(a.value[0] for a in pattern)
        oreal = dict(zip(outer_part, self.outer.realize(outer_part, oanch)))
        result = [None] * len(pattern)
        for positions in self._classes(outer_part):
            v = pattern[positions[0]].value[0]
            fibre = tuple(pattern[i].value[1] for i in positions)
            sub = self.inner.realize(fibre, ianch.get(v, {}))
            for i, b in zip(positions, sub):
                result[i] = self.atom(oreal[v], b)
        return tuple(result)

    def joint_reps(self, t1, t2):
        o1 = tuple(a.value[0] for a in t1)
        o2 = tuple(a.value[0] for a in t2)
        i1 = tuple(a.value[1] for a in t1)
        i2 = tuple(a.value[1] for a in t2)
        out = []
        for (u_o, v_o) in self.outer.joint_reps(o1, o2):
            # positions of both tuples grouped by the merged outer value
            merged = {}
            for i, a in enumerate(u_o):
                merged.setdefault(a, ([], []))[0].append(i)
            for j, a in enumerate(v_o):
                merged.setdefault(a, ([], []))[1].append(j)
            keys = sorted(merged)
            per_class = []
            for w in keys:
                p1, p2 = merged[w]
                per_class.append(self.inner.joint_reps(
                    tuple(i1[i] for i in p1), tuple(i2[j] for j in p2)))
            for combo in itertools.product(*per_class):
                r1, r2 = [None] * len(t1), [None] * len(t2)
                for w, (sub1, sub2) in zip(keys, combo):
                    p1, p2 = merged[w]
                    for i, b in zip(p1, sub1):
                        r1[i] = self.atom(w, b)
                    for j, b in zip(p2, sub2):
                        r2[j] = self.atom(w, b)
                out.append((tuple(r1), tuple(r2)))
        return out


# ---------------------------------------------------------------------------
# pattern enumeration helpers

@lru_cache(maxsize=None)
def _order_patterns(n):
    """All order/equality patterns of length n on the naturals 1..k,
    lexicographically sorted (the three patterns =, <, > for n = 2)."""
    if n == 0:
        return ((),)
    out = []
    for k in range(1, n + 1):
        cur = [0] * n

        def rec(i, used):
            missing = k - bin(used).count("1")
            if n - i < missing:
                return
            if i == n:
                out.append(tuple(cur))
                return
            for v in range(1, k + 1):
                cur[i] = v
                rec(i + 1, used | (1 << v))

        rec(0, 0)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _partition_patterns(n):
    """Equality patterns: restricted growth strings on 1..k."""
    if n == 0:
        return ((),)
    out = []
    cur = [0] * n

    def rec(i, mx):
        if i == n:
            out.append(tuple(cur))
            return
        for v in range(1, mx + 2):
            cur[i] = v
            rec(i + 1, max(mx, v))

    rec(0, 0)
    return tuple(out)


def _rank_classes(t):
    """Map each position to the rank (0-based) of its value; return ranks, k."""
    order = sorted({a.value for a in t})
    rank = {v: i for i, v in enumerate(order)}
    return [rank[a.value] for a in t], len(order)


def _occurrence_classes(t):
    """Map each position to its first-occurrence class index; return classes, k."""
    seen = {}
    cls = []
    for a in t:
        if a.value not in seen:
            seen[a.value] = len(seen)
        cls.append(seen[a.value])
    return cls, len(seen)


@lru_cache(maxsize=None)
def _chain_merges(k1, k2):
    """All monotone merges of a k1-chain and a k2-chain: pairs of strictly
    increasing rank maps whose images jointly cover an initial segment."""
    out = []
    f, g = [0] * k1, [0] * k2

    def rec(i, j, r):
        if i == k1 and j == k2:
            out.append((tuple(f), tuple(g)))
            return
        if i < k1:
            f[i] = r
            rec(i + 1, j, r + 1)
        if j < k2:
            g[j] = r
            rec(i, j + 1, r + 1)
        if i < k1 and j < k2:
            f[i] = r
            g[j] = r
            rec(i + 1, j + 1, r + 1)

    rec(0, 0, 1)
    return tuple(out)


def _partial_matchings(k1, k2):
    """All partial injective maps from [k2] into [k1], as tuples with None
    for unmatched entries."""
    out = []
    cur = [None] * k2

    def rec(j, used):
        if j == k2:
            out.append(tuple(cur))
            return
        cur[j] = None
        rec(j + 1, used)
        for i in range(k1):
            if not used & (1 << i):
                cur[j] = i
                rec(j + 1, used | (1 << i))
        cur[j] = None

    rec(0, 0)
    return out


def _fresh_values(count, lo, hi):
    """Fresh rationals: midpoint subdivision between two bounds, unit steps
    beyond an open end."""
    if lo is None and hi is None:
        return [Fraction(i) for i in range(1, count + 1)]
    if lo is None:
        return [hi - (count - i) for i in range(count)]
    if hi is None:
        return [lo + i + 1 for i in range(count)]
    out = []

    def mid(a, b, k):
        if k == 0:
            return
        m = (a + b) / 2
        left = (k - 1) // 2
        mid(a, m, left)
        out.append(m)
        mid(m, b, k - 1 - left)

    mid(lo, hi, count)
    return out


# ---------------------------------------------------------------------------
# public services

LT, EQ, GT = -1, 0, 1


def check_atom(s, a: Atom):
    if not s.contains_atom(a):
        raise InputError(f"atom {a!r} does not belong to the universe of {s!r}")


def compare(s, a: Atom, b: Atom) -> int:
    """Total order on the universe of ``s``: -1, 0 or 1."""
    check_atom(s, a)
    check_atom(s, b)
    if a.key == b.key:
        return EQ
    return LT if a.key < b.key else GT


def canonical_tuple(s, t) -> tuple:
    return _canonical_cached(s, tuple(t))


@lru_cache(maxsize=None)
def _canonical_cached(s, t):
    return s.canonical_tuple(t)


def orbit_equal(s, t1, t2) -> bool:
    """Whether some group element of ``s`` maps t1 onto t2 componentwise."""
    t1, t2 = tuple(t1), tuple(t2)
    if len(t1) != len(t2):
        raise InputError("orbit_equal requires tuples of equal length")
    for a in t1 + t2:
        check_atom(s, a)
    return canonical_tuple(s, t1) == canonical_tuple(s, t2)


def tuple_reps(s, n: int) -> list:
    """One canonical tuple per orbit of the n-fold universe power."""
    if n < 0:
        raise InputError("arity must be non-negative")
    return list(_tuple_reps_cached(s, n))


@lru_cache(maxsize=None)
def _tuple_reps_cached(s, n):
    return tuple(s.tuple_reps(n))


def embeddings(s, source, target) -> list:
    """All injective maps from the atoms of ``source`` into ``target`` that
    extend to a group element of ``s``."""
    source = tuple(source)
    if len(set(source)) != len(source):
        raise InputError("embedding source must be duplicate-free")
    return [dict(m) for m in shared_embeddings(s, source, target)]


def shared_embeddings(s, source, target):
    """Cached read-only embedding dicts for hot paths; never mutate them."""
    return _embeddings_cached(s, tuple(sorted(set(source))),
                              tuple(sorted(set(target))))


@lru_cache(maxsize=None)
def _embeddings_cached(s, source, target):
    return tuple(s.embeddings(source, target))


def merge_reps(s, t1, t2) -> list:
    """One concrete pair per orbit of orbit(t1) x orbit(t2) under the
    diagonal action, with the first component fixed to t1's canonical form."""
    t1, t2 = tuple(t1), tuple(t2)
    c1 = canonical_tuple(s, t1)
    out = []
    for (u, v) in s.joint_reps(t1, t2):
        anchors = dict(zip(u, c1))
        w = s.realize(u + v, anchors)
        out.append((w[:len(t1)], w[len(t1):]))
    return out


def placements(s, moving, pinned) -> list:
    """One atom map per orbit, under the pointwise stabiliser of ``pinned``,
    of the ways ``moving`` can sit relative to ``pinned``.  Images are pinned
    atoms or canonical fresh atoms."""
    moving, pinned = tuple(moving), tuple(pinned)
    if len(set(pinned)) != len(pinned):
        raise InputError("pinned tuple must be duplicate-free")
    if len(set(moving)) != len(moving):
        raise InputError("moving tuple must be duplicate-free")
    out = []
    for (u, v) in s.joint_reps(pinned, moving):
        anchors = dict(zip(u, pinned))
        w = s.realize(u + v, anchors)
        out.append({a: b for a, b in zip(moving, w[len(pinned):])})
    return out


def reduct_expand(s, p_atoms) -> list:
    """Base-world orbit representatives covered by the reduct orbit of
    ``p_atoms`` (one per linear order pattern consistent with its equality
    pattern)."""
    if not isinstance(s, EqualityAtoms):
        raise InputError("reduct expansion is only defined for equality atoms")
    return s.expand_tuple(tuple(p_atoms))
