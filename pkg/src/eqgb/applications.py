"""Decision procedures on top of the ideal algebra: zeroness of
orbit-finite polynomial automata and reachability of equivariant monomial
rewrite systems.

The automaton model keeps a rational value in every atom register.  A
finite list of registers V is pointwise fixed by the group (they live in
the left finite component of a sum structure); reading a letter rewrites
every V register through its template, rewrites the letter's own register
through the self template, and leaves the rest untouched.  Zeroness runs
the backward ideal chain: start from the output polynomial's ideal and
keep adding pullbacks until the chain stabilises, then evaluate the basis
on the initial state.
"""

from __future__ import annotations

from fractions import Fraction

from .ideals import (EquivariantIdeal, _from_base_generators,
                     ideal_from_generators, ideal_includes, ideal_member)
from .orbitset import OrbitSet
from .poly import Monomial, Polynomial
from .saturation import SaturationBudgetError
from .structures import (EqualityAtoms, FiniteOrd, InputError, Sum,
                         merge_reps, placements, tuple_reps)

PLACEHOLDER = "@"


def _has_reduct(s) -> bool:
    if isinstance(s, EqualityAtoms):
        return True
    subs = [getattr(s, attr) for attr in ("left", "right", "base", "outer", "inner")
            if hasattr(s, attr)]
    return any(_has_reduct(sub) for sub in subs)


class PolynomialAutomaton:
    """Fixed registers V, per-register update templates over V + '@', a
    self template for the letter register, and an output polynomial over V.
    """

    __slots__ = ("structure", "template_structure", "data", "v_symbols",
                 "v_atoms", "marker", "initial", "templates", "self_template",
                 "output")

    def __init__(self, data_structure, v_symbols, initial, templates,
                 self_template, output):
        if _has_reduct(data_structure):
            raise InputError("automata require an order-compatible data side")
        v_symbols = tuple(v_symbols)
        self.structure = Sum(FiniteOrd(v_symbols), data_structure)
        self.template_structure = Sum(FiniteOrd(v_symbols + (PLACEHOLDER,)),
                                      data_structure)
        self.data = data_structure
        self.v_symbols = v_symbols
        fin = FiniteOrd(v_symbols)
        self.v_atoms = tuple(self.structure.atom_left(fin.atom(s))
                             for s in v_symbols)
        tfin = FiniteOrd(v_symbols + (PLACEHOLDER,))
        self.marker = self.template_structure.atom_left(tfin.atom(PLACEHOLDER))
        self.initial = {a: Fraction(c) for a, c in initial.items() if c != 0}
        self.templates = dict(templates)
        self.self_template = self_template
        self.output = output
        self._validate()

    def _validate(self):
        v_set = set(self.v_atoms)
        if not self.output.dom() <= v_set:
            raise InputError("output polynomial must use fixed registers only")
        allowed = {self._to_template(a) for a in self.v_atoms} | {self.marker}
        for v, tpl in self.templates.items():
            if v not in v_set:
                raise InputError(f"template for unknown register {v!r}")
            if not tpl.dom() <= allowed:
                raise InputError("templates may use fixed registers and '@' only")
        if self.self_template is not None \
                and not self.self_template.dom() <= allowed:
            raise InputError("templates may use fixed registers and '@' only")

    def _to_template(self, a):
        """The same atom viewed inside the template structure."""
        if a.value[0] == "L":
            tfin = FiniteOrd(self.v_symbols + (PLACEHOLDER,))
            return self.template_structure.atom_left(tfin.atom(a.value[1].value))
        return a

    def _from_template(self, a):
        if a.value[0] == "L":
            fin = FiniteOrd(self.v_symbols)
            return self.structure.atom_left(fin.atom(a.value[1].value))
        return a

    def template_for(self, v) -> Polynomial:
        """Update template of register v; identity when unspecified."""
        tpl = self.templates.get(v)
        if tpl is None:
            return Polynomial.atom(self.template_structure, self._to_template(v))
        return tpl

    def letter_self_template(self) -> Polynomial:
        """Update template of the letter's own register; identity default."""
        if self.self_template is None:
            return Polynomial.atom(self.template_structure, self.marker)
        return self.self_template

    def instantiate(self, template: Polynomial, letter) -> Polynomial:
        """Substitute the placeholder by the letter and reinterpret over the
        automaton structure."""
        letter_tpl = Polynomial.atom(self.template_structure,
                                     self._to_template(letter))
        assignment = {self.marker: letter_tpl}
        for a in template.dom():
            if a != self.marker:
                assignment[a] = Polynomial.atom(template.structure, a)
        inst = template.substitute(assignment)
        return Polynomial.from_dict(self.structure, {
            Monomial.from_dict({self._from_template(a): e for a, e in m.pairs}): c
            for m, c in inst.terms})

    def delta(self, letter, register) -> Polynomial:
        """The update polynomial delta(letter, register)."""
        if register in self.v_atoms:
            return self.instantiate(self.template_for(register), letter)
        if register == letter:
            return self.instantiate(self.letter_self_template(), letter)
        return Polynomial.atom(self.structure, register)


def pullback(A: PolynomialAutomaton, p: Polynomial, letter) -> Polynomial:
    """p with every register substituted by its update under the letter."""
    assignment = {x: A.delta(letter, x) for x in p.dom()}
    return p.substitute(assignment)


def letter_orbit_reps(A: PolynomialAutomaton, pinned) -> list:
    """One letter per orbit of single atoms relative to ``pinned``."""
    s = A.structure
    out, seen = [], set()
    for t in tuple_reps(s, 1):
        for (_, (a,)) in merge_reps(s, pinned, t):
            if a not in seen:
                seen.add(a)
                out.append(a)
    return out


def evaluate_at_state(p: Polynomial, state, placement) -> Fraction:
    """Value of p when its atoms are placed relative to the state's support;
    atoms placed on fresh positions read 0."""
    assignment = {x: state.get(placement[x], Fraction(0)) for x in p.dom()}
    return p.evaluate(assignment)


def zeroness(A: PolynomialAutomaton, max_rounds: int = 64) -> bool:
    """Whether the automaton outputs zero on every input word (backward
    ideal chain per the standard fixpoint argument)."""
    s = A.structure
    if A.output.is_zero:
        return True
    ideal = ideal_from_generators(s, [A.output], max_rounds)
    for _ in range(max_rounds):
        pulled = []
        for p in ideal.basis.reps:
            for a in letter_orbit_reps(A, p.dom_tuple()):
                q = pullback(A, p, a)
                if not q.is_zero:
                    pulled.append(q)
        nxt = _from_base_generators(
            s, ideal.base_generators.union(OrbitSet.from_polys(s, pulled)),
            max_rounds)
        assert ideal_includes(nxt, ideal), "the backward chain must increase"
        if ideal_includes(ideal, nxt):
            break
        ideal = nxt
    else:
        raise SaturationBudgetError(ideal.basis, max_rounds)
    support = tuple(sorted(A.initial))
    for p in ideal.basis.reps:
        for pl in placements(s, p.dom_tuple(), support):
            if evaluate_at_state(p, A.initial, pl) != 0:
                return False
    return True


class MonomialRewriteSystem:
    """Unordered monomial pairs rewritten up to the group action."""

    __slots__ = ("structure", "rules")

    def __init__(self, structure, rules):
        self.structure = structure
        self.rules = tuple((m, n) for m, n in rules)
        if any(m.pairs == () and n.pairs == () for m, n in self.rules):
            raise InputError("a rule must mention at least one monomial")

    def ideal(self, max_rounds: int = 64) -> EquivariantIdeal:
        gens = []
        for m, n in self.rules:
            g = (Polynomial.monomial(self.structure, m)
                 - Polynomial.monomial(self.structure, n))
            if not g.is_zero:
                gens.append(g)
        return ideal_from_generators(self.structure, gens, max_rounds)


def reach(R: MonomialRewriteSystem, m_s: Monomial, m_t: Monomial,
          max_rounds: int = 64, _ideal=None) -> bool:
    """Whether m_s rewrites to m_t: the classical difference-of-monomials
    membership in the binomial ideal of the rules."""
    ideal = R.ideal(max_rounds) if _ideal is None else _ideal
    query = (Polynomial.monomial(R.structure, m_s)
             - Polynomial.monomial(R.structure, m_t))
    return ideal_member(ideal, query)
