"""Textual formats: structure descriptors, polynomials, and problem files.

The canonical reprint of any parsed object parses back to the same
object, and printing a parsed canonical file is a fixpoint.  Errors carry
line and column numbers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .applications import (PLACEHOLDER, MonomialRewriteSystem,
                           PolynomialAutomaton)
from .poly import Monomial, Polynomial, render_poly
from .structures import (Atom, DenseOrder, Doubled, EqualityAtoms, FiniteOrd,
                         LexProduct, Sum, render_atom)


class FormatError(ValueError):
    def __init__(self, msg, line=None, col=None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {col}" if col is not None else "") + ")"
        super().__init__(msg + where)
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+|@|[()^*+\-/.,=:])")


class _Tokens:
    def __init__(self, text, line=None):
        self.line = line
        self.items = []  # (value, col)
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                if text[pos:].strip():
                    raise FormatError(f"unexpected character {text[pos:].strip()[0]!r}",
                                      line, pos + 1)
                break
            self.items.append((m.group(1), m.start(1) + 1))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.items[self.i][0] if self.i < len(self.items) else None

    def col(self):
        return self.items[self.i][1] if self.i < len(self.items) else None

    def next(self):
        if self.i >= len(self.items):
            raise FormatError("unexpected end of input", self.line)
        v = self.items[self.i]
        self.i += 1
        return v[0]

    def expect(self, tok):
        got = self.peek()
        if got != tok:
            raise FormatError(f"expected {tok!r}, found {got!r}", self.line, self.col())
        return self.next()

    def done(self):
        if self.i < len(self.items):
            raise FormatError(f"trailing input {self.peek()!r}", self.line, self.col())


_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")


# ---------------------------------------------------------------------------
# structure descriptors

def parse_structure(text, line=None):
    tp = _Tokens(text, line)
    s = _structure(tp)
    tp.done()
    if isinstance(s, EqualityAtoms):
        return s
    if _mentions_eqatoms(s):
        raise FormatError("eqatoms is only supported as the whole structure", line)
    return s


def _mentions_eqatoms(s) -> bool:
    if isinstance(s, EqualityAtoms):
        return True
    subs = [getattr(s, attr) for attr in ("left", "right", "outer", "inner")
            if hasattr(s, attr)]
    if isinstance(s, Doubled):
        subs.append(s.base)
    return any(_mentions_eqatoms(sub) for sub in subs)


def _structure(tp: _Tokens):
    head = tp.next()
    if head == "Q":
        return DenseOrder()
    if head == "eqatoms":
        return EqualityAtoms()
    if head == "finite":
        tp.expect("(")
        syms = [tp.next()]
        while tp.peek() == ",":
            tp.next()
            syms.append(tp.next())
        tp.expect(")")
        for sym in syms:
            if not _IDENT.match(sym) or sym in ("L", "R", "a", PLACEHOLDER):
                raise FormatError(f"invalid finite symbol {sym!r}", tp.line)
        return FiniteOrd(tuple(syms))
    if head in ("sum", "lex"):
        tp.expect("(")
        s1 = _structure(tp)
        tp.expect(",")
        s2 = _structure(tp)
        tp.expect(")")
        return Sum(s1, s2) if head == "sum" else LexProduct(s1, s2)
    if head == "doubled":
        tp.expect("(")
        s1 = _structure(tp)
        tp.expect(")")
        return Doubled(s1)
    raise FormatError(f"unknown structure {head!r}", tp.line, tp.col())


def print_structure(s) -> str:
    if isinstance(s, DenseOrder):
        return "Q"
    if isinstance(s, EqualityAtoms):
        return "eqatoms"
    if isinstance(s, FiniteOrd):
        return "finite(" + ",".join(s.symbols) + ")"
    if isinstance(s, Sum):
        return f"sum({print_structure(s.left)},{print_structure(s.right)})"
    if isinstance(s, LexProduct):
        return f"lex({print_structure(s.outer)},{print_structure(s.inner)})"
    if isinstance(s, Doubled):
        return f"doubled({print_structure(s.base)})"
    raise FormatError(f"unprintable structure {s!r}")


# ---------------------------------------------------------------------------
# atoms and polynomials

def _rational(tp: _Tokens) -> Fraction:
    neg = False
    if tp.peek() == "-":
        tp.next()
        neg = True
    num = tp.next()
    if not num.isdigit():
        raise FormatError(f"expected a number, found {num!r}", tp.line, tp.col())
    val = Fraction(int(num))
    if tp.peek() == "/":
        tp.next()
        den = tp.next()
        if not den.isdigit() or int(den) == 0:
            raise FormatError("invalid denominator", tp.line, tp.col())
        val /= int(den)
    return -val if neg else val


def _atom(s, tp: _Tokens, names=None) -> Atom:
    tok = tp.peek()
    if names and tok in names:
        tp.next()
        return names[tok]
    if isinstance(s, (DenseOrder, EqualityAtoms)):
        tp.expect("a")
        tp.expect("(")
        q = _rational(tp)
        tp.expect(")")
        return s.atom(q)
    if isinstance(s, FiniteOrd):
        sym = tp.next()
        if sym not in s.symbols:
            raise FormatError(f"unknown symbol {sym!r}", tp.line, tp.col())
        return s.atom(sym)
    if isinstance(s, Sum):
        if tok in ("L", "R"):
            side = tp.next()
            tp.expect(".")
            if side == "L":
                return s.atom_left(_atom(s.left, tp, None))
            return s.atom_right(_atom(s.right, tp, None))
        if names is not None:
            # file sugar: unprefixed atoms of the data side
            return s.atom_right(_atom(s.right, tp, None))
        raise FormatError(f"expected L. or R. prefix, found {tok!r}", tp.line, tp.col())
    if isinstance(s, Doubled):
        copy = tp.next()
        if copy not in ("1", "2"):
            raise FormatError("expected copy tag 1. or 2.", tp.line, tp.col())
        tp.expect(".")
        return s.atom(int(copy), _atom(s.base, tp, None))
    if isinstance(s, LexProduct):
        tp.expect("(")
        outer = _atom(s.outer, tp, None)
        tp.expect(",")
        inner = _atom(s.inner, tp, None)
        tp.expect(")")
        return s.atom(outer, inner)
    raise FormatError(f"cannot parse atoms of {s!r}", tp.line)


def _starts_atom(tok) -> bool:
    return tok is not None and (tok == "(" or tok == PLACEHOLDER
                                or _IDENT.match(tok) or tok in ("1", "2"))


def parse_polynomial(s, text, line=None, names=None) -> Polynomial:
    tp = _Tokens(text, line)
    p = _poly(s, tp, names)
    tp.done()
    return p


def _poly(s, tp: _Tokens, names) -> Polynomial:
    acc = {}
    first = True
    while True:
        sign = 1
        tok = tp.peek()
        if tok == "+" or tok == "-":
            tp.next()
            sign = -1 if tok == "-" else 1
        elif not first:
            break
        elif tok is None:
            raise FormatError("empty polynomial", tp.line)
        coeff, mono = _term(s, tp, names)
        mono_key = mono
        acc[mono_key] = acc.get(mono_key, Fraction(0)) + sign * coeff
        first = False
        if tp.peek() not in ("+", "-"):
            break
    return Polynomial.from_dict(s, acc)


def _term(s, tp: _Tokens, names):
    coeff = Fraction(1)
    mono = {}
    tok = tp.peek()
    if tok is not None and tok.isdigit():
        coeff = _rational(tp)
        if tp.peek() == "*":
            tp.next()
        else:
            return coeff, Monomial.unit()
    elif not _starts_atom(tok):
        raise FormatError(f"expected a term, found {tok!r}", tp.line, tp.col())
    while True:
        # a doubled copy tag also starts with a digit; only a bare number is
        # a coefficient, which was consumed above
        a = _atom(s, tp, names)
        e = 1
        if tp.peek() == "^":
            tp.next()
            n = tp.next()
            if not n.isdigit() or int(n) <= 0:
                raise FormatError("exponent must be a positive integer",
                                  tp.line, tp.col())
            e = int(n)
        mono[a] = mono.get(a, 0) + e
        if tp.peek() == "*":
            tp.next()
            continue
        break
    return coeff, Monomial.from_dict(mono)


def parse_monomial(s, text, line=None, names=None) -> Monomial:
    p = parse_polynomial(s, text, line, names)
    if len(p.terms) != 1 or p.terms[0][1] != 1:
        raise FormatError("expected a monomial (single term, coefficient 1)", line)
    return p.terms[0][0]


# ---------------------------------------------------------------------------
# problem files

_SECTIONS = ("generators", "rules")


@dataclass
class IdealFile:
    structure: object
    generators: list


def _file_lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _structure_header(no, line):
    if not line.startswith("structure:"):
        raise FormatError("expected 'structure: <descriptor>'", no)
    return parse_structure(line[len("structure:"):], no)


def parse_ideal_file(text) -> IdealFile:
    structure = None
    gens = []
    section = None
    for no, line in _file_lines(text):
        if structure is None:
            structure = _structure_header(no, line)
            continue
        if line.startswith("generators:"):
            section = "generators"
            rest = line[len("generators:"):].strip()
            if rest:
                gens.append(parse_polynomial(structure, rest, no))
            continue
        if section != "generators":
            raise FormatError("expected 'generators:'", no)
        gens.append(parse_polynomial(structure, line, no))
    if structure is None:
        raise FormatError("missing structure line", 1)
    return IdealFile(structure, gens)


def print_ideal_file(structure, polys) -> str:
    lines = [f"structure: {print_structure(structure)}", "generators:"]
    lines += [render_poly(p) for p in polys]
    return "\n".join(lines) + "\n"


def parse_rewrite_file(text) -> MonomialRewriteSystem:
    structure = None
    rules = []
    for no, line in _file_lines(text):
        if structure is None:
            structure = _structure_header(no, line)
            continue
        if not line.startswith("rule "):
            raise FormatError("expected 'rule <monomial> <-> <monomial>'", no)
        body = line[len("rule "):]
        if "<->" not in body:
            raise FormatError("a rule needs '<->'", no)
        lhs, rhs = body.split("<->", 1)
        rules.append((parse_monomial(structure, lhs, no),
                      parse_monomial(structure, rhs, no)))
    if structure is None:
        raise FormatError("missing structure line", 1)
    if not rules:
        raise FormatError("a rewrite system needs at least one rule", 1)
    return MonomialRewriteSystem(structure, rules)


def print_rewrite_file(R: MonomialRewriteSystem) -> str:
    lines = [f"structure: {print_structure(R.structure)}"]
    for m, n in R.rules:
        lines.append(f"rule {m!r} <-> {n!r}")
    return "\n".join(lines) + "\n"


def parse_automaton_file(text) -> PolynomialAutomaton:
    structure = None
    v_symbols = None
    init = {}
    deltas = {}
    self_template = None
    output = None
    names = {}
    tnames = {}
    data = None

    def template_struct():
        return Sum(FiniteOrd(tuple(v_symbols) + (PLACEHOLDER,)), data)

    for no, line in _file_lines(text):
        if structure is None:
            structure = _structure_header(no, line)
            if not (isinstance(structure, Sum) and isinstance(structure.left, FiniteOrd)):
                raise FormatError("automaton structure must be sum(finite(...), DATA)", no)
            data = structure.right
            continue
        if line.startswith("V:"):
            v_symbols = tuple(x.strip() for x in line[2:].split(",") if x.strip())
            if v_symbols != structure.left.symbols:
                raise FormatError("V must list the left finite symbols in order", no)
            for sym in v_symbols:
                names[sym] = structure.atom_left(structure.left.atom(sym))
                tnames[sym] = template_struct().atom_left(
                    template_struct().left.atom(sym))
            tnames[PLACEHOLDER] = template_struct().atom_left(
                template_struct().left.atom(PLACEHOLDER))
            continue
        if v_symbols is None:
            raise FormatError("expected 'V: <symbols>'", no)
        if line.startswith("init:"):
            for part in line[len("init:"):].split(","):
                part = part.strip()
                if not part:
                    continue
                if "=" not in part:
                    raise FormatError("init entries look like '<atom> = <rational>'", no)
                lhs, rhs = part.split("=", 1)
                tp = _Tokens(lhs, no)
                atom = _atom(structure, tp, names)
                tp.done()
                tpv = _Tokens(rhs, no)
                val = _rational(tpv)
                tpv.done()
                init[atom] = val
            continue
        if line.startswith("delta "):
            body = line[len("delta "):]
            if "<-" not in body:
                raise FormatError("delta lines look like 'delta <reg> <- <poly>'", no)
            reg, poly_text = body.split("<-", 1)
            reg = reg.strip()
            tpl = parse_polynomial(template_struct(), poly_text, no, tnames)
            if reg == "self":
                self_template = tpl
            elif reg in (v_symbols or ()):
                deltas[names[reg]] = tpl
            else:
                raise FormatError(f"unknown register {reg!r}", no)
            continue
        if line.startswith("output:"):
            output = parse_polynomial(structure, line[len("output:"):], no, names)
            continue
        raise FormatError(f"unexpected line {line!r}", no)
    if structure is None:
        raise FormatError("missing structure line", 1)
    if v_symbols is None:
        raise FormatError("missing 'V:' line", 1)
    if output is None:
        raise FormatError("missing 'output:' line", 1)
    return PolynomialAutomaton(data, v_symbols, init, deltas, self_template, output)


def _sugar_poly(A: PolynomialAutomaton, p: Polynomial) -> str:
    """Render dropping the L./R. prefixes that the automaton parser accepts."""
    text = render_poly(p)
    for sym in A.v_symbols + (PLACEHOLDER,):
        text = text.replace(f"L.{sym}", sym)
    return text.replace("R.", "")


def print_automaton_file(A: PolynomialAutomaton) -> str:
    lines = [f"structure: {print_structure(A.structure)}",
             "V: " + ",".join(A.v_symbols)]
    for atom in sorted(A.initial):
        lines.append(f"init: {_sugar_poly(A, Polynomial.atom(A.structure, atom))}"
                     f" = {A.initial[atom]}")
    for v in A.v_atoms:
        if v in A.templates:
            lines.append(f"delta {v.value[1].value} <- "
                         + _sugar_poly(A, A.templates[v]))
    if A.self_template is not None:
        lines.append("delta self <- " + _sugar_poly(A, A.self_template))
    lines.append("output: " + _sugar_poly(A, A.output))
    return "\n".join(lines) + "\n"
