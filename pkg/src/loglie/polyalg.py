"""Exact multivariate polynomial arithmetic over the rationals.

Polynomials are sparse: a mapping from exponent tuples to nonzero Fraction
coefficients, attached to a Ring that fixes the ordered variable names.
Everything is exact; there is no floating point anywhere in this package.

The expression grammar accepted by :func:`parse_polynomial`:

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := rational | var | '(' expr ')'

with whitespace insignificant and rational literals written ``p`` or ``p/q``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from . import ratlp
from .errors import InternalError, ParseError, RingMismatchError

_F0 = Fraction(0)
_F1 = Fraction(1)


# ---------------------------------------------------------------------------
# Monomials: plain exponent tuples.
# ---------------------------------------------------------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b as a monomial, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


def grevlex_key(mono):
    """Sort key realizing graded reverse lexicographic order via max()."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


def monomials_of_weighted_degree(weights, target):
    """All exponent tuples a with sum(weights[i]*a[i]) == target, weights > 0."""
    n = len(weights)
    target = Fraction(target)
    out = []

    def rec(i, rem, prefix):
        if i == n - 1:
            q, r = divmod(rem, weights[i])
            if r == 0 and q >= 0 and q.denominator == 1:
                out.append(prefix + (int(q),))
            return
        e = 0
        while True:
            left = rem - e * weights[i]
            if left < 0:
                break
            rec(i + 1, left, prefix + (e,))
            e += 1

    if n == 0:
        if target == 0:
            out.append(())
    else:
        rec(0, target, ())
    return out


# ---------------------------------------------------------------------------
# Ring and Polynomial.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ring:
    """An ordered tuple of variable names fixing the ambient polynomial ring."""

    variables: tuple

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        for name in names:
            if not name.isidentifier():
                raise ValueError(f"bad variable name {name!r}")

    @property
    def nvars(self):
        return len(self.variables)

    def zero_mono(self):
        return (0,) * self.nvars

    def poly(self, terms):
        clean = {}
        for mono, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff:
                mono = tuple(int(e) for e in mono)
                if len(mono) != self.nvars or any(e < 0 for e in mono):
                    raise ValueError(f"bad exponent tuple {mono}")
                clean[mono] = clean.get(mono, _F0) + coeff
        clean = {m: c for m, c in clean.items() if c}
        return Polynomial(self, clean)

    def const(self, c):
        c = Fraction(c)
        return Polynomial(self, {self.zero_mono(): c} if c else {})

    @property
    def zero(self):
        return self.const(0)

    @property
    def one(self):
        return self.const(1)

    def var(self, i):
        if isinstance(i, str):
            i = self.variables.index(i)
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {mono: _F1})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def parse(self, text):
        return parse_polynomial(text, self)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basics ------------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def constant_term(self):
        return self.terms.get(self.ring.zero_mono(), _F0)

    def total_degree(self):
        return max((mono_deg(m) for m in self.terms), default=-1)

    def order(self):
        """Minimal total degree of a term; +infinity for the zero polynomial."""
        if not self.terms:
            return math.inf
        return min(mono_deg(m) for m in self.terms)

    def weighted_degrees(self, weights):
        return {sum((Fraction(w) * e for w, e in zip(weights, m)), _F0)
                for m in self.terms}

    def leading(self, key=grevlex_key):
        mono = max(self.terms, key=key)
        return mono, self.terms[mono]

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), _F0)

    def degree_in(self, i):
        return max((m[i] for m in self.terms), default=-1)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"rings differ: {self.ring.variables} vs {other.ring.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, _F0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.ring.zero
            return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, _F0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def term_mul(self, mono, coeff):
        coeff = Fraction(coeff)
        if not coeff:
            return self.ring.zero
        mono = tuple(mono)
        return Polynomial(self.ring,
                          {mono_mul(m, mono): c * coeff for m, c in self.terms.items()})

    def exact_div(self, other):
        """Quotient self/other when the division is exact, else None."""
        other = self._coerce(other)
        if other is None or other.is_zero:
            return None
        rem = self
        quot = self.ring.zero
        lt_mono, lt_coeff = other.leading()
        while not rem.is_zero:
            m, c = rem.leading()
            q = mono_div(m, lt_mono)
            if q is None:
                return None
            factor = c / lt_coeff
            quot = quot + Polynomial(self.ring, {q: factor})
            rem = rem - other.term_mul(q, factor)
        return quot

    def derivative(self, i):
        if isinstance(i, str):
            i = self.ring.variables.index(i)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                dm = tuple(e - 1 if j == i else e for j, e in enumerate(m))
                out[dm] = out.get(dm, _F0) + c * m[i]
        return Polynomial(self.ring, {m: c for m, c in out.items() if c})

    def gradient(self):
        return [self.derivative(i) for i in range(self.ring.nvars)]

    def compose(self, images):
        """Substitute images[i] for variable i (same ring)."""
        if len(images) != self.ring.nvars:
            raise ValueError("wrong number of substitution images")
        cache = {}

        def power(i, e):
            if (i, e) not in cache:
                cache[(i, e)] = images[i] ** e
            return cache[(i, e)]

        acc = self.ring.zero
        for m, c in self.terms.items():
            part = self.ring.const(c)
            for i, e in enumerate(m):
                if e:
                    part = part * power(i, e)
            acc = acc + part
        return acc

    # -- comparison and printing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: grevlex_key(mc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for mono, coeff in self.sorted_terms():
            parts = []
            for name, e in zip(self.ring.variables, mono):
                if e == 1:
                    parts.append(name)
                elif e > 1:
                    parts.append(f"{name}^{e}")
            if not parts:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(parts)
            else:
                body = "*".join([str(abs(coeff))] + parts)
            sign = "-" if coeff < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"<poly {self} over {'/'.join(self.ring.variables)}>"


# ---------------------------------------------------------------------------
# Parsing.
# ---------------------------------------------------------------------------

class _Lexer:
    SYMBOLS = "+-*^()/"

    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.tokens = []
        self._scan()
        self.index = 0

    def _scan(self):
        text = self.text
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.tokens.append(("int", text[i:j], i))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.tokens.append(("name", text[i:j], i))
                i = j
                continue
            if ch in self.SYMBOLS:
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", i)
        self.tokens.append(("end", "", len(text)))

    def peek(self):
        return self.tokens[self.index]

    def next(self):
        tok = self.tokens[self.index]
        if tok[0] != "end":
            self.index += 1
        return tok


class _Parser:
    def __init__(self, text, ring):
        self.lex = _Lexer(text)
        self.ring = ring

    def parse(self):
        value = self.expr()
        kind, text, pos = self.lex.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return value

    def expr(self):
        sign = 1
        kind, _, _ = self.lex.peek()
        if kind in "+-":
            self.lex.next()
            sign = -1 if kind == "-" else 1
        value = self.term() * sign
        while True:
            kind, _, _ = self.lex.peek()
            if kind == "+":
                self.lex.next()
                value = value + self.term()
            elif kind == "-":
                self.lex.next()
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while self.lex.peek()[0] == "*":
            self.lex.next()
            value = value * self.factor()
        return value

    def factor(self):
        value = self.base()
        if self.lex.peek()[0] == "^":
            self.lex.next()
            kind, text, pos = self.lex.next()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            value = value ** int(text)
        return value

    def base(self):
        kind, text, pos = self.lex.next()
        if kind == "int":
            value = Fraction(int(text))
            if self.lex.peek()[0] == "/":
                self.lex.next()
                dkind, dtext, dpos = self.lex.next()
                if dkind != "int":
                    raise ParseError("denominator must be an integer", dpos)
                if int(dtext) == 0:
                    raise ParseError("zero denominator", dpos)
                value /= int(dtext)
            return self.ring.const(value)
        if kind == "name":
            if text not in self.ring.variables:
                raise ParseError(f"unknown variable {text!r}", pos)
            return self.ring.var(text)
        if kind == "(":
            value = self.expr()
            ckind, _, _ = self.lex.peek()
            if ckind != ")":
                raise ParseError("unclosed parenthesis", pos)
            self.lex.next()
            return value
        raise ParseError(f"unexpected {text!r}" if text else "unexpected end of input", pos)


def parse_polynomial(text, variables):
    """Parse an expression over the given variables (a Ring or name list)."""
    ring = variables if isinstance(variables, Ring) else Ring(tuple(variables))
    return _Parser(text, ring).parse()


# ---------------------------------------------------------------------------
# Order, quasihomogeneity, reducedness.
# ---------------------------------------------------------------------------

def order_at_origin(p):
    """Minimal total degree among the terms of p; +infinity for p = 0."""
    return p.order()


@dataclass(frozen=True)
class QuasihomogeneousWeights:
    """Strictly positive rational variable weights with min weight 1."""

    weights: tuple
    degree: Fraction


def quasihomogeneous_weights(p):
    """Positive rational weights making p weighted homogeneous, or None.

    Decided exactly: the linear system <w, a> = d over all exponent tuples a
    of p, with w_i >= 1 after scaling, is fed to the rational simplex.  On
    success the weights are normalized so that the minimum weight is 1.
    """
    if p.is_zero:
        raise ValueError("quasihomogeneity is undefined for the zero polynomial")
    n = p.ring.nvars
    exps = sorted(p.terms)
    # Unknowns: w_0..w_{n-1} (>= 1), d (free, index n).
    eqs = []
    for a in exps:
        coeffs = [Fraction(e) for e in a] + [Fraction(-1)]
        eqs.append((coeffs, 0))
    point = ratlp.feasible(n + 1, eq=eqs, lower={i: 1 for i in range(n)}, free={n})
    if point is None:
        return None
    w = point[:n]
    d = point[n]
    scale = min(w)
    w = tuple(v / scale for v in w)
    d = d / scale
    for a in exps:
        if sum((wi * e for wi, e in zip(w, a)), _F0) != d:
            raise InternalError("quasihomogeneity certificate failed to verify")
    return QuasihomogeneousWeights(weights=w, degree=d)


def is_reduced(p):
    """True iff p is squarefree: gcd(p, dp/dx_1, ..., dp/dx_n) is constant."""
    if p.is_constant():
        raise ValueError("reducedness is about nonconstant polynomials")
    g = p
    for i in range(p.ring.nvars):
        g = polynomial_gcd(g, p.derivative(i))
        if g.is_constant() and not g.is_zero:
            return True
    return g.is_constant() and not g.is_zero


# ---------------------------------------------------------------------------
# Multivariate gcd: recursive subresultant remainder sequences with content
# extraction.  Adequate at desk scale (few variables, moderate degree).
# ---------------------------------------------------------------------------

def _vars_present(p):
    used = set()
    for m in p.terms:
        for i, e in enumerate(m):
            if e:
                used.add(i)
    return used


def _univariate_view(p, main):
    """Coefficient polynomials of p seen as univariate in variable `main`."""
    coeffs = {}
    for m, c in p.terms.items():
        e = m[main]
        rest = tuple(0 if i == main else v for i, v in enumerate(m))
        bucket = coeffs.setdefault(e, {})
        bucket[rest] = bucket.get(rest, _F0) + c
    return {e: Polynomial(p.ring, {m: c for m, c in bucket.items() if c})
            for e, bucket in coeffs.items()}


def _from_view(view, main, ring):
    terms = {}
    for e, poly in view.items():
        for m, c in poly.terms.items():
            full = tuple(e if i == main else v for i, v in enumerate(m))
            terms[full] = terms.get(full, _F0) + c
    return Polynomial(ring, {m: c for m, c in terms.items() if c})


def _deg_in(view):
    return max(view, default=-1)


def _content(p, main):
    view = _univariate_view(p, main)
    content = p.ring.zero
    for e in sorted(view, reverse=True):
        content = polynomial_gcd(content, view[e])
        if content.is_constant() and not content.is_zero:
            return p.ring.one
    return content


def _mul_view(view, poly):
    return {e: c * poly for e, c in view.items()}


def _pseudo_rem(A, B, main, ring):
    """Pseudo-remainder of univariate views A, B (dicts degree -> poly)."""
    dA, dB = _deg_in(A), _deg_in(B)
    lcB = B[dB]
    R = dict(A)
    steps = dA - dB + 1
    done = 0
    while R and _deg_in(R) >= dB:
        dR = _deg_in(R)
        lead = R[dR]
        new = {}
        for e, c in R.items():
            new[e] = c * lcB
        for e, c in B.items():
            shifted = e + dR - dB
            new[shifted] = new.get(shifted, ring.zero) - lead * c
        R = {e: c for e, c in new.items() if not c.is_zero}
        done += 1
    if done < steps:
        factor = lcB ** (steps - done)
        R = {e: c * factor for e, c in R.items()}
    return R


def polynomial_gcd(p, q):
    """Exact multivariate gcd, normalized monic w.r.t. grevlex."""
    if p.ring != q.ring:
        raise RingMismatchError("gcd of polynomials over different rings")
    if p.is_zero:
        return _monic(q)
    if q.is_zero:
        return _monic(p)
    used = _vars_present(p) | _vars_present(q)
    if not used:
        return p.ring.one
    main = min(used)
    ring = p.ring

    cp = _content(p, main)
    cq = _content(q, main)
    content_gcd = polynomial_gcd(cp, cq)
    A = _univariate_view(p.exact_div(cp), main)
    B = _univariate_view(q.exact_div(cq), main)
    if _deg_in(A) < _deg_in(B):
        A, B = B, A

    g = ring.one
    h = ring.one
    while True:
        delta = _deg_in(A) - _deg_in(B)
        R = _pseudo_rem(A, B, main, ring)
        if not R:
            break
        if _deg_in(R) == 0:
            B = {0: ring.one}
            break
        divisor = g * h ** delta
        A = B
        B = {e: _exact(c, divisor) for e, c in R.items()}
        g = A[_deg_in(A)]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _exact(g ** delta, h ** (delta - 1))

    result = _from_view(B, main, ring)
    pp = result.exact_div(_content(result, main))
    return _monic(content_gcd * pp)


def _exact(p, q):
    out = p.exact_div(q)
    if out is None:
        raise InternalError("inexact division inside the subresultant sequence")
    return out


def _monic(p):
    if p.is_zero:
        return p
    _, lc = p.leading()
    return p * (1 / lc)
