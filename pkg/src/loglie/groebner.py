"""Buchberger engine for submodules of free modules over Q[x1..xn].

Module elements are tuples of polynomials.  The engine tracks cofactors
exactly (every basis element is stored together with its expression in the
input generators), which is what makes syzygy extraction and membership
certificates possible downstream.

Scale expectations are modest (few variables, moderate degrees), so the
implementation favors clarity and determinism over pair-selection tricks:
all S-pairs are processed, ordered by (lcm, sugar, indices).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import InternalError, NotGradedError, RingMismatchError
from .polyalg import (Polynomial, Ring, grevlex_key, mono_deg, mono_div,
                      mono_lcm, mono_mul, monomials_of_weighted_degree)
from . import ratlp

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class MonomialOrder:
    """Monomial order on the ring, extended term-over-position to modules.

    `weights` selects weighted grevlex (ties broken by plain grevlex);
    `elim` names a set of variable indices to eliminate (block order with the
    named block compared first) -- used by elimination-style oracles.
    """

    weights: tuple = None
    elim: frozenset = None

    def mono_key(self, mono):
        if self.elim is not None:
            inblock = tuple(e if i in self.elim else 0 for i, e in enumerate(mono))
            out = tuple(0 if i in self.elim else e for i, e in enumerate(mono))
            return (grevlex_key(inblock), grevlex_key(out))
        if self.weights is not None:
            wd = sum((Fraction(w) * e for w, e in zip(self.weights, mono)), _F0)
            return (wd, grevlex_key(mono))
        return grevlex_key(mono)

    def term_key(self, mono, comp):
        # Term over position; lower component index wins ties.
        return (self.mono_key(mono), -comp)


GREVLEX = MonomialOrder()


class VecPoly:
    """An element of the free module O^r: a tuple of polynomials."""

    __slots__ = ("ring", "comps", "_hash")

    def __init__(self, comps):
        comps = tuple(comps)
        if not comps:
            raise ValueError("rank-zero module element")
        ring = comps[0].ring
        for c in comps:
            if c.ring != ring:
                raise RingMismatchError("mixed rings inside a module element")
        self.ring = ring
        self.comps = comps
        self._hash = None

    @classmethod
    def wrap(cls, poly):
        return cls((poly,))

    @property
    def rank(self):
        return len(self.comps)

    @property
    def is_zero(self):
        return all(c.is_zero for c in self.comps)

    def __add__(self, other):
        return VecPoly(a + b for a, b in zip(self.comps, other.comps))

    def __sub__(self, other):
        return VecPoly(a - b for a, b in zip(self.comps, other.comps))

    def __neg__(self):
        return VecPoly(-a for a in self.comps)

    def scale(self, c):
        return VecPoly(a * c for a in self.comps)

    def term_mul(self, mono, coeff):
        return VecPoly(a.term_mul(mono, coeff) for a in self.comps)

    def poly_mul(self, p):
        return VecPoly(a * p for a in self.comps)

    def terms(self):
        for comp, poly in enumerate(self.comps):
            for mono, coeff in poly.terms.items():
                yield (mono, comp), coeff

    def leading(self, order):
        best = None
        best_key = None
        for (mono, comp), coeff in self.terms():
            key = order.term_key(mono, comp)
            if best_key is None or key > best_key:
                best_key = key
                best = ((mono, comp), coeff)
        if best is None:
            raise ValueError("leading term of zero")
        return best

    def coefficient(self, mono, comp):
        return self.comps[comp].coefficient(mono)

    def __eq__(self, other):
        return isinstance(other, VecPoly) and self.comps == other.comps

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.comps)
        return self._hash

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.comps) + ")"

    def max_degree(self):
        return max((c.total_degree() for c in self.comps if not c.is_zero), default=-1)


def _as_vecpoly(e):
    if isinstance(e, VecPoly):
        return e
    if isinstance(e, Polynomial):
        return VecPoly.wrap(e)
    return VecPoly(e)


@dataclass
class GroebnerBasis:
    """Reduced basis together with exact cofactors over the inputs."""

    elements: list
    cofactors: list          # elements[i] == sum_j cofactors[i][j] * gens[j]
    gens: list
    order: MonomialOrder
    _leads: list = field(default_factory=list)

    def __post_init__(self):
        if not self._leads:
            self._leads = [g.leading(self.order) for g in self.elements]

    def verify_cofactors(self):
        ring = self.gens[0].ring
        for elem, row in zip(self.elements, self.cofactors):
            acc = VecPoly(ring.zero for _ in range(self.gens[0].rank))
            for cof, gen in zip(row, self.gens):
                acc = acc + gen.poly_mul(cof)
            if acc != elem:
                raise InternalError("cofactor identity failed for a basis element")
        return True


def _reduce_full(e, basis, leads, order, ring):
    """Full normal form of e against basis.  Returns (remainder, cofactors)."""
    cofs = [ring.zero for _ in basis]
    remainder_terms = {}
    work = e
    while not work.is_zero:
        (mono, comp), coeff = work.leading(order)
        hit = -1
        for i, ((lmono, lcomp), lcoeff) in enumerate(leads):
            if lcomp != comp:
                continue
            q = mono_div(mono, lmono)
            if q is not None:
                hit = i
                factor = coeff / lcoeff
                cofs[i] = cofs[i] + Polynomial(ring, {q: factor})
                work = work - basis[i].term_mul(q, factor)
                break
        if hit < 0:
            remainder_terms[(mono, comp)] = coeff
            # move the irreducible leading term out of the working element
            work = work - VecPoly(
                Polynomial(ring, {mono: coeff}) if j == comp else ring.zero
                for j in range(work.rank))
    rem_comps = []
    for j in range(e.rank):
        terms = {m: c for (m, cc), c in remainder_terms.items() if cc == j}
        rem_comps.append(Polynomial(ring, terms))
    return VecPoly(rem_comps), cofs


def buchberger(gens, order=GREVLEX):
    """Reduced Groebner basis with exact cofactor tracking.

    Deterministic: pairs are processed by (lcm key, sugar degree, indices);
    the final basis is inter-reduced, tail-reduced and monic, so the result
    depends only on the generators and the order.
    """
    gens = [_as_vecpoly(g) for g in gens]
    if not gens:
        raise ValueError("empty generator list")
    rank = gens[0].rank
    for g in gens:
        if g.rank != rank:
            raise ValueError("generators of mixed rank")
    ring = gens[0].ring

    basis = []
    cofrows = []
    sugars = []
    leads = []

    def push_pairs(j):
        (monoj, compj), _ = leads[j]
        for i in range(j):
            (monoi, compi), _ = leads[i]
            if compi != compj:
                continue
            lcm = mono_lcm(monoi, monoj)
            sugar = max(sugars[i] + mono_deg(lcm) - mono_deg(monoi),
                        sugars[j] + mono_deg(lcm) - mono_deg(monoj))
            heapq.heappush(pairs, (order.mono_key(lcm), sugar, i, j))

    pairs = []
    for idx, g in enumerate(gens):
        if g.is_zero:
            continue
        (mono, comp), coeff = g.leading(order)
        row = [ring.one if j == idx else ring.zero for j in range(len(gens))]
        basis.append(g.scale(1 / coeff))
        cofrows.append([c * (1 / coeff) for c in row])
        sugars.append(g.max_degree())
        leads.append(basis[-1].leading(order))
        push_pairs(len(basis) - 1)

    if not basis:
        raise ValueError("all generators are zero")

    while pairs:
        _, sugar, i, j = heapq.heappop(pairs)
        (monoi, compi), _ = leads[i]
        (monoj, compj), _ = leads[j]
        lcm = mono_lcm(monoi, monoj)
        ui = mono_div(lcm, monoi)
        uj = mono_div(lcm, monoj)
        s = basis[i].term_mul(ui, _F1) - basis[j].term_mul(uj, _F1)
        if s.is_zero:
            continue
        rem, cofs = _reduce_full(s, basis, leads, order, ring)
        if rem.is_zero:
            continue
        row = [ring.zero] * len(gens)
        for k in range(len(gens)):
            acc = cofrows[i][k].term_mul(ui, _F1) - cofrows[j][k].term_mul(uj, _F1)
            for b, cof in enumerate(cofs):
                if not cof.is_zero:
                    acc = acc - cof * cofrows[b][k]
            row[k] = acc
        (_, _), lc = rem.leading(order)
        basis.append(rem.scale(1 / lc))
        cofrows.append([c * (1 / lc) for c in row])
        sugars.append(max(sugar, rem.max_degree()))
        leads.append(basis[-1].leading(order))
        push_pairs(len(basis) - 1)

    # Minimalize: drop elements whose leading term another one divides.
    keep = []
    for i in range(len(basis)):
        (monoi, compi), _ = leads[i]
        redundant = False
        for j in range(len(basis)):
            if i == j:
                continue
            (monoj, compj), _ = leads[j]
            if compj == compi and mono_div(monoi, monoj) is not None:
                if mono_div(monoj, monoi) is not None and j > i:
                    continue  # equal leading terms: keep the earlier one
                redundant = True
                break
        if not redundant:
            keep.append(i)
    basis = [basis[i] for i in keep]
    cofrows = [cofrows[i] for i in keep]
    leads = [leads[i] for i in keep]

    # Tail-reduce every element against the others (reduced basis).
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            other_leads = leads[:i] + leads[i + 1:]
            rem, cofs = _reduce_full(basis[i], others, other_leads, order, ring)
            if rem != basis[i]:
                changed = True
                row = list(cofrows[i])
                other_rows = cofrows[:i] + cofrows[i + 1:]
                for cof, orow in zip(cofs, other_rows):
                    if not cof.is_zero:
                        row = [r - cof * o for r, o in zip(row, orow)]
                (_, _), lc = rem.leading(order)
                basis[i] = rem.scale(1 / lc)
                cofrows[i] = [c * (1 / lc) for c in row]
                leads[i] = basis[i].leading(order)

    order_idx = sorted(range(len(basis)), key=lambda i: order.term_key(*leads[i][0]))
    basis = [basis[i] for i in order_idx]
    cofrows = [cofrows[i] for i in order_idx]
    return GroebnerBasis(elements=basis, cofactors=cofrows, gens=gens, order=order)


def normal_form(e, gb):
    """Unique remainder of e modulo gb, plus cofactors over gb.elements."""
    e = _as_vecpoly(e)
    ring = e.ring
    return _reduce_full(e, gb.elements, gb._leads, gb.order, ring)


def express_in_gens(cofs_over_basis, gb):
    """Convert cofactors over gb.elements into cofactors over gb.gens."""
    ring = gb.gens[0].ring
    out = [ring.zero] * len(gb.gens)
    for cof, row in zip(cofs_over_basis, gb.cofactors):
        if not cof.is_zero:
            for k in range(len(out)):
                if not row[k].is_zero:
                    out[k] = out[k] + cof * row[k]
    return out


def module_membership(e, gens, order=GREVLEX, gb=None):
    """Cofactors expressing e over gens, or None when e is not in the module."""
    e = _as_vecpoly(e)
    if gb is None:
        gb = buchberger(gens, order)
    rem, cofs = normal_form(e, gb)
    if not rem.is_zero:
        return None
    out = express_in_gens(cofs, gb)
    acc = VecPoly(e.ring.zero for _ in range(e.rank))
    for cof, gen in zip(out, gb.gens):
        acc = acc + gen.poly_mul(cof)
    if acc != e:
        raise InternalError("membership cofactors failed to re-expand")
    return out


def syzygies(gens, order=GREVLEX):
    """Generating set of the syzygy module of gens, via S-vector reductions.

    For the reduced basis G = A.gens the relations come from every same-
    component S-pair of G (Schreyer), composed with A; the rows of I - B.A,
    where gens = B.G, complete them to a generating set over the inputs.
    """
    gens = [_as_vecpoly(g) for g in gens]
    ring = gens[0].ring
    s = len(gens)
    gb = buchberger(gens, order)
    basis, leads = gb.elements, gb._leads
    out = []
    seen = set()

    def emit(vec):
        if vec.is_zero:
            return
        (_, _), lc = vec.leading(order)
        vec = vec.scale(1 / lc)
        if vec not in seen:
            seen.add(vec)
            out.append(vec)

    for j in range(len(basis)):
        (monoj, compj), _ = leads[j]
        for i in range(j):
            (monoi, compi), _ = leads[i]
            if compi != compj:
                continue
            lcm = mono_lcm(monoi, monoj)
            ui = mono_div(lcm, monoi)
            uj = mono_div(lcm, monoj)
            svec = basis[i].term_mul(ui, _F1) - basis[j].term_mul(uj, _F1)
            rem, cofs = _reduce_full(svec, basis, leads, order, ring)
            if not rem.is_zero:
                raise InternalError("S-vector of a Groebner basis did not reduce to zero")
            # Syzygy of the basis: ui e_i - uj e_j - cofs.
            over_basis = [ring.zero] * len(basis)
            over_basis[i] = Polynomial(ring, {ui: _F1})
            over_basis[j] = over_basis[j] - Polynomial(ring, {uj: _F1})
            for b in range(len(basis)):
                if not cofs[b].is_zero:
                    over_basis[b] = over_basis[b] - cofs[b]
            row = [ring.zero] * s
            for b, cof in enumerate(over_basis):
                if not cof.is_zero:
                    for k in range(s):
                        if not gb.cofactors[b][k].is_zero:
                            row[k] = row[k] + cof * gb.cofactors[b][k]
            emit(VecPoly(row))

    # Rows of I - B.A where gens = B.basis.
    for idx, g in enumerate(gens):
        rem, cofs = normal_form(g, gb)
        if not rem.is_zero:
            raise InternalError("an input generator failed to reduce to zero")
        row = [ring.one if k == idx else ring.zero for k in range(s)]
        expressed = express_in_gens(cofs, gb)
        row = [r - e for r, e in zip(row, expressed)]
        emit(VecPoly(row))

    for syz in out:
        acc = VecPoly(ring.zero for _ in range(gens[0].rank))
        for cof, gen in zip(syz.comps, gens):
            acc = acc + gen.poly_mul(cof)
        if not acc.is_zero:
            raise InternalError("a computed syzygy does not annihilate the generators")
    return out


# ---------------------------------------------------------------------------
# Graded minimal generators (Nakayama, by exact linear algebra per degree).
# ---------------------------------------------------------------------------

@dataclass
class Grading:
    """Positive variable weights plus one rational shift per module component."""

    weights: tuple
    shifts: tuple

    def degree_of(self, vec):
        """Common degree of a homogeneous element, or None."""
        degs = set()
        for (mono, comp), _ in vec.terms():
            d = sum((Fraction(w) * e for w, e in zip(self.weights, mono)), _F0)
            degs.add(d + Fraction(self.shifts[comp]))
        if len(degs) > 1:
            return None
        return degs.pop() if degs else None


def detect_grading(gens):
    """Find positive weights and shifts making every generator homogeneous.

    Solved exactly as rational LP feasibility (weights >= 1, shifts and
    per-generator degrees free, first shift pinned to 0).  Returns a Grading
    or None.
    """
    gens = [_as_vecpoly(g) for g in gens]
    n = gens[0].ring.nvars
    r = gens[0].rank
    s = len(gens)
    # Unknowns: w (n), shifts t (r), degrees e (s).
    nvars = n + r + s
    eqs = [([_F0] * n + [_F1 if c == 0 else _F0 for c in range(r)] + [_F0] * s, 0)]
    for j, g in enumerate(gens):
        for (mono, comp), _ in g.terms():
            coeffs = [Fraction(e) for e in mono]
            coeffs += [_F1 if c == comp else _F0 for c in range(r)]
            coeffs += [Fraction(-1) if k == j else _F0 for k in range(s)]
            eqs.append((coeffs, 0))
    point = ratlp.feasible(nvars, eq=eqs,
                           lower={i: 1 for i in range(n)},
                           free=set(range(n, nvars)))
    if point is None:
        return None
    return Grading(weights=tuple(point[:n]), shifts=tuple(point[n:n + r]))


@dataclass
class MinimalGenerators:
    kept: list               # indices into the input list
    elements: list           # the kept VecPoly, in processing order
    grading: Grading
    degrees: list            # degree of each kept element
    discarded: dict          # index -> cofactor list over the input gens


def minimal_generators(gens, grading=None):
    """Minimal generating subset of a graded submodule of O^r.

    Requires every component of every generator to be in the maximal ideal
    and a positive grading making all generators homogeneous (detected when
    not supplied, else NotGradedError).  Redundancy of a generator g of
    degree d is membership of g in (span of kept generators of degree d)
    plus the degree-d slice of m*M; both are finite dimensional, so this is
    exact linear algebra, and the kept count is dim M/mM.
    """
    gens = [_as_vecpoly(g) for g in gens]
    ring = gens[0].ring
    for g in gens:
        for comp in g.comps:
            if comp.constant_term():
                raise ValueError("minimal_generators needs components in the maximal ideal")
    if grading is None:
        grading = detect_grading(gens)
        if grading is None:
            raise NotGradedError("no positive grading makes the generators homogeneous")
    degrees = []
    for g in gens:
        d = grading.degree_of(g)
        if d is None:
            raise NotGradedError("a generator is not homogeneous for the given grading")
        degrees.append(d)

    order_idx = sorted(range(len(gens)), key=lambda i: (degrees[i], i))
    kept = []
    discarded = {}
    by_degree = {}
    for i in order_idx:
        by_degree.setdefault(degrees[i], []).append(i)

    for d in sorted(by_degree):
        # Basis of the coordinate space of homogeneous degree-d elements that
        # can actually appear: collect coordinates lazily.
        span_vectors = []   # (vector, tag) with tag identifying the source
        coords = {}

        def coord(key):
            if key not in coords:
                coords[key] = len(coords)
            return coords[key]

        def to_dense(vec):
            dense = {}
            for (mono, comp), c in vec.terms():
                dense[coord((mono, comp))] = c
            return dense

        # The degree-d slice of m*M: monomial multiples of every generator.
        mm_sources = []
        for j, g in enumerate(gens):
            gap = d - degrees[j]
            if gap <= 0:
                continue
            for mono in monomials_of_weighted_degree(grading.weights, gap):
                if not any(mono):
                    continue
                mm_sources.append((g.term_mul(mono, _F1), ("m", j, mono)))
        dense_list = [(to_dense(v), tag, v) for v, tag in mm_sources]

        candidates = by_degree[d]
        cand_dense = {i: to_dense(gens[i]) for i in candidates}
        width = len(coords)

        def densify(sparse):
            out = [_F0] * width
            for k, c in sparse.items():
                out[k] = c
            return out

        space = linalg.Subspace(dim=width if width else 1)
        pool = []            # (dense vector, tag)
        for sparse, tag, _ in dense_list:
            vec = densify(sparse)
            if space.add(vec):
                pool.append((vec, tag))
        kept_here = []
        for i in candidates:
            vec = densify(cand_dense[i])
            if space.add(vec):
                kept.append(i)
                kept_here.append(i)
                pool.append((vec, ("g", i, None)))
            else:
                combo = linalg.coordinates_in([p for p, _ in pool], vec)
                if combo is None:
                    raise InternalError("redundant generator has no expression")
                row = [ring.zero] * len(gens)
                for coeff, (_, tag) in zip(combo, pool):
                    if not coeff:
                        continue
                    kind, j, mono = tag
                    term = (Polynomial(ring, {mono: coeff}) if kind == "m"
                            else ring.const(coeff))
                    row[j] = row[j] + term
                discarded[i] = row
        # Re-check: every discarded expression re-expands exactly.
        for i, row in list(discarded.items()):
            if degrees[i] != d:
                continue
            acc = VecPoly(ring.zero for _ in range(gens[0].rank))
            for cof, g in zip(row, gens):
                acc = acc + g.poly_mul(cof)
            if acc != gens[i]:
                raise InternalError("discard record failed to re-expand")

    kept.sort()
    return MinimalGenerators(kept=kept,
                             elements=[gens[i] for i in kept],
                             grading=grading,
                             degrees=[degrees[i] for i in kept],
                             discarded=discarded)


# ---------------------------------------------------------------------------
# Krull dimension of V(I) from the leading-term ideal.
# ---------------------------------------------------------------------------

def ideal_dimension(gens, order=GREVLEX):
    """Dimension of the vanishing locus of the ideal, -infinity when empty.

    Computed as the maximal size of a variable subset S such that no leading
    monomial of a Groebner basis is supported inside S.
    """
    polys = [g for g in gens if not (isinstance(g, Polynomial) and g.is_zero)]
    if not polys:
        ring = gens[0].ring if gens else None
        if ring is None:
            raise ValueError("ideal_dimension of an empty generator list")
        return ring.nvars
    ring = polys[0].ring
    gb = buchberger([VecPoly.wrap(p) for p in polys], order)
    lead_monos = []
    for elem in gb.elements:
        (mono, _), _ = elem.leading(order)
        if not any(mono):
            return -math.inf  # unit ideal
        lead_monos.append(mono)
    n = ring.nvars
    supports = [frozenset(i for i, e in enumerate(mono) if e) for mono in lead_monos]
    from itertools import combinations
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            sset = set(subset)
            if all(not supp <= sset for supp in supports):
                return size
    return -math.inf
