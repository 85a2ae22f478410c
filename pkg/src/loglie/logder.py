"""Logarithmic vector fields of a hypersurface and their initial Lie algebra.

The module of vector fields preserving the ideal of f is computed from the
syzygies of (df/dx_1, ..., df/dx_n, f): a relation sum a_i df/dx_i + c f = 0
is exactly the field sum a_i d_i with cofactor -c.  In the graded case the
generators are minimalized, which pins down the finite-dimensional quotient
by the maximal-ideal multiples, its structure constants, and the linear
parts acting on the cotangent space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import groebner, liealg, linalg
from .errors import (InternalError, NotIsolatedError, NotReducedError,
                     RingMismatchError, SmoothFactorError)
from .groebner import (GREVLEX, Grading, VecPoly, buchberger, ideal_dimension,
                       minimal_generators, module_membership, normal_form,
                       syzygies)
from .polyalg import (Polynomial, Ring, is_reduced, order_at_origin,
                      quasihomogeneous_weights)

_F0 = Fraction(0)
_F1 = Fraction(1)


class VectorField:
    """A polynomial vector field sum a_i d/dx_i, exact throughout."""

    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        ring = coeffs[0].ring
        if len(coeffs) != ring.nvars:
            raise ValueError("a vector field needs one coefficient per variable")
        for c in coeffs:
            if c.ring != ring:
                raise RingMismatchError("mixed rings inside a vector field")
        self.ring = ring
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def from_vecpoly(cls, v):
        return cls(v.comps)

    def to_vecpoly(self):
        return VecPoly(self.coeffs)

    @property
    def is_zero(self):
        return all(c.is_zero for c in self.coeffs)

    def apply(self, p):
        if p.ring != self.ring:
            raise RingMismatchError("field and polynomial over different rings")
        acc = self.ring.zero
        for i, a in enumerate(self.coeffs):
            if not a.is_zero:
                acc = acc + a * p.derivative(i)
        return acc

    def bracket(self, other):
        if other.ring != self.ring:
            raise RingMismatchError("bracket of fields over different rings")
        return VectorField(self.apply(other.coeffs[j]) - other.apply(self.coeffs[j])
                           for j in range(self.ring.nvars))

    def __add__(self, other):
        return VectorField(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        return VectorField(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return VectorField(-a for a in self.coeffs)

    def scale(self, c):
        return VectorField(a * c for a in self.coeffs)

    def poly_mul(self, p):
        return VectorField(a * p for a in self.coeffs)

    def order(self):
        return min((c.order() for c in self.coeffs), default=math.inf)

    def truncate(self, maxdeg):
        """Drop all coefficient terms of total degree above maxdeg."""
        return VectorField(
            Polynomial(self.ring, {m: co for m, co in c.terms.items()
                                   if sum(m) <= maxdeg})
            for c in self.coeffs)

    def linear_part(self):
        """Matrix of the induced action on the cotangent space m/m^2.

        Column j holds the coordinates of the image of x_j, so the matrix is
        the transposed Jacobian of the coefficients at the origin; the map
        field -> matrix is then a Lie algebra homomorphism.
        """
        n = self.ring.nvars
        out = linalg.zeros(n, n)
        for j, a in enumerate(self.coeffs):
            for k in range(n):
                mono = tuple(1 if t == k else 0 for t in range(n))
                out[k][j] = a.coefficient(mono)
        return out

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __str__(self):
        parts = []
        for name, c in zip(self.ring.variables, self.coeffs):
            if c.is_zero:
                continue
            parts.append(f"({c})*D{name}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"<field {self}>"


def apply(v, p):
    return v.apply(p)


def bracket(v, w):
    return v.bracket(w)


def euler_field(ring, weights=None):
    coeffs = []
    for i in range(ring.nvars):
        w = Fraction(weights[i]) if weights is not None else _F1
        coeffs.append(ring.var(i) * w)
    return VectorField(coeffs)


@dataclass
class LogDerivationModule:
    """Generators of the logarithmic derivation module of f.

    `cofactors[i]` is the polynomial g with generators[i](f) = g * f.  In the
    graded case the generators are minimal and sorted by (degree, coefficient
    order); otherwise they are the raw syzygy projections and `graded` is
    False.
    """

    f: Polynomial
    generators: list
    cofactors: list
    graded: bool
    grading: Grading = None
    qh: object = None
    flags: list = field(default_factory=list)

    @property
    def ring(self):
        return self.f.ring

    def generator_vecpolys(self):
        return [g.to_vecpoly() for g in self.generators]


def _field_sort_key(vec, grading):
    degree = grading.degree_of(vec) if grading else vec.max_degree()
    terms = sorted(((comp, mono, coeff) for (mono, comp), coeff in vec.terms()))
    return (degree, terms)


def logarithmic_derivations(f):
    """Generators of {theta : theta(f) in (f)}, with exact cofactors.

    Needs f nonconstant, vanishing at the origin and reduced.  Obtained from
    a generating set of syzygies of the partials extended by f, projected to
    the first n components; when a positive grading exists the generators
    are minimalized, otherwise the module is flagged as non-graded.
    """
    ring = f.ring
    if f.is_constant():
        raise ValueError("the defining polynomial must be nonconstant")
    if f.constant_term():
        raise ValueError("the defining polynomial must vanish at the origin")
    if not is_reduced(f):
        raise NotReducedError("the defining polynomial has a repeated factor")

    partials = f.gradient()
    column = [VecPoly.wrap(p) for p in partials] + [VecPoly.wrap(f)]
    relations = syzygies(column)
    n = ring.nvars

    raw = []
    seen = set()
    for rel in relations:
        theta = VecPoly(rel.comps[:n])
        if theta.is_zero:
            continue
        cof = -rel.comps[n]
        key = theta.scale(1 / theta.leading(GREVLEX)[1])
        if key in seen:
            continue
        seen.add(key)
        raw.append((theta, cof))

    flags = []
    qh = quasihomogeneous_weights(f)
    in_maximal_ideal = all(not c.constant_term()
                           for theta, _ in raw for c in theta.comps)
    if not in_maximal_ideal:
        # Product with a smooth factor: keep the raw generators so that the
        # product test can report the refusal; minimality is meaningless here.
        gens = [VectorField.from_vecpoly(t) for t, _ in raw]
        cofs = [c for _, c in raw]
        return LogDerivationModule(f=f, generators=gens, cofactors=cofs,
                                   graded=False, grading=None, qh=qh, flags=flags)
    grading = None
    if qh is not None:
        grading = Grading(weights=qh.weights,
                          shifts=tuple(-w for w in qh.weights))
        for theta, _ in raw:
            if grading.degree_of(theta) is None:
                grading = None  # should not happen for quasihomogeneous f
                break
    else:
        flags.append("global approximation")
        grading = groebner.detect_grading([t for t, _ in raw])

    if grading is None:
        gens = [VectorField.from_vecpoly(t) for t, _ in raw]
        cofs = [c for _, c in raw]
        return LogDerivationModule(f=f, generators=gens, cofactors=cofs,
                                   graded=False, grading=None, qh=qh, flags=flags)

    minimal = minimal_generators([t for t, _ in raw], grading=grading)
    picked = [(raw[i][0], raw[i][1]) for i in minimal.kept]
    picked.sort(key=lambda tc: _field_sort_key(tc[0], grading))
    gens = [VectorField.from_vecpoly(t) for t, _ in picked]
    cofs = [c for _, c in picked]
    module = LogDerivationModule(f=f, generators=gens, cofactors=cofs,
                                 graded=True, grading=grading, qh=qh, flags=flags)
    for g, c in zip(module.generators, module.cofactors):
        if g.apply(f) != c * f:
            raise InternalError("a logarithmic generator lost its cofactor")
    return module


def product_test(module):
    """True iff every generator coefficient vanishes at the origin.

    Failure means the hypersurface is a product with a smooth factor, and
    the finite-dimensional quotient theory does not apply.
    """
    for g in module.generators:
        for c in g.coeffs:
            if c.constant_term():
                return False
    return True


@dataclass
class InitialLieData:
    """The finite-dimensional quotient of the logarithmic module.

    `lie` holds exact structure constants on the minimal generators;
    `lambda0[i]` is the linear part of generator i acting on m/m^2;
    `kernel_dim` is the dimension drop of that linear projection.
    """

    lie: liealg.LieAlgebra
    lambda0: list
    kernel_dim: int
    module: LogDerivationModule

    @property
    def dim(self):
        return self.lie.dim

    def matrix_of(self, coords):
        n = self.module.ring.nvars
        out = linalg.zeros(n, n)
        for c, m in zip(coords, self.lambda0):
            if c:
                out = linalg.mat_add(out, linalg.mat_scale(m, c))
        return out


def initial_lie_algebra(module):
    """Structure constants of the quotient by maximal-ideal multiples.

    Each commutator of minimal generators is expanded through the Groebner
    basis of the module; evaluating the cofactors at the origin yields the
    structure constants, well defined because graded minimal generators give
    a minimal presentation.
    """
    if not product_test(module):
        raise SmoothFactorError("module contains a unit-coefficient field")
    if not module.graded:
        from .errors import NotGradedError
        raise NotGradedError("structure constants need graded minimal generators")
    gens = module.generator_vecpolys()
    s = len(gens)
    gb = buchberger(gens, GREVLEX)
    brackets = {}
    for i in range(s):
        for j in range(i + 1, s):
            br = module.generators[i].bracket(module.generators[j])
            rem, cofs = normal_form(br.to_vecpoly(), gb)
            if not rem.is_zero:
                raise InternalError("bracket not in module")
            over_gens = groebner.express_in_gens(cofs, gb)
            consts = [c.constant_term() for c in over_gens]
            if any(consts):
                brackets[(i, j)] = consts
    labels = tuple(f"g{i+1}" for i in range(s))
    lie = liealg.LieAlgebra(s, brackets, labels=labels, check=True)
    lambda0 = [g.linear_part() for g in module.generators]
    flats = [[v for row in m for v in row] for m in lambda0]
    image_dim = len(liealg.span_flat_basis(flats, module.ring.nvars ** 2))
    data = InitialLieData(lie=lie, lambda0=lambda0,
                          kernel_dim=s - image_dim, module=module)
    _check_linear_shadow(data)
    return data


def _check_linear_shadow(data):
    """The linear-part map must be a Lie algebra homomorphism."""
    s = data.dim
    for i in range(s):
        for j in range(i + 1, s):
            coords = data.lie.table[i][j]
            expected = data.matrix_of(coords)
            got = linalg.mat_sub(linalg.mat_mul(data.lambda0[i], data.lambda0[j]),
                                 linalg.mat_mul(data.lambda0[j], data.lambda0[i]))
            if expected != got:
                raise InternalError("linear parts are not a Lie homomorphism")


@dataclass
class FreeCertificate:
    determinant: Polynomial
    unit: Polynomial


def saito_freeness(module):
    """Determinant test for freeness of the module.

    Present iff there are exactly n generators whose coefficient matrix has
    determinant u*f with u a unit (nonzero at the origin).  The certificate
    stores both the determinant and u.
    """
    ring = module.ring
    n = ring.nvars
    if len(module.generators) != n:
        return None
    matrix = [list(g.coeffs) for g in module.generators]
    d = poly_determinant(matrix)
    if d.is_zero:
        return None
    unit = d.exact_div(module.f)
    if unit is None or not unit.constant_term():
        return None
    return FreeCertificate(determinant=d, unit=unit)


def poly_determinant(matrix):
    """Exact determinant of a square polynomial matrix (Laplace with memo)."""
    n = len(matrix)
    ring = matrix[0][0].ring
    memo = {}

    def minor(rows, cols):
        key = (rows, cols)
        if key in memo:
            return memo[key]
        if len(rows) == 1:
            out = matrix[rows[0]][cols[0]]
        else:
            out = ring.zero
            r = rows[0]
            rest = rows[1:]
            for idx, c in enumerate(cols):
                entry = matrix[r][c]
                if entry.is_zero:
                    continue
                sub = minor(rest, cols[:idx] + cols[idx + 1:])
                term = entry * sub
                out = out + term if idx % 2 == 0 else out - term
        memo[key] = out
        return out

    return minor(tuple(range(n)), tuple(range(n)))


def euler_split(module):
    """(euler, annihilators) for quasihomogeneous f, None otherwise.

    The Euler field is scaled so that euler(f) = f; subtracting cofactor
    multiples of it turns every other generator into an annihilator of f.
    """
    qh = module.qh
    if qh is None:
        return None
    euler = euler_field(module.ring, qh.weights).scale(1 / qh.degree)
    if euler.apply(module.f) != module.f:
        raise InternalError("normalized Euler field does not satisfy e(f) = f")
    annihilators = []
    for g, cof in zip(module.generators, module.cofactors):
        adjusted = g - euler.poly_mul(cof)
        if adjusted.is_zero:
            continue
        if not adjusted.apply(module.f).is_zero:
            raise InternalError("adjusted generator fails to annihilate f")
        annihilators.append(adjusted)
    return euler, annihilators


def koszul_fields(f):
    """The antisymmetric fields df/dx_i * d_j - df/dx_j * d_i, i < j.

    Requires an isolated singularity; each returned field annihilates f, and
    for isolated singularities they generate the annihilator submodule.
    """
    ring = f.ring
    partials = f.gradient()
    if ideal_dimension([f] + partials) != 0:
        raise NotIsolatedError("the singular locus is not a point")
    out = []
    n = ring.nvars
    for i in range(n):
        for j in range(i + 1, n):
            coeffs = [ring.zero] * n
            coeffs[j] = partials[i]
            coeffs[i] = -partials[j]
            field_ij = VectorField(coeffs)
            if not field_ij.apply(f).is_zero:
                raise InternalError("a Koszul field fails to annihilate f")
            out.append(field_ij)
    return out


def jet_truncation(module, k, cap=6):
    """The finite-dimensional Lie algebra of k-jets of the module.

    Basis: linearly independent degree <= k+1 coefficient truncations of
    monomial multiples x^a * g_i with |a| <= k; the bracket is the truncated
    commutator, well defined because all coefficients sit in the maximal
    ideal.
    """
    if k < 0:
        raise ValueError("jet order must be non-negative")
    if k > cap:
        raise ValueError(f"jet order {k} exceeds the configured cap {cap}")
    if not product_test(module):
        raise SmoothFactorError("jets need all generators inside the maximal ideal")
    ring = module.ring
    n = ring.nvars
    maxdeg = k + 1

    from itertools import product as iproduct
    monos = [m for m in iproduct(range(k + 1), repeat=n) if sum(m) <= k]
    monos.sort(key=lambda m: (sum(m), m))

    all_monos = [m for m in iproduct(range(maxdeg + 1), repeat=n) if sum(m) <= maxdeg]
    all_monos.sort(key=lambda m: (sum(m), m))
    coords = {(comp, mono): idx
              for idx, (comp, mono) in enumerate(
                  (c, m) for c in range(n) for m in all_monos)}

    def flat(vf):
        vec = {}
        for comp, poly in enumerate(vf.coeffs):
            for mono, c in poly.terms.items():
                vec[coords[(comp, mono)]] = c
        return vec

    reps = []
    sparse = []
    for i, g in enumerate(module.generators):
        for mono in monos:
            candidate = g.poly_mul(Polynomial(ring, {mono: _F1})).truncate(maxdeg)
            if candidate.is_zero:
                continue
            reps.append(candidate)
            sparse.append(flat(candidate))
    width = len(coords)

    def dense(v):
        out = [_F0] * width
        for idx, c in v.items():
            out[idx] = c
        return out

    basis_fields = []
    space = linalg.Subspace(dim=width if width else 1)
    for rep, sp in zip(reps, sparse):
        if space.add(dense(sp)):
            basis_fields.append(rep)
    dense_basis = [dense(flat(b)) for b in basis_fields]

    brackets = {}
    m = len(basis_fields)
    for i in range(m):
        for j in range(i + 1, m):
            comm = basis_fields[i].bracket(basis_fields[j]).truncate(maxdeg)
            target = dense(flat(comm))
            coeffs = linalg.coordinates_in(dense_basis, target)
            if coeffs is None:
                raise InternalError("truncated bracket escaped the jet space")
            if any(coeffs):
                brackets[(i, j)] = coeffs
    return liealg.LieAlgebra(m, brackets, check=True), basis_fields
