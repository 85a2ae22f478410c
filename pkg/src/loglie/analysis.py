"""End-to-end analysis pipeline and the report it assembles.

`run_analyze` drives: order and quasihomogeneity, the logarithmic module and
product test, Saito freeness, the initial Lie algebra, its solvable radical
and Levi factor, the reductivity classification, the Cartan invariants, the
weight diagram and the singular-locus bound.  A stage that cannot handle the
input leaves a stage-labeled error on the report instead of aborting, so
partial results always survive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import liealg, linalg, logder, weights as weights_mod
from .errors import InputError, InternalError, UnsupportedError
from .groebner import ideal_dimension
from .polyalg import (Polynomial, Ring, is_reduced, parse_polynomial,
                      quasihomogeneous_weights)

_F0 = Fraction(0)


@dataclass
class AnalysisReport:
    """Full record of the computed invariants of one hypersurface."""

    variables: tuple
    f_text: str
    order: object = None
    qh_weights: tuple = None
    qh_degree: object = None
    reduced: bool = None
    product_test: bool = None
    free: bool = None
    saito_det: str = None
    saito_unit: str = None
    initial_dim: int = None
    solvable: bool = None
    nilpotent: bool = None
    levi_dim: int = None
    levi_rank: int = None
    radical_dim: int = None
    kernel_dim: int = None
    reductive: bool = None
    linear_verdict: str = None
    rank_l0: int = None
    n_D: int = None
    s_D: int = None
    weights: list = None           # list of weight tuples (Fractions)
    multiplicities: list = None
    M: object = None
    M_proven: bool = None
    maximizer: list = None
    sing_dim: object = None
    bound: str = None
    jet_dims: list = None
    flags: list = field(default_factory=list)
    error: dict = None

    def check_consistency(self):
        """The internal identities every completed report must satisfy."""
        if None not in (self.initial_dim, self.levi_dim, self.radical_dim):
            if self.initial_dim != self.levi_dim + self.radical_dim:
                raise InternalError("initial_dim != levi_dim + radical_dim")
        if None not in (self.rank_l0, self.n_D, self.s_D):
            if self.s_D != self.rank_l0 - self.n_D:
                raise InternalError("s_D != rank_l0 - n_D")
        if self.multiplicities is not None:
            if sum(self.multiplicities) != len(self.variables):
                raise InternalError("weight multiplicities do not sum to n")

    def to_dict(self):
        def num(v):
            if v is None:
                return None
            if v == math.inf:
                return "inf"
            if v == -math.inf:
                return "-inf"
            if isinstance(v, Fraction):
                return str(v)
            return v

        def weight_list(ws):
            if ws is None:
                return None
            return [[str(c) for c in w] for w in ws]

        return {
            "schema": 1,
            "vars": list(self.variables),
            "f": self.f_text,
            "order": num(self.order),
            "qh_weights": None if self.qh_weights is None
                          else [str(w) for w in self.qh_weights],
            "qh_degree": num(self.qh_degree),
            "reduced": self.reduced,
            "product_test": self.product_test,
            "free": self.free,
            "saito_det": self.saito_det,
            "saito_unit": self.saito_unit,
            "initial_dim": self.initial_dim,
            "solvable": self.solvable,
            "nilpotent": self.nilpotent,
            "levi_dim": self.levi_dim,
            "levi_rank": self.levi_rank,
            "radical_dim": self.radical_dim,
            "kernel_dim": self.kernel_dim,
            "reductive": self.reductive,
            "linear_verdict": self.linear_verdict,
            "rank_l0": self.rank_l0,
            "n_D": self.n_D,
            "s_D": self.s_D,
            "weights": weight_list(self.weights),
            "multiplicities": self.multiplicities,
            "M": num(self.M),
            "M_proven": self.M_proven,
            "maximizer": weight_list(self.maximizer),
            "sing_dim": num(self.sing_dim),
            "bound": self.bound,
            "jet_dims": self.jet_dims,
            "flags": list(self.flags),
            "error": self.error,
        }


def run_analyze(variables, f_text, jet=None, budget=100000, jet_cap=6):
    """Full pipeline on the polynomial given by `f_text` over `variables`.

    Input problems raise InputError; unsupported-but-valid cases stop the
    pipeline at their stage and label `report.error`.  Everything computed
    before the stopping stage is kept.
    """
    ring = variables if isinstance(variables, Ring) else Ring(tuple(variables))
    f = parse_polynomial(f_text, ring)
    report = AnalysisReport(variables=ring.variables, f_text=f_text)
    if f.is_zero or f.is_constant():
        raise InputError("the defining polynomial must be nonconstant")
    if f.constant_term():
        raise InputError("the defining polynomial must vanish at the origin")

    def fail(stage, exc):
        report.error = {"stage": stage, "message": str(exc)}
        report.check_consistency()
        return report

    report.order = f.order()
    qh = quasihomogeneous_weights(f)
    if qh is not None:
        report.qh_weights = qh.weights
        report.qh_degree = qh.degree
    report.sing_dim = ideal_dimension([f] + f.gradient())
    report.reduced = is_reduced(f)
    if not report.reduced:
        return fail("reduced", UnsupportedError("f has a repeated factor"))

    try:
        module = logder.logarithmic_derivations(f)
    except UnsupportedError as exc:
        return fail("logder", exc)
    report.flags.extend(module.flags)
    report.product_test = logder.product_test(module)
    if not report.product_test:
        return fail("product_test",
                    UnsupportedError("hypersurface is a product with a smooth factor"))
    cert = logder.saito_freeness(module)
    if cert is not None:
        report.free = True
        report.saito_det = str(cert.determinant)
        report.saito_unit = str(cert.unit)
    else:
        # Without graded minimal generators the count carries no information.
        report.free = False if module.graded else None

    try:
        data = logder.initial_lie_algebra(module)
    except UnsupportedError as exc:
        return fail("initial", exc)
    report.initial_dim = data.dim
    report.kernel_dim = data.kernel_dim

    try:
        lie = data.lie
        report.solvable = liealg.is_solvable(lie)
        report.nilpotent = liealg.is_nilpotent(lie)
        rad = liealg.radical(lie)
        levi = liealg.levi_subalgebra(lie)
        report.radical_dim = len(rad)
        report.levi_dim = len(levi)
        if levi:
            s_alg = liealg.restrict(lie, levi)
            report.levi_rank = len(liealg.cartan_subalgebra(s_alg))
        else:
            report.levi_rank = 0
        red = liealg.is_reductive_singularity(data)
        report.reductive = red.reductive
        if red.reductive:
            report.linear_verdict = ("linear (reductive free divisor)" if report.free
                                     else "linear (formal coordinates)")
        mats = [m for m in data.lambda0
                if not linalg.is_zero_matrix(m)]
        if mats:
            mla = liealg.MatrixLieAlgebra(mats)
            report.rank_l0, report.n_D, report.s_D = \
                liealg.rank_and_multihomogeneity(mla)
        else:
            report.rank_l0, report.n_D, report.s_D = 0, 0, 0
    except UnsupportedError as exc:
        return fail("liealg", exc)

    try:
        _bound_stage(report, data, budget)
    except UnsupportedError as exc:
        return fail("weights", exc)

    if jet is not None:
        dims = []
        for k in range(jet + 1):
            alg, _ = logder.jet_truncation(module, k, cap=max(jet, jet_cap))
            dims.append(alg.dim)
        report.jet_dims = dims

    report.check_consistency()
    return report


def _bound_stage(report, data, budget):
    order = report.order
    if report.levi_dim == 0:
        diagram = weights_mod.weight_diagram([], dim=len(report.variables))
        _attach_diagram(report, diagram)
        report.M = -math.inf
        report.M_proven = True
        report.maximizer = []
        report.bound = "vacuous"
        return
    if order < 3:
        # The bound is vacuous by definition; a non-split Levi Cartan (e.g.
        # rotation algebras of quadrics) would make the diagram irrational,
        # so it is attempted but failure only flags the report.
        report.M = -math.inf
        report.M_proven = True
        report.maximizer = []
        report.bound = "vacuous"
        try:
            diagram, _, _ = weights_mod.levi_weight_diagram(data)
            _attach_diagram(report, diagram)
        except UnsupportedError as exc:
            report.flags.append(f"weight diagram unavailable: {exc}")
        return
    diagram, levi, _ = weights_mod.levi_weight_diagram(data)
    _attach_diagram(report, diagram)
    result = weights_mod.compute_M(diagram, int(order), budget=budget)
    report.M = result.value
    report.M_proven = result.proven
    report.maximizer = list(result.maximizer)
    if not result.proven:
        report.flags.append("empty up to bound")
    if result.value == -math.inf:
        report.bound = "vacuous"
    else:
        report.bound = "holds" if report.sing_dim >= result.value else "fails"


def _attach_diagram(report, diagram):
    ws = diagram.weights()
    report.weights = ws
    report.multiplicities = [diagram.entries[w] for w in ws]


# ---------------------------------------------------------------------------
# Saito verification of a user-supplied basis.
# ---------------------------------------------------------------------------

@dataclass
class FreeRun:
    fields: list
    cofactors: list
    determinant: Polynomial
    unit: Polynomial


def run_free(variables, f_text, basis_rows):
    """Check that the given fields are logarithmic and form a free basis.

    `basis_rows` is a list of n rows of n expression strings: row i holds the
    coefficients of the i-th field.  Raises UnsupportedError with a precise
    message when a field is not logarithmic or the determinant is not a unit
    multiple of f.
    """
    ring = variables if isinstance(variables, Ring) else Ring(tuple(variables))
    f = parse_polynomial(f_text, ring)
    n = ring.nvars
    if len(basis_rows) != n:
        raise InputError(f"expected {n} basis fields, got {len(basis_rows)}")
    fields = []
    for i, row in enumerate(basis_rows):
        if len(row) != n:
            raise InputError(f"basis field {i + 1} needs {n} coefficients")
        fields.append(logder.VectorField(
            parse_polynomial(expr, ring) for expr in row))
    cofactors = []
    for i, theta in enumerate(fields):
        image = theta.apply(f)
        cof = image.exact_div(f) if not image.is_zero else ring.zero
        if cof is None:
            raise UnsupportedError(f"field {i + 1} is not logarithmic: "
                                   f"theta(f) is not a multiple of f")
        cofactors.append(cof)
    det = logder.poly_determinant([list(t.coeffs) for t in fields])
    if det.is_zero:
        raise UnsupportedError("determinant not unit multiple: determinant is 0")
    unit = det.exact_div(f)
    if unit is None or not unit.constant_term():
        raise UnsupportedError("determinant not unit multiple of f")
    if not is_reduced(f):
        raise UnsupportedError("f is not reduced")
    return FreeRun(fields=fields, cofactors=cofactors, determinant=det, unit=unit)
