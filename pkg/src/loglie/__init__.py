"""Logarithmic vector fields of hypersurface singularities, exactly over Q.

From a polynomial f the library computes the module of vector fields
preserving (f), its finite-dimensional initial Lie algebra, the Lie-theoretic
classification (solvability, Levi factor, Cartan subalgebra, reductivity,
Saito freeness) and a weight-diagram lower bound for the dimension of the
singular locus.  All arithmetic is exact rational.
"""

from .analysis import AnalysisReport, run_analyze, run_free
from .errors import (InputError, InternalError, LoglieError, NotGradedError,
                     NotReducedError, ParseError, UnsupportedError)
from .groebner import (GroebnerBasis, MonomialOrder, VecPoly, buchberger,
                       ideal_dimension, minimal_generators, module_membership,
                       normal_form, syzygies)
from .liealg import (JordanPair, LieAlgebra, MatrixLieAlgebra,
                     cartan_subalgebra, derived_series, is_nilpotent,
                     is_reductive_singularity, is_solvable, jordan_chevalley,
                     killing_form, levi_subalgebra, lower_central_series,
                     radical, radical_split, rank_and_multihomogeneity)
from .logder import (InitialLieData, LogDerivationModule, VectorField,
                     euler_split, initial_lie_algebra, jet_truncation,
                     koszul_fields, logarithmic_derivations, product_test,
                     saito_freeness)
from .polyalg import (Polynomial, Ring, is_reduced, order_at_origin,
                      parse_polynomial, polynomial_gcd,
                      quasihomogeneous_weights)
from .weights import (BoundReport, SubsetCertificate, WeightDiagram,
                      compute_M, normalize_cartan, rank_lower_bound_check,
                      sumset_avoidance, theorem13_check, weight_diagram,
                      weight_of_f)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport", "BoundReport", "GroebnerBasis", "InitialLieData",
    "InputError", "InternalError", "JordanPair", "LieAlgebra",
    "LogDerivationModule", "LoglieError", "MatrixLieAlgebra", "MonomialOrder",
    "NotGradedError", "NotReducedError", "ParseError", "Polynomial", "Ring",
    "SubsetCertificate", "UnsupportedError", "VecPoly", "VectorField",
    "WeightDiagram", "buchberger", "cartan_subalgebra", "compute_M",
    "derived_series", "euler_split", "ideal_dimension", "initial_lie_algebra",
    "is_nilpotent", "is_reduced", "is_reductive_singularity", "is_solvable",
    "jet_truncation", "jordan_chevalley", "killing_form", "koszul_fields",
    "levi_subalgebra", "logarithmic_derivations", "lower_central_series",
    "minimal_generators", "module_membership", "normal_form",
    "normalize_cartan", "order_at_origin", "parse_polynomial",
    "polynomial_gcd", "product_test", "quasihomogeneous_weights", "radical",
    "radical_split", "rank_and_multihomogeneity", "rank_lower_bound_check",
    "run_analyze", "run_free", "saito_freeness", "sumset_avoidance",
    "syzygies", "theorem13_check", "weight_diagram", "weight_of_f",
]
