"""Exact-integer checks of second Betti number bounds for hyperkahler manifolds."""

from .bounds import (BoundCertificate, BoundPolynomial, Caps, FeasibleTuple, betti_bound, bound_certificate,
                     bound_polynomial, conjecture_check, dim4_identity, enumerate_feasible,
                     feasibility_certificate, identity_check, largest_root_bracket, rhs_value)
from .diamond import (BettiVector, BidegreeMap, DiamondFormatError, HodgeDiamond, ValidationReport,
                      betti_from_diamond, parse_diamond, serialize_diamond, validate)
from .llv import (LlvInconsistencyError, MultiplicityTuple, extract_multiplicities, extract_primitive_b4,
                  module_layout, predicted_betti, sym_subring_dim, sym_subring_hodge,
                  verify_even_decomposition)
from .salamon import SalamonForm, salamon_form, salamon_residual, specialized_relation_text

__version__ = "0.1.0"
