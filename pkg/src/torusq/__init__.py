"""Exact computations for coloured torus-knot invariants and W-algebra characters."""

from .errors import (CosetMismatch, InexactDivision, InsufficientData, InternalConsistencyError,
                     InvalidLieType, NoTheoremApplies, NotCoprime, NotDominantIntegral,
                     OutOfValidityWindow, PreconditionError, PropositionViolated,
                     ShortRootBoundViolated, TorusqError, UnsupportedType)
from .knotinv import TorusKnot, jones_hat, jones_lattice, jones_rosso, predict_trailing
from .multiplicity import (MultTable, kostant_mult, kostant_partition, min_colour_index,
                           symmetric_power_mult, weight_system, weyl_dimension)
from .plethysm import adams_signed_support, plethysm_coeffs
from .qlaurent import QSeries, euler_product, inv_poch_product
from .rootdata import LieType, RootDatum, Weight, build_root_datum
from .verify import leading_term_fit, ratio_table, stabilization
from .wcharacter import (WModuleLabel, limit_rhs_non_simply_laced, limit_rhs_simply_laced,
                         minimum_exponent, theta_sum, verify_unique_minimum)
from .weylgroup import WeylElement, WeylGroup, enumerate_weyl

__version__ = "0.1.0"
