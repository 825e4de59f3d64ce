"""Cross-checks for GL(2) symmetric-cube and adjoint-cube local factors,
their dihedral factorizations, and the rank-two constant-term calculus."""

from .g2root import (Affine, RootVector, WeightVector, WeylElement,
                     POSITIVE_ROOTS, coroot_decomposition, gram, inverted_roots,
                     lambda_weight, pairing, pairing_table, reflect,
                     rho_parabolic, weyl_group)
from .cyclo import Cyclo
from .satake import (LocalRepClass, SatakeClass, complementary_params,
                     contragredient, is_tempered, satake_from_hecke, twist)
from .localfactor import (RepTag, ReciprocalPoly, check_gj_identity,
                          check_triple_identity, check_twist_identity,
                          local_factor, rankin_selberg, triple_product)
from .monomial import (HeckeLocalData, InducedClass, adjointcube_char_poly,
                       check_monomial_r3, check_monomial_r30, hecke_factor,
                       induced_local, pole_criterion, symcube_char_poly)
from .intertwining import (PrincipalParams, UnitarityCase,
                           forbidden_triangle_contains, gk_coefficient,
                           gk_pole_set, l_ratio, langlands_quotient_unitary,
                           principal_series_pole_set, region_membership,
                           torus_character_value)
from .analytic import (AFEConfig, CoefficientTable, afe_value, delta_sym3_config,
                       dirichlet_coeffs, dirichlet_sum, epsilon_probe,
                       inject_pole_factor, partial_L, pole_scan)
from .ingest import (ParsedForm, ParsedHeckeData, delta_form, eta24_qexpansion,
                     parse_afe_config, parse_form, parse_hecke, satake_table)

__version__ = "0.1.0"
