"""Theta-constant machinery for explicit uniformization of algebraic curves.

Evaluation of Jacobi theta constants with an exact closed derivative system,
elliptic integrals and Weierstrass functions, exact modular-group and
hyperbolic-polygon algebra, a registry of explicitly parametrized curves with
Fuchsian residual verification, inversion of the genus-2 uniformizer, the
theta solution of the Bring quintic, torus covers with their integral
identities, and Poincare metrics.
"""

from .numerics import (ToleranceConfig, TOL, NumericsError, fd_jet,
                       newton_solve, poly_roots, tau_grid)
from .theta_eta import (ThetaFrame, eta, eta_w, identity_residuals, theta,
                    theta2, theta3, theta4)
from .jets import Jet, ThetaJet, theta_jet
from .elliptic import (WeierstrassParams, carlson_rf, eisenstein, ellip_K,
                       ellip_Kprime, hyp2f1_half, klein_j, legendre_moduli,
                       wp, wp_inverse)
from .modgroup import (ProjMatrix, burnside_tables, coset_orbit, coset_reps,
                       disc_map, gamma4_reduce, membership, mobius,
                       nielsen_schreier, reduce_fundamental)
from .polygons import (GeodesicPolygon, build_polygon, default_polygon,
                       double_polygon, genus_of, make_parabolic)
from .fuchsian import (modular_ode_residuals, psi, q_catalogue,
                       schwarzian_jet, verify_fuchsian, change_of_var_check)
from .curves import (CurveSpec, burnside_wp_forms, chi_burnside,
                     curve_residual, discriminant_y, j_bridge_residual,
                     kl_relation_check, registry)
from .inversion import (InversionResult, QuinticSolution, exact_value_suite,
                        invert_chi, quintic_solve, series_at_i)
from .abelian import (alpha_pm, burnside_surface_metric, cover_point,
                      holo_differential_check, liouville_residual,
                      mero_identity_check, metric_density, torus_metric_check)

__version__ = "0.1.0"
