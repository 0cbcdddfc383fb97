from .closed_forms import (
    DerivAtOne,
    NormalizedMoment,
    a_deriv_closed,
    beta_term,
    moment_closed,
    moment_scale,
    moment_value,
    tcoef,
    zeta_bernoulli,
)
from .psi import psi_coeff, psi_route_a_deriv, r_deriv_at_1
from .ramanujan import LEComponent, g_deriv_at_0, le_component
