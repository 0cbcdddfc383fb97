from .config import QuadConfig
from .gauss import gauss_legendre, map_panel, parallel_map
from .special import (
    CriticalPoint,
    PanelSample,
    complex_log_gamma,
    critical_line_panels,
    gamma_abs_sq_half,
    sample_critical_line,
    sample_panels,
    xi_big,
    xi_from_zeta,
    zeta_half_line,
)
from .autocorr import a_deriv_numeric, a_numeric, autocorr_kernel, g_numeric, h_deriv
from .verify import (
    cotangent_sum,
    mellin_g_numeric,
    moment_quadrature,
    moment_tail_bound,
    ramanujan_identity_residual,
    ramanujan_lhs,
    reciprocity_residual,
)
