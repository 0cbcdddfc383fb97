import pytest
import mpmath
from collections import OrderedDict
from pydantic import ValidationError
from zetamoments.exact import euler_operator_coeffs
from zetamoments.moments import a_deriv_closed, moment_value
from zetamoments.numquad import (
    CriticalPoint,
    QuadConfig,
    a_deriv_numeric,
    a_numeric,
    autocorr_kernel,
    complex_log_gamma,
    cotangent_sum,
    critical_line_panels,
    gamma_abs_sq_half,
    g_numeric,
    gauss_legendre,
    h_deriv,
    mellin_g_numeric,
    moment_quadrature,
    moment_tail_bound,
    ramanujan_identity_residual,
    reciprocity_residual,
    sample_critical_line,
    sample_panels,
    xi_big,
    zeta_half_line,
)
import zetamoments.numquad.special as special
from zetamoments.numquad.gauss import resolve_workers, uniform_panels
from zetamoments.symbolic import eval_numeric
import zetamoments.utils.constants as CONST
from tests.utils import FIRST_ZETA_ZERO, eta_oracle_zeta, fast_config


class TestQuadConfig:
    def test_defaults(self):
        cfg = QuadConfig()
        assert cfg.cutoff == CONST.DEFAULT_CUTOFF
        assert cfg.panel_order == CONST.DEFAULT_PANEL_ORDER
        assert cfg.tol == CONST.DEFAULT_TOL

    @pytest.mark.parametrize(
        "overrides",
        [
            {"cutoff": 0.4},
            {"cutoff": 20000.0},
            {"panel_order": 4},
            {"precision": 10},
            {"tol": 0},
            {"threads": -1},
            {"unknown": 1},
        ],
    )
    def test_rejects_invalid(self, overrides):
        with pytest.raises(ValidationError):
            QuadConfig(**overrides)

    def test_frozen(self):
        cfg = QuadConfig()
        with pytest.raises(ValidationError):
            cfg.cutoff = 10.0


def test_gauss_legendre_is_exact_for_polynomials():
    nodes, weights = gauss_legendre(20, 30)
    with mpmath.workdps(30):
        total = mpmath.fsum(w * x**38 for x, w in zip(nodes, weights))
        assert abs(total - mpmath.mpf(2) / 39) < mpmath.mpf(10) ** -28
        assert abs(mpmath.fsum(weights) - 2) < mpmath.mpf(10) ** -28


def test_uniform_panels_cover_interval():
    panels = uniform_panels(0, 3, 7)
    assert len(panels) == 7
    assert panels[0][0] == 0 and panels[-1][1] == 3
    assert all(a < b for a, b in panels)


def test_resolve_workers():
    assert resolve_workers(3) == 3
    assert resolve_workers(0) >= 1
    with pytest.raises(ValueError):
        resolve_workers(-1)


class TestSpecialFunctions:
    def test_gamma_abs_sq(self):
        assert abs(gamma_abs_sq_half(0) - mpmath.pi) < 1e-25
        assert abs(gamma_abs_sq_half(10) / mpmath.mpf("1.42697e-13") - 1) < 1e-4

    def test_zeta_against_oracle(self):
        for i in range(50):
            t = mpmath.mpf(i) * 6 / 5 + mpmath.mpf(1) / 7
            err = abs(zeta_half_line(t) - eta_oracle_zeta(t))
            assert err <= 1e-10, (t, err)

    def test_zeta_at_one_half(self):
        assert abs(zeta_half_line(0) - mpmath.mpf("-1.4603545088095868")) < 1e-14

    def test_first_zero(self):
        assert abs(zeta_half_line(mpmath.mpf(FIRST_ZETA_ZERO))) < 1e-6
        assert abs(xi_big(mpmath.mpf(FIRST_ZETA_ZERO))) < 1e-6

    def test_conjugate_symmetry(self):
        for t in (0.3, 5, 21.5, 77):
            assert abs(zeta_half_line(-t) - mpmath.conj(zeta_half_line(t))) < 1e-25

    def test_zeta_height_limit(self):
        with pytest.raises(ValueError):
            zeta_half_line(CONST.MAX_ZETA_HEIGHT + 1)

    def test_log_gamma_matches_mpmath(self):
        for s in (mpmath.mpc(-0.25, 3), mpmath.mpc(0.5, 10), mpmath.mpc(0.25, -40), mpmath.mpc(7.3, 0)):
            assert abs(complex_log_gamma(s, 30) - mpmath.loggamma(s)) < 1e-13

    def test_log_gamma_poles(self):
        for s in (0, -1, -7):
            with pytest.raises(ValueError):
                complex_log_gamma(s)

    def test_xi_at_zero_and_evenness(self):
        assert abs(xi_big(0) - mpmath.mpf("0.4971207782")) < 1e-9
        for t in (1, 7.5, 30):
            assert abs(xi_big(t) - xi_big(-t)) < 1e-20

    def test_critical_point_range(self):
        with pytest.raises(ValueError):
            CriticalPoint(mpmath.mpf(0), mpmath.mpc(1), mpmath.mpf(4))


class TestAutocorrelation:
    def test_h_deriv_at_log_2(self):
        x = mpmath.log(2)
        assert abs(h_deriv(0, x) - 1) < 1e-25
        assert abs(h_deriv(1, x) + 2) < 1e-25
        assert abs(h_deriv(2, x) - 6) < 1e-25

    def test_branches_agree(self):
        for k in range(9):
            for x in (0.4, 1.0, 2.5):
                series = h_deriv(k, x, "series")
                closed = h_deriv(k, x, "closed")
                assert abs(series - closed) <= 1e-20 * max(1, abs(closed)), (k, x)

    def test_euler_operator_gives_closed_form(self):
        # h = phi(e^x) with phi(y) = 1/(y - 1), so h^(n) = sum_k S(n,k) y^k phi^(k)(y)
        with mpmath.workdps(30):
            x = mpmath.mpf("0.7")
            y = mpmath.exp(x)
            for n in range(1, 9):
                coeffs = euler_operator_coeffs(n)
                value = mpmath.fsum(
                    c * y**k * (-1) ** k * mpmath.factorial(k) / (y - 1) ** (k + 1) for k, c in enumerate(coeffs)
                )
                assert abs(value - h_deriv(n, x, "series")) <= 1e-20 * abs(value), n

    def test_h_deriv_errors(self):
        with pytest.raises(ValueError):
            h_deriv(0, 0)
        with pytest.raises(ValueError):
            h_deriv(1, 7, "series")
        with pytest.raises(ValueError):
            h_deriv(1, 1, "taylor")

    def test_kernel_is_continuous_at_switch(self):
        for k in range(5):
            below = autocorr_kernel(k, CONST.SERIES_SWITCH - 1e-12)
            above = autocorr_kernel(k, CONST.SERIES_SWITCH)
            assert abs(below - above) < 1e-9
        assert autocorr_kernel(0, 0) == mpmath.mpf(1) / 2

    def test_a_at_one(self):
        assert abs(a_numeric(1) - mpmath.mpf("0.7606614015")) < 1e-9

    def test_a_symmetry(self):
        # A(1/x) = x A(x)
        assert abs(a_numeric(mpmath.mpf(1) / 3) - 3 * a_numeric(3)) < 1e-12

    def test_a_deriv_matches_closed_forms(self):
        for k in range(CONST.MAX_NUMERIC_K + 1):
            closed = eval_numeric(a_deriv_closed(k).value, 30)
            assert abs(a_deriv_numeric(k) - closed) < 1e-6, k

    def test_a_deriv_order_limit(self):
        with pytest.raises(ValueError):
            a_deriv_numeric(CONST.MAX_NUMERIC_K + 1)

    def test_g_is_even_and_peaks_at_zero(self):
        assert abs(g_numeric(0.3) - g_numeric(-0.3)) < 1e-12
        assert g_numeric(0.1) <= g_numeric(0)
        with pytest.raises(ValueError):
            g_numeric(CONST.MAX_G_ARGUMENT + 1)


class TestCotangentSums:
    def test_values(self):
        assert cotangent_sum(1, 1) == 0
        assert abs(cotangent_sum(1, 3) - mpmath.mpf("0.1924500897")) < 1e-9

    def test_requires_coprime(self):
        with pytest.raises(ValueError):
            cotangent_sum(2, 4)
        with pytest.raises(ValueError):
            reciprocity_residual(3, 6)

    @pytest.mark.parametrize("h,k", [(1, 1), (1, 2), (1, 3), (2, 3), (3, 5)])
    def test_reciprocity(self, h, k):
        assert reciprocity_residual(h, k) < 1e-8


def test_panels_cover_cutoff(quad_cfg):
    panels = critical_line_panels(quad_cfg)
    assert panels[0][0] == 0
    assert panels[-1][1] == quad_cfg.cutoff
    assert all(b1 == a2 for (_, b1), (a2, _) in zip(panels, panels[1:]))
    far = critical_line_panels(fast_config(cutoff=62.0))
    assert far[-1][1] == 62
    assert all(b - a <= CONST.FAR_PANEL_WIDTH for a, b in far)


def test_sampling_is_independent_of_worker_count():
    panels = uniform_panels(1, 3, 4)
    one = sample_panels(fast_config(threads=1), panels)
    two = sample_panels(fast_config(threads=2), panels)
    for p, q in zip(one, two):
        assert p.weights == q.weights
        assert [x.zeta_value for x in p.points] == [x.zeta_value for x in q.points]


def test_autocorrelation_is_independent_of_worker_count():
    one = a_numeric(1, QuadConfig(threads=1))
    two = a_numeric(1, QuadConfig(threads=2))
    assert one == two


def test_sample_cache_evicts_least_recently_used(monkeypatch):
    monkeypatch.setattr(special, "_SAMPLE_CACHE", OrderedDict())
    monkeypatch.setattr(special, "critical_line_panels", lambda cfg: [])
    monkeypatch.setattr(special, "sample_panels", lambda cfg, panels: (cfg.cutoff,))
    configs = [fast_config(cutoff=40.0 + i) for i in range(CONST.SAMPLE_CACHE_SIZE + 2)]
    for cfg in configs:
        assert sample_critical_line(cfg) == (cfg.cutoff,)
    assert len(special._SAMPLE_CACHE) == CONST.SAMPLE_CACHE_SIZE
    assert special.sampling_key(configs[0]) not in special._SAMPLE_CACHE
    # a hit refreshes the entry
    sample_critical_line(configs[2])
    sample_critical_line(fast_config(cutoff=99.0))
    assert special.sampling_key(configs[2]) in special._SAMPLE_CACHE
    assert special.sampling_key(configs[3]) not in special._SAMPLE_CACHE


def test_sampled_zeta_within_tail_envelope(quad_cfg):
    for panel in sample_critical_line(quad_cfg):
        for p in panel.points:
            assert abs(p.zeta_value) <= CONST.TAIL_C0 + CONST.TAIL_C1 * p.t


def test_tail_bound(quad_cfg):
    assert moment_tail_bound(8, quad_cfg) < quad_cfg.tol / 10
    assert moment_tail_bound(8, fast_config(cutoff=2.0)) > moment_tail_bound(8, quad_cfg)
    with pytest.raises(ValueError):
        moment_quadrature(8, fast_config(cutoff=2.0))


@pytest.mark.slow
def test_moment_quadrature_matches_closed_forms(quad_cfg):
    for n in range(7):
        closed = moment_value(n, 20)
        quad = moment_quadrature(n, quad_cfg)
        assert abs(quad / closed - 1) < quad_cfg.tol, n


@pytest.mark.slow
def test_moment_quadrature_with_default_config():
    cfg = QuadConfig()
    for n in range(7):
        closed = moment_value(n, 20)
        assert abs(moment_quadrature(n, cfg) / closed - 1) < cfg.tol, n


@pytest.mark.slow
def test_mellin_transform_matches_autocorrelation(quad_cfg):
    for v in (0, 0.25):
        assert abs(mellin_g_numeric(v, quad_cfg) - g_numeric(v, quad_cfg)) < 1e-8


@pytest.mark.slow
@pytest.mark.parametrize("v", [0.0, 0.1, 0.25, 0.5, -0.25])
def test_ramanujan_identity(quad_cfg, v):
    assert ramanujan_identity_residual(v, quad_cfg) < CONST.DEFAULT_IDENTITY_TOL


def test_ramanujan_range():
    with pytest.raises(ValueError):
        ramanujan_identity_residual(1.5)
