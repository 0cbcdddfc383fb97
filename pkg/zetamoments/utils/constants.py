from fractions import Fraction

"""
Global constants

Constants:
    ENV_PREFIX (str): Prefix of environment variables overriding CLI defaults.
    MAX_EVAL_DIGITS (int): Largest number of significant digits eval_numeric accepts.
    EVAL_GUARD_DIGITS (int): Extra working digits used when evaluating symbolic values.
    DEFAULT_DIGITS (int): Digits printed for decimal values.
    DEFAULT_PRECISION (int): Internal working precision (decimal digits) of numerical routines.
    DEFAULT_CUTOFF (float): Truncation point T of the critical-line integrals.
    DEFAULT_PANEL_ORDER (int): Gauss-Legendre nodes per panel.
    DEFAULT_PANEL_COUNT (int): Uniform panels covering [1/2, 50].
    MIN_PANEL_ORDER (int): Smallest accepted panel order.
    DEFAULT_ZETA_TERMS (int): Minimum Euler-Maclaurin main-sum length.
    DEFAULT_ZETA_CORRECTIONS (int): Number of Bernoulli correction terms in Euler-Maclaurin.
    ZETA_TERMS_SLOPE (Fraction): Main-sum length grows as ceil(slope * |t|).
    MAX_ZETA_HEIGHT (int): Largest |t| accepted by the critical-line zeta evaluator.
    DEFAULT_TOL (float): Default relative tolerance of moment verification.
    DEFAULT_IDENTITY_TOL (float): Default absolute tolerance of residual checks.
    DEFAULT_AUTOCORR_CUTOFF (float): Truncation of the auto-correlation integrals, scaled by 1/min(v, 1).
    NEAR_PANEL_EDGE (float): Upper end of the fine panels near the origin of the critical line.
    UNIFORM_PANEL_END (float): End of the uniform panel range on the critical line.
    FAR_PANEL_WIDTH (float): Largest panel width beyond UNIFORM_PANEL_END.
    SERIES_SWITCH (float): Below this x the auto-correlation kernels use the Bernoulli series.
    TAIL_C0 (float): Constant term of the |zeta(1/2+it)| envelope used by the tail bound.
    TAIL_C1 (float): Linear term of the |zeta(1/2+it)| envelope used by the tail bound.
    XI_IMAG_LIMIT (float): Largest imaginary part of Xi(t) silently discarded.
    MAX_TNJ_ROWS (int): Largest l of the T(l, j) table.
    MAX_MOMENT_N (int): Largest N of the moments table.
    MAX_QUADRATURE_N (int): Largest N accepted by the moment quadrature.
    MAX_SYMBOLIC_K (int): Largest k for closed-form derivatives of A at 1.
    MAX_NUMERIC_K (int): Largest k for the numerical derivatives of A at 1.
    MAX_RAMANUJAN_V (float): Largest |v| of the Ramanujan identity check.
    MAX_G_ARGUMENT (float): Largest |v| accepted by G(v) = e^v A(e^{2v}).
    SAMPLE_CACHE_SIZE (int): Critical-line sample sets kept in memory, least recently used evicted first.
    EVENTS_RETENTION_SIZE (str): Rotation size of the events log.

"""
ENV_PREFIX = "ZETAMOMENTS_"
MAX_EVAL_DIGITS = 1000
EVAL_GUARD_DIGITS = 10
DEFAULT_DIGITS = 10
DEFAULT_PRECISION = 30
DEFAULT_CUTOFF = 120.0
DEFAULT_PANEL_ORDER = 20
DEFAULT_PANEL_COUNT = 100
MIN_PANEL_ORDER = 8
DEFAULT_ZETA_TERMS = 20
DEFAULT_ZETA_CORRECTIONS = 8
ZETA_TERMS_SLOPE = Fraction(13, 10)
MAX_ZETA_HEIGHT = 10_000
DEFAULT_TOL = 1e-8
DEFAULT_IDENTITY_TOL = 1e-6
DEFAULT_AUTOCORR_CUTOFF = 80.0
NEAR_PANEL_EDGE = 0.5
UNIFORM_PANEL_END = 50.0
FAR_PANEL_WIDTH = 5.0
SERIES_SWITCH = 1.0
SAMPLE_CACHE_SIZE = 4
TAIL_C0 = 2.5
TAIL_C1 = 0.7
XI_IMAG_LIMIT = 1e-10
MAX_TNJ_ROWS = 64
MAX_MOMENT_N = 20
MAX_QUADRATURE_N = 8
MAX_SYMBOLIC_K = 20
MAX_NUMERIC_K = 8
MAX_RAMANUJAN_V = 1.0
MAX_G_ARGUMENT = 3.0
EVENTS_RETENTION_SIZE = "10 MB"
