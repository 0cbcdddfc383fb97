from .numbers import (
    Rat,
    bernoulli,
    bernoulli_poly,
    bernoulli_poly_half,
    harmonic,
    kcoef,
)
from .stirling import (
    IntTable,
    alpha,
    binomial,
    euler_operator_coeffs,
    falling,
    stirling1,
    stirling2,
    stirling_matrix,
)
from .sequences import (
    binomial_indicator,
    eta,
    iota,
    seq_E,
    seq_L,
    unit_sequence,
)
from .series import PowerSeries, series_compose_one_minus_exp
