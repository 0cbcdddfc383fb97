from .constants import (
    EULER_GAMMA,
    LOG2PI,
    UNIT,
    ConstSymbol,
    PiPow,
    SymbolKind,
    SymVal,
    Zeta,
    assert_no_odd_zeta,
    constant_C,
    eval_numeric,
    reduce_zeta_even,
)
from .render import render
