from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence, Tuple, Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class PowerSeries:
    """Truncated power series sum_{n<=order} c_n t^n with exact coefficients."""

    order: int
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"PowerSeries order must be >= 0, got {self.order}")
        if len(self.coefficients) != self.order + 1:
            raise ValueError(
                f"PowerSeries of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[Scalar], order: int) -> "PowerSeries":
        padded = [Fraction(c) for c in coefficients[: order + 1]]
        padded += [Fraction(0)] * (order + 1 - len(padded))
        return cls(order, tuple(padded))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls.from_coefficients([value], order)

    @classmethod
    def exp_minus_one(cls, order: int) -> "PowerSeries":
        """e^t - 1 = sum_{n>=1} t^n / n!"""
        return cls.from_coefficients([Fraction(0)] + [Fraction(1, factorial(n)) for n in range(1, order + 1)], order)

    @classmethod
    def one_minus_exp_neg(cls, order: int) -> "PowerSeries":
        """1 - e^{-t} = sum_{n>=1} (-1)^(n+1) t^n / n!"""
        return cls.from_coefficients(
            [Fraction(0)] + [Fraction((-1) ** (n + 1), factorial(n)) for n in range(1, order + 1)],
            order,
        )

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def _aligned(self, other: "PowerSeries") -> None:
        if other.order != self.order:
            raise ValueError(f"PowerSeries order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._aligned(other)
        return PowerSeries(self.order, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(self.order, tuple(-a for a in self.coefficients))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["PowerSeries", Scalar]) -> "PowerSeries":
        if isinstance(other, (int, Fraction)):
            return PowerSeries(self.order, tuple(a * other for a in self.coefficients))
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._aligned(other)
        a, b = self.coefficients, other.coefficients
        return PowerSeries(
            self.order,
            tuple(sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0)) for n in range(self.order + 1)),
        )

    __rmul__ = __mul__

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner(t)) truncated at order; inner must have zero constant term."""
        self._aligned(inner)
        if inner[0] != 0:
            raise ValueError(f"Inner series must have zero constant term, got {inner[0]}")
        result = PowerSeries.constant(self.coefficients[-1], self.order)
        for c in reversed(self.coefficients[:-1]):
            result = result * inner + PowerSeries.constant(c, self.order)
        return result


def series_compose_one_minus_exp(u: PowerSeries) -> PowerSeries:
    """Expansion of t -> F_u(1 - e^{-t}) to the order of ``u``."""
    return u.compose(PowerSeries.one_minus_exp_neg(u.order))
