"""Multiplicative specializations of symmetric functions.

A specialization is the algebra homomorphism determined by its values on
the power sums: ``p_1`` goes to ``gamma`` and for k >= 2

    p_k  ->  sum_i alpha_i**k  +  (-1)**(k-1) * sum_i beta_i**k.

The two parameter sequences are represented by "power sum providers" so
that infinite geometric-spread families can be evaluated in closed form
alongside explicit finite sequences.
"""

import heapq
from dataclasses import dataclass
from fractions import Fraction

from fqtraces.symfunc import PowerSumElement


def _as_fractions(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def _check_weakly_decreasing_nonneg(values, what: str):
    for i, v in enumerate(values):
        if v < 0:
            raise ValueError(f"{what} must be non-negative, got {v}")
        if i and values[i - 1] < v:
            raise ValueError(f"{what} must be weakly decreasing")


@dataclass(frozen=True)
class FinitePowerSums:
    """Power sums of an explicit finite sequence."""

    values: tuple[Fraction, ...]

    def power(self, k: int) -> Fraction:
        return sum((v**k for v in self.values), Fraction(0))

    def frequencies(self, count: int) -> list[Fraction]:
        out = sorted(self.values, reverse=True)[:count]
        return out + [Fraction(0)] * (count - len(out))


@dataclass(frozen=True)
class GeometricSpread:
    """The doubly indexed sequence (1 - 1/q) * seq_i * q**(1-j), j = 1, 2, ...

    Each entry of ``seq`` is smeared into a geometric series with ratio 1/q;
    the k-th power sum of the whole array has the closed form

        (1 - 1/q)**k / (1 - q**(-k)) * sum_i seq_i**k

    and the total mass equals ``sum(seq)``.
    """

    seq: tuple[Fraction, ...]
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "seq", _as_fractions(self.seq))
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q <= 1:
            raise ValueError("spread ratio q must exceed 1")
        _check_weakly_decreasing_nonneg(self.seq, "spread sequence")

    def power(self, k: int) -> Fraction:
        if not self.seq:
            return Fraction(0)
        qinv = 1 / self.q
        head = sum((s**k for s in self.seq), Fraction(0))
        return (1 - qinv) ** k * head / (1 - qinv**k)

    def frequencies(self, count: int) -> list[Fraction]:
        """The ``count`` largest entries of the array, in decreasing order."""
        scale = 1 - 1 / self.q
        heap = [(-scale * s, i, 1) for i, s in enumerate(self.seq) if s > 0]
        heapq.heapify(heap)
        out: list[Fraction] = []
        while heap and len(out) < count:
            neg, i, j = heapq.heappop(heap)
            out.append(-neg)
            heapq.heappush(heap, (neg / self.q, i, j + 1))
        return out + [Fraction(0)] * (count - len(out))


@dataclass(frozen=True)
class FunctionPowerSums:
    """Power sums given by an arbitrary callable (k >= 1)."""

    fn: object

    def power(self, k: int) -> Fraction:
        return Fraction(self.fn(k))

    def frequencies(self, count: int) -> list[Fraction]:
        raise TypeError("function-backed power sums have no explicit entries")


EMPTY = FinitePowerSums(())


@dataclass(frozen=True)
class Specialization:
    """The homomorphism with parameter data (alpha side, beta side, gamma)."""

    alpha: object
    beta: object
    gamma: Fraction

    @classmethod
    def finite(cls, alphas=(), betas=(), gamma=1) -> "Specialization":
        """Explicit parameter sequences; validates the mass constraint."""
        alphas = _as_fractions(alphas)
        betas = _as_fractions(betas)
        gamma = Fraction(gamma)
        _check_weakly_decreasing_nonneg(alphas, "alpha")
        _check_weakly_decreasing_nonneg(betas, "beta")
        if sum(alphas) + sum(betas) > gamma:
            raise ValueError("sum(alpha) + sum(beta) must not exceed gamma")
        return cls(FinitePowerSums(alphas), FinitePowerSums(betas), gamma)

    @classmethod
    def from_power_values(cls, gamma, fn) -> "Specialization":
        """Presentation through precomputed combined power-sum values.

        ``fn(k)`` must return the full value of p_k for k >= 2; no sign
        convention is applied on top of it.
        """
        return cls(FunctionPowerSums(fn), EMPTY, Fraction(gamma))

    def power_sum(self, k: int) -> Fraction:
        if k < 1:
            raise ValueError("power sum index must be >= 1")
        if k == 1:
            return Fraction(self.gamma)
        return self.alpha.power(k) + (-1) ** (k - 1) * self.beta.power(k)

    def apply(self, f: PowerSumElement) -> Fraction:
        total = Fraction(0)
        for rho, c in f.terms.items():
            value = c
            for part in rho:
                value *= self.power_sum(part)
            total += value
        return total


def spec_power_sum(sp: Specialization, k: int) -> Fraction:
    return sp.power_sum(k)


def specialize(sp: Specialization, f: PowerSumElement) -> Fraction:
    return sp.apply(f)


def geometric_spread(seq, q) -> Specialization:
    """Specialization whose alpha side is the geometric spread of ``seq``.

    The spread preserves total mass, so p_1 equals ``sum(seq)``.
    """
    spread = GeometricSpread(tuple(seq), q)
    if spread.power(1) > 1:
        raise ValueError("spread sequence must have total mass at most 1")
    return Specialization(spread, EMPTY, sum(spread.seq, Fraction(0)))
