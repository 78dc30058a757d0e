"""Two-term Hardy-Ramanujan-Rademacher decomposition of p(n).

The dominant term is

    T~(n) = d / mu(n)^2 * (1 - 1/mu(n)) * exp(mu(n)),   mu(n) = (pi/6) sqrt(24n - 1),

and the residual R~(n) is taken operationally as p(n) - T~(n) using the exact
partition number, never through a closed formula.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from partlog_numeric.partitions import PartitionTable, partition
from partlog_numeric.rigor import DomainError, Interval, iv_const
from partlog_numeric.rigor.interval import GUARD_BITS

logger = logging.getLogger(__name__)

__all__ = [
    "HrrDecomposition",
    "e_tilde",
    "hrr_residuals",
    "lehmer_r2_bound",
    "log_t_tilde",
    "mu",
    "r_tilde_majorant",
    "t_tilde",
    "t_two_term",
    "y_tilde_decay_bound",
]


def _require_index(n: int) -> None:
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")


def mu_at(n: int, wp: int) -> Interval:
    """mu(n) at working precision ``wp`` without the final re-rounding."""
    return iv_const("pi", wp) * Interval.from_int(24 * n - 1, wp).sqrt() / 6


def mu(n: int, bits: int) -> Interval:
    _require_index(n)
    return mu_at(n, bits + GUARD_BITS).rounded(bits)


def _t_tilde_at(n: int, wp: int) -> Interval:
    m = mu_at(n, wp)
    return iv_const("d", wp) / (m * m) * (1 - 1 / m) * m.exp()


def t_tilde(n: int, bits: int) -> Interval:
    _require_index(n)
    return _t_tilde_at(n, bits + GUARD_BITS).rounded(bits)


def log_t_tilde_at(n: int, wp: int) -> Interval:
    m = mu_at(n, wp)
    return iv_const("d", wp).log() - 2 * m.log() + (1 - 1 / m).log() + m


def log_t_tilde(n: int, bits: int) -> Interval:
    """log T~(n), assembled from logs so e^mu is never materialized."""
    _require_index(n)
    return log_t_tilde_at(n, bits + GUARD_BITS).rounded(bits)


def t_two_term(n: int, bits: int) -> Interval:
    """T(n) with A_1(n) = 1 and A_2(n) = (-1)^n."""

    _require_index(n)
    wp = bits + GUARD_BITS
    m = mu_at(n, wp)
    second = m.half().exp() / Interval.from_int(2, wp).sqrt()
    if n % 2:
        second = -second
    value = iv_const("d", wp) / (m * m) * ((1 - 1 / m) * m.exp() + second)
    return value.rounded(bits)


def lehmer_r2_bound(n: int, N: int, bits: int, simplified: bool = False) -> Interval:
    """Majorant of |R_2(n, N)|, the remainder after N terms.

    General form ``(pi^2 N^(-2/3) / sqrt 3) [(N/mu)^3 sinh(mu/N) + 1/6 - (N/mu)^2]``;
    ``simplified`` selects ``4 (1 + 4 e^(mu/2) / mu^3)``, stated only for N = 2.
    """

    _require_index(n)
    if N not in (1, 2):
        raise ValueError(f"only N in {{1, 2}} is supported, got {N}")
    wp = bits + GUARD_BITS
    m = mu_at(n, wp)
    if simplified:
        if N != 2:
            raise ValueError("the simplified remainder bound exists only for N = 2")
        return (4 * (1 + 4 / m**3 * m.half().exp())).rounded(bits)
    pi = iv_const("pi", wp)
    ratio = N / m
    prefactor = pi * pi / (Interval.from_int(N * N, wp).nth_root(3) * Interval.from_int(3, wp).sqrt())
    value = prefactor * (ratio**3 * (m / N).sinh() + Fraction(1, 6) - ratio**2)
    return value.rounded(bits)


def r_tilde_majorant(n: int, bits: int) -> Interval:
    """5 + 9 e^(mu/2) / mu^2, the bound on |p(n) - T~(n)|."""

    _require_index(n)
    wp = bits + GUARD_BITS
    m = mu_at(n, wp)
    return (5 + 9 / (m * m) * m.half().exp()).rounded(bits)


def y_tilde_decay_bound(n: int, bits: int) -> Interval:
    """mu / (d (mu - 1)) * (5 mu^2 e^(-2mu/3) + 9 e^(-mu/6)) * e^(-mu/3)."""

    _require_index(n)
    wp = bits + GUARD_BITS
    m = mu_at(n, wp)
    third = (m / 3).exp()
    inner = 5 * m * m / (third * third) + 9 / (m / 6).exp()
    return (m / (iv_const("d", wp) * (m - 1)) * inner / third).rounded(bits)


def _ratio_at(n: int, wp: int, table: PartitionTable | None) -> Interval:
    # p(n) / T~(n) = 1 + y~_n
    ratio = Interval.from_int(partition(n, table), wp) / _t_tilde_at(n, wp)
    if not ratio.is_positive():
        raise DomainError("hrr_residuals", f"1 + y~ is not certified positive at n={n}")
    return ratio


def e_tilde(n: int, bits: int, table: PartitionTable | None = None) -> Interval:
    """E~(n) = log(1 + y~_n) / n."""

    _require_index(n)
    wp = bits + GUARD_BITS
    return (_ratio_at(n, wp, table).log() / n).rounded(bits)


@dataclass(frozen=True)
class HrrDecomposition:
    n: int
    bits: int
    mu: Interval
    t_tilde: Interval
    t_two_term: Interval
    lehmer_bound: Interval
    r_tilde: Interval
    y_tilde: Interval
    e_tilde: Interval
    r_tilde_majorant: Interval

    def fields(self) -> dict[str, Interval]:
        return {
            "mu": self.mu,
            "t_tilde": self.t_tilde,
            "t_two_term": self.t_two_term,
            "lehmer_bound": self.lehmer_bound,
            "r_tilde": self.r_tilde,
            "y_tilde": self.y_tilde,
            "e_tilde": self.e_tilde,
            "r_tilde_majorant": self.r_tilde_majorant,
        }


def hrr_residuals(n: int, bits: int, table: PartitionTable | None = None) -> HrrDecomposition:
    """Evaluate the full decomposition at ``n`` against the exact p(n)."""

    _require_index(n)
    wp = bits + GUARD_BITS
    exact = Interval.from_int(partition(n, table), wp)
    main = _t_tilde_at(n, wp)
    ratio = _ratio_at(n, wp, table)
    logger.debug("hrr decomposition at n=%d, %d bits", n, bits)
    return HrrDecomposition(
        n=n,
        bits=bits,
        mu=mu(n, bits),
        t_tilde=main.rounded(bits),
        t_two_term=t_two_term(n, bits),
        lehmer_bound=lehmer_r2_bound(n, 2, bits),
        r_tilde=(exact - main).rounded(bits),
        y_tilde=(ratio - 1).rounded(bits),
        e_tilde=(ratio.log() / n).rounded(bits),
        r_tilde_majorant=r_tilde_majorant(n, bits),
    )
