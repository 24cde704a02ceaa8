"""Redei polynomials N_n(alpha, z) and D_n(alpha, z).

The pair collects the two components of (z + sqrt(alpha))^n:

    (z + sqrt(alpha))^n = N_n + D_n * sqrt(alpha)

Three genuinely independent constructions are provided so they can check one
another: the order-2 linear recurrence (production path), powers of the 2x2
matrix [[z, alpha], [1, z]] (first column), and the binomial closed form
(designated oracle).  All of them satisfy the norm identity

    N_n^2 - alpha * D_n^2 == (z^2 - alpha)^n

which is what makes these pairs solve Pell-type equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .polyring import ONE, Poly, ZERO
from .polymat import PolyMatrix


@dataclass(frozen=True)
class RedeiPair:
    """The pair (N_n, D_n) for given (alpha, z, n)."""

    n: int
    alpha: Poly
    z: Poly
    N: Poly
    D: Poly


def redei_recurrence(alpha, z, n: int) -> RedeiPair:
    """(N_n, D_n) by the order-2 recurrence u_k = 2z*u_{k-1} - (z^2-alpha)*u_{k-2}."""
    return redei_sequence(alpha, z, n)[n]


def redei_sequence(alpha, z, n_max: int) -> list[RedeiPair]:
    """All pairs for n = 0..n_max, sharing one recurrence chain."""
    alpha, z = Poly(alpha), Poly(z)
    pairs = [RedeiPair(0, alpha, z, ONE, ZERO)]
    if n_max == 0:
        return pairs
    pairs.append(RedeiPair(1, alpha, z, z, ONE))
    two_z = z * 2
    c = z * z - alpha
    for k in range(2, n_max + 1):
        prev, prev2 = pairs[-1], pairs[-2]
        pairs.append(
            RedeiPair(
                k,
                alpha,
                z,
                two_z * prev.N - c * prev2.N,
                two_z * prev.D - c * prev2.D,
            )
        )
    return pairs


def redei_matrix(alpha, z, n: int) -> RedeiPair:
    """(N_n, D_n) read off the first column of [[z, alpha], [1, z]]^n."""
    alpha, z = Poly(alpha), Poly(z)
    power = PolyMatrix([[z, alpha], [ONE, z]]).pow(n)
    return RedeiPair(n, alpha, z, power.entry(0, 0), power.entry(1, 0))


def redei_closed_form(alpha, z, n: int) -> RedeiPair:
    """(N_n, D_n) by direct binomial sums; independent of the other two paths.

    N_n = sum_k C(n, 2k)   * alpha^k * z^(n-2k)
    D_n = sum_k C(n, 2k+1) * alpha^k * z^(n-2k-1)
    """
    alpha, z = Poly(alpha), Poly(z)
    z_pow = [ONE]
    for _ in range(n):
        z_pow.append(z_pow[-1] * z)
    a_pow = [ONE]
    for _ in range(n // 2):
        a_pow.append(a_pow[-1] * alpha)
    num = ZERO
    den = ZERO
    for k in range(n // 2 + 1):
        num = num + a_pow[k] * z_pow[n - 2 * k] * comb(n, 2 * k)
        if 2 * k + 1 <= n:
            den = den + a_pow[k] * z_pow[n - 2 * k - 1] * comb(n, 2 * k + 1)
    return RedeiPair(n, alpha, z, num, den)


def norm_identity_holds(pair: RedeiPair) -> bool:
    """Exact check of N^2 - alpha*D^2 == (z^2 - alpha)^n."""
    lhs = pair.N.square() - pair.alpha * pair.D.square()
    rhs = (pair.z.square() - pair.alpha) ** pair.n
    return lhs == rhs
