"""Quadratic polynomial Pell equations P^2 - (f^2 + d)*Q^2 = 1.

Substituting z = f and alpha = f^2 + d into the Redei norm identity gives
N_n^2 - (f^2 + d) * D_n^2 = (-d)^n, so dividing the pair by (-d)^(n/2)
produces a solution of the Pell equation whenever that power is rational.
This module generates those solutions, classifies when they are integer
polynomials, runs the degree-reducing descent step, and identifies arbitrary
integer solutions against the generated family by descending them to (1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .polyring import DomainError, ONE, Poly, X
from .redei import RedeiPair, redei_recurrence, redei_sequence


class ZeroD(DomainError):
    """d = 0 degenerates the equation; not part of the domain."""


class OddIndexUndefined(DomainError):
    """(-d)^(n/2) is irrational for this odd n, so no rational solution exists."""


class PreconditionViolated(DomainError):
    """Descent input does not satisfy the required norm equation."""


class NotASolution(DomainError):
    """The given pair does not satisfy the Pell equation."""


class UnsupportedD(DomainError):
    """The explicit x^2 + d recurrences only cover d in {1, -1, 2, -2}."""


@dataclass(frozen=True)
class PellProblem:
    """The equation P^2 - (f^2 + d)*Q^2 = 1."""

    f: Poly
    d: int

    def __post_init__(self):
        object.__setattr__(self, "f", Poly(self.f))
        if self.d == 0:
            raise ZeroD("d must be a nonzero integer")

    @property
    def D(self) -> Poly:
        return self.f * self.f + self.d


@dataclass(frozen=True)
class PellSolution:
    """A normalized solution pair with its provenance index and scale."""

    P: Poly
    Q: Poly
    n: int
    integral: bool
    normalizer: int


@dataclass(frozen=True)
class IntegralityClass:
    """Which indices n give integer-polynomial solutions for this d.

    ALL_N: every n (d = -1).  EVEN_N: exactly the even n (d in {1, 2, -2}).
    NONE: no nontrivial index.  The n = 0 pair (1, 0) is integral for every d.
    """

    tag: str
    d: int

    def predicts_integral(self, n: int) -> bool:
        if n == 0:
            return True
        if self.tag == "ALL_N":
            return True
        if self.tag == "EVEN_N":
            return n % 2 == 0
        return False


def classify(d: int) -> IntegralityClass:
    """Classify d by which normalized solutions are integer polynomials."""
    if d == 0:
        raise ZeroD("d must be a nonzero integer")
    if d == -1:
        tag = "ALL_N"
    elif d in (1, 2, -2):
        tag = "EVEN_N"
    else:
        tag = "NONE"
    return IntegralityClass(tag, d)


def _normalizer(d: int, n: int) -> int | None:
    """(-d)^(n/2) when it is rational (then it is in fact an integer)."""
    base = -d
    if n % 2 == 0:
        return base ** (n // 2)
    if base >= 0:
        k = isqrt(base)
        if k * k == base:
            return k**n
    return None


def _finish(d: int, n: int, pair: RedeiPair) -> PellSolution:
    scale = _normalizer(d, n)
    if scale is None:
        raise OddIndexUndefined(f"(-d)^(n/2) is irrational for d={d}, n={n}")
    P = pair.N / scale
    Q = pair.D / scale
    return PellSolution(P, Q, n, P.is_integral() and Q.is_integral(), scale)


def solve(problem: PellProblem, n: int) -> PellSolution:
    """The index-n solution (N_n, D_n)/(-d)^(n/2) with its integrality flag.

    Defined for even n, for d = -1, and more generally whenever -d is a
    perfect square (so the normalizer is an exact integer).
    """
    return _finish(problem.d, n, redei_recurrence(problem.D, problem.f, n))


def solve_sequence(problem: PellProblem, n_max: int) -> list[PellSolution | None]:
    """Solutions for n = 0..n_max from one shared recurrence chain.

    Entries are None where the normalizer is irrational.  Agrees with
    ``solve`` index by index wherever both are defined.
    """
    out: list[PellSolution | None] = []
    for pair in redei_sequence(problem.D, problem.f, n_max):
        if _normalizer(problem.d, pair.n) is None:
            out.append(None)
        else:
            out.append(_finish(problem.d, pair.n, pair))
    return out


def verify(P, Q, D) -> bool:
    """Exact check of P^2 - D*Q^2 == 1 over the rationals.

    Denominators are cleared once up front so the squaring runs in integer
    arithmetic: with L the lcm of all denominators, the check becomes
    (L*P)^2 - D*(L*Q)^2 == L^2.
    """
    P, Q, D = Poly(P), Poly(Q), Poly(D)
    scale = 1
    for c in (*P.coeffs, *Q.coeffs):
        if isinstance(c, Fraction):
            scale = lcm(scale, c.denominator)
    Pi = P * scale
    Qi = Q * scale
    return Pi.square() - D * Qi.square() == scale * scale


def descend(P, Q, f, d: int, n: int) -> tuple[Poly, Poly]:
    """One descent step: a norm-(-d)^n pair becomes a norm-(-d)^(n-1) pair.

        P' = -(f/d)*P + ((f^2+d)/d)*Q,   Q' = (1/d)*P - (f/d)*Q

    Requires P^2 - (f^2+d)*Q^2 == (-d)^n exactly.  When the leading
    coefficients of P, Q, f are positive (callers normalize signs first) the
    degrees of both components drop strictly.
    """
    if d == 0:
        raise ZeroD("d must be a nonzero integer")
    P, Q, f = Poly(P), Poly(Q), Poly(f)
    D = f * f + d
    if P.square() - D * Q.square() != Poly(Fraction(-d) ** n):
        raise PreconditionViolated(f"pair is not at norm level (-d)^{n}")
    inv = Fraction(1, d)
    return ((D * Q - f * P) * inv, (P - f * Q) * inv)


def _positive_leading(p: Poly) -> Poly:
    return -p if (p.coeffs and p.leading < 0) else p


def identify_solution(P, Q, f, d: int) -> int | None:
    """Match a verified integer solution against the generated family.

    Rescales (P, Q) to the norm level (-d)^n implied by deg P = n * deg f
    (when that scale is rational; otherwise the chain runs at norm level 1)
    and descends repeatedly, normalizing signs at each step.  Returns n when
    the chain ends at (1, 0) after exactly n degree-dropping steps, None if
    any step breaks the expected degrees or integrality.
    """
    P, Q, f = Poly(P), Poly(Q), Poly(f)
    if d == 0:
        raise ZeroD("d must be a nonzero integer")
    D = f * f + d
    if not verify(P, Q, D):
        raise NotASolution("P^2 - (f^2+d)*Q^2 != 1")
    if Q.is_zero():
        return 0
    if P.is_zero():
        return None
    f = _positive_leading(f)
    deg_f = f.degree
    if not isinstance(deg_f, int) or deg_f < 1:
        return None
    deg_p = P.degree
    if deg_p % deg_f:
        return None
    n = deg_p // deg_f
    if Q.degree != (n - 1) * deg_f:
        return None
    cur_p = _positive_leading(P)
    cur_q = _positive_leading(Q)
    scale = _normalizer(d, n)
    if scale is not None:
        # Integral chain at levels n, n-1, ..., 0.
        cur_p = cur_p * abs(scale)
        cur_q = cur_q * abs(scale)
        for level in range(n, 0, -1):
            cur_p, cur_q = descend(cur_p, cur_q, f, d, level)
            cur_p = _positive_leading(cur_p)
            cur_q = _positive_leading(cur_q)
            if not (cur_p.is_integral() and cur_q.is_integral()):
                return None
            remaining = level - 1
            if cur_p.degree != (remaining * deg_f if remaining else 0):
                return None
            expected_q = (remaining - 1) * deg_f if remaining else None
            if remaining == 0:
                if not cur_q.is_zero():
                    return None
            elif cur_q.degree != expected_q:
                return None
        return n if cur_p == ONE else None
    # Irrational rescale: run the same chain at norm level 1, through the
    # rational levels (-d)^0, (-d)^-1, ...; only degree shape is checked.
    for step in range(n):
        cur_p, cur_q = descend(cur_p, cur_q, f, d, -step)
        cur_p = _positive_leading(cur_p)
        cur_q = _positive_leading(cur_q)
        remaining = n - step - 1
        if cur_p.degree != (remaining * deg_f if remaining else 0):
            return None
        if remaining == 0:
            if not cur_q.is_zero():
                return None
        elif cur_q.degree != (remaining - 1) * deg_f:
            return None
    target = Fraction(-d) ** (-n)
    value = cur_p.coeffs[0] if cur_p.coeffs else 0
    return n if value * value == target else None


def solve_square_shift(f, n: int) -> PellSolution | None:
    """Integer solutions of P^2 - f*Q^2 = 1 when f + 1 is a perfect square.

    With g^2 = f + 1, the pair (N_n(f, g), D_n(f, g)) has norm
    (g^2 - f)^n = 1, so it solves the equation directly, for every n.
    Returns None when f + 1 has no integer polynomial square root.
    """
    f = Poly(f)
    g = (f + 1).sqrt()
    if g is None:
        return None
    pair = redei_recurrence(f, g, n)
    return PellSolution(pair.N, pair.D, n, True, 1)


def nathanson(d: int, n: int) -> tuple[Poly, Poly]:
    """The classical explicit solutions of P^2 - (x^2 + d)*Q^2 = 1.

    For d in {1, 2, -2}:
        A_k = (2/d x^2 + 1) A_{k-1} + (2/d) x (x^2 + d) B_{k-1},  A_0 = 1
        B_k = (2/d) x A_{k-1} + (2/d x^2 + 1) B_{k-1},            B_0 = 0
    For d = -1:
        A'_k = x A'_{k-1} + (x^2 - 1) B'_{k-1},                   A'_0 = 1
        B'_k = A'_{k-1} + x B'_{k-1},                             B'_0 = 0
    """
    if d not in (1, -1, 2, -2):
        raise UnsupportedD(f"d={d} is outside {{1, -1, 2, -2}}")
    A, B = ONE, Poly()
    if d == -1:
        shift = X * X - 1
        for _ in range(n):
            A, B = X * A + shift * B, A + X * B
        return A, B
    c = 2 // d
    diag = Poly([1, 0, c])
    upper = X * (X * X + d) * c
    lower = X * c
    for _ in range(n):
        A, B = diag * A + upper * B, lower * A + diag * B
    return A, B
