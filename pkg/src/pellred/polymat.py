"""Small square matrices with polynomial entries.

Products, binary-exponentiation powers, exact determinants (fraction-free
Bareiss with a cofactor fallback for tiny sizes), characteristic polynomials,
and the twisted-circulant builder used by the degree-m Pell equation.
"""

from __future__ import annotations

from fractions import Fraction

from .polyring import DomainError, ONE, Poly, ZERO


class DimensionMismatch(DomainError):
    """Matrix shapes do not line up."""


def _as_poly(v) -> Poly:
    return v if isinstance(v, Poly) else Poly(v)


class PolyMatrix:
    """An immutable square matrix of polynomials."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        mat = tuple(tuple(_as_poly(v) for v in row) for row in rows)
        if not mat or any(len(r) != len(mat) for r in mat):
            raise DimensionMismatch("matrix must be square and non-empty")
        self.rows = mat

    @classmethod
    def identity(cls, dim: int) -> PolyMatrix:
        return cls([[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Poly:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(row[j] for row in self.rows)

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
        return f"PolyMatrix[{body}]"

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionMismatch(f"cannot multiply {self.dim}x{self.dim} by {other.dim}x{other.dim}")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(row, col):
                    if a.coeffs and b.coeffs:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return PolyMatrix(out)

    def pow(self, n: int) -> PolyMatrix:
        """n-th power by binary exponentiation; the 0th power is the identity."""
        if n < 0:
            raise ValueError("negative matrix powers are not supported")
        result = PolyMatrix.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    # -- determinants --------------------------------------------------------

    def det(self) -> Poly:
        """Exact determinant: cofactor expansion up to 3x3, Bareiss beyond."""
        return self.det_cofactor() if self.dim <= 3 else self.det_bareiss()

    def det_cofactor(self) -> Poly:
        """Cofactor expansion along the first row (oracle for small sizes)."""
        return _det_cofactor(self.rows)

    def det_bareiss(self) -> Poly:
        """Fraction-free Bareiss elimination; every division is exact."""
        n = self.dim
        if n == 1:
            return self.rows[0][0]
        m = [list(row) for row in self.rows]
        sign = 1
        prev = ONE
        for k in range(n - 1):
            if m[k][k].is_zero():
                for i in range(k + 1, n):
                    if not m[i][k].is_zero():
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return ZERO
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                    m[i][j] = num.div_exact(prev)
            prev = m[k][k]
        result = m[n - 1][n - 1]
        return result if sign == 1 else -result

    def char_poly(self) -> tuple[Poly, ...]:
        """Coefficients of det(tI - self) as polynomials in x, ascending in t.

        The degree in t is exactly dim, so evaluating the determinant at
        dim+1 integer values of t and interpolating recovers it exactly
        without a bivariate ring.
        """
        n = self.dim
        nodes = range(n + 1)
        values = []
        for t in nodes:
            shifted = PolyMatrix(
                [
                    [(Poly(t) - e) if i == j else -e for j, e in enumerate(row)]
                    for i, row in enumerate(self.rows)
                ]
            )
            values.append(shifted.det())
        coeffs = [ZERO] * (n + 1)
        for k in nodes:
            # Lagrange basis for node k over the integer nodes, as exact rationals.
            basis = [Fraction(1)]
            denom = 1
            for i in nodes:
                if i != k:
                    basis = [Fraction(0)] + basis
                    for j in range(len(basis) - 1):
                        basis[j] -= i * basis[j + 1]
                    denom *= k - i
            for j, b in enumerate(basis):
                scale = b / denom
                if scale:
                    coeffs[j] = coeffs[j] + values[k] * scale
        return tuple(coeffs)

    # -- JSON form -------------------------------------------------------------

    def to_json(self) -> list:
        return [[e.to_json() for e in row] for row in self.rows]

    @classmethod
    def from_json(cls, data) -> PolyMatrix:
        return cls([[Poly.from_json(e) for e in row] for row in data])


def _det_cofactor(rows) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = ZERO
    for j, top in enumerate(rows[0]):
        if top.is_zero():
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = top * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def build_circulant(sols, R) -> PolyMatrix:
    """The m x m R-twisted circulant with first column ``sols``.

    Entry (i, j) is sols[(i - j) mod m], multiplied by R above the diagonal.
    Its determinant is the degree-m Pell form; for m = 2 it is P^2 - R*Q^2.
    """
    sols = [_as_poly(s) for s in sols]
    R = _as_poly(R)
    m = len(sols)
    if m < 2:
        raise DimensionMismatch("a circulant needs at least two components")
    return PolyMatrix(
        [
            [sols[(i - j) % m] if j <= i else sols[(i - j) % m] * R for j in range(m)]
            for i in range(m)
        ]
    )
