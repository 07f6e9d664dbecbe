"""Exact 2x2 linear algebra over the Gaussian rationals: SL(2) samplers,
trace matrices, and exact determinant / left-kernel computation.

Floating point is banned here; every scalar is a pair of Fractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class SingularError(ZeroDivisionError):
    pass


class NotUnimodularError(ValueError):
    pass


class LengthMismatchError(ValueError):
    pass


class NonSquareError(ValueError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x)!r}")


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """Exact complex scalar re + im*i with rational components."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other) -> "GaussianRational":
        other = _gr(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other) -> "GaussianRational":
        other = _gr(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussianRational":
        return _gr(other) - self

    def __mul__(self, other) -> "GaussianRational":
        other = _gr(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        other = _gr(other)
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise SingularError("division by zero")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other) -> "GaussianRational":
        return _gr(other) / self

    def __repr__(self) -> str:
        if not self.im:
            return str(self.re)
        return f"({self.re}{'+' if self.im > 0 else ''}{self.im}i)"


def _gr(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(_frac(x))
    raise TypeError(f"expected GaussianRational-compatible value, got {type(x)!r}")


GR_ZERO = GaussianRational()
GR_ONE = GaussianRational(Fraction(1))
GR_TWO = GaussianRational(Fraction(2))


@dataclass(frozen=True, slots=True)
class Mat2:
    """2x2 matrix over the Gaussian rationals."""

    e11: GaussianRational
    e12: GaussianRational
    e21: GaussianRational
    e22: GaussianRational

    @classmethod
    def of(cls, e11, e12, e21, e22) -> "Mat2":
        return cls(_gr(e11), _gr(e12), _gr(e21), _gr(e22))

    @classmethod
    def identity(cls) -> "Mat2":
        return cls.of(1, 0, 0, 1)

    @classmethod
    def sl2(cls, e11, e12, e21, e22) -> "Mat2":
        m = cls.of(e11, e12, e21, e22)
        if m.det() != GR_ONE:
            raise NotUnimodularError(f"determinant {m.det()!r} is not 1")
        return m

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def trace(self) -> GaussianRational:
        return self.e11 + self.e22

    def det(self) -> GaussianRational:
        return self.e11 * self.e22 - self.e12 * self.e21

    def inverse(self) -> "Mat2":
        d = self.det()
        if not d:
            raise SingularError("matrix is singular")
        adj = Mat2(self.e22, -self.e12, -self.e21, self.e11)
        if d == GR_ONE:
            return adj
        return Mat2(adj.e11 / d, adj.e12 / d, adj.e21 / d, adj.e22 / d)

    def is_unimodular(self) -> bool:
        return self.det() == GR_ONE

    def __repr__(self) -> str:
        return f"[[{self.e11!r}, {self.e12!r}], [{self.e21!r}, {self.e22!r}]]"


GEN_S = Mat2.of(0, -1, 1, 0)
GEN_T = Mat2.of(1, 1, 0, 1)

DEFAULT_WORD_LEN = 12
DEFAULT_HEIGHT_BOUND = 5


def trace_relation_check(m: Mat2, big_m: Mat2) -> tuple[GaussianRational, GaussianRational]:
    """Both sides of tr(m*M^-1) = tr(m)*tr(M) - tr(m*M) for unimodular m, M."""
    if not m.is_unimodular() or not big_m.is_unimodular():
        raise NotUnimodularError("trace relation needs determinant-1 inputs")
    lhs = (m @ big_m.inverse()).trace()
    rhs = m.trace() * big_m.trace() - (m @ big_m).trace()
    return lhs, rhs


def _resolve_rng(rng: random.Random | int) -> random.Random:
    if isinstance(rng, random.Random):
        return rng
    return random.Random(rng)


def random_sl2z(word_len: int, rng: random.Random | int) -> Mat2:
    """Product of word_len uniform factors from {S, S^-1, T, T^-1}; always
    determinant 1 with integer entries, reproducible for a fixed seed."""
    gen = _resolve_rng(rng)
    alphabet = (GEN_S, GEN_S.inverse(), GEN_T, GEN_T.inverse())
    result = Mat2.identity()
    for _ in range(word_len):
        result = result @ gen.choice(alphabet)
    return result


def _random_fraction(gen: random.Random, height: int) -> Fraction:
    return Fraction(gen.randint(-height, height), gen.randint(1, height))


def random_sl2_gaussian(
    rng: random.Random | int, height_bound: int = DEFAULT_HEIGHT_BOUND
) -> Mat2:
    """Determinant-1 matrix with genuinely complex entries: a, b, c are
    random Gaussian rationals of bounded height (a resampled until nonzero)
    and d = (1 + b*c)/a."""
    gen = _resolve_rng(rng)
    while True:
        a = GaussianRational(_random_fraction(gen, height_bound), _random_fraction(gen, height_bound))
        if a:
            break
    b = GaussianRational(_random_fraction(gen, height_bound), _random_fraction(gen, height_bound))
    c = GaussianRational(_random_fraction(gen, height_bound), _random_fraction(gen, height_bound))
    d = (GR_ONE + b * c) / a
    return Mat2.sl2(a, b, c, d)


GRMatrix = list[list[GaussianRational]]


def _require_unimodular(mats: Sequence[Mat2], what: str) -> None:
    for idx, m in enumerate(mats):
        if not m.is_unimodular():
            raise NotUnimodularError(f"{what}[{idx}] has determinant {m.det()!r}")


def build_magnus_matrices(
    ms: Sequence[Mat2], big_ms: Sequence[Mat2]
) -> tuple[GRMatrix, GRMatrix, GRMatrix]:
    """Trace matrices A, B, C for the generalized determinant identity.

    With m_0 = M_0 = I: A is (n+1)x(n+1) with A[i][j] = tr(m_i M_j^-1) when
    i+j is even and tr(m_i M_j) otherwise; B[i][j] = -tr(m_i M_j) and
    C[i][j] = tr(m_i M_j^-1) for 1 <= i, j <= n.  Note B carries the minus
    sign, so the identity reads det A = det B + det C.
    """
    if len(ms) != len(big_ms):
        raise LengthMismatchError(f"{len(ms)} m's vs {len(big_ms)} M's")
    _require_unimodular(ms, "m")
    _require_unimodular(big_ms, "M")
    n = len(ms)
    m_full = [Mat2.identity(), *ms]
    big_full = [Mat2.identity(), *big_ms]
    big_inv = [x.inverse() for x in big_full]
    a_mat = [
        [
            (m_full[i] @ (big_inv[j] if (i + j) % 2 == 0 else big_full[j])).trace()
            for j in range(n + 1)
        ]
        for i in range(n + 1)
    ]
    b_mat = [
        [-(m_full[i] @ big_full[j]).trace() for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    c_mat = [
        [(m_full[i] @ big_inv[j]).trace() for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return a_mat, b_mat, c_mat


def validate_sign_vector(eps: Sequence[int]) -> tuple[int, ...]:
    vec = tuple(eps)
    if any(e not in (1, -1) for e in vec):
        raise ValueError(f"sign vector entries must be +1 or -1, got {vec}")
    return vec


def build_thm2_D(
    ms: Sequence[Mat2], big_ms: Sequence[Mat2], eps: Sequence[int]
) -> GRMatrix:
    """The n x n matrix D[i][j] = tr(m_i M_j^{eps_i}); row i uses the single
    exponent eps_i throughout."""
    if not (len(ms) == len(big_ms) == len(eps)):
        raise LengthMismatchError(
            f"lengths differ: {len(ms)} m's, {len(big_ms)} M's, {len(eps)} signs"
        )
    vec = validate_sign_vector(eps)
    _require_unimodular(ms, "m")
    _require_unimodular(big_ms, "M")
    big_inv = [x.inverse() for x in big_ms]
    return [
        [
            (ms[i] @ (big_ms[j] if vec[i] == 1 else big_inv[j])).trace()
            for j in range(len(big_ms))
        ]
        for i in range(len(ms))
    ]


def trace_matrix(left: Sequence[Mat2], right: Sequence[Mat2], invert_right: bool = False) -> GRMatrix:
    """The matrix (tr(left_i * right_j)) or (tr(left_i * right_j^-1))."""
    cols = [x.inverse() for x in right] if invert_right else list(right)
    return [[(li @ rj).trace() for rj in cols] for li in left]


def _require_square_gr(rows: GRMatrix) -> int:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NonSquareError("matrix is not square")
    return n


def exact_det(rows: GRMatrix) -> GaussianRational:
    """Exact determinant by Gaussian elimination over the field, pivoting on
    the first nonzero entry of each column."""
    n = _require_square_gr(rows)
    work = [list(r) for r in rows]
    det = GR_ONE
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if work[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            return GR_ZERO
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        pivot = work[col][col]
        det = det * pivot
        for r in range(col + 1, n):
            if work[r][col]:
                factor = work[r][col] / pivot
                for c in range(col, n):
                    work[r][c] = work[r][c] - factor * work[col][c]
    return det


def left_kernel(rows: GRMatrix) -> list[GaussianRational] | None:
    """A nonzero row vector v with v*M = 0, normalized so its first nonzero
    coordinate is 1; None when M has full rank."""
    n = _require_square_gr(rows)
    if n == 0:
        return None
    # v*M = 0 is M^t x = 0 for the column vector x = v^t.
    work = [[rows[r][c] for r in range(n)] for c in range(n)]
    pivots: list[tuple[int, int]] = []
    pivot_row = 0
    for col in range(n):
        found = None
        for r in range(pivot_row, n):
            if work[r][col]:
                found = r
                break
        if found is None:
            continue
        if found != pivot_row:
            work[pivot_row], work[found] = work[found], work[pivot_row]
        piv = work[pivot_row][col]
        for r in range(pivot_row + 1, n):
            if work[r][col]:
                factor = work[r][col] / piv
                for c in range(col, n):
                    work[r][c] = work[r][c] - factor * work[pivot_row][c]
        pivots.append((pivot_row, col))
        pivot_row += 1
        if pivot_row == n:
            break
    if len(pivots) == n:
        return None
    pivot_cols = {c for _, c in pivots}
    free_col = next(c for c in range(n) if c not in pivot_cols)
    x = [GR_ZERO] * n
    x[free_col] = GR_ONE
    for pr, pc in reversed(pivots):
        acc = GR_ZERO
        for c in range(pc + 1, n):
            if x[c]:
                acc = acc + work[pr][c] * x[c]
        x[pc] = -acc / work[pr][pc]
    lead = next(v for v in x if v)
    return [v / lead for v in x]


def mat_mul_vec_left(v: Sequence[GaussianRational], rows: GRMatrix) -> list[GaussianRational]:
    """The row vector v*M, computed by plain exact multiplication."""
    n = len(rows)
    if len(v) != n:
        raise LengthMismatchError(f"vector length {len(v)} vs {n} rows")
    cols = len(rows[0]) if rows else 0
    out = []
    for j in range(cols):
        acc = GR_ZERO
        for i in range(n):
            acc = acc + v[i] * rows[i][j]
        out.append(acc)
    return out


def gaussian_to_json(x: GaussianRational) -> dict[str, str]:
    return {
        "re_num": str(x.re.numerator),
        "re_den": str(x.re.denominator),
        "im_num": str(x.im.numerator),
        "im_den": str(x.im.denominator),
    }


def matrix_to_json(rows: GRMatrix) -> list[list[dict[str, str]]]:
    return [[gaussian_to_json(x) for x in row] for row in rows]


def mat2_to_json(m: Mat2) -> list[list[dict[str, str]]]:
    return [
        [gaussian_to_json(m.e11), gaussian_to_json(m.e12)],
        [gaussian_to_json(m.e21), gaussian_to_json(m.e22)],
    ]
