"""Dense square matrices over the rationals and exact Gaussian elimination."""

from __future__ import annotations

from functools import lru_cache
from itertools import chain, repeat
from operator import add, sub
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from ..errors import DimensionMismatch

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    from fractions import Rational as Rational


def Q(value, denominator=None) -> Rational:
    """Coerce ``value`` (or ``value/denominator``) to an exact rational.

    Accepts ints, rationals (Rational, mpq) and strings such as ``"3/4"``.
    Floats are rejected so that nothing inexact leaks in by accident.
    """
    if denominator is not None:
        return Rational(int(value), int(denominator))
    if type(value) is Rational:
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, _RationalABC):
        return Rational(int(value.numerator), int(value.denominator))
    if isinstance(value, int):
        return Rational(value)
    if isinstance(value, str):
        return Rational(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} {value!r} to an exact rational")


_ZERO = Rational(0)


def rational_str(q) -> str:
    q = Q(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class QMatrix:
    """Immutable square matrix with :class:`Rational` entries.

    ``A @ B`` is the matrix product, ``c * A`` scales by a rational.
    """

    __slots__ = ("_rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(v if type(v) is Rational else Q(v) for v in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("QMatrix must have dim >= 1")
        if any(len(r) != n for r in rows):
            raise ValueError("QMatrix must be square")
        self._rows = rows
        self._hash = None

    @classmethod
    def _trusted(cls, rows: tuple) -> "QMatrix":
        obj = cls.__new__(cls)
        obj._rows = rows
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int) -> "QMatrix":
        z = _ZERO
        return cls._trusted(tuple((z,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return _identity(n)

    @classmethod
    def diag(cls, values: Sequence) -> "QMatrix":
        n = len(values)
        vals = [Q(v) for v in values]
        z = Q(0)
        return cls._trusted(tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def from_flat(cls, n: int, flat: Sequence) -> "QMatrix":
        if len(flat) != n * n:
            raise DimensionMismatch(f"expected {n * n} entries, got {len(flat)}")
        flat = [v if type(v) is Rational else Q(v) for v in flat]
        return cls._trusted(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def flat(self) -> tuple:
        return tuple(chain.from_iterable(self._rows))

    def tolist(self) -> list:
        return [list(r) for r in self._rows]

    def _check(self, other: "QMatrix"):
        if not isinstance(other, QMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {other.dim}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return QMatrix._trusted(tuple(map(tuple, map(map, repeat(add), self._rows, other._rows))))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return QMatrix._trusted(tuple(map(tuple, map(map, repeat(sub), self._rows, other._rows))))

    def __neg__(self):
        return QMatrix._trusted(tuple(tuple(-a for a in r) for r in self._rows))

    def __mul__(self, c):
        if isinstance(c, QMatrix):
            raise TypeError("use @ for the matrix product")
        c = Q(c)
        return QMatrix._trusted(tuple(tuple(c * a for a in r) for r in self._rows))

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Q(c))

    def __matmul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        n = self.dim
        # sparse view of the right factor: per row, the (column, value) pairs that are nonzero
        sparse = [[(j, b) for j, b in enumerate(row) if b] for row in other._rows]
        out = []
        for r in self._rows:
            acc = [_ZERO] * n
            for a, srow in zip(r, sparse):
                if a and srow:
                    for j, b in srow:
                        acc[j] += a * b
            out.append(tuple(acc))
        return QMatrix._trusted(tuple(out))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = QMatrix.identity(self.dim)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, v: Sequence) -> tuple:
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), _ZERO) for r in self._rows)

    def transpose(self) -> "QMatrix":
        return QMatrix._trusted(tuple(zip(*self._rows)))

    def trace(self) -> Rational:
        return sum((self._rows[i][i] for i in range(self.dim)), _ZERO)

    def is_zero(self) -> bool:
        return not any(v for row in self._rows for v in row)

    def inverse(self) -> "QMatrix":
        n = self.dim
        aug = [list(r) + [Q(int(i == j)) for j in range(n)] for i, r in enumerate(self._rows)]
        red, pivots, rank = rref(aug)
        if pivots[:n] != list(range(n)) or rank < n:
            raise ZeroDivisionError("matrix is singular")
        return QMatrix._trusted(tuple(tuple(row[n:]) for row in red))

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(rational_str(v) for v in r) + "]" for r in self._rows)
        return f"QMatrix([{body}])"


@lru_cache(maxsize=64)
def _identity(n: int) -> QMatrix:
    return QMatrix.diag([1] * n)


def bracket(a: QMatrix, b: QMatrix) -> QMatrix:
    """Commutator ``ab - ba``."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"dim {a.dim} vs {b.dim}")
    return a @ b - b @ a


def rref(m: Sequence[Sequence]) -> tuple[list[list[Rational]], list[int], int]:
    """Reduced row echelon form of a rectangular rational matrix.

    Returns ``(reduced, pivot_columns, rank)``; the input is not modified.
    Pivot rows are normalized to a leading 1.
    """
    rows = [[v if type(v) is Rational else Q(v) for v in r] for r in m]
    if not rows:
        return [], [], 0
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DimensionMismatch("ragged matrix")
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        piv = [v * inv for v in rows[r]]
        rows[r] = piv
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], piv)]
        pivots.append(c)
        r += 1
    return rows, pivots, len(pivots)


def kernel(m: Sequence[Sequence], ncols: int | None = None) -> list[tuple[Rational, ...]]:
    """Basis of the right null space ``{v : m v = 0}``.

    One vector per free column, with a 1 in that column. ``ncols`` is only
    needed when ``m`` has no rows.
    """
    red, pivots, _ = rref(m)
    if red:
        ncols = len(red[0])
    elif ncols is None:
        raise ValueError("ncols required for an empty matrix")
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Q(0)] * ncols
        v[free] = Q(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(tuple(v))
    return basis


def solve_coordinates(vectors: Sequence[Sequence], target: Sequence) -> tuple[Rational, ...] | None:
    """Coefficients ``c`` with ``sum c_i vectors[i] == target``, or None.

    ``vectors`` must be linearly independent for the answer to be unique.
    """
    k = len(vectors)
    if k == 0:
        return () if not any(Q(t) for t in target) else None
    aug = [[vec[i] for vec in vectors] + [target[i]] for i in range(len(target))]
    red, pivots, _ = rref(aug)
    if k in pivots:
        return None
    coeffs = [Q(0)] * k
    for row, pc in zip(red, pivots):
        coeffs[pc] = row[k]
    return tuple(coeffs)


class CoordinateSolver:
    """Repeated ``solve_coordinates`` against one fixed, independent family.

    The elimination is done once, remembering how each reduced row is built
    from the original vectors, so each query costs one reduction pass.
    """

    __slots__ = ("k", "_rows", "_pivots")

    def __init__(self, vectors: Sequence[Sequence]):
        k = len(vectors)
        aug = [list(v) + [int(i == j) for j in range(k)] for i, v in enumerate(vectors)]
        self.k = k
        if not k:
            self._rows, self._pivots = [], []
            return
        width = len(aug[0]) - k
        red, pivots, rank = rref(aug)
        if rank != k or any(p >= width for p in pivots):
            raise ValueError("vectors are linearly dependent")
        self._rows = [(r[:width], r[width:]) for r in red]
        self._pivots = pivots

    def __call__(self, target: Sequence) -> tuple[Rational, ...] | None:
        residual = list(target)
        coeffs = [_ZERO] * self.k
        for p, (vec, comb) in zip(self._pivots, self._rows):
            c = residual[p]
            if c:
                residual = [a - c * b if b else a for a, b in zip(residual, vec)]
                coeffs = [a + c * b if b else a for a, b in zip(coeffs, comb)]
        if any(residual):
            return None
        return tuple(coeffs)
