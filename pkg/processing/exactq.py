"""
Exact rational scalars and dense matrices over Q

Rationals are `fractions.Fraction` values, always reduced with a positive denominator,
so equality is structural. Matrices are immutable row-major tables of Fractions.
Pivoting is deterministic: the first nonzero entry in column order.
"""
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from processing.errors import NotSquare, NotSymmetric, ShapeMismatch, SingularMatrix

RationalLike = Union[int, str, Fraction]
Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value: RationalLike) -> Fraction:
    """Parse an int, Fraction or "p/q" string into a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"Not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE "):
            raise ValueError(f"Not an exact rational literal: {value!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError as e:
            raise ValueError(f"Zero denominator in {value!r}") from e
    raise TypeError(f"Not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Serialize as "p/q", or "p" when q = 1"""
    return str(Fraction(value))


def vector(values: Iterable[RationalLike]) -> Vector:
    return tuple(to_rational(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def support(v: Sequence[Fraction]) -> List[Tuple[int, Fraction]]:
    """(index, value) for the nonzero entries of v"""
    return [(i, a) for i, a in enumerate(v) if a]


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


def linear_combination(coefficients: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]],
                       length: int) -> Vector:
    """Sum of c_i * v_i, with an explicit length so empty sums are well defined"""
    acc = [ZERO] * length
    for c, v in zip(coefficients, vectors):
        if c == 0:
            continue
        for k, a in enumerate(v):
            if a:
                acc[k] += c * a
    return tuple(acc)


def row_reduce(rows: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[List[List[Fraction]], Tuple[int, ...]]:
    """
    Reduced row echelon form

    Args:
        rows: matrix rows (not modified)
        ncols: number of columns, needed when rows is empty

    Returns:
        (nonzero reduced rows, pivot column indices)
    """
    work = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    nrows = len(work)
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            work[r], work[pivot_row] = work[pivot_row], work[r]
        lead = work[r][c]
        if lead != 1:
            work[r] = [a / lead for a in work[r]]
        prow = work[r]
        nonzero = [(k, prow[k]) for k in range(c, ncols) if prow[k]]
        for i in range(nrows):
            if i == r:
                continue
            factor = work[i][c]
            if factor == 0:
                continue
            row_i = work[i]
            for k, a in nonzero:
                row_i[k] -= factor * a
        pivots.append(c)
        r += 1
    return work[:r], tuple(pivots)


class QMatrix:
    """An immutable dense matrix over Q"""

    __slots__ = ("_rows", "rows", "cols")

    def __init__(self, entries: Sequence[Sequence[RationalLike]], cols: Optional[int] = None):
        table = tuple(tuple(to_rational(a) for a in row) for row in entries)
        if cols is None:
            cols = len(table[0]) if table else 0
        if any(len(row) != cols for row in table):
            raise ShapeMismatch(f"Every row must have {cols} entries")
        self._rows = table
        self.rows = len(table)
        self.cols = cols

    @classmethod
    def _wrap(cls, rows: Sequence[Sequence[Fraction]], cols: int) -> "QMatrix":
        """Adopt rows that already hold Fractions of equal length"""
        m = cls.__new__(cls)
        m._rows = tuple(tuple(row) for row in rows)
        m.rows = len(m._rows)
        m.cols = cols
        return m

    # -- construction ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([unit_vector(n, i) for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls([zero_vector(cols) for _ in range(rows)], cols=cols)

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "QMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: int) -> "QMatrix":
        return cls([[col[i] for col in columns] for i in range(rows)], cols=len(columns))

    # -- access ------------------------------------------------------------

    @property
    def entries(self) -> Tuple[Fraction, ...]:
        """Row-major entry sequence"""
        return tuple(a for row in self._rows for a in row)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._rows)

    def tolist(self) -> List[List[Fraction]]:
        return [list(row) for row in self._rows]

    def to_strings(self) -> List[List[str]]:
        return [[format_rational(a) for a in row] for row in self._rows]

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        return f"QMatrix({self.to_strings()!r})"

    # -- arithmetic --------------------------------------------------------

    @property
    def T(self) -> "QMatrix":
        return QMatrix._wrap([self.column(j) for j in range(self.cols)], self.rows)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise ShapeMismatch(f"Cannot add {self.shape} and {other.shape}")
        return QMatrix._wrap([vec_add(a, b) for a, b in zip(self._rows, other._rows)], self.cols)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise ShapeMismatch(f"Cannot subtract {other.shape} from {self.shape}")
        return QMatrix._wrap([vec_sub(a, b) for a, b in zip(self._rows, other._rows)], self.cols)

    def __neg__(self) -> "QMatrix":
        return self.scale(-1)

    def scale(self, c: RationalLike) -> "QMatrix":
        c = to_rational(c)
        return QMatrix._wrap([vec_scale(c, row) for row in self._rows], self.cols)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"Cannot multiply {self.shape} by {other.shape}")
        right = [support(row) for row in other._rows]
        product = []
        for row in self._rows:
            acc = [ZERO] * other.cols
            for i, a in enumerate(row):
                if a:
                    for j, b in right[i]:
                        acc[j] += a * b
            product.append(acc)
        return QMatrix._wrap(product, other.cols)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix times column vector"""
        if len(v) != self.cols:
            raise ShapeMismatch(f"Vector of length {len(v)} does not fit {self.shape}")
        nonzero = support(v)
        return tuple(sum((row[i] * b for i, b in nonzero if row[i]), ZERO) for row in self._rows)

    # -- structure ---------------------------------------------------------

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._rows[i][j] == self._rows[j][i] for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def is_zero(self) -> bool:
        return all(is_zero_vector(row) for row in self._rows)

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "QMatrix":
        return QMatrix._wrap([[self._rows[i][j] for j in col_indices] for i in row_indices], len(col_indices))


def rank(m: QMatrix) -> int:
    """Rank over Q by exact Gaussian elimination"""
    return len(row_reduce(m.tolist(), m.cols)[1])


def rank_of_vectors(vectors: Sequence[Sequence[Fraction]], length: int) -> int:
    return len(row_reduce(vectors, length)[1])


def nullspace(m: QMatrix) -> List[Vector]:
    """
    Basis of {x : Mx = 0}

    One vector per free column of the reduced row echelon form, with a 1 in that
    column, in increasing column order.
    """
    reduced, pivots = row_reduce(m.tolist(), m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        x = [ZERO] * m.cols
        x[free] = ONE
        for k, p in enumerate(pivots):
            x[p] = -reduced[k][free]
        basis.append(tuple(x))
    return basis


def left_nullspace(m: QMatrix) -> List[Vector]:
    """Basis of {c : cM = 0}"""
    return nullspace(m.T)


def inverse(m: QMatrix) -> QMatrix:
    if not m.is_square():
        raise NotSquare(f"Cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    augmented = [list(row) + list(unit_vector(n, i)) for i, row in enumerate(m)]
    reduced, pivots = row_reduce(augmented, 2 * n)
    if pivots[:n] != tuple(range(n)) or len(reduced) < n:
        raise SingularMatrix(f"Matrix of order {n} has rank {rank(m)}")
    return QMatrix([row[n:] for row in reduced[:n]], cols=n)


def determinant(m: QMatrix) -> Fraction:
    if not m.is_square():
        raise NotSquare(f"Determinant of a {m.rows}x{m.cols} matrix")
    work = m.tolist()
    n = m.rows
    det = ONE
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if work[i][c] != 0), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
            det = -det
        lead = work[c][c]
        det *= lead
        for i in range(c + 1, n):
            factor = work[i][c] / lead
            if factor:
                for k in range(c, n):
                    work[i][k] -= factor * work[c][k]
    return det


def solve(m: QMatrix, b: Sequence[Fraction]) -> Optional[Vector]:
    """One solution of Mx = b (free variables set to zero), or None if inconsistent"""
    if len(b) != m.rows:
        raise ShapeMismatch(f"Right-hand side of length {len(b)} does not fit {m.shape}")
    augmented = [list(row) + [to_rational(v)] for row, v in zip(m, b)]
    reduced, pivots = row_reduce(augmented, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for k, p in enumerate(pivots):
        x[p] = reduced[k][m.cols]
    return tuple(x)


def independent_rows(m: QMatrix) -> Tuple[int, ...]:
    """Indices of the first maximal linearly independent set of rows, in order"""
    return row_reduce(m.T.tolist(), m.rows)[1]


def complement_basis(vectors: Sequence[Sequence[Fraction]], n: int) -> Tuple[int, ...]:
    """
    Standard basis indices completing span(vectors) to Q^n

    Greedy over e_0, e_1, ...: the pivot columns of [vectors | I] that fall in the I part.
    """
    columns = [list(v) for v in vectors]
    columns += [list(unit_vector(n, i)) for i in range(n)]
    as_rows = [[col[i] for col in columns] for i in range(n)]
    _, pivots = row_reduce(as_rows, len(columns))
    offset = len(vectors)
    return tuple(p - offset for p in pivots if p >= offset)


def decompose_symmetric(s: QMatrix) -> Tuple[QMatrix, QMatrix]:
    """
    Rational congruence decomposition S = tP1 * Q * P1

    Args:
        s: symmetric n x n matrix of rank l

    Returns:
        (P1, Q) with P1 of shape l x n and rank l, Q symmetric invertible l x l.
        An invertible S comes back as (identity, S); otherwise Lagrange reduction
        gives tT * S * T = diag(q_1, ..., q_l, 0, ..., 0) and P1 is the first l rows
        of T^-1.
    """
    if not s.is_square():
        raise NotSquare(f"Cannot decompose a {s.rows}x{s.cols} matrix")
    if not s.is_symmetric():
        raise NotSymmetric("Congruence decomposition needs S = tS")
    n = s.rows
    if rank(s) == n:
        return QMatrix.identity(n), s

    work = s.tolist()
    # columns of T, kept as rows for cheap updates
    t_cols = [list(unit_vector(n, i)) for i in range(n)]

    def add_multiple(target: int, source: int, c: Fraction) -> None:
        # column and row operation: col_target += c * col_source, row likewise
        for i in range(n):
            work[i][target] += c * work[i][source]
        for j in range(n):
            work[target][j] += c * work[source][j]
        t_cols[target] = [a + c * b for a, b in zip(t_cols[target], t_cols[source])]

    def swap(a: int, b: int) -> None:
        work[a], work[b] = work[b], work[a]
        for row in work:
            row[a], row[b] = row[b], row[a]
        t_cols[a], t_cols[b] = t_cols[b], t_cols[a]

    size = 0
    for k in range(n):
        pivot = next((i for i in range(k, n) if work[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if work[i][j] != 0), None)
            if pair is None:
                break
            # characteristic != 2: e_i + e_j has value 2 * s_ij on the diagonal
            add_multiple(pair[0], pair[1], ONE)
            pivot = pair[0]
        if pivot != k:
            swap(k, pivot)
        lead = work[k][k]
        for j in range(k + 1, n):
            if work[k][j] != 0:
                add_multiple(j, k, -work[k][j] / lead)
        size += 1

    t = QMatrix.from_columns(t_cols, n)
    p1 = QMatrix(inverse(t).tolist()[:size], cols=n)
    q = QMatrix.diagonal([work[i][i] for i in range(size)]) if size else QMatrix([], cols=0)
    return p1, q
