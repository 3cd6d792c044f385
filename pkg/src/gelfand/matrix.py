"""Exact dense linear algebra over GF(q).

A matrix stores its entries as a flat row-major tuple of canonical field
indices plus a reference to its field; it is immutable and hashable.  The
canonical byte encoding (rows, cols, entries) doubles as the lookup key in
group tables, so it must stay injective and stable.

Vectors are plain tuples of field indices; helpers below cover the
matrix-vector and inner products the rest of the package needs.

Rank, determinant and inverse use exact Gauss-Jordan elimination with the
pivot chosen as the first nonzero entry in column scan order (any pivot
rule is correct over an exact field; this one is deterministic).
"""

from __future__ import annotations

from .errors import DomainError, SingularMatrixError
from .field import Fq, Scalar


def mul_flat(a: tuple, b: tuple, n: int, field: Fq) -> tuple:
    """Product of two flat n x n entry tuples.  Hot path for group loops."""
    q = field.q
    addt = field._add
    mult = field._mul
    out = []
    for i0 in range(0, n * n, n):
        arow = a[i0:i0 + n]
        for j in range(n):
            acc = 0
            bi = j
            for r in range(n):
                acc = addt[acc * q + mult[arow[r] * q + b[bi]]]
                bi += n
            out.append(acc)
    return tuple(out)


def transpose_flat(a: tuple, rows: int, cols: int) -> tuple:
    return tuple(a[r * cols + c] for c in range(cols) for r in range(rows))


def identity_flat(n: int) -> tuple:
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


def _eliminate(rows_list: list[list[int]], field: Fq,
               pivot_cols: int | None = None):
    """In-place Gauss-Jordan; returns (rank, det) with det of the left
    square part (0 when rank-deficient, sign-corrected for row swaps).
    Pivots are only sought in the first pivot_cols columns, so augmented
    columns never contribute to the rank."""
    m = len(rows_list)
    ncols = len(rows_list[0]) if m else 0
    if pivot_cols is None:
        pivot_cols = ncols
    rank = 0
    det = 1
    for col in range(pivot_cols):
        if rank == m:
            break
        pivot_row = None
        for i in range(rank, m):
            if rows_list[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            rows_list[rank], rows_list[pivot_row] = (rows_list[pivot_row],
                                                     rows_list[rank])
            det = field.neg(det)
        pivot = rows_list[rank][col]
        det = field.mul(det, pivot)
        pinv = field.inv(pivot)
        prow = rows_list[rank]
        for j in range(col, ncols):
            prow[j] = field.mul(prow[j], pinv)
        for i in range(m):
            if i != rank and rows_list[i][col]:
                f = rows_list[i][col]
                row = rows_list[i]
                for j in range(col, ncols):
                    row[j] = field.sub(row[j], field.mul(f, prow[j]))
        rank += 1
    return rank, det


def inverse_flat(a: tuple, n: int, field: Fq) -> tuple:
    """Inverse of a flat n x n entry tuple, or SingularMatrixError."""
    aug = [list(a[i * n:(i + 1) * n])
           + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    rank, _ = _eliminate(aug, field, pivot_cols=n)
    if rank < n:
        raise SingularMatrixError("matrix is singular")
    return tuple(aug[i][n + j] for i in range(n) for j in range(n))


class MatFq:
    """Immutable dense matrix over a fixed GF(q)."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, field: Fq, rows: int, cols: int, entries):
        entries = tuple(entries)
        if rows < 1 or cols < 1 or len(entries) != rows * cols:
            raise DomainError(f"bad shape {rows}x{cols} for {len(entries)} entries")
        q = field.q
        for x in entries:
            if not 0 <= x < q:
                raise DomainError(f"entry {x} not a valid index for {field!r}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, field: Fq, rows) -> "MatFq":
        rows = [list(r) for r in rows]
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DomainError("ragged rows")
        return cls(field, len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, field: Fq, n: int) -> "MatFq":
        return cls(field, n, n, identity_flat(n))

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def encode(self) -> bytes:
        """Canonical byte key (rows, cols, entries); injective for q <= 25."""
        return bytes((self.rows, self.cols)) + bytes(self.entries)

    # -- arithmetic ----------------------------------------------------------

    def _check_same_field(self, other: "MatFq"):
        if self.field != other.field:
            raise DomainError("matrices over different fields")

    def __mul__(self, other: "MatFq") -> "MatFq":
        self._check_same_field(other)
        if self.cols != other.rows:
            raise DomainError(
                f"dimension mismatch: {self.rows}x{self.cols} * "
                f"{other.rows}x{other.cols}")
        f = self.field
        out = []
        for i in range(self.rows):
            arow = self.row(i)
            for j in range(other.cols):
                acc = 0
                for r in range(self.cols):
                    acc = f.add(acc, f.mul(arow[r], other.entries[r * other.cols + j]))
                out.append(acc)
        return MatFq(f, self.rows, other.cols, out)

    def transpose(self) -> "MatFq":
        return MatFq(self.field, self.cols, self.rows,
                     transpose_flat(self.entries, self.rows, self.cols))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.entries == transpose_flat(
            self.entries, self.rows, self.cols)

    def rank(self) -> int:
        work = self.to_rows()
        r, _ = _eliminate(work, self.field)
        return r

    def det(self) -> Scalar:
        if self.rows != self.cols:
            raise DomainError("determinant requires a square matrix")
        work = self.to_rows()
        rank, det = _eliminate(work, self.field)
        return det if rank == self.rows else 0

    def inverse(self) -> "MatFq":
        if self.rows != self.cols:
            raise DomainError("inverse requires a square matrix")
        return MatFq(self.field, self.rows, self.rows,
                     inverse_flat(self.entries, self.rows, self.field))

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, MatFq)
                and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"MatFq({self.field!r}, {self.to_rows()})"


# -- vectors (plain tuples of indices) ----------------------------------------

def vec_dot(field: Fq, a: tuple, b: tuple) -> Scalar:
    acc = 0
    for x, y in zip(a, b):
        acc = field.add(acc, field.mul(x, y))
    return acc


def vec_sub(field: Fq, a: tuple, b: tuple) -> tuple:
    return tuple(field.sub(x, y) for x, y in zip(a, b))


def vec_add(field: Fq, a: tuple, b: tuple) -> tuple:
    return tuple(field.add(x, y) for x, y in zip(a, b))


def vec_scale(field: Fq, c: Scalar, a: tuple) -> tuple:
    return tuple(field.mul(c, x) for x in a)


def mat_vec(m: MatFq, v: tuple) -> tuple:
    if len(v) != m.cols:
        raise DomainError("vector length does not match matrix columns")
    return tuple(vec_dot(m.field, m.row(i), v) for i in range(m.rows))


# -- text literals -------------------------------------------------------------

def parse_matrix(field: Fq, text: str) -> MatFq:
    """Parse the row-major literal format, e.g. "1,2;0,1"."""
    try:
        rows = [[int(x) for x in part.split(",")] for part in text.split(";")]
    except ValueError as exc:
        raise DomainError(f"bad matrix literal {text!r}") from exc
    return MatFq.from_rows(field, rows)


def format_matrix(m: MatFq) -> str:
    return ";".join(",".join(str(x) for x in m.row(i)) for i in range(m.rows))


def parse_vector(field: Fq, text: str) -> tuple:
    try:
        v = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise DomainError(f"bad vector literal {text!r}") from exc
    for x in v:
        if not 0 <= x < field.q:
            raise DomainError(f"entry {x} not a valid index for {field!r}")
    return v


def format_vector(v: tuple) -> str:
    return ",".join(str(x) for x in v)
