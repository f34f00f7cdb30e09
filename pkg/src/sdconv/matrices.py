"""Matrices over F_q[z]: canonical forms, kernels and linear solving.

Conventions used throughout:

* Row Hermite form: echelon with monic pivots; entries above a pivot have
  strictly smaller degree than the pivot.  The form is the unique canonical
  representative of a row span, so it doubles as a code-equality key.
* Column Hermite form: the transposed notion, shape [L 0] with lower
  triangular L for full-row-rank input.
* Smith form: diagonal [diag(g_1..g_k) 0] with monic invariant factors in
  DESCENDING divisibility order, g_{i+1} | g_i.  Most references order them
  ascending; every consumer in this package expects the descending order.

Elimination pivots are chosen as the lowest-degree nonzero entry with ties
broken by smallest index, so all outputs are deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    NotSquare,
    RankDeficient,
    ParseError,
    ShapeUnsupported,
)
from .fields import FieldElement, FieldSpec
from .polys import Poly, gcd, parse_poly

Entryish = Union[Poly, FieldElement, int]


class PolyMatrix:
    """Immutable k x n grid of Poly entries over one field."""

    __slots__ = ("spec", "rows", "cols", "entries")

    def __init__(self, spec: FieldSpec, rows: Iterable[Iterable[Entryish]], cols: Optional[int] = None):
        grid = []
        for row in rows:
            lifted = []
            for e in row:
                if not isinstance(e, Poly):
                    e = Poly(spec, (e,))
                elif e.spec != spec:
                    raise FieldMismatch("matrix entry from a different field")
                lifted.append(e)
            grid.append(tuple(lifted))
        if grid:
            width = len(grid[0])
            if any(len(r) != width for r in grid):
                raise DimensionMismatch("ragged rows")
            if cols is not None and cols != width:
                raise DimensionMismatch("cols does not match row width")
        else:
            width = cols or 0
        self.spec = spec
        self.rows = len(grid)
        self.cols = width
        self.entries = tuple(grid)

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "PolyMatrix":
        one, zero = Poly.one(spec), Poly.zero(spec)
        return cls(spec, [[one if i == j else zero for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> "PolyMatrix":
        zero = Poly.zero(spec)
        return cls(spec, [[zero] * cols for _ in range(rows)], cols=cols)

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.spec, list(zip(*self.entries)), cols=self.rows)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.spec != other.spec:
            raise FieldMismatch("matrices over different fields")
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        zero = Poly.zero(self.spec)
        bt = other.transpose().entries
        out = [
            [sum((a * b for a, b in zip(row, col) if a and b), zero) for col in bt]
            for row in self.entries
        ]
        return PolyMatrix(self.spec, out, cols=other.cols)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in matrix addition")
        return PolyMatrix(
            self.spec,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in matrix subtraction")
        return PolyMatrix(
            self.spec,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(
            self.spec,
            [[self.entries[i][j] for j in col_idx] for i in row_idx],
            cols=len(col_idx),
        )

    def __eq__(self, other):
        if isinstance(other, PolyMatrix):
            return (
                self.spec == other.spec
                and self.rows == other.rows
                and self.cols == other.cols
                and self.entries == other.entries
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.rows, self.cols, self.entries))

    def __str__(self):
        return format_matrix(self)

    def __repr__(self):
        return f"PolyMatrix({format_matrix(self)!r}, {self.spec!r})"


def vstack(*blocks: PolyMatrix) -> PolyMatrix:
    spec = blocks[0].spec
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise DimensionMismatch("vstack blocks with different widths")
    rows = [row for b in blocks for row in b.entries]
    return PolyMatrix(spec, rows, cols=cols)


def row_matrix(spec: FieldSpec, vec: Sequence[Entryish]) -> PolyMatrix:
    return PolyMatrix(spec, [list(vec)])


def dot(u: Sequence[Poly], v: Sequence[Poly]) -> Poly:
    if len(u) != len(v):
        raise DimensionMismatch("dot product of vectors with different lengths")
    spec = u[0].spec
    out = Poly.zero(spec)
    for a, b in zip(u, v):
        out = out + a * b
    return out


@dataclass(frozen=True)
class HermiteDecomposition:
    """form = transform @ input (row side) or input @ transform (column side)."""

    form: PolyMatrix
    transform: PolyMatrix
    side: str  # "row" | "column"


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ input @ V = S with U, V unimodular and S = [diag 0] descending."""

    U: PolyMatrix
    S: PolyMatrix
    V: PolyMatrix

    def diagonal(self) -> tuple[Poly, ...]:
        return tuple(self.S.entries[i][i] for i in range(self.S.rows))


# ---------------------------------------------------------------------------
# Row echelon Hermite core.  Works for any shape; zero rows sink to the
# bottom.  Returns mutable lists plus the pivot column list.

def _hermite_core(spec: FieldSpec, entries: Sequence[Sequence[Poly]]):
    m = len(entries)
    n = len(entries[0]) if m else 0
    a = [list(row) for row in entries]
    u = [[Poly.one(spec) if i == j else Poly.zero(spec) for j in range(m)] for i in range(m)]
    pivots: list[int] = []
    r = 0
    for j in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][j]]
            if not nz:
                break
            piv = min(nz, key=lambda i: (a[i][j].degree(), i))
            if piv != r:
                a[r], a[piv] = a[piv], a[r]
                u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, m):
                if a[i][j]:
                    q = a[i][j] // a[r][j]
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                        u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][j]:
                        done = False
            if done:
                break
        if r < m and a[r][j]:
            c = a[r][j].lc().inverse()
            if a[r][j].lc() != spec.one:
                a[r] = [x * c for x in a[r]]
                u[r] = [x * c for x in u[r]]
            for i in range(r):
                q = a[i][j] // a[r][j]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            pivots.append(j)
            r += 1
    return a, u, pivots


def row_hermite(matrix: PolyMatrix) -> HermiteDecomposition:
    """Unique row Hermite form with its unimodular row transform.

    Requires rows <= cols.  The form has monic echelon pivots and every
    entry above a pivot has strictly smaller degree than the pivot; zero
    rows come last.  Row-equivalent inputs yield identical forms.
    """
    if matrix.rows > matrix.cols:
        raise ShapeUnsupported(f"need rows <= cols, got {matrix.rows}x{matrix.cols}")
    a, u, _ = _hermite_core(matrix.spec, matrix.entries)
    return HermiteDecomposition(
        form=PolyMatrix(matrix.spec, a, cols=matrix.cols),
        transform=PolyMatrix(matrix.spec, u, cols=matrix.rows),
        side="row",
    )


def col_hermite(matrix: PolyMatrix) -> HermiteDecomposition:
    """Unique column Hermite form: input @ transform = form = [L 0]."""
    if matrix.rows > matrix.cols:
        raise ShapeUnsupported(f"need rows <= cols, got {matrix.rows}x{matrix.cols}")
    a, u, _ = _hermite_core(matrix.spec, matrix.transpose().entries)
    form = PolyMatrix(matrix.spec, a, cols=matrix.rows).transpose()
    transform = PolyMatrix(matrix.spec, u, cols=matrix.cols).transpose()
    return HermiteDecomposition(form=form, transform=transform, side="column")


def rank(matrix: PolyMatrix) -> int:
    """Row rank, from the echelon pivot count."""
    if matrix.rows <= matrix.cols:
        return len(_hermite_core(matrix.spec, matrix.entries)[2])
    return len(_hermite_core(matrix.spec, matrix.transpose().entries)[2])


def smith(matrix: PolyMatrix) -> SmithDecomposition:
    """Smith decomposition U @ A @ V = S for full-row-rank A (k <= n).

    S carries the monic invariant factors on its diagonal in descending
    divisibility order (each divides the previous one); rank deficiency
    raises RankDeficient rather than producing zero factors.
    """
    if matrix.rows > matrix.cols:
        raise ShapeUnsupported(f"need rows <= cols, got {matrix.rows}x{matrix.cols}")
    spec = matrix.spec
    k, n = matrix.rows, matrix.cols
    a = [list(row) for row in matrix.entries]
    u = [[Poly.one(spec) if i == j else Poly.zero(spec) for j in range(k)] for i in range(k)]
    v = [[Poly.one(spec) if i == j else Poly.zero(spec) for j in range(n)] for i in range(n)]

    def row_sub(dst, src, q):
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def col_sub(dst, src, q):
        for i in range(k):
            a[i][dst] = a[i][dst] - q * a[i][src]
        for i in range(n):
            v[i][dst] = v[i][dst] - q * v[i][src]

    for t in range(k):
        cands = [
            (i, j) for i in range(t, k) for j in range(t, n) if a[i][j]
        ]
        if not cands:
            raise RankDeficient(f"rank {t} < {k}")
        while True:
            i0, j0 = min(cands, key=lambda ij: (a[ij[0]][ij[1]].degree(), ij[0], ij[1]))
            if i0 != t:
                a[t], a[i0] = a[i0], a[t]
                u[t], u[i0] = u[i0], u[t]
            if j0 != t:
                for row in a:
                    row[t], row[j0] = row[j0], row[t]
                for row in v:
                    row[t], row[j0] = row[j0], row[t]
            changed = False
            for i in range(t + 1, k):
                if a[i][t]:
                    row_sub(i, t, a[i][t] // a[t][t])
                    if a[i][t]:
                        changed = True
            if not changed:
                for j in range(t + 1, n):
                    if a[t][j]:
                        col_sub(j, t, a[t][j] // a[t][t])
                        if a[t][j]:
                            changed = True
            if changed:
                cands = [(i, j) for i in range(t, k) for j in range(t, n) if a[i][j]]
                continue
            # pivot now alone in its row and column; enforce divisibility
            bad = None
            for i in range(t + 1, k):
                for j in range(t + 1, n):
                    if a[i][j] and a[i][j] % a[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]
            cands = [(i, j) for i in range(t, k) for j in range(t, n) if a[i][j]]
        lead = a[t][t].lc()
        if lead != spec.one:
            c = lead.inverse()
            a[t] = [x * c for x in a[t]]
            u[t] = [x * c for x in u[t]]

    # The loop produces ascending divisibility; flip to the descending
    # convention unless the diagonal is reversal-invariant.
    diag = [a[i][i] for i in range(k)]
    if diag != diag[::-1]:
        a[:k] = a[:k][::-1]
        u[:k] = u[:k][::-1]
        perm = list(range(n))
        perm[:k] = perm[:k][::-1]
        a = [[row[j] for j in perm] for row in a]
        v = [[row[j] for j in perm] for row in v]

    return SmithDecomposition(
        U=PolyMatrix(spec, u, cols=k),
        S=PolyMatrix(spec, a, cols=n),
        V=PolyMatrix(spec, v, cols=n),
    )


def _det_laplace(entries, spec: FieldSpec) -> Poly:
    n = len(entries)
    if n == 0:
        return Poly.one(spec)
    if n == 1:
        return entries[0][0]
    if n == 2:
        return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]
    total = Poly.zero(spec)
    for j, top in enumerate(entries[0]):
        if not top:
            continue
        minor = [row[:j] + row[j + 1 :] for row in entries[1:]]
        term = top * _det_laplace(minor, spec)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(entries, spec: FieldSpec) -> Poly:
    """Fraction-free elimination; every division is exact over F_q[z]."""
    n = len(entries)
    m = [list(row) for row in entries]
    sign = spec.one
    prev = Poly.one(spec)
    for t in range(n - 1):
        if not m[t][t]:
            swap = next((i for i in range(t + 1, n) if m[i][t]), None)
            if swap is None:
                return Poly.zero(spec)
            m[t], m[swap] = m[swap], m[t]
            sign = -sign
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                m[i][j] = (m[t][t] * m[i][j] - m[i][t] * m[t][j]) // prev
            m[i][t] = Poly.zero(spec)
        prev = m[t][t]
    return m[n - 1][n - 1] * sign


def determinant(matrix: PolyMatrix) -> Poly:
    """Exact determinant: Laplace up to 4x4, Bareiss elimination above."""
    if matrix.rows != matrix.cols:
        raise NotSquare(f"determinant of {matrix.rows}x{matrix.cols} matrix")
    if matrix.rows <= 4:
        return _det_laplace([list(r) for r in matrix.entries], matrix.spec)
    return _det_bareiss(matrix.entries, matrix.spec)


def is_unimodular(matrix: PolyMatrix) -> bool:
    """True iff the matrix is square with a nonzero constant determinant."""
    d = determinant(matrix)
    return bool(d) and d.degree() == 0


def inverse_unimodular(matrix: PolyMatrix) -> PolyMatrix:
    """Inverse of a unimodular matrix (its row Hermite form is I)."""
    if matrix.rows != matrix.cols:
        raise NotSquare(f"inverse of {matrix.rows}x{matrix.cols} matrix")
    a, u, _ = _hermite_core(matrix.spec, matrix.entries)
    if PolyMatrix(matrix.spec, a, cols=matrix.cols) != PolyMatrix.identity(matrix.spec, matrix.rows):
        raise ValueError("matrix is not unimodular")
    return PolyMatrix(matrix.spec, u, cols=matrix.rows)


def maximal_minors(matrix: PolyMatrix) -> list[Poly]:
    """All C(n, k) determinants of k x k column selections, k = rows."""
    if matrix.rows > matrix.cols:
        raise ShapeUnsupported(f"need rows <= cols, got {matrix.rows}x{matrix.cols}")
    k = matrix.rows
    out = []
    for cols in itertools.combinations(range(matrix.cols), k):
        sub = [[matrix.entries[i][j] for j in cols] for i in range(k)]
        out.append(_det_laplace(sub, matrix.spec) if k <= 4 else _det_bareiss(sub, matrix.spec))
    return out


def is_left_prime(matrix: PolyMatrix) -> bool:
    """True iff the gcd of all maximal minors is a nonzero constant.

    Equivalent to the Smith form being [I 0]; the test suite cross-checks
    the two routes against each other.
    """
    g = Poly.zero(matrix.spec)
    one = Poly.one(matrix.spec)
    for minor in maximal_minors(matrix):
        g = gcd(g, minor)
        if g == one:
            return True
    return bool(g) and g.degree() == 0


def is_identity_padded(matrix: PolyMatrix) -> bool:
    """True iff the matrix equals [I_k 0]."""
    one, zero = Poly.one(matrix.spec), Poly.zero(matrix.spec)
    for i, row in enumerate(matrix.entries):
        for j, e in enumerate(row):
            if e != (one if i == j else zero):
                return False
    return True


def right_kernel_basis(matrix: PolyMatrix) -> PolyMatrix:
    """Basis of {v : A v^T = 0} as the rows of an (n-k) x n matrix.

    The rows are the transposed last n-k columns of the Smith column
    transform, hence left-prime: the kernel module is saturated (over a
    domain, c*v in the kernel with c nonzero forces v in the kernel).
    """
    dec = smith(matrix)
    n, k = matrix.cols, matrix.rows
    rows = [tuple(dec.V.entries[i][j] for i in range(n)) for j in range(k, n)]
    return PolyMatrix(matrix.spec, rows, cols=n)


def as_poly_vector(spec: FieldSpec, vec: Sequence[Entryish]) -> tuple[Poly, ...]:
    """Lift a sequence of Poly / FieldElement / int entries to Poly."""
    out = []
    for e in vec:
        if not isinstance(e, Poly):
            e = Poly(spec, (e,))
        elif e.spec != spec:
            raise FieldMismatch("vector entry from a different field")
        out.append(e)
    return tuple(out)


def solve_left(matrix: PolyMatrix, vec: Sequence[Entryish]) -> Optional[tuple[Poly, ...]]:
    """Solve m @ A = v for a full-row-rank A; None when v is outside the span.

    Works through the column Hermite form [L 0]: transforms v, rejects it
    when a coordinate past the pivots survives, then back-substitutes with
    exact division (a nonzero remainder also means non-membership).
    """
    k, n = matrix.rows, matrix.cols
    if len(vec) != n:
        raise DimensionMismatch(f"vector of length {len(vec)} against {k}x{n} matrix")
    lifted = as_poly_vector(matrix.spec, vec)
    if k == 0:
        return () if all(not x for x in lifted) else None
    dec = col_hermite(matrix)
    lform, v = dec.form, dec.transform
    if any(not lform.entries[i][i] for i in range(k)):
        raise RankDeficient("matrix does not have full row rank")
    w = [dot(lifted, v.column(j)) for j in range(n)]
    if any(w[j] for j in range(k, n)):
        return None
    spec = matrix.spec
    m: list[Poly] = [Poly.zero(spec)] * k
    for i in range(k - 1, -1, -1):
        rhs = w[i]
        for j in range(i + 1, k):
            rhs = rhs - m[j] * lform.entries[j][i]
        q, r = divmod(rhs, lform.entries[i][i])
        if r:
            return None
        m[i] = q
    return tuple(m)


# ---------------------------------------------------------------------------
# Text format: rows separated by ';', entries by ','.

def parse_matrix(spec: FieldSpec, text: str) -> PolyMatrix:
    rows_text = [r for r in text.split(";")]
    if not rows_text or not text.strip():
        raise ParseError("empty matrix text")
    rows = []
    for rt in rows_text:
        cells = rt.split(",")
        if not any(c.strip() for c in cells):
            raise ParseError(f"empty matrix row in {text!r}")
        rows.append([parse_poly(spec, c) for c in cells])
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ParseError("rows of different lengths")
    return PolyMatrix(spec, rows, cols=width)


def parse_vector(spec: FieldSpec, text: str) -> tuple[Poly, ...]:
    if ";" in text:
        raise ParseError(f"expected a single row vector, got {text!r}")
    return parse_matrix(spec, text).entries[0]


def format_matrix(matrix: PolyMatrix) -> str:
    return " ; ".join(",".join(str(e) for e in row) for row in matrix.entries)


def format_vector(vec: Sequence[Poly]) -> str:
    return ",".join(str(e) for e in vec)
