"""Exact linear algebra over one cyclotomic field.

Matrix is a dense, immutable wrapper used at API boundaries.  The actual
elimination work happens on sparse dict-rows (column index -> nonzero
entry), which keeps the structured matrices that show up here (monomial
group actions, block shifts) cheap.  Everything is fraction-exact; pivoting
always takes the first row with a nonzero entry in the current column, so
reduced forms, kernels and images are canonical.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic
from .errors import ShapeMismatch, SingularSystem


class Matrix:
    """Dense matrix over Q(zeta_order); rows are tuples of Cyclotomic."""

    __slots__ = ("order", "nrows", "ncols", "rows")

    def __init__(self, order: int, rows, ncols: int | None = None):
        rows = tuple(tuple(_entry(order, e) for e in row) for row in rows)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ShapeMismatch("ragged rows")
        elif ncols is None:
            ncols = 0
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(order: int, nrows: int, ncols: int) -> "Matrix":
        z = Cyclotomic.zero(order)
        return Matrix(order, [[z] * ncols for _ in range(nrows)], ncols)

    @staticmethod
    def identity(order: int, n: int) -> "Matrix":
        z, o = Cyclotomic.zero(order), Cyclotomic.one(order)
        return Matrix(order, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @staticmethod
    def scalar(order: int, n: int, value) -> "Matrix":
        v = _entry(order, value)
        z = Cyclotomic.zero(order)
        return Matrix(order, [[v if i == j else z for j in range(n)] for i in range(n)], n)

    @staticmethod
    def from_literals(order: int, rows) -> "Matrix":
        from .syntax import parse_cyclotomic

        return Matrix(order, [[parse_cyclotomic(order, s) for s in row] for row in rows])

    def to_literals(self) -> list[list[str]]:
        return [[e.to_literal() for e in row] for row in self.rows]

    # -- structure ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.order, self.nrows, self.ncols, self.rows) == (
            other.order, other.nrows, other.ncols, other.rows)

    def __hash__(self):
        return hash((self.order, self.nrows, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.order}, {self.nrows}x{self.ncols})"

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.order, list(zip(*self.rows)) if self.rows else [], self.nrows)

    def trace(self) -> Cyclotomic:
        if self.nrows != self.ncols:
            raise ShapeMismatch("trace of a non-square matrix")
        t = Cyclotomic.zero(self.order)
        for i in range(self.nrows):
            t = t + self.rows[i][i]
        return t

    # -- arithmetic --------------------------------------------------------

    def _check_same_shape(self, other: "Matrix"):
        if self.order != other.order:
            raise ShapeMismatch("matrices over different fields")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch(
                f"{self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(self.order,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(self.order,
                      [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def __neg__(self):
        return Matrix(self.order, [[-a for a in r] for r in self.rows], self.ncols)

    def scale(self, value) -> "Matrix":
        v = _entry(self.order, value)
        return Matrix(self.order, [[a * v for a in r] for r in self.rows], self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.order != other.order:
            raise ShapeMismatch("matrices over different fields")
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"inner dimensions {self.ncols} vs {other.nrows}")
        z = Cyclotomic.zero(self.order)
        brows = other.rows
        out = []
        for arow in self.rows:
            acc = [z] * other.ncols
            for k, a in enumerate(arow):
                if a:
                    brow = brows[k]
                    for j, b in enumerate(brow):
                        if b:
                            acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix(self.order, out, other.ncols)

    def __pow__(self, e: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ShapeMismatch("power of a non-square matrix")
        if e < 0:
            raise ShapeMismatch("negative matrix power")
        result = Matrix.identity(self.order, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def tensor_product(self, other: "Matrix") -> "Matrix":
        """Kronecker product, blocks ordered row-major by self's entries."""
        if self.order != other.order:
            raise ShapeMismatch("matrices over different fields")
        z = Cyclotomic.zero(self.order)
        out = []
        for arow in self.rows:
            for brow in other.rows:
                line = []
                for a in arow:
                    if a:
                        line.extend(a * b if b else z for b in brow)
                    else:
                        line.extend([z] * other.ncols)
                out.append(line)
        return Matrix(self.order, out, self.ncols * other.ncols)

    def augment(self, other: "Matrix") -> "Matrix":
        if self.order != other.order or self.nrows != other.nrows:
            raise ShapeMismatch("augment needs equal row counts")
        return Matrix(self.order,
                      [ra + rb for ra, rb in zip(self.rows, other.rows)],
                      self.ncols + other.ncols)

    # -- reduction-based operations ----------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        rows, pivots = sp_rref(sp_from_matrix(self), self.ncols)
        return sp_to_matrix(self.order, rows, len(rows), self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(sp_rref(sp_from_matrix(self), self.ncols)[1])

    def kernel_basis(self) -> "Matrix":
        cols, pivots = sp_kernel(self.order, sp_from_matrix(self), self.ncols)
        return sp_cols_to_matrix(self.order, cols, self.ncols)

    def image_basis(self) -> "Matrix":
        cols, pivots = sp_column_echelon(sp_columns_from_matrix(self), self.nrows)
        return sp_cols_to_matrix(self.order, cols, self.nrows)

    def solve(self, rhs: "Matrix") -> "Matrix":
        """Unique solution of self @ X = rhs; SingularSystem otherwise."""
        if self.order != rhs.order or self.nrows != rhs.nrows:
            raise ShapeMismatch("solve needs matching row counts")
        aug = self.augment(rhs)
        rows, pivots = sp_rref(sp_from_matrix(aug), aug.ncols)
        for p in pivots:
            if p >= self.ncols:
                raise SingularSystem("inconsistent system")
        if len(pivots) < self.ncols:
            raise SingularSystem("underdetermined system")
        z = Cyclotomic.zero(self.order)
        out = [[z] * rhs.ncols for _ in range(self.ncols)]
        for row, p in zip(rows, pivots):
            for j in range(rhs.ncols):
                v = row.get(self.ncols + j)
                if v is not None:
                    out[p][j] = v
        return Matrix(self.order, out, rhs.ncols)

    def char_poly_eval(self, value) -> Cyclotomic:
        """det(value * I - self), by fraction-exact elimination."""
        if self.nrows != self.ncols:
            raise ShapeMismatch("characteristic polynomial of a non-square matrix")
        c = _entry(self.order, value)
        rows = [{j: -e for j, e in r.items()} for r in sp_from_matrix(self)]
        n = self.nrows
        for i in range(n):
            d = rows[i].get(i)
            v = c + d if d is not None else c
            if v:
                rows[i][i] = v
            elif i in rows[i]:
                del rows[i][i]
        return sp_determinant(self.order, rows, n)

    def min_poly(self) -> list[Cyclotomic]:
        """Monic minimal polynomial, ascending coefficients."""
        if self.nrows != self.ncols:
            raise ShapeMismatch("minimal polynomial of a non-square matrix")
        n = self.nrows
        order = self.order
        one = Cyclotomic.one(order)
        if n == 0:
            return [one]
        # Row-reduce flattened powers I, M, M^2, ... with an augmented tail
        # recording the combination; first dependency gives the polynomial.
        basis: list[tuple[int, dict, dict]] = []  # (lead, vector, combo)
        power = Matrix.identity(order, n)
        k = 0
        while True:
            vec = {i: v for i, v in enumerate(
                e for row in power.rows for e in row) if v}
            combo = {k: one}
            for lead, bvec, bcombo in basis:
                f = vec.get(lead)
                if f:
                    _sp_row_submul(vec, f, bvec)
                    _sp_row_submul(combo, f, bcombo)
            if not vec:
                deg = max(combo)
                top = combo[deg]
                return [
                    (combo.get(i, Cyclotomic.zero(order))) / top
                    for i in range(deg + 1)
                ]
            lead = min(vec)
            inv = vec[lead].inverse()
            vec = {i: v * inv for i, v in vec.items()}
            combo = {i: v * inv for i, v in combo.items()}
            at = 0
            while at < len(basis) and basis[at][0] < lead:
                at += 1
            basis.insert(at, (lead, vec, combo))
            power = power @ self
            k += 1


def _entry(order: int, e) -> Cyclotomic:
    if isinstance(e, Cyclotomic):
        if e.order != order:
            raise ShapeMismatch(f"entry of order {e.order} in order-{order} matrix")
        return e
    return Cyclotomic.rational(order, e)


# -- sparse internals -------------------------------------------------------
#
# Operators are lists of row dicts {col: entry}; bases are lists of column
# dicts {row: entry} together with their pivot rows.  All loops are ordered,
# so results are canonical.


def sp_from_matrix(m: Matrix) -> list[dict]:
    return [{j: e for j, e in enumerate(row) if e} for row in m.rows]


def sp_columns_from_matrix(m: Matrix) -> list[dict]:
    cols = [dict() for _ in range(m.ncols)]
    for i, row in enumerate(m.rows):
        for j, e in enumerate(row):
            if e:
                cols[j][i] = e
    return cols


def sp_to_matrix(order: int, rows: list[dict], nrows: int, ncols: int) -> Matrix:
    z = Cyclotomic.zero(order)
    dense = [[z] * ncols for _ in range(nrows)]
    for i, row in enumerate(rows):
        for j, e in row.items():
            dense[i][j] = e
    return Matrix(order, dense, ncols)

def sp_cols_to_matrix(order: int, cols: list[dict], nrows: int) -> Matrix:
    z = Cyclotomic.zero(order)
    dense = [[z] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, e in col.items():
            dense[i][j] = e
    return Matrix(order, dense, len(cols))


def _sp_row_submul(target: dict, factor, source: dict):
    # target -= factor * source, dropping zeros.
    for j, v in source.items():
        cur = target.get(j)
        if cur is None:
            target[j] = -factor * v
        else:
            cur = cur - factor * v
            if cur:
                target[j] = cur
            else:
                del target[j]


def sp_rref(rows: list[dict], ncols: int) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form; returns nonzero rows and pivot columns.

    Forward elimination picks, for the leftmost column that still has a
    nonzero entry, the first remaining row holding one; a single backward
    pass then clears pivot columns upward.  The result is the canonical
    RREF of the input.
    """
    work = [dict(r) for r in rows]
    pivots: list[int] = []
    pivot_rows: list[dict] = []
    remaining = list(range(len(work)))
    while True:
        col = ncols
        for ridx in remaining:
            r = work[ridx]
            if r:
                m = min(r)
                if m < col:
                    col = m
        if col == ncols:
            break
        hit = next(pos for pos, ridx in enumerate(remaining) if col in work[ridx])
        ridx = remaining.pop(hit)
        row = work[ridx]
        inv = row[col].inverse()
        row = {j: v * inv for j, v in row.items()}
        for other in remaining:
            f = work[other].get(col)
            if f:
                _sp_row_submul(work[other], f, row)
        pivot_rows.append(row)
        pivots.append(col)
        if not remaining:
            break
    for k in range(len(pivot_rows) - 1, 0, -1):
        row, col = pivot_rows[k], pivots[k]
        for earlier in pivot_rows[:k]:
            f = earlier.get(col)
            if f:
                _sp_row_submul(earlier, f, row)
    return pivot_rows, pivots


def sp_kernel(order: int, rows: list[dict], ncols: int) -> tuple[list[dict], list[int]]:
    """Canonical kernel basis as columns; pivot rows are the free columns."""
    pivot_rows, pivots = sp_rref(rows, ncols)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    one = Cyclotomic.one(order)
    cols = []
    for f in free:
        col = {f: one}
        for prow, p in zip(pivot_rows, pivots):
            v = prow.get(f)
            if v:
                col[p] = -v
        cols.append(col)
    return cols, free


def sp_column_echelon(cols: list[dict], nrows: int) -> tuple[list[dict], list[int]]:
    """Reduced column echelon basis of the span of the given columns."""
    basis: list[dict] = []   # kept in pivot-row order
    pivots: list[int] = []
    for col in cols:
        col = dict(col)
        for b, p in zip(basis, pivots):
            f = col.get(p)
            if f:
                _sp_row_submul(col, f, b)
        if not col:
            continue
        lead = min(col)
        inv = col[lead].inverse()
        col = {i: v * inv for i, v in col.items()}
        for b in basis:
            f = b.get(lead)
            if f:
                _sp_row_submul(b, f, col)
        # insert keeping pivot rows ascending
        at = 0
        while at < len(pivots) and pivots[at] < lead:
            at += 1
        basis.insert(at, col)
        pivots.insert(at, lead)
    return basis, pivots


def sp_apply(rows: list[dict], col: dict) -> dict:
    """Matrix (dict rows) times column (dict)."""
    out = {}
    for i, row in enumerate(rows):
        acc = None
        for k, v in row.items():
            c = col.get(k)
            if c is not None:
                acc = v * c if acc is None else acc + v * c
        if acc is not None and acc:
            out[i] = acc
    return out


def sp_apply_basis(rows: list[dict], cols: list[dict]) -> list[dict]:
    return [sp_apply(rows, c) for c in cols]


def sp_scalar_shift(rows: list[dict], n: int, value) -> list[dict]:
    """rows - value * I as fresh dicts."""
    out = [dict(r) for r in rows]
    while len(out) < n:
        out.append({})
    for i in range(n):
        cur = out[i].get(i)
        cur = (cur - value) if cur is not None else -value
        if cur:
            out[i][i] = cur
        elif i in out[i]:
            del out[i][i]
    return out


def sp_matmul(a: list[dict], b: list[dict]) -> list[dict]:
    out = []
    for arow in a:
        acc: dict = {}
        for k, f in arow.items():
            for j, v in b[k].items():
                cur = acc.get(j)
                cur = f * v if cur is None else cur + f * v
                if cur:
                    acc[j] = cur
                elif j in acc:
                    del acc[j]
        out.append(acc)
    return out


def sp_intersect(order: int,
                 a: tuple[list[dict], list[int]],
                 b: tuple[list[dict], list[int]],
                 nrows: int) -> tuple[list[dict], list[int]]:
    """Intersection of two column spans, as a reduced column echelon basis."""
    acols, _ = a
    bcols, _ = b
    if not acols or not bcols:
        return [], []
    # Rows of the stacked relation matrix [A | -B], indexed by ambient row.
    stacked: list[dict] = [{} for _ in range(nrows)]
    for j, col in enumerate(acols):
        for i, v in col.items():
            stacked[i][j] = v
    off = len(acols)
    for j, col in enumerate(bcols):
        for i, v in col.items():
            stacked[i][off + j] = -v
    null_cols, _ = sp_kernel(order, stacked, off + len(bcols))
    out = []
    for nc in null_cols:
        vec: dict = {}
        for j, coeff in nc.items():
            if j < off:
                for i, v in acols[j].items():
                    cur = vec.get(i)
                    cur = coeff * v if cur is None else cur + coeff * v
                    if cur:
                        vec[i] = cur
                    elif i in vec:
                        del vec[i]
        if vec:
            out.append(vec)
    return sp_column_echelon(out, nrows)


def sp_preimage(order: int, rows: list[dict], basis: tuple[list[dict], list[int]],
                n: int) -> tuple[list[dict], list[int]]:
    """{v : A v in span(basis)} for a square operator A given as dict rows."""
    bcols, _ = basis
    stacked: list[dict] = [dict(r) for r in rows]
    while len(stacked) < n:
        stacked.append({})
    off = n
    for j, col in enumerate(bcols):
        for i, v in col.items():
            stacked[i][off + j] = -v
    null_cols, _ = sp_kernel(order, stacked, off + len(bcols))
    tops = []
    for nc in null_cols:
        vec = {i: v for i, v in nc.items() if i < off}
        if vec:
            tops.append(vec)
    return sp_column_echelon(tops, n)


def sp_restrict(rows: list[dict], basis: tuple[list[dict], list[int]]) -> list[dict]:
    """Operator restricted to an invariant subspace, in basis coordinates.

    basis must be reduced column echelon, so coordinates of A*B are read off
    at the pivot rows.  Invariance is the caller's responsibility.
    """
    bcols, pivots = basis
    image = sp_apply_basis(rows, bcols)
    out: list[dict] = [{} for _ in pivots]
    for j, img in enumerate(image):
        for i, p in enumerate(pivots):
            v = img.get(p)
            if v is not None and v:
                out[i][j] = v
    return out


def sp_trace_restrict(order: int, rows: list[dict],
                      basis: tuple[list[dict], list[int]]) -> Cyclotomic:
    """Trace of an operator restricted to an invariant echelon subspace."""
    bcols, pivots = basis
    acc = Cyclotomic.zero(order)
    for col, p in zip(bcols, pivots):
        row = rows[p] if p < len(rows) else None
        if not row:
            continue
        for k, v in row.items():
            c = col.get(k)
            if c is not None:
                acc = acc + v * c
    return acc


def sp_determinant(order: int, rows: list[dict], n: int) -> Cyclotomic:
    """Determinant by elimination; first-nonzero pivoting with sign tracking."""
    work = [dict(r) for r in rows]
    while len(work) < n:
        work.append({})
    remaining = list(range(n))
    det = Cyclotomic.one(order)
    for col in range(n):
        hit = None
        for pos, ridx in enumerate(remaining):
            if col in work[ridx]:
                hit = pos
                break
        if hit is None:
            return Cyclotomic.zero(order)
        if hit & 1:
            det = -det
        ridx = remaining.pop(hit)
        piv = work[ridx][col]
        det = det * piv
        inv = piv.inverse()
        row = {j: v * inv for j, v in work[ridx].items()}
        for other in remaining:
            f = work[other].get(col)
            if f:
                _sp_row_submul(work[other], f, row)
    return det
