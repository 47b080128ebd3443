"""Exact rational linear algebra and sparse monomial bookkeeping.

Scalars are arbitrary-precision rationals (``fractions.Fraction``), always in
lowest terms with positive denominator.  Monomials in the variables
e_0 .. e_{n-1} are exponent tuples carrying a bidegree: the degree k is the
total exponent sum and the weight s is the subscript-weighted sum
``sum(i * exps[i])``.  The global monomial order is graded lexicographic with
e_0 most significant; within a fixed bidegree this is descending
lexicographic order on exponent vectors.

Row reduction is deterministic (first nonzero pivot in column order) and
exact.  The hot elimination paths run on primitive integer rows; rationals
appear only in final normal forms, so the results are exact by construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class IntegrityError(Exception):
    """A computed value contradicts a structural law the artifact relies on.

    Raised only for hard internal inconsistencies (e.g. a quotient dimension
    that disagrees with the product formula), never for bad user input.
    """


# ---------------------------------------------------------------------------
# scalars


def parse_scalar(text: str) -> Fraction:
    """Parse ``a`` or ``a/b`` into a rational in lowest terms."""
    return Fraction(text.strip())


def format_scalar(x: Fraction) -> str:
    """Canonical text form; ``parse_scalar`` round-trips it."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# monomials


def mono_degree(m: tuple) -> int:
    return sum(m)


def mono_weight(m: tuple) -> int:
    return sum(i * e for i, e in enumerate(m))


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_str(m: tuple) -> str:
    if not any(m):
        return "1"
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"e{i}")
        elif e > 1:
            parts.append(f"e{i}^{e}")
    return "*".join(parts)


def grlex_key(m: tuple):
    """Sort key for the global order: degree first, then e_0-major descending."""
    return (mono_degree(m), tuple(-e for e in m))


def enumerate_monomials(n: int, k: int, s: int) -> list[tuple]:
    """All exponent tuples of degree k and weight s, in the global order.

    Empty when the weight is out of range (s < 0 or s > (n-1)k).  The n = 0
    ring has the single monomial () in bidegree (0, 0).
    """
    if n < 0 or k < 0 or s < 0:
        return []
    out: list[tuple] = []

    def rec(slot: int, left_k: int, left_s: int, prefix: tuple) -> None:
        if slot == n - 1:
            if left_s == (n - 1) * left_k:
                out.append(prefix + (left_k,))
            return
        # remaining slots are slot+1 .. n-1, contributing weight in
        # [ (slot+1)*r , (n-1)*r ] for r exponents left
        for e in range(left_k, -1, -1):
            r = left_k - e
            w = left_s - slot * e
            if w < 0 or w < (slot + 1) * r or w > (n - 1) * r:
                continue
            rec(slot + 1, r, w, prefix + (e,))

    if n == 0:
        return [()] if (k == 0 and s == 0) else []
    rec(0, k, s, ())
    return out


# ---------------------------------------------------------------------------
# sparse polynomials: dict {exponent tuple -> coefficient}


def poly_add(p: dict, q: dict) -> dict:
    r = dict(p)
    for m, c in q.items():
        v = r.get(m, 0) + c
        if v:
            r[m] = v
        else:
            r.pop(m, None)
    return r


def poly_scale(p: dict, c) -> dict:
    if not c:
        return {}
    return {m: c * v for m, v in p.items()}


def poly_mul(p: dict, q: dict) -> dict:
    r: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            v = r.get(m, 0) + c1 * c2
            if v:
                r[m] = v
            else:
                r.pop(m, None)
    return r


def poly_var(n: int, j: int) -> dict:
    """The variable e_j as a polynomial in n variables."""
    if not 0 <= j < n:
        raise ValueError(f"variable index {j} out of range for {n} variables")
    m = [0] * n
    m[j] = 1
    return {tuple(m): 1}


def poly_str(p: dict) -> str:
    if not p:
        return "0"
    terms = []
    for m in sorted(p, key=grlex_key):
        c = p[m]
        cs = format_scalar(Fraction(c))
        if any(m):
            terms.append(mono_str(m) if cs == "1" else f"{cs}*{mono_str(m)}")
        else:
            terms.append(cs)
    return " + ".join(terms)


# ---------------------------------------------------------------------------
# dense exact row reduction


class Matrix:
    """Dense rational matrix with optional row/column labels.

    Columns are identified by their labels (e.g. the monomial each column
    represents) so that normal forms can be reconstructed without positional
    bookkeeping.
    """

    def __init__(self, rows, col_labels=None, row_labels=None):
        self.rows = [[Fraction(x) for x in r] for r in rows]
        self.ncols = len(self.rows[0]) if self.rows else (len(col_labels) if col_labels else 0)
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")
        self.col_labels = list(col_labels) if col_labels is not None else None
        self.row_labels = list(row_labels) if row_labels is not None else None

    def rref(self):
        rank, rows, pivots = rref(self.rows, self.ncols)
        return rank, Matrix(rows, col_labels=self.col_labels), pivots

    def kernel_basis(self):
        return kernel_basis(self.rows, self.ncols)


def rref(rows, ncols: int | None = None):
    """Reduced row echelon form over Q.

    Returns ``(rank, reduced_rows, pivot_columns)``.  Deterministic: pivots
    are the first nonzero entries scanning columns left to right and rows top
    to bottom, pivot entries are normalized to 1.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    work = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(work)):
            if work[r][c]:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        lead = work[rank][c]
        if lead != 1:
            work[rank] = [x / lead for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][c]:
                f = work[r][c]
                row, prow = work[r], work[rank]
                work[r] = [a - f * b for a, b in zip(row, prow)]
        pivots.append(c)
        rank += 1
    return rank, work[:rank], pivots


def kernel_basis(rows, ncols: int):
    """Basis of the right null space, one vector per free column."""
    rank, red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(tuple(vec))
    return basis


# ---------------------------------------------------------------------------
# primitive-integer echelon spans (hot path)


def _strip_row(row: list[int]) -> tuple[int, ...] | None:
    """Divide out the content and make the leading entry positive."""
    g = 0
    for x in row:
        if x:
            g = gcd(g, abs(x))
    if g == 0:
        return None
    lead = next(x for x in row if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in row)


def scale_to_int(vec) -> tuple[int, ...] | None:
    """Primitive integer multiple of a rational vector (None if zero)."""
    fracs = [Fraction(x) for x in vec]
    den = 1
    for x in fracs:
        den = den * x.denominator // gcd(den, x.denominator)
    return _strip_row([int(x * den) for x in fracs])


class IntEchelon:
    """Reduced echelon span of primitive integer rows with incremental insert.

    Rows are kept fully reduced (every pivot column is zero in all other
    rows), primitive, with positive leading entry; the sorted row list is a
    canonical form of the rational row space, so two spans are equal iff
    their row lists are equal.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[tuple[int, ...]] = []  # sorted by pivot column
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, row: list[int]) -> list[int]:
        for pc, prow in zip(self.pivots, self.rows):
            x = row[pc]
            if x:
                lead = prow[pc]
                # row <- lead*row - x*prow keeps everything integral
                row = [lead * a - x * b for a, b in zip(row, prow)]
        return row

    def residual(self, row) -> tuple[int, ...] | None:
        """Primitive residual of ``row`` against the span (None if inside)."""
        return _strip_row(self._reduce([int(x) for x in row]))

    def contains(self, row) -> bool:
        return self.residual(row) is None

    def insert(self, row) -> bool:
        """Add a row to the span; True if the dimension grew."""
        res = self.residual(row)
        if res is None:
            return False
        pc = next(i for i, x in enumerate(res) if x)
        # eliminate the new pivot column from existing rows
        new_rows = []
        for prow in self.rows:
            x = prow[pc]
            if x:
                lead = res[pc]
                prow = _strip_row([lead * a - x * b for a, b in zip(prow, res)])
            new_rows.append(prow)
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < pc:
            pos += 1
        new_rows.insert(pos, res)
        self.pivots.insert(pos, pc)
        self.rows = new_rows
        return True

    def insert_many(self, rows) -> None:
        for r in rows:
            self.insert(r)

    def canonical(self) -> tuple:
        return tuple(self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntEchelon) and self.rows == other.rows

    def __hash__(self):
        return hash((self.ncols, tuple(self.rows)))


def intersect_spans(a: IntEchelon, b: IntEchelon) -> IntEchelon:
    """Intersection of two row spaces over Q (Zassenhaus-style kernel)."""
    if a.ncols != b.ncols:
        raise ValueError("column count mismatch")
    out = IntEchelon(a.ncols)
    if not a.rows or not b.rows:
        return out
    # solve x*A = y*B: kernel of stacked [A; -B]^T, read off the A-part
    rows = [list(r) for r in a.rows] + [[-x for x in r] for r in b.rows]
    cols = a.ncols
    # unknowns: coefficients over the rows of A and B
    mat = [[Fraction(rows[r][c]) for r in range(len(rows))] for c in range(cols)]
    for vec in kernel_basis(mat, len(rows)):
        comb = [Fraction(0)] * cols
        for coef, arow in zip(vec[: len(a.rows)], a.rows):
            if coef:
                for i, x in enumerate(arow):
                    comb[i] += coef * x
        iv = scale_to_int(comb)
        if iv is not None:
            out.insert(iv)
    return out
