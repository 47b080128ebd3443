"""Laurent polynomials in one variable and two-sided matrix reduction.

A square matrix of Laurent polynomials whose determinant is a nonzero
constant times a power of the variable can be brought to monomial-diagonal
shape using only row operations with polynomial multipliers and column
operations with multipliers polynomial in the inverse variable (plus scalar
scalings and permutations).  The multiset of diagonal exponents is the
splitting type of the associated bundle over the projective line.

The reduction here is a greedy two-phase sweep: row operations cancel lowest
terms against each column's minimal-order entry, column operations cancel
top terms against each row's maximal-degree entry.  It is step-bounded and
reports failure honestly instead of looping; termination is checked, not
assumed.
"""

from __future__ import annotations

from fractions import Fraction

from slfusion.linalg import format_scalar


class SplittingStuck(Exception):
    """The greedy reduction hit its step bound or a fixed point."""


class Laurent:
    """Laurent polynomial in one variable over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    self.coeffs[int(e)] = c

    @staticmethod
    def const(c) -> "Laurent":
        return Laurent({0: Fraction(c)})

    @staticmethod
    def term(c, e: int) -> "Laurent":
        return Laurent({e: Fraction(c)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    @property
    def ord(self) -> int:
        return min(self.coeffs)

    @property
    def deg(self) -> int:
        return max(self.coeffs)

    def __getitem__(self, e: int) -> Fraction:
        return self.coeffs.get(e, Fraction(0))

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Laurent(out)

    def __neg__(self) -> "Laurent":
        return Laurent({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Laurent(out)

    def scale(self, c) -> "Laurent":
        c = Fraction(c)
        return Laurent({e: c * v for e, v in self.coeffs.items()})

    def shift(self, k: int) -> "Laurent":
        return Laurent({e + k: c for e, c in self.coeffs.items()})

    def eval_at(self, t: Fraction) -> Fraction:
        t = Fraction(t)
        if any(e < 0 for e in self.coeffs) and t == 0:
            raise ZeroDivisionError("negative power at t = 0")
        return sum((c * t**e for e, c in self.coeffs.items()), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, Laurent) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                body = format_scalar(c)
            else:
                mag = format_scalar(abs(c))
                var = "y" if e == 1 else f"y^{e}"
                body = var if mag == "1" else f"{mag}*{var}"
                if c < 0:
                    body = "-" + body
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__


def laurent_det(matrix: list[list[Laurent]]) -> Laurent:
    """Exact determinant via column normalization plus interpolation.

    Columns are shifted to polynomials, the polynomial determinant is found
    by evaluating at enough rational points and Lagrange interpolation, and
    the recorded shift is restored.
    """
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix must be square")
    shift = 0
    cols: list[list[Laurent]] = []
    for c in range(size):
        col = [matrix[r][c] for r in range(size)]
        if all(x.is_zero() for x in col):
            return Laurent()
        o = min(x.ord for x in col if not x.is_zero())
        shift += o
        cols.append([x.shift(-o) for x in col])
    degree_bound = sum(max((x.deg for x in col if not x.is_zero()), default=0) for col in cols)
    points = [Fraction(i) for i in range(1, degree_bound + 2)]
    values = []
    for t in points:
        rows = [[cols[c][r].eval_at(t) for c in range(size)] for r in range(size)]
        values.append(_det_rational(rows))
    poly = _lagrange(points, values)
    return Laurent({e + shift: c for e, c in poly.items()})


def _det_rational(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    rows = [list(r) for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for r in range(c + 1, n):
            if rows[r][c]:
                f = rows[r][c] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
    return det


def _lagrange(points: list[Fraction], values: list[Fraction]) -> dict:
    """Interpolating polynomial as {exponent: coefficient} (Newton form)."""
    k = len(points)
    coeffs = list(values)
    for j in range(1, k):
        for i in range(k - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (points[i] - points[i - j])
    # Horner over the Newton basis: p = c_{k-1}; p = p*(t - x_i) + c_i
    poly = {0: coeffs[-1]}
    for i in range(k - 2, -1, -1):
        nxt: dict = {}
        for e, v in poly.items():
            nxt[e + 1] = nxt.get(e + 1, Fraction(0)) + v
            nxt[e] = nxt.get(e, Fraction(0)) - points[i] * v
        nxt[0] = nxt.get(0, Fraction(0)) + coeffs[i]
        poly = nxt
    return {e: v for e, v in poly.items() if v}


def _nonzero_positions(work) -> list[tuple[int, int]]:
    return [
        (r, c)
        for r in range(len(work))
        for c in range(len(work))
        if not work[r][c].is_zero()
    ]


def _is_monomial_permutation(work) -> bool:
    size = len(work)
    seen_rows, seen_cols = set(), set()
    for r, c in _nonzero_positions(work):
        if r in seen_rows or c in seen_cols or not work[r][c].is_monomial():
            return False
        seen_rows.add(r)
        seen_cols.add(c)
    return len(seen_rows) == size


def _state_key(work) -> tuple:
    return tuple(
        tuple(tuple(sorted(x.coeffs.items())) for x in row) for row in work
    )


def _score(work) -> tuple[int, int]:
    nonzero = terms = 0
    for row in work:
        for x in row:
            if x.coeffs:
                nonzero += 1
                terms += len(x.coeffs)
    return nonzero, terms


def _legal_moves(work) -> list[tuple]:
    """Single-term cancellations available from the current state.

    A row move subtracts a polynomial multiple of one row from another,
    cancelling the lowest term of the target entry against a lower-or-equal
    order pivot in the same column.  A column move is the mirror image with
    a multiplier polynomial in the inverse variable, cancelling the top term
    of the target against a higher-or-equal degree pivot in the same row.
    """
    size = len(work)
    moves = []
    for c in range(size):
        entries = [(r, work[r][c]) for r in range(size) if not work[r][c].is_zero()]
        for r, e in entries:
            for pr, pe in entries:
                if pr != r and e.ord >= pe.ord:
                    moves.append(("row", r, pr, c))
    for r in range(size):
        entries = [(c, work[r][c]) for c in range(size) if not work[r][c].is_zero()]
        for c, e in entries:
            for pc, pe in entries:
                if pc != c and e.deg <= pe.deg:
                    moves.append(("col", c, pc, r))
    return moves


def _apply_move(work, move) -> list[list[Laurent]]:
    out = [list(row) for row in work]
    size = len(work)
    if move[0] == "row":
        _, r, pr, c = move
        e, pe = work[r][c], work[pr][c]
        mult = Laurent.term(e[e.ord] / pe[pe.ord], e.ord - pe.ord)
        out[r] = [work[r][cc] - mult * work[pr][cc] for cc in range(size)]
    else:
        _, c, pc, r = move
        e, pe = work[r][c], work[r][pc]
        mult = Laurent.term(e[e.deg] / pe[pe.deg], e.deg - pe.deg)
        for rr in range(size):
            out[rr] = list(out[rr])
            out[rr][c] = work[rr][c] - mult * work[rr][pc]
    return out


def splitting_type(matrix: list[list[Laurent]], max_steps: int = 10000) -> list[int]:
    """Diagonal exponent multiset of a Laurent matrix, sorted descending.

    Row operations use polynomial multipliers, column operations use
    multipliers polynomial in the inverse variable.  At every step the move
    that minimizes the (nonzero entries, total terms) count is taken, never
    revisiting an earlier state; ``SplittingStuck`` is raised when the step
    bound is exhausted or no unseen legal move remains, so a wrong answer is
    never returned silently.
    """
    size = len(matrix)
    det = laurent_det(matrix)
    if det.is_zero() or not det.is_monomial():
        raise ValueError(f"determinant {det} is not a unit times a power")
    work = [[Laurent(dict(x.coeffs)) for x in row] for row in matrix]
    seen = {_state_key(work)}
    steps = 0
    while not _is_monomial_permutation(work):
        best = None
        for move in _legal_moves(work):
            candidate = _apply_move(work, move)
            key = _state_key(candidate)
            if key in seen:
                continue
            rank = (*_score(candidate), move)
            if best is None or rank < best[0]:
                best = (rank, candidate, key)
        if best is None:
            raise SplittingStuck("no unseen legal move remains")
        _, work, key = best
        seen.add(key)
        steps += 1
        if steps > max_steps:
            raise SplittingStuck(f"step bound {max_steps} exhausted")
    exps = sorted((work[r][c].ord for r, c in _nonzero_positions(work)), reverse=True)
    if sum(exps) != det.ord:
        raise SplittingStuck("degree conservation violated during reduction")
    return exps
