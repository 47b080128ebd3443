"""Exact arithmetic, monomial enumeration and row reduction."""

from fractions import Fraction
from random import Random

from slfusion.linalg import (
    IntEchelon,
    enumerate_monomials,
    format_scalar,
    kernel_basis,
    mono_degree,
    mono_weight,
    parse_scalar,
    rref,
    scale_to_int,
)


def test_enumerate_single_slot():
    assert enumerate_monomials(2, 1, 0) == [(1, 0)]


def test_enumerate_forced_composition():
    assert enumerate_monomials(2, 2, 1) == [(1, 1)]


def bruteforce_monomials(n, k, s):
    # independent oracle: walk every exponent tuple with entries up to k
    out = []
    def rec(prefix):
        if len(prefix) == n:
            if sum(prefix) == k and sum(i * e for i, e in enumerate(prefix)) == s:
                out.append(tuple(prefix))
            return
        for e in range(k + 1):
            rec(prefix + [e])
    rec([])
    out.sort(key=lambda m: tuple(-e for e in m))
    return out


def test_enumerate_matches_bruteforce_ordering():
    # expected value computed by the exhaustive oracle above
    assert bruteforce_monomials(3, 2, 2) == [(1, 0, 1), (0, 2, 0)]
    assert enumerate_monomials(3, 2, 2) == [(1, 0, 1), (0, 2, 0)]
    for n in range(1, 5):
        for k in range(0, 5):
            for s in range(0, (n - 1) * k + 1):
                assert enumerate_monomials(n, k, s) == bruteforce_monomials(n, k, s)


def test_enumerate_out_of_cone():
    assert enumerate_monomials(2, 2, 3) == []
    assert enumerate_monomials(3, 1, 4) == []
    assert enumerate_monomials(0, 0, 0) == [()]


def series_coefficients(n, kmax):
    """Power-series oracle: prod over i<n of 1/(1 - u q^i) up to u^kmax."""
    table = {(0, 0): 1}
    for i in range(n):
        # multiply by 1/(1 - u q^i): repeatedly convolve the geometric series
        new = {}
        for (k, s), c in table.items():
            j = 0
            while k + j <= kmax:
                key = (k + j, s + i * j)
                new[key] = new.get(key, 0) + c
                j += 1
        table = new
    return table


def test_counts_match_series_expansion():
    for n in range(1, 6):
        table = series_coefficients(n, 12)
        for k in range(0, 13):
            for s in range(0, (n - 1) * k + 1):
                assert len(enumerate_monomials(n, k, s)) == table.get((k, s), 0), (n, k, s)


def test_degree_weight_helpers():
    m = (2, 0, 3)
    assert mono_degree(m) == 5
    assert mono_weight(m) == 6


def test_rref_trivial_cases():
    rank, _, pivots = rref([[0, 0], [0, 0]], 2)
    assert rank == 0 and pivots == []
    rank, red, pivots = rref([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3)
    assert rank == 3 and pivots == [0, 1, 2]
    rank, _, pivots = rref([[1, 2], [2, 4]], 2)
    assert rank == 1 and pivots == [0]


def test_rref_idempotent_and_rank_nullity():
    rng = Random(20240817)
    for rows_n, cols_n in [(3, 5), (10, 7), (25, 40), (40, 60)]:
        mat = [
            [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(cols_n)]
            for _ in range(rows_n)
        ]
        rank, red, pivots = rref(mat, cols_n)
        rank2, red2, pivots2 = rref(red, cols_n)
        assert (rank, pivots) == (rank2, pivots2)
        assert red == red2
        assert rank + len(kernel_basis(mat, cols_n)) == cols_n


def test_kernel_examples():
    assert kernel_basis([[1, 0], [0, 1]], 2) == []
    (vec,) = kernel_basis([[1, 1]], 2)
    assert vec[0] == -vec[1] != 0
    (vec,) = kernel_basis([[1, 2], [2, 4]], 2)
    assert vec[0] == -2 * vec[1] != 0


def test_kernel_vectors_annihilate():
    rng = Random(7)
    mat = [[Fraction(rng.randint(-4, 4)) for _ in range(8)] for _ in range(5)]
    for vec in kernel_basis(mat, 8):
        for row in mat:
            assert sum(a * b for a, b in zip(row, vec)) == 0


def test_scalar_roundtrip():
    rng = Random(99)
    values = [Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 10**6)) for _ in range(50)]
    values += [Fraction(0), Fraction(-3), Fraction(7, 3)]
    for x in values:
        assert parse_scalar(format_scalar(x)) == x
    assert format_scalar(Fraction(2, -4)) == "-1/2"


def test_int_echelon_matches_rref_rank():
    rng = Random(31337)
    for _ in range(20):
        rows_n, cols_n = rng.randint(1, 8), rng.randint(1, 8)
        mat = [[rng.randint(-5, 5) for _ in range(cols_n)] for _ in range(rows_n)]
        ech = IntEchelon(cols_n)
        for row in mat:
            ech.insert(row)
        rank, _, pivots = rref(mat, cols_n)
        assert ech.dim == rank
        assert ech.pivots == pivots


def test_int_echelon_membership():
    ech = IntEchelon(3)
    ech.insert([1, 2, 3])
    ech.insert([0, 1, 1])
    assert ech.contains([2, 5, 7])  # sum of the two rows
    assert not ech.contains([0, 0, 1])
    assert scale_to_int([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)


def test_int_echelon_canonical_form_is_order_independent():
    rows = [[1, 2, 0], [0, 3, 1], [1, 5, 1]]
    a, b = IntEchelon(3), IntEchelon(3)
    for r in rows:
        a.insert(r)
    for r in reversed(rows):
        b.insert(r)
    assert a.canonical() == b.canonical()


def test_matrix_wrapper_labels():
    from slfusion.linalg import Matrix

    m = Matrix([[1, 2], [2, 4]], col_labels=["x", "y"])
    rank, red, pivots = m.rref()
    assert rank == 1 and pivots == [0]
    assert red.col_labels == ["x", "y"]
    (vec,) = m.kernel_basis()
    assert vec[0] == -2 * vec[1]
