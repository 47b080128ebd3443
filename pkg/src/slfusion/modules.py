"""Bigraded cyclic modules C[e_0..e_{n-1}] / I_A and their tensor products.

For a nondecreasing tuple A = (a_1 <= ... <= a_n) of positive integers the
ideal I_A is spanned by the z-coefficients of the powers of the generating
polynomial

    E(z) = e_0 z^{n-1} + e_1 z^{n-2} + ... + e_{n-1},

namely the coefficient of z^m in E(z)^k for every k >= 1 and every
m < N_A(k) = sum_j max(0, k+1-a_j).  Such a coefficient is bihomogeneous of
degree k and weight k(n-1) - m, so the relations kill the top weight band of
each degree.  The quotient has dimension prod(a_i); construction certifies
this and also certifies that one full degree band beyond sum(a_i - 1) is
zero, which makes the degree truncation of the generator list safe.

Everything here is exact: quotient bases, normal forms, graded characters,
cyclic spans and tensor modules with diagonal operators.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod

from slfusion.linalg import (
    IntegrityError,
    IntEchelon,
    enumerate_monomials,
    mono_degree,
    mono_mul,
    mono_weight,
    poly_var,
    scale_to_int,
)

UNSORTED_MSG = "composition must be nondecreasing"


def validate_composition(a, allow_empty: bool = True) -> tuple:
    """Check entries >= 1 and nondecreasing order; returns a tuple."""
    a = tuple(int(x) for x in a)
    if not a and not allow_empty:
        raise ValueError("composition must be nonempty")
    for x in a:
        if x < 1:
            raise ValueError("composition entries must be positive")
    if any(x > y for x, y in zip(a, a[1:])):
        raise ValueError(UNSORTED_MSG)
    return a


def relation_exponent(a: tuple, k: int) -> int:
    """N_A(k) = sum_j max(0, k+1-a_j), the divisibility exponent at degree k."""
    return sum(max(0, k + 1 - x) for x in a)


def generating_slice(n: int, k: int, zpow: int) -> dict:
    """Coefficient of z^zpow in E(z)^k as a sparse polynomial.

    Supported on all monomials of bidegree (k, k(n-1) - zpow), each with its
    multinomial coefficient.
    """
    w = k * (n - 1) - zpow
    out = {}
    for m in enumerate_monomials(n, k, w):
        c = factorial(k)
        for e in m:
            c //= factorial(e)
        out[m] = c
    return out


def ideal_generators(a) -> list[tuple[int, int, dict]]:
    """Bihomogeneous generators of I_A up to one degree past the top band.

    Returns records ``(k, zpow, poly)`` for 1 <= k <= 1 + sum(a_i - 1) and
    0 <= zpow < N_A(k); the polynomial has bidegree (k, k(n-1) - zpow).
    """
    a = validate_composition(a)
    n = len(a)
    kmax = sum(x - 1 for x in a)
    out = []
    for k in range(1, kmax + 2):
        cap = min(relation_exponent(a, k), k * (n - 1) + 1)
        for zpow in range(cap):
            out.append((k, zpow, generating_slice(n, k, zpow)))
    return out


class GradedCharacter:
    """Sparse table (degree, weight) -> dimension, printed as a u,q polynomial."""

    __slots__ = ("table",)

    def __init__(self, table: dict):
        self.table = {ks: int(d) for ks, d in table.items() if d}

    def total(self) -> int:
        return sum(self.table.values())

    def items(self):
        return sorted(self.table.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedCharacter) and self.table == other.table

    def __hash__(self):
        return hash(tuple(self.items()))

    def __bool__(self) -> bool:
        return bool(self.table)

    def __add__(self, other) -> "GradedCharacter":
        t = dict(self.table)
        for ks, d in other.table.items():
            t[ks] = t.get(ks, 0) + d
        return GradedCharacter(t)

    def __sub__(self, other) -> "GradedCharacter":
        t = dict(self.table)
        for ks, d in other.table.items():
            t[ks] = t.get(ks, 0) - d
        if any(v < 0 for v in t.values()):
            raise IntegrityError("character subtraction went negative")
        return GradedCharacter(t)

    def shift(self, du: int, dq: int) -> "GradedCharacter":
        return GradedCharacter({(k + du, s + dq): d for (k, s), d in self.table.items()})

    def reindex(self, r: int) -> "GradedCharacter":
        """Substitute u -> u q^r: piece (k, s) moves to (k, s + r*k)."""
        return GradedCharacter({(k, s + r * k): d for (k, s), d in self.table.items()})

    def poly_str(self) -> str:
        if not self.table:
            return "0"
        terms = []
        for (k, s), d in self.items():
            factors = [] if d == 1 and (k or s) else [str(d)]
            if k:
                factors.append("u" if k == 1 else f"u^{k}")
            if s:
                factors.append("q" if s == 1 else f"q^{s}")
            terms.append(" ".join(factors) if factors else "1")
        return " + ".join(terms)

    __str__ = poly_str

    def __repr__(self):
        return f"GradedCharacter({self.poly_str()})"


def match_characters(c1: GradedCharacter, c2: GradedCharacter, reindex: int = 0):
    """Test c1 == u^du q^dq * (c2 with u -> u q^reindex) for the aligning shift.

    The shift is the unique candidate aligning the lexicographically minimal
    bidegrees; returns ``(ok, (du, dq))`` (``(True, (0, 0))`` for two empty
    characters).
    """
    c2r = c2.reindex(reindex) if reindex else c2
    if not c1.table and not c2r.table:
        return True, (0, 0)
    if not c1.table or not c2r.table:
        return False, None
    k1, s1 = min(c1.table)
    k2, s2 = min(c2r.table)
    du, dq = k1 - k2, s1 - s2
    return (c2r.shift(du, dq) == c1), (du, dq)


# ---------------------------------------------------------------------------
# the quotient modules


class QuotientPiece:
    """One bidegree slice: quotient basis monomials plus normal forms."""

    __slots__ = ("basis", "index", "nf")

    def __init__(self, basis, index, nf):
        self.basis = basis  # monomials not in the leading-term ideal
        self.index = index  # monomial -> basis position
        self.nf = nf  # every ambient monomial -> coords over basis

    @property
    def dim(self) -> int:
        return len(self.basis)


class FusionModule:
    """The bigraded quotient C[e_0..e_{n-1}] / I_A with exact normal forms."""

    def __init__(self, a, _piece_rows: dict | None = None):
        self.a = validate_composition(a)
        self.n = len(self.a)
        self.kmax = sum(x - 1 for x in self.a)
        self.lowest_h0 = -self.kmax
        self.pieces: dict[tuple[int, int], QuotientPiece] = {}
        self.ideal_rows: dict[tuple[int, int], list] = {}
        if _piece_rows is None:
            self._build()
        else:
            self._restore(_piece_rows)
        self.total_dim = sum(p.dim for p in self.pieces.values())
        expected = prod(self.a)
        if self.total_dim != expected:
            raise IntegrityError(
                f"dim mismatch for {self.a}: built {self.total_dim}, "
                f"product formula gives {expected}; character "
                f"{self.character().poly_str()}"
            )

    def _build(self) -> None:
        n, a = self.n, self.a
        gen_by_bidegree = {}
        for k, zpow, poly in ideal_generators(a):
            gen_by_bidegree[(k, k * (n - 1) - zpow)] = poly
        # ideal echelon rows per bidegree drive the degree recursion
        prev_monos_by_ks: dict[tuple[int, int], list] = {}
        unit_vars = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
        for k in range(0, self.kmax + 2):
            for s in range(0, (n - 1) * k + 1):
                monos = enumerate_monomials(n, k, s)
                if not monos:
                    continue
                index = {m: i for i, m in enumerate(monos)}
                ech = IntEchelon(len(monos))
                for j in range(n):
                    prev_rows = self.ideal_rows.get((k - 1, s - j))
                    if not prev_rows:
                        continue
                    prev_monos = prev_monos_by_ks[(k - 1, s - j)]
                    ej = unit_vars[j]
                    for row in prev_rows:
                        shifted = [0] * len(monos)
                        for pm, val in zip(prev_monos, row):
                            if val:
                                shifted[index[mono_mul(pm, ej)]] = val
                        ech.insert(shifted)
                gen = gen_by_bidegree.get((k, s))
                if gen is not None:
                    ech.insert([gen.get(m, 0) for m in monos])
                prev_monos_by_ks[(k, s)] = monos
                self.ideal_rows[(k, s)] = ech.rows
                self.pieces[(k, s)] = self._make_piece(monos, index, ech.pivots, ech.rows)
        self._certify_zero_band()

    def _restore(self, piece_rows: dict) -> None:
        """Rebuild pieces from stored echelon rows (skips the elimination)."""
        n = self.n
        for k in range(0, self.kmax + 2):
            for s in range(0, (n - 1) * k + 1):
                monos = enumerate_monomials(n, k, s)
                if not monos:
                    continue
                rows = [tuple(r) for r in piece_rows.get((k, s), [])]
                for row in rows:
                    if len(row) != len(monos):
                        raise IntegrityError(f"stored row width mismatch at {(k, s)}")
                pivots = [next(i for i, x in enumerate(row) if x) for row in rows]
                if sorted(pivots) != pivots or len(set(pivots)) != len(pivots):
                    raise IntegrityError(f"stored rows not in echelon order at {(k, s)}")
                index = {m: i for i, m in enumerate(monos)}
                self.ideal_rows[(k, s)] = rows
                self.pieces[(k, s)] = self._make_piece(monos, index, pivots, rows)
        self._certify_zero_band()

    def _certify_zero_band(self) -> None:
        band = self.kmax + 1
        for s in range(0, (self.n - 1) * band + 1):
            piece = self.pieces.get((band, s))
            if piece is not None and piece.dim:
                raise IntegrityError(
                    f"nonzero piece at certified-zero bidegree ({band}, {s}) for {self.a}"
                )

    @staticmethod
    def _make_piece(monos, index, pivots, rows) -> QuotientPiece:
        pivot_set = set(pivots)
        basis = [m for i, m in enumerate(monos) if i not in pivot_set]
        bidx = {m: i for i, m in enumerate(basis)}
        free_cols = [i for i in range(len(monos)) if i not in pivot_set]
        nf = {}
        for m in basis:
            vec = [Fraction(0)] * len(basis)
            vec[bidx[m]] = Fraction(1)
            nf[m] = tuple(vec)
        for pc, row in zip(pivots, rows):
            lead = row[pc]
            nf[monos[pc]] = tuple(Fraction(-row[c], lead) for c in free_cols)
        return QuotientPiece(basis, bidx, nf)

    # -- queries ------------------------------------------------------------

    def character(self) -> GradedCharacter:
        return GradedCharacter({ks: p.dim for ks, p in self.pieces.items()})

    def dim_piece(self, k: int, s: int) -> int:
        p = self.pieces.get((k, s))
        return p.dim if p else 0

    def h0_eigenvalue(self, k: int) -> int:
        return self.lowest_h0 + 2 * k

    def piece(self, k: int, s: int) -> QuotientPiece | None:
        return self.pieces.get((k, s))

    def reduce_monomial(self, m: tuple):
        """Normal form of an ambient monomial: (bidegree, coords) or None."""
        k, s = mono_degree(m), mono_weight(m)
        if k > self.kmax + 1:
            return None
        piece = self.pieces.get((k, s))
        if piece is None or not piece.dim:
            return None
        vec = piece.nf[m]
        if not any(vec):
            return None
        return (k, s), vec

    # -- elements -----------------------------------------------------------

    def zero(self) -> "ModuleElement":
        return ModuleElement(self, {})

    def cyclic_vector(self) -> "ModuleElement":
        """The class of 1 (image of the product of the lowest-weight lines)."""
        return self.poly_class({(0,) * self.n if self.n else (): 1})

    def top_class(self) -> "ModuleElement":
        """The unique class in the top degree band (highest-weight line)."""
        tops = [(ks, p) for ks, p in self.pieces.items() if ks[0] == self.kmax and p.dim]
        if sum(p.dim for _, p in tops) != 1:
            raise IntegrityError(f"top band of {self.a} is not a line")
        (k, s), piece = tops[0]
        return ModuleElement(self, {(k, s): (Fraction(1),)})

    def poly_class(self, p: dict) -> "ModuleElement":
        coords: dict = {}
        for m, c in p.items():
            if len(m) != self.n:
                raise ValueError(
                    f"polynomial in {len(m)} variables fed to a module with {self.n}"
                )
            red = self.reduce_monomial(m)
            if red is None:
                continue
            ks, vec = red
            acc = coords.setdefault(ks, [Fraction(0)] * len(vec))
            for i, x in enumerate(vec):
                if x:
                    acc[i] += c * x
        return ModuleElement(
            self, {ks: tuple(v) for ks, v in coords.items() if any(v)}
        )

    def basis_element(self, k: int, s: int, i: int) -> "ModuleElement":
        piece = self.pieces[(k, s)]
        vec = [Fraction(0)] * piece.dim
        vec[i] = Fraction(1)
        return ModuleElement(self, {(k, s): tuple(vec)})

    def apply_op(self, op: dict, el: "ModuleElement") -> "ModuleElement":
        return el.apply(op)

    def piece_keys_sorted(self):
        return sorted(self.pieces)

    def __repr__(self):
        return f"FusionModule(a={self.a}, dim={self.total_dim})"


class ModuleElement:
    """Element of a fusion module stored as per-bidegree coordinates."""

    __slots__ = ("owner", "coords")

    def __init__(self, owner, coords: dict):
        self.owner = owner
        self.coords = {ks: tuple(v) for ks, v in coords.items() if any(v)}

    def is_zero(self) -> bool:
        return not self.coords

    def support(self):
        return sorted(self.coords)

    def __add__(self, other) -> "ModuleElement":
        if other.owner is not self.owner:
            raise ValueError("elements of different modules")
        coords = {ks: list(v) for ks, v in self.coords.items()}
        for ks, v in other.coords.items():
            acc = coords.setdefault(ks, [Fraction(0)] * len(v))
            for i, x in enumerate(v):
                acc[i] += x
        return ModuleElement(self.owner, {ks: tuple(v) for ks, v in coords.items()})

    def __rmul__(self, c) -> "ModuleElement":
        c = Fraction(c)
        return ModuleElement(
            self.owner, {ks: tuple(c * x for x in v) for ks, v in self.coords.items()}
        )

    def __sub__(self, other) -> "ModuleElement":
        return self + (-1) * other

    def representative(self) -> dict:
        """A polynomial representative built from quotient basis monomials."""
        rep: dict = {}
        for ks, vec in self.coords.items():
            piece = self.owner.pieces[ks]
            for i, c in enumerate(vec):
                if c:
                    rep[piece.basis[i]] = rep.get(piece.basis[i], 0) + c
        return rep

    def apply(self, p: dict) -> "ModuleElement":
        """Class of p * (representative), reduced through normal forms."""
        owner = self.owner
        out: dict = {}
        for ks, vec in self.coords.items():
            piece = owner.pieces[ks]
            for i, c in enumerate(vec):
                if not c:
                    continue
                b = piece.basis[i]
                for pm, pc in p.items():
                    if len(pm) != owner.n:
                        raise ValueError(
                            f"operator in {len(pm)} variables on a module with {owner.n}"
                        )
                    red = owner.reduce_monomial(mono_mul(b, pm))
                    if red is None:
                        continue
                    tks, tvec = red
                    acc = out.setdefault(tks, [Fraction(0)] * len(tvec))
                    f = c * pc
                    for j, x in enumerate(tvec):
                        if x:
                            acc[j] += f * x
        return ModuleElement(owner, {ks: tuple(v) for ks, v in out.items()})


def act(p: dict, v: ModuleElement) -> ModuleElement:
    """Normal-form action of a polynomial on a module element."""
    return v.apply(p)


_MODULE_CACHE: dict[tuple, FusionModule] = {}


def fusion_module(a) -> FusionModule:
    """Build M^A, memoized per composition (modules are immutable)."""
    key = validate_composition(a)
    mod = _MODULE_CACHE.get(key)
    if mod is None:
        mod = FusionModule(key)
        _MODULE_CACHE[key] = mod
    return mod


def label_character(label) -> GradedCharacter:
    """Character of the module named by a possibly-unsorted integer label.

    Entries are sorted first (the defining relations only see the multiset);
    any zero entry gives the zero module.
    """
    label = tuple(int(x) for x in label)
    if any(x < 0 for x in label):
        raise ValueError("negative entry in module label")
    if any(x == 0 for x in label):
        return GradedCharacter({})
    return fusion_module(tuple(sorted(label))).character()


# ---------------------------------------------------------------------------
# tensor modules


class TensorModule:
    """Tensor product of fusion modules with diagonal and per-factor operators.

    Bidegrees add across factors.  The factors may live over different
    variable counts (needed when a submodule is modeled inside a product of
    smaller modules); the diagonal operator e_j sums the factor actions over
    every factor that has the variable e_j.
    """

    def __init__(self, factors, require_same_n: bool = False):
        self.factors = list(factors)
        if not self.factors:
            raise ValueError("tensor of zero factors")
        if require_same_n and len({f.n for f in self.factors}) > 1:
            raise ValueError("tensor factors must share the variable count")
        self.n = max(f.n for f in self.factors)
        self.total_dim = prod(f.total_dim for f in self.factors)
        self._piece_index: dict = {}

    def character(self) -> GradedCharacter:
        table = {(0, 0): 1}
        for f in self.factors:
            nxt: dict = {}
            for (k1, s1), d1 in table.items():
                for (k2, s2), d2 in f.character().table.items():
                    ks = (k1 + k2, s1 + s2)
                    nxt[ks] = nxt.get(ks, 0) + d1 * d2
            table = nxt
        return GradedCharacter(table)

    def piece_basis(self, k: int, s: int) -> list[tuple]:
        """Ordered basis keys: tuples over factors of (k_m, s_m, index)."""
        cached = self._piece_index.get((k, s))
        if cached is not None:
            return cached[0]
        keys: list[tuple] = []

        def rec(m: int, left_k: int, left_s: int, prefix: tuple) -> None:
            if m == len(self.factors) - 1:
                piece = self.factors[m].pieces.get((left_k, left_s))
                if piece is not None:
                    for i in range(piece.dim):
                        keys.append(prefix + ((left_k, left_s, i),))
                return
            f = self.factors[m]
            for (km, sm), piece in sorted(f.pieces.items()):
                if km > left_k or sm > left_s or not piece.dim:
                    continue
                for i in range(piece.dim):
                    rec(m + 1, left_k - km, left_s - sm, prefix + ((km, sm, i),))

        if k >= 0 and s >= 0:
            rec(0, k, s, ())
        index = {key: i for i, key in enumerate(keys)}
        self._piece_index[(k, s)] = (keys, index)
        return keys

    def piece_key_index(self, k: int, s: int) -> dict:
        self.piece_basis(k, s)
        return self._piece_index[(k, s)][1]

    def piece_dim(self, k: int, s: int) -> int:
        return len(self.piece_basis(k, s))

    def zero(self) -> "TensorElement":
        return TensorElement(self, {})

    def cyclic_tensor(self) -> "TensorElement":
        """v_{A_1} tensor ... tensor v_{A_r}, the bidegree (0,0) line."""
        key = tuple((0, 0, 0) for _ in self.factors)
        return TensorElement(self, {(0, 0): {key: Fraction(1)}})

    def op_diag(self, j: int):
        if not any(j < f.n for f in self.factors):
            raise ValueError(f"diagonal operator e_{j} misses every factor")
        return ("diag", j)

    def op_factor(self, m: int, j: int):
        if not 0 <= m < len(self.factors):
            raise ValueError("factor index out of range")
        if j >= self.factors[m].n:
            raise ValueError(f"factor {m} has no variable e_{j}")
        return ("factor", m, j)

    def apply_op(self, op: tuple, el: "TensorElement") -> "TensorElement":
        if op[0] == "diag":
            j = op[1]
            targets = [m for m, f in enumerate(self.factors) if j < f.n]
        else:
            _, m, j = op
            targets = [m]
        out: dict = {}
        for (k, s), vec in el.coords.items():
            for key, c in vec.items():
                for m in targets:
                    f = self.factors[m]
                    km, sm, im = key[m]
                    base = f.pieces[(km, sm)].basis[im]
                    ej = tuple(1 if t == j else 0 for t in range(f.n))
                    red = f.reduce_monomial(mono_mul(base, ej))
                    if red is None:
                        continue
                    (tk, ts), tvec = red
                    tot = (k + 1, s + j)
                    acc = out.setdefault(tot, {})
                    for i2, x in enumerate(tvec):
                        if x:
                            nkey = key[:m] + ((tk, ts, i2),) + key[m + 1 :]
                            v = acc.get(nkey, Fraction(0)) + c * x
                            if v:
                                acc[nkey] = v
                            else:
                                acc.pop(nkey, None)
        return TensorElement(self, out)

    def __repr__(self):
        return f"TensorModule({[f.a for f in self.factors]}, dim={self.total_dim})"


class TensorElement:
    """Element of a tensor module, sparse over per-bidegree basis keys."""

    __slots__ = ("owner", "coords")

    def __init__(self, owner, coords: dict):
        self.owner = owner
        self.coords = {
            ks: {key: c for key, c in vec.items() if c}
            for ks, vec in coords.items()
            if any(vec.values())
        }

    def is_zero(self) -> bool:
        return not self.coords

    def support(self):
        return sorted(self.coords)

    def __add__(self, other) -> "TensorElement":
        coords = {ks: dict(vec) for ks, vec in self.coords.items()}
        for ks, vec in other.coords.items():
            acc = coords.setdefault(ks, {})
            for key, c in vec.items():
                acc[key] = acc.get(key, Fraction(0)) + c
        return TensorElement(self.owner, coords)

    def __rmul__(self, c) -> "TensorElement":
        c = Fraction(c)
        return TensorElement(
            self.owner,
            {ks: {key: c * x for key, x in vec.items()} for ks, vec in self.coords.items()},
        )


def tensor(modules, require_same_n: bool = True) -> TensorModule:
    """Tensor product; by default all factors must share the variable count."""
    return TensorModule(list(modules), require_same_n=require_same_n)


# ---------------------------------------------------------------------------
# subspaces and cyclic spans


class Subspace:
    """Graded subspace of a fusion or tensor module, one echelon per bidegree."""

    def __init__(self, owner):
        self.owner = owner
        self.spans: dict[tuple[int, int], IntEchelon] = {}

    def _dense(self, ks, el):
        if isinstance(el, TensorElement):
            index = self.owner.piece_key_index(*ks)
            vec = [Fraction(0)] * len(index)
            for key, c in el.coords[ks].items():
                vec[index[key]] = c
            return vec
        return list(el.coords[ks])

    def _piece_dim(self, ks) -> int:
        if isinstance(self.owner, TensorModule):
            return self.owner.piece_dim(*ks)
        return self.owner.dim_piece(*ks)

    def insert(self, el) -> bool:
        """Insert a bihomogeneous element; True if the span grew."""
        if el.is_zero():
            return False
        if len(el.coords) != 1:
            raise ValueError("subspace insertion expects a bihomogeneous element")
        (ks,) = el.coords
        ech = self.spans.get(ks)
        if ech is None:
            ech = self.spans[ks] = IntEchelon(self._piece_dim(ks))
        ivec = scale_to_int(self._dense(ks, el))
        if ivec is None:
            return False
        return ech.insert(ivec)

    def contains(self, el) -> bool:
        if el.is_zero():
            return True
        for piece in _slices(el):
            (ks,) = piece.coords
            ech = self.spans.get(ks)
            if ech is None:
                return False
            ivec = scale_to_int(self._dense(ks, piece))
            if ivec is not None and not ech.contains(ivec):
                return False
        return True

    @property
    def dim(self) -> int:
        return sum(e.dim for e in self.spans.values())

    def character(self) -> GradedCharacter:
        return GradedCharacter({ks: e.dim for ks, e in self.spans.items()})

    def canonical(self):
        return {ks: e.canonical() for ks, e in self.spans.items() if e.dim}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.owner is other.owner
            and self.canonical() == other.canonical()
        )

    __hash__ = None  # mutable during construction

    def basis_elements(self):
        """Bihomogeneous module elements forming a basis of the subspace."""
        out = []
        for ks in sorted(self.spans):
            ech = self.spans[ks]
            if isinstance(self.owner, TensorModule):
                keys = self.owner.piece_basis(*ks)
                for row in ech.rows:
                    vec = {keys[i]: Fraction(x) for i, x in enumerate(row) if x}
                    out.append(TensorElement(self.owner, {ks: vec}))
            else:
                for row in ech.rows:
                    out.append(
                        ModuleElement(self.owner, {ks: tuple(Fraction(x) for x in row)})
                    )
        return out


def _slices(el):
    """Split an element into its bihomogeneous slices."""
    cls = TensorElement if isinstance(el, TensorElement) else ModuleElement
    return [cls(el.owner, {ks: el.coords[ks]}) for ks in sorted(el.coords)]


def cyclic_span(owner, ops, seeds, max_dim: int | None = None) -> Subspace:
    """Smallest graded subspace containing the seeds and closed under ops.

    Operators must raise the bidegree (all of ours do), so the fixed point is
    reached by a plain breadth-first pass over newly inserted elements.
    """
    span = Subspace(owner)
    queue = []
    for seed in seeds:
        for piece in _slices(seed):
            if span.insert(piece):
                queue.append(piece)
    while queue:
        el = queue.pop()
        for op in ops:
            img = owner.apply_op(op, el)
            for piece in _slices(img):
                if span.insert(piece):
                    queue.append(piece)
        if max_dim is not None and span.dim > max_dim:
            raise IntegrityError("cyclic span exceeded the expected dimension")
    return span


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    out = Subspace(a.owner)
    for src in (a, b):
        for el in src.basis_elements():
            out.insert(el)
    return out


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Bidegree-wise intersection of two graded subspaces."""
    from slfusion.linalg import intersect_spans

    if a.owner is not b.owner:
        raise ValueError("subspaces of different modules")
    out = Subspace(a.owner)
    for ks in sorted(set(a.spans) & set(b.spans)):
        inter = intersect_spans(a.spans[ks], b.spans[ks])
        if inter.dim:
            out.spans[ks] = inter
    return out


# ---------------------------------------------------------------------------
# verification helpers on plain modules


def verify_demazure(a) -> dict:
    """Span/quotient comparison for peeling off the largest entry of A.

    The span of the cyclic vector under e_1..e_{n-1} must have the character
    of M^{(a_1..a_{n-1})} after the reindex e_i -> e_{i-1} (weight drops by
    the degree), and the quotient must match M^{(a_1,..,a_{n-1},a_n-1)} up to
    the recorded shift.
    """
    a = validate_composition(a)
    n = len(a)
    if n < 2:
        raise ValueError("need at least two entries")
    mod = fusion_module(a)
    ops = [poly_var(n, j) for j in range(1, n)]
    span = cyclic_span(mod, ops, [mod.cyclic_vector()])
    sub_char = label_character(a[:-1])
    ok1, shift1 = match_characters(span.character(), sub_char, reindex=1)
    quot = mod.character() - span.character()
    quot_label = a[:-1] + (a[-1] - 1,)
    ok2, shift2 = match_characters(quot, label_character(quot_label), reindex=0)
    return {
        "ok": ok1 and ok2,
        "span_dim": span.dim,
        "span_ok": ok1,
        "span_shift": shift1,
        "span_character": span.character().poly_str(),
        "quotient_dim": quot.total(),
        "quotient_ok": ok2,
        "quotient_shift": shift2,
        "quotient_character": quot.poly_str(),
        "quotient_label": quot_label,
    }


def verify_tensor_embedding(a, b) -> dict:
    """Diagonal span of v_A (x) v_B against the merged-composition module.

    B is padded with leading 1 entries to the length of A; the merged label
    adds the tuples entrywise and subtracts 1 in every slot.
    """
    a = validate_composition(a, allow_empty=False)
    b = validate_composition(b, allow_empty=False)
    if len(b) > len(a):
        raise ValueError("second factor must not be longer than the first")
    bpad = (1,) * (len(a) - len(b)) + b
    c = tuple(x + y - 1 for x, y in zip(a, bpad))
    t = tensor([fusion_module(a), fusion_module(bpad)])
    ops = [t.op_diag(j) for j in range(len(a))]
    span = cyclic_span(t, ops, [t.cyclic_tensor()], max_dim=10 * prod(c))
    mc = fusion_module(c)
    ok, shift = match_characters(span.character(), mc.character(), reindex=0)
    return {
        "ok": ok and span.dim == mc.total_dim,
        "merged": c,
        "span_dim": span.dim,
        "expected_dim": mc.total_dim,
        "shift": shift,
        "span_character": span.character().poly_str(),
        "expected_character": mc.character().poly_str(),
    }
