"""Kernels of the one-unit-move surjections and their three descriptions.

Moving one unit from slot i to slot j of a composition weakens the defining
relations, so the monomial-class map M^A -> M^{A_{i,j}} is a well-defined
surjection of bigraded modules.  Its kernel S_{i,j}(A) is studied here three
ways: through explicit generators (slices of powers of the generating
polynomial applied to the cyclic vector), through a peeling filtration whose
layers are smaller modules of the same family, and through spans inside
tensor products of smaller modules.

All comparisons are bigraded-character equalities together with explicit
span and rank computations; isomorphisms are never assumed.  Cross-module
comparisons record the aligning global shift (du, dq), since a submodule
carries the ambient grading while a standalone module starts at (0, 0).
"""

from __future__ import annotations

from math import prod

from slfusion.linalg import (
    IntegrityError,
    kernel_basis,
    poly_var,
)
from slfusion.modules import (
    GradedCharacter,
    ModuleElement,
    Subspace,
    TensorModule,
    cyclic_span,
    fusion_module,
    generating_slice,
    label_character,
    match_characters,
    relation_exponent,
    subspace_sum,
    validate_composition,
)


def move_composition(a, i: int, j: int) -> tuple:
    """A_{i,j}: subtract 1 at slot i, add 1 at slot j (1-based, i < j)."""
    a = validate_composition(a, allow_empty=False)
    n = len(a)
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    out = list(a)
    out[i - 1] -= 1
    out[j - 1] += 1
    return tuple(out)


def eq_first_dim(a, i: int) -> int:
    """Kernel dimension for the adjacent move (i, i+1)."""
    rest = prod(x for l, x in enumerate(a, start=1) if l not in (i, i + 1))
    return rest * (a[i] - a[i - 1] + 1)


class QuotientMap:
    """The bidegree-preserving monomial-class surjection M^A -> M^{A_{i,j}}.

    Well-definedness is certified by reducing every generator of the source
    ideal to zero in the target, surjectivity by a rank count per bidegree.
    """

    def __init__(self, a, i: int, j: int, strict: bool = True):
        self.a = validate_composition(a, allow_empty=False)
        self.move = (i, j)
        target_label = move_composition(self.a, i, j)
        if any(x < 1 for x in target_label):
            raise ValueError("move produces a nonpositive entry")
        if strict and any(x > y for x, y in zip(target_label, target_label[1:])):
            raise ValueError(
                f"move ({i},{j}) on {self.a} gives the unsorted label {target_label}"
            )
        # the defining ideal only depends on the multiset of entries, so the
        # sorted label names the same quotient ring
        self.target_label = target_label
        self.source = fusion_module(self.a)
        self.target = fusion_module(tuple(sorted(target_label)))
        self._certify_well_defined()
        self.matrices: dict = {}
        self._build_matrices()
        self._certify_surjective()

    def _certify_well_defined(self) -> None:
        from slfusion.modules import ideal_generators

        for k, zpow, poly in ideal_generators(self.a):
            if not self.target.poly_class(poly).is_zero():
                raise IntegrityError(
                    f"map {self.a} -> {self.target.a} not well defined: "
                    f"source relation at degree {k}, z^{zpow} survives"
                )

    def _build_matrices(self) -> None:
        for ks, piece in self.source.pieces.items():
            if not piece.dim:
                continue
            tdim = self.target.dim_piece(*ks)
            rows = []
            for m in piece.basis:
                red = self.target.reduce_monomial(m)
                rows.append(list(red[1]) if red else [0] * tdim)
            self.matrices[ks] = rows

    def _certify_surjective(self) -> None:
        from slfusion.linalg import rref

        for ks, rows in self.matrices.items():
            tdim = self.target.dim_piece(*ks)
            if tdim == 0:
                continue
            rank, _, _ = rref(rows, tdim)
            if rank != tdim:
                raise IntegrityError(
                    f"map {self.a} -> {self.target.a} not surjective at {ks}"
                )

    def apply(self, el: ModuleElement) -> ModuleElement:
        if el.owner is not self.source:
            raise ValueError("element does not live in the source module")
        return self.target.poly_class(el.representative())

    def kernel(self) -> Subspace:
        sub = Subspace(self.source)
        for ks, piece in self.source.pieces.items():
            if not piece.dim:
                continue
            rows = self.matrices[ks]
            tdim = self.target.dim_piece(*ks)
            if tdim == 0:
                for i in range(piece.dim):
                    sub.insert(self.source.basis_element(*ks, i))
                continue
            transpose = [[rows[r][c] for r in range(piece.dim)] for c in range(tdim)]
            for vec in kernel_basis(transpose, piece.dim):
                sub.insert(ModuleElement(self.source, {ks: vec}))
        return sub


def quotient_map(a, i: int, j: int, strict: bool = True) -> QuotientMap:
    return QuotientMap(a, i, j, strict=strict)


class Submodule:
    """A kernel S_{i,j}(A) inside its parent module, closed under all e_l.

    When the move target has a zero entry it names the zero module, so the
    kernel is the whole parent; that case carries no quotient map.
    """

    def __init__(self, a, move, parent, subspace, qmap: QuotientMap | None):
        self.a = a
        self.move = move
        self.parent = parent
        self.subspace = subspace
        self.qmap = qmap
        if qmap is not None:
            self._certify_closure()
        i, j = move
        if j == i + 1:
            expected = eq_first_dim(a, i)
            if self.dim != expected:
                raise IntegrityError(
                    f"kernel dim for {a} move {move}: got {self.dim}, "
                    f"formula gives {expected}"
                )

    @classmethod
    def from_map(cls, qmap: QuotientMap) -> "Submodule":
        return cls(qmap.a, qmap.move, qmap.source, qmap.kernel(), qmap)

    @classmethod
    def whole_module(cls, a, move) -> "Submodule":
        parent = fusion_module(a)
        sub = Subspace(parent)
        for ks, piece in parent.pieces.items():
            for idx in range(piece.dim):
                sub.insert(parent.basis_element(*ks, idx))
        return cls(a, move, parent, sub, None)

    def _certify_closure(self) -> None:
        n = self.parent.n
        for el in self.subspace.basis_elements():
            for l in range(n):
                img = el.apply(poly_var(n, l))
                if not self.subspace.contains(img):
                    raise IntegrityError(
                        f"kernel of {self.a} move {self.move} not closed under e_{l}"
                    )

    def map_image_is_zero(self, el) -> bool:
        if self.qmap is None:
            return True
        return self.qmap.apply(el).is_zero()

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def character(self) -> GradedCharacter:
        return self.subspace.character()

    def __repr__(self):
        return f"Submodule(a={self.a}, move={self.move}, dim={self.dim})"


def submodule_S(a, i: int, j: int | None = None, strict: bool = True) -> Submodule:
    """S_{i,j}(A): the kernel of the move surjection (default j = i+1)."""
    if j is None:
        j = i + 1
    a = validate_composition(a, allow_empty=False)
    target = move_composition(a, i, j)
    if any(x < 1 for x in target) and not strict:
        return Submodule.whole_module(a, (i, j))
    return Submodule.from_map(quotient_map(a, i, j, strict=strict))


def generators_w(a, i: int) -> list[ModuleElement]:
    """The kernel generators w_j = [E(z)^j at z^{N_A(j)}] v_A, j = a_i-1 .. a_{i+1}-1.

    For j = 0 the slice is the constant 1, so w_0 is the cyclic vector.
    """
    a = validate_composition(a, allow_empty=False)
    n = len(a)
    if not 1 <= i < n:
        raise ValueError(f"need 1 <= i < {n}")
    mod = fusion_module(a)
    out = []
    for j in range(a[i - 1] - 1, a[i]):
        out.append(mod.poly_class(generating_slice(n, j, relation_exponent(a, j))))
    return out


def span_of_w(a, i: int) -> Subspace:
    """Span of the w generators under all of e_0..e_{n-1}."""
    mod = fusion_module(validate_composition(a))
    ops = [poly_var(mod.n, l) for l in range(mod.n)]
    return cyclic_span(mod, ops, generators_w(a, i))


def verify_w_generators(a, i: int) -> dict:
    """Check kernel membership of every w_j and that their span is the kernel."""
    sub = submodule_S(a, i)
    ws = generators_w(a, i)
    membership = [sub.map_image_is_zero(w) for w in ws]
    span = span_of_w(a, i)
    ok = all(membership) and span == sub.subspace
    return {
        "ok": ok,
        "membership": membership,
        "span_dim": span.dim,
        "kernel_dim": sub.dim,
        "span_character": span.character().poly_str(),
        "kernel_character": sub.character().poly_str(),
    }


def verify_sum_decomposition(a, i: int, j: int) -> dict:
    """S_{i,j}(A) as the (non-direct) sum of the consecutive kernels."""
    a = validate_composition(a, allow_empty=False)
    if j <= i:
        raise ValueError("need j > i")
    big = submodule_S(a, i, j, strict=False)
    if j == i + 1:
        return {"ok": True, "sum_dim": big.dim, "target_dim": big.dim, "parts": [big.dim]}
    parts = [submodule_S(a, l, l + 1, strict=False) for l in range(i, j)]
    total = parts[0].subspace
    for p in parts[1:]:
        total = subspace_sum(total, p.subspace)
    ok = total == big.subspace
    return {
        "ok": ok,
        "sum_dim": total.dim,
        "target_dim": big.dim,
        "parts": [p.dim for p in parts],
        "sum_character": total.character().poly_str(),
        "target_character": big.character().poly_str(),
    }


# ---------------------------------------------------------------------------
# the peeling filtration


def _peel_label(b: tuple, i: int) -> tuple:
    """Label of the layer split off at a filtration step (length n-2)."""
    return b[: i - 2] + (b[i - 2] - b[i - 1] + b[i],) + b[i + 1 :]


def _stop_rule(b: tuple, i: int) -> tuple | None:
    """(rule, layer label) when the recursion bottoms out, else None."""
    if all(x == 1 for x in b[: i - 1]):
        return (1, (b[i] - b[i - 1] + 1,) + b[i + 1 :])
    if b[i - 1] == b[i]:
        return (2, b[: i - 1] + b[i + 1 :])
    return None


def verify_filtration(a, i: int) -> dict:
    """Run the full peeling chain for S_{i,i+1}(A) and verify every layer.

    Each recursive step checks that the span of the lowest w generator has
    the character of the predicted smaller module (up to the recorded shift)
    and that the quotient character equals the kernel character of the moved
    composition; the chain ends at one of the two bottoming rules.  Layer
    dimensions must telescope to dim M^A.
    """
    a = validate_composition(a, allow_empty=False)
    n = len(a)
    if not 1 <= i < n:
        raise ValueError(f"need 1 <= i < {n}")
    mod = fusion_module(a)
    coker_label = move_composition(a, i, i + 1)
    steps = []
    layers = []
    ok = True
    b = a
    sub = submodule_S(b, i, strict=False)
    while True:
        stop = _stop_rule(b, i)
        if stop is not None:
            rule, label = stop
            layer_char = label_character(label)
            good, shift = match_characters(sub.character(), layer_char, reindex=0)
            ok = ok and good
            layers.append({"label": label, "dim": layer_char.total(), "shift": shift})
            steps.append(
                {
                    "composition": b,
                    "action": f"stop-rule-{rule}",
                    "label": label,
                    "ok": good,
                    "shift": shift,
                }
            )
            break
        # recursive step: peel the span of the lowest w generator
        w = generators_w(b, i)[0]
        bmod = fusion_module(b)
        ops = [poly_var(n, l) for l in range(n)]
        span = cyclic_span(bmod, ops, [w])
        contained = all(sub.subspace.contains(el) for el in span.basis_elements())
        label = _peel_label(b, i)
        layer_char = label_character(label)
        good1, shift1 = match_characters(span.character(), layer_char, reindex=0)
        b_next = tuple(sorted(move_composition(b, i - 1, i)))
        sub_next = submodule_S(b_next, i, strict=False)
        quot_char = sub.character() - span.character()
        good2, shift2 = match_characters(quot_char, sub_next.character(), reindex=0)
        good = contained and good1 and good2
        ok = ok and good
        layers.append({"label": label, "dim": layer_char.total(), "shift": shift1})
        steps.append(
            {
                "composition": b,
                "action": "peel",
                "label": label,
                "ok": good,
                "span_contained": contained,
                "span_shift": shift1,
                "quotient_shift": shift2,
                "next": b_next,
            }
        )
        b, sub = b_next, sub_next
    coker_dim = prod(coker_label)
    total = sum(l["dim"] for l in layers) + coker_dim
    telescoped = total == mod.total_dim
    return {
        "ok": ok and telescoped,
        "a": a,
        "i": i,
        "layers": layers,
        "cokernel": {"label": coker_label, "dim": coker_dim},
        "telescoped": telescoped,
        "total": total,
        "dim": mod.total_dim,
        "steps": steps,
    }


# ---------------------------------------------------------------------------
# tensor-product descriptions


def _span_vs_kernel(a, i: int, factor1: tuple, factor2: tuple) -> dict:
    """Common core of the two tensor descriptions of S_{i,i+1}(A).

    Spans v (x) v inside M^{factor1} (x) M^{factor2} under the diagonal
    operators e_0..e_{n-3} plus the top second-factor operator, then compares
    characters with the kernel up to a recorded global shift.
    """
    n = len(a)
    m1 = fusion_module(factor1)
    m2 = fusion_module(factor2)
    tens = TensorModule([m1, m2], require_same_n=False)
    ops = [tens.op_diag(jj) for jj in range(n - 2) if any(jj < f.n for f in tens.factors)]
    ops.append(tens.op_factor(1, n - i - 1))
    sub = submodule_S(a, i, strict=False)
    span = cyclic_span(tens, ops, [tens.cyclic_tensor()], max_dim=2 * sub.dim)
    good, shift = match_characters(sub.character(), span.character(), reindex=0)
    # the second-factor string has exactly a_{i+1} - a_i + 1 rungs
    gap = a[i] - a[i - 1]
    el = tens.cyclic_tensor()
    estring = tens.op_factor(1, n - i - 1)
    for _ in range(gap):
        el = tens.apply_op(estring, el)
    string_ok = (not el.is_zero()) and tens.apply_op(estring, el).is_zero()
    return {
        "ok": good and span.dim == sub.dim and string_ok,
        "factors": (factor1, factor2),
        "ambient_dim": tens.total_dim,
        "span_dim": span.dim,
        "kernel_dim": sub.dim,
        "shift": shift,
        "string_ok": string_ok,
        "span_character": span.character().poly_str(),
        "kernel_character": sub.character().poly_str(),
    }


def verify_second_description(a, i: int) -> dict:
    """Tensor-product description with a constant tail in the first factor."""
    a = validate_composition(a, allow_empty=False)
    n = len(a)
    if not 1 <= i < n:
        raise ValueError(f"need 1 <= i < {n}")
    if a[i - 1] >= a[i]:
        raise ValueError("needs a_i < a_{i+1}")
    factor1 = a[: i - 1] + (a[i - 1],) * (n - i - 1)
    factor2 = tuple(a[l] - a[i - 1] + 1 for l in range(i, n))
    return _span_vs_kernel(a, i, factor1, factor2)


def verify_emb(a, i: int) -> dict:
    """Tensor-product description with strictly increasing factors."""
    a = validate_composition(a, allow_empty=False)
    n = len(a)
    if not 1 <= i < n:
        raise ValueError(f"need 1 <= i < {n}")
    if any(x >= y for x, y in zip(a, a[1:])):
        raise ValueError("requires a strictly increasing composition")
    for j in range(i + 1, n):
        if a[j] - a[j - 1] <= 1:
            raise ValueError(f"gap at position {j + 1} must exceed 1")
    factor1 = a[: i - 1] + tuple(a[i - 1] + l for l in range(1, n - i))
    factor2 = (a[i] - a[i - 1] + 1,) + tuple(
        a[i + l - 1] - a[i - 1] - (l - 2) for l in range(2, n - i + 1)
    )
    return _span_vs_kernel(a, i, factor1, factor2)


def verify_inductive_description(a, i: int) -> dict:
    """Reduce S_{i,i+1}(A) to the same kernel for the shortened composition.

    For i < n-1 the kernel of A is the e_0-span of the reindexed kernel of
    (a_1..a_{n-1}); this is asserted as actual subspace equality.  For
    i = n-1 the kernel character matches the tensor product of
    M^{(a_1..a_{n-2})} with the e_0-string of length a_n - a_{n-1} + 1.
    """
    a = validate_composition(a, allow_empty=False)
    n = len(a)
    if n < 2 or not 1 <= i < n:
        raise ValueError("need n >= 2 and 1 <= i < n")
    if i < n - 1:
        short = a[:-1]
        sub_short = submodule_S(short, i, strict=False)
        mod = fusion_module(a)
        seeds = []
        for el in sub_short.subspace.basis_elements():
            shifted = {(0,) + m: c for m, c in el.representative().items()}
            image = mod.poly_class(shifted)
            if image.is_zero():
                raise IntegrityError("reindexed kernel element vanished upstairs")
            seeds.append(image)
        span = cyclic_span(mod, [poly_var(n, 0)], seeds)
        sub = submodule_S(a, i, strict=False)
        ok = span == sub.subspace
        return {
            "ok": ok,
            "mode": "e0-span",
            "span_dim": span.dim,
            "kernel_dim": sub.dim,
            "span_character": span.character().poly_str(),
            "kernel_character": sub.character().poly_str(),
        }
    # i = n-1: compare with M^{(a_1..a_{n-2})} tensor an e_0-string
    m1 = fusion_module(a[: n - 2])
    m2 = fusion_module((a[n - 1] - a[n - 2] + 1,))
    tens = TensorModule([m1, m2], require_same_n=False)
    ops = [tens.op_factor(0, j) for j in range(m1.n)]
    ops.append(tens.op_factor(1, 0))
    span = cyclic_span(tens, ops, [tens.cyclic_tensor()])
    sub = submodule_S(a, i, strict=False)
    if span.dim != tens.total_dim:
        raise IntegrityError("factor operators fail to fill the tensor product")
    ok, shift = match_characters(sub.character(), span.character(), reindex=0)
    return {
        "ok": ok and span.dim == sub.dim,
        "mode": "string-tensor",
        "span_dim": span.dim,
        "kernel_dim": sub.dim,
        "shift": shift,
        "span_character": span.character().poly_str(),
        "kernel_character": sub.character().poly_str(),
    }


def nilpotency_e1(a) -> dict:
    """Measure the nilpotency order of e_1 on the cyclic vector.

    The stated closed form sum(a_1..a_{n-1}) - n + 1 is checked against the
    measured order and the deviation, if any, is reported rather than
    asserted; the measured last nonzero power is also confirmed to be killed
    by one more application.
    """
    a = validate_composition(a, allow_empty=False)
    n = len(a)
    if n < 2:
        raise ValueError("need at least two entries")
    mod = fusion_module(a)
    e1 = poly_var(n, 1)
    el = mod.cyclic_vector()
    measured = 0
    last = el
    while not el.is_zero():
        if measured > mod.kmax + 1:
            raise IntegrityError("e_1 fails to act nilpotently")
        last = el
        el = el.apply(e1)
        measured += 1
    formula = sum(a[: n - 1]) - n + 1
    return {
        "measured": measured,
        "formula": formula,
        "holds": measured == formula,
        "deviation": measured - formula,
        "last_nonzero_support": last.support(),
        "kills_last": last.apply(e1).is_zero(),
    }


def verify_exactness(a, i: int, j: int | None = None, strict: bool = True) -> dict:
    """Character additivity along the kernel/image split of the move map."""
    if j is None:
        j = i + 1
    sub = submodule_S(a, i, j, strict=strict)
    parent = sub.parent.character()
    target = sub.qmap.target.character()
    ok = parent == sub.character() + target
    return {
        "ok": ok,
        "parent_dim": parent.total(),
        "kernel_dim": sub.dim,
        "target_dim": target.total(),
    }
