"""Constructions that produce new self-dual codes from known ones.

Four routes are implemented: direct sums, chains of scaled-orthogonal
transforms and column permutations, the generalized building-up extension
(over any field containing a square root of -1), and the column-pairing
extension with its self-dual completion search (binary only).  Every
construction re-verifies its output with the full self-duality check
instead of trusting the algebra, so precondition violations that slip past
the explicit checks still surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .codes import ConvolutionalCode
from .errors import (
    BadScalars,
    BadVector,
    DimensionMismatch,
    FieldMismatch,
    FieldObstruction,
    MalformedInput,
    NotBinary,
    NotOrthogonalScaled,
    NotPermutation,
    NotSelfDual,
    NotUnit,
)
from .fields import FieldElement, sqrt_of_minus_one
from .matrices import (
    PolyMatrix,
    as_poly_vector,
    dot,
    inverse_unimodular,
    is_identity_padded,
    right_kernel_basis,
    row_matrix,
    smith,
    solve_left,
    vstack,
)
from .polys import Poly, vec_content, xgcd

NON_TRIVIAL = "non-trivial"
TRIVIAL_ONLY = "trivial-only"


@dataclass(frozen=True)
class CompletionResult:
    """Outcome of the self-dual completion search.

    ``kind`` is "non-trivial" when a completion exists whose code does not
    contain (1,1,0,...,0); the generator then stacks the witness row on the
    extended matrix.  For "trivial-only" the generator is the reference
    completion with the (1,1,0,...,0) row.
    """

    kind: str
    generator: PolyMatrix
    witness: tuple[Poly, ...]

    @property
    def is_nontrivial(self) -> bool:
        return self.kind == NON_TRIVIAL


def _require_self_dual(code: ConvolutionalCode, who: str) -> None:
    if not code.is_self_dual():
        raise NotSelfDual(f"{who} requires a self-dual input code")


def direct_sum(c1: ConvolutionalCode, c2: ConvolutionalCode) -> ConvolutionalCode:
    """Block-diagonal sum of two self-dual codes; self-dual of size (n+n', k+k')."""
    if c1.spec != c2.spec:
        raise FieldMismatch("direct sum of codes over different fields")
    _require_self_dual(c1, "direct_sum")
    _require_self_dual(c2, "direct_sum")
    if c1.k == 0:
        return c2
    if c2.k == 0:
        return c1
    spec = c1.spec
    zero = Poly.zero(spec)
    rows = [list(r) + [zero] * c2.n for r in c1.generator.entries]
    rows += [[zero] * c1.n + list(r) for r in c2.generator.entries]
    out = ConvolutionalCode(PolyMatrix(spec, rows, cols=c1.n + c2.n))
    assert out.is_self_dual()
    return out


def orthogonal_chain(
    code: ConvolutionalCode,
    steps: Sequence[tuple[PolyMatrix, object, PolyMatrix]],
) -> ConvolutionalCode:
    """Apply steps (M, lambda, P) with M M^T = lambda I and P a permutation.

    The generator becomes G M_1 P_1 ... M_r P_r; the result is self-dual
    whenever every lambda is a nonzero constant.
    """
    _require_self_dual(code, "orthogonal_chain")
    spec = code.spec
    gen = code.generator
    for m, lam, perm in steps:
        lam_poly = lam if isinstance(lam, Poly) else Poly(spec, (lam,))
        if not lam_poly or lam_poly.degree() != 0:
            raise NotUnit(f"scale factor {lam_poly} is not a nonzero constant")
        if m.rows != code.n or m.cols != code.n:
            raise DimensionMismatch(f"transform must be {code.n}x{code.n}")
        expected = PolyMatrix(
            spec,
            [
                [lam_poly if i == j else Poly.zero(spec) for j in range(code.n)]
                for i in range(code.n)
            ],
        )
        if m @ m.transpose() != expected:
            raise NotOrthogonalScaled("M M^T differs from lambda I")
        if not _is_permutation(perm):
            raise NotPermutation("P is not a permutation matrix")
        gen = gen @ m @ perm
    out = ConvolutionalCode(gen)
    assert out.is_self_dual()
    return out


def _is_permutation(m: PolyMatrix) -> bool:
    if m.rows != m.cols:
        return False
    one, zero = Poly.one(m.spec), Poly.zero(m.spec)
    col_hits = [0] * m.cols
    for row in m.entries:
        row_hits = 0
        for j, e in enumerate(row):
            if e == one:
                row_hits += 1
                col_hits[j] += 1
            elif e != zero:
                return False
        if row_hits != 1:
            return False
    return all(h == 1 for h in col_hits)


def building_up(
    code: ConvolutionalCode,
    f: Sequence,
    a: Optional[FieldElement] = None,
    b: Optional[FieldElement] = None,
) -> ConvolutionalCode:
    """Extend a self-dual (2k, k) code to (2k+2, k+1).

    Requires nonzero scalars with a^2 + b^2 = 0 and a row vector f with
    f f^T = -(a^{-1})^2.  When the scalars are omitted they default to
    a = 1 and b = a square root of -1, which exists unless p = 3 mod 4
    with odd extension degree (then FieldObstruction is raised).  The new
    generator has first row (-a^{-1}, 0, f) and rows (a y_i, b y_i, g_i)
    with y_i = f g_i^T.
    """
    _require_self_dual(code, "building_up")
    spec = code.spec
    if (a is None) != (b is None):
        raise BadScalars("provide both scalars or neither")
    if a is None:
        root = sqrt_of_minus_one(spec)
        if root is None:
            raise FieldObstruction(f"-1 is not a square in {spec}")
        a, b = spec.one, root
    else:
        if isinstance(a, int):
            a = spec.from_int(a)
        if isinstance(b, int):
            b = spec.from_int(b)
        if not a or not b:
            raise BadScalars("scalars must be nonzero")
        if a * a + b * b != spec.zero:
            raise BadScalars("a^2 + b^2 must vanish")
    fv = as_poly_vector(spec, f)
    if len(fv) != code.n:
        raise BadVector(f"extension row must have length {code.n}")
    a_inv = a.inverse()
    target = Poly(spec, (-(a_inv * a_inv),))
    if dot(fv, fv) != target:
        raise BadVector("f f^T must equal -(a^{-1})^2")
    rows = [[Poly(spec, (-a_inv,)), Poly.zero(spec), *fv]]
    for g_row in code.generator.entries:
        y = dot(fv, g_row)
        rows.append([y * a, y * b, *g_row])
    out = ConvolutionalCode(PolyMatrix(spec, rows, cols=code.n + 2))
    assert out.is_self_dual()
    return out


def hm_extend(code: ConvolutionalCode, a_vec: Sequence) -> PolyMatrix:
    """Prepend paired columns (a_i, a_i) to a binary self-dual generator.

    The result is a k x (2k+2) matrix generating a self-orthogonal code
    regardless of the a_i; whether it completes non-trivially depends on
    them (see find_completion).
    """
    if code.spec.q != 2:
        raise NotBinary("paired-column extension is defined over GF(2) only")
    _require_self_dual(code, "hm_extend")
    av = as_poly_vector(code.spec, a_vec)
    if len(av) != code.k:
        raise DimensionMismatch(f"need {code.k} pairing polynomials, got {len(av)}")
    rows = [[ai, ai, *g_row] for ai, g_row in zip(av, code.generator.entries)]
    out = PolyMatrix(code.spec, rows, cols=code.n + 2)
    assert (out @ out.transpose()).is_zero()
    return out


def _validate_extended(gt: PolyMatrix) -> None:
    if gt.spec.q != 2:
        raise MalformedInput("extended matrix must be over GF(2)")
    if gt.rows < 1 or gt.cols != 2 * gt.rows + 2:
        raise MalformedInput(f"expected k x (2k+2) matrix, got {gt.rows}x{gt.cols}")
    if any(row[0] != row[1] for row in gt.entries):
        raise MalformedInput("first two columns are not paired")
    if not (gt @ gt.transpose()).is_zero():
        raise MalformedInput("extended matrix is not self-orthogonal")


def _unit_content_vector(spec, vec: Sequence[Poly]) -> tuple[Poly, ...]:
    content = vec_content(vec)
    if content == Poly.one(spec):
        return tuple(vec)
    # Kernel modules are saturated over a domain, so dividing a kernel
    # vector by its content keeps it in the kernel and outside any span
    # it was outside of.
    out = []
    for entry in vec:
        q, r = divmod(entry, content)
        assert not r
        out.append(q)
    return tuple(out)


def find_completion(gt: PolyMatrix, witness: Optional[Sequence] = None) -> CompletionResult:
    """Search for a self-dual completion of an extended k x (2k+2) matrix.

    A non-trivial completion exists iff the all-ones vector lies in the
    row span of the extended matrix.  In that case candidate rows are
    drawn from the kernel basis (single rows first, then sums of two, in
    index order), reduced to content 1, and kept only when the completed
    matrix verifies as self-dual; content 1 and lying outside the span of
    the extension plus (1,1,0,...,0) are NOT sufficient on their own (the
    completion can come out catastrophic), so verification is the gate.
    When no scanned candidate verifies, an exact witness is constructed by
    completing the extension to a module basis of the kernel, which always
    succeeds.  A caller-supplied witness is validated instead of searching.
    """
    _validate_extended(gt)
    spec = gt.spec
    cols = gt.cols
    e_row = as_poly_vector(spec, (1, 1) + (0,) * (cols - 2))
    all_ones = as_poly_vector(spec, (1,) * cols)
    has_all_ones = solve_left(gt, all_ones) is not None
    if not has_all_ones:
        if witness is not None:
            raise BadVector("only trivial completions exist for this extension")
        trivial = vstack(row_matrix(spec, e_row), gt)
        assert ConvolutionalCode(trivial).is_self_dual()
        return CompletionResult(kind=TRIVIAL_ONLY, generator=trivial, witness=e_row)

    span_with_e = vstack(gt, row_matrix(spec, e_row))

    def attempt(cand: Sequence[Poly]) -> Optional[CompletionResult]:
        if solve_left(span_with_e, cand) is not None:
            return None
        f = _unit_content_vector(spec, cand)
        assert solve_left(span_with_e, f) is None
        gen = vstack(row_matrix(spec, f), gt)
        if not ConvolutionalCode(gen).is_self_dual():
            return None
        return CompletionResult(kind=NON_TRIVIAL, generator=gen, witness=f)

    if witness is not None:
        wv = as_poly_vector(spec, witness)
        if len(wv) != cols:
            raise BadVector(f"witness must have length {cols}")
        if any(dot(wv, row) for row in gt.entries):
            raise BadVector("witness is not orthogonal to the extended matrix")
        result = attempt(wv)
        if result is None:
            raise BadVector("witness does not produce a non-trivial self-dual completion")
        return result

    kernel = right_kernel_basis(gt)
    k_rows = [kernel.row(i) for i in range(kernel.rows)]
    for row in k_rows:
        result = attempt(row)
        if result is not None:
            return result
    for i in range(len(k_rows)):
        for j in range(i + 1, len(k_rows)):
            cand = tuple(x + y for x, y in zip(k_rows[i], k_rows[j]))
            result = attempt(cand)
            if result is not None:
                return result
    result = attempt(_exact_completion_witness(gt, e_row, kernel))
    assert result is not None
    return result


def _exact_completion_witness(
    gt: PolyMatrix, e_row: tuple[Poly, ...], kernel: PolyMatrix
) -> tuple[Poly, ...]:
    """Witness whose class forms a basis of kernel/span with (1,1,0,...,0).

    Works in kernel coordinates: expresses the extension rows and the
    (1,1,0,...,0) row there, completes that stack to a unimodular matrix
    through its Smith column transform, and maps the completing row back.
    The stacked rows then form a module basis of the kernel, which is
    exactly the condition the completion needs.
    """
    spec = gt.spec
    coords = []
    for row in list(gt.entries) + [e_row]:
        c = solve_left(kernel, row)
        assert c is not None  # both lie inside the kernel
        coords.append(c)
    stacked = PolyMatrix(spec, coords, cols=kernel.rows)
    dec = smith(stacked)
    # the trivial completion is self-dual, so its coordinate module is
    # saturated and the stack is left-prime
    assert is_identity_padded(dec.S)
    v_inv = inverse_unimodular(dec.V)
    x = v_inv.entries[stacked.rows]
    return tuple(dot(x, kernel.column(j)) for j in range(kernel.cols))


def is_trivial_completion(g1: PolyMatrix) -> bool:
    """True iff a completed generator produces the trivial completion code.

    Membership of (1,1,0,...,0) decides this: containment between self-dual
    codes forces equality, so the completion equals the trivial one exactly
    when that row lies in its span.
    """
    if g1.rows < 2 or g1.cols != 2 * g1.rows:
        raise MalformedInput(f"expected (k+1) x (2k+2) matrix, got {g1.rows}x{g1.cols}")
    if g1.spec.q != 2:
        raise MalformedInput("completions are defined over GF(2) only")
    if any(row[0] != row[1] for row in g1.entries[1:]):
        raise MalformedInput("first two columns of the extension rows are not paired")
    if not ConvolutionalCode(g1).is_self_dual():
        raise MalformedInput("matrix does not generate a self-dual code")
    spec = g1.spec
    e_row = as_poly_vector(spec, (1, 1) + (0,) * (g1.cols - 2))
    return solve_left(g1, e_row) is not None


def default_a_vec(code: ConvolutionalCode) -> tuple[Poly, ...]:
    """Pairing polynomials that guarantee a non-trivial completion.

    Solves b G = (1,...,1), which a binary self-dual code always admits,
    then runs an extended-gcd chain over the b_i (their gcd is 1) to find
    a with sum a_i b_i = 1; that makes the all-ones vector reachable in
    the extended matrix.
    """
    if code.spec.q != 2:
        raise NotBinary("default pairing is defined over GF(2) only")
    _require_self_dual(code, "default_a_vec")
    spec = code.spec
    all_ones = as_poly_vector(spec, (1,) * code.n)
    b = solve_left(code.generator, all_ones)
    assert b is not None  # all-ones lies in every binary self-dual code
    g = Poly.zero(spec)
    coeffs: list[Poly] = []
    for b_i in b:
        g2, s, t = xgcd(g, b_i)
        coeffs = [c * s for c in coeffs] + [t]
        g = g2
    assert g == Poly.one(spec)
    return tuple(coeffs)
