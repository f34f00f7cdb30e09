"""Shared randomized generators for the matrix and code test suites."""

import random
from functools import lru_cache

from sdconv import (
    ConvolutionalCode,
    Poly,
    PolyMatrix,
    classify_21,
    classify_42_binary,
    direct_sum,
    make_field,
    rank,
)


@lru_cache(maxsize=None)
def classify42(max_deg: int):
    """classify_42_binary memoized across tests (records are immutable)."""
    return tuple(classify_42_binary(max_deg))

F2 = make_field(2)
F4 = make_field(2, 2)
F5 = make_field(5)


def rand_poly(rng: random.Random, spec, max_deg: int) -> Poly:
    deg = rng.randrange(-1, max_deg + 1)
    if deg < 0:
        return Poly.zero(spec)
    els = spec.elements()
    coeffs = [rng.choice(els) for _ in range(deg)]
    coeffs.append(rng.choice(spec.nonzero_elements()))
    return Poly(spec, coeffs)


def rand_matrix(rng: random.Random, spec, k: int, n: int, max_deg: int = 2) -> PolyMatrix:
    return PolyMatrix(
        spec, [[rand_poly(rng, spec, max_deg) for _ in range(n)] for _ in range(k)], cols=n
    )


def rand_full_rank(rng: random.Random, spec, k: int, n: int, max_deg: int = 2) -> PolyMatrix:
    while True:
        m = rand_matrix(rng, spec, k, n, max_deg)
        if rank(m) == k:
            return m


def rand_unimodular(rng: random.Random, spec, n: int, ops: int = 6) -> PolyMatrix:
    """Product of elementary operations: swaps, unit scalings, poly shears."""
    rows = [list(r) for r in PolyMatrix.identity(spec, n).entries]
    for _ in range(ops):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0 and n > 1:
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == 1:
            c = rng.choice(spec.nonzero_elements())
            rows[i] = [x * c for x in rows[i]]
        elif n > 1:
            if i == j:
                j = (j + 1) % n
            q = rand_poly(rng, spec, 2)
            rows[i] = [x + q * y for x, y in zip(rows[i], rows[j])]
    return PolyMatrix(spec, rows, cols=n)


_BASE_SELF_DUAL: list[ConvolutionalCode] = []


def base_self_dual_codes() -> list[ConvolutionalCode]:
    if not _BASE_SELF_DUAL:
        for rec in classify_21(F2) + classify_21(F5) + classify_21(F4):
            _BASE_SELF_DUAL.append(ConvolutionalCode(rec.canonical_generator))
        for rec in classify_42_binary(1):
            _BASE_SELF_DUAL.append(ConvolutionalCode(rec.canonical_generator))
        first = _BASE_SELF_DUAL[0]
        _BASE_SELF_DUAL.append(direct_sum(first, first))
    return _BASE_SELF_DUAL


def self_dual_corpus(rng: random.Random, size: int = 30) -> list[ConvolutionalCode]:
    """Self-dual codes of several sizes and fields, generator matrices mixed
    by random unimodular left factors so they are not all canonical."""
    base = base_self_dual_codes()
    out = []
    while len(out) < size:
        code = rng.choice(base)
        u = rand_unimodular(rng, code.spec, code.k)
        out.append(ConvolutionalCode(u @ code.generator))
    return out
