"""Command-line front end.

Commands operate on the text formats of the library: polynomials over z,
matrices with rows separated by ';' and entries by ',', and field
selectors like "2", "4" or "3^2".  All output is deterministic.  Exit
codes: 0 for success (including "false" verdicts), 2 for unparseable
input, 3 for violated preconditions.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import classify as classify_mod
from .codes import ConvolutionalCode
from .constructions import (
    building_up,
    direct_sum,
    find_completion,
    hm_extend,
    orthogonal_chain,
)
from .errors import ParseError, SdconvError
from .fields import parse_element, parse_field_selector
from .matrices import (
    col_hermite,
    format_matrix,
    format_vector,
    parse_matrix,
    parse_poly,
    parse_vector,
    row_hermite,
    smith,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdconv",
        description="Exact arithmetic for self-dual convolutional codes over F_q[z].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_field=True):
        if needs_field:
            p.add_argument("--field", default="2", help="field selector: q or p^l")
            p.add_argument("--modulus", default=None, help="modulus polynomial in a")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="write output to this path")

    p = sub.add_parser("check", help="self-orthogonality / catastrophicity / self-duality")
    add_common(p)
    p.add_argument("--canonical", action="store_true", help="also print the canonical generator")
    p.add_argument("matrix")

    p = sub.add_parser("dual", help="print a generator of the dual code")
    add_common(p)
    p.add_argument("--canonical", action="store_true", help="canonicalize the output")
    p.add_argument("matrix")

    p = sub.add_parser("hermite", help="row or column Hermite decomposition")
    add_common(p)
    p.add_argument("--side", choices=("row", "col"), default="row")
    p.add_argument("matrix")

    p = sub.add_parser("smith", help="Smith decomposition U A V = S")
    add_common(p)
    p.add_argument("matrix")

    p = sub.add_parser("distance", help="bounded free-distance search")
    add_common(p)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("matrix")

    p = sub.add_parser("construct", help="build a new self-dual code")
    csub = p.add_subparsers(dest="construction", required=True)

    pc = csub.add_parser("direct-sum")
    add_common(pc)
    pc.add_argument("matrix1")
    pc.add_argument("matrix2")

    pc = csub.add_parser("building-up")
    add_common(pc)
    pc.add_argument("--f", required=True, help="extension row vector")
    pc.add_argument("--a", default=None, help="scalar a (default: 1)")
    pc.add_argument("--b", default=None, help="scalar b (default: a square root of -1)")
    pc.add_argument("matrix")

    pc = csub.add_parser("orthogonal-chain")
    add_common(pc)
    pc.add_argument("--m", action="append", default=[], help="transform matrix (repeatable)")
    pc.add_argument("--lam", action="append", default=[], help="scale constant (repeatable)")
    pc.add_argument("--perm", action="append", default=[], help="permutation matrix (repeatable)")
    pc.add_argument("matrix")

    p = sub.add_parser("complete", help="paired-column extension plus completion search")
    add_common(p)
    p.add_argument("--a", required=True, help="comma list of pairing polynomials")
    p.add_argument("--witness", default=None, help="candidate completion row to validate")
    p.add_argument("matrix")

    p = sub.add_parser("classify", help="write a classification catalog")
    ksub = p.add_subparsers(dest="family", required=True)

    pk = ksub.add_parser("two-one")
    add_common(pk)

    pk = ksub.add_parser("four-two")
    add_common(pk, needs_field=False)
    pk.add_argument("--max-deg", type=int, required=True)

    pk = ksub.add_parser("double-diagonal")
    add_common(pk)
    pk.add_argument("--k", type=int, required=True)

    return parser


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _emit(args, text: str, obj) -> None:
    payload = text if args.format == "text" else json.dumps(obj, indent=None)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _field(args):
    return parse_field_selector(args.field, args.modulus)


def _cmd_check(args) -> int:
    spec = _field(args)
    code = ConvolutionalCode(parse_matrix(spec, args.matrix))
    so = code.is_self_orthogonal()
    nc = code.is_noncatastrophic()
    sd = code.is_self_dual()
    lines = [
        f"n: {code.n}",
        f"k: {code.k}",
        f"n=2k: {_bool(code.n == 2 * code.k)}",
        f"degree: {code.code_degree()}",
        f"self-orthogonal: {_bool(so)}",
        f"non-catastrophic: {_bool(nc)}",
        f"self-dual: {_bool(sd)}",
    ]
    obj = {
        "n": code.n,
        "k": code.k,
        "n_eq_2k": code.n == 2 * code.k,
        "degree": code.code_degree(),
        "self_orthogonal": so,
        "non_catastrophic": nc,
        "self_dual": sd,
    }
    if args.canonical:
        canon = format_matrix(code.canonical_generator())
        lines.append(f"canonical: {canon}")
        obj["canonical"] = canon
    _emit(args, "\n".join(lines), obj)
    return 0


def _cmd_dual(args) -> int:
    spec = _field(args)
    code = ConvolutionalCode(parse_matrix(spec, args.matrix))
    dual = code.dual()
    gen = dual.canonical_generator() if args.canonical else dual.generator
    _emit(args, format_matrix(gen), {"generator": format_matrix(gen)})
    return 0


def _cmd_hermite(args) -> int:
    spec = _field(args)
    matrix = parse_matrix(spec, args.matrix)
    dec = row_hermite(matrix) if args.side == "row" else col_hermite(matrix)
    text = f"form: {format_matrix(dec.form)}\ntransform: {format_matrix(dec.transform)}"
    obj = {
        "side": dec.side,
        "form": format_matrix(dec.form),
        "transform": format_matrix(dec.transform),
    }
    _emit(args, text, obj)
    return 0


def _cmd_smith(args) -> int:
    spec = _field(args)
    dec = smith(parse_matrix(spec, args.matrix))
    text = "\n".join(
        [f"U: {format_matrix(dec.U)}", f"S: {format_matrix(dec.S)}", f"V: {format_matrix(dec.V)}"]
    )
    obj = {
        "U": format_matrix(dec.U),
        "S": format_matrix(dec.S),
        "V": format_matrix(dec.V),
    }
    _emit(args, text, obj)
    return 0


def _cmd_distance(args) -> int:
    spec = _field(args)
    code = ConvolutionalCode(parse_matrix(spec, args.matrix))
    report = code.free_distance(args.bound)
    obj = {
        "dfree": report.value,
        "bound": report.search_bound,
        "status": report.status,
    }
    _emit(args, report.render(), obj)
    return 0


def _cmd_construct(args) -> int:
    spec = _field(args)
    if args.construction == "direct-sum":
        out = direct_sum(
            ConvolutionalCode(parse_matrix(spec, args.matrix1)),
            ConvolutionalCode(parse_matrix(spec, args.matrix2)),
        )
    elif args.construction == "building-up":
        code = ConvolutionalCode(parse_matrix(spec, args.matrix))
        f = parse_vector(spec, args.f)
        a = parse_element(spec, args.a) if args.a is not None else None
        b = parse_element(spec, args.b) if args.b is not None else None
        out = building_up(code, f, a, b)
    else:
        code = ConvolutionalCode(parse_matrix(spec, args.matrix))
        if not (len(args.m) == len(args.lam) == len(args.perm)):
            raise ParseError("--m, --lam and --perm must be given the same number of times")
        steps = [
            (parse_matrix(spec, m), parse_poly(spec, lam), parse_matrix(spec, perm))
            for m, lam, perm in zip(args.m, args.lam, args.perm)
        ]
        out = orthogonal_chain(code, steps)
    gen = format_matrix(out.generator)
    _emit(args, gen, {"generator": gen})
    return 0


def _cmd_complete(args) -> int:
    spec = _field(args)
    code = ConvolutionalCode(parse_matrix(spec, args.matrix))
    a_vec = parse_vector(spec, args.a)
    extended = hm_extend(code, a_vec)
    witness = parse_vector(spec, args.witness) if args.witness else None
    result = find_completion(extended, witness=witness)
    text = "\n".join(
        [
            f"completion: {result.kind}",
            f"extended: {format_matrix(extended)}",
            f"witness: {format_vector(result.witness)}",
            f"generator: {format_matrix(result.generator)}",
        ]
    )
    obj = {
        "completion": result.kind,
        "extended": format_matrix(extended),
        "witness": format_vector(result.witness),
        "generator": format_matrix(result.generator),
    }
    _emit(args, text, obj)
    return 0


def _cmd_classify(args) -> int:
    if args.family == "two-one":
        records = classify_mod.classify_21(_field(args))
    elif args.family == "four-two":
        records = classify_mod.classify_42_binary(args.max_deg)
    else:
        records = classify_mod.classify_double_diagonal(_field(args), args.k)
        if records is None:
            _emit(args, "absent: no square root of -1 in this field", {"records": None})
            return 0
    text = classify_mod.format_catalog(records)
    obj = {
        "records": [
            {
                "q": r.q,
                "n": r.n,
                "k": r.k,
                "delta": r.degree,
                "dfree": r.dfree.value,
                "dfree_status": r.dfree.status,
                "gen": format_matrix(r.canonical_generator),
            }
            for r in records
        ]
    }
    _emit(args, text, obj)
    return 0


_DISPATCH = {
    "check": _cmd_check,
    "dual": _cmd_dual,
    "hermite": _cmd_hermite,
    "smith": _cmd_smith,
    "distance": _cmd_distance,
    "construct": _cmd_construct,
    "complete": _cmd_complete,
    "classify": _cmd_classify,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _DISPATCH[args.command](args)
    except ParseError as exc:
        print(f"error: ParseError: {exc}", file=sys.stderr)
        return 2
    except SdconvError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
