"""``grpder``: dimension tables, verification reports, basis export, classification.

Exit codes: 0 success / all checks pass, 1 verification mismatch,
2 usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import GroupAlgebra
from .derivation import (
    GeneratorImages,
    Kind,
    NotADerivation,
    classify,
    derivation_space_oracle,
    failing_relators,
    inner_basis,
    inner_generators,
    inner_witness,
    listed_basis,
)
from .verify import CaseSpec, dims_row, verify_grid

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _cases(ns: list[int], chars: list[int]) -> list[CaseSpec]:
    try:
        return [CaseSpec(n, p) for n in ns for p in chars]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _dump(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None


# ---------------------------------------------------------------------------


def cmd_dims(args) -> int:
    rows = [dims_row(c) for c in _cases(args.n_list, args.char_list)]
    if args.json:
        _dump(rows, "-")
    else:
        header = f"{'n':>3} {'char':>5} {'dim der':>8} {'inner':>6} {'outer':>6} {'expected':>9}  match"
        print(header)
        for r in rows:
            print(f"{r['n']:>3} {r['char']:>5} {r['dim_der']:>8} {r['dim_inner']:>6} {r['dim_outer']:>6} "
                  f"{r['expected']:>9}  {'yes' if r['match'] else 'NO'}")
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_MISMATCH


def cmd_verify(args) -> int:
    ns = args.n_list if args.n_list else list(range(1, args.n_max + 1))
    cases = _cases(ns, args.chars)
    report = verify_grid(cases, jobs=args.jobs, even_order_sweep=not args.skip_even_order_sweep)
    _dump(report, args.out)
    for r in report["cases"]:
        status = "pass" if r["passed"] else "FAIL"
        notes = "; ".join(r["listed_basis"]["findings"])
        print(f"n={r['n']:<3} char={r['char']:<3} der={r['dim_oracle']:<4} inner={r['dim_inner']:<4} {status}"
              + (f"  [{notes}]" if notes else ""), file=sys.stderr)
    return EXIT_OK if report["passed"] else EXIT_MISMATCH


def cmd_basis(args) -> int:
    case = _cases([args.n], [args.char])[0]
    params, field = case.params, case.field
    alg = GroupAlgebra(params, field)
    which = args.which
    if which == "full":
        payload = [pair.to_json() for pair in derivation_space_oracle(params, field).pairs()]
    elif which == "inner":
        payload = [
            {"g": g.to_json(), **pair.to_json()}
            for g, pair in zip(inner_generators(params), inner_basis(params, field))
        ]
    elif which == "listed":
        payload = [
            {"label": c.label, "valid": c.valid, "failing_relators": list(c.failing), **c.images.to_json()}
            for c in listed_basis(params, field)
        ]
    elif which.startswith("anti_centralizer:"):
        text = which.split(":", 1)[1]
        try:
            beta = alg.parse(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        space = alg.anti_centralizer(beta)
        payload = [alg.from_vector(row).to_json() for row in space.basis]
    else:
        raise UsageError(f"unknown --which {which!r}; use full, inner, listed or anti_centralizer:<element>")
    _dump(payload, args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    case = _cases([args.n], [args.char])[0]
    alg = GroupAlgebra(case.params, case.field)
    try:
        with open(args.input) as fh:
            obj = json.load(fh)
        images = GeneratorImages.from_json(alg, obj)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read derivation pair from {args.input}: {exc}") from None
    try:
        kind = classify(images)
    except NotADerivation:
        kind = Kind.NOT_A_DERIVATION
    result = {"result": kind.value}
    if kind is Kind.NOT_A_DERIVATION:
        result["failing_relators"] = failing_relators(images)
    elif kind is Kind.INNER:
        beta = inner_witness(images)
        result["witness"] = beta.to_json()
        result["witness_text"] = str(beta)
    print(kind.value)
    if "witness_text" in result:
        print(f"witness: d = d_beta with beta = {result['witness_text']}")
    if args.json:
        _dump(result, "-")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grpder", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="tabulate derivation and inner-derivation dimensions")
    p.add_argument("--n-list", type=_int_list, default=[1, 2, 3, 4, 5, 6])
    p.add_argument("--char-list", type=_int_list, default=[0, 3, 5, 7])
    p.add_argument("--json", action="store_true", help="print rows as JSON")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("verify", help="run every check over a grid and write a JSON report")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--n-list", type=_int_list, default=None, help="explicit n values (overrides --n-max)")
    p.add_argument("--chars", type=_int_list, default=[0, 3, 5, 7])
    p.add_argument("--out", default="-")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--skip-even-order-sweep", action="store_true", help="skip the all-elements anti-centralizer sweep")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("basis", help="export a basis as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--char", type=int, required=True)
    p.add_argument("--which", required=True, help="full | inner | listed | anti_centralizer:<element>")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("classify", help="classify a derivation pair read from JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--char", type=int, required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"grpder: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
