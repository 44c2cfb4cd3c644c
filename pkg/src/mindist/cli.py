"""Command-line entry point: ``mindist <subcommand> (--input FILE | --example NAME)``."""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .boolean import gr_dims, gr_jump_indices, prop_check
from .code import DEFAULT_ENUM_BUDGET, LinearCode, change_field, is_mds, puncture, shorten, singleton_bound
from .errors import BudgetExceeded, MindistError, ParseError
from .exact import make_field
from .graded import (
    alpha_m_fitt,
    deletion_restriction,
    delres_identity_check,
    dual_forms,
    mds_star_check,
    ses_dim_check,
)
from .inverse import RATIONALS, apolar_profile, chow_form, working_code
from .matroid import distance_from_tutte, tutte
from .orlik_terao import alpha_iot, betti_field, ot_betti, ot_generators, strand_length
from .poly import default_names
from .report import ALL_METHODS, EXIT_OK, EXIT_USAGE, run_report


def _load_code(args) -> LinearCode:
    if args.example:
        try:
            ex = catalog.get_example(args.example)
        except KeyError as exc:
            raise ParseError(str(exc.args[0])) from None
        code = ex.code()
    else:
        with open(args.input, encoding="utf-8") as fh:
            code = catalog.parse_code_file(fh.read())
    if args.field:
        code = change_field(code, make_field(args.field), allow_zero_columns=False)
    return code


def _emit(args, data: dict, text: str):
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _code_info(code: LinearCode) -> dict:
    return {"n": code.n, "k": code.k, "field": code.field.name}


def cmd_report(args, code):
    methods = args.method or list(ALL_METHODS)
    report = run_report(code, methods, budget=args.budget, prime=args.prime)
    _emit(args, report.to_dict(), report.format_text())
    return report.exit_code


def cmd_distance(args, code):
    methods = args.method or ["brute", "tutte", "afold", "fitt", "berget", "binary"]
    return cmd_report(argparse.Namespace(**{**vars(args), "method": methods}), code)


def cmd_tutte(args, code):
    T = tutte(code)
    r = distance_from_tutte(T, code.n, code.k)
    data = {
        "code": _code_info(code),
        "tutte": str(T),
        "tutte_shifted": str(T.shift_x(1)),
        "bases": T.evaluate(1, 1),
        "d": r.d,
        "projective_count": r.projective_count,
    }
    text = "\n".join([
        f"T(x, y)   = {T}",
        f"T(x+1, y) = {T.shift_x(1)}",
        f"bases     = {data['bases']}",
        f"d = {r.d}, projective minimum-weight words = {r.projective_count}",
    ])
    _emit(args, data, text)
    return EXIT_OK


def cmd_alpha_fitt(args, code):
    a = alpha_m_fitt(code)
    _emit(args, {"code": _code_info(code), "alpha_m_fitt": a, "d": a - 1}, f"alpha(m Fitt) = {a}, d = {a - 1}")
    return EXIT_OK


def cmd_inverse(args, code):
    work = working_code(code, make_field(args.work_field) if args.work_field else RATIONALS)
    P = chow_form(dual_forms(work))
    prof = apolar_profile(P)
    names = default_names(work.k)
    data = {
        "code": _code_info(code),
        "working_field": work.field.name,
        "chow_form": P.format(names),
        "hilbert": list(prof.hf),
        "alpha_ann": prof.alpha,
        "bound": prof.alpha - 1,
        "symmetric": prof.symmetric,
    }
    text = "\n".join([
        f"working field: {work.field.name}",
        f"chow form: {data['chow_form']}",
        f"hilbert function: {' '.join(map(str, prof.hf))}",
        f"alpha(Ann) = {prof.alpha}, so d >= {prof.alpha - 1}",
        f"symmetric: {prof.symmetric}",
    ])
    _emit(args, data, text)
    return EXIT_OK


def cmd_binary(args, code):
    dims = gr_dims(code)
    top, literal = gr_jump_indices(code, dims)
    props = {a: prop_check(code, a) for a in range(1, code.n + 1)}
    data = {
        "code": _code_info(code),
        "gr_dims": list(dims.dims),
        "top_jump": top,
        "literal_jump": literal,
        "d": code.n - top,
        "prop_check": {str(a): v for a, v in props.items()},
    }
    text = "\n".join([
        f"gr dims: {' '.join(map(str, dims.dims))}",
        f"top jump = {top} (d = {code.n - top}), smallest positive jump = {literal}",
        "prop_check: " + " ".join(f"a={a}:{'T' if v else 'F'}" for a, v in props.items()),
    ])
    _emit(args, data, text)
    return EXIT_OK


def cmd_ot(args, code):
    I = ot_generators(code)
    alpha = alpha_iot(code, I)
    names = [f"y{i + 1}" for i in range(code.n)]
    delta, B = strand_length(code, args.prime, I)
    # S/I is Cohen-Macaulay of dimension k, so i <= n - k and j <= 2(n - k) hold everything
    span = code.n - code.k
    try:
        B = ot_betti(code, span, 2 * span, args.prime, I)
    except BudgetExceeded:
        pass
    data = {
        "code": _code_info(code),
        "betti_field": betti_field(code, args.prime).name,
        "generators": [g.format(names) for g in I.generators],
        "alpha_iot": alpha,
        "delta": delta,
        "betti": [[i, j, b] for (i, j), b in sorted(B.entries.items())],
        "betti_bounds": [B.max_i, B.max_j],
    }
    lines = [f"generators ({len(I.generators)}):"] + [f"  {g}" for g in data["generators"]]
    lines += [f"alpha(IOT) = {alpha}, linear strand length = {delta}", f"betti table of S/I over {data['betti_field']}:", B.format()]
    if code.k == 3:
        bound = code.n - 2 if alpha >= 3 else code.n - delta - 3
        data["bound"] = bound
        lines.append(f"k = 3 distance bound: d >= {bound}" + (" (MDS)" if alpha >= 3 else ""))
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_mds(args, code):
    mds = is_mds(code, args.budget)
    data = {"code": _code_info(code), "is_mds": mds, "singleton": singleton_bound(code)}
    lines = [f"MDS: {mds} (Singleton bound {singleton_bound(code)})"]
    if mds:
        t_max = args.tmax
        split = deletion_restriction(code)
        star = mds_star_check(code, t_max)
        ses = all(ses_dim_check(code, a, t, split) for a in range(code.n + 1) for t in range(t_max + 1))
        delres = all(delres_identity_check(code, a, t, split) for a in range(code.n + 1) for t in range(t_max + 1))
        minors = {}
        if code.k > 1:
            minors["shorten"] = is_mds(shorten(code, code.n - 1), args.budget)
        if code.n > code.k:
            minors["puncture"] = is_mds(puncture(code, code.n - 1), args.budget)
        data.update(star_check=star, ses_check=ses, delres_check=delres, minors_mds=minors, tmax=t_max)
        lines += [
            f"star configuration Hilbert functions up to t={t_max}: {star}",
            f"short exact sequence dimensions: {ses}",
            f"deletion-restriction identity: {delres}",
        ] + [f"{name} of last column is MDS: {v}" for name, v in minors.items()]
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_list_examples(args, code=None):
    rows = catalog.list_examples()
    data = [{"name": e.name, "field": e.field, "description": e.description} for e in rows]
    text = "\n".join(f"{e.name:<10} {e.field:<3} {e.description}" for e in rows)
    _emit(args, {"examples": data}, text)
    return EXIT_OK


COMMANDS = {
    "distance": cmd_distance,
    "tutte": cmd_tutte,
    "alpha-fitt": cmd_alpha_fitt,
    "inverse": cmd_inverse,
    "binary": cmd_binary,
    "ot": cmd_ot,
    "mds": cmd_mds,
    "report": cmd_report,
    "list-examples": cmd_list_examples,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mindist", description="Minimum distance of linear codes, cross-checked.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "list-examples":
            continue
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", metavar="FILE", help="code file: 'field F', 'k n', then k rows")
        src.add_argument("--example", metavar="NAME", help="named example, see list-examples")
        p.add_argument("--field", help="re-read the generator over this field (Q or F<p>)")
        p.add_argument("--budget", type=int, default=DEFAULT_ENUM_BUDGET, help="max codewords to enumerate")
        p.add_argument("--prime", type=int, default=None, help="prime field for Betti numbers")
        p.add_argument("--tmax", type=int, default=8, help="top degree for the MDS checks")
        p.add_argument("--method", action="append", choices=ALL_METHODS, help="repeatable; default all")
        p.add_argument("--work-field", help="field for apolarity (default Q)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handler = COMMANDS[args.command]
    if args.command == "list-examples":
        return handler(args)
    try:
        code = _load_code(args)
        return handler(args, code)
    except (MindistError, OSError) as exc:
        print(f"mindist: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
