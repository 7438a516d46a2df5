"""Command-line driver: ``affine-springer {tableau,kappa,cell,check-all}``.

Exit codes: 0 all checks pass, 1 a check failed, 2 input error, 3 singular or
invalid matrix.  ``AFFINE_SPRINGER_SEED`` overrides the default seed and
``AFFINE_SPRINGER_OUTPUT_DIR``, when set, also receives each JSON result.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .affine_weyl import AffinePermutation, bruhat_leq, tau
from .constructions import q_of_partition, jordan_type, report
from .errors import DomainError, SingularMatrixError
from .laurent import LaurentMatrix, extract_cell, extract_cell_mod
from .tableau import ParabolicDescriptor, build_tableau, dim_g_mod_p
from .verify import check_all

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SINGULAR = 0, 1, 2, 3


class InputError(Exception):
    pass


def _parse_d(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"cannot parse -d {text!r}: expected comma-separated integers") from exc


def _descriptor(args) -> ParabolicDescriptor:
    if args.n is None:
        raise InputError("-n is required")
    if args.n < 2:
        raise InputError("n must be at least 2")
    try:
        return ParabolicDescriptor(args.n, _parse_d(args.d))
    except DomainError as exc:
        raise InputError(str(exc)) from exc


def _perm_view(w: AffinePermutation) -> dict:
    return {"window": list(w.window), "matrix": w.matrix_str(), "length": w.length()}


def _emit(args, name: str, payload: dict, text: str) -> None:
    body = json.dumps(payload, sort_keys=True, indent=2)
    print(body if args.output == "json" else text)
    out_dir = os.environ.get("AFFINE_SPRINGER_OUTPUT_DIR")
    if out_dir:
        Path(out_dir).mkdir(parents=True, exist_ok=True)
        (Path(out_dir) / f"{name}.json").write_text(body + "\n")


# -- subcommands ---------------------------------------------------------------


def cmd_tableau(args) -> int:
    tab = build_tableau(_descriptor(args))
    data = tab.to_dict()
    data["dim_g_mod_p"] = dim_g_mod_p(tab)
    data["red_closed_form_mismatches"] = tab.closed_form_mismatches()
    lines = [
        tab.render(),
        "",
        f"lambda = {tab.lam}",
        f"nu     = {tab.nu.parts}",
        f"r = {tab.r}, s = {tab.s}, dim G/P = {data['dim_g_mod_p']}",
        f"S1   = {tab.s1}",
        f"Red  = {tuple(sorted(tab.red_set))}",
        f"l    = {tab.l_seq}",
        f"m    = {tab.m_seq}",
        f"t    = {tab.t_seq}",
    ]
    _emit(args, "tableau", data, "\n".join(lines))
    return EXIT_OK


def cmd_kappa(args) -> int:
    tab = build_tableau(_descriptor(args))
    data = report(tab)
    lines = [
        f"kappa  {data['kappa']['window']}  {data['kappa']['matrix']}",
        f"varpi  {data['varpi']['window']}  {data['varpi']['matrix']}",
        f"tau_q  {data['tau_q']['window']}  q = {tuple(data['tau_q']['q'])}",
        f"sigma  {data['sigma']['window']}",
        f"w_g    {data['w_g']['window']}",
        f"w_p    {data['w_p']['window']}",
        "lengths: " + ", ".join(f"{k}={v}" for k, v in data["lengths"].items()),
        f"length formula: {data['kappa_length_formula']}",
        f"g_stable={data['g_stable']} kappa_minimal_in_WP={data['kappa_minimal_in_WP']} "
        f"is_compactification={data['is_compactification']}",
    ]
    lines += [f"  {'ok  ' if ok else 'FAIL'} {name}" for name, ok in data["checks"].items()]
    _emit(args, "kappa", data, "\n".join(lines))
    failed = [k for k, ok in data["checks"].items() if not ok]
    if failed:
        print(f"check failed: {failed[0]}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _read_matrix(path: str) -> LaurentMatrix:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        if text.lstrip().startswith("{"):
            return LaurentMatrix.from_json(text)
        return LaurentMatrix.parse(text)
    except SingularMatrixError:
        raise
    except (DomainError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse matrix file {path}: {exc}") from exc


def _as_one_minus_tinv(m: LaurentMatrix):
    """``N`` if ``m = 1 - t^-1 N`` with ``N`` nilpotent, else None."""
    n = m.n
    for i in range(n):
        for j in range(n):
            x = m[i, j]
            if any(e not in (0, -1) for e, _ in x.items()) or x.coeff(0) != int(i == j):
                return None
    N = [[-m[i, j].coeff(-1) for j in range(n)] for i in range(n)]
    try:
        jordan_type(N)
    except DomainError:
        return None
    return N


def cmd_cell(args) -> int:
    m = _read_matrix(args.matrix)
    if m.n < 1:
        raise InputError("empty matrix")
    w = extract_cell(m)
    data = {"n": m.n, "mod": args.mod, "cell": _perm_view(w)}
    lines = [f"cell      {w.window_str()}  {w.matrix_str()}  (length {w.length()})"]
    if args.mod == "S0":
        rep = extract_cell_mod(m, range(1, m.n))
        data["representative"] = _perm_view(rep)
        lines.append(f"mod S0    {rep.window_str()}  {rep.matrix_str()}  (length {rep.length()})")
        N = _as_one_minus_tinv(m)
        if N is not None:
            nu = jordan_type(N)
            tq = tau(q_of_partition(nu, m.n))
            data["jordan_type"] = list(nu.parts)
            data["tau_q"] = _perm_view(tq)
            data["below_tau_q"] = bruhat_leq(rep, tq)
            data["equals_tau_q"] = rep == tq
            lines.append(
                f"jordan type {nu.parts}: tau_q = {tq.window_str()}, "
                f"below = {data['below_tau_q']}, equal = {data['equals_tau_q']}"
            )
    elif args.mod == "SP":
        try:
            desc = ParabolicDescriptor(m.n, _parse_d(args.d))
        except DomainError as exc:
            raise InputError(str(exc)) from exc
        rep = extract_cell_mod(m, desc.simple_roots)
        data["d"] = list(desc.d)
        data["representative"] = _perm_view(rep)
        lines.append(f"mod S_P   {rep.window_str()}  {rep.matrix_str()}  (length {rep.length()})")
    _emit(args, "cell", data, "\n".join(lines))
    return EXIT_OK


def cmd_check_all(args) -> int:
    if args.max_n < 2:
        raise InputError("--max-n must be at least 2")
    if args.trials < 0:
        raise InputError("--trials must be non-negative")
    results = check_all(args.max_n, args.trials, args.seed, args.term_budget)
    payload = {
        "max_n": args.max_n,
        "trials": args.trials,
        "seed": args.seed,
        "results": [r.to_dict() for r in results],
        "summary": {s: sum(r.status == s for r in results) for s in ("PASS", "FAIL", "SKIPPED")},
    }
    lines = []
    for r in results:
        label = f"n={r.descriptor.n:<2} d=({','.join(map(str, r.descriptor.d))})"
        extra = f"  failed: {', '.join(r.failed)}" if r.failed else ""
        lines.append(f"{r.status:<7} {label:<24} l(kappa)={r.kappa_length}{extra}")
    lines.append(" ".join(f"{k}={v}" for k, v in payload["summary"].items()))
    _emit(args, "check-all", payload, "\n".join(lines))
    return EXIT_FAIL if payload["summary"]["FAIL"] else EXIT_OK


# -- parser ---------------------------------------------------------------------


def _default_seed() -> int:
    raw = os.environ.get("AFFINE_SPRINGER_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="affine-springer", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    desc = argparse.ArgumentParser(add_help=False)
    desc.add_argument("-n", type=int, help="matrix size")
    desc.add_argument("-d", default="", help="omitted simple roots, comma separated (empty: P = G)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tableau", parents=[common, desc], help="tableau of a parabolic")
    p.set_defaults(func=cmd_tableau)
    p = sub.add_parser("kappa", parents=[common, desc], help="kappa, varpi, tau_q and all checks")
    p.set_defaults(func=cmd_kappa)
    p = sub.add_parser("cell", parents=[common], help="Iwahori-Bruhat cell of a matrix file")
    p.add_argument("matrix", help="matrix file (JSON or one row per line, entries separated by ';'), '-' for stdin")
    p.add_argument("--mod", choices=("none", "S0", "SP"), default="none")
    p.add_argument("-d", default="", help="parabolic for --mod SP")
    p.set_defaults(func=cmd_cell)
    p = sub.add_parser("check-all", parents=[common], help="sweep all parabolics up to --max-n")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--term-budget", type=int, default=None, help="skip descriptors estimated above this many terms")
    p.set_defaults(func=cmd_check_all)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "seed", 0) is None:
        args.seed = _default_seed()
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SingularMatrixError as exc:
        print(f"singular matrix: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except DomainError as exc:
        # reached only from extraction on a matrix outside the affine Weyl group's cells
        print(f"invalid matrix: {exc}", file=sys.stderr)
        return EXIT_SINGULAR


if __name__ == "__main__":
    sys.exit(main())
