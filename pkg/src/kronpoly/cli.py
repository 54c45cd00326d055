"""Command-line entry point ``kron``.

Every subcommand writes one JSON document (to stdout or ``--out``).  Integers
are written as decimal strings.  Errors go to stderr as ``{"error": ...}``
with exit code 2 for bad input, 3 for budget refusals and 1 for internal
failures.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from . import characters, config
from .embedding import image_partitions, is_additive, normal_weights
from .errors import InputError, IntegralityError, KronError, NotAdditiveError, SizeLimitError
from .faces import (
    FacetInequality,
    Relaxation,
    compatible_tableaux,
    facet_catalog,
    maximal_relaxations,
    verify_facets,
)
from .kronecker import KronTriple, kron, kron_nonzero_scan
from .partitions import enumerate_syt, format_partition, format_tableau, parse_partition, parse_tableau
from .rectangular import QUASIPOLYNOMIALS, quasipoly_eval, rect_kron, series_coefficients
from .reduced import reduced_kron_polytope, reduced_kron_stabilized

log = logging.getLogger("kronpoly")

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route argparse failures through the JSON error path
        raise UsageError(message)


def _stringify(obj: Any) -> Any:
    """Turn every integer into its decimal string, recursively."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


# -- subcommands ---------------------------------------------------------------------


def cmd_coeff(args) -> Any:
    parts = [parse_partition(p) for p in args.p]
    return {"g": kron(*parts)}


def cmd_scan(args) -> Any:
    return [t.as_json() for t in kron_nonzero_scan(args.a, args.b, args.c, args.n_max)]


def cmd_syt(args) -> Any:
    tableaux = enumerate_syt(args.a, args.b, args.c)
    return {"count": len(tableaux), "tableaux": [format_tableau(t) for t in tableaux]}


def cmd_additive(args) -> Any:
    cert = is_additive(parse_tableau(args.tableau))
    if cert is None:
        return {"additive": False}
    return {"additive": True, "x": list(cert.x), "y": list(cert.y)}


def cmd_stable_triple(args) -> Any:
    T = parse_tableau(args.tableau)
    lam = parse_partition(args.lam)
    a_lam, b_lam = image_partitions(T, lam)
    return {"tableau": format_tableau(T), "additive": is_additive(T) is not None,
            "lambda": format_partition(lam), "a": format_partition(a_lam), "b": format_partition(b_lam)}


def cmd_weights(args) -> Any:
    W = normal_weights(parse_tableau(args.tableau))
    return [{**w.as_json(), "mult": m} for w, m in W]


def cmd_relaxations(args) -> Any:
    return [r.as_json() for r in maximal_relaxations(parse_tableau(args.tableau))]


def cmd_compatible(args) -> Any:
    R = Relaxation.from_levels(args.levels)
    c = args.c if args.c is not None else R.a * R.b
    return [format_tableau(t) for t in compatible_tableaux(R, R.a, R.b, c)]


def cmd_facets(args) -> Any:
    return [f.as_json() for f in facet_catalog(args.a, args.b, args.c)]


def cmd_verify_facets(args) -> Any:
    facets_data, scan_data = _read_json(args.facets), _read_json(args.scan)
    try:
        facets = [FacetInequality.from_json(d) for d in facets_data]
        scan = [KronTriple.from_json(d) for d in scan_data]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed facets or scan file: {exc}") from None
    return verify_facets(facets, scan).as_json()


def cmd_reduced(args) -> Any:
    T = parse_tableau(args.tableau)
    lam, alpha, beta, gamma = (parse_partition(x) for x in (args.lam, args.alpha, args.beta, args.gamma))
    if args.method == "polytope":
        value = reduced_kron_polytope(T, lam, alpha, beta, gamma)
        return {"value": value, "method": "polytope", "k_plateau": None}
    a_lam, b_lam = image_partitions(T, lam)
    rep = reduced_kron_stabilized(lam, a_lam, b_lam, alpha, beta, gamma, args.k_max, args.window)
    return {"value": rep.plateau_value, "method": "stabilize", "k_plateau": rep.k_plateau,
            "values": rep.values}


def cmd_series(args) -> Any:
    series = series_coefficients(args.diagram, args.n_max)
    qname = f"{args.diagram.upper()}_identity"
    rows = []
    for n, s in enumerate(series):
        row: dict = {"n": n, "series": s}
        match = True
        if args.check in ("oracle", "both"):
            row["oracle"] = rect_kron(args.diagram, n)
            match &= row["oracle"] == s
        if args.check in ("quasipoly", "both") and qname in QUASIPOLYNOMIALS:
            row["quasipoly"] = quasipoly_eval(qname, n)
            match &= row["quasipoly"] == s
        row["match"] = match
        rows.append(row)
    return rows


def cmd_verify(args) -> Any:
    from .suites import run_all

    results = run_all(args.criterion)
    for r in results:
        print(r.line(), file=sys.stderr)
    passed = all(r.passed for r in results)
    args._exit = EXIT_OK if passed else EXIT_INTERNAL
    return {"suite": args.suite, "passed": passed, "results": [r.as_json() for r in results]}


def cmd_cache(args) -> Any:
    directory = config.settings.resolved_cache_dir()
    files = sorted(directory.glob("chartable_n*.json")) if directory.exists() else []
    if args.action == "info":
        return {"dir": str(directory),
                "files": [{"name": f.name, "bytes": f.stat().st_size} for f in files]}
    if args.action == "clear":
        for f in files:
            f.unlink()
        characters.clear_memory_caches()
        return {"dir": str(directory), "removed": len(files)}
    built = []
    for n in range(1, args.n_max + 1):
        characters.character_table(n)
        built.append(n)
    return {"dir": str(directory), "warm": built}


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kron", description="Exact Kronecker coefficients and stability tools.")
    _add_global_flags(parser, argparse.SUPPRESS)
    parser.set_defaults(max_n=None, cache_dir=None, pretty=False, out=None, verbose=False)
    # the same flags are accepted after the subcommand name
    common = _Parser(add_help=False)
    _add_global_flags(common, argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name: str, **kw) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], **kw)

    p = command("coeff", help="one (multi-)Kronecker coefficient")
    p.add_argument("--p", action="append", required=True, help="a partition, e.g. 2,2 or 3^2; repeat")
    p.set_defaults(func=cmd_coeff)

    p = command("scan", help="all nonzero triples with bounded lengths")
    for name in ("a", "b", "c"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_scan)

    p = command("syt", help="standard tableaux of size c fitting exactly in a x b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int)
    p.set_defaults(func=lambda a: cmd_syt(_default_c(a)))

    for name, func, text in (("additive", cmd_additive, "additivity certificate"),
                             ("weights", cmd_weights, "normal weight multiset"),
                             ("relaxations", cmd_relaxations, "maximal relaxations")):
        p = command(name, help=text)
        p.add_argument("--tableau", required=True)
        p.set_defaults(func=func)

    p = command("stable-triple", help="(lambda, a_T(lambda), b_T(lambda))")
    p.add_argument("--tableau", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_stable_triple)

    p = command("compatible", help="tableaux compatible with a relaxation")
    p.add_argument("--levels", required=True, help='level grid, e.g. "0,1,2;1,2,3;3,4,5"')
    p.add_argument("--c", type=int)
    p.set_defaults(func=cmd_compatible)

    p = command("facets", help="facet inequality catalog")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int)
    p.set_defaults(func=lambda a: cmd_facets(_default_c(a)))

    p = command("verify-facets", help="check a catalog against a scan")
    p.add_argument("--facets", required=True)
    p.add_argument("--scan", required=True)
    p.set_defaults(func=cmd_verify_facets)

    p = command("reduced", help="reduced Kronecker coefficient")
    p.add_argument("--tableau", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--method", choices=("polytope", "stabilize"), default="polytope")
    p.add_argument("--k-max", type=int, default=12)
    p.add_argument("--window", type=int, default=3)
    p.set_defaults(func=cmd_reduced)

    p = command("series", help="affine Dynkin generating series")
    p.add_argument("--diagram", required=True, choices=("D4", "E6", "E7", "E8"))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--check", choices=("none", "oracle", "quasipoly", "both"), default="none")
    p.set_defaults(func=cmd_series)

    p = command("verify", help="run the acceptance battery")
    p.add_argument("--suite", choices=("paper-goldens",), default="paper-goldens")
    p.add_argument("--criterion", type=int, action="append", choices=range(1, 9))
    p.set_defaults(func=cmd_verify)

    p = command("cache", help="character table cache")
    p.add_argument("action", choices=("info", "clear", "warm"))
    p.add_argument("--n-max", type=int, default=24, help="largest table to build with 'warm'")
    p.set_defaults(func=cmd_cache)
    return parser


def _add_global_flags(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--max-n", type=int, default=default, help="character oracle size limit")
    parser.add_argument("--cache-dir", default=default,
                        help="character table cache directory (overrides KRON_CACHE_DIR)")
    parser.add_argument("--pretty", action="store_true", default=default, help="indented output")
    parser.add_argument("--out", default=default, help="write the JSON document to this file")
    parser.add_argument("--verbose", action="store_true", default=default, help="log progress to stderr")


def _default_c(args):
    if args.c is None:
        args.c = args.a * args.b
    return args


def _emit_error(message: str, code: int) -> int:
    print(json.dumps({"error": message}), file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _emit_error(str(exc), EXIT_USAGE)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    overrides = {}
    if args.max_n is not None:
        overrides["max_n"] = args.max_n
    if args.cache_dir is not None:
        overrides["cache_dir"] = Path(args.cache_dir)
    try:
        with config.override(**overrides):
            result = args.func(args)
    except SizeLimitError as exc:
        return _emit_error(str(exc), EXIT_LIMIT)
    except (InputError, NotAdditiveError, UsageError) as exc:
        return _emit_error(str(exc), EXIT_USAGE)
    except (IntegralityError, AssertionError) as exc:
        return _emit_error(f"internal check failed: {exc}", EXIT_INTERNAL)
    except KronError as exc:
        return _emit_error(str(exc), EXIT_INTERNAL)
    text = json.dumps(_stringify(result), indent=2 if args.pretty else None, ensure_ascii=False)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return getattr(args, "_exit", EXIT_OK)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
