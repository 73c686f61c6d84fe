"""Command-line front end.

Exit codes: 0 success with all expectations passing, 1 failed expectation,
2 usage or parse errors, 3 degree-guard abort.  Environment: FROBTOOL_CACHE
(basis cache directory), FROBTOOL_THREADS (0 = auto; execution is
sequential either way, the value is validated and recorded).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time

from . import __version__
from .cache import BasisCache, default_cache_dir
from .frobenius import degree_growth, fingen_probe
from .gallery import CASE_NAMES, probe_rows, run_case
from .groebner import (
    DegreeGuardExceeded,
    Ideal,
    colon,
    frobenius_power,
    set_persistent_cache,
)
from .inputfile import InputFileError, parse_input_file
from .parsing import ParseError
from .report import (
    digest_bytes,
    digest_params,
    expectations_payload,
    make_report,
    report_json,
)

log = logging.getLogger("frobtool")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobtool",
        description="Exact Frobenius-operator computations over prime fields.")
    parser.add_argument("--version", action="version", version=f"frobtool {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help=".frob input file")
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument("--degree-guard", type=int, default=None,
                       help="cap on intermediate weighted degree (default 120)")
        p.add_argument("--no-cache", action="store_true",
                       help="disable the persistent basis cache")
        p.add_argument("--deep", action="store_true",
                       help="enable slower extended ranges where a case offers them")

    p_gb = sub.add_parser("gb", help="reduced basis of a named ideal")
    common(p_gb)
    p_gb.add_argument("--ideal", required=True)

    p_colon = sub.add_parser("colon", help="colon ideal lhs : rhs")
    common(p_colon)
    p_colon.add_argument("--lhs", required=True)
    p_colon.add_argument("--rhs", required=True)

    p_fpow = sub.add_parser("fpow", help="Frobenius power of a named ideal")
    common(p_fpow)
    p_fpow.add_argument("--ideal", required=True)
    p_fpow.add_argument("--e", type=int, required=True)

    p_fops = sub.add_parser("fops", help="per-degree operator components and generation probe")
    common(p_fops)
    p_fops.add_argument("--ideal", required=True)
    p_fops.add_argument("--emax", type=int, default=2)

    p_tw = sub.add_parser("twisted-poly",
                          help="twisted algebra of a polynomial ring, monomial path")
    common(p_tw, needs_input=False)
    p_tw.add_argument("--dim", type=int, required=True, choices=(1, 2, 3))
    p_tw.add_argument("--p", type=int, default=2)
    p_tw.add_argument("--emax", type=int, default=None)

    p_gal = sub.add_parser("gallery", help="run a named gallery case")
    common(p_gal, needs_input=False)
    p_gal.add_argument("case", choices=CASE_NAMES)
    p_gal.add_argument("--p", type=int, default=None)
    p_gal.add_argument("--emax", type=int, default=None)
    p_gal.add_argument("--dim", type=int, default=None)
    return parser


def _threads_setting() -> int:
    raw = os.environ.get("FROBTOOL_THREADS", "0")
    try:
        value = int(raw)
        if value < 0:
            raise ValueError
    except ValueError:
        raise InputFileError(f"FROBTOOL_THREADS must be a non-negative integer, got {raw!r}")
    return value


def _load_ideal(doc, name: str) -> Ideal:
    return doc.ideal(name)


def _basis_component(kind: str, name: str, basis) -> dict:
    return {"kind": kind, "name": name, "generators": [str(g) for g in basis]}


def _run(argv) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    threads = _threads_setting()

    cache = None
    if not args.no_cache:
        cache = BasisCache(default_cache_dir())
        set_persistent_cache(cache)
    started = time.monotonic()
    passed = True

    try:
        if args.command in ("gb", "colon", "fpow", "fops"):
            doc = parse_input_file(args.input)
            with open(args.input, "rb") as handle:
                input_digest = digest_bytes(handle.read())
            guard = args.degree_guard
            if guard is None:
                guard = doc.options.get("degree_guard")
            components = []
            expectations = []
            if args.command == "gb":
                ideal = _load_ideal(doc, args.ideal)
                basis = ideal.groebner_basis(degree_guard=guard)
                components.append(_basis_component("basis", args.ideal, basis))
            elif args.command == "colon":
                lhs = _load_ideal(doc, args.lhs)
                rhs = _load_ideal(doc, args.rhs)
                result = colon(lhs, rhs, guard)
                components.append(_basis_component(
                    "basis", f"{args.lhs}:{args.rhs}", result.generators))
            elif args.command == "fpow":
                ideal = _load_ideal(doc, args.ideal)
                result = frobenius_power(ideal, args.e)
                components.append(_basis_component(
                    "generators", f"{args.ideal}^[p^{args.e}]", result.generators))
            else:  # fops
                ideal = _load_ideal(doc, args.ideal)
                probe = fingen_probe(ideal, args.emax, guard)
                components = probe_rows(probe.report, probe.components)
                growth = degree_growth(ideal, args.emax, guard, probe=probe)
                for row, (_, _, ratio) in zip(components, growth):
                    row["max_gen_degree_ratio"] = str(ratio)
            report = make_report(
                " ".join(["frobtool", args.command]), input_digest,
                components, expectations)
        elif args.command == "twisted-poly":
            case = run_case("twisted", p=args.p, emax=args.emax, dim=args.dim,
                            deep=args.deep, degree_guard=args.degree_guard)
            passed = case.passed
            report = make_report(
                "frobtool twisted-poly", digest_params(case.params),
                case.components, expectations_payload(case.expectations))
        else:  # gallery
            case = run_case(args.case, p=args.p, emax=args.emax, dim=args.dim,
                            deep=args.deep, degree_guard=args.degree_guard)
            passed = case.passed
            report = make_report(
                f"frobtool gallery {args.case}", digest_params(case.params),
                case.components, expectations_payload(case.expectations))
    finally:
        if cache is not None:
            set_persistent_cache(None)

    timing = {"seconds": round(time.monotonic() - started, 6), "threads": threads}
    if cache is not None:
        timing["persistent_cache"] = cache.stats()
    report["timing"] = timing

    if args.json:
        sys.stdout.write(report_json(report))
    else:
        _print_human(report)
    return 0 if passed else 1


def _print_human(report: dict) -> None:
    print(f"# {report['command']} (frobtool {report['version']})")
    for comp in report["components"]:
        if "generators" in comp and "e" not in comp:
            print(f"{comp.get('kind', 'basis')} {comp.get('name', '')}:")
            for g in comp["generators"]:
                print(f"  {g}")
        else:
            e = comp.get("e", 1)
            flag = "generated from lower" if comp.get("generated_from_lower") else \
                (f"new generators required at e = {e}" if e > 1 else "base degree")
            extra = ""
            if "min_gen_count" in comp:
                extra = (f": {comp['min_gen_count']} generator(s), "
                         f"{comp.get('new_gen_count', '?')} new, "
                         f"max degree {comp.get('max_gen_degree', '?')}")
            if "component_size" in comp:
                extra = (f": size {comp['component_size']}, "
                         f"{comp.get('missing_count', '?')} outside lower products")
            print(f"e={e}{extra} [{flag}]")
    for exp in report["expectations"]:
        print(f"{exp['status'].upper():4s} {exp['name']}")
    cachestats = report["timing"].get("persistent_cache")
    suffix = ""
    if cachestats:
        suffix = f", cache hits {cachestats['hits']}/{cachestats['hits'] + cachestats['misses']}"
    print(f"done in {report['timing']['seconds']}s{suffix}")


def main(argv=None) -> int:
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    try:
        return _run(argv if argv is not None else sys.argv[1:])
    except SystemExit as exc:
        code = exc.code
        return 0 if code in (0, None) else 2
    except DegreeGuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputFileError, ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
