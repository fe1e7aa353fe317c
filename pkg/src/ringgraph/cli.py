"""Command line: ``ringgraph ring|graph|verify|iso ...``.

Exit codes: 0 all pass, 1 a check failed, 2 usage or parse error,
3 a search ran out of budget.  The node budget for exact searches can be
set with ``--budget`` or the ``RINGGRAPH_NODE_BUDGET`` environment variable.
"""

from __future__ import annotations

import argparse
import sys

from . import graphcore as gc
from .corpus import DEFAULT_CORPUS, REGISTRY, load_corpus, resolve_ring
from .isoclinism import SearchCapError, find_isoclinism, verify_witness
from .ringcore import (
    DimensionError,
    ElementParseError,
    RingAxiomError,
    RingFormatError,
    center,
    commutator_set,
    commutator_subgroup,
    has_unity,
    is_commutative,
    load_ring,
    parse_element,
    validate_ring,
)
from .verify import CHECK_IDS, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _ring(spec: str):
    try:
        return resolve_ring(spec)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _element(R, expr: str) -> int:
    try:
        return parse_element(R, expr)
    except ElementParseError as exc:
        raise UsageError(str(exc)) from None


def cmd_ring(args, out) -> int:
    if args.action == "list":
        for name, (_, desc) in REGISTRY.items():
            tag = "*" if name in DEFAULT_CORPUS else " "
            print(f"{tag} {name:<8} {desc}", file=out)
        return EXIT_OK
    if args.action == "show":
        R = _ring(args.target)
        Z, K = center(R), commutator_set(R)
        unity = has_unity(R)
        print(f"ring {R.name}", file=out)
        print(f"order: {R.order}", file=out)
        print(f"commutative: {'yes' if is_commutative(R) else 'no'}", file=out)
        print(f"unity: {'none' if unity is None else R.names[unity]}", file=out)
        print(f"|Z|: {len(Z)}  Z = {{{', '.join(Z.names())}}}", file=out)
        print(f"|K|: {len(K)}  K = {{{', '.join(K.names())}}}", file=out)
        print(f"|[R,R]|: {len(commutator_subgroup(R))}", file=out)
        if R.generators:
            print(f"generators: {', '.join(g for g, _ in R.generators)}", file=out)
        return EXIT_OK
    # validate
    try:
        R = load_ring(args.target, validate=False)
    except (OSError, RingFormatError, DimensionError) as exc:
        raise UsageError(str(exc)) from None
    report = validate_ring(R.add, R.mul)
    print(f"ring {R.name} order {R.order}: {'ok' if report.ok else 'INVALID'}", file=out)
    for v in report.violations:
        print(f"  {v.axiom}: witness {' '.join(R.names[i] for i in v.witness)} {v.witness}", file=out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_graph(args, out) -> int:
    R = _ring(args.ring)
    r = _element(R, args.r)
    G = gc.build_delta(R, r) if args.induced else gc.build_gamma(R, r)
    text = gc.export_dot(G) if args.out == "dot" else gc.export_json(G)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    checks = CHECK_IDS if args.suite == "all" else [c.strip() for c in args.suite.split(",")]
    bad = [c for c in checks if c not in CHECK_IDS]
    if bad:
        raise UsageError(f"unknown checks {bad}; choose from {', '.join(CHECK_IDS)}")
    try:
        corpus = _load_unchecked(args.corpus)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    except (RingFormatError, DimensionError) as exc:
        raise UsageError(str(exc)) from None
    report = run_suite(corpus, checks, budget=args.budget, workers=args.workers)
    out.write(report.to_table())
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())
    return report.exit_code()


def _load_unchecked(specs):
    # files are loaded without validation so the suite can report the witness
    import os

    rings = []
    for spec in specs:
        if spec not in REGISTRY and os.path.exists(spec):
            rings.append(load_ring(spec, validate=False))
        else:
            rings.extend(load_corpus(spec))
    return rings


def cmd_iso(args, out) -> int:
    R1, R2 = _ring(args.ring1), _ring(args.ring2)
    try:
        w = find_isoclinism(R1, R2, args.budget)
    except SearchCapError as exc:
        print(f"search not attempted: {exc}", file=out)
        return EXIT_UNDECIDED
    if w is gc.UNDECIDED:
        print("undecided: isoclinism search budget exhausted", file=out)
        return EXIT_UNDECIDED
    if w is None:
        print(f"no isoclinism between {R1.name} and {R2.name}", file=out)
        return EXIT_OK
    print(f"isoclinism {R1.name} -> {R2.name}: |phi| = {len(w.phi)}, |psi| = {len(w.psi)}, "
          f"alpha {'defined on ' + str(len(w.alpha)) + ' elements' if w.alpha else 'undefined (|Z| differ)'}",
          file=out)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(w.to_json())
    if w.alpha is None:
        return EXIT_OK
    targets = [_element(R1, args.r)] if args.r is not None else sorted(w.psi)
    status = EXIT_OK
    for r in targets:
        if r not in w.psi:
            raise UsageError(f"{R1.names[r]} is not in [{R1.name}, {R1.name}]")
        ok = verify_witness(w, R1, R2, r)
        print(f"  r = {R1.names[r]} -> psi(r) = {R2.names[w.psi[r]]}: {'verified' if ok else 'FAILED'}", file=out)
        if not ok:
            status = EXIT_FAIL
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ringgraph", description="r-noncommuting graphs of finite rings")
    sub = p.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="list, show or validate rings")
    ring.add_argument("action", choices=["list", "show", "validate"])
    ring.add_argument("target", nargs="?", help="ring name (show) or ring file (validate)")

    graph = sub.add_parser("graph", help="build and export a graph")
    graph.add_argument("action", choices=["build"])
    graph.add_argument("--ring", required=True)
    graph.add_argument("--r", required=True, help="element index or expression such as a+2b")
    graph.add_argument("--induced", action="store_true", help="restrict to noncentral elements")
    graph.add_argument("--out", choices=["dot", "json"], default="dot")
    graph.add_argument("-o", "--output", help="write here instead of stdout")

    ver = sub.add_parser("verify", help="run the verification suite")
    ver.add_argument("--suite", default="all", help=f"all or comma list of {', '.join(CHECK_IDS)}")
    ver.add_argument("--corpus", nargs="+", default=["default"],
                     help="default, ring names, ranges like Z2..Z9, or ring files")
    ver.add_argument("--json", help="write the JSON report here")
    ver.add_argument("--workers", type=int, default=1)
    ver.add_argument("--budget", type=int, default=None, help="node budget for exact searches")

    iso = sub.add_parser("iso", help="isoclinism search and graph verification")
    iso.add_argument("action", choices=["check"])
    iso.add_argument("ring1")
    iso.add_argument("ring2")
    iso.add_argument("--r", help="verify only this element of [R1, R1]")
    iso.add_argument("--json", help="write the witness as JSON")
    iso.add_argument("--budget", type=int, default=None)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handlers = {"ring": cmd_ring, "graph": cmd_graph, "verify": cmd_verify, "iso": cmd_iso}
    try:
        if args.command == "ring" and args.action != "list" and not args.target:
            raise UsageError(f"ring {args.action} needs a target")
        return handlers[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RingAxiomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
