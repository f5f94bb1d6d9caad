"""Command-line entry point binding every module to files and exit codes.

Exit codes: 0 success / Found / property holds; 1 NotFound / property fails;
2 input or usage error; 3 Unknown (search budget exhausted).  ``-`` as a
poset file means standard input.  ``--json`` switches machine-readable
output; every JSON payload carries ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core, cover, generators, ideal_embed, incgraph, patterns, reduction
from . import symbolic

SCHEMA = 1


class _InputError(Exception):
    """Anything wrong with user input: reported on stderr, exit 2."""


def _read_poset(path: str) -> core.Poset:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise _InputError(str(exc)) from exc
    try:
        return core.from_text(text)
    except (ValueError, IndexError) as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _emit(payload: dict, as_json: bool, plain: str) -> None:
    if as_json:
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(plain)


def _cmd_cov(args) -> int:
    p = _read_poset(args.file)
    cc = cover.min_chain_cover(p)
    if args.json:
        _emit({"width": cc.width,
               "chains": [list(c) for c in cc.chains],
               "certificate": sorted(cc.certificate)}, True, "")
        return 0
    print(cc.width)
    if args.witness:
        for chain in cc.chains:
            print(" ".join(str(x) for x in chain))
        print("antichain: " + " ".join(str(x) for x in sorted(cc.certificate)))
    return 0


def _cmd_antichain(args) -> int:
    p = _read_poset(args.file)
    members = sorted(cover.max_antichain(p))
    _emit({"antichain": members}, args.json, " ".join(str(x) for x in members))
    return 0


def _cmd_decompose(args) -> int:
    p = _read_poset(args.file)
    d = incgraph.inc_components(p)
    if args.json:
        _emit({"parts": [list(part) for part in d.parts]}, True, "")
    else:
        for part in d.parts:
            print(" ".join(str(x) for x in part))
    return 0


def _cmd_dist(args) -> int:
    p = _read_poset(args.file)
    _check_index(p, args.x)
    _check_index(p, args.y)
    hop = incgraph.inc_distance_path(p, args.x, args.y)
    if hop is None:
        _emit({"reachable": False}, args.json, "unreachable")
        return 1
    d, path = hop
    _emit({"reachable": True, "distance": d, "path": path}, args.json,
          f"{d} " + " ".join(str(x) for x in path))
    return 0


def _cmd_check_metric(args) -> int:
    p = _read_poset(args.file)
    _check_index(p, args.x)
    _check_index(p, args.y)
    try:
        report = incgraph.check_metric_lemma(p, args.x, args.y)
    except core.PreconditionError as exc:
        raise _InputError(str(exc)) from exc
    _emit({"item1_ok": report.item1_ok, "item2_ok": report.item2_ok,
           "distance": report.d, "path": list(report.path),
           "violations": list(report.violations)}, args.json,
          f"d={report.d} path=" + "-".join(str(x) for x in report.path)
          + f" item1={'ok' if report.item1_ok else 'FAIL'}"
          + f" item2={'ok' if report.item2_ok else 'FAIL'}")
    return 0 if report.ok else 1


def _cmd_find_grid(args) -> int:
    p = _read_poset(args.file)
    if args.k < 2:
        raise _InputError("grid size must be at least 2")
    try:
        found = patterns.embeds_grid(p, args.k, want_dual=args.dual,
                                     budget=args.budget)
    except patterns.BudgetExhausted:
        _emit({"result": "unknown"}, args.json, "unknown")
        return 3
    if found is None:
        _emit({"result": "not found"}, args.json, "not found")
        return 1
    pairs = [f"{found.source.label(i)} -> {img}"
             for i, img in enumerate(found.mapping)]
    _emit({"result": "found", "mapping": list(found.mapping)}, args.json,
          "\n".join(pairs))
    return 0


def _cmd_reduce(args) -> int:
    p = _read_poset(args.file)
    try:
        out = reduction.reduce(p, args.threshold)
    except core.PreconditionError as exc:
        raise _InputError(str(exc)) from exc
    payload = {
        "case": out.case,
        "threshold": out.threshold,
        "antichain": sorted(out.antichain),
        "q": sorted(out.q_map),
        "profiles": {str(x): [pr.cov_inc, pr.cov_minus_up, pr.cov_minus_down]
                     for x, pr in sorted(out.profiles.items())},
        "component_covs": list(out.component_covs),
        "x0": out.x0,
        "selected": sorted(out.selected_map) if out.selected_map else None,
    }
    if args.json:
        _emit(payload, True, "")
    else:
        print(f"case {out.case}")
        print("antichain " + " ".join(str(x) for x in sorted(out.antichain)))
        print("q " + " ".join(str(x) for x in out.q_map))
        if out.x0 is not None:
            print(f"x0 {out.x0}")
            print("selected " + " ".join(str(x) for x in out.selected_map))
    return 0


def _cmd_ideal_embed(args) -> int:
    p = _read_poset(args.file)
    try:
        lines = open(args.ideals).read().splitlines()
    except OSError as exc:
        raise _InputError(str(exc)) from exc
    ideals = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if line:
            ideals.append(frozenset(int(tok) for tok in line.split()))
    chain = ideal_embed.IdealChain(p, tuple(ideals))
    try:
        result = ideal_embed.embed_from_ideal_chain(chain)
    except ideal_embed.InvalidChain as exc:
        raise _InputError(str(exc)) from exc
    except patterns.BudgetExhausted:
        _emit({"result": "unknown"}, args.json, "unknown")
        return 3
    if isinstance(result, ideal_embed.EmbedFailure):
        _emit({"result": "failure", "position": list(result.position)},
              args.json, f"failure at {result.position[0]} {result.position[1]}")
        return 1
    m = len(ideals)
    rows = []
    i = 0
    for a in range(m):
        for b in range(a + 1, m):
            rows.append(f"{a} {b} -> {result.mapping[i]}")
            i += 1
    _emit({"result": "found", "mapping": list(result.mapping)}, args.json,
          "\n".join(rows))
    return 0


def _cmd_sym_cov(args) -> int:
    try:
        term = symbolic.parse_term(args.term)
    except symbolic.ParseError as exc:
        raise _InputError(str(exc)) from exc
    value = symbolic.cov_symbolic(term)
    _emit({"cov": value.to_text()}, args.json, value.to_text())
    return 0


def _cmd_obstructions(args) -> int:
    try:
        nu = symbolic.parse_cardinal(args.cardinal)
        terms = symbolic.obstruction_list(nu)
    except (symbolic.ParseError, symbolic.DomainError, symbolic.BadFamily) as exc:
        raise _InputError(str(exc)) from exc
    rendered = [symbolic.term_to_text(t) for t in terms]
    _emit({"obstructions": rendered}, args.json, "\n".join(rendered))
    return 0


def _cmd_gen(args) -> int:
    try:
        if args.what == "grid":
            p = generators.grid_upper(args.n)
        elif args.what == "chain":
            p = generators.chain(args.n)
        elif args.what == "antichain":
            p = generators.antichain(args.n)
        elif args.what == "random":
            p = generators.random_poset(args.n, args.p, args.seed)
        else:  # lexsum
            if not args.parts:
                raise _InputError("lexsum needs at least one part file")
            p = generators.lex_sum([_read_poset(f) for f in args.parts])
    except (generators.SizeError, ValueError) as exc:
        raise _InputError(str(exc)) from exc
    sys.stdout.write(p.to_text())
    return 0


def _cmd_dot(args) -> int:
    p = _read_poset(args.file)
    sys.stdout.write(incgraph.to_dot(p, include_inc=args.inc))
    return 0


def _check_index(p: core.Poset, x: int) -> None:
    if not 0 <= x < p.n:
        raise _InputError(f"element {x} out of range for {p.n} elements")


def _cmd_selftest(args) -> int:
    from . import selftest
    passed, failed = selftest.run(seed=args.seed, rounds=args.rounds)
    print(f"selftest: {passed} passed, {failed} failed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="chaincover",
        description="chain covers, antichains and decompositions of finite posets")
    sub = top.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true",
                        help="machine readable output")
        return sp

    sp = add("cov", _cmd_cov, help="minimum chain cover width")
    sp.add_argument("file")
    sp.add_argument("--witness", action="store_true",
                    help="also print chains and the antichain certificate")

    sp = add("antichain", _cmd_antichain, help="a maximum antichain")
    sp.add_argument("file")

    sp = add("decompose", _cmd_decompose,
             help="incomparability components in chain order")
    sp.add_argument("file")

    sp = add("dist", _cmd_dist, help="incomparability-graph distance")
    sp.add_argument("file")
    sp.add_argument("x", type=int)
    sp.add_argument("y", type=int)

    sp = add("check-metric", _cmd_check_metric,
             help="verify the incomparability metric consequences for x < y")
    sp.add_argument("file")
    sp.add_argument("x", type=int)
    sp.add_argument("y", type=int)

    sp = add("find-grid", _cmd_find_grid, help="search for a half-grid copy")
    sp.add_argument("file")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--dual", action="store_true")
    sp.add_argument("--budget", type=int, default=None)

    sp = add("reduce", _cmd_reduce, help="threshold reduction with certificates")
    sp.add_argument("file")
    sp.add_argument("-t", "--threshold", type=int, required=True)

    sp = add("ideal-embed", _cmd_ideal_embed,
             help="embed a grid from a chain of ideals")
    sp.add_argument("file")
    sp.add_argument("--ideals", required=True,
                    help="file with one ideal per line (space-separated indices)")

    sp = add("sym-cov", _cmd_sym_cov, help="symbolic covering number of a term")
    sp.add_argument("term")

    sp = add("obstructions", _cmd_obstructions,
             help="obstruction list for an uncountable cardinal")
    sp.add_argument("cardinal")

    sp = add("gen", _cmd_gen, help="emit a poset in the text format")
    sp.add_argument("what", choices=["grid", "chain", "antichain", "random", "lexsum"])
    sp.add_argument("-n", type=int, default=0)
    sp.add_argument("-p", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("parts", nargs="*", help="part files for lexsum")

    sp = add("dot", _cmd_dot, help="Hasse diagram in DOT")
    sp.add_argument("file")
    sp.add_argument("--inc", action="store_true",
                    help="also draw incomparability edges, dashed")

    sp = add("selftest", _cmd_selftest, help="run the invariant suite")
    sp.add_argument("--seed", type=int, default=2024)
    sp.add_argument("--rounds", type=int, default=25)

    return top


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except core.CycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
