"""Command-line interface: ``compute``, ``discover``, ``compare``, ``verify``.

Exit codes: 0 success, 1 usage or parse error, 2 family validation failure,
3 internal inconsistency (methods or oracle disagree).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings
from pathlib import Path
from typing import Sequence

from brokenset import engine, oracle
from brokenset.discovery import (
    DISCOVERERS,
    DiscoveryReport,
    broken_cycles,
    broken_neighbourhoods,
    ordered_broken_sets,
)
from brokenset.engine import CancellationFamily, FamilyError, OrderedFamily, ValidationError
from brokenset.graph import NotAGraphError
from brokenset.instance import (
    BUILTIN_NAMES,
    InstanceError,
    builtin,
    family_from_labels,
    load_instance,
    order_from_labels,
    parse_pairs,
)
from brokenset.polynomial import render, render_coeffs
from brokenset.polys import compute, index_universe
from brokenset.subsets import DEFAULT_ENUMERATION_LIMIT, SizeLimitError

log = logging.getLogger("brokenset")

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_INCONSISTENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Inconsistent(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class Context:
    """Everything a command needs after argument parsing."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        if args.builtin:
            self.instance = builtin(args.builtin)
        elif args.instance:
            self.instance = load_instance(args.instance)
        else:
            raise UsageError("give an instance file or --builtin NAME")
        self.kind = args.polynomial
        self.graph = self.instance.hypergraph()
        self.universe = index_universe(self.graph, self.kind)
        self.limit = args.max_universe
        self.workers = max(1, args.threads)

    @property
    def name(self) -> str:
        if self.instance.name:
            return self.instance.name
        return self.args.instance or self.args.builtin

    def order(self) -> tuple[int, ...]:
        if self.args.order:
            labels = [s.strip() for s in self.args.order.split(",")]
        elif self.kind == "domination" and self.instance.vertex_order:
            labels = list(self.instance.vertex_order)
        elif self.kind != "domination" and self.instance.edge_order:
            labels = list(self.instance.edge_order)
        else:
            return tuple(range(self.universe.size))
        return order_from_labels(labels, self.universe)

    def file_family(self) -> CancellationFamily | None:
        src = getattr(self.args, "pairs_from_file", None)
        if not src:
            return None
        if src == "@instance":
            raw = self.instance.pairs
            if raw is None:
                raise InstanceError("instance has no pairs field")
        else:
            try:
                doc = json.loads(Path(src).read_text())
            except OSError as exc:
                raise InstanceError(f"cannot read {src}: {exc.strerror}") from None
            except json.JSONDecodeError as exc:
                raise InstanceError(
                    f"{src}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
                ) from None
            if not isinstance(doc, dict) or "pairs" not in doc:
                raise InstanceError(f"{src}: expected an object with a pairs field")
            raw = parse_pairs(doc["pairs"])
        return family_from_labels(raw, self.universe)

    def pairs_family(self) -> tuple[CancellationFamily, bool]:
        """Pairs to use and whether they came from a file."""
        fam = self.file_family()
        if fam is not None:
            return fam, True
        pairs = DISCOVERERS[self.kind](self.graph, limit=self.limit)
        return CancellationFamily(self.universe.size, tuple(pairs)), False

    def ordered_family(self) -> OrderedFamily:
        order = self.order()
        source = getattr(self.args, "ordered_source", "broken-sets")
        if source == "broken-sets":
            pairs = DISCOVERERS[self.kind](self.graph, limit=self.limit)
            return ordered_broken_sets(pairs, order)
        if self.kind == "chromatic":
            return broken_cycles(self.graph, order, limit=self.limit)
        if self.kind == "domination":
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                of = broken_neighbourhoods(self.graph, order)
            for w in caught:
                log.warning("%s", w.message)
            return of
        raise UsageError("no classic ordered family for the independence polynomial")

    def run(self, method: str, verify: bool | None = None):
        if method == "full":
            return compute(self.graph, self.kind, "full", limit=self.limit,
                           workers=self.workers), None
        if method == "pairs":
            fam, from_file = self.pairs_family()
            check = from_file if verify is None else verify
            return compute(self.graph, self.kind, "pairs", fam, verify=check,
                           limit=self.limit, workers=self.workers), fam
        of = self.ordered_family()
        check = False if verify is None else verify
        return compute(self.graph, self.kind, "ordered", of, verify=check,
                       limit=self.limit, workers=self.workers), of


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(lines))


def _result_doc(res) -> dict:
    return {
        "method": res.method,
        "result": render(res.polynomial),
        "coefficients": list(res.polynomial.coeffs),
        "terms_evaluated": res.terms_evaluated,
        "terms_total": res.terms_total,
        "family_size": res.family_size,
    }


def cmd_compute(ctx: Context) -> int:
    res, _ = ctx.run(ctx.args.method, ctx.args.verify_family)
    doc = {"instance": ctx.name, "polynomial": ctx.kind, **_result_doc(res)}
    lines = [
        f"instance: {ctx.name}",
        f"polynomial: {ctx.kind}",
        f"method: {res.method}",
        f"result: {render(res.polynomial)}",
        f"coefficients: {render_coeffs(res.polynomial)}",
        f"terms: {res.terms_evaluated}/{res.terms_total}",
        f"family size: {res.family_size}",
    ]
    _emit(ctx.args, doc, lines)
    return EXIT_OK


def cmd_discover(ctx: Context) -> int:
    fam, from_file = ctx.pairs_family()
    tag = "file" if from_file else ctx.kind
    report = DiscoveryReport.build(fam, tag, ctx.limit)
    u = ctx.universe
    members = engine.excluded_sets(fam, limit=ctx.limit) if ctx.args.members else None
    total = 1 << u.size
    rows = []
    lines = [f"instance: {ctx.name}", f"polynomial: {ctx.kind}"]
    if not fam.pairs:
        lines.append("no pairs found")
    for i, (p, size) in enumerate(zip(fam.pairs, report.class_sizes), 1):
        row = {"B": u.label_list(p.b_set), "Bstar": u.label_list(p.b_star), "excluded": size}
        lines.append(
            f"pair {i}: B = {u.render(p.b_set)}  B* = {u.render(p.b_star)}  excluded: {size}"
        )
        if members is not None:
            row["members"] = [u.label_list(s) for s in members[i - 1]]
            for s in members[i - 1]:
                lines.append(f"    {u.render(s)}")
        rows.append(row)
    lines.append(
        f"total excluded: {report.excluded_count}/{total} "
        f"(terms: {total - report.excluded_count}/{total})"
    )
    doc = {
        "instance": ctx.name,
        "polynomial": ctx.kind,
        "method_tag": report.method_tag,
        "pairs": rows,
        "excluded_total": report.excluded_count,
        "terms_evaluated": total - report.excluded_count,
        "terms_total": total,
    }
    _emit(ctx.args, doc, lines)
    return EXIT_OK


def cmd_compare(ctx: Context) -> int:
    results = []
    for method in ("full", "ordered", "pairs"):
        res, _ = ctx.run(method)
        results.append(res)
    agree = all(r.polynomial == results[0].polynomial for r in results)
    lines = [
        f"instance: {ctx.name}",
        f"polynomial: {ctx.kind}",
        f"{'method':<8} {'terms':>9} {'family':>6}  result",
    ]
    for r in results:
        lines.append(
            f"{r.method:<8} {f'{r.terms_evaluated}/{r.terms_total}':>9} "
            f"{r.family_size:>6}  {render(r.polynomial)}"
        )
    lines.append("all methods agree" if agree else "MISMATCH between methods")
    doc = {
        "instance": ctx.name,
        "polynomial": ctx.kind,
        "rows": [_result_doc(r) for r in results],
        "agree": agree,
    }
    _emit(ctx.args, doc, lines)
    if not agree:
        raise Inconsistent("methods returned different polynomials")
    return EXIT_OK


def cmd_verify(ctx: Context) -> int:
    checks = []
    ok = True
    polys = {}
    for method in ("full", "ordered", "pairs"):
        res, _ = ctx.run(method)
        polys[method] = res.polynomial
    g = ctx.graph
    if ctx.kind == "chromatic":
        ks = list(range(5))
        expected = [oracle.count_proper_colorings(g, k) for k in ks]
        for method, p in polys.items():
            got = [p(k) for k in ks]
            checks.append({"method": method, "expected": expected, "got": got,
                           "match": got == expected})
        detail = "verified at k=0..4"
    else:
        counts = (oracle.independent_set_counts(g) if ctx.kind == "independence"
                  else oracle.dominating_set_counts(g))
        while counts and counts[-1] == 0:
            counts.pop()
        expected = counts
        for method, p in polys.items():
            got = list(p.coeffs)
            checks.append({"method": method, "expected": expected, "got": got,
                           "match": got == expected})
        detail = f"coefficients {expected} match"
    ok = all(c["match"] for c in checks)
    lines = [f"instance: {ctx.name}", f"polynomial: {ctx.kind}"]
    for c in checks:
        status = "ok" if c["match"] else "MISMATCH"
        lines.append(f"{c['method']:<8} {status}  oracle={c['expected']} engine={c['got']}")
    lines.append(detail if ok else "oracle disagreement")
    _emit(ctx.args, {"instance": ctx.name, "polynomial": ctx.kind, "checks": checks,
                     "verified": ok}, lines)
    if not ok:
        raise Inconsistent("engine disagrees with the oracle")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("instance", nargs="?", help="instance file (JSON)")
    common.add_argument("--builtin", metavar="NAME",
                        help=f"built-in instance: {', '.join(BUILTIN_NAMES)}")
    common.add_argument("--polynomial", "-p", default="chromatic",
                        choices=["chromatic", "independence", "domination"])
    common.add_argument("--order", help="comma-separated labels, smallest first")
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--threads", type=int, default=1, help="summation workers")
    common.add_argument("--max-universe", type=int, default=DEFAULT_ENUMERATION_LIMIT,
                        help="largest index universe to enumerate exhaustively")
    common.add_argument("--ordered-source", default="broken-sets",
                        choices=["broken-sets", "classic"],
                        help="class X for the ordered method: broken sets with respect "
                             "to the order, or broken cycles / broken neighbourhoods")
    common.add_argument("-v", "--verbose", action="store_true")

    pairs_opts = argparse.ArgumentParser(add_help=False)
    pairs_opts.add_argument("--pairs-from-file", metavar="PATH",
                            help="JSON file with a pairs field; @instance uses the "
                                 "instance's own pairs")

    parser = _Parser(prog="brokenset", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common, pairs_opts], help="evaluate a polynomial")
    p.add_argument("--method", default="pairs", choices=["full", "pairs", "ordered"])
    p.add_argument("--verify-family", action=argparse.BooleanOptionalAction, default=None,
                   help="check every pair for absorption first (default: on for "
                        "file families, off for discovered ones)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("discover", parents=[common, pairs_opts], help="list broken pairs")
    p.add_argument("--members", action="store_true", help="list each excluded set")
    p.set_defaults(func=cmd_discover)

    p = sub.add_parser("compare", parents=[common, pairs_opts],
                       help="term counts of full, ordered and pairs methods")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", parents=[common, pairs_opts],
                       help="cross-check against brute force")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        ctx = Context(args)
        return args.func(ctx)
    except ValidationError as exc:
        print(f"validation failed: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Inconsistent as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (UsageError, InstanceError, SizeLimitError, FamilyError, NotAGraphError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
