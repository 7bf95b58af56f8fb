"""Command-line frontend: analysis reports, graph export, verification, stats.

Subcommands: analyze, graph, orbit, component, lattice, hom, verify, stats.
All output is deterministic byte-for-byte for identical flags: vertices,
edges, components and lattice nodes are always emitted sorted, and every
integer is printed in plain decimal. Exit codes: 0 success, 1 verification
mismatch, 2 invalid input or exceeded budget, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .arith import Factorization, euler_phi, factorize
from .components import (
    DEFAULT_ELEMENT_BUDGET,
    component_elements,
    describe_component,
    du_elements,
    tail_partition,
)
from .errors import BudgetExceededError
from .graph_oracle import DEFAULT_ORACLE_BOUND, build_graph
from .idempotents import IndexSet, all_index_sets, idempotent_for
from .lattice_hom import describe_hom, hom_fibers, lattice_of
from .orbits import orbit
from .stats import (
    DEFAULT_IMAGE_BOUND,
    REF_CYCLIC_SUM,
    REF_CUBE_IMAGE,
    REF_IDEMPOTENT_LOG,
    REF_SQUARE_IMAGE,
    REF_UNIT_SUM,
    ScanReport,
    scan_series,
)
from .verify import verify_range

__all__ = ["main"]

CSV_HEADER = "N,sum_a,sum_phi,mean_idem,sq_image_mean,cube_image_mean,ratio_a,ratio_phi"


def _parse_prime_list(f: Factorization, text: str) -> IndexSet:
    """Map a comma/space separated list of primes of m to an index set."""
    indices = []
    for token in text.replace(",", " ").split():
        value = int(token)
        if value not in f.primes:
            raise ValueError(f"{value} is not a prime of {f.m}")
        indices.append(f.primes.index(value) + 1)
    return IndexSet.from_indices(indices, f.r)


def _primes_of(f: Factorization, index_set: IndexSet) -> list[int]:
    return [f.prime(i) for i in index_set]


def _factor_string(f: Factorization) -> str:
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in f.factors)


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="ascii") as handle:
            handle.write(text)


def _fmt(value: float) -> str:
    return f"{value:.6f}"


# ---------------------------------------------------------------- analyze


def _component_payload(f: Factorization, index_set: IndexSet, with_elements: bool,
                       max_elements: int) -> dict:
    desc = describe_component(f, index_set)
    payload = {
        "primes": _primes_of(f, index_set),
        "pi": desc.idem.pi,
        "g": desc.idem.g,
        "d": desc.idem.d,
        "size": desc.size,
        "cycle_size": desc.cycle_size,
        "tail_count": desc.tail_count,
        "element_sum": desc.element_sum,
        "tail_sum": desc.tail_sum,
        "max_tail_length": desc.max_tail_length,
    }
    if with_elements:
        elements = component_elements(f, index_set, max_elements=max_elements)
        du = du_elements(f, index_set)
        payload["elements"] = sorted(elements)
        payload["cycle_elements"] = sorted(du)
        payload["tails"] = sorted(elements - du)
        payload["tail_partition"] = {
            str(y): sorted(members)
            for y, members in sorted(
                tail_partition(f, index_set, max_elements=max_elements).items()
            )
        }
    return payload


def _analysis_payloads(f: Factorization, with_elements: bool, max_elements: int) -> list[dict]:
    records = sorted((idempotent_for(f, s) for s in all_index_sets(f.r)), key=lambda r: r.pi)
    return [
        _component_payload(f, rec.index_set, with_elements, max_elements)
        for rec in records
    ]


def cmd_analyze(args: argparse.Namespace) -> int:
    f = factorize(args.m)
    payloads = _analysis_payloads(f, args.elements, args.max_elements)
    if args.json:
        doc = {
            "m": f.m,
            "factorization": [[p, e] for p, e in f.factors],
            "phi": euler_phi(f.m),
            "component_count": len(payloads),
            "components": payloads,
        }
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        return 0
    lines = [
        f"m = {f.m} = {_factor_string(f)}   (r = {f.r}, phi(m) = {euler_phi(f.m)})",
        f"components: {len(payloads)} (sorted by pi)",
        "",
        f"{'pi':>6} {'g':>8} {'d':>8} {'size':>8} {'cycle':>8} {'tails':>8}"
        f" {'max_tail':>8} {'sum':>12} {'tail_sum':>12}",
    ]
    for c in payloads:
        lines.append(
            f"{c['pi']:>6} {c['g']:>8} {c['d']:>8} {c['size']:>8} {c['cycle_size']:>8}"
            f" {c['tail_count']:>8} {c['max_tail_length']:>8}"
            f" {c['element_sum']:>12} {c['tail_sum']:>12}"
        )
    if args.elements:
        for c in payloads:
            lines.append("")
            lines.append(f"component pi = {c['pi']} (primes {c['primes']}):")
            lines.append(f"  elements = {c['elements']}")
            lines.append(f"  cycle    = {c['cycle_elements']}")
            lines.append(f"  tails    = {c['tails']}")
            for y, members in c["tail_partition"].items():
                lines.append(f"  tail class y = {y}: {members}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


# ------------------------------------------------------------------ graph


def _graph_dot(m: int, graph) -> str:
    lines = ["digraph G {"]
    for v in range(m):
        lines.append(f"  {v};")
    for u, v in sorted(graph.edges):
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _graph_json(m: int, graph) -> str:
    doc = {
        "m": m,
        "edges": [[u, v] for u, v in sorted(graph.edges)],
        "components": [list(c) for c in graph.components],
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_graph(args: argparse.Namespace) -> int:
    graph = build_graph(args.m, max_m=args.max_oracle_m)
    if args.format == "dot":
        text = _graph_dot(args.m, graph)
    else:
        text = _graph_json(args.m, graph)
    _write_output(text, args.out)
    return 0


# ------------------------------------------------------------------ orbit


def cmd_orbit(args: argparse.Namespace) -> int:
    if not 0 <= args.a < args.m:
        raise ValueError(f"residue {args.a} out of range for modulus {args.m}")
    orb = orbit(args.m, args.a)
    if args.json:
        doc = {
            "m": args.m,
            "base": orb.base,
            "tail": list(orb.tail),
            "cycle": list(orb.cycle),
            "idempotent": orb.idempotent,
        }
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        return 0
    lines = [
        f"orbit of {args.a} mod {args.m}:",
        f"  tail  = {list(orb.tail)}  (length {len(orb.tail)})",
        f"  cycle = {list(orb.cycle)}  (length {len(orb.cycle)})",
        f"  idempotent = {orb.idempotent}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


# -------------------------------------------------------------- component


def cmd_component(args: argparse.Namespace) -> int:
    f = factorize(args.m)
    index_set = _parse_prime_list(f, args.primes)
    desc = describe_component(f, index_set)
    lines = [
        f"component of Z/{f.m}Z with pi = {desc.idem.pi}"
        f" (primes {_primes_of(f, index_set)})",
        f"  g = {desc.idem.g}, d = {desc.idem.d}, a = {desc.idem.a}",
        f"  size = {desc.size}, cycle = {desc.cycle_size}, tails = {desc.tail_count},"
        f" max_tail_len = {desc.max_tail_length}",
        f"  sum = {desc.element_sum}, cycle_sum = {desc.element_sum - desc.tail_sum},"
        f" tail_sum = {desc.tail_sum}",
    ]
    if args.elements:
        elements = component_elements(f, index_set, max_elements=args.max_elements)
        du = du_elements(f, index_set)
        lines.append(f"  elements = {sorted(elements)}")
        lines.append(f"  cycle    = {sorted(du)}")
        lines.append(f"  tails    = {sorted(elements - du)}")
        parts = tail_partition(f, index_set, max_elements=args.max_elements)
        for y, members in sorted(parts.items()):
            lines.append(f"  tail class y = {y}: {sorted(members)}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------- lattice


def cmd_lattice(args: argparse.Namespace) -> int:
    f = factorize(args.m)
    lattice = lattice_of(f)
    records = sorted((idempotent_for(f, s) for s in lattice.nodes), key=lambda r: r.pi)
    cover_pairs = sorted(
        (idempotent_for(f, lo).pi, idempotent_for(f, hi).pi)
        for lo, hi in lattice.covers()
    )
    if args.dot:
        lines = ["digraph lattice {"]
        for rec in records:
            lines.append(f'  "{rec.pi}" [label="pi={rec.pi} d={rec.d}"];')
        for lo_pi, hi_pi in cover_pairs:
            lines.append(f'  "{lo_pi}" -> "{hi_pi}";')
        lines.append("}")
        sys.stdout.write("\n".join(lines) + "\n")
        return 0
    lines = [f"component lattice of Z/{f.m}Z ({len(records)} nodes, ordered by pi)"]
    for rec in records:
        marker = ""
        if rec.index_set.is_empty():
            marker = "   <- bottom (units)"
        elif rec.index_set.is_full():
            marker = "   <- top (nilpotents)"
        lines.append(
            f"  pi = {rec.pi:<6} g = {rec.g:<8} d = {rec.d}{marker}"
        )
    lines.append("covers (lower pi < upper pi):")
    for lo_pi, hi_pi in cover_pairs:
        lines.append(f"  {lo_pi} < {hi_pi}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


# -------------------------------------------------------------------- hom


def cmd_hom(args: argparse.Namespace) -> int:
    f = factorize(args.m)
    source = _parse_prime_list(f, args.from_primes)
    target = _parse_prime_list(f, args.to_primes)
    desc = describe_hom(f, source, target)
    source_rec = idempotent_for(f, source)
    target_rec = idempotent_for(f, target)
    lines = [
        f"hom on Z/{f.m}Z: cycle group of pi = {source_rec.pi}"
        f" -> cycle group of pi = {target_rec.pi}",
        f"  source: primes {_primes_of(f, source)}, g = {source_rec.g}, d = {source_rec.d}",
        f"  target: primes {_primes_of(f, target)}, g = {target_rec.g}, d = {target_rec.d}",
        f"  relative idempotent = {desc.multiplier_idempotent}",
        f"  fiber size = {desc.fiber_size}  (phi(g_K)/phi(g_I))",
        f"  kernel ({len(desc.kernel)} elements): {sorted(desc.kernel)}",
    ]
    if args.table:
        fibers = hom_fibers(f, source, target, max_elements=args.max_elements)
        lines.append("  map table (image <- fiber):")
        for image in sorted(fibers):
            lines.append(f"    {image} <- {sorted(fibers[image])}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


# ----------------------------------------------------------------- verify


def cmd_verify(args: argparse.Namespace) -> int:
    if args.start < 2 or args.end < args.start:
        raise ValueError(
            f"need 2 <= --from <= --to, got [{args.start}, {args.end}]"
        )
    report = verify_range(args.start, args.end, oracle_bound=args.max_oracle_m)
    if report.failure is not None:
        fail = report.failure
        sys.stdout.write(
            f"FAIL at m = {fail.m}: check = {fail.check}\n"
            f"  expected: {fail.expected}\n"
            f"  actual:   {fail.actual}\n"
        )
        return 1
    sys.stdout.write(
        f"verified m in [{report.lo}, {report.hi}]: {report.moduli} moduli,"
        f" {report.components} components checked, {report.checks} checks, all passed\n"
    )
    return 0


# ------------------------------------------------------------------ stats


def _csv_row(rep: ScanReport) -> str:
    sq = _fmt(rep.sq_image_mean) if rep.sq_image_mean is not None else ""
    cube = _fmt(rep.cube_image_mean) if rep.cube_image_mean is not None else ""
    return (
        f"{rep.n},{rep.sum_a},{rep.sum_phi},{_fmt(rep.mean_idempotents)},"
        f"{sq},{cube},{rep.ratio_a:.8f},{rep.ratio_phi:.8f}"
    )


def cmd_stats(args: argparse.Namespace) -> int:
    n = args.max
    with_images = n <= args.max_image_n
    reports = scan_series(n, with_images=with_images, image_bound=args.max_image_n)
    final = reports[-1]
    log_n = math.log(n)
    lines = [
        f"scan up to N = {n} (2 <= m <= N)",
        f"  sum a(m)         = {final.sum_a}"
        f"   sum/N^2 = {final.ratio_a:.6f}   reference {REF_CYCLIC_SUM:.6f}",
        f"  sum phi(m)       = {final.sum_phi}"
        f"   sum/N^2 = {final.ratio_phi:.6f}   reference {REF_UNIT_SUM:.6f} (3/pi^2)",
        f"  mean idempotents = {_fmt(final.mean_idempotents)}"
        f"   reference {REF_IDEMPOTENT_LOG * log_n:.6f} ((6/pi^2) ln N)",
    ]
    if with_images:
        lines.append(
            f"  mean |x^2 image| = {_fmt(final.sq_image_mean)}"
            f"   reference {REF_SQUARE_IMAGE * n / math.sqrt(log_n):.6f}"
            f" (0.376 N / sqrt(ln N))"
        )
        lines.append(
            f"  mean |x^3 image| = {_fmt(final.cube_image_mean)}"
            f"   reference {REF_CUBE_IMAGE * n / log_n ** (1 / 3):.6f}"
            f" (0.484 N / cbrt(ln N))"
        )
    else:
        lines.append(
            f"  image means skipped: N = {n} exceeds the image budget {args.max_image_n}"
        )
    sys.stdout.write("\n".join(lines) + "\n")
    if args.csv is not None:
        rows = [CSV_HEADER] + [_csv_row(rep) for rep in reports]
        with open(args.csv, "w", encoding="ascii") as handle:
            handle.write("\n".join(rows) + "\n")
    if args.plot is not None:
        from .plotting import render_scan_figure

        render_scan_figure(reports, args.plot)
    return 0


# ------------------------------------------------------------------ parser


def _add_element_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-elements",
        type=int,
        default=DEFAULT_ELEMENT_BUDGET,
        help="element listing budget (default %(default)s)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqpower",
        description="Structure of power orbits over Z/mZ: components,"
        " idempotents, tails, sums, lattice and homomorphisms,"
        " verified against brute force.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full component report for one modulus")
    p.add_argument("m", type=int)
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--elements", action="store_true", help="include element listings")
    _add_element_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", help="export the brute-force power graph")
    p.add_argument("m", type=int)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.add_argument(
        "--max-oracle-m",
        type=int,
        default=DEFAULT_ORACLE_BOUND,
        help="oracle modulus budget (default %(default)s)",
    )
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("orbit", help="tail/cycle/idempotent of one element")
    p.add_argument("m", type=int)
    p.add_argument("a", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("component", help="report for a single component")
    p.add_argument("m", type=int)
    p.add_argument(
        "--primes",
        default="",
        help="primes of m selecting the component (empty = units)",
    )
    p.add_argument("--elements", action="store_true", help="include element listings")
    _add_element_flags(p)
    p.set_defaults(func=cmd_component)

    p = sub.add_parser("lattice", help="the component lattice")
    p.add_argument("m", type=int)
    p.add_argument("--dot", action="store_true", help="emit a Hasse-diagram digraph")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("hom", help="homomorphism between comparable components")
    p.add_argument("m", type=int)
    p.add_argument("--from-primes", default="", help="source component primes")
    p.add_argument("--to-primes", default="", help="target component primes")
    p.add_argument("--table", action="store_true", help="print the full map table")
    _add_element_flags(p)
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("verify", help="run the oracle cross-check suite over a range")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="end", type=int, required=True)
    p.add_argument(
        "--max-oracle-m",
        type=int,
        default=DEFAULT_ORACLE_BOUND,
        help="oracle modulus budget (default %(default)s)",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="asymptotic scan up to a bound")
    p.add_argument("--max", type=int, required=True, help="scan bound N")
    p.add_argument("--csv", help="write checkpoint rows (powers of 2) to a CSV file")
    p.add_argument("--plot", help="render the convergence figure to an image file")
    p.add_argument(
        "--max-image-n",
        type=int,
        default=DEFAULT_IMAGE_BOUND,
        help="largest N for which image counts are scanned (default %(default)s)",
    )
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
