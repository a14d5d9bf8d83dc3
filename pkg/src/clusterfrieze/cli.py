"""Command-line surface.

Subcommands: mutate, enumerate, polyamory, enumerate-polyamorous, frieze,
classify-two-row.  Text output is the default; --format json switches every
command to a stable JSON rendering.  Exit codes: 0 success, 2 malformed input,
3 internal exactness violation, 4 precondition violation (e.g. a
specialisation that is not polyamorous).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cluster import enumerate_seeds, initial_seed, mutate_seed
from .frieze import (
    NotPolyamorous,
    Triangulation,
    classify_two_row_friezes,
    frieze_from_labelling,
    quiver_of_triangulation,
    solve_polygon,
    verify_frieze,
)
from .laurent import NotExactlyDivisible
from .quiver import Quiver
from .specialize import Specialization, enumeration_report, is_polycule

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3
EXIT_PRECONDITION = 4


class InputError(Exception):
    pass


def _load_quiver(path: str) -> Quiver:
    try:
        return Quiver.load(path)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise InputError(f"bad quiver file {path}: {exc}") from exc


def _load_sigma(path: str) -> Specialization:
    try:
        return Specialization.load(path)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise InputError(f"bad specialisation file {path}: {exc}") from exc


def _load_assignment(path: str) -> dict[int, int]:
    # Same shape as a specialisation file; values may be any integers.
    return dict(_load_sigma(path).assign)


def _load_triangulation(path: str) -> Triangulation:
    try:
        return Triangulation.load(path)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise InputError(f"bad triangulation file {path}: {exc}") from exc


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_mutate(args) -> int:
    q = _load_quiver(args.quiver)
    seed = initial_seed(q)
    for j in args.vertices:
        if not 1 <= j <= q.n:
            raise InputError(f"vertex {j} out of range 1..{q.n}")
        seed = mutate_seed(seed, j)
    if args.format == "json":
        _emit_json(
            {
                "cluster": [str(v) for v in seed.cluster],
                "quiver": seed.quiver.to_json(),
            }
        )
    else:
        print(", ".join(v.to_factored_text() for v in seed.cluster))
        print(seed.quiver.describe())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    q = _load_quiver(args.quiver)
    inv = enumerate_seeds(q, max_seeds=args.cap)
    if args.format == "json":
        _emit_json(inv.to_json())
        return EXIT_OK
    state = "truncated" if inv.truncated else "closed"
    print(f"{inv.variable_count()} variables, {inv.cluster_count()} clusters, {state}")
    print("variables:")
    for v in inv.variables:
        print(f"  {v.to_factored_text()}")
    index = {v: i for i, v in enumerate(inv.variables)}
    print("clusters:")
    for cluster in inv.clusters:
        print("  {" + ", ".join(str(index[v]) for v in cluster) + "}")
    return EXIT_OK


def cmd_polyamory(args) -> int:
    q = _load_quiver(args.quiver)
    sigma = _load_sigma(args.sigma)
    try:
        rows = []
        algebra_ok = True
        for v in range(1, q.n + 1):
            if v in sigma.assign:
                rows.append((v, "assigned", sigma.assign[v]))
            else:
                poly = is_polycule(q, sigma, v)
                algebra_ok = algebra_ok and poly
                rows.append((v, "polyamorous" if poly else "not polyamorous", None))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.format == "json":
        _emit_json(
            {
                "vertices": [
                    {"vertex": v, "status": status, "value": value}
                    for v, status, value in rows
                ],
                "algebra_polyamorous": algebra_ok,
            }
        )
        return EXIT_OK
    for v, status, value in rows:
        if status == "assigned":
            print(f"vertex {v}: assigned {value:+d}")
        else:
            print(f"vertex {v}: {status}")
    print(f"algebra: {'polyamorous' if algebra_ok else 'not polyamorous'}")
    return EXIT_OK


def cmd_enumerate_polyamorous(args) -> int:
    q = _load_quiver(args.quiver)
    try:
        entries = enumeration_report(q, include_vacuous=args.include_vacuous)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.format == "json":
        _emit_json(entries)
        return EXIT_OK
    print(f"{len(entries)} polyamorous specialisation(s)")
    for entry in entries:
        labels = ", ".join(f"x{j}={v:+d}" for j, v in sorted(entry["assign"].items(), key=lambda kv: int(kv[0])))
        free = ", ".join(f"x{j}" for j in entry["unspecialised"]) or "none"
        suffix = " (vacuous)" if entry["vacuous"] else ""
        print(f"  {{{labels}}} free: {free}{suffix}")
    return EXIT_OK


def cmd_frieze(args) -> int:
    if args.triangulation:
        t = _load_triangulation(args.triangulation)
        if t.n != args.n:
            raise InputError(f"triangulation has {t.n} diagonals but --n is {args.n}")
    else:
        t = Triangulation.fan(args.n)
    sigma = _load_sigma(args.sigma)
    assignment = _load_assignment(args.assign) if args.assign else {}
    labelling = solve_polygon(t)
    frieze = frieze_from_labelling(labelling, sigma, assignment)
    report = verify_frieze(frieze) if args.verify else None
    if args.format == "json":
        payload = {
            "triangulation": t.to_json(),
            "quiver": quiver_of_triangulation(t).to_json(),
            "frieze": frieze.to_json(),
        }
        if report is not None:
            payload["verification"] = report.to_json()
        _emit_json(payload)
    else:
        print(frieze.render())
        if report is not None:
            for name, ok, where in (
                ("diamond", report.diamond_ok, report.diamond_violation),
                ("tame", report.tame_ok, report.tame_violation),
                ("glide", report.glide_ok, report.glide_violation),
            ):
                print(f"{name}: {'ok' if ok else f'violated at {where}'}")
    if report is not None and not report.all_ok():
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_classify_two_row(args) -> int:
    try:
        result = classify_two_row_friezes(args.bound)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.format == "json":
        _emit_json(result.to_json())
        return EXIT_OK
    print(
        f"bound {result.bound}: {len(result.solutions)} frieze(s); "
        f"{len(result.positive)} positive, {len(result.zero_family)} in the zero family, "
        f"{len(result.unexplained)} unexplained"
    )
    for s in result.unexplained:
        print(f"  unexplained: {s}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clusterfrieze",
        description="Quiver mutation, polyamorous specialisations and integral friezes, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="apply a mutation sequence to the initial seed")
    p.add_argument("quiver", help="quiver JSON file")
    p.add_argument("vertices", nargs="*", type=int, help="vertices to mutate at, in order")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("enumerate", help="breadth-first closure of all seeds")
    p.add_argument("quiver")
    p.add_argument("--cap", type=int, default=10000, help="stop after this many seeds")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("polyamory", help="per-vertex polyamory report for a specialisation")
    p.add_argument("quiver")
    p.add_argument("sigma", help="specialisation JSON file")
    p.set_defaults(func=cmd_polyamory)

    p = sub.add_parser(
        "enumerate-polyamorous", help="all specialisations making the algebra polyamorous"
    )
    p.add_argument("quiver")
    p.add_argument("--include-vacuous", action="store_true")
    p.set_defaults(func=cmd_enumerate_polyamorous)

    p = sub.add_parser("frieze", help="build (and optionally verify) an integral frieze")
    p.add_argument("--n", type=int, required=True, help="number of nontrivial rows")
    p.add_argument("--triangulation", help="triangulation JSON file (default: fan)")
    p.add_argument("--sigma", required=True, help="unit specialisation JSON file")
    p.add_argument("--assign", help="integer values for the remaining variables")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_frieze)

    p = sub.add_parser("classify-two-row", help="search and classify two-row integral friezes")
    p.add_argument("--bound", type=int, default=10)
    p.set_defaults(func=cmd_classify_two_row)

    for sp in sub.choices.values():
        sp.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotPolyamorous as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except NotExactlyDivisible as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    try:
        code = main()
    except BrokenPipeError:
        # Downstream consumer (head, less) went away; not our error.
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        code = EXIT_OK
    sys.exit(code)


if __name__ == "__main__":
    entry()
