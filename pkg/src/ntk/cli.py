"""Command-line surface.

Exit codes: 0 verified/ok, 1 usage or parse problem, 2 verification
failure, 3 search guard exceeded. Everything is deterministic; the
``--seedless`` flag is accepted but reserved. ``NTK_GUARD_N`` in the
environment overrides all search guards at once.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import construction, graphs, latin, mappings, render
from .catalog import builtin_catalog
from .errors import (
    InvalidAction,
    InvalidInput,
    InvalidOrdering,
    NotApplicable,
    NtkError,
    OddOrderRequired,
    OrderTooLarge,
    ParseError,
    StructureViolation,
    TooLarge,
)
from .groups import CYCLIC_NONTRIVIAL, Group, sylow2
from .groupspec import parse_group_spec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_GUARD = 3

_USAGE_ERRORS = (ParseError, InvalidAction, InvalidInput, InvalidOrdering,
                 NotApplicable, OddOrderRequired)
_GUARD_ERRORS = (OrderTooLarge, TooLarge)


@dataclass
class RunConfig:
    spec: str
    command: str
    fmt: str = "text"
    ordering: list[str] | None = None
    guard: int | None = None


def _parse_ordering(group: Group, names: list[str]) -> list[int]:
    try:
        return [group.index_of(name) for name in names]
    except KeyError as exc:
        raise InvalidOrdering(str(exc)) from exc


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def cmd_analyze(cfg: RunConfig) -> int:
    group, label = parse_group_spec(cfg.spec)
    report = sylow2(group)
    payload: dict = {
        "group": label,
        "n": group.n,
        "k": report.k,
        "class": report.classification,
    }
    if report.classification == CYCLIC_NONTRIVIAL:
        dec = construction.decompose(group)
        ordering = mappings.harmonious_ordering(group, dec.fixed_part)
        payload.update({
            "generator": group.names[dec.sylow_gen],
            "l": dec.odd_order,
            "m": dec.fixed_order,
            "moved": len(dec.moved_part),
            "ordering": [group.names[h] for h in ordering],
        })
    else:
        payload["note"] = (
            "ladder construction not applicable; a full transversal exists "
            "(complete-mapping criterion)"
        )
    _emit(payload, cfg.fmt)
    return EXIT_OK


def cmd_construct(cfg: RunConfig) -> int:
    group, label = parse_group_spec(cfg.spec)
    ordering = _parse_ordering(group, cfg.ordering) if cfg.ordering else None
    result = construction.near_transversal(group, ordering=ordering, guard=cfg.guard)
    payload = construction.result_json(result, label)
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"group: {label}  branch: {result.branch}  cells: {len(result.cells)}")
        for r, c, s in payload["cells"]:
            print(f"{r} {c} {s}  # {group.names[r]} . {group.names[c]} = {group.names[s]}")
    return EXIT_OK if result.verified else EXIT_VERIFY


def cmd_verify(cfg: RunConfig) -> int:
    group, label = parse_group_spec(cfg.spec)
    report = sylow2(group)
    if report.classification != CYCLIC_NONTRIVIAL:
        raise NotApplicable(
            f"{label}: Sylow 2-subgroup is {report.classification}; verification "
            "applies only to the cyclic nontrivial case of the dichotomy"
        )
    ordering = _parse_ordering(group, cfg.ordering) if cfg.ordering else None
    dec = construction.decompose(group)
    witness = construction.build_witness(dec, ordering)
    square = latin.cayley_square(group)
    wreport = graphs.check_witness(square, witness)
    payload = {"group": label, **wreport.to_json()}
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"group: {label}")
        print(f"claim1: {'pass' if wreport.separation.passed else 'FAIL'}")
        print(f"mobius: {'pass' if wreport.mobius.passed else 'FAIL'} "
              f"(rim {wreport.mobius.rim_length}, chords at {list(wreport.mobius.chord_offsets)})")
        print(f"prisms: {'pass' if wreport.prisms.passed else 'FAIL'} "
              f"({wreport.prisms.prism_count} prisms, matching offset {wreport.prisms.matching_offset})")
        print(f"independent set size: {wreport.extracted_size}")
        print(f"overall: {'pass' if wreport.passed else 'FAIL'}")
    return EXIT_OK if wreport.passed else EXIT_VERIFY


def cmd_oracle(cfg: RunConfig, which: str) -> int:
    group, label = parse_group_spec(cfg.spec)
    square = latin.cayley_square(group)
    payload: dict = {"group": label, "oracle": which}
    if which == "transversal":
        found = latin.brute_force_transversal(square, guard=cfg.guard)
        payload["present"] = found is not None
        payload["cells"] = latin.cells_to_json(square, found) if found else None
    elif which == "count":
        payload["count"] = latin.count_transversals(square, guard=cfg.guard)
    elif which == "maxpartial":
        size, cells = latin.max_partial_transversal(square, guard=cfg.guard)
        payload["size"] = size
        payload["cells"] = latin.cells_to_json(square, cells)
    elif which == "completemapping":
        sigma = mappings.find_complete_mapping(group, guard=cfg.guard)
        payload["present"] = sigma is not None
        payload["sigma"] = [group.names[v] for v in sigma] if sigma else None
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidInput(f"unknown oracle {which!r}")
    _emit(payload, cfg.fmt)
    return EXIT_OK


def cmd_render(cfg: RunConfig) -> int:
    group, label = parse_group_spec(cfg.spec)
    ordering = _parse_ordering(group, cfg.ordering) if cfg.ordering else None
    result = construction.near_transversal(group, ordering=ordering, guard=cfg.guard)
    model = render.render_model(result)
    if cfg.fmt == "latex":
        sys.stdout.write(render.latex_table(model))
    else:
        sys.stdout.write(render.ascii_table(model))
    return EXIT_OK


def cmd_catalog(max_order: int, flt: str, guard: int | None, fmt: str) -> int:
    entries = builtin_catalog(max_order)
    lines = []
    failures = 0
    skipped = 0
    passed = 0
    for entry in entries:
        group = entry.group
        report = sylow2(group)
        if flt == "odd" and group.n % 2 == 0:
            continue
        if flt == "even" and group.n % 2 == 1:
            continue
        if flt == "construction" and report.classification != CYCLIC_NONTRIVIAL:
            continue
        try:
            result = construction.near_transversal(group, guard=guard)
            ok = result.verified and len(result.cells) == group.n - 1
            if ok and result.witness is not None:
                square = latin.cayley_square(group)
                ok = graphs.check_witness(square, result.witness).passed
            status = "pass" if ok else "FAIL"
            if ok:
                passed += 1
            else:
                failures += 1
            lines.append(
                f"{entry.label:<12} order={group.n:<4} branch={result.branch:<17} {status}"
            )
        except _GUARD_ERRORS:
            skipped += 1
            lines.append(f"{entry.label:<12} order={group.n:<4} skipped (guard)")
        except NtkError as exc:
            failures += 1
            lines.append(f"{entry.label:<12} order={group.n:<4} FAIL ({exc})")
    summary = {"groups": passed + failures + skipped, "passed": passed,
               "failed": failures, "skipped": skipped}
    if fmt == "json":
        print(json.dumps({"summary": summary, "lines": lines}, indent=2))
    else:
        print("\n".join(lines))
        print(f"passed={passed} failed={failures} skipped={skipped}")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ntk",
        description="Near transversals of group-based latin squares: "
                    "construct, verify, render, and cross-check with oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_spec=True):
        if with_spec:
            p.add_argument("spec", help="group spec, e.g. 'Z6', 'S3 x Z3', 'Dic3', 'table:path'")
        p.add_argument("--format", default="text", choices=["text", "json", "ascii", "latex"])
        p.add_argument("--ordering", default=None,
                       help="comma-separated element names overriding the harmonious ordering")
        p.add_argument("--guard-override", default=None, type=int, dest="guard",
                       help="raise/lower the search guards for this invocation")
        p.add_argument("--seedless", action="store_true",
                       help="reserved; everything is already deterministic")

    common(sub.add_parser("analyze", help="order, Sylow-2 class, decomposition parameters"))
    common(sub.add_parser("construct", help="emit a verified near transversal"))
    common(sub.add_parser("verify", help="run the structural witness checks"))
    oracle = sub.add_parser("oracle", help="exhaustive baselines for cross-checking")
    oracle.add_argument("which", choices=["transversal", "count", "maxpartial", "completemapping"])
    common(oracle)
    common(sub.add_parser("render", help="print the table with witness cells marked"))
    cat = sub.add_parser("catalog", help="run construct+verify across the built-in catalog")
    cat.add_argument("--max-order", type=int, default=20)
    cat.add_argument("--filter", default="all",
                     choices=["all", "odd", "even", "construction"])
    common(cat, with_spec=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    ordering = args.ordering.split(",") if getattr(args, "ordering", None) else None
    fmt = args.format

    try:
        if args.command == "catalog":
            return cmd_catalog(args.max_order, args.filter, args.guard, fmt)
        cfg = RunConfig(spec=args.spec, command=args.command, fmt=fmt,
                        ordering=ordering, guard=args.guard)
        if args.command == "analyze":
            return cmd_analyze(cfg)
        if args.command == "construct":
            return cmd_construct(cfg)
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "oracle":
            return cmd_oracle(cfg, args.which)
        if args.command == "render":
            return cmd_render(cfg)
        parser.error(f"unknown command {args.command}")
    except _GUARD_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StructureViolation as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except NtkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
