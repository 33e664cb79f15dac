"""Command-line front end.

Exit codes: 0 success, 1 negative-but-valid answer (not equivalent, no
decomposition, failed validation), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from .census import (
    BoundExceeded,
    GENERAL_MAX_N,
    SINGLE_CYCLE_MAX_N,
    census_records,
    upper_bound,
    write_census,
)
from .filling import FillingError, FillingPermutation, opposite, validate
from .perm import CycleParseError, Permutation
from .surgery import (
    AttachmentSite,
    Decomposition,
    SurgeryError,
    assemble,
    attachment_site,
    check_decomposition,
    disassemble,
    extract,
    find_decompositions,
    round_trip_check,
    _CyclePositions,
)
from .twist import GroupTooLarge, are_equivalent


class CLIInputError(Exception):
    pass


def read_filling_file(path: str) -> tuple[Permutation, int]:
    """Parse a pair file: optional leading `n=<int>`, cycle notation, `#` comments."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CLIInputError(f"{path}: {exc.strerror or exc}") from exc
    n = None
    body_parts: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None and not body_parts and re.fullmatch(r"n\s*=\s*\d+", line):
            n = int(line.split("=", 1)[1])
            continue
        body_parts.append(line)
    body = "".join(body_parts)
    if n is None:
        symbols = [int(s) for s in re.findall(r"\d+", body)]
        if not symbols:
            raise CLIInputError(f"{path}: no permutation found")
        n = (max(symbols) + 3) // 4
    try:
        sigma = Permutation.from_cycle_string(body, 4 * n)
    except (CycleParseError, ValueError) as exc:
        raise CLIInputError(f"{path}: {exc}") from exc
    return sigma, n


def write_filling_file(path: str, fp: FillingPermutation) -> None:
    Path(path).write_text(f"n={fp.n}\n{fp.sigma.cycle_string()}\n", encoding="utf-8")


def load_valid(path: str) -> FillingPermutation:
    sigma, n = read_filling_file(path)
    try:
        return validate(sigma, n)
    except FillingError as exc:
        raise CLIInputError(f"{path}: not a filling permutation: {exc}") from exc


def _entry_text(entry: tuple[int, bool]) -> str:
    sym, decorated = entry
    return f"{sym}'" if decorated else str(sym)


def _cycles_text(cycles: list[list[tuple[int, bool]]]) -> str:
    return "".join("(" + ",".join(_entry_text(e) for e in cyc) + ")" for cyc in cycles)


def _dec_text(dec: Decomposition) -> str:
    quad = ",".join(str(r) for r in dec.type)
    note = ""
    if dec.k == 1:
        note = "  # genus-1 piece: admitted by the crossing arithmetic, no reference fixture"
    return f"k={dec.k} l={dec.l} x={dec.x} a={dec.a} y={dec.y} b={dec.b} type=({quad}){note}"


def cmd_validate(args) -> tuple[int, str, dict]:
    sigma, n = read_filling_file(args.file)
    try:
        fp = validate(sigma, n)
    except FillingError as exc:
        return 1, f"invalid: {exc}", {"valid": False, "error": str(exc)}
    text = f"valid, n={fp.n}, c={fp.region_count}, genus={fp.genus()}"
    return 0, text, {
        "valid": True,
        "n": fp.n,
        "c": fp.region_count,
        "genus": fp.genus(),
    }


def cmd_info(args) -> tuple[int, str, dict]:
    fp = load_valid(args.file)
    info = fp.surface_info()
    lines = [
        f"n={fp.n} c={info.region_count} genus={info.genus} minimal={fp.is_minimal()}",
        "regions: " + " ".join("(" + ",".join(map(str, r)) + ")" for r in info.regions),
        "vertices: " + " ".join("{" + ",".join(map(str, v)) + "}" for v in info.vertices),
        "green vertices: "
        + (" ".join("{" + ",".join(map(str, v)) + "}" for v in info.green_vertices) or "none"),
    ]
    payload = {
        "n": fp.n,
        "c": info.region_count,
        "genus": info.genus,
        "minimal": fp.is_minimal(),
        "regions": [list(r) for r in info.regions],
        "vertices": [list(v) for v in info.vertices],
        "green_vertices": [list(v) for v in info.green_vertices],
        "green_normalized": fp.green_normalized(),
    }
    if fp.is_z_piece(fp.genus()):
        ztype = fp.z_type()
        lines.append(
            f"piece: genus {fp.genus()}, type ({','.join(map(str, ztype.quad))}),"
            f" green-normalized={fp.green_normalized()}"
        )
        payload["z_piece"] = {"k": fp.genus(), "type": list(ztype.quad)}
    return 0, "\n".join(lines), payload


def cmd_assemble(args) -> tuple[int, str, dict]:
    host = load_valid(args.host)
    piece = load_valid(args.piece)
    try:
        if args.j is None:
            site = attachment_site(host, args.i)
        else:
            site = AttachmentSite(args.i, args.j)
        result = assemble(host, piece, site)
    except SurgeryError as exc:
        raise CLIInputError(str(exc)) from exc
    if args.out:
        write_filling_file(args.out, result)
    text = f"n={result.n}\n{result.sigma.cycle_string()}"
    payload = {"n": result.n, "genus": result.genus(), **result.sigma.to_record()}
    return 0, text, payload


def cmd_decompose(args) -> tuple[int, str, dict]:
    fp = load_valid(args.file)
    if not fp.is_minimal():
        raise CLIInputError("decomposition search requires a minimal filling permutation")
    try:
        decs = find_decompositions(fp, k=args.k)
    except SurgeryError as exc:
        raise CLIInputError(str(exc)) from exc
    payload = {"decompositions": [d.to_record() for d in decs]}
    if not decs:
        return 1, "NO-DECOMPOSITION", payload
    return 0, "\n".join(_dec_text(d) for d in decs), payload


def cmd_extract(args) -> tuple[int, str, dict]:
    fp = load_valid(args.file)
    if not fp.is_minimal():
        raise CLIInputError("extraction requires a minimal filling permutation")
    cp = _CyclePositions(fp)
    n = fp.n
    g = fp.genus()
    if not 1 <= args.k <= g - 1:
        raise CLIInputError(f"piece genus {args.k} out of range for genus {g}")
    anchors = (args.x, args.a, args.y, args.b)
    for sym in anchors:
        if not 1 <= sym <= 4 * n:
            raise CLIInputError(f"anchor {sym} out of range 1..{4 * n}")
    quad = tuple(
        cp.distance(anchors[idx], opposite(anchors[(idx + 1) % 4], n)) + 1
        for idx in range(4)
    )
    well_formed = all(r >= 4 and r % 2 == 0 for r in quad) and sum(quad) == 8 * args.k + 8
    if not (well_formed and check_decomposition(fp, *anchors, args.k, quad)):
        return 1, "NOT-A-DECOMPOSITION", {"valid": False}
    dec = Decomposition(
        k=args.k, l=fp.genus() - args.k,
        x=args.x, a=args.a, y=args.y, b=args.b, type=quad,
    )
    cut_cycles, remainder_cycle = extract(fp, dec)
    piece, remainder = disassemble(fp, dec)
    lines = [
        f"type=({','.join(map(str, quad))})",
        "cut cycles: " + _cycles_text(cut_cycles),
        "remainder cycle: (" + ",".join(map(str, remainder_cycle)) + ")",
        f"piece: n={piece.n}\n{piece.sigma.cycle_string()}",
        f"remainder: n={remainder.n}\n{remainder.sigma.cycle_string()}",
    ]
    payload = {
        "valid": True,
        "type": list(quad),
        "cut_cycles": [
            [{"symbol": s, "decorated": d} for s, d in cyc] for cyc in cut_cycles
        ],
        "remainder_cycle": list(remainder_cycle),
        "piece": {"n": piece.n, **piece.sigma.to_record()},
        "remainder": {"n": remainder.n, **remainder.sigma.to_record()},
    }
    return 0, "\n".join(lines), payload


def cmd_roundtrip(args) -> tuple[int, str, dict]:
    fp = load_valid(args.file)
    if not fp.is_minimal():
        raise CLIInputError("round trips require a minimal filling permutation")
    decs = find_decompositions(fp, k=args.k)
    if not decs:
        return 1, "NO-DECOMPOSITION", {"roundtrips": []}
    lines = []
    results = []
    for dec in decs:
        report = round_trip_check(fp, dec)
        tag = "exact" if report.exact else f"conjugate by kappa^{report.p} delta^{report.q}"
        lines.append(f"k={dec.k} x={dec.x}: p={report.p} q={report.q} ({tag})")
        results.append({**dec.to_record(), "p": report.p, "q": report.q, "exact": report.exact})
    return 0, "\n".join(lines), {"roundtrips": results}


def cmd_equivalent(args) -> tuple[int, str, dict]:
    fp1 = load_valid(args.file1)
    fp2 = load_valid(args.file2)
    if fp1.n != fp2.n:
        raise CLIInputError(f"crossing counts differ: {fp1.n} vs {fp2.n}")
    try:
        witness = are_equivalent(fp1, fp2)
    except GroupTooLarge as exc:
        raise CLIInputError(str(exc)) from exc
    caveat = None
    if not (fp1.is_minimal() and fp2.is_minimal()):
        caveat = (
            "note: inputs are not minimal; a witness certifies relabeling"
            " equivalence (sufficient, not necessary)"
        )
    if witness is None:
        text = "NOT-EQUIVALENT"
        payload: dict = {"equivalent": False}
        if caveat:
            text += "\n" + caveat
            payload["caveat"] = caveat
        return 1, text, payload
    text = witness.cycle_string()
    payload = {"equivalent": True, "witness": witness.to_record()}
    if caveat:
        text += "\n" + caveat
        payload["caveat"] = caveat
    return 0, text, payload


def cmd_census(args) -> tuple[int, str, dict]:
    env_max = os.environ.get("FILLPERM_MAX_N")
    if env_max is not None:
        max_n = int(env_max)
    else:
        max_n = SINGLE_CYCLE_MAX_N if args.single_cycle else GENERAL_MAX_N
    try:
        total, records = census_records(
            args.n, single_cycle=args.single_cycle, max_n=max_n
        )
    except (BoundExceeded, ValueError) as exc:
        raise CLIInputError(str(exc)) from exc
    record_dicts = [r.to_record() for r in records]
    if args.out:
        write_census(records, args.out)
        text = f"n={args.n} solutions={total} orbits={len(records)} -> {args.out}"
    else:
        text = "\n".join(json.dumps(r, separators=(",", ":")) for r in record_dicts)
        if not text:
            text = f"n={args.n} solutions=0 orbits=0"
    genus = (args.n + 1) // 2
    payload = {
        "n": args.n,
        "solutions": total,
        "orbits": len(records),
        "records": record_dicts,
    }
    if args.single_cycle and genus > 2:
        payload["upper_bound"] = upper_bound(genus)
    return 0, text, payload


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "record"), default="text",
        help="output rendering (default: text)",
    )
    parser = argparse.ArgumentParser(
        prog="fillperm",
        description="Filling pairs on closed surfaces as permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the filling conditions")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", parents=[common], help="genus, regions, vertices, piece type")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("assemble", parents=[common], help="connected sum host # piece")
    p.add_argument("--host", required=True)
    p.add_argument("--piece", required=True)
    p.add_argument("--i", type=int, required=True, help="positive odd edge at the host crossing")
    p.add_argument("--j", type=int, default=None, help="positive even edge (inferred if omitted)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_assemble)

    p = sub.add_parser("decompose", parents=[common], help="find connected-sum splittings")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=None, help="restrict to one piece genus")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("extract", parents=[common], help="cut out a piece at given anchors")
    p.add_argument("file")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("roundtrip", parents=[common], help="disassemble, rebuild, report conjugacy")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("equivalent", parents=[common], help="orbit equivalence of two pairs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_equivalent)

    p = sub.add_parser("census", parents=[common], help="enumerate and count orbits")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--single-cycle", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_census)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text, payload = args.func(args)
    except CLIInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "record":
        print(json.dumps(payload, separators=(",", ":")))
    elif text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
