"""Command-line front end.

Every command emits one JSON report (``schema`` = SCHEMA) unless another
format is requested.  Exit status: 0 when every check passed, 1 when an
invariant failed, 2 for unreadable input or bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import braid
from .arrangement import (
    DegenerateArrangement,
    build_arrangement,
    chamber_count_zaslavsky,
    chambers,
    codim2_faces,
    codim2_walls,
    format_functional,
    is_simplicial,
)
from .contraction import SpecError, load_spec, serialize_spec
from .groupoid import (
    build_x1,
    check_representation,
    codim2_relations,
    relations_to_json,
    to_dot,
    tracking_assignment,
    vertex_group_presentation,
)
from .scan import run_scan
from .tracking import TrackingError, check_face_braids, explore

SCHEMA = "flopbraid.report/1"
FORMATS = ("json", "dot", "svg", "text")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Path | None = None
    format: str = "json"
    out: Path | None = None
    verify: str = "fast"
    scan_rank: int = 8
    scan_white: int = 3
    queries: tuple[str, ...] = ()

    def __post_init__(self):
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.verify not in ("fast", "full"):
            raise UsageError(f"unknown verification level {self.verify!r}")


def _default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False, default=_default) + "\n"


def _envelope(command: str, spec=None, **body) -> dict:
    report = {"schema": SCHEMA, "command": command}
    if spec is not None:
        report["input"] = serialize_spec(spec)
    report.update(body)
    return report


def _load(config: RunConfig):
    if config.input is None:
        raise UsageError("--input is required for this command")
    try:
        return load_spec(config.input)
    except OSError as exc:
        raise UsageError(f"{config.input}: {exc.strerror or exc}") from None
    except SpecError as exc:
        raise UsageError(f"{config.input}: {exc}") from None


# --------------------------------------------------------------------------
# svg


def arrangement_svg(a, n_chambers: int, size: int = 320) -> str:
    """Static picture of a rank-2 arrangement: one line through the origin per
    hyperplane, labelled by its functional, with the chamber count."""
    if a.dim != 2:
        raise UsageError("svg output needs exactly two curves")
    c = size / 2
    r = size * 0.42
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size + 30}" '
           f'viewBox="0 0 {size} {size + 30}">',
           f'<rect width="{size}" height="{size + 30}" fill="white"/>',
           f'<line x1="0" y1="{c}" x2="{size}" y2="{c}" stroke="#ccc"/>',
           f'<line x1="{c}" y1="0" x2="{c}" y2="{size}" stroke="#ccc"/>']
    for h in a.hyperplanes:
        # direction of the kernel of (h1, h2), y axis pointing up
        dx, dy = -h[1], h[0]
        norm = (dx * dx + dy * dy) ** 0.5
        ux, uy = dx / norm, dy / norm
        x1, y1 = c - r * ux, c + r * uy
        x2, y2 = c + r * ux, c - r * uy
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                   f'stroke="black" stroke-width="1.5"/>')
        lx, ly = (x2, y2) if (uy > 0 or (uy == 0 and ux > 0)) else (x1, y1)
        out.append(f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="11" font-family="monospace">'
                   f'{format_functional(h)}=0</text>')
    out.append(f'<text x="10" y="{size + 20}" font-size="13" font-family="sans-serif">'
               f'{len(a)} hyperplanes, {n_chambers} chambers</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# commands; each returns (text, passed)


def cmd_arrangement(config: RunConfig):
    spec = _load(config)
    a = build_arrangement(spec)
    chamber_list = chambers(a)
    if config.format == "svg":
        return arrangement_svg(a, len(chamber_list)), True
    if config.format == "dot":
        raise UsageError("dot output is only available for the groupoid command")
    zas = chamber_count_zaslavsky(a)
    checks = {"zaslavsky_match": zas == len(chamber_list), "simplicial": is_simplicial(a)}
    passed = checks["zaslavsky_match"]
    if config.format == "text":
        lines = [f"{len(a)} hyperplanes in dimension {a.dim}:"]
        lines += [f"  [{k}] {s}" for k, s in enumerate(a.pretty())]
        lines.append(f"{len(chamber_list)} chambers (lattice count {zas})")
        return "\n".join(lines) + "\n", passed
    report = _envelope("arrangement", spec, arrangement=a.to_json(),
                       functionals=a.pretty(), chambers=len(chamber_list),
                       zaslavsky=zas, checks=checks, passed=passed)
    return dump(report), passed


def _atlas_report(spec, a, verify: str):
    try:
        atlas = explore(a)
    except TrackingError as exc:
        return _envelope("atlas", spec, arrangement=a.to_json(),
                         failure={"message": str(exc), "certificate": exc.certificate},
                         passed=False), False
    chamber_list = chambers(a)
    walls = codim2_walls(a)
    zas = chamber_count_zaslavsky(a)
    faces = codim2_faces(a, chamber_list)
    braids = check_face_braids(atlas, faces, chamber_list)
    checks = {
        "chambers": len(chamber_list),
        "involutions": atlas.checks["involutions_checked"],
        "path_independent": atlas.checks["path_independent"],
        "local_arrangements_consistent": atlas.checks["local_arrangements_consistent"],
        "local_equal_to_global": atlas.checks["local_equal_to_global"],
        "zaslavsky_match": zas == len(chamber_list),
        "simplicial": is_simplicial(a),
        "face_braids": {"checked": braids["checked"], "pass": braids["pass"]},
    }
    if verify == "full":
        x1 = build_x1(a, chamber_list)
        checks["groupoid_representation"] = check_representation(
            x1, codim2_relations(a, x1), tracking_assignment(x1, atlas))
    passed = (checks["zaslavsky_match"] and checks["simplicial"] and braids["pass"]
              and checks.get("groupoid_representation", True))
    d = [{"members": list(w.members), "d": w.multiplicity} for w in walls]
    body = atlas.to_json()
    body["checks"] = checks
    if braids["failures"]:
        body["face_braid_failures"] = braids["failures"]
    return _envelope("atlas", spec, codim2_walls=d, passed=passed, **body), passed


def cmd_atlas(config: RunConfig):
    spec = _load(config)
    a = build_arrangement(spec)
    report, passed = _atlas_report(spec, a, config.verify)
    if config.format == "text":
        if "failure" in report:
            return f"FAILED: {report['failure']['message']}\n", False
        c = report["checks"]
        lines = [f"{c['chambers']} chambers reached from the positive chamber",
                 f"involutions checked: {c['involutions']}",
                 f"path independent: {c['path_independent']}",
                 f"lattice count agrees: {c['zaslavsky_match']}",
                 f"simplicial: {c['simplicial']}",
                 f"face braid relations: {c['face_braids']['checked']} "
                 f"({'ok' if c['face_braids']['pass'] else 'FAILED'})"]
        lines += [f"codim-2 wall {w['members']}: d = {w['d']}" for w in report["codim2_walls"]]
        return "\n".join(lines) + "\n", passed
    if config.format != "json":
        raise UsageError(f"{config.format} output is not available for atlas")
    return dump(report), passed


def cmd_groupoid(config: RunConfig):
    spec = _load(config)
    a = build_arrangement(spec)
    chamber_list = chambers(a)
    x1 = build_x1(a, chamber_list)
    if config.format == "dot":
        return to_dot(x1), True
    if config.format not in ("json", "text"):
        raise UsageError(f"{config.format} output is not available for groupoid")
    relations = codim2_relations(a, x1)
    try:
        rep = check_representation(x1, relations, tracking_assignment(x1, explore(a)))
    except TrackingError as exc:
        rep = False
        failure = {"message": str(exc), "certificate": exc.certificate}
    else:
        failure = None
    pres = vertex_group_presentation(a, 0, x1, relations)
    lengths = sorted({r.length for r in relations})
    if config.format == "text":
        lines = [f"{len(chamber_list)} objects, {len(x1.arrows)} arrows, {len(relations)} relations",
                 f"relation lengths: {lengths}",
                 f"tracking assignment respects relations: {rep}",
                 f"vertex group: {len(pres.generators)} generators, {len(pres.relators)} relators, "
                 f"abelianization rank {pres.abelianization_rank()}"]
        return "\n".join(lines) + "\n", rep
    body = relations_to_json(x1, relations)
    report = _envelope("groupoid", spec, objects=[c.sign_string for c in chamber_list],
                       relation_lengths=lengths, representation=rep,
                       vertex_group={"base": 0, "generators": pres.generators,
                                     "relators": [[list(x) for x in w] for w in pres.relators],
                                     "abelianization_rank": pres.abelianization_rank()},
                       passed=rep, **body)
    if failure:
        report["failure"] = failure
    return dump(report), rep


def _parse_query(text: str):
    if text.count(",") != 1:
        raise UsageError(f"query {text!r}: expected two words separated by one comma")
    left, right = text.split(",")
    out = []
    for side, word in (("left", left), ("right", right)):
        try:
            out.append(braid.parse_word(word))
        except braid.WordError as exc:
            raise UsageError(f"query {text!r}, {side} word: {exc}") from None
    return out


def cmd_braid_check(config: RunConfig):
    queries = [(q, *_parse_query(q)) for q in config.queries]
    result = braid.verify_pure_braid_generation()
    answers = [{"query": q, "left": braid.format_word(w1), "right": braid.format_word(w2),
                "equal": braid.words_equal(w1, w2)} for q, w1, w2 in queries]
    passed = result["pass"]
    if config.format == "text":
        lines = [f"{c['name']}: {'ok' if c['pass'] else 'FAILED'}" for c in result["checks"]]
        lines.append(f"braid relation holds in the oracle: {result['braid_relation_in_oracle']}")
        lines.append(result["conclusion"])
        lines += [f"{a['left']} = {a['right']}: {a['equal']}" for a in answers]
        return "\n".join(lines) + "\n", passed
    if config.format != "json":
        raise UsageError(f"{config.format} output is not available for braid-check")
    return dump(_envelope("braid-check", None, queries=answers, passed=passed, **result)), passed


def cmd_scan(config: RunConfig):
    if not 1 <= config.scan_rank <= 8:
        raise UsageError("--scan-rank must lie in 1..8")
    if not 1 <= config.scan_white <= 3:
        raise UsageError("--scan-white must lie in 1..3")
    result = run_scan(config.scan_rank, config.scan_white, full=config.verify == "full")
    result.pop("seconds")  # keep the emission deterministic
    s = result["summary"]
    if config.format == "text":
        lines = [f"{s['entries']} marked diagrams scanned",
                 f"all simplicial: {s['all_simplicial']}",
                 f"chamber counts agree with the lattice count: {s['all_counts_agree']}",
                 f"minimal galleries cross each separating hyperplane once: {s['all_galleries_minimal']}",
                 f"max two-curve d: {s['max_d']} (bound {s['d_bound']}, "
                 f"{len(s['d_bound_counterexamples'])} counterexamples)"]
        return "\n".join(lines) + "\n", s["pass"]
    if config.format != "json":
        raise UsageError(f"{config.format} output is not available for scan")
    return dump(_envelope("scan", None, passed=s["pass"], **result)), s["pass"]


COMMANDS = {
    "arrangement": cmd_arrangement,
    "atlas": cmd_atlas,
    "groupoid": cmd_groupoid,
    "braid-check": cmd_braid_check,
    "scan": cmd_scan,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flopbraid", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--input", type=Path, help="contraction spec (JSON)")
    parser.add_argument("--format", default="json", choices=FORMATS)
    parser.add_argument("--out", type=Path, help="write here instead of stdout")
    parser.add_argument("--verify", default="fast", choices=("fast", "full"))
    parser.add_argument("--scan-rank", type=int, default=8)
    parser.add_argument("--scan-white", type=int, default=3)
    parser.add_argument("--query", action="append", default=[],
                        help='braid-check: "w1,w2" word pair, repeatable')
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(args.command, args.input, args.format, args.out, args.verify,
                           args.scan_rank, args.scan_white, tuple(args.query))
        text, passed = COMMANDS[config.command](config)
    except UsageError as exc:
        print(f"flopbraid: error: {exc}", file=sys.stderr)
        return 2
    except DegenerateArrangement as exc:
        print(f"flopbraid: error: {exc}", file=sys.stderr)
        return 1
    if config.out is not None:
        config.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
