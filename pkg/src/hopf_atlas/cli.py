"""Command-line front end.

Subcommands emit JSON (or CSV for fiber samples) on stdout or to --out.
Exit codes: 0 success, 2 malformed input, 3 domain/pole/proximity errors.
Angles are radians unless --degrees is given.  The HOPF_ATLAS_TOL
environment variable overrides the central tolerance record.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import documents, fibration, linkage, quat, rotation
from .errors import ParseError, ToolkitError
from .vecs import as_unit_vector


def _parse_floats(text: str, count: int, label: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != count:
        raise ParseError(f"{label} needs {count} comma-separated numbers, got {text!r}")
    try:
        return np.array([float(p) for p in parts])
    except ValueError as exc:
        raise ParseError(f"could not parse {label} {text!r}: {exc}") from None


def _angle_in(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else value


def _angle_out(value: float, degrees: bool) -> float:
    return math.degrees(value) if degrees else value


def _axis_angle_dict(r: np.ndarray, degrees: bool) -> dict:
    extracted = rotation.to_axis_angle(r)
    if isinstance(extracted, rotation.Identity):
        return {"identity": True}
    return {
        "identity": False,
        "axis": [float(x) for x in extracted.axis],
        "angle": _angle_out(extracted.angle, degrees),
    }


def _write(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_fiber(args: argparse.Namespace) -> int:
    point = as_unit_vector(_parse_floats(args.point, 3, "--point"), 3)
    fb = fibration.fiber(point, gauge_kind=args.gauge, n_samples=args.samples)
    text = documents.fiber_json(fb) if args.format == "json" else documents.fiber_csv(fb)
    _write(text, args.out)
    return 0


def cmd_link(args: argparse.Namespace) -> int:
    pa = as_unit_vector(_parse_floats(args.pa, 3, "--pa"), 3)
    pb = as_unit_vector(_parse_floats(args.pb, 3, "--pb"), 3)
    report = linkage.pairwise_link_check(pa, pb, n_samples=args.samples)
    _write(documents.pair_report_json(report), args.out)
    return 0


def cmd_rotate(args: argparse.Namespace) -> int:
    r = quat.as_unit(_parse_floats(args.quat, 4, "--quat"))
    point = _parse_floats(args.point, 3, "--point")
    rotated = rotation.rotate(r, point)
    text = documents.emit_json(
        {
            "quat": [float(x) for x in r],
            "point": [float(x) for x in point],
            "rotated": [float(x) for x in rotated],
        }
    )
    _write(text + "\n", args.out)
    return 0


def cmd_axis_angle(args: argparse.Namespace) -> int:
    r = quat.as_unit(_parse_floats(args.quat, 4, "--quat"))
    _write(documents.emit_json(_axis_angle_dict(r, args.degrees)) + "\n", args.out)
    return 0


def cmd_compose(args: argparse.Namespace) -> int:
    qa = rotation.from_axis_angle(
        _parse_floats(args.axis_a, 3, "--axis-a"), _angle_in(args.angle_a, args.degrees)
    )
    qb = rotation.from_axis_angle(
        _parse_floats(args.axis_b, 3, "--axis-b"), _angle_in(args.angle_b, args.degrees)
    )
    product = quat.mul(qa, qb)
    out = {"quat": [float(x) for x in product]}
    out.update(_axis_angle_dict(product, args.degrees))
    _write(documents.emit_json(out) + "\n", args.out)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    from . import service

    service.run(host=args.host, port=args.port, static_dir=args.static)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopf-atlas",
        description="Hopf fibration toolkit: fibers, projections, rotations, "
        "and linked-circle certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fiber", help="sample a fiber circle and fit its projection")
    p.add_argument("--point", required=True, help="base point p1,p2,p3 on the sphere")
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--gauge", choices=["r1", "r2", "auto"], default="auto")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("link", help="certify two fibers as linked")
    p.add_argument("--pa", required=True, help="first base point p1,p2,p3")
    p.add_argument("--pb", required=True, help="second base point p1,p2,p3")
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("rotate", help="rotate a point by a unit quaternion")
    p.add_argument("--quat", required=True, help="quaternion a,b,c,d")
    p.add_argument("--point", required=True, help="point x,y,z")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_rotate)

    p = sub.add_parser("axis-angle", help="extract axis and angle of a quaternion")
    p.add_argument("--quat", required=True, help="quaternion a,b,c,d")
    p.add_argument("--degrees", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_axis_angle)

    p = sub.add_parser("compose", help="compose two rotations given by axis/angle")
    p.add_argument("--axis-a", required=True, help="first axis x,y,z")
    p.add_argument("--angle-a", type=float, required=True)
    p.add_argument("--axis-b", required=True, help="second axis x,y,z")
    p.add_argument("--angle-b", type=float, required=True)
    p.add_argument("--degrees", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("serve", help="run the JSON service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--static", default=None, help="directory of UI assets to serve")
    p.set_defaults(func=cmd_serve)

    return parser


def _normalize_argv(argv: list[str]) -> list[str]:
    """Join flag/value pairs whose value starts with a minus sign.

    argparse would otherwise read ``--point -1,0,0`` as a flag named
    ``-1,0,0``; the ``--point=-1,0,0`` form it is rewritten to parses fine.
    """
    out: list[str] = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (token.startswith("--") and "=" not in token and nxt is not None
                and len(nxt) > 1 and nxt[0] == "-" and (nxt[1].isdigit() or nxt[1] == ".")):
            out.append(f"{token}={nxt}")
            skip = True
        else:
            out.append(token)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_normalize_argv(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error (parse): {exc}", file=sys.stderr)
        return 2
    except ToolkitError as exc:
        print(f"error ({exc.code}): {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
