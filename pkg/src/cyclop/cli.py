"""Command-line entry point ``cyclop``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from cyclop.complex import build_complex, euler_characteristic, export, f_vector
from cyclop.errors import CyclopError, GroundSetMismatch
from cyclop.geometry import Direction, face, face_vertices, representative_direction
from cyclop.linkage import Linkage, build_moduli_complex, surface_report, verify_embedding
from cyclop.partitions import parse_label
from cyclop.render import face_scene, project_cp4, render_svg
from cyclop.verify import verify_theorem1

GRAMMAR = "cyclop <complex|face|verify|linkage|render> [options]"


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _q(x: Fraction) -> str:
    return str(Fraction(x))


def _paint(text: str, ok: bool) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _write(data: bytes, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def cmd_complex(args) -> int:
    c = build_complex(args.m)
    if args.action == "export":
        _write(export(c, args.format), args.output)
        return 0
    f = f_vector(c)
    chi = euler_characteristic(c)
    if args.json:
        print(_dumps({"m": args.m, "f_vector": f, "euler_characteristic": chi}))
    elif args.action == "fvector":
        print(" ".join(map(str, f)))
    else:
        print(chi)
    return 0


def _direction(text: str, m: int) -> Direction:
    xi = Direction.parse(text)
    if xi.n != m - 1:
        raise GroundSetMismatch(f"direction has {xi.n} coordinates, expected {m - 1}")
    return xi


def face_report(xi: Direction) -> dict:
    f = face(xi)
    return {
        "label": f.label.text,
        "dim": f.dim,
        "diagonal": f.diagonal,
        "translation": [_q(x) for x in f.translation],
        "q_segments": [list(s) for s in f.q_segments],
        "r_segments": list(f.r_segments),
        "vertices": [list(v) for v in sorted(face_vertices(xi))],
    }


def cmd_face(args) -> int:
    rep = face_report(_direction(args.xi, args.m))
    if args.json:
        print(_dumps(rep))
        return 0
    print(f"label: {rep['label']}")
    print(f"dim: {rep['dim']}  diagonal: {'yes' if rep['diagonal'] else 'no'}")
    print(f"translation: ({', '.join(rep['translation'])})")
    print("q_segments: " + " ".join(f"q{i}{j}" for i, j in rep["q_segments"]))
    print("r_segments: " + " ".join(f"r{i}" for i in rep["r_segments"]))
    for v in rep["vertices"]:
        print("vertex: (" + ",".join(map(str, v)) + ")")
    return 0


def cmd_verify(args) -> int:
    report = verify_theorem1(args.m, samples=args.samples, seed=args.seed)
    if args.json:
        print(_dumps(report.to_dict()))
    else:
        print(_paint(report.summary(), report.ok))
        for where, what in report.failures:
            print(f"  {where}: {what}")
    return 0 if report.ok else 1


def cmd_linkage(args) -> int:
    linkage = Linkage.parse(args.lengths)
    moduli = build_moduli_complex(linkage)
    if args.export:
        _write(export(moduli, args.export), args.output)
        return 0
    emb = verify_embedding(linkage, moduli)
    doc = {
        "lengths": [_q(x) for x in linkage.lengths],
        "f_vector": f_vector(moduli),
        "euler_characteristic": euler_characteristic(moduli),
        "embedding_ok": emb.ok,
        "embedding_problems": emb.problems,
    }
    if args.report == "surface":
        doc["surface"] = surface_report(linkage, moduli).to_dict()
    if args.json:
        print(_dumps(doc))
    else:
        print("f_vector: " + " ".join(map(str, doc["f_vector"])))
        print(f"euler_characteristic: {doc['euler_characteristic']}")
        print("embedding: " + _paint("ok" if emb.ok else "FAILED", emb.ok))
        for p in emb.problems:
            print(f"  {p}")
        if "surface" in doc:
            for k, v in sorted(doc["surface"].items()):
                if isinstance(v, bool):
                    print(f"{k}: {'yes' if v else 'no'}")
    return 0 if emb.ok else 1


def cmd_render(args) -> int:
    if args.what == "cp4":
        scene = project_cp4(perturb=args.perturb)
    else:
        if args.xi is not None:
            xi = _direction(args.xi, args.m)
        elif args.label is not None:
            xi = representative_direction(parse_label(args.label, args.m))
        else:
            raise CyclopError("render --what face needs --label or --xi")
        scene = face_scene(face(xi), xi)
    _write(render_svg(scene), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclop", usage=GRAMMAR,
                                     description="Exact cyclopermutohedron toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complex", help="build the cell complex on cyclic partitions")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("action", choices=["fvector", "euler", "export"])
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("face", help="face of the virtual polytope in a direction")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--xi", required=True, help='comma-separated rationals, e.g. "7,3,2,0"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_face)

    p = sub.add_parser("verify", help="check cells against faces")
    p.add_argument("check", choices=["theorem1"])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("linkage", help="moduli complex of a planar polygonal linkage")
    p.add_argument("--lengths", required=True, help='e.g. "1,1,1,1,1" or "3/2,1,1,1"')
    p.add_argument("--report", choices=["surface"])
    p.add_argument("--export", choices=["json", "dot"])
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_linkage)

    p = sub.add_parser("render", help="draw a planar virtual polygon as SVG")
    p.add_argument("--what", choices=["cp4", "face"], required=True)
    p.add_argument("--m", type=int, default=5)
    p.add_argument("--label")
    p.add_argument("--xi")
    p.add_argument("--perturb", action="store_true", help="perturb the r-generators (cp4)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CyclopError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        name = "IoError" if isinstance(exc, OSError) else type(exc).__name__
        print(f"{name}: {exc}", file=sys.stderr)
        return 2


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
