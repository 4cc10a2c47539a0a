"""Command-line interface: ``python -m ptorus <command> ...``.

Exit status is 0 on success, 1 when a verification fails or a tangle
witness is found, and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence, TextIO

from . import fan, mutation, surface
from ._exact import format_rational, format_vector, frac, parse_vector
from .farey import INF
from .render import ProjectionConfig, render_fan_svg


class UsageError(Exception):
    pass


# -- parsing helpers ------------------------------------------------------------


def _vector(text: str, length: Optional[int] = 3) -> tuple:
    try:
        return parse_vector(text, length)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _indices(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        ks = [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"malformed index list {text!r}") from exc
    if any(k not in (1, 2, 3) for k in ks):
        raise UsageError(f"indices must be 1, 2 or 3, got {text!r}")
    return ks


def _curve(text: str):
    try:
        return surface.parse_curve(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _entries(text: str) -> List[tuple]:
    """Split ``lhs=rhs`` entries separated by newlines or ``;``; ``#`` starts a comment."""
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        for part in line.split(";"):
            part = part.strip()
            if not part:
                continue
            if "=" in part:
                lhs, _, rhs = part.rpartition("=")
            else:
                bits = part.split()
                if len(bits) != 2:
                    raise UsageError(f"malformed entry {part!r}")
                lhs, rhs = bits
            try:
                out.append((lhs.strip(), frac(rhs.strip())))
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"malformed weight in {part!r}") from exc
    return out


def _read_source(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        try:
            with open(arg, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {arg}: {exc}") from exc
    if "=" in arg:  # inline text
        return arg
    raise UsageError(f"no such file: {arg}")


def parse_tangle(text: str) -> List[tuple]:
    items = [(_curve(lhs), w) for lhs, w in _entries(text)]
    if not items:
        raise UsageError("empty tangle")
    return items


def parse_relation(text: str) -> List[tuple]:
    items = [(_vector(lhs), w) for lhs, w in _entries(text)]
    if not items:
        raise UsageError("empty relation")
    return items


# -- output helpers ------------------------------------------------------------------


def _jvec(v: Sequence) -> List[str]:
    return [format_rational(x) for x in v]


def _jslope(s) -> str:
    return "inf" if s == INF else format_rational(s)


def _cone_json(c: fan.Cone) -> dict:
    d = {"kind": c.kind, "dim": c.dim, "generators": [_jvec(g) for g in c.generators]}
    if c.family is not None:
        d["family"] = c.family
        d["cell"] = [list(p) for p in c.cell.points]
    return d


class _Out:
    def __init__(self, stream: TextIO, as_json: bool):
        self.stream = stream
        self.as_json = as_json

    def emit(self, lines: Sequence[str], obj: dict) -> None:
        if self.as_json:
            self.stream.write(json.dumps(obj, sort_keys=True) + "\n")
        else:
            for line in lines:
                self.stream.write(line + "\n")


# -- commands ---------------------------------------------------------------------


def cmd_mutate(args, out: _Out) -> int:
    seq = _indices(args.seq)
    row = _vector(args.row)
    image = mutation.mutation_map(mutation.B, seq, row)
    final = mutation.final_matrix(mutation.B, seq)
    out.emit(
        [format_vector(image)],
        {"sequence": seq, "row": _jvec(row), "image": _jvec(image), "matrix": [_jvec(r) for r in final]},
    )
    return 0


def cmd_shear(args, out: _Out) -> int:
    curve = _curve(args.curve)
    t = surface.follow(_indices(args.flips))
    v = surface.shear_wrt(t, curve)
    out.emit(
        [format_vector(v)],
        {"curve": str(curve), "flips": list(t.path), "arcs": [list(p) for p in t.arcs], "shear": _jvec(v)},
    )
    return 0


def cmd_locate(args, out: _Out) -> int:
    c = fan.locate_in_fan(_vector(args.vector))
    out.emit([c.describe()] + [format_vector(g) for g in c.generators], {"cone": _cone_json(c)})
    return 0


def cmd_expand(args, out: _Out) -> int:
    v = _vector(args.vector)
    cone, terms = fan.basis_expand(v)
    result = mutation.is_b_coherent(fan.expansion_residual_relation(v, terms), args.depth)
    lines = [f"{format_rational(c)} * [{format_vector(e.vector)}]  {e.provenance}" for e, c in terms]
    lines.append(f"cone: {cone.describe()}")
    lines.append(f"residual coherent to depth {args.depth}: {'yes' if result.ok else 'no'}")
    out.emit(
        lines,
        {
            "cone": _cone_json(cone),
            "generators": [_jvec(e.vector) for e, _ in terms],
            "coefficients": [format_rational(c) for _, c in terms],
            "provenance": [str(e.provenance) for e, _ in terms],
            "residual_coherent": result.ok,
        },
    )
    return 0 if result.ok else 1


def cmd_coeffs(args, out: _Out) -> int:
    rows = fan.enumerate_universal_coeffs(args.max_height, args.ring)
    out.emit(
        [f"({e.item}) {format_vector(e.vector)}  {e.provenance}" for e in rows],
        {
            "ring": args.ring,
            "max_height": args.max_height,
            "rows": [{"item": e.item, "vector": _jvec(e.vector), "curve": str(e.provenance)} for e in rows],
        },
    )
    return 0


def cmd_gvectors(args, out: _Out) -> int:
    gs = fan.g_vectors(args.max_height)
    out.emit(
        [f"{_jslope(s)}: {format_vector(g)}" for s, g in gs],
        {"max_height": args.max_height, "g_vectors": [{"slope": _jslope(s), "vector": _jvec(g)} for s, g in gs]},
    )
    return 0


def cmd_verify(args, out: _Out) -> int:
    rel = parse_relation(_read_source(args.relation))
    res = mutation.is_b_coherent(rel, args.depth)
    if res.ok:
        line = f"coherent up to depth {res.depth} ({res.sequences_checked} sequences)"
    else:
        line = f"not coherent: witness sequence {','.join(map(str, res.witness)) or '(empty)'}"
    out.emit(
        [line],
        {
            "coherent": res.ok,
            "depth": res.depth,
            "sequences_checked": res.sequences_checked,
            "witness": None if res.witness is None else list(res.witness),
        },
    )
    return 0 if res.ok else 1


def cmd_tangle(args, out: _Out) -> int:
    tangle = parse_tangle(_read_source(args.spec))
    res = surface.falsify_null_tangle(tangle, args.max_depth)
    if res.witness is None:
        lines = [f"no witness within {args.max_depth} flips ({res.explored} triangulations); not a proof of nullity"]
        obj = {"witness": None, "max_depth": args.max_depth, "explored": res.explored}
    else:
        t = res.witness
        lines = [
            f"witness at depth {res.depth}: flips {','.join(map(str, t.path)) or '(none)'}",
            f"arcs {' '.join(f'[{a},{b}]' for a, b in t.arcs)}",
            f"shear {format_vector(res.shear)}",
        ]
        obj = {
            "witness": {"flips": list(t.path), "arcs": [list(p) for p in t.arcs]},
            "depth": res.depth,
            "shear": _jvec(res.shear),
            "max_depth": args.max_depth,
            "explored": res.explored,
        }
    out.emit(lines, obj)
    return 0 if res.witness is None else 1


def cmd_render(args, out: _Out) -> int:
    if args.max_height < 1:
        raise UsageError("--max-height must be at least 1")
    if args.scale <= 0:
        raise UsageError("--scale must be positive")
    cfg = ProjectionConfig(max_height=args.max_height, scale=args.scale)
    svg = render_fan_svg(cfg)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    out.emit([f"wrote {args.out}"], {"out": args.out, "bytes": len(svg.encode("utf-8"))})
    return 0


def cmd_sanity(args, out: _Out) -> int:
    rep = fan.fan_sanity(args.samples, args.max_height, args.pairs, args.seed)
    lines = [
        f"located {rep.located}/{rep.samples} random vectors",
        f"face intersections ok {rep.pairs - len(rep.pair_failures)}/{rep.pairs}",
        f"unimodular {rep.unimodular_checked - len(rep.unimodular_failures)}/{rep.unimodular_checked}",
        "ok" if rep.ok else "FAILED",
    ]
    obj = {
        "samples": rep.samples,
        "located": rep.located,
        "location_failures": [_jvec(v) for v in rep.location_failures],
        "pairs": rep.pairs,
        "pair_failures": len(rep.pair_failures),
        "unimodular_checked": rep.unimodular_checked,
        "unimodular_failures": len(rep.unimodular_failures),
        "ok": rep.ok,
    }
    out.emit(lines, obj)
    return 0 if rep.ok else 1


# -- parser ----------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ptorus", description="Exact mutation-fan computations for the once-punctured torus.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="emit one JSON object")
        sp.set_defaults(func=func)
        return sp

    sp = add("mutate", cmd_mutate, "apply a mutation map to a coefficient row")
    sp.add_argument("--seq", required=True, help="indices in application order, e.g. 1,2")
    sp.add_argument("--row", required=True, help="row vector, e.g. 1,-1,0")

    sp = add("shear", cmd_shear, "shear coordinates of a curve")
    sp.add_argument("--curve", required=True, help="cl:a/b, cw:a/b, ccw:a/b (Farey point [a,b]) or line:p/q")
    sp.add_argument("--flips", default="", help="flip positions from T0, e.g. 3,1")

    sp = add("locate", cmd_locate, "minimal fan cone containing a vector")
    sp.add_argument("--vector", required=True)

    sp = add("expand", cmd_expand, "expand a vector in the positive basis")
    sp.add_argument("--vector", required=True)
    sp.add_argument("--depth", type=_int, default=6, help="coherence depth for the residual check")

    sp = add("coeffs", cmd_coeffs, "universal coefficient rows")
    sp.add_argument("--max-height", type=_int, required=True)
    sp.add_argument("--ring", choices=fan.RINGS, default="Z")

    sp = add("gvectors", cmd_gvectors, "g-vectors of cluster variables for the transpose")
    sp.add_argument("--max-height", type=_int, required=True)

    sp = add("verify", cmd_verify, "check a linear relation for B-coherence")
    sp.add_argument("--relation", required=True, help="file of 'x,y,z = coefficient' lines")
    sp.add_argument("--depth", type=_int, required=True)

    sp = add("tangle", cmd_tangle, "search for a triangulation where a tangle has nonzero shear")
    sp.add_argument("--spec", required=True, help="file of 'curve = weight' lines (or inline text)")
    sp.add_argument("--max-depth", type=_int, required=True)

    sp = add("render", cmd_render, "write an SVG picture of the fan")
    sp.add_argument("--max-height", type=_int, default=3)
    sp.add_argument("--out", required=True)
    sp.add_argument("--scale", type=float, default=60.0)

    sp = add("sanity", cmd_sanity, "random completeness and face-intersection checks")
    sp.add_argument("--samples", type=_int, default=1000)
    sp.add_argument("--max-height", type=_int, default=4)
    sp.add_argument("--pairs", type=_int, default=None)
    sp.add_argument("--seed", type=_int, default=0)
    return p


# flags whose values may start with "-" (negative vectors)
_VALUE_FLAGS = ("--row", "--vector", "--seq", "--flips", "--curve")


def _glue_values(argv: Sequence[str]) -> List[str]:
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Optional[Sequence[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(_glue_values(sys.argv[1:] if argv is None else argv))
        for name in ("depth", "max_depth", "samples"):
            if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
        return args.func(args, _Out(stdout, args.json))
    except UsageError as exc:
        stderr.write(f"ptorus: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
