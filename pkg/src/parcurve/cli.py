"""Command line interface: ``parcurve {length,offset,verify,crofton,plot}``.

Reports go to stdout as JSON (schema ``parcurve/1``); SVG and CSV go to
``--out`` when given.  Exit codes: 0 success, 1 usage, 2 hypothesis,
3 simplicity, 4 accuracy (including a failed verification), 5 I/O.
"""
import argparse
from dataclasses import asdict, dataclass, field
import json
import math
import sys
from typing import Optional

import numpy as np

from . import catalog, crofton, curve_core as cc, offset, svg, theorems
from .errors import ParcurveError

SCHEMA = "parcurve/1"
EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_SIMPLICITY, EXIT_ACCURACY, EXIT_IO = range(6)

DEFAULTS = {
    "circle": {"R": 1.0},
    "ellipse": {"a": 2.0, "b": 1.0},
    "limacon": {"a": 2.0, "b": 1.0},
    "figure_eight": {},
    "half_circle": {"R": 1.0},
}


class UsageError(Exception):
    pass


@dataclass
class CurveSpec:
    """Catalog curve by name and parameters, or a list of sample points."""

    kind: str
    params: dict = field(default_factory=dict)
    samples: Optional[list] = None
    closed: bool = True
    orientation: str = "ccw"
    fit: bool = True

    def __post_init__(self):
        if self.kind != "points" and self.kind not in catalog.CATALOG:
            raise UsageError(f"unknown curve kind {self.kind!r}")
        if self.orientation not in ("ccw", "cw"):
            raise UsageError("orientation must be ccw or cw")
        if self.kind == "points":
            if not self.samples or len(self.samples) < 3:
                raise UsageError("points curves need at least 3 samples")
        else:
            allowed = DEFAULTS[self.kind]
            extra = set(self.params) - set(allowed)
            if extra:
                raise UsageError(f"{self.kind} takes no parameter(s) {sorted(extra)}")
            self.params = {**allowed, **{k: float(v) for k, v in self.params.items()}}
            if any(not v > 0 for v in self.params.values()):
                raise UsageError("curve parameters must be strictly positive")

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        if "points" in d and "samples" not in d:
            d["samples"] = d.pop("points")
            d.setdefault("kind", "points")
        try:
            return cls(**d)
        except TypeError as exc:
            raise UsageError(str(exc)) from exc

    def polyline(self, resolution=crofton.RESOLUTION):
        if self.kind == "points":
            pts = np.asarray(self.samples, dtype=float)
            if self.closed and len(pts) > 1 and np.array_equal(pts[0], pts[-1]):
                pts = pts[:-1]
            if self.orientation == "cw":
                pts = pts[::-1]
            return crofton.Polyline(pts, closed=self.closed)
        return crofton.sample_polyline(self.build(), resolution)

    def build(self):
        if self.kind == "points":
            if not self.fit:
                raise UsageError("curve queries on raw points need a spline fit (drop --no-fit)")
            pts = self.samples[::-1] if self.orientation == "cw" else self.samples
            try:
                return catalog.spline_through(pts, closed=self.closed)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        try:
            return catalog.CATALOG[self.kind](**self.params, orientation=self.orientation)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc

    def describe(self):
        if self.kind == "points":
            return {"kind": "points", "n": len(self.samples), "closed": self.closed,
                    "orientation": self.orientation}
        return {"kind": self.kind, "params": self.params, "orientation": self.orientation}


def _clean(obj):
    """Round floats to 15 significant digits; non-finite values become null."""
    if isinstance(obj, float):
        return float(f"{obj:.15g}") if math.isfinite(obj) else None
    if isinstance(obj, (np.floating,)):
        return _clean(float(obj))
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_clean(v) for v in obj]
    return obj


def dumps(kind, payload):
    return json.dumps(_clean({"schema": SCHEMA, "kind": kind, **payload}))


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def spec_from_args(args):
    if args.spec:
        return CurveSpec.from_dict(_load_json(args.spec))
    if args.curve is None:
        raise UsageError("--curve or --spec is required")
    if args.curve == "points":
        if not args.file:
            raise UsageError("--curve points needs --file")
        data = _load_json(args.file)
        if not isinstance(data, dict) or "points" not in data:
            raise UsageError('points file must be {"points": [[x, y], ...], "closed": bool}')
        return CurveSpec("points", samples=data["points"], closed=bool(data.get("closed", True)),
                         orientation=args.orientation, fit=not args.no_fit)
    params = {k: getattr(args, k) for k in ("R", "a", "b") if getattr(args, k) is not None}
    return CurveSpec(args.curve, params, orientation=args.orientation)


def cmd_length(args, out):
    spec = spec_from_args(args)
    if spec.kind == "points" and not spec.fit:
        value, tol = spec.polyline().length(), 0.0
    else:
        value, tol = cc.length(spec.build()), 1e-10
    out.write(dumps("length", {"curve": spec.describe(), "length": value, "tolerance": tol}) + "\n")
    return EXIT_OK


def _sample(curve, n):
    t = np.linspace(curve.a, curve.b, n, endpoint=not curve.periodic)
    return t, cc.evaluate(curve, t)


def cmd_offset(args, out):
    spec = spec_from_args(args)
    if args.eps < 0:
        raise UsageError("--eps must be >= 0 (use --orientation cw to offset the other way)")
    curve = spec.build()
    ospec = offset.OffsetSpec(curve, args.eps)
    sing = offset.find_offset_singularities(ospec) if args.eps > 0 else offset.SingularitySet()
    beta = offset.parallel_curve(ospec)
    length = offset.parallel_length(ospec)
    t, pts = _sample(beta, args.samples)
    marks = cc.evaluate(beta, np.array(sing.params)) if len(sing) else np.empty((0, 2))
    singular = [{"s": s, "t": tt, "grazing": gz, "point": m.tolist()}
                for s, tt, gz, m in zip(sing.roots, sing.params, sing.grazing, marks)]

    if args.emit == "json":
        payload = {"curve": spec.describe(), "epsilon": args.eps, "length": length,
                   "singularities": singular, "points": pts.tolist()}
        text = dumps("offset", payload) + "\n"
    elif args.emit == "csv":
        rows = ["t,x,y"] + [f"{a:.15g},{x:.15g},{y:.15g}" for a, (x, y) in zip(t, pts)]
        text = "\n".join(rows) + "\n"
    else:
        _, base_pts = _sample(curve, args.samples)
        plot = svg.PlotSpec([
            svg.Layer(base_pts, "solid", curve.periodic, curve.name),
            svg.Layer(pts, "dotted", beta.periodic, beta.name, markers=marks),
        ])
        text = svg.render(plot)
    _emit(text, args.out, out)
    return EXIT_OK


def _emit(text, path, out):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_verify(args, out):
    spec = spec_from_args(args)
    curve = spec.build()
    if not curve.periodic:
        raise UsageError("verification needs a closed curve")
    if args.theorem == "prop4":
        report = theorems.verify_proposition4(curve)
    else:
        if args.eps is None:
            raise UsageError(f"{args.theorem} needs --eps")
        fn = theorems.verify_theorem1 if args.theorem == "t1" else theorems.verify_corollary5
        report = fn(curve, args.eps)
    payload = {"curve": spec.describe(), **report.to_dict()}
    out.write(dumps("verification", payload) + "\n")
    return EXIT_OK if report.passed else EXIT_ACCURACY


def cmd_crofton(args, out):
    spec = spec_from_args(args)
    if args.eps is None:
        est = crofton.crofton_length(spec.polyline(args.resolution), args.n, args.seed, args.workers)
        out.write(dumps("crofton_length", {"curve": spec.describe(), **asdict(est)}) + "\n")
        return EXIT_OK
    curve = spec.build()
    if not curve.periodic:
        raise UsageError("rotation index estimation needs a closed curve")
    est = crofton.estimate_rotation_index(curve, args.eps, args.n, args.seed,
                                          args.resolution, args.workers)
    out.write(dumps("rotation_index_estimate", {"curve": spec.describe(), **asdict(est)}) + "\n")
    return EXIT_OK


def build_plot(spec, evolute=False, offsets=(), viewport=None, samples=512):
    """Layers: base (solid), evolute (dashed), each offset (dotted) with its singular points."""
    curve = spec.build()
    _, pts = _sample(curve, samples)
    layers = [svg.Layer(pts, "solid", curve.periodic, curve.name)]
    if evolute:
        ev = offset.evolute(curve)
        layers.append(svg.Layer(_sample(ev, samples)[1], "dashed", curve.periodic, ev.name))
    for eps in offsets:
        ospec = offset.OffsetSpec(curve, eps)
        beta = offset.parallel_curve(ospec)
        sing = offset.find_offset_singularities(ospec) if eps > 0 else offset.SingularitySet()
        marks = cc.evaluate(beta, np.array(sing.params)) if len(sing) else ()
        layers.append(svg.Layer(_sample(beta, samples)[1], "dotted", beta.periodic,
                                beta.name, markers=marks))
    return svg.PlotSpec(layers, viewport)


def cmd_plot(args, out):
    spec = spec_from_args(args)
    plot = build_plot(spec, args.evolute, args.offset or (),
                      tuple(args.viewport) if args.viewport else None, args.samples)
    _emit(svg.render(plot), args.out, out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _curve_args(p):
    p.add_argument("--curve", choices=[*catalog.CATALOG, "points"])
    p.add_argument("--spec", help="JSON curve spec file")
    p.add_argument("--file", help='points file {"points": [[x, y], ...], "closed": bool}')
    p.add_argument("--R", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--orientation", choices=["ccw", "cw"], default="ccw")
    p.add_argument("--no-fit", action="store_true",
                   help="use raw points; curvature queries are then rejected")


def make_parser():
    parser = _Parser(prog="parcurve", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("length", help="length of a curve")
    _curve_args(p)
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("offset", help="parallel curve, its length and singular points")
    _curve_args(p)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--emit", choices=["json", "csv", "svg"], default="json")
    p.add_argument("--out")
    p.add_argument("--samples", type=int, default=256)
    p.set_defaults(func=cmd_offset)

    p = sub.add_parser("verify", help="check an identity numerically")
    p.add_argument("theorem", choices=["t1", "prop4", "cor5"])
    _curve_args(p)
    p.add_argument("--eps", type=float)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("crofton", help="random-line length / rotation index estimate")
    _curve_args(p)
    p.add_argument("--eps", type=float)
    p.add_argument("--n", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--resolution", type=int, default=crofton.RESOLUTION)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_crofton)

    p = sub.add_parser("plot", help="SVG of a curve with evolute and offsets")
    _curve_args(p)
    p.add_argument("--evolute", action="store_true")
    p.add_argument("--offset", type=float, action="append", metavar="EPS")
    p.add_argument("--viewport", type=float, nargs=4, metavar=("XMIN", "YMIN", "XMAX", "YMAX"))
    p.add_argument("--samples", type=int, default=512)
    p.add_argument("--out")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = make_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"parcurve: usage error: {exc}\n")
        return EXIT_USAGE
    except ParcurveError as exc:
        err.write(f"parcurve: {type(exc).__name__}: {exc}\n")
        return exc.exit_code
    except OSError as exc:
        err.write(f"parcurve: I/O error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
