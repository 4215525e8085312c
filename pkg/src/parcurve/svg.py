"""Minimal standalone SVG writer for curve plots."""
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

STYLES = {
    "solid": "",
    "dashed": ' stroke-dasharray="{d} {d}"',
    "dotted": ' stroke-dasharray="{g} {d}" stroke-linecap="round"',
}
PAD = 0.05
WIDTH_PX = 600


@dataclass
class Layer:
    points: np.ndarray
    style: str = "solid"
    closed: bool = False
    label: str = ""
    markers: Sequence = ()

    def __post_init__(self):
        if self.style not in STYLES:
            raise ValueError(f"unknown style {self.style!r}")
        self.points = np.asarray(self.points, dtype=float)


@dataclass
class PlotSpec:
    """Layers plus an optional data-space viewport ``(xmin, ymin, xmax, ymax)``.

    The viewport is padded by 5% of its larger side before drawing, whether it
    was given or computed from the layers.
    """

    layers: list = field(default_factory=list)
    viewport: Optional[tuple] = None


def auto_viewport(layers):
    pts = [l.points for l in layers] + [np.asarray(l.markers, dtype=float).reshape(-1, 2)
                                        for l in layers]
    allp = np.vstack([p for p in pts if p.size])
    lo, hi = allp.min(axis=0), allp.max(axis=0)
    return (float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1]))


def _fmt(v):
    return f"{v:.6f}"


def render(plot):
    if not plot.layers:
        raise ValueError("a plot needs at least one layer")
    x0, y0, x1, y1 = plot.viewport if plot.viewport is not None else auto_viewport(plot.layers)
    size = max(x1 - x0, y1 - y0)
    if size <= 0:
        size = 1.0
    pad = PAD * size
    x0, y0, x1, y1 = x0 - pad, y0 - pad, x1 + pad, y1 + pad
    w, h = x1 - x0, y1 - y0
    stroke = 0.004 * max(w, h)
    radius = 0.012 * max(w, h)
    height_px = WIDTH_PX * h / w

    def xy(p):
        return _fmt(p[0] - x0), _fmt(y1 - p[1])

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH_PX}" height="{height_px:.0f}" viewBox="0 0 {_fmt(w)} {_fmt(h)}">',
    ]
    circles = []
    for layer in plot.layers:
        cmds = []
        for k, p in enumerate(layer.points):
            x, y = xy(p)
            cmds.append(f"{'M' if k == 0 else 'L'}{x} {y}")
        if layer.closed:
            cmds.append("Z")
        dash = STYLES[layer.style].format(d=_fmt(4 * stroke), g=_fmt(0.01 * stroke))
        title = f"<title>{layer.label}</title>" if layer.label else ""
        out.append(f'<path d="{" ".join(cmds)}" fill="none" stroke="black" '
                   f'stroke-width="{_fmt(stroke)}"{dash}>{title}</path>')
        markers = list(layer.markers)
        extent = np.ptp(layer.points, axis=0).max() if len(layer.points) else 0.0
        if extent <= 1e-9 * size:
            markers.append(layer.points[0])
        for m in markers:
            x, y = xy(m)
            circles.append(f'<circle cx="{x}" cy="{y}" r="{_fmt(radius)}" fill="none" '
                           f'stroke="red" stroke-width="{_fmt(stroke)}"/>')
    out.extend(circles)
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write(plot, path):
    text = render(plot)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
