"""Deterministic SVG 1.1 rendering of folding orbits."""

from __future__ import annotations

import numpy as np

from .geometry import Geometry, Quadrilateral

_SIZE = 480
_PAD = 20


def _planar(q: Quadrilateral) -> np.ndarray:
    v = q.vertices
    if q.geometry is Geometry.EUCLIDEAN:
        return v
    if q.geometry is Geometry.SPHERICAL:
        # orthographic view from above the base point
        return v[:, :2]
    # Poincare disk
    return v[:, 1:] / (1.0 + v[:, :1])


def _fmt(x: float) -> str:
    s = f"{x:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_orbit(orbit: list[Quadrilateral], title: str = "folding orbit") -> str:
    pts = [_planar(q) for q in orbit]
    allp = np.vstack(pts)
    lo, hi = allp.min(axis=0), allp.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-12))
    scale = (_SIZE - 2 * _PAD) / span

    def tx(p):
        # flip y so that the picture has the usual orientation
        return _PAD + (p[0] - lo[0]) * scale, _SIZE - _PAD - (p[1] - lo[1]) * scale

    n = len(orbit)
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_SIZE}" height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">',
        f"<title>{title}</title>",
        f'<rect x="0" y="0" width="{_SIZE}" height="{_SIZE}" fill="white"/>',
    ]
    for i, p in enumerate(pts):
        shade = 0 if n == 1 else int(round(200 * i / (n - 1)))
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(tx, p))
        lines.append(
            f'<polygon id="step{i}" points="{coords}" fill="none" '
            f'stroke="rgb({shade},{shade},255)" stroke-width="1"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_orbit(path: str, orbit: list[Quadrilateral], title: str = "folding orbit") -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_orbit(orbit, title))
