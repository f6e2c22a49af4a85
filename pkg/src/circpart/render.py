"""SVG circle diagrams for CoPs and extended CoPs."""

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .cop import CoP, center
from .errors import BadParams, EmptyStructure
from .extended import XCoP, classify_axes

STYLE = (
    ".rim{fill:none;stroke:#888;stroke-width:1}"
    ".point{fill:#1f4e79}"
    ".point.highlight{fill:#c0392b}"
    ".axis{stroke:#1f4e79;stroke-width:1.2}"
    ".axis-full{stroke:#1f4e79;stroke-width:1.6}"
    ".axis-half{stroke:#999;stroke-width:1;stroke-dasharray:4 3}"
    ".center{fill:none;stroke:#c0392b;stroke-width:1.5}"
    "text{font:10px sans-serif;fill:#222}"
)


@dataclass(frozen=True)
class RenderSpec:
    radius: int = 120
    point_label: str = "weight"  # weight or index
    show_chords: bool = True
    highlight: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.radius <= 0:
            raise BadParams("radius must be positive")
        if self.point_label not in ("weight", "index"):
            raise BadParams("point_label must be 'weight' or 'index'")
        object.__setattr__(self, "highlight", frozenset(self.highlight))


def _fmt(v):
    return f"{v:.3f}".rstrip("0").rstrip(".")


def _position(w, n, cx, cy, r):
    # weight 0 at the top, clockwise
    t = 2 * math.pi * w / n
    return cx + r * math.sin(t), cy - r * math.cos(t)


def _segments(structure):
    """(low, high, css class) per real axis, plus the center weight or None."""
    if isinstance(structure, XCoP):
        cls = classify_axes(structure)
        segs = [(a.low, a.high, "axis-full") for a in cls.full_axes]
        segs += [(a.low, a.high, "axis-half") for a in cls.half_axes]
        return sorted(segs), cls.center
    w = structure.weights
    k = len(w)
    return [(w[i], w[k - 1 - i], "axis") for i in range(k // 2)], center(structure)


def render_cop_svg(structure, spec=None):
    if not isinstance(structure, (CoP, XCoP)):
        raise TypeError("expected a CoP or an extended CoP")
    if not structure.weights:
        raise EmptyStructure(f"nothing to draw for generator {structure.n}")
    spec = spec or RenderSpec()
    r = spec.radius
    pad = 30
    size = 2 * (r + pad)
    cx = cy = r + pad
    n = structure.n
    label = "C*" if isinstance(structure, XCoP) else "C"
    title = f"{label}({n}, {structure.base})"
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<title>{escape(title)}</title>",
        f"<style>{STYLE}</style>",
        f'<circle class="rim" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{r}"/>',
    ]
    segs, c = _segments(structure)
    if spec.show_chords:
        for lo, hi, css in segs:
            x1, y1 = _position(lo, n, cx, cy, r)
            x2, y2 = _position(hi, n, cx, cy, r)
            out.append(
                f'<line class="{css}" data-axis="{lo},{hi}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
            )
        if c is not None:
            x, y = _position(c, n, cx, cy, r)
            out.append(f'<circle class="center" data-axis="{c}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="6"/>')
    for i, w in enumerate(structure.weights):
        x, y = _position(w, n, cx, cy, r)
        css = "point highlight" if w in spec.highlight else "point"
        out.append(f'<circle class="{css}" data-weight="{w}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.5"/>')
        lx, ly = _position(w, n, cx, cy, r + 14)
        text = w if spec.point_label == "weight" else i + 1
        out.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly + 3)}" text-anchor="middle">{text}</text>')
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode()
