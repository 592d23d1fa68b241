"""Hand-rolled SVG emission, deterministic byte for byte.

No drawing library: the figures are polylines, rectangles, circles and
text in a fixed viewport, so string assembly keeps the output stable
across environments.  Marker circles carry data-x / data-y attributes
with the full-precision coordinates so figures stay machine-checkable.
"""

from .scalars import to_float

_W, _H = 800.0, 500.0
_MARGIN = 55.0

_STYLE = (
    "  <style>\n"
    "    .curve { fill: none; stroke: #222222; stroke-width: 1.4; }\n"
    "    .piece-a { fill: none; stroke: #1f6fb4; stroke-width: 2.4; }\n"
    "    .piece-b { fill: none; stroke: #c23b22; stroke-width: 2.4; }\n"
    "    .overlap { fill: #f4d35e; fill-opacity: 0.45; stroke: none; }\n"
    "    .axis { stroke: #555555; stroke-width: 1; }\n"
    "    .marker { fill: #111111; }\n"
    "    .label { font: 12px sans-serif; fill: #333333; }\n"
    "  </style>\n"
)


def _fmt(v: float) -> str:
    out = f"{v:.3f}"
    return "0.000" if out == "-0.000" else out


class _Frame:
    """Affine data-to-pixel transform with a padded data window."""

    def __init__(self, xlo, xhi, ylo, yhi):
        if xhi <= xlo:
            xhi = xlo + 1.0
        if yhi <= ylo:
            pad = max(1.0, abs(ylo)) * 0.5
            ylo, yhi = ylo - pad, ylo + pad
        padx = (xhi - xlo) * 0.04
        pady = (yhi - ylo) * 0.08
        self.xlo, self.xhi = xlo - padx, xhi + padx
        self.ylo, self.yhi = ylo - pady, yhi + pady

    def px(self, x):
        t = (x - self.xlo) / (self.xhi - self.xlo)
        return _MARGIN + t * (_W - 2 * _MARGIN)

    def py(self, y):
        t = (y - self.ylo) / (self.yhi - self.ylo)
        return _H - _MARGIN - t * (_H - 2 * _MARGIN)


def _polyline(frame, points, css):
    coords = " ".join(
        f"{_fmt(frame.px(to_float(x)))},{_fmt(frame.py(to_float(y)))}"
        for (x, y) in points
    )
    return f'  <polyline class="{css}" points="{coords}"/>\n'


def _axes(frame, xlo, xhi, ylo, yhi):
    x0, x1 = frame.px(xlo), frame.px(xhi)
    y0, y1 = frame.py(ylo), frame.py(yhi)
    out = [
        f'  <line class="axis" x1="{_fmt(x0)}" y1="{_fmt(y0)}" '
        f'x2="{_fmt(x1)}" y2="{_fmt(y0)}"/>\n',
        f'  <line class="axis" x1="{_fmt(x0)}" y1="{_fmt(y0)}" '
        f'x2="{_fmt(x0)}" y2="{_fmt(y1)}"/>\n',
    ]
    for (vx, vy, text, anchor, dy) in (
        (xlo, ylo, repr(float(xlo)), "middle", 16.0),
        (xhi, ylo, repr(float(xhi)), "middle", 16.0),
        (xlo, yhi, repr(float(yhi)), "end", 4.0),
    ):
        out.append(
            f'  <text class="label" text-anchor="{anchor}" '
            f'x="{_fmt(frame.px(vx) - (8.0 if anchor == "end" else 0.0))}" '
            f'y="{_fmt(frame.py(vy) + dy)}">{text}</text>\n'
        )
    return "".join(out)


def _markers(frame, marked):
    out = []
    for (x, y) in marked:
        xf, yf = to_float(x), to_float(y)
        out.append(
            f'  <circle class="marker" cx="{_fmt(frame.px(xf))}" '
            f'cy="{_fmt(frame.py(yf))}" r="4" data-x="{xf!r}" data-y="{yf!r}"/>\n'
        )
    return "".join(out)


def _document(body: str) -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W:.0f}" '
        f'height="{_H:.0f}" viewBox="0 0 {_W:.0f} {_H:.0f}">\n'
        + _STYLE
        + body
        + "</svg>\n"
    )


def graph_svg(points, interval, marked=()) -> str:
    """Polyline of a graph sample with axes and optional marked points."""
    xs = [to_float(x) for (x, _) in points]
    ys = [to_float(y) for (_, y) in points]
    frame = _Frame(min(xs), max(xs), min(ys), max(ys))
    body = _axes(frame, to_float(interval[0]), to_float(interval[1]),
                 min(ys), max(ys))
    body += _polyline(frame, points, "curve")
    body += _markers(frame, marked)
    return _document(body)


def overlap_svg(points, interval, sub_a, sub_b, strip_x, marked=()) -> str:
    """Attractor with two generator images overlaid and a shaded strip.

    sub_a and sub_b are point sequences (the images of the sample under
    two chosen maps); strip_x = (lo, hi) is shaded over the full height.
    """
    xs = [to_float(x) for (x, _) in points]
    ys = [to_float(y) for (_, y) in points]
    frame = _Frame(min(xs), max(xs), min(ys), max(ys))
    lo, hi = (to_float(strip_x[0]), to_float(strip_x[1]))
    x0, x1 = frame.px(lo), frame.px(hi)
    ytop, ybot = frame.py(frame.yhi), frame.py(frame.ylo)
    body = (
        f'  <rect class="overlap" x="{_fmt(x0)}" y="{_fmt(ytop)}" '
        f'width="{_fmt(x1 - x0)}" height="{_fmt(ybot - ytop)}"/>\n'
    )
    body += _axes(frame, to_float(interval[0]), to_float(interval[1]),
                  min(ys), max(ys))
    body += _polyline(frame, points, "curve")
    body += _polyline(frame, sub_a, "piece-a")
    body += _polyline(frame, sub_b, "piece-b")
    body += _markers(frame, marked)
    return _document(body)
