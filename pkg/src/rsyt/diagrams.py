"""Deterministic SVG renderings of the four standard pictures.

Every drawing embeds its exact data in data-* attributes (rationals as
"p/q" strings), so tests and downstream tools read the mathematical
content back off the document instead of trusting pixel positions.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .networks import SortingNetwork
from .realizability import OuterSumWitness, tableau_of_outer_sum
from .slices import LabeledLatticePath

_PALETTE = (
    "#1b6ca8", "#c0392b", "#1e8449", "#8e44ad", "#b7950b",
    "#17a589", "#a04000", "#5d6d7e", "#884ea0", "#2e86c1",
)


def _fmt(v) -> str:
    return f"{float(v):.6g}"


def _frac(v: Fraction) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return "\n".join([head, *body, "</svg>"])


def _spread(values: list[Fraction], lo: float, hi: float) -> dict[Fraction, float]:
    """Affine map of the value range onto [lo, hi] (constant -> midpoint)."""
    vmin, vmax = min(values), max(values)
    if vmin == vmax:
        return {vmin: (lo + hi) / 2}
    scale = (hi - lo) / float(vmax - vmin)
    return {v: lo + float(v - vmin) * scale for v in values}


def render_projection_diagram(w: OuterSumWitness) -> str:
    """Grid points (x_i, y_j) projected onto the diagonal, ranks attached.

    The foot of each projection sits at ((x+y)/2, (x+y)/2), so reading the
    feet along the diagonal recovers the rank table of the outer sum.
    """
    t = tableau_of_outer_sum(w)
    size = 420.0
    pad = 40.0
    xs = _spread(list(w.x), pad, size - pad)
    ys = _spread(list(w.y), pad, size - pad)
    # the diagonal needs one common scale for both axes
    halves = [(xi + yj) / 2 for xi in w.x for yj in w.y]
    ds = _spread(sorted(set(halves + list(w.x) + list(w.y))), pad, size - pad)

    def flip(py: float) -> float:
        return size - py

    body = ['<g class="projection-diagram">']
    body.append(
        f'<line class="diagonal" x1="{_fmt(ds[min(ds)])}" y1="{_fmt(flip(ds[min(ds)]))}" '
        f'x2="{_fmt(ds[max(ds)])}" y2="{_fmt(flip(ds[max(ds)]))}" '
        'stroke="#888" stroke-width="1"/>'
    )
    for i, xi in enumerate(w.x, start=1):
        for j, yj in enumerate(w.y, start=1):
            rank = t.entry(i, j)
            s = xi + yj
            px, py = xs[xi], flip(ys[yj])
            half = (xi + yj) / 2
            fx, fy = ds[half], flip(ds[half])
            body.append(
                f'<line class="drop" x1="{_fmt(px)}" y1="{_fmt(py)}" '
                f'x2="{_fmt(fx)}" y2="{_fmt(fy)}" stroke="#bbb" '
                'stroke-width="0.5" stroke-dasharray="3 3"/>'
            )
            body.append(
                f'<circle class="grid-point" cx="{_fmt(px)}" cy="{_fmt(py)}" r="4" '
                f'fill="{_PALETTE[(i - 1) % len(_PALETTE)]}" '
                f'data-i="{i}" data-j="{j}" data-x="{_frac(xi)}" '
                f'data-y="{_frac(yj)}" data-sum="{_frac(s)}" data-rank="{rank}"/>'
            )
            body.append(
                f'<circle class="foot" cx="{_fmt(fx)}" cy="{_fmt(fy)}" r="2.5" '
                f'fill="#333" data-i="{i}" data-j="{j}" '
                f'data-sum="{_frac(s)}" data-rank="{rank}"/>'
            )
            body.append(
                f'<text class="rank" x="{_fmt(fx + 6)}" y="{_fmt(fy - 6)}" '
                f'font-size="10">{rank}</text>'
            )
    body.append("</g>")
    return _svg(size, size, body)


def render_line_diagram(w: OuterSumWitness) -> str:
    """All sums x_i + y_j on one axis, styled by column, linked by row."""
    t = tableau_of_outer_sum(w)
    width, height = 640.0, 180.0
    pad = 30.0
    axis_y = height - 50.0
    sums = sorted(x + y for x in w.x for y in w.y)
    pos = _spread(sums, pad, width - pad)
    body = ['<g class="line-diagram">']
    body.append(
        f'<line class="axis" x1="{_fmt(pad)}" y1="{_fmt(axis_y)}" '
        f'x2="{_fmt(width - pad)}" y2="{_fmt(axis_y)}" stroke="#333" stroke-width="1"/>'
    )
    for i in range(1, w.m + 1):
        pts = " ".join(
            f"{_fmt(pos[w.x[i - 1] + yj])},{_fmt(axis_y - 14 - 8 * (i - 1))}"
            for yj in w.y
        )
        body.append(
            f'<polyline class="row-link" points="{pts}" fill="none" '
            f'stroke="{_PALETTE[(i - 1) % len(_PALETTE)]}" stroke-width="1" '
            f'data-i="{i}"/>'
        )
    for i in range(1, w.m + 1):
        for j in range(1, w.n + 1):
            s = w.x[i - 1] + w.y[j - 1]
            rank = t.entry(i, j)
            px = pos[s]
            # marker style keyed to the column index
            body.append(
                f'<circle class="sum-point col-{j}" cx="{_fmt(px)}" '
                f'cy="{_fmt(axis_y)}" r="{3 + (j - 1) % 3}" '
                f'fill="{_PALETTE[(j - 1) % len(_PALETTE)]}" '
                f'data-i="{i}" data-j="{j}" data-sum="{_frac(s)}" data-rank="{rank}"/>'
            )
            body.append(
                f'<text class="rank" x="{_fmt(px - 3)}" y="{_fmt(axis_y + 16)}" '
                f'font-size="9">{rank}</text>'
            )
    body.append("</g>")
    return _svg(width, height, body)


def render_wiring_diagram(net: SortingNetwork) -> str:
    """k tracks crossing once per swap, left to right in firing order."""
    k = net.wires
    steps = len(net.swaps)
    col = 44.0
    row = 36.0
    pad = 30.0
    width = pad * 2 + col * (steps + 1)
    height = pad * 2 + row * (k - 1)

    def ty(track: int) -> float:
        return pad + row * (track - 1)

    # track occupied by each label after every step
    word = list(range(1, k + 1))
    occupancy = [tuple(word)]
    for p in net.swaps:
        word[p - 1], word[p] = word[p], word[p - 1]
        occupancy.append(tuple(word))
    body = ['<g class="wiring-diagram">']
    for label in range(1, k + 1):
        pts = []
        for s, occ in enumerate(occupancy):
            track = occ.index(label) + 1
            pts.append(f"{_fmt(pad + col * s)},{_fmt(ty(track))}")
            if s < steps:
                nxt = occupancy[s + 1].index(label) + 1
                if nxt != track:
                    pts.append(f"{_fmt(pad + col * (s + 1))},{_fmt(ty(nxt))}")
        body.append(
            f'<polyline class="wire" points="{" ".join(pts)}" fill="none" '
            f'stroke="{_PALETTE[(label - 1) % len(_PALETTE)]}" '
            f'stroke-width="1.5" data-label="{label}"/>'
        )
        body.append(
            f'<text class="wire-label" x="{_fmt(pad - 16)}" '
            f'y="{_fmt(ty(label) + 4)}" font-size="11">{label}</text>'
        )
    for s, p in enumerate(net.swaps, start=1):
        cx = pad + col * (s - 0.5)
        cy = (ty(p) + ty(p + 1)) / 2
        body.append(
            f'<circle class="crossing" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3" '
            f'fill="none" stroke="#555" data-step="{s}" data-pos="{p}"/>'
        )
    body.append("</g>")
    assert sum(1 for line in body if 'class="crossing"' in line) == comb(k, 2)
    return _svg(width, height, body)


def render_lattice_path(path: LabeledLatticePath) -> str:
    """Labeled monotone path through the m x n box, Fig-style."""
    m, n = path.m, path.n
    cell = 40.0
    pad = 34.0
    width = pad * 2 + cell * n
    height = pad * 2 + cell * m

    def px(x: int) -> float:
        return pad + cell * x

    def py(y: int) -> float:
        return pad + cell * (m - y)

    body = [f'<g class="lattice-path" data-area="{path.area}">']
    for gx in range(n + 1):
        body.append(
            f'<line x1="{_fmt(px(gx))}" y1="{_fmt(py(0))}" x2="{_fmt(px(gx))}" '
            f'y2="{_fmt(py(m))}" stroke="#ddd" stroke-width="1"/>'
        )
    for gy in range(m + 1):
        body.append(
            f'<line x1="{_fmt(px(0))}" y1="{_fmt(py(gy))}" x2="{_fmt(px(n))}" '
            f'y2="{_fmt(py(gy))}" stroke="#ddd" stroke-width="1"/>'
        )
    x = y = 0
    pts = [f"{_fmt(px(0))},{_fmt(py(0))}"]
    for idx, (direction, label) in enumerate(path.steps, start=1):
        if direction == "up":
            lx, ly = px(x) - 10, (py(y) + py(y + 1)) / 2 + 4
            y += 1
        else:
            lx, ly = (px(x) + px(x + 1)) / 2 - 4, py(y) + 16
            x += 1
        pts.append(f"{_fmt(px(x))},{_fmt(py(y))}")
        body.append(
            f'<text class="step-label" x="{_fmt(lx)}" y="{_fmt(ly)}" '
            f'font-size="11" data-index="{idx}" data-dir="{direction}" '
            f'data-label="{label}">{label}</text>'
        )
    assert (x, y) == (n, m)
    body.append(
        f'<polyline class="path" points="{" ".join(pts)}" fill="none" '
        'stroke="#1b6ca8" stroke-width="2.5"/>'
    )
    body.append("</g>")
    return _svg(width, height, body)
