"""Minimal self-contained SVG line charts for curve tables (no plotting deps).

Output is a deterministic function of the input table: fixed canvas, fixed
palette, y axis pinned to [0, 1].
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .tables import CurveTable

__all__ = ["render_curve_svg"]

WIDTH = 760
HEIGHT = 480
MARGIN_LEFT = 64
MARGIN_RIGHT = 150
MARGIN_TOP = 24
MARGIN_BOTTOM = 48

PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_curve_svg(table: CurveTable, title: str = "") -> str:
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    t0 = float(table.times[0])
    t1 = float(table.times[-1])
    span = (t1 - t0) or 1.0  # single point: center it

    def sx(t: float) -> float:
        return MARGIN_LEFT + (t - t0) / span * plot_w

    def sy(v: float) -> float:
        return MARGIN_TOP + (1.0 - v) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{MARGIN_LEFT}" y="16" font-family="sans-serif" font-size="13">'
            f"{escape(title)}</text>"
        )

    # frame and y ticks at 0, 0.2, ..., 1
    x_right = MARGIN_LEFT + plot_w
    y_bottom = MARGIN_TOP + plot_h
    parts.append(
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="black" stroke-width="1"/>'
    )
    for k in range(6):
        v = k / 5.0
        y = sy(v)
        parts.append(
            f'<line x1="{MARGIN_LEFT - 4}" y1="{_fmt(y)}" x2="{MARGIN_LEFT}" y2="{_fmt(y)}" '
            f'stroke="black"/>'
        )
        parts.append(
            f'<text x="{MARGIN_LEFT - 8}" y="{_fmt(y + 4)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{v:.1f}</text>'
        )
    for k in range(6):
        t = t0 + span * k / 5.0
        x = sx(t)
        parts.append(
            f'<line x1="{_fmt(x)}" y1="{y_bottom}" x2="{_fmt(x)}" y2="{y_bottom + 4}" '
            f'stroke="black"/>'
        )
        parts.append(
            f'<text x="{_fmt(x)}" y="{y_bottom + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{t:.4g}</text>'
        )
    parts.append(
        f'<text x="{MARGIN_LEFT + plot_w / 2:.1f}" y="{HEIGHT - 10}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">t</text>'
    )
    parts.append(
        f'<text x="16" y="{MARGIN_TOP + plot_h / 2:.1f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12" '
        f'transform="rotate(-90 16 {MARGIN_TOP + plot_h / 2:.1f})">E Z(t)</text>'
    )

    single_point = len(table.times) < 2
    for i, (label, values) in enumerate(table.columns):
        color = PALETTE[i % len(PALETTE)]
        if single_point:
            for t, v in zip(table.times, values):
                parts.append(
                    f'<circle cx="{_fmt(sx(float(t)))}" cy="{_fmt(sy(float(v)))}" r="3" '
                    f'fill="{color}"/>'
                )
        else:
            points = " ".join(
                f"{_fmt(sx(float(t)))},{_fmt(sy(float(v)))}"
                for t, v in zip(table.times, values)
            )
            parts.append(
                f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1.5"/>'
            )
        # legend entry
        ly = MARGIN_TOP + 14 + 18 * i
        lx = x_right + 12
        parts.append(
            f'<line x1="{lx}" y1="{ly}" x2="{lx + 22}" y2="{ly}" stroke="{color}" '
            f'stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{lx + 28}" y="{ly + 4}" font-family="sans-serif" font-size="12">'
            f"{escape(label)}</text>"
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
