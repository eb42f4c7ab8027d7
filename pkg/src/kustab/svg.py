"""Deterministic SVG rendering of wall atlases in the (alpha, beta) half plane.

Every coordinate is derived from exact rationals (or exact square roots)
and truncated to six decimals with integer arithmetic, so the output is
byte-identical across runs and platforms.  Decimals appear only here, after
all decisions have been made exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .exact import rat
from .walls import WallCircle

SCALE = 100          # pixels per unit
MARGIN = 40


def _trunc6(q: Fraction) -> str:
    """Fixed 6-decimal string of a rational, truncated toward zero."""
    n = abs(q.numerator) * 10 ** 6 // q.denominator
    s = f"{n // 10 ** 6}.{n % 10 ** 6:06d}"
    return "-" + s if q < 0 and n else s


def _sqrt_trunc(q: Fraction) -> Fraction:
    """floor(sqrt(q) * 10^6) / 10^6, exactly."""
    p, d = q.numerator, q.denominator
    return Fraction(isqrt(p * d * 10 ** 12) // d, 10 ** 6)


def render_walls_svg(circles: list[WallCircle], viewport: dict) -> bytes:
    """Render walls as an SVG document.

    viewport maps beta_min, beta_max, alpha_max to rationals.  Circles
    become upper semicircular paths with their witnesses in title elements;
    vertical-line walls become segments.
    """
    beta_min = rat(viewport["beta_min"])
    beta_max = rat(viewport["beta_max"])
    alpha_max = rat(viewport["alpha_max"])
    if beta_max <= beta_min or alpha_max <= 0:
        raise ValueError("empty viewport")

    def px(beta: Fraction) -> str:
        return _trunc6((beta - beta_min) * SCALE + MARGIN)

    def py(alpha: Fraction) -> str:
        return _trunc6((alpha_max - alpha) * SCALE + MARGIN)

    width = _trunc6((beta_max - beta_min) * SCALE + 2 * MARGIN)
    height = _trunc6(alpha_max * SCALE + 2 * MARGIN)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}">',
        f'<line class="axis" x1="{px(beta_min)}" y1="{py(Fraction(0))}" '
        f'x2="{px(beta_max)}" y2="{py(Fraction(0))}" stroke="black"/>',
    ]
    if beta_min <= 0 <= beta_max:
        lines.append(
            f'<line class="axis" x1="{px(Fraction(0))}" y1="{py(Fraction(0))}" '
            f'x2="{px(Fraction(0))}" y2="{py(alpha_max)}" stroke="black"/>')
    b = beta_min.numerator // beta_min.denominator
    while b <= beta_max:
        if beta_min <= b <= beta_max:
            lines.append(
                f'<text class="tick" x="{px(Fraction(b))}" '
                f'y="{_trunc6((alpha_max) * SCALE + MARGIN + 16)}" '
                f'font-size="12" text-anchor="middle">{b}</text>')
        b += 1
    for c in circles:
        if c.kind == "circle":
            r = _sqrt_trunc(c.radius_sq)
            title = "; ".join(w.text() for w in (c.witnesses or (c.witness,))
                              if w is not None)
            lines.append(
                f'<path class="wall" d="M {px(c.center_beta - r)} '
                f'{py(Fraction(0))} A {_trunc6(r * SCALE)} '
                f'{_trunc6(r * SCALE)} 0 0 1 {px(c.center_beta + r)} '
                f'{py(Fraction(0))}" fill="none" stroke="crimson">'
                f'<title>{title}</title></path>')
        elif c.kind == "vertical-line":
            title = "; ".join(w.text() for w in (c.witnesses or (c.witness,))
                              if w is not None)
            lines.append(
                f'<line class="wall" x1="{px(c.line_beta)}" '
                f'y1="{py(Fraction(0))}" x2="{px(c.line_beta)}" '
                f'y2="{py(alpha_max)}" stroke="crimson">'
                f'<title>{title}</title></line>')
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
