"""Piecewise-linear arc tracing: a geometric oracle for the Moody data.

The disc model has punctures p1, p2, p3 at (1, 0), (2, 0), (3, 0), the base
point p0 at (-2, 0), the arc alpha along the segment from p1 to p2, and

    beta_0 = (-2, 0) -> (-1, -1) -> (2.5, -1) -> (3, 0).

Points are dyadic rationals stored as integers scaled by ``SCALE``; all
predicates (orientation, crossings, point in polygon) are exact integer or
Fraction arithmetic.  The only inexact step is placing the image of a vertex
under a twist, which is rounded to the grid; every image is re-checked for
simplicity and for avoiding the punctures, and the subdivision is refined if
a check fails.

A generator sigma_i is realized by a twist about the midpoint c of p_i and
p_{i+1}: rotation by pi on the disc of radius ``R1`` around c (exact, since it
is ``z -> 2c - z``), rotation angle falling linearly to zero at radius ``R2``,
identity outside.  Segments meeting the twist annulus are first cut into
pieces of length at most ``STEP``; where image chords still collide, the
offending preimage pieces are cut again (at most ``MAX_REFINE`` rounds).

Levels are read off the three downward rays ``{x = k, y < 0}`` below the
punctures: crossing one left to right is a step of +1 in the deck group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError, NotPureBraid, SubdivisionLimit
from .words import as_braid, permutation

SCALE = 1 << 40
PUNCTURES = ((SCALE, 0), (2 * SCALE, 0), (3 * SCALE, 0))
BASEPOINT = (-2 * SCALE, 0)
BETA_0 = (BASEPOINT, (-SCALE, -SCALE), (5 * SCALE // 2, -SCALE), PUNCTURES[2])
ALPHA = (PUNCTURES[0], PUNCTURES[1])

R1 = 0.6
R2 = 1.4
STEP = 0.05
MAX_REFINE = 24
MAX_LENGTH = 8

# Calibration constants (fixed once against the word-level model; see tests).
TWIST_SIGN = 1
LEFT_TO_RIGHT = True
RAY_SIGN = 1

Point = tuple[int, int]


@dataclass
class PlArcDiagram:
    polyline: list[Point] = field(default_factory=lambda: list(BETA_0))

    def copy(self) -> "PlArcDiagram":
        return PlArcDiagram(list(self.polyline))

    def points(self) -> list[tuple[Fraction, Fraction]]:
        return [(Fraction(x, SCALE), Fraction(y, SCALE)) for x, y in self.polyline]


# -- exact predicates ----------------------------------------------------------

def _orient(a: Point, b: Point, c: Point) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    return (
        _orient(a, b, p) == 0
        and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Closed segments ab and cd share a point."""
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        (o1 == 0 and _on_segment(a, b, c))
        or (o2 == 0 and _on_segment(a, b, d))
        or (o3 == 0 and _on_segment(c, d, a))
        or (o4 == 0 and _on_segment(c, d, b))
    )


def _adjacent_overlap(a: Point, b: Point, c: Point) -> bool:
    """Segments ab and bc fold back onto each other."""
    if _orient(a, b, c) != 0:
        return False
    return (c[0] - b[0]) * (a[0] - b[0]) + (c[1] - b[1]) * (a[1] - b[1]) > 0


def point_in_polygon(pt, poly) -> bool:
    """Even-odd test with exact arithmetic; ``pt`` must not lie on the boundary."""
    x, y = pt
    inside = False
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            # x coordinate of the edge at height y, compared without division
            lhs = (x - x1) * (y2 - y1)
            rhs = (x2 - x1) * (y - y1)
            if (lhs < rhs) == (y2 > y1):
                inside = not inside
    return inside


def find_defects(poly: list[Point], cell: int = SCALE // 64) -> set[int]:
    """Indices of segments that break simplicity or run through a puncture.

    Segment ``i`` joins ``poly[i]`` to ``poly[i + 1]``.  Only the final vertex
    may sit on a puncture (beta ends at one).
    """
    n = len(poly) - 1
    bad: set[int] = set()
    for i in range(n):
        if poly[i] == poly[i + 1]:
            bad.add(i)
    for i in range(n - 1):
        if _adjacent_overlap(poly[i], poly[i + 1], poly[i + 2]):
            bad.update((i, i + 1))
    grid: dict[tuple[int, int], list[int]] = {}
    for i in range(n):
        (x1, y1), (x2, y2) = poly[i], poly[i + 1]
        for gx in range(min(x1, x2) // cell, max(x1, x2) // cell + 1):
            for gy in range(min(y1, y2) // cell, max(y1, y2) // cell + 1):
                grid.setdefault((gx, gy), []).append(i)
    for p in PUNCTURES:
        for i in grid.get((p[0] // cell, p[1] // cell), ()):
            a, b = poly[i], poly[i + 1]
            if _on_segment(a, b, p) and not (i == n - 1 and b == p):
                bad.add(i)
    seen = set()
    for bucket in grid.values():
        for ii in range(len(bucket)):
            i = bucket[ii]
            for jj in range(ii + 1, len(bucket)):
                j = bucket[jj]
                if j - i <= 1 or (i, j) in seen:
                    continue
                seen.add((i, j))
                if segments_intersect(poly[i], poly[i + 1], poly[j], poly[j + 1]):
                    bad.update((i, j))
    return bad


def is_simple(poly: list[Point]) -> bool:
    """Simple polyline that meets the punctures at most in its last vertex."""
    return not find_defects(poly)


# -- twists --------------------------------------------------------------------

def _twist_point(p: Point, centre_x: int, direction: int) -> Point:
    x, y = p
    dx = (x - centre_x) / SCALE
    dy = y / SCALE
    r = math.hypot(dx, dy)
    if r >= R2:
        return p
    if r <= R1:
        return (2 * centre_x - x, -y)
    theta = direction * math.pi * (R2 - r) / (R2 - R1)
    c, s = math.cos(theta), math.sin(theta)
    nx = dx * c - dy * s
    ny = dx * s + dy * c
    return (centre_x + round(nx * SCALE), round(ny * SCALE))


def _segment_near(a: Point, b: Point, centre_x: int, radius: float) -> bool:
    """Does segment ab come within ``radius`` of the centre?"""
    ax, ay = (a[0] - centre_x) / SCALE, a[1] / SCALE
    bx, by = (b[0] - centre_x) / SCALE, b[1] / SCALE
    vx, vy = bx - ax, by - ay
    vv = vx * vx + vy * vy
    t = 0.0 if vv == 0 else max(0.0, min(1.0, -(ax * vx + ay * vy) / vv))
    return math.hypot(ax + t * vx, ay + t * vy) < radius


def _inside_rigid(p: Point, centre_x: int) -> bool:
    return math.hypot((p[0] - centre_x) / SCALE, p[1] / SCALE) <= R1


def _subdivide(poly: list[Point], centre_x: int, step: float) -> list[Point]:
    out = [poly[0]]
    for a, b in zip(poly, poly[1:]):
        if _segment_near(a, b, centre_x, R2 + step) and not (
            _inside_rigid(a, centre_x) and _inside_rigid(b, centre_x)
        ):
            length = math.hypot(b[0] - a[0], b[1] - a[1]) / SCALE
            k = max(1, math.ceil(length / step))
            for j in range(1, k):
                out.append((a[0] + (b[0] - a[0]) * j // k, a[1] + (b[1] - a[1]) * j // k))
        out.append(b)
    return out


def _refine(poly: list[Point], bad: set[int], pieces: int = 4) -> list[Point]:
    out = [poly[0]]
    for i in range(len(poly) - 1):
        a, b = poly[i], poly[i + 1]
        if i in bad:
            for j in range(1, pieces):
                out.append((a[0] + (b[0] - a[0]) * j // pieces, a[1] + (b[1] - a[1]) * j // pieces))
        out.append(b)
    return out


def apply_twist(poly: list[Point], code: int) -> list[Point]:
    """Image of the polyline under the twist for generator ``code``.

    Vertices are mapped exactly where the map is rigid and rounded elsewhere.
    Wherever the chords of the image collide, the corresponding preimage
    segments (and their neighbours) are cut into quarters and mapped again.
    """
    i = abs(code)
    centre_x = (2 * i + 1) * SCALE // 2
    direction = TWIST_SIGN * (1 if code > 0 else -1)
    pre = _subdivide(poly, centre_x, STEP)
    for _ in range(MAX_REFINE):
        image = [_twist_point(p, centre_x, direction) for p in pre]
        bad = find_defects(image)
        if not bad:
            return image
        widened = set()
        for j in bad:
            widened.update((j - 1, j, j + 1))
        pre = _refine(pre, widened)
    raise SubdivisionLimit(f"twist {code} did not yield a simple arc after {MAX_REFINE} refinements")


NUDGE = 1 << 16


def _nudge(poly: list[Point]) -> list[Point]:
    """Move interior vertices off the line y = 0, where alpha lives.

    A vertex goes to the side of the vertex before it, so a path that only
    touches the line does not pick up a spurious pair of crossings.  The
    offset leaves room for bigon shortcuts to pass between alpha and such a
    touching strand; it shrinks if it would spoil simplicity.
    """
    amount = NUDGE
    while amount:
        out = list(poly)
        side = -1
        for k in range(1, len(out) - 1):
            x, y = out[k]
            if y == 0:
                out[k] = (x, side * amount)
            else:
                side = 1 if y > 0 else -1
        if out == poly or is_simple(out):
            return out
        amount //= 2
    raise SubdivisionLimit("no room to move the arc off alpha")


# -- crossings with alpha, bigons, levels --------------------------------------

def _alpha_crossing(a: Point, b: Point) -> Fraction | None:
    """x coordinate (scaled) where segment ab crosses alpha, if it does."""
    (x1, y1), (x2, y2) = a, b
    if (y1 < 0 < y2) or (y2 < 0 < y1):
        x = Fraction(x1) + Fraction((x2 - x1) * -y1, y2 - y1)
        if PUNCTURES[0][0] < x < PUNCTURES[1][0]:
            return x
        if x in (PUNCTURES[0][0], PUNCTURES[1][0]):
            raise SubdivisionLimit("arc runs through an endpoint of alpha")
    return None


def alpha_crossings(poly: list[Point]) -> list[tuple[int, Fraction]]:
    """``(segment index, x)`` for each crossing with alpha, in order along beta."""
    out = []
    for i in range(len(poly) - 1):
        x = _alpha_crossing(poly[i], poly[i + 1])
        if x is not None:
            out.append((i, x))
    return out


def _try_remove_bigon(poly: list[Point]) -> list[Point] | None:
    cr = alpha_crossings(poly)
    if len(cr) < 2:
        return None
    rank = {x: r for r, x in enumerate(sorted(x for _, x in cr))}
    for k in range(len(cr) - 1):
        (j1, xq), (j2, xr) = cr[k], cr[k + 1]
        if abs(rank[xq] - rank[xr]) != 1:
            continue
        bigon = [(xq, Fraction(0))] + [
            (Fraction(x), Fraction(y)) for x, y in poly[j1 + 1 : j2 + 1]
        ] + [(xr, Fraction(0))]
        if any(point_in_polygon(p, bigon) for p in PUNCTURES + (BASEPOINT,)):
            continue
        replaced = _reroute(poly, j1, j2, xq, xr)
        if replaced is None:
            raise SubdivisionLimit("could not reroute an empty bigon")
        return replaced
    return None


def _point_towards(a: Point, q, lam: Fraction) -> Point:
    """Grid point a fraction ``lam`` of the way from ``q`` back to ``a``."""
    qx, qy = q
    return (round(qx + (a[0] - qx) * lam), round(qy + (a[1] - qy) * lam))


def _reroute(poly, j1, j2, xq, xr) -> list[Point] | None:
    """Replace the bigon side of beta by a chord just outside alpha.

    The new path leaves segment j1 shortly before it reaches alpha and rejoins
    segment j2 shortly after it leaves, running on the outer side of alpha.
    """
    u0, v1 = poly[j1], poly[j2 + 1]
    q, r = (xq, 0), (xr, 0)
    head, tail = poly[: j1 + 1], poly[j2 + 1 :]
    lam = Fraction(1, 2)
    for _ in range(60):
        a = _point_towards(u0, q, lam)
        b = _point_towards(v1, r, lam)
        lam /= 2
        if a[1] == 0 or b[1] == 0 or (a[1] > 0) != (u0[1] > 0) or a in (u0, b) or b == v1:
            continue
        out = head + [a, b] + tail
        if not is_simple(out):
            continue
        region = [(Fraction(x), Fraction(y)) for x, y in poly[j1 + 1 : j2 + 1]]
        region = [(Fraction(xq), Fraction(0))] + region + [
            (Fraction(xr), Fraction(0)),
            (Fraction(b[0]), Fraction(b[1])),
            (Fraction(a[0]), Fraction(a[1])),
        ]
        if not any(point_in_polygon(p, region) for p in PUNCTURES + (BASEPOINT,)):
            return out
    return None


def remove_bigons(poly: list[Point], cap: int = 10_000) -> list[Point]:
    for _ in range(cap):
        nxt = _try_remove_bigon(poly)
        if nxt is None:
            return poly
        poly = nxt
    raise SubdivisionLimit("bigon removal did not stabilize")


def _ray_steps(a, b) -> int:
    """Signed crossings of the downward rays by segment ab (half-open in x)."""
    total = 0
    (x1, y1), (x2, y2) = a, b
    for px, _ in PUNCTURES:
        if (x1 >= px) == (x2 >= px):
            continue
        # sign of the segment's height at x = px
        num = y1 * (x2 - x1) + (y2 - y1) * (px - x1)
        if (num < 0) == (x2 > x1):
            total += 1 if x2 >= px else -1
    return total


def level_differences(poly: list[Point]) -> tuple[int, ...]:
    """Deck-level step along beta between consecutive crossings with alpha."""
    cr = alpha_crossings(poly)
    out = []
    for (j1, x1), (j2, x2) in zip(cr, cr[1:]):
        steps = _ray_steps((x1, 0), poly[j1 + 1])
        for i in range(j1 + 1, j2):
            steps += _ray_steps(poly[i], poly[i + 1])
        steps += _ray_steps(poly[j2], (x2, 0))
        out.append(RAY_SIGN * steps)
    return tuple(out)


def trace(phi) -> PlArcDiagram:
    """Image of beta_0 under ``phi`` with empty bigons against alpha removed."""
    phi = as_braid(phi)
    if len(phi) > MAX_LENGTH:
        raise InputError(f"PL oracle handles words of length <= {MAX_LENGTH}")
    codes = phi.codes if LEFT_TO_RIGHT else tuple(reversed(phi.codes))
    poly = list(BETA_0)
    for c in codes:
        poly = apply_twist(poly, c)
    poly = remove_bigons(_nudge(poly))
    if not is_simple(poly):
        raise SubdivisionLimit("final arc is not simple")
    return PlArcDiagram(poly)


def pl_arc_oracle(phi) -> tuple[int, tuple[int, ...]]:
    """Crossings of beta with alpha and the level steps between them."""
    phi = as_braid(phi)
    if permutation(phi) != (1, 2, 3):
        raise NotPureBraid(f"{phi} does not fix the punctures")
    poly = trace(phi).polyline
    return len(alpha_crossings(poly)), level_differences(poly)
