"""Planar point-in-polygon testing (ray casting)."""
from __future__ import annotations

Point = tuple[float, float]


class DegeneratePolygon(Exception):
    pass


def _signed_area(ring: list[Point]) -> float:
    area = 0.0
    n = len(ring)
    for i in range(n):
        x1, y1 = ring[i]
        x2, y2 = ring[(i + 1) % n]
        area += x1 * y2 - x2 * y1
    return area / 2.0


def _on_segment(p: Point, a: Point, b: Point, eps: float = 0.0) -> bool:
    (px, py), (ax, ay), (bx, by) = p, a, b
    cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
    if abs(cross) > eps:
        return False
    if min(ax, bx) - eps <= px <= max(ax, bx) + eps and min(ay, by) - eps <= py <= max(ay, by) + eps:
        return True
    return False


def point_in_polygon(point: Point, polygon: list[Point]) -> bool:
    """Ray-casting parity test; points on an edge or vertex count as inside.
    Coordinates are treated as planar (lat, lon) pairs."""
    ring = list(polygon)
    if ring and ring[0] == ring[-1]:
        ring = ring[:-1]
    if len(ring) < 3 or _signed_area(ring) == 0.0:
        raise DegeneratePolygon("polygon ring has zero area")

    x, y = point
    for i in range(len(ring)):
        if _on_segment(point, ring[i], ring[(i + 1) % len(ring)]):
            return True

    inside = False
    n = len(ring)
    for i in range(n):
        x1, y1 = ring[i]
        x2, y2 = ring[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            x_cross = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if x < x_cross:
                inside = not inside
    return inside
