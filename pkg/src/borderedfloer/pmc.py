"""Pointed matched circles.

A circle with basepoint z, 4k marked points ordered by cutting at z, a 2-to-1
matching onto [2k] class labels, and a point orientation (1 for "-", 0 for
"+").  Validity includes the convention that the negative point of each class
comes first, and that surgering the circle along all matched pairs yields a
connected 1-manifold.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (BadOrientationPair, DisconnectedSurgery,
                     NonSurjectiveMatching, SchemaViolation)

NEG, POS = 1, 0


@dataclass(frozen=True)
class PointedMatchedCircle:
    matching: tuple  # point p (1-based) -> class, as matching[p-1]
    orientation: tuple  # point p -> 1 ("-") or 0 ("+")

    @property
    def n(self):
        return len(self.matching)

    @property
    def k(self):
        return len(self.matching) // 4

    @property
    def num_classes(self):
        return len(self.matching) // 2

    def cls(self, p):
        return self.matching[p - 1]

    def o(self, p):
        return self.orientation[p - 1]

    def class_points(self, j):
        pts = tuple(p for p in range(1, self.n + 1) if self.cls(p) == j)
        return pts

    def partner(self, p):
        a, b = self.class_points(self.cls(p))
        return b if p == a else a

    def class_min(self, j):
        return self.class_points(j)[0]

    @property
    def subordinate(self):
        """Minus points ordered by class index."""
        minus = [self.class_points(j)[0] for j in range(1, self.num_classes + 1)]
        return minus == sorted(minus)

    def homology_basis(self):
        """Ordered intervals [a_j^-, a_j^+] in point indices, one per class."""
        return [self.class_points(j) for j in range(1, self.num_classes + 1)]

    # serialization -------------------------------------------------------
    def to_json(self):
        return {"points": self.n,
                "matching": list(self.matching),
                "orientation": ["-" if x == NEG else "+" for x in self.orientation]}

    @classmethod
    def from_json(cls, obj):
        try:
            n = int(obj["points"])
            matching = tuple(int(x) for x in obj["matching"])
            orientation = tuple(
                {"-": NEG, "+": POS}[x] for x in obj["orientation"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaViolation(f"bad pmc JSON: {exc}") from exc
        if len(matching) != n or len(orientation) != n:
            raise SchemaViolation("pmc field lengths disagree with 'points'")
        return cls(matching, orientation)

    @classmethod
    def from_file(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def _surgery_components(pmc):
    """Number of circles after surgering along all matched pairs.

    Arc s runs from point s to point s+1 (arc n through z); the successor of
    the arc ending at p is the arc starting at partner(p).  Component count is
    the number of cycles of the successor permutation.
    """
    n = pmc.n
    succ = {}
    for s in range(1, n + 1):
        end = s + 1 if s < n else 1
        succ[s] = pmc.partner(end)
    seen = set()
    comps = 0
    for s in range(1, n + 1):
        if s in seen:
            continue
        comps += 1
        while s not in seen:
            seen.add(s)
            s = succ[s]
    return comps


def validate(pmc):
    """Check all invariants; raises on failure, returns True otherwise."""
    n = pmc.n
    if n == 0 or n % 4 != 0:
        raise NonSurjectiveMatching(f"need a positive multiple of 4 points, got {n}")
    if any(x not in (0, 1) for x in pmc.orientation):
        raise BadOrientationPair("orientations must be 0 (+) or 1 (-)")
    for j in range(1, n // 2 + 1):
        pts = pmc.class_points(j)
        if len(pts) != 2:
            raise NonSurjectiveMatching(
                f"class {j} has {len(pts)} points, expected 2")
        lo, hi = pts
        if pmc.o(lo) != NEG or pmc.o(hi) != POS:
            raise BadOrientationPair(
                f"class {j} must have its negative point first (points {pts})")
    if any(not 1 <= c <= n // 2 for c in pmc.matching):
        raise NonSurjectiveMatching("class labels out of range")
    comps = _surgery_components(pmc)
    if comps != 1:
        raise DisconnectedSurgery(f"surgery yields {comps} circles")
    return True


def is_valid(pmc):
    from .errors import BorderedFloerError
    try:
        return validate(pmc)
    except BorderedFloerError:
        return False


def reverse(pmc):
    """-Z: reverse the point order, flip every orientation, keep class labels."""
    n = pmc.n
    matching = tuple(pmc.matching[n - i] for i in range(1, n + 1))
    orientation = tuple(1 - pmc.orientation[n - i] for i in range(1, n + 1))
    return PointedMatchedCircle(matching, orientation)


def connected_sum(p1, p2):
    """p1 # p2: all of p1's points before p2's; p2's classes offset."""
    off = p1.num_classes
    matching = p1.matching + tuple(c + off for c in p2.matching)
    orientation = p1.orientation + p2.orientation
    return PointedMatchedCircle(matching, orientation)


# built-in circles --------------------------------------------------------
def genus1():
    return PointedMatchedCircle((1, 2, 1, 2), (NEG, NEG, POS, POS))


def genus2_split():
    return connected_sum(genus1(), genus1())


def trefoil_pmc():
    """The 8-point circle Z # -Z used by the trefoil complement data."""
    return connected_sum(genus1(), reverse(genus1()))
