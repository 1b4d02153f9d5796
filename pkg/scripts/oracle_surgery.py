"""Brute-force surgery connectivity oracle.

Counts, over every perfect matching of n points on a circle, how many give a
connected 1-manifold after surgering along all matched pairs.  Uses union-find
over the n boundary arcs (arc s runs from point s to point s+1, cyclically),
gluing arc(p-1)~arc(q) and arc(q-1)~arc(p) for each matched pair {p,q}.

Run from the repo root: python scripts/oracle_surgery.py
"""

from itertools import combinations


def matchings(points):
    points = list(points)
    if not points:
        yield []
        return
    first = points[0]
    for j in range(1, len(points)):
        rest = points[1:j] + points[j + 1:]
        for m in matchings(rest):
            yield [(first, points[j])] + m


def components(n, pairing):
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def arc_ending_at(p):  # arc s ends at s+1; the arc ending at p starts at p-1
        return p - 1 if p > 1 else n

    for p, q in pairing:
        union(arc_ending_at(p), q)
        union(arc_ending_at(q), p)
    return len({find(a) for a in range(1, n + 1)})


def main():
    for n in (4, 8):
        total = 0
        connected = 0
        per_count = {}
        for pairing in matchings(range(1, n + 1)):
            total += 1
            c = components(n, pairing)
            per_count[c] = per_count.get(c, 0) + 1
            if c == 1:
                connected += 1
        print(f"n={n}: {total} matchings, {connected} connected, "
              f"component histogram {dict(sorted(per_count.items()))}")
    # spot values used in tests
    print("(1,2,1,2) components:", components(4, [(1, 3), (2, 4)]))
    print("(1,1,2,2) components:", components(4, [(1, 2), (3, 4)]))
    print("(1,2,2,1) components:", components(4, [(1, 4), (2, 3)]))


if __name__ == "__main__":
    main()
