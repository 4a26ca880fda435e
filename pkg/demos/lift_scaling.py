"""Stretch small functions with ``lift`` and compare distances.

Convexity, anchors and the number of distinct derivatives carry over
exactly. Distance scales by k for k = 3 on this grid, but for k = 2 the
interpolated points sometimes join a longer convex chain, so the lifted
distance can fall one short of k times the original.

Run with ``python3 demos/lift_scaling.py``.
"""

import itertools

from convextest import DiscreteFunction, distance_to_convex, lift


def main():
    shortfalls = {2: [], 3: []}
    total = 0
    for s in range(3, 7):
        for vals in itertools.product(range(3), repeat=s):
            g = DiscreteFunction(vals)
            dg = distance_to_convex(g).distance
            total += 1
            for k in shortfalls:
                df = distance_to_convex(lift(g, k)).distance
                if df < k * dg:
                    shortfalls[k].append((vals, dg, df))
    print(f"{total} base functions over s = 3..6 with values in {{0,1,2}}")
    for k, bad in shortfalls.items():
        print(f"k={k}: {len(bad)} lifts below k*distance")
        for vals, dg, df in bad[:4]:
            print(f"    g={vals}: distance {dg}, lifted {df}")

    g = DiscreteFunction([1, 1, 2, 0, 2])
    f = lift(g, 2)
    print("example lift:", [str(v) for v in f.values])
    print("kept after repair:", distance_to_convex(f).witness_keep)


if __name__ == "__main__":
    main()
