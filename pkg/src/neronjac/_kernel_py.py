"""Pure-Python enumeration kernel.

Enumerates integer vectors x with lows <= x <= highs (componentwise) and
sum(x) == total, subject to linear constraints of the form

    scale * sum(x[v] for v in mask) >= threshold[mask]

with all quantities integers (the caller pre-scales rational bounds by
2*(2g-2), so no floating point or fraction objects appear here).

Constraints are checked as soon as every vertex of their mask has been
assigned; combined with running bounds on the remaining sum this prunes the
depth-first search early.  Output is in lexicographic order.
"""

from __future__ import annotations

KERNEL_NAME = "python"


def enumerate_box(lows, highs, total, masks, thresholds, scale):
    """All admissible vectors as tuples, lexicographically ordered.

    lows, highs: per-coordinate inclusive bounds.
    masks: bitmasks over coordinates; thresholds: matching lower bounds on
    scale * (partial sum over the mask).
    """
    n = len(lows)
    if n != len(highs):
        raise ValueError("lows and highs must have equal length")
    if len(masks) != len(thresholds):
        raise ValueError("masks and thresholds must have equal length")
    if any(lo > hi for lo, hi in zip(lows, highs)):
        return []

    # constraints become checkable once their highest coordinate is assigned
    by_depth = [[] for _ in range(n)]
    for mask, thr in zip(masks, thresholds):
        if mask <= 0 or mask >> n:
            raise ValueError(f"mask {mask} out of range for {n} coordinates")
        depth = mask.bit_length() - 1
        verts = [v for v in range(n) if mask >> v & 1]
        by_depth[depth].append((verts, thr))

    # suffix sums of bounds for pruning the total-degree constraint
    suffix_lo = [0] * (n + 1)
    suffix_hi = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_lo[i] = suffix_lo[i + 1] + lows[i]
        suffix_hi[i] = suffix_hi[i + 1] + highs[i]

    out = []
    x = [0] * n

    def descend(depth, running):
        if depth == n:
            if running == total:
                out.append(tuple(x))
            return
        lo = max(lows[depth], total - running - suffix_hi[depth + 1])
        hi = min(highs[depth], total - running - suffix_lo[depth + 1])
        for val in range(lo, hi + 1):
            x[depth] = val
            ok = True
            for verts, thr in by_depth[depth]:
                acc = 0
                for v in verts:
                    acc += x[v]
                if scale * acc < thr:
                    ok = False
                    break
            if ok:
                descend(depth + 1, running + val)

    descend(0, 0)
    return out
