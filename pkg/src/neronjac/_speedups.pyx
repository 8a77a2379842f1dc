# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernel; mirrors _kernel_py.enumerate_box exactly.

All quantities are pre-scaled integers supplied by the caller, so the hot
loop is pure 64-bit arithmetic.  Inputs at the scale this package targets
(census graphs, |values| well below 10**6) cannot overflow.
"""

from libc.stdlib cimport malloc, free

KERNEL_NAME = "compiled"

DEF MAX_N = 62


def enumerate_box(lows, highs, total, masks, thresholds, scale):
    cdef int n = len(lows)
    if n != len(highs):
        raise ValueError("lows and highs must have equal length")
    if len(masks) != len(thresholds):
        raise ValueError("masks and thresholds must have equal length")
    if n > MAX_N:
        raise ValueError("too many coordinates for the compiled kernel")

    cdef int i, v, depth
    cdef long long c_scale = scale
    cdef long long c_total = total

    cdef long long c_lows[MAX_N]
    cdef long long c_highs[MAX_N]
    for i in range(n):
        c_lows[i] = lows[i]
        c_highs[i] = highs[i]
        if c_lows[i] > c_highs[i]:
            return []

    cdef int n_cons = len(masks)
    cdef unsigned long long* c_masks = <unsigned long long*> malloc(n_cons * sizeof(unsigned long long))
    cdef long long* c_thr = <long long*> malloc(n_cons * sizeof(long long))
    # constraints sorted by the depth at which they become checkable
    cdef int* first_at = <int*> malloc((n + 1) * sizeof(int))
    if c_masks == NULL or c_thr == NULL or first_at == NULL:
        free(c_masks); free(c_thr); free(first_at)
        raise MemoryError()

    order = sorted(range(n_cons), key=lambda k: masks[k].bit_length())
    cdef int pos = 0
    cdef int d
    try:
        for d in range(n + 1):
            first_at[d] = pos
            if d == n:
                break
            for k in order[pos:]:
                if masks[k].bit_length() - 1 != d:
                    break
                m = masks[k]
                if m <= 0 or m >> n:
                    raise ValueError(f"mask {m} out of range for {n} coordinates")
                c_masks[pos] = m
                c_thr[pos] = thresholds[k]
                pos += 1
        first_at[n] = pos

        return _search(n, c_lows, c_highs, c_total, c_scale,
                       c_masks, c_thr, first_at)
    finally:
        free(c_masks)
        free(c_thr)
        free(first_at)


cdef list _search(int n, long long* lows, long long* highs,
                  long long total, long long scale,
                  unsigned long long* masks, long long* thr, int* first_at):
    cdef long long suffix_lo[MAX_N + 1]
    cdef long long suffix_hi[MAX_N + 1]
    cdef long long x[MAX_N]
    cdef long long running[MAX_N + 1]
    cdef long long lo_d[MAX_N]
    cdef long long hi_d[MAX_N]
    cdef int i, v, depth, k
    cdef long long lo, hi, acc
    cdef unsigned long long m
    cdef bint ok

    suffix_lo[n] = 0
    suffix_hi[n] = 0
    for i in range(n - 1, -1, -1):
        suffix_lo[i] = suffix_lo[i + 1] + lows[i]
        suffix_hi[i] = suffix_hi[i + 1] + highs[i]

    out = []
    depth = 0
    running[0] = 0
    lo = lows[0]
    if total - suffix_hi[1] > lo:
        lo = total - suffix_hi[1]
    hi = highs[0]
    if total - suffix_lo[1] < hi:
        hi = total - suffix_lo[1]
    lo_d[0] = lo
    hi_d[0] = hi
    x[0] = lo - 1

    while depth >= 0:
        x[depth] += 1
        if x[depth] > hi_d[depth]:
            depth -= 1
            continue
        ok = True
        for k in range(first_at[depth], first_at[depth + 1]):
            m = masks[k]
            acc = 0
            v = 0
            while m:
                if m & 1:
                    acc += x[v]
                m >>= 1
                v += 1
            if scale * acc < thr[k]:
                ok = False
                break
        if not ok:
            continue
        if depth == n - 1:
            if running[depth] + x[depth] == total:
                out.append(tuple([x[i] for i in range(n)]))
            continue
        running[depth + 1] = running[depth] + x[depth]
        depth += 1
        lo = lows[depth]
        if total - running[depth] - suffix_hi[depth + 1] > lo:
            lo = total - running[depth] - suffix_hi[depth + 1]
        hi = highs[depth]
        if total - running[depth] - suffix_lo[depth + 1] < hi:
            hi = total - running[depth] - suffix_lo[depth + 1]
        lo_d[depth] = lo
        hi_d[depth] = hi
        x[depth] = lo - 1

    return out
