# cython: language_level=3, boundscheck=False, wraparound=False
"""Sparse exact row-elimination kernel, compiled backend.

Same contract as ``_elim_py.echelon``: integer sparse rows in, unique RREF
out. Entries are arbitrary-precision Python ints; the win over the pure
backend is typed index arithmetic in the merge loops.
"""

from bisect import bisect_left
from fractions import Fraction
from math import gcd


cdef _strip(list cols, list nums):
    cdef Py_ssize_t i, n = len(nums)
    g = 0
    for i in range(n):
        g = gcd(g, nums[i])
        if g == 1:
            return cols, nums
    if g > 1:
        nums = [v // g for v in nums]
    return cols, nums


cdef _combine(list tc, list tn, list pc, list pn, a, b):
    cdef list rc = []
    cdef list rn = []
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t li = len(tc), lj = len(pc)
    cdef Py_ssize_t ci, cj
    while i < li and j < lj:
        ci = tc[i]
        cj = pc[j]
        if ci < cj:
            rc.append(ci)
            rn.append(a * tn[i])
            i += 1
        elif ci > cj:
            rc.append(cj)
            rn.append(-b * pn[j])
            j += 1
        else:
            v = a * tn[i] - b * pn[j]
            if v:
                rc.append(ci)
                rn.append(v)
            i += 1
            j += 1
    while i < li:
        rc.append(tc[i])
        rn.append(a * tn[i])
        i += 1
    while j < lj:
        rc.append(pc[j])
        rn.append(-b * pn[j])
        j += 1
    return rc, rn


def echelon(int_rows):
    """Return ``(pivot_cols, rref_rows)``; see ``_elim_py.echelon``."""
    cdef dict by_lead = {}
    cdef Py_ssize_t seq = 0
    cdef list cols, nums, bucket, rc, rn, pc, pn, tc, tn
    for cols, nums in int_rows:
        if cols:
            by_lead.setdefault(cols[0], []).append((len(cols), seq, cols, nums))
            seq += 1
    cdef list pivots = []
    cdef Py_ssize_t bi, nb
    while by_lead:
        col = min(by_lead)
        bucket = by_lead.pop(col)
        bucket.sort(key=lambda r: (r[0], r[1]))
        pc = bucket[0][2]
        pn = bucket[0][3]
        a0 = pn[0]
        nb = len(bucket)
        for bi in range(1, nb):
            tc = bucket[bi][2]
            tn = bucket[bi][3]
            b0 = tn[0]
            g = gcd(a0, b0)
            rc, rn = _combine(tc, tn, pc, pn, a0 // g, b0 // g)
            rc, rn = _strip(rc, rn)
            if rc:
                by_lead.setdefault(rc[0], []).append((len(rc), seq, rc, rn))
                seq += 1
        pivots.append((col, pc, pn))

    cdef Py_ssize_t i, j, k, npiv = len(pivots)
    for i in range(npiv - 1, 0, -1):
        ci = pivots[i][0]
        pc = pivots[i][1]
        pn = pivots[i][2]
        a0 = pn[0]
        for j in range(i):
            tc = pivots[j][1]
            tn = pivots[j][2]
            k = bisect_left(tc, ci)
            if k < len(tc) and tc[k] == ci:
                b0 = tn[k]
                g = gcd(a0, b0)
                rc, rn = _combine(tc, tn, pc, pn, a0 // g, b0 // g)
                rc, rn = _strip(rc, rn)
                pivots[j] = (pivots[j][0], rc, rn)

    cdef list pivot_cols = []
    cdef list out = []
    for i in range(npiv):
        pivot_cols.append(pivots[i][0])
        cols = pivots[i][1]
        nums = pivots[i][2]
        lead = nums[0]
        out.append({c: Fraction(v, lead) for c, v in zip(cols, nums)})
    return pivot_cols, out
