# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled element-order tally for direct products of finite components.

Mirrors ``_tally_py.tally_orders``; see that module for the contract.
"""

from libc.stdlib cimport malloc, free


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline long long _lcm(long long a, long long b) noexcept nogil:
    return a // _gcd(a, b) * b


cdef inline Py_ssize_t _find(const long long *vals, Py_ssize_t n, long long v) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n - 1, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if vals[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    return lo


def tally_orders(order_arrays, long long lead_start, long long lead_stop, order_values):
    cdef Py_ssize_t ncomp = len(order_arrays)
    cdef Py_ssize_t nvals = len(order_values)
    cdef Py_ssize_t i, j, total = 0
    cdef long long v
    if ncomp == 0 or lead_start >= lead_stop:
        return {}
    for arr in order_arrays:
        total += len(arr)

    cdef long long *sizes = <long long *>malloc(ncomp * sizeof(long long))
    cdef long long *offsets = <long long *>malloc(ncomp * sizeof(long long))
    cdef long long *flat = <long long *>malloc(total * sizeof(long long))
    cdef long long *digits = <long long *>malloc(ncomp * sizeof(long long))
    cdef long long *prefix = <long long *>malloc((ncomp + 1) * sizeof(long long))
    cdef long long *vals = <long long *>malloc(nvals * sizeof(long long))
    cdef long long *counts = <long long *>malloc(nvals * sizeof(long long))
    if not (sizes and offsets and flat and digits and prefix and vals and counts):
        free(sizes); free(offsets); free(flat); free(digits); free(prefix)
        free(vals); free(counts)
        raise MemoryError()

    try:
        j = 0
        for i, arr in enumerate(order_arrays):
            sizes[i] = len(arr)
            offsets[i] = j
            for v in arr:
                flat[j] = v
                j += 1
        for i, v in enumerate(order_values):
            vals[i] = v
            counts[i] = 0

        with nogil:
            for i in range(ncomp):
                digits[i] = 0
            digits[0] = lead_start
            prefix[0] = 1
            for i in range(ncomp):
                prefix[i + 1] = _lcm(prefix[i], flat[offsets[i] + digits[i]])
            while True:
                counts[_find(vals, nvals, prefix[ncomp])] += 1
                i = ncomp - 1
                while i >= 0:
                    digits[i] += 1
                    if digits[i] < (sizes[i] if i > 0 else lead_stop):
                        break
                    digits[i] = 0
                    i -= 1
                if i < 0:
                    break
                for j in range(i, ncomp):
                    prefix[j + 1] = _lcm(prefix[j], flat[offsets[j] + digits[j]])

        result = {}
        for i in range(nvals):
            if counts[i]:
                result[vals[i]] = counts[i]
        return result
    finally:
        free(sizes); free(offsets); free(flat); free(digits); free(prefix)
        free(vals); free(counts)
