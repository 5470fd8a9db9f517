# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of :mod:`vroots._pykernels`; same signatures and results."""


cpdef int sign_at(tuple coeffs, object num, object den):
    cdef Py_ssize_t k = len(coeffs) - 1
    cdef Py_ssize_t i
    cdef object acc, pw
    if k < 0:
        return 0
    acc = coeffs[k]
    pw = den
    for i in range(k - 1, -1, -1):
        acc = acc * num + coeffs[i] * pw
        pw = pw * den
    if acc > 0:
        return 1
    if acc < 0:
        return -1
    return 0


cpdef int variations(list seq, object num, object den):
    cdef int count = 0
    cdef int last = 0
    cdef int s
    cdef tuple coeffs
    for coeffs in seq:
        s = sign_at(coeffs, num, den)
        if s != 0:
            if last != 0 and s != last:
                count += 1
            last = s
    return count


def bisect(tuple coeffs, object lo, object hi, object den, object width_num, object width_den):
    cdef int s_lo = sign_at(coeffs, lo, den)
    cdef int s
    cdef object mid
    while (hi - lo) * width_den > width_num * den:
        mid = lo + hi
        lo = lo << 1
        hi = hi << 1
        den = den << 1
        s = sign_at(coeffs, mid, den)
        if s == 0:
            return mid, mid, den, True
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi, den, False


cpdef int centered_sign(tuple coeffs, tuple dabs, object lo, object hi, object den):
    cdef Py_ssize_t n = len(coeffs) - 1
    cdef Py_ssize_t k, i
    cdef object big_d, m, acc, pw, rb, bound
    if n < 0:
        return 0
    big_d = den << 1
    m = lo + hi
    acc = coeffs[n]
    pw = big_d
    for i in range(n - 1, -1, -1):
        acc = acc * m + coeffs[i] * pw
        pw = pw * big_d
    if n == 0:
        return (acc > 0) - (acc < 0)
    rb = max(abs(lo), abs(hi)) << 1
    k = len(dabs) - 1
    bound = dabs[k]
    pw = big_d
    for i in range(k - 1, -1, -1):
        bound = bound * rb + dabs[i] * pw
        pw = pw * big_d
    bound = bound * (hi - lo)
    if abs(acc) > bound:
        return 1 if acc > 0 else -1
    return 0
