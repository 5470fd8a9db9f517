"""Pure-Python integer kernels.

Every routine works on integer polynomials given as tuples of coefficients,
lowest degree first, and on rationals given as numerator/denominator pairs
with a positive denominator.  Scaling a polynomial by a positive constant
does not change any sign, so callers pass primitive integer forms.
"""


def sign_at(coeffs, num, den):
    """Sign of ``coeffs`` evaluated at ``num/den`` (``den > 0``)."""
    k = len(coeffs) - 1
    if k < 0:
        return 0
    acc = coeffs[k]
    pw = den
    for i in range(k - 1, -1, -1):
        acc = acc * num + coeffs[i] * pw
        pw *= den
    return (acc > 0) - (acc < 0)


def variations(seq, num, den):
    """Number of sign changes of the sequence evaluated at ``num/den``."""
    count = 0
    last = 0
    for coeffs in seq:
        s = sign_at(coeffs, num, den)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def bisect(coeffs, lo, hi, den, width_num, width_den):
    """Shrink ``(lo/den, hi/den)`` around the unique simple root of ``coeffs``.

    The signs at the two endpoints must be nonzero and opposite.  Returns
    ``(lo, hi, den, exact)``; when a midpoint hits the root exactly the
    interval collapses and ``exact`` is true.
    """
    s_lo = sign_at(coeffs, lo, den)
    while (hi - lo) * width_den > width_num * den:
        mid = lo + hi
        lo <<= 1
        hi <<= 1
        den <<= 1
        s = sign_at(coeffs, mid, den)
        if s == 0:
            return mid, mid, den, True
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi, den, False


def centered_sign(coeffs, dabs, lo, hi, den):
    """Sign of ``coeffs`` on ``[lo/den, hi/den]`` if provably constant, else 0.

    ``dabs`` holds the absolute values of the derivative's coefficients.  The
    test is ``|Q(m)| > r * sum |q'_k| R^k`` with ``m`` the midpoint, ``r`` the
    radius and ``R`` the largest magnitude in the interval, cleared of
    denominators.
    """
    n = len(coeffs) - 1
    if n < 0:
        return 0
    big_d = den << 1
    m = lo + hi
    acc = coeffs[n]
    pw = big_d
    for i in range(n - 1, -1, -1):
        acc = acc * m + coeffs[i] * pw
        pw *= big_d
    if n == 0:
        return (acc > 0) - (acc < 0)
    rb = max(abs(lo), abs(hi)) << 1
    k = len(dabs) - 1
    bound = dabs[k]
    pw = big_d
    for i in range(k - 1, -1, -1):
        bound = bound * rb + dabs[i] * pw
        pw *= big_d
    bound *= hi - lo
    if abs(acc) > bound:
        return (acc > 0) - (acc < 0)
    return 0
