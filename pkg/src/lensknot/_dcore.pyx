# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for correction-term tables.

Same contract as `_dcore_py.d_table`, with the recursion's inner loop run on
C integers: reduced values are stored in 64 bits and combined through 128-bit
intermediates, so every result is exact.  If a reduced numerator or
denominator would not fit in 64 bits (unreachable for the parameter ranges
the sweeps use, but possible in principle), the kernel raises OverflowError
and the caller reruns the computation on the arbitrary-precision path.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

BACKEND = "compiled"

ctypedef long long i64

cdef extern from *:
    ctypedef long long i128 "__int128"

cdef i64 I64_MAX = 9223372036854775807

cdef inline i128 gcd128(i128 a, i128 b) noexcept:
    cdef i128 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b != 0:
        t = a % b
        a = b
        b = t
    return a


def d_table(long long p, long long q):
    """Correction terms of L(p, q) as reduced (numerator, denominator) pairs."""
    if p < 1 or q < 0 or (p > 1 and q == 0) or q >= p:
        if not (p == 1 and q == 0):
            raise ValueError("invalid lens-space parameters (%d, %d)" % (p, q))
    if gcd128(p, q) != 1 and p > 1:
        raise ValueError("invalid lens-space parameters (%d, %d)" % (p, q))

    # Euclidean descent chain, excluding the (1, 0) base case.
    chain = []
    cdef i64 pp = p, qq = q, tmp
    while True:
        chain.append((pp, qq))
        if qq <= 1:
            break
        tmp = pp % qq
        pp = qq
        qq = tmp
    if chain[len(chain) - 1][1] == 0:  # (1, 0) is the base case, not a level
        chain.pop()

    cdef i64 *cur_num = <i64 *> PyMem_Malloc(sizeof(i64))
    cdef i64 *cur_den = <i64 *> PyMem_Malloc(sizeof(i64))
    if cur_num == NULL or cur_den == NULL:
        PyMem_Free(cur_num)
        PyMem_Free(cur_den)
        raise MemoryError()
    cur_num[0] = 0
    cur_den[0] = 1

    cdef i64 *new_num = NULL
    cdef i64 *new_den = NULL
    cdef i64 P, Q, i, t
    cdef i128 n0, d0, ns, ds, g, den, num, g2
    try:
        for P, Q in reversed(chain):
            new_num = <i64 *> PyMem_Malloc(P * sizeof(i64))
            new_den = <i64 *> PyMem_Malloc(P * sizeof(i64))
            if new_num == NULL or new_den == NULL:
                raise MemoryError()
            d0 = (<i128> 4) * P * Q
            for i in range(P):
                t = 2 * i + 1 - P - Q
                n0 = (<i128> t) * t - (<i128> P) * Q
                ns = cur_num[i % Q]
                ds = cur_den[i % Q]
                g = gcd128(d0, ds)
                den = (d0 // g) * ds
                num = n0 * (den // d0) - ns * (den // ds)
                g2 = gcd128(num, den)
                if g2 == 0:
                    g2 = 1
                num = num // g2
                den = den // g2
                if num > I64_MAX or num < -I64_MAX or den > I64_MAX:
                    raise OverflowError(
                        "correction term exceeds 64-bit storage at (%d, %d)" % (P, Q))
                new_num[i] = <i64> num
                new_den[i] = <i64> den
            PyMem_Free(cur_num)
            PyMem_Free(cur_den)
            cur_num = new_num
            cur_den = new_den
            new_num = NULL
            new_den = NULL
        return [(cur_num[i], cur_den[i]) for i in range(p)]
    finally:
        PyMem_Free(new_num)
        PyMem_Free(new_den)
        PyMem_Free(cur_num)
        PyMem_Free(cur_den)
