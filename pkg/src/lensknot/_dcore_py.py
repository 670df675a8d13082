"""Pure-Python kernel for correction-term tables.

Same contract as the compiled kernel `_dcore`: ``d_table(p, q)`` returns the
list of reduced ``(numerator, denominator)`` pairs of the correction terms of
L(p, q), indexed by the recursion's Spin^c label ``i = 0 .. p-1``.

The recursion descends the Euclidean chain of (p, q):

    d(1, 0, 0) = 0
    d(p, q, i) = ((2i + 1 - p - q)^2 - pq) / (4pq) - d(q, p mod q, i mod q)

with the orientation fixed so that d(p, 1, i) = ((2i - p)^2 - p) / (4p).

Arithmetic here is plain Python integers, so it never overflows; the compiled
kernel falls back to this module when its 64-bit storage would not suffice.
"""

from __future__ import annotations

from math import gcd

BACKEND = "pure"


def _validate(p: int, q: int) -> None:
    if p < 1 or not (0 <= q < p or (p == 1 and q == 0)):
        raise ValueError(f"invalid lens-space parameters ({p}, {q})")
    if p > 1 and (q == 0 or gcd(p, q) != 1):
        raise ValueError(f"invalid lens-space parameters ({p}, {q})")


def d_table(p: int, q: int) -> list[tuple[int, int]]:
    _validate(p, q)
    chain = []
    pp, qq = p, q
    while True:
        chain.append((pp, qq))
        if qq <= 1:
            break
        pp, qq = qq, pp % qq
    if chain[-1][1] == 0:
        chain.pop()  # (1, 0) is the base case, not a recursion level

    table = [(0, 1)]  # the 3-sphere
    for P, Q in reversed(chain):
        sub = table
        new = []
        for i in range(P):
            t = 2 * i + 1 - P - Q
            n0 = t * t - P * Q
            d0 = 4 * P * Q
            ns, ds = sub[i % Q]
            g = gcd(d0, ds)
            den = d0 // g * ds
            num = n0 * (den // d0) - ns * (den // ds)
            g2 = gcd(num, den)
            new.append((num // g2, den // g2))
        table = new
    return table
