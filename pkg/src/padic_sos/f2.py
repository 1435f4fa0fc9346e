"""Polynomials over the field with two elements, packed into integers.

Bit i of the integer is the coefficient of x^i, so addition is xor and
the zero polynomial is 0.  Provides ring arithmetic, gcd/xgcd, modular
powers, and a complete deterministic factorization (square-free split,
distinct-degree, then equal-degree splitting with trace polynomials
over a fixed sequence of test elements).
"""

from __future__ import annotations


def f2_degree(a: int) -> int:
    """Degree, with -1 for zero."""
    return a.bit_length() - 1


def f2_mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def f2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    m, n = f2_degree(a), f2_degree(b)
    if m < n:
        return 0, a
    q = 0
    b <<= m - n
    for i in range(m - n, -1, -1):
        if a >> (n + i) & 1:
            a ^= b
            q |= 1 << i
        b >>= 1
    return q, a


def f2_mod(a: int, b: int) -> int:
    return f2_divmod(a, b)[1]


def f2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, f2_mod(a, b)
    return a


def f2_xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(d, s, t) with s*a + t*b = d = gcd(a, b)."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = f2_divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 ^ f2_mul(q, s1)
        t0, t1 = t1, t0 ^ f2_mul(q, t1)
    return a, s0, t0


def f2_pow_mod(a: int, e: int, mod: int) -> int:
    result = 1
    a = f2_mod(a, mod)
    while e:
        if e & 1:
            result = f2_mod(f2_mul(result, a), mod)
        a = f2_mod(f2_mul(a, a), mod)
        e >>= 1
    return result


def f2_derivative(a: int) -> int:
    # in characteristic 2 only odd-degree terms survive
    out = 0
    i = 1
    while a >> i:
        if a >> i & 1:
            out |= 1 << (i - 1)
        i += 2
    return out


def f2_even_part_root(a: int) -> int:
    """For a with only even-degree terms, the b with b^2 = a (squaring
    spreads coefficients to doubled exponents)."""
    out = 0
    i = 0
    while a >> (2 * i):
        if a >> (2 * i) & 1:
            out |= 1 << i
        i += 1
    return out


def f2_from_coeffs(coeffs) -> int:
    a = 0
    for i, c in enumerate(coeffs):
        if int(c) % 2:
            a |= 1 << i
    return a


def f2_to_str(a: int) -> str:
    if a == 0:
        return "0"
    terms = []
    for i in range(f2_degree(a), -1, -1):
        if a >> i & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return " + ".join(terms)


def _distinct_degree(w: int) -> list[tuple[int, int]]:
    """Split square-free w into (product-of-factors, common degree) pairs."""
    out = []
    h = 2  # the polynomial x
    i = 1
    while f2_degree(w) >= 2 * i:
        h = f2_pow_mod(h, 2, w)  # x^(2^i) mod w
        g = f2_gcd(w, h ^ 2)
        if g != 1:
            out.append((g, i))
            w = f2_divmod(w, g)[0]
            h = f2_mod(h, w)
        i += 1
    if f2_degree(w) > 0:
        out.append((w, f2_degree(w)))
    return out


def _equal_degree_split(g: int, i: int) -> list[int]:
    """Factor a square-free product of degree-i irreducibles.

    Trace splitting: gcd(g, u + u^2 + u^4 + ... + u^(2^(i-1))) is a
    nontrivial divisor for about half of all u, so marching u through
    2, 3, 4, ... terminates deterministically.
    """
    if f2_degree(g) == i:
        return [g]
    u = 2
    while True:
        trace = 0
        t = f2_mod(u, g)
        for _ in range(i):
            trace ^= t
            t = f2_mod(f2_mul(t, t), g)
        d = f2_gcd(g, trace)
        if 0 < f2_degree(d) < f2_degree(g):
            rest = f2_divmod(g, d)[0]
            return _equal_degree_split(d, i) + _equal_degree_split(rest, i)
        u += 1


def f2_factor(f: int) -> list[tuple[int, int]]:
    """Complete factorization into irreducibles with multiplicities,
    sorted by (degree, bit pattern); the product reconstructs f."""
    if f == 0:
        raise ValueError("cannot factor the zero polynomial")
    factors: dict[int, int] = {}

    def absorb(g: int, weight: int) -> None:
        if f2_degree(g) < 1:
            return
        dg = f2_derivative(g)
        if dg == 0:
            absorb(f2_even_part_root(g), 2 * weight)
            return
        w = f2_divmod(g, f2_gcd(g, dg))[0]  # square-free, odd-multiplicity part
        for block, i in _distinct_degree(w):
            for p in _equal_degree_split(block, i):
                e = 0
                while f2_mod(g, p) == 0:
                    g = f2_divmod(g, p)[0]
                    e += 1
                factors[p] = factors.get(p, 0) + weight * e
        absorb(g, weight)

    absorb(f, 1)
    return sorted(factors.items(), key=lambda kv: (f2_degree(kv[0]), kv[0]))
