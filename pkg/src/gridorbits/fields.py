"""Exact coefficient fields: rationals and small Galois fields.

Rationals are ``fractions.Fraction`` values; elements of GF(q) are the
integers 0..q-1 (for q = p^k with k > 1 the integer encodes a polynomial
over F_p in base p).  Every operation is exact; nothing here ever touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class RationalField:
    """Arbitrary-precision rational arithmetic (singleton ``QQ``)."""

    zero = Fraction(0)
    one = Fraction(1)
    char = 0

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    @staticmethod
    def div(a, b):
        return Fraction(a) / b

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def from_fraction(x):
        return Fraction(x)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def _factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, k
    raise ValueError(f"{q} is not a prime power")


def _poly_mul_mod(a, b, mod_poly, p):
    """Multiply two F_p[x] polynomials (coefficient lists, low degree first)
    and reduce modulo mod_poly (monic)."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    deg_m = len(mod_poly) - 1
    while len(prod) > deg_m:
        lead = prod.pop()
        if lead:
            shift = len(prod) - deg_m
            for t in range(deg_m):
                prod[shift + t] = (prod[shift + t] - lead * mod_poly[t]) % p
    return prod


def _find_irreducible(p, k):
    """Smallest monic irreducible polynomial of degree k over F_p, found by
    checking that x^(p^k) = x and x^(p^(k/l)) != x for proper prime divisors l."""
    # Irreducibility test by brute force over the few candidates we need
    # (q <= a few hundred): a degree-k poly is irreducible iff it has no
    # root chain, i.e. no factor of smaller degree; test by trial division
    # against all monic polynomials of degree 1..k//2.
    def polys(deg):
        # all monic polynomials of given degree, low coefficients first
        span = p ** deg
        for code in range(span):
            coeffs = []
            c = code
            for _ in range(deg):
                coeffs.append(c % p)
                c //= p
            yield coeffs + [1]

    def divides(d, f):
        rem = list(f)
        while len(rem) >= len(d) and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < len(d):
                break
            lead = rem[-1]
            shift = len(rem) - len(d)
            for t in range(len(d)):
                rem[shift + t] = (rem[shift + t] - lead * d[t]) % p
            while rem and rem[-1] == 0:
                rem.pop()
        return not any(rem)

    for cand in polys(k):
        if all(not divides(d, cand) for deg in range(1, k // 2 + 1) for d in polys(deg)):
            return cand
    raise AssertionError("no irreducible polynomial found")


class GaloisField:
    """GF(q) for a prime power q, with table-based arithmetic for k > 1.

    Elements are ints in range(q).  For k > 1 the integer n encodes the
    polynomial sum_i c_i x^i with n = sum_i c_i p^i.
    """

    def __init__(self, q):
        p, k = _factor_prime_power(q)
        self.q = q
        self.p = p
        self.k = k
        self.char = p
        self.zero = 0
        self.one = 1
        if k == 1:
            self._mul_table = None
            self._inv_table = [0] + [pow(a, p - 2, p) for a in range(1, p)]
        else:
            mod_poly = _find_irreducible(p, k)[:-1]
            decode = []
            for n in range(q):
                c, coeffs = n, []
                for _ in range(k):
                    coeffs.append(c % p)
                    c //= p
                decode.append(coeffs)

            def encode(coeffs):
                n = 0
                for c in reversed(coeffs[:k] + [0] * (k - len(coeffs))):
                    n = n * p + c
                return n

            table = [[0] * q for _ in range(q)]
            for a in range(q):
                for b in range(q):
                    table[a][b] = encode(_poly_mul_mod(decode[a], decode[b], mod_poly + [1], p))
            self._mul_table = table
            inv = [0] * q
            for a in range(1, q):
                for b in range(1, q):
                    if table[a][b] == 1:
                        inv[a] = b
                        break
            self._inv_table = inv

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        # coefficientwise addition in base p
        n, mult = 0, 1
        for _ in range(self.k):
            n += ((a + b) % self.p) * mult
            a //= self.p
            b //= self.p
            mult *= self.p
        return n

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        n, mult = 0, 1
        for _ in range(self.k):
            n += ((-a) % self.p) * mult
            a //= self.p
            mult *= self.p
        return n

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        return self._mul_table[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv_table[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, x):
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator of {x} not invertible mod {self.p}")
        return self.mul(self.from_int(x.numerator), self.inv(self.from_int(x.denominator)))

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def GF(q):
    """Cached GF(q) instance for a prime power q."""
    return GaloisField(q)


def is_prime_power(q):
    try:
        _factor_prime_power(q)
        return True
    except ValueError:
        return False
