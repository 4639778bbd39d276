"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A CycNum is stored as a rational coefficient vector on the power basis
1, z, ..., z^(phi(n)-1) of Q(zeta_n), reduced modulo the n-th cyclotomic
polynomial.  The representation is canonical for a fixed conductor, so
equality of values at a common conductor is coefficient equality.  Mixed
conductors promote to the lcm.

All trigonometric quantities at angles k*pi/p (cotangent, cosecant, cosine)
are expressed inside these fields, e.g.

    cot(a*pi/p) = -i (1 + z^a) / (1 - z^a),   z = zeta_p,

so products like cot*cot, csc^2 and csc*cot are exact field elements with
no floating point anywhere.  Decimal embeddings exist only for display and
for comparison against published 5-decimal tables.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

QPoly = tuple[Fraction, ...]  # dense, low degree first


# ---------------------------------------------------------------------------
# small polynomial helpers


def _ptrim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _ptrim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _ptrim([x - y for x, y in zip(a, b)])


def _pdivmod(a, b):
    """Euclidean division of polynomials; exact rational arithmetic."""
    a = _ptrim(list(a))
    b = _ptrim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b):
        f = a[-1] / lead
        k = len(a) - len(b)
        q[k] = f
        for i, y in enumerate(b):
            a[k + i] -= f * y
        a = _ptrim(a)
        if not a:
            break
    return _ptrim(q), a


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    count = 0
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    if n == 1:
        return 1
    m, out = n, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> QPoly:
    """Phi_n as Mobius product of (x^d - 1)^{mu(n/d)} over divisors d of n."""
    num: list[Fraction] = [Fraction(1)]
    den: list[Fraction] = [Fraction(1)]
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = _mobius(n // d)
        if mu == 0:
            continue
        factor = [Fraction(-1)] + [Fraction(0)] * (d - 1) + [Fraction(1)]  # x^d - 1
        if mu == 1:
            num = _pmul(num, factor)
        else:
            den = _pmul(den, factor)
    q, r = _pdivmod(num, den)
    assert not r, "cyclotomic division not exact"
    assert len(q) - 1 == euler_phi(n)
    return tuple(q)


def _reduce(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    _, r = _pdivmod(coeffs, list(phi))
    r = list(r) + [Fraction(0)] * (euler_phi(n) - len(r))
    return tuple(r)


class CycNum:
    """Element of Q(zeta_n) on the reduced power basis.  Immutable."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        if n < 1:
            raise ValueError("conductor must be positive")
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != euler_phi(n):
            coeffs = list(_reduce(coeffs, n))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("CycNum is immutable")

    # -- construction -------------------------------------------------

    @classmethod
    def rational(cls, x) -> "CycNum":
        return cls(1, [Fraction(x)])

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycNum":
        if n < 1:
            raise ValueError("conductor must be positive")
        k %= n
        mono = [Fraction(0)] * k + [Fraction(1)]
        return cls(n, _reduce(mono, n))

    # -- conductor handling -------------------------------------------

    def promoted(self, m: int) -> "CycNum":
        """The same value viewed in Q(zeta_m), n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("can only promote to a multiple of the conductor")
        step = m // self.n
        out = [Fraction(0)] * (max(1, (len(self.coeffs) - 1) * step + 1))
        for i, c in enumerate(self.coeffs):
            out[i * step] += c
        return CycNum(m, _reduce(out, m))

    @staticmethod
    def _common(a: "CycNum", b: "CycNum"):
        if a.n == b.n:
            return a, b
        m = a.n * b.n // gcd(a.n, b.n)
        return a.promoted(m), b.promoted(m)

    @staticmethod
    def _coerce(x) -> "CycNum":
        if isinstance(x, CycNum):
            return x
        if isinstance(x, (int, Fraction)):
            return CycNum.rational(x)
        return NotImplemented  # type: ignore[return-value]

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(self, other)
        return CycNum(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(self, other)
        prod = _pmul(list(a.coeffs), list(b.coeffs))
        return CycNum(a.n, _reduce(prod, a.n))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in Q[x]: maintain r_k = s_k * self (mod Phi_n)
        phi = list(cyclotomic_polynomial(self.n))
        r0, s0 = phi, [Fraction(0)]
        r1, s1 = _ptrim(list(self.coeffs)), [Fraction(1)]
        while r1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        assert len(r0) == 1, "gcd with cyclotomic polynomial not constant"
        inv = [x / r0[0] for x in s0]
        return CycNum(self.n, _reduce(inv, self.n))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(self, other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNum.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(self, other)
        return a.coeffs == b.coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def galois(self, k: int) -> "CycNum":
        """The conjugate under zeta -> zeta^k, gcd(k, n) = 1."""
        if gcd(k, self.n) != 1:
            raise ValueError("galois exponent must be coprime to the conductor")
        out = [Fraction(0)] * self.n
        for i, c in enumerate(self.coeffs):
            out[(i * k) % self.n] += c
        return CycNum(self.n, _reduce(out, self.n))

    def conjugate(self) -> "CycNum":
        return self.galois(-1 % self.n) if self.n > 1 else self

    def is_real(self) -> bool:
        return self == self.conjugate()

    def as_rational(self) -> Fraction | None:
        """The rational value, or None if the element is irrational."""
        if any(c != 0 for c in self.coeffs[1:]):
            return None
        return self.coeffs[0]

    # -- display ----------------------------------------------------------

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = "z%d" % self.n if i == 1 else "z%d^%d" % (self.n, i)
                if c == 1:
                    terms.append(mon)
                elif c == -1:
                    terms.append("-" + mon)
                else:
                    terms.append("%s*%s" % (c, mon))
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def cyc_make(n: int, k: int) -> CycNum:
    """zeta_n^k in canonical form.  cyc_make(n, 0) is 1."""
    return CycNum.zeta(n, k)


def as_rational(x: CycNum) -> Fraction | None:
    """The rational value of x, or None when x is irrational."""
    return x.as_rational()


def cot_product(p: int, a: int, b: int) -> CycNum:
    """-cot(a*pi/p) * cot(b*pi/p) as (1+z^a)(1+z^b) / ((1-z^a)(1-z^b))."""
    a %= p
    b %= p
    if a == 0 or b == 0:
        raise ValueError("cotangent pole: residue 0 mod %d" % p)
    one = CycNum.rational(1)
    za, zb = CycNum.zeta(p, a), CycNum.zeta(p, b)
    return ((one + za) * (one + zb)) / ((one - za) * (one - zb))


def csc_squared(p: int, c: int) -> CycNum:
    """csc(c*pi/p)^2 = 4 / ((1-z^c)(1-z^-c))."""
    c %= p
    if c == 0:
        raise ValueError("cosecant pole: residue 0 mod %d" % p)
    one = CycNum.rational(1)
    zc, zmc = CycNum.zeta(p, c), CycNum.zeta(p, -c)
    return CycNum.rational(4) / ((one - zc) * (one - zmc))


def cos_angle(p: int, c: int) -> CycNum:
    """cos(c*pi/p).  For odd p this lands in Q(zeta_p) directly, using
    zeta_{2p} = -zeta_p^{(p+1)/2}; otherwise conductor 2p is used."""
    if p % 2:
        h = (c * (p + 1) // 2) % p
        zh = CycNum.zeta(p, h)
        return (zh + zh.inverse()) * Fraction((-1) ** (c % 2), 2)
    z = CycNum.zeta(2 * p, c)
    return (z + z.inverse()) * Fraction(1, 2)


def csc_cot(p: int, c: int) -> CycNum:
    """csc(c*pi/p) * cot(c*pi/p) = cos(c*pi/p) / sin(c*pi/p)^2."""
    c %= p
    if c == 0:
        raise ValueError("pole: residue 0 mod %d" % p)
    return cos_angle(p, c) * csc_squared(p, c)


def embed_real(x: CycNum, digits: int = 15):
    """Evaluate at zeta = exp(2*pi*i/n); returns (real, imag) as mpf.

    Working precision is digits + 25 decimal places, so for the tiny
    coefficient vectors in this package the result is accurate well past
    10^-digits; re-running with larger `digits` refines in place.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    with mpmath.workdps(digits + 25):
        z = mpmath.e ** (2j * mpmath.pi / x.n)
        total = mpmath.mpc(0)
        zp = mpmath.mpc(1)
        for c in x.coeffs:
            if c:
                total += mpmath.mpf(c.numerator) / c.denominator * zp
            zp *= z
        return mpmath.mpf(total.real), mpmath.mpf(total.imag)


def embed_str(x: CycNum, digits: int = 5) -> str:
    """Fixed-decimal rendering of the real embedding; flags a nonzero
    imaginary part rather than hiding it."""
    re, im = embed_real(x, digits + 5)
    with mpmath.workdps(digits + 25):
        if abs(im) > mpmath.mpf(10) ** (-digits):
            return "%s + %si" % (_fixed(re, digits), _fixed(im, digits))
    return _fixed(re, digits)


def _fixed(v, digits: int) -> str:
    with mpmath.workdps(digits + 25):
        r = int(mpmath.nint(v * 10**digits))
    sign = "-" if r < 0 else ""
    r = abs(r)
    return "%s%d.%0*d" % (sign, r // 10**digits, digits, r % 10**digits)


def minimal_polynomial(x: CycNum) -> QPoly:
    """Monic minimal polynomial of x over Q, low degree first.

    Found as the first monic relation among the powers 1, x, x^2, ...;
    equivalently the deflated characteristic polynomial of multiplication
    by x on the power basis.
    """
    from . import linalg

    powers = [CycNum.rational(1).promoted(x.n)]
    while True:
        k = len(powers)
        target = powers[-1] * x
        # columns are the coefficient vectors of 1, x, ..., x^(k-1)
        cols = [p.coeffs for p in powers]
        a = [[cols[j][i] for j in range(k)] for i in range(len(target.coeffs))]
        sol = linalg.solve(a, list(target.coeffs))
        if sol is not None:
            return tuple([-c for c in sol] + [Fraction(1)])
        powers.append(target)


def poly_str(poly: QPoly, var: str = "t") -> str:
    """Readable rendering, high degree first, e.g. 't^2 - 4*t - 1'."""
    terms = []
    for i in range(len(poly) - 1, -1, -1):
        c = poly[i]
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            mon = var if i == 1 else "%s^%d" % (var, i)
            body = mon if abs(c) == 1 else "%s*%s" % (abs(c), mon)
        if not terms:
            terms.append(body if c > 0 else "-" + body)
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"
