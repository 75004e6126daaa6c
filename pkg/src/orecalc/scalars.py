"""Exact scalar arithmetic: rationals, small prime fields, polynomials
over the rationals, and normalized rational functions.

Rational numbers are ``fractions.Fraction`` (always reduced, positive
denominator, zero is 0/1). ``UniPoly`` is a dense univariate polynomial
over the rationals, ``RatFun`` a reduced rational function with monic
denominator, so structural equality is a correct equality test. All
values are immutable and safe to share between threads.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DivisionByZero, ZeroDenominator

Rational = Fraction

#: Degree of the zero polynomial; compares less than every integer degree.
NEG_INF = float("-inf")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FpElem:
    """Element of the prime field F_p for a prime p < 2**16."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        if not (2 <= p < 2 ** 16) or not _is_prime(p):
            raise ValueError(f"modulus {p} is not a prime below 2**16")
        self.value = value % p
        self.p = p

    def _check(self, other: "FpElem") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: "FpElem") -> "FpElem":
        self._check(other)
        return FpElem(self.value + other.value, self.p)

    def __sub__(self, other: "FpElem") -> "FpElem":
        self._check(other)
        return FpElem(self.value - other.value, self.p)

    def __mul__(self, other: "FpElem") -> "FpElem":
        self._check(other)
        return FpElem(self.value * other.value, self.p)

    def __neg__(self) -> "FpElem":
        return FpElem(-self.value, self.p)

    def inverse(self) -> "FpElem":
        if self.value == 0:
            raise DivisionByZero("inverse of 0 in F_p")
        return FpElem(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other: "FpElem") -> "FpElem":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpElem)
            and self.p == other.p
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"FpElem({self.value}, p={self.p})"


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a rational coefficient")


class UniPoly:
    """Dense univariate polynomial over the rationals, lowest degree first.

    The coefficient list never has a trailing zero; the zero polynomial has
    an empty list and degree NEG_INF.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((1,))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly((0, 1))

    @staticmethod
    def constant(c) -> "UniPoly":
        return UniPoly((c,))

    @staticmethod
    def monomial(c, k: int) -> "UniPoly":
        return UniPoly((0,) * k + (c,))

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] - other[k] for k in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly()
        # convolve integer images; one Fraction reduction per output
        # coefficient instead of one per term
        sa, ia = _int_image(self.coeffs)
        sb, ib = _int_image(other.coeffs)
        out = [0] * (len(ia) + len(ib) - 1)
        for i, a in enumerate(ia):
            if a:
                for j, b in enumerate(ib):
                    out[i + j] += a * b
        den = sa * sb
        return UniPoly([Fraction(c, den) for c in out])

    def scale(self, c) -> "UniPoly":
        c = _as_fraction(c)
        return UniPoly([c * a for a in self.coeffs])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    def divmod(self, other: "UniPoly"):
        """Exact polynomial division with remainder over the rationals.

        Runs as an integer pseudo-division on common-denominator images,
        then scales back, so the inner loop is pure integer arithmetic.
        """
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        sf, rem = _int_image(self.coeffs)
        sg, g = _int_image(other.coeffs)
        lg = g[-1]
        quo = [0] * (dq + 1)
        scale = 1
        for k in range(dq, -1, -1):
            top = rem[k + len(g) - 1]
            if top:
                # scale the running identity by lg so the new quotient
                # coefficient stays integral: lg*rem - top*x^k*g
                if lg != 1:
                    scale *= lg
                    for i in range(k + len(g)):
                        rem[i] *= lg
                    for i in range(dq, k, -1):
                        quo[i] *= lg
                quo[k] = top
                for j, b in enumerate(g):
                    rem[k + j] -= top * b
            rem.pop()
        den = sf * scale
        q_poly = UniPoly([Fraction(c * sg, den) for c in quo])
        r_poly = UniPoly([Fraction(c, den) for c in rem])
        return q_poly, r_poly

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def div_exact(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("polynomial division expected to be exact")
        return q

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd, computed on primitive integer images to keep the
        intermediate coefficients small."""
        if self.is_zero():
            return other.monic()
        if other.is_zero():
            return self.monic()
        if len(self.coeffs) == 1 or len(other.coeffs) == 1:
            return UniPoly.one()
        g = _int_poly_gcd(_to_int_coeffs(self), _to_int_coeffs(other))
        return UniPoly(g).monic()

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def compose_shift(self, delta: int) -> "UniPoly":
        """Return p(x + delta) by Horner evaluation in UniPoly arithmetic."""
        shift = UniPoly((delta, 1))
        out = UniPoly()
        for c in reversed(self.coeffs):
            out = out * shift + UniPoly.constant(c)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"


class RatFun:
    """Reduced rational function: num/den with den monic and gcd(num, den) = 1.

    The canonical form makes ``==`` on the representation a correct value
    equality. Use the module-level constructors or arithmetic; the raw
    constructor assumes already-normalized inputs.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly, _normalized: bool = False):
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def zero() -> "RatFun":
        return RatFun(UniPoly(), UniPoly.one(), _normalized=True)

    @staticmethod
    def one() -> "RatFun":
        return RatFun(UniPoly.one(), UniPoly.one(), _normalized=True)

    @staticmethod
    def x() -> "RatFun":
        return RatFun(UniPoly.x(), UniPoly.one(), _normalized=True)

    @staticmethod
    def constant(c) -> "RatFun":
        return RatFun(UniPoly.constant(c), UniPoly.one(), _normalized=True)

    @staticmethod
    def from_poly(p: UniPoly) -> "RatFun":
        return RatFun(p, UniPoly.one(), _normalized=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == UniPoly.one() and self.den == UniPoly.one()

    def is_poly(self) -> bool:
        return self.den == UniPoly.one()

    def __add__(self, other: "RatFun") -> "RatFun":
        if self.den.degree() == 0 and other.den.degree() == 0:
            num = self.num + other.num
            return RatFun(num, UniPoly.one(), _normalized=True) if not num.is_zero() else RatFun.zero()
        # with both operands reduced, any common factor of the raw sum
        # divides gcd(den, den'), so only that small gcd needs cancelling
        g = self.den.gcd(other.den)
        if g.degree() <= 0:
            num = self.num * other.den + other.num * self.den
            if num.is_zero():
                return RatFun.zero()
            return RatFun(num, self.den * other.den, _normalized=True)
        da = self.den.div_exact(g)
        db = other.den.div_exact(g)
        num = self.num * db + other.num * da
        return RatFun._reduced_over(num, self.den * db, g)

    def __sub__(self, other: "RatFun") -> "RatFun":
        return self + (-other)

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den, _normalized=True)

    def __mul__(self, other: "RatFun") -> "RatFun":
        # cross-cancel first; the product of the reduced pieces is reduced
        if self.is_zero() or other.is_zero():
            return RatFun.zero()
        n1, d2 = _cancel(self.num, other.den)
        n2, d1 = _cancel(other.num, self.den)
        return RatFun(n1 * n2, d1 * d2, _normalized=True)._monic_den()

    def __truediv__(self, other: "RatFun") -> "RatFun":
        if other.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return self * other.inverse()

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        return RatFun(self.den, self.num, _normalized=True)._monic_den()

    def _monic_den(self) -> "RatFun":
        lead = self.den.leading()
        if lead == 1:
            return self
        return RatFun(
            self.num.scale(1 / lead), self.den.scale(1 / lead), _normalized=True
        )

    @staticmethod
    def _reduced_over(num: UniPoly, den: UniPoly, probe: UniPoly) -> "RatFun":
        # num/den where every common factor already divides probe
        if num.is_zero():
            return RatFun.zero()
        g = num.gcd(probe)
        if g.degree() > 0:
            num = num.div_exact(g)
            den = den.div_exact(g)
        return RatFun(num, den, _normalized=True)._monic_den()

    def derivative(self) -> "RatFun":
        """Formal derivative d/dx via the quotient rule."""
        n, d = self.num, self.den
        return RatFun(n.derivative() * d - n * d.derivative(), d * d)

    def shift(self, delta: int) -> "RatFun":
        """Substitute x -> x + delta."""
        return RatFun(self.num.compose_shift(delta), self.den.compose_shift(delta))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatFun)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"


def _int_image(coeffs):
    """Common denominator and integer numerators for Fraction coefficients."""
    scale = 1
    for c in coeffs:
        d = c.denominator
        if d != 1:
            scale = scale * d // math.gcd(scale, d)
    return scale, [int(c * scale) for c in coeffs]


def _cancel(num: UniPoly, den: UniPoly):
    if len(num.coeffs) == 1 or len(den.coeffs) == 1:
        return num, den
    g = num.gcd(den)
    if g.degree() > 0:
        return num.div_exact(g), den.div_exact(g)
    return num, den


def _to_int_coeffs(p: UniPoly) -> list:
    scale = 1
    for c in p.coeffs:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    return [int(c * scale) for c in p.coeffs]


def _int_content(f: list) -> int:
    g = 0
    for c in f:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _int_primitive(f: list) -> list:
    g = _int_content(f)
    if g > 1:
        f = [c // g for c in f]
    if f and f[-1] < 0:
        f = [-c for c in f]
    return f


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n: int) -> bool:
    # deterministic for n < 3.3e24 with these bases
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        y = pow(b, d, n)
        if y in (1, n - 1):
            continue
        for _ in range(s - 1):
            y = y * y % n
            if y == n - 1:
                break
        else:
            return False
    return True


_PRIME_CACHE = []


def _prime_stream():
    yield from _PRIME_CACHE
    n = _PRIME_CACHE[-1] + 2 if _PRIME_CACHE else (1 << 62) + 1
    while True:
        if _is_probable_prime(n):
            _PRIME_CACHE.append(n)
            yield n
        n += 2


def _modp_gcd(f: list, g: list, p: int) -> list:
    """Monic gcd of integer coefficient lists reduced mod p."""
    a = [c % p for c in f]
    b = [c % p for c in g]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        inv = pow(b[-1], p - 2, p)
        db = len(b) - 1
        while len(a) - 1 >= db:
            lead = a[-1]
            if lead:
                q = lead * inv % p
                shift = len(a) - 1 - db
                for j, c in enumerate(b):
                    a[shift + j] = (a[shift + j] - q * c) % p
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _int_divides(f: list, h: list) -> bool:
    """True when the primitive integer polynomial h divides f exactly."""
    rem = list(f)
    lh = h[-1]
    dh = len(h) - 1
    while len(rem) - 1 >= dh:
        lead = rem[-1]
        if lead % lh != 0:
            return False
        q = lead // lh
        shift = len(rem) - 1 - dh
        for j, c in enumerate(h):
            rem[shift + j] -= q * c
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return not rem


def _int_poly_gcd(f: list, g: list) -> list:
    """Primitive gcd of integer coefficient lists by the modular method:
    gcd mod p per prime, Chinese-remainder lift, trial division to certify.
    """
    f, g = _int_primitive(f), _int_primitive(g)
    if len(f) < len(g):
        f, g = g, f
    if len(g) <= 1:
        return g if g else f
    d = math.gcd(f[-1], g[-1])
    acc = None
    modulus = 1
    for p in _prime_stream():
        if f[-1] % p == 0 or g[-1] % p == 0:
            continue
        hp = _modp_gcd(f, g, p)
        if len(hp) == 1:
            return [1]
        scaled = [c * d % p for c in hp]
        if acc is None or len(scaled) < len(acc):
            acc, modulus = scaled, p
        elif len(scaled) > len(acc):
            continue
        else:
            inv = pow(modulus, p - 2, p)
            acc = [
                a + modulus * ((b - a) * inv % p)
                for a, b in zip(acc, scaled)
            ]
            modulus *= p
        half = modulus // 2
        cand = _int_primitive([c - modulus if c > half else c for c in acc])
        if cand and _int_divides(f, cand) and _int_divides(g, cand):
            return cand


def _normalize(num: UniPoly, den: UniPoly):
    if den.is_zero():
        raise ZeroDenominator("rational function with denominator 0")
    if num.is_zero():
        return UniPoly(), UniPoly.one()
    g = num.gcd(den)
    if g.degree() > 0:
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
    lead = den.leading()
    if lead != 1:
        num = num.scale(1 / lead)
        den = den.scale(1 / lead)
    return num, den


def ratfun(num: UniPoly, den: UniPoly = None) -> RatFun:
    """Build the normalized rational function num/den."""
    if den is None:
        den = UniPoly.one()
    return RatFun(num, den)
