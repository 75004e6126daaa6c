"""Skew (Ore) polynomials over the rational function field.

An operator is a sum c_0 + c_1*D + ... + c_d*D^d with coefficients on the
left and the commutation rule D*c = sigma(c)*D + delta(c). Two contexts
ship: the differential one (sigma = id, delta = d/dx), which is a simple
domain, and the shift one (sigma: x -> x+1, delta = 0), which is not.
Degrees in D give a two-sided Euclidean structure: division, extended
GCRD/GCLD, and LCLM/LCRM all stay exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    BothZero,
    ContextMismatch,
    DivisionByZeroOperator,
    ZeroArgument,
)
from .scalars import NEG_INF, RatFun, UniPoly

DIFFERENTIAL = "differential"
SHIFT = "shift"

_binom = math.comb


class OreContext:
    """Instantiation data for the operator ring: twist, derivation, simplicity.

    Only two combinations are valid: (identity, d/dx) and (x -> x+1, zero).
    The first is simple; the second is not (the operator symbol generates a
    proper two-sided ideal).
    """

    __slots__ = ("kind",)

    def __init__(self, twist: str, derivation: str):
        if twist == "identity" and derivation == "d/dx":
            self.kind = DIFFERENTIAL
        elif twist == "shift" and derivation == "zero":
            self.kind = SHIFT
        else:
            raise ValueError(
                f"unsupported (twist, derivation) pair: ({twist!r}, {derivation!r})"
            )

    @staticmethod
    def differential() -> "OreContext":
        return OreContext("identity", "d/dx")

    @staticmethod
    def shift() -> "OreContext":
        return OreContext("shift", "zero")

    @property
    def is_simple(self) -> bool:
        return self.kind == DIFFERENTIAL

    def sigma(self, c: RatFun) -> RatFun:
        return c if self.kind == DIFFERENTIAL else c.shift(1)

    def sigma_inv(self, c: RatFun) -> RatFun:
        return c if self.kind == DIFFERENTIAL else c.shift(-1)

    def sigma_pow(self, c: RatFun, k: int) -> RatFun:
        if self.kind == DIFFERENTIAL or k == 0:
            return c
        return c.shift(k)

    def delta(self, c: RatFun) -> RatFun:
        return c.derivative() if self.kind == DIFFERENTIAL else RatFun.zero()

    def __eq__(self, other) -> bool:
        return isinstance(other, OreContext) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"OreContext({self.kind})"


def _coerce_coeff(c) -> RatFun:
    if isinstance(c, RatFun):
        return c
    if isinstance(c, UniPoly):
        return RatFun.from_poly(c)
    if isinstance(c, (int, Fraction)):
        return RatFun.constant(c)
    raise TypeError(f"cannot use {type(c).__name__} as an operator coefficient")


class OrePoly:
    """Immutable skew polynomial carrying its context.

    Coefficients are stored densely, constant term first; the leading
    coefficient is nonzero unless the operator is zero.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: OreContext, coeffs=()):
        cs = [_coerce_coeff(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(ctx: OreContext) -> "OrePoly":
        return OrePoly(ctx, ())

    @staticmethod
    def one(ctx: OreContext) -> "OrePoly":
        return OrePoly(ctx, (RatFun.one(),))

    @staticmethod
    def d(ctx: OreContext) -> "OrePoly":
        """The operator symbol D."""
        return OrePoly(ctx, (RatFun.zero(), RatFun.one()))

    @staticmethod
    def from_scalar(ctx: OreContext, c) -> "OrePoly":
        return OrePoly(ctx, (_coerce_coeff(c),))

    @staticmethod
    def x(ctx: OreContext) -> "OrePoly":
        return OrePoly(ctx, (RatFun.x(),))

    # -- structure ------------------------------------------------------------

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """Units are the nonzero coefficients (degree-zero operators)."""
        return len(self.coeffs) == 1

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def leading(self) -> RatFun:
        if not self.coeffs:
            raise ValueError("zero operator has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> RatFun:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return RatFun.zero()

    def unit_inverse(self) -> "OrePoly":
        if not self.is_unit():
            raise ValueError("only degree-zero operators are invertible")
        return OrePoly(self.ctx, (self.coeffs[0].inverse(),))

    def _check(self, other: "OrePoly") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch(
                f"operands from different contexts: {self.ctx} vs {other.ctx}"
            )

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "OrePoly") -> "OrePoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.ctx, [self.coeff(k) + other.coeff(k) for k in range(n)])

    def __sub__(self, other: "OrePoly") -> "OrePoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.ctx, [self.coeff(k) - other.coeff(k) for k in range(n)])

    def __neg__(self) -> "OrePoly":
        return OrePoly(self.ctx, [-c for c in self.coeffs])

    def _apply_d(self, coeffs):
        # one left multiplication by D: c*D^j -> sigma(c)*D^(j+1) + delta(c)*D^j
        ctx = self.ctx
        out = [RatFun.zero()] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            if c.is_zero():
                continue
            out[j + 1] = out[j + 1] + ctx.sigma(c)
            out[j] = out[j] + ctx.delta(c)
        return out

    def __mul__(self, other: "OrePoly") -> "OrePoly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return OrePoly.zero(self.ctx)
        out = [RatFun.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        # d_power = D^i * other, updated incrementally
        d_power = list(other.coeffs)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, c in enumerate(d_power):
                    if not c.is_zero():
                        out[j] = out[j] + a * c
            if i + 1 < len(self.coeffs):
                d_power = self._apply_d(d_power)
        return OrePoly(self.ctx, out)

    def scale_left(self, c) -> "OrePoly":
        """Multiply by a coefficient on the left (no commutation needed)."""
        c = _coerce_coeff(c)
        return OrePoly(self.ctx, [c * a for a in self.coeffs])

    def scale_right(self, c) -> "OrePoly":
        """Multiply by a coefficient on the right.

        In the differential context this expands through the derivative
        tower of c with a denominator-free recurrence, performing a single
        normalization per output coefficient; the generic product would
        otherwise churn on huge intermediate denominators.
        """
        c = _coerce_coeff(c)
        if self.is_zero() or c.is_zero():
            return OrePoly.zero(self.ctx)
        d = len(self.coeffs) - 1
        if self.ctx.kind == SHIFT:
            return OrePoly(
                self.ctx,
                [a * self.ctx.sigma_pow(c, j) for j, a in enumerate(self.coeffs)],
            )
        # clear own denominators: p*c = (1/L) * ((L*p) * c)
        lp = _den_clearing_scale(self)
        pcs = [(lp * a).num for a in self.coeffs]
        cn, cd = c.num, c.den
        # towers: c^(k) = n_k / cd^(k+1)
        towers = [cn]
        cd_prime = cd.derivative()
        for k in range(d):
            nk = towers[-1]
            towers.append(nk.derivative() * cd - nk.scale(k + 1) * cd_prime)
        cd_pows = [UniPoly.one()]
        for _ in range(d + 1):
            cd_pows.append(cd_pows[-1] * cd)
        out = []
        lden = lp.num
        for i in range(d + 1):
            # common denominator cd^(d-i+1); terms j >= i scaled accordingly
            num = UniPoly.zero()
            for j in range(i, d + 1):
                if pcs[j].is_zero():
                    continue
                term = pcs[j].scale(_binom(j, i)) * towers[j - i] * cd_pows[d - j]
                num = num + term
            out.append(RatFun(num, cd_pows[d - i + 1] * lden))
        return OrePoly(self.ctx, out)

    def monic(self) -> "OrePoly":
        """Left-scale by the inverse of the leading coefficient."""
        if self.is_zero():
            return self
        return self.scale_left(self.leading().inverse())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrePoly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        from .exprio import print_ore  # local import to avoid a cycle

        return f"OrePoly[{self.ctx.kind}]({print_ore(self)!r})"


def ore_mul(a: OrePoly, b: OrePoly) -> OrePoly:
    """Exact product in the operator ring."""
    return a * b


def ore_divmod(a: OrePoly, b: OrePoly, side: str = "right"):
    """Euclidean division by D-degree.

    side="right" returns (q, r) with a = q*b + r; side="left" returns
    (q, r) with a = b*q + r. In both cases deg r < deg b, and (q, r) is
    unique.
    """
    if b.is_zero():
        raise DivisionByZeroOperator("division by the zero operator")
    a._check(b)
    ctx = a.ctx
    db = b.degree()
    lb = b.leading()
    q = OrePoly.zero(ctx)
    r = a
    if side == "right":
        # leading coefficient of t*D^k * b is t * sigma^k(lc b)
        while not r.is_zero() and r.degree() >= db:
            k = r.degree() - db
            t = r.leading() / ctx.sigma_pow(lb, k)
            term = OrePoly(ctx, [RatFun.zero()] * k + [t])
            q = q + term
            r = r - term * b
        return q, r
    if side == "left":
        # leading coefficient of b * t*D^k is lc b * sigma^db(t)
        while not r.is_zero() and r.degree() >= db:
            k = r.degree() - db
            t = ctx.sigma_pow(r.leading() / lb, -db)
            term = OrePoly(ctx, [RatFun.zero()] * k + [t])
            q = q + term
            r = r - b * term
        return q, r
    raise ValueError(f"side must be 'right' or 'left', not {side!r}")


def _exact_quotient(a: OrePoly, b: OrePoly, side: str) -> OrePoly:
    q, r = ore_divmod(a, b, side)
    if not r.is_zero():
        raise ValueError("division expected to be exact")
    return q


def _primitive_scale(p: OrePoly) -> RatFun:
    """Left scalar that clears coefficient denominators and the common
    numerator factor, keeping Euclidean remainder chains small."""
    lcm_den = UniPoly.one()
    for c in p.coeffs:
        if c.den.degree() > 0:
            g = lcm_den.gcd(c.den)
            lcm_den = lcm_den * (c.den.div_exact(g) if g.degree() > 0 else c.den)
    gcd_num = UniPoly.zero()
    for c in p.coeffs:
        if not c.is_zero():
            gcd_num = gcd_num.gcd(c.num)
            if gcd_num.degree() == 0:
                break
    if gcd_num.is_zero():
        gcd_num = UniPoly.one()
    return RatFun(lcm_den, gcd_num)


def _den_clearing_scale(p: OrePoly) -> RatFun:
    """Left scalar (a polynomial) clearing all coefficient denominators."""
    lcm_den = UniPoly.one()
    for c in p.coeffs:
        if c.den.degree() > 0:
            g = lcm_den.gcd(c.den)
            lcm_den = lcm_den * (c.den.div_exact(g) if g.degree() > 0 else c.den)
    return RatFun.from_poly(lcm_den)


def _triple_content(ops) -> UniPoly:
    """Common polynomial factor of every coefficient numerator across ops;
    meaningful only when all coefficients are denominator-free."""
    g = UniPoly.zero()
    for p in ops:
        for c in p.coeffs:
            if not c.is_zero():
                g = g.gcd(c.num)
                if g.degree() == 0:
                    return g
    return g


def _right_chain(a: OrePoly, b: OrePoly):
    """Fraction-free extended right-Euclid.

    Remainders are kept with primitive polynomial coefficients by
    cross-multiplying with leading coefficients instead of dividing, which
    is what keeps the chain from drowning in rational-function growth.
    Returns (r, u, v, u_last, v_last) with r the last nonzero remainder
    (so u*a + v*b = r) and u_last*a + v_last*b = 0 the terminal relation
    that carries the least common left multiple.
    """
    ctx = a.ctx
    zero = OrePoly.zero(ctx)
    e0, e1 = _den_clearing_scale(a), _den_clearing_scale(b)
    r0, u0, v0 = a.scale_left(e0), OrePoly.from_scalar(ctx, e0), zero
    r1, u1, v1 = b.scale_left(e1), zero, OrePoly.from_scalar(ctx, e1)
    while not r1.is_zero():
        if r0.degree() < r1.degree():
            r0, r1, u0, u1, v0, v1 = r1, r0, u1, u0, v1, v0
            continue
        while not r0.is_zero() and r0.degree() >= r1.degree():
            k = r0.degree() - r1.degree()
            c = ctx.sigma_pow(r1.leading(), k)
            t = OrePoly(ctx, [RatFun.zero()] * k + [r0.leading()])
            r0 = r0.scale_left(c) - t * r1
            u0 = u0.scale_left(c) - t * u1
            v0 = v0.scale_left(c) - t * v1
        g = _triple_content((r0, u0, v0))
        if g.degree() > 0:
            s = RatFun(UniPoly.one(), g)
            r0 = r0.scale_left(s)
            u0 = u0.scale_left(s)
            v0 = v0.scale_left(s)
        r0, r1, u0, u1, v0, v1 = r1, r0, u1, u0, v1, v0
    return r0, u0, v0, u1, v1


def adjoint(p: OrePoly) -> OrePoly:
    """Anti-automorphism of the differential context: x -> x, D -> -D.

    Reverses products, fixes coefficients, and is an involution, which
    turns left-divisibility questions into right-divisibility ones; the
    test suite uses it as an independent oracle for the left-sided
    operations.
    """
    if p.ctx.kind != DIFFERENTIAL:
        raise ContextMismatch("the adjoint is only defined in the differential context")
    if p.is_zero():
        return p
    d = len(p.coeffs) - 1
    # adjoint coefficient i collects (-1)^j * binom(j, i) * c_j^(j-i);
    # each c_j contributes through a denominator-free derivative tower
    out = [RatFun.zero()] * (d + 1)
    for j, cj in enumerate(p.coeffs):
        if cj.is_zero():
            continue
        sign = 1 if j % 2 == 0 else -1
        nk, dj = cj.num, cj.den
        dj_prime = dj.derivative()
        dj_pow = dj
        for k in range(j + 1):
            i = j - k
            term = RatFun(nk.scale(sign * _binom(j, i)), dj_pow)
            out[i] = out[i] + term
            if k < j:
                nk = nk.derivative() * dj - nk.scale(k + 1) * dj_prime
                dj_pow = dj_pow * dj
    return OrePoly(p.ctx, out)




def ore_xgcd(a: OrePoly, b: OrePoly, side: str = "gcrd"):
    """Extended one-sided gcd, monic.

    side="gcrd": returns (g, u, v, a1, b1) with g = u*a + v*b, a = a1*g,
    b = b1*g. side="gcld": g = a*u + b*v, a = g*a1, b = g*b1.
    """
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd of (0, 0) is undefined")
    a._check(b)
    ctx = a.ctx
    one = OrePoly.one(ctx)
    zero = OrePoly.zero(ctx)
    if side == "gcrd":
        r, u0, v0, _, _ = _right_chain(a, b)
        c = OrePoly.from_scalar(ctx, r.leading().inverse())
        g = c * r
        u, v = c * u0, c * v0
        a1 = _exact_quotient(a, g, "right") if not a.is_zero() else zero
        b1 = _exact_quotient(b, g, "right") if not b.is_zero() else zero
        return g, u, v, a1, b1
    if side == "gcld":
        if ctx.kind == DIFFERENTIAL:
            # left divisors of a are adjoints of right divisors of
            # adjoint(a); run the fast right chain there and transform
            # back, folding all normalization into one right scalar so
            # the adjoint only ever touches polynomial coefficients
            r0, u0, v0, _, _ = _right_chain(adjoint(a), adjoint(b))
            eps = RatFun.constant(Fraction(-1) ** r0.degree())
            sc = r0.leading().inverse() * eps
            g = adjoint(r0).scale_right(sc)
            u, v = adjoint(u0).scale_right(sc), adjoint(v0).scale_right(sc)
            a1 = _exact_quotient(a, g, "left") if not a.is_zero() else zero
            b1 = _exact_quotient(b, g, "left") if not b.is_zero() else zero
            return g, u, v, a1, b1
        r0, r1 = a, b
        u0, v0 = one, zero
        u1, v1 = zero, one
        while not r1.is_zero():
            q, r2 = ore_divmod(r0, r1, "left")
            r0, r1 = r1, r2
            u0, u1 = u1, u0 - u1 * q
            v0, v1 = v1, v0 - v1 * q
        # right-scale so the gcd is monic: lc(g*c) = lc(g) * sigma^deg(c)
        d = r0.degree()
        c = OrePoly.from_scalar(ctx, ctx.sigma_pow(r0.leading().inverse(), -d))
        g = r0 * c
        u, v = u0 * c, v0 * c
        a1 = _exact_quotient(a, g, "left") if not a.is_zero() else zero
        b1 = _exact_quotient(b, g, "left") if not b.is_zero() else zero
        return g, u, v, a1, b1
    raise ValueError(f"side must be 'gcrd' or 'gcld', not {side!r}")


def ore_lcm(a: OrePoly, b: OrePoly, side: str = "lclm"):
    """Least common one-sided multiple, monic.

    side="lclm": returns (l, s, t) with l = s*a = t*b, certifying that the
    left multiples of a and b intersect nontrivially; side="lcrm" gives
    l = a*s = b*t for the right multiples.
    """
    if a.is_zero() or b.is_zero():
        raise ZeroArgument("lcm of a zero operator is undefined")
    a._check(b)
    ctx = a.ctx
    one = OrePoly.one(ctx)
    zero = OrePoly.zero(ctx)
    if side == "lclm":
        # the terminal relation u*a + v*b = 0 of the extended right-Euclid
        # is exactly the least common left multiple
        _, _, _, u_last, v_last = _right_chain(a, b)
        s, t = u_last, -v_last
        l = s * a
        c = OrePoly.from_scalar(ctx, l.leading().inverse())
        return c * l, c * s, c * t
    if side == "lcrm":
        if ctx.kind == DIFFERENTIAL:
            # right multiples of a are adjoints of left multiples of
            # adjoint(a); normalization again happens in one right scalar
            ta = adjoint(a)
            _, _, _, u_last, v_last = _right_chain(ta, adjoint(b))
            l_raw = u_last * ta
            eps = RatFun.constant(Fraction(-1) ** l_raw.degree())
            sc = l_raw.leading().inverse() * eps
            return (
                adjoint(l_raw).scale_right(sc),
                adjoint(u_last).scale_right(sc),
                adjoint(-v_last).scale_right(sc),
            )
        r0, r1 = a, b
        u0, u1 = one, zero
        v0, v1 = zero, one
        while not r1.is_zero():
            q, r2 = ore_divmod(r0, r1, "left")
            r0, r1 = r1, r2
            u0, u1 = u1, u0 - u1 * q
            v0, v1 = v1, v0 - v1 * q
        s, t = u1, -v1
        l = a * s
        d = l.degree()
        c = OrePoly.from_scalar(ctx, ctx.sigma_pow(l.leading().inverse(), -d))
        return l * c, s * c, t * c
    raise ValueError(f"side must be 'lclm' or 'lcrm', not {side!r}")
