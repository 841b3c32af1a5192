"""Exact scalar arithmetic for the deformation parameter q.

Scalars are rational functions of q with integer coefficients.  Internally
everything is stored in the variable u = q^(1/2), because a few operators
(scaling operators raised to half powers, some Minkowski symmetry generators)
produce half-integer powers of q.  A second, rarely used extension adjoins
rt = sqrt(q + q^-1); a scalar is a + b*rt with a, b rational functions of u.

Plain polynomials over the integers are dense tuples of coefficients,
lowest degree first, with no trailing zeros; () is the zero polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

# ---------------------------------------------------------------------------
# integer-coefficient polynomial helpers (dense tuples, ascending powers)

P_ZERO = ()
P_ONE = (1,)


def pnorm(c):
    """Strip trailing zeros from a coefficient list."""
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, x in enumerate(b):
        res[i] += x
    return pnorm(res)


def pneg(a):
    return tuple(-x for x in a)


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return P_ZERO
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    return pnorm(res)


def pscale(a, k):
    if k == 0:
        return P_ZERO
    return tuple(x * k for x in a)


def pshift(a, k):
    """Multiply by u^k (k >= 0)."""
    if not a:
        return P_ZERO
    return (0,) * k + tuple(a)


def ppow(a, n):
    res = P_ONE
    base = a
    while n:
        if n & 1:
            res = pmul(res, base)
        base = pmul(base, base)
        n >>= 1
    return res


def pcontent(a):
    g = 0
    for x in a:
        g = igcd(g, abs(x))
    return g


def pprimitive(a):
    g = pcontent(a)
    if g in (0, 1):
        return a
    return tuple(x // g for x in a)


def preverse(a):
    """Coefficient reversal: a(u) -> u^deg * a(1/u)."""
    res = list(a)
    res.reverse()
    return pnorm(res)


def pgcd(a, b):
    """Primitive gcd of two integer polynomials (monic-normalized sign)."""
    a = pprimitive(pnorm(a))
    b = pprimitive(pnorm(b))
    if not a:
        return b
    if not b:
        return a
    # Euclid over the rationals, then take the primitive integer part.
    fa = [Fraction(x) for x in a]
    fb = [Fraction(x) for x in b]
    while fb:
        # fa mod fb
        da, db = len(fa) - 1, len(fb) - 1
        while da >= db and fa:
            lead = fa[-1] / fb[-1]
            for i in range(db + 1):
                fa[da - db + i] -= lead * fb[i]
            while fa and fa[-1] == 0:
                fa.pop()
            da = len(fa) - 1
        fa, fb = fb, fa
    # clear denominators
    den = 1
    for x in fa:
        den = den * x.denominator // igcd(den, x.denominator)
    ints = pnorm([int(x * den) for x in fa])
    ints = pprimitive(ints)
    if ints and ints[-1] < 0:
        ints = pneg(ints)
    return ints


def pdivexact(a, b):
    """Exact division of integer polynomials; b must divide a."""
    if not a:
        return P_ZERO
    fa = [Fraction(x) for x in a]
    db = len(b) - 1
    lead = Fraction(b[-1])
    quot = [Fraction(0)] * (len(a) - db)
    for i in range(len(quot) - 1, -1, -1):
        c = fa[i + db] / lead
        quot[i] = c
        if c:
            for j in range(db + 1):
                fa[i + j] -= c * b[j]
    if any(fa):
        raise ArithmeticError("inexact polynomial division")
    assert all(x.denominator == 1 for x in quot)
    return pnorm([int(x) for x in quot])


def plow(a):
    """Order of the lowest nonzero coefficient."""
    for i, x in enumerate(a):
        if x:
            return i
    raise ValueError("zero polynomial")


def _peval_sqrt(a, q0):
    """Evaluate a(u) at u = sqrt(q0) as (even, odd) parts: a = ev + od*sqrt(q0)."""
    ev = Fraction(0)
    od = Fraction(0)
    pw = Fraction(1)
    for i, c in enumerate(a):
        if c:
            k, r = divmod(i, 2)
            if r == 0:
                ev += c * q0 ** k
            else:
                od += c * q0 ** k
    return ev, od


# ---------------------------------------------------------------------------


class RatQ:
    """A scalar: rational function of q, optionally with a sqrt(q+q^-1) part.

    Value = (na/da) + (nb/db) * rt,  rt^2 = q + q^-1, all four entries
    polynomials in u = q^(1/2).  Fractions are kept reduced with a
    positive-leading-coefficient denominator.
    """

    __slots__ = ("na", "da", "nb", "db", "_hash")

    def __init__(self, na, da=P_ONE, nb=P_ZERO, db=P_ONE, _reduced=False):
        if _reduced:
            self.na, self.da, self.nb, self.db = na, da, nb, db
        else:
            self.na, self.da = _reduce(na, da)
            self.nb, self.db = _reduce(nb, db)
        self._hash = None

    # -- constructors

    @staticmethod
    def from_int(n):
        return _INT_CACHE.get(n) or RatQ((n,) if n else P_ZERO)

    @staticmethod
    def from_fraction(f):
        f = Fraction(f)
        return RatQ((f.numerator,), (f.denominator,))

    @staticmethod
    def u_pow(e):
        """u^e = q^(e/2), any integer e."""
        if e >= 0:
            return RatQ(pshift(P_ONE, e), P_ONE, _reduced=True)
        return RatQ(P_ONE, pshift(P_ONE, -e), _reduced=True)

    @staticmethod
    def q_pow(k):
        """q^k for integer k."""
        return RatQ.u_pow(2 * k)

    @staticmethod
    def from_laurent(terms):
        """terms: dict u-exponent -> int, exponents may be negative."""
        if not terms:
            return ZERO
        lo = min(terms)
        shift = -lo if lo < 0 else 0
        hi = max(terms)
        num = [0] * (hi + shift + 1)
        for e, c in terms.items():
            num[e + shift] += c
        return RatQ(pnorm(num), pshift(P_ONE, shift))

    # -- predicates

    def is_zero(self):
        return not self.na and not self.nb

    def has_root_part(self):
        return bool(self.nb)

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic

    def __add__(self, other):
        if isinstance(other, int):
            other = RatQ.from_int(other)
        na, da = _frac_add(self.na, self.da, other.na, other.da)
        nb, db = _frac_add(self.nb, self.db, other.nb, other.db)
        return RatQ(na, da, nb, db, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return RatQ(pneg(self.na), self.da, pneg(self.nb), self.db,
                    _reduced=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = RatQ.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return RatQ.from_int(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 1:
                return self
            other = RatQ.from_int(other)
        if not self.nb and not other.nb:
            na, da = _frac_mul(self.na, self.da, other.na, other.da)
            return RatQ(na, da, P_ZERO, P_ONE, _reduced=True)
        # (a1 + b1 rt)(a2 + b2 rt) = a1 a2 + b1 b2 rt^2 + (a1 b2 + b1 a2) rt
        a1, a2 = (self.na, self.da), (other.na, other.da)
        b1, b2 = (self.nb, self.db), (other.nb, other.db)
        aa = _frac_mul(*a1, *a2)
        bb = _frac_mul(*b1, *b2)
        bb = _frac_mul(*bb, *_RT2)           # times q + q^-1
        anew = _frac_add(*aa, *bb)
        ab = _frac_mul(*a1, *b2)
        ba = _frac_mul(*b1, *a2)
        bnew = _frac_add(*ab, *ba)
        return RatQ(*anew, *bnew, _reduced=True)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("scalar inverse of zero")
        if not self.nb:
            num, den = _reduce(self.da, self.na)
            return RatQ(num, den, P_ZERO, P_ONE, _reduced=True)
        # 1/(a + b rt) = (a - b rt) / (a^2 - b^2 rt^2)
        a = (self.na, self.da)
        b = (self.nb, self.db)
        a2 = _frac_mul(*a, *a)
        b2 = _frac_mul(*_frac_mul(*b, *b), *_RT2)
        dn, dd = _frac_add(*a2, *_frac_neg(*b2))
        inv_norm = RatQ(dd, dn)
        return RatQ(*a, *_frac_neg(*b), _reduced=True) * inv_norm

    def __truediv__(self, other):
        if isinstance(other, int):
            other = RatQ.from_int(other)
        return self * other.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        res = ONE
        base = self
        while n:
            if n & 1:
                res = res * base
            base = base * base
            n >>= 1
        return res

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatQ.from_int(other)
        if not isinstance(other, RatQ):
            return NotImplemented
        return (self.na == other.na and self.da == other.da
                and self.nb == other.nb and self.db == other.db)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.na, self.da, self.nb, self.db))
        return self._hash

    # -- structure maps

    def qinv(self):
        """The field automorphism q -> 1/q (rt is fixed: rt^2 = q + 1/q)."""
        an, ad = _lrev(self.na, self.da)
        bn, bd = _lrev(self.nb, self.db)
        return RatQ(an, ad, bn, bd, _reduced=True)

    def eval_at(self, q0):
        """Exact value at a rational q0 > 0.  Raises if the sqrt(q+1/q)
        part is nonzero or a genuine sqrt(q0) remains."""
        if self.nb:
            raise ValueError("scalar has an irrational sqrt(q+q^-1) part")
        q0 = Fraction(q0)
        if q0 <= 0:
            raise ValueError("q must be a positive rational")
        ne, no = _peval_sqrt(self.na, q0)
        de, do = _peval_sqrt(self.da, q0)
        # (ne + no s)/(de + do s), s = sqrt(q0): rationalize
        denom = de * de - do * do * q0
        if denom == 0:
            raise ZeroDivisionError("denominator vanishes at q0")
        re = (ne * de - no * do * q0) / denom
        ro = (no * de - ne * do) / denom
        if ro != 0:
            raise ValueError("value is irrational at q0 (odd power of q^(1/2))")
        return re

    # -- display helpers

    def laurent_terms(self):
        """If the scalar is a Laurent polynomial in u with no rt part,
        return {u-exponent: int}; otherwise None."""
        if self.nb:
            return None
        da = self.da
        if not self.na:
            return {}
        if len([x for x in da if x]) == 1:
            shift = plow(da)
            lead = da[shift]
            if abs(lead) != 1:
                return None
            terms = {}
            for i, c in enumerate(self.na):
                if c:
                    terms[i - shift] = c * lead
            return terms
        return None

    def parts(self):
        """((na, da), (nb, db)) as tuples."""
        return (self.na, self.da), (self.nb, self.db)

    def __repr__(self):
        from .render import scalar_text
        return f"RatQ({scalar_text(self)})"


def _reduce(num, den):
    num = pnorm(num)
    den = pnorm(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return P_ZERO, P_ONE
    if den == P_ONE:
        return num, den
    # fast path: monomial denominator
    nz = [x for x in den if x]
    if len(nz) == 1:
        k = plow(den)
        lead = den[k]
        j = min(k, plow(num))
        if j:
            num = num[j:]
            k -= j
        g = igcd(pcontent(num), abs(lead))
        if lead < 0:
            g = -g
        if g != 1:
            num = tuple(x // g for x in num)
            lead //= g
        if lead == 1 and k == 0:
            return num, P_ONE
        return num, pshift((lead,), k)
    g = pgcd(num, den)
    if g != P_ONE:
        num = pdivexact(num, g)
        den = pdivexact(den, g)
    c = igcd(pcontent(num), pcontent(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


def _frac_add(n1, d1, n2, d2):
    if not n1:
        return n2, d2
    if not n2:
        return n1, d1
    if d1 == d2:
        return _reduce(padd(n1, n2), d1)
    return _reduce(padd(pmul(n1, d2), pmul(n2, d1)), pmul(d1, d2))


def _frac_mul(n1, d1, n2, d2):
    if not n1 or not n2:
        return P_ZERO, P_ONE
    return _reduce(pmul(n1, n2), pmul(d1, d2))


def _frac_neg(n, d):
    return pneg(n), d


def _lrev(num, den):
    """Apply u -> 1/u to num/den, returning a reduced (num', den') pair."""
    if not num:
        return P_ZERO, P_ONE
    dn, dd = len(num) - 1, len(den) - 1
    # num(1/u)/den(1/u) = u^(dd-dn) rev(num)/rev(den)
    rn, rd = preverse(num), preverse(den)
    k = dd - dn
    if k >= 0:
        return _reduce(pshift(rn, k), rd)
    return _reduce(rn, pshift(rd, -k))


ZERO = RatQ(P_ZERO)
ONE = RatQ(P_ONE)
_INT_CACHE = {}
for _n in range(-4, 5):
    _INT_CACHE[_n] = RatQ((_n,) if _n else P_ZERO)

Q = RatQ.q_pow(1)
QI = RatQ.q_pow(-1)
LAM = Q - QI            # q - q^-1
LAMP = Q + QI           # q + q^-1
_RT2 = (LAMP.na, LAMP.da)
RT_LAMP = RatQ(P_ZERO, P_ONE, P_ONE, P_ONE, _reduced=True)   # sqrt(q+q^-1)


def rt_pow(k):
    """(q+q^-1)^(k/2) for any integer k."""
    half, r = divmod(k, 2)
    res = LAMP ** half
    if r:
        res = res * RT_LAMP
    return res


# ---------------------------------------------------------------------------
# q-combinatorics.  The bracket [[n]]_{q^a} = 1 + q^a + ... + q^(a(n-1)).

_qnum_cache = {}


def qnumber(n, a=1):
    """The symmetric-free q-number [[n]]_{q^a} for n >= 0, a != 0."""
    if a == 0:
        raise ValueError("q-number base exponent must be nonzero")
    if n < 0:
        raise ValueError("q-number index must be nonnegative")
    key = (n, a)
    res = _qnum_cache.get(key)
    if res is None:
        res = RatQ.from_laurent({2 * a * k: 1 for k in range(n)})
        _qnum_cache[key] = res
    return res


_qfact_cache = {}


def qfactorial(n, a=1):
    """[[n]]_{q^a}! with [[0]]! = 1."""
    if n < 0:
        raise ValueError("q-factorial index must be nonnegative")
    key = (n, a)
    res = _qfact_cache.get(key)
    if res is None:
        res = ONE
        for k in range(2, n + 1):
            res = res * qnumber(k, a)
        _qfact_cache[key] = res
    return res


_qbin_cache = {}


def qbinomial(n, m, a=1):
    """[n m]_{q^a} = [[n]]!/([[m]]! [[n-m]]!) for integer n, m >= 0.

    Negative upper index n uses the closed form
    [n m] = [[n]][[n-1]]...[[n-m+1]] / [[m]]! continued through
    [[k]] = (1-q^(ak))/(1-q^a), which stays a Laurent polynomial.
    """
    if m < 0:
        return ZERO
    if m == 0:
        return ONE
    if 0 <= n < m:
        return ZERO
    key = (n, m, a)
    res = _qbin_cache.get(key)
    if res is not None:
        return res
    if n >= 0:
        num = ONE
        for k in range(n - m + 1, n + 1):
            num = num * qnumber(k, a)
        res = num / qfactorial(m, a)
    else:
        # [[n]]_{q^a} for n < 0 is -q^(an) [[-n]]_{q^a}
        num = ONE
        for k in range(n - m + 1, n + 1):
            num = num * (-RatQ.q_pow(a * k) * qnumber(-k, a))
        res = num / qfactorial(m, a)
    _qbin_cache[key] = res
    return res
