"""Commutative model algebras: polynomials the engine actually computes with.

A CommPoly is a Laurent polynomial in named commuting variables with RatQ
coefficients; a TensorPoly is the same over a pair of variable sets (two
tensor legs).  Monomials are tuples of (variable, exponent) sorted by
variable name; exponents are nonzero and may be negative for variables the
containing space flags as invertible.

The q-difference calculus lives here: Jackson derivatives and integrals,
argument scalings, and the two-leg q-grid operators used by the closed
product formulas.
"""

from __future__ import annotations

from .qcoeff import RatQ, ZERO, ONE, qnumber


def qnum_ext(n, a=1):
    """[[n]]_{q^a} extended to negative n via (1-q^(an))/(1-q^a)."""
    if n >= 0:
        return qnumber(n, a)
    return -RatQ.q_pow(a * n) * qnumber(-n, a)


M_ONE = ()


def mono(*pairs):
    """Build a monomial key from (var, exp) pairs."""
    d = {}
    for v, e in pairs:
        d[v] = d.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in d.items() if e))


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        ne = d.get(v, 0) + e
        if ne:
            d[v] = ne
        else:
            del d[v]
    return tuple(sorted(d.items()))


def mono_degree(m):
    return sum(e for _, e in m)


def mono_get(m, v):
    for w, e in m:
        if w == v:
            return e
    return 0


class CommPoly:
    """Polynomial in commuting variables; immutable by convention."""

    __slots__ = ("t",)

    def __init__(self, terms=None):
        self.t = dict(terms) if terms else {}

    @staticmethod
    def from_mono(m, coeff=ONE):
        if coeff.is_zero():
            return CommPoly()
        return CommPoly({m: coeff})

    @staticmethod
    def constant(coeff):
        return CommPoly.from_mono(M_ONE, coeff)

    @staticmethod
    def var(v, e=1):
        return CommPoly({mono((v, e)): ONE})

    def is_zero(self):
        return not self.t

    def __bool__(self):
        return bool(self.t)

    def __eq__(self, other):
        return isinstance(other, CommPoly) and self.t == other.t

    def __add__(self, other):
        res = dict(self.t)
        for m, c in other.t.items():
            acc = res.get(m)
            nc = c if acc is None else acc + c
            if nc.is_zero():
                res.pop(m, None)
            else:
                res[m] = nc
        return CommPoly(res)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        if isinstance(c, int):
            c = RatQ.from_int(c)
        if c.is_zero():
            return CommPoly()
        return CommPoly({m: v * c for m, v in self.t.items()})

    def mul_mono(self, m, coeff=ONE):
        if coeff.is_zero():
            return CommPoly()
        return CommPoly({mono_mul(mm, m): c * coeff for mm, c in self.t.items()})

    def __mul__(self, other):
        if isinstance(other, (RatQ, int)):
            return self.scale(other)
        res = {}
        for m1, c1 in self.t.items():
            for m2, c2 in other.t.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                acc = res.get(m)
                nc = c if acc is None else acc + c
                if nc.is_zero():
                    res.pop(m, None)
                else:
                    res[m] = nc
        return CommPoly(res)

    __rmul__ = __mul__

    def __pow__(self, n):
        res = CommPoly.constant(ONE)
        base = self
        while n:
            if n & 1:
                res = res * base
            base = base * base
            n >>= 1
        return res

    def degree(self, v=None):
        """Max exponent of v (0 if absent), or max total degree."""
        if not self.t:
            return 0
        if v is None:
            return max(mono_degree(m) for m in self.t)
        return max((mono_get(m, v) for m in self.t), default=0)

    def min_exp(self, v):
        return min((mono_get(m, v) for m in self.t), default=0)

    # -- q-difference calculus -------------------------------------------

    def jackson(self, v, a):
        """Jackson derivative in v with base q^a: x^n -> [[n]] x^(n-1)."""
        res = {}
        for m, c in self.t.items():
            n = mono_get(m, v)
            if n == 0:
                continue
            c2 = c * qnum_ext(n, a)
            if c2.is_zero():
                continue
            m2 = mono_mul(m, ((v, -1),))
            acc = res.get(m2)
            nc = c2 if acc is None else acc + c2
            if nc.is_zero():
                res.pop(m2, None)
            else:
                res[m2] = nc
        return CommPoly(res)

    def jackson_power(self, v, a, k):
        p = self
        for _ in range(k):
            if not p.t:
                break
            p = p.jackson(v, a)
        return p

    def jackson_integral(self, v, a):
        """Inverse of the Jackson derivative: x^n -> x^(n+1)/[[n+1]].

        Fails on exponent -1, where no Laurent antiderivative exists.
        """
        res = {}
        for m, c in self.t.items():
            n = mono_get(m, v)
            if n == -1:
                raise ValueError(
                    f"Jackson integral undefined: exponent -1 in {v}")
            res[mono_mul(m, ((v, 1),))] = c / qnum_ext(n + 1, a)
        return CommPoly(res)

    def scale_arg_u(self, v, ku):
        """Substitute v -> q^(ku/2) v (ku counts powers of u = q^(1/2))."""
        if ku == 0:
            return self
        return CommPoly({m: c * RatQ.u_pow(ku * mono_get(m, v))
                         for m, c in self.t.items()})

    def scale_arg(self, v, k):
        """Substitute v -> q^k v for integer k."""
        return self.scale_arg_u(v, 2 * k)

    def scale_args_u(self, weights):
        """Simultaneous v -> q^(w_v/2) v for a {var: u-power} map."""
        res = {}
        for m, c in self.t.items():
            e = 0
            for v, x in m:
                w = weights.get(v)
                if w:
                    e += w * x
            res[m] = c * RatQ.u_pow(e) if e else c
        return CommPoly(res)

    def rename(self, table):
        """Rename variables; table maps old -> new name."""
        res = {}
        for m, c in self.t.items():
            m2 = mono(*(((table.get(v, v)), e) for v, e in m))
            acc = res.get(m2)
            nc = c if acc is None else acc + c
            if nc.is_zero():
                res.pop(m2, None)
            else:
                res[m2] = nc
        return CommPoly(res)

    def map_coeff(self, fn):
        res = {}
        for m, c in self.t.items():
            c2 = fn(c)
            if not c2.is_zero():
                res[m] = c2
        return CommPoly(res)

    def coeff_of(self, m):
        return self.t.get(m, ZERO)

    def variables(self):
        s = set()
        for m in self.t:
            for v, _ in m:
                s.add(v)
        return s

    def eval_q(self, q0):
        """Evaluate every coefficient at a rational q0; returns {mono: Fraction}."""
        return {m: c.eval_at(q0) for m, c in self.t.items()}

    def __repr__(self):
        from .render import poly_text
        return f"CommPoly({poly_text(self)})"


class TensorPoly:
    """Element of a two-leg tensor product of commutative algebras."""

    __slots__ = ("t",)

    def __init__(self, terms=None):
        self.t = dict(terms) if terms else {}

    @staticmethod
    def tensor(f, g):
        res = {}
        for m1, c1 in f.t.items():
            for m2, c2 in g.t.items():
                c = c1 * c2
                if not c.is_zero():
                    res[(m1, m2)] = c
        return TensorPoly(res)

    @staticmethod
    def from_term(mL, mR, coeff=ONE):
        if coeff.is_zero():
            return TensorPoly()
        return TensorPoly({(mL, mR): coeff})

    def is_zero(self):
        return not self.t

    def __bool__(self):
        return bool(self.t)

    def __eq__(self, other):
        return isinstance(other, TensorPoly) and self.t == other.t

    def __add__(self, other):
        res = dict(self.t)
        for k, c in other.t.items():
            acc = res.get(k)
            nc = c if acc is None else acc + c
            if nc.is_zero():
                res.pop(k, None)
            else:
                res[k] = nc
        return TensorPoly(res)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if isinstance(c, int):
            c = RatQ.from_int(c)
        if c.is_zero():
            return TensorPoly()
        return TensorPoly({k: v * c for k, v in self.t.items()})

    __mul__ = scale
    __rmul__ = scale

    def apply_left(self, fn):
        """Apply a linear map (CommPoly -> CommPoly) to the left leg."""
        res = TensorPoly()
        for (mL, mR), c in self.t.items():
            img = fn(CommPoly.from_mono(mL, c))
            for m2, c2 in img.t.items():
                res = res + TensorPoly.from_term(m2, mR, c2)
        return res

    def apply_right(self, fn):
        res = TensorPoly()
        for (mL, mR), c in self.t.items():
            img = fn(CommPoly.from_mono(mR, c))
            for m2, c2 in img.t.items():
                res = res + TensorPoly.from_term(mL, m2, c2)
        return res

    def grid_u(self, pairs):
        """Apply q^(sum_i c_i (w_i . n_L)(v_i . n_R)) with c_i in u-units.

        pairs: list of (c_u, weights_left, weights_right); the weight maps
        send variable names to integers and are read against the current
        exponents of each term.
        """
        res = {}
        for (mL, mR), c in self.t.items():
            e = 0
            for cu, wL, wR in pairs:
                sL = 0
                for v, x in mL:
                    w = wL.get(v)
                    if w:
                        sL += w * x
                if sL:
                    sR = 0
                    for v, x in mR:
                        w = wR.get(v)
                        if w:
                            sR += w * x
                    if sR:
                        e += cu * sL * sR
            res[(mL, mR)] = c * RatQ.u_pow(e) if e else c
        return TensorPoly(res)

    def merge(self, rename_left=None):
        """Multiply the two legs into a single CommPoly (x' -> x collapse)."""
        out = CommPoly()
        for (mL, mR), c in self.t.items():
            if rename_left:
                mL = mono(*(((rename_left.get(v, v)), e) for v, e in mL))
            out = out + CommPoly.from_mono(mono_mul(mL, mR), c)
        return out

    def swap(self):
        return TensorPoly({(mR, mL): c for (mL, mR), c in self.t.items()})

    def rename(self, table_left, table_right):
        res = TensorPoly()
        for (mL, mR), c in self.t.items():
            m1 = mono(*((table_left.get(v, v), e) for v, e in mL))
            m2 = mono(*((table_right.get(v, v), e) for v, e in mR))
            res = res + TensorPoly.from_term(m1, m2, c)
        return res

    def map_coeff(self, fn):
        res = {}
        for k, c in self.t.items():
            c2 = fn(c)
            if not c2.is_zero():
                res[k] = c2
        return TensorPoly(res)

    def __repr__(self):
        from .render import tensor_text
        return f"TensorPoly({tensor_text(self)})"
