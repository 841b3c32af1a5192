"""The four quantum spaces: presentations, ordering isomorphisms, star products.

Each space ships in two ordering conventions ("std" and "tilde", the latter
with the coordinate order reversed) because the two braided-product variants
are defined against opposite normal orderings.  W maps a commutative
monomial to the correspondingly ordered word; its inverse reads coefficients
off normal-ordered noncommutative polynomials.

q-Minkowski space uses the basis (r2, x+, x30, x-) with central r2; the
time coordinate x0 only shows up in intermediate words and is eliminated
through the x0 -> r2 basis conversion implemented here.
"""

from __future__ import annotations

from .qcoeff import RatQ, ZERO, ONE, LAM, LAMP, qnumber, qfactorial
from .commfn import CommPoly, TensorPoly, mono, mono_get, mono_mul
from .ncpoly import NCPoly, RewriteSystem, word, word_concat

Q = RatQ.q_pow(1)
QI = RatQ.q_pow(-1)


class SpaceDef:
    """One quantum space in one ordering convention."""

    def __init__(self, name, variant, vars_, gen_order, rs,
                 lambda_u_weights, laurent=()):
        self.name = name
        self.variant = variant
        self.vars = tuple(vars_)          # display order
        self.gen_order = tuple(gen_order)  # word order used by W
        self.rs = rs
        self.lambda_u_weights = dict(lambda_u_weights)
        self.laurent = frozenset(laurent)

    def __repr__(self):
        return f"SpaceDef({self.name}/{self.variant})"

    # -- variable-name plumbing -----------------------------------------

    @staticmethod
    def to_copy(v, prefix):
        """x-side name -> y- or d-copy name ('x+' -> 'y+', 'r2' -> 'yr2')."""
        if v.startswith("x"):
            return prefix + v[1:]
        return prefix + v

    def copy_vars(self, prefix):
        return tuple(self.to_copy(v, prefix) for v in self.vars)

    def rename_to_copy(self, prefix):
        return {v: self.to_copy(v, prefix) for v in self.vars}

    def rename_from_copy(self, prefix):
        return {self.to_copy(v, prefix): v for v in self.vars}

    # -- ordering isomorphism -------------------------------------------

    def w_iso(self, f):
        """CommPoly in this space's variables -> normal-ordered NCPoly."""
        res = NCPoly()
        for m, c in f.t.items():
            pairs = []
            for v in self.gen_order:
                e = mono_get(m, v)
                if e:
                    if e < 0 and v not in self.laurent:
                        raise ValueError(f"negative power of {v}")
                    pairs.append((v, e))
            leftover = set(dict(m)) - set(self.gen_order)
            if leftover:
                raise ValueError(f"variables {leftover} not in {self!r}")
            res = res + NCPoly.from_word(word(*pairs), c)
        return res

    def w_inv(self, p):
        """Normal-ordered NCPoly -> CommPoly; words must be ordered."""
        res = CommPoly()
        for w, c in p.t.items():
            if not self.rs.is_ordered(w):
                raise ValueError(f"word {w} is not normal-ordered")
            res = res + CommPoly.from_mono(mono(*w), c)
        return res

    def star_oracle(self, f, g):
        """f * g through the noncommutative product: W^-1(W(f) W(g))."""
        return self.w_inv(self.rs.multiply(self.w_iso(f), self.w_iso(g)))

    def normal_form(self, p):
        return self.rs.normal_form(p)


def _swap_rules(order, swaps, general):
    """Build the rule table for a generator order.

    swaps: {(a, b): RatQ} meaning a b = coeff * b a for the unordered pair;
    entries are looked up in either orientation (inverting the scalar).
    general: {(B, A): NCPoly} replacement of B A for specific ordered pairs.
    """
    rules = {}
    pos = {g: i for i, g in enumerate(order)}
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            key = (b, a)       # the out-of-order product b*a
            if key in general:
                rules[key] = ("general", general[key])
            elif (b, a) in swaps:
                rules[key] = ("swap", swaps[(b, a)])
            elif (a, b) in swaps:
                rules[key] = ("swap", swaps[(a, b)].inv())
            else:
                rules[key] = ("swap", ONE)
    return rules


def _mk_space(name, variant, vars_, order, swaps, general,
              lambda_u_weights, laurent=()):
    rs = RewriteSystem(order, laurent,
                       _swap_rules(order, swaps, general))
    return SpaceDef(name, variant, vars_, order, rs, lambda_u_weights,
                    laurent)


lam = LAM
lamp = LAMP

# ---------------------------------------------------------------------------
# Manin plane: x1 x2 = q x2 x1.

_manin_swaps = {("x1", "x2"): Q}     # X1 X2 = q X2 X1

MANIN = _mk_space(
    "manin", "std", ("x1", "x2"), ("x1", "x2"), _manin_swaps, {},
    {"x1": -4, "x2": -4})
MANIN_T = _mk_space(
    "manin", "tilde", ("x1", "x2"), ("x2", "x1"), _manin_swaps, {},
    {"x1": -4, "x2": -4})

# ---------------------------------------------------------------------------
# 3d Euclidean: x3 x± = q^±2 x± x3,  x- x+ = x+ x- + lambda x3 x3.

_e3_swaps = {("x3", "x+"): RatQ.q_pow(2),     # X3 X+ = q^2 X+ X3
             ("x-", "x3"): RatQ.q_pow(2)}     # X- X3 = q^2 X3 X-

_e3_gen_std = {("x-", "x+"): (NCPoly({word(("x+", 1), ("x-", 1)): ONE,
                                      word(("x3", 2)): lam}))}
_e3_gen_tilde = {("x+", "x-"): (NCPoly({word(("x-", 1), ("x+", 1)): ONE,
                                        word(("x3", 2)): -lam}))}

EUCLID3 = _mk_space(
    "euclid3", "std", ("x+", "x3", "x-"), ("x+", "x3", "x-"),
    _e3_swaps, _e3_gen_std, {"x+": 8, "x3": 8, "x-": 8})
EUCLID3_T = _mk_space(
    "euclid3", "tilde", ("x+", "x3", "x-"), ("x-", "x3", "x+"),
    _e3_swaps, _e3_gen_tilde, {"x+": 8, "x3": 8, "x-": 8})

# ---------------------------------------------------------------------------
# 4d Euclidean: x1 xj = q xj x1 (j=2,3), xj x4 = q x4 xj (j=2,3),
# x2 x3 = x3 x2, x4 x1 = x1 x4 + lambda x2 x3.

_e4_swaps = {("x1", "x2"): Q, ("x1", "x3"): Q,
             ("x2", "x4"): Q, ("x3", "x4"): Q,
             ("x2", "x3"): ONE}
_e4_gen_std = {("x4", "x1"): NCPoly({word(("x1", 1), ("x4", 1)): ONE,
                                     word(("x2", 1), ("x3", 1)): lam})}
_e4_gen_tilde = {("x1", "x4"): NCPoly({word(("x4", 1), ("x1", 1)): ONE,
                                       word(("x3", 1), ("x2", 1)): -lam})}

EUCLID4 = _mk_space(
    "euclid4", "std", ("x1", "x2", "x3", "x4"), ("x1", "x2", "x3", "x4"),
    _e4_swaps, _e4_gen_std,
    {"x1": 4, "x2": 4, "x3": 4, "x4": 4})
EUCLID4_T = _mk_space(
    "euclid4", "tilde", ("x1", "x2", "x3", "x4"), ("x4", "x3", "x2", "x1"),
    _e4_swaps, _e4_gen_tilde,
    {"x1": 4, "x2": 4, "x3": 4, "x4": 4})

# ---------------------------------------------------------------------------
# q-Minkowski, r2 basis: r2 central, x± x30 = q^∓2 x30 x±, and
#   x- x+ = q^2 x+ x- + q lambda/lambda+ (x30^2 - r2),
# which is x- x+ - x+ x- = lambda (x30^2 + x0 x30) after eliminating x0.
# x0 itself is kept as a fifth central generator for intermediate words.

_mink_swaps = {("x30", "x+"): RatQ.q_pow(2),   # X30 X+ = q^2 X+ X30
               ("x-", "x30"): RatQ.q_pow(2)}   # X- X30 = q^2 X30 X-

_qll = Q * lam / lamp
_mink_gen_std = {("x-", "x+"): NCPoly({
    word(("x+", 1), ("x-", 1)): RatQ.q_pow(2),
    word(("x30", 2)): _qll,
    word(("r2", 1)): -_qll})}
_mink_gen_tilde = {("x+", "x-"): NCPoly({
    word(("x-", 1), ("x+", 1)): RatQ.q_pow(-2),
    word(("x30", 2)): -QI * lam / lamp,
    word(("r2", 1)): QI * lam / lamp})}

_mink_lam_w = {"r2": -8, "x+": -4, "x30": -4, "x-": -4, "x0": -4}

MINKOWSKI = _mk_space(
    "minkowski", "std", ("r2", "x+", "x30", "x-"),
    ("r2", "x+", "x30", "x-"), _mink_swaps, _mink_gen_std,
    _mink_lam_w, laurent=("x30",))
MINKOWSKI_T = _mk_space(
    "minkowski", "tilde", ("r2", "x+", "x30", "x-"),
    ("r2", "x-", "x30", "x+"), _mink_swaps, _mink_gen_tilde,
    _mink_lam_w, laurent=("x30",))

# x0-extended presentations (x0 central); used for intermediate braiding
# words and the basis conversion.

_mink_x0_gen_std = {("x-", "x+"): NCPoly({
    word(("x+", 1), ("x-", 1)): ONE,
    word(("x30", 2)): lam,
    word(("x30", 1), ("x0", 1)): lam})}

MINK_X0 = _mk_space(
    "minkowski", "x0", ("x+", "x30", "x0", "x-"),
    ("r2", "x+", "x30", "x0", "x-"), _mink_swaps, _mink_x0_gen_std,
    _mink_lam_w, laurent=("x30",))

_mink_x0_gen_tilde = {("x+", "x-"): NCPoly({
    word(("x-", 1), ("x+", 1)): ONE,
    word(("x30", 2)): -lam,
    word(("x30", 1), ("x0", 1)): -lam})}

MINK_X0_T = _mk_space(
    "minkowski", "x0~", ("x+", "x30", "x0", "x-"),
    ("r2", "x-", "x30", "x0", "x+"), _mink_swaps, _mink_x0_gen_tilde,
    _mink_lam_w, laurent=("x30",))


SPACES = {
    ("manin", "std"): MANIN, ("manin", "tilde"): MANIN_T,
    ("euclid3", "std"): EUCLID3, ("euclid3", "tilde"): EUCLID3_T,
    ("euclid4", "std"): EUCLID4, ("euclid4", "tilde"): EUCLID4_T,
    ("minkowski", "std"): MINKOWSKI, ("minkowski", "tilde"): MINKOWSKI_T,
}

SPACE_NAMES = ("manin", "euclid3", "euclid4", "minkowski")


def get_space(name, variant="std"):
    try:
        return SPACES[(name, variant)]
    except KeyError:
        raise ValueError(f"unknown space {name}/{variant}") from None


# ---------------------------------------------------------------------------
# Minkowski x0 -> r2 basis conversion.


def a0_poly(j=0):
    """a0(r2, q^(2j) x30) = -1/lambda+ (q^(1-2j) r2 x30^-1 + q^(2j-1) x30)."""
    inv = LAMP.inv()
    return NCPoly({
        word(("r2", 1), ("x30", -1)): -inv * RatQ.q_pow(1 - 2 * j),
        word(("x30", 1)): -inv * RatQ.q_pow(2 * j - 1)})


_s0_cache = {}


def s0_poly(k, p):
    """S0_{k,p}(r2, x30): central conversion coefficient, 0 <= p <= k."""
    if p == k:
        return NCPoly.constant(ONE)
    if not (0 <= p < k):
        raise ValueError("S0 requires 0 <= p <= k")
    key = (k, p)
    res = _s0_cache.get(key)
    if res is not None:
        return res
    depth = k - p
    res = NCPoly()

    def rec(level, upper, acc):
        nonlocal res
        if level == depth:
            res = res + acc
            return
        for j in range(upper + 1):
            rec(level + 1, j, acc.raw_mul(a0_poly(j)))

    rec(0, p, NCPoly.constant(ONE))
    res = MINK_X0.rs.normal_form(res)
    _s0_cache[key] = res
    return res


def x0_word_to_r2(n_plus, n_30, n_0, n_minus):
    """(x+)^a (x30)^b (x0)^c (x-)^d as an NCPoly in the r2 basis."""
    res = NCPoly()
    for p in range(n_0 + 1):
        head = word(("x+", n_plus + p), ("x30", n_30 - p))
        tail = word(("x-", n_minus + p))
        # The q^(-p(p-1)) factor is required for the conversion to commute
        # with multiplication; see CONFORMANCE.md (basis conversion entry).
        coeff = RatQ.q_pow((2 * n_30 - 1) * p - p * (p - 1))
        s0 = s0_poly(n_0, p)
        for w0, c0 in s0.t.items():
            res = res + NCPoly.from_word(
                word_concat(word_concat(head, w0), tail), coeff * c0)
    return res


def eliminate_x0(p, variant="std"):
    """NCPoly possibly containing x0 -> NCPoly over the r2 basis, normal
    ordered for the requested Minkowski variant."""
    target = MINKOWSKI if variant == "std" else MINKOWSKI_T
    p = MINK_X0.rs.normal_form(p)
    res = NCPoly()
    for w, c in p.t.items():
        d = dict(w)
        n0 = d.pop("x0", 0)
        if n0 == 0:
            res = res + NCPoly.from_word(w, c)
            continue
        conv = x0_word_to_r2(d.get("x+", 0), d.get("x30", 0), n0,
                             d.get("x-", 0))
        nr = d.get("r2", 0)
        if nr:
            conv = NCPoly({word_concat(word(("r2", nr)), w2): c2
                           for w2, c2 in conv.t.items()})
        res = res + conv.scale(c)
    return target.rs.normal_form(res)


# ---------------------------------------------------------------------------
# Closed star product on 3d Euclidean space.


def star_euclid3(f, g):
    """f * g = sum_i lambda^i (x3)^(2i) / [[i]]_{q^4}!
                 q^(2(n3 (x) n+' + n- (x) n3')) [(D-_{q^4})^i f][(D+_{q^4})^i g]
    with both legs finally multiplied together."""
    out = CommPoly()
    i = 0
    fi = f
    gi = g
    while fi and gi:
        t = TensorPoly.tensor(fi, gi)
        t = t.grid_u([(4, {"x3": 1}, {"x+": 1}), (4, {"x-": 1}, {"x3": 1})])
        pref = (lam ** i) / qfactorial(i, 4)
        merged = t.merge()
        out = out + merged.mul_mono(mono(("x3", 2 * i)), pref)
        i += 1
        fi = fi.jackson("x-", 4)
        gi = gi.jackson("x+", 4)
    return out
