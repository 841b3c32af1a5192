import sys
sys.path.insert(0, "src")
from fractions import Fraction
from qspace.qcoeff import RatQ, ONE, ZERO, Q, QI, LAM, LAMP
from qspace.commfn import CommPoly, mono
from qspace.spaces import MINKOWSKI
from qspace import symmetry as sy
from qspace.symmetry import _Ladder
from qspace.render import poly_text

sp = "minkowski"
F = Fraction


def monos(deg, rmax=1):
    out = []
    for a in range(rmax + 1):
        for b in range(deg + 1):
            for c in range(deg + 1 - b):
                for d in range(deg + 1 - b - c):
                    out.append(CommPoly.from_mono(
                        mono(("r2", a), ("x+", b), ("x30", c), ("x-", d))))
    return out


# 1. module algebra for T- with the corrected coproduct
gen = sy.get_gen(sp, "T-")
ok = True
for f in monos(2):
    for h in monos(2):
        lhs = sy.act(sp, "T-", MINKOWSKI.star_oracle(f, h))
        rhs = CommPoly()
        for c, wl, wr in gen.coproduct:
            rhs = rhs + MINKOWSKI.star_oracle(
                sy.apply_word(sp, wl, f), sy.apply_word(sp, wr, h)).scale(c)
        if lhs != rhs:
            ok = False
print("module algebra T-:", ok)

# 2. solve for T+ degree-1 images.
# Delta(T+) = T+ (x) 1 + tau3^{1/2} (x) T+  -> leg A trivial, leg B tau3^{1/2}
TAU12 = {"x+": -4, "x-": 4}
NOLEG = {}

x30i = CommPoly.from_mono(mono(("x30", -1)))
basis_imgs = [
    {"x30": CommPoly.var("x+")},
    {"x-": CommPoly.var("x30")},
    {"x-": CommPoly.from_mono(mono(("r2", 1), ("x30", -1)))},
    {"x-": CommPoly.from_mono(mono(("x+", 1), ("x30", -1), ("x-", 1)))},
]
lads = [_Ladder(MINKOWSKI, t, NOLEG, TAU12) for t in basis_imgs]

lam = LAM
lami = LAM.inv()
q2 = RatQ.q_pow(2)
qi2 = RatQ.q_pow(-2)


def parts(f):
    """Residual of the defining relations at monomial f as
    (list of 4 coefficient polys, constant poly).  Relations:
      T+ T- - q^2 T- T+ - q lam^-1 (1 - tau3)          = 0
      T+ T2 - q^-2 T2 T+                                = 0
      tau1 T+ - T+ tau1 - lam T2                        = 0
      sigma2 T+ - T+ sigma2 + q^2 lam tau3 T2           = 0
      T+ S1 - q^2 S1 T+ - lam^-1 (tau3 tau1 - sigma2)   = 0
    """
    rows = []
    tm = sy.act(sp, "T-", f)
    t2 = sy.act(sp, "T2", f)
    s1 = sy.act(sp, "S1", f)
    ta1 = sy.act(sp, "tau1", f)
    sg2 = sy.act(sp, "sigma2", f)
    # rel 11
    lin = [ld.act(tm) - sy.act(sp, "T-", ld.act(f)).scale(q2) for ld in lads]
    const = (f - sy.apply_gen(sp, "tau3", 1, f)).scale(Q * lami).scale(-ONE)
    rows.append((lin, const))
    # rel 7
    lin = [ld.act(t2) - sy.act(sp, "T2", ld.act(f)).scale(qi2) for ld in lads]
    rows.append((lin, CommPoly()))
    # rel 1
    lin = [sy.act(sp, "tau1", ld.act(f)) - ld.act(ta1) for ld in lads]
    rows.append((lin, t2.scale(-lam)))
    # rel 4
    lin = [sy.act(sp, "sigma2", ld.act(f)) - ld.act(sg2) for ld in lads]
    rows.append((lin, sy.apply_gen(sp, "tau3", 1, t2).scale(q2 * lam)))
    # rel 9
    lin = [ld.act(s1) - sy.act(sp, "S1", ld.act(f)).scale(q2) for ld in lads]
    const = (sy.apply_gen(sp, "tau3", 1, ta1) - sg2).scale(lami).scale(-ONE)
    rows.append((lin, const))
    return rows


eqs = []  # each: ([c1..c4], rhs)
for f in monos(2):
    for lin, const in parts(f):
        keys = set(const.t)
        for p in lin:
            keys |= set(p.t)
        for k in keys:
            eqs.append(([p.t.get(k, ZERO) for p in lin],
                        -const.t.get(k, ZERO) if const.t.get(k) is not None
                        else ZERO))

# gaussian solve (4 unknowns, many equations)
nu = 4
rows = [list(c) + [r] for c, r in eqs]
r = 0
for c in range(nu):
    pr = next((i for i in range(r, len(rows))
               if not rows[i][c].is_zero()), None)
    if pr is None:
        print("free column", c)
        continue
    rows[r], rows[pr] = rows[pr], rows[r]
    inv = rows[r][c].inv()
    rows[r] = [x * inv for x in rows[r]]
    for i in range(len(rows)):
        if i != r and not rows[i][c].is_zero():
            fac = rows[i][c]
            rows[i] = [a - fac * b for a, b in zip(rows[i], rows[r])]
    r += 1
bad = sum(1 for i in range(r, len(rows)) if not rows[i][nu].is_zero())
print("inconsistent rows:", bad, " rank:", r)
if bad == 0 and r == nu:
    sol = [rows[i][nu] for i in range(nu)]
    for name, v in zip(("a (x30->x+)", "b (x- -> x30)",
                        "c (x- -> r2 x30^-1)", "d (x- -> x+ x- x30^-1)"),
                       sol):
        print(f"  {name} = {v}")
