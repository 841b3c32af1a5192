import sys
sys.path.insert(0, "src")
from itertools import product
from fractions import Fraction
from qspace.qcoeff import RatQ, ONE, ZERO, Q, QI, LAM, LAMP
from qspace.commfn import CommPoly, mono
from qspace.spaces import EUCLID3, get_space
from qspace import symmetry as sy

sp = "euclid3"
E3 = EUCLID3

def monos(deg):
    out = []
    for a in range(deg + 1):
        for b in range(deg + 1 - a):
            for c in range(deg + 1 - a - b):
                out.append(CommPoly.from_mono(mono(("x+", a), ("x3", b), ("x-", c))))
    return out

# basic singles
xp = CommPoly.var("x+"); x3 = CommPoly.var("x3"); xm = CommPoly.var("x-")
print("L+ > x- =", sy.act(sp, "L+", xm))
print("L+ > x3 =", sy.act(sp, "L+", x3))
print("L+ > x+ =", sy.act(sp, "L+", xp))
print("L- > x+ =", sy.act(sp, "L-", xp))
print("L- > x3 =", sy.act(sp, "L-", x3))
print("L- > x- =", sy.act(sp, "L-", xm))

# su2 relations on monomials deg<=3
lamlp = Q * LAM.inv() * LAMP.inv()
ok = True
for f in monos(3):
    lhs = sy.act(sp, "L+", sy.act(sp, "L-", f)).scale(Q) - sy.act(sp, "L-", sy.act(sp, "L+", f)).scale(QI)
    rhs = (f - sy.apply_gen(sp, "tau3", -1, f)).scale(lamlp)
    if lhs != rhs:
        ok = False
        print("su2 commutator FAIL on", f)
print("su2 [L+,L-] relation:", ok)

ok = True
for f in monos(3):
    for g, s in (("L+", -1), ("L-", 1)):
        lhs = sy.apply_gen(sp, "tau3", 1, sy.act(sp, g, f))
        rhs = sy.act(sp, g, sy.apply_gen(sp, "tau3", 1, f)).scale(RatQ.q_pow(4 * s))
        if lhs != rhs:
            ok = False
            print("tau3 rel FAIL", g, f)
print("tau3 L+- relations:", ok)

# L- power vs iterated single; func form
ok = okf = True
for n in range(4):
    for f in monos(3):
        p = sy.act_power(sp, "L-", n, f)
        it = f
        for _ in range(n):
            it = sy.act(sp, "L-", it)
        if p != it:
            ok = False
            print("L- power FAIL", n, f)
        if sy.lminus_func_form(n, f) != p:
            okf = False
            print("L- func form FAIL", n, f)
print("L- power==iter:", ok, " func==power:", okf)

# module algebra for L+ and L-
ok = True
for f in monos(2):
    for g in monos(2):
        for gen in ("L+", "L-"):
            lhs = sy.act(sp, gen, E3.star_oracle(f, g))
            rhs = E3.star_oracle(sy.act(sp, gen, f),
                                 sy.apply_gen(sp, "tau3", Fraction(-1, 2), g)) \
                + E3.star_oracle(f, sy.act(sp, gen, g))
            if lhs != rhs:
                ok = False
                print("module algebra FAIL", gen, f, g)
print("module algebra L+-:", ok)

# d- inverse
ok = True
for f in monos(4):
    if sy.act(sp, "d-", sy.act(sp, "d-inv", f)) != f:
        ok = False
        print("d- inverse FAIL", f)
print("d- o d-inv == id:", ok)

# C coefficient closed vs recursion, and vs L- action coefficients
ok = True
for n in range(7):
    for m in range(n, 7):
        for i in range(m + 1):
            j = n - i
            if not (0 <= j <= i):
                continue
            if sy.coeff_C(n, m, i, j) != sy.coeff_C_rec(n, m, i, j):
                ok = False
                print("C FAIL", n, m, i, j)
print("C closed==recursion:", ok)
