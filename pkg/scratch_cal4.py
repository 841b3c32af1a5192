import sys
sys.path.insert(0, "src")
from fractions import Fraction
from qspace.qcoeff import RatQ, ONE, Q, QI, LAM, LAMP
from qspace.commfn import CommPoly, mono
from qspace.spaces import MINKOWSKI
from qspace import symmetry as sy
from qspace.render import poly_text

sp = "minkowski"
xp = CommPoly.var("x+"); x30 = CommPoly.var("x30")
xm = CommPoly.var("x-"); r2 = CommPoly.var("r2")

print("T- > 1  =", poly_text(sy.act(sp, "T-", CommPoly.constant(ONE))))
print("T- > x- =", poly_text(sy.act(sp, "T-", xm)))
print("T- > x30=", poly_text(sy.act(sp, "T-", x30)))
print("T- > x+ =", poly_text(sy.act(sp, "T-", xp)))
print("T- > r2 =", poly_text(sy.act(sp, "T-", r2)))
print("S1 > x+ =", poly_text(sy.act(sp, "S1", xp)))
print("T2 > x- =", poly_text(sy.act(sp, "T2", xm)))
print("tau1>x+ =", poly_text(sy.act(sp, "tau1", xp)))
print("T+ > x- =", poly_text(sy.act(sp, "T+", xm)))
print("T+ > x30=", poly_text(sy.act(sp, "T+", x30)))

# d~ recursion vs closed form
bad = 0
for n in range(5):
    for m in range(5):
        for s in range(m + 1):
            for l in range(m - s + 1):
                i = m - s - l
                a = sy.coeff_dq_tilde_rec(m, n, s, l, i)
                b = sy.coeff_dq_tilde(m, n, s, l, i)
                if a != b:
                    bad += 1
                    if bad <= 8:
                        print(f"d~ FAIL m={m} n={n} s={s} l={l} i={i}: rec={a} closed={b}")
print("d~ closed==recursion mismatches:", bad)
