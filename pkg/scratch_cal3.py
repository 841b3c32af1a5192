import sys
sys.path.insert(0, "src")
from fractions import Fraction
from itertools import product
from qspace.qcoeff import RatQ, ONE, Q, QI, LAM
from qspace.commfn import CommPoly, mono
from qspace.spaces import EUCLID4
from qspace import symmetry as sy
from qspace.render import poly_text

sp = "euclid4"

def monos(deg):
    out = []
    for a in range(deg + 1):
        for b in range(deg + 1 - a):
            for c in range(deg + 1 - a - b):
                for d in range(deg + 1 - a - b - c):
                    out.append(CommPoly.from_mono(
                        mono(("x1", a), ("x2", b), ("x3", c), ("x4", d))))
    return out

M3 = monos(3)

# so4 relations for both copies (oracle singles)
laminv = LAM.inv()
ok = True
for f in M3:
    for i in ("1", "2"):
        lhs = sy.act(sp, f"L{i}+", sy.act(sp, f"L{i}-", f)).scale(QI) \
            - sy.act(sp, f"L{i}-", sy.act(sp, f"L{i}+", f)).scale(Q)
        rhs = (f - sy.apply_gen(sp, f"K{i}", -2, f)).scale(laminv)
        if lhs != rhs:
            ok = False
            print("so4 FAIL", i, f)
print("so4 [L+,L-]:", ok)

# K relations: L_i+- K_i = q^{-+2} K_i L_i+-
ok = True
for f in M3:
    for i in ("1", "2"):
        for g, s in ((f"L{i}+", -1), (f"L{i}-", 1)):
            lhs = sy.act(sp, g, sy.apply_gen(sp, f"K{i}", 1, f))
            rhs = sy.apply_gen(sp, f"K{i}", 1, sy.act(sp, g, f)).scale(RatQ.q_pow(2 * s))
            if lhs != rhs:
                ok = False
print("K_i L_i relations:", ok)

# the two copies commute
ok = True
for f in M3:
    for a in ("L1+", "L1-"):
        for b in ("L2+", "L2-"):
            if sy.act(sp, a, sy.act(sp, b, f)) != sy.act(sp, b, sy.act(sp, a, f)):
                ok = False
                print("commute FAIL", a, b, f)
print("copies commute:", ok)

# module algebra: Delta(L_i+-) = L (x) 1 + K_i^-1 (x) L
ok = True
for f in monos(2):
    for g in monos(2):
        for i in ("1", "2"):
            for gen in (f"L{i}+", f"L{i}-"):
                lhs = sy.act(sp, gen, EUCLID4.star_oracle(f, g))
                rhs = EUCLID4.star_oracle(sy.act(sp, gen, f), g) \
                    + EUCLID4.star_oracle(sy.apply_gen(sp, f"K{i}", -1, f),
                                          sy.act(sp, gen, g))
                if lhs != rhs:
                    ok = False
print("module algebra:", ok)

# closed powers vs iterated oracle
for gen in ("L1+", "L2+", "L1-", "L2-"):
    bad = 0
    for n in range(5):
        for f in M3:
            it = f
            for _ in range(n):
                it = sy.act(sp, gen, it)
            if sy.act_power(sp, gen, n, f) != it:
                bad += 1
                if bad <= 2:
                    print("power FAIL", gen, n, poly_text(f))
    print(f"{gen} closed power mismatches:", bad)

# function forms
bad = 0
for n in range(4):
    for f in M3:
        if sy.l1plus_func_form(n, f, 1) != sy.act_power(sp, "L1+", n, f):
            bad += 1
            if bad <= 2:
                print("L1+ func FAIL", n, poly_text(f))
        if sy.l1plus_func_form(n, f, 2) != sy.act_power(sp, "L2+", n, f):
            bad += 1
            if bad <= 2:
                print("L2+ func FAIL", n, poly_text(f))
print("func form mismatches:", bad)
