import sys
sys.path.insert(0, "src")
from fractions import Fraction
from qspace.qcoeff import RatQ, ONE, LAM, LAMP, qfactorial, qbinomial
from qspace.commfn import CommPoly, TensorPoly, mono
from qspace.spaces import get_space
from qspace import braiding as br
from qspace import symmetry as sy
from qspace.render import tensor_text, poly_text

F = Fraction
sd = get_space("euclid3")

def mono_braid(np_, n3, nm, w):
    """BraidKordAlg3dim as printed."""
    res = TensorPoly()
    for i in range(n3 + 1):
        for j in range(nm + 1):
            for k in range(nm + 1):
                for l in range(nm - k + 1):
                    c = (-ONE if k % 2 else ONE) * (LAM * LAMP) ** (i + j) \
                        / qfactorial(nm, 2)
                    c = c * RatQ.q_pow(k*(k-1) + 2*l*(k+l+j)
                                       - 2*np_*(i+j+k+l) + nm*(nm-2*l))
                    c = c * qbinomial(k+l, k, 2) * qbinomial(n3, i, 2) \
                        * qbinomial(nm, j, 2) * qbinomial(nm, k+l, 2)
                    if c.is_zero():
                        continue
                    wL = sy.apply_gen("euclid3", "tau3", F(nm - np_, 2), w)
                    wL = sy.act_power("euclid3", "L-", i+j+k+l, wL)
                    wL = sy.apply_gen("euclid3", "Lambda",
                                      F(np_ + n3 + nm, 2), wL)
                    if wL.is_zero():
                        continue
                    bracket = sy.act_power("euclid3", "L-", nm-k-l,
                        CommPoly.from_mono(mono(("x+", j), ("x3", nm-j))))
                    if bracket.is_zero():
                        continue
                    right = CommPoly()
                    pre = mono(("x+", np_ + i), ("x3", n3 - i))
                    right = sd.star_oracle(CommPoly.from_mono(pre), bracket)
                    res = res + TensorPoly.tensor(
                        wL.rename(sd.rename_to_copy("y")), right).scale(c)
    return res

bad = 0
for np_ in range(3):
    for n3 in range(3):
        for nm in range(3):
            if np_ + n3 + nm > 3:
                continue
            for w in [CommPoly.from_mono(mono(*p)) for p in
                      [(), (("x+",1),), (("x3",1),), (("x-",1),),
                       (("x+",1),("x3",1)), (("x3",2),), (("x-",2),),
                       (("x+",1),("x-",1)), (("x3",1),("x-",1))]]:
                f = CommPoly.from_mono(mono(("x+",np_),("x3",n3),("x-",nm)))
                t = TensorPoly.tensor(f, w.rename(sd.rename_to_copy("y")))
                want = br.braid_oracle(sd, br.FORWARD, t)
                got = mono_braid(np_, n3, nm, w)
                if got != want:
                    bad += 1
                    if bad <= 3:
                        print("FAIL", np_, n3, nm, poly_text(w))
                        print("  got ", tensor_text(got))
                        print("  want", tensor_text(want))
print("monomial display mismatches:", bad)
