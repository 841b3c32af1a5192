import sys
sys.path.insert(0, "src")
from fractions import Fraction
from qspace.qcoeff import RatQ, ONE, LAM, LAMP, Q, QI, qfactorial, qbinomial
from qspace.commfn import CommPoly, TensorPoly, mono
from qspace.spaces import get_space
from qspace import braiding as br
from qspace import symmetry as sy
from qspace.render import tensor_text, poly_text, scalar_text

F = Fraction
sd = get_space("euclid4")
H = F(1, 2)

def diag(name, e, f):
    return sy.apply_gen("euclid4", name, e, f)

def true_terms(n1, n2, n3, n4, g):
    """Compose the four per-coordinate power braidings (inverse direction).
    Yields (tuple_key, TensorPoly) with tuple_key=(i,j,s,k,l,u,v)."""
    for k4 in range(n4 + 1):
        for u4 in range(n4 + 1):
            for v4 in range(n4 - k4 + 1):
                m = n4 - k4 - v4
                c4 = (-ONE if k4 % 2 else ONE) * (Q*LAM)**u4 / qfactorial(n4, 2)
                c4 = c4 * RatQ.u_pow(n4*(n4+1) + 2*k4*(k4+1) - u4*(u4-1)) \
                    * RatQ.q_pow(-n4*(k4+v4) + 2*v4*(n4-k4-v4) + u4*(n4-u4))
                c4 = c4 * qbinomial(n4, k4, 2) * qbinomial(n4-k4, v4, -2) \
                    * qbinomial(n4, u4, -2)
                if c4.is_zero():
                    continue
                for kp in range(m + 1):
                    cb = (-ONE if kp % 2 else ONE) \
                        * RatQ.q_pow(u4*(m-2*kp) - (n4-u4)*(m-kp)) \
                        * RatQ.u_pow(kp*(kp-1) + (m-kp)*(m-kp-1))
                    cb = cb * qfactorial(kp, 2) * qfactorial(m-kp, 2) \
                        * qbinomial(m, kp, -2) * qbinomial(u4, kp, 2) \
                        * qbinomial(n4-u4, m-kp, 2)
                    if cb.is_zero():
                        continue
                    r4 = mono(("x1", u4-kp), ("x2", kp),
                              ("x3", (n4-u4)-(m-kp)), ("x4", m-kp))
                    for k3 in range(n3 + 1):
                        c3 = qbinomial(n3, k3, -2) * (Q*LAM)**k3
                        r3 = mono(("x1", k3), ("x3", n3-k3))
                        for k2 in range(n2 + 1):
                            c2 = qbinomial(n2, k2, -2) * (Q*LAM)**k2
                            r2_ = mono(("x1", k2), ("x2", n2-k2))
                            c = c4 * cb * c3 * c2
                            if c.is_zero():
                                continue
                            # left ops, innermost (x4 block) first
                            w = g
                            for _ in range(u4):
                                w = sy.act("euclid4", "L2+", w)
                                if w.is_zero():
                                    break
                            for _ in range(k4+v4):
                                w = sy.act("euclid4", "L1+", w)
                                if w.is_zero():
                                    break
                            if w.is_zero():
                                continue
                            w = diag("K1", F(-n4+2*(k4+v4), 2),
                                diag("K2", F(-n4+2*u4, 2), w))
                            w = diag("Lambda", F(-n4, 2), w)
                            # x3 block
                            w = diag("K1", H*(n3-k3), diag("K2", -H*(n3-k3), w))
                            for _ in range(k3):
                                w = diag("K1", H, diag("K2", H,
                                    sy.act("euclid4", "L2+", w)))
                                if w.is_zero():
                                    break
                            if w.is_zero():
                                continue
                            w = diag("Lambda", F(-n3, 2), w)
                            # x2 block
                            w = diag("K1", -H*(n2-k2), diag("K2", H*(n2-k2), w))
                            for _ in range(k2):
                                w = diag("K1", H, diag("K2", H,
                                    sy.act("euclid4", "L1+", w)))
                                if w.is_zero():
                                    break
                            if w.is_zero():
                                continue
                            w = diag("Lambda", F(-n2, 2), w)
                            # x1 block
                            w = diag("Lambda", F(-n1, 2),
                                diag("K1", H*n1, diag("K2", H*n1, w)))
                            # right leg: X1^n1 * r2_ * r3 * r4 in NC algebra
                            right = sd.star_oracle(
                                CommPoly.from_mono(mono(("x1", n1))),
                                sd.star_oracle(CommPoly.from_mono(r2_),
                                    sd.star_oracle(CommPoly.from_mono(r3),
                                                   CommPoly.from_mono(r4))))
                            key = (k2, k3, k4+v4+kp, k4, v4, u4, kp)
                            yield key, TensorPoly.tensor(
                                w.rename(sd.rename_to_copy("y")),
                                right).scale(c)

# verify composition == oracle at deg <= 2
def monos4(deg):
    out = []
    for a in range(deg+1):
        for b in range(deg+1-a):
            for c in range(deg+1-a-b):
                for d in range(deg+1-a-b-c):
                    out.append((a,b,c,d))
    return out

bad = 0
for (n1,n2,n3,n4) in monos4(2):
    for (m1,m2,m3,m4) in monos4(2):
        g = CommPoly.from_mono(mono(("x1",m1),("x2",m2),("x3",m3),("x4",m4)))
        f = CommPoly.from_mono(mono(("x1",n1),("x2",n2),("x3",n3),("x4",n4)))
        t = TensorPoly.tensor(f, g.rename(sd.rename_to_copy("y")))
        want = br.braid_oracle(sd, br.INVERSE, t)
        got = TensorPoly()
        for _, term in true_terms(n1,n2,n3,n4, g):
            got = got + term
        if got != want:
            bad += 1
            if bad <= 3:
                print("COMPOSE FAIL", (n1,n2,n3,n4), (m1,m2,m3,m4))
                print("  got ", tensor_text(got))
                print("  want", tensor_text(want))
print("composition mismatches:", bad)
