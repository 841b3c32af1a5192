import sys
sys.path.insert(0, "src")
from qspace.qcoeff import RatQ, ONE, LAM, LAMP, Q, QI, qfactorial, qbinomial
from qspace.commfn import CommPoly, TensorPoly, mono
from qspace.spaces import get_space
from qspace import braiding as br
from qspace import symmetry as sy
from qspace.render import tensor_text, poly_text

sd = get_space("euclid3")

def closed_e3(f, g, sbase, tbase):
    res = TensorPoly()
    for i in range(f.degree("x3") + 1):
        for s in range(f.degree("x-") + 1):
            for j in range(s + 1):
                for k in range(s + 1):
                    for l in range(s - k + 1):
                        t_ = s - k - l
                        for v in range(t_ + 1):
                            u = t_ - v
                            if not v <= u <= j:
                                continue
                            n = k + l + i + j
                            gL = g.scale_arg("x+", -2*n).scale_arg("x-", 2*n)
                            gL = sy.act_power("euclid3", "L-", n, gL)
                            if gL.is_zero():
                                continue
                            fR = f.scale_arg("x3", 2*(j-u)).scale_arg("x-", -2*(i+j+l))
                            fR = fR.jackson_power("x-", 2, s).jackson_power("x3", 2, i)
                            if fR.is_zero():
                                continue
                            fR = fR.mul_mono(mono(("x+", i+j-u), ("x3", s-j+u-v), ("x-", v)))
                            c = (-ONE if k % 2 else ONE) * (LAM*LAMP)**(i+j) * sy.coeff_t(u, v)
                            c = c * RatQ.q_pow(-k - v + 2*n*n + 2*v*(s-v)
                                               + 2*u*(i-v) - 2*j*(i-l)
                                               + l*l + l*t_ + t_*t_)
                            c = c * qfactorial(u, 4) / (qfactorial(i, 4)*qfactorial(k, 4)
                                * qfactorial(l, 4)*qfactorial(s, sbase)*qfactorial(t_, tbase))
                            c = c * qbinomial(j, u, 4) * qbinomial(s, j, 2)
                            S = {"x+": 1, "x3": 1, "x-": 1}
                            P = {"x+": 1, "x-": -1}
                            res = res + TensorPoly.tensor(gL, fR).grid_u([(4,S,S),(4,P,P)]).scale(c)
    return res

def monos(deg):
    out = []
    for a in range(deg+1):
        for b in range(deg+1-a):
            for c in range(deg+1-a-b):
                out.append(CommPoly.from_mono(mono(("x+",a),("x3",b),("x-",c))))
    return out

for sbase in (4, 2):
    for tbase in (4, 2):
        bad = 0
        ex = None
        for f in monos(2):
            for g in monos(2):
                t = TensorPoly.tensor(f, g.rename(sd.rename_to_copy("y")))
                want = br.braid_oracle(sd, br.FORWARD, t)
                got = closed_e3(f, g, sbase, tbase).rename(sd.rename_to_copy("y"), {})
                if got != want:
                    bad += 1
                    if ex is None:
                        ex = (f, g, got, want)
        print(f"sbase={sbase} tbase={tbase}: mismatches {bad}")
        if ex and bad < 13:
            f, g, got, want = ex
            print("  ex", poly_text(f), "|", poly_text(g))
            print("  got ", tensor_text(got))
            print("  want", tensor_text(want))
