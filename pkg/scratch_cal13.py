import sys
sys.path.insert(0, "src")
from fractions import Fraction
from qspace.qcoeff import RatQ, ONE, LAM, LAMP, qfactorial, qbinomial
from qspace.commfn import CommPoly, TensorPoly, mono
from qspace.spaces import get_space
from qspace import braiding as br
from qspace import symmetry as sy
from qspace.render import tensor_text, poly_text, scalar_text

F = Fraction
sd = get_space("euclid3")

def true_term(np_, n3, nm, M, i, j, k, l, ip, jp):
    """One (i,j,k,l,i',j',k') term of the verified monomial display,
    with g = x3^M.  Returns TensorPoly or None."""
    kp = nm - k - l - ip - jp
    if kp < 0 or not (0 <= jp <= ip <= j):
        return None
    m = nm - k - l
    w = CommPoly.from_mono(mono(("x3", M)))
    c = (-ONE if k % 2 else ONE) * (LAM * LAMP) ** (i + j) / qfactorial(nm, 2)
    c = c * RatQ.q_pow(k*(k-1) + 2*l*(k+l+j) - 2*np_*(i+j+k+l) + nm*(nm-2*l))
    c = c * qbinomial(k+l, k, 2) * qbinomial(n3, i, 2) \
        * qbinomial(nm, j, 2) * qbinomial(nm, k+l, 2)
    # bracket term (corrected power-action formula: +2 jp * m3 term)
    c = c * RatQ.q_pow(-2*kp*(m-kp+jp) - kp*kp + 2*jp*(nm-j) - jp*jp) \
        * sy.coeff_t(ip, jp) * qfactorial(ip, 4) * qfactorial(kp, 2) \
        * qbinomial(m, kp, 2) * qbinomial(j, ip, 4) * qbinomial(nm-j, kp, 2)
    # commute prefix (X+)^{np+i}(X3)^{n3-i} past (X+)^{j-ip}
    c = c * RatQ.q_pow(2*(n3-i)*(j-ip))
    if c.is_zero():
        return None
    wL = sy.apply_gen("euclid3", "tau3", F(nm - np_, 2), w)
    wL = sy.act_power("euclid3", "L-", i+j+k+l, wL)
    wL = sy.apply_gen("euclid3", "Lambda", F(np_ + n3 + nm, 2), wL)
    if wL.is_zero():
        return None
    right = mono(("x+", np_ + i + j - ip),
                 ("x3", n3 - i + nm - j - kp + ip - jp),
                 ("x-", kp + jp))
    return TensorPoly.tensor(wL.rename(sd.rename_to_copy("y")),
                             CommPoly.from_mono(right)).scale(c)

def disp_term(np_, n3, nm, M, i, s, j, k, l, u, v):
    """One printed function-display term on the same monomial pair."""
    t_ = s - k - l
    if t_ < 0 or u + v != t_ or not (0 <= v <= u <= j) or j > s:
        return None
    f = CommPoly.from_mono(mono(("x+", np_), ("x3", n3), ("x-", nm)))
    g = CommPoly.from_mono(mono(("x3", M)))
    n = k + l + i + j
    gL = g.scale_arg("x+", -2*n).scale_arg("x-", 2*n)
    gL = sy.act_power("euclid3", "L-", n, gL)
    if gL.is_zero():
        return None
    fR = f.scale_arg("x3", 2*(j-u)).scale_arg("x-", -2*(i+j+l))
    fR = fR.jackson_power("x-", 2, s).jackson_power("x3", 2, i)
    if fR.is_zero():
        return None
    fR = fR.mul_mono(mono(("x+", i+j-u), ("x3", s-j+u-v), ("x-", v)))
    c = (-ONE if k % 2 else ONE) * (LAM*LAMP)**(i+j) * sy.coeff_t(u, v)
    c = c * RatQ.q_pow(-k - v + 2*n*n + 2*v*(s-v) + 2*u*(i-v)
                       - 2*j*(i-l) + l*l + l*t_ + t_*t_)
    c = c * qfactorial(u, 4) / (qfactorial(i, 4)*qfactorial(k, 4)
        * qfactorial(l, 4)*qfactorial(s, 4)*qfactorial(t_, 4))
    c = c * qbinomial(j, u, 4) * qbinomial(s, j, 2)
    if c.is_zero():
        return None
    S = {"x+": 1, "x3": 1, "x-": 1}
    P = {"x+": 1, "x-": -1}
    res = TensorPoly.tensor(gL, fR).grid_u([(4,S,S),(4,P,P)]).scale(c)
    return res.rename(sd.rename_to_copy("y"), {})

def ratio(tp, dp):
    """tp / dp if both are single-term tensors on the same monomial."""
    ts, ds = list(tp.t.items()), list(dp.t.items())
    if len(ts) != 1 or len(ds) != 1 or ts[0][0] != ds[0][0]:
        return None
    return ts[0][1] / ds[0][1]

seen = {}
for np_ in range(2):
    for n3 in range(3):
        for nm in range(4):
            for M in range(4):
                for i in range(n3 + 1):
                    for j in range(nm + 1):
                        for k in range(nm + 1):
                            for l in range(nm - k + 1):
                                for ip in range(j + 1):
                                    for jp in range(ip + 1):
                                        kp = nm - k - l - ip - jp
                                        if kp < 0:
                                            continue
                                        tt = true_term(np_, n3, nm, M,
                                                       i, j, k, l, ip, jp)
                                        if tt is None or tt.is_zero():
                                            continue
                                        s = nm - kp
                                        dt = disp_term(np_, n3, nm, M,
                                                       i, s, j, k, l, ip, jp)
                                        key = (i, s, j, k, l, ip, jp, kp,
                                               np_, n3, nm, M)
                                        if dt is None or dt.is_zero():
                                            print("disp zero, true not:", key)
                                            continue
                                        r = ratio(tt, dt)
                                        if r is None:
                                            print("monomial mismatch:", key)
                                            continue
                                        k2 = (i, s, j, k, l, ip, jp)
                                        seen.setdefault(k2, {})[
                                            (np_, n3, nm, M)] = r

for k2, d in sorted(seen.items()):
    vals = set(scalar_text(r) for r in d.values())
    if vals != {"1"}:
        print(k2, "ratios:", sorted(vals)[:4], "n-dep" if len(vals) > 1 else "")
