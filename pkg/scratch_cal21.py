import sys
sys.path.insert(0, "src")
from fractions import Fraction
from qspace.qcoeff import (RatQ, ONE, ZERO, Q, QI, LAM, LAMP, rt_pow,
                           qfactorial, qbinomial)
from qspace.commfn import CommPoly, TensorPoly, mono
from qspace.ncpoly import NCPoly, word, word_concat
from qspace.spaces import get_space
from qspace import braiding as br
from qspace import symmetry as sy
from qspace.render import tensor_text, poly_text

F = Fraction
sd = get_space("minkowski")
S = sd.name


def monos(deg):
    out = []
    for nr in range(deg // 2 + 1):
        for a in range(deg + 1):
            for b in range(deg + 1):
                for c in range(deg + 1):
                    if 2 * nr + a + b + c <= deg:
                        out.append((nr, a, b, c))
    return out


fs = [CommPoly.from_mono(mono(("r2", nr), ("x+", a), ("x30", b), ("x-", c)))
      for (nr, a, b, c) in monos(3)]

# --- (a) WirkTau: printed tau1^m function display vs act_power ----------


def tau1_disp(m, f):
    res = CommPoly()
    for k in range(m + 1):
        c = (-LAMP.inv() * LAM * LAM) ** k * RatQ.q_pow(-k * (k - 1)) \
            * qbinomial(m, k, 2)
        if c.is_zero():
            continue
        h = f.scale_arg("x+", m).scale_arg("x30", m - 2 * k) \
            .scale_arg("x-", -m)
        h = h.jackson_power("x+", 2, k).jackson_power("x-", 2, k)
        h = h.mul_mono(mono(("x30", 2 * k))).map_coeff(lambda x: x * c)
        res = res + h
    return res


bad = 0
for m in range(4):
    for f in fs:
        got = tau1_disp(m, f)
        want = sy.act_power(S, "tau1", m, f) if m else f
        if got != want:
            bad += 1
            if bad <= 3:
                print("WIRKTAU FAIL", m, poly_text(f))
                print("  got ", poly_text(got))
                print("  want", poly_text(want))
print("WirkTau display mismatches:", bad)

# --- (b) S1/T2 power displays ------------------------------------------


def s1_disp(m, f):
    c = (-ONE if m % 2 else ONE) * RatQ.u_pow(m) * rt_pow(-m)
    h = f.scale_arg("x+", -m).scale_arg("x30", -m).scale_arg("x-", m)
    return h.jackson_power("x+", 2, m).mul_mono(mono(("x30", m))) \
        .map_coeff(lambda x: x * c)


def t2_disp(m, f):
    c = RatQ.u_pow(-m) * rt_pow(-m)
    h = f.scale_arg("x+", m).scale_arg("x30", -m).scale_arg("x-", -m)
    return h.jackson_power("x-", 2, m).mul_mono(mono(("x30", m))) \
        .map_coeff(lambda x: x * c)


for name, disp, gen in (("S1", s1_disp, "S1"), ("T2", t2_disp, "T2")):
    bad = 0
    for m in range(4):
        for f in fs:
            got = disp(m, f)
            want = sy.act_power(S, gen, m, f) if m else f
            if got != want:
                bad += 1
                if bad <= 3:
                    print(name, "FAIL", m, poly_text(f))
                    print("  got ", poly_text(got))
                    print("  want", poly_text(want))
    print(f"{name} power display mismatches:", bad)

# --- (c) MinBraiSecTens -------------------------------------------------


def pbw_word(m):
    return word(*[(v, e) for v in sd.vars for vv, e in m if vv == v])


def nc_from_comm(p):
    out = NCPoly()
    for m, c in p.t.items():
        out = out + NCPoly.from_word(pbw_word(m)).map_coeff(lambda x: x * c)
    return out


def s0_comm(k, p):
    out = CommPoly()
    for w, c in __import__("qspace.spaces",fromlist=["s0_poly"]).s0_poly(k, p).t.items():
        out = out + CommPoly.from_mono(mono(*w)).map_coeff(lambda x: x * c)
    return out


def sectens_lhs(nr, A, B, m, t, n3):
    inner = CommPoly.from_mono(mono(("x+", t), ("x30", n3)))
    for _ in range(m):
        inner = sy.act(S, "T-", inner)
    pre = word(("r2", nr), ("x+", A), ("x30", B))
    res = NCPoly()
    for mm, c in inner.t.items():
        res = res + sd.normal_form(
            NCPoly.from_word(word_concat(pre, pbw_word(mm)))
        ).map_coeff(lambda x: x * c)
    return res


def sectens_rhs(nr, A, B, m, t, n3):
    nm = t + n3
    kl = nm - m
    res = NCPoly()
    for w in range(m + 1):
        for w1 in range(t + 1):
            for w2 in range(t + 1):
                if not (w1 + w2 <= min(w, t) and w <= w1 + 2 * w2):
                    continue
                c0 = RatQ.u_pow(3 * (m - w)) * rt_pow(m - w) \
                    * RatQ.q_pow(-2 * nm * t) * sy.coeff_dq(w, t, w1, w2) \
                    * RatQ.q_pow(2 * t * (kl + w)
                                 + 2 * (w - w1 - w2) * (kl + w - t)) \
                    * qfactorial(m - w, 2) * qbinomial(nm - t, m - w, 2) \
                    * qbinomial(m, w, 2)
                if c0.is_zero():
                    continue
                for p in range(w1 + 1):
                    c = c0 * RatQ.q_pow(-p + 2 * p * (kl - t + w1 + 2 * w2)
                                        + 2 * B * (t + p - w1 - w2))
                    em = m - w1 - w2 + p
                    if em < 0:
                        continue
                    base = word(("r2", nr), ("x+", A + t - w1 - w2 + p),
                                ("x30", B + kl - t + w1 + 2 * w2 - p))
                    s0 = s0_comm(w1, p)
                    for mm, cc in s0.t.items():
                        wrd = word_concat(word_concat(base, pbw_word(mm)),
                                          word(("x-", em)))
                        res = res + sd.normal_form(
                            NCPoly.from_word(wrd)).map_coeff(
                            lambda x: x * c * cc)
    return res


bad = 0
tot = 0
for nr in range(2):
    for A in range(3):
        for B in range(3):
            for t in range(3):
                for n3 in range(3):
                    for m in range(t + n3 + 1):
                        got = sectens_rhs(nr, A, B, m, t, n3)
                        want = sectens_lhs(nr, A, B, m, t, n3)
                        tot += 1
                        if not (got - want).is_zero():
                            bad += 1
                            if bad <= 4:
                                print("SECTENS FAIL", nr, A, B, m, t, n3)
print("SecTens mismatches:", bad, "/", tot)

from qspace.render import poly_text as pt
def ncp(p):
    s=[]
    for w,c in sorted(p.t.items(), key=str):
        s.append(f"{br.__dict__.get('x',None) or ''}{w} : {c}")
    return "\n   ".join(s)
for case in [(0,0,0,2,2,0),(0,0,0,2,2,1)]:
    got=sectens_rhs(*case); want=sectens_lhs(*case)
    d=got-want
    print("CASE",case)
    print(" got-want:")
    print("   "+ncp(d))
