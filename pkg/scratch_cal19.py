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


def act_word(ops, g):
    """ops = list of (gen, exponent) applied rightmost-first; exp may be Fraction."""
    res = g
    for gen, e in reversed(ops):
        if res.is_zero():
            return res
        if isinstance(e, Fraction) or e < 0:
            res = sy.apply_gen(sd.name, gen, e, res)
        else:
            res = sy.act_power(sd.name, gen, e, res)
    return res


def nc_to_comm(p):
    out = CommPoly()
    for w, c in p.t.items():
        out = out + CommPoly.from_mono(mono(*w)).map_coeff(lambda x: x * c)
    return out


def comm_to_nc(p):
    out = NCPoly()
    for m, c in p.t.items():
        out = out + NCPoly.from_word(word(*m)).map_coeff(lambda x: x * c)
    return out


def min_brai_mon(nr, np_, n30, nm, g):
    """MinBraiMon display, verbatim."""
    res = TensorPoly()
    pref0 = RatQ.u_pow(-3 * nm) * rt_pow(-nm) / qfactorial(nm, 2)
    for i in range(np_ + 1):
        for j in range(n30 + 1):
            c1 = pref0 * (-ONE if (i + j) % 2 else ONE) \
                * RatQ.u_pow(3 * i + j) * rt_pow(i + j) * LAM ** (i + j) \
                * RatQ.q_pow(-j * (j + 1) - 2 * j * (np_ - 2 * i)) \
                * qbinomial(np_, i, 2) * qbinomial(n30, j, 2)
            for l in range(nm + 1):
                for v in range(nm - l + 1):
                    c2 = c1 * (-ONE if l % 2 else ONE) \
                        * RatQ.q_pow(l * (l - 1)) \
                        * qbinomial(l + v, v, 2) * qbinomial(nm, l + v, 2)
                    for t in range(nm + 1):
                        c3 = c2 * (-ONE if t % 2 else ONE) \
                            * RatQ.u_pow(t) * rt_pow(t) * LAM ** t \
                            * RatQ.q_pow(-t * (t + 1)) * qbinomial(nm, t, 2)
                        if c3.is_zero():
                            continue
                        ops = [("T2", i), ("S1", j), ("sigma2", np_ - i),
                               ("tau1", n30 - j),
                               ("tau3", F(-(np_ - nm - i + j + l + v), 2)),
                               ("S1", t), ("tau1", nm - t),
                               ("tau3", F(-t, 2)), ("T-", l),
                               ("Lambda", F(-(2 * nr + np_ + n30 + nm), 2))]
                        gl = act_word(ops, g)
                        if gl.is_zero():
                            continue
                        # right factor: monomial prefix times T- action, in NC
                        inner = CommPoly.from_mono(
                            mono(("x+", t), ("x30", nm - t)))
                        for _ in range(nm - l - v):
                            inner = sy.act(sd.name, "T-", inner)
                        if inner.is_zero():
                            continue
                        pre = word(("r2", nr), ("x+", np_ - i + j),
                                   ("x30", n30 - j + i))
                        ncr = NCPoly()
                        for m, c in inner.t.items():
                            ncr = ncr + sd.normal_form(
                                NCPoly.from_word(word_concat(pre, word(*m)))
                            ).map_coeff(lambda x: x * c)
                        fr = nc_to_comm(ncr)
                        res = res + TensorPoly.tensor(
                            gl.rename(sd.rename_to_copy("y")), fr).scale(c3)
    return res


def monos(deg):
    out = []
    for nr in range(deg // 2 + 1):
        for a in range(deg + 1):
            for b in range(deg + 1):
                for c in range(deg + 1):
                    if 2 * nr + a + b + c <= deg:
                        out.append((nr, a, b, c))
    return out


bad = 0
tot = 0
for (nr, a, b, c) in monos(2):
    f = CommPoly.from_mono(mono(("r2", nr), ("x+", a), ("x30", b), ("x-", c)))
    for (mr, d, e, h) in monos(2):
        g = CommPoly.from_mono(mono(("r2", mr), ("x+", d), ("x30", e),
                                    ("x-", h)))
        t = TensorPoly.tensor(f, g.rename(sd.rename_to_copy("y")))
        want = br.braid_oracle(sd, br.INVERSE, t)
        got = min_brai_mon(nr, a, b, c, g)
        tot += 1
        if got != want:
            bad += 1
            if bad <= 6:
                print("FAIL", (nr, a, b, c), (mr, d, e, h))
                print("  got ", tensor_text(got))
                print("  want", tensor_text(want))
print("MinBraiMon mismatches:", bad, "/", tot)
