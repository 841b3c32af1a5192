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
    res = g
    for gen, e in reversed(ops):
        if res.is_zero():
            return res
        if isinstance(e, Fraction) or e < 0:
            res = sy.apply_gen(sd.name, gen, e, res)
        else:
            res = sy.act_power(sd.name, gen, e, res)
    return res


def pbw_word(m):
    return word(*[(v, e) for v in sd.vars for vv, e in m if vv == v])


def nc_to_comm(p):
    out = CommPoly()
    for w, c in p.t.items():
        out = out + CommPoly.from_mono(mono(*w)).map_coeff(lambda x: x * c)
    return out


# each block generator yields (coeff, ops, NCPoly target)

def blk_r2(n):
    yield ONE, [("Lambda", F(-n, 1))], NCPoly.from_word(word(("r2", n)))


def blk_xp(n):
    for k in range(n + 1):
        c = qbinomial(n, k, 2) * (-ONE if k % 2 else ONE) \
            * RatQ.u_pow(3 * k) * rt_pow(-k) * LAM ** k
        ops = [("Lambda", F(-n, 2)), ("T2", k), ("sigma2", n - k),
               ("tau3", F(-(n - k), 2))]
        yield c, ops, NCPoly.from_word(word(("x+", n - k), ("x30", k)))


def blk_x30(n):
    for k in range(n + 1):
        c = qbinomial(n, k, 2) * (-ONE if k % 2 else ONE) \
            * RatQ.u_pow(k) * rt_pow(k) * LAM ** k \
            * RatQ.q_pow(-k * (k + 1))
        ops = [("Lambda", F(-n, 2)), ("S1", k), ("tau1", n - k),
               ("tau3", F(-k, 2))]
        yield c, ops, NCPoly.from_word(word(("x+", k), ("x30", n - k)))


def blk_xm(n):
    for i in range(n + 1):
        for k in range(n + 1):
            for l in range(n - k + 1):
                c = (-ONE if (k + i) % 2 else ONE) * LAM ** i \
                    * RatQ.u_pow(i - n) * rt_pow(i - n) / qfactorial(n, 2) \
                    * RatQ.q_pow(k * (k - 1) + i * (i - 1)
                                 + 2 * (n - k - l - i) * (i + k) - n) \
                    * qbinomial(n, i, 2) * qbinomial(n, k + l, 2) \
                    * qbinomial(k + l, k, 2)
                if c.is_zero():
                    continue
                ops = [("Lambda", F(-n, 2)), ("T-", l), ("tau1", n - i),
                       ("S1", i), ("T-", k), ("tau3", F(n - l - i - k, 2))]
                inner = CommPoly.from_mono(mono(("x+", i), ("x30", n - i)))
                for _ in range(n - k - l):
                    inner = sy.act(sd.name, "T-", inner)
                if inner.is_zero():
                    continue
                tgt = NCPoly()
                for m, cc in inner.t.items():
                    tgt = tgt + NCPoly.from_word(pbw_word(m)).map_coeff(
                        lambda x: x * cc)
                yield c, ops, tgt


def braid_block(gen, n, g):
    """Check one power display vs oracle."""
    res = TensorPoly()
    for c, ops, tgt in gen(n):
        gl = act_word(ops, g)
        if gl.is_zero():
            continue
        fr = nc_to_comm(sd.normal_form(tgt))
        res = res + TensorPoly.tensor(
            gl.rename(sd.rename_to_copy("y")), fr).scale(c)
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


gs = [CommPoly.from_mono(mono(("r2", mr), ("x+", d), ("x30", e), ("x-", h)))
      for (mr, d, e, h) in monos(2)]

for name, gen, v in (("r2", blk_r2, "r2"), ("x+", blk_xp, "x+"),
                     ("x30", blk_x30, "x30"), ("x-", blk_xm, "x-")):
    bad = 0
    for n in range(4):
        f = CommPoly.from_mono(mono((v, n)))
        for g in gs:
            t = TensorPoly.tensor(f, g.rename(sd.rename_to_copy("y")))
            want = br.braid_oracle(sd, br.INVERSE, t)
            got = braid_block(gen, n, g)
            if got != want:
                bad += 1
                if bad <= 3:
                    print("FAIL", name, n, poly_text(g))
                    print("  got ", tensor_text(got))
                    print("  want", tensor_text(want))
    print(f"power display {name}: mismatches {bad}")
