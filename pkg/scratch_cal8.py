import sys
sys.path.insert(0, "src")
from fractions import Fraction
from qspace.qcoeff import (RatQ, ONE, ZERO, Q, QI, LAM, LAMP, rt_pow,
                           qfactorial, qbinomial)
from qspace.commfn import CommPoly, TensorPoly, mono
from qspace.spaces import get_space
from qspace import braiding as br
from qspace import symmetry as sy
from qspace.render import tensor_text, poly_text

F = Fraction


def monos(sd, deg, rmax=1):
    """All monomials of total degree <= deg (r2 counts double)."""
    vs = [v for v in sd.vars]
    out = []

    def rec(i, rem, acc):
        if i == len(vs):
            out.append(CommPoly.from_mono(mono(*acc)))
            return
        v = vs[i]
        w = 2 if v == "r2" else 1
        e = 0
        while e * w <= rem:
            rec(i + 1, rem - e * w, acc + ([(v, e)] if e else []))
            e += 1
    rec(0, deg, [])
    return out


def pair_tensor(sd, f, g):
    return TensorPoly.tensor(f, g.rename(sd.rename_to_copy("y")))


# --- 1. degree-1 tables vs printed manin coordinate relations -----------
sd = get_space("manin")
x1, x2 = CommPoly.var("x1"), CommPoly.var("x2")
lam = LAM


def T(*terms):
    res = TensorPoly()
    for c, lv, rv in terms:
        res = res + TensorPoly.tensor(CommPoly.var("y" + lv[1:]),
                                      CommPoly.var(rv)).scale(c)
    return res

checks = [
    ("fwd 11", br.braid_oracle(sd, br.FORWARD, pair_tensor(sd, x1, x1)),
     T((RatQ.q_pow(2), "x1", "x1"))),
    ("fwd 12", br.braid_oracle(sd, br.FORWARD, pair_tensor(sd, x1, x2)),
     T((Q, "x2", "x1"), (Q * lam, "x1", "x2"))),
    ("fwd 21", br.braid_oracle(sd, br.FORWARD, pair_tensor(sd, x2, x1)),
     T((Q, "x1", "x2"))),
    ("fwd 22", br.braid_oracle(sd, br.FORWARD, pair_tensor(sd, x2, x2)),
     T((RatQ.q_pow(2), "x2", "x2"))),
    ("inv 11", br.braid_oracle(sd, br.INVERSE, pair_tensor(sd, x1, x1)),
     T((RatQ.q_pow(-2), "x1", "x1"))),
    ("inv 12", br.braid_oracle(sd, br.INVERSE, pair_tensor(sd, x1, x2)),
     T((QI, "x2", "x1"))),
    ("inv 21", br.braid_oracle(sd, br.INVERSE, pair_tensor(sd, x2, x1)),
     T((QI, "x1", "x2"), (-QI * lam, "x2", "x1"))),
    ("inv 22", br.braid_oracle(sd, br.INVERSE, pair_tensor(sd, x2, x2)),
     T((RatQ.q_pow(-2), "x2", "x2"))),
]
for name, got, want in checks:
    print(name, got == want, "" if got == want else tensor_text(got))

# --- 2. manin monomial display (BraidMon2dim) ---------------------------
bad = 0
for n1 in range(4):
    for n2 in range(4):
        for m1 in range(4):
            for m2 in range(4):
                f = CommPoly.from_mono(mono(("x1", n1), ("x2", n2)))
                g = CommPoly.from_mono(mono(("x1", m1), ("x2", m2)))
                got = br.braid_oracle(sd, br.INVERSE, pair_tensor(sd, f, g))
                want = TensorPoly()
                for i in range(min(n2, m1) + 1):
                    c = (-LAM) ** i * qfactorial(i, -2) \
                        * qbinomial(n2, i, -2) * qbinomial(m1, i, -2) \
                        * RatQ.q_pow(-n2 * m1 - 2 * n2 * m2
                                     - 2 * n1 * m1 - n1 * m2
                                     + i * (n1 + m2))
                    want = want + TensorPoly.from_term(
                        mono(("y1", m1 - i), ("y2", m2 + i)),
                        mono(("x1", n1 + i), ("x2", n2 - i)), c)
                if got != want:
                    bad += 1
                    if bad <= 3:
                        print("MON FAIL", n1, n2, m1, m2)
                        print(" got ", tensor_text(got))
                        print(" want", tensor_text(want))
print("manin monomial display mismatches:", bad)

# --- 3. Psi o Psi^-1 = id, all spaces, deg <= 3 ------------------------
for name in ("manin", "euclid3", "euclid4", "minkowski"):
    for variant in ("std", "tilde"):
        sd = get_space(name, variant)
        bad = 0
        for f in monos(sd, 2):
            for g in monos(sd, 2):
                t = pair_tensor(sd, f, g)
                a = br.braid_oracle(sd, br.INVERSE, t)
                # a lives in y (x) x; swap namespaces to braid back
                b = a.rename(sd.rename_from_copy("y"),
                             sd.rename_to_copy("y"))
                back = br.braid_oracle(sd, br.FORWARD, b) \
                    .rename(sd.rename_from_copy("y"),
                            sd.rename_to_copy("y"))
                if back != t:
                    bad += 1
                    if bad <= 2:
                        print("INV FAIL", name, variant, poly_text(f),
                              poly_text(g))
                        print("  got", tensor_text(back))
        print(f"Psi Psi^-1 = id on {name}/{variant}: mismatches {bad}")

# --- 4. q=1 classical flip ---------------------------------------------
for name in ("manin", "euclid3", "euclid4", "minkowski"):
    sd = get_space(name)
    bad = 0
    for f in monos(sd, 2):
        for g in monos(sd, 2):
            t = pair_tensor(sd, f, g)
            for d in (br.FORWARD, br.INVERSE):
                got = br.braid_oracle(sd, d, t)
                flip = TensorPoly.tensor(
                    g.rename(sd.rename_to_copy("y")), f)
                diff = got - flip
                for (_, _), c in diff.t.items():
                    if c.eval_at(1) != 0:
                        bad += 1
                        break
    print(f"q=1 flip on {name}: mismatches {bad}")
