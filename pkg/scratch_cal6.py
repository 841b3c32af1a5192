import sys
sys.path.insert(0, "src")
from fractions import Fraction
from qspace.qcoeff import RatQ, ONE, ZERO, Q, QI, LAM, LAMP
from qspace.commfn import CommPoly, mono
from qspace.spaces import MINKOWSKI
from qspace import symmetry as sy
from qspace.render import poly_text

sp = "minkowski"
F = Fraction


def monos(deg, rmax=1):
    out = []
    for a in range(rmax + 1):
        for b in range(deg + 1):
            for c in range(deg + 1 - b):
                for d in range(deg + 1 - b - c):
                    out.append(CommPoly.from_mono(
                        mono(("r2", a), ("x+", b), ("x30", c), ("x-", d))))
    return out


M3 = monos(3)
M2 = monos(2)

lam = LAM
lami = LAM.inv()
q2 = RatQ.q_pow(2)
qi2 = RatQ.q_pow(-2)

# each relation: lhs terms == rhs terms, terms are (coeff, word)
REL = [
    ("tau1 T+", [(ONE, [("tau1", 1), ("T+", 1)])],
     [(ONE, [("T+", 1), ("tau1", 1)]), (lam, [("T2", 1)])]),
    ("tau1 T-", [(ONE, [("tau1", 1), ("T-", 1)])],
     [(qi2, [("T-", 1), ("tau1", 1)]), (-lam, [("S1", 1)])]),
    ("tau1 T2", [(ONE, [("tau1", 1), ("T2", 1)])],
     [(q2, [("T2", 1), ("tau1", 1)])]),
    ("sigma2 T+", [(ONE, [("sigma2", 1), ("T+", 1)])],
     [(ONE, [("T+", 1), ("sigma2", 1)]),
      (-q2 * lam, [("tau3", 1), ("T2", 1)])]),
    ("sigma2 T-", [(ONE, [("sigma2", 1), ("T-", 1)])],
     [(q2, [("T-", 1), ("sigma2", 1)]), (q2 * lam, [("S1", 1)])]),
    ("sigma2 T2", [(ONE, [("sigma2", 1), ("T2", 1)])],
     [(qi2, [("T2", 1), ("sigma2", 1)])]),
    ("T+ T2", [(ONE, [("T+", 1), ("T2", 1)])],
     [(qi2, [("T2", 1), ("T+", 1)])]),
    ("T- T2", [(ONE, [("T-", 1), ("T2", 1)])],
     [(ONE, [("T2", 1), ("T-", 1)]), (lami, [("sigma2", 1)]),
      (-lami, [("tau1", 1)])]),
    ("T+ S1", [(ONE, [("T+", 1), ("S1", 1)])],
     [(q2, [("S1", 1), ("T+", 1)]), (lami, [("tau3", 1), ("tau1", 1)]),
      (-lami, [("sigma2", 1)])]),
    ("T- S1", [(ONE, [("T-", 1), ("S1", 1)])],
     [(ONE, [("S1", 1), ("T-", 1)])]),
    ("T+ T-", [(ONE, [("T+", 1), ("T-", 1)])],
     [(q2, [("T-", 1), ("T+", 1)]), (Q * lami, []),
      (-Q * lami, [("tau3", 1)])]),
    ("T2 S1", [(ONE, [("T2", 1), ("S1", 1)])],
     [(ONE, [("S1", 1), ("T2", 1)])]),
    ("tau1 sigma2", [(ONE, [("tau1", 1), ("sigma2", 1)])],
     [(ONE, [("sigma2", 1), ("tau1", 1)]),
      (Q * lam * lam * lam, [("T2", 1), ("S1", 1)])]),
    ("tau3 T+", [(ONE, [("tau3", 1), ("T+", 1)])],
     [(RatQ.q_pow(-4), [("T+", 1), ("tau3", 1)])]),
    ("tau3 T-", [(ONE, [("tau3", 1), ("T-", 1)])],
     [(RatQ.q_pow(4), [("T-", 1), ("tau3", 1)])]),
    ("tau3 T2", [(ONE, [("tau3", 1), ("T2", 1)])],
     [(RatQ.q_pow(-4), [("T2", 1), ("tau3", 1)])]),
    ("tau3 S1", [(ONE, [("tau3", 1), ("S1", 1)])],
     [(RatQ.q_pow(4), [("S1", 1), ("tau3", 1)])]),
    ("tau3 tau1", [(ONE, [("tau3", 1), ("tau1", 1)])],
     [(ONE, [("tau1", 1), ("tau3", 1)])]),
    ("tau3 sigma2", [(ONE, [("tau3", 1), ("sigma2", 1)])],
     [(ONE, [("sigma2", 1), ("tau3", 1)])]),
]


def side(terms, f):
    out = CommPoly()
    for c, w in terms:
        out = out + sy.apply_word(sp, w, f).scale(c)
    return out


for name, lhs, rhs in REL:
    ok = True
    for f in M3:
        if side(lhs, f) != side(rhs, f):
            if ok:
                print(f"REL FAIL {name} on {poly_text(f)}")
                print("  lhs:", poly_text(side(lhs, f)))
                print("  rhs:", poly_text(side(rhs, f)))
            ok = False
    print(f"rel {name}: {ok}")

# powers vs iterated
for g in ("S1", "T2", "tau1", "T+"):
    bad = 0
    for m in range(4):
        for f in M3:
            it = f
            for _ in range(m):
                it = sy.act(sp, g, it)
            if sy.act_power(sp, g, m, f) != it:
                bad += 1
    print(f"{g} power==iter mismatches:", bad)

# T- alternate display forms
bad1 = bad2 = 0
for m in range(4):
    for f in M3:
        p = sy.act_power(sp, "T-", m, f)
        if sy.tminus_monomial_form(m, f) != p:
            bad1 += 1
            if bad1 <= 2:
                print("mono form FAIL", m, poly_text(f))
        if sy.tminus_func_form(m, f) != p:
            bad2 += 1
            if bad2 <= 2:
                print("func form FAIL", m, poly_text(f))
print("T- monomial-form mismatches:", bad1)
print("T- function-form mismatches:", bad2)

# module algebra through the registered coproducts
for g in ("T-", "T+", "S1", "T2", "tau1", "sigma2", "tau3", "Lambda"):
    gen = sy.get_gen(sp, g)
    ok = True
    for f in M2:
        for h in M2:
            lhs = sy.apply_gen(sp, g, 1, MINKOWSKI.star_oracle(f, h))
            rhs = CommPoly()
            for c, wl, wr in gen.coproduct:
                rhs = rhs + MINKOWSKI.star_oracle(
                    sy.apply_word(sp, wl, f),
                    sy.apply_word(sp, wr, h)).scale(c)
            if lhs != rhs:
                if ok:
                    print(f"MODALG FAIL {g} f={poly_text(f)} h={poly_text(h)}")
                ok = False
    print(f"module algebra {g}: {ok}")


# antipode axiom: sum S(h_(1)) |> (h_(2) |> f) = eps(h) f
def anti_word(w, f):
    for name, e in w:
        gen = sy.get_gen(sp2, name)
        if e == 1 and gen.antipode is not None:
            f = sy.antipode_act(sp2, name, f)
        elif gen.diag_u is not None:
            f = sy.apply_gen(sp2, name, -e, f)
        else:
            raise AssertionError((name, e))
    return f


from qspace.symmetry import _GENS as _REG
for sp2 in ("euclid3", "euclid4", "minkowski", "manin"):
    for (s_, g), gen in sorted(_REG.items()):
        if s_ != sp2 or gen.coproduct is None or gen.antipode is None:
            continue
        ok = True
        # build test monomials per space
        if sp2 == "minkowski":
            tests = M2
        else:
            from qspace.spaces import get_space
            vs = get_space(sp2).vars
            tests = [CommPoly.constant(ONE)] + \
                [CommPoly.var(v) for v in vs] + \
                [CommPoly.var(vs[0]) * CommPoly.var(vs[-1])]
        for f in tests:
            acc = CommPoly()
            for c, wl, wr in gen.coproduct:
                acc = acc + anti_word(wl, sy.apply_word(sp2, wr, f)).scale(c)
            if acc != f.scale(gen.counit):
                if ok:
                    print(f"ANTIPODE FAIL {sp2}:{g} f={poly_text(f)}")
                    print("  got:", poly_text(acc))
                ok = False
        print(f"antipode axiom {sp2}:{g}: {ok}")
