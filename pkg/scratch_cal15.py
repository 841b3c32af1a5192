import sys
sys.path.insert(0, "src")
from qspace.qcoeff import RatQ, ONE, LAM, LAMP, Q, QI, qfactorial, qbinomial
from qspace.commfn import CommPoly, TensorPoly, mono
from qspace.spaces import get_space
from qspace import braiding as br
from qspace import symmetry as sy
from qspace.render import tensor_text, poly_text, scalar_text

sd = get_space("euclid4")
print("L1+ |> x3 =", poly_text(sy.act("euclid4", "L1+", CommPoly.var("x3"))))
print("L1+^2 |> x3^2 =", poly_text(sy.act_power("euclid4", "L1+", 2,
      CommPoly.from_mono(mono(("x3", 2))))))
print("L2+ |> x3 =", poly_text(sy.act("euclid4", "L2+", CommPoly.var("x3"))))
print("L2+ |> x2 =", poly_text(sy.act("euclid4", "L2+", CommPoly.var("x2"))))
print("L1+ |> x2 =", poly_text(sy.act("euclid4", "L1+", CommPoly.var("x2"))))

f = CommPoly.from_mono(mono(("x4", 2)))
g = CommPoly.from_mono(mono(("x3", 2)))
t = TensorPoly.tensor(f, g.rename(sd.rename_to_copy("y")))
print("want:", tensor_text(br.braid_oracle(sd, br.INVERSE, t)))

for i in range(f.degree("x2") + 1):
    for j in range(f.degree("x3") + 1):
        for s in range(f.degree("x4") + 1):
            for k in range(s + 1):
                for l in range(s - k + 1):
                    v = s - k - l
                    for u in range(v, s + 1):
                        term = br._e4_term(f, g, i, j, s, k, l, u, v)
                        if term is not None and not term.is_zero():
                            print(f"i={i} j={j} s={s} k={k} l={l} u={u} v={v}:",
                                  tensor_text(term))
