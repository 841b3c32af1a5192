import sys
sys.path.insert(0, "src")
from qspace.commfn import CommPoly, TensorPoly, mono
from qspace.spaces import get_space
from qspace import braiding as br
from qspace.render import tensor_text, poly_text

def monos(sd, deg):
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

def check(name, closed_fn, direction, deg):
    sd = get_space(name)
    bad = 0
    for f in monos(sd, deg):
        for g in monos(sd, deg):
            t = TensorPoly.tensor(f, g.rename(sd.rename_to_copy("y")))
            want = br.braid_oracle(sd, direction, t)
            got = closed_fn(f, g).rename(sd.rename_to_copy("y"), {})
            if got != want:
                bad += 1
                if bad <= 3:
                    print("FAIL", name, poly_text(f), "|", poly_text(g))
                    print("  got ", tensor_text(got))
                    print("  want", tensor_text(want))
    print(f"closed vs oracle {name}: mismatches {bad}")


check("euclid3", br._closed_euclid3, br.FORWARD, 2)
check("euclid4", br._closed_euclid4, br.INVERSE, 2)
