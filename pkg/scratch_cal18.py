import sys
sys.path.insert(0, "src")
from qspace.commfn import CommPoly, TensorPoly, mono
from qspace.spaces import get_space
from qspace import braiding as br
from qspace.render import tensor_text, poly_text

sd = get_space("minkowski")
cases = [("x+",), ("x30",), ("x-",), ("r2",)]
for fv in cases:
    for gv in cases:
        f = CommPoly.var(fv[0])
        g = CommPoly.var(gv[0])
        got = br._closed_minkowski(f, g).rename(sd.rename_to_copy("y"), {})
        t = TensorPoly.tensor(f, g.rename(sd.rename_to_copy("y")))
        wi = br.braid_oracle(sd, br.INVERSE, t)
        wf = br.braid_oracle(sd, br.FORWARD, t)
        tag = "INV" if got == wi else ("FWD" if got == wf else "NEITHER")
        print(fv[0], gv[0], tag)
        if tag == "NEITHER":
            print("  got", tensor_text(got))
            print("  inv", tensor_text(wi))
            print("  fwd", tensor_text(wf))
