import sys
sys.path.insert(0, "src")
exec(open("scratch_cal16.py").read().split("# verify composition")[0])
from qspace.render import scalar_text

def gen_ratio(tp, dp):
    items = [(m, c) for m, c in tp.t.items() if not c.is_zero()]
    if not items:
        return None
    m0, c0 = items[0]
    d0 = dp.t.get(m0)
    if d0 is None or d0.is_zero():
        return None
    r = c0 / d0
    return r if dp.scale(r) == tp else None

seen = {}
fmonos = [(n1,n2,n3,n4) for n1 in range(3) for n2 in range(3)
          for n3 in range(3) for n4 in range(4) if n1+n2+n3+n4 <= 4]
gmonos = [mono(("x3",a),("x4",b)) for a in range(3) for b in range(2)] + \
         [mono(("x2",a),("x3",b)) for a in range(1,3) for b in range(3)] + \
         [mono(("x1",a),) for a in range(1,3)] + \
         [mono(("x1",1),("x2",1)), mono(("x2",1),("x4",1))]
for (n1,n2,n3,n4) in fmonos:
    f = CommPoly.from_mono(mono(("x1",n1),("x2",n2),("x3",n3),("x4",n4)))
    for gm in gmonos:
        g = CommPoly.from_mono(gm)
        bucket = {}
        for key, term in true_terms(n1,n2,n3,n4, g):
            bucket[key] = bucket.get(key, TensorPoly()) + term
        for (i,j,s,k,l,u,v), tp in bucket.items():
            if tp.is_zero():
                continue
            dp = br._e4_term(f, g, i, j, s, k, l, u, v)
            if dp is None or dp.is_zero():
                print("disp zero, true not:", (i,j,s,k,l,u,v))
                continue
            dp = dp.rename(sd.rename_to_copy("y"), {})
            r = gen_ratio(tp, dp)
            if r is None:
                print("shape mismatch:", (i,j,s,k,l,u,v), (n1,n2,n3,n4), gm)
                continue
            key2 = (i,j,s,k,l,u,v)
            prev = seen.get(key2)
            if prev is not None and prev != r:
                print("DEP!", key2, scalar_text(prev), scalar_text(r))
            seen[key2] = r

nontriv = {k: r for k, r in seen.items() if r != ONE}
print("tuples:", len(seen), "nontrivial:", len(nontriv))
for k, r in sorted(nontriv.items())[:40]:
    print(k, scalar_text(r))
