import sys
sys.path.insert(0, "src")
exec(open("scratch_cal13.py").read().split("seen = {}")[0])
from qspace.qcoeff import qfactorial
from fractions import Fraction as Fr

seen = {}
for np_ in range(2):
    for n3 in range(3):
        for nm in range(5):
            for M in range(5):
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
                                        if dt is None or dt.is_zero():
                                            print("disp zero:", (i,s,j,k,l,ip,jp))
                                            continue
                                        r = ratio(tt, dt)
                                        if r is None:
                                            print("mono mismatch")
                                            continue
                                        k2 = (i, s, j, k, l, ip, jp)
                                        prev = seen.get(k2)
                                        if prev is not None and prev != r:
                                            print("n-dep!", k2)
                                        seen[k2] = r

# divide out base swaps and check pure q-power
rows, rhs, keys = [], [], []
for (i, s, j, k, l, u, v), r in sorted(seen.items()):
    t_ = s - k - l
    for nvar, base_old in ((i,4),(k,4),(l,4),(s,4),(t_,4)):
        r = r * qfactorial(nvar, 2) / qfactorial(nvar, 4)
    # r should now be q^delta: check monomial
    e = None
    for cand in range(-80, 81):
        if r == RatQ.u_pow(cand):
            e = Fr(cand, 2)
            break
    if e is None:
        print("NOT PURE POWER", (i,s,j,k,l,u,v), )
        continue
    feats = [i, s, j, k, l, t_, u, v,
             i*i, s*s, j*j, k*k, l*l, t_*t_, u*u, v*v,
             i*u, i*v, u*v, l*u, l*v, s*v, s*u, j*u, j*v, k*u, k*v,
             i*j, i*k, i*l, i*s, j*k, j*l, j*s, k*l, l*s, l*t_, j*t_,
             i*t_, k*t_, u*t_, v*t_, s*t_, k*s]
    rows.append(feats)
    rhs.append(e)
    keys.append((i,s,j,k,l,u,v))

print("tuples:", len(rows))
# exact rational least squares via sympy
import sympy
A = sympy.Matrix(rows)
b = sympy.Matrix(rhs)
sol, params = A.gauss_jordan_solve(A.T*A == None or A, b) if False else (None, None)
try:
    sol, params = A.gauss_jordan_solve(b)
    sol = sol.subs({p: 0 for p in params})
except Exception as ex:
    print("solve fail", ex)
    sol = None
if sol is not None:
    res = A*sol - b
    print("residual zero:", all(x == 0 for x in res))
    names = ["i","s","j","k","l","t","u","v",
             "i^2","s^2","j^2","k^2","l^2","t^2","u^2","v^2",
             "iu","iv","uv","lu","lv","sv","su","ju","jv","ku","kv",
             "ij","ik","il","is","jk","jl","js","kl","ls","lt","jt",
             "it","kt","ut","vt","st","ks"]
    for n, c in zip(names, sol):
        if c != 0:
            print(n, c)
