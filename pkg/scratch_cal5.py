import sys
sys.path.insert(0, "src")
from qspace.qcoeff import RatQ, ONE, ZERO, Q, LAMP, rt_pow
from qspace.commfn import CommPoly, mono
from qspace.ncpoly import NCPoly, word
from qspace.spaces import MINKOWSKI, MINK_X0, eliminate_x0
from qspace import symmetry as sy

sp = "minkowski"


def dq_tilde_empirical(mmax, nmax):
    """Solve for the true diagonal d~ values from iterated T- singles."""
    out = {}
    for n in range(nmax + 1):
        f = CommPoly.from_mono(mono(("x+", n)))
        it = f
        for m in range(1, mmax + 1):
            it = sy.act(sp, "T-", it)
            unknowns = [(s, l)
                        for s in range(min(n, m) + 1)
                        for l in range(min(n, m) - s + 1)
                        if m <= s + 2 * l]
            if not unknowns:
                assert it.is_zero(), (m, n)
                continue
            cols = []
            for (s, l) in unknowns:
                w = word(("x+", n - s - l), ("x30", s + 2 * l - m),
                         ("x0", s), ("x-", m - s - l))
                g = MINKOWSKI.w_inv(eliminate_x0(NCPoly.from_word(w, ONE)))
                cols.append(g)
            monos = sorted({mo for g in cols for mo in g.t} | set(it.t))
            # rows of [A | b]
            rows = [[g.t.get(mo, ZERO) for g in cols] + [it.t.get(mo, ZERO)]
                    for mo in monos]
            nu = len(unknowns)
            # gaussian elimination
            r = 0
            piv = []
            for c in range(nu):
                pr = next((i for i in range(r, len(rows))
                           if not rows[i][c].is_zero()), None)
                if pr is None:
                    continue
                rows[r], rows[pr] = rows[pr], rows[r]
                inv = rows[r][c].inv()
                rows[r] = [x * inv for x in rows[r]]
                for i in range(len(rows)):
                    if i != r and not rows[i][c].is_zero():
                        fac = rows[i][c]
                        rows[i] = [a - fac * b
                                   for a, b in zip(rows[i], rows[r])]
                piv.append(c)
                r += 1
            assert len(piv) == nu, f"underdetermined m={m} n={n}"
            for i in range(r, len(rows)):
                assert rows[i][nu].is_zero(), f"inconsistent m={m} n={n}"
            pref = RatQ.u_pow(m) * rt_pow(m)
            for idx, (s, l) in enumerate(unknowns):
                c = rows[idx][nu]
                out[(m, n, s, l)] = c / (pref * RatQ.q_pow(m - s - l))
    return out


emp = dq_tilde_empirical(4, 4)
print("--- empirical vs printed recursion vs closed ---")
for (m, n, s, l), v in sorted(emp.items()):
    i = m - s - l
    rec = sy.coeff_dq_tilde_rec(m, n, s, l, i)
    clo = sy.coeff_dq_tilde(m, n, s, l, i)
    tag = ""
    if rec != v:
        tag += " REC!"
    if clo != v:
        tag += " CLO!"
    if tag:
        print(f"m={m} n={n} s={s} l={l} i={i}: emp={v} rec={rec} "
              f"closed={clo}{tag}")
print("done", len(emp))
