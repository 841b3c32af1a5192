"""Text, LaTeX and JSON rendering of scalars, polynomials and tensors.

Text format, also read back by the CLI parser:

  terms joined by " + " / " - ";
  a coefficient is rendered as [int] [q^k] [lambda^a] [lambda+^b] when it is
  plus/minus an integer times a q-power times powers of lambda = q - q^-1
  and lambda+ = q + q^-1; otherwise it falls back to a parenthesized
  Laurent sum "(1 + q^2)" or a quotient "(...)/(...)";
  variable powers look like x+^2, x30^-1; tensor legs are separated by "(x)".

Half-integer q-powers (q^(k/2)) and the square root lambda+^(1/2) can occur
in single symmetry-generator actions; they are rendered explicitly and
flagged by scalar_has_half_power.
"""

from __future__ import annotations

from .qcoeff import (RatQ, ZERO, ONE, LAM, LAMP, P_ONE, pnorm, pdivexact,
                     pmul, pgcd)
from .commfn import mono_degree, mono_get

_PLAM = (-1, 0, 0, 0, 1)    # u^4 - 1  (lambda times u^2)
_PLAMP = (1, 0, 0, 0, 1)    # u^4 + 1  (lambda+ times u^2)


def _multiplicity(p, d):
    """Largest k with d^k dividing p."""
    if not p:
        return 0
    k = 0
    while True:
        try:
            p = pdivexact(p, d)
        except ArithmeticError:
            return k
        k += 1


def _factor_frac(num, den):
    """num/den -> (a, b, rest RatQ) with rest = num/den / (lam^a lamp^b)."""
    a = _multiplicity(num, _PLAM) - _multiplicity(den, _PLAM)
    b = _multiplicity(num, _PLAMP) - _multiplicity(den, _PLAMP)
    rest = RatQ(num, den) * LAM ** (-a) * LAMP ** (-b)
    return a, b, rest


def _qpow_token(e):
    """q-power token for u-exponent e."""
    if e == 0:
        return None
    if e % 2 == 0:
        return f"q^{e // 2}" if e != 2 else "q"
    return f"q^({e}/2)"


def _laurent_sum_text(terms):
    """Render {u-exponent: int} ascending as '1 + q^2 - 2 q^3'."""
    bits = []
    for e in sorted(terms):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        c = abs(c)
        tok = _qpow_token(e)
        if tok is None:
            body = str(c)
        elif c == 1:
            body = tok
        else:
            body = f"{c} {tok}"
        if not bits:
            bits.append(body if sign == "+" else "-" + body)
        else:
            bits.append(f"{sign} {body}")
    return " ".join(bits) if bits else "0"


def _scalar_factor_text(c):
    """Try the compact form: (negative?, token string) or None."""
    a, b, rest = _factor_frac(c.na, c.da)
    lt = rest.laurent_terms()
    if lt is None or len(lt) != 1:
        return None
    (e, k), = lt.items()
    neg = k < 0
    k = abs(k)
    toks = []
    if k != 1:
        toks.append(str(k))
    tok = _qpow_token(e)
    if tok:
        toks.append(tok)
    if a:
        toks.append("lambda" if a == 1 else f"lambda^{a}")
    if b:
        toks.append("lambda+" if b == 1 else f"lambda+^{b}")
    return neg, toks


def _frac_text(c):
    """Generic fallback for the rational part of a scalar."""
    lt = c.laurent_terms()
    if lt is not None:
        return f"({_laurent_sum_text(lt)})"
    num = _laurent_sum_text({e: k for e, k in enumerate(c.na) if k})
    den = _laurent_sum_text({e: k for e, k in enumerate(c.da) if k})
    return f"({num})/({den})"


def scalar_split(c):
    """(negative, tokens) for use inside a term; tokens joined by spaces."""
    if c.has_root_part():
        apart = RatQ(c.na, c.da)
        bpart = RatQ(c.nb, c.db)
        if apart.is_zero():
            neg, toks = scalar_split(bpart)
            return neg, toks + ["lambda+^(1/2)"]
        na, ta = scalar_split(apart)
        nb, tb = scalar_split(bpart)
        sa = " ".join(ta) or "1"
        sb = (" ".join(tb) or "1") + " lambda+^(1/2)"
        mid = "- " if nb else "+ "
        return na, [f"({sa} {mid}{sb})"]
    fac = _scalar_factor_text(c)
    if fac is not None:
        return fac
    return False, [_frac_text(c)]


def scalar_text(c, standalone=True):
    if c.is_zero():
        return "0"
    neg, toks = scalar_split(c)
    body = " ".join(toks) if toks else "1"
    if standalone and len(toks) == 1 and toks[0].startswith("(") \
            and toks[0].endswith(")") and "/" not in toks[0]:
        body = toks[0][1:-1]
    return ("-" + body) if neg else body


def scalar_has_half_power(c):
    if c.has_root_part():
        return True
    for p in (c.na, c.da):
        for i, x in enumerate(p):
            if x and i % 2:
                return True
    return False


# ---------------------------------------------------------------------------
# monomials and polynomials


def _var_sort_key(order):
    pos = {v: i for i, v in enumerate(order or ())}
    big = len(pos)

    def key(v):
        return (pos.get(v, big), v)

    return key


def mono_text(m, order=None):
    if not m:
        return "1"
    key = _var_sort_key(order)
    parts = []
    for v in sorted({v for v, _ in m}, key=key):
        e = mono_get(m, v)
        parts.append(v if e == 1 else f"{v}^{e}")
    return " ".join(parts)


def _term_sort_key(m, order):
    key = _var_sort_key(order)
    vec = tuple(-mono_get(m, v)
                for v in sorted({v for v, _ in m}, key=key))
    names = tuple(sorted({v for v, _ in m}, key=key))
    return (mono_degree(m), names, vec)


def _join_terms(rendered):
    """rendered: list of (negative, body)."""
    if not rendered:
        return "0"
    out = []
    for i, (neg, body) in enumerate(rendered):
        if i == 0:
            out.append(("-" + body) if neg else body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def _term_text(c, mono_str):
    neg, toks = scalar_split(c)
    if mono_str == "1":
        body = " ".join(toks) if toks else "1"
    else:
        body = (" ".join(toks) + " " + mono_str) if toks else mono_str
    return neg, body


def poly_text(f, order=None):
    items = sorted(f.t.items(), key=lambda kv: _term_sort_key(kv[0], order))
    rendered = []
    for m, c in items:
        ms = mono_text(m, order)
        if ms == "1":
            rendered.append((scalar_split(c)[0],
                             " ".join(scalar_split(c)[1]) or "1"))
        else:
            rendered.append(_term_text(c, ms))
    return _join_terms(rendered)


def tensor_text(t, order_left=None, order_right=None):
    def key(kv):
        (mL, mR), _ = kv
        return (mono_degree(mL) + mono_degree(mR),
                _term_sort_key(mL, order_left),
                _term_sort_key(mR, order_right))

    rendered = []
    for (mL, mR), c in sorted(t.t.items(), key=key):
        ms = f"{mono_text(mL, order_left)} (x) {mono_text(mR, order_right)}"
        rendered.append(_term_text(c, ms))
    return _join_terms(rendered)


# ---------------------------------------------------------------------------
# LaTeX

_LATEX_VAR = {}


def _latex_var(v):
    cached = _LATEX_VAR.get(v)
    if cached:
        return cached
    if v == "r2":
        out = "r^{2}"
    elif v in ("yr2", "dr2"):
        out = ("\\tilde{r}^{2}" if v[0] == "y" else "\\partial_{r^{2}}")
    else:
        head, rest = v[0], v[1:]
        if rest == "30":
            rest = "3/0"
        if head == "d":
            out = f"\\partial^{{{rest}}}"
        else:
            out = f"{head}^{{{rest}}}"
    _LATEX_VAR[v] = out
    return out


def _qpow_latex(e):
    if e == 0:
        return None
    if e % 2 == 0:
        k = e // 2
        return "q" if k == 1 else f"q^{{{k}}}"
    return f"q^{{{e}/2}}"


def scalar_latex(c):
    if c.is_zero():
        return "0"
    if c.has_root_part():
        apart, bpart = RatQ(c.na, c.da), RatQ(c.nb, c.db)
        btex = scalar_latex(bpart) + "\\lambda_{+}^{1/2}"
        if apart.is_zero():
            return btex
        return scalar_latex(apart) + " + " + btex
    a, b, rest = _factor_frac(c.na, c.da)
    lt = rest.laurent_terms()
    if lt is not None and len(lt) == 1:
        (e, k), = lt.items()
        toks = []
        if k == -1:
            toks.append("-")
        elif k != 1:
            toks.append(str(k))
        qp = _qpow_latex(e)
        if qp:
            toks.append(qp)
        if a:
            toks.append("\\lambda" if a == 1 else f"\\lambda^{{{a}}}")
        if b:
            toks.append("\\lambda_{+}" if b == 1 else
                        f"\\lambda_{{+}}^{{{b}}}")
        return "".join(toks) or "1"
    lt = c.laurent_terms()
    if lt is not None:
        bits = []
        for e in sorted(lt):
            k = lt[e]
            qp = _qpow_latex(e) or ""
            mag = "" if abs(k) == 1 and qp else str(abs(k))
            body = (mag + qp) or "1"
            bits.append(("-" if k < 0 else ("+" if bits else "")) + body)
        return "\\left(" + " ".join(bits) + "\\right)"
    return ("\\frac{" + _laurent_sum_text(
        {e: k for e, k in enumerate(c.na) if k}) + "}{" + _laurent_sum_text(
        {e: k for e, k in enumerate(c.da) if k}) + "}")


def mono_latex(m, order=None):
    if not m:
        return "1"
    key = _var_sort_key(order)
    parts = []
    for v in sorted({w for w, _ in m}, key=key):
        e = mono_get(m, v)
        base = _latex_var(v)
        parts.append(base if e == 1 else f"({base})^{{{e}}}")
    return "\\, ".join(parts)


def poly_latex(f, order=None):
    items = sorted(f.t.items(), key=lambda kv: _term_sort_key(kv[0], order))
    bits = []
    for m, c in items:
        ctex = scalar_latex(c)
        mtex = mono_latex(m, order)
        if mtex == "1":
            body = ctex
        elif ctex == "1":
            body = mtex
        elif ctex == "-":
            body = "-" + mtex
        else:
            body = ctex + "\\, " + mtex
        if bits and not body.startswith("-"):
            bits.append("+ " + body)
        else:
            bits.append(body)
    return " ".join(bits) if bits else "0"


def tensor_latex(t, order_left=None, order_right=None):
    def key(kv):
        (mL, mR), _ = kv
        return (mono_degree(mL) + mono_degree(mR),
                _term_sort_key(mL, order_left),
                _term_sort_key(mR, order_right))

    bits = []
    for (mL, mR), c in sorted(t.t.items(), key=key):
        ctex = scalar_latex(c)
        body = (mono_latex(mL, order_left) + " \\otimes "
                + mono_latex(mR, order_right))
        if ctex == "-":
            body = "-" + body
        elif ctex != "1":
            body = ctex + "\\, " + body
        if bits and not body.startswith("-"):
            bits.append("+ " + body)
        else:
            bits.append(body)
    return " ".join(bits) if bits else "0"


# ---------------------------------------------------------------------------
# JSON (lossless; exponents are counted in half q-powers, i.e. powers of
# u = q^(1/2))


def scalar_json(c):
    def frac(n, d):
        return {"num": [[e, k] for e, k in enumerate(n) if k],
                "den": [[e, k] for e, k in enumerate(d) if k]}

    out = frac(c.na, c.da)
    if c.has_root_part():
        out["rt"] = frac(c.nb, c.db)
    return out


def scalar_from_json(obj):
    def poly(pairs):
        if not pairs:
            return ()
        top = max(e for e, _ in pairs)
        res = [0] * (top + 1)
        for e, k in pairs:
            res[e] += k
        return pnorm(res)

    na, da = poly(obj["num"]), poly(obj.get("den") or [[0, 1]])
    if "rt" in obj:
        nb, db = poly(obj["rt"]["num"]), poly(obj["rt"].get("den")
                                              or [[0, 1]])
    else:
        nb, db = (), (1,)
    return RatQ(na, da, nb, db)


def poly_json(f, space=None, operation=None, order=None):
    terms = []
    items = sorted(f.t.items(), key=lambda kv: _term_sort_key(kv[0], order))
    for m, c in items:
        terms.append({"coeff": scalar_json(c), "left": dict(m)})
    out = {"terms": terms}
    if space:
        out["space"] = space
    if operation:
        out["operation"] = operation
    return out


def tensor_json(t, space=None, operation=None,
                order_left=None, order_right=None):
    def key(kv):
        (mL, mR), _ = kv
        return (mono_degree(mL) + mono_degree(mR),
                _term_sort_key(mL, order_left),
                _term_sort_key(mR, order_right))

    terms = []
    for (mL, mR), c in sorted(t.t.items(), key=key):
        terms.append({"coeff": scalar_json(c),
                      "left": dict(mL), "right": dict(mR)})
    out = {"terms": terms}
    if space:
        out["space"] = space
    if operation:
        out["operation"] = operation
    return out


def poly_from_json(obj):
    from .commfn import CommPoly, TensorPoly, mono
    terms = obj["terms"]
    if terms and "right" in terms[0]:
        t = TensorPoly()
        for tm in terms:
            t = t + TensorPoly.from_term(
                mono(*tm["left"].items()), mono(*tm["right"].items()),
                scalar_from_json(tm["coeff"]))
        return t
    f = CommPoly()
    for tm in terms:
        f = f + CommPoly.from_mono(mono(*tm["left"].items()),
                                   scalar_from_json(tm["coeff"]))
    return f
