"""Free-algebra elements and PBW normal ordering by term rewriting.

Words are tuples of (generator, exponent) runs with adjacent runs carrying
distinct generators.  A RewriteSystem fixes a total order on generators and
a rule for every out-of-order adjacent pair; repeatedly rewriting the first
misordered pair terminates because every rule strictly lowers the number of
misordered letter pairs, and the normal forms are the basis of ordered
monomials (checked against the commutative dimension count in the tests).

Two rule shapes cover all the quantum spaces here:

  swap     B A -> c A B               (works for any integer exponents)
  general  B A -> NCPoly replacement  (unit exponents, positive powers only)
"""

from __future__ import annotations

from .qcoeff import RatQ, ZERO, ONE


W_ONE = ()


def word(*pairs):
    out = []
    for g, e in pairs:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            ne = out[-1][1] + e
            if ne:
                out[-1] = (g, ne)
            else:
                out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def word_concat(w1, w2):
    if not w1:
        return w2
    if not w2:
        return w1
    return word(*w1, *w2)


def word_degree(w):
    return sum(e for _, e in w)


class NCPoly:
    """Linear combination of free-algebra words with RatQ coefficients."""

    __slots__ = ("t",)

    def __init__(self, terms=None):
        self.t = dict(terms) if terms else {}

    @staticmethod
    def from_word(w, coeff=ONE):
        if coeff.is_zero():
            return NCPoly()
        return NCPoly({w: coeff})

    @staticmethod
    def constant(coeff):
        return NCPoly.from_word(W_ONE, coeff)

    def is_zero(self):
        return not self.t

    def __bool__(self):
        return bool(self.t)

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.t == other.t

    def __add__(self, other):
        res = dict(self.t)
        for w, c in other.t.items():
            acc = res.get(w)
            nc = c if acc is None else acc + c
            if nc.is_zero():
                res.pop(w, None)
            else:
                res[w] = nc
        return NCPoly(res)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if isinstance(c, int):
            c = RatQ.from_int(c)
        if c.is_zero():
            return NCPoly()
        return NCPoly({w: v * c for w, v in self.t.items()})

    def raw_mul(self, other):
        """Concatenation product without normal ordering."""
        res = NCPoly()
        for w1, c1 in self.t.items():
            for w2, c2 in other.t.items():
                res = res + NCPoly.from_word(word_concat(w1, w2), c1 * c2)
        return res

    def coeff_of(self, w):
        return self.t.get(w, ZERO)

    def map_coeff(self, fn):
        res = {}
        for w, c in self.t.items():
            c2 = fn(c)
            if not c2.is_zero():
                res[w] = c2
        return NCPoly(res)

    def __repr__(self):
        items = sorted(self.t.items())
        return "NCPoly(" + ", ".join(f"{w}: {c!r}" for w, c in items) + ")"


class RewriteSystem:
    """Normal-ordering rules for one presentation of a quantum space."""

    def __init__(self, gens, laurent=(), rules=None):
        """gens: generator names in normal order (smallest first).
        laurent: generators allowed negative exponents.
        rules: {(B, A): ("swap", RatQ) | ("general", NCPoly)} for every pair
        with order(B) > order(A), giving the reduction of the product B*A.
        """
        self.gens = tuple(gens)
        self.order = {g: i for i, g in enumerate(self.gens)}
        self.laurent = frozenset(laurent)
        self.rules = dict(rules or {})
        self._nf_cache = {}
        for b in self.gens:
            for a in self.gens:
                if self.order[b] > self.order[a] and (b, a) not in self.rules:
                    raise ValueError(f"missing rewrite rule for ({b}, {a})")

    def check_word(self, w):
        for g, e in w:
            if g not in self.order:
                raise ValueError(f"unknown generator {g}")
            if e < 0 and g not in self.laurent:
                raise ValueError(f"negative power of non-invertible {g}")

    def is_ordered(self, w):
        idx = [self.order[g] for g, _ in w]
        return all(idx[i] < idx[i + 1] for i in range(len(idx) - 1))

    def normal_form(self, p):
        """Normal-order an NCPoly."""
        res = NCPoly()
        for w, c in p.t.items():
            res = res + self._nf_word(w).scale(c)
        return res

    def multiply(self, p1, p2):
        return self.normal_form(p1.raw_mul(p2))

    def _nf_word(self, w):
        cached = self._nf_cache.get(w)
        if cached is not None:
            return cached
        self.check_word(w)
        res = self._reduce(w, first_choice=None)
        self._nf_cache[w] = res
        return res

    def _find_misorder(self, w):
        for i in range(len(w) - 1):
            if self.order[w[i][0]] > self.order[w[i + 1][0]]:
                return i
        return None

    def _reduce(self, w, first_choice=None):
        """Fully reduce a word; optionally force the first rewrite position."""
        i = self._find_misorder(w) if first_choice is None else first_choice
        if i is None:
            return NCPoly.from_word(w)
        (g1, e1), (g2, e2) = w[i], w[i + 1]
        rule = self.rules[(g1, g2)]
        if rule[0] == "swap":
            coeff = rule[1] ** (e1 * e2)
            w2 = word(*w[:i], (g2, e2), (g1, e1), *w[i + 2:])
            return self._nf_word(w2).scale(coeff)
        if e1 < 1 or e2 < 1:
            raise ValueError(
                f"cannot rewrite {g1}^{e1} {g2}^{e2}: negative power in a "
                "non-swap relation")
        repl = rule[1]
        res = NCPoly()
        prefix = word(*w[:i], (g1, e1 - 1))
        suffix = word((g2, e2 - 1), *w[i + 2:])
        for wr, cr in repl.t.items():
            w2 = word_concat(word_concat(prefix, wr), suffix)
            res = res + self._nf_word(w2).scale(cr)
        return res

    # -- diagnostics ------------------------------------------------------

    def check_local_confluence(self, max_degree):
        """Reduce every word of letters up to max_degree along every choice
        of first rewrite position; all results must coincide.  Returns the
        list of offending words (empty means confluent)."""
        from itertools import product
        bad = []
        for d in range(2, max_degree + 1):
            for letters in product(self.gens, repeat=d):
                w = word(*((g, 1) for g in letters))
                positions = [i for i in range(len(w) - 1)
                             if self.order[w[i][0]] > self.order[w[i + 1][0]]]
                if len(positions) < 2:
                    continue
                results = {self._freeze(self._reduce(w, first_choice=i))
                           for i in positions}
                if len(results) != 1:
                    bad.append(letters)
        return bad

    @staticmethod
    def _freeze(p):
        return tuple(sorted(p.t.items()))

    def ordered_monomials(self, degree, allow_negative=False):
        """All normal-ordered words of exact total degree (nonneg powers)."""
        out = []

        def rec(i, remaining, acc):
            if i == len(self.gens):
                if remaining == 0:
                    out.append(word(*acc))
                return
            for e in range(remaining + 1):
                rec(i + 1, remaining - e, acc + [(self.gens[i], e)])

        rec(0, degree, [])
        return out
