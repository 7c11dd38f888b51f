"""Pure-Python reduction kernel.

Polynomials are dicts mapping exponent tuples to nonzero coefficients:
ints in [1, p) for prime characteristic p, Fractions for characteristic 0.
The compiled kernel in ``_gbcore`` implements the same functions for p > 0;
both must produce identical output (the reduced Groebner basis is unique).
"""

from fractions import Fraction

KIND_GREVLEX = 0
KIND_LEX = 1
KIND_ELIM = 2

BACKEND_NAME = "python"


class DegreeOverflowError(ArithmeticError):
    """A product exceeded the configured total-degree cap."""


def _grevlex_key(exps):
    key = [sum(exps)]
    for e in reversed(exps):
        key.append(-e)
    return tuple(key)


def mono_key(m, kind, block):
    if kind == KIND_GREVLEX:
        return _grevlex_key(m)
    if kind == KIND_LEX:
        return m
    return _grevlex_key(m[:block]) + _grevlex_key(m[block:])


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def clean(terms, p):
    """Normalize a raw coefficient dict: reduce mod p, drop zeros."""
    out = {}
    for m, c in terms.items():
        if p:
            c = c % p
        elif not isinstance(c, Fraction):
            c = Fraction(c)
        if c:
            out[m] = c
    return out


def _inv(c, p):
    return pow(c, p - 2, p) if p else Fraction(1) / c


def lead_term(terms, kind, block):
    m = max(terms, key=lambda m: mono_key(m, kind, block))
    return m, terms[m]


def monic(terms, p, kind, block):
    if not terms:
        return terms
    _, lc = lead_term(terms, kind, block)
    if lc == 1:
        return terms
    s = _inv(lc, p)
    if p:
        return {m: (c * s) % p for m, c in terms.items()}
    return {m: c * s for m, c in terms.items()}


def mul(f, g, p, cap):
    """Product of two term dicts, enforcing the total-degree cap."""
    out = {}
    for mf, cf in f.items():
        for mg, cg in g.items():
            m = mono_mul(mf, mg)
            if sum(m) > cap:
                raise DegreeOverflowError(f"total degree {sum(m)} exceeds cap {cap}")
            c = out.get(m, 0) + cf * cg
            if p:
                c %= p
            if c:
                out[m] = c
            elif m in out:
                del out[m]
    return out


def _sub_scaled(h, g, factor, q, p):
    # h -= factor * x^q * g, in place
    for m, c in g.items():
        key = mono_mul(q, m)
        v = h.get(key, 0) - factor * c
        if p:
            v %= p
        if v:
            h[key] = v
        elif key in h:
            del h[key]


def normal_form(f, basis, p, kind, block):
    """Remainder of f on division by basis; no term divisible by a basis lead."""
    basis = [b for b in basis if b]
    leads = [lead_term(b, kind, block) for b in basis]
    h = dict(f)
    out = {}
    while h:
        m = max(h, key=lambda m: mono_key(m, kind, block))
        c = h[m]
        for (lm, lc), b in zip(leads, basis):
            if mono_divides(lm, m):
                factor = c * _inv(lc, p)
                if p:
                    factor %= p
                _sub_scaled(h, b, factor, mono_div(m, lm), p)
                break
        else:
            out[m] = c
            del h[m]
    return out


def spoly(f, g, p, kind, block):
    lmf, lcf = lead_term(f, kind, block)
    lmg, lcg = lead_term(g, kind, block)
    L = mono_lcm(lmf, lmg)
    h = {}
    _sub_scaled(h, f, -_inv(lcf, p), mono_div(L, lmf), p)
    _sub_scaled(h, g, _inv(lcg, p), mono_div(L, lmg), p)
    return h


def _interreduce(polys, p, kind, block):
    F = list(polys)
    while True:
        changed = False
        out = []
        for i, f in enumerate(F):
            r = normal_form(f, out + F[i + 1 :], p, kind, block)
            if r != f:
                changed = True
            if r:
                out.append(monic(r, p, kind, block))
        F = out
        if not changed:
            return F


def buchberger(gens, p, kind, block):
    """Reduced Groebner basis of the given generators, sorted by decreasing lead."""
    G = [monic(clean(g, p), p, kind, block) for g in gens]
    G = _interreduce([g for g in G if g], p, kind, block)
    if not G:
        return []

    lms = [lead_term(g, kind, block)[0] for g in G]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    def pair_rank(ij):
        return (mono_key(mono_lcm(lms[ij[0]], lms[ij[1]]), kind, block), ij)

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.remove((i, j))
        L = mono_lcm(lms[i], lms[j])
        if L == mono_mul(lms[i], lms[j]):
            continue  # coprime leads: S-polynomial reduces to zero
        chained = False
        for k in range(len(G)):
            if k in (i, j) or not mono_divides(lms[k], L):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pairs and b not in pairs:
                chained = True
                break
        if chained:
            continue
        h = normal_form(spoly(G[i], G[j], p, kind, block), G, p, kind, block)
        if h:
            G.append(monic(h, p, kind, block))
            lms.append(lead_term(h, kind, block)[0])
            t = len(G) - 1
            pairs.update((k, t) for k in range(t))

    keep = [
        i
        for i in range(len(G))
        if not any(j != i and mono_divides(lms[j], lms[i]) for j in range(len(G)))
    ]
    reduced = []
    for i in keep:
        others = [G[j] for j in keep if j != i]
        reduced.append(normal_form(G[i], others, p, kind, block))
    reduced.sort(key=lambda g: mono_key(lead_term(g, kind, block)[0], kind, block), reverse=True)
    return reduced
