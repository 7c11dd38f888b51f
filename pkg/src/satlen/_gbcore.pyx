# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduction kernel for prime characteristic.

Mirrors _kernel_py function by function; both must return identical results
(the reduced Groebner basis is unique, and division against a reduced basis
has a unique remainder). Coefficients are ints in [1, p); p fits in 31 bits
so all intermediate products fit in 64.
"""

BACKEND_NAME = "cython"

KIND_GREVLEX = 0
KIND_LEX = 1
KIND_ELIM = 2


cdef long long _inv(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    t = t % p
    if t < 0:
        t += p
    return t


cdef int _cmp_lex(tuple a, tuple b, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t i
    cdef long long x, y
    for i in range(lo, hi):
        x = a[i]
        y = b[i]
        if x != y:
            return 1 if x > y else -1
    return 0


cdef int _cmp_grevlex(tuple a, tuple b, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t i
    cdef long long da = 0, db = 0, x, y
    for i in range(lo, hi):
        da += <long long> a[i]
        db += <long long> b[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(hi - 1, lo - 1, -1):
        x = a[i]
        y = b[i]
        if x != y:
            return 1 if x < y else -1
    return 0


cdef int _cmp(tuple a, tuple b, int kind, int block):
    cdef Py_ssize_t n = len(a)
    cdef int c
    if kind == KIND_LEX:
        return _cmp_lex(a, b, 0, n)
    if kind == KIND_GREVLEX:
        return _cmp_grevlex(a, b, 0, n)
    c = _cmp_grevlex(a, b, 0, block)
    if c:
        return c
    return _cmp_grevlex(a, b, block, n)


cdef tuple _mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long long> a[i] + <long long> b[i]
    return tuple(out)


cdef tuple _mono_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long long> a[i] - <long long> b[i]
    return tuple(out)


cdef bint _mono_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long long> a[i] > <long long> b[i]:
            return False
    return True


cdef tuple _mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    cdef long long x, y
    for i in range(n):
        x = a[i]
        y = b[i]
        out[i] = x if x > y else y
    return tuple(out)


cdef tuple _max_key(dict h, int kind, int block):
    cdef tuple best = None
    for m in h:
        if best is None or _cmp(<tuple> m, best, kind, block) > 0:
            best = <tuple> m
    return best


def mono_key(m, kind, block):
    # kept for interface parity with the pure kernel
    if kind == KIND_GREVLEX:
        return _grevlex_key(m)
    if kind == KIND_LEX:
        return m
    return _grevlex_key(m[:block]) + _grevlex_key(m[block:])


def _grevlex_key(exps):
    key = [sum(exps)]
    for e in reversed(exps):
        key.append(-e)
    return tuple(key)


def clean(terms, p):
    cdef dict out = {}
    cdef long long pp = p, c
    for m, c0 in terms.items():
        c = <long long> (c0 % pp)
        if c < 0:
            c += pp
        if c:
            out[m] = c
    return out


def lead_term(terms, kind, block):
    cdef tuple m = _max_key(<dict> terms, kind, block)
    return m, terms[m]


def monic(terms, p, kind, block):
    cdef dict t = <dict> terms
    if not t:
        return t
    cdef tuple lm = _max_key(t, kind, block)
    cdef long long pp = p, lc = <long long> t[lm]
    if lc == 1:
        return t
    cdef long long s = _inv(lc, pp)
    cdef dict out = {}
    for m, c in t.items():
        out[m] = (<long long> c) * s % pp
    return out


def mul(f, g, p, cap):
    cdef dict out = {}
    cdef long long pp = p, v, cfg
    cdef Py_ssize_t i, n
    cdef long long total
    for mf, cf in (<dict> f).items():
        for mg, cg in (<dict> g).items():
            m = _mono_mul(<tuple> mf, <tuple> mg)
            total = 0
            n = len(<tuple> m)
            for i in range(n):
                total += <long long> (<tuple> m)[i]
            if total > <long long> cap:
                raise ArithmeticError(
                    f"total degree {total} exceeds cap {cap}"
                )
            cfg = (<long long> cf) * (<long long> cg) % pp
            v = (<long long> out.get(m, 0) + cfg) % pp
            if v:
                out[m] = v
            elif m in out:
                del out[m]
    return out


cdef void _sub_scaled(dict h, dict g, long long factor, tuple q, long long p):
    cdef long long v
    cdef tuple key
    for mm, cc in g.items():
        key = _mono_mul(q, <tuple> mm)
        v = (<long long> h.get(key, 0) - factor * <long long> cc) % p
        if v < 0:
            v += p
        if v:
            h[key] = v
        else:
            h.pop(key, None)


def normal_form(f, basis, p, kind, block):
    cdef list bs = [b for b in basis if b]
    cdef list lms = []
    cdef list lcs = []
    cdef Py_ssize_t k, nb = len(bs)
    cdef tuple lm
    for b in bs:
        lm = _max_key(<dict> b, kind, block)
        lms.append(lm)
        lcs.append((<dict> b)[lm])
    cdef dict h = dict(f)
    cdef dict out = {}
    cdef long long pp = p, c, factor
    cdef tuple m
    cdef int ikind = kind, iblock = block
    while h:
        m = _max_key(h, ikind, iblock)
        c = <long long> h[m]
        for k in range(nb):
            if _mono_divides(<tuple> lms[k], m):
                factor = c * _inv(<long long> lcs[k], pp) % pp
                _sub_scaled(h, <dict> bs[k], factor, _mono_div(m, <tuple> lms[k]), pp)
                break
        else:
            out[m] = c
            del h[m]
    return out


def spoly(f, g, p, kind, block):
    cdef tuple lmf = _max_key(<dict> f, kind, block)
    cdef tuple lmg = _max_key(<dict> g, kind, block)
    cdef long long pp = p
    cdef long long lcf = <long long> (<dict> f)[lmf]
    cdef long long lcg = <long long> (<dict> g)[lmg]
    cdef tuple L = _mono_lcm(lmf, lmg)
    cdef dict h = {}
    _sub_scaled(h, <dict> f, pp - _inv(lcf, pp), _mono_div(L, lmf), pp)
    _sub_scaled(h, <dict> g, _inv(lcg, pp), _mono_div(L, lmg), pp)
    return h


def _interreduce(polys, p, kind, block):
    cdef list F = list(polys)
    cdef list out
    cdef bint changed
    cdef Py_ssize_t i
    while True:
        changed = False
        out = []
        for i in range(len(F)):
            r = normal_form(F[i], out + F[i + 1:], p, kind, block)
            if r != F[i]:
                changed = True
            if r:
                out.append(monic(r, p, kind, block))
        F = out
        if not changed:
            return F


def buchberger(gens, p, kind, block):
    cdef list G = [monic(clean(g, p), p, kind, block) for g in gens]
    G = _interreduce([g for g in G if g], p, kind, block)
    if not G:
        return []

    cdef int ikind = kind, iblock = block
    cdef list lms = [_max_key(<dict> g, ikind, iblock) for g in G]
    cdef set pairs = set()
    cdef Py_ssize_t i, j, k, t
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            pairs.add((i, j))

    cdef tuple L, best_lcm, cand
    cdef int cres
    cdef bint chained
    while pairs:
        best = None
        best_lcm = None
        for ij in pairs:
            i = (<tuple> ij)[0]
            j = (<tuple> ij)[1]
            cand = _mono_lcm(<tuple> lms[i], <tuple> lms[j])
            if best is None:
                best = ij
                best_lcm = cand
                continue
            cres = _cmp(cand, best_lcm, ikind, iblock)
            if cres < 0 or (cres == 0 and ij < best):
                best = ij
                best_lcm = cand
        pairs.remove(best)
        i = (<tuple> best)[0]
        j = (<tuple> best)[1]
        L = _mono_lcm(<tuple> lms[i], <tuple> lms[j])
        if L == _mono_mul(<tuple> lms[i], <tuple> lms[j]):
            continue  # coprime leads
        chained = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if _mono_divides(<tuple> lms[k], L):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in pairs and b not in pairs:
                    chained = True
                    break
        if chained:
            continue
        h = normal_form(spoly(G[i], G[j], p, ikind, iblock), G, p, ikind, iblock)
        if h:
            G.append(monic(h, p, ikind, iblock))
            lms.append(_max_key(<dict> h, ikind, iblock))
            t = len(G) - 1
            for k in range(t):
                pairs.add((k, t))

    cdef list keep = []
    for i in range(len(G)):
        ok = True
        for j in range(len(G)):
            if j != i and _mono_divides(<tuple> lms[j], <tuple> lms[i]):
                ok = False
                break
        if ok:
            keep.append(i)
    cdef list reduced = []
    for i in keep:
        others = [G[j] for j in keep if j != i]
        reduced.append(normal_form(G[i], others, p, ikind, iblock))
    reduced.sort(key=lambda g: mono_key(_max_key(<dict> g, ikind, iblock), ikind, iblock), reverse=True)
    return reduced
