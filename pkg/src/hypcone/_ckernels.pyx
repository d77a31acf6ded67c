# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer polynomial kernels.

Same contracts as ``_pykernels``; coefficients stay arbitrary-precision
Python ints, only the loop machinery is compiled.
"""

from math import gcd


cpdef list strip(list a):
    while a and a[len(a) - 1] == 0:
        a.pop()
    return a


cpdef object content(list a):
    cdef object g = 0
    cdef object c
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


cpdef list primitive(list a):
    cdef object g = content(a)
    if g <= 1:
        return list(a)
    return [c // g for c in a]


cpdef list derivative(list a):
    cdef Py_ssize_t i
    return [i * a[i] for i in range(1, len(a))]


cpdef list mul(list a, list b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    cdef object x
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        x = a[i]
        if x:
            for j in range(nb):
                out[i + j] = out[i + j] + x * b[j]
    return out


cpdef tuple pseudo_rem(list a, list b):
    cdef list r = list(a)
    cdef Py_ssize_t nb = len(b), shift, i, k = 0
    cdef object lb = b[nb - 1], lr
    while len(r) >= nb:
        lr = r[len(r) - 1]
        shift = len(r) - nb
        r = [lb * c for c in r]
        for i in range(nb):
            r[shift + i] = r[shift + i] - lr * b[i]
        r.pop()
        strip(r)
        k += 1
    return r, k


cpdef list sturm_chain(list a):
    cdef list chain, b, r
    cdef Py_ssize_t k
    cdef int neg
    cdef object g
    a = primitive(strip(list(a)))
    if not a:
        return []
    chain = [a]
    b = primitive(derivative(a))
    while b:
        chain.append(b)
        r, k = pseudo_rem(chain[len(chain) - 2], b)
        if not r:
            break
        neg = -1 if (b[len(b) - 1] < 0 and k % 2) else 1
        g = content(r)
        b = [(-neg * c) // g for c in r]
    return chain


cpdef object eval_hom(list a, object num, object den):
    cdef Py_ssize_t n = len(a), i
    cdef object acc, dpow
    if n == 0:
        return 0
    acc = a[n - 1]
    dpow = 1
    for i in range(n - 2, -1, -1):
        dpow = dpow * den
        acc = acc * num + a[i] * dpow
    return acc


cpdef int variations_at(list chain, object num, object den):
    cdef int count = 0, last = 0, s
    cdef object v
    cdef list p
    for p in chain:
        v = eval_hom(p, num, den)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


cpdef int variations_at_inf(list chain, int direction):
    cdef int count = 0, last = 0, s
    cdef list p
    for p in chain:
        s = 1 if p[len(p) - 1] > 0 else -1
        if direction < 0 and (len(p) - 1) % 2:
            s = -s
        if last and s != last:
            count += 1
        last = s
    return count


cpdef int variations_at_zero(list chain):
    cdef int count = 0, last = 0, s
    cdef list p
    for p in chain:
        v = p[0]
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


cpdef tuple real_root_profile(list a):
    cdef list chain = sturm_chain(a), c, deflated
    cdef Py_ssize_t deg, sqf_deg, j
    cdef int v_minus, v_plus, below
    cdef object nonpos
    if not chain:
        raise ValueError("zero polynomial")
    deg = len(chain[0]) - 1
    sqf_deg = deg - (len(chain[len(chain) - 1]) - 1)
    v_minus = variations_at_inf(chain, -1)
    v_plus = variations_at_inf(chain, 1)
    c = chain[0]
    if c[0] != 0:
        nonpos = v_minus - variations_at_zero(chain)
    else:
        j = 0
        while c[j] == 0:
            j += 1
        deflated = sturm_chain(c[j:])
        below = variations_at_inf(deflated, -1) - variations_at_zero(deflated)
        nonpos = below + 1
    return v_minus - v_plus, sqf_deg, nonpos


cpdef bint is_real_rooted(list a):
    distinct, sqf_deg, _ = real_root_profile(a)
    return distinct == sqf_deg


cpdef list poly_gcd(list a, list b):
    a = primitive(strip(list(a)))
    b = primitive(strip(list(b)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r, _ = pseudo_rem(a, b)
        a, b = b, primitive(r)
    if a and a[len(a) - 1] < 0:
        a = [-c for c in a]
    return a


cpdef list linear_powers(object e, object v, Py_ssize_t top):
    cdef list out = [[1]]
    cdef list base = strip([v, e])
    cdef Py_ssize_t k
    for k in range(top):
        out.append(mul(out[len(out) - 1], base))
    return out


def restrict_line(monos, e, v, Py_ssize_t degree):
    cdef Py_ssize_t n = len(e), i, j, k
    cdef list tops = [0] * n
    cdef list powers, out, acc
    cdef tuple exps
    for exps, _ in monos:
        for i in range(n):
            if exps[i] > tops[i]:
                tops[i] = exps[i]
    powers = [linear_powers(e[i], v[i], tops[i]) for i in range(n)]
    out = [0] * (degree + 1)
    for exps, c in monos:
        acc = [c]
        for i in range(n):
            k = exps[i]
            if k:
                acc = mul(acc, powers[i][k])
                if not acc:
                    break
        for j in range(len(acc)):
            out[j] = out[j] + acc[j]
    return strip(out)
