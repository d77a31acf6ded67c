"""Integer polynomial kernels, pure Python reference implementation.

Univariate polynomials are lists of Python ints, constant term first, with
no trailing zeros; the zero polynomial is the empty list.  Every function
here has a twin of the same name in ``_ckernels.pyx``.
"""

from math import gcd


def strip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a):
    g = content(a)
    if g <= 1:
        return list(a)
    return [c // g for c in a]


def derivative(a):
    return [i * a[i] for i in range(1, len(a))]


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def pseudo_rem(a, b):
    """Return ``(r, k)`` with ``r = lc(b)**k * a mod b``.

    ``k`` counts the elimination steps actually taken, so ``r`` is
    ``lc(b)**k`` times the field remainder and its sign is recoverable.
    """
    r = list(a)
    nb = len(b)
    lb = b[-1]
    k = 0
    while len(r) >= nb:
        lr = r[-1]
        shift = len(r) - nb
        r = [lb * c for c in r]
        for i in range(nb):
            r[shift + i] -= lr * b[i]
        r.pop()
        strip(r)
        k += 1
    return r, k


def sturm_chain(a):
    """Sturm chain of ``a`` with every entry made primitive.

    Entries keep the sign of the classical chain ``p_{i+1} = -rem(p_{i-1}, p_i)``;
    only positive factors are removed.
    """
    a = primitive(strip(list(a)))
    if not a:
        return []
    chain = [a]
    b = primitive(derivative(a))
    while b:
        chain.append(b)
        r, k = pseudo_rem(chain[-2], b)
        if not r:
            break
        neg = -1 if (b[-1] < 0 and k % 2) else 1
        g = content(r)
        b = [(-neg * c) // g for c in r]
    return chain


def eval_hom(a, num, den):
    """``den**deg(a) * a(num/den)``; has the sign of ``a(num/den)`` when ``den > 0``."""
    n = len(a)
    if n == 0:
        return 0
    acc = a[n - 1]
    dpow = 1
    for i in range(n - 2, -1, -1):
        dpow *= den
        acc = acc * num + a[i] * dpow
    return acc


def variations_at(chain, num, den):
    count = 0
    last = 0
    for p in chain:
        v = eval_hom(p, num, den)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def variations_at_inf(chain, direction):
    count = 0
    last = 0
    for p in chain:
        s = 1 if p[-1] > 0 else -1
        if direction < 0 and (len(p) - 1) % 2:
            s = -s
        if last and s != last:
            count += 1
        last = s
    return count


def variations_at_zero(chain):
    count = 0
    last = 0
    for p in chain:
        v = p[0]
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def real_root_profile(a):
    """Return ``(distinct_real, squarefree_degree, negative_or_zero)`` for ``a``.

    ``negative_or_zero`` counts distinct real roots in ``(-inf, 0]``.  One
    Sturm chain answers both the real-rootedness and the cone-membership
    question.
    """
    chain = sturm_chain(a)
    if not chain:
        raise ValueError("zero polynomial")
    deg = len(chain[0]) - 1
    sqf_deg = deg - (len(chain[-1]) - 1)
    v_minus = variations_at_inf(chain, -1)
    v_plus = variations_at_inf(chain, 1)
    nonpos = v_minus - variations_at_zero(chain) if chain[0][0] != 0 else None
    if nonpos is None:
        # zero is a root: roots in (-inf, 0) plus the root at zero
        c = chain[0]
        j = 0
        while c[j] == 0:
            j += 1
        deflated = sturm_chain(c[j:])
        below = variations_at_inf(deflated, -1) - variations_at_zero(deflated)
        nonpos = below + 1
    return v_minus - v_plus, sqf_deg, nonpos


def is_real_rooted(a):
    distinct, sqf_deg, _ = real_root_profile(a)
    return distinct == sqf_deg


def poly_gcd(a, b):
    """Primitive gcd with positive leading coefficient (empty if both zero)."""
    a = primitive(strip(list(a)))
    b = primitive(strip(list(b)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r, _ = pseudo_rem(a, b)
        a, b = b, primitive(r)
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def linear_powers(e, v, top):
    """``[(e t + v)**k for k in 0..top]`` as int lists."""
    out = [[1]]
    base = strip([v, e])
    for _ in range(top):
        out.append(mul(out[-1], base))
    return out


def restrict_line(monos, e, v, degree):
    """Coefficients of ``t -> h(t e + v)`` for integer ``e``, ``v``.

    ``monos`` is a sequence of ``(exponents, coefficient)`` pairs of a
    homogeneous polynomial of total degree ``degree``.
    """
    n = len(e)
    tops = [0] * n
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
        for j, x in enumerate(acc):
            out[j] += x
    return strip(out)
