"""Pure-Python kernels for polynomial arithmetic over Z/pZ.

Polynomials are plain lists of residues in [0, p), ascending powers, with no
trailing zeros ([] is the zero polynomial).  The compiled extension
``_residue_kernel`` exposes the same callables; ``modp`` picks one at import.

Root counting uses deg gcd(f, x^p - x): x^p - x is the product of (x - a)
over all residues a, so the gcd collects exactly the distinct linear factors
of f.  The power x^p is computed by square-and-multiply modulo f.
"""

from __future__ import annotations

BACKEND = "python"


def _strip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _strip([c % p for c in out])


def _divmod(a, b, p):
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return [], list(a)
    inv = pow(b[db], -1, p)
    r = list(a)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        coef = (r[db + k] * inv) % p
        q[k] = coef
        if coef:
            for j in range(db + 1):
                r[j + k] = (r[j + k] - coef * b[j]) % p
    return _strip(q), _strip(r[:db])


def _rem(a, b, p):
    return _divmod(a, b, p)[1]


def _div(a, b, p):
    return _divmod(a, b, p)[0]


def _monic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], -1, p)
    return [(c * inv) % p for c in a]


def _gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _rem(a, b, p)
    return _monic(a, p)


def _pow_x_mod(e, m, p):
    """x^e reduced modulo m."""
    result = [1]
    base = _rem([0, 1], m, p)
    while e:
        if e & 1:
            result = _rem(_mul(result, base, p), m, p)
        base = _rem(_mul(base, base, p), m, p)
        e >>= 1
    return result


def omega_reduced(coeffs: list[int], p: int) -> int:
    """Distinct roots in Z/pZ of a reduced nonconstant polynomial."""
    if len(coeffs) == 2:
        return 1
    m = _monic(coeffs, p)
    xp = _pow_x_mod(p, m, p)
    diff = list(xp) + [0] * (2 - len(xp))
    diff[1] = (diff[1] - 1) % p
    g = _gcd(m, _strip(diff), p)
    return len(g) - 1


def omega_naive_reduced(coeffs: list[int], p: int) -> int:
    """Same count by evaluating at every residue (oracle for omega_reduced)."""
    count = 0
    rev = coeffs[::-1]
    for a in range(p):
        acc = 0
        for c in rev:
            acc = (acc * a + c) % p
        if acc == 0:
            count += 1
    return count


def _derivative(a, p):
    return _strip([(i * c) % p for i, c in enumerate(a)][1:])


def _pth_root(a, p):
    # Valid when a' = 0, i.e. only exponents divisible by p occur; over the
    # prime field the coefficients are their own p-th roots.
    return a[::p]


def _squarefree(f, p):
    """Monic squarefree decomposition [(g_i, m_i)] with f = prod g_i^(m_i)."""
    out = []
    d = _derivative(f, p)
    if not d:
        for g, m in _squarefree(_pth_root(f, p), p):
            out.append((g, m * p))
        return out
    c = _gcd(f, d, p)
    w = _div(f, c, p)
    i = 1
    while len(w) > 1:
        y = _gcd(w, c, p)
        z = _div(w, y, p)
        if len(z) > 1:
            out.append((z, i))
        w = y
        c = _div(c, y, p)
        i += 1
    if len(c) > 1:
        for g, m in _squarefree(_pth_root(c, p), p):
            out.append((g, m * p))
    return out


def _ddf(u, p):
    """Distinct-degree split of monic squarefree u: [(degree, count)]."""
    out = []
    w = _rem([0, 1], u, p)
    ell = 0
    while len(u) > 1:
        ell += 1
        if 2 * ell > len(u) - 1:
            out.append((len(u) - 1, 1))
            break
        # advance the Frobenius: w = w^p mod u
        acc = [1]
        base = w
        e = p
        while e:
            if e & 1:
                acc = _rem(_mul(acc, base, p), u, p)
            base = _rem(_mul(base, base, p), u, p)
            e >>= 1
        w = acc
        diff = list(w) + [0] * (2 - len(w))
        diff[1] = (diff[1] - 1) % p
        g = _gcd(u, _strip(diff), p)
        if len(g) > 1:
            out.append((ell, (len(g) - 1) // ell))
            u = _div(u, g, p)
            w = _rem(w, u, p)
    return out


def pattern_reduced(coeffs: list[int], p: int) -> list[tuple[int, int]]:
    """Sorted (inertia degree, multiplicity) parts of a monic reduced poly."""
    parts = []
    for g, mult in _squarefree(list(coeffs), p):
        for ell, count in _ddf(g, p):
            parts.extend([(ell, mult)] * count)
    parts.sort()
    return parts


def _reduce_int(coeffs, p):
    return _strip([c % p for c in coeffs])


def omega_batch(coeffs, primes, out) -> None:
    """out[i] = root count of coeffs mod primes[i]; p itself if all vanish."""
    for idx in range(len(primes)):
        p = int(primes[idx])
        r = _reduce_int(coeffs, p)
        if not r:
            out[idx] = p
        elif len(r) == 1:
            out[idx] = 0
        else:
            out[idx] = omega_reduced(r, p)


def omega_naive_batch(coeffs, primes, out) -> None:
    for idx in range(len(primes)):
        p = int(primes[idx])
        r = _reduce_int(coeffs, p)
        if not r:
            out[idx] = p
        else:
            out[idx] = omega_naive_reduced(r, p)
