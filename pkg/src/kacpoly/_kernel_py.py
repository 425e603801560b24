"""Pure-Python hot kernels.

These four functions carry essentially all the run time of the exact
arithmetic: dense univariate convolution, univariate division, integer
polynomial gcd (subresultant remainder sequence) and the weight-truncated
sparse multivariate product.  kacpoly._kernel_cy is a compiled twin with
the identical interface; kacpoly.kernel picks one at import.

Conventions: univariate polynomials are ascending coefficient lists with a
nonzero last entry ([] is zero); multivariate series are dicts mapping
exponent tuples to nonzero coefficients, where x_i (0-based slot i) has
weight i+1 and a term's weight is sum((i+1)*e_i).
"""

from math import gcd as _int_gcd

KERNEL_NAME = "python"


def poly_mul(a, b):
    """Convolution of two ascending coefficient lists (any coefficient ring)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_divmod(a, b):
    """Euclidean division over a field; returns (quotient, remainder)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    r = list(a)
    q = [0] * (len(a) - len(b) + 1)
    inv = 1 / b[-1] if b[-1] != 1 else None
    body = len(b) - 1
    while len(r) >= len(b):
        c = r[-1] if inv is None else r[-1] * inv
        k = len(r) - len(b)
        q[k] = c
        r.pop()
        if c != 0:
            for i in range(body):
                r[k + i] -= c * b[i]
        while r and r[-1] == 0:
            r.pop()
    while q and q[-1] == 0:
        q.pop()
    return q, r


def _content(a):
    g = 0
    for c in a:
        g = _int_gcd(g, abs(c))
        if g == 1:
            break
    return g


def _primitive(a):
    if not a:
        return []
    g = _content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return list(a)
    return [c // g for c in a]


def _prem(a, b):
    """Pseudo-remainder of a by b over Z: lc(b)^(deg a - deg b + 1) * a mod b."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    e = len(a) - 1 - db + 1
    while r and len(r) - 1 >= db:
        lr = r.pop()
        r = [lb * c for c in r]
        k = len(r) - db
        for i in range(db):
            r[k + i] -= lr * b[i]
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0 and r:
        f = lb**e
        r = [f * c for c in r]
    return r


def poly_gcd_int(a, b):
    """Primitive gcd of integer polynomials via the subresultant sequence.

    Coefficient growth stays polynomial, unlike naive rational Euclid.
    Result is primitive with positive leading coefficient.
    """
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    if len(a) < len(b):
        a, b = b, a
    a = _primitive(a)
    b = _primitive(b)
    g = 1
    h = 1
    while True:
        delta = len(a) - len(b)
        r = _prem(a, b)
        if not r:
            break
        if len(r) == 1:
            b = [1]
            break
        a, b = b, r
        div = g * h**delta
        if div != 1:
            b = [c // div for c in b]
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = g**delta // h ** (delta - 1)
    return _primitive(b)


def key_weight(key):
    """Weight of an exponent tuple: slot i carries weight i+1."""
    w = 0
    for i, e in enumerate(key):
        w += (i + 1) * e
    return w


def series_mul(ta, tb, cap):
    """Truncated product of sparse exponent-dict series.

    Skips every coefficient product whose combined weight exceeds cap.
    """
    if len(ta) > len(tb):
        ta, tb = tb, ta
    items_b = sorted(((key_weight(k), k, c) for k, c in tb.items()))
    out = {}
    for ka, ca in ta.items():
        rem = cap - key_weight(ka)
        for wb, kb, cb in items_b:
            if wb > rem:
                break
            key = tuple(x + y for x, y in zip(ka, kb))
            prod = ca * cb
            acc = out.get(key)
            out[key] = prod if acc is None else acc + prod
    return {k: c for k, c in out.items() if c != 0}
