"""Independent sympy oracle for reduced Burau matrices and Alexander polynomials.

Uses the column-vector convention, so it shares no code path with the package.
"""

import sympy as sp

ts = sp.symbols("t")


def kt_block(i, n, exp):
    m = sp.eye(n - 1)
    k = i - 1
    if n == 2:
        m[0, 0] = -ts
    else:
        if k - 1 >= 0:
            m[k - 1, k] = ts
        m[k, k] = -ts
        if k + 1 <= n - 2:
            m[k + 1, k] = 1
    return m if exp == 1 else m.inv()


def oracle_alexander(letters, n):
    r = sp.eye(n - 1)
    for a in letters:
        r = r * kt_block(abs(a), n, 1 if a > 0 else -1)
    d = sp.cancel((sp.eye(n - 1) - r).det() * (1 - ts) / (1 - ts**n))
    coeffs = sp.Poly(sp.expand(d * ts**60), ts).all_coeffs()
    while coeffs[-1] == 0:
        coeffs.pop()
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return [int(c) for c in reversed(coeffs)]


# (braid letters, strands, coefficients from t^0 upward)
KNOTS = [
    ([1, 1, 1], 2, [1, -1, 1]),
    ([1], 2, [1]),
    ([1, 2], 3, [1]),
    ([1, -2, 1, -2], 3, [1, -3, 1]),
    ([1] * 5, 2, [1, -1, 1, -1, 1]),
    ([1, 1, 1, 2], 3, [1, -1, 1]),
    ([1, 1, 1, 2, -1, 2], 3, [2, -3, 2]),
    ([1, 2, 3], 4, [1]),
    ([1, 1, 1, -2, 1, -2], 3, [1, -3, 3, -3, 1]),
]
