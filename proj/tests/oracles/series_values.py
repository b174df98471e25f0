"""Exact-rational oracles for frozen test values.

Everything here uses fractions.Fraction and plain ints; p-adic reductions are
taken only at the end.
"""
from fractions import Fraction as Fr


def vp(n, p):
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def red(x, p, N):
    """Fraction in Z_(p) -> residue mod p^N."""
    m = p ** N
    return (x.numerator * pow(x.denominator, -1, m)) % m


def padic_log_partial(u, p, N, terms=60):
    x = Fr(u - 1)
    s = Fr(0)
    for n in range(1, terms):
        s += (-1) ** (n + 1) * x ** n / n
    return red(s, p, N)


def smul(a, b, L):
    r = [Fr(0)] * L
    for i, x in enumerate(a[:L]):
        if x == 0:
            continue
        for j, y in enumerate(b[: L - i]):
            r[i + j] += x * y
    return r


def sinv(a, L):
    r = [Fr(0)] * L
    r[0] = 1 / a[0]
    for n in range(1, L):
        r[n] = -sum(a[k] * r[n - k] for k in range(1, min(n, len(a) - 1) + 1)) / a[0]
    return r


def log_sigma_one_minus_t(p, N, L):
    """-(1/p) sum_n (1 - f^p/f^sigma)^n / n for f = 1 - t, sigma(t) = t^p, c = 1."""
    f = [Fr(1), Fr(-1)] + [Fr(0)] * (L - 2)
    fp = [Fr(1)] + [Fr(0)] * (L - 1)
    for _ in range(p):
        fp = smul(fp, f, L)
    fs = [Fr(0)] * L
    fs[0] = Fr(1)
    if p < L:
        fs[p] = Fr(-1)
    g = smul(fp, sinv(fs, L), L)
    g = [-x for x in g]
    g[0] += 1  # g = 1 - f^p/f^sigma
    out = [Fr(0)] * L
    gn = [Fr(1)] + [Fr(0)] * (L - 1)
    for n in range(1, 4 * N + 10):
        gn = smul(gn, g, L)
        for i in range(L):
            out[i] -= gn[i] / n / p
    return [red(x, p, N) for x in out]


def hyp(L):
    a = [Fr(1)]
    for n in range(1, L):
        a.append(a[-1] * (Fr(n - 1) + Fr(1, 3)) * (Fr(n - 1) + Fr(2, 3)) / (n * n))
    return a


def e1_over_sqrtm3(p, L):
    """E_1 = sqrt(-3) * e(t) for c = 1 and p = 1 mod 3 (so F^sigma(t) = F(t^p)).

    F = -sqrt(-3)/6 * 2F1, E_1' = -3 (F/(t-1) - F(t^p) t^(p-1)/(t^p - 1)).
    """
    h = hyp(L)
    f = [-x / 6 for x in h]  # F / sqrt(-3)
    geo = [Fr(-1)] * L  # 1/(t-1)
    term1 = smul(f, geo, L)
    fsig = [Fr(0)] * L
    for n, x in enumerate(f):
        if n * p < L:
            fsig[n * p] = x
    # t^(p-1)/(t^p - 1) = -t^(p-1) (1 + t^p + t^2p + ...)
    k = [Fr(0)] * L
    e = p - 1
    while e < L:
        k[e] = Fr(-1)
        e += p
    term2 = smul(fsig, k, L)
    rhs = [-3 * (a - b) for a, b in zip(term1, term2)]
    return [Fr(0)] + [rhs[n - 1] / n for n in range(1, L)]


if __name__ == "__main__":
    print("padic_log(6) mod 5^3 =", padic_log_partial(6, 5, 3))
    print("padic_log(36) mod 5^3 =", padic_log_partial(36, 5, 3))
    print("padic_log(27^4) mod 5^6 =", padic_log_partial(27 ** 4, 5, 8) % 5 ** 8)
    lg = padic_log_partial(27 ** 4, 5, 9)
    # tau(0) = -(1/5) log(27^4): log(27^4) has valuation >= 1
    print("v5(log 27^4) residue mod 5^9:", lg, "divided by 5:", (-(lg // 5)) % 5 ** 8, "exact div?", lg % 5)
    print("log_sigma(1-t), p=5, N=6, first 12:", log_sigma_one_minus_t(5, 6, 12))
    print("2F1 coeffs:", [str(x) for x in hyp(4)])
    e = e1_over_sqrtm3(7, 12)
    print("E1/sqrt(-3), p=7, c=1:", [str(x) for x in e])
    # E_1 = sqrt(-3) e = (1 + 2 nu) e -> (a, b) = (e, 2e)
    print("E1 mod 7^8 (a,b):", [(red(x, 7, 8), red(2 * x, 7, 8)) for x in e])
