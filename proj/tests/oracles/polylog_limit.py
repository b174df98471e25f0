"""Limit-formula oracle for p-adic polylogarithms at points of Z_p[nu], nu^2+nu+1=0.

Arithmetic is done on pairs (a, b) = a + b*nu modulo p^W with plain Python ints,
independently of the C++ implementation.
"""
import sys


def mul(x, y, m):
    a, b = x
    c, d = y
    return ((a * c - b * d) % m, (a * d + b * c - b * d) % m)


def inv(x, m):
    a, b = x
    norm = (a * a - a * b + b * b) % m
    ni = pow(norm, -1, m)
    return (((a - b) * ni) % m, (-b * ni) % m)


def limit(p, r, z, s, W):
    m = p ** W
    P = p ** s
    acc = (0, 0)
    zn = (1, 0)
    for n in range(1, P):
        zn = mul(zn, z, m)
        if n % p == 0:
            continue
        w = pow(n, -r, m) if r > 0 else pow(n, -r, m)
        w = pow(pow(n, r, m), -1, m) if r >= 0 else pow(n, -r, m)
        acc = ((acc[0] + zn[0] * w) % m, (acc[1] + zn[1] * w) % m)
    zP = mul(zn, z, m)  # z^P
    one_minus = ((1 - zP[0]) % m, (-zP[1]) % m)
    return mul(acc, inv(one_minus, m), m)


def val(x, p, W):
    a, b = x
    v = W
    for c in (a, b):
        if c % (p ** W) == 0:
            continue
        k = 0
        while c % p == 0:
            c //= p
            k += 1
        v = min(v, k)
    return v


if __name__ == "__main__":
    for p in (5, 7, 13):
        z = ((-0) % p, (-1) % p)  # -nu
        prev = None
        for s in range(1, 8 if p < 13 else 6):
            W = s + 4
            cur = limit(p, 2, (0, -1), s, W)
            if prev is not None:
                d = ((cur[0] - prev[0]) % p ** (s - 1 + 4), (cur[1] - prev[1]) % p ** (s - 1 + 4))
                print(p, s, "v(S_s - S_{s-1}) =", val(d, p, s + 3), "S_s =", cur)
            prev = cur
