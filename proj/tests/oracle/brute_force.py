"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Run: python3 tests/oracle/brute_force.py
Nothing here shares code with the C++ library. Words are generated by
multiset backtracking (not gap insertion) and the exponential generating
function is expanded by binomial-series composition (not the logarithmic
derivative recurrence).
"""
import math

import sympy as sp


def stirling_words(n, k):
    remaining = {a: k for a in range(1, n + 1)}
    word = []

    def may_append(a):
        if a not in word:
            return True
        last = len(word) - 1 - word[::-1].index(a)
        return all(v >= a for v in word[last + 1:])

    def rec():
        if len(word) == n * k:
            yield tuple(word)
            return
        for a in range(1, n + 1):
            if remaining[a] and may_append(a):
                remaining[a] -= 1
                word.append(a)
                yield from rec()
                word.pop()
                remaining[a] += 1

    yield from rec()


def ap(word, k):
    c = 0
    for i in range(len(word) - k):
        if word[i] < word[i + 1] and all(word[i + 1] == word[i + t] for t in range(1, k + 1)):
            c += 1
    return c


def poly_from_hist(hist):
    if not hist:
        return []
    deg = max(hist)
    return [hist.get(i, 0) for i in range(deg + 1)]


def ap_polys(n, k):
    full, bar, hat, tilde = {}, {}, {}, {}
    for w in stirling_words(n, k):
        a = ap(w, k)
        full[a] = full.get(a, 0) + 1
        if all(w[i] == w[0] for i in range(k)):
            bar[a] = bar.get(a, 0) + 1
        else:
            hat[a] = hat.get(a, 0) + 1
        if w[0] == 1:
            tilde[a] = tilde.get(a, 0) + 1
    return [poly_from_hist(h) for h in (full, bar, hat, tilde)]


def egf(k, N):
    """A_0..A_N via f = (1+u)^(-1/k), u = sum_{m>=1} -k^m (x-1)^(m-1)/m! z^m."""
    x = sp.symbols("x")
    u = [sp.Integer(0)] + [sp.expand(-sp.Integer(k) ** m * (x - 1) ** (m - 1) / math.factorial(m))
                           for m in range(1, N + 1)]

    def mul(a, b):
        out = [sp.Integer(0)] * (N + 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(N + 1 - i):
                out[i + j] += ai * b[j]
        return [sp.expand(c) for c in out]

    f = [sp.Integer(0)] * (N + 1)
    power = [sp.Integer(1)] + [sp.Integer(0)] * N
    for j in range(N + 1):
        coef = sp.binomial(sp.Rational(-1, k), j)
        f = [sp.expand(f[i] + coef * power[i]) for i in range(N + 1)]
        power = mul(power, u)
    out = []
    for n in range(N + 1):
        p = sp.Poly(sp.expand(f[n] * math.factorial(n)), x)
        out.append([int(v) for v in reversed(p.all_coeffs())])
    return out


if __name__ == "__main__":
    for k in (1, 2, 3):
        print("k=%d egf" % k, egf(k, 6), flush=True)
    for k, nmax in ((1, 6), (2, 6), (3, 5)):
        for n in range(1, nmax + 1):
            full, bar, hat, tilde = ap_polys(n, k)
            print("n=%d k=%d A=%s a=%s xb=%s c=%s" % (n, k, full, bar, hat, tilde), flush=True)
