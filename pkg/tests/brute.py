"""Independent reference implementations used as test oracles.

Nothing here imports from the package.
"""

import itertools


def all_words(k, maxlen, minlen=0):
    letters = "abcdefghijklmnopqrstuvwxyz"[:k]
    for n in range(minlen, maxlen + 1):
        for t in itertools.product(letters, repeat=n):
            yield "".join(t)


def power_factors(w, p):
    """(start, period) of every p-th power factor, by comparing letter pairs."""
    n = len(w)
    out = []
    for i in range(n):
        for j in range(i + 1, n + 1):
            length = j - i
            if length % p:
                continue
            period = length // p
            if all(w[i + t] == w[i + t + period] for t in range(length - period)):
                out.append((i, period))
    return sorted(out)


def naive_residues(w, p):
    """Every power-free word at the end of a deletion sequence; plain tree recursion."""
    factors = power_factors(w, p)
    if not factors:
        return {w}
    out = set()
    for i, period in factors:
        out |= naive_residues(w[:i] + w[i + period * p :], p)
    return out


def powers(k, p, maxlen):
    """{u^p : p|u| <= maxlen}, including the empty word."""
    return {u * p for u in all_words(k, maxlen // p)}


def parity_words(k, maxlen):
    return {w for w in all_words(k, maxlen) if all(w.count(c) % 2 == 0 for c in set(w))}
