"""Brute-force values frozen into tests/frozen_values.inc (python3 tests/oracles/frozen_values.py > tests/frozen_values.inc).

Weighted Hurwitz numbers are computed here as weighted sums over ordered
transposition paths in S_n (no characters, no symmetrized weights), with
the closed-form coefficients of the weight generating functions:

    E_i  = q^{i(i-1)/2} / (q;q)_i
    E'_i = q^{i(i+1)/2} / (q;q)_i
    H_i  = 1 / (q;q)_i

value(mu, nu) = (1/n!) sum over h in cyc(mu) and ordered paths s whose
runs of equal second element have lengths l_1.. of prod G_{l_j}, with
s h in cyc(nu). Multispecies values concatenate one ordered path per
species.
"""

from fractions import Fraction
from itertools import permutations, product
from math import factorial


def qpoch(q, i):
    out = Fraction(1)
    for j in range(1, i + 1):
        out *= 1 - q**j
    return out


def coeff(family, q, i):
    if family == "E":
        return q ** (i * (i - 1) // 2) / qpoch(q, i)
    if family == "Ep":
        return q ** (i * (i + 1) // 2) / qpoch(q, i)
    return 1 / qpoch(q, i)


def cycle_type(p):
    seen, parts = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        j, size = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            size += 1
        parts.append(size)
    return tuple(sorted(parts, reverse=True))


def compose(x, y):  # y first
    return tuple(x[y[i]] for i in range(len(y)))


def transposition(n, a, b):
    p = list(range(n))
    p[a], p[b] = p[b], p[a]
    return tuple(p)


def ordered_paths(n, d):
    """(permutation product, run lengths) of ordered length-d paths."""
    steps = [(a, b) for b in range(n) for a in range(b)]
    for seq in product(steps, repeat=d):
        bs = [b for _, b in seq]
        if any(bs[i] > bs[i + 1] for i in range(d - 1)):
            continue
        runs = []
        for i, b in enumerate(bs):
            if i and b == bs[i - 1]:
                runs[-1] += 1
            else:
                runs.append(1)
        perm = tuple(range(n))
        for a, b in reversed(seq):
            perm = compose(transposition(n, a, b), perm)
        yield perm, runs


def weighted_paths(n, species, degrees):
    """perm -> total weight of the concatenated per-species ordered paths."""
    acc = {tuple(range(n)): Fraction(1)}
    for (family, q), d in zip(species, degrees):
        layer = {}
        for perm, runs in ordered_paths(n, d):
            w = Fraction(1)
            for r in runs:
                w *= coeff(family, q, r)
            layer[perm] = layer.get(perm, 0) + w
        nxt = {}
        for x, wx in acc.items():
            for y, wy in layer.items():
                z = compose(y, x)
                nxt[z] = nxt.get(z, 0) + wx * wy
        acc = nxt
    return acc


def hurwitz(n, species, degrees, mu, nu):
    paths = weighted_paths(n, species, degrees)
    total = Fraction(0)
    for h in permutations(range(n)):
        if cycle_type(h) != mu:
            continue
        for s, w in paths.items():
            if cycle_type(compose(s, h)) == nu:
                total += w
    return total / factorial(n)


CASES = [
    (2, [("E", Fraction(1, 2))], [1], (1, 1), (2,)),
    (2, [("E", Fraction(1, 3))], [2], (1, 1), (1, 1)),
    (2, [("H", Fraction(1, 2))], [1], (2,), (2,)),
    (2, [("H", Fraction(1, 3))], [2], (2,), (2,)),
    (3, [("E", Fraction(1, 2))], [2], (1, 1, 1), (3,)),
    (3, [("H", Fraction(1, 3))], [2], (3,), (3,)),
    (3, [("H", Fraction(1, 3))], [3], (2, 1), (1, 1, 1)),
    (3, [("Ep", Fraction(1, 2))], [2], (2, 1), (2, 1)),
    (4, [("E", Fraction(1, 2))], [3], (2, 2), (4,)),
    (4, [("H", Fraction(1, 2))], [2], (1, 1, 1, 1), (2, 2)),
    (4, [("E", Fraction(1, 3))], [3], (4,), (1, 1, 1, 1)),
    (2, [("E", Fraction(1, 2)), ("H", Fraction(1, 5))], [1, 1], (1, 1), (1, 1)),
    (3, [("E", Fraction(1, 2)), ("H", Fraction(1, 5))], [2, 1], (2, 1), (1, 1, 1)),
    (3, [("E", Fraction(1, 2)), ("H", Fraction(1, 5))], [2, 2], (3,), (3,)),
]

FAMILY = {"E": "Family::E", "Ep": "Family::EPrime", "H": "Family::H"}


def main():
    for n, species, degrees, mu, nu in CASES:
        value = hurwitz(n, species, degrees, mu, nu)
        sp = ", ".join(f'{{{FAMILY[f]}, "{q}"}}' for f, q in species)
        deg = ", ".join(map(str, degrees))
        print(f'    {{{n}, {{{sp}}}, {{{deg}}}, "{",".join(map(str, mu))}", '
              f'"{",".join(map(str, nu))}", "{value.numerator}/{value.denominator}"}},')


if __name__ == "__main__":
    main()
