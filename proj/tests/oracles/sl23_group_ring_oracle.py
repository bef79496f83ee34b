#!/usr/bin/env python3
"""Independent brute-force oracle for the SL2(F3) group-ring regression values.

Builds SL2(F3) directly from 2x2 matrices over Z/3 (lexicographic entry order),
computes two-sided ideals of Z_t[G] by repeated full Howell-style elimination,
and prints the values frozen into test_group_ring.cpp.
"""
import itertools
import math

P = 3


def matmul(a, b):
    return ((a[0] * b[0] + a[1] * b[2]) % P, (a[0] * b[1] + a[1] * b[3]) % P,
            (a[2] * b[0] + a[3] * b[2]) % P, (a[2] * b[1] + a[3] * b[3]) % P)


ELS = [m for m in itertools.product(range(P), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % P == 1]
IDX = {m: i for i, m in enumerate(ELS)}
N = len(ELS)
T = [[IDX[matmul(a, b)] for b in ELS] for a in ELS]
E = IDX[(1, 0, 0, 1)]
I = IDX[(0, 2, 1, 0)]
J = IDX[(1, 1, 1, 2)]
K = T[I][J]
MINUS = T[I][I]


def order(g):
    k, x = 1, g
    while x != E:
        x = T[x][g]
        k += 1
    return k


def vec(terms, t):
    w = [0] * N
    for coef, g in terms:
        w[g] = (w[g] + coef) % t
    return w


def add(t, *vs):
    return [sum(x) % t for x in zip(*vs)]


def echelon(gens, t):
    pool = [g[:] for g in gens if any(g)]
    rows = []
    for c in range(N):
        cand = [r for r in pool if r[c]]
        if not cand:
            continue
        cand.sort(key=lambda r: math.gcd(r[c], t))
        piv = cand[0]
        pool.remove(piv)
        if math.gcd(piv[c], t) == 1:
            inv = pow(piv[c], -1, t)
            piv = [(x * inv) % t for x in piv]
        rest = []
        for r in pool:
            if r[c]:
                f = r[c] // piv[c]
                r = [(x - f * y) % t for x, y in zip(r, piv)]
            if any(r):
                rest.append(r)
        ann = t // math.gcd(piv[c], t)
        w = [(ann * x) % t for x in piv]
        if any(w):
            rest.append(w)
        pool = rest
        rows.append((c, piv))
    return rows


def member(rows, v, t):
    v = v[:]
    for c, r in rows:
        if v[c] % r[c]:
            return False
        f = v[c] // r[c]
        v = [(x - f * y) % t for x, y in zip(v, r)]
    return not any(v)


def ideal(gens, t):
    gens = list(gens)
    rows = echelon(gens, t)
    changed = True
    while changed:
        changed = False
        for _, r in list(rows):
            for g in range(N):
                for side in (0, 1):
                    w = [0] * N
                    for h in range(N):
                        if r[h]:
                            w[T[g][h] if side == 0 else T[h][g]] = r[h]
                    if not member(rows, w, t):
                        gens.append(w)
                        rows = echelon(gens, t)
                        changed = True
    return rows


def main():
    order3 = [g for g in range(N) if order(g) == 3]
    q8 = [g for g in range(N) if order(g) in (1, 2, 4)]
    c = order3[0]
    a = vec([(1, E), (1, T[c][J]), (1, T[MINUS][c])], 2)
    b = vec([(1, J), (1, c), (1, T[c][I])], 2)
    dims = []
    for x in q8:
        for y in q8:
            rows = ideal([add(2, a, vec([(1, x)], 2)), add(2, b, vec([(1, y)], 2))], 2)
            dims.append(len(rows))
    print("order3 =", order3)
    print("q8 =", q8)
    print("char2 dims =", dims)
    for cc in order3:
        a = vec([(1, E), (1, T[cc][J]), (1, T[MINUS][cc])], 2)
        b = vec([(1, J), (1, cc), (1, T[cc][I])], 2)
        inj = []
        for xi, x in enumerate(q8):
            for yi, y in enumerate(q8):
                rows = ideal([add(2, a, vec([(1, x)], 2)), add(2, b, vec([(1, y)], 2))], 2)
                if all(not member(rows, vec([(1, g), (1, E)], 2), 2) for g in range(N) if g != E):
                    inj.append(xi * 8 + yi)
        print("c =", cc, "injective case indices =", inj)
    c = order3[0]
    x = vec([(1, E), (1, c), (1, I)], 4)
    bits = []
    for eps in (1, -1):
        for v in [E] + order3:
            gens = [vec([(1, E), (1, MINUS)], 4), vec([(1, I), (1, J), (1, K), (eps, E)], 4),
                    add(4, x, vec([(-1, v)], 4))]
            rows = ideal(gens, 4)
            bits.append(sum(int(math.log2(4 // math.gcd(r[col], 4))) for col, r in rows))
    print("char4 log2 |I| =", bits)


if __name__ == "__main__":
    main()
