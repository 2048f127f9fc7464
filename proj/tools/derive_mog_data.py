#!/usr/bin/env python3
"""Derive the embedded MOG data files (Golay generator matrix and M24 generators).

Points are labeled 6*row + col on the 4x6 MOG array. Rows carry the GF(4)
labels 0, 1, w, w^2 (row index bits add like GF(4) elements). A 24-bit word
is a codeword iff every column has the parity of the top row and the column
scores (sum of row labels of set cells) form a hexacode word
(a, b, c, f(1), f(w), f(w^2)) with f(x) = a x^2 + b x + c.

M24 generators: the six row/column/quadrant generators of the 4x4 square,
each lifted to the brick by brute force over 8! brick permutations, plus one
code-preserving column permutation that moves the brick.

Usage: derive_mog_data.py <out-dir>
"""
import itertools
import sys

# GF(4) as ints: 0, 1, w=2, w^2=3; addition is xor.
MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]


def hexacode():
    words = set()
    for a in range(4):
        for b in range(4):
            for c in range(4):
                f = lambda x: MUL[a][MUL[x][x]] ^ MUL[b][x] ^ c
                words.add((a, b, c, f(1), f(2), f(3)))
    return words


HEX = hexacode()


def is_codeword(w):
    top = sum((w >> (6 * 0 + c)) & 1 for c in range(6)) & 1
    scores = []
    for c in range(6):
        par, score = 0, 0
        for r in range(4):
            if (w >> (6 * r + c)) & 1:
                par ^= 1
                score ^= r
        if par != top:
            return False
        scores.append(score)
    return tuple(scores) in HEX


def find_basis():
    # columns pairs and hexacode lifts; brute search over weight-8 words built
    # from column choices is cheap enough: each column contributes a 4-bit
    # pattern, so search 16^6 = 2^24 words directly.
    rows = []
    span = {0}
    for w in range(1 << 24):
        if len(rows) == 12:
            break
        if w in span:
            continue
        if is_codeword(w):
            rows.append(w)
            span |= {x ^ w for x in span}
    return rows, span


def main():
    out = sys.argv[1]
    rows, code = find_basis()
    assert len(code) == 4096
    hist = {}
    for w in code:
        k = bin(w).count("1")
        hist[k] = hist.get(k, 0) + 1
    assert hist == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}, hist
    octads = {w for w in code if bin(w).count("1") == 8}
    brick = [6 * r + c for r in range(4) for c in range(2)]
    square = [6 * r + c for r in range(4) for c in range(2, 6)]

    def cell_to_point(i):
        return 6 * (i // 4) + 2 + (i % 4)

    def apply(perm, w):
        o = 0
        for p in range(24):
            if (w >> p) & 1:
                o |= 1 << perm[p]
        return o

    def axis_perm(axis, sigma):
        img = [0] * 16
        for i in range(16):
            r, c = divmod(i, 4)
            if axis == "rows":
                r = sigma[r]
            elif axis == "cols":
                c = sigma[c]
            else:
                q = 2 * (r >> 1) + (c >> 1)
                nq = sigma[q]
                r = 2 * (nq >> 1) + (r & 1)
                c = 2 * (nq & 1) + (c & 1)
            img[i] = 4 * r + c
        return img

    gens16 = []
    for axis in ("rows", "cols", "quads"):
        gens16.append(axis_perm(axis, [1, 0, 2, 3]))
        gens16.append(axis_perm(axis, [1, 2, 3, 0]))

    def preserves(perm):
        return all(apply(perm, o) in octads for o in octads)

    gens = []
    for g in gens16:
        base = list(range(24))
        for i in range(16):
            base[cell_to_point(i)] = cell_to_point(g[i])
        sols = []
        for pi in itertools.permutations(brick):
            perm = base[:]
            for b, t in zip(brick, pi):
                perm[b] = t
            # cheap filter on a few octads first
            if preserves(perm):
                sols.append(perm)
        assert len(sols) == 1, len(sols)
        gens.append(sols[0])

    extra = None
    for cp in itertools.permutations(range(6)):
        perm = [6 * (p // 6) + cp[p % 6] for p in range(24)]
        if {cp[0], cp[1]} == {0, 1}:
            continue
        if preserves(perm):
            extra = perm
            break
    assert extra is not None
    gens.append(extra)

    with open(f"{out}/golay_mog.txt", "w") as f:
        f.write("# Binary Golay code, MOG labeling: point 6*row + col on a 4x6 array.\n")
        f.write("# Construction: column parities equal top-row parity and column scores\n")
        f.write("# (GF(4) row labels 0,1,w,w^2) form a hexacode word. Rows are the\n")
        f.write("# lexicographically first basis found by tools/derive_mog_data.py.\n")
        f.write("# Each line lists bit 0 (point 0) first.\n")
        for r in rows:
            f.write("".join(str((r >> p) & 1) for p in range(24)) + "\n")
    with open(f"{out}/m24_generators.txt", "w") as f:
        f.write("# M24 generators on the MOG points (6*row + col), as image lists.\n")
        f.write("# Lines 1-6: row/column/quadrant generators of the 4x4 square lifted\n")
        f.write("# to the brick (unique code-preserving lift). Line 7: a code-preserving\n")
        f.write("# column permutation that moves the brick. Derived by\n")
        f.write("# tools/derive_mog_data.py.\n")
        for g in gens:
            f.write(" ".join(map(str, g)) + "\n")


if __name__ == "__main__":
    main()
