#!/usr/bin/env python3
"""Regenerates the bundled instance files under instances/.

Finite instances are given by exact rational structure constants; coefficient
rows carry num/den integer pairs so no floats ever appear in the files.
"""

import json
import os
import re
from fractions import Fraction
from itertools import permutations

OUT = os.path.join(os.path.dirname(__file__), "..", "instances")


def coeff_row(prefix, c):
    c = Fraction(c)
    return list(prefix) + [c.numerator, c.denominator, 0, 1]


def emit(name, payload):
    path = os.path.join(OUT, name)
    text = json.dumps(payload, indent=1)
    # keep number rows on one line
    text = re.sub(r"\[\s+((?:-?\d+,\s+)*-?\d+)\s+\]",
                  lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)
    with open(path, "w") as f:
        f.write(text + "\n")
    print("wrote", path)


def finite_payload(name, labels, mult, star, unit, comult):
    """mult: dict (i,j) -> dict k -> coeff; star: dict i -> dict k -> coeff;
    comult: dict i -> dict (j,k) -> coeff; unit: list of Fractions."""
    n = len(labels)
    rows_m = [coeff_row((i, j, k), c)
              for (i, j), col in sorted(mult.items())
              for k, c in sorted(col.items()) if c != 0]
    # star rows are [i, k, rn, rd, in, id]
    rows_s = []
    for i, col in sorted(star.items()):
        for k, c in sorted(col.items()):
            if c != 0:
                c = Fraction(c)
                rows_s.append([i, k, c.numerator, c.denominator, 0, 1])
    rows_c = [coeff_row((i, j, k), c)
              for i, col in sorted(comult.items())
              for (j, k), c in sorted(col.items()) if c != 0]
    return {
        "kind": "finite",
        "name": name,
        "dim": n,
        "basis": labels,
        "mult": rows_m,
        "star": rows_s,
        "unit": [f"{Fraction(u).numerator}/{Fraction(u).denominator}" for u in unit],
        "comult": rows_c,
    }


def group_algebra(name, elements, compose, inverse, labels):
    """C[G]: group-like basis."""
    n = len(elements)
    index = {g: i for i, g in enumerate(elements)}
    mult = {(i, j): {index[compose(elements[i], elements[j])]: 1}
            for i in range(n) for j in range(n)}
    star = {i: {index[inverse(elements[i])]: 1} for i in range(n)}
    unit = [1 if i == 0 else 0 for i in range(n)]
    comult = {i: {(i, i): 1} for i in range(n)}
    return finite_payload(name, labels, mult, star, unit, comult)


def function_algebra(name, elements, compose, labels):
    """F(G): pointwise product, convolution coproduct."""
    n = len(elements)
    index = {g: i for i, g in enumerate(elements)}
    mult = {(i, j): ({i: 1} if i == j else {}) for i in range(n) for j in range(n)}
    star = {i: {i: 1} for i in range(n)}
    unit = [1] * n
    comult = {i: {} for i in range(n)}
    for u in range(n):
        for v in range(n):
            s = index[compose(elements[u], elements[v])]
            comult[s][(u, v)] = comult[s].get((u, v), 0) + 1
    return finite_payload(name, labels, mult, star, unit, comult)


def z2():
    els = [0, 1]
    compose = lambda a, b: (a + b) % 2
    inverse = lambda a: a
    yield "c_z2.json", group_algebra("C[Z2]", els, compose, inverse, ["e", "g"])
    yield "f_z2.json", function_algebra("F(Z2)", els, compose, ["d0", "d1"])


def s3():
    els = sorted(permutations(range(3)))
    compose = lambda s, t: tuple(s[t[i]] for i in range(3))  # (s∘t)(i) = s(t(i))
    def inverse(s):
        inv = [0, 0, 0]
        for i, v in enumerate(s):
            inv[v] = i
        return tuple(inv)
    labels = ["".join(map(str, p)) for p in els]
    yield "c_s3.json", group_algebra("C[S3]", els, compose, inverse,
                                     ["g" + l for l in labels])
    yield "f_s3.json", function_algebra("F(S3)", els, compose, ["d" + l for l in labels])


def kac_paljutkin():
    # Basis 1, x, y, xy, z, xz, yz, xyz; group part V = Z2 x Z2 as bit pairs,
    # with the flip automorphism theta(x) = y. Relations: z g = theta(g) z and
    # z^2 = (1 + x + y - xy)/2.
    V = [(0, 0), (1, 0), (0, 1), (1, 1)]
    labels = ["1", "x", "y", "xy", "z", "xz", "yz", "xyz"]

    def gidx(g):
        return V.index(g)

    def vmul(g, h):
        return ((g[0] + h[0]) % 2, (g[1] + h[1]) % 2)

    def theta(g):
        return (g[1], g[0])

    half = Fraction(1, 2)
    esq = {(0, 0): half, (1, 0): half, (0, 1): half, (1, 1): -half}  # z^2

    mult = {}
    for i in range(8):
        for j in range(8):
            gi, zi = V[i % 4], i >= 4
            gj, zj = V[j % 4], j >= 4
            col = {}
            if not zi and not zj:
                col[gidx(vmul(gi, gj))] = 1
            elif not zi and zj:
                col[4 + gidx(vmul(gi, gj))] = 1
            elif zi and not zj:
                col[4 + gidx(vmul(gi, theta(gj)))] = 1
            else:
                base = vmul(gi, theta(gj))
                for g, c in esq.items():
                    k = gidx(vmul(base, g))
                    col[k] = col.get(k, 0) + c
            mult[(i, j)] = col

    # group elements are involutions; z is unitary with z* = z^{-1} = e0 z,
    # so (g z)* = e0 theta(g) z expands over the z-part of the basis
    star = {}
    for i in range(4):
        star[i] = {i: 1}
    for i in range(4):
        g = V[i]
        col = {}
        for w, c in esq.items():
            col[4 + gidx(vmul(w, theta(g)))] = c
        star[4 + i] = col

    unit = [1, 0, 0, 0, 0, 0, 0, 0]

    # Delta(z) = (z⊗z + z⊗xz + yz⊗z - yz⊗xz)/2; Delta(g z) = (g⊗g)Delta(z).
    dz = {(4, 4): half, (4, 5): half, (6, 4): half, (6, 5): -half}
    comult = {}
    for i in range(4):
        comult[i] = {(i, i): 1}
    for i in range(4):
        g = V[i]
        col = {}
        for (p, q), c in dz.items():
            gp, gq = V[p % 4], V[q % 4]
            pp = 4 + gidx(vmul(g, gp))
            qq = 4 + gidx(vmul(g, gq))
            col[(pp, qq)] = col.get((pp, qq), 0) + c
        comult[4 + i] = col

    return finite_payload("Kac-Paljutkin", labels, mult, star, unit, comult)


def main():
    os.makedirs(OUT, exist_ok=True)
    os.makedirs(os.path.join(OUT, "faults"), exist_ok=True)

    for name, payload in list(z2()) + list(s3()):
        emit(name, payload)
    emit("kac_paljutkin.json", kac_paljutkin())

    emit("suq2.json", {"kind": "suq2", "name": "SUq2", "q": "1/2", "degree_cap": 6})

    # Fault fixtures
    broken = group_algebra("C[Z2] broken coproduct", [0, 1], lambda a, b: (a + b) % 2,
                           lambda a: a, ["e", "g"])
    broken["name"] = "C[Z2] broken coproduct"
    broken["comult"] = [coeff_row((0, 0, 0), 1), coeff_row((1, 1, 0), 1)]  # Delta g = g⊗e
    emit(os.path.join("faults", "c_z2_broken_coproduct.json"), broken)

    nonassoc = {
        "kind": "finite",
        "name": "nonassociative",
        "dim": 3,
        "basis": ["u", "a", "b"],
        "mult": [coeff_row((0, 0, 0), 1), coeff_row((0, 1, 1), 1), coeff_row((0, 2, 2), 1),
                 coeff_row((1, 0, 1), 1), coeff_row((2, 0, 2), 1),
                 coeff_row((1, 1, 2), 1),     # a a = b
                 coeff_row((1, 2, 2), 1),     # a b = b
                 coeff_row((2, 1, 1), 1),     # b a = a   -> (aa)a = a, a(aa) = b
                 coeff_row((2, 2, 0), 1)],
        "star": [[0, 0, 1, 1, 0, 1], [1, 1, 1, 1, 0, 1], [2, 2, 1, 1, 0, 1]],
        "unit": ["1", "0", "0"],
        "comult": [coeff_row((0, 0, 0), 1), coeff_row((1, 1, 1), 1), coeff_row((2, 2, 2), 1)],
    }
    emit(os.path.join("faults", "nonassociative.json"), nonassoc)

    emit(os.path.join("faults", "suq2_haar_perturbed.json"),
         {"kind": "suq2", "name": "SUq2 perturbed Haar", "q": "1/2", "degree_cap": 4,
          "fault": {"kind": "haar_perturbation", "amount": "1/1000"}})
    emit(os.path.join("faults", "suq2_f_sign_flipped.json"),
         {"kind": "suq2", "name": "SUq2 flipped f sign", "q": "1/2", "degree_cap": 4,
          "fault": {"kind": "f_sign_flip"}})


if __name__ == "__main__":
    main()
