"""One-shot brute-force oracle producing the committed search fixtures.

Deliberately self-contained: the group laws are re-derived here from the
defining relations, with naive set-based closure and a full scan over all
ordered triples of distinct involutions.  No imports from the library, no
pruning beyond the definitions.  Run from the repository root:

    python tests/generate_fixtures.py

writes tests/fixtures/fixtures.json, which the test suite then treats as
frozen expected values.
"""

from __future__ import annotations

import json
from math import comb
from pathlib import Path


# -- abelian family: (x, y) with rho0 fixing x / inverting y, rho2 inverting both


def abelian_group(p: int, l1: int, l2: int):
    mx, my = p**l2, p**l1

    def mul(u, v):
        xe, ye, i, j = v
        if u[3]:
            xe, ye = -xe, -ye
        if u[2]:
            ye = -ye
        return ((u[0] + xe) % mx, (u[1] + ye) % my, (u[2] + i) % 2, (u[3] + j) % 2)

    elements = [
        (a, b, i, j)
        for a in range(mx)
        for b in range(my)
        for i in (0, 1)
        for j in (0, 1)
    ]
    return elements, mul, (0, 0, 0, 0)


# -- maximal-class family: s-vector coordinates, beta exponent, two twist bits


def maxclass_group(p: int, e: int, r: int):
    n = p - 1
    moduli = [p**e if k <= r else p ** (e - 1) for k in range(1, p)]

    def reduce_vec(vec):
        return tuple(c % m for c, m in zip(vec, moduli))

    def beta_conj(vec, times):
        # s_k -> s_k s_{k+1} for k <= p-2; s_{p-1} -> s_{p-1} * prod s_i^(-C(p,i))
        out = list(vec)
        for _ in range(times % p):
            new = [0] * n
            for k in range(n):
                c = out[k]
                if c == 0:
                    continue
                if k < n - 1:
                    new[k] += c
                    new[k + 1] += c
                else:
                    for i in range(1, p):
                        new[i - 1] += -comb(p, i) * c
                    new[n - 1] += c
            out = list(reduce_vec(new))
        return tuple(out)

    def sigma_vec(vec):
        # generator k maps to (beta^(1-k) conjugate of s_k), inverted for even k
        new = [0] * n
        for k in range(1, p):
            c = vec[k - 1]
            if c == 0:
                continue
            unit = [0] * n
            unit[k - 1] = 1
            image = beta_conj(tuple(unit), (1 - k) % p)
            sign = 1 if k % 2 == 1 else -1
            for i in range(n):
                new[i] += sign * c * image[i]
        return reduce_vec(new)

    def pmul(x, y):
        a1, b1 = x[:n], x[n]
        a2, b2 = y[:n], y[n]
        moved = beta_conj(a2, (p - b1) % p)
        return reduce_vec(tuple(a + b for a, b in zip(a1, moved))) + ((b1 + b2) % p,)

    def mul(u, v):
        gu, iu, ju = u[: n + 1], u[n + 1], u[n + 2]
        gv, iv, jv = v[: n + 1], v[n + 1], v[n + 2]
        g = gv
        if ju:
            g = sigma_vec(g[:n]) + ((-g[n]) % p,)
        if iu:
            g = reduce_vec(tuple(-c for c in g[:n])) + (g[n],)
        prod = pmul(gu, g)
        return prod + ((iu + iv) % 2, (ju + jv) % 2)

    import itertools

    elements = [
        tuple(t)
        for t in itertools.product(
            *[range(m) for m in moduli], range(p), (0, 1), (0, 1)
        )
    ]
    return elements, mul, tuple([0] * (n + 1) + [0, 0])


# -- naive machinery ----------------------------------------------------------


def naive_order(mul, identity, g):
    n, x = 1, g
    while x != identity:
        x = mul(x, g)
        n += 1
    return n


def naive_closure(mul, identity, gens):
    seen = {identity} | set(gens)
    frontier = list(seen)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                z = mul(x, g)
                if z not in seen:
                    seen.add(z)
                    new.append(z)
        frontier = new
    return seen


def survey(elements, mul, identity):
    order = len(elements)
    involutions = sorted(g for g in elements if g != identity and mul(g, g) == identity)
    pair_cache = {}
    triple_cache = {}

    def pair_closure(a, b):
        key = frozenset((a, b))
        if key not in pair_cache:
            pair_cache[key] = naive_closure(mul, identity, [a, b])
        return pair_cache[key]

    total = 0
    nondegenerate = 0
    triples = []
    for r0 in involutions:
        for r1 in involutions:
            if r1 == r0:
                continue
            for r2 in involutions:
                if r2 == r0 or r2 == r1:
                    continue
                if mul(r0, r2) != mul(r2, r0):
                    continue
                sub01 = pair_closure(r0, r1)
                sub12 = pair_closure(r1, r2)
                if sub01 & sub12 != {identity, r1}:
                    continue
                key = frozenset((r0, r1, r2))
                if key not in triple_cache:
                    triple_cache[key] = len(naive_closure(mul, identity, [r0, r1, r2]))
                if triple_cache[key] != order:
                    continue
                total += 1
                k1 = naive_order(mul, identity, mul(r0, r1))
                k2 = naive_order(mul, identity, mul(r1, r2))
                if k1 != 2 and k2 != 2:
                    nondegenerate += 1
                    triples.append((r0, r1, r2, k1, k2))

    # conjugation orbits of the nondegenerate triples, with/without reversal
    inverses = {}
    for g in elements:
        for h in elements:
            if mul(g, h) == identity:
                inverses[g] = h
                break

    def conj_key(triple):
        best = None
        for g in elements:
            gi = inverses[g]
            image = tuple(mul(mul(gi, r), g) for r in triple)
            if best is None or image < best:
                best = image
        return best

    conj_keys = {}
    for r0, r1, r2, _, _ in triples:
        conj_keys[(r0, r1, r2)] = conj_key((r0, r1, r2))
    conj_classes = len(set(conj_keys.values()))
    dual_keys = {
        t: min(k, conj_key((t[2], t[1], t[0]))) for t, k in conj_keys.items()
    }
    dual_classes = len(set(dual_keys.values()))

    types = sorted({(k1, k2) for _, _, _, k1, k2 in triples})
    return {
        "order": order,
        "involutions": len(involutions),
        "triples_total": total,
        "triples_nondegenerate": nondegenerate,
        "types_nondegenerate": [list(t) for t in types],
        "conjugacy_classes": conj_classes,
        "conjugacy_duality_classes": dual_classes,
    }


def main() -> None:
    fixtures = {}
    for label, (p, l1, l2) in {
        "abelian_p3_l1_l1": (3, 1, 1),
        "abelian_p3_l1_l2": (3, 1, 2),
    }.items():
        elements, mul, identity = abelian_group(p, l1, l2)
        fixtures[label] = survey(elements, mul, identity)
        print(label, fixtures[label])
    elements, mul, identity = maxclass_group(3, 1, 2)
    fixtures["maxclass_p3_e1_r2"] = survey(elements, mul, identity)
    print("maxclass_p3_e1_r2", fixtures["maxclass_p3_e1_r2"])

    out = Path(__file__).parent / "fixtures" / "fixtures.json"
    out.parent.mkdir(exist_ok=True)
    out.write_text(json.dumps(fixtures, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
