"""Brute-force search for string-C-group triples, with deduplication.

The search iterates rho_1 over all involutions and (rho_0, rho_2) over
commuting involution pairs (the string property is a pre-filter), then
checks the intersection property and generation.  Candidates can be
deduplicated up to simultaneous conjugation, additionally up to duality
(reversal), or up to group automorphism; automorphisms are found by
extending the forced generator correspondence breadth-first, which either
completes to a bijection or runs into a contradiction.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Optional

import numpy as np

from .core import (
    GroupTable,
    SylowError,
    close_subgroup,
    conjugate,
    intersect,
    minimal_generating_rank,
    p_part,
    subgroup_table,
)
from .verifier import SggiCandidate, schlafli

# Automorphism-based deduplication is refused above this order.
ISO_DEDUPE_CAP = 600

_MODES = ("none", "conjugacy", "conjugacy+duality", "isomorphism")


@dataclass(frozen=True)
class SearchResult:
    """Verified candidates plus their partition under an equivalence."""

    table: GroupTable
    candidates: tuple[SggiCandidate, ...]
    classes: tuple[tuple[int, ...], ...]
    mode: str
    audit: Optional[tuple[dict, ...]] = None
    notes: tuple[str, ...] = ()

    def class_representatives(self) -> list[SggiCandidate]:
        return [self.candidates[cls[0]] for cls in self.classes]


def enumerate_involutions(G: GroupTable) -> list[int]:
    """All non-identity elements of order 2, sorted by canonical encoding."""
    if G.order > 512 and G.has_batch():
        ids = np.arange(G.order, dtype=np.int64)
        squares = G.mul_ids_batch(ids, ids)
        found = ids[squares == G.identity]
        return [int(g) for g in found if g != G.identity]
    return [
        g
        for g in range(G.order)
        if g != G.identity and G.mul(g, g) == G.identity
    ]


def search_string_cgroups(G: GroupTable, nondegenerate: bool = False) -> SearchResult:
    """Exhaustive search over ordered triples of distinct involutions.

    The outer generators are drawn from commuting pairs only (string
    pre-filter); with ``nondegenerate`` set, triples whose type contains a
    2 are skipped, matching the standing non-degeneracy assumption.
    """
    invs = enumerate_involutions(G)
    orders = G.element_orders()
    mul = G.mul
    commuting_pairs = [
        (a, b)
        for a in invs
        for b in invs
        if a != b and mul(a, b) == mul(b, a)
    ]
    pair_cache: dict[frozenset[int], frozenset[int]] = {}
    triple_cache: dict[frozenset[int], int] = {}

    def pair_closure(a: int, b: int) -> frozenset[int]:
        key = frozenset((a, b))
        got = pair_cache.get(key)
        if got is None:
            got = close_subgroup(G, key).members
            pair_cache[key] = got
        return got

    found: list[SggiCandidate] = []
    identity = G.identity
    for r1 in invs:
        for r0, r2 in commuting_pairs:
            if r1 == r0 or r1 == r2:
                continue
            k1 = int(orders[mul(r0, r1)])
            k2 = int(orders[mul(r1, r2)])
            if nondegenerate and (k1 == 2 or k2 == 2):
                continue
            sub01 = pair_closure(r0, r1)
            sub12 = pair_closure(r1, r2)
            if sub01 & sub12 != {identity, r1}:
                continue
            key = frozenset((r0, r1, r2))
            size = triple_cache.get(key)
            if size is None:
                size = len(close_subgroup(G, key))
                triple_cache[key] = size
            if size != G.order:
                continue
            found.append(SggiCandidate(G, (r0, r1, r2)))
    found.sort(key=lambda c: c.rho)
    classes = tuple((i,) for i in range(len(found)))
    return SearchResult(G, tuple(found), classes, "none")


def _conjugacy_key(G: GroupTable, triple: tuple[int, int, int]) -> tuple[int, int, int]:
    """Lexicographic minimum of the triple's simultaneous-conjugation orbit."""
    best = triple
    for g in range(G.order):
        gi = G.inv(g)
        image = tuple(G.mul(G.mul(gi, r), g) for r in triple)
        if image < best:
            best = image
    return best


def _automorphism_maps_triple(
    G: GroupTable, src: tuple[int, int, int], dst: tuple[int, int, int]
) -> bool:
    """Does some automorphism send the ordered src triple to dst?

    Because src generates, the generator correspondence forces the image
    of every element; the forced map is grown breadth-first and checked
    for consistency, then for bijectivity.
    """
    n = G.order
    images = np.full(n, -1, dtype=np.int64)
    images[G.identity] = G.identity
    queue = [G.identity]
    mul = G.mul
    while queue:
        x = queue.pop()
        fx = int(images[x])
        for s, d in zip(src, dst):
            y = mul(x, s)
            fy = mul(fx, d)
            if images[y] == -1:
                images[y] = fy
                queue.append(y)
            elif images[y] != fy:
                return False
    if (images == -1).any():
        return False
    return len(np.unique(images)) == n


def dedupe(result: SearchResult, mode: str) -> SearchResult:
    """Partition the candidates under the chosen equivalence.

    ``conjugacy`` groups triples related by simultaneous conjugation;
    ``conjugacy+duality`` also identifies a triple with its reversal;
    ``isomorphism`` additionally merges classes related by a group
    automorphism (duality included).  Isomorphism mode degrades to
    conjugacy+duality above ``ISO_DEDUPE_CAP`` with a note.
    """
    if mode not in _MODES[1:]:
        raise ValueError(f"unknown dedupe mode {mode!r}; use one of {_MODES[1:]}")
    G = result.table
    notes = list(result.notes)
    use_duality = mode in ("conjugacy+duality", "isomorphism")
    keys = []
    for cand in result.candidates:
        key = _conjugacy_key(G, cand.rho)
        if use_duality:
            key = min(key, _conjugacy_key(G, cand.rho[::-1]))
        keys.append(key)
    grouped: dict[tuple[int, int, int], list[int]] = {}
    for i, key in enumerate(keys):
        grouped.setdefault(key, []).append(i)
    classes = [tuple(sorted(v)) for _, v in sorted(grouped.items())]
    applied = "conjugacy+duality" if use_duality else "conjugacy"

    if mode == "isomorphism":
        if G.order > ISO_DEDUPE_CAP:
            notes.append(
                f"isomorphism dedupe refused for order {G.order} > {ISO_DEDUPE_CAP}; "
                "reporting conjugacy+duality classes"
            )
        else:
            classes = _merge_by_automorphism(result, classes)
            applied = "isomorphism"

    return replace(result, classes=tuple(classes), mode=applied, notes=tuple(notes))


def _merge_by_automorphism(
    result: SearchResult, classes: list[tuple[int, ...]]
) -> list[tuple[int, ...]]:
    G = result.table
    reps = [result.candidates[cls[0]].rho for cls in classes]
    parent = list(range(len(classes)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            if find(i) == find(j):
                continue
            if _automorphism_maps_triple(G, reps[i], reps[j]) or _automorphism_maps_triple(
                G, reps[i], reps[j][::-1]
            ):
                parent[find(j)] = find(i)
    merged: dict[int, list[int]] = {}
    for i, cls in enumerate(classes):
        merged.setdefault(find(i), []).extend(cls)
    return [tuple(sorted(v)) for _, v in sorted((min(v), v) for v in merged.values())]


def structural_audit(result: SearchResult) -> SearchResult:
    """Audit every class representative of an order-4p^m table.

    Checks that the p-part is the unique normal Sylow subgroup meeting
    <rho_0, rho_2> trivially with the product covering the group, that the
    type satisfies p | k1 and 2p | k2 up to swap, and that the Sylow part
    has minimal generating rank 2.  Degenerate representatives are skipped
    with a note since they fall outside the structural hypotheses.
    """
    G = result.table
    p, m = _four_p_m_shape(G.order)
    audits = []
    for cls in result.classes:
        cand = result.candidates[cls[0]]
        audits.append(_audit_candidate(G, cand, p))
    return replace(result, audit=tuple(audits))


def _four_p_m_shape(order: int) -> tuple[int, int]:
    if order % 4:
        raise ValueError(f"order {order} is not of the form 4*p^m")
    q = order // 4
    if q % 2 == 0 or q == 1:
        raise ValueError(f"order {order} is not of the form 4*p^m with p odd, m >= 2")
    p = 3
    while q % p:
        p += 2
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    if q != 1 or m < 2:
        raise ValueError(f"order {order} is not of the form 4*p^m with m >= 2")
    return p, m


def _audit_candidate(G: GroupTable, cand: SggiCandidate, p: int) -> dict:
    stype = schlafli(cand)
    if 2 in stype:
        return {
            "skipped": True,
            "note": "degenerate candidate; structural audit does not apply",
            "schlafli": [stype.k1, stype.k2],
        }
    r0, _, r2 = cand.rho
    audit: dict = {"skipped": False, "schlafli": [stype.k1, stype.k2]}
    try:
        sylow = p_part(G, p)
        audit["sylow_normal"] = True
    except SylowError:
        audit["sylow_normal"] = False
        audit["all_ok"] = False
        return audit
    klein = close_subgroup(G, (r0, r2))
    audit["klein_order_4"] = len(klein) == 4
    audit["trivial_intersection"] = intersect(sylow, klein).members == {G.identity}
    audit["product_covers"] = len(sylow) * len(klein) == G.order
    k1, k2 = stype
    audit["divisibility_ok"] = (k1 % p == 0 and k2 % (2 * p) == 0) or (
        k2 % p == 0 and k1 % (2 * p) == 0
    )
    audit["d_sylow"] = minimal_generating_rank(subgroup_table(sylow), p)
    audit["rank_ok"] = audit["d_sylow"] == 2
    audit["all_ok"] = all(
        audit[key]
        for key in (
            "sylow_normal",
            "klein_order_4",
            "trivial_intersection",
            "product_covers",
            "divisibility_ok",
            "rank_ok",
        )
    )
    return audit
