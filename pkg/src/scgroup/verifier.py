"""Exact string-C-group verification for rank-3 involution triples.

A candidate is a group table plus an ordered triple (rho_0, rho_1, rho_2).
The verifier decides the four axioms exactly: each rho is an involution,
the outer pair commutes (string property), the triple generates, and
<rho_0, rho_1> meets <rho_1, rho_2> in exactly <rho_1> (the rank-3 form of
the intersection property).  Schläfli type, tightness and degeneracy are
computed alongside; an optional structural pass audits the Sylow p-part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .core import (
    GroupTable,
    SubgroupSet,
    SylowError,
    close_subgroup,
    element_order,
    intersect,
    minimal_generating_rank,
    p_part,
    subgroup_table,
)


@dataclass(frozen=True)
class SggiCandidate:
    """A group handle with an ordered generator triple."""

    table: GroupTable
    rho: tuple[int, int, int]

    def __post_init__(self) -> None:
        if len(self.rho) != 3:
            raise ValueError("rho must be an ordered triple")
        for g in self.rho:
            if not 0 <= g < self.table.order:
                raise ValueError(f"generator id {g} out of range")

    def encodings(self) -> list[list[int]]:
        return [list(self.table.enc(g)) for g in self.rho]


class SchlafliType(NamedTuple):
    k1: int
    k2: int


@dataclass(frozen=True)
class VerificationReport:
    """Per-axiom flags plus the type data of a candidate."""

    order: int
    involutions_ok: bool
    string_ok: bool
    generates_ok: bool
    intersection_ok: bool
    schlafli: SchlafliType
    tight: bool
    degenerate: bool
    notes: tuple[str, ...] = ()
    d_sylow: Optional[int] = None
    sylow_normal: Optional[bool] = None

    @property
    def is_string_cgroup(self) -> bool:
        return (
            self.involutions_ok
            and self.string_ok
            and self.generates_ok
            and self.intersection_ok
        )

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "schlafli": [self.schlafli.k1, self.schlafli.k2],
            "involutions_ok": self.involutions_ok,
            "string_ok": self.string_ok,
            "generates_ok": self.generates_ok,
            "intersection_ok": self.intersection_ok,
            "is_string_cgroup": self.is_string_cgroup,
            "tight": self.tight,
            "degenerate": self.degenerate,
            "d_sylow": self.d_sylow,
            "sylow_normal": self.sylow_normal,
            "notes": sorted(self.notes),
        }


def schlafli(c: SggiCandidate) -> SchlafliType:
    """Orders of the two consecutive products (rho0 rho1, rho1 rho2)."""
    G = c.table
    r0, r1, r2 = c.rho
    return SchlafliType(
        element_order(G, G.mul(r0, r1)),
        element_order(G, G.mul(r1, r2)),
    )


def is_tight(c: SggiCandidate) -> bool:
    """|G| equals twice the product of the type entries."""
    k = schlafli(c)
    return c.table.order == 2 * k.k1 * k.k2


def is_degenerate(c: SggiCandidate) -> bool:
    """The type contains a 2, forcing a direct-product split."""
    return 2 in schlafli(c)


def dual(c: SggiCandidate) -> SggiCandidate:
    """The reversed triple; swaps the type entries."""
    return SggiCandidate(c.table, (c.rho[2], c.rho[1], c.rho[0]))


def verify(
    c: SggiCandidate,
    all_pairs: bool = False,
    structural: bool = False,
) -> VerificationReport:
    """Decide every axiom exactly and report per-axiom flags.

    ``all_pairs`` additionally cross-checks the intersection property over
    every pair of index subsets instead of only the rank-3 reduction.
    ``structural`` adds the Sylow audit fields (normality of the p-part
    and its minimal generating rank) when |G| has the shape 4 * p^m.
    """
    G = c.table
    r0, r1, r2 = c.rho
    notes: list[str] = []

    involutions_ok = all(element_order(G, g) == 2 for g in c.rho)
    if len(set(c.rho)) < 3:
        notes.append("generators are not pairwise distinct")
    string_ok = G.mul(r0, r2) == G.mul(r2, r0)

    sub01 = close_subgroup(G, (r0, r1))
    sub12 = close_subgroup(G, (r1, r2))
    inter = intersect(sub01, sub12)
    intersection_ok = inter.members == frozenset({G.identity, r1})

    full = close_subgroup(G, c.rho)
    generates_ok = len(full) == G.order

    if all_pairs:
        pairs_ok = _all_pairs_intersections(G, c.rho, full)
        if pairs_ok != intersection_ok:
            notes.append("rank-3 reduction and all-pairs intersection check disagree")
        intersection_ok = intersection_ok and pairs_ok
        notes.append("all-pairs intersection cross-check ran")

    stype = schlafli(c)
    tight = G.order == 2 * stype.k1 * stype.k2
    degenerate = 2 in stype

    d_sylow: Optional[int] = None
    sylow_normal: Optional[bool] = None
    if structural:
        sylow_normal, d_sylow, note = _sylow_structure(G)
        if note:
            notes.append(note)

    return VerificationReport(
        order=G.order,
        involutions_ok=involutions_ok,
        string_ok=string_ok,
        generates_ok=generates_ok,
        intersection_ok=intersection_ok,
        schlafli=stype,
        tight=tight,
        degenerate=degenerate,
        notes=tuple(notes),
        d_sylow=d_sylow,
        sylow_normal=sylow_normal,
    )


def _all_pairs_intersections(G: GroupTable, rho: tuple[int, int, int], full: SubgroupSet) -> bool:
    """<rho_I> ^ <rho_J> = <rho_{I ^ J}> for every pair of index subsets."""
    subsets = [frozenset(s) for s in ((), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2))]
    closures = {}
    for I in subsets:
        if len(I) == 3:
            closures[I] = full
        else:
            closures[I] = close_subgroup(G, [rho[i] for i in sorted(I)])
    for I in subsets:
        for J in subsets:
            expected = closures[I & J].members
            if closures[I].members & closures[J].members != expected:
                return False
    return True


def _smallest_odd_prime_factor(n: int) -> Optional[int]:
    if n % 2 == 0:
        return None
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n if n > 1 else None


def _sylow_structure(G: GroupTable) -> tuple[Optional[bool], Optional[int], Optional[str]]:
    """Sylow normality and rank of the p-part for orders 4 * p^m."""
    if G.order % 4:
        return None, None, "order is not divisible by 4; Sylow audit skipped"
    q = G.order // 4
    p = _smallest_odd_prime_factor(q)
    if p is None:
        return None, None, "no odd Sylow part; audit skipped"
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        return None, None, f"order is not of the form 4*p^m; audit skipped"
    try:
        sylow = p_part(G, p)
    except SylowError:
        return False, None, "Sylow p-subgroup is not normal"
    rank = minimal_generating_rank(subgroup_table(sylow), p)
    return True, rank, None
