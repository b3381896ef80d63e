"""Finite-group engine over canonical element encodings.

A group is given by a multiplication oracle acting on fixed-width integer
tuples (the canonical encodings).  A :class:`GroupTable` enumerates the
carrier once and exposes id-based operations; element ids are positions in
the lexicographically sorted encoding list, so they are stable across
rebuilds and two tables over the same carrier agree element by element.

Nothing of quadratic size is materialized unless the group is small enough
for a Cayley table to pay off (``CAYLEY_CAP``); larger groups run every
operation through the oracle.
"""

from __future__ import annotations

import os
import random
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

Encoding = tuple[int, ...]
EncodingMap = Callable[[Encoding], Encoding]

# Hard cap on enumerated group order; SCGROUP_MAX_ORDER overrides it.
DEFAULT_MAX_ORDER = 20_000
# Never materialize an order x order multiplication table above this.
CAYLEY_CAP = 5_000
# Subgroup closure sanity checks are exhaustive up to this size, sampled above.
CLOSED_EXHAUSTIVE_LIMIT = 200
# Pairwise homomorphism checks are exhaustive up to this order, sampled above.
PAIR_EXHAUSTIVE_LIMIT = 6_561
# Batch (vectorized) paths switch on above this order when the algebra allows.
_BATCH_THRESHOLD = 512


class SylowError(RuntimeError):
    """The p-power-order elements do not form a subgroup (n_p > 1)."""


def max_table_order() -> int:
    """Current cap on table enumeration; SCGROUP_MAX_ORDER overrides."""
    value = os.environ.get("SCGROUP_MAX_ORDER", "").strip()
    return int(value) if value else DEFAULT_MAX_ORDER


class GroupTable:
    """An enumerated finite group over a multiplication oracle.

    Parameters
    ----------
    elements:
        Iterable of canonical encodings; duplicates are rejected.
    mul_enc / inv_enc:
        Total multiplication and inversion on encodings.
    identity_enc:
        Encoding of the unit element.
    generator_encs:
        Optional designated generating set (used e.g. by the Frattini
        computation to pick commutator generators).
    algebra:
        Optional backing object providing vectorized ``mul_batch(X, Y)``
        and ``index_batch(X)`` over numpy arrays of encodings; enables the
        fast paths for large tables.
    """

    def __init__(
        self,
        name: str,
        elements: Iterable[Encoding],
        mul_enc: Callable[[Encoding, Encoding], Encoding],
        inv_enc: EncodingMap,
        identity_enc: Encoding,
        generator_encs: Optional[Iterable[Encoding]] = None,
        algebra=None,
    ) -> None:
        ordered = sorted(tuple(int(x) for x in e) for e in elements)
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate canonical encoding {a!r}")
        cap = max_table_order()
        if len(ordered) > cap:
            raise ValueError(
                f"group order {len(ordered)} exceeds the table cap {cap} "
                "(set SCGROUP_MAX_ORDER to raise it)"
            )
        self.name = name
        self.elements: tuple[Encoding, ...] = tuple(ordered)
        self._index = {enc: i for i, enc in enumerate(self.elements)}
        self._mul_enc = mul_enc
        self._inv_enc = inv_enc
        identity_enc = tuple(int(x) for x in identity_enc)
        if identity_enc not in self._index:
            raise ValueError("identity encoding is not in the element list")
        self.identity = self._index[identity_enc]
        self.generator_ids: Optional[tuple[int, ...]] = None
        if generator_encs is not None:
            self.generator_ids = tuple(
                self.id_of(tuple(int(x) for x in g)) for g in generator_encs
            )
        self._algebra = algebra
        if algebra is not None:
            self._check_algebra_index()
        self._earray: Optional[np.ndarray] = None
        self._cayley: Optional[np.ndarray] = None
        self._orders: Optional[np.ndarray] = None

    # -- plumbing ----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def enc(self, g: int) -> Encoding:
        return self.elements[g]

    def id_of(self, enc: Encoding) -> int:
        try:
            return self._index[enc]
        except KeyError:
            raise ValueError(f"{enc!r} is not an element of {self.name}") from None

    def mul(self, a: int, b: int) -> int:
        if self._cayley is not None:
            return int(self._cayley[a, b])
        return self._index[self._mul_enc(self.elements[a], self.elements[b])]

    def inv(self, a: int) -> int:
        return self._index[self._inv_enc(self.elements[a])]

    def _check_algebra_index(self) -> None:
        # Spot-check that algebra ids (mixed-radix positions) agree with the
        # sorted-encoding ids this table uses.
        n = len(self.elements)
        probe = sorted({0, n // 2, n - 1})
        encs = np.array([self.elements[i] for i in probe], dtype=np.int64)
        got = self._algebra.index_batch(encs)
        if list(got) != probe:
            raise ValueError("algebra index order disagrees with sorted encodings")

    # -- bulk helpers ------------------------------------------------------

    def element_array(self) -> np.ndarray:
        if self._earray is None:
            self._earray = np.array(self.elements, dtype=np.int64)
        return self._earray

    def has_batch(self) -> bool:
        return self._algebra is not None and hasattr(self._algebra, "mul_batch")

    def mul_ids_batch(self, ids_a, ids_b) -> np.ndarray:
        """Vectorized id-level products; falls back to a python loop."""
        ids_a = np.asarray(ids_a, dtype=np.int64)
        ids_b = np.asarray(ids_b, dtype=np.int64)
        ids_a, ids_b = np.broadcast_arrays(ids_a, ids_b)
        if self._cayley is not None:
            return self._cayley[ids_a, ids_b].astype(np.int64)
        if self.has_batch():
            earr = self.element_array()
            prod = self._algebra.mul_batch(earr[ids_a], earr[ids_b])
            return self._algebra.index_batch(prod)
        mul = self.mul
        return np.array([mul(int(a), int(b)) for a, b in zip(ids_a, ids_b)], dtype=np.int64)

    def cayley_table(self) -> Optional[np.ndarray]:
        """Full multiplication table, or None above ``CAYLEY_CAP``."""
        n = self.order
        if n > CAYLEY_CAP:
            return None
        if self._cayley is None:
            if self.has_batch():
                earr = self.element_array()
                table = np.empty((n, n), dtype=np.int32)
                chunk = max(1, (1 << 20) // max(n, 1))
                for start in range(0, n, chunk):
                    stop = min(start + chunk, n)
                    rows = np.repeat(np.arange(start, stop), n)
                    cols = np.tile(np.arange(n), stop - start)
                    prod = self._algebra.mul_batch(earr[rows], earr[cols])
                    ids = self._algebra.index_batch(prod)
                    table[start:stop] = np.asarray(ids, dtype=np.int32).reshape(stop - start, n)
            else:
                mul_enc, index = self._mul_enc, self._index
                table = np.empty((n, n), dtype=np.int32)
                for a, ea in enumerate(self.elements):
                    row = [index[mul_enc(ea, eb)] for eb in self.elements]
                    table[a] = row
            self._cayley = table
        return self._cayley

    def element_orders(self) -> np.ndarray:
        """Order of every element, indexed by id."""
        if self._orders is None:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            orders[self.identity] = 1
            for g in range(n):
                if orders[g]:
                    continue
                # collect the cycle of g and credit every member
                cycle = [g]
                x = self.mul(g, g)
                while x != self.identity:
                    cycle.append(x)
                    x = self.mul(x, g)
                k = len(cycle) + 1
                for i, y in enumerate(cycle):
                    if not orders[y]:
                        d = k // _gcd(k, i + 1)
                        orders[y] = d
            self._orders = orders
        return self._orders

    def __repr__(self) -> str:
        return f"GroupTable({self.name!r}, order={self.order})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup of a GroupTable as a set of member ids.

    ``generators`` records the ids the set was closed from; it is None for
    derived sets (intersections, Sylow parts, fixed-point sets).
    """

    table: GroupTable
    members: frozenset[int]
    generators: Optional[frozenset[int]] = None

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self.members

    def sorted_ids(self) -> list[int]:
        return sorted(self.members)

    def encodings(self) -> list[Encoding]:
        return sorted(self.table.enc(g) for g in self.members)


def assert_closed(S: SubgroupSet, samples: int = 2000, seed: int = 0) -> None:
    """Sanity-check closure under mul and inv.

    Exhaustive up to ``CLOSED_EXHAUSTIVE_LIMIT`` members, random-sampled
    above; raises RuntimeError on any violation.
    """
    G, members = S.table, S.members
    if G.identity not in members:
        raise RuntimeError("subgroup sanity check failed: identity missing")
    ids = sorted(members)
    for g in ids:
        if G.inv(g) not in members:
            raise RuntimeError("subgroup sanity check failed: not inverse-closed")
    if len(ids) <= CLOSED_EXHAUSTIVE_LIMIT:
        pairs = ((a, b) for a in ids for b in ids)
    else:
        rng = random.Random(seed)
        pairs = ((rng.choice(ids), rng.choice(ids)) for _ in range(samples))
    for a, b in pairs:
        if G.mul(a, b) not in members:
            raise RuntimeError("subgroup sanity check failed: not product-closed")


def close_subgroup(G: GroupTable, gens: Iterable[int]) -> SubgroupSet:
    """Smallest subgroup containing ``gens``, by breadth-first closure.

    The frontier is multiplied by the generators on both sides; membership
    is tracked by id (equivalently, by canonical encoding).  An empty
    generating set yields the trivial subgroup.
    """
    gen_ids = frozenset(int(g) for g in gens)
    for g in gen_ids:
        if not 0 <= g < G.order:
            raise ValueError(f"generator id {g} out of range")
    if not gen_ids:
        return SubgroupSet(G, frozenset({G.identity}), frozenset())
    if G.order > _BATCH_THRESHOLD and G.has_batch() and G._cayley is None:
        return _close_subgroup_batch(G, gen_ids)
    members = set(gen_ids)
    members.add(G.identity)
    queue = deque(sorted(members))
    gen_list = sorted(gen_ids)
    mul = G.mul
    while queue:
        x = queue.popleft()
        for g in gen_list:
            for z in (mul(x, g), mul(g, x)):
                if z not in members:
                    members.add(z)
                    queue.append(z)
    return SubgroupSet(G, frozenset(members), gen_ids)


def _close_subgroup_batch(G: GroupTable, gen_ids: frozenset[int]) -> SubgroupSet:
    seen = np.zeros(G.order, dtype=bool)
    start = sorted(gen_ids | {G.identity})
    seen[start] = True
    frontier = np.array(start, dtype=np.int64)
    gen_arr = np.array(sorted(gen_ids), dtype=np.int64)
    while frontier.size:
        new: list[np.ndarray] = []
        for g in gen_arr:
            for prod in (G.mul_ids_batch(frontier, g), G.mul_ids_batch(g, frontier)):
                fresh = prod[~seen[prod]]
                if fresh.size:
                    fresh = np.unique(fresh)
                    seen[fresh] = True
                    new.append(fresh)
        frontier = np.concatenate(new) if new else np.empty(0, dtype=np.int64)
    members = frozenset(int(i) for i in np.nonzero(seen)[0])
    return SubgroupSet(G, members, gen_ids)


def element_order(G: GroupTable, g: int) -> int:
    """Smallest n >= 1 with g^n = identity."""
    n, x = 1, g
    while x != G.identity:
        x = G.mul(x, g)
        n += 1
    return n


def power(G: GroupTable, g: int, n: int) -> int:
    """g^n by square-and-multiply; negative n goes through the inverse."""
    if n < 0:
        return power(G, G.inv(g), -n)
    result = G.identity
    base = g
    while n:
        if n & 1:
            result = G.mul(result, base)
        n >>= 1
        if n:
            base = G.mul(base, base)
    return result


def intersect(A: SubgroupSet, B: SubgroupSet) -> SubgroupSet:
    """Set intersection of two subgroups of the same table.

    The result is automatically a subgroup; closure is still asserted as a
    sanity check.
    """
    if A.table is not B.table:
        raise ValueError("cannot intersect subgroups of different group tables")
    S = SubgroupSet(A.table, A.members & B.members)
    assert_closed(S)
    return S


def commutator(G: GroupTable, x: int, y: int) -> int:
    """[x, y] = x^-1 y^-1 x y."""
    return G.mul(G.mul(G.mul(G.inv(x), G.inv(y)), x), y)


def conjugate(G: GroupTable, x: int, y: int) -> int:
    """x^y = y^-1 x y."""
    return G.mul(G.mul(G.inv(y), x), y)


def find_small_generating_set(G: GroupTable) -> tuple[int, ...]:
    """Greedy generating set: add the first element outside the closure.

    Not necessarily minimal, but deterministic and small (at most
    log2 |G| elements).
    """
    gens: list[int] = []
    members: frozenset[int] = frozenset({G.identity})
    for g in range(G.order):
        if g in members:
            continue
        gens.append(g)
        members = close_subgroup(G, gens).members
        if len(members) == G.order:
            break
    return tuple(gens)


def _prime_power_exponent(n: int, p: int) -> int:
    """k with n = p^k, or ValueError."""
    k = 0
    while n > 1 and n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise ValueError(f"order is not a power of {p}")
    return k


def frattini_of_pgroup(P: GroupTable, p: int, generators: Optional[Iterable[int]] = None) -> SubgroupSet:
    """Frattini subgroup of a p-group.

    Closed from the p-th powers of all elements together with the
    commutators of the designated generators (for p-groups this generates
    P' P^p = Phi(P) at desk scale; the maximal-subgroup oracle in the test
    suite guards the construction).
    """
    _prime_power_exponent(P.order, p)
    if generators is None:
        generators = P.generator_ids or find_small_generating_set(P)
    gens = sorted(set(int(g) for g in generators))
    seeds = {power(P, g, p) for g in range(P.order)}
    seeds.update(commutator(P, a, b) for a in gens for b in gens)
    S = close_subgroup(P, seeds)
    assert_closed(S)
    return S


def minimal_generating_rank(P: GroupTable, p: int, generators: Optional[Iterable[int]] = None) -> int:
    """Common size d of all minimal generating sets: log_p |P / Phi(P)|."""
    phi = frattini_of_pgroup(P, p, generators)
    quotient, rem = divmod(P.order, len(phi))
    if rem:
        raise RuntimeError("Frattini subgroup size does not divide the group order")
    return _prime_power_exponent(quotient, p)


def p_part(G: GroupTable, p: int) -> SubgroupSet:
    """The set of p-power-order elements, verified to be a subgroup.

    Requires |G| = 4 p^m with p odd.  When the set is closed it is the
    unique (hence normal) Sylow p-subgroup; otherwise n_p(G) > 1 and a
    SylowError is raised.
    """
    if p % 2 == 0:
        raise ValueError("p must be odd")
    if G.order % 4:
        raise ValueError(f"|G| = {G.order} is not of the form 4*p^m")
    m = _prime_power_exponent(G.order // 4, p)
    target = p**m
    if G.order > _BATCH_THRESHOLD and G.has_batch():
        members = _p_elements_batch(G, p, m)
    else:
        members = {g for g in range(G.order) if _has_p_power_order(G, g, p, m)}
    if len(members) != target:
        raise SylowError(
            f"Sylow p-subgroup not normal: {len(members)} elements of "
            f"p-power order, expected {target}"
        )
    S = SubgroupSet(G, frozenset(members))
    assert_closed(S)
    return S


def _has_p_power_order(G: GroupTable, g: int, p: int, m: int) -> bool:
    x = g
    for _ in range(m):
        if x == G.identity:
            return True
        x = power(G, x, p)
    return x == G.identity


def _p_elements_batch(G: GroupTable, p: int, m: int) -> set[int]:
    ids = np.arange(G.order, dtype=np.int64)
    x = ids
    for _ in range(m):
        x = _power_ids_batch(G, x, p)
    return set(int(i) for i in ids[x == G.identity])


def _power_ids_batch(G: GroupTable, ids: np.ndarray, n: int) -> np.ndarray:
    result = np.full(ids.shape, G.identity, dtype=np.int64)
    base = ids
    while n:
        if n & 1:
            result = G.mul_ids_batch(result, base)
        n >>= 1
        if n:
            base = G.mul_ids_batch(base, base)
    return result


def is_abelian(G: GroupTable) -> bool:
    """Exhaustive pair check for small tables, generator check above."""
    if G.order <= _BATCH_THRESHOLD:
        for a in range(G.order):
            for b in range(a + 1, G.order):
                if G.mul(a, b) != G.mul(b, a):
                    return False
        return True
    gens = G.generator_ids or find_small_generating_set(G)
    return all(G.mul(a, b) == G.mul(b, a) for a in gens for b in gens)


def subgroup_table(S: SubgroupSet, name: Optional[str] = None) -> GroupTable:
    """Restrict a GroupTable to a subgroup (same encodings and oracle)."""
    G = S.table
    gens = None
    if S.generators:
        gens = [G.enc(g) for g in sorted(S.generators)]
    return GroupTable(
        name or f"{G.name}|sub{len(S)}",
        [G.enc(g) for g in S.sorted_ids()],
        G._mul_enc,
        G._inv_enc,
        G.enc(G.identity),
        generator_encs=gens,
    )


def abelian_involution_split(A: GroupTable, alpha: EncodingMap) -> tuple[SubgroupSet, SubgroupSet]:
    """Split an odd-order abelian group under an involutory automorphism.

    Returns (fixed subgroup, inverted subgroup); their sizes multiply to
    |A| and they intersect trivially.
    """
    if A.order % 2 == 0:
        raise ValueError("group must have odd order")
    if not is_abelian(A):
        raise ValueError("group must be abelian")
    images = _map_ids(A, alpha)
    _require_automorphism(A, images, "alpha")
    if any(images[images[g]] != g for g in range(A.order)):
        raise ValueError("alpha is not an involution")
    fixed = frozenset(g for g in range(A.order) if images[g] == g)
    inverted = frozenset(g for g in range(A.order) if images[g] == A.inv(g))
    G1 = SubgroupSet(A, fixed)
    G2 = SubgroupSet(A, inverted)
    assert_closed(G1)
    assert_closed(G2)
    if len(G1) * len(G2) != A.order:
        raise RuntimeError("fixed/inverted sizes do not multiply to |A|")
    if G1.members & G2.members != {A.identity}:
        raise RuntimeError("fixed and inverted subgroups overlap nontrivially")
    return G1, G2


def _map_ids(G: GroupTable, f: EncodingMap) -> np.ndarray:
    """Tabulate an encoding map as an id array; images must be elements."""
    images = np.empty(G.order, dtype=np.int64)
    for g, enc in enumerate(G.elements):
        images[g] = G.id_of(tuple(int(x) for x in f(enc)))
    return images


def _require_automorphism(G: GroupTable, images: np.ndarray, label: str) -> None:
    if len(set(int(i) for i in images)) != G.order:
        raise ValueError(f"{label} is not a bijection")
    if not _is_homomorphism(G, images):
        raise ValueError(f"{label} is not a homomorphism")


def _is_homomorphism(G: GroupTable, images: np.ndarray, seed: int = 0) -> bool:
    """f(xy) = f(x) f(y); exhaustive pairs up to PAIR_EXHAUSTIVE_LIMIT."""
    n = G.order
    if n <= PAIR_EXHAUSTIVE_LIMIT:
        table = G.cayley_table()
        if table is not None:
            return bool(np.array_equal(images[table], table[images[:, None], images[None, :]]))
        if G.has_batch():
            cols = np.arange(n, dtype=np.int64)
            for x in range(n):
                row = G.mul_ids_batch(np.full(n, x, dtype=np.int64), cols)
                frow = G.mul_ids_batch(np.full(n, images[x], dtype=np.int64), images)
                if not np.array_equal(images[row], frow):
                    return False
            return True
        mul = G.mul
        return all(
            images[mul(a, b)] == mul(int(images[a]), int(images[b]))
            for a in range(n)
            for b in range(n)
        )
    rng = random.Random(seed)
    for _ in range(1_000_000):
        a = rng.randrange(n)
        b = rng.randrange(n)
        if images[G.mul(a, b)] != G.mul(int(images[a]), int(images[b])):
            return False
    return True


def normal_closure(G: GroupTable, seeds: Iterable[int]) -> SubgroupSet:
    """Smallest normal subgroup of <gens(G)> containing the seeds."""
    conj_gens = G.generator_ids or find_small_generating_set(G)
    members = close_subgroup(G, seeds).members
    while True:
        extra = set()
        for x in members:
            for g in conj_gens:
                c = conjugate(G, x, g)
                if c not in members:
                    extra.add(c)
        if not extra:
            return SubgroupSet(G, members)
        members = close_subgroup(G, members | extra).members


def nilpotency_class(G: GroupTable) -> int:
    """Length of the lower central series; ValueError if not nilpotent."""
    gens = G.generator_ids or find_small_generating_set(G)
    layer_gens: Iterable[int] = gens
    members = frozenset(range(G.order))
    c = 0
    while len(members) > 1:
        comms = {commutator(G, x, g) for x in layer_gens for g in gens}
        comms |= {commutator(G, g, x) for x in layer_gens for g in gens}
        layer = normal_closure(G, comms)
        if len(layer.members) >= len(members):
            raise ValueError(f"{G.name} is not nilpotent")
        members = layer.members
        layer_gens = sorted(members)
        c += 1
    return c


# -- axioms and identity suites ---------------------------------------------


def check_group_axioms(G: GroupTable, samples: int = 100_000, seed: int = 0) -> bool:
    """Unit, inverses, and associativity.

    Associativity is exhaustive for order <= 512 (via multiplication rows)
    and sampled on >= ``samples`` random triples above.
    """
    e = G.identity
    for g in range(G.order):
        if G.mul(e, g) != g or G.mul(g, e) != g:
            return False
        gi = G.inv(g)
        if G.mul(g, gi) != e or G.mul(gi, g) != e:
            return False
    n = G.order
    if n <= 512:
        table = G.cayley_table()
        assert table is not None
        for a in range(n):
            left = table[table[a]]          # (a b) c
            right = table[a][table]         # a (b c)
            if not np.array_equal(left, right):
                return False
        return True
    rng = random.Random(seed)
    for _ in range(samples):
        a, b, c = (rng.randrange(n) for _ in range(3))
        if G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)):
            return False
    return True


def check_commutator_identities(G: GroupTable, triples: int = 10_000, seed: int = 0) -> bool:
    """Standard commutator/conjugation identities on random triples.

    Checks, for random x, y, z:
      [xy, z] = [x, z]^y [y, z]       and  [x, yz] = [x, z] [x, y]^z
      [x, y^-1]^y = [x, y]^-1         and  [x^-1, y]^x = [x, y]^-1
      [x^-1, y^-1]^(xy) = [x, y]
    """
    rng = random.Random(seed)
    n = G.order
    for _ in range(triples):
        x, y, z = (rng.randrange(n) for _ in range(3))
        if commutator(G, G.mul(x, y), z) != G.mul(
            conjugate(G, commutator(G, x, z), y), commutator(G, y, z)
        ):
            return False
        if commutator(G, x, G.mul(y, z)) != G.mul(
            commutator(G, x, z), conjugate(G, commutator(G, x, y), z)
        ):
            return False
        if conjugate(G, commutator(G, x, G.inv(y)), y) != G.inv(commutator(G, x, y)):
            return False
        if conjugate(G, commutator(G, G.inv(x), y), x) != G.inv(commutator(G, x, y)):
            return False
        if conjugate(G, commutator(G, G.inv(x), G.inv(y)), G.mul(x, y)) != commutator(G, x, y):
            return False
    return True


# -- small stock groups (test and oracle plumbing) ---------------------------


def cyclic_group(n: int, name: Optional[str] = None) -> GroupTable:
    """C_n, elements encoded as 1-tuples with additive law."""
    if n <= 0:
        raise ValueError("order must be positive")

    def mul(a: Encoding, b: Encoding) -> Encoding:
        return ((a[0] + b[0]) % n,)

    def inv(a: Encoding) -> Encoding:
        return ((-a[0]) % n,)

    return GroupTable(
        name or f"C{n}",
        [(k,) for k in range(n)],
        mul,
        inv,
        (0,),
        generator_encs=[(1 % n,)],
    )


def direct_product(A: GroupTable, B: GroupTable, name: Optional[str] = None) -> GroupTable:
    """Direct product with concatenated encodings."""
    wa = len(A.elements[0])

    def mul(x: Encoding, y: Encoding) -> Encoding:
        return A._mul_enc(x[:wa], y[:wa]) + B._mul_enc(x[wa:], y[wa:])

    def inv(x: Encoding) -> Encoding:
        return A._inv_enc(x[:wa]) + B._inv_enc(x[wa:])

    elements = [ea + eb for ea in A.elements for eb in B.elements]
    identity = A.enc(A.identity) + B.enc(B.identity)
    gens = None
    if A.generator_ids is not None and B.generator_ids is not None:
        gens = [A.enc(g) + B.enc(B.identity) for g in A.generator_ids]
        gens += [A.enc(A.identity) + B.enc(g) for g in B.generator_ids]
    return GroupTable(name or f"{A.name}x{B.name}", elements, mul, inv, identity, generator_encs=gens)


def klein_four() -> GroupTable:
    return direct_product(cyclic_group(2), cyclic_group(2), name="C2xC2")
