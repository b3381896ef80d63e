"""Extensions of the p-part by a Klein four-group of twists.

Two families are built here, both of order 4 p^m:

* the nonabelian-Sylow family: the maximal-class group P extended by its
  automorphisms sigma and tau, with the generator triple
  rho_0 = s_1 tau sigma, rho_1 = beta tau sigma, rho_2 = sigma
  (Schläfli type {p, 2p});

* the abelian-Sylow family on two commuting cyclic parts x, y with
  rho_0 fixing x and inverting y, rho_2 inverting both, and
  rho_1 = x y rho_2 (Schläfli type {2 p^{l1}, p^{l2}}, tight).

Elements are encoded as the p-part followed by two twist bits, matching
the normal forms g * tau^i sigma^j and x^a y^b rho_0^i rho_2^j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .core import Encoding, GroupTable, SubgroupSet, conjugate, is_abelian, subgroup_table
from .maxclass import PGroupAlgebra, PGroupParams, _is_odd_prime
from .verifier import SggiCandidate


@dataclass(frozen=True)
class AbelianParams:
    """Parameters (p, l1, l2) of the abelian-Sylow family, l1 <= l2."""

    p: int
    l1: int
    l2: int

    def __post_init__(self) -> None:
        if not _is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.l1 < 1 or self.l2 < 1:
            raise ValueError("l1 and l2 must be >= 1")
        if self.l1 > self.l2:
            raise ValueError(f"l1 <= l2 required, got l1={self.l1}, l2={self.l2}")

    @property
    def m(self) -> int:
        return self.l1 + self.l2

    @property
    def order(self) -> int:
        return 4 * self.p**self.m


class MaxClassExtensionAlgebra:
    """Oracle for P extended by <sigma, tau>, encodings (a..., b, i, j).

    The normal form is g * tau^i * sigma^j; multiplying two normal forms
    pushes the left twist through the right p-part by applying the
    corresponding automorphism.
    """

    def __init__(self, params: PGroupParams, pgroup: Optional[PGroupAlgebra] = None) -> None:
        self.params = params
        self.pg = pgroup or PGroupAlgebra(params)
        p = params.p
        self.order = 4 * params.order
        self.identity = (0,) * (p + 2)
        self.name = f"G({params.p},{params.e},{params.r})"
        self._radices = self.pg._radices + (2, 2)
        width = p + 2
        strides = np.ones(width, dtype=np.int64)
        for i in range(width - 2, -1, -1):
            strides[i] = strides[i + 1] * self._radices[i + 1]
        self._strides = strides

    def _twist(self, g: Encoding, i: int, j: int) -> Encoding:
        if j:
            g = self.pg.sigma_enc(g)
        if i:
            g = self.pg.tau_enc(g)
        return g

    def mul(self, x: Encoding, y: Encoding) -> Encoding:
        p = self.params.p
        gx, ix, jx = x[: p], x[p], x[p + 1]
        gy, iy, jy = y[: p], y[p], y[p + 1]
        return self.pg.mul(gx, self._twist(gy, ix, jx)) + ((ix + iy) & 1, (jx + jy) & 1)

    def inv(self, x: Encoding) -> Encoding:
        p = self.params.p
        g, i, j = x[: p], x[p], x[p + 1]
        return self._twist(self.pg.inv(g), i, j) + (i, j)

    def elements(self) -> Iterator[Encoding]:
        for g in self.pg.elements():
            for i in (0, 1):
                for j in (0, 1):
                    yield g + (i, j)

    def index_batch(self, encs: np.ndarray) -> np.ndarray:
        return np.asarray(encs, dtype=np.int64) @ self._strides

    def mul_batch(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        p = self.params.p
        X = np.asarray(X, dtype=np.int64)
        Y = np.asarray(Y, dtype=np.int64)
        moved = Y[:, :p].copy()
        jmask = X[:, p + 1] == 1
        if jmask.any():
            moved[jmask] = self.pg.sigma_batch(moved[jmask])
        imask = X[:, p] == 1
        if imask.any():
            moved[imask] = self.pg.tau_batch(moved[imask])
        out = np.empty_like(X)
        out[:, :p] = self.pg.mul_batch(X[:, :p], moved)
        out[:, p:] = (X[:, p:] + Y[:, p:]) & 1
        return out

    # designated elements ----------------------------------------------------

    def rho_encodings(self) -> tuple[Encoding, Encoding, Encoding]:
        p = self.params.p
        zero = (0,) * p
        rho0 = self.pg.s_encoding(1) + (1, 1)
        rho1 = self.pg.beta_encoding() + (1, 1)
        rho2 = zero + (0, 1)
        return rho0, rho1, rho2

    def generator_encs(self) -> list[Encoding]:
        lifted = [g + (0, 0) for g in self.pg.generator_encs()]
        p = self.params.p
        zero = (0,) * p
        return lifted + [zero + (1, 0), zero + (0, 1)]


class AbelianExtensionAlgebra:
    """Oracle for the abelian-Sylow family, encodings (xe, ye, i, j).

    x has order p^{l2} and y order p^{l1}, so the defining constraint
    o(y) <= o(x) and the type {2 p^{l1}, p^{l2}} hold together.  The two
    twist bits are the exponents of rho_0 and rho_2; rho_0 fixes x and
    inverts y, rho_2 inverts both.
    """

    def __init__(self, params: AbelianParams) -> None:
        self.params = params
        self.mx = params.p**params.l2
        self.my = params.p**params.l1
        self.order = params.order
        self.identity = (0, 0, 0, 0)
        self.name = f"A({params.p},{params.l1},{params.l2})"
        self._radices = (self.mx, self.my, 2, 2)
        strides = np.ones(4, dtype=np.int64)
        for i in range(2, -1, -1):
            strides[i] = strides[i + 1] * self._radices[i + 1]
        self._strides = strides

    def _twist(self, xe: int, ye: int, i: int, j: int) -> tuple[int, int]:
        if j:
            xe, ye = -xe, -ye
        if i:
            ye = -ye
        return xe % self.mx, ye % self.my

    def mul(self, x: Encoding, y: Encoding) -> Encoding:
        xe, ye = self._twist(y[0], y[1], x[2], x[3])
        return ((x[0] + xe) % self.mx, (x[1] + ye) % self.my, (x[2] + y[2]) & 1, (x[3] + y[3]) & 1)

    def inv(self, x: Encoding) -> Encoding:
        xe, ye = self._twist(-x[0], -x[1], x[2], x[3])
        return (xe, ye, x[2], x[3])

    def elements(self) -> Iterator[Encoding]:
        return (
            tuple(t)
            for t in itertools.product(range(self.mx), range(self.my), (0, 1), (0, 1))
        )

    def index_batch(self, encs: np.ndarray) -> np.ndarray:
        return np.asarray(encs, dtype=np.int64) @ self._strides

    def mul_batch(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.int64)
        Y = np.asarray(Y, dtype=np.int64)
        sx = 1 - 2 * X[:, 3]
        sy = 1 - 2 * ((X[:, 2] + X[:, 3]) & 1)
        out = np.empty_like(X)
        out[:, 0] = (X[:, 0] + sx * Y[:, 0]) % self.mx
        out[:, 1] = (X[:, 1] + sy * Y[:, 1]) % self.my
        out[:, 2:] = (X[:, 2:] + Y[:, 2:]) & 1
        return out

    def rho_encodings(self) -> tuple[Encoding, Encoding, Encoding]:
        return (0, 0, 1, 0), (1, 1, 0, 1), (0, 0, 0, 1)

    def generator_encs(self) -> list[Encoding]:
        return [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]


@dataclass(frozen=True)
class GElement:
    """An extension-group element bound to its algebra."""

    algebra: object
    enc: Encoding


def g_multiply(x: GElement, y: GElement) -> GElement:
    """Product in the twisted normal form; algebras must agree."""
    if type(x.algebra) is not type(y.algebra) or x.algebra.params != y.algebra.params:
        raise ValueError("cannot multiply elements of groups with different parameters")
    return GElement(x.algebra, x.algebra.mul(x.enc, y.enc))


def build_maxclass_family(
    params: PGroupParams, pgroup: Optional[PGroupAlgebra] = None
) -> tuple[GroupTable, SggiCandidate]:
    """The order-4p^m group over the maximal-class P, with its triple."""
    alg = MaxClassExtensionAlgebra(params, pgroup)
    table = GroupTable(
        alg.name,
        alg.elements(),
        alg.mul,
        alg.inv,
        alg.identity,
        generator_encs=alg.generator_encs(),
        algebra=alg,
    )
    rho = tuple(table.id_of(e) for e in alg.rho_encodings())
    return table, SggiCandidate(table, rho)


def build_abelian_family(params: AbelianParams) -> tuple[GroupTable, SggiCandidate]:
    """The tight order-4p^m group over two cyclic parts, with its triple.

    The middle generator is the word x y rho_2; the construction refuses
    to proceed if that word fails to square to the identity, since the
    involution axiom is not negotiable.
    """
    alg = AbelianExtensionAlgebra(params)
    table = GroupTable(
        alg.name,
        alg.elements(),
        alg.mul,
        alg.inv,
        alg.identity,
        generator_encs=alg.generator_encs(),
        algebra=alg,
    )
    rho = tuple(table.id_of(e) for e in alg.rho_encodings())
    r1 = rho[1]
    if table.mul(r1, r1) != table.identity:
        raise RuntimeError("construction bug: x y rho_2 is not an involution")
    return table, SggiCandidate(table, rho)


def decompose_by_involution_action(
    G: GroupTable, P: SubgroupSet, rho0: int, rho2: int
) -> tuple[SubgroupSet, SubgroupSet, SubgroupSet, SubgroupSet]:
    """Split an abelian normal p-part by the conjugation action of two twists.

    Returns the four subgroups of elements (fixed, fixed), (fixed,
    inverted), (inverted, fixed) and (inverted, inverted) under rho0 and
    rho2; their sizes multiply to |P|.
    """
    if P.table is not G:
        raise ValueError("subgroup does not belong to the given table")
    if not is_abelian(subgroup_table(P)):
        raise ValueError("the p-part must be abelian")
    buckets: dict[tuple[bool, bool], set[int]] = {
        (True, True): set(),
        (True, False): set(),
        (False, True): set(),
        (False, False): set(),
    }
    for g in P.sorted_ids():
        c0 = conjugate(G, g, rho0)
        c2 = conjugate(G, g, rho2)
        if c0 not in P.members or c2 not in P.members:
            raise ValueError("rho0/rho2 do not normalize the p-part")
        ginv = G.inv(g)
        f0, i0 = c0 == g, c0 == ginv
        f2, i2 = c2 == g, c2 == ginv
        if f0 and f2:
            buckets[(True, True)].add(g)
        if f0 and i2:
            buckets[(True, False)].add(g)
        if i0 and f2:
            buckets[(False, True)].add(g)
        if i0 and i2:
            buckets[(False, False)].add(g)
    parts = tuple(
        SubgroupSet(G, frozenset(buckets[key]))
        for key in ((True, True), (True, False), (False, True), (False, False))
    )
    sizes = 1
    for part in parts:
        sizes *= len(part)
    if sizes != len(P):
        raise ValueError("the four action subgroups do not decompose the p-part")
    return parts
