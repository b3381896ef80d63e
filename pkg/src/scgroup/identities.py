"""Exact binomial-coefficient identities used by the constructions."""

from __future__ import annotations

from math import comb

from .maxclass import _is_odd_prime


def binom(n: int, m: int) -> int:
    """Binomial coefficient with C(n, m) = 0 for m < 0 or m > n >= 0.

    Negative upper index follows the generalized convention
    C(n, m) = (-1)^m C(m - n - 1, m), which is what makes the alternating
    partial-sum identity hold at the boundary.
    """
    if m < 0:
        return 0
    if n >= 0:
        return comb(n, m) if m <= n else 0
    return (-1) ** m * comb(m - n - 1, m)


def check_binomial_identities(n: int, m: int, k: int) -> bool:
    """The four classical identities at a single point (n, m, k) >= 0.

    1. symmetry            C(n, m) = C(n, n-m)
    2. Pascal, doubled     C(n+2, m+1) = C(n+1, m+1) + C(n+1, m)
    3. subset-of-subset    C(n, m) C(m, k) = C(n, k) C(n-k, m-k)
    4. alternating sum     sum_{j=0}^{m} (-1)^j C(n, j) = (-1)^m C(n-1, m)
    """
    if min(n, m, k) < 0:
        raise ValueError("n, m, k must be nonnegative")
    if binom(n, m) != binom(n, n - m):
        return False
    if binom(n + 2, m + 1) != binom(n + 1, m + 1) + binom(n + 1, m):
        return False
    if binom(n, m) * binom(m, k) != binom(n, k) * binom(n - k, m - k):
        return False
    if sum((-1) ** j * binom(n, j) for j in range(m + 1)) != (-1) ** m * binom(n - 1, m):
        return False
    return True


def check_binomial_identities_range(bound: int = 30) -> bool:
    """All four identities over the full cube 0 <= n, m, k <= bound."""
    return all(
        check_binomial_identities(n, m, k)
        for n in range(bound + 1)
        for m in range(bound + 1)
        for k in range(bound + 1)
    )


def sigma_expansion_coefficients(p: int) -> tuple[int, ...]:
    """Exponents u_1..u_{p+1} of prod_j sigma(s_j)^{-C(p, j)} in s_1..s_{p+1}.

    Each u_i is accumulated column by column as the double sum
    u_i = sum_{j=2}^{min(i, p-1)} (-1)^j C(p+1-j, i-j) C(p, j), with the
    first column contributing u_1 = -C(p, 1) alone.  The result is checked
    against the closed forms

        u_1 = -p,
        u_i = -C(p, i) + (p-1) C(p, i-1)   for 2 <= i <= p-1,
        u_p = (p-1) p,
        u_{p+1} = p,

    and a mismatch raises ValueError.
    """
    if not _is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    u = [0] * (p + 2)
    u[1] = -binom(p, 1)
    for i in range(2, p + 2):
        u[i] = sum(
            (-1) ** j * binom(p + 1 - j, i - j) * binom(p, j)
            for j in range(2, min(i, p - 1) + 1)
        )
    closed = [0] * (p + 2)
    closed[1] = -p
    for i in range(2, p):
        closed[i] = -binom(p, i) + (p - 1) * binom(p, i - 1)
    closed[p] = (p - 1) * p
    closed[p + 1] = p
    for i in range(1, p + 2):
        if u[i] != closed[i]:
            raise ValueError(
                f"column sum u_{i} = {u[i]} disagrees with closed form {closed[i]}"
            )
    return tuple(u[1:])
