import numpy as np
import pytest

from scgroup import (
    PGroupAlgebra,
    PGroupParams,
    build_pgroup,
    check_conjugacy_expansion,
    close_subgroup,
    conjugate,
    element_order,
    hughes_property_holds,
    nilpotency_class,
    power,
    sigma,
    sigma_expansion_coefficients,
    subgroup_table,
    tau,
    verify_automorphism,
    verify_presentation,
)
from scgroup.core import is_abelian
from scgroup.maxclass import _enc_power


def test_params_validation():
    with pytest.raises(ValueError, match="odd prime"):
        PGroupParams(4, 1, 2)
    with pytest.raises(ValueError, match="odd prime"):
        PGroupParams(2, 1, 1)
    with pytest.raises(ValueError, match="r must be"):
        PGroupParams(3, 1, 0)
    with pytest.raises(ValueError, match="r must be"):
        PGroupParams(3, 1, 3)
    with pytest.raises(ValueError, match="e must be"):
        PGroupParams(3, 0, 1)
    # m = 2 < 3 has no maximal-class group
    with pytest.raises(ValueError, match="m = 2"):
        PGroupParams(3, 1, 1)


@pytest.mark.parametrize(
    "p,e,r,m", [(3, 1, 2, 3), (3, 2, 1, 4), (5, 1, 4, 5), (5, 2, 1, 6), (7, 1, 3, 4)]
)
def test_exponent_formula(p, e, r, m):
    params = PGroupParams(p, e, r)
    assert params.m == m
    assert params.order == p**m


def test_build_orders(p312, p321, p514):
    assert p312.order == 27
    assert p321.order == 81
    assert p514.order == 3125


def test_moduli_structural_zeros():
    params = PGroupParams(5, 1, 2)
    assert params.moduli() == (5, 5, 1, 1)
    alg = PGroupAlgebra(params)
    # generators beyond r collapse to the identity when e = 1
    assert alg.s_encoding(3) == alg.identity
    assert alg.s_encoding(4) == alg.identity


@pytest.mark.parametrize("p,e,r", [(3, 1, 2), (3, 2, 1), (5, 1, 4), (5, 2, 1)])
def test_presentation_holds(p, e, r):
    params = PGroupParams(p, e, r)
    P = build_pgroup(params)
    report = verify_presentation(P, params)
    assert report["all_ok"], report


def test_presentation_negative_control():
    params = PGroupParams(3, 2, 1)
    good = PGroupAlgebra(params)
    corrupted = good.beta_matrix.copy()
    corrupted[1, 0] = -corrupted[1, 0]  # flip the sign of the s1 -> s1 s2 step
    P = build_pgroup(params, algebra=PGroupAlgebra(params, beta_matrix=corrupted))
    report = verify_presentation(P, params)
    assert not report["all_ok"]
    assert not report["successor_commutators"]


def test_beta_matrix_power_is_identity():
    for p, e, r in [(3, 1, 2), (3, 2, 1), (5, 1, 4), (7, 1, 2)]:
        alg = PGroupAlgebra(PGroupParams(p, e, r))
        from scgroup.maxclass import _reduce_rows

        again = _reduce_rows(alg._mats[p - 1] @ alg.beta_matrix, alg.moduli)
        assert np.array_equal(again, alg._mats[0])


def test_beta_matrix_columns_match_relations():
    p = 5
    alg = PGroupAlgebra(PGroupParams(p, 1, 4))
    from math import comb

    for k in range(1, p - 1):
        image = alg.beta_conjugate(alg.s_vector(k))
        expected = [0] * (p - 1)
        expected[k - 1] = 1
        expected[k] = 1
        assert image == tuple(c % m for c, m in zip(expected, alg.moduli))
    last = alg.beta_conjugate(alg.s_vector(p - 1))
    expected = [-comb(p, i) for i in range(1, p - 1)] + [1 - comb(p, p - 1)]
    assert last == tuple(c % m for c, m in zip(expected, alg.moduli))


def test_conjugation_agrees_with_matrix_action(p321):
    """Pins the orientation of the multiplication law."""
    alg = p321._algebra
    beta = p321.id_of(alg.beta_encoding())
    for k in range(1, 3):
        s = p321.id_of(alg.s_encoding(k))
        via_table = p321.enc(conjugate(p321, s, beta))
        via_matrix = alg.beta_conjugate(alg.s_vector(k)) + (0,)
        assert via_table == via_matrix


def test_abelian_maximal_subgroup(p312, p321, p514):
    for P in (p312, p321, p514):
        alg = P._algebra
        p = alg.params.p
        a_ids = [P.id_of(alg.s_encoding(k)) for k in range(1, p)]
        A = close_subgroup(P, a_ids)
        assert len(A) * p == P.order
        assert is_abelian(subgroup_table(A))
        beta = P.id_of(alg.beta_encoding())
        assert all(conjugate(P, g, beta) in A.members for g in A.sorted_ids())


def test_sigma_tau_are_automorphisms(p312, p321):
    for P in (p312, p321):
        params = P._algebra.params
        assert verify_automorphism(P, sigma(params))
        assert verify_automorphism(P, tau(params))


def test_non_automorphism_rejected(p312):
    p = 3

    def shift(enc):
        return enc[:-1] + ((enc[-1] + 1) % p,)

    assert not verify_automorphism(p312, shift)


def test_sigma_tau_images(p312, p321):
    for P in (p312, p321):
        alg = P._algebra
        p = alg.params.p
        s1 = alg.s_encoding(1)
        beta = alg.beta_encoding()
        assert alg.sigma_enc(s1) == s1
        assert alg.sigma_enc(beta) == _enc_power(alg, beta, p - 1)
        assert alg.tau_enc(alg.identity) == alg.identity
        assert alg.tau_enc(s1) == alg.inv(s1)
        assert alg.tau_enc(beta) == beta


def test_sigma_on_second_generator_in_p321(p321):
    # sigma(s2) = (s2 conjugated by beta^-1) inverted
    alg = p321._algebra
    s2 = alg.s_vector(2)
    expected = alg.inv(alg.beta_conjugate(s2, -1) + (0,))
    assert alg.sigma_enc(alg.s_encoding(2)) == expected


def test_sigma_tau_pointwise_relations(p312, p321):
    for P in (p312, p321):
        alg = P._algebra
        for enc in P.elements:
            assert alg.sigma_enc(alg.sigma_enc(enc)) == enc
            assert alg.tau_enc(alg.tau_enc(enc)) == enc
            assert alg.sigma_enc(alg.tau_enc(enc)) == alg.tau_enc(alg.sigma_enc(enc))


@pytest.mark.parametrize("p,e,r", [(3, 2, 1), (5, 1, 4)])
def test_conjugacy_expansion_all_k(p, e, r):
    params = PGroupParams(p, e, r)
    for k in range(1, p + 1):
        assert check_conjugacy_expansion(params, k)


def test_conjugacy_expansion_first_step_trivial():
    # k = 1 conjugates by beta^0; both sides reduce to s1
    assert check_conjugacy_expansion(PGroupParams(3, 1, 2), 1)


def test_conjugacy_expansion_rejects_bad_k():
    with pytest.raises(ValueError, match="k must be"):
        check_conjugacy_expansion(PGroupParams(3, 1, 2), 0)
    with pytest.raises(ValueError, match="k must be"):
        check_conjugacy_expansion(PGroupParams(3, 1, 2), 4)


def test_hughes_property(p312, p321):
    for P in (p312, p321):
        params = P._algebra.params
        assert hughes_property_holds(P, params)


def test_hughes_spot_examples(p312):
    alg = p312._algebra
    s1beta = p312.id_of(alg.mul(alg.s_encoding(1), alg.beta_encoding()))
    assert element_order(p312, s1beta) == 3
    beta = p312.id_of(alg.beta_encoding())
    assert element_order(p312, beta) == 3


def test_nilpotency_class_is_maximal(p312, p321):
    assert nilpotency_class(p312) == 2
    assert nilpotency_class(p321) == 3


def test_sigma_expansion_reconstruction(p321):
    """The coefficient tuple rebuilds sigma(s_p) = s_p s_{p+1} in the group."""
    alg = p321._algebra
    p = alg.params.p
    u = sigma_expansion_coefficients(p)
    product = alg.identity
    for i in range(1, p + 2):
        product = alg.mul(product, _enc_power(alg, alg.s_encoding(i), u[i - 1]))
    sp = alg.s_encoding(p)
    sp1 = alg.s_encoding(p + 1)
    sigma_sp = alg.sigma_enc(sp)
    assert product == sigma_sp
    assert sigma_sp == alg.mul(sp, sp1)
    # and sigma(s_p) is also the beta-conjugate of s_p
    assert sigma_sp == alg.beta_conjugate(sp[:-1], 1) + (0,)
