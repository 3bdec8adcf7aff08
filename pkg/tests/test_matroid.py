import random

import pytest

from ellmat import (
    ArithmeticMatroid,
    EllipticArrangement,
    ParameterError,
    RingMatrix,
    char_poly,
    dual_arrangement,
    e2_poincare,
    euler_characteristic,
    find_molecule,
    format_subset,
    from_arrangement,
    gcd_property,
    p_equivalence_holds,
    poly_eval,
    poly_str,
    rho,
    tutte,
    verify_a1,
    verify_a2,
    verify_matroid,
    verify_p,
    verify_p1,
    verify_p2,
)
from support import (
    arrangement_corpus,
    curve_sqrt3,
    new_realization_omega,
    new_realization_sqrt3,
)


def _example_matroid() -> ArithmeticMatroid:
    return from_arrangement(new_realization_sqrt3())


def _free_matroid(k: int) -> ArithmeticMatroid:
    return ArithmeticMatroid(
        k,
        tuple(s.bit_count() for s in range(1 << k)),
        tuple(1 for _ in range(1 << k)),
    )


def test_from_arrangement_tables():
    matroid = _example_matroid()
    assert matroid.rk == (0, 1, 1, 1)
    assert matroid.m == (1, 4, 4, 2)
    over_maximal = from_arrangement(new_realization_omega())
    assert over_maximal.m == (1, 4, 4, 4)


def test_from_arrangement_empty_ground_set():
    arr = EllipticArrangement(RingMatrix(curve_sqrt3(), 0, 0, ()))
    matroid = from_arrangement(arr)
    assert matroid.size == 0
    assert matroid.rk == (0,)
    assert matroid.m == (1,)


def test_from_arrangement_cap():
    arr = new_realization_sqrt3()
    with pytest.raises(ParameterError):
        from_arrangement(arr, max_ground=1)


def test_table_shape_validation():
    with pytest.raises(ParameterError):
        ArithmeticMatroid(2, (0, 1, 1), (1, 1, 1, 1))
    with pytest.raises(ParameterError):
        ArithmeticMatroid(1, (0, 1), (1, 0))


def test_verify_matroid_passes_on_examples():
    assert verify_matroid(_example_matroid()) == ()
    assert verify_matroid(_free_matroid(3)) == ()


def test_verify_matroid_flags_nonzero_empty_rank():
    broken = ArithmeticMatroid(1, (1, 1), (1, 1))
    axioms = {v.axiom for v in verify_matroid(broken)}
    assert "r1" in axioms


def test_verify_a1_passes_and_fails():
    assert verify_a1(_example_matroid()) == ()
    assert verify_a1(_free_matroid(2)) == ()
    tampered = ArithmeticMatroid(2, (0, 1, 1, 1), (1, 4, 4, 3))
    violations = verify_a1(tampered)
    assert violations
    assert all(v.axiom == "a1" for v in violations)


def test_find_molecule_forced_partition():
    matroid = _example_matroid()
    mol = find_molecule(matroid, 0b01, 0b11)
    assert mol is not None
    assert mol.coloops == 0
    assert mol.loops == 0b10
    assert find_molecule(matroid, 0, 0b11) is None
    trivial = find_molecule(matroid, 0b01, 0b01)
    assert trivial is not None and trivial.coloops == 0 and trivial.loops == 0
    with pytest.raises(ParameterError):
        find_molecule(matroid, 0b10, 0b01)


def test_verify_a2_examples():
    assert verify_a2(_example_matroid()) == ()
    assert verify_a2(_free_matroid(3)) == ()
    # rank (0,1,0,1) makes [empty, {1,2}] a molecule with one coloop and one
    # loop; multiplicities (1,2,1,1) break the product identity on it.
    tampered = ArithmeticMatroid(2, (0, 1, 0, 1), (1, 2, 1, 1))
    violations = verify_a2(tampered)
    assert violations
    assert violations[0].subsets == (0, 0b11)


def test_rho_values():
    matroid = _example_matroid()
    mol = find_molecule(matroid, 0b01, 0b11)
    assert rho(matroid, mol) == 2
    mol = find_molecule(matroid, 0, 0b01)
    assert rho(matroid, mol) == 3
    mol = find_molecule(matroid, 0b01, 0b01)
    assert rho(matroid, mol) == matroid.m[0b01]


def test_positivity_axioms_on_examples():
    matroid = _example_matroid()
    assert verify_p(matroid) == ()
    assert verify_p1(matroid) == ()
    assert verify_p2(matroid) == ()
    assert p_equivalence_holds(matroid)
    assert verify_p(_free_matroid(3)) == ()


def test_dual_tables():
    dual = _example_matroid().dual()
    assert dual.rk == (0, 1, 1, 1)
    assert dual.m == (2, 4, 4, 1)
    free_dual = _free_matroid(2).dual()
    assert free_dual.rk == (0, 0, 0, 0)
    assert free_dual.m == (1, 1, 1, 1)


def test_dual_is_an_involution_on_random_tables():
    rng = random.Random(21)
    for _ in range(100):
        k = rng.randint(0, 4)
        total = 1 << k
        rk = [0] * total
        for s in range(1, total):
            rk[s] = rng.randint(0, s.bit_count())
        m = [rng.randint(1, 9) for _ in range(total)]
        matroid = ArithmeticMatroid(k, tuple(rk), tuple(m))
        assert matroid.dual().dual() == matroid


def test_contraction_and_deletion():
    matroid = _example_matroid()
    assert matroid.contraction(0) == matroid
    assert matroid.deletion(0) == matroid
    collapsed = matroid.deletion(matroid.ground_mask)
    assert collapsed.size == 0 and collapsed.m == (1,)
    contracted = matroid.contraction(0b01)
    assert contracted.rk == (0, 0)
    assert contracted.m == (4, 2)


def test_dual_realized_as_stacked_contraction():
    arr = new_realization_sqrt3()
    matroid = from_arrangement(arr)
    stacked, t_mask = dual_arrangement(arr)
    stacked_matroid = from_arrangement(stacked)
    assert stacked_matroid.contraction(t_mask) == matroid.dual()


def test_gcd_property_examples():
    holds, witness = gcd_property(_example_matroid())
    assert not holds
    assert witness == 0b11
    assert format_subset(witness) == "{1,2}"
    holds, witness = gcd_property(from_arrangement(new_realization_omega()))
    assert holds and witness is None
    assert gcd_property(_free_matroid(3)) == (True, None)


def test_gcd_property_split_prime_counterexample():
    # Over Z[i] the rational prime 13 splits as (2+3i)(2-3i).  The pair
    # determinants below are -(2+3i), 13 and 2-3i, so every pair
    # multiplicity is divisible by 13 while the three determinants share
    # no Gaussian prime: the triple intersection is one point.  The
    # integer gcd cannot separate the conjugate primes, so the gcd
    # property fails even over this maximal (hence Dedekind) order.
    from support import curve_gauss

    mat = RingMatrix.from_pairs(
        curve_gauss(),
        [[(2, 3), (2, 3)], [(1, 0), (0, 0)], [(0, 0), (2, -3)]],
    )
    matroid = from_arrangement(EllipticArrangement(mat))
    assert matroid.m[0b011] == 13
    assert matroid.m[0b101] == 169
    assert matroid.m[0b110] == 13
    assert matroid.m[0b111] == 1
    holds, witness = gcd_property(matroid)
    assert not holds
    assert witness == 0b111
    # The axioms themselves are untouched by the failure.
    assert verify_a1(matroid) == ()
    assert verify_a2(matroid) == ()
    assert verify_p(matroid) == ()


def test_tutte_polynomial():
    t_poly = tutte(_example_matroid())
    assert dict(((i, j), c) for i, j, c in t_poly.terms) == {
        (0, 0): 5,
        (1, 0): 1,
        (0, 1): 2,
    }
    assert t_poly.format("x", "y") == "x + 2*y + 5"
    assert t_poly.evaluate(1, 1) == 8
    assert tutte(_free_matroid(1)).format("x", "y") == "x"


def test_tutte_at_one_one_counts_weighted_bases():
    for arr in arrangement_corpus(25, seed=61):
        matroid = from_arrangement(arr)
        t_poly = tutte(matroid)
        r = matroid.full_rank
        weighted = sum(
            matroid.m[s]
            for s in range(1 << matroid.size)
            if s.bit_count() == r and matroid.rk[s] == r
        )
        assert t_poly.evaluate(1, 1) == weighted


def test_char_poly():
    chi = char_poly(_example_matroid())
    assert chi == (-6, 1)
    assert poly_str(chi, "t") == "t - 6"
    assert char_poly(_free_matroid(1)) == (-1, 1)


def test_char_poly_is_tutte_specialization():
    for arr in arrangement_corpus(15, seed=62):
        matroid = from_arrangement(arr)
        chi = char_poly(matroid)
        r = matroid.full_rank
        assert len(chi) == r + 1
        assert chi[r] == 1
        t_poly = tutte(matroid)
        sign = -1 if r & 1 else 1
        for t0 in (-2, -1, 0, 1, 3):
            assert poly_eval(chi, t0) == sign * t_poly.evaluate(1 - t0, 0)


def test_euler_characteristic():
    matroid = _example_matroid()
    assert euler_characteristic(matroid, 1, True) == -6
    point = ArithmeticMatroid(0, (0,), (1,))
    assert euler_characteristic(point, 0, True) == 1
    assert euler_characteristic(matroid, 2, False) == 0
    with pytest.raises(ParameterError):
        euler_characteristic(matroid, 2, True)


def test_e2_poincare():
    matroid = _example_matroid()
    poly = e2_poincare(matroid)
    assert dict(((i, j), c) for i, j, c in poly.terms) == {
        (0, 0): 1,
        (1, 0): 2,
        (2, 0): 1,
        (0, 1): 6,
    }
    assert poly.evaluate(-1, -1) == -6
    free = e2_poincare(_free_matroid(1))
    assert dict(((i, j), c) for i, j, c in free.terms) == {
        (0, 0): 1,
        (1, 0): 2,
        (2, 0): 1,
        (0, 1): 1,
    }
    with pytest.raises(ParameterError):
        e2_poincare(matroid, ambient_n=2)


def test_e2_specializes_to_euler_on_corpus():
    for arr in arrangement_corpus(20, seed=63):
        matroid = from_arrangement(arr)
        essential = arr.is_essential()
        if not essential:
            continue
        poly = e2_poincare(matroid, ambient_n=arr.n)
        assert poly.evaluate(-1, -1) == euler_characteristic(matroid, arr.n, True)


def test_rho_nonnegative_on_corpus_molecules():
    for arr in arrangement_corpus(15, seed=64):
        matroid = from_arrangement(arr)
        assert verify_p(matroid) == ()
        mol = find_molecule(matroid, 0, 0)
        assert rho(matroid, mol) == matroid.m[0]


def test_format_subset():
    assert format_subset(0) == "{}"
    assert format_subset(0b101) == "{1,3}"
