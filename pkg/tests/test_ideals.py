"""Closed sets, ideals, quotients, and the Zariski picture."""

import itertools

import numpy as np
import pytest

from cstarlab import (
    ImproperIdeal,
    InvalidSubset,
    NotContained,
    StarHomomorphism,
    closed_set_from_ideal,
    factor_through_quotient,
    ideal_from_closed_set,
    kernel_ideal,
    make_function_algebra,
    make_normal_generator_algebra,
    make_star_homomorphism,
    max_ideals,
    quotient,
    restriction_homomorphism,
    unit_ideal,
    zariski_V,
    zero_ideal,
)


@pytest.fixture
def A3():
    return make_function_algebra(("1", "2", "3"))


def brute_force_coset_norm(f, free_indices, grid=np.linspace(-8, 8, 81)):
    """Search inf over representatives by sweeping the free coordinates."""
    best = np.inf
    for combo in itertools.product(grid, repeat=len(free_indices)):
        coords = f.coords.copy()
        for idx, val in zip(free_indices, combo):
            coords[idx] = val
        best = min(best, float(np.max(np.abs(coords))))
    return best


# ---------------------------------------------------------------------------
# ideals as vanishing sets


def test_ideal_from_closed_set_example(A3):
    I = ideal_from_closed_set(A3, ("1", "3"))
    assert sorted(I.zero_set) == [0, 2]
    assert I.dimension == 1
    assert I.is_proper
    assert closed_set_from_ideal(I) == ("1", "3")


def test_ideal_membership(A3):
    I = ideal_from_closed_set(A3, ("1", "3"))
    assert I.contains(A3.element([0.0, 9.0, 0.0]))
    assert not I.contains(A3.element([1.0, 0.0, 0.0]))
    assert I.contains(A3.element([1e-12, 4.0, 0.0]), tol=1e-10)


def test_ideal_absorbs_products(A3):
    rng = np.random.default_rng(1)
    I = ideal_from_closed_set(A3, ("2",))
    for _ in range(20):
        inside = A3.element([rng.normal(), 0.0, rng.normal()])
        anything = A3.element(rng.normal(size=3) + 1j * rng.normal(size=3))
        assert I.contains(inside * anything)


def test_unknown_label_rejected(A3):
    with pytest.raises(InvalidSubset):
        ideal_from_closed_set(A3, ("1", "9"))


def test_extreme_ideals(A3):
    assert zero_ideal(A3).dimension == 0
    assert closed_set_from_ideal(zero_ideal(A3)) == ("1", "2", "3")
    assert not unit_ideal(A3).is_proper
    assert unit_ideal(A3).dimension == 3


def test_lattice_operations_swap_under_duality(A3):
    I = ideal_from_closed_set(A3, ("1", "2"))
    J = ideal_from_closed_set(A3, ("2", "3"))
    # intersecting ideals unions vanishing sets; summing intersects them
    assert closed_set_from_ideal(I.intersect(J)) == ("1", "2", "3")
    assert closed_set_from_ideal(I.sum_with(J)) == ("2",)


def test_membership_distributes_over_the_lattice(A3):
    rng = np.random.default_rng(2)
    I = ideal_from_closed_set(A3, ("1",))
    J = ideal_from_closed_set(A3, ("3",))
    for _ in range(20):
        f = A3.element([0.0, rng.normal(), 0.0])
        assert I.intersect(J).contains(f) == (I.contains(f) and J.contains(f))


def test_round_trip_is_exact_for_every_subset():
    for n in range(1, 6):
        algebra = make_function_algebra(tuple(f"x{i}" for i in range(n)))
        labels = algebra.space.points
        for r in range(n + 1):
            for subset in itertools.combinations(labels, r):
                ideal = ideal_from_closed_set(algebra, subset)
                assert closed_set_from_ideal(ideal) == subset
                again = ideal_from_closed_set(algebra, closed_set_from_ideal(ideal))
                assert again.zero_set == ideal.zero_set


# ---------------------------------------------------------------------------
# quotients


def test_quotient_example_with_inf_oracle(A3):
    I = ideal_from_closed_set(A3, ("1", "3"))
    Q, pi = quotient(A3, I)
    f = A3.element([3.0, 5.0, -2.0])
    assert Q.dim == 2
    assert np.array_equal(pi(f).coords, np.array([3.0 + 0j, -2.0 + 0j]))
    assert Q.quotient_norm(f) == 3.0
    assert brute_force_coset_norm(f, free_indices=[1]) == pytest.approx(3.0)


def test_quotient_norm_is_a_minimum_not_a_sample(A3):
    I = ideal_from_closed_set(A3, ("2",))
    Q, _ = quotient(A3, I)
    f = A3.element([7.0, 1.0, 0.5])
    assert Q.quotient_norm(f) == 1.0
    assert brute_force_coset_norm(f, free_indices=[0, 2]) == pytest.approx(1.0)


def test_quotient_of_improper_ideal_rejected(A3):
    with pytest.raises(ImproperIdeal):
        quotient(A3, unit_ideal(A3))


def test_projection_is_a_contractive_homomorphism(A3):
    rng = np.random.default_rng(3)
    I = ideal_from_closed_set(A3, ("1", "2"))
    Q, pi = quotient(A3, I)
    for _ in range(30):
        a = A3.element(rng.normal(size=3) + 1j * rng.normal(size=3))
        b = A3.element(rng.normal(size=3) + 1j * rng.normal(size=3))
        assert (pi(a * b) - pi(a) * pi(b)).norm() == 0.0
        assert pi(a).norm() <= a.norm()
        assert pi(a).norm() == Q.quotient_norm(a)


def test_quotient_satisfies_the_cstar_identity(A3):
    rng = np.random.default_rng(4)
    I = ideal_from_closed_set(A3, ("1", "3"))
    Q, _ = quotient(A3, I)
    for _ in range(30):
        a = A3.element(rng.normal(size=3) + 1j * rng.normal(size=3))
        lhs = Q.quotient_norm(a.star() * a)
        rhs = Q.quotient_norm(a) ** 2
        assert abs(lhs - rhs) <= 1e-12 * (1.0 + rhs)


def test_kernel_of_projection_is_the_ideal(A3):
    I = ideal_from_closed_set(A3, ("3",))
    _, pi = quotient(A3, I)
    assert kernel_ideal(pi).zero_set == I.zero_set


def test_factorization_reconstructs_restrictions(A3):
    phi = restriction_homomorphism(A3, ("1", "3"))
    I = kernel_ideal(phi)
    Q, pi = quotient(A3, I)
    psi = factor_through_quotient(phi, I)
    rng = np.random.default_rng(5)
    for _ in range(20):
        a = A3.element(rng.normal(size=3) + 1j * rng.normal(size=3))
        assert (psi(pi(a)) - phi(a)).norm() == 0.0


def test_factorization_requires_containment(A3):
    phi = restriction_homomorphism(A3, ("1", "3"))
    too_big = ideal_from_closed_set(A3, ("1",))
    with pytest.raises(NotContained) as info:
        factor_through_quotient(phi, too_big)
    witness = info.value.witness
    assert too_big.contains(witness)
    assert phi(witness).norm() > 0


# ---------------------------------------------------------------------------
# maximal ideals and the Zariski correspondence


def test_every_point_owns_a_maximal_ideal(A3):
    ms = max_ideals(A3)
    assert [m.point for m in ms] == [0, 1, 2]
    for m in ms:
        assert m.dimension == 2
        assert len(m.zero_set) == 1


def test_maximal_quotients_are_scalars(A3):
    # the one dimensional quotient is an isometric copy of the complexes
    rng = np.random.default_rng(6)
    for m in max_ideals(A3):
        Q, pi = quotient(A3, ideal_from_closed_set(A3, (A3.character_label(m.point),)))
        assert Q.dim == 1
        for _ in range(10):
            a = A3.element(rng.normal(size=3) + 1j * rng.normal(size=3))
            assert abs(pi(a).coords[0] - a.coords[m.point]) == 0.0
            assert Q.quotient_norm(a) == np.abs(a.coords[m.point])


def test_V_lists_the_vanishing_points(A3):
    I = ideal_from_closed_set(A3, ("1", "3"))
    assert [m.point for m in zariski_V(I)] == [0, 2]
    assert zariski_V(zero_ideal(A3)) == max_ideals(A3)
    assert zariski_V(unit_ideal(A3)) == ()


def test_zariski_axioms_exhaustively():
    for n in range(1, 5):
        algebra = make_function_algebra(tuple(f"x{i}" for i in range(n)))
        subsets = [
            frozenset(c)
            for r in range(n + 1)
            for c in itertools.combinations(range(n), r)
        ]
        ideals = {
            zs: ideal_from_closed_set(
                algebra, tuple(algebra.character_label(i) for i in sorted(zs))
            )
            for zs in subsets
        }
        points = lambda ideal: frozenset(m.point for m in zariski_V(ideal))
        for I in ideals.values():
            for J in ideals.values():
                assert points(I.intersect(J)) == points(I) | points(J)
                assert points(I.sum_with(J)) == points(I) & points(J)


def test_quotient_by_maximal_recovers_evaluation_on_matrix_model():
    algebra = make_normal_generator_algebra(np.diag([1.0, 2.0, 2.0]))
    I = ideal_from_closed_set(algebra, ("1",))
    Q, pi = quotient(algebra, I)
    g = algebra.generator_element()
    assert Q.dim == 1
    assert pi(g).coords[0] == 2.0


def test_kernel_of_injective_hom_is_zero(A3):
    assert kernel_ideal(StarHomomorphism.identity(A3)).dimension == 0


def test_kernel_of_point_evaluation_is_maximal(A3):
    target = make_function_algebra(("pt",))
    ev = make_star_homomorphism((1,), A3, target)
    k = kernel_ideal(ev)
    assert sorted(k.zero_set) == [1]
