import pytest
from hypothesis import given, settings, strategies as st

from kronpoly.embedding import WeightVector, image_partitions, is_additive, normal_weights
from kronpoly.errors import InputError, NotAdditiveError
from kronpoly.partitions import Partition, Tableau, conjugate, enumerate_syt, strict_partitions
from kronpoly.rectangular import verify_weakly_stable
from kronpoly.reduced import (
    NOT_REACHED,
    PolytopeSpec,
    lattice_point_count,
    murnaghan_limit,
    murnaghan_reduced,
    polytope_spec,
    reduced_kron_polytope,
    reduced_kron_stabilized,
)

from oracles import vector_partitions_brute

T22 = Tableau.parse("1,2;3,4")
T22B = Tableau.parse("1,3;2,4")


def brute_count(T, target):
    spec = polytope_spec(T, target)
    # a positive grading bounds every coefficient: t_i * grade(w_i) <= grade(target)
    top = max(spec.grade(target), 0)
    bounds = [top // spec.grade(w) for w in spec.weights]
    return vector_partitions_brute([w.coords() for w in spec.weights], target.coords(), bounds)


def test_example_target():
    target = WeightVector((-1, 1), (-1, 1))
    assert lattice_point_count(polytope_spec(T22, target)) == 3
    assert brute_count(T22, target) == 3


def test_zero_and_negative_targets():
    assert lattice_point_count(polytope_spec(T22, WeightVector((0, 0), (0, 0)))) == 1
    assert lattice_point_count(polytope_spec(T22, WeightVector((1, -1), (0, 0)))) == 0


coord = st.integers(-3, 3)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([T22, T22B]), coord, coord)
def test_count_against_brute_force_2x2(T, u, v):
    target = WeightVector((-u, u), (-v, v))
    assert lattice_point_count(polytope_spec(T, target)) == brute_count(T, target)


@pytest.mark.parametrize("target", [
    WeightVector((-1, 1), (-1, 0, 1)),
    WeightVector((-1, 1), (0, -1, 1)),
    WeightVector((0, 0), (-1, 0, 1)),
    WeightVector((-1, 1), (1, -1, 0)),
])
def test_count_against_brute_force_2x3(target):
    T = Tableau.parse("1,2,3;4,5,6")
    assert lattice_point_count(polytope_spec(T, target)) == brute_count(T, target)


@settings(max_examples=40, deadline=None)
@given(coord, coord, st.integers(0, 3))
def test_adding_a_weight_never_decreases_the_count(u, v, idx):
    # every decomposition of t extends to one of t + w by one extra copy of w
    spec = polytope_spec(T22, WeightVector((-u, u), (-v, v)))
    w = spec.weights[idx]
    shifted = WeightVector(tuple(p + q for p, q in zip(spec.target.u, w.u)),
                           tuple(p + q for p, q in zip(spec.target.v, w.v)))
    bigger = PolytopeSpec(spec.weights, shifted, spec.grading)
    assert lattice_point_count(bigger) >= lattice_point_count(spec)


def test_non_additive_tableau_is_rejected():
    with pytest.raises(NotAdditiveError):
        polytope_spec(Tableau.parse("1,2,6;3,4,7;5,8,9"), WeightVector((0,) * 3, (0,) * 3))


def test_polytope_route_agrees_with_the_oracle():
    assert reduced_kron_polytope(T22, (4, 3, 2, 1), (3, 2, 1), (4, 2), (3, 3)) == 3
    rep = reduced_kron_stabilized((4, 3, 2, 1), (7, 3), (6, 4), (3, 2, 1), (4, 2), (3, 3))
    assert rep.values == [1, 3, 3, 3]
    assert rep.plateau_value == 3 and rep.k_plateau == 1


@pytest.mark.parametrize("T", [T22, T22B])
def test_small_oracle_sample(T):
    lam = Partition((3, 2, 1))
    a_lam, b_lam = image_partitions(T, lam)
    for alpha in strict_partitions(4, 7):
        for b1 in range((alpha.size + 1) // 2, alpha.size + 1):
            beta = (b1, alpha.size - b1)
            for c1 in range((alpha.size + 1) // 2, alpha.size + 1):
                gamma = (c1, alpha.size - c1)
                expected = reduced_kron_polytope(T, lam, alpha, beta, gamma)
                rep = reduced_kron_stabilized(lam, a_lam, b_lam, alpha, beta, gamma)
                assert rep.reached
                assert rep.plateau_value == expected


def test_reduced_input_validation():
    with pytest.raises(InputError):
        reduced_kron_polytope(T22, (4, 3, 2, 1), (2, 2), (2, 2), (2, 2))  # alpha not strict
    with pytest.raises(InputError):
        reduced_kron_polytope(T22, (2, 2), (3, 2, 1), (4, 2), (3, 3))  # lambda not strict
    with pytest.raises(InputError):
        reduced_kron_polytope(T22, (4, 3, 2, 1), (3, 2, 1), (4, 1, 1), (3, 3))
    with pytest.raises(InputError):
        reduced_kron_polytope(Tableau.parse("1,2;3"), (3, 2, 1), (3, 2, 1), (4, 2), (3, 3))


def test_stabilization_of_trivial_direction():
    rep = reduced_kron_stabilized((1,), (1,), (1,), (), (), ())
    assert rep.values == [1, 1, 1]
    assert rep.k_plateau == 0


def test_stable_two_by_two_triple():
    rep = reduced_kron_stabilized((2, 2), (2, 2), (2, 2), (), (), (), k_max=5, window=5)
    assert rep.values == [1] * 5


def test_not_reached_when_window_exceeds_budget():
    rep = reduced_kron_stabilized((4, 3, 2, 1), (7, 3), (6, 4), (3, 2, 1), (4, 2), (3, 3),
                                  k_max=2, window=3)
    assert rep.plateau_value == NOT_REACHED
    assert not rep.reached
    assert rep.as_json()["plateau"] == NOT_REACHED


def test_murnaghan_single_box():
    rep = murnaghan_reduced((1,), (1,), (1,))
    assert rep.values == [0, 1, 1, 1]
    assert rep.plateau_value == 1 and rep.k_plateau == 1


@pytest.mark.parametrize("alpha,beta,gamma,expected", [
    ((), (), (), 1),
    ((1, 1), (1, 1), (), 1),
    ((2,), (1, 1), (), 0),
    ((2,), (1,), (1,), 1),
    ((1, 1), (1,), (1,), 1),
    ((2, 2), (1, 1), (2,), 0),
    ((3, 1), (2,), (1, 1), 1),
    ((3, 2, 1), (2, 1), (2, 1), 2),
])
def test_murnaghan_top_degree_is_littlewood_richardson(alpha, beta, gamma, expected):
    # when |alpha| = |beta| + |gamma| the limit is the Littlewood-Richardson coefficient
    assert murnaghan_limit(alpha, beta, gamma) == expected


@pytest.mark.parametrize("alpha,beta,gamma", [
    ((1,), (1,), (1,)), ((2,), (1,), (1,)), ((1,), (1,), (2,)), ((2, 1), (2,), (1,)),
    ((1, 1), (2,), (1, 1)), ((2,), (2,), (2,)), ((2, 1), (2, 1), (1,)),
])
def test_murnaghan_sequences_are_nondecreasing(alpha, beta, gamma):
    rep = murnaghan_reduced(alpha, beta, gamma, k_max=8, window=8)
    assert rep.values == sorted(rep.values)


@pytest.mark.parametrize("mu", [(1,), (2, 1), (3, 1), (2, 2), (3, 2, 1), (2, 1, 1), (4, 2)])
def test_hook_tableau_triples_are_weakly_stable(mu):
    m = sum(mu)
    rep = verify_weakly_stable([(1,) * m, mu, conjugate(mu)], 3)
    assert rep.all_ones


def test_stable_rays_of_additive_tableaux():
    for T in enumerate_syt(2, 3, 6):
        if is_additive(T) is None:
            continue
        assert normal_weights(T).total == 11
        al, be = image_partitions(T, (5, 4, 3, 2, 1, 0))
        assert verify_weakly_stable([(5, 4, 3, 2, 1), al, be], 1).all_ones
