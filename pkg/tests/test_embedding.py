from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from kronpoly.embedding import (
    AdditiveCertificate,
    WeightVector,
    additive_tableau_from_partition,
    expected_weight_total,
    image_partitions,
    is_additive,
    normal_weights,
    verify_certificate,
    weights_cone_pointed,
)
from kronpoly.errors import InputError
from kronpoly.partitions import Partition, Tableau, conjugate, enumerate_syt, partitions_bounded


def small_certificate(S, bound=10):
    """Search strictly increasing integer sequences with entries below ``bound``."""
    xs = [(0,) + c for c in combinations(range(1, bound), S.rows - 1)]
    ys = [(0,) + c for c in combinations(range(1, bound), S.cols - 1)]
    for x, y in product(xs, ys):
        if verify_certificate(S, AdditiveCertificate(x, y)):
            return x, y
    return None


def test_two_by_two_certificate():
    T = Tableau.parse("1,2;3,4")
    cert = is_additive(T)
    assert cert is not None and verify_certificate(T, cert)
    assert verify_certificate(T, AdditiveCertificate((0, 2), (0, 1)))
    assert not verify_certificate(T, AdditiveCertificate((0, 1), (0, 2)))


@pytest.mark.parametrize("b", [1, 2, 5])
def test_single_row(b):
    T = Tableau.parse(",".join(str(v) for v in range(1, b + 1)))
    cert = is_additive(T)
    assert cert.x == (0,)
    assert cert.y == tuple(range(b))


def test_three_by_three_census():
    tabs = enumerate_syt(3, 3, 9)
    assert len(tabs) == 42
    verdicts = [is_additive(T) is not None for T in tabs]
    assert sum(verdicts) == 36
    # independent route: bounded brute-force search finds exactly the same tableaux
    assert verdicts == [small_certificate(T) is not None for T in tabs]


def test_non_additive_example():
    # 2 < 3 and 5 < 6 add up to x3 + y2 < x2 + y3, contradicting 7 < 8
    assert is_additive(Tableau.parse("1,2,6;3,4,7;5,8,9")) is None
    assert is_additive(Tableau.parse("1,2,3;4,5,6;7,8,9")) is not None


@pytest.mark.parametrize("a,b,c", [(2, 2, 3), (2, 3, 4), (3, 3, 5), (3, 3, 7), (2, 4, 6)])
def test_partial_certificates_verify(a, b, c):
    for S in enumerate_syt(a, b, c):
        cert = is_additive(S)
        if cert is not None:
            assert verify_certificate(S, cert)
        else:
            assert small_certificate(S, bound=8) is None


def test_image_partition_examples():
    assert image_partitions(Tableau.parse("1,2;3,4"), (4, 3, 2, 1)) == ((7, 3), (6, 4))
    T = Tableau.parse("1,2,3;4,5,6;7,8,9")
    assert image_partitions(T, range(9, 0, -1)) == ((24, 15, 6), (18, 15, 12))
    for T in enumerate_syt(2, 3, 6):
        assert image_partitions(T, [1] * 6) == ((3, 3), (2, 2, 2))
    with pytest.raises(InputError):
        image_partitions(Tableau.parse("1,2;3,4"), (1, 1, 1, 1, 1))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(enumerate_syt(3, 3, 9)),
       st.lists(st.integers(0, 6), min_size=9, max_size=9))
def test_images_are_partitions_of_the_same_size(T, parts):
    lam = sorted(parts, reverse=True)
    al, be = image_partitions(T, lam)
    assert al.size == be.size == sum(lam)
    assert list(al) == sorted(al, reverse=True)
    assert list(be) == sorted(be, reverse=True)


def test_two_by_two_weights():
    W = normal_weights(Tableau.parse("1,2;3,4"))
    expected = {
        WeightVector((-1, 1), (0, 0)),
        WeightVector((0, 0), (-1, 1)),
        WeightVector((-1, 1), (-1, 1)),
        WeightVector((-1, 1), (1, -1)),
    }
    assert set(W.support()) == expected
    assert W.total == 4


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 5) for b in range(1, 5) if a * b <= 12])
def test_weight_totals_on_rectangles(a, b):
    for T in enumerate_syt(a, b, a * b)[:50]:
        assert normal_weights(T).total == expected_weight_total(a, b)


def test_weight_total_formula_values():
    assert expected_weight_total(3, 3) == 30
    assert expected_weight_total(2, 3) == 11
    assert expected_weight_total(2, 2) == 4


@pytest.mark.parametrize("a,b,c", [(2, 3, 4), (3, 3, 5), (3, 3, 6), (3, 4, 8), (2, 4, 6)])
def test_weight_totals_on_partial_tableaux(a, b, c):
    for S in enumerate_syt(a, b, c):
        if is_additive(S) is not None:
            assert normal_weights(S).total == expected_weight_total(a, b, c)


@pytest.mark.parametrize("a,b,c", [(2, 2, 4), (2, 3, 6), (3, 3, 9), (3, 3, 6), (2, 4, 8)])
def test_additivity_matches_pointed_cone(a, b, c):
    for S in enumerate_syt(a, b, c):
        assert (is_additive(S) is not None) == weights_cone_pointed(normal_weights(S))


def test_weights_blocks_sum_to_zero():
    with pytest.raises(InputError):
        WeightVector((1, 0), (0, 0))


def test_tableau_from_partition_examples():
    assert additive_tableau_from_partition((1,), 1, 1) == Tableau.parse("1")
    assert additive_tableau_from_partition((2, 1), 2, 2) == Tableau.parse("1,2;3,4")
    assert additive_tableau_from_partition((2, 2), 2, 2) == Tableau.parse("1,2;3,4")
    with pytest.raises(InputError):
        additive_tableau_from_partition((3,), 2, 2)


@pytest.mark.parametrize("a,b", [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)])
def test_tableau_from_partition_is_additive_with_expected_images(a, b):
    for m in range(0, a * b + 1):
        for mu in partitions_bounded(m, a, b):
            T = additive_tableau_from_partition(mu, a, b)
            assert is_additive(T) is not None
            al, be = image_partitions(T, [1] * m)
            assert al == Partition(mu)
            assert be == conjugate(mu)
