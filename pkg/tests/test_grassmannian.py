import pytest

from grothpieri.basis import BasisExpansion, expand_in_grothendieck_basis, grothendieck_of_partition
from grothpieri.grassmannian import (
    Partition,
    SkewShape,
    grassmannian_permutation,
    grassmannian_pieri_col,
    grassmannian_pieri_row,
    is_horizontal_strip,
    is_vertical_strip,
    partition_of_grassmannian,
    partitions_in_box,
    strip_counts,
)
from grothpieri.perm import parse_permutation

P = parse_permutation


def test_partition_basics():
    lam = Partition((2, 1, 0))
    assert lam == (2, 1) and lam.weight == 3 and lam.part(5) == 0
    assert Partition.parse("[2,1]") == lam == Partition.parse("2,1")
    assert repr(lam) == "[2,1]"
    assert Partition((3, 2)).contains(lam)
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_strips():
    s = SkewShape((3, 1), (2,))
    assert s.size == 2 and is_horizontal_strip(s) and is_vertical_strip(s)
    assert strip_counts(s) == (2, 2)
    t = SkewShape((2, 2), (1,))
    assert not is_horizontal_strip(t) and not is_vertical_strip(t)
    assert is_vertical_strip(SkewShape((1, 1), ()))
    assert not is_horizontal_strip(SkewShape((1, 1), ()))


def test_grassmannian_permutation():
    # v(i) = lambda_{k+1-i} + i
    assert grassmannian_permutation((1, 1), 3) == P("1342")
    assert grassmannian_permutation((2, 1), 2) == P("2413")
    assert grassmannian_permutation((), 3) == P("1")
    for lam in partitions_in_box(3, 3):
        assert partition_of_grassmannian(grassmannian_permutation(lam, 3), 3) == lam
    with pytest.raises(ValueError):
        partition_of_grassmannian(P("321"), 2)
    with pytest.raises(ValueError):
        grassmannian_permutation((1, 1, 1), 2)


def test_box_enumeration():
    assert len(list(partitions_in_box(3, 3))) == 20
    assert len(list(partitions_in_box(2, 4))) == 15


def test_small_rules_by_hand():
    # G_1 * G_1 in x1, x2: G_2 + G_11 - G_21
    assert grassmannian_pieri_row((1,), 2, 1) == {Partition((2,)): 1, Partition((1, 1)): 1, Partition((2, 1)): -1}
    assert grassmannian_pieri_col((), 2, 1) == {Partition((1,)): 1}


def _as_expansion(table, k):
    return BasisExpansion((grassmannian_permutation(mu, k), c) for mu, c in table.items())


@pytest.mark.parametrize("k", [2, 3])
def test_rules_against_brute_force(k):
    for lam in partitions_in_box(k, 2):
        g = grothendieck_of_partition(lam, k)
        for p in range(1, k + 1):
            expected = expand_in_grothendieck_basis(g * grothendieck_of_partition([p], k))
            assert _as_expansion(grassmannian_pieri_row(lam, k, p), k) == expected
        for p in range(1, k):
            expected = expand_in_grothendieck_basis(g * grothendieck_of_partition([1] * p, k))
            assert _as_expansion(grassmannian_pieri_col(lam, k, p), k) == expected


def test_rule_arguments():
    with pytest.raises(ValueError):
        grassmannian_pieri_col((1,), 2, 2)
    with pytest.raises(ValueError):
        grassmannian_pieri_row((1,), 2, 0)
