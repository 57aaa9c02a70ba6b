import pytest
from hypothesis import given
from hypothesis import strategies as st

from elldp import reference as ref
from elldp.gmweights import (
    CIPresentation,
    WeightMultiset,
    ci_presentation,
    h0_dimension,
    looijenga_weights,
    presentation,
    scan_e,
    z_weights,
)
from elldp.rootdata import TYPES, root_system


@pytest.mark.parametrize("tag", TYPES)
def test_tables(tag):
    rs = root_system(tag)
    B, d = z_weights(rs)
    assert tuple(d) == ref.Z_DEGREES[tag]
    assert dict(B) == ref.Z_WEIGHTS[tag]
    assert dict(looijenga_weights(rs)) == ref.LOOIJENGA_WEIGHTS[tag]
    ci = presentation(rs)
    assert ci.relations == ref.CI_TABLE[tag]["relations"]
    assert ci.ambient == ref.CI_TABLE[tag]["ambient"]
    assert h0_dimension(rs) == rs.rank + 4
    assert B.size == rs.rank + 3


@pytest.mark.parametrize("tag", TYPES)
def test_only_e_equal_one_fits(tag):
    assert scan_e(root_system(tag)) == [1]


@pytest.mark.parametrize("tag", TYPES)
def test_ci_shape(tag):
    ci = presentation(root_system(tag))
    assert ci.dimension == 2
    assert ci.embedding_dimension == max(9 - root_system(tag).rank, 3)


@pytest.mark.parametrize("tag,mult", [("D5", 4), ("E6", 3), ("E7", 2), ("E8", 2)])
def test_multiplicity(tag, mult):
    # a weighted complete intersection of degree d >= 2 has multiplicity max(d, 2)
    assert presentation(root_system(tag)).multiplicity() == mult
    assert mult == max(9 - root_system(tag).rank, 2)


def test_e8_with_e2_infeasible():
    rs = root_system("E8")
    B, _ = z_weights(rs)
    assert ci_presentation(looijenga_weights(rs), B, 2, 3) is None


def test_str_forms():
    assert str(WeightMultiset([1, 1, 1, 1, 2, 2])) == "1^4 2^2"
    assert str(presentation(root_system("E8"))) == "X0 = (6) in A3(1,2,3)"


def test_validation():
    with pytest.raises(ValueError):
        WeightMultiset([0, 1])
    with pytest.raises(ValueError):
        ci_presentation(WeightMultiset(), WeightMultiset([1]), 1)
    with pytest.raises(ValueError):
        ci_presentation(WeightMultiset([1]), WeightMultiset([1]), 0)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=6),
       st.lists(st.integers(1, 6), min_size=1, max_size=9),
       st.integers(1, 3))
def test_cancellation_conserves_weight(a, b, e):
    ci = ci_presentation(WeightMultiset(a), WeightMultiset(b), e)
    assert isinstance(ci, CIPresentation)
    # every scaled A-weight is either cancelled or a relation
    cancelled = len(a) - len(ci.relations)
    assert len(ci.ambient) == len(b) - cancelled
    assert sum(ci.ambient) == sum(b) - (e * sum(a) - sum(ci.relations))
