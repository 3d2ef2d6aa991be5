from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import THOUSAND, fp_elements
from linedyn.arrangements import (
    NOT_EQUIVALENT,
    LabeledArrangement,
    labeled_lambda7,
    labeled_lambda8,
    lambda_operator,
    proj_equivalent,
    rich_lines,
    singular_points,
    t_vector,
)
from linedyn.errors import Degenerate, DuplicateLines, NonInvertible
from linedyn.families import parametrized_realization
from linedyn.fields import PrimeField
from linedyn.projective import ProjLine, ProjMap2, ProjPoint

F13 = PrimeField(13)
vec13 = st.tuples(*[fp_elements(F13)] * 3).filter(lambda v: any(c != 0 for c in v))
mat13 = st.tuples(*[st.tuples(*[fp_elements(F13)] * 3)] * 3)


def _map(m):
    try:
        return ProjMap2(m)
    except NonInvertible:
        return None


maps13 = mat13.map(_map).filter(lambda g: g is not None)


def test_pencil_and_triangle():
    A = LabeledArrangement([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
    table = singular_points(A)
    assert t_vector(table) == {2: 3, 3: 1}
    assert table[ProjPoint((0, 0, 1))] == (0, 1, 2)


def test_duplicate_lines_rejected():
    with pytest.raises(DuplicateLines):
        LabeledArrangement([(1, 0, 0), (2, 0, 0)])
    with pytest.raises(DuplicateLines):
        singular_points(LabeledArrangement([(1, 0, 0), (2, 0, 0)], check=False))


def test_complete_quadrilateral_diagonals():
    # four general lines: each holds three of the six double points, each diagonal two
    A = LabeledArrangement([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert len(lambda_operator(A, {2}, {2})) == 3
    assert lambda_operator(A, {2}, {3}).unlabeled() == A.unlabeled()


@THOUSAND
@given(st.lists(vec13, min_size=5, max_size=7, unique_by=lambda v: ProjLine(v)), maps13)
def test_lambda_operator_is_projectively_equivariant(vs, g):
    A = LabeledArrangement(vs)
    B = A.transform(g)
    for n_set, m_set in (({2}, {3}), ({2}, {3, 4}), ({3}, {2})):
        lhs = lambda_operator(B, n_set, m_set).unlabeled()
        rhs = frozenset(g.apply_line(l) for l in lambda_operator(A, n_set, m_set))
        assert lhs == rhs


def test_rich_lines_counts_points():
    pts = [ProjPoint(v) for v in ((1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1))]
    assert rich_lines(pts, {3}) == [ProjLine((0, 0, 1))]


def test_labeled_lambda7_matches_unlabeled_operator(star):
    c0, c1 = parametrized_realization(7, star)
    lab = labeled_lambda7(c0)
    assert lab == c1
    for j in range(7):
        rest = LabeledArrangement([l for i, l in enumerate(c0) if i != j], check=False)
        assert lambda_operator(rest, {2}, {3}).lines == (lab[j],)


def test_labeled_lambda8_matches_unlabeled_operator():
    from linedyn.families import random_realization_point
    import random

    rng = random.Random(3)
    x = random_realization_point(8, PrimeField(100003), rng)
    c0, c1 = parametrized_realization(8, x)
    assert labeled_lambda8(c0).unlabeled() <= lambda_operator(c0, {2}, {3, 4}).unlabeled()


@given(maps13.filter(lambda g: True), st.integers(0, 10**6))
def test_labeled_operators_commute_with_projective_maps(g, seed):
    import random

    from linedyn.families import random_realization_point

    F = PrimeField(100003)
    h = ProjMap2(tuple(tuple(F(c.v) for c in row) for row in g.matrix))
    x = random_realization_point(8, F, random.Random(seed))
    c0, _ = parametrized_realization(8, x)
    assert labeled_lambda8(c0.transform(h)) == labeled_lambda8(c0).transform(h)


def test_labeled_lambda7_degenerate_input():
    A = LabeledArrangement([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (1, -1, 2), (2, 1, 5)])
    with pytest.raises(Degenerate):
        labeled_lambda7(A)


def test_proj_equivalent(star):
    c0, c1 = parametrized_realization(7, star)
    g = ProjMap2(((1, 2, 0), (0, 1, 3), (Fraction(1, 2), 0, 1)))
    h = proj_equivalent(c0, c0.transform(g))
    assert h == g
    assert proj_equivalent(c0, c1) is NOT_EQUIVALENT


def test_json_round_trip(star):
    from linedyn.fields import QQ

    c0, _ = parametrized_realization(7, star)
    assert LabeledArrangement.from_json(c0.to_json(QQ)) == c0


def test_permuted_uses_image_labels():
    from linedyn.matroids import Permutation

    A = LabeledArrangement([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    s = Permutation.from_cycles("(1,2,3)", 3)
    assert A.permuted(s).lines == (A[1], A[2], A[0])
