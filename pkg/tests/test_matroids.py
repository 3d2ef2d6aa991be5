from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linedyn import constants as K
from linedyn.families import parametrized_realization
from linedyn.matroids import (
    Permutation,
    Rank3Matroid,
    group_closure,
    is_automorphism,
    matroid_from_arrangement,
    matroid_M,
    matroid_M7,
    matroid_M8,
)

perms7 = st.permutations(range(1, 8)).map(Permutation)


def test_cycle_notation_round_trip():
    s = Permutation.from_cycles("(1,3,2)(4,5)", 6)
    assert s.images == (3, 1, 2, 5, 4, 6)
    assert repr(s) == "(1,3,2)(4,5)"
    assert Permutation.from_cycles(repr(s), 6) == s
    assert s.order() == 6


@given(perms7, perms7, perms7)
def test_group_axioms(a, b, c):
    e = Permutation.identity(7)
    assert (a * b) * c == a * (b * c)
    assert a * e == a == e * a
    assert a * a.inverse() == e
    assert (a * b)(3) == a(b(3))
    assert a ** a.order() == e


def test_closure_of_small_groups():
    r = Permutation.from_cycles("(1,2,3,4)", 4)
    f = Permutation.from_cycles("(1,3)", 4)
    assert len(group_closure([r, f])) == 8
    assert len(group_closure([Permutation.from_cycles("(1,2)", 4), r])) == 24


def test_rank3_matroid_basics():
    M = Rank3Matroid(4, [(3, 1, 2)])
    assert M.is_nonbasis((1, 2, 3)) and M.is_basis((1, 2, 4))
    assert not M.is_basis((1, 1, 2))
    with pytest.raises(ValueError):
        Rank3Matroid(3, [(1, 2, 4)])
    assert Rank3Matroid(4, [tuple(t) for t in M.to_json()["nonbases"]]) == M


def test_model_matroid_sizes():
    # each primed atom c' carries three residue pairs; the octagon sets alternate 4 and 3 pairs
    assert len(matroid_M7()) == 21
    assert len(matroid_M7("families")) == 21
    assert len(matroid_M8()) == 28
    with pytest.raises(ValueError):
        matroid_M7("other")


def test_family_labeling_is_a_relabeling_of_the_residue_rule():
    swap = Permutation.from_cycles("(2,3)(6,7)(9,10)(13,14)", 14)
    lit, fam = matroid_M7("residue"), matroid_M7("families")
    image = Rank3Matroid(14, [tuple(swap(i) for i in t) for t in fam.nonbases])
    assert image == lit


def test_realized_matroid_at_star(star):
    c0, c1 = parametrized_realization(7, star)
    assert matroid_from_arrangement(c0 + c1) == matroid_M(7, "families")


def _brute_force_automorphism_count(M, part):
    """Automorphisms acting by the same permutation on plain and primed atoms."""
    m = len(part)
    count = 0
    for p in permutations(range(1, m + 1)):
        s = Permutation(list(p) + [x + m for x in p])
        count += is_automorphism(M, s)
    return count


def test_sigma_group_of_seven_lines():
    M = matroid_M7("families")
    gens = [Permutation.from_cycles(c, 14) for c in (K.SIGMA1_PERM, K.SIGMA2_PERM)]
    assert all(is_automorphism(M, s) for s in gens)
    assert is_automorphism(M, Permutation.from_cycles(K.SIGMA0_PERM, 14))
    G = group_closure(gens)
    assert len(G) == 42
    # the affine group of Z/7 acting diagonally has order 42
    assert _brute_force_automorphism_count(M, range(7)) == 42


def test_automorphisms_of_eight_lines():
    M = matroid_M8()
    gens = [Permutation.from_cycles(c, 16) for c in K.SMALL_GENERATORS_8]
    assert all(is_automorphism(M, s) for s in gens)
    assert len(group_closure(gens)) == 32
    assert is_automorphism(M, Permutation.from_cycles(K.COMMUTING_INVOLUTION_8, 16))


def test_non_automorphism():
    M = matroid_M8()
    assert not is_automorphism(M, Permutation.from_cycles("(1,2)", 16))
    assert not is_automorphism(M, Permutation.identity(15))
