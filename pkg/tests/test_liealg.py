import pytest

from kmcat.cartan import weyl_dim
from kmcat.crystal import character, highest_weight_crystal
from kmcat.liealg import (
    IncompleteDepth,
    build_highest_weight,
    build_lowest_weight,
    commutator_check,
    divided_power_span_check,
    tensor_character_check,
    verify_serre,
)


def test_sl2_string_dims(a1):
    m = build_highest_weight(a1, (2,), 3)
    assert [m.dims[(d,)] for d in range(4)] == [1, 1, 1, 0]
    assert m.support_exhausted


def test_a2_vector_rep(a2):
    m = build_highest_weight(a2, (1, 0), 3)
    assert m.total_dim() == weyl_dim(a2, (1, 0)) == 3
    nonzero = {b for b, d in m.dims.items() if d}
    assert nonzero == {(0, 0), (1, 0), (1, 1)}


def test_trivial_module(a2):
    m = build_highest_weight(a2, (0, 0), 2)
    assert m.total_dim() == 1
    for i in a2.colors():
        for blk in m.lower[i].values():
            assert all(not x for row in blk for x in row)


def test_commutator_identity(a2, a1hat):
    assert commutator_check(build_highest_weight(a2, (1, 1), 4))["passed"]
    assert commutator_check(build_highest_weight(a1hat, (1, 0), 3))["passed"]


def test_serre(a2, a1, a1hat):
    r = verify_serre(build_highest_weight(a2, (1, 1), 4))
    assert r["passed"] and r["checked"] > 0
    r1 = verify_serre(build_highest_weight(a1, (2,), 3))
    assert r1["passed"] and r1["checked"] == 0  # no pair i != j
    rh = verify_serre(build_highest_weight(a1hat, (1, 0), 3))
    assert rh["passed"] and rh["checked"] > 0


def test_divided_power_span(a1, a2):
    assert divided_power_span_check(build_highest_weight(a1, (2,), 3))["passed"]
    assert divided_power_span_check(build_highest_weight(a2, (1, 1), 3))["passed"]
    assert divided_power_span_check(build_highest_weight(a2, (1, 0), 3))["passed"]


def test_weight_multiplicities_match_crystal(a2, a1hat):
    for datum, anchor, depth in [(a2, (1, 1), 4), (a1hat, (1, 0), 3)]:
        m = build_highest_weight(datum, anchor, depth)
        c = highest_weight_crystal(datum, anchor,
                                   None if datum.finite_type else depth)
        counts = {}
        for w in c.weights:
            counts[w.offset] = counts.get(w.offset, 0) + 1
        for beta, dim in m.dims.items():
            assert counts.get(beta, 0) == dim


def test_integrability_shadow(a2):
    # raising operators are nilpotent on the truncation interior
    m = build_highest_weight(a2, (1, 1), 4)
    for i in a2.colors():
        for beta, dim in m.dims.items():
            if not dim:
                continue
            # follow e_i until the chain leaves the support
            steps = 0
            cur = beta
            while m.dims.get(cur, 0):
                nxt = list(cur)
                nxt[i] -= 1
                if nxt[i] < 0:
                    break
                cur = tuple(nxt)
                steps += 1
                assert steps <= 10


def test_lowest_weight_mirror(a1, a2):
    m = build_lowest_weight(a1, (-2,), 3)
    offs = sorted(w.offset for w, d in m.character().items())
    assert offs == [(-2,), (-1,), (0,)]
    with pytest.raises(ValueError):
        build_lowest_weight(a2, (1, 0), 2)


def test_tensor_character_trivial_factor(a2):
    r = tensor_character_check(a2, (0, 0), (1, 1), 5)
    assert r["passed"]
    assert [s["dim"] for s in r["decomposition"]["summands"]] == [8]


def test_tensor_character_sl2(a1):
    r = tensor_character_check(a1, (-1,), (1,), 4)
    assert r["passed"]
    assert [s["dim"] for s in r["decomposition"]["summands"]] == [3, 1]


def test_tensor_character_a2_dual_pair(a2):
    r = tensor_character_check(a2, (-1, 0), (1, 0), 5)
    assert r["passed"]
    assert sorted(s["dim"] for s in r["decomposition"]["summands"]) == [1, 8]


def test_tensor_character_a2_nondual_pair(a2):
    # lowest weight -Lambda_2 pairs L(Lambda_1) with itself: 3 x 3 = 6 + 3bar
    r = tensor_character_check(a2, (0, -1), (1, 0), 5)
    assert r["passed"]
    assert sorted(s["dim"] for s in r["decomposition"]["summands"]) == [3, 6]
