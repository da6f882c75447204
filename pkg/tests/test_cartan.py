import json

import pytest
from hypothesis import given, settings, strategies as st

from kmcat.cartan import (
    AnchorMismatch,
    NotFiniteType,
    NotGCM,
    NotSymmetrizable,
    Weight,
    dominance_leq,
    load_cartan_config,
    pairing,
    positive_roots,
    validate_gcm,
    weyl_dim,
)


def test_validate_examples():
    d = validate_gcm([[2]])
    assert d.sym == (1,) and d.finite_type
    d = validate_gcm([[2, -1], [-1, 2]])
    assert d.sym == (1, 1) and d.finite_type


def test_validate_rejects_non_gcm():
    with pytest.raises(NotGCM):
        validate_gcm([[1]])
    with pytest.raises(NotGCM):
        validate_gcm([[2, 1], [-1, 2]])
    with pytest.raises(NotGCM):
        validate_gcm([[2, 0], [-1, 2]])
    with pytest.raises(NotGCM):
        validate_gcm([[2, -1]])


def test_not_symmetrizable_cycle():
    with pytest.raises(NotSymmetrizable):
        validate_gcm([[2, -1, -2], [-2, 2, -1], [-1, -2, 2]])


def test_finite_type_classification(a1, a2, b2, g2, a1hat):
    assert a1.finite_type and a2.finite_type
    assert b2.finite_type and g2.finite_type
    assert not a1hat.finite_type


def test_symmetrizers(b2, g2, a1hat, a1xa1):
    assert b2.sym == (1, 2)
    assert g2.sym == (1, 3)
    assert a1hat.sym == (1, 1)
    assert a1xa1.sym == (1, 1)


def test_pairing_examples(a2):
    assert pairing(a2, 0, Weight((1, 0), (0, 0))) == 1
    lam = Weight((1, 0), (1, 0))
    assert pairing(a2, 0, lam) == -1
    assert pairing(a2, 1, lam) == 1


def test_dominance_examples():
    lam = Weight((1, 0), (1, 0))
    mu = Weight((1, 0), (0, 0))
    nu = Weight((1, 0), (0, 1))
    assert dominance_leq(lam, lam)
    assert dominance_leq(lam, mu)
    assert not dominance_leq(lam, nu) and not dominance_leq(nu, lam)
    with pytest.raises(AnchorMismatch):
        dominance_leq(lam, Weight((2, 0), (0, 0)))


offsets = st.tuples(st.integers(0, 5), st.integers(0, 5))


@settings(max_examples=150, deadline=None)
@given(offsets, offsets, offsets)
def test_dominance_partial_order(b1, b2_, b3):
    ws = [Weight((1, 1), b) for b in (b1, b2_, b3)]
    a, b, c = ws
    assert dominance_leq(a, a)
    if dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b
    if dominance_leq(a, b) and dominance_leq(b, c):
        assert dominance_leq(a, c)


@settings(max_examples=80, deadline=None)
@given(offsets, st.integers(0, 1), st.integers(0, 1))
def test_pairing_shift_identity(beta, i, j):
    datum = validate_gcm([[2, -1], [-1, 2]])
    lam = Weight((3, 1), beta)
    shifted = lam.shift(tuple(1 if t == j else 0 for t in range(2)))
    assert pairing(datum, i, shifted) == pairing(datum, i, lam) - datum.a(i, j)


def test_weyl_dim_examples(a1, a2):
    assert weyl_dim(a1, (0,)) == 1
    for k in range(1, 6):
        assert weyl_dim(a1, (k,)) == k + 1
    assert weyl_dim(a2, (1, 0)) == 3
    assert weyl_dim(a2, (1, 1)) == 8


def test_weyl_dim_requires_finite_type(a1hat):
    with pytest.raises(NotFiniteType):
        weyl_dim(a1hat, (1, 0))


def test_positive_root_counts(a2, b2, g2):
    assert len(positive_roots(a2)) == 3
    assert len(positive_roots(b2)) == 4
    assert len(positive_roots(g2)) == 6


def test_config_loading(tmp_path):
    cfg = {
        "cartan_matrix": [[2, -2], [-1, 2]],
        "t": [{"i": 0, "j": 1, "value": "2/3"}],
        "s": [{"i": 0, "j": 1, "p": 1, "q": 0, "value": "0"}],
    }
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg))
    datum, t_map, s_map = load_cartan_config(json.loads(path.read_text()))
    assert datum.sym == (1, 2)
    from fractions import Fraction

    assert t_map[(0, 1)] == Fraction(2, 3)
