"""Smoke tests for the python module."""

import pytest

import recenters as rc


def test_catalog_and_birank():
    flip = rc.flip(2)
    assert flip.dim == 2
    assert flip.kind == "involutive"
    assert flip.birank() == (2, 0)
    assert flip.lambda_dims(4) == [1, 2, 1, 0, 0]

    dj = rc.dj(2, "2")
    assert dj.birank() == (2, 0)
    assert dj.q == "2"
    assert rc.by_name("superflip:1|1").birank() == (1, 1)


def test_symmetry_suite():
    assert rc.symmetry_suite_zero(rc.dj(2, "3/2"))
    assert rc.symmetry_suite_zero(rc.q_super(1, 1, "2"))


def test_critical_charge_and_centrality():
    dj = rc.dj(2, "2")
    assert rc.critical_charge(dj, "trig") == "16"
    assert rc.first_central_zero(dj, "trig", "critical", "3", "5")
    assert not rc.first_central_zero(dj, "trig", "1", "3", "5")
    c1, c2 = rc.centrality_condition(dj, "trig", "critical", "3", "5")
    assert c1 == "0" and c2 == "0"

    assert rc.critical_charge(rc.flip(3), "rational") == "-3"


def test_qybe():
    assert rc.qybe_zero(rc.flip(2), "rational", samples=3)
    assert rc.qybe_zero(rc.dj(2, "2"), "trig", samples=3)


def test_higher_sums_and_identities():
    qs = rc.q_super(1, 1, "2")
    assert rc.critical_charge(qs, "trig") == "1"
    assert rc.higher_central_zero(qs, "trig", "1", 2, "3", "5")
    identity_holds, central = rc.commutator_identity(rc.dj(2, "2"), 2, "3", "5")
    assert identity_holds and not central
    identity_holds, central = rc.commutator_identity(qs, 2, "3", "5")
    assert identity_holds and central
    assert rc.push_through_zero(rc.dj(2, "2"), "trig", "critical", 2, "3", "5")


def test_poles_raise():
    with pytest.raises(rc.PoleError):
        rc.first_central_zero(rc.dj(2, "2"), "trig", "critical", "3", "3")


def test_non_generic_q_rejected():
    with pytest.raises(ValueError):
        rc.dj(2, "1")
