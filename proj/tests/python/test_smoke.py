import os
from fractions import Fraction

import pytest

import ksplit

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def test_partition_operations():
    pi = ksplit.LabelledPartition("3|21l")
    assert str(pi) == "12l|3"
    assert pi.blocks == [(["1", "2"], True), (["3"], False)]
    assert ksplit.LabelledPartition("1l|2") <= ksplit.LabelledPartition("12l")
    assert not ksplit.refines(ksplit.LabelledPartition("1l|2"), ksplit.LabelledPartition("1|2l"))
    assert str(ksplit.join(ksplit.LabelledPartition("xl|y"), ksplit.LabelledPartition("x|yl"))) == "xl|yl"
    assert str(ksplit.restrict(ksplit.LabelledPartition("12l|345l|67"), ["3", "5"])) == "35l"
    assert str(ksplit.star(ksplit.LabelledPartition("1l|2|3l|4"))) == "13l|2|4"
    assert ksplit.m_indicator(ksplit.LabelledPartition("12l|3")) == 1
    assert ksplit.lambda_(ksplit.LabelledPartition("xl|yl")) == -1


def test_moebius():
    sigma = ksplit.LabelledPartition("1l|2l|34|5|67")
    pi = ksplit.LabelledPartition("12l|345l|67")
    assert ksplit.moebius(sigma, pi) == -1
    assert ksplit.moebius_bruteforce(sigma, pi) == -1
    with pytest.raises(ValueError):
        ksplit.moebius(pi, sigma)


def test_counting_and_states():
    assert ksplit.count_states(3, 0) == 17
    assert ksplit.count_reduced_states(3, 0) == 14
    assert ksplit.bell(40) == 157450588391204931289324344702531067
    assert ksplit.enumerate_states(["x", "y"]) == ["xl|y", "x|yl", "xl|yl", "xyl"]
    assert len(ksplit.enumerate_states(["a", "b", "c"], reduced=True)) == 14
    with pytest.raises(ValueError):
        ksplit.count_states(1, 2)


def test_lattice_dump():
    lat = ksplit.lattice(["x", "y"])
    assert lat["lambda"] == [1, 1, -1, 1]
    assert lat["M"][2] == [0, 0, 0, 1]
    assert all(isinstance(q, Fraction) for row in lat["M0_inverse"] for q in row)


def test_network_reliability():
    diamond = ksplit.Network.load(os.path.join(DATA, "diamond.json"))
    assert diamond.reliability() == Fraction(7, 16)
    assert diamond.split_reliability() == Fraction(7, 16)
    assert diamond.split_reliability(["x", "y"], method="p") == Fraction(7, 16)
    assert diamond.check_lemmas() == []
    again = ksplit.Network.from_json(diamond.to_json())
    assert again == diamond
    path = ksplit.Network.load(os.path.join(DATA, "path.json"))
    assert path.edges[1][3] == Fraction(1, 2)
    with pytest.raises(RuntimeError):
        path.reliability(limit=1)
    with pytest.raises(ValueError):
        ksplit.Network.load(os.path.join(DATA, "missing_terminals.json"))
