import cmath
import math

import pytest

import qjones


def test_trefoil_jones():
    assert qjones.colored_jones("1 1 1", 2) == "q + q^3 - q^4"
    assert qjones.colored_jones("1 1 1", 2, mode="bosonic") == "q + q^3 - q^4"
    assert qjones.state_sum_jones("1 1 1", 2) == "q + q^3 - q^4"


def test_unknot_is_one():
    for n in range(1, 5):
        assert qjones.colored_jones("1", n) == "1"


def test_alexander_routes_agree():
    assert qjones.alexander("1 -2 1 -2") == "3 - z - z^-1"
    assert qjones.alexander("1 -2 1 -2", engine="fox") == "3 - z - z^-1"


def test_kashaev_values():
    assert qjones.kashaev_exact("-1 -1 -1", 2) == "-3"
    assert abs(qjones.kashaev("1 -2 1 -2", 2) - 5) < 1e-9
    assert abs(qjones.kashaev("1 -2 1 -2", 7, exact=False) - qjones.kashaev("1 -2 1 -2", 7)) < 1e-9


def test_volume_rate_figure_eight():
    (n, value, rate), = qjones.volume_rate("1 -2 1 -2", [20])
    assert n == 20
    assert rate == pytest.approx(2 * math.pi * math.log(value) / 20)


def test_mahler():
    assert qjones.mahler_measure("3 - z - z^-1") == pytest.approx((3 + math.sqrt(5)) / 2)


def test_errors():
    with pytest.raises(qjones.NotAKnotError):
        qjones.colored_jones("1 1", 2)
    with pytest.raises(qjones.DomainError):
        qjones.colored_jones("1 1", 2)
    with pytest.raises(qjones.ParseError):
        qjones.colored_jones("0 1", 2)
    assert not qjones.is_knot("1 1")
