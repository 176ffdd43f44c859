from fractions import Fraction

import pytest

from burauforge.quantum import build_params, gamma_at_p, twist_projective_order


def test_rejected_levels():
    for p in (2, 6, 10, 1):
        with pytest.raises(ValueError):
            build_params(p)


def test_level_5():
    params = build_params(5)
    assert params.colors == (0, 2)
    assert params.half_order == 5
    assert params.a_root.multiplicative_order() == 10
    assert params.burau_parameter == -(params.a_root ** (-4))
    assert params.burau_parameter.multiplicative_order() == 10


def test_level_12():
    params = build_params(12)
    assert params.half_order == 3
    assert params.burau_parameter.multiplicative_order() == 6
    assert params.colors == (0, 1, 2, 3, 4)


def test_level_24():
    params = build_params(24)
    assert params.half_order == Fraction(3, 2)
    assert params.burau_parameter.multiplicative_order() == 3


def test_defining_root_orders():
    for p in range(3, 65):
        if p % 4 == 2:
            continue
        params = build_params(p)
        expected = p if p % 2 == 0 else 2 * p
        assert params.a_root.multiplicative_order() == expected
        assert params.burau_parameter.multiplicative_order() == 2 * params.half_order


def test_twist_orders():
    for p, colors in ((5, (0, 2)), (8, (0, 1, 2)), (12, (0, 1, 2, 3, 4))):
        value, rep = twist_projective_order(p)
        assert value == p and rep.passed, p
    # the full range asserted by the colour convention
    for p in range(5, 65):
        if p % 4 == 2:
            continue
        value, rep = twist_projective_order(p)
        assert value == p and rep.passed and not rep.flagged, p


def test_twist_mismatch_is_flagged_not_raised():
    value, rep = twist_projective_order(3)
    assert value == 1 and not rep.passed and rep.flagged


def test_gamma_at_p():
    cls, rep = gamma_at_p(20)
    assert cls.triangle == (5, 5, 5) and cls.case == "even"
    cls, rep = gamma_at_p(56)
    assert cls.triangle == (2, 3, 7) and cls.case == "odd"
    cls, rep = gamma_at_p(32)
    assert cls.triangle == (4, 4, 4)
    cls, rep = gamma_at_p(8)
    assert cls.case == "finite-image" and rep.note == "finite-image level"


def test_params_json_shape():
    data = build_params(12).to_json()
    assert data["p"] == 12
    assert data["burau_parameter_order"] == 6
    assert data["half_order"] == "3"
    assert set(data["twists"]) == {"0", "1", "2", "3", "4"}
