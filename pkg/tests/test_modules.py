"""Explicit module constructors, tensor products, validation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfore.cyclotomic import Cyclotomic, Rational
from hopfore.errors import AlgebraMismatch, InvalidParameter, UnknownLabel, ZeroBeta
from hopfore.linalg import Matrix
from hopfore.modules import (
    ExplicitModule, direct_sum, module_eigen, module_nilpotent, tensor,
    validate, zero_module,
)


def test_nilpotent_t1_is_simple_with_zero_x(alg3):
    m = module_nilpotent(alg3, 1, 1)
    assert m.dim == 2
    assert m.x_action.is_zero()
    assert m.gen_actions == alg3.simple(1).gen_mats


def test_nilpotent_block_structure(alg3):
    m = module_nilpotent(alg3, 3, "eps")
    assert m.dim == 3
    x = m.x_action
    assert not (x ** 2).is_zero()
    assert (x ** 3).is_zero()
    assert validate(m) == []
    assert m.provenance == {Cyclotomic.zero(alg3.field_order)}


def test_nilpotent_validate_bigger(alg3):
    assert validate(module_nilpotent(alg3, 4, 1)) == []


def test_nilpotent_bad_args(alg3):
    with pytest.raises(InvalidParameter):
        module_nilpotent(alg3, 0, "eps")
    with pytest.raises(UnknownLabel):
        module_nilpotent(alg3, 2, "nope")


def test_eigen_single_block(alg3):
    b = alg3.scalar(5)
    m = module_eigen(alg3, 1, "eps", b)
    assert m.dim == 2
    assert m.x_action ** 2 == Matrix.scalar(alg3.field_order, 2, b)


def test_eigen_depth_two(alg3):
    m = module_eigen(alg3, 2, "eps", 1)
    assert m.dim == 4
    shifted = m.x_action ** 2 - Matrix.identity(alg3.field_order, 4)
    assert not shifted.is_zero()
    assert (shifted ** 2).is_zero()


def test_eigen_two_dim_simple(alg3):
    m = module_eigen(alg3, 1, 1, 1)
    assert m.dim == 4
    assert validate(m) == []


def test_eigen_zero_beta_rejected(alg3):
    with pytest.raises(ZeroBeta):
        module_eigen(alg3, 2, "eps", 0)


def test_x_power_s_is_central(alg3):
    for mod in (module_nilpotent(alg3, 3, 1), module_eigen(alg3, 2, 1, -1)):
        xs = mod.x_action ** alg3.s
        for g in mod.gen_actions:
            assert xs @ g == g @ xs


def test_tensor_unit(alg3):
    unit = module_nilpotent(alg3, 1, "eps")
    m = module_eigen(alg3, 2, 1, 1)
    prod = tensor(unit, m)
    assert prod.gen_actions == m.gen_actions
    assert prod.x_action == m.x_action


def test_tensor_eigenvalue(alg3):
    b = alg3.scalar(Rational(1, 2))
    prod = tensor(module_nilpotent(alg3, 2, "eps"), module_eigen(alg3, 1, "eps", b))
    assert prod.dim == 4
    shifted = prod.x_action ** 2 - Matrix.scalar(alg3.field_order, 4, b)
    assert (shifted ** 4).is_zero()
    assert validate(prod) == []


def test_tensor_provenance_closure(alg3):
    a = module_eigen(alg3, 1, "eps", 2)
    b = module_eigen(alg3, 1, 1, 3)
    prod = tensor(a, b)
    # sums u*2 + 3 for u in {omega_i^s} union {1}; here omega^s is +-1... all 1
    assert alg3.scalar(5) in prod.provenance
    assert alg3.scalar(2) in prod.provenance
    assert alg3.scalar(3) in prod.provenance


def test_tensor_mismatch(alg3, alg5):
    with pytest.raises(AlgebraMismatch):
        tensor(module_nilpotent(alg3, 1, "eps"), module_nilpotent(alg5, 1, "eps"))


def test_direct_sum(alg3):
    a = module_nilpotent(alg3, 2, 1)
    b = module_eigen(alg3, 1, "lam", 1)
    s = direct_sum(a, b)
    assert s.dim == a.dim + b.dim
    assert validate(s) == []
    z = zero_module(alg3)
    assert direct_sum(a, z).gen_actions == a.gen_actions
    assert direct_sum(a, z).x_action == a.x_action


def test_validate_negative_control(alg3):
    good = module_nilpotent(alg3, 2, "eps")
    bad_x = good.x_action + Matrix.identity(alg3.field_order, good.dim)
    bad = ExplicitModule(alg3, list(good.gen_actions), bad_x, good.provenance)
    report = validate(bad)
    assert report
    assert any("x" in line for line in report)


def test_serialization_round_trip(alg3, c8):
    for mod in (module_eigen(alg3, 2, 1, Rational(1, 2)),
                module_eigen(c8, 1, "c3", -2)):
        back = ExplicitModule.from_json(mod.to_json())
        assert back.dim == mod.dim
        assert back.gen_actions == mod.gen_actions
        assert back.x_action == mod.x_action
        assert back.provenance == mod.provenance
        assert validate(back) == []


_t = st.integers(min_value=1, max_value=3)
_i = st.sampled_from(["eps", "lam", "chi", "lamchi", 1, 2])
_b = st.sampled_from([1, -1, 2, Rational(1, 2)])


@settings(max_examples=25, deadline=None)
@given(t1=_t, i1=_i, t2=st.integers(min_value=1, max_value=2), i2=_i, b=_b)
def test_tensor_of_constructors_validates(alg3, t1, i1, t2, i2, b):
    left = module_nilpotent(alg3, t1, i1)
    right = module_eigen(alg3, t2, i2, b)
    assert validate(tensor(left, right)) == []
    assert validate(tensor(right, left)) == []
