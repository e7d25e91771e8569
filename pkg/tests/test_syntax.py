"""Little expression language: labels, scalars, ring expressions."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfore.cyclotomic import Cyclotomic, Rational
from hopfore.errors import ExprSyntaxError, UnknownLabel
from hopfore.labels import EIG, NIL, IndecLabel, canonicalize
from hopfore.syntax import (
    BinNode, IntNode, LabelNode, PowNode, format_label, format_multiset,
    parse, parse_cyclotomic, parse_label,
)


def test_cyclotomic_literals():
    assert parse_cyclotomic(6, "1/2") == Cyclotomic.rational(6, Rational(1, 2))
    assert parse_cyclotomic(6, "-3*w + 1/2") == (
        Cyclotomic.zeta(6) * -3 + Cyclotomic.rational(6, Rational(1, 2)))
    assert parse_cyclotomic(8, "(1+w)^2 - 2*w") == Cyclotomic.zeta(8) ** 2 + 1
    assert parse_cyclotomic(4, "0") == Cyclotomic.zero(4)


def test_cyclotomic_literal_errors():
    with pytest.raises(ExprSyntaxError):
        parse_cyclotomic(6, "1/0")
    with pytest.raises(ExprSyntaxError):
        parse_cyclotomic(6, "w +")
    with pytest.raises(ExprSyntaxError):
        parse_cyclotomic(6, "q")


def test_parse_label_basic(alg3):
    assert parse_label("V[3](1)", alg3) == IndecLabel(NIL, 3, 1)
    assert parse_label("V[2](lamchi)", alg3) == IndecLabel(NIL, 2, "lamchi")
    lab = parse_label("V[2](eps;1)", alg3)
    assert lab == canonicalize(alg3, EIG, 2, "eps", 1)


def test_parse_label_canonicalizes_orbit(alg3):
    a = parse_label("V[2](2;w+1)", alg3)
    b = parse_label("V[2](1;w+1)", alg3)
    assert a == b
    assert a.i == 1


def test_zero_beta_label_message(alg3):
    with pytest.raises(ExprSyntaxError) as err:
        parse_label("V[2](eps;0)", alg3)
    assert "V[4](eps)" in str(err.value)


def test_unknown_simple(alg3):
    with pytest.raises(UnknownLabel):
        parse_label("V[2](7)", alg3)
    with pytest.raises(UnknownLabel):
        parse_label("V[2](zeta)", alg3)


def test_aliases(alg3):
    assert parse_label("x", alg3) == IndecLabel(NIL, 1, 1)
    assert parse_label("y", alg3) == IndecLabel(NIL, 2, "eps")
    assert parse_label("z", alg3) == IndecLabel(NIL, 3, "eps")
    assert parse_label("y[2]", alg3) == canonicalize(alg3, EIG, 1, "eps", 2)
    assert parse_label("w[1/2]", alg3) == canonicalize(
        alg3, EIG, 1, "eps", Rational(1, 2))


def test_bare_simple_names(alg3):
    assert parse_label("chi", alg3) == IndecLabel(NIL, 1, "chi")


def test_aliases_only_for_dihedral(c4):
    assert parse_label("c2", c4) == IndecLabel(NIL, 1, "c2")
    with pytest.raises(UnknownLabel):
        parse_label("x", c4)


def test_expression_ast(alg3):
    node = parse("x^3 - 3*x", alg3)
    assert isinstance(node, BinNode) and node.op == "-"
    assert isinstance(node.left, PowNode) and node.left.power == 3
    assert isinstance(node.right, BinNode) and node.right.op == "*"
    assert isinstance(node.right.left, IntNode)
    assert node.right.left.value == 3


def test_expression_errors_have_positions(alg3):
    with pytest.raises(ExprSyntaxError) as err:
        parse("x + ", alg3)
    assert "position" in str(err.value)
    with pytest.raises(ExprSyntaxError):
        parse("x ^ -2", alg3)
    with pytest.raises(ExprSyntaxError):
        parse("(x", alg3)
    with pytest.raises(ExprSyntaxError):
        parse_label("x + y", alg3)


def test_format_label(alg3):
    assert format_label(IndecLabel(NIL, 4, "eps")) == "V[4](eps)"
    lab = canonicalize(alg3, EIG, 1, 1, Rational(1, 2))
    assert format_label(lab) == "V[1](1;1/2)"


def test_format_multiset_order_and_zero(alg3):
    counts = {IndecLabel(NIL, 2, "chi"): 1,
              IndecLabel(NIL, 1, "eps"): 2,
              canonicalize(alg3, EIG, 1, "eps", 1): 1}
    text = format_multiset(alg3, counts)
    assert text == "2*V[1](eps) + V[2](chi) + V[1](eps;1)"
    assert format_multiset(alg3, {}) == "0"


_labels = st.one_of(
    st.tuples(st.just(NIL), st.integers(1, 9),
              st.sampled_from(["eps", "lam", "chi", "lamchi", 1, 2])),
    st.tuples(st.just(EIG), st.integers(1, 4), st.sampled_from(["eps", "lam", 1]),
              st.sampled_from([1, -1, 2, -2, Rational(1, 2), Rational(-5, 3)])),
)


@settings(max_examples=80, deadline=None)
@given(parts=_labels)
def test_label_print_parse_round_trip(alg3, parts):
    if parts[0] == NIL:
        lab = canonicalize(alg3, NIL, parts[1], parts[2])
    else:
        lab = canonicalize(alg3, EIG, parts[1], parts[2], parts[3])
    assert parse_label(format_label(lab), alg3) == lab


@settings(max_examples=60, deadline=None)
@given(coeffs=st.lists(st.integers(-9, 9), min_size=2, max_size=2),
       den=st.integers(1, 5))
def test_cyclotomic_print_parse_round_trip(coeffs, den):
    val = sum((Cyclotomic.zeta(6, k) * Rational(c, den)
               for k, c in enumerate(coeffs)), Cyclotomic.zero(6))
    assert parse_cyclotomic(6, val.to_literal()) == val
