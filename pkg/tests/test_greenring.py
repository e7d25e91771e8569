"""Green ring and Grothendieck ring arithmetic, power bases, presentations."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfore.cyclotomic import Rational
from hopfore.errors import RingMismatch, UnsupportedLabel
from hopfore.greenring import (
    GREEN, GROTH, Poly, RingElement, binomial_power_decomposition, eval_expr,
    f_poly, format_basis_coords, format_element, g_poly, green_basis,
    groth_basis, groth_to_x2_basis, groth_to_x_basis, ring_mul, simple_to_x,
    to_groth, unit, verify_presentation, x_basis_to_groth,
)
from hopfore.labels import (
    EIG, NIL, TORSION, IndecLabel, SimpleLabel, canonicalize,
)
from hopfore.syntax import parse


def ev(alg, src, ring=GREEN):
    return eval_expr(alg, parse(src, alg), ring)


def test_element_arithmetic(alg3):
    x = green_basis(alg3, IndecLabel(NIL, 1, 1))
    y = green_basis(alg3, IndecLabel(NIL, 2, "eps"))
    assert x + y - x == y
    assert (x - x) == RingElement(GREEN, alg3, {})
    assert not (x - x)
    assert x.scale(3) == x + x + x
    assert unit(alg3, GREEN) * x == x


def test_green_products_frozen(alg3):
    x = ev(alg3, "x")
    y = ev(alg3, "y")
    z = ev(alg3, "z")
    assert format_element(x * x) == "V[1](eps) + V[1](lam) + V[1](2)"
    assert format_element(to_groth(x) * to_groth(x)) == "1 + lam + V[1](2)"
    assert format_element(y * y) == "V[2](eps) + V[2](chi)"
    assert format_element(y * z) == "V[4](eps) + V[2](chi)"
    chi = ev(alg3, "chi")
    v4 = ev(alg3, "V[4](eps)")
    assert y * z - chi * y == v4


def test_green_w_relations(alg3):
    w1 = ev(alg3, "w[1]")
    wm1 = ev(alg3, "w[-1]")
    w2 = ev(alg3, "w[2]")
    y = ev(alg3, "y")
    chi = ev(alg3, "chi")
    assert w1 * w1 == w2.scale(2)
    assert w1 * wm1 == (unit(alg3, GREEN) + chi) * y
    assert y * w1 == w1.scale(2)


def test_groth_zero_identity(alg3):
    assert not ev(alg3, "x^3 - 3*x - (1+lam)*chi", GROTH)


def test_eval_expr_arithmetic(alg3):
    assert not ev(alg3, "2*x - x - x")
    lhs = ev(alg3, "(x+y)^2")
    x, y = ev(alg3, "x"), ev(alg3, "y")
    assert lhs == x * x + x * y + y * x + y * y
    assert ev(alg3, "-x + x") == RingElement(GREEN, alg3, {})


def test_ring_and_algebra_mismatch(alg3, alg5):
    from hopfore.errors import AlgebraMismatch

    with pytest.raises(RingMismatch):
        ev(alg3, "x") * ev(alg3, "x", GROTH)
    with pytest.raises(AlgebraMismatch):
        ring_mul(ev(alg3, "x"), ev(alg5, "x"))


def test_to_groth_is_composition_series(alg3):
    v = to_groth(ev(alg3, "V[3](eps)"))
    assert v.coeffs == {SimpleLabel(TORSION, "eps"): 2,
                        SimpleLabel(TORSION, "chi"): 1}


def test_simple_to_x_frozen(alg5):
    assert simple_to_x(alg5, 3).format() == "x^3 - 3*x"
    assert simple_to_x(alg5, 4).format() == "x^4 - 4*x^2 + 1 + lam"
    assert simple_to_x(alg5, "chi").format() == "chi"


def test_f_g_frozen(alg3):
    assert f_poly(alg3).format() == "x^2 - 1 - lam"
    assert g_poly(alg3).format() == "3*x + chi + lamchi"


def test_f_g_are_images(alg3, alg5):
    for alg in (alg3, alg5):
        x = ev(alg, "x", GROTH)
        chi = ev(alg, "chi", GROTH)
        m = alg.group.size // 4
        assert x_basis_to_groth(alg, f_poly(alg)) == chi * x
        assert x_basis_to_groth(alg, g_poly(alg)) == x ** m


@pytest.mark.parametrize("m", [3, 5])
def test_binomial_powers(m):
    from hopfore.groups import dihedral_algebra

    alg = dihedral_algebra(m)
    x = ev(alg, "x", GROTH)
    for l in range(1, m):
        assert x ** l == binomial_power_decomposition(alg, l)


def test_x_basis_round_trips(alg5):
    x = ev(alg5, "x", GROTH)
    for elt in (x ** 3, x ** 7, ev(alg5, "chi*x^2 - 4*V[1](3)", GROTH)):
        assert x_basis_to_groth(alg5, groth_to_x_basis(elt)) == elt


def test_x_basis_rejects_free_part(alg3):
    elt = to_groth(ev(alg3, "w[1]"))
    with pytest.raises(UnsupportedLabel):
        groth_to_x_basis(elt)
    with pytest.raises(UnsupportedLabel):
        groth_to_x2_basis(elt)


def test_x2_coordinates_frozen(alg3):
    coords = groth_to_x2_basis(ev(alg3, "x^2", GROTH))
    assert [(n, c) for n, c in coords if c] == [("1", 1), ("lam", 1), ("chi*x", 1)]
    assert format_basis_coords(coords) == "1 + lam + chi*x"
    assert format_basis_coords([("x", 0)]) == "0"
    assert format_basis_coords([("1", -2), ("x", 3)]) == "-2 + 3*x"


def test_x2_round_trip(alg5):
    from hopfore.greenring import x2_basis_elements

    basis = x2_basis_elements(alg5)
    for _, vec in basis:
        coords = groth_to_x2_basis(vec)
        total = RingElement(GROTH, alg5, {})
        for (_, c), (_, bvec) in zip(coords, basis):
            total = total + bvec.scale(c)
        assert total == vec


def test_presentation_suites_pass(alg3):
    betas = [1, -1, 2, -2, Rational(1, 2)]
    combined = verify_presentation(alg3, betas=betas, t_max=5)
    assert combined["ok"]
    assert combined["failed"] == 0
    assert combined["checks"] > 40
    for which in ("groth_kDn", "groth_H", "green_R", "green_H"):
        rep = verify_presentation(alg3, which=which, betas=betas, t_max=4)
        assert rep["ok"], rep


def test_poly_format():
    p = Poly.monomial(3) - Poly.monomial(1, coeff=2) + Poly.monomial(0, "chi")
    assert p.format() == "x^3 - 2*x + chi"
    assert Poly().format() == "0"


_greens = st.sampled_from(["x", "y", "z", "chi", "lam", "V[2](1)", "V[4](lam)",
                           "w[1]", "w[-1]", "y[2]", "V[2](eps;1)"])


@settings(max_examples=40, deadline=None)
@given(a=_greens, b=_greens)
def test_green_commutative_and_groth_compatible(alg3, a, b):
    ea, eb = ev(alg3, a), ev(alg3, b)
    prod = ea * eb
    assert prod == eb * ea
    assert to_groth(prod) == to_groth(ea) * to_groth(eb)
