import math

import pytest

import ncalc


@pytest.fixture
def q():
    return ncalc.algebra("quaternion")


def close(a, b, tol=1e-9):
    return (a - b).coord_norm() < tol


def test_quaternion_products(q):
    i, j = ncalc.Element(q, "i"), ncalc.Element(q, "j")
    assert (i * j).coords == [0.0, 0.0, 0.0, 1.0]
    assert (j * i).coords == [0.0, 0.0, 0.0, -1.0]
    assert close(i.inv(), -i)
    assert repr(ncalc.Element(q, [1, 1, 0, -2])) == "1+i-2k"


def test_algebra_from_json():
    doc = ncalc.algebra("complex").to_json()
    c = ncalc.algebra(doc)
    z = ncalc.Element(c, [0.0, 1.0])
    assert (z * z).coords == [-1.0, 0.0]


def test_derivative_of_cube(q):
    p = ncalc.Poly(q, "x^3")
    assert repr(p.derivative()) == "x^2⊗1 + x⊗x + 1⊗x^2"
    x, h = ncalc.Element(q, "1+i"), ncalc.Element(q, "j")
    numeric = ncalc.gateaux(lambda y: p(y), x, h)
    assert close(p.derivative_at(x, [h]), numeric, 1e-8)


def test_path_dependence(q):
    gap = ncalc.path_dependence_gap("i", "j")
    assert repr(gap) == "i-j"
    cubic = ncalc.TensorPoly(q, "1@x^2 + x@x + x^2@1")
    x = ncalc.Element(q, [0.3, -0.2, 0.5, 0.1])
    value = ncalc.integrate_path(cubic, [0, "i", x])
    assert close(value, x * x * x, 1e-8)


def test_integrability(q):
    assert ncalc.check_integrable(ncalc.TensorPoly(q, "1@x^2 + x@x + x^2@1"))
    verdict = ncalc.check_integrable(ncalc.TensorPoly(q, "3@x^2"))
    assert not verdict.certified and verdict.max_residual > 1.0
    x = ncalc.Element(q, "i+j")
    assert close(ncalc.poincare(ncalc.TensorPoly(q, "1@x^2 + x@x + x^2@1"), x), x * x * x, 1e-7)


def test_series():
    exp, = ncalc.series_coefficients("exp", 5)
    assert exp == [1.0, 1.0, 0.5, 1 / 6, 1 / 24, 1 / 120]
    sin, cos = ncalc.series_coefficients("elliptic", 4)
    assert sin == [0.0, 1.0, 0.0, -1 / 6, 0.0]
    assert cos == [1.0, 0.0, -0.5, 0.0, 1 / 24]


def test_exp_law(q):
    i, j = ncalc.Element(q, "i"), ncalc.Element(q, "j")
    assert close(ncalc.exp(i + i * 2.0), ncalc.exp(i) * ncalc.exp(i * 2.0), 1e-8)
    assert (ncalc.exp(i + j) - ncalc.exp(i) * ncalc.exp(j)).coord_norm() > 0.1
    assert close(ncalc.exp(i * (math.pi / 2)), i, 1e-8)


def test_complex_field():
    c = ncalc.algebra("complex")
    assert ncalc.classify(ncalc.Poly(c, "x^3")) == "Holomorphic"
    assert ncalc.classify(ncalc.Poly(c, "I(x)^2")) == "ConjugateHolomorphic"
    assert ncalc.classify(ncalc.Poly(c, "x I(x)^2")) == "Neither"
    a, b = ncalc.Poly(c, "3x0^2 + 6x0x1 i"), ncalc.Poly(c, "-3x1^2")
    assert repr(ncalc.integrate_complex(a, b, "1+i")) == "-2+4i"


def test_norms():
    h = ncalc.algebra("hyperbolic")
    assert abs(ncalc.product_operator_norm(h) - math.sqrt(2)) < 1e-3
    assert abs(ncalc.product_operator_norm(ncalc.rescale_norm(h, math.sqrt(2))) - 1) < 1e-3
    m = ncalc.minkowski(h)
    assert ncalc.norm(ncalc.Element(m, [1, 1])) == 0.0
    with pytest.raises(ncalc.NcalcError) as info:
        ncalc.product_operator_norm(m)
    assert info.value.kind == "PseudoNorm"


def test_errors(q):
    with pytest.raises(ncalc.NcalcError) as info:
        ncalc.Poly(q, "x^^2")
    assert info.value.kind == "Parse"
    with pytest.raises(ncalc.NcalcError) as info:
        ncalc.Element(ncalc.algebra("hyperbolic"), "1+j").inv()
    assert info.value.kind == "SingularElement"
