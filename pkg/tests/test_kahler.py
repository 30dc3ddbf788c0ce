import pytest
import sympy

from scissors.kahler import (
    FieldTower,
    KahlerElement,
    NotExpressible,
    NotFiniteDimensional,
    PresentedAlgebra,
    hkr_degree1_check,
    kahler_presented,
    phi_map,
)
from scissors.numbers import ParseError


def test_tower_parse_and_reduce():
    T = FieldTower("t; s: s^2 = 1 - t^2")
    s, t = T.symbols["s"], T.symbols["t"]
    assert T.reduce(s ** 2) == 1 - t ** 2
    assert T.is_zero(s * s + t * t - 1)


def test_tower_division():
    T = FieldTower("t; s: s^2 = 1 - t^2")
    s = T.symbols["s"]
    inv = T.reduce(1 / s)
    assert T.is_zero(inv * s - 1)


def test_tower_rejects_reducible():
    with pytest.raises(ParseError):
        FieldTower("t; s: s^2 = t^2")  # s² − t² factors


def test_differential_of_constants_and_algebraics():
    T = FieldTower("t; s: s^2 = 1 - t^2")
    assert T.differential(sympy.Rational(1, 3)).is_zero()
    # algebraic over ℚ dies: adjoin r with r² = 2 in its own tower
    T2 = FieldTower("u; r: r^2 = 2")
    assert T2.differential(T2.symbols["r"]).is_zero()
    assert not T2.differential(T2.symbols["u"]).is_zero()


def test_euler_identity():
    # s·ds + t·dt = 0 in the circle tower
    T = FieldTower("t; s: s^2 = 1 - t^2")
    s, t = T.symbols["s"], T.symbols["t"]
    lhs = T.differential(s).scaled(s) + T.differential(t).scaled(t)
    assert lhs.is_zero()


def test_ds_formula():
    T = FieldTower("t; s: s^2 = 1 - t^2")
    s, t = T.symbols["s"], T.symbols["t"]
    ds = T.differential(s)
    want = KahlerElement(T, {t: T.reduce(-t / s)})
    assert ds == want


def test_phi_formula_single_term():
    # ℓ⊗θ with cos θ = t ↦ (ℓ/s)·dt
    T = FieldTower("t; s: s^2 = 1 - t^2")
    t = T.symbols["t"]
    out = phi_map([(1, "t", "s")], T)
    want = KahlerElement(T, {t: T.reduce(1 / T.symbols["s"])})
    assert out == want


def test_phi_algebraic_cos_vanishes():
    T = FieldTower("t; s: s^2 = 1 - t^2")
    out = phi_map([(5, "1/3")], T)
    assert out.is_zero()


def test_phi_requires_consistent_sin():
    T = FieldTower("t; s: s^2 = 1 - t^2")
    with pytest.raises(NotExpressible):
        phi_map([(1, "t", "t")], T)


def test_presented_x_squared():
    alg, omega = kahler_presented(["x"], ["x**2"])
    assert alg.dim == 2
    assert omega == 1


def test_presented_x_cubed():
    alg, omega = kahler_presented(["x"], ["x**3"])
    assert alg.dim == 3
    assert omega == 2


def test_presented_separable():
    alg, omega = kahler_presented(["x"], ["x**2 - 2"])
    assert alg.dim == 2
    assert omega == 0


def test_presented_gaussian():
    alg, omega = kahler_presented(["x"], ["x**2 + 1"])
    assert omega == 0


def test_presented_multivariate():
    # relations 2x dx, 2y dy, x dy + y dx have rank 3 inside A·dx ⊕ A·dy
    alg, omega = kahler_presented(["x", "y"], ["x**2", "x*y", "y**2"])
    assert alg.dim == 3  # 1, x, y
    assert omega == 3


def test_not_finite_dimensional():
    with pytest.raises(NotFiniteDimensional):
        kahler_presented(["x", "y"], ["x*y"])


def test_hkr_corpus():
    corpus = [
        (["x"], ["x**2"]),
        (["x"], ["x**3"]),
        (["x"], ["x**2 - 2"]),
        (["x"], ["x**2 + 1"]),
        (["x"], ["x**4"]),
        (["x"], ["x**2 - x"]),
        (["x", "y"], ["x**2", "x*y", "y**2"]),
    ]
    for gens, rels in corpus:
        assert hkr_degree1_check(gens, rels), (gens, rels)


def test_structure_algebra_roundtrip():
    alg = PresentedAlgebra(["x"], ["x**2 - x"])  # ℚ×ℚ
    A = alg.structure_algebra()
    assert A.dim == 2
    from scissors.hochschild import hochschild_homology_table
    assert hochschild_homology_table(A, 1) == [2, 0]
