"""Tests for the factored curve-zeta model."""

import cmath
import math
import random

import mpmath as mp
import pytest

from zetaff import (
    CurveZeta,
    InvalidInputError,
    LambdaFactor,
    PoleEvaluationError,
    RootGrid,
    ValidationError,
    base_root,
    check_functional_equation,
    enumerate_roots,
    eval_zeta,
    make_curve,
    vertical_spacing,
)

C25 = vertical_spacing(25)


def test_vertical_spacing_matches_high_precision():
    mp.mp.dps = 50
    for q in (2, 3, 4, 5, 7, 8, 9, 25, 27, 32, 49, 101, 1024):
        expected = float(2 * mp.pi / mp.log(q))
        assert vertical_spacing(q) == pytest.approx(expected, rel=1e-15)


def test_vertical_spacing_monotone_in_q():
    values = [vertical_spacing(q) for q in (2, 3, 4, 5, 7, 8, 9, 11, 13)]
    assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("bad", [0, 1, -4, 6, 10, 12, 15, 100, 2 * 3 * 5])
def test_vertical_spacing_rejects_non_prime_powers(bad):
    with pytest.raises(InvalidInputError):
        vertical_spacing(bad)


@pytest.mark.parametrize("bad", [25.0, 4.5, "25", None, True, 7 + 0j])
def test_vertical_spacing_rejects_non_integers(bad):
    with pytest.raises(InvalidInputError):
        vertical_spacing(bad)


def test_lambda_factor_validation():
    with pytest.raises(InvalidInputError):
        LambdaFactor(1.2, 0.0, 1)
    with pytest.raises(InvalidInputError):
        LambdaFactor(-0.1, 0.0, 1)
    with pytest.raises(InvalidInputError):
        LambdaFactor(0.5, -0.3, 1)
    with pytest.raises(InvalidInputError):
        LambdaFactor(0.5, 0.0, 2)
    # nu = -1 is reserved for the two pole factors
    with pytest.raises(InvalidInputError):
        LambdaFactor(0.6, 0.0, -1)
    with pytest.raises(InvalidInputError):
        LambdaFactor(0.0, 0.3, -1)
    LambdaFactor(0.0, 0.0, -1)
    LambdaFactor(1.0, 0.0, -1)


def test_root_grid_validation():
    f = LambdaFactor(0.5, 0.3, 1)
    with pytest.raises(InvalidInputError):
        RootGrid(f, 3, 2)
    RootGrid(f, -2, 2)


def test_base_root_and_enumerate_roots():
    f = LambdaFactor(0.6, 0.7, 1)
    assert base_root(f) == complex(0.6, 0.7)
    grid = RootGrid(f, -2, 3)
    roots = enumerate_roots(grid, 25)
    assert len(roots) == 6
    mp.mp.dps = 50
    C = float(2 * mp.pi / mp.log(25))
    for j, r in zip(range(-2, 4), roots):
        assert r.real == 0.6
        assert r.imag == pytest.approx(0.7 + C * j, abs=1e-12)
    # consecutive roots are spaced by exactly C
    for lo, hi in zip(roots, roots[1:]):
        assert (hi - lo).imag == pytest.approx(C25, abs=1e-12)


def test_make_curve_genus2_and_normalization():
    t = 0.7
    curve = make_curve(25, 2, [(0.6, t), (0.4, C25 - t), (0.6, C25 - t), (0.4, t)])
    assert curve.genus == 2
    assert len(curve.factors) == 6
    assert len(curve.root_factors()) == 4
    assert {f.nu for f in curve.factors} == {1, -1}
    # tau0 is normalized into [0, C)
    shifted = make_curve(
        25, 2, [(0.6, t + 3 * C25), (0.4, C25 - t), (0.6, C25 - t), (0.4, t - 2 * C25)]
    )
    assert sorted((f.sigma0, round(f.tau0, 12)) for f in shifted.factors) == sorted(
        (f.sigma0, round(f.tau0, 12)) for f in curve.factors
    )


def test_make_curve_rejects_missing_conjugates():
    # closed under lambda -> q/lambda but not under conjugation
    with pytest.raises(ValidationError):
        make_curve(25, 1, [(0.6, 0.7), (0.4, C25 - 0.7)])
    # closed under conjugation but not under lambda -> q/lambda
    with pytest.raises(ValidationError):
        make_curve(25, 1, [(0.6, 0.7), (0.6, C25 - 0.7)])


def test_make_curve_self_conjugate_cases():
    # tau0 = C/2 is its own conjugate; sigma pair covers the q/lambda map
    make_curve(25, 1, [(0.6, C25 / 2), (0.4, C25 / 2)])
    # tau0 = 0 likewise
    make_curve(25, 1, [(0.6, 0.0), (0.4, 0.0)])
    # sigma0 = 1/2 with a conjugate tau pair is closed under both maps
    make_curve(25, 1, [(0.5, 0.7), (0.5, C25 - 0.7)])


def test_make_curve_input_validation():
    with pytest.raises(InvalidInputError):
        make_curve(25, -1, [])
    with pytest.raises(InvalidInputError):
        make_curve(25, 1, [(0.5, 0.7)])  # wrong count
    with pytest.raises(InvalidInputError):
        make_curve(25, 1, [(1.5, 0.7), (-0.5, C25 - 0.7)])  # sigma0 out of range


def test_eval_zeta_genus0_closed_form():
    curve = make_curve(7, 0, [])
    for s in (2.3, 1.7 + 0.9j, 3.0 - 2.2j):
        got = eval_zeta(curve, s)
        expected = 1.0 / ((1 - 7.0 ** (-complex(s))) * (1 - 7.0 ** (1 - complex(s))))
        assert got == pytest.approx(expected, rel=1e-13)


def test_eval_zeta_conjugation_symmetry():
    curve = make_curve(25, 2, [(0.6, 0.7), (0.4, C25 - 0.7), (0.6, C25 - 0.7), (0.4, 0.7)])
    rng = random.Random(7)
    for _ in range(20):
        s = complex(rng.uniform(-1, 3), rng.uniform(-6, 6))
        assert eval_zeta(curve, s.conjugate()) == pytest.approx(
            eval_zeta(curve, s).conjugate(), rel=1e-12
        )


def test_eval_zeta_raises_at_poles():
    curve = make_curve(7, 0, [])
    with pytest.raises(PoleEvaluationError):
        eval_zeta(curve, 0.0)
    with pytest.raises(PoleEvaluationError):
        eval_zeta(curve, 1.0)
    # the pole ladder repeats with vertical spacing C
    with pytest.raises(PoleEvaluationError):
        eval_zeta(curve, 1.0 + 1j * vertical_spacing(7))


def test_functional_equation_random_s():
    curve = make_curve(25, 2, [(0.6, 0.7), (0.4, C25 - 0.7), (0.6, C25 - 0.7), (0.4, 0.7)])
    rng = random.Random(42)
    for _ in range(100):
        s = complex(rng.uniform(-0.5, 2.5), rng.uniform(-8, 8))
        try:
            ok, residual = check_functional_equation(curve, s, 1e-9)
        except PoleEvaluationError:
            continue
        assert ok, f"residual {residual} at s = {s}"


def test_functional_equation_genus1_tight():
    curve = make_curve(25, 1, [(0.6, C25 / 2), (0.4, C25 / 2)])
    ok, residual = check_functional_equation(curve, 2 + 0.3j, 1e-10)
    assert ok
    assert residual <= 1e-12


def test_functional_equation_detects_broken_curve():
    # bypass make_curve validation: perturb one root so the factor multiset
    # is no longer closed under lambda -> q/lambda
    factors = (
        LambdaFactor(0.6, 0.7, 1),
        LambdaFactor(0.4, C25 - 0.7 + 0.05, 1),
        LambdaFactor(0.6, C25 - 0.7, 1),
        LambdaFactor(0.4, 0.7 - 0.05, 1),
        LambdaFactor(0.0, 0.0, -1),
        LambdaFactor(1.0, 0.0, -1),
    )
    broken = CurveZeta(q=25, genus=2, factors=factors)
    ok, residual = check_functional_equation(broken, 1.8 + 0.4j, 1e-9)
    assert not ok
    assert residual > 1e-3


def test_curve_C_property():
    curve = make_curve(25, 0, [])
    assert curve.C == vertical_spacing(25)


def test_zeta_matches_explicit_product():
    curve = make_curve(25, 1, [(0.5, 0.7), (0.5, C25 - 0.7)])
    s = 1.9 - 0.8j
    lnq = math.log(25)
    value = 1.0 + 0.0j
    for f in curve.factors:
        lam = 25**f.sigma0 * cmath.exp(1j * f.tau0 * lnq)
        term = 1 - lam * cmath.exp(-s * lnq)
        value = value * term if f.nu == 1 else value / term
    assert eval_zeta(curve, s) == pytest.approx(value, rel=1e-13)
