"""
Тесты биалгеброидов: индуцированные действия, Такеучи, мультипликативность Δ
"""
import random

import pytest
from src import exactlin
from src.bialgebroid import (
    build_left_bialgebroid, build_right_bialgebroid, check_counit_sections, check_delta_mult,
    check_counit_left, check_section_independence, check_takeuchi,
    induced_lambda, induced_rho, takeuchi_summary, verify_left_bialgebroid,
    verify_right_bialgebroid,
)
from src.constructions import (
    cyclic_group_algebra, hopf_algebra_as_left_bialgebroid, sweedler_h4, symmetric_group_algebra,
)
from src.fvect import LinMap, random_section
from src.monoid_alg import ground_monoid

HOPF_ALGEBRAS = {
    "Z1": lambda: cyclic_group_algebra(1),
    "Z2": lambda: cyclic_group_algebra(2),
    "Z3": lambda: cyclic_group_algebra(3),
    "Z4": lambda: cyclic_group_algebra(4),
    "S3": lambda: symmetric_group_algebra(3),
    "H4": sweedler_h4,
}


def as_right_bialgebroid(a, delta=None):
    k = ground_monoid(a.field)
    return build_right_bialgebroid(k, a.monoid, a.monoid.eta, a.monoid.eta, delta or a.delta, a.eps)


@pytest.mark.parametrize("name", sorted(HOPF_ALGEBRAS))
def test_hopf_algebra_is_left_bialgebroid(name):
    report = verify_left_bialgebroid(hopf_algebra_as_left_bialgebroid(HOPF_ALGEBRAS[name]()))
    assert report.passed, report.failed_names()


@pytest.mark.parametrize("name", ["Z2", "H4"])
def test_hopf_algebra_is_right_bialgebroid(name):
    report = verify_right_bialgebroid(as_right_bialgebroid(HOPF_ALGEBRAS[name]()))
    assert report.passed, report.failed_names()


def test_takeuchi_over_ground_field_is_everything(h4):
    summary = takeuchi_summary(hopf_algebra_as_left_bialgebroid(h4))
    assert summary.balanced_dim == 16
    assert summary.takeuchi_dim == 16
    assert summary.image_dim == 4
    assert summary.contained


def test_heisenberg_double_left_side(heisenberg_z2):
    report = verify_left_bialgebroid(heisenberg_z2.left)
    assert report.passed, report.failed_names()
    for name in ("takeuchi", "takeuchi.containment", "rho.assoc", "lambda.assoc",
                 "lambda.equivalence", "corollary.lambda_rho_commute", "comonoid.coassociativity"):
        assert name in report.names


def test_heisenberg_double_right_side(heisenberg_z2):
    report = verify_right_bialgebroid(heisenberg_z2.right)
    assert report.passed, report.failed_names()
    assert "rho.equivalence" in report.names


@pytest.mark.parametrize("side", ["left", "right"])
def test_heisenberg_takeuchi_summary(heisenberg_z2, side):
    summary = takeuchi_summary(getattr(heisenberg_z2, side))
    assert summary.side == side
    assert summary.balanced_dim == 8
    assert summary.image_dim == 4
    assert summary.image_dim <= summary.takeuchi_dim <= summary.balanced_dim
    assert summary.contained


def test_counit_sections(heisenberg_z2):
    assert check_counit_sections(heisenberg_z2.left).passed
    assert check_counit_sections(heisenberg_z2.right).passed


def test_induced_action_shapes(heisenberg_z2):
    rho = induced_rho(heisenberg_z2.left)
    lam = induced_lambda(heisenberg_z2.left)
    assert rho.mat.shape == (8, 8 * 16)
    assert lam.mat.shape == (8, 4 * 8)


@pytest.mark.parametrize("seed", range(3))
@pytest.mark.parametrize("side", ["left", "right"])
def test_actions_do_not_depend_on_section(heisenberg_z2, side, seed):
    d = getattr(heisenberg_z2, side)
    other = d.with_section(random_section(d.bt.coeq, random.Random(seed)))
    assert induced_rho(other) == induced_rho(d)
    assert induced_lambda(other) == induced_lambda(d)


def _mutated_delta(a, rng):
    """Δ плюс ±1 в случайной позиции"""
    n = a.dim
    row, col = rng.randrange(n * n), rng.randrange(n)
    bump = exactlin.from_dod({row: {col: a.field(rng.choice([-1, 1]))}}, n * n, n, a.field)
    return LinMap(a.delta.src, a.delta.dst, exactlin.add(a.delta.mat, bump))


@pytest.mark.parametrize("seed", range(24))
def test_lambda_action_iff_delta_multiplicative(seed):
    rng = random.Random(seed)
    name = sorted(HOPF_ALGEBRAS)[seed % len(HOPF_ALGEBRAS)]
    a = HOPF_ALGEBRAS[name]()
    delta = a.delta if seed % 4 == 0 else _mutated_delta(a, rng)
    k = ground_monoid(a.field)
    d = build_left_bialgebroid(k, a.monoid, a.monoid.eta, a.monoid.eta, delta, a.eps)
    report = check_delta_mult(d)
    assert report.get("lambda.equivalence").passed
    if seed % 4 == 0:
        assert report.passed


@pytest.mark.parametrize("seed", range(4))
def test_rho_action_iff_delta_multiplicative(seed):
    a = HOPF_ALGEBRAS[["Z2", "Z3", "H4", "S3"][seed]]()
    report = check_delta_mult(as_right_bialgebroid(a, _mutated_delta(a, random.Random(seed))))
    assert report.get("rho.equivalence").passed


def test_scaled_delta_on_heisenberg_double(heisenberg_z2):
    d = heisenberg_z2.left
    lift = (d.bt.section @ d.delta).scale(2)
    scaled = build_left_bialgebroid(d.base, d.total, d.alpha.map, d.beta.map, lift, d.eps)
    report = check_delta_mult(scaled)
    assert not report.get("delta.unit").passed
    assert not report.get("lambda.unit").passed
    assert report.get("lambda.equivalence").passed


@pytest.mark.parametrize("side", ["left", "right"])
def test_check_section_independence(heisenberg_z2, side):
    report = check_section_independence(getattr(heisenberg_z2, side), trials=2, seed=11)
    assert report.names == ["sections.0.rho", "sections.0.lambda", "sections.1.rho", "sections.1.lambda"]
    assert report.passed


def test_check_takeuchi_on_heisenberg_double(heisenberg_z2):
    report = check_takeuchi(heisenberg_z2.left)
    assert report.passed
    assert "takeuchi.containment" in report.names


def test_counit_of_group_algebra_must_be_multiplicative(kz2):
    k = ground_monoid(kz2.field)
    eps = LinMap(kz2.eps.src, kz2.eps.dst, exactlin.from_rows([[1, 0]], kz2.field))
    d = build_left_bialgebroid(k, kz2.monoid, kz2.monoid.eta, kz2.monoid.eta, kz2.delta, eps)
    report = check_counit_left(d)
    assert report.get("counit.unit").passed
    assert "counit.alpha" in report.failed_names()
    assert check_counit_left(hopf_algebra_as_left_bialgebroid(kz2)).passed


def test_primitive_delta_breaks_only_multiplicativity(kz2):
    """Δ(g) = 1⊗g + g⊗1 - 1⊗1 коассоциативно и коунитально, но не мультипликативно"""
    k = ground_monoid(kz2.field)
    delta = LinMap(kz2.delta.src, kz2.delta.dst, exactlin.from_rows([[1, -1], [0, 1], [0, 1], [0, 0]], kz2.field))
    d = build_left_bialgebroid(k, kz2.monoid, kz2.monoid.eta, kz2.monoid.eta, delta, kz2.eps)
    report = check_delta_mult(d)
    assert report.failed_names() == ["delta.mult", "lambda.assoc"]
    assert report.get("delta.mult").witness.index == 3
    assert set(verify_left_bialgebroid(d).failed_names()) == {"delta.mult", "lambda.assoc"}
