"""
Тесты хопфовых алгеброидов: вырождение в алгебры Хопфа, удвоение Гейзенберга
и каталог точечных искажений структурного файла
"""
import copy
from dataclasses import replace
from pathlib import Path

import pytest
from sympy import Rational

from src import exactlin
from src.bialgebroid import check_takeuchi
from src.constructions import (
    cyclic_group_algebra, heisenberg_double, hopf_algebra_as_hopf_algebroid,
    scalar_extension_hopf_algebroid, sweedler_h4, symmetric_group_algebra, trivial_yd_datum,
)
from src.hopf_algebroid import (
    check_antipode, check_base_compat, check_delta_cross_bimodule, check_derived,
    check_mixed_coassoc, induced_base_actions, primed_tensor, verify_hopf_algebroid,
)
from src.fvect import LinMap, identity
from src.monoid_alg import MonoidMor, check_module
from src.structure_file import load_structure, to_hopf_algebroid

DATA_DIR = Path(__file__).parent.parent / "data"

HOPF_ALGEBRAS = {
    "Z1": lambda: cyclic_group_algebra(1),
    "Z2": lambda: cyclic_group_algebra(2),
    "Z3": lambda: cyclic_group_algebra(3),
    "Z4": lambda: cyclic_group_algebra(4),
    "S3": lambda: symmetric_group_algebra(3),
    "H4": sweedler_h4,
}

# массив, строка (столбец 0 увеличивается на 1), проверка, которая обязана упасть
MUTATIONS = [
    ("mu", 1, "left.H.unit_left"),
    ("eta", 2, "left.H.unit_left"),
    ("alpha_L", 2, "left.alpha.unital"),
    ("beta_L", 2, "left.beta.unital"),
    ("delta_L", 2, "left.comonoid.counit_left"),
    ("eps_L", 1, "left.counit.unit"),
    ("mu_L", 1, "left.L.unit_left"),
    ("eta_L", 1, "left.L.unit_left"),
    ("alpha_R", 2, "right.alpha.unital"),
    ("beta_R", 2, "right.beta.unital"),
    ("delta_R", 2, "right.comonoid.counit_left"),
    ("eps_R", 1, "right.counit.unit"),
    ("mu_R", 1, "right.R.unit_left"),
    ("eta_R", 1, "right.R.unit_left"),
    ("antipode", 1, "antipode.unit"),
]


def mutate(sf, array, row):
    """Копия файла, в которой к элементу (row, 0) массива прибавлена единица"""
    arrays = copy.deepcopy(sf.arrays)
    arrays[array][row][0] = str(Rational(str(arrays[array][row][0])) + 1)
    return sf.model_copy(update={"arrays": arrays})


@pytest.fixture(scope="module")
def heisenberg_file():
    return load_structure(DATA_DIR / "heisenberg_z2.json")


@pytest.mark.parametrize("name", sorted(HOPF_ALGEBRAS))
def test_hopf_algebra_is_hopf_algebroid(name):
    report = verify_hopf_algebroid(hopf_algebra_as_hopf_algebroid(HOPF_ALGEBRAS[name]()))
    assert report.passed, report.failed_names()


def test_heisenberg_double_passes(heisenberg_z2):
    report = verify_hopf_algebroid(heisenberg_z2)
    assert report.passed, report.failed_names()
    assert any(n.startswith("left.") for n in report.names)
    assert any(n.startswith("right.") for n in report.names)
    assert "antipode.left" in report.names
    assert "antipode.right" in report.names


@pytest.mark.parametrize("check", [
    check_base_compat, check_delta_cross_bimodule, check_mixed_coassoc, check_antipode, check_derived,
])
def test_heisenberg_double_partial_checks(heisenberg_z2, check):
    report = check(heisenberg_z2)
    assert report.checks
    assert report.passed, report.failed_names()


@pytest.mark.parametrize("side", ["left", "right"])
def test_primed_tensor(heisenberg_z2, side):
    primed = primed_tensor(heisenberg_z2, side)
    assert primed.bt.obj.dim == 8
    assert primed.mu_prime.src == primed.bt.obj
    assert primed.mu_prime.dst == heisenberg_z2.total.carrier


def test_heisenberg_double_is_deterministic(heisenberg_z2):
    first = verify_hopf_algebroid(heisenberg_z2)
    second = verify_hopf_algebroid(heisenberg_z2)
    assert first.model_dump() == second.model_dump()


def test_file_matches_constructed_double(heisenberg_file):
    report = verify_hopf_algebroid(to_hopf_algebroid(heisenberg_file))
    assert report.passed, report.failed_names()


def test_broken_base_compatibility(heisenberg_file):
    h = to_hopf_algebroid(mutate(heisenberg_file, "alpha_R", 2))
    report = check_base_compat(h)
    assert "base_compat.beta_L_eps_L_alpha_R" in report.failed_names()


@pytest.mark.parametrize("array, row, expected", MUTATIONS)
def test_mutation_is_detected(heisenberg_file, array, row, expected):
    h = to_hopf_algebroid(mutate(heisenberg_file, array, row))
    report = verify_hopf_algebroid(h)
    assert not report.passed
    assert expected in report.failed_names()
    # повторная проверка дает тот же список нарушений
    assert verify_hopf_algebroid(h).failed_names() == report.failed_names()


def test_mutated_delta_leaves_takeuchi(heisenberg_file):
    h = to_hopf_algebroid(mutate(heisenberg_file, "delta_L", 2))
    report = verify_hopf_algebroid(h)
    assert not report.get("left.takeuchi.containment").passed


def test_dual_orientation_z2():
    report = verify_hopf_algebroid(heisenberg_double(cyclic_group_algebra(2), "dual", verify=False))
    assert report.passed, report.failed_names()


@pytest.mark.slow
def test_heisenberg_double_h4():
    report = verify_hopf_algebroid(heisenberg_double(sweedler_h4(), verify=False))
    assert report.passed, report.failed_names()


def test_induced_base_actions_are_modules(heisenberg_z2):
    actions = induced_base_actions(heisenberg_z2)
    for mod in (actions.nu_r_left, actions.nu_r_right, actions.nu_l_left, actions.nu_l_right):
        assert mod.carrier.dim == 8
        assert check_module(mod).passed


def test_scalar_extension_of_trivial_datum():
    y = trivial_yd_datum(cyclic_group_algebra(3).monoid)
    h = scalar_extension_hopf_algebroid(y)
    assert h.total.dim == 3
    assert h.left.bt.obj.dim == 3
    assert verify_hopf_algebroid(h).passed


def test_identity_antipode_on_noncommutative_algebra():
    h = hopf_algebra_as_hopf_algebroid(symmetric_group_algebra(3))
    broken = replace(h, antipode=identity(h.total.carrier, h.total.field))
    report = check_antipode(broken)
    assert "antipode.antihomomorphism" in report.failed_names()
    assert "antipode.left" in report.failed_names()
    assert report.get("antipode.unit").passed
    assert report.get("antipode.beta_L").passed


def test_target_twisted_by_automorphism_breaks_takeuchi(heisenberg_file):
    """β = α∘σ, σ(g) = -g, над прежним H⊗_L H: композиции Такеучи отличаются знаком"""
    d = to_hopf_algebroid(heisenberg_file).left
    src = d.beta.map.src
    sigma = LinMap(src, src, exactlin.from_rows([[1, 0], [0, -1]], d.total.field))
    twisted = replace(d, beta=MonoidMor(d.beta.src, d.total, d.alpha.map @ sigma))
    report = check_takeuchi(twisted)
    assert report.failed_names() == ["takeuchi", "takeuchi.containment"]
    assert report.get("takeuchi").witness is not None
    assert check_takeuchi(d).passed
