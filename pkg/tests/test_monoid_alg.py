"""
Тесты моноидов, модулей и сбалансированного тензорного произведения
"""
import pytest
from hypothesis import given, settings, strategies as st
from sympy import QQ

from src import exactlin
from src.bialgebroid import build_left_bialgebroid
from src.constructions import (
    cyclic_group_algebra, heisenberg_datum, hopf_algebra_as_left_bialgebroid, smash_product, sweedler_h4,
    symmetric_group_algebra,
)
from src.errors import CommutationFailed
from src.fvect import LinMap, tensor_map
from src.monoid_alg import (
    MonoidMor, alpha_tilde, balanced_tensor, beta_tilde, bimodule_from_source_target, center,
    check_bimodule, check_comonoid_in_bimod, check_monoid, check_monoid_mor, ground_monoid,
    monoid_from_products, opposite, source_target_bimodule, tensor_monoid,
)

SMALL_MONOIDS = [
    ground_monoid(QQ),
    cyclic_group_algebra(2).monoid,
    cyclic_group_algebra(3).monoid,
    sweedler_h4().monoid,
]


def _z3_with_broken_square():
    """k[Z3], в котором g·g заменено нулем"""
    products = [[{(i + j) % 3: 1} for j in range(3)] for i in range(3)]
    products[1][1] = {}
    return monoid_from_products(3, products, QQ, "A", ("1", "g", "g^2"))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cyclic_group_algebra_is_monoid(n):
    assert check_monoid(cyclic_group_algebra(n).monoid).passed


def test_broken_square_fails_only_associativity():
    report = check_monoid(_z3_with_broken_square())
    assert report.failed_names() == ["associativity"]
    witness = report.get("associativity").witness
    assert witness is not None


def test_dim_zero_monoid_is_vacuous():
    m = monoid_from_products(0, [], QQ)
    assert check_monoid(m).passed


def test_opposite():
    s3 = symmetric_group_algebra(3).monoid
    op = opposite(s3)
    assert check_monoid(op).passed
    assert not op.mu == s3.mu
    assert opposite(op).mu == s3.mu


@given(st.sampled_from(SMALL_MONOIDS), st.sampled_from(SMALL_MONOIDS))
@settings(max_examples=16, deadline=None)
def test_tensor_monoid_closure(r, s):
    assert check_monoid(tensor_monoid(r, s)).passed


@pytest.mark.parametrize("algebra, expected", [
    (symmetric_group_algebra(3).monoid, 3),
    (cyclic_group_algebra(3).monoid, 3),
    (sweedler_h4().monoid, 1),
    (smash_product(heisenberg_datum(cyclic_group_algebra(2))), 1),
])
def test_center_dimension(algebra, expected):
    assert center(algebra).dim == expected


def _group_element_map(src, dst, images):
    dod = {images[i]: {i: QQ.one} for i in range(len(images))}
    return LinMap(src.carrier, dst.carrier, exactlin.from_dod(dod, dst.dim, src.dim, QQ))


def test_noncommuting_source_and_target():
    z2, s3 = cyclic_group_algebra(2).monoid, symmetric_group_algebra(3).monoid
    # p021 и p102 - некоммутирующие транспозиции
    alpha = MonoidMor(z2, s3, _group_element_map(z2, s3, [0, 1]))
    beta = MonoidMor(opposite(z2), s3, _group_element_map(z2, s3, [0, 2]))
    assert check_monoid_mor(alpha).passed
    with pytest.raises(CommutationFailed) as exc:
        bimodule_from_source_target(alpha, beta)
    assert exc.value.witness is not None


def test_balanced_tensor_over_itself():
    z2 = cyclic_group_algebra(2).monoid
    ident = LinMap(z2.carrier, z2.carrier, exactlin.identity(2, QQ))
    alpha, beta = MonoidMor(z2, z2, ident), MonoidMor(opposite(z2), z2, ident)
    bimod = bimodule_from_source_target(alpha, beta)
    assert check_bimodule(bimod).passed
    bt = balanced_tensor(bimod.right_module(), bimod.left_module())
    assert bt.obj.dim == 2
    assert bt.pi @ bt.section == LinMap(bt.obj, bt.obj, exactlin.identity(2, QQ))


def test_balanced_tensor_over_ground_field():
    h4 = sweedler_h4().monoid
    k = ground_monoid(QQ)
    bimod = source_target_bimodule(MonoidMor(k, h4, h4.eta), MonoidMor(opposite(k), h4, h4.eta))
    bt = balanced_tensor(bimod.right_module(), bimod.left_module())
    assert bt.obj.dim == 16


def test_source_and_target_lifts():
    z2 = cyclic_group_algebra(2).monoid
    ident = LinMap(z2.carrier, z2.carrier, exactlin.identity(2, QQ))
    a_t = alpha_tilde(MonoidMor(z2, z2, ident))
    b_t = beta_tilde(MonoidMor(opposite(z2), z2, ident))
    # 1⊗1 - индекс 0, 1⊗g - 1, g⊗1 - 2
    assert exactlin.column(a_t.mat, 0) == [1, 0, 0, 0]
    assert exactlin.column(b_t.mat, 0) == [1, 0, 0, 0]
    assert exactlin.column(a_t.mat, 1) == [0, 1, 0, 0]
    assert exactlin.column(b_t.mat, 1) == [0, 0, 1, 0]


def test_source_and_target_lifts_over_ground_field():
    h4 = sweedler_h4().monoid
    k = ground_monoid(QQ)
    unit_lift = tensor_map(h4.eta, h4.eta)
    assert exactlin.equal(alpha_tilde(MonoidMor(k, h4, h4.eta)).mat, unit_lift.mat)
    assert exactlin.equal(beta_tilde(MonoidMor(opposite(k), h4, h4.eta)).mat, unit_lift.mat)


def test_comonoid_in_bimodules_of_sweedler():
    d = hopf_algebra_as_left_bialgebroid(sweedler_h4())
    assert check_comonoid_in_bimod(d.comonoid).passed


def test_comonoid_with_broken_counit():
    a = sweedler_h4()
    eps = LinMap(a.eps.src, a.eps.dst, exactlin.from_rows([[1, 0, 0, 0]], QQ))
    k = ground_monoid(QQ)
    d = build_left_bialgebroid(k, a.monoid, a.monoid.eta, a.monoid.eta, a.delta, eps)
    report = check_comonoid_in_bimod(d.comonoid)
    failed = report.failed_names()
    assert any(name.startswith("counit") for name in failed)
    assert all(report.get(name).witness is not None for name in failed if name.startswith("counit"))
