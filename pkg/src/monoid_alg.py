"""
Моноиды (ассоциативные алгебры с единицей), их морфизмы, бимодули,
сбалансированные тензорные произведения и комоноиды в категории бимодулей.
"""
import logging
from dataclasses import dataclass, replace
from typing import Literal, Optional, Sequence, Tuple

from src import exactlin
from src.errors import CommutationFailed, NotBalanced
from src.exactlin import Subspace
from src.fvect import (
    Coeq, LinMap, Obj, coequalizer, factor_epi, factor_through, identity,
    left_unitor_inv, permutation, right_unitor_inv, symmetry, tensor_map,
    tensor_obj, unit,
)
from src.report import Report, compare, failure

logger = logging.getLogger(__name__)

Side = Literal["left", "right"]


@dataclass(frozen=True)
class MonoidData:
    """Алгебра (carrier, mu, eta), заданная структурными константами"""
    carrier: Obj
    mu: LinMap
    eta: LinMap

    @property
    def field(self):
        return self.mu.field

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def left_mult(self, x: LinMap) -> LinMap:
        """Оператор a ↦ x·a для элемента x: k → carrier"""
        return self.mu @ tensor_map(x, identity(self.carrier, self.field)) @ left_unitor_inv(self.carrier, self.field)

    def right_mult(self, x: LinMap) -> LinMap:
        """Оператор a ↦ a·x"""
        return self.mu @ tensor_map(identity(self.carrier, self.field), x) @ right_unitor_inv(self.carrier, self.field)

    def element(self, i: int) -> LinMap:
        """Базисный вектор e_i как морфизм k → carrier"""
        K = self.field
        return LinMap(unit(), self.carrier, exactlin.unit_vector(self.dim, i, K))


@dataclass(frozen=True)
class MonoidMor:
    src: MonoidData
    dst: MonoidData
    map: LinMap


def ground_monoid(K) -> MonoidData:
    """Поле k как моноид"""
    k = unit()
    return MonoidData(k, LinMap(tensor_obj(k, k), k, exactlin.identity(1, K)), identity(k, K))


def monoid_from_products(dim: int, products, K, label: str = "A", basis: Sequence[str] = (),
                         unit_vector: Optional[Sequence] = None) -> MonoidData:
    """
    Моноид по таблице произведений.

    Args:
        dim: размерность
        products: products[i][j] - словарь {k: коэффициент} для e_i·e_j
        K: поле
        label: имя носителя
        basis: метки базиса
        unit_vector: координаты единицы (по умолчанию e_0)
    """
    carrier = Obj(dim, label, tuple(basis))
    dod = {}
    for i in range(dim):
        for j in range(dim):
            for k, c in products[i][j].items():
                if c:
                    dod.setdefault(k, {})[i * dim + j] = K.convert(c)
    mu = LinMap(tensor_obj(carrier, carrier), carrier, exactlin.from_dod(dod, dim, dim * dim, K))
    if unit_vector is None:
        unit_vector = [1] + [0] * (dim - 1) if dim else []
    eta = LinMap(unit(), carrier, exactlin.from_columns([unit_vector], dim, K))
    return MonoidData(carrier, mu, eta)


def check_monoid(m: MonoidData) -> Report:
    """Ассоциативность и обе аксиомы единицы"""
    K = m.field
    a = m.carrier
    ida = identity(a, K)
    report = Report()
    report.add(compare("associativity", m.mu @ tensor_map(m.mu, ida), m.mu @ tensor_map(ida, m.mu)))
    report.add(compare("unit_left", m.mu @ tensor_map(m.eta, ida) @ left_unitor_inv(a, K), ida))
    report.add(compare("unit_right", m.mu @ tensor_map(ida, m.eta) @ right_unitor_inv(a, K), ida))
    return report


def check_monoid_mor(f: MonoidMor) -> Report:
    report = Report()
    report.add(compare("multiplicative", f.map @ f.src.mu, f.dst.mu @ tensor_map(f.map, f.map)))
    report.add(compare("unital", f.map @ f.src.eta, f.dst.eta))
    return report


def opposite(m: MonoidData) -> MonoidData:
    """μ_op = μ∘τ, та же единица"""
    K = m.field
    return MonoidData(m.carrier, m.mu @ symmetry(m.carrier, m.carrier, K), m.eta)


def tensor_monoid(r: MonoidData, s: MonoidData) -> MonoidData:
    """R⊗S с покомпонентным умножением (μ_R⊗μ_S)∘(id⊗τ⊗id)"""
    K = r.field
    shuffle = permutation([r.carrier, s.carrier, r.carrier, s.carrier], [0, 2, 1, 3], K)
    carrier = tensor_obj(r.carrier, s.carrier)
    mu = (tensor_map(r.mu, s.mu) @ shuffle).with_ends(tensor_obj(carrier, carrier), carrier)
    eta = (tensor_map(r.eta, s.eta)).with_ends(unit(), carrier)
    return MonoidData(carrier, mu, eta)


def center(m: MonoidData) -> Subspace:
    """Центр алгебры: ядро x ↦ (x·e_i − e_i·x)_i"""
    K = m.field
    blocks = [(m.right_mult(m.element(i)) - m.left_mult(m.element(i))).mat for i in range(m.dim)]
    return exactlin.kernel(exactlin.vstack(blocks, m.dim, K))


# ---------------------------------------------------------------------------
# Модули и бимодули
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModuleData:
    """
    Односторонний модуль над base.

    act: base⊗M → M для side='left' и M⊗base → M для side='right'.
    """
    base: MonoidData
    carrier: Obj
    act: LinMap
    side: Side


@dataclass(frozen=True)
class BimoduleData:
    base_left: MonoidData
    base_right: MonoidData
    carrier: Obj
    lact: LinMap
    ract: LinMap

    def left_module(self) -> ModuleData:
        return ModuleData(self.base_left, self.carrier, self.lact, "left")

    def right_module(self) -> ModuleData:
        return ModuleData(self.base_right, self.carrier, self.ract, "right")


def check_module(mod: ModuleData) -> Report:
    K = mod.base.field
    b, x = mod.base.carrier, mod.carrier
    idb, idx = identity(b, K), identity(x, K)
    report = Report()
    if mod.side == "left":
        report.add(compare("assoc", mod.act @ tensor_map(mod.base.mu, idx), mod.act @ tensor_map(idb, mod.act)))
        report.add(compare("unit", mod.act @ tensor_map(mod.base.eta, idx) @ left_unitor_inv(x, K), idx))
    else:
        report.add(compare("assoc", mod.act @ tensor_map(idx, mod.base.mu), mod.act @ tensor_map(mod.act, idb)))
        report.add(compare("unit", mod.act @ tensor_map(idx, mod.base.eta) @ right_unitor_inv(x, K), idx))
    return report


def check_bimodule(b: BimoduleData) -> Report:
    """Оба действия - действия, и они коммутируют"""
    K = b.lact.field
    report = Report()
    report.extend(check_module(b.left_module()), "left_action.")
    report.extend(check_module(b.right_module()), "right_action.")
    lhs = b.lact @ tensor_map(identity(b.base_left.carrier, K), b.ract)
    rhs = b.ract @ tensor_map(b.lact, identity(b.base_right.carrier, K))
    report.add(compare("actions_commute", lhs, rhs))
    return report


def source_target_bimodule(alpha: MonoidMor, beta: MonoidMor) -> BimoduleData:
    """
    L-бимодуль на H: l·h = α(l)h, h·l = β(l)h. Коммутация не проверяется.
    """
    h = alpha.dst
    K = h.field
    idh = identity(h.carrier, K)
    lact = h.mu @ tensor_map(alpha.map, idh)
    ract = h.mu @ symmetry(h.carrier, h.carrier, K) @ tensor_map(idh, beta.map)
    return BimoduleData(alpha.src, alpha.src, h.carrier, lact, ract)


def right_source_target_bimodule(alpha: MonoidMor, beta: MonoidMor) -> BimoduleData:
    """
    R-бимодуль на H для правого биалгеброида: r·h = hβ(r), h·r = hα(r).
    """
    h = alpha.dst
    K = h.field
    idh = identity(h.carrier, K)
    r = alpha.src.carrier
    lact = h.mu @ tensor_map(idh, beta.map) @ symmetry(r, h.carrier, K)
    ract = h.mu @ tensor_map(idh, alpha.map)
    return BimoduleData(alpha.src, alpha.src, h.carrier, lact, ract)


def check_source_target_commute(alpha: MonoidMor, beta: MonoidMor) -> Report:
    """μ_H∘τ∘(α⊗β) = μ_H∘(α⊗β)"""
    h = alpha.dst
    K = h.field
    ab = tensor_map(alpha.map, beta.map)
    report = Report()
    report.add(compare("source_target_commute", h.mu @ symmetry(h.carrier, h.carrier, K) @ ab, h.mu @ ab))
    return report


def bimodule_from_source_target(alpha: MonoidMor, beta: MonoidMor) -> BimoduleData:
    """
    H как L-бимодуль по α: L → H и β: L^op → H.

    Raises:
        CommutationFailed: образы α и β не коммутируют
    """
    check = check_source_target_commute(alpha, beta).checks[0]
    if not check.passed:
        L = alpha.src.dim
        j = check.witness.index
        raise CommutationFailed(
            f"α и β не коммутируют на паре базисных векторов {divmod(j, L)}", witness=divmod(j, L)
        )
    return source_target_bimodule(alpha, beta)


def alpha_tilde(alpha: MonoidMor) -> LinMap:
    """ᾶ(l) = 1_H⊗α(l): L → H⊗H"""
    K = alpha.dst.field
    l = alpha.src.carrier
    return tensor_map(alpha.dst.eta, alpha.map) @ left_unitor_inv(l, K)


def beta_tilde(beta: MonoidMor) -> LinMap:
    """β̃(l) = β(l)⊗1_H: L → H⊗H"""
    K = beta.dst.field
    l = beta.src.carrier
    return tensor_map(beta.map, beta.dst.eta) @ right_unitor_inv(l, K)


# ---------------------------------------------------------------------------
# Сбалансированное тензорное произведение
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BalancedTensor:
    """M⊗_L N = коуравнитель (ract⊗id_N, id_M⊗lact): M⊗L⊗N → M⊗N"""
    left: ModuleData
    right: ModuleData
    coeq: Coeq

    @property
    def pi(self) -> LinMap:
        return self.coeq.xi

    @property
    def obj(self) -> Obj:
        return self.coeq.q

    @property
    def section(self) -> LinMap:
        return self.coeq.section

    def with_section(self, section: LinMap) -> "BalancedTensor":
        """Та же факторизация с другим сечением π"""
        if not (self.pi @ section) == identity(self.obj, self.pi.field):
            raise ValueError("Переданное отображение не является сечением π")
        return replace(self, coeq=replace(self.coeq, section=section))

    def factor(self, h: LinMap, condition: str = "") -> LinMap:
        return factor_through(self.coeq, h, condition)


def balanced_tensor(mr: ModuleData, nl: ModuleData, label: Optional[str] = None) -> BalancedTensor:
    """
    Args:
        mr: правый L-модуль M
        nl: левый L-модуль N
        label: имя фактор-объекта

    Returns:
        BalancedTensor с проекцией π: M⊗N → M⊗_L N
    """
    if mr.side != "right" or nl.side != "left":
        raise ValueError("Нужны правый модуль слева и левый модуль справа")
    if mr.base.dim != nl.base.dim:
        raise ValueError("Модули над разными базами")
    K = mr.act.field
    m, l, n = mr.carrier, mr.base.carrier, nl.carrier
    f = tensor_map(mr.act, identity(n, K))
    g = tensor_map(identity(m, K), nl.act)
    coeq = coequalizer(f, g.with_ends(f.src, f.dst), label or f"{m.label}⊗_{l.label}{n.label}")
    logger.info(
        f"Сбалансированное тензорное произведение {coeq.q.label}: "
        f"dim {m.dim * n.dim} → {coeq.q.dim} (ранг соотношений {coeq.relations.dim})"
    )
    return BalancedTensor(mr, nl, coeq)


def tensor_over(f: LinMap, g: LinMap, src: BalancedTensor, dst: BalancedTensor, condition: str = "") -> LinMap:
    """
    f⊗_L g: src → dst, единственное отображение с (f⊗_L g)∘π_src = π_dst∘(f⊗g).

    Raises:
        NotBalanced: f⊗g не уважает соотношения src
    """
    h = dst.pi @ tensor_map(f, g).with_ends(src.pi.src, dst.pi.src)
    return src.factor(h, condition)


def induced_left_action(bt: BalancedTensor, act: LinMap, base: MonoidData, condition: str = "") -> ModuleData:
    """
    Левое действие S на M⊗_L N, индуцированное действием S⊗M → M на первом сомножителе.
    """
    K = act.field
    s, n = base.carrier, bt.right.carrier
    h = bt.pi @ tensor_map(act, identity(n, K)).with_ends(tensor_obj(s, bt.pi.src), bt.pi.src)
    epi = tensor_map(identity(s, K), bt.pi)
    sec = tensor_map(identity(s, K), bt.section)
    u = factor_epi(epi, sec, h, condition)
    return ModuleData(base, bt.obj, u.with_ends(tensor_obj(s, bt.obj), bt.obj), "left")


def induced_right_action(bt: BalancedTensor, act: LinMap, base: MonoidData, condition: str = "") -> ModuleData:
    """
    Правое действие S на M⊗_L N, индуцированное действием N⊗S → N на втором сомножителе.
    """
    K = act.field
    s, m = base.carrier, bt.left.carrier
    h = bt.pi @ tensor_map(identity(m, K), act).with_ends(tensor_obj(bt.pi.src, s), bt.pi.src)
    epi = tensor_map(bt.pi, identity(s, K))
    sec = tensor_map(bt.section, identity(s, K))
    u = factor_epi(epi, sec, h, condition)
    return ModuleData(base, bt.obj, u.with_ends(tensor_obj(bt.obj, s), bt.obj), "right")


def comparison_map(src_epi: LinMap, src_section: LinMap, dst_epi: LinMap, condition: str = "") -> LinMap:
    """
    Канонический изоморфизм между двумя фактор-объектами одного пространства:
    единственное c с c∘src_epi = dst_epi.
    """
    return factor_epi(src_epi, src_section, dst_epi, condition)


def iterated_left(outer: BalancedTensor, inner: BalancedTensor) -> Tuple[LinMap, LinMap]:
    """
    Проекция M⊗N⊗P → (M⊗_L N)⊗_S P и ее сечение, где outer.left - фактор inner.
    """
    K = outer.pi.field
    p = outer.right.carrier
    epi = outer.pi @ tensor_map(inner.pi, identity(p, K)).with_ends(
        tensor_obj(inner.pi.src, p), outer.pi.src
    )
    sec = tensor_map(inner.section, identity(p, K)).with_ends(outer.pi.src, epi.src) @ outer.section
    return epi, sec


def iterated_right(outer: BalancedTensor, inner: BalancedTensor) -> Tuple[LinMap, LinMap]:
    """Проекция M⊗N⊗P → M⊗_S (N⊗_L P) и ее сечение, где outer.right - фактор inner"""
    K = outer.pi.field
    m = outer.left.carrier
    epi = outer.pi @ tensor_map(identity(m, K), inner.pi).with_ends(
        tensor_obj(m, inner.pi.src), outer.pi.src
    )
    sec = tensor_map(identity(m, K), inner.section).with_ends(outer.pi.src, epi.src) @ outer.section
    return epi, sec


# ---------------------------------------------------------------------------
# Комоноиды в бимодулях
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComonoidInBimod:
    """
    Комоноид (H, Δ, ε) в L-бимодулях; Δ принимает значения в bt.obj = H⊗_L H.
    """
    bimod: BimoduleData
    bt: BalancedTensor
    delta: LinMap
    eps: LinMap


def quotient_actions(bt: BalancedTensor, bimod: BimoduleData) -> Tuple[ModuleData, ModuleData]:
    """Индуцированные левое и правое действия L на H⊗_L H"""
    left = induced_left_action(bt, bimod.lact, bimod.base_left, "left action on H⊗_L H")
    right = induced_right_action(bt, bimod.ract, bimod.base_right, "right action on H⊗_L H")
    return left, right


def check_comonoid_in_bimod(c: ComonoidInBimod) -> Report:
    """
    Δ и ε - морфизмы бимодулей, Δ коассоциативно над L, ε - коединица.
    Все проверки выполняются, даже если предыдущие не прошли.
    """
    b = c.bimod
    K = c.delta.field
    h, l = b.carrier, b.base_left.carrier
    idh, idl = identity(h, K), identity(l, K)
    report = Report()

    try:
        q_left, q_right = quotient_actions(c.bt, b)
    except NotBalanced as e:
        report.add(failure("delta_bimodule_map", f"действия на H⊗_L H не определены: {e}"))
        report.add(failure("coassociativity", "действия на H⊗_L H не определены"))
        q_left = q_right = None

    if q_left is not None:
        lhs = c.delta @ b.lact
        rhs = q_left.act @ tensor_map(idl, c.delta).with_ends(lhs.src, q_left.act.src)
        report.add(compare("delta_left_linear", lhs, rhs))
        lhs = c.delta @ b.ract
        rhs = q_right.act @ tensor_map(c.delta, idl).with_ends(lhs.src, q_right.act.src)
        report.add(compare("delta_right_linear", lhs, rhs))

    base = b.base_left
    report.add(compare("eps_left_linear", c.eps @ b.lact, base.mu @ tensor_map(idl, c.eps)))
    report.add(compare("eps_right_linear", c.eps @ b.ract, base.mu @ tensor_map(c.eps, idl)))

    if q_left is not None:
        report.add(_coassociativity(c, q_left, q_right))

    # Коединица: (ε⊗_L id)∘Δ = id и (id⊗_L ε)∘Δ = id через L⊗_L H ≅ H ≅ H⊗_L L
    left_contract = b.lact @ tensor_map(c.eps, idh).with_ends(c.bt.pi.src, b.lact.src)
    right_contract = b.ract @ tensor_map(idh, c.eps).with_ends(c.bt.pi.src, b.ract.src)
    for name, contract in (("counit_left", left_contract), ("counit_right", right_contract)):
        try:
            u = c.bt.factor(contract, name)
            report.add(compare(name, u @ c.delta, idh))
        except NotBalanced:
            report.add(failure(name, "свертка с ε не пропускается через H⊗_L H"))
    return report


def _coassociativity(c: ComonoidInBimod, q_left: ModuleData, q_right: ModuleData):
    b = c.bimod
    K = c.delta.field
    h = b.carrier
    idh = identity(h, K)
    name = "coassociativity"
    try:
        # (H⊗_L H)⊗_L H и H⊗_L (H⊗_L H)
        outer_a = balanced_tensor(q_right, b.left_module(), "(H⊗_L H)⊗_L H")
        outer_b = balanced_tensor(b.right_module(), q_left, "H⊗_L (H⊗_L H)")
        delta_id = tensor_over(c.delta, idh, c.bt, outer_a, "Δ⊗_L id")
        id_delta = tensor_over(idh, c.delta, c.bt, outer_b, "id⊗_L Δ")
        epi_a, _ = iterated_left(outer_a, c.bt)
        epi_b, sec_b = iterated_right(outer_b, c.bt)
        cmp = comparison_map(epi_b, sec_b, epi_a.with_ends(epi_b.src, epi_a.dst), "H⊗_L H⊗_L H")
    except NotBalanced as e:
        return failure(name, f"итерированное произведение не определено: {e}")
    return compare(name, delta_id @ c.delta, cmp @ id_delta @ c.delta)


