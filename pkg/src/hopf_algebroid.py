"""
Хопфовы алгеброиды: левый L-биалгеброид и правый R-биалгеброид на одном
моноиде H, связанные условиями совместимости баз, смешанной коассоциативностью
и антиподом τ.
"""
import logging
from dataclasses import dataclass
from typing import Literal, Optional

from src.bialgebroid import (
    LeftBialgebroidData, RightBialgebroidData, build_left_bialgebroid,
    build_right_bialgebroid, check_counit_sections, verify_left_bialgebroid,
    verify_right_bialgebroid,
)
from src.errors import NotBalanced
from src.fvect import LinMap, identity, symmetry, tensor_map
from src.monoid_alg import (
    BalancedTensor, ModuleData, MonoidData, balanced_tensor, check_module,
    comparison_map, induced_left_action, induced_right_action, iterated_left,
    iterated_right, tensor_over,
)
from src.report import Report, compare, failure, verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HopfAlgebroidData:
    """
    Args:
        left: левый биалгеброид над L
        right: правый биалгеброид над R на том же H
        antipode: τ: H → H
    """
    left: LeftBialgebroidData
    right: RightBialgebroidData
    antipode: LinMap

    @property
    def total(self) -> MonoidData:
        return self.left.total


@dataclass(frozen=True)
class CrossActions:
    """
    Действия второй базы на факторах:
    nu_r_left, nu_r_right - R-действия на H⊗_L H,
    nu_l_left, nu_l_right - L-действия на H⊗_R H.
    """
    nu_r_left: ModuleData
    nu_r_right: ModuleData
    nu_l_left: ModuleData
    nu_l_right: ModuleData


@dataclass(frozen=True)
class PrimedTensor:
    """H⊗'H: фактор H⊗H по hα(l)⊗h' ~ h⊗α(l)h' с индуцированным умножением"""
    bt: BalancedTensor
    mu_prime: LinMap


def build_hopf_algebroid(base_left: MonoidData, base_right: MonoidData, total: MonoidData,
                         alpha_l: LinMap, beta_l: LinMap, delta_l_lift: LinMap, eps_l: LinMap,
                         alpha_r: LinMap, beta_r: LinMap, delta_r_lift: LinMap, eps_r: LinMap,
                         antipode: LinMap) -> HopfAlgebroidData:
    """
    Собирает хопфов алгеброид из структурных отображений. Коумножения
    задаются подъемами H → H⊗H. Аксиомы не проверяются.
    """
    left = build_left_bialgebroid(base_left, total, alpha_l, beta_l, delta_l_lift, eps_l)
    right = build_right_bialgebroid(base_right, total, alpha_r, beta_r, delta_r_lift, eps_r)
    return HopfAlgebroidData(left, right, antipode.with_ends(total.carrier, total.carrier))


def check_base_compat(h: HopfAlgebroidData) -> Report:
    """α_L∘ε_L∘β_R = β_R, β_L∘ε_L∘α_R = α_R, α_R∘ε_R∘β_L = β_L, β_R∘ε_R∘α_L = α_L"""
    al, bl, el = h.left.alpha.map, h.left.beta.map, h.left.eps
    ar, br, er = h.right.alpha.map, h.right.beta.map, h.right.eps
    report = Report()
    report.add(compare("base_compat.alpha_L_eps_L_beta_R", al @ el @ br, br))
    report.add(compare("base_compat.beta_L_eps_L_alpha_R", bl @ el @ ar, ar))
    report.add(compare("base_compat.alpha_R_eps_R_beta_L", ar @ er @ bl, bl))
    report.add(compare("base_compat.beta_R_eps_R_alpha_L", br @ er @ al, al))
    return report


def induced_base_actions(h: HopfAlgebroidData) -> CrossActions:
    """
    R-действия на H⊗_L H: π(x⊗y)·r = π(x⊗yα_R(r)), r·π(x⊗y) = π(xβ_R(r)⊗y);
    L-действия на H⊗_R H: l·π(x⊗y) = π(α_L(l)x⊗y), π(x⊗y)·l = π(x⊗β_L(l)y).

    Raises:
        NotBalanced: действие не пропускается через фактор
    """
    lb, rb = h.left.bimod, h.right.bimod
    actions = CrossActions(
        nu_r_left=induced_left_action(h.left.bt, rb.lact, h.right.base, "left R-action on H⊗_L H"),
        nu_r_right=induced_right_action(h.left.bt, rb.ract, h.right.base, "right R-action on H⊗_L H"),
        nu_l_left=induced_left_action(h.right.bt, lb.lact, h.left.base, "left L-action on H⊗_R H"),
        nu_l_right=induced_right_action(h.right.bt, lb.ract, h.left.base, "right L-action on H⊗_R H"),
    )
    logger.debug("Построены действия второй базы на H⊗_L H и H⊗_R H")
    return actions


_CROSS_NAMES = (
    "delta_L.left_R_linear", "delta_L.right_R_linear",
    "delta_R.left_L_linear", "delta_R.right_L_linear",
)


def check_delta_cross_bimodule(h: HopfAlgebroidData, actions: Optional[CrossActions] = None) -> Report:
    """Δ_L - морфизм R-бимодулей, Δ_R - морфизм L-бимодулей"""
    report = Report()
    try:
        actions = actions or induced_base_actions(h)
    except NotBalanced as e:
        report.add(failure("cross_actions", f"структура бимодуля над второй базой нарушена: {e}"))
        for name in _CROSS_NAMES:
            report.add(failure(name, "действия второй базы не определены"))
        return report
    report.add(verdict("cross_actions", True))
    for prefix, mod in (("nu_R.left.", actions.nu_r_left), ("nu_R.right.", actions.nu_r_right),
                        ("nu_L.left.", actions.nu_l_left), ("nu_L.right.", actions.nu_l_right)):
        report.extend(check_module(mod), prefix)

    K = h.total.field
    lb, rb = h.left.bimod, h.right.bimod
    dl, dr = h.left.delta, h.right.delta
    idl, idr = identity(h.left.base.carrier, K), identity(h.right.base.carrier, K)

    checks = (
        (_CROSS_NAMES[0], dl, rb.lact, actions.nu_r_left, tensor_map(idr, dl)),
        (_CROSS_NAMES[1], dl, rb.ract, actions.nu_r_right, tensor_map(dl, idr)),
        (_CROSS_NAMES[2], dr, lb.lact, actions.nu_l_left, tensor_map(idl, dr)),
        (_CROSS_NAMES[3], dr, lb.ract, actions.nu_l_right, tensor_map(dr, idl)),
    )
    for name, delta, act, induced, moved in checks:
        lhs = delta @ act
        rhs = induced.act @ moved.with_ends(lhs.src, induced.act.src)
        report.add(compare(name, lhs, rhs))
    return report


def check_mixed_coassoc(h: HopfAlgebroidData, actions: Optional[CrossActions] = None) -> Report:
    """
    (Δ_R⊗_L id)∘Δ_L = (id⊗_R Δ_L)∘Δ_R и (Δ_L⊗_R id)∘Δ_R = (id⊗_L Δ_R)∘Δ_L.
    Обе стороны лежат в разных факторах H⊗H⊗H по одним и тем же
    соотношениям; сравнение идет через канонический изоморфизм между ними.
    """
    names = ("mixed_coassoc.left_right", "mixed_coassoc.right_left")
    report = Report()
    try:
        actions = actions or induced_base_actions(h)
    except NotBalanced as e:
        for name in names:
            report.add(failure(name, f"действия второй базы не определены: {e}"))
        return report

    K = h.total.field
    idh = identity(h.total.carrier, K)
    L, R = h.left, h.right
    lb, rb = L.bimod, R.bimod

    try:
        qa = balanced_tensor(actions.nu_l_right, lb.left_module(), "(H⊗_R H)⊗_L H")
        qb = balanced_tensor(rb.right_module(), actions.nu_r_left, "H⊗_R (H⊗_L H)")
        lhs = tensor_over(R.delta, idh, L.bt, qa, "Δ_R⊗_L id") @ L.delta
        rhs = tensor_over(idh, L.delta, R.bt, qb, "id⊗_R Δ_L") @ R.delta
        epi_a, _ = iterated_left(qa, R.bt)
        epi_b, sec_b = iterated_right(qb, L.bt)
        cmp = comparison_map(epi_b, sec_b, epi_a.with_ends(epi_b.src, epi_a.dst), names[0])
        report.add(compare(names[0], lhs, cmp @ rhs))
    except NotBalanced as e:
        report.add(failure(names[0], f"итерированное произведение не определено: {e}"))

    try:
        qc = balanced_tensor(actions.nu_r_right, rb.left_module(), "(H⊗_L H)⊗_R H")
        qd = balanced_tensor(lb.right_module(), actions.nu_l_left, "H⊗_L (H⊗_R H)")
        lhs = tensor_over(L.delta, idh, R.bt, qc, "Δ_L⊗_R id") @ R.delta
        rhs = tensor_over(idh, R.delta, L.bt, qd, "id⊗_L Δ_R") @ L.delta
        epi_c, _ = iterated_left(qc, L.bt)
        epi_d, sec_d = iterated_right(qd, R.bt)
        cmp = comparison_map(epi_d, sec_d, epi_c.with_ends(epi_d.src, epi_c.dst), names[1])
        report.add(compare(names[1], lhs, cmp @ rhs))
    except NotBalanced as e:
        report.add(failure(names[1], f"итерированное произведение не определено: {e}"))
    return report


def primed_tensor(h: HopfAlgebroidData, side: Literal["left", "right"]) -> PrimedTensor:
    """
    H⊗'_L H (side='left', по α_L) или H⊗'_R H (side='right', по α_R)
    с умножением, индуцированным μ_H.

    Raises:
        NotBalanced: μ_H не пропускается через фактор
    """
    d = h.left if side == "left" else h.right
    H = d.total
    K = H.field
    idh = identity(H.carrier, K)
    alpha = d.alpha.map
    ract = H.mu @ tensor_map(idh, alpha)
    lact = H.mu @ tensor_map(alpha, idh)
    sub = d.base.carrier.label or ("L" if side == "left" else "R")
    bt = balanced_tensor(
        ModuleData(d.base, H.carrier, ract, "right"),
        ModuleData(d.base, H.carrier, lact, "left"),
        f"{H.carrier.label}⊗'_{sub}{H.carrier.label}",
    )
    mu_prime = bt.factor(H.mu.with_ends(bt.pi.src, H.carrier), f"μ_H on H⊗'_{sub}H")
    return PrimedTensor(bt, mu_prime)


def check_antipode(h: HopfAlgebroidData) -> Report:
    """
    τ - антигомоморфизм моноидов, τ∘β_L = α_L, τ∘β_R = α_R,
    μ'_L∘(τ⊗id)∘Δ_L = α_R∘ε_R и μ'_R∘(id⊗τ)∘Δ_R = α_L∘ε_L.
    """
    H = h.total
    K = H.field
    tau = h.antipode
    idh = identity(H.carrier, K)
    L, R = h.left, h.right
    report = Report()
    report.add(compare(
        "antipode.antihomomorphism", tau @ H.mu,
        H.mu @ tensor_map(tau, tau) @ symmetry(H.carrier, H.carrier, K),
    ))
    report.add(compare("antipode.unit", tau @ H.eta, H.eta))
    report.add(compare("antipode.beta_L", tau @ L.beta.map, L.alpha.map))
    report.add(compare("antipode.beta_R", tau @ R.beta.map, R.alpha.map))

    sides = (
        ("left", L.bt, tau, idh, L.delta, R.alpha.map @ R.eps),
        ("right", R.bt, idh, tau, R.delta, L.alpha.map @ L.eps),
    )
    for side, bt, f, g, delta, expected in sides:
        try:
            primed = primed_tensor(h, side)
        except NotBalanced as e:
            report.add(failure(f"antipode.{side}_descent", f"умножение не определено на H⊗'H: {e}"))
            report.add(failure(f"antipode.{side}", "умножение не определено на H⊗'H"))
            continue
        try:
            descended = tensor_over(f, g, bt, primed.bt, f"τ on {bt.obj.label}")
        except NotBalanced as e:
            report.add(failure(f"antipode.{side}_descent", f"τ не согласован с источником и целью: {e}"))
            report.add(failure(f"antipode.{side}", "τ⊗id не пропускается через фактор"))
            continue
        report.add(verdict(f"antipode.{side}_descent", True))
        report.add(compare(f"antipode.{side}", primed.mu_prime @ descended @ delta, expected))
    return report


def check_derived(h: HopfAlgebroidData) -> Report:
    """
    Следствия аксиом: свойства ε∘α, ε∘β в обоих биалгеброидах и
    изоморфизмы баз ε_R∘β_L: L → R (обратный ε_L∘α_R) и
    ε_L∘β_R: R → L (обратный ε_R∘α_L).
    """
    K = h.total.field
    L, R = h.left, h.right
    idl, idr = identity(L.base.carrier, K), identity(R.base.carrier, K)
    report = Report()
    report.extend(check_counit_sections(L), "derived.left.")
    report.extend(check_counit_sections(R), "derived.right.")
    f, g = R.eps @ L.beta.map, L.eps @ R.alpha.map
    report.add(compare("derived.iso_eps_R_beta_L.left_inverse", g @ f, idl))
    report.add(compare("derived.iso_eps_R_beta_L.right_inverse", f @ g, idr))
    f, g = L.eps @ R.beta.map, R.eps @ L.alpha.map
    report.add(compare("derived.iso_eps_L_beta_R.left_inverse", g @ f, idr))
    report.add(compare("derived.iso_eps_L_beta_R.right_inverse", f @ g, idl))
    return report


def verify_hopf_algebroid(h: HopfAlgebroidData) -> Report:
    """
    Полная проверка: оба биалгеброида, общий моноид H, совместимость баз,
    Δ как морфизмы бимодулей над второй базой, смешанная коассоциативность,
    антипод и следствия аксиом.
    """
    report = Report()
    report.extend(verify_left_bialgebroid(h.left), "left.")
    report.extend(verify_right_bialgebroid(h.right), "right.")
    report.add(compare("shared_total.mu", h.left.total.mu, h.right.total.mu))
    report.add(compare("shared_total.eta", h.left.total.eta, h.right.total.eta))
    report.extend(check_base_compat(h))
    try:
        actions = induced_base_actions(h)
    except NotBalanced:
        actions = None
    report.extend(check_delta_cross_bimodule(h, actions))
    report.extend(check_mixed_coassoc(h, actions))
    report.extend(check_antipode(h))
    report.extend(check_derived(h))
    logger.info(
        f"Проверка хопфова алгеброида: {len(report.checks)} проверок, "
        f"нарушено {len(report.failed_names())}"
    )
    return report
