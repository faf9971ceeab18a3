"""
Конкретные примеры: групповые алгебры, алгебра Свидлера H4, двойственные
алгебры Хопфа, модульные алгебры Йеттера-Дринфельда, смэш-произведения,
скалярные расширения и удвоения Гейзенберга.

Все построители возвращают данные; собранный хопфов алгеброид принимается,
только если проходит verify_hopf_algebroid.
"""
import itertools
import logging
from dataclasses import dataclass, replace
from typing import List, Literal, Optional, Sequence

from sympy import QQ

from src import exactlin
from src.bialgebroid import LeftBialgebroidData, build_left_bialgebroid
from src.errors import AxiomFailure, BadCharacteristic, NoSolution, NotAGroup
from src.fvect import (
    LinMap, Obj, identity, left_unitor, left_unitor_inv, permutation,
    right_unitor, right_unitor_inv, symmetry, tensor_map, tensor_maps,
    tensor_obj, unit,
)
from src.hopf_algebroid import HopfAlgebroidData, build_hopf_algebroid, verify_hopf_algebroid
from src.monoid_alg import (
    MonoidData, check_monoid, ground_monoid, monoid_from_products, opposite, tensor_monoid,
)
from src.report import Report, compare

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HopfAlgebraData:
    monoid: MonoidData
    delta: LinMap
    eps: LinMap
    antipode: LinMap

    @property
    def field(self):
        return self.monoid.field

    @property
    def dim(self) -> int:
        return self.monoid.dim

    @property
    def carrier(self) -> Obj:
        return self.monoid.carrier


@dataclass(frozen=True)
class YDModuleAlgebra:
    """
    Args:
        hopf: алгебра Хопфа H
        algebra: алгебра A
        action: H⊗A → A
        coaction: A → H⊗A, a ↦ a₍₋₁₎⊗a₍₀₎
    """
    hopf: HopfAlgebraData
    algebra: MonoidData
    action: LinMap
    coaction: LinMap


def check_hopf_algebra(a: HopfAlgebraData) -> Report:
    """Аксиомы биалгебры и антипода"""
    K = a.field
    m = a.monoid
    x = m.carrier
    idx = identity(x, K)
    k = unit()
    report = Report()
    report.extend(check_monoid(m), "algebra.")
    report.add(compare("coassociativity", tensor_map(a.delta, idx) @ a.delta, tensor_map(idx, a.delta) @ a.delta))
    report.add(compare("counit_left", left_unitor(x, K) @ tensor_map(a.eps, idx) @ a.delta, idx))
    report.add(compare("counit_right", right_unitor(x, K) @ tensor_map(idx, a.eps) @ a.delta, idx))
    xx = tensor_monoid(m, m)
    report.add(compare(
        "delta_multiplicative",
        a.delta @ m.mu,
        xx.mu @ tensor_map(a.delta, a.delta).with_ends(m.mu.src, xx.mu.src),
    ))
    report.add(compare("delta_unital", a.delta @ m.eta, xx.eta.with_ends(k, a.delta.dst)))
    report.add(compare(
        "eps_multiplicative",
        a.eps @ m.mu,
        LinMap(tensor_obj(k, k), k, exactlin.identity(1, K)) @ tensor_map(a.eps, a.eps),
    ))
    report.add(compare("eps_unital", a.eps @ m.eta, identity(k, K)))
    unit_counit = m.eta @ a.eps
    report.add(compare("antipode_left", m.mu @ tensor_map(a.antipode, idx) @ a.delta, unit_counit))
    report.add(compare("antipode_right", m.mu @ tensor_map(idx, a.antipode) @ a.delta, unit_counit))
    return report


def _delta_from_terms(carrier: Obj, terms, K) -> LinMap:
    """terms[i] - список (коэффициент, j, k) для Δ(e_i) = Σ c e_j⊗e_k"""
    n = carrier.dim
    dod = {}
    for i, row in enumerate(terms):
        for c, j, k in row:
            dod.setdefault(j * n + k, {})[i] = K.convert(c)
    return LinMap(carrier, tensor_obj(carrier, carrier), exactlin.from_dod(dod, n * n, n, K))


def ground_hopf(K=QQ) -> HopfAlgebraData:
    """Поле k как алгебра Хопфа"""
    m = ground_monoid(K)
    k = m.carrier
    return HopfAlgebraData(m, LinMap(k, tensor_obj(k, k), exactlin.identity(1, K)), identity(k, K), identity(k, K))


# ---------------------------------------------------------------------------
# Группы
# ---------------------------------------------------------------------------

def cyclic_group_table(n: int) -> List[List[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_group_table(n: int) -> List[List[int]]:
    """Таблица S_n; элементы - перестановки в лексикографическом порядке, (pq)(i) = p(q(i))"""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]


def _symmetric_labels(n: int) -> List[str]:
    return ["p" + "".join(str(i) for i in p) for p in itertools.permutations(range(n))]


def _check_group(table: Sequence[Sequence[int]]) -> int:
    """Проверяет аксиомы группы; возвращает номер единицы"""
    n = len(table)
    if n == 0:
        raise NotAGroup("Пустая таблица не задает группу")
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotAGroup(f"Строка {i} таблицы имеет длину {len(row)}, ожидается {n}", witness=(i,))
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise NotAGroup(f"Произведение {i}·{j} = {v!r} вне множества элементов", witness=(i, j))
    units = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not units:
        raise NotAGroup("В таблице нет единицы")
    e = units[0]
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAGroup(f"Нарушена ассоциативность на тройке ({a}, {b}, {c})", witness=(a, b, c))
    for a in range(n):
        if not any(table[a][b] == e and table[b][a] == e for b in range(n)):
            raise NotAGroup(f"У элемента {a} нет обратного", witness=(a,))
    return e


def group_algebra(table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None,
                  K=QQ, label: str = "kG") -> HopfAlgebraData:
    """
    Групповая алгебра: Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.

    Raises:
        NotAGroup: таблица не задает группу (свидетель - нарушающая тройка или элемент)
    """
    e = _check_group(table)
    n = len(table)
    labels = tuple(labels) if labels else tuple(f"g{i}" for i in range(n))
    products = [[{table[i][j]: 1} for j in range(n)] for i in range(n)]
    unit_vec = [1 if i == e else 0 for i in range(n)]
    m = monoid_from_products(n, products, K, label, labels, unit_vec)
    delta = _delta_from_terms(m.carrier, [[(1, i, i)] for i in range(n)], K)
    eps = LinMap(m.carrier, unit(), exactlin.from_rows([[1] * n], K))
    inverse = {a: b for a in range(n) for b in range(n) if table[a][b] == e}
    antipode = LinMap(m.carrier, m.carrier, exactlin.from_dod({inverse[a]: {a: K.one} for a in range(n)}, n, n, K))
    logger.info(f"Групповая алгебра {label}: dim {n}")
    return HopfAlgebraData(m, delta, eps, antipode)


def cyclic_group_algebra(n: int, K=QQ) -> HopfAlgebraData:
    labels = ["1"] + (["g"] if n > 1 else []) + [f"g^{i}" for i in range(2, n)]
    return group_algebra(cyclic_group_table(n), labels, K, f"kZ{n}")


def symmetric_group_algebra(n: int, K=QQ) -> HopfAlgebraData:
    return group_algebra(symmetric_group_table(n), _symmetric_labels(n), K, f"kS{n}")


# ---------------------------------------------------------------------------
# Алгебра Свидлера
# ---------------------------------------------------------------------------

# e_i·e_j в базисе 1, g, x, gx
_H4_PRODUCTS = [
    [{0: 1}, {1: 1}, {2: 1}, {3: 1}],
    [{1: 1}, {0: 1}, {3: 1}, {2: 1}],
    [{2: 1}, {3: -1}, {}, {}],
    [{3: 1}, {2: -1}, {}, {}],
]


def sweedler_h4(K=QQ) -> HopfAlgebraData:
    """
    g² = 1, x² = 0, xg = −gx; Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, S(x) = −gx.

    Raises:
        BadCharacteristic: в характеристике 2 алгебра вырождается
    """
    if exactlin.characteristic(K) == 2:
        raise BadCharacteristic("Алгебра Свидлера H4 не определена в характеристике 2")
    m = monoid_from_products(4, _H4_PRODUCTS, K, "H4", ("1", "g", "x", "gx"))
    delta = _delta_from_terms(m.carrier, [
        [(1, 0, 0)],
        [(1, 1, 1)],
        [(1, 2, 0), (1, 1, 2)],
        [(1, 3, 1), (1, 0, 3)],
    ], K)
    eps = LinMap(m.carrier, unit(), exactlin.from_rows([[1, 1, 0, 0]], K))
    antipode = LinMap(m.carrier, m.carrier, exactlin.from_rows([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, -1, 0],
    ], K))
    return HopfAlgebraData(m, delta, eps, antipode)


def _dual_label(s: str) -> str:
    return s[:-1] if s.endswith("*") else f"{s}*"


def dual_hopf(a: HopfAlgebraData) -> HopfAlgebraData:
    """
    A*: умножение Δᵀ, единица εᵀ, коумножение μᵀ, коединица ηᵀ, антипод Sᵀ.
    Двойное применение возвращает исходные структурные константы.
    """
    K = a.field
    x = a.carrier
    carrier = Obj(x.dim, _dual_label(x.label or "A"), tuple(_dual_label(x.basis_label(i)) for i in range(x.dim)))
    xx = tensor_obj(carrier, carrier)
    T = exactlin.transpose
    m = MonoidData(carrier, LinMap(xx, carrier, T(a.delta.mat)), LinMap(unit(), carrier, T(a.eps.mat)))
    return HopfAlgebraData(
        m,
        LinMap(carrier, xx, T(a.monoid.mu.mat)),
        LinMap(carrier, unit(), T(a.monoid.eta.mat)),
        LinMap(carrier, carrier, T(a.antipode.mat)),
    )


# ---------------------------------------------------------------------------
# Модульные алгебры Йеттера-Дринфельда
# ---------------------------------------------------------------------------

def check_yetter_drinfeld(y: YDModuleAlgebra) -> Report:
    """
    Модульная алгебра, комодульная алгебра, условие Йеттера-Дринфельда
    h₁a₋₁⊗h₂▷a₀ = (h₁▷a)₋₁h₂⊗(h₁▷a)₀ и косая коммутативность ab = (a₋₁▷b)a₀.
    """
    hp, A = y.hopf, y.algebra
    K = A.field
    h, a = hp.carrier, A.carrier
    idh, ida = identity(h, K), identity(a, K)
    act, coact = y.action, y.coaction
    report = Report()

    report.add(compare("action.assoc", act @ tensor_map(hp.monoid.mu, ida), act @ tensor_map(idh, act)))
    report.add(compare("action.unit", act @ tensor_map(hp.monoid.eta, ida) @ left_unitor_inv(a, K), ida))
    spread = permutation([h, h, a, a], [0, 2, 1, 3], K) @ tensor_maps(hp.delta, ida, ida)
    report.add(compare(
        "module_algebra.mult",
        act @ tensor_map(idh, A.mu),
        A.mu @ tensor_map(act, act).with_ends(spread.dst, A.mu.src) @ spread,
    ))
    report.add(compare(
        "module_algebra.unit",
        act @ tensor_map(idh, A.eta) @ right_unitor_inv(h, K),
        A.eta @ hp.eps,
    ))

    report.add(compare("coaction.coassoc", tensor_map(hp.delta, ida) @ coact, tensor_map(idh, coact) @ coact))
    report.add(compare("coaction.counit", left_unitor(a, K) @ tensor_map(hp.eps, ida) @ coact, ida))
    report.add(compare(
        "comodule_algebra.mult",
        coact @ A.mu,
        tensor_map(hp.monoid.mu, A.mu) @ permutation([h, a, h, a], [0, 2, 1, 3], K) @ tensor_map(coact, coact),
    ))
    report.add(compare(
        "comodule_algebra.unit",
        coact @ A.eta,
        tensor_map(hp.monoid.eta, A.eta).with_ends(unit(), coact.dst),
    ))

    lhs = (
        tensor_map(hp.monoid.mu, act)
        @ permutation([h, h, h, a], [0, 2, 1, 3], K)
        @ tensor_map(hp.delta, coact)
    )
    rhs = (
        tensor_map(hp.monoid.mu, ida)
        @ permutation([h, a, h], [0, 2, 1], K)
        @ tensor_map(coact, idh)
        @ tensor_map(act, idh)
        @ tensor_maps(idh, symmetry(h, a, K))
        @ tensor_map(hp.delta, ida)
    )
    report.add(compare("yd_compatibility", lhs, rhs.with_ends(lhs.src, lhs.dst)))

    braided = A.mu @ tensor_map(act, ida) @ tensor_map(idh, symmetry(a, a, K)) @ tensor_map(coact, ida)
    report.add(compare("braided_commutativity", A.mu, braided.with_ends(A.mu.src, A.mu.dst)))
    return report


def trivial_yd_datum(algebra: MonoidData, hopf: Optional[HopfAlgebraData] = None) -> YDModuleAlgebra:
    """Тривиальные действие h▷a = ε(h)a и кодействие a ↦ 1⊗a"""
    K = algebra.field
    hopf = hopf or ground_hopf(K)
    a = algebra.carrier
    action = left_unitor(a, K) @ tensor_map(hopf.eps, identity(a, K))
    coaction = tensor_map(hopf.monoid.eta, identity(a, K)) @ left_unitor_inv(a, K)
    return YDModuleAlgebra(hopf, algebra, action, coaction)


def heisenberg_datum(k: HopfAlgebraData) -> YDModuleAlgebra:
    """
    B = K* с действием (h⇀φ)(x) = φ(xh) и кодействием
    δ(φ) = Σ_i D_φ(e_i)⊗f^i, D_φ(x) = S(x₁)x₃φ(x₂); B косо коммутативна.
    """
    K = k.field
    n = k.dim
    b = dual_hopf(k).monoid
    mu = exactlin.entries(k.monoid.mu.mat)

    # (e_i⇀f^j) = Σ_x μ[j, x·n + i] f^x
    action = {}
    for j, row in mu.items():
        for col, c in row.items():
            x, i = divmod(col, n)
            action.setdefault(x, {})[i * n + j] = c
    action_map = LinMap(tensor_obj(k.carrier, b.carrier), b.carrier, exactlin.from_dod(action, n, n * n, K))

    idk = identity(k.carrier, K)
    delta2 = exactlin.entries((tensor_map(k.delta, idk) @ k.delta).mat)
    s_then_mu = exactlin.columns_dod((k.monoid.mu @ tensor_map(k.antipode, idk)).mat)
    coaction = {}
    for abc, row in delta2.items():
        a, rest = divmod(abc, n * n)
        mid, c = divmod(rest, n)
        for i, gamma in row.items():
            for kk, v in s_then_mu.get(a * n + c, {}).items():
                target = coaction.setdefault(kk * n + i, {})
                target[mid] = target.get(mid, K.zero) + gamma * v
    coaction_map = LinMap(b.carrier, tensor_obj(k.carrier, b.carrier), exactlin.from_dod(coaction, n * n, n, K))
    logger.info(f"Данные Гейзенберга для {k.carrier.label}: B = {b.carrier.label}, dim {n}")
    return YDModuleAlgebra(k, b, action_map, coaction_map)


# ---------------------------------------------------------------------------
# Смэш-произведение и скалярное расширение
# ---------------------------------------------------------------------------

def smash_product(y: YDModuleAlgebra) -> MonoidData:
    """A♯H: (a#h)(b#k) = a(h₁▷b)#h₂k, базис a#h с номером a·dim H + h"""
    A, Hm = y.algebra, y.hopf.monoid
    K = A.field
    a, h = A.carrier, Hm.carrier
    ida, idh = identity(a, K), identity(h, K)
    labels = tuple(f"{a.basis_label(i)}#{h.basis_label(j)}" for i in range(a.dim) for j in range(h.dim))
    carrier = Obj(a.dim * h.dim, f"{a.label}#{h.label}", labels)
    mu = (
        tensor_map(A.mu, Hm.mu)
        @ tensor_maps(ida, y.action, idh, idh)
        @ permutation([a, h, h, a, h], [0, 1, 3, 2, 4], K)
        @ tensor_maps(ida, y.hopf.delta, ida, idh)
    )
    eta = tensor_map(A.eta, Hm.eta)
    return MonoidData(
        carrier,
        mu.with_ends(tensor_obj(carrier, carrier), carrier),
        eta.with_ends(unit(), carrier),
    )


def scalar_extension_hopf_algebroid(y: YDModuleAlgebra, verify: bool = True) -> HopfAlgebroidData:
    """
    Хопфов алгеброид на X = A♯H над L = A и R = A^op:
        α_L(a) = a#1, β_L(a) = a₀#S⁻¹(a₋₁),
        Δ_L(a#h) = (a#h₁)⊗(1#h₂), ε_L(a#h) = aε(h),
        τ(a#h) = (1#S(a₋₁h))(a₀#1),
        α_R = τ∘α_L, β_R = α_L, Δ_R - тот же подъем, ε_R(a#h) = S⁻¹(h)▷a.

    Raises:
        AxiomFailure: построенная структура не прошла проверку (в исключении полный отчет)
    """
    hp, A = y.hopf, y.algebra
    K = A.field
    a, h = A.carrier, hp.carrier
    ida, idh = identity(a, K), identity(h, K)
    X = smash_product(y)
    x = X.carrier
    try:
        s_inv = LinMap(h, h, exactlin.inverse(hp.antipode.mat))
    except NoSolution:
        raise AxiomFailure("Антипод алгебры Хопфа необратим")

    alpha_l = (tensor_map(ida, hp.monoid.eta) @ right_unitor_inv(a, K)).with_ends(a, x)
    beta_l = (tensor_map(ida, s_inv) @ symmetry(h, a, K) @ y.coaction).with_ends(a, x)
    lift = (tensor_maps(ida, idh, A.eta, idh) @ tensor_map(ida, hp.delta)).with_ends(x, tensor_obj(x, x))
    eps_l = (right_unitor(a, K) @ tensor_map(ida, hp.eps)).with_ends(x, a)
    tau = (
        X.mu
        @ tensor_maps(A.eta, idh, ida, hp.monoid.eta).with_ends(tensor_obj(h, a), X.mu.src)
        @ tensor_map(hp.antipode, ida)
        @ tensor_map(hp.monoid.mu, ida)
        @ permutation([h, a, h], [0, 2, 1], K)
        @ tensor_map(y.coaction, idh)
    ).with_ends(x, x)
    alpha_r = tau @ alpha_l
    eps_r = (y.action @ tensor_map(s_inv, ida) @ symmetry(a, h, K)).with_ends(x, a)

    r_carrier = Obj(a.dim, f"{a.label}^op", tuple(a.basis_label(i) for i in range(a.dim)))
    base_right = replace(opposite(A), carrier=r_carrier)
    result = build_hopf_algebroid(
        A, base_right, X,
        alpha_l, beta_l, lift, eps_l,
        alpha_r.with_ends(r_carrier, x), alpha_l.with_ends(r_carrier, x), lift, eps_r.with_ends(x, r_carrier),
        tau,
    )
    logger.info(
        f"Скалярное расширение {x.label}: dim {x.dim}, "
        f"H⊗_L H dim {result.left.bt.obj.dim}, H⊗_R H dim {result.right.bt.obj.dim}"
    )
    if verify:
        report = verify_hopf_algebroid(result)
        if not report.passed:
            raise AxiomFailure(
                f"Скалярное расширение {x.label} не является хопфовым алгеброидом: "
                f"{', '.join(report.failed_names())}",
                report=report,
            )
    return result


def heisenberg_double(a: HopfAlgebraData, orientation: Literal["self", "dual"] = "self",
                      verify: bool = True) -> HopfAlgebroidData:
    """
    Удвоение Гейзенберга как скалярное расширение.

    Args:
        a: конечномерная алгебра Хопфа
        orientation: 'self' - база A, действует A*; 'dual' - база A*, действует A
        verify: проверять ли аксиомы при построении

    Returns:
        хопфов алгеброид полной размерности (dim A)²
    """
    if orientation == "self":
        k = dual_hopf(a)
    elif orientation == "dual":
        k = a
    else:
        raise ValueError(f"Неизвестная ориентация '{orientation}', ожидается 'self' или 'dual'")
    return scalar_extension_hopf_algebroid(heisenberg_datum(k), verify=verify)


# ---------------------------------------------------------------------------
# Алгебра Хопфа над k
# ---------------------------------------------------------------------------

def hopf_algebra_as_left_bialgebroid(a: HopfAlgebraData) -> LeftBialgebroidData:
    """Биалгебра как левый биалгеброид над L = k: α = β = η"""
    L = ground_monoid(a.field)
    return build_left_bialgebroid(L, a.monoid, a.monoid.eta, a.monoid.eta, a.delta, a.eps)


def hopf_algebra_as_hopf_algebroid(a: HopfAlgebraData) -> HopfAlgebroidData:
    """Алгебра Хопфа как хопфов алгеброид над L = R = k с τ = S"""
    K = a.field
    L, R = ground_monoid(K), ground_monoid(K)
    eta = a.monoid.eta
    return build_hopf_algebroid(
        L, R, a.monoid,
        eta, eta, a.delta, a.eps,
        eta, eta, a.delta, a.eps,
        a.antipode,
    )


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    double = heisenberg_double(cyclic_group_algebra(2))
    print(f"✅ Удвоение Гейзенберга k[Z2]: dim {double.total.dim}")
