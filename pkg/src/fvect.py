"""
Категория конечномерных векторных пространств: объекты, морфизмы,
тензорное произведение, симметрия, унитары и коуравнители.

Соглашение о базисе: e_i⊗e_j имеет номер i·dim(Y) + j. При нем унитары
и ассоциатор - тождественные матрицы, а симметрия - перестановка.
"""
import logging
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from src import exactlin
from src.errors import NoSolution, NotBalanced
from src.exactlin import Matrix, Subspace
from src.report import Report, compare, verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Obj:
    """
    Конечномерное пространство.

    Args:
        dim: размерность
        label: имя для отчетов
        basis: метки базисных векторов (для атомарных объектов)
        factors: сомножители (для тензорных произведений)
    """
    dim: int
    label: Optional[str] = None
    basis: Tuple[str, ...] = ()
    factors: Tuple["Obj", ...] = field(default=(), repr=False)

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"Размерность не может быть отрицательной: {self.dim}")
        if self.basis and len(self.basis) != self.dim:
            raise ValueError(f"Меток базиса {len(self.basis)}, а размерность {self.dim}")

    def basis_label(self, i: int) -> str:
        """Метка i-го базисного вектора, для тензорных объектов - составная"""
        if self.factors:
            parts = []
            for f in reversed(self.factors):
                i, r = divmod(i, f.dim) if f.dim else (i, 0)
                parts.append(f.basis_label(r))
            return "⊗".join(reversed(parts))
        if self.basis:
            return self.basis[i]
        return f"{self.label or 'e'}[{i}]"


def unit() -> Obj:
    """Моноидальная единица k"""
    return Obj(1, "k", ("1",))


@dataclass(frozen=True, eq=False)
class LinMap:
    """Морфизм src → dst, матрица размера dst.dim × src.dim"""
    src: Obj
    dst: Obj
    mat: Matrix

    def __post_init__(self):
        if self.mat.shape != (self.dst.dim, self.src.dim):
            raise ValueError(
                f"Матрица {self.mat.shape} не соответствует морфизму {self.src.dim} → {self.dst.dim}"
            )

    @property
    def field(self):
        return self.mat.domain

    def __matmul__(self, other: "LinMap") -> "LinMap":
        """Композиция self∘other"""
        if other.dst.dim != self.src.dim:
            raise ValueError(f"Нельзя скомпоновать: {other.dst.dim} ≠ {self.src.dim}")
        return LinMap(other.src, self.dst, exactlin.mul(self.mat, other.mat))

    def __add__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.src, self.dst, exactlin.add(self.mat, other.mat))

    def __sub__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.src, self.dst, exactlin.sub(self.mat, other.mat))

    def __neg__(self) -> "LinMap":
        return LinMap(self.src, self.dst, self.mat.to_sparse().neg())

    def scale(self, x) -> "LinMap":
        return LinMap(self.src, self.dst, exactlin.scale(self.mat, x))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.src.dim == other.src.dim
            and self.dst.dim == other.dst.dim
            and exactlin.equal(self.mat, other.mat)
        )

    __hash__ = None

    def with_ends(self, src: Obj, dst: Obj) -> "LinMap":
        """Та же матрица с другими (равноразмерными) концами"""
        return LinMap(src, dst, self.mat)


def identity(x: Obj, K) -> LinMap:
    return LinMap(x, x, exactlin.identity(x.dim, K))


def zero_map(x: Obj, y: Obj, K) -> LinMap:
    return LinMap(x, y, exactlin.zeros(y.dim, x.dim, K))


def tensor_obj(x: Obj, y: Obj) -> Obj:
    label = f"{x.label or '?'}⊗{y.label or '?'}"
    return Obj(x.dim * y.dim, label, factors=_flatten(x) + _flatten(y))


def _flatten(x: Obj) -> Tuple[Obj, ...]:
    return x.factors if x.factors else (x,)


def tensor_objs(*xs: Obj) -> Obj:
    result = xs[0]
    for x in xs[1:]:
        result = tensor_obj(result, x)
    return result


def tensor_map(f: LinMap, g: LinMap) -> LinMap:
    return LinMap(tensor_obj(f.src, g.src), tensor_obj(f.dst, g.dst), exactlin.kron(f.mat, g.mat))


def tensor_maps(*fs: LinMap) -> LinMap:
    result = fs[0]
    for f in fs[1:]:
        result = tensor_map(result, f)
    return result


def permutation(objs: Sequence[Obj], order: Sequence[int], K) -> LinMap:
    """
    Перестановка тензорных сомножителей.

    Args:
        objs: сомножители X_0, ..., X_{n-1}
        order: новый порядок; на k-м месте результата стоит X_{order[k]}
        K: поле

    Returns:
        X_0⊗...⊗X_{n-1} → X_{order[0]}⊗...⊗X_{order[n-1]}
    """
    if sorted(order) != list(range(len(objs))):
        raise ValueError(f"{order} не является перестановкой")
    dims = [x.dim for x in objs]
    out_dims = [dims[k] for k in order]
    total = 1
    for d in dims:
        total *= d
    dod = {}
    for index in range(total):
        digits = []
        rest = index
        for d in reversed(dims):
            rest, r = divmod(rest, d)
            digits.append(r)
        digits.reverse()
        out = 0
        for k, d in zip(order, out_dims):
            out = out * d + digits[k]
        dod[out] = {index: K.one}
    src = tensor_objs(*objs)
    dst = tensor_objs(*(objs[k] for k in order))
    return LinMap(src, dst, exactlin.from_dod(dod, total, total, K))


def symmetry(x: Obj, y: Obj, K) -> LinMap:
    """τ_{X,Y}: X⊗Y → Y⊗X"""
    return permutation([x, y], [1, 0], K)


def left_unitor(x: Obj, K) -> LinMap:
    """l_X: k⊗X → X"""
    return LinMap(tensor_obj(unit(), x), x, exactlin.identity(x.dim, K))


def left_unitor_inv(x: Obj, K) -> LinMap:
    return LinMap(x, tensor_obj(unit(), x), exactlin.identity(x.dim, K))


def right_unitor(x: Obj, K) -> LinMap:
    """r_X: X⊗k → X"""
    return LinMap(tensor_obj(x, unit()), x, exactlin.identity(x.dim, K))


def right_unitor_inv(x: Obj, K) -> LinMap:
    return LinMap(x, tensor_obj(x, unit()), exactlin.identity(x.dim, K))


def associator(x: Obj, y: Obj, z: Obj, K) -> LinMap:
    """a_{X,Y,Z}: (X⊗Y)⊗Z → X⊗(Y⊗Z)"""
    n = x.dim * y.dim * z.dim
    return LinMap(
        tensor_obj(tensor_obj(x, y), z),
        tensor_obj(x, tensor_obj(y, z)),
        exactlin.identity(n, K),
    )


def is_surjective(f: LinMap) -> bool:
    return exactlin.rank(f.mat) == f.dst.dim


# ---------------------------------------------------------------------------
# Коуравнители
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Coeq:
    """
    Коуравнитель пары f, g: Y → X.

    xi: X → q сюръективен, xi∘f = xi∘g, xi∘section = id_q,
    relations = образ f − g.
    """
    q: Obj
    xi: LinMap
    section: LinMap
    relations: Subspace


def coequalizer(f: LinMap, g: LinMap, label: Optional[str] = None) -> Coeq:
    """Коуравнитель как коядро разности f − g"""
    if f.src.dim != g.src.dim or f.dst.dim != g.dst.dim:
        raise ValueError("Коуравнитель определен только для параллельной пары")
    proj, section, relations = exactlin.cokernel_with_relations((f - g).mat)
    q = Obj(proj.shape[0], label or f"{f.dst.label or 'X'}/~")
    logger.debug(
        f"Коуравнитель: dim {f.dst.dim} → {q.dim}, ранг соотношений {relations.dim}"
    )
    return Coeq(q=q, xi=LinMap(f.dst, q, proj), section=LinMap(q, f.dst, section), relations=relations)


def factor_epi(xi: LinMap, section: LinMap, h: LinMap, condition: str = "") -> LinMap:
    """
    Единственный u с u∘xi = h для сюръекции xi с известным сечением.

    Raises:
        NotBalanced: h не обнуляется на ядре xi
    """
    if h.src.dim != xi.src.dim:
        raise ValueError(f"Разные области: {h.src.dim} и {xi.src.dim}")
    try:
        mat = exactlin.solve_factor(xi.mat, h.mat, section.mat)
    except NoSolution:
        raise NotBalanced(
            f"Морфизм не пропускается через факторизацию{': ' + condition if condition else ''}",
            condition=condition or None,
        )
    return LinMap(xi.dst, h.dst, mat)


def factor_through(c: Coeq, h: LinMap, condition: str = "") -> LinMap:
    """Единственный u с u∘ξ = h (универсальное свойство коуравнителя)"""
    return factor_epi(c.xi, c.section, h, condition)


def random_section(c: Coeq, rng: random.Random) -> LinMap:
    """Другое сечение: каноническое плюс случайная добавка со значениями в ядре ξ"""
    K = c.xi.field
    ker = exactlin.kernel(c.xi.mat)
    if ker.dim == 0 or c.q.dim == 0:
        return c.section
    coeffs = exactlin.from_rows(
        [[rng.randint(-3, 3) for _ in range(c.q.dim)] for _ in range(ker.dim)], K, cols=c.q.dim
    )
    shift = exactlin.mul(ker.basis, coeffs)
    return LinMap(c.q, c.xi.src, exactlin.add(c.section.mat, shift))


def check_coeq_tensor_commute(f: LinMap, g: LinMap, w: Obj) -> Report:
    """
    Проверяет, что ξ⊗id_W и id_W⊗ξ - коуравнители тензорированной пары:
    коуравнивают ее, сюръективны, и их ядро равно образу (f−g)⊗id_W.
    """
    K = f.field
    c = coequalizer(f, g)
    report = Report()
    idw = identity(w, K)
    sides = {
        "right": (tensor_map(c.xi, idw), tensor_map(f, idw), tensor_map(g, idw), tensor_map(f - g, idw)),
        "left": (tensor_map(idw, c.xi), tensor_map(idw, f), tensor_map(idw, g), tensor_map(idw, f - g)),
    }
    for side, (xi_w, fw, gw, diff) in sides.items():
        report.add(compare(f"coeq_tensor.{side}.coequalizes", xi_w @ fw, xi_w @ gw))
        report.add(verdict(f"coeq_tensor.{side}.surjective", is_surjective(xi_w), "ξ⊗id не сюръективен"))
        same = exactlin.kernel(xi_w.mat) == exactlin.image(diff.mat)
        report.add(verdict(f"coeq_tensor.{side}.kernel", same, "ядро ξ⊗id отличается от образа соотношений"))
    return report
