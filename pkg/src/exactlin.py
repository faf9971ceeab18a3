"""
Точная линейная алгебра над Q или F_p.

Матрицы хранятся как sympy DomainMatrix. Все функции модуля чистые:
аргументы не изменяются, результат всегда новый объект.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import GF, QQ, Rational, isprime
from sympy.core.sympify import SympifyError
from sympy.polys.matrices import DomainMatrix

from src.errors import ConfigError, NoSolution, ParseError

logger = logging.getLogger(__name__)

Matrix = DomainMatrix


# ---------------------------------------------------------------------------
# Поле скаляров
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def get_field(prime: Optional[int] = None):
    """
    Возвращает поле скаляров: рациональные числа или F_p.

    Args:
        prime: характеристика; None означает поле Q

    Returns:
        домен sympy (QQ или GF(p))
    """
    if prime is None:
        return QQ
    if not isprime(prime):
        raise ConfigError(f"Характеристика поля должна быть простым числом, получено {prime}")
    return GF(prime, symmetric=False)


def parse_field(spec: str):
    """Разбирает строку вида 'rational' или 'prime:7'"""
    text = spec.strip().lower()
    if text in ("rational", "q", "qq"):
        return get_field(None)
    if text.startswith("prime:"):
        try:
            prime = int(text.split(":", 1)[1])
        except ValueError:
            raise ConfigError(f"Не удалось разобрать характеристику в '{spec}'")
        return get_field(prime)
    raise ConfigError(f"Неизвестное поле '{spec}', ожидается 'rational' или 'prime:<p>'")


def field_spec(K) -> str:
    """Обратная операция к parse_field"""
    if K.is_QQ:
        return "rational"
    return f"prime:{K.characteristic()}"


def characteristic(K) -> int:
    return 0 if K.is_QQ else int(K.characteristic())


def parse_scalar(value, K):
    """
    Разбирает скаляр из строки ("-3/7", "5") или целого числа.

    Args:
        value: строка или int
        K: поле

    Returns:
        элемент поля K
    """
    if isinstance(value, int) and not isinstance(value, bool):
        return K(value)
    if not isinstance(value, str):
        raise ParseError(f"Скаляр должен быть строкой или целым числом: {value!r}")
    text = value.strip().replace("−", "-")
    try:
        r = Rational(text)
    except (TypeError, ValueError, ZeroDivisionError, SympifyError):
        raise ParseError(f"Некорректный скаляр '{value}'")
    if K.is_QQ:
        return QQ.from_sympy(r)
    p = characteristic(K)
    if int(r.q) % p == 0:
        raise ParseError(f"Знаменатель скаляра '{value}' обращается в ноль в F_{p}")
    return K(int(r.p)) / K(int(r.q))


def format_scalar(x, K) -> str:
    """Каноническая запись скаляра: 'p/q' с q > 0 или вычет из [0, p)"""
    if K.is_QQ:
        num, den = int(K.numer(x)), int(K.denom(x))
        return str(num) if den == 1 else f"{num}/{den}"
    p = characteristic(K)
    return str(int(K.to_int(x)) % p)


# ---------------------------------------------------------------------------
# Конструкторы и доступ к элементам
# ---------------------------------------------------------------------------

def zeros(rows: int, cols: int, K) -> Matrix:
    return DomainMatrix.zeros((rows, cols), K)


def identity(n: int, K) -> Matrix:
    return DomainMatrix.eye(n, K)


def from_dod(dod: Dict[int, Dict[int, object]], rows: int, cols: int, K) -> Matrix:
    """Собирает матрицу из словаря словарей, отбрасывая нули"""
    clean = {}
    for i, row in dod.items():
        kept = {j: v for j, v in row.items() if v}
        if kept:
            clean[i] = kept
    return DomainMatrix.from_dod(clean, (rows, cols), K)


def from_rows(rows: Sequence[Sequence], K, cols: Optional[int] = None) -> Matrix:
    """
    Матрица из списка строк; элементы - int, строки-дроби или элементы K.

    Args:
        rows: список строк матрицы
        K: поле
        cols: число столбцов (нужно, когда строк нет)
    """
    n_cols = cols if cols is not None else (len(rows[0]) if rows else 0)
    dod = {}
    for i, row in enumerate(rows):
        if len(row) != n_cols:
            raise ParseError(f"Строка {i} имеет длину {len(row)}, ожидается {n_cols}")
        dod[i] = {j: _coerce(v, K) for j, v in enumerate(row)}
    return from_dod(dod, len(rows), n_cols, K)


def _coerce(v, K):
    if isinstance(v, (int, str)):
        return parse_scalar(v, K)
    return K.convert(v)


def to_rows(m: Matrix) -> List[List]:
    """Плотное представление матрицы списком строк"""
    rows, cols = m.shape
    K = m.domain
    out = [[K.zero] * cols for _ in range(rows)]
    for i, row in m.to_dod().items():
        for j, v in row.items():
            out[i][j] = v
    return out


def entries(m: Matrix) -> Dict[int, Dict[int, object]]:
    """Ненулевые элементы матрицы"""
    return {i: {j: v for j, v in row.items() if v} for i, row in m.to_dod().items()}


def column(m: Matrix, j: int) -> List:
    K = m.domain
    col = [K.zero] * m.shape[0]
    for i, row in m.to_dod().items():
        if j in row:
            col[i] = row[j]
    return col


def columns_dod(m: Matrix) -> Dict[int, Dict[int, object]]:
    """Ненулевые элементы, сгруппированные по столбцам"""
    cols: Dict[int, Dict[int, object]] = {}
    for i, row in m.to_dod().items():
        for j, v in row.items():
            if v:
                cols.setdefault(j, {})[i] = v
    return cols


def equal(a: Matrix, b: Matrix) -> bool:
    return a.shape == b.shape and entries(a) == entries(b)


def is_zero(m: Matrix) -> bool:
    return not any(entries(m).values())


def first_difference(a: Matrix, b: Matrix) -> Optional[int]:
    """Первый (по порядку базиса) столбец, в котором матрицы различаются"""
    ca, cb = columns_dod(a), columns_dod(b)
    for j in sorted(set(ca) | set(cb)):
        if ca.get(j, {}) != cb.get(j, {}):
            return j
    return None


def mul(a: Matrix, b: Matrix) -> Matrix:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Несогласованные размеры при умножении: {a.shape} и {b.shape}")
    return a.to_sparse().matmul(b.to_sparse())


def add(a: Matrix, b: Matrix) -> Matrix:
    return a.to_sparse().add(b.to_sparse())


def sub(a: Matrix, b: Matrix) -> Matrix:
    return a.to_sparse().sub(b.to_sparse())


def scale(m: Matrix, x) -> Matrix:
    return m.to_sparse().scalarmul(m.domain.convert(x))


def transpose(m: Matrix) -> Matrix:
    return m.to_sparse().transpose()


def hstack(blocks: Sequence[Matrix], rows: int, K) -> Matrix:
    if not blocks:
        return zeros(rows, 0, K)
    first, *rest = [b.to_sparse() for b in blocks]
    return first.hstack(*rest) if rest else first


def vstack(blocks: Sequence[Matrix], cols: int, K) -> Matrix:
    if not blocks:
        return zeros(0, cols, K)
    first, *rest = [b.to_sparse() for b in blocks]
    return first.vstack(*rest) if rest else first


def select_columns(m: Matrix, cols: Sequence[int]) -> Matrix:
    index = {c: k for k, c in enumerate(cols)}
    dod = {}
    for i, row in m.to_dod().items():
        kept = {index[j]: v for j, v in row.items() if j in index}
        if kept:
            dod[i] = kept
    return from_dod(dod, m.shape[0], len(cols), m.domain)


def select_rows(m: Matrix, rows: Sequence[int]) -> Matrix:
    dod = m.to_dod()
    picked = {k: dict(dod[r]) for k, r in enumerate(rows) if r in dod}
    return from_dod(picked, len(rows), m.shape[1], m.domain)


# ---------------------------------------------------------------------------
# Исключение Гаусса и подпространства
# ---------------------------------------------------------------------------

def rref(m: Matrix) -> Tuple[Matrix, Tuple[int, ...], int]:
    """
    Приведенный ступенчатый вид.

    Args:
        m: матрица

    Returns:
        (ступенчатая матрица, номера ведущих столбцов, ранг)
    """
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return m.to_sparse(), (), 0
    reduced, pivots = m.to_sparse().rref()
    pivots = tuple(pivots)
    return reduced, pivots, len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


@dataclass(frozen=True, eq=False)
class Subspace:
    """
    Подпространство в координатном пространстве размерности ambient_dim.

    basis хранит базисные векторы столбцами; это транспонированные ненулевые
    строки приведенного ступенчатого вида, поэтому равные подпространства
    имеют одинаковый basis.
    """
    ambient_dim: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @classmethod
    def from_columns(cls, m: Matrix) -> "Subspace":
        """Линейная оболочка столбцов матрицы"""
        ambient = m.shape[0]
        reduced, _, r = rref(transpose(m))
        rows = select_rows(reduced, list(range(r)))
        return cls(ambient, transpose(rows))

    @classmethod
    def zero(cls, ambient_dim: int, K) -> "Subspace":
        return cls(ambient_dim, zeros(ambient_dim, 0, K))

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            return False
        if other.dim == 0:
            return True
        K = other.basis.domain
        joined = hstack([self.basis, other.basis], self.ambient_dim, K)
        return rank(joined) == self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and equal(self.basis, other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.dim))


def kernel(m: Matrix) -> Subspace:
    """Ядро матрицы (как отображения из пространства столбцов)"""
    rows, cols = m.shape
    K = m.domain
    reduced, pivots, _ = rref(m)
    red = reduced.to_dod()
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    dod: Dict[int, Dict[int, object]] = {}
    for k, f in enumerate(free):
        dod.setdefault(f, {})[k] = K.one
        for i, p in enumerate(pivots):
            v = red.get(i, {}).get(f)
            if v:
                dod.setdefault(p, {})[k] = -v
    vectors = from_dod(dod, cols, len(free), K)
    return Subspace.from_columns(vectors)


def image(m: Matrix) -> Subspace:
    return Subspace.from_columns(m)


def cokernel_with_relations(m: Matrix) -> Tuple[Matrix, Matrix, Subspace]:
    """
    Факторизация по образу m с каноническим сечением.

    Координаты фактора - неведущие столбцы ступенчатого базиса образа.
    """
    n = m.shape[0]
    K = m.domain
    relations = image(m)
    basis_rows = transpose(relations.basis).to_dod()
    pivots = []
    for i in range(relations.dim):
        row = basis_rows.get(i, {})
        pivots.append(min(j for j, v in row.items() if v))
    pivot_set = set(pivots)
    kept = [c for c in range(n) if c not in pivot_set]
    position = {c: k for k, c in enumerate(kept)}

    proj: Dict[int, Dict[int, object]] = {}
    for c, k in position.items():
        proj.setdefault(k, {})[c] = K.one
    for i, p in enumerate(pivots):
        for j, v in basis_rows.get(i, {}).items():
            if j in position and v:
                proj.setdefault(position[j], {})[p] = -v
    section = {c: {k: K.one} for c, k in position.items()}
    return (
        from_dod(proj, len(kept), n, K),
        from_dod(section, n, len(kept), K),
        relations,
    )


def cokernel(m: Matrix) -> Tuple[Matrix, Matrix]:
    """
    Коядро: проекция на фактор по образу и сечение.

    Returns:
        (proj, section), proj·section = E
    """
    proj, section, _ = cokernel_with_relations(m)
    return proj, section


def inverse(m: Matrix) -> Matrix:
    """Обратная матрица; NoSolution для вырожденной"""
    n, cols = m.shape
    if n != cols:
        raise NoSolution(f"Обращать можно только квадратную матрицу, получено {m.shape}")
    K = m.domain
    reduced, pivots, _ = rref(hstack([m, identity(n, K)], n, K))
    if pivots[:n] != tuple(range(n)):
        raise NoSolution("Матрица вырождена")
    return select_columns(reduced, list(range(n, 2 * n)))


def kron(a: Matrix, b: Matrix) -> Matrix:
    """
    Кронекерово произведение; e_i⊗e_j имеет номер i·dim(B) + j.
    """
    ar, ac = a.shape
    br, bc = b.shape
    da, db = entries(a), entries(b)
    dod: Dict[int, Dict[int, object]] = {}
    for i, arow in da.items():
        for k, brow in db.items():
            target = dod.setdefault(i * br + k, {})
            for j, x in arow.items():
                for l, y in brow.items():
                    target[j * bc + l] = x * y
    return from_dod(dod, ar * br, ac * bc, a.domain)


def solve_factor(through: Matrix, target: Matrix, section: Optional[Matrix] = None) -> Matrix:
    """
    Находит x с x·through = target.

    Args:
        through: матрица, через которую факторизуем
        target: правая часть
        section: известное правое обратное к through (ускоряет сюръективный случай)

    Returns:
        x; для сюръективного through решение единственно

    Raises:
        NoSolution: target не обнуляется на ядре through
    """
    if through.shape[1] != target.shape[1]:
        raise ValueError(f"Разные области определения: {through.shape} и {target.shape}")
    if section is None:
        section = _right_inverse_on_image(through)
    x = mul(target, section)
    if not equal(mul(x, through), target):
        raise NoSolution("target не пропускается через through")
    return x


def _right_inverse_on_image(through: Matrix) -> Matrix:
    """
    Матрица G (n × m) такая, что through·G·through = through.

    Берем максимальный невырожденный минор через[Q, P]; G равна его обратной
    на координатах (P, Q) и нулю вне их.
    """
    m_rows, n_cols = through.shape
    K = through.domain
    _, col_pivots, r = rref(through)
    sub_cols = select_columns(through, list(col_pivots))
    _, row_pivots, _ = rref(transpose(sub_cols))
    minor = select_rows(sub_cols, list(row_pivots))
    inv = inverse(minor).to_dod()
    dod: Dict[int, Dict[int, object]] = {}
    for a, row in inv.items():
        for b, v in row.items():
            dod.setdefault(col_pivots[a], {})[row_pivots[b]] = v
    return from_dod(dod, n_cols, m_rows, K)


def unit_vector(n: int, i: int, K) -> Matrix:
    return from_dod({i: {0: K.one}}, n, 1, K)


def from_columns(cols: Iterable[Sequence], n: int, K) -> Matrix:
    """Матрица n × k из списка столбцов"""
    dod: Dict[int, Dict[int, object]] = {}
    count = 0
    for j, col in enumerate(cols):
        count += 1
        for i, v in enumerate(col):
            if v:
                dod.setdefault(i, {})[j] = K.convert(v)
    return from_dod(dod, n, count, K)
