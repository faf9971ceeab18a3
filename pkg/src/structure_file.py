"""
Файлы структур: JSON с полем скаляров, размерностями, метками базисов
и матрицами структурных отображений.

Матрица записывается списком строк (dst.dim строк по src.dim элементов),
скаляры - строками "p/q". Отображения в H⊗_L H и H⊗_R H хранятся
подъемами H → H⊗H. Сериализация каноническая: повторная запись
прочитанного файла дает те же байты.
"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from config import config
from src import exactlin
from src.bialgebroid import (
    LeftBialgebroidData, RightBialgebroidData, build_left_bialgebroid, build_right_bialgebroid,
)
from src.constructions import HopfAlgebraData, YDModuleAlgebra
from src.errors import ConfigError, ParseError
from src.fvect import LinMap, Obj, tensor_obj, unit
from src.hopf_algebroid import HopfAlgebroidData, build_hopf_algebroid
from src.monoid_alg import MonoidData

logger = logging.getLogger(__name__)

Kind = Literal["monoid", "hopf_algebra", "left_bialgebroid", "right_bialgebroid", "hopf_algebroid", "yd_datum"]

# Форма массива: (сомножители числа строк, сомножители числа столбцов)
Shape = Tuple[Tuple[str, ...], Tuple[str, ...]]


def _monoid_shapes(prefix: str, dim: str) -> Dict[str, Shape]:
    return {f"{prefix}mu": ((dim,), (dim, dim)), f"{prefix}eta": ((dim,), ())}


def _hopf_shapes(prefix: str, dim: str) -> Dict[str, Shape]:
    return {
        **_monoid_shapes(prefix, dim),
        f"{prefix}delta": ((dim, dim), (dim,)),
        f"{prefix}eps": ((), (dim,)),
        f"{prefix}antipode": ((dim,), (dim,)),
    }


def _bialgebroid_shapes(base: str, suffix: str = "") -> Dict[str, Shape]:
    return {
        f"alpha{suffix}": (("total",), (base,)),
        f"beta{suffix}": (("total",), (base,)),
        f"delta{suffix}": (("total", "total"), ("total",)),
        f"eps{suffix}": ((base,), ("total",)),
    }


SCHEMA: Dict[str, Dict[str, Shape]] = {
    "monoid": _monoid_shapes("", "A"),
    "hopf_algebra": _hopf_shapes("", "A"),
    "left_bialgebroid": {
        **_monoid_shapes("", "total"),
        "mu_base": (("base",), ("base", "base")),
        "eta_base": (("base",), ()),
        **_bialgebroid_shapes("base"),
    },
    "hopf_algebroid": {
        **_monoid_shapes("", "total"),
        "mu_L": (("L",), ("L", "L")),
        "eta_L": (("L",), ()),
        "mu_R": (("R",), ("R", "R")),
        "eta_R": (("R",), ()),
        **_bialgebroid_shapes("L", "_L"),
        **_bialgebroid_shapes("R", "_R"),
        "antipode": (("total",), ("total",)),
    },
    "yd_datum": {
        **_hopf_shapes("h_", "hopf"),
        **_monoid_shapes("a_", "algebra"),
        "action": (("algebra",), ("hopf", "algebra")),
        "coaction": (("hopf", "algebra"), ("algebra",)),
    },
}
SCHEMA["right_bialgebroid"] = SCHEMA["left_bialgebroid"]

DIMS: Dict[str, Tuple[str, ...]] = {
    "monoid": ("A",),
    "hopf_algebra": ("A",),
    "left_bialgebroid": ("base", "total"),
    "right_bialgebroid": ("base", "total"),
    "hopf_algebroid": ("L", "R", "total"),
    "yd_datum": ("hopf", "algebra"),
}

# Имя носителя в отчетах для каждого ключа размерности
_CARRIER_LABELS = {
    "A": "A", "base": "L", "total": "H", "L": "L", "R": "R", "hopf": "H", "algebra": "A",
}


class StructureFile(BaseModel):
    """Содержимое файла структуры"""
    model_config = ConfigDict(extra="forbid")

    kind: Kind = Field(..., description="Тип структуры")
    field: Optional[str] = Field(None, description="Поле скаляров: rational или prime:<p>; без ключа - поле по умолчанию")
    dims: Dict[str, int] = Field(..., description="Размерности носителей")
    labels: Dict[str, List[str]] = Field(default_factory=dict, description="Метки базисов по ключам dims")
    arrays: Dict[str, List[List[Union[int, str]]]] = Field(..., description="Матрицы структурных отображений")

    @model_validator(mode="after")
    def _check_shapes(self) -> "StructureFile":
        expected_dims = set(DIMS[self.kind])
        if set(self.dims) != expected_dims:
            raise ValueError(f"Для '{self.kind}' ожидаются размерности {sorted(expected_dims)}, получено {sorted(self.dims)}")
        for name, d in self.dims.items():
            if d < 0:
                raise ValueError(f"Размерность '{name}' отрицательна: {d}")
        for name, labels in self.labels.items():
            if name not in self.dims:
                raise ValueError(f"Метки для неизвестной размерности '{name}'")
            if len(labels) != self.dims[name]:
                raise ValueError(f"Меток '{name}': {len(labels)}, а размерность {self.dims[name]}")
        schema = SCHEMA[self.kind]
        missing = sorted(set(schema) - set(self.arrays))
        extra = sorted(set(self.arrays) - set(schema))
        if missing or extra:
            raise ValueError(f"Массивы для '{self.kind}': не хватает {missing}, лишние {extra}")
        for name, rows in self.arrays.items():
            n_rows, n_cols = self.shape(name)
            if len(rows) != n_rows or any(len(r) != n_cols for r in rows):
                raise ValueError(f"Массив '{name}' должен иметь форму {n_rows}×{n_cols}")
        return self

    def size(self, factors: Tuple[str, ...]) -> int:
        n = 1
        for f in factors:
            n *= self.dims[f]
        return n

    def shape(self, name: str) -> Tuple[int, int]:
        rows, cols = SCHEMA[self.kind][name]
        return self.size(rows), self.size(cols)


# ---------------------------------------------------------------------------
# Чтение и запись
# ---------------------------------------------------------------------------

def parse_structure(text: str, default_field: Optional[str] = None) -> StructureFile:
    """
    Разбирает и проверяет текст файла структуры.

    Args:
        text: содержимое файла
        default_field: поле для файла без ключа field (иначе config.FIELD)

    Raises:
        ParseError: некорректный JSON, схема, форма массива, поле или скаляр
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Некорректный JSON: {e}")
    try:
        sf = StructureFile.model_validate(raw)
    except ValidationError as e:
        raise ParseError(f"Некорректный файл структуры: {e.errors()[0]['msg']}")
    if sf.field is None:
        sf = sf.model_copy(update={"field": default_field or config.FIELD})
    K = field_of(sf)
    for name, rows in sf.arrays.items():
        for row in rows:
            for v in row:
                try:
                    exactlin.parse_scalar(v, K)
                except ParseError as e:
                    raise ParseError(f"Массив '{name}': {e}")
    return sf


def load_structure(path: Union[str, Path], default_field: Optional[str] = None) -> StructureFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Не удалось прочитать {path}: {e}")
    sf = parse_structure(text, default_field)
    logger.info(f"Загружен файл {path.name}: {sf.kind}, размерности {sf.dims}")
    return sf


def dump_structure(sf: StructureFile) -> str:
    """Каноническая запись: отсортированные ключи, отступ 2, скаляры в виде 'p/q'"""
    K = field_of(sf)
    data = sf.model_dump()
    data["field"] = exactlin.field_spec(K)
    data["arrays"] = {
        name: [[exactlin.format_scalar(exactlin.parse_scalar(v, K), K) for v in row] for row in rows]
        for name, rows in sf.arrays.items()
    }
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def save_structure(sf: StructureFile, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_structure(sf), encoding="utf-8")
    logger.info(f"Сохранен файл {path}")


def field_of(sf: StructureFile):
    try:
        return exactlin.parse_field(sf.field or config.FIELD)
    except ConfigError as e:
        raise ParseError(str(e))


# ---------------------------------------------------------------------------
# Файл → данные
# ---------------------------------------------------------------------------

class _Reader:
    """Собирает объекты и отображения из проверенного файла"""

    def __init__(self, sf: StructureFile):
        self.sf = sf
        self.K = field_of(sf)
        self.objs = {
            name: Obj(d, _CARRIER_LABELS[name], tuple(sf.labels.get(name, ())))
            for name, d in sf.dims.items()
        }

    def obj(self, factors: Tuple[str, ...]) -> Obj:
        if not factors:
            return unit()
        result = self.objs[factors[0]]
        for f in factors[1:]:
            result = tensor_obj(result, self.objs[f])
        return result

    def map(self, name: str) -> LinMap:
        rows, cols = SCHEMA[self.sf.kind][name]
        mat = exactlin.from_rows(self.sf.arrays[name], self.K, cols=self.sf.size(cols))
        return LinMap(self.obj(cols), self.obj(rows), mat)

    def monoid(self, prefix: str, dim: str, suffix: str = "") -> MonoidData:
        return MonoidData(self.objs[dim], self.map(f"{prefix}mu{suffix}"), self.map(f"{prefix}eta{suffix}"))

    def hopf(self, prefix: str, dim: str) -> HopfAlgebraData:
        return HopfAlgebraData(
            self.monoid(prefix, dim),
            self.map(f"{prefix}delta"),
            self.map(f"{prefix}eps"),
            self.map(f"{prefix}antipode"),
        )


def _expect(sf: StructureFile, *kinds: str) -> None:
    if sf.kind not in kinds:
        raise ParseError(f"Ожидается файл типа {' или '.join(kinds)}, получен '{sf.kind}'")


def to_monoid(sf: StructureFile) -> MonoidData:
    _expect(sf, "monoid", "hopf_algebra")
    return _Reader(sf).monoid("", "A")


def to_hopf_algebra(sf: StructureFile) -> HopfAlgebraData:
    _expect(sf, "hopf_algebra")
    return _Reader(sf).hopf("", "A")


def _to_bialgebroid(sf: StructureFile, build):
    r = _Reader(sf)
    base = r.monoid("", "base", "_base")
    total = r.monoid("", "total")
    return build(base, total, r.map("alpha"), r.map("beta"), r.map("delta"), r.map("eps"))


def to_left_bialgebroid(sf: StructureFile) -> LeftBialgebroidData:
    _expect(sf, "left_bialgebroid")
    return _to_bialgebroid(sf, build_left_bialgebroid)


def to_right_bialgebroid(sf: StructureFile) -> RightBialgebroidData:
    _expect(sf, "right_bialgebroid")
    return _to_bialgebroid(sf, build_right_bialgebroid)


def to_hopf_algebroid(sf: StructureFile) -> HopfAlgebroidData:
    _expect(sf, "hopf_algebroid")
    r = _Reader(sf)
    return build_hopf_algebroid(
        r.monoid("", "L", "_L"),
        r.monoid("", "R", "_R"),
        r.monoid("", "total"),
        r.map("alpha_L"), r.map("beta_L"), r.map("delta_L"), r.map("eps_L"),
        r.map("alpha_R"), r.map("beta_R"), r.map("delta_R"), r.map("eps_R"),
        r.map("antipode"),
    )


def to_yd_datum(sf: StructureFile) -> YDModuleAlgebra:
    _expect(sf, "yd_datum")
    r = _Reader(sf)
    return YDModuleAlgebra(r.hopf("h_", "hopf"), r.monoid("a_", "algebra"), r.map("action"), r.map("coaction"))


def to_structure(sf: StructureFile):
    """Данные, соответствующие типу файла"""
    readers = {
        "monoid": to_monoid,
        "hopf_algebra": to_hopf_algebra,
        "left_bialgebroid": to_left_bialgebroid,
        "right_bialgebroid": to_right_bialgebroid,
        "hopf_algebroid": to_hopf_algebroid,
        "yd_datum": to_yd_datum,
    }
    return readers[sf.kind](sf)


# ---------------------------------------------------------------------------
# Данные → файл
# ---------------------------------------------------------------------------

def _rows(f: LinMap) -> List[List[str]]:
    K = f.field
    return [[exactlin.format_scalar(v, K) for v in row] for row in exactlin.to_rows(f.mat)]


def _labels(x: Obj) -> List[str]:
    return list(x.basis) if x.basis else []


def _make(kind: str, K, carriers: Dict[str, Obj], arrays: Dict[str, LinMap]) -> StructureFile:
    return StructureFile(
        kind=kind,
        field=exactlin.field_spec(K),
        dims={name: x.dim for name, x in carriers.items()},
        labels={name: _labels(x) for name, x in carriers.items() if x.basis},
        arrays={name: _rows(f) for name, f in arrays.items()},
    )


def _monoid_arrays(m: MonoidData, prefix: str = "", suffix: str = "") -> Dict[str, LinMap]:
    return {f"{prefix}mu{suffix}": m.mu, f"{prefix}eta{suffix}": m.eta}


def _hopf_arrays(a: HopfAlgebraData, prefix: str = "") -> Dict[str, LinMap]:
    return {
        **_monoid_arrays(a.monoid, prefix),
        f"{prefix}delta": a.delta,
        f"{prefix}eps": a.eps,
        f"{prefix}antipode": a.antipode,
    }


def _bialgebroid_arrays(d, suffix: str = "") -> Dict[str, LinMap]:
    return {
        f"alpha{suffix}": d.alpha.map,
        f"beta{suffix}": d.beta.map,
        f"delta{suffix}": d.bt.section @ d.delta,
        f"eps{suffix}": d.eps,
    }


def from_monoid(m: MonoidData) -> StructureFile:
    return _make("monoid", m.field, {"A": m.carrier}, _monoid_arrays(m))


def from_hopf_algebra(a: HopfAlgebraData) -> StructureFile:
    return _make("hopf_algebra", a.field, {"A": a.carrier}, _hopf_arrays(a))


def _from_bialgebroid(kind: str, d) -> StructureFile:
    return _make(kind, d.total.field, {"base": d.base.carrier, "total": d.total.carrier}, {
        **_monoid_arrays(d.total),
        "mu_base": d.base.mu,
        "eta_base": d.base.eta,
        **_bialgebroid_arrays(d),
    })


def from_left_bialgebroid(d: LeftBialgebroidData) -> StructureFile:
    return _from_bialgebroid("left_bialgebroid", d)


def from_right_bialgebroid(d: RightBialgebroidData) -> StructureFile:
    return _from_bialgebroid("right_bialgebroid", d)


def from_hopf_algebroid(h: HopfAlgebroidData) -> StructureFile:
    carriers = {"L": h.left.base.carrier, "R": h.right.base.carrier, "total": h.total.carrier}
    return _make("hopf_algebroid", h.total.field, carriers, {
        **_monoid_arrays(h.total),
        **_monoid_arrays(h.left.base, suffix="_L"),
        **_monoid_arrays(h.right.base, suffix="_R"),
        **_bialgebroid_arrays(h.left, "_L"),
        **_bialgebroid_arrays(h.right, "_R"),
        "antipode": h.antipode,
    })


def from_yd_datum(y: YDModuleAlgebra) -> StructureFile:
    carriers = {"hopf": y.hopf.carrier, "algebra": y.algebra.carrier}
    return _make("yd_datum", y.algebra.field, carriers, {
        **_hopf_arrays(y.hopf, "h_"),
        **_monoid_arrays(y.algebra, "a_"),
        "action": y.action,
        "coaction": y.coaction,
    })


def from_structure(obj) -> StructureFile:
    """Обратная операция к to_structure"""
    if isinstance(obj, HopfAlgebroidData):
        return from_hopf_algebroid(obj)
    if isinstance(obj, LeftBialgebroidData):
        return from_left_bialgebroid(obj)
    if isinstance(obj, RightBialgebroidData):
        return from_right_bialgebroid(obj)
    if isinstance(obj, YDModuleAlgebra):
        return from_yd_datum(obj)
    if isinstance(obj, HopfAlgebraData):
        return from_hopf_algebra(obj)
    if isinstance(obj, MonoidData):
        return from_monoid(obj)
    raise TypeError(f"Нет формата файла для {type(obj).__name__}")
