"""
Отчет о проверке аксиом: список именованных проверок со свидетелем нарушения.
"""
import logging
from typing import Iterable, List, Optional

from pydantic import BaseModel, Field

from src import exactlin

logger = logging.getLogger(__name__)


class Witness(BaseModel):
    """Первый базисный вектор, на котором две стороны тождества различаются"""
    index: int = Field(..., description="Номер базисного вектора в области определения")
    label: str = Field(..., description="Метка базисного вектора")
    lhs: List[str] = Field(..., description="Образ при левой части тождества")
    rhs: List[str] = Field(..., description="Образ при правой части тождества")


class AxiomCheck(BaseModel):
    """Результат одной проверки"""
    name: str = Field(..., description="Имя аксиомы", examples=["left.takeuchi"])
    passed: bool = Field(..., description="Выполнено ли тождество")
    witness: Optional[Witness] = Field(None, description="Контрпример при нарушении")
    note: Optional[str] = Field(None, description="Пояснение, если проверка не вычислима")


class Report(BaseModel):
    """Сводный отчет; проходит, только если прошли все проверки"""
    checks: List[AxiomCheck] = Field(default_factory=list, description="Проверки в порядке вычисления")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def names(self) -> List[str]:
        return [c.name for c in self.checks]

    def failed_names(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    def get(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def add(self, check: AxiomCheck) -> "Report":
        if not check.passed:
            logger.warning(f"Нарушена аксиома {check.name}" + (f": {check.note}" if check.note else ""))
        self.checks.append(check)
        return self

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for c in other.checks:
            self.checks.append(c.model_copy(update={"name": prefix + c.name}))
        return self

    def prefixed(self, prefix: str) -> "Report":
        return Report().extend(self, prefix)

    @classmethod
    def merge(cls, reports: Iterable["Report"]) -> "Report":
        merged = cls()
        for r in reports:
            merged.extend(r)
        return merged


def compare(name: str, lhs, rhs) -> AxiomCheck:
    """
    Точное сравнение двух линейных отображений.

    Args:
        name: имя проверяемого тождества
        lhs, rhs: LinMap с одинаковыми областью и кообластью

    Returns:
        AxiomCheck; при расхождении - свидетель с первым различающимся столбцом
    """
    if lhs.mat.shape != rhs.mat.shape:
        return AxiomCheck(
            name=name,
            passed=False,
            note=f"Несовпадение размеров {lhs.mat.shape} и {rhs.mat.shape}",
        )
    j = exactlin.first_difference(lhs.mat, rhs.mat)
    if j is None:
        return AxiomCheck(name=name, passed=True)
    K = lhs.mat.domain
    witness = Witness(
        index=j,
        label=lhs.src.basis_label(j),
        lhs=[exactlin.format_scalar(x, K) for x in exactlin.column(lhs.mat, j)],
        rhs=[exactlin.format_scalar(x, K) for x in exactlin.column(rhs.mat, j)],
    )
    return AxiomCheck(name=name, passed=False, witness=witness)


def failure(name: str, note: str) -> AxiomCheck:
    return AxiomCheck(name=name, passed=False, note=note)


def verdict(name: str, ok: bool, note: Optional[str] = None) -> AxiomCheck:
    return AxiomCheck(name=name, passed=ok, note=None if ok else note)


# Семейства проверок и их формулировки в тексте теории; ключ - первый
# сегмент имени после префикса стороны left./right.
AXIOM_REFERENCES = {
    "takeuchi": "Takeuchi (Def. 2.13 (i))",
    "delta": "Δ multiplicative (Def. 2.13 (ii))",
    "lambda": "Δ multiplicative (Def. 2.13 (ii))",
    "rho": "Δ multiplicative (Def. 2.13 (ii))",
    "comonoid": "comonoid in bimodules (Def. 2.13 (iii))",
    "counit": "counit (Def. 2.13 (iii))",
    "base_compat": "base compatibility (Eq. 3.1)",
    "mixed_coassoc": "mixed coassociativity (Eq. 3.2/3.3)",
    "antipode": "antipode (Eq. 3.4)",
    "cross_actions": "Δ bilinear over the other base (Thm 3.1)",
    "nu_R": "Δ bilinear over the other base (Thm 3.1)",
    "nu_L": "Δ bilinear over the other base (Thm 3.1)",
    "delta_L": "Δ bilinear over the other base (Thm 3.1)",
    "delta_R": "Δ bilinear over the other base (Thm 3.1)",
    "derived": "corollaries (§3.2)",
    "corollary": "corollaries (§3.2)",
}


def axiom_reference(name: str) -> Optional[str]:
    """Формулировка аксиомы для имени проверки или None, если семейство не размечено"""
    for side in ("left.", "right."):
        if name.startswith(side):
            name = name[len(side):]
            break
    return AXIOM_REFERENCES.get(name.split(".", 1)[0])
