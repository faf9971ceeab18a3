"""
Исключения библиотеки. Все ошибки наследуются от HopfoidError,
CLI переводит их в коды возврата.
"""
from typing import Optional, Sequence


class HopfoidError(Exception):
    """Базовая ошибка библиотеки"""


class NoSolution(HopfoidError):
    """Система x·through = target несовместна"""


class NotBalanced(HopfoidError):
    """Морфизм не пропускается через коуравнитель (не выполнено условие корректности)"""

    def __init__(self, message: str, condition: Optional[str] = None):
        super().__init__(message)
        self.condition = condition


class CommutationFailed(HopfoidError):
    """Образы α и β не коммутируют"""

    def __init__(self, message: str, witness: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.witness = tuple(witness) if witness is not None else None


class NotAGroup(HopfoidError):
    """Таблица умножения не задает группу"""

    def __init__(self, message: str, witness: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.witness = tuple(witness) if witness is not None else None


class BadCharacteristic(HopfoidError):
    """Конструкция не определена в данной характеристике"""


class AxiomFailure(HopfoidError):
    """Построенная структура не прошла проверку аксиом"""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ParseError(HopfoidError):
    """Некорректный файл структуры или аргументы"""


class ConfigError(ParseError):
    """Некорректное описание поля скаляров"""
