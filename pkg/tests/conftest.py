"""
Общие фикстуры: поля, маленькие алгебры Хопфа и удвоение Гейзенберга k[Z2].
"""
import sys
from pathlib import Path

import pytest

# Добавляем корень проекта в путь
sys.path.insert(0, str(Path(__file__).parent.parent))

from sympy import QQ

from src import exactlin
from src.constructions import cyclic_group_algebra, heisenberg_double, sweedler_h4

DATA_DIR = Path(__file__).parent.parent / "data"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: удвоение Гейзенберга размерности 16 и другие долгие проверки")


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(params=["rational", "prime:5"])
def field(request):
    return exactlin.parse_field(request.param)


@pytest.fixture(scope="session")
def kz2():
    return cyclic_group_algebra(2, QQ)


@pytest.fixture(scope="session")
def h4():
    return sweedler_h4(QQ)


@pytest.fixture(scope="session")
def heisenberg_z2():
    """Удвоение k[Z2] без самопроверки при построении"""
    return heisenberg_double(cyclic_group_algebra(2, QQ), verify=False)
