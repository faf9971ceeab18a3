import os
from dataclasses import dataclass
from pathlib import Path

# Загружаем переменные окружения из .env файла
try:
    from dotenv import load_dotenv
    # Загружаем .env из корня проекта
    load_dotenv(Path(__file__).parent / ".env")
except ImportError:
    pass  # python-dotenv не установлен, но это ок


@dataclass
class Config:
    # Поле скаляров по умолчанию: "rational" или "prime:<p>"
    FIELD: str = "rational"

    # Уровень логирования
    LOG_LEVEL: str = "INFO"

    # Путь к готовым файлам структур
    DATA_DIR: str = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")

    # Зерно для случайных сечений коуравнителей (самопроверки независимости)
    RANDOM_SEED: int = 0

    def __post_init__(self):
        # Значения из окружения имеют приоритет над значениями по умолчанию
        self.FIELD = os.getenv("HOPFOID_FIELD", self.FIELD).strip()
        self.LOG_LEVEL = os.getenv("HOPFOID_LOG_LEVEL", self.LOG_LEVEL).upper()
        self.RANDOM_SEED = int(os.getenv("HOPFOID_RANDOM_SEED", str(self.RANDOM_SEED)))


config = Config()
