"""
Простой скрипт для запуска проверяющего CLI - находится в КОРНЕ проекта

Примеры:
  python run_verifier.py verify data/heisenberg_z2.json
  python run_verifier.py build heisenberg_double --group Z2 --out /tmp/hd.json
  python run_verifier.py report-takeuchi data/heisenberg_z2.json
"""
import sys
from pathlib import Path

# --- ВАЖНО: загружаем .env файл в самом начале ---
try:
    from dotenv import load_dotenv

    env_path = Path(__file__).parent / ".env"
    if env_path.exists():
        load_dotenv(env_path)
except ImportError:
    pass  # python-dotenv не установлен, используем системные переменные окружения

sys.path.insert(0, str(Path(__file__).parent))

from src.cli import cli

if __name__ == "__main__":
    cli(obj={})
