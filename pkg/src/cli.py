"""
Командная строка: проверка файлов структур, построение примеров и отчет
о произведении Такеучи.

Коды возврата: 0 - все проверки пройдены, 1 - нарушена аксиома,
2 - некорректный файл или аргументы.
"""
import json
import logging
import re
import sys
from pathlib import Path
from typing import Callable, List, Optional

import click

# Корень проекта в sys.path, чтобы работал запуск `python src/cli.py`
sys.path.insert(0, str(Path(__file__).parent.parent))

from config import config
from src import exactlin
from src.bialgebroid import (
    LeftBialgebroidData, RightBialgebroidData, check_section_independence, takeuchi_summary,
    verify_left_bialgebroid, verify_right_bialgebroid,
)
from src.constructions import (
    HopfAlgebraData, YDModuleAlgebra, check_hopf_algebra, check_yetter_drinfeld,
    cyclic_group_algebra, dual_hopf, heisenberg_datum, heisenberg_double,
    smash_product, sweedler_h4, symmetric_group_algebra,
)
from src.errors import AxiomFailure, BadCharacteristic, HopfoidError, NotAGroup, NotBalanced, ParseError
from src.hopf_algebroid import HopfAlgebroidData, verify_hopf_algebroid
from src.monoid_alg import MonoidData, check_monoid
from src.report import Report, axiom_reference
from src.structure_file import from_structure, load_structure, save_structure, to_structure

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

BUILD_KINDS = ["group_algebra", "sweedler_h4", "dual", "smash", "heisenberg_double", "heisenberg_datum"]


def verify_structure(obj) -> Report:
    """Проверка, соответствующая типу данных"""
    if isinstance(obj, HopfAlgebroidData):
        return verify_hopf_algebroid(obj)
    if isinstance(obj, LeftBialgebroidData):
        return verify_left_bialgebroid(obj)
    if isinstance(obj, RightBialgebroidData):
        return verify_right_bialgebroid(obj)
    if isinstance(obj, YDModuleAlgebra):
        return check_yetter_drinfeld(obj)
    if isinstance(obj, HopfAlgebraData):
        return check_hopf_algebra(obj)
    if isinstance(obj, MonoidData):
        return check_monoid(obj)
    raise TypeError(f"Нет проверки для {type(obj).__name__}")


def section_report(obj, trials: int) -> Report:
    """Независимость ρ и λ от сечения для каждого биалгеброида структуры"""
    if isinstance(obj, HopfAlgebroidData):
        sides = [("left.", obj.left), ("right.", obj.right)]
    elif isinstance(obj, (LeftBialgebroidData, RightBialgebroidData)):
        sides = [("", obj)]
    else:
        raise ParseError("Проверка сечений определена только для биалгеброидов и хопфовых алгеброидов")
    return Report.merge(check_section_independence(d, trials).prefixed(prefix) for prefix, d in sides)


def resolve_path(path: str) -> Path:
    """Путь как есть, а если такого файла нет - относительно config.DATA_DIR"""
    p = Path(path)
    if not p.exists() and not p.is_absolute() and (Path(config.DATA_DIR) / p).exists():
        return Path(config.DATA_DIR) / p
    return p


def load_input(ctx: click.Context, path: str):
    """Структура из файла; файл без ключа field читается над полем --field"""
    return to_structure(load_structure(resolve_path(path), ctx.obj["field"]))


def format_report(report: Report) -> str:
    """Таблица проверок: по строке на аксиому, под нарушенной - свидетель"""
    lines: List[str] = []
    for c in report.checks:
        ref = axiom_reference(c.name)
        lines.append(f"{'✅' if c.passed else '❌'} {c.name}" + (f"  [{ref}]" if ref else ""))
        if c.witness is not None:
            w = c.witness
            lines.append(f"    на {w.label} (#{w.index}):")
            lines.append(f"      слева:  [{', '.join(w.lhs)}]")
            lines.append(f"      справа: [{', '.join(w.rhs)}]")
        if c.note:
            lines.append(f"    {c.note}")
    failed = report.failed_names()
    if failed:
        lines.append(f"FAIL: нарушено {len(failed)} из {len(report.checks)}")
    else:
        lines.append(f"PASS: {len(report.checks)} проверок")
    return "\n".join(lines)


def parse_group(name: str, K) -> HopfAlgebraData:
    """'Z<n>' - циклическая группа, 'S<n>' - симметрическая (n ≤ 4)"""
    match = re.fullmatch(r"([ZS])(\d+)", name.strip())
    if not match:
        raise click.BadParameter(f"Ожидается Z<n> или S<n>, получено '{name}'", param_hint="--group")
    n = int(match.group(2))
    if match.group(1) == "Z":
        if n < 1:
            raise click.BadParameter("Порядок циклической группы должен быть положительным", param_hint="--group")
        return cyclic_group_algebra(n, K)
    if not 1 <= n <= 4:
        raise click.BadParameter("Поддерживаются S1..S4", param_hint="--group")
    return symmetric_group_algebra(n, K)


def _run(action: Callable[[], int]) -> None:
    """Выполняет команду и переводит исключения библиотеки в коды возврата"""
    try:
        code = action()
    except (ParseError, BadCharacteristic, NotAGroup) as e:
        click.echo(f"❌ Ошибка: {e}", err=True)
        code = EXIT_USAGE
    except AxiomFailure as e:
        click.echo(f"❌ {e}", err=True)
        if e.report is not None:
            click.echo(format_report(e.report))
        code = EXIT_FAILED
    except HopfoidError as e:
        click.echo(f"❌ {e}", err=True)
        code = EXIT_FAILED
    sys.exit(code)


@click.group()
@click.option("--field", "field_spec", default=None,
              help="Поле скаляров для построителей и файлов без ключа field: rational или prime:<p> (по умолчанию HOPFOID_FIELD)")
@click.pass_context
def cli(ctx: click.Context, field_spec: Optional[str]):
    """Точная проверка аксиом биалгеброидов и хопфовых алгеброидов"""
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    )
    ctx.ensure_object(dict)
    ctx.obj["field"] = field_spec or config.FIELD


@cli.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Вывести отчет в JSON")
@click.option("--sections", default=0, type=click.IntRange(min=0),
              help="Сколько случайных сечений π сравнить с каноническим (для биалгеброидов)")
@click.pass_context
def verify(ctx: click.Context, path: str, as_json: bool, sections: int):
    """Проверяет все аксиомы структуры из файла PATH"""

    def action() -> int:
        obj = load_input(ctx, path)
        report = verify_structure(obj)
        if sections:
            report.extend(section_report(obj, sections))
        click.echo(report.model_dump_json(indent=2) if as_json else format_report(report))
        return EXIT_OK if report.passed else EXIT_FAILED

    _run(action)


@cli.command()
@click.argument("kind", type=click.Choice(BUILD_KINDS))
@click.option("--group", "group", default=None, help="Группа: Z<n> или S<n>")
@click.option("--input", "input_path", default=None, type=click.Path(dir_okay=False),
              help="Входной файл (алгебра Хопфа или данные Йеттера-Дринфельда)")
@click.option("--orientation", type=click.Choice(["self", "dual"]), default="self",
              help="Для heisenberg_double: база A (self) или A* (dual)")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False), help="Куда записать результат")
@click.pass_context
def build(ctx: click.Context, kind: str, group: Optional[str], input_path: Optional[str],
          orientation: str, out_path: str):
    """Строит структуру KIND и записывает ее в файл"""

    def hopf_source(K) -> HopfAlgebraData:
        if group is not None:
            return parse_group(group, K)
        if input_path is not None:
            obj = load_input(ctx, input_path)
            if not isinstance(obj, HopfAlgebraData):
                raise ParseError(f"Файл {input_path} не описывает алгебру Хопфа")
            return obj
        raise click.UsageError(f"Для '{kind}' нужен --group или --input")

    def action() -> int:
        K = exactlin.parse_field(ctx.obj["field"])
        if kind == "group_algebra":
            if group is None:
                raise click.UsageError("Для group_algebra нужен --group")
            result = parse_group(group, K)
        elif kind == "sweedler_h4":
            result = sweedler_h4(K)
        elif kind == "dual":
            if input_path is None:
                raise click.UsageError("Для dual нужен --input")
            obj = load_input(ctx, input_path)
            if not isinstance(obj, HopfAlgebraData):
                raise ParseError(f"Файл {input_path} не описывает алгебру Хопфа")
            result = dual_hopf(obj)
        elif kind == "smash":
            if input_path is not None:
                obj = load_input(ctx, input_path)
                if not isinstance(obj, YDModuleAlgebra):
                    raise ParseError(f"Файл {input_path} не описывает данные Йеттера-Дринфельда")
                result = smash_product(obj)
            else:
                result = smash_product(heisenberg_datum(hopf_source(K)))
        elif kind == "heisenberg_double":
            result = heisenberg_double(hopf_source(K), orientation=orientation)
        else:
            result = heisenberg_datum(hopf_source(K))
        save_structure(from_structure(result), out_path)
        click.echo(f"✅ {kind}: записано в {out_path}")
        return EXIT_OK

    _run(action)


@cli.command("report-takeuchi")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Вывести размерности в JSON")
@click.pass_context
def report_takeuchi(ctx: click.Context, path: str, as_json: bool):
    """Размерности H⊗_L H, подпространства Такеучи и образа Δ"""

    def action() -> int:
        obj = load_input(ctx, path)
        if isinstance(obj, HopfAlgebroidData):
            sides = [obj.left, obj.right]
        elif isinstance(obj, (LeftBialgebroidData, RightBialgebroidData)):
            sides = [obj]
        else:
            raise ParseError(f"Отчет Такеучи строится только для биалгеброидов, файл {path} другого типа")
        try:
            summaries = [takeuchi_summary(d) for d in sides]
        except NotBalanced as e:
            click.echo(f"❌ Действие H⊗H на факторе не определено: {e}")
            return EXIT_FAILED
        if as_json:
            click.echo(json.dumps([s.model_dump() for s in summaries], indent=2, ensure_ascii=False))
        else:
            for s in summaries:
                mark = "✅" if s.contained else "❌"
                click.echo(f"[{s.side}] балансное произведение: {s.balanced_dim}")
                click.echo(f"[{s.side}] подпространство Такеучи: {s.takeuchi_dim}")
                click.echo(f"[{s.side}] образ Δ: {s.image_dim}")
                click.echo(f"[{s.side}] {mark} образ Δ в подпространстве Такеучи: {s.contained}")
        return EXIT_OK if all(s.contained for s in summaries) else EXIT_FAILED

    _run(action)


if __name__ == "__main__":
    cli(obj={})
