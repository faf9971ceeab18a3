"""
Тесты файлов структур: схема, ошибки разбора, каноническая запись
"""
import json

import pytest

from src import exactlin
from src.bialgebroid import verify_left_bialgebroid, verify_right_bialgebroid
from src.constructions import (
    check_hopf_algebra, check_yetter_drinfeld, cyclic_group_algebra, dual_hopf, heisenberg_datum,
)
from src.errors import ParseError
from src.hopf_algebroid import verify_hopf_algebroid
from src.monoid_alg import check_monoid
from src.structure_file import (
    StructureFile, dump_structure, from_hopf_algebra, from_hopf_algebroid, from_structure,
    from_yd_datum, load_structure, parse_structure, save_structure, to_hopf_algebra,
    to_hopf_algebroid, to_monoid, to_structure, to_yd_datum,
)


def _raw(kz2) -> dict:
    return json.loads(dump_structure(from_hopf_algebra(kz2)))


@pytest.mark.parametrize("damage", [
    lambda raw: raw.update(extra=1),
    lambda raw: raw.update(kind="groupoid"),
    lambda raw: raw.update(field="prime:4"),
    lambda raw: raw.update(dims={"B": 2}),
    lambda raw: raw.update(dims={"A": -2}),
    lambda raw: raw["labels"].update(A=["1"]),
    lambda raw: raw["arrays"].update(mu=[["1"]]),
    lambda raw: raw["arrays"].pop("antipode"),
    lambda raw: raw["arrays"]["eps"][0].__setitem__(0, "x"),
    lambda raw: raw["arrays"]["eps"][0].__setitem__(0, "1/0"),
], ids=[
    "unknown_key", "unknown_kind", "bad_field", "wrong_dims", "negative_dim", "short_labels",
    "bad_shape", "missing_array", "bad_scalar", "zero_denominator",
])
def test_parse_errors(kz2, damage):
    raw = _raw(kz2)
    damage(raw)
    with pytest.raises(ParseError):
        parse_structure(json.dumps(raw))


def test_invalid_json():
    with pytest.raises(ParseError):
        parse_structure("{\"kind\": ")


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_structure(tmp_path / "absent.json")


def test_wrong_kind_for_reader(kz2):
    with pytest.raises(ParseError):
        to_hopf_algebroid(from_hopf_algebra(kz2))


def test_denominator_vanishing_in_prime_field(kz2):
    raw = _raw(kz2)
    raw["field"] = "prime:3"
    raw["arrays"]["eps"][0][0] = "1/3"
    with pytest.raises(ParseError):
        parse_structure(json.dumps(raw))


def test_fixture_group_algebra(data_dir, kz2):
    sf = load_structure(data_dir / "group_algebra_z2.json")
    assert json.loads(dump_structure(sf)) == json.loads(dump_structure(from_hopf_algebra(kz2)))
    assert check_hopf_algebra(to_hopf_algebra(sf)).passed


def test_fixture_sweedler(data_dir, h4):
    sf = load_structure(data_dir / "sweedler_h4.json")
    assert json.loads(dump_structure(sf)) == json.loads(dump_structure(from_hopf_algebra(h4)))


def test_monoid_reader_accepts_hopf_algebra(data_dir):
    m = to_monoid(load_structure(data_dir / "sweedler_h4.json"))
    assert m.dim == 4
    assert check_monoid(m).passed


def test_dim_zero_fixture(data_dir):
    sf = load_structure(data_dir / "monoid_dim0.json")
    assert sf.dims == {"A": 0}
    assert check_monoid(to_monoid(sf)).passed


def test_scalars_are_normalized(kz2):
    raw = _raw(kz2)
    raw["arrays"]["eps"] = [["2/2", 1]]
    assert json.loads(dump_structure(parse_structure(json.dumps(raw))))["arrays"]["eps"] == [["1", "1"]]


def test_dump_is_idempotent(h4):
    text = dump_structure(from_hopf_algebra(h4))
    assert dump_structure(parse_structure(text)) == text
    assert text.endswith("}\n")


def test_dual_twice_gives_same_file(h4):
    twice = dual_hopf(dual_hopf(h4))
    assert dump_structure(from_hopf_algebra(twice)) == dump_structure(from_hopf_algebra(h4))


def test_prime_field_file(field):
    a = cyclic_group_algebra(3, field)
    sf = from_hopf_algebra(a)
    assert sf.field == exactlin.field_spec(field)
    assert dump_structure(from_hopf_algebra(to_hopf_algebra(sf))) == dump_structure(sf)


def test_save_and_load(tmp_path, kz2):
    path = tmp_path / "nested" / "kz2.json"
    save_structure(from_hopf_algebra(kz2), path)
    assert isinstance(load_structure(path), StructureFile)
    assert path.read_text(encoding="utf-8") == dump_structure(from_hopf_algebra(kz2))


def test_heisenberg_double_round_trip(heisenberg_z2):
    sf = from_hopf_algebroid(heisenberg_z2)
    assert sf.dims == {"L": 2, "R": 2, "total": 4}
    assert sf.shape("delta_L") == (16, 4)
    restored = to_hopf_algebroid(parse_structure(dump_structure(sf)))
    assert verify_hopf_algebroid(restored).passed
    assert dump_structure(from_hopf_algebroid(restored)) == dump_structure(sf)


@pytest.mark.parametrize("side, verify", [
    ("left", verify_left_bialgebroid),
    ("right", verify_right_bialgebroid),
])
def test_bialgebroid_round_trip(heisenberg_z2, side, verify):
    sf = from_structure(getattr(heisenberg_z2, side))
    assert sf.kind == f"{side}_bialgebroid"
    assert verify(to_structure(parse_structure(dump_structure(sf)))).passed


def test_yd_datum_round_trip(kz2):
    sf = from_yd_datum(heisenberg_datum(kz2))
    assert sf.kind == "yd_datum"
    assert check_yetter_drinfeld(to_yd_datum(parse_structure(dump_structure(sf)))).passed


def test_missing_field_takes_default(kz2):
    raw = _raw(kz2)
    del raw["field"]
    sf = parse_structure(json.dumps(raw), default_field="prime:3")
    assert sf.field == "prime:3"
    assert json.loads(dump_structure(sf))["field"] == "prime:3"


def test_missing_field_falls_back_to_config(kz2, monkeypatch):
    from config import config
    monkeypatch.setattr(config, "FIELD", "prime:5")
    raw = _raw(kz2)
    del raw["field"]
    assert parse_structure(json.dumps(raw)).field == "prime:5"


def test_explicit_field_ignores_default(kz2):
    assert parse_structure(json.dumps(_raw(kz2)), default_field="prime:3").field == "rational"
