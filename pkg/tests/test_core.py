import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Literal, Optional

import pytest
from fastcore.test import test_eq, test_fail

from cjm_water_wave_lab.core.config import (ExperimentConfig, config_echo, config_from_mapping, config_schema,
                                            load_config, smoke_config)
from cjm_water_wave_lab.core.dataclass import SCHEMA_DESC, SCHEMA_MIN, dataclass_to_jsonschema
from cjm_water_wave_lab.core.errors import ConfigError, RejectedInputError, SteepnessError, WaterWaveLabError
from cjm_water_wave_lab.core.parser import SchemaParser
from cjm_water_wave_lab.core.records import (RunRecord, format_number, run_directory, write_json, write_rows_csv)
from cjm_water_wave_lab.core.types import SchemaProperty

FILES = Path(__file__).parent.parent / "test_files"

# Schema properties and coercion

def test_property_coercion():
    test_eq(SchemaProperty("n", {"type": "integer"}).coerce(" 12 "), 12)
    test_eq(SchemaProperty("x", {"type": "number"}).coerce("1e-3"), 1e-3)
    flag = SchemaProperty("flag", {"type": "boolean"})
    test_eq(flag.coerce("yes"), True)
    test_eq(flag.coerce("0"), False)
    nullable = SchemaProperty("dt", {"type": ["number", "null"]})
    test_eq(nullable.is_nullable, True)
    test_eq(nullable.type, "number")
    test_eq(nullable.coerce("auto"), None)
    test_eq(nullable.coerce("0.5"), 0.5)
    seq = SchemaProperty("seeds", {"type": "array", "items": {"type": "integer"}})
    test_eq(seq.item_type, "integer")
    test_eq(seq.coerce("0, 1, 2"), [0, 1, 2])
    test_eq(seq.coerce("[3,4]"), [3, 4])
    test_eq(seq.coerce(""), [])

def test_property_coercion_errors():
    with pytest.raises(ConfigError) as err:
        SchemaProperty("modes", {"type": "integer"}).coerce("many")
    test_eq(err.value.key, "modes")
    test_fail(lambda: SchemaProperty("flag", {"type": "boolean"}).coerce("maybe"), contains="boolean")

# Dataclass schemas

@dataclass
class _Sample:
    count: int = field(default=3, metadata={SCHEMA_MIN: 1, SCHEMA_DESC: "How many"})
    scale: Optional[float] = None
    tags: List[int] = field(default_factory=lambda: [1, 2])
    mode: Literal["a", "b"] = "a"

def test_dataclass_to_jsonschema():
    schema = dataclass_to_jsonschema(_Sample)
    props = schema["properties"]
    test_eq(props["count"], {"type": "integer", "minimum": 1, "description": "How many", "default": 3})
    test_eq(props["scale"]["type"], ["number", "null"])
    test_eq(props["tags"], {"type": "array", "items": {"type": "integer"}, "default": [1, 2]})
    test_eq(props["mode"]["enum"], ["a", "b"])
    test_eq(schema["additionalProperties"], False)
    test_fail(lambda: dataclass_to_jsonschema(int), contains="not a dataclass")

# Parser

def test_parser_reads_flat_text():
    parser = SchemaParser(config_schema())
    values = parser.parse_text("# comment\nmodes = 128  # inline\n\nnonlinear = false\nepsilon-grid = 0.1, 0.2\n")
    test_eq(values, {"modes": 128, "nonlinear": False, "epsilon_grid": [0.1, 0.2]})
    test_fail(lambda: parser.parse_text("colour = red"), contains="unknown key")
    test_fail(lambda: parser.parse_text("modes = 64\nmodes = 32"), contains="duplicate")
    test_fail(lambda: parser.parse_text("modes 64"), contains="expected")

def test_parser_defaults_cover_config():
    defaults = SchemaParser(config_schema()).defaults()
    test_eq(defaults["modes"], 256)
    test_eq(defaults["gamma"], 4.25)
    test_eq(defaults["horizon"], None)

# Config loading and constraints

def test_default_config():
    cfg = load_config()
    test_eq(cfg, ExperimentConfig())
    test_eq(cfg.resolved_horizon(0.01), 10 / 0.01**2)
    test_eq(cfg.resolved_horizon(0.0), 0.0)
    xi_max = math.pi * 256 / 200
    test_eq(cfg.resolved_dt(), 0.1 * min(1.0, 2 * math.pi / math.sqrt(xi_max)))

def _constraint(values):
    with pytest.raises(ConfigError) as err:
        config_from_mapping(values)
    return err.value

def test_constraint_chain():
    test_eq(_constraint({"gamma": 4.5}).constraint, "2*gamma not in Z")
    test_eq(_constraint({"s": 17.0}).constraint, "s > 17.5")
    test_eq(_constraint({"s": 18.0, "rho": 15.0}).constraint, "s > rho + 3.5")
    # Exponent chain only binds lifespan experiments
    test_eq(config_from_mapping({"experiment": "strichartz", "s": 2.0}).s, 2.0)
    test_eq(_constraint({"cutoff_inner": 0.2}).key, "cutoff_inner")

def test_schema_violations_name_the_key():
    err = _constraint({"modes": 255})
    test_eq(err.key, "modes")
    test_eq(err.constraint, "multipleOf")
    test_eq(_constraint({"experiment": "plot"}).key, "experiment")
    test_eq(_constraint({"checks": ["no_such_check"]}).key, "checks")
    test_eq(_constraint({"experiment": "sweep-epsilon", "epsilon_grid": [0.1, 0.2], "seeds": [0, 1]}).key,
            "epsilon_grid")
    test_eq(_constraint({"experiment": "sweep-period"}).key, "period_grid")

def test_load_config_files():
    cfg = load_config(FILES / "simulate_smoke.cfg")
    test_eq((cfg.modes, cfg.circumference, cfg.seeds, cfg.horizon), (64, 40.0, [0, 1], 1.0))
    test_eq(load_config(FILES / "simulate_smoke.cfg", master_seed=7).master_seed, 7)
    test_eq(load_config(FILES / "sweep_epsilon.cfg").horizon, None)
    test_eq(_load_error(FILES / "bad_gamma.cfg").constraint, "2*gamma not in Z")
    test_fail(lambda: load_config(FILES / "missing.cfg"), contains="not found")

def _load_error(path):
    with pytest.raises(ConfigError) as err:
        load_config(path)
    return err.value

def test_config_echo_reloads(tmp_path):
    cfg = config_from_mapping({"epsilon_grid": [0.02, 0.04, 0.08], "seeds": [0, 1], "dt": 0.05,
                               "checks": ["parseval"], "nonlinear": False})
    path = tmp_path / "echo.cfg"
    path.write_text(config_echo(cfg))
    test_eq(load_config(path), cfg)

def test_smoke_config():
    cfg = smoke_config(ExperimentConfig(seeds=[0, 1, 2, 3], horizon=None))
    test_eq(cfg.modes, 64)
    test_eq(cfg.horizon, 10.0)
    test_eq(cfg.seeds, [0, 1])
    test_eq(cfg.strichartz_blocks, [0, 1, 2])
    test_eq(smoke_config(ExperimentConfig(loss_period=64.0)).loss_period, 16.0)
    test_eq((cfg.envelope_center, cfg.envelope_width), (1.0, 1.0))

# Errors

def test_error_hierarchy():
    err = SteepnessError(0.7, 0.5)
    assert isinstance(err, RejectedInputError) and isinstance(err, ValueError)
    assert isinstance(err, WaterWaveLabError)
    test_eq((err.steepness, err.limit), (0.7, 0.5))
    assert "0.7" in str(err)

# Records

@dataclass
class _Row:
    time: float
    label: str
    ok: bool

def test_format_number():
    test_eq(format_number(0.1), "0.10000000000000001")
    test_eq(format_number(True), "true")
    test_eq(format_number(None), "")
    test_eq(format_number(3), "3")

def test_write_rows_csv(tmp_path):
    path = write_rows_csv(tmp_path / "a" / "rows.csv", [_Row(0.5, "x", True), _Row(1 / 3, "y", False)])
    data = path.read_bytes()
    test_eq(data.split(b"\r\n")[0], b"time,label,ok")
    test_eq(data.split(b"\r\n")[2], b"0.33333333333333331,y,false")
    test_fail(lambda: write_rows_csv(tmp_path / "empty.csv", []), contains="zero rows")
    empty = write_rows_csv(tmp_path / "header.csv", [], ["time"])
    test_eq(empty.read_bytes(), b"time\r\n")

def test_write_json_and_run_directory(tmp_path):
    path = write_json(tmp_path / "s.json", {"fit": float('nan'), "row": _Row(1.0, "z", True)})
    text = path.read_text()
    assert '"nan"' in text and '"label": "z"' in text
    out = run_directory(tmp_path, "simulate", "stamp")
    test_eq(out, tmp_path / "simulate" / "stamp")
    assert (out / "runs").is_dir()

def test_run_record_growth():
    record = RunRecord()
    record.note_growth(1.0, 1.5, 2.0, 10.0)
    test_eq(record.lifespan, None)
    record.note_growth(2.0, 2.5, 2.0, 10.0)
    record.note_growth(3.0, 11.0, 2.0, 10.0)
    record.note_growth(4.0, 12.0, 2.0, 10.0)
    test_eq((record.lifespan, record.lifespan_blowup), (2.0, 3.0))
    test_eq(record.summary()["schema_version"], "1.0")
