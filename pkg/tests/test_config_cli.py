from __future__ import annotations

import json
from dataclasses import replace
from pathlib import Path

import pytest

from stoforge import cli
from stoforge.config import ConfigError, PipelineConfig, load_config, parse_config_text
from stoforge.pipeline import PipelineError, run_pipeline
from stoforge.rdf import STO

EMPTY_TTL = "@prefix sto: <https://w3id.org/i40/sto#> .\n"


def test_parse_config_text():
    vals = parse_config_text("# c\ninput = a.ttl, b.ttl\nOFFLINE=true\n\n")
    assert vals == {"input": "a.ttl, b.ttl", "offline": "true"}
    with pytest.raises(ConfigError, match=":1: unknown key"):
        parse_config_text("colour = red")
    with pytest.raises(ConfigError, match=":2: expected"):
        parse_config_text("input = a\njust words")


def test_precedence_file_env_flags(tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text("input = kg.ttl\nendpoint = http://file/sparql\ntimeout = 5\npredicates = sto:relatedTo\n")
    cfg = load_config(conf, env={})
    assert cfg.inputs == [tmp_path / "kg.ttl"]
    assert cfg.endpoint.url == "http://file/sparql" and cfg.endpoint.timeout == 5
    assert cfg.predicates == (STO.relatedTo,)
    cfg = load_config(conf, env={"STOFORGE_ENDPOINT": "http://env/sparql", "STOFORGE_TIMEOUT": "7", "OTHER": "x"})
    assert cfg.endpoint.url == "http://env/sparql" and cfg.endpoint.timeout == 7
    cfg = load_config(conf, env={"STOFORGE_ENDPOINT": "http://env/sparql"}, overrides={"endpoint": "http://flag/s"})
    assert cfg.endpoint.url == "http://flag/s"
    with pytest.raises(ConfigError):
        load_config(conf, env={"STOFORGE_OFFLINE": "perhaps"})
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.conf")


def test_bundled_config_paths_exist():
    cfg = PipelineConfig.bundled()
    assert cfg.missing_paths() == []
    assert cfg.endpoint.offline and cfg.endpoint.cache_dir
    assert cfg.describe()["endpoint"]["min_interval_ms"] == 1000


def test_validate_prints_counts(capsys):
    assert cli.main(["validate"]) == 0
    out = capsys.readouterr().out
    assert "standards: 222" in out and "organizations: 42" in out and "triples:" in out


def test_syntax_error_exit_1_with_position(tmp_path, capsys):
    bad = tmp_path / "bad.ttl"
    bad.write_text(EMPTY_TTL + "sto:A sto:p sto:B .\nsto:C sto:p ( sto:D ) .\n")
    assert cli.main(["validate", "--input", str(bad)]) == 1
    assert f"{bad}:3:13" in capsys.readouterr().err


def test_missing_input_exit_1(tmp_path, capsys):
    assert cli.main(["pipeline", "--input", str(tmp_path / "nope.ttl"), "--out", str(tmp_path / "o")]) == 1
    assert "missing input" in capsys.readouterr().err


def test_unreachable_endpoint_exit_2_with_partial_manifest(tmp_path, monkeypatch):
    monkeypatch.setenv("STOFORGE_OFFLINE", "false")
    out = tmp_path / "out"
    code = cli.main(["pipeline", "--endpoint", "http://127.0.0.1:9/sparql", "--cache-dir", str(tmp_path / "c"),
                     "--out", str(out)])
    assert code == 2
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["status"] == "failed" and manifest["stages"][-1] == "metrics"
    assert "interlink" in manifest["error"] and "EndpointUnreachable" in manifest["error"]
    assert "metrics_after.csv" in manifest["outputs"]


def test_offline_cache_miss_is_endpoint_error(tmp_path):
    conf = PipelineConfig.bundled()
    cfg = replace(conf, endpoint=conf.endpoint.with_overrides(cache_dir=str(tmp_path)))
    with pytest.raises(PipelineError) as err:
        run_pipeline(cfg, write=False)
    assert err.value.exit_code == 2 and "CacheMiss" in str(err.value)


def test_invariant_violation_exit_3(tmp_path, monkeypatch):
    from stoforge import pipeline

    def broken(*args, **kwargs):
        raise pipeline.InvariantViolation("density out of range")

    monkeypatch.setattr(pipeline, "measure", broken)
    out = tmp_path / "out"
    assert cli.main(["pipeline", "--out", str(out)]) == 3
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["status"] == "failed" and "density out of range" in manifest["error"]


def test_empty_kg_runs_clean(tmp_path):
    kg = tmp_path / "empty.ttl"
    kg.write_text(EMPTY_TTL)
    out = tmp_path / "out"
    assert cli.main(["pipeline", "--input", str(kg), "--out", str(out)]) == 0
    metrics = json.loads((out / "metrics.json").read_text())
    assert metrics["before"]["node_count"] == 0 and metrics["after"]["density"] == 0.0


@pytest.mark.parametrize("command", sorted(cli.COMMAND_OUTPUTS))
def test_subcommands_write_their_files(command, tmp_path):
    out = tmp_path / command
    assert cli.main([command, "--out", str(out)]) == 0
    written = {p.name for p in out.iterdir()}
    assert written == set(cli.COMMAND_OUTPUTS[command]) | {"manifest.json"}


@pytest.mark.parametrize("command, marker", [("eval", "Criteria Total_Std"), ("mt", "class,n_datatype_props"),
                                             ("conflicts", "homonym:"), ("metrics", "metric,before,after"),
                                             ("export-dot", 'graph "closure"')])
def test_stdout_views(command, marker, capsys):
    assert cli.main([command]) == 0
    assert marker in capsys.readouterr().out


def test_flags_override_bundled_inputs(tmp_path, capsys):
    kg = Path(tmp_path / "one.ttl")
    kg.write_text(EMPTY_TTL + "sto:A a sto:Standard ; sto:relatedTo sto:B . sto:B a sto:Standard .\n")
    assert cli.main(["validate", "--input", str(kg), "--predicates", "sto:relatedTo"]) == 0
    assert "standards: 2" in capsys.readouterr().out
