import json
import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path

import pytest
from click.testing import CliRunner

from twistmat import cli as cli_module
from twistmat.cli import main

GOLD = Path(__file__).resolve().parent / "data" / "fingen_gold.csv"
F2 = '{"kind": "finite_field", "p": 2}'
R_F = '{"kind": "localized_poly", "p": 2, "t_inverted": true, "inverted": ["t^3+t+1"]}'


@pytest.fixture
def run(tmp_path):
    runner = CliRunner()

    def invoke(*args: str):
        return runner.invoke(main, [*args, "--out-dir", str(tmp_path)])

    return invoke


def _result(tmp_path: Path, stem: str) -> dict:
    return json.loads((tmp_path / f"{stem}.json").read_text(encoding="utf-8"))["result"]


def test_fingen_table_matches_gold(run, tmp_path):
    result = run("fingen-table", "--standard-rings", "--n", "4", "--format", "csv")
    assert result.exit_code == 0, result.output
    assert (tmp_path / "fingen-table.csv").read_text(encoding="utf-8") == GOLD.read_text(encoding="utf-8")
    assert not (tmp_path / "fingen-table.json").exists()
    assert (tmp_path / "fingen-table.timing.json").exists()


def test_reidemeister_identity_counts_classes(run, tmp_path):
    result = run("reidemeister", "--ring", F2, "--n", "4", "--set-i", "2,3")
    assert result.exit_code == 0, result.output
    body = _result(tmp_path, "reidemeister")
    assert body["order"] == 64
    assert body["reidemeister"] == body["conjugacy_classes"] == 16
    assert sum(body["class_sizes"]) == 64


def test_reidemeister_on_quotient_with_flip(run, tmp_path):
    result = run("reidemeister", "--ring", F2, "--quotient", "mod_commutator_u", "--aut", '[{"atom": "flip"}]',
                 "--name", "flip")
    assert result.exit_code == 0, result.output
    body = _result(tmp_path, "flip")
    assert body["order"] == 8
    assert body["conjugacy_classes"] is None
    assert body["automorphism"]["quotient"] == "mod_commutator_u"
    assert 1 <= body["reidemeister"] <= 8


def test_reports_are_reproducible(run, tmp_path):
    args = ("reidemeister", "--ring", F2, "--aut", '[{"atom": "flip"}]', "--format", "both")
    assert run(*args).exit_code == 0
    first = {p.name: p.read_bytes() for p in tmp_path.glob("reidemeister.*") if "timing" not in p.name}
    assert sorted(first) == ["reidemeister.csv", "reidemeister.json"]
    assert run(*args).exit_code == 0
    for name, data in first.items():
        assert (tmp_path / name).read_bytes() == data


def test_verify_relations(run, tmp_path):
    result = run("verify-relations", "--ring", '{"kind": "s_integers", "primes": [2, 3]}', "--samples", "20")
    assert result.exit_code == 0, result.output
    body = _result(tmp_path, "verify-relations")
    assert body["passed"]
    assert all(row["samples"] == 20 for row in body["relations"])


def test_fix_family(run, tmp_path):
    result = run("fix-family", "--ring", R_F, "--count", "5")
    assert result.exit_code == 0, result.output
    body = _result(tmp_path, "fix-family")
    assert body["verified"] == body["count"] == 5
    assert body["finite_generation"]["condition"] == "(ii)"
    assert body["infinite_reidemeister"]


def test_fix_family_with_flip(run, tmp_path):
    result = run("fix-family", "--eps", "1", "--d-c=-1,1,1,-1", "--count", "4")
    assert result.exit_code == 0, result.output
    assert _result(tmp_path, "fix-family")["d_c"] == ["-1", "1", "1", "-1"]


def test_box_search(run, tmp_path):
    result = run("box-search", "--map", "psi_d2_minus", "--bound", "2")
    assert result.exit_code == 0, result.output
    body = _result(tmp_path, "box-search")
    assert body["box_size"] == 125
    assert body["only_identity"]


def test_ring_aut_search(run, tmp_path):
    result = run("ring-aut-search", "--ring", R_F, "--bound", "3")
    assert result.exit_code == 0, result.output
    body = _result(tmp_path, "ring-aut-search")
    assert body["count"] == 1
    assert body["survivors"] == ["id"]
    assert body["f"] == "t^3+t+1"
    assert body["f_irreducible"]
    assert not body["f_self_reciprocal"]


def test_aut_enum(run, tmp_path):
    result = run("aut-enum", "--ring", F2, "--quotient", "mod_commutator_u")
    assert result.exit_code == 0, result.output
    body = _result(tmp_path, "aut-enum")
    assert (body["order"], body["count"]) == (8, 168)
    assert body["slot_fixed_counts"]["2"] == 2


def test_config_file_and_flag_override(run, tmp_path):
    config = tmp_path / "exp.yaml"
    config.write_text("ring:\n  kind: finite_field\n  p: 2\ngroup:\n  quotient: mod_center_u4\n", encoding="utf-8")
    result = run("reidemeister", "--config", str(config), "--name", "center")
    assert result.exit_code == 0, result.output
    assert _result(tmp_path, "center")["order"] == 32


@pytest.mark.parametrize(
    "args",
    [
        ("reidemeister", "--ring", '{"kind": "reals"}'),
        ("reidemeister", "--ring", "{not json"),
        ("reidemeister", "--set-i", "a,b"),
        ("reidemeister", "--n", "1"),
        ("reidemeister", "--format", "xml"),
        ("reidemeister", "--config", "does-not-exist.yaml"),
        ("reidemeister", "--aut", '[{"atom": "nope"}]'),
        ("fix-family", "--alpha", "bogus"),
        ("box-search", "--map", "nope"),
    ],
)
def test_usage_errors_exit_2(run, args):
    assert run(*args).exit_code == 2


@pytest.mark.parametrize(
    "args",
    [
        ("reidemeister",),
        ("reidemeister", "--ring", F2, "--limit", "10"),
        ("ring-aut-search",),
        ("fix-family", "--set-i", "2"),
    ],
)
def test_computation_errors_exit_1(run, args):
    result = run(*args)
    assert result.exit_code == 1
    assert "Error:" in result.output


def test_limit_from_environment(run, monkeypatch):
    monkeypatch.setenv("TWISTMAT_LIMIT", "63")
    assert run("reidemeister", "--ring", F2, "--limit", "1000").exit_code == 1


def test_no_log_file_when_logging_is_already_configured(tmp_path, monkeypatch):
    created = []
    monkeypatch.setattr(cli_module, "RotatingFileHandler", lambda *args, **kwargs: created.append(args))
    monkeypatch.setattr(logging.getLogger(), "handlers", [logging.NullHandler()])
    cli_module._setup_logging(tmp_path)
    assert created == []
    assert not (tmp_path / "logs").exists()


def test_log_file_attached_to_bare_root_logger(tmp_path, monkeypatch):
    root = logging.getLogger()
    monkeypatch.setattr(root, "handlers", [])
    cli_module._setup_logging(tmp_path)
    try:
        assert len(root.handlers) == 1
        assert isinstance(root.handlers[0], RotatingFileHandler)
    finally:
        root.handlers[0].close()
    assert (tmp_path / "logs" / "twistmat.log").exists()
