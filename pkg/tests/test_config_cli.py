import json
import math
import os
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abrealism import cli, verify
from abrealism.classical import GaugeChoice, PhaseProfile
from abrealism.config import (
    ConfigError,
    GridSpec,
    MeasureSpec,
    RunConfig,
    load_config,
    parse_config,
    parse_real,
)
from abrealism.figures import FIGURES, figure_records
from abrealism.sweep import format_number, read_csv, records_to_csv, sweep_records

ROOT = Path(__file__).resolve().parents[1]
CONFIGS = sorted((ROOT / "configs").glob("*.ini"))

reals = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
names = st.from_regex(r"[A-Za-z][A-Za-z0-9_\-]{0,10}", fullmatch=True)


def test_parse_real():
    assert parse_real("pi/5") == pytest.approx(math.pi / 5)
    assert parse_real("-2*pi/25") == pytest.approx(-2 * math.pi / 25)
    assert parse_real("1e-9") == 1e-9
    for bad in ("import os", "pi(", "x", "1/0", "__import__('os')"):
        with pytest.raises(ConfigError):
            parse_real(bad)


def test_shipped_configs_parse():
    assert {p.name for p in CONFIGS} == {"standard.ini", "classical_ab.ini", "quantized_ab.ini"}
    for path in CONFIGS:
        cfg = load_config(path)
        assert parse_config(cfg.to_text()) == cfg


@st.composite
def classical_configs(draw):
    profile = draw(st.one_of(st.just(PhaseProfile.zero()), reals.map(PhaseProfile.linear)))
    measures = []
    for name in draw(st.lists(names, min_size=1, max_size=4, unique=True)):
        obs = draw(st.sampled_from(["sigma_z", "sigma_g", "sigma_gA"]))
        g = draw(st.one_of(st.just("f"), reals.map(PhaseProfile.linear)))
        base = draw(st.one_of(st.none(), st.floats(1.5, 30)))
        measures.append(MeasureSpec(name, obs, g, draw(reals), 0, base, draw(st.one_of(st.none(), st.integers(2, 9)))))
    start = draw(st.floats(0, 1.5))
    return RunConfig(
        kind="classical-ab",
        f=profile,
        phi_ab=draw(reals),
        gauge=GaugeChoice(tuple(draw(st.lists(reals, max_size=3))), tuple(draw(st.lists(reals, max_size=3)))),
        grid=GridSpec(start, draw(st.floats(start + 0.01, math.pi)), draw(st.integers(2, 5000)), draw(st.floats(0, 1e-3))),
        measures=tuple(measures),
        csv=draw(st.one_of(st.none(), st.just("out.csv"))),
    )


@settings(max_examples=60, deadline=None)
@given(classical_configs())
def test_config_round_trip(cfg):
    assert parse_config(cfg.to_text()) == cfg


@settings(max_examples=30, deadline=None)
@given(ms=st.sets(st.integers(-4, 4), min_size=1), qk=reals, m=st.integers(-4, 4))
def test_quantized_config_round_trip(ms, qk, m):
    cfg = RunConfig(
        kind="quantized-ab",
        ell=4,
        qK=qk,
        populated=tuple(sorted(ms)),
        f=PhaseProfile.tabulated([0, 1, math.pi], [0, 0.5, 2]),
        measures=(MeasureSpec("b", "branch", m=m), MeasureSpec("X", "Sigma_x", base=26.0, normalization_dim=26)),
    )
    assert parse_config(cfg.to_text()) == cfg


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("[scenario]\nkind = sideways\n[measure a]\nobservable = sigma_z\n", "kind"),
        ("[scenario]\nkind = standard\n", "no measures"),
        ("[scenario]\nkind = standard\n[grid]\ncount = 1\n[measure a]\nobservable = sigma_z\n", "count"),
        ("[scenario]\nkind = standard\n[grid]\nend = 4\n[measure a]\nobservable = sigma_z\n", "grid"),
        ("[scenario]\nkind = standard\n[measure a]\nobservable = Sigma_x\n", "not available"),
        ("[scenario]\nkind = standard\nphi_ab = 1\n[measure a]\nobservable = sigma_z\n", "flux"),
        ("[scenario]\nkind = quantized-ab\nell = 2\nqK = 1\npopulated = 3\n[measure a]\nobservable = Sigma_x\n", "exceed"),
        ("[scenario]\nkind = classical-ab\nf = cubic\n[measure a]\nobservable = sigma_z\n", "profile"),
        ("no sections at all", "malformed"),
    ],
)
def test_config_errors(text, fragment):
    with pytest.raises(ConfigError, match=fragment):
        parse_config(text)


def test_csv_format_and_order():
    cfg = load_config(ROOT / "configs" / "classical_ab.ini")
    records = sweep_records(cfg)
    text = records_to_csv(records)
    assert text.startswith("theta,measure,value,branch\n")
    assert "\r" not in text
    keys = [(r.theta, r.measure, r.branch) for r in records]
    assert keys == sorted(keys)
    assert format_number(math.pi) == "3.14159265359"
    assert format_number(-0.0) == "0"
    at_crossing = [r for r in records if r.theta == math.pi / 2]
    assert {(r.measure, r.branch) for r in at_crossing} == {
        ("sigma_xA", "pre"), ("sigma_xA", "post"), ("sigma_yA", "pre"), ("sigma_yA", "post"), ("sigma_z", "n/a")
    }
    back = read_csv(text)
    assert len(back) == len(records)
    assert all(abs(a.value - b.value) <= 1e-11 * max(1, abs(a.value)) for a, b in zip(back, records))


def test_exclusion_window_drops_points():
    cfg = RunConfig(kind="standard", grid=GridSpec(0, math.pi, 11, 0.4), measures=(MeasureSpec("z", "sigma_z"),))
    thetas = [r.theta for r in sweep_records(cfg)]
    assert all(abs(t - math.pi / 2) >= 0.4 or t == math.pi / 2 for t in thetas)
    assert thetas.count(math.pi / 2) == 1


def test_sweep_is_byte_identical(tmp_path):
    cfg = ROOT / "configs" / "quantized_ab.ini"
    outs = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for out in outs:
        assert cli.main(["sweep", "--config", str(cfg), "--out", str(out)]) == 0
    assert outs[0].read_bytes() == outs[1].read_bytes()


def test_sweep_examples(tmp_path):
    out = tmp_path / "std.csv"
    assert cli.main(["sweep", "--config", str(ROOT / "configs" / "standard.ini"), "--out", str(out)]) == 0
    rows = read_csv(out.read_text())
    assert all(abs(r.value - 1) <= 1e-12 for r in rows if r.measure == "sigma_f")
    assert all(abs(r.value) <= 1e-12 for r in rows if r.measure == "sigma_z")


def test_sweep_uses_output_section(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert cli.main(["sweep", "--config", str(ROOT / "configs" / "standard.ini")]) == 0
    assert (tmp_path / "standard.csv").exists()


def test_exit_codes(tmp_path, capsys):
    bad_grid = tmp_path / "g.ini"
    bad_grid.write_text("[scenario]\nkind = standard\n[grid]\ncount = 1\n[measure a]\nobservable = sigma_z\n")
    bad_measure = tmp_path / "m.ini"
    bad_measure.write_text("[scenario]\nkind = standard\n[measure a]\nobservable = nope\n")
    good = str(ROOT / "configs" / "standard.ini")
    assert cli.main(["sweep", "--config", str(bad_grid), "--out", str(tmp_path / "x.csv")]) == 2
    assert cli.main(["sweep", "--config", str(bad_measure), "--out", str(tmp_path / "x.csv")]) == 2
    assert cli.main(["sweep", "--config", str(tmp_path / "missing.ini"), "--out", "x.csv"]) == 3
    assert cli.main(["sweep", "--config", good, "--out", str(tmp_path / "no" / "dir" / "x.csv")]) == 3
    assert cli.main(["verify", "no-such-suite"]) == 2
    assert cli.main(["figure", "fig9", "--outdir", str(tmp_path)]) == 2
    assert cli.main(["bogus"]) == 2
    errors = [line for line in capsys.readouterr().err.splitlines() if line.startswith("abrealism: error:")]
    assert len(errors) >= 6


def test_verify_reports_and_exit_status(capsys, monkeypatch):
    assert cli.main(["verify", "jump", "chord", "--seed", "4"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "tol=" in out and "worst=" in out
    monkeypatch.setitem(verify.SUITES, "jump", lambda rng: [verify.Check("forced", 1e-12, 1.0, False)])
    assert cli.main(["verify", "jump"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_is_seed_deterministic():
    a = [c.line() for c in verify.run_suites(["gauge"], seed=9)]
    b = [c.line() for c in verify.run_suites(["gauge"], seed=9)]
    assert a == b


def test_figure_outputs(tmp_path):
    assert cli.main(["figure", "fig4b", "--outdir", str(tmp_path), "--count", "101", "--plot"]) == 0
    meta = json.loads((tmp_path / "fig4b.meta.json").read_text())
    assert meta["local_observable_floor"] == pytest.approx(math.log(13, 26))
    assert (tmp_path / "fig4b.svg").read_text().lstrip().startswith("<?xml")
    rows = read_csv((tmp_path / "fig4b.csv").read_text())
    pre = [r for r in rows if r.measure == "Sigma_y[m=2,3]" and r.branch == "pre"]
    assert all(abs(r.value - (1 - 2 * math.log(2, 26))) <= 1e-10 for r in pre)


def test_fig2c_vanishes_at_pi_over_10():
    rows = figure_records("fig2c", 101)
    assert rows[0].theta == 0 and rows[-1].theta == pytest.approx(math.pi / 2)
    mid = min(rows, key=lambda r: abs(r.theta - math.pi / 10))
    assert mid.theta == pytest.approx(math.pi / 10)
    assert abs(mid.value) <= 1e-12


def test_fig3a_classical_baseline_is_zero():
    rows = figure_records("fig3a", 51)
    classical = [r for r in rows if r.measure == "sigma_z[classical]"]
    assert classical and all(abs(r.value) <= 1e-12 for r in classical)
    assert len({r.measure for r in rows}) == 5


@pytest.mark.parametrize("name", FIGURES)
def test_every_figure_builds(name):
    rows = figure_records(name, 21)
    assert rows and all(math.isfinite(r.value) for r in rows)


def test_figure_write_is_deterministic(tmp_path):
    for d in ("a", "b"):
        assert cli.main(["figure", "fig3d", "--outdir", str(tmp_path / d), "--count", "51"]) == 0
    assert (tmp_path / "a" / "fig3d.csv").read_bytes() == (tmp_path / "b" / "fig3d.csv").read_bytes()
    assert os.path.getsize(tmp_path / "a" / "fig3d.csv") > 0
