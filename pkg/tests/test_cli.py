import json
import subprocess
import sys

from wmorrey.cli import main


def _cfg(tmp_path, **kw):
    data = {"experiment": "norm", "refinements": [256, 512], "beta": [0.0, 0.5]}
    data.update(kw)
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(data))
    return path


def test_sweep_writes_csv_and_summary(tmp_path):
    out = tmp_path / "rows.csv"
    assert main(["sweep", "--config", str(_cfg(tmp_path)), "-o", str(out)]) == 0
    assert out.read_text().startswith("experiment,n,p,")
    summary = json.loads(out.with_suffix(".json").read_text())
    assert summary["norm"]["agree"] == 6


def test_set_overrides_and_stdout(tmp_path, capsys):
    assert main(["norm", "--config", str(_cfg(tmp_path)), "--set", "beta=[1.0]",
                 "--set", 'witnesses=["char_ball"]']) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2 and ",1," in lines[1]


def test_report_and_verify(tmp_path, capsys):
    out = tmp_path / "rows.csv"
    main(["sweep", "--config", str(_cfg(tmp_path)), "-o", str(out)])
    capsys.readouterr()
    assert main(["report", str(out)]) == 0
    assert json.loads(capsys.readouterr().out)["norm"]["agree"] == 6
    assert main(["verify", "--config", str(_cfg(tmp_path))]) == 0


def test_bad_input_exits_with_two(tmp_path, capsys):
    assert main(["sweep", "--set", "experiment=bogus"]) == 2
    assert main(["report", str(tmp_path / "missing.csv")]) == 2
    assert "error" in capsys.readouterr().err


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "wmorrey", "maximal", "--config", str(_cfg(tmp_path)),
                          "--set", "k_max=10", "--set", "beta=[0.5]"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0, res.stderr
    assert res.stdout.splitlines()[1].endswith(",agree")
