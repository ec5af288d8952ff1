import numpy as np
import pytest

from gsvdplots import SchemaError, FigureSpec, load_accuracy_csv, render
from gsvdplots.cli import main
from gsvdplots.render import REQUIRED_COLUMNS


def write_csv(path, rows, columns=None):
    columns = columns or REQUIRED_COLUMNS
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(f"{v:.16e}" if isinstance(v, float) else str(v)
                              for v in row))
    path.write_text("\n".join(lines) + "\n")


def sample_rows(n=10, hat_scale=1e-14, tilde_scale=1e-10):
    rng = np.random.default_rng(0)
    rows = []
    for i in range(n):
        sigma = float(n - i)
        errs = []
        for _ in range(4):
            errs += [hat_scale * rng.uniform(0.1, 1),
                     tilde_scale * rng.uniform(0.1, 1)]
        rows.append([i, sigma] + errs)
    return rows


def test_load_accuracy_csv(tmp_path):
    p = tmp_path / "accuracy.csv"
    write_csv(p, sample_rows(5))
    data = load_accuracy_csv(str(p))
    assert set(data) == set(REQUIRED_COLUMNS)
    assert len(data["index"]) == 5


def test_load_rejects_missing_columns(tmp_path):
    p = tmp_path / "bad.csv"
    cols = [c for c in REQUIRED_COLUMNS if c not in ("sin_u_hat", "sin_v_tilde")]
    write_csv(p, [[0, 1.0] + [1e-12] * 6], columns=cols)
    with pytest.raises(SchemaError) as err:
        load_accuracy_csv(str(p))
    assert "sin_u_hat" in str(err.value) and "sin_v_tilde" in str(err.value)


def test_load_rejects_empty(tmp_path):
    p = tmp_path / "empty.csv"
    write_csv(p, [])
    with pytest.raises(SchemaError):
        load_accuracy_csv(str(p))


def test_render_produces_image(tmp_path):
    p = tmp_path / "accuracy.csv"
    write_csv(p, sample_rows(20))
    out = tmp_path / "fig.png"
    render(FigureSpec(csv_path=str(p), out_path=str(out), title="demo"))
    header = out.read_bytes()[:8]
    assert header == b"\x89PNG\r\n\x1a\n"
    assert out.stat().st_size > 10_000


def test_render_single_row_and_zero_clamp(tmp_path):
    p = tmp_path / "one.csv"
    rows = [[0, 2.0] + [0.0] * 8]   # exact zeros must survive log scaling
    write_csv(p, rows)
    out = tmp_path / "one.png"
    render(FigureSpec(csv_path=str(p), out_path=str(out)))
    assert out.exists()


def test_render_deterministic(tmp_path):
    p = tmp_path / "accuracy.csv"
    write_csv(p, sample_rows(8))
    a, b = tmp_path / "a.png", tmp_path / "b.png"
    render(FigureSpec(csv_path=str(p), out_path=str(a)))
    render(FigureSpec(csv_path=str(p), out_path=str(b)))
    assert a.read_bytes() == b.read_bytes()


def test_cli_render_ok(tmp_path):
    p = tmp_path / "accuracy.csv"
    write_csv(p, sample_rows(6))
    out = tmp_path / "fig.png"
    assert main(["render", "--in", str(p), "--out", str(out),
                 "--title", "run"]) == 0
    assert out.exists()


def test_cli_schema_violation_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.csv"
    cols = [c for c in REQUIRED_COLUMNS if c != "chordal_tilde"]
    write_csv(p, [[0, 1.0] + [1e-12] * 7], columns=cols)
    code = main(["render", "--in", str(p), "--out", str(tmp_path / "f.png")])
    assert code != 0
    assert "chordal_tilde" in capsys.readouterr().err


def test_cli_missing_file_exit_code(tmp_path):
    assert main(["render", "--in", str(tmp_path / "nope.csv"),
                 "--out", str(tmp_path / "f.png")]) != 0


def test_regime_run_renders_with_hat_below_tilde(tmp_path):
    # end-to-end: an ill-conditioned-A comparison run, then the figure
    gsvdlab = pytest.importorskip("gsvdlab")
    cfg = gsvdlab.ExperimentConfig(m=60, n=50, p=70, cond_a=1e7, cond_b=1e2,
                                   seed=12, out_dir=str(tmp_path))
    gsvdlab.run_accuracy(cfg)
    csv_path = tmp_path / "accuracy.csv"
    data = load_accuracy_csv(str(csv_path))
    hat_worse = sum(np.median(data[f"{q}_hat"]) > np.median(data[f"{q}_tilde"])
                    for q in ("chordal", "sin_x", "sin_u", "sin_v"))
    assert hat_worse == 0          # hat series sits below tilde in every panel
    out = tmp_path / "fig.png"
    assert main(["render", "--in", str(csv_path), "--out", str(out)]) == 0
    assert out.exists()
