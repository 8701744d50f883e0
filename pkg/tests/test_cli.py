import csv
import io
import json

import pytest

from zonal.cli import main
from zonal.hyper.density import truncated_exponential


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_jack_expansion(capsys):
    code, out = run(capsys, "jack", "--kappa", "2", "--alpha", "2", "--nvars", "2")
    assert code == 0
    assert json.loads(out)["coefficients"] == {"(2)": "1", "(1,1)": "2/3"}


def test_jack_evaluation(capsys):
    code, out = run(capsys, "jack", "--kappa", "1", "--alpha", "1", "--nvars", "3", "--at", "1,1,1")
    assert code == 0
    assert json.loads(out)["value"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["jack", "--kappa", "1,1,1", "--nvars", "2"],
        ["jack", "--kappa", "1,x", "--nvars", "2"],
        ["jack", "--kappa", "1,2", "--nvars", "2"],
        ["jack", "--kappa", "2", "--nvars", "2", "--alpha", "0"],
        ["jack", "--kappa", "2", "--nvars", "2", "--unknown-flag"],
        ["moment", "--ensemble", "complex", "--r", "1", "--x", "0.5", "--n", "1", "--n-samples", "0"],
        ["moment", "--ensemble", "complex", "--r", "1", "--x", "0.5", "--sigma", "identity"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_missing_sigma_file_exits_2(capsys, tmp_path):
    code = main(["moment", "--ensemble", "real", "--r", "2", "--x", "0.5", "--sigma", str(tmp_path / "nope.json")])
    assert code == 2
    assert "sigma file not found" in capsys.readouterr().err


def test_moment_closed_form(capsys):
    code, out = run(capsys, "moment", "--ensemble", "complex", "--r", "1", "--x", "0.5", "--n", "1", "--sigma", "identity")
    assert code == 0
    assert json.loads(out) == {"closed": pytest.approx(1.25)}


@pytest.mark.parametrize("field", ["real", "complex", "quaternion"])
def test_moment_of_order_zero_is_one(capsys, field):
    code, out = run(capsys, "moment", "--ensemble", field, "--r", "0", "--x", "0.5", "--n", "2")
    assert code == 0
    assert json.loads(out) == {"closed": pytest.approx(1.0)}
    assert main(["moment", "--ensemble", field, "--r=-1", "--x", "0.5", "--n", "2"]) == 2


def test_moment_quaternion_identity(capsys):
    code, out = run(capsys, "moment", "--ensemble", "quaternion", "--r", "1", "--x", "0.5", "--n", "1", "--duality")
    assert code == 0
    payload = json.loads(out)
    assert payload["closed"] == pytest.approx(1.5)
    assert payload["duality"] == pytest.approx(1.5)


def test_moment_from_sigma_file(capsys, tmp_path):
    path = tmp_path / "sigma.json"
    path.write_text(json.dumps({"n": 1, "data": [[2.0]]}))
    code, out = run(capsys, "moment", "--ensemble", "complex", "--r", "1", "--x", "0.5", "--sigma", str(path))
    assert code == 0
    # 1 + |x|^2 sigma
    assert json.loads(out)["closed"] == pytest.approx(1.5)


def test_quaternion_sigma_file_form(capsys, tmp_path):
    path = tmp_path / "sigma.json"
    path.write_text(json.dumps({"n": 2, "data": [[1.0, 0.0], [0.0, 1.0]]}))
    base = ["moment", "--ensemble", "quaternion", "--r", "1", "--x", "0.5", "--sigma", str(path)]
    # lifted by default: two quaternions
    code, out = run(capsys, *base)
    assert code == 0
    assert json.loads(out)["closed"] == pytest.approx(2.5)
    # already self-dual: one quaternion
    code, out = run(capsys, *base, "--embedded")
    assert code == 0
    assert json.loads(out)["closed"] == pytest.approx(1.5)
    assert main([*base, "--embedded", "--n", "2"]) == 2
    assert "N=2" in capsys.readouterr().err


def test_moment_with_monte_carlo(capsys):
    code, out = run(
        capsys, "moment", "--ensemble", "complex", "--r", "1", "--x", "0.5", "--n", "1", "--n-samples", "20000", "--seed", "3"
    )
    assert code == 0
    (report,) = json.loads(out)
    assert report["closed"] == pytest.approx(1.25)
    assert report["n"] == 20000 and report["seed"] == 3
    assert report["verdict"] in ("pass", "warn")


def test_powersum(capsys):
    code, out = run(capsys, "powersum", "--ensemble", "real", "--k", "4", "--n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["closed"] == pytest.approx(8.0)
    assert payload["printed"] == pytest.approx(10.0)


def test_density_grid_csv(capsys):
    code, out = run(capsys, "density", "--n", "20", "--sigma1", "1.0", "--grid", "8", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 64
    assert list(rows[0]) == ["re", "im", "density"]
    for row in rows:
        z = complex(float(row["re"]), float(row["im"]))
        assert float(row["density"]) == pytest.approx(truncated_exponential(z, 20), abs=1e-12)


def test_kaneko_and_hyper(capsys):
    code, out = run(capsys, "kaneko", "--alpha", "2", "--a=-1/2", "--kappa", "1", "--n", "2")
    assert code == 0
    assert json.loads(out) == {"closed": 2.0, "exact": "2"}
    code, out = run(capsys, "hyper", "--a=-2", "--alpha", "1", "--at", "1/3")
    assert code == 0
    payload = json.loads(out)
    assert payload["exact"] == "4/9"
    assert payload["terminated"] is True


def test_jack_cache_flag(capsys, cache_dir):
    target = cache_dir / "cli"
    code, _ = run(capsys, "jack", "--kappa", "2,1", "--alpha", "1/2", "--nvars", "3", "--jack-cache", str(target))
    assert code == 0
    assert [p.name for p in target.glob("*.json")] == ["P_2-1_a1-2_n3.json"]


def test_verify_is_byte_identical(capsys, tmp_path):
    outputs = []
    for name in ("a.json", "b.json"):
        code = main(["verify", "--suite", "kaneko", "--n-samples", "5000", "--seed", "9", "--out", str(tmp_path / name)])
        assert code == 0
        outputs.append((tmp_path / name).read_bytes())
    assert outputs[0] == outputs[1]
    ids = [r["id"] for r in json.loads(outputs[0])]
    assert "kaneko.alpha1.a0.N3.kappa(1)" in ids


def test_verify_prints_summary_table(capsys, tmp_path):
    code = main(["verify", "--suite", "kaneko", "--n-samples", "5000", "--seed", "9"])
    assert code == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)
    assert "quantity" in captured.err
    assert "kaneko.alpha1.a0.N3.kappa(1)" in captured.err
    assert "pass=" in captured.err.splitlines()[-1]

    out = tmp_path / "kaneko.json"
    assert main(["verify", "--suite", "kaneko", "--n-samples", "5000", "--seed", "9", "--out", str(out)]) == 0
    table = (tmp_path / "kaneko.json.txt").read_text()
    assert table.splitlines()[0].startswith("quantity")
    assert json.loads(out.read_text())


def test_verify_csv(capsys):
    code, out = run(capsys, "verify", "--suite", "kaneko", "--n-samples", "5000", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "id,closed,mean,mean_imag,stderr,n,seed,z,verdict"


def test_verify_errata_emits_discrepancies(capsys):
    code, out = run(capsys, "verify", "--suite", "errata", "--n-samples", "20000", "--seed", "7")
    assert code == 0
    items = json.loads(out)
    assert [d["flagged"] for d in items] == [True, True, True, False]


def test_verify_unknown_suite(capsys):
    assert main(["verify", "--suite", "nope"]) == 2
