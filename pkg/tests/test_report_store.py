import json

from sqlalchemy import select

from zonal.models import ComparisonRecord, VerificationRun
from zonal.runner import record_run
from zonal.verify.checks import RunContext
from zonal.verify.report import density_csv, dumps, format_table, reports_csv, reports_json
from zonal.verify.schemas import ComparisonReport, MCEstimate
from zonal.verify.suites import SuiteResult


def _reports():
    estimate = MCEstimate(mean=1.02, stderr=0.01, n_samples=1000, seed=42)
    return [
        ComparisonReport(id="charpoly.complex.N1.r1.x0.5", closed=1.0, estimate=estimate, z=2.0, verdict="pass"),
        ComparisonReport(id="symfunc.jack-equals-schur", verdict="pass", note="40 cases"),
        ComparisonReport(id="broken", verdict="error", note="RuntimeError: boom"),
    ]


def test_report_json_is_deterministic():
    reports = _reports()
    assert reports_json(reports) == reports_json(reports)
    payload = json.loads(reports_json(reports))
    assert list(payload[0]) == sorted(payload[0])
    assert payload[0]["mean"] == 1.02
    assert payload[1]["mean"] is None
    assert dumps({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'


def test_complex_means_serialize_as_pairs():
    estimate = MCEstimate(mean=0.5, mean_imag=-0.25, stderr=0.1, n_samples=10, seed=1)
    report = ComparisonReport(id="q", closed=0.5, estimate=estimate, z=2.5, verdict="pass")
    assert report.to_json()["mean"] == {"re": 0.5, "im": -0.25}


def test_infinite_z_serializes_as_null():
    estimate = MCEstimate(mean=1.0, stderr=0.0, n_samples=10, seed=1)
    report = ComparisonReport(id="q", closed=2.0, estimate=estimate, z=float("inf"), verdict="fail")
    assert json.loads(reports_json([report]))[0]["z"] is None


def test_csv_outputs():
    lines = reports_csv(_reports()).splitlines()
    assert lines[0] == "id,closed,mean,mean_imag,stderr,n,seed,z,verdict"
    assert lines[1].startswith("charpoly.complex.N1.r1.x0.5,1.0,1.02,0.0,0.01,1000,42,2.0,pass")
    assert density_csv([{"re": 0.0, "im": 1.0, "density": 0.25}]) == "re,im,density\n0.0,1.0,0.25\n"


def test_table_counts_verdicts():
    table = format_table(_reports())
    assert "error=1  pass=2" in table


def test_record_run(session_factory):
    result = SuiteResult("demo", reports=_reports())
    run_id = record_run(result, RunContext(n_samples=1000, seed=42, jobs=1, quad_order=40), session_factory)
    with session_factory() as session:
        run = session.get(VerificationRun, run_id)
        assert run.suite == "demo"
        assert run.status == "failed"
        assert run.finished_at is not None
        records = session.execute(select(ComparisonRecord).where(ComparisonRecord.run_id == run_id)).scalars().all()
        assert {r.quantity for r in records} == {r.id for r in _reports()}
        first = next(r for r in records if r.quantity.startswith("charpoly"))
        assert first.mean == 1.02 and first.n_samples == 1000 and first.verdict == "pass"


def test_record_run_uses_default_store(monkeypatch):
    from zonal import db

    engine, factory = db.make_engine("sqlite://")
    monkeypatch.setattr(db, "engine", engine)
    monkeypatch.setattr(db, "SessionLocal", factory)
    result = SuiteResult("demo", reports=_reports()[:2])
    run_id = record_run(result, RunContext(n_samples=1000, seed=42, jobs=1, quad_order=40))
    with factory() as session:
        run = session.get(VerificationRun, run_id)
        assert run.status == "passed"
        assert len(run.records) == 2
    assert not hasattr(db, "get_session")
    engine.dispose()


def test_drop_and_recreate_tables(capsys):
    import importlib.util
    from pathlib import Path

    from zonal.db import make_engine

    path = Path(__file__).parent.parent / "scripts" / "drop_and_recreate_tables.py"
    spec = importlib.util.spec_from_file_location("drop_and_recreate_tables", path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)

    engine, _ = make_engine("sqlite://")
    assert module.drop_and_recreate_tables(engine) == ["comparison_records", "verification_runs"]
    assert "Report store reset successfully" in capsys.readouterr().out
