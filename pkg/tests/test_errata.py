import numpy as np
import pytest

from zonal.verify.errata import EXPECTED_FLAGS, errata_report, errata_rows, printed_charpoly_quaternion
from zonal.verify.report import discrepancies_json
from zonal.verify.schemas import Discrepancy


@pytest.fixture(scope="module")
def discrepancies():
    from zonal.verify.checks import RunContext

    return errata_report(RunContext(n_samples=20_000, seed=7, jobs=1, quad_order=40))


def test_exactly_three_items_flagged(discrepancies):
    flagged = [d.item for d in discrepancies if d.flagged]
    assert flagged == ["powersum-real-hooks", "powersum-quaternion-sign", "charpoly-quaternion-parameter"]
    assert len(flagged) == EXPECTED_FLAGS


def test_printed_and_derived_values(discrepancies):
    by_item = {d.item: d for d in discrepancies}
    assert by_item["powersum-real-hooks"].printed == pytest.approx(10.0)
    assert by_item["powersum-real-hooks"].derived == pytest.approx(8.0)
    assert by_item["powersum-quaternion-sign"].printed == pytest.approx(4.0)
    assert by_item["powersum-quaternion-sign"].derived == pytest.approx(-4.0)
    assert by_item["charpoly-quaternion-parameter"].printed == pytest.approx(1.0)
    assert by_item["charpoly-quaternion-parameter"].derived == pytest.approx(1.5)
    complex_item = by_item["powersum-complex"]
    assert not complex_item.flagged
    assert complex_item.printed == pytest.approx(complex_item.derived)


def test_evidence_supports_the_derived_form(discrepancies):
    for d in discrepancies:
        derived, printed = d.evidence
        assert derived.z <= 4, d.item
        assert printed.verdict == ("info" if d.flagged else derived.verdict)


def test_summary_rows(discrepancies):
    rows = errata_rows(discrepancies)
    assert rows[-1].id == "errata.flag-count"
    assert rows[-1].verdict == "pass"
    assert [r.verdict for r in rows[:-1]] == ["info", "info", "info", "pass"]


def test_flag_count_row_fails_when_an_item_goes_missing(discrepancies):
    rows = errata_rows(discrepancies[:1])
    assert rows[-1].verdict == "fail"


def test_json_payload(discrepancies):
    text = discrepancies_json(discrepancies)
    assert '"flagged": true' in text
    assert set(discrepancies[0].to_json()) == {"item", "description", "printed", "derived", "flagged", "evidence"}
    assert Discrepancy.model_validate(discrepancies[0].model_dump()) == discrepancies[0]


def test_printed_quaternion_parameter():
    assert printed_charpoly_quaternion(1, 0.5, np.eye(2)) == pytest.approx(1.0)
