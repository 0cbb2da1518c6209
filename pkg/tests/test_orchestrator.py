import pytest

from src.orchestrator import STEPS, VerificationOrchestrator


@pytest.fixture
def orchestrator():
    return VerificationOrchestrator(workers=1)


def test_pipeline_passes_on_small_grid(orchestrator):
    report = orchestrator.run_pipeline((4, 3, 3))
    assert report.passed
    assert report.grid == (4, 3, 3)
    assert {record.check for record in report.records} == set(STEPS)
    assert report.elapsed_seconds >= 0


def test_run_step_covers_every_family(orchestrator):
    records = orchestrator.run_step("cores", (3, 2, 3))
    assert [record.family for record in records] == [
        (1, 1, 2), (1, 1, 3), (1, 2, 2), (1, 2, 3), (2, 1, 2), (2, 1, 3),
        (3, 1, 2), (3, 1, 3), (3, 2, 2), (3, 2, 3),
    ]
    assert all(record.match for record in records)
    assert records[-2].formula_value == 6


def test_round_trip_records(orchestrator):
    records = orchestrator.run_step("round_trips", (5, 1, 3))
    assert all(record.match for record in records)
    assert any(record.detail == "phi image size" for record in records)


def test_selected_steps_only(orchestrator):
    report = orchestrator.run_pipeline((3, 1, 2), steps=["anderson", "symmetric_motzkin"])
    assert {record.check for record in report.records} == {"anderson", "symmetric_motzkin"}
    assert [record.family for record in report.records if record.check == "symmetric_motzkin"] == \
        [(s, 1, 2) for s in range(4)]


def test_unknown_step_raises(orchestrator):
    with pytest.raises(ValueError):
        orchestrator.run_step("astrology", (3, 1, 2))
    with pytest.raises(ValueError):
        orchestrator.run_pipeline((3, 1, 2), steps=["cores", "astrology"])


def test_worker_pool_matches_sequential(orchestrator):
    parallel = VerificationOrchestrator(workers=2).run_step("corners", (5, 1, 3))
    assert parallel == orchestrator.run_step("corners", (5, 1, 3))
