"""Smoke tests for the Python bindings: the registry round-trips, payloads
evaluate, the baselines hit their known values, and the loop runs."""

import math
import os

import pytest

import extremal


def test_registry_lists_eight_problems():
    ids = extremal.problem_ids()
    assert len(ids) == 8
    assert "packing-circles-26" in ids
    assert "mstd-30" in ids


def test_problem_metadata():
    spec = extremal.problem("max-min-ratio")
    assert spec["direction"] == "lower_better"
    assert spec["params"] == {"n": 16, "d": 2}
    assert spec["human_best"] == pytest.approx(12.89)
    assert spec["table_metric"] == "R2"


def test_unknown_problem_raises():
    with pytest.raises(ValueError):
        extremal.problem("no-such-problem")


def test_evaluate_conway_set():
    payload = extremal.solve("mstd-30")
    result = extremal.evaluate("mstd-30", payload)
    assert result["valid"] is True
    assert result["raw_metric"] == pytest.approx(1.04, abs=1e-12)
    assert result["metrics"]["sumset"] == 26
    assert result["metrics"]["diffset"] == 25


def test_evaluate_rejects_overlapping_circles():
    payload = {"circles": [[0.3, 0.5, 0.25], [0.6, 0.5, 0.25]] + [[0.05 + 0.038 * i, 0.05, 0.01] for i in range(24)]}
    result = extremal.evaluate("packing-circles-26", payload)
    assert result["valid"] is False
    assert result["reason"] == "overlap"
    assert result["score"] == -1.0


def test_autoconv_box_is_exactly_one():
    payload = {"heights": [1.0] * 128}
    result = extremal.evaluate("autoconv-peak", payload)
    assert result["valid"] is True
    assert result["raw_metric"] == pytest.approx(1.0, abs=1e-12)


def test_excel_at_best_signs():
    # Littlewood: matching the human best is 0; lower raw is positive.
    assert extremal.excel_at_best("littlewood-512", 32.0) == pytest.approx(0.0)
    assert extremal.excel_at_best("littlewood-512", 16.0) == pytest.approx(0.5)
    # max-min-ratio reports R^2: raw ratio 3.0 -> 9.0 against 12.89.
    assert extremal.excel_at_best("max-min-ratio", 3.0) == pytest.approx(
        -(9.0 - 12.89) / 12.89
    )


def test_discover_loop_runs_and_logs(tmp_path):
    log = tmp_path / "run.jsonl"
    summary = extremal.discover("mstd-30", rounds=3, seed=5, log_path=str(log))
    assert summary["rounds"] == 3
    assert summary["candidates"] == 4
    assert summary["best_raw"] >= 1.0
    assert log.exists()
    assert len(log.read_text().strip().splitlines()) == 4


def test_discover_is_deterministic():
    a = extremal.discover("littlewood-512", rounds=3, seed=11)
    b = extremal.discover("littlewood-512", rounds=3, seed=11)
    assert a == b


def test_verify_known_data_set():
    data_dir = os.environ.get("EXTREMAL_DATA_DIR")
    if not data_dir:
        pytest.skip("EXTREMAL_DATA_DIR not set")
    summary = extremal.verify_known(data_dir)
    assert summary["all_passed"] is True
    assert len(summary["reports"]) >= 8


def test_spherical_code_angle_matches_dot_products():
    payload = extremal.solve("spherical-code-30", seed=2)
    result = extremal.evaluate("spherical-code-30", payload)
    assert result["valid"] is True
    # Independent check: recompute the max pairwise cosine in Python.
    pts = payload["points"]
    cos_max = max(
        sum(a * b for a, b in zip(pts[i], pts[j]))
        for i in range(len(pts))
        for j in range(i + 1, len(pts))
    )
    assert result["raw_metric"] == pytest.approx(math.acos(max(-1.0, min(1.0, cos_max))))
