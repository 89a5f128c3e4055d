import time

import numpy as np
import pytest

from circone.reproduce import TARGETS, run_target
from circone.slices import SLICES, slice_csv, slice_rows


@pytest.mark.parametrize("name", sorted(TARGETS))
def test_target_passes_quickly(name):
    t0 = time.perf_counter()
    res = run_target(name)
    assert res.ok, "\n".join(res.lines)
    assert time.perf_counter() - t0 < 60
    assert not any("MISMATCH" in line for line in res.lines)


def test_unknown_target():
    with pytest.raises(KeyError, match="unknown target"):
        run_target("nope")


@pytest.mark.parametrize("name", sorted(SLICES))
def test_slice_rows_are_finite_and_seeded(name):
    rows = slice_rows(name, samples=20, theta_samples=8)
    assert rows
    assert all(np.isfinite(x) and np.isfinite(y) for _, x, y in rows)
    assert rows == slice_rows(name, samples=20, theta_samples=8)


def test_slice_series_names():
    primal = {s for s, _, _ in slice_rows("d5", samples=5, theta_samples=4)}
    assert primal == {"dnn_vertex", "cp_vertex", "cp_curve", "cp_sample"}
    dual = {s for s, _, _ in slice_rows("d5dual", theta_samples=4)}
    assert dual == {"cop_curve", "cop_ray", "spn_vertex"}


def test_samples_lie_inside_dnn_slice():
    # every sampled point is completely positive, hence doubly nonnegative: a_1, a_2 in [-1, 1] after scaling
    for name in ("d4", "d5", "d6face", "d7face"):
        for s, x, y in slice_rows(name, samples=50):
            if s == "cp_sample":
                assert 0 <= x <= 1 + 1e-12 and 0 <= y <= 1 + 1e-12


def test_csv_header_and_row_count():
    text = slice_csv("d4", samples=7, theta_samples=4)
    lines = text.strip().splitlines()
    assert lines[0] == "series,x,y"
    assert len(lines) - 1 == len(slice_rows("d4", samples=7, theta_samples=4))


def test_unknown_slice():
    with pytest.raises(ValueError):
        slice_rows("d9")
