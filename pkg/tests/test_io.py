import json

import numpy as np
import pytest

from lawcluster import DataSet, Grid, Partition
from lawcluster.errors import GridMismatch, NonFiniteValue, ParseError
from lawcluster.io import (
    RunManifest,
    file_digest,
    load_datasets,
    load_long_csv,
    load_partition,
    load_wide_csv,
    save_long_csv,
    save_partition,
    save_wide_csv,
)


def _set(rng, id, N=40, G=80):
    return DataSet(id, rng.standard_normal((N, G)), Grid.uniform(G))


def test_wide_round_trip_is_exact(tmp_path, rng):
    ds = _set(rng, "u1")
    path = tmp_path / "u1.csv"
    save_wide_csv(ds, path)
    back = load_wide_csv(path)
    assert back.id == "u1"
    assert back.values.shape == (40, 80)
    np.testing.assert_array_equal(back.values, ds.values)
    np.testing.assert_array_equal(back.grid.t_values, ds.grid.t_values)


def test_long_round_trip_is_exact(tmp_path, rng):
    sets = [_set(rng, "a", N=5, G=9), _set(rng, "b", N=7, G=9)]
    path = tmp_path / "all.csv"
    save_long_csv(sets, path)
    back = load_long_csv(path)
    assert [ds.id for ds in back] == ["a", "b"]
    for x, y in zip(sets, back):
        np.testing.assert_array_equal(x.values, y.values)


def test_long_rows_in_any_order(tmp_path):
    path = tmp_path / "l.csv"
    rows = ["set_id,sample_id,t,value"]
    for s in (1, 0):
        for t in (1.0, 0.5, 0.0):
            rows.append(f"x,{s},{t},{s * 10 + t}")
    path.write_text("\n".join(rows) + "\n")
    (ds,) = load_long_csv(path)
    np.testing.assert_array_equal(ds.grid.t_values, [0.0, 0.5, 1.0])
    np.testing.assert_array_equal(ds.values, [[10.0, 10.5, 11.0], [0.0, 0.5, 1.0]])


def test_long_missing_cell_reports_line(tmp_path):
    path = tmp_path / "l.csv"
    path.write_text("set_id,sample_id,t,value\nx,0,0,1\nx,0,1,2\nx,1,0,3\n")
    with pytest.raises(ParseError, match=r"l\.csv:4: .*t=1"):
        load_long_csv(path)


def test_long_duplicate_cell(tmp_path):
    path = tmp_path / "l.csv"
    path.write_text("set_id,sample_id,t,value\nx,0,0,1\nx,0,0,2\n")
    with pytest.raises(ParseError, match="duplicate"):
        load_long_csv(path)


def test_long_bad_header(tmp_path):
    path = tmp_path / "l.csv"
    path.write_text("a,b,c,d\n")
    with pytest.raises(ParseError, match=":1:"):
        load_long_csv(path)


def test_nan_is_rejected(tmp_path):
    path = tmp_path / "w.csv"
    path.write_text("0,1\n1,2\nNaN,3\n")
    with pytest.raises(NonFiniteValue):
        load_wide_csv(path)


def test_wide_ragged_row(tmp_path):
    path = tmp_path / "w.csv"
    path.write_text("0,0.5,1\n1,2,3\n1,2\n")
    with pytest.raises(ParseError, match=r"w\.csv:3:"):
        load_wide_csv(path)


def test_wide_bad_number(tmp_path):
    path = tmp_path / "w.csv"
    path.write_text("0,1\n1,2\n1,abc\n")
    with pytest.raises(ParseError, match="not a number"):
        load_wide_csv(path)


def test_missing_file():
    with pytest.raises(ParseError, match="no such file"):
        load_datasets(["/nonexistent/x.csv"])


def test_directory_input_and_grid_mismatch(tmp_path, rng):
    save_wide_csv(_set(rng, "a", N=3, G=5), tmp_path / "a.csv")
    save_wide_csv(_set(rng, "b", N=4, G=5), tmp_path / "b.csv")
    assert [ds.id for ds in load_datasets([tmp_path])] == ["a", "b"]
    save_wide_csv(_set(rng, "c", N=4, G=6), tmp_path / "c.csv")
    with pytest.raises(GridMismatch):
        load_datasets([tmp_path])


def test_partition_round_trip(tmp_path):
    p = Partition({"u1": 0, "u2": 0, "u3": 1})
    save_partition(p, tmp_path / "p.csv")
    assert (tmp_path / "p.csv").read_text() == "label,cluster\nu1,0\nu2,0\nu3,1\n"
    assert load_partition(tmp_path / "p.csv").equivalent(p)


def test_manifest_round_trip(tmp_path):
    (tmp_path / "in.csv").write_text("hello\n")
    m = RunManifest(
        config={"seed": 1, "M": 10},
        inputs={"files": {"in.csv": file_digest(tmp_path / "in.csv")}},
        outputs={"gamma_star": 0.25},
        tool_version="0.1.0",
    )
    m.write(tmp_path / "m.json")
    assert RunManifest.read(tmp_path / "m.json") == m
    doc = json.loads((tmp_path / "m.json").read_text())
    assert doc["inputs"]["files"]["in.csv"] == "5891b5b522d5df086d0ff0b110fbd9d21bb4fc7163af34d08286a2e846f6be03"
