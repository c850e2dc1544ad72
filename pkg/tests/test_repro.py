import json
import math

import pytest

from drcskit.errors import ParameterError
from drcskit.repro import (
    FIG_RHO_COLUMNS,
    SMALL_ALPHABET_COLUMNS,
    fig_rho_rows,
    repro_example1,
    repro_example2,
    rows_to_csv,
    small_alphabet_rows,
)


@pytest.mark.parametrize("fn", [repro_example1, repro_example2])
def test_bundle_deterministic(tmp_path, fn):
    a, b = tmp_path / "a", tmp_path / "b"
    ra, rb = fn(a), fn(b)
    assert ra["verdict"]["passed"]
    names = sorted(p.name for p in a.iterdir())
    assert names == sorted(p.name for p in b.iterdir())
    assert "manifest.json" in names
    for name in names:
        if name != "manifest.json":  # carries a wall-clock timestamp
            assert (a / name).read_bytes() == (b / name).read_bytes(), name
    manifest = json.loads((a / "manifest.json").read_text())
    assert manifest["command"].startswith("repro example") and manifest["tool"] == "drcskit"


def test_example_layout_lines():
    assert repro_example1()["files"]["paper_layout.txt"].splitlines()[1] == "0 1 2 3 4 4 0 1 2 3"
    lines = repro_example2()["files"]["paper_layout.txt"].split("# C(1)\n")[1].splitlines()
    assert lines[1] == "1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0"


def test_tables():
    rows = small_alphabet_rows()
    assert len(rows) == 18
    csv = rows_to_csv(rows, SMALL_ALPHABET_COLUMNS)
    assert csv.splitlines()[0] == ",".join(SMALL_ALPHABET_COLUMNS)
    assert "1.1857" in csv.splitlines()[1]
    fig = fig_rho_rows(23)
    assert [r["p"] for r in fig] == [3, 5, 7, 11, 13, 17, 19, 23]
    assert rows_to_csv(fig, FIG_RHO_COLUMNS).splitlines()[1] == "3,9,9,8,9,1.6483,1.3788"
    with pytest.raises(ParameterError):
        fig_rho_rows(131)
    assert math.isclose(fig[-1]["rho_shen"], math.sqrt(2), abs_tol=0.01)
