import numpy as np
import pytest

from conftest import naive_counts
from domforge.dompoly import brute_force
from domforge.errors import GuardExceeded
from domforge.graph import from_edge_mask
from domforge.labeled import chunks, eval_table, neighbourhoods, poly_table


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_table_matches_brute_force(n):
    table = poly_table(n)
    for m in range(table.shape[1]):
        D = brute_force(from_edge_mask(n, m))
        col = tuple(int(c) for c in table[:, m])
        assert col[: len(D.coeffs)] == D.coeffs and not any(col[len(D.coeffs):])


def test_table_slice_matches_naive_oracle():
    rng = np.random.default_rng(5)
    starts = rng.integers(0, 2**21 - 64, size=3)
    for s in starts:
        s = int(s)
        table = poly_table(7, s, s + 64)
        for i in range(64):
            assert list(table[:, i]) == naive_counts(from_edge_mask(7, s + i))


def test_eval_table_and_degrees():
    d1, dp1 = eval_table(4)
    assert d1[0] == 1 and dp1[0] == 4
    assert d1[-1] == 15 and dp1[-1] == 32
    _, deg = neighbourhoods(4, 63, 64)
    assert list(deg[:, 0]) == [3, 3, 3, 3]


def test_chunks_cover_range():
    parts = chunks(7, 1 << 18)
    assert parts[0][0] == 0 and parts[-1][1] == 2**21
    assert all(a[1] == b[0] for a, b in zip(parts, parts[1:]))


def test_guard():
    with pytest.raises(GuardExceeded):
        poly_table(9)
