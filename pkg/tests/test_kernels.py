"""Compiled kernel and pure-Python fallback must agree bit-for-bit."""

import pytest

from bellpart import _pykernels

try:
    from bellpart import _ckernels
except ImportError:
    _ckernels = None


def test_pure_rows_basic():
    rows = _pykernels.extend_weighted_rows([], _pykernels.WEIGHT_ODD, 3)
    assert rows == [[1], [1, 1], [1, 4, 1], [1, 13, 9, 1]]


def test_pure_rows_incremental_extension():
    rows = _pykernels.extend_weighted_rows([], _pykernels.WEIGHT_CLASSICAL, 2)
    _pykernels.extend_weighted_rows(rows, _pykernels.WEIGHT_CLASSICAL, 5)
    assert rows[5] == [0, 1, 15, 25, 10, 1]


@pytest.mark.skipif(_ckernels is None, reason="compiled kernel not built")
@pytest.mark.parametrize("kind", [0, 1])
def test_compiled_matches_pure(kind):
    pure = _pykernels.extend_weighted_rows([], kind, 120)
    compiled = _ckernels.extend_weighted_rows([], kind, 120)
    assert pure == compiled
