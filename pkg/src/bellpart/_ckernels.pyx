# cython: language_level=3
"""Compiled triangle kernels.

Same contract as ``bellpart._pykernels``: row-by-row weighted Stirling
recurrence T(n,k) = T(n-1,k-1) + w(k)*T(n-1,k) on Python ints.  Cython
only removes interpreter loop overhead; the big-int arithmetic itself is
unchanged, so results are bit-identical to the pure-Python kernel.
"""

IMPL = "cython"

WEIGHT_CLASSICAL = 0
WEIGHT_ODD = 1


def extend_weighted_rows(list rows, int kind, int n_max):
    """Extend ``rows`` in place until it holds rows 0..n_max."""
    cdef Py_ssize_t n, k
    cdef list prev, row
    if not rows:
        rows.append([1])
    while len(rows) <= n_max:
        n = len(rows)
        prev = rows[n - 1]
        row = [0] * (n + 1)
        if kind == WEIGHT_CLASSICAL:
            for k in range(1, n):
                row[k] = prev[k - 1] + k * prev[k]
        else:
            row[0] = prev[0]
            for k in range(1, n):
                row[k] = prev[k - 1] + (2 * k + 1) * prev[k]
        row[n] = 1
        rows.append(row)
    return rows
