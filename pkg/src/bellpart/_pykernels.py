"""Pure-Python triangle kernels (fallback when the compiled extension is absent).

The hot loop is the row-by-row weighted Stirling recurrence

    T(n, k) = T(n-1, k-1) + w(k) * T(n-1, k)

with w(k) = k for the classical triangle and w(k) = 2k + 1 for the
type-B triangle.  All arithmetic is on Python ints (arbitrary precision).
"""

IMPL = "python"

# weight kinds
WEIGHT_CLASSICAL = 0
WEIGHT_ODD = 1


def extend_weighted_rows(rows, kind, n_max):
    """Extend ``rows`` in place until it holds rows 0..n_max.

    ``rows`` must either be empty or hold a valid prefix of the triangle.
    Row n is a list of n + 1 ints.
    """
    if not rows:
        rows.append([1])
    while len(rows) <= n_max:
        n = len(rows)
        prev = rows[n - 1]
        row = [0] * (n + 1)
        if kind == WEIGHT_CLASSICAL:
            row[0] = 0
            for k in range(1, n):
                row[k] = prev[k - 1] + k * prev[k]
        else:
            row[0] = prev[0]
            for k in range(1, n):
                row[k] = prev[k - 1] + (2 * k + 1) * prev[k]
        row[n] = 1
        rows.append(row)
    return rows
