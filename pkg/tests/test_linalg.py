import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from embcomp import linalg


def test_numerical_rank_threshold():
    assert linalg.numerical_rank([1.0, 1e-3, 1e-12], 1e-8).rank == 2
    # roundoff relative to the expected scale is rank 0
    assert linalg.numerical_rank([1e-15], 1e-8, scale=1.0).rank == 0
    assert linalg.numerical_rank([1e-15], 1e-8).rank == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(0, 6), st.integers(0, 2**31 - 1))
def test_kernel_complements_rank(ncols, nrows, seed):
    rng = np.random.default_rng(seed)
    r = min(nrows, ncols)
    a = rng.standard_normal((nrows, r)) @ rng.standard_normal((r, ncols)) if r else np.zeros((0, ncols))
    K, info = linalg.kernel(a, 1e-8, ncols)
    assert K.shape[0] + info.rank == ncols
    if K.size and a.size:
        assert np.allclose(a @ K.T, 0, atol=1e-8)


def test_reduce_rows_unit_pivots():
    rows = np.array([[1, 2, 3], [0, 1, 1]], dtype=complex)
    red, piv = linalg.reduce_rows(rows, [2, 1, 0])
    assert piv == [2, 1]
    assert np.allclose(red[:, piv], np.eye(2))
