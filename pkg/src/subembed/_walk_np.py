"""Vectorized fallback for the walk-end kernel.

Must stay arithmetically identical to the compiled kernel: both consume the
same pre-drawn uniforms in the same layout, so outputs are bit-equal.
"""

import numpy as np


def walk_ends(indptr, indices, starts, lengths, steps):
    """End node of each walk.

    ``steps[t, i]`` is the uniform in [0, 1) used at step t of walk i;
    walk i takes ``lengths[i]`` steps from ``starts[i]``. Neighbor choice
    is floor(u * degree), clamped to degree - 1 against float rounding.
    """
    x = starts.astype(np.int64, copy=True)
    for t in range(steps.shape[0]):
        active = np.flatnonzero(lengths > t)
        if active.size == 0:
            break
        xa = x[active]
        lo = indptr[xa]
        deg = indptr[xa + 1] - lo
        j = (steps[t, active] * deg).astype(np.int64)
        np.minimum(j, deg - 1, out=j)
        x[active] = indices[lo + j]
    return x
