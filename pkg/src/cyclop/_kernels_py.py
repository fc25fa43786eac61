"""Pure-Python refinement kernels (fallback for the compiled ``_kernels``).

A cyclic partition of ``[m]`` is encoded as a *block code*: a length-``m``
integer sequence whose entry ``e`` is the index (in canonical cyclic order)
of the block holding element ``e + 1``.
"""

import numpy as np


def refines_pair(fine, coarse):
    """True iff the partition coded by ``fine`` refines the one coded by ``coarse``.

    Every fine block must sit inside one coarse block, and walking the fine
    blocks once around the circle must step through the coarse blocks in
    order, one contiguous run per coarse block.
    """
    m = len(fine)
    if len(coarse) != m:
        raise ValueError("block codes of different length")
    pf = max(fine) + 1
    pc = max(coarse) + 1
    image = [-1] * pf
    for e in range(m):
        b = fine[e]
        c = coarse[e]
        if image[b] < 0:
            image[b] = c
        elif image[b] != c:
            return False
    steps = 0
    for k in range(pf):
        a = image[k]
        b = image[(k + 1) % pf]
        if a != b:
            if b != (a + 1) % pc:
                return False
            steps += 1
    return steps == pc or (pc == 1 and steps == 0)


def refines_many(fines, coarse):
    """Row-wise ``refines_pair(fines[i], coarse)`` as a uint8 vector."""
    coarse = list(coarse)
    return np.fromiter(
        (refines_pair(row, coarse) for row in np.asarray(fines).tolist()),
        dtype=np.uint8,
        count=len(fines),
    )


def refinement_matrix(fines, coarses):
    """``out[i, j] = refines_pair(fines[i], coarses[j])``."""
    rows = np.asarray(fines).tolist()
    cols = np.asarray(coarses).tolist()
    out = np.zeros((len(rows), len(cols)), dtype=np.uint8)
    for i, f in enumerate(rows):
        for j, c in enumerate(cols):
            if refines_pair(f, c):
                out[i, j] = 1
    return out
