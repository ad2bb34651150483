"""Pure-numpy gate-application kernel, used when the compiled extension is absent."""
from __future__ import annotations

import numpy as np


def apply_2x2(amps, num_qubits, target, control_mask, m00, m01, m10, m11):
    """Apply a 2x2 matrix to `target`, restricted to indices where all
    control bits are set. Mutates `amps` in place."""
    n = num_qubits
    view = amps.reshape((2,) * n)
    # axis of qubit q in the reshaped tensor is n - 1 - q
    index = [slice(None)] * n
    removed_before_target = 0
    q = 0
    mask = control_mask
    while mask:
        if mask & 1:
            index[n - 1 - q] = 1
            if q > target:
                removed_before_target += 1
        mask >>= 1
        q += 1
    t_axis = (n - 1 - target) - removed_before_target
    sub = np.moveaxis(view[tuple(index)], t_axis, 0)
    x0 = sub[0].copy()
    x1 = sub[1]
    sub[0] = m00 * x0 + m01 * x1
    sub[1] = m10 * x0 + m11 * x1


BACKEND = "python"
