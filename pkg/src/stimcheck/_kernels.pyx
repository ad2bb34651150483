# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled gate-application kernel: in-place 2x2 update with stride arithmetic."""

cimport cython


@cython.boundscheck(False)
@cython.wraparound(False)
def apply_2x2(double complex[::1] amps, int num_qubits, int target,
              unsigned long long control_mask,
              double complex m00, double complex m01,
              double complex m10, double complex m11):
    """Apply a 2x2 matrix to `target`, restricted to indices where all
    control bits are set. Mutates `amps` in place."""
    cdef unsigned long long dim = 1ULL << num_qubits
    cdef unsigned long long tbit = 1ULL << target
    cdef unsigned long long low_mask = tbit - 1
    cdef unsigned long long npairs = dim >> 1
    cdef unsigned long long k, i0, i1
    cdef double complex x0, x1
    if control_mask == 0:
        for k in range(npairs):
            i0 = ((k & ~low_mask) << 1) | (k & low_mask)
            i1 = i0 | tbit
            x0 = amps[i0]
            x1 = amps[i1]
            amps[i0] = m00 * x0 + m01 * x1
            amps[i1] = m10 * x0 + m11 * x1
    else:
        for k in range(npairs):
            i0 = ((k & ~low_mask) << 1) | (k & low_mask)
            if (i0 & control_mask) != control_mask:
                continue
            i1 = i0 | tbit
            x0 = amps[i0]
            x1 = amps[i1]
            amps[i0] = m00 * x0 + m01 * x1
            amps[i1] = m10 * x0 + m11 * x1


BACKEND = "cython"
