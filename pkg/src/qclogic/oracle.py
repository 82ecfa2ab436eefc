"""Dense reference matrices for the gates, used only for verification.

Matrices are built column by column from each gate's action on basis kets,
never by calling the structured kernels in :mod:`qclogic.gates`.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidArgumentError, ResourceLimitError
from .gates import GateKind, GateSpec
from .quregister import Quregister

DEFAULT_WIDTH_CAP = 12

_SQRT_NOT_1 = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])


def matrix_for(spec: GateSpec, width_cap: int = DEFAULT_WIDTH_CAP) -> np.ndarray:
    """Return the ``2**w x 2**w`` matrix of ``spec`` (row-major, complex)."""
    w = spec.width
    if w > width_cap:
        raise ResourceLimitError(
            f"{spec} has width {w}, above the dense-oracle cap of {width_cap}"
        )
    dim = 2**w
    cols = np.arange(dim)
    mat = np.zeros((dim, dim), dtype=np.complex128)
    if spec.kind is GateKind.NOT:
        # |x1..x(n-1), x_n> -> |x1..x(n-1), 1 - x_n>
        mat[cols ^ 1, cols] = 1.0
    elif spec.kind is GateKind.SQRT_NOT:
        # |..., x> -> |...> (x) sqrt(NOT)(1)|x>
        last = cols & 1
        head = cols & ~1
        for out_bit in (0, 1):
            mat[head | out_bit, cols] = _SQRT_NOT_1[out_bit, last]
    else:
        m = spec.m
        x_n = (cols >> (m + 1)) & 1
        y_m = (cols >> 1) & 1
        z = cols & 1
        rows = (cols & ~1) | (np.minimum(x_n, y_m) ^ z)
        mat[rows, cols] = 1.0
    return mat


def apply_dense(matrix: np.ndarray, psi: Quregister) -> Quregister:
    if matrix.ndim != 2 or matrix.shape != (len(psi), len(psi)):
        raise InvalidArgumentError(
            f"matrix of shape {matrix.shape} cannot act on {psi.n_qubits} qubits"
        )
    return Quregister(matrix @ psi.amplitudes)


def apply_dense_batch(matrix: np.ndarray, states: np.ndarray) -> np.ndarray:
    """Apply ``matrix`` to each row of ``states``."""
    if states.shape[-1] != matrix.shape[1]:
        raise InvalidArgumentError("dimension mismatch")
    return states @ matrix.T


def check_unitary(matrix: np.ndarray) -> float:
    """Max entrywise deviation of ``M M^dagger`` from the identity."""
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidArgumentError(f"expected a square matrix, got {matrix.shape}")
    dev = matrix @ matrix.conj().T - np.eye(matrix.shape[0])
    return float(np.abs(dev).max())
