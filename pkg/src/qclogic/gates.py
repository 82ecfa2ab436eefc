"""Matrix-free gate kernels: NOT, sqrt(NOT), Toffoli, and the derived AND/OR.

The ``*_kernel`` functions work on raw arrays of shape ``(..., 2**w)`` so a
whole batch of registers can be pushed through in one call; leading axes
are treated as batch dimensions. The public ``apply_*`` functions wrap them
for single :class:`Quregister` values and enforce unit norm.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, InvalidStateError
from .quregister import UNIT_TOL, Quregister, norm

# (1 + i)/2 and (1 - i)/2
SQRT_NOT_DIAG = 0.5 + 0.5j
SQRT_NOT_OFF = 0.5 - 0.5j


class GateKind(str, enum.Enum):
    NOT = "NOT"
    SQRT_NOT = "SQRT_NOT"
    TOFFOLI = "TOFFOLI"


@dataclass(frozen=True)
class GateSpec:
    """A gate instance: ``n`` is the register width for NOT and SQRT_NOT,
    and the first factor's width for TOFFOLI (whose second factor has
    width ``m``)."""

    kind: GateKind
    n: int
    m: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", GateKind(self.kind))
        if self.n < 1:
            raise InvalidArgumentError(f"n must be positive, got {self.n}")
        if self.kind is GateKind.TOFFOLI:
            if self.m is None or self.m < 1:
                raise InvalidArgumentError("TOFFOLI needs a positive m")
        elif self.m is not None:
            raise InvalidArgumentError(f"{self.kind.value} takes no m")

    @property
    def width(self) -> int:
        if self.kind is GateKind.TOFFOLI:
            return self.n + self.m + 1
        return self.n

    def __str__(self) -> str:
        if self.kind is GateKind.TOFFOLI:
            return f"TOFFOLI({self.n},{self.m},1)"
        return f"{self.kind.value}({self.n})"


def _pairs(amps: np.ndarray) -> np.ndarray:
    return amps.reshape(amps.shape[:-1] + (-1, 2))


def not_kernel(amps: np.ndarray) -> np.ndarray:
    out = np.empty_like(amps)
    src, dst = _pairs(amps), _pairs(out)
    dst[..., 0] = src[..., 1]
    dst[..., 1] = src[..., 0]
    return out


def sqrt_not_kernel(amps: np.ndarray) -> np.ndarray:
    out = np.empty_like(amps)
    src, dst = _pairs(amps), _pairs(out)
    c0, c1 = src[..., 0], src[..., 1]
    tmp = np.multiply(c1, SQRT_NOT_OFF)
    np.multiply(c0, SQRT_NOT_DIAG, out=dst[..., 0])
    dst[..., 0] += tmp
    np.multiply(c1, SQRT_NOT_DIAG, out=tmp)
    np.multiply(c0, SQRT_NOT_OFF, out=dst[..., 1])
    dst[..., 1] += tmp
    return out


def toffoli_kernel(amps: np.ndarray, n: int, m: int) -> np.ndarray:
    """Flip the last qubit wherever qubits ``n`` and ``n + m`` (1-based from
    the left) are both 1."""
    width = n + m + 1
    if amps.shape[-1] != 2**width:
        raise InvalidArgumentError(
            f"TOFFOLI({n},{m},1) needs {width} qubits, got {amps.shape[-1].bit_length() - 1}"
        )
    batch = amps.shape[:-1]
    # axes: x1..x(n-1) | xn | y1..y(m-1) | ym | z
    shape = batch + (2 ** (n - 1), 2, 2 ** (m - 1), 2, 2)
    out = amps.copy()
    src, dst = amps.reshape(shape), out.reshape(shape)
    dst[..., 1, :, 1, 0] = src[..., 1, :, 1, 1]
    dst[..., 1, :, 1, 1] = src[..., 1, :, 1, 0]
    return out


def tensor_kernel(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    prod = left[..., :, None] * right[..., None, :]
    return prod.reshape(prod.shape[:-2] + (-1,))


def and_kernel(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    n = left.shape[-1].bit_length() - 1
    m = right.shape[-1].bit_length() - 1
    joint = tensor_kernel(left, right)
    # append an ancilla |0>: amplitudes land on even indices
    ext = np.zeros(joint.shape[:-1] + (2 * joint.shape[-1],), dtype=np.complex128)
    ext[..., 0::2] = joint
    return toffoli_kernel(ext, n, m)


def or_kernel(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    return not_kernel(and_kernel(not_kernel(left), not_kernel(right)))


def _require_unit(psi: Quregister) -> None:
    if abs(norm(psi) ** 2 - 1.0) > UNIT_TOL:
        raise InvalidStateError(
            f"gates act on unit quregisters; squared norm is {norm(psi) ** 2:.17g}"
        )


def apply_not(psi: Quregister) -> Quregister:
    """Invert the last bit of every basis ket."""
    _require_unit(psi)
    return Quregister(not_kernel(psi.amplitudes))


def apply_sqrt_not(psi: Quregister) -> Quregister:
    """Apply sqrt(NOT) to the last qubit. Two applications equal NOT."""
    _require_unit(psi)
    return Quregister(sqrt_not_kernel(psi.amplitudes))


def apply_toffoli(psi: Quregister, n: int, m: int) -> Quregister:
    _require_unit(psi)
    if n < 1 or m < 1:
        raise InvalidArgumentError(f"TOFFOLI arities must be positive, got ({n}, {m})")
    if psi.n_qubits != n + m + 1:
        raise InvalidArgumentError(
            f"TOFFOLI({n},{m},1) needs {n + m + 1} qubits, got {psi.n_qubits}"
        )
    return Quregister(toffoli_kernel(psi.amplitudes, n, m))


def apply_gate(spec: GateSpec, psi: Quregister) -> Quregister:
    if psi.n_qubits != spec.width:
        raise InvalidArgumentError(f"{spec} needs {spec.width} qubits, got {psi.n_qubits}")
    if spec.kind is GateKind.NOT:
        return apply_not(psi)
    if spec.kind is GateKind.SQRT_NOT:
        return apply_sqrt_not(psi)
    return apply_toffoli(psi, spec.n, spec.m)


def apply_gate_kernel(spec: GateSpec, amps: np.ndarray) -> np.ndarray:
    if spec.kind is GateKind.NOT:
        return not_kernel(amps)
    if spec.kind is GateKind.SQRT_NOT:
        return sqrt_not_kernel(amps)
    return toffoli_kernel(amps, spec.n, spec.m)


def and_gate(phi: Quregister, psi: Quregister) -> Quregister:
    """``T(n,m,1)(phi (x) psi (x) |0>)``; width ``n + m + 1``."""
    _require_unit(phi)
    _require_unit(psi)
    return Quregister(and_kernel(phi.amplitudes, psi.amplitudes))


def or_gate(phi: Quregister, psi: Quregister) -> Quregister:
    """De Morgan dual of :func:`and_gate`: ``NOT(AND(NOT phi, NOT psi))``."""
    return apply_not(and_gate(apply_not(phi), apply_not(psi)))
