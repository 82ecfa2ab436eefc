"""Quregisters: amplitude vectors over the computational basis of (C^2)^n.

Index ``j`` of the amplitude array encodes the basis ket ``|x1, ..., xn>``
with ``x1`` as the most significant bit, and ``|0> = (1, 0)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidArgumentError, InvalidStateError

UNIT_TOL = 1e-10
PROB_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Quregister:
    """Immutable complex amplitude vector of length ``2**n_qubits``."""

    amplitudes: np.ndarray
    n_qubits: int = field(init=False)

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        size = amps.shape[0]
        if size < 2 or size & (size - 1):
            raise InvalidArgumentError(
                f"amplitude count must be a power of two >= 2, got {size}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "n_qubits", size.bit_length() - 1)

    def __len__(self) -> int:
        return self.amplitudes.shape[0]

    def __repr__(self) -> str:
        return f"Quregister(n_qubits={self.n_qubits}, amplitudes={self.amplitudes!r})"

    def is_unit(self, tol: float = UNIT_TOL) -> bool:
        return abs(norm(self) ** 2 - 1.0) <= tol

    def allclose(self, other: "Quregister", atol: float = 1e-12) -> bool:
        return self.n_qubits == other.n_qubits and bool(
            np.allclose(self.amplitudes, other.amplitudes, rtol=0.0, atol=atol)
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n_qubits,
            "amps": [[float(a.real), float(a.imag)] for a in self.amplitudes],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Quregister":
        try:
            n = int(data["n"])
            amps = [complex(re, im) for re, im in data["amps"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgumentError(f"malformed quregister object: {exc}") from exc
        if len(amps) != 2**n:
            raise InvalidArgumentError(
                f"expected {2**n} amplitudes for n={n}, got {len(amps)}"
            )
        return cls(np.array(amps))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Quregister":
        return cls.from_dict(json.loads(text))


def qubit(a0: complex, a1: complex) -> Quregister:
    """Single-qubit register ``a0|0> + a1|1>``."""
    return Quregister(np.array([a0, a1], dtype=np.complex128))


def basis_index(bits: Sequence[int]) -> int:
    j = 0
    for b in bits:
        if b not in (0, 1):
            raise InvalidArgumentError(f"bit values must be 0 or 1, got {b!r}")
        j = (j << 1) | b
    return j


def basis_state(bits: Sequence[int]) -> Quregister:
    """Computational-basis register ``|x1, ..., xn>``."""
    bits = list(bits)
    if not bits:
        raise InvalidArgumentError("basis_state needs at least one bit")
    amps = np.zeros(2 ** len(bits), dtype=np.complex128)
    amps[basis_index(bits)] = 1.0
    return Quregister(amps)


def tensor(phi: Quregister, psi: Quregister) -> Quregister:
    # np.kron puts phi's index in the high bits, matching j * 2**n_psi + k
    return Quregister(np.kron(phi.amplitudes, psi.amplitudes))


def norm(psi: Quregister) -> float:
    return float(np.linalg.norm(psi.amplitudes))


def inner_product(psi: Quregister, phi: Quregister) -> complex:
    """Return ``<psi|phi>``, conjugate-linear in the first argument."""
    if psi.n_qubits != phi.n_qubits:
        raise InvalidArgumentError(
            f"dimension mismatch: {psi.n_qubits} vs {phi.n_qubits} qubits"
        )
    return complex(np.vdot(psi.amplitudes, phi.amplitudes))


def true_indices(n_qubits: int) -> np.ndarray:
    """Indices of basis kets ending in 1 (odd ``j``)."""
    return np.arange(1, 2**n_qubits, 2)


def false_indices(n_qubits: int) -> np.ndarray:
    """Indices of basis kets ending in 0 (even ``j``)."""
    return np.arange(0, 2**n_qubits, 2)


def prob(psi: Quregister) -> float:
    """Probability that the register ends in ``|1>``.

    Sub-normalized vectors are accepted; a squared norm above
    ``1 + 1e-10`` raises :class:`InvalidStateError`.
    """
    sq = np.abs(psi.amplitudes) ** 2
    if sq.sum() > 1.0 + UNIT_TOL:
        raise InvalidStateError(f"squared norm {sq.sum():.17g} exceeds 1")
    return float(sq[1::2].sum())


def random_state(n_qubits: int, rng: np.random.Generator) -> Quregister:
    """Haar-random unit register drawn from ``rng``."""
    return Quregister(random_amplitudes(n_qubits, rng))


def random_amplitudes(n_qubits: int, rng: np.random.Generator, size: int | None = None):
    shape = (2**n_qubits,) if size is None else (size, 2**n_qubits)
    z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return z / np.linalg.norm(z, axis=-1, keepdims=True)
