import math

import numpy as np
import pytest

from qclogic.gates import GateKind, GateSpec
from qclogic.oracle import matrix_for
from qclogic.syntax import Atom, Conj, Disj, Neg, SqrtNeg

HALF = math.sqrt(2) / 2

_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_qubit(rng):
    z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return z / np.linalg.norm(z)


def dense_eval(f, amps):
    """Reference evaluator: explicit Kronecker products and dense gate
    matrices, no structured kernels. ``amps`` maps atom -> length-2 array."""
    if isinstance(f, Atom):
        return np.asarray(amps[f.name], dtype=complex)
    if isinstance(f, Disj):
        return dense_eval(Neg(Conj(Neg(f.left), Neg(f.right))), amps)
    if isinstance(f, (Neg, SqrtNeg)):
        sub = dense_eval(f.sub, amps)
        w = sub.shape[0].bit_length() - 1
        kind = GateKind.NOT if isinstance(f, Neg) else GateKind.SQRT_NOT
        return matrix_for(GateSpec(kind, w)) @ sub
    left, right = dense_eval(f.left, amps), dense_eval(f.right, amps)
    n = left.shape[0].bit_length() - 1
    m = right.shape[0].bit_length() - 1
    joint = np.kron(np.kron(left, right), np.array([1.0, 0.0]))
    return matrix_for(GateSpec(GateKind.TOFFOLI, n, m)) @ joint


def dense_prob(f, amps):
    v = dense_eval(f, amps)
    return float(sum(abs(v[j]) ** 2 for j in range(1, v.shape[0], 2)))


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line per acceptance criterion."""
    lines = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])

    def record(label, ok, detail=""):
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        print(lines[-1])
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
