"""Quantum computational semantics: realizations, probability-values,
truth, consequence, and counterexample search.

Evaluation is vectorized over a leading batch axis so that thousands of
sampled realizations can be checked with a handful of array operations.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from . import gates
from .errors import (
    InvalidArgumentError,
    InvalidStateError,
    MissingAssignmentError,
    NotTruthFunctionalError,
)
from .quregister import PROB_TOL, UNIT_TOL, Quregister, prob, qubit
from .syntax import (
    Atom,
    Conj,
    Formula,
    Neg,
    SqrtNeg,
    atoms,
    expand_disjunction,
    has_sqrt_neg,
    iter_atoms,
    parse,
    rename_atoms,
)

# a sample refutes a consequence only when its margin exceeds this
COUNTEREXAMPLE_TOL = 1e-6
FILE_UNIT_TOL = 1e-8
GRID = np.linspace(0.0, 1.0, 11)
_CHUNK = 2048


class Realization(Mapping[str, Quregister]):
    """Assignment of single-qubit unit registers to atom names."""

    def __init__(self, assignment: Mapping[str, Quregister]):
        checked = {}
        for name, q in assignment.items():
            if not isinstance(q, Quregister):
                q = Quregister(np.asarray(q, dtype=np.complex128))
            if q.n_qubits != 1:
                raise InvalidArgumentError(f"atom {name!r} must be a single qubit")
            if not q.is_unit(UNIT_TOL):
                raise InvalidStateError(f"qubit for atom {name!r} is not unit")
            checked[name] = q
        self._assignment = dict(sorted(checked.items()))

    def __getitem__(self, name: str) -> Quregister:
        return self._assignment[name]

    def __iter__(self):
        return iter(self._assignment)

    def __len__(self) -> int:
        return len(self._assignment)

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{k}: ({q.amplitudes[0]:.6g}, {q.amplitudes[1]:.6g})"
            for k, q in self._assignment.items()
        )
        return f"Realization({{{inner}}})"

    def to_dict(self) -> dict:
        out = {}
        for name, q in self._assignment.items():
            a0, a1 = q.amplitudes
            out[name] = {"a0": [a0.real, a0.imag], "a1": [a1.real, a1.imag]}
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Realization":
        """Load the JSON object form ``{"atom": {"a0": [re, im], "a1": [re, im]}}``.

        Vectors are checked against a looser tolerance (1e-8) than internal
        values. Those not already unit to 1e-10 are renormalized, so saved
        realizations load back unchanged.
        """
        if not isinstance(data, Mapping):
            raise InvalidArgumentError("realization must be a JSON object")
        assignment = {}
        for name, entry in data.items():
            try:
                a0 = complex(*entry["a0"])
                a1 = complex(*entry["a1"])
            except (KeyError, TypeError, ValueError) as exc:
                raise InvalidArgumentError(f"malformed entry for atom {name!r}: {exc}") from exc
            sq = abs(a0) ** 2 + abs(a1) ** 2
            if abs(sq - 1.0) > FILE_UNIT_TOL:
                raise InvalidStateError(
                    f"qubit for atom {name!r} has squared norm {sq:.12g}, not 1"
                )
            if abs(sq - 1.0) > UNIT_TOL:
                r = math.sqrt(sq)
                a0, a1 = a0 / r, a1 / r
            assignment[name] = qubit(a0, a1)
        return cls(assignment)

    @classmethod
    def from_json(cls, text: str) -> "Realization":
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_probabilities(cls, probs: Mapping[str, float]) -> "Realization":
        """Real realization with ``Prob(atom) = p``: ``sqrt(1-p)|0> + sqrt(p)|1>``."""
        return cls({k: qubit(math.sqrt(1.0 - p), math.sqrt(p)) for k, p in probs.items()})


@dataclass(frozen=True)
class ConsequenceVerdict:
    holds_at_sample: bool
    prob_left: float
    prob_right: float

    @property
    def margin(self) -> float:
        return self.prob_left - self.prob_right


@dataclass(frozen=True)
class Counterexample:
    """A realization refuting a consequence.

    ``source`` is ``"pinned"`` (published witness), ``"sample"`` (random
    search, ``index`` is the sample number) or ``"grid"``.
    """

    realization: Realization
    margin: float
    source: str
    index: int | None = None


# -- evaluation --------------------------------------------------------------


def _eval_batch(f: Formula, amps: Mapping[str, np.ndarray]) -> np.ndarray:
    if isinstance(f, Atom):
        try:
            return amps[f.name]
        except KeyError:
            raise MissingAssignmentError(f.name) from None
    if isinstance(f, Neg):
        return gates.not_kernel(_eval_batch(f.sub, amps))
    if isinstance(f, SqrtNeg):
        return gates.sqrt_not_kernel(_eval_batch(f.sub, amps))
    if isinstance(f, Conj):
        return gates.and_kernel(_eval_batch(f.left, amps), _eval_batch(f.right, amps))
    raise TypeError(f"unexpanded or unknown formula node {f!r}")


def evaluate_batch(f: Formula, amps: Mapping[str, np.ndarray]) -> np.ndarray:
    """Evaluate ``f`` for a batch of realizations.

    ``amps`` maps each atom to an array of shape ``(B, 2)``; the result has
    shape ``(B, 2**qubit_count(f))``.
    """
    return _eval_batch(expand_disjunction(f), amps)


def prob_batch(f: Formula, amps: Mapping[str, np.ndarray]) -> np.ndarray:
    out = evaluate_batch(f, amps)
    return (np.abs(out[..., 1::2]) ** 2).sum(axis=-1)


def evaluate(f: Formula, r: Mapping[str, Quregister]) -> Quregister:
    """The quregister meaning of ``f`` under realization ``r``."""
    amps = {name: q.amplitudes for name, q in r.items()}
    return Quregister(evaluate_batch(f, amps))


def prob_of(f: Formula, r: Mapping[str, Quregister]) -> float:
    return prob(evaluate(f, r))


def prob_via_atoms(f: Formula, probs: Mapping[str, float]):
    """Probability-value computed from atomic probabilities alone.

    Valid only for formulas without ``snot``; array-valued ``probs``
    broadcast.
    """
    if isinstance(f, Atom):
        try:
            return probs[f.name]
        except KeyError:
            raise MissingAssignmentError(f.name) from None
    if isinstance(f, SqrtNeg):
        raise NotTruthFunctionalError("snot is not truth-functional")
    if isinstance(f, Neg):
        return 1.0 - prob_via_atoms(f.sub, probs)
    a = prob_via_atoms(f.left, probs)
    b = prob_via_atoms(f.right, probs)
    if isinstance(f, Conj):
        return a * b
    return a + b - a * b


def is_true_at(f: Formula, r: Mapping[str, Quregister]) -> bool:
    return prob_of(f, r) >= 1.0 - PROB_TOL


def consequence_at(a: Formula, b: Formula, r: Mapping[str, Quregister]) -> ConsequenceVerdict:
    pa, pb = prob_of(a, r), prob_of(b, r)
    return ConsequenceVerdict(pa <= pb + PROB_TOL, pa, pb)


# -- sampling ----------------------------------------------------------------


def sample_amplitudes(names: Iterable[str], count: int, seed: int) -> dict[str, np.ndarray]:
    """Draw ``count`` realizations as arrays of shape ``(count, 2)`` per atom.

    Each qubit is ``cos(t)|0> + sin(t) e^{i phi}|1>`` with ``t`` uniform on
    [0, pi/2] and ``phi`` uniform on [0, 2 pi). Atoms are taken in sorted
    order and draws are laid out sample-major, so sample ``i`` is the same
    for every ``count > i``.
    """
    names = sorted(set(names))
    rng = np.random.default_rng(seed)
    u = rng.random((count, len(names), 2))
    theta = u[..., 0] * (np.pi / 2)
    phi = u[..., 1] * (2 * np.pi)
    a0 = np.cos(theta)
    a1 = np.sin(theta) * np.exp(1j * phi)
    return {
        name: np.stack([a0[:, k], a1[:, k]], axis=-1).astype(np.complex128)
        for k, name in enumerate(names)
    }


def _row(amps: Mapping[str, np.ndarray], i: int) -> Realization:
    return Realization({name: Quregister(arr[i]) for name, arr in amps.items()})


def sample_realization(names: Iterable[str], seed: int) -> Realization:
    return _row(sample_amplitudes(names, 1, seed), 0)


def sampled_realization(names: Iterable[str], seed: int, index: int) -> Realization:
    """Replay sample ``index`` of the stream for ``seed``."""
    return _row(sample_amplitudes(names, index + 1, seed), index)


# -- counterexample search ---------------------------------------------------

_HALF = math.sqrt(2) / 2
_KNOWN_WITNESSES: list[tuple[str, str | None, dict[str, tuple[complex, complex]]]] = [
    ("p", "p and p", {"p": (_HALF, _HALF)}),
    (None, "p or not p", {"p": (_HALF, _HALF)}),
    (None, "not (p and not p)", {"p": (_HALF, _HALF)}),
    (
        "p and q or p and r",
        "p and (q or r)",
        {"p": (_HALF, _HALF), "q": (_HALF, _HALF), "r": (math.sqrt(3) / 2, 0.5)},
    ),
]


def _canonical(formulas: list[Formula | None]) -> tuple[list[Formula | None], dict[str, str]]:
    """Rename atoms to p, q, r, ... in order of first occurrence."""
    order: dict[str, str] = {}
    for f in formulas:
        if f is None:
            continue
        for name in iter_atoms(f):
            if name not in order:
                order[name] = "pqrstuvwxyz"[len(order)] if len(order) < 11 else f"a{len(order)}"
    return [None if f is None else rename_atoms(f, order) for f in formulas], order


def known_witness(a: Formula | None, b: Formula) -> Realization | None:
    """Published counterexample for ``a |= b`` (or ``|= b`` when ``a`` is
    None), matched up to renaming of atoms."""
    (ca, cb), order = _canonical([a, b])
    back = {v: k for k, v in order.items()}
    for left, right, vecs in _KNOWN_WITNESSES:
        la = None if left is None else parse(left)
        if la == ca and parse(right) == cb:
            return Realization({back[k]: qubit(*v) for k, v in vecs.items()})
    return None


def _margins(a: Formula | None, b: Formula, amps: Mapping[str, np.ndarray]) -> np.ndarray:
    right = prob_batch(b, amps)
    left = 1.0 if a is None else prob_batch(a, amps)
    return left - right


def margin_at(a: Formula | None, b: Formula, r: Mapping[str, Quregister]) -> float:
    """``Prob(a) - Prob(b)``; with ``a`` None, ``1 - Prob(b)``."""
    return (1.0 if a is None else prob_of(a, r)) - prob_of(b, r)


@dataclass
class SearchResult:
    """``samples_used`` and ``max_margin`` cover evaluated realizations
    (witness and random samples); the arithmetic grid stage is reported
    separately in ``grid_points`` and ``grid_max_margin``."""

    counterexample: Counterexample | None
    samples_used: int
    max_margin: float
    grid_points: int = 0
    grid_max_margin: float | None = None


def search(
    a: Formula | None,
    b: Formula,
    budget: int,
    seed: int,
    *,
    use_witnesses: bool = True,
    use_grid: bool = True,
    threshold: float = COUNTEREXAMPLE_TOL,
    stop_at_first: bool = True,
) -> SearchResult:
    """Look for a realization with ``Prob(a) - Prob(b) > threshold``.

    Order: published witness, then ``budget`` random samples, then (for
    snot-free formulas) a grid over atomic probabilities in steps of 0.1.
    With ``stop_at_first=False`` every stage runs to completion and the
    lowest-index counterexample is still the one reported.
    """
    if budget < 1:
        raise InvalidArgumentError("budget must be at least 1")
    names = sorted(atoms(b) | (atoms(a) if a is not None else frozenset()))
    found: Counterexample | None = None
    max_margin = -math.inf
    used = 0

    if use_witnesses:
        w = known_witness(a, b)
        if w is not None:
            m = margin_at(a, b, w)
            used += 1
            max_margin = max(max_margin, m)
            if m > threshold:
                found = Counterexample(w, m, "pinned")
                if stop_at_first:
                    return SearchResult(found, used, max_margin)

    amps = sample_amplitudes(names, budget, seed)
    for start in range(0, budget, _CHUNK):
        chunk = {k: v[start : start + _CHUNK] for k, v in amps.items()}
        margins = _margins(a, b, chunk)
        used += margins.shape[0]
        max_margin = max(max_margin, float(margins.max()))
        if found is None:
            hits = np.flatnonzero(margins > threshold)
            if hits.size:
                i = start + int(hits[0])
                found = Counterexample(_row(amps, i), float(margins[hits[0]]), "sample", i)
                if stop_at_first:
                    return SearchResult(found, used, max_margin)

    free = not has_sqrt_neg(b) and (a is None or not has_sqrt_neg(a))
    if not (use_grid and free):
        return SearchResult(found, used, max_margin)
    pts = np.array(list(itertools.product(GRID, repeat=len(names))))
    probs = {name: pts[:, k] for k, name in enumerate(names)}
    right = prob_via_atoms(b, probs)
    left = 1.0 if a is None else prob_via_atoms(a, probs)
    margins = np.broadcast_to(left - right, (pts.shape[0],))
    if found is None:
        hits = np.flatnonzero(margins > threshold)
        if hits.size:
            i = int(hits[0])
            r = Realization.from_probabilities({n: pts[i, k] for k, n in enumerate(names)})
            # confirm through full evaluation rather than trusting the shortcut
            found = Counterexample(r, margin_at(a, b, r), "grid", i)
    return SearchResult(found, used, max_margin, pts.shape[0], float(margins.max()))


def search_counterexample(
    a: Formula, b: Formula, budget: int, seed: int
) -> Counterexample | None:
    """First realization found with ``Prob(a) - Prob(b) > 1e-6``, or None.

    None means only that no counterexample turned up; it is not a proof that
    ``b`` is a logical consequence of ``a``.
    """
    return search(a, b, budget, seed).counterexample


def search_falsifier(f: Formula, budget: int, seed: int) -> Counterexample | None:
    """Realization at which ``f`` is not true (``1 - Prob(f) > 1e-6``), or None."""
    return search(None, f, budget, seed).counterexample
