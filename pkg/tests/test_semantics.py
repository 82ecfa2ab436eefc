import cmath
import json
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qclogic.errors import (
    InvalidArgumentError,
    InvalidStateError,
    MissingAssignmentError,
    NotTruthFunctionalError,
)
from qclogic.gates import apply_not
from qclogic.quregister import prob, qubit
from qclogic.semantics import (
    Realization,
    consequence_at,
    evaluate,
    is_true_at,
    known_witness,
    prob_of,
    prob_via_atoms,
    sample_amplitudes,
    sample_realization,
    sampled_realization,
    search,
    search_counterexample,
    search_falsifier,
)
from qclogic.syntax import atoms, has_sqrt_neg, parse, qubit_count

from conftest import HALF, dense_eval, dense_prob, random_qubit
from test_syntax import formulas, random_formula

PLUS = Realization({"p": (HALF, HALF)})


def real(**kw):
    return Realization({k: qubit(*v) for k, v in kw.items()})


def test_evaluate_disjunction_amplitudes():
    a0, a1 = 0.6, 0.8j
    b0, b1 = HALF, -HALF
    out = evaluate(parse("p or q"), real(p=(a0, a1), q=(b0, b1))).amplitudes
    textbook = np.zeros(8, complex)
    textbook[0b111] = a1 * b1
    textbook[0b101] = a1 * b0
    textbook[0b011] = a0 * b1
    textbook[0b000] = a0 * b0
    # equal once the two argument qubits (negated by the inner NOTs) are complemented
    assert np.allclose(out[[j ^ 0b110 for j in range(8)]], textbook, atol=1e-15)
    want = abs(a1 * b1) ** 2 + abs(a1 * b0) ** 2 + abs(a0 * b1) ** 2
    assert prob(evaluate(parse("p or q"), real(p=(a0, a1), q=(b0, b1)))) == pytest.approx(want)


def test_double_negation_is_exact(rng):
    r = Realization({"p": random_qubit(rng)})
    assert np.array_equal(evaluate(parse("not not p"), r).amplitudes, r["p"].amplitudes)


def test_snot_snot_is_not(rng):
    r = Realization({"p": random_qubit(rng)})
    got = evaluate(parse("snot snot p"), r)
    assert got.allclose(apply_not(r["p"]), atol=1e-15)


def test_evaluate_matches_dense_oracle():
    rnd = random.Random(7)
    rng = np.random.default_rng(7)
    for _ in range(150):
        f = random_formula(rnd, rnd.randint(0, 4))
        if qubit_count(f) > 10:
            continue
        amps = {name: random_qubit(rng) for name in atoms(f)}
        got = evaluate(f, Realization(amps))
        assert got.n_qubits == qubit_count(f)
        assert np.abs(got.amplitudes - dense_eval(f, amps)).max() <= 1e-12
        assert got.is_unit(1e-9)


def test_missing_assignment():
    with pytest.raises(MissingAssignmentError) as info:
        evaluate(parse("p and q"), PLUS)
    assert info.value.name == "q"


def test_prob_of_reference_values():
    assert prob_of(parse("p"), PLUS) == pytest.approx(0.5, abs=1e-9)
    assert prob_of(parse("p and p"), PLUS) == pytest.approx(0.25, abs=1e-9)
    assert prob_of(parse("p or not p"), PLUS) == pytest.approx(0.75, abs=1e-9)
    assert prob_of(parse("not (p and not p)"), PLUS) == pytest.approx(0.75, abs=1e-9)


def test_prob_via_atoms_examples():
    assert prob_via_atoms(parse("p and q"), {"p": 0.5, "q": 0.25}) == pytest.approx(0.125)
    # brute force over the classical truth table, one independent bit per atom
    # occurrence (each occurrence gets its own qubit): p1 q p2 r
    f = parse("(p and q) or (p and r)")
    probs = {"p": 0.5, "q": 0.5, "r": 0.25}
    occ = ["p", "q", "p", "r"]
    brute = 0.0
    for bits in np.ndindex(*(2,) * len(occ)):
        weight = math.prod(probs[a] if b else 1 - probs[a] for a, b in zip(occ, bits))
        if (bits[0] and bits[1]) or (bits[2] and bits[3]):
            brute += weight
    assert brute == pytest.approx(11 / 32, abs=1e-15)
    assert prob_via_atoms(f, probs) == pytest.approx(brute, abs=1e-15)


def test_prob_via_atoms_rejects_snot():
    with pytest.raises(NotTruthFunctionalError):
        prob_via_atoms(parse("snot p"), {"p": 0.5})


def test_truth_functional_agreement():
    rnd = random.Random(99)
    rng = np.random.default_rng(99)
    checked = 0
    while checked < 1000:
        f = random_formula(rnd, rnd.randint(0, 4))
        if has_sqrt_neg(f) or qubit_count(f) > 11:
            continue
        r = Realization({name: random_qubit(rng) for name in atoms(f)})
        probs = {name: prob(q) for name, q in r.items()}
        assert prob_via_atoms(f, probs) == pytest.approx(prob_of(f, r), abs=1e-9)
        checked += 1


def test_is_true_at():
    assert is_true_at(parse("p"), real(p=(0, 1)))
    assert not is_true_at(parse("p"), real(p=(1, 0)))
    assert not is_true_at(parse("p or not p"), PLUS)
    assert is_true_at(parse("not (p and q)"), real(p=(1, 0), q=(0, 1)))


def test_consequence_at():
    v = consequence_at(parse("p"), parse("p and p"), PLUS)
    assert not v.holds_at_sample
    assert v.margin == pytest.approx(0.25, abs=1e-12)
    rng = np.random.default_rng(3)
    for _ in range(50):
        r = Realization({"p": random_qubit(rng)})
        assert consequence_at(parse("p and p"), parse("p"), r).holds_at_sample
        v = consequence_at(parse("not not p"), parse("p"), r)
        assert v.holds_at_sample and v.margin == 0.0


def test_sample_realization_deterministic():
    a = sample_realization({"p", "q"}, seed=5)
    b = sample_realization({"q", "p"}, seed=5)
    assert a.to_dict() == b.to_dict()
    assert sample_realization({"p"}, 6).to_dict() != sample_realization({"p"}, 5).to_dict()
    for q in a.values():
        assert q.is_unit(1e-12)


def test_sample_stream_independent_of_count():
    small = sample_amplitudes(["p", "q"], 3, seed=11)
    big = sample_amplitudes(["p", "q"], 500, seed=11)
    for k in small:
        assert np.array_equal(small[k], big[k][:3])
    assert sampled_realization(["p", "q"], 11, 2).to_dict() == Realization(
        {k: v[2] for k, v in big.items()}
    ).to_dict()


def test_sample_mean_prob():
    # prob(p) = sin^2(theta), theta ~ U[0, pi/2], has mean 1/2
    a1 = sample_amplitudes(["p"], 10_000, seed=0)["p"][:, 1]
    assert np.mean(np.abs(a1) ** 2) == pytest.approx(0.5, abs=0.02)
    norms = np.abs(sample_amplitudes(["p"], 1000, seed=1)["p"]) ** 2
    assert np.abs(norms.sum(axis=1) - 1).max() <= 1e-12


@settings(max_examples=60, deadline=None)
@given(formulas, st.integers(0, 2**31), st.floats(0, 2 * math.pi, allow_nan=False))
def test_global_phase_invariance(f, seed, gamma):
    if qubit_count(f) > 12:
        return
    rng = np.random.default_rng(seed)
    amps = {name: random_qubit(rng) for name in sorted(atoms(f))}
    target = sorted(amps)[seed % len(amps)]
    rotated = dict(amps, **{target: amps[target] * cmath.exp(1j * gamma)})
    assert prob_of(f, Realization(rotated)) == pytest.approx(prob_of(f, Realization(amps)), abs=1e-12)


def test_search_finds_semiidempotence_counterexample():
    cx = search_counterexample(parse("p"), parse("p and p"), budget=10, seed=0)
    assert cx is not None and cx.source == "pinned"
    assert cx.margin == pytest.approx(0.25, abs=1e-9)
    # without the witness table random sampling still finds one quickly
    res = search(parse("p"), parse("p and p"), 100, 0, use_witnesses=False)
    assert res.counterexample.source == "sample"
    assert res.counterexample.margin > 1e-6


def test_search_none_for_double_negation():
    assert search_counterexample(parse("not not p"), parse("p"), 10_000, 0) is None


def test_search_distributivity_witness():
    cx = search_counterexample(parse("(p and q) or (p and r)"), parse("p and (q or r)"), 5, 0)
    assert cx.source == "pinned"
    assert cx.realization["r"].allclose(qubit(math.sqrt(3) / 2, 0.5), atol=1e-15)
    assert cx.realization["p"].allclose(qubit(HALF, HALF), atol=1e-15)
    assert cx.margin == pytest.approx(1 / 32, abs=1e-9)


def test_known_witness_up_to_renaming():
    w = known_witness(parse("(x and y) or (x and z)"), parse("x and (y or z)"))
    assert set(w) == {"x", "y", "z"}
    assert w["z"].allclose(qubit(math.sqrt(3) / 2, 0.5), atol=1e-15)
    assert known_witness(parse("p"), parse("q")) is None


def test_search_falsifier():
    cx = search_falsifier(parse("a or not a"), 10, 0)
    assert cx.source == "pinned" and cx.margin == pytest.approx(0.25, abs=1e-9)
    assert search_falsifier(parse("not (p and not p)"), 10, 0).margin == pytest.approx(0.25)


def test_grid_stage_only_for_snot_free():
    # tiny budget, no witness: the grid still refutes p |= p and p
    res = search(parse("p"), parse("p and p"), 1, 123456, use_witnesses=False)
    assert res.counterexample is not None
    res = search(parse("p and p"), parse("p"), 1, 0)
    assert res.counterexample is None
    assert res.samples_used == 1 and res.grid_points == 11
    res = search(parse("snot p"), parse("snot p"), 1, 0)
    assert res.samples_used == 1 and res.grid_points == 0


def test_search_lowest_index_regardless_of_stop():
    a, b = parse("p or q"), parse("p and q")
    first = search(a, b, 3000, 9, use_witnesses=False, use_grid=False)
    full = search(a, b, 3000, 9, use_witnesses=False, use_grid=False, stop_at_first=False)
    assert first.counterexample.index == full.counterexample.index
    i = first.counterexample.index
    replay = sampled_realization(["p", "q"], 9, i)
    assert replay.to_dict() == first.counterexample.realization.to_dict()


def test_search_budget_validation():
    with pytest.raises(InvalidArgumentError):
        search(parse("p"), parse("p"), 0, 0)


def test_realization_json_round_trip(tmp_path):
    r = sample_realization({"p", "q", "r"}, 4)
    back = Realization.from_json(r.to_json())
    for k in r:
        assert np.array_equal(back[k].amplitudes, r[k].amplitudes)
    assert back.to_json() == r.to_json()
    path = tmp_path / "r.json"
    path.write_text(json.dumps({"p": {"a0": [HALF, 0], "a1": [0, HALF]}}))
    assert prob_of(parse("p"), Realization.from_json(path.read_text())) == pytest.approx(0.5)


def test_realization_json_tolerance():
    slightly_off = {"p": {"a0": [0.6 + 1e-9, 0], "a1": [0.8, 0]}}
    assert Realization.from_dict(slightly_off)["p"].is_unit(1e-14)
    with pytest.raises(InvalidStateError):
        Realization.from_dict({"p": {"a0": [0.6 + 1e-6, 0], "a1": [0.8, 0]}})
    with pytest.raises(InvalidArgumentError):
        Realization.from_dict({"p": {"a0": [1, 0]}})
    with pytest.raises(InvalidArgumentError):
        Realization.from_dict([1, 2])


def test_realization_validation():
    with pytest.raises(InvalidStateError):
        Realization({"p": (1.0, 1.0)})
    with pytest.raises(InvalidArgumentError):
        Realization({"p": np.ones(4) / 2})


def test_distributivity_recomputed_by_dense_oracle():
    amps = {"p": np.array([HALF, HALF]), "q": np.array([HALF, HALF]),
            "r": np.array([math.sqrt(3) / 2, 0.5])}
    left = dense_prob(parse("(p and q) or (p and r)"), amps)
    right = dense_prob(parse("p and (q or r)"), amps)
    assert left == pytest.approx(11 / 32, abs=1e-12)
    assert right == pytest.approx(10 / 32, abs=1e-12)
