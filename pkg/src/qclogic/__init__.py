"""Quantum computational logic: quregister semantics for a sentential
language with negation, conjunction and the square root of negation."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    InvalidArgumentError,
    InvalidStateError,
    MissingAssignmentError,
    NotTruthFunctionalError,
    ParseError,
    QCLError,
    ResourceLimitError,
)
from .gates import (  # noqa: E402
    GateKind,
    GateSpec,
    and_gate,
    apply_not,
    apply_sqrt_not,
    apply_toffoli,
    or_gate,
)
from .quregister import (  # noqa: E402
    Quregister,
    basis_state,
    inner_product,
    norm,
    prob,
    qubit,
    tensor,
)
from .semantics import (  # noqa: E402
    Realization,
    consequence_at,
    evaluate,
    is_true_at,
    prob_of,
    prob_via_atoms,
    sample_realization,
    search_counterexample,
    search_falsifier,
)
from .syntax import parse, qubit_count  # noqa: E402

__all__ = [
    "GateKind", "GateSpec", "InvalidArgumentError", "InvalidStateError",
    "MissingAssignmentError", "NotTruthFunctionalError", "ParseError", "QCLError",
    "Quregister", "Realization", "ResourceLimitError", "and_gate", "apply_not",
    "apply_sqrt_not", "apply_toffoli", "basis_state", "consequence_at", "evaluate",
    "inner_product", "is_true_at", "norm", "or_gate", "parse", "prob", "prob_of",
    "prob_via_atoms", "qubit", "qubit_count", "sample_realization",
    "search_counterexample", "search_falsifier", "tensor",
]
