# coding: utf-8

# # Formulas
#
# Connectives are `not`, `snot` (square root of not), `and`, `or`.
# A realization assigns one qubit to each atom, and a formula evaluates to a
# register with one qubit per atom occurrence plus one ancilla per `and`/`or`.

# In[1]:

from qclogic import Realization, evaluate, parse, prob_of, qubit_count
from qclogic.syntax import format

f = parse("not (p and q) or snot r")
print(format(f), "| width", qubit_count(f))


# In[2]:

alpha = Realization.from_probabilities({"p": 0.5, "q": 0.2, "r": 0.9})
out = evaluate(f, alpha)
print(out.n_qubits, "qubits, Prob =", round(prob_of(f, alpha), 6))


# Atoms that repeat are separate copies, so `p and p` is not `p`.

# In[3]:

g = parse("p and p")
print(prob_of(parse("p"), alpha), prob_of(g, alpha))


# Realizations round-trip through JSON, the same format the CLI reads.

# In[4]:

text = alpha.to_json()
print(text)
print(Realization.from_json(text).to_json() == text)
