# coding: utf-8

# # Probability values
#
# AND, NOT and OR behave like product, complement and probabilistic sum on
# the probability of truth. The square root of NOT does not: two qubits with
# the same probability can land on different values.

# In[1]:

import numpy as np

from qclogic import and_gate, apply_not, apply_sqrt_not, or_gate, prob, qubit

rng = np.random.default_rng(0)


# In[2]:

psi = qubit(0.6, 0.8)
phi = qubit(np.sqrt(0.3), np.sqrt(0.7) * 1j)
p, q = prob(psi), prob(phi)
print(f"p={p:.4f} q={q:.4f}")
print(f"AND {prob(and_gate(psi, phi)):.4f} vs {p * q:.4f}")
print(f"NOT {prob(apply_not(psi)):.4f} vs {1 - p:.4f}")
print(f"OR  {prob(or_gate(psi, phi)):.4f} vs {p + q - p * q:.4f}")


# Applied to the output of AND, the square root of NOT always gives 1/2.

# In[3]:

from qclogic.quregister import random_state

vals = [prob(apply_sqrt_not(and_gate(random_state(1, rng), random_state(1, rng)))) for _ in range(5)]
print(np.round(vals, 12))


# Two qubits with probability 1/2 each, differing only in a relative phase.

# In[4]:

h = np.sqrt(2) / 2
a = qubit(h, h)
b = qubit(h, h * (h + h * 1j))
print(prob(a), prob(b))
print(prob(apply_sqrt_not(a)), prob(apply_sqrt_not(b)))
