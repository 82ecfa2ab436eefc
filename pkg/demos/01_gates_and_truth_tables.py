# coding: utf-8

# # Gates on quregisters
#
# A quregister is a unit vector of 2**n complex amplitudes. Index j is read
# as an n-bit string, most significant bit first, and a register "is true"
# on the odd indices (last qubit equal to 1).

# In[1]:

import itertools

import numpy as np

from qclogic import apply_not, apply_sqrt_not, apply_toffoli, basis_state, prob, qubit


# Toffoli on classical inputs flips the target only when both controls are 1.

# In[2]:

for bits in itertools.product((0, 1), repeat=3):
    out = apply_toffoli(basis_state(bits), 1, 1)
    j = int(np.flatnonzero(np.abs(out.amplitudes) > 0.5)[0])
    print(bits, "->", tuple(int(b) for b in format(j, "03b")))


# Two square roots of NOT make a NOT.

# In[3]:

psi = qubit(0.6, 0.8j)
twice = apply_sqrt_not(apply_sqrt_not(psi))
print(twice.allclose(apply_not(psi), atol=1e-12))


# |+> is a fixed point of both NOT and its square root.

# In[4]:

plus = qubit(1 / np.sqrt(2), 1 / np.sqrt(2))
print(apply_not(plus).allclose(plus), apply_sqrt_not(plus).allclose(plus))
print("Prob(|+>) =", prob(plus))
