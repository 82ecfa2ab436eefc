# coding: utf-8

# # Checking laws
#
# `b` follows from `a` when Prob(a) <= Prob(b) in every realization. Random
# search can refute a law but cannot prove one, so unrefuted laws are
# reported as such.

# In[1]:

from qclogic import parse, search_counterexample
from qclogic.semantics import search

a, b = parse("p and (q or r)"), parse("p and q or p and r")
res = search(b, a, budget=5000, seed=1)
cx = res.counterexample
print(cx.source, round(cx.margin, 6))
print(cx.realization.to_json())


# De Morgan survives the same search.

# In[2]:

print(search_counterexample(parse("not (p and q)"), parse("not p or not q"), 5000, 1))


# The full registry, with a small budget to keep this quick.

# In[3]:

from qclogic.laws import run_suite

suite = run_suite(2000, 0)
print(suite.to_text())
