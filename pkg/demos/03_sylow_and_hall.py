"""
Sylow and Hall sub-skew braces
==============================

For a supersoluble brace the constructive search follows the recursion
through a minimal ideal of prime order and records every step.
"""
from sympy import primefactors

from skewbrace.catalog import small_group
from skewbrace.enumeration import braces_on_group
from skewbrace.structure import (brace_is_supersoluble, hall_subbrace_bruteforce,
                                 hall_subbrace_constructive, replay,
                                 sylow_subbrace_constructive, verify_theorems)

braces = braces_on_group(small_group("D15"))
B = braces[5]
print(B, "supersoluble:", brace_is_supersoluble(B))

for p in primefactors(B.order):
    S, trace = sylow_subbrace_constructive(B, p)
    print(f"\nSylow {p}: {S}")
    print(trace.to_text())
    # the recorded steps rebuild the same answer
    assert replay(B, trace) == S

S, _ = hall_subbrace_constructive(B, {2, 5})
print("\nHall {2, 5}:", S, " brute force:", hall_subbrace_bruteforce(B, {2, 5}))

print()
print(verify_theorems(B).to_text())
