"""
Checking the identities in super vector spaces
==============================================

Q^{r|s} is a concrete category where dimension r - s can be negative.  The
symmetric group acts on tensor powers with Koszul signs, and the Schur
projectors can be ranked exactly.
"""

from schurcert import SuperSpaceSpec, measure_p_scalar, p_charsum, schur_rank
from schurcert.superspace import invariant_suite, partial_trace_last, permutation_action
from schurcert.symgroup import from_cycles

v = SuperSpaceSpec(2, 1)

# a 3-cycle has one cycle, so its partial trace is the identity
print(partial_trace_last(permutation_action(from_cycles(3, (1, 2, 3)), v), v, 3).to_dense())

# S_(2,2) vanishes on (1|1) since the box (2,2) is there
print(schur_rank((2, 2), SuperSpaceSpec(1, 1)))
print(schur_rank((2, 1), v))

# the measured scalar is the trace polynomial at r - s
print(measure_p_scalar((1, 1), (2, 1), v), p_charsum((2, 1))(v.sdim))

for check in invariant_suite(3, 3):
    print(check["name"], check["cases"], "ok" if check["pass"] else "FAILED")
