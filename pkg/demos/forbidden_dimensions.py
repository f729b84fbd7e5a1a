"""
Forbidden dimensions of a Schur functor
=======================================

For each partition lam there is a finite set F(lam) of dimensions d for
which a semisimple S_lam V says nothing about V.  Everything else is safe.
"""

from schurcert import conjugate, f_set, partitions_of

# columns forbid 2..n, rows forbid -n..-2
print(f_set((1, 1, 1, 1)))
print(f_set((4,)))

# (2,1) forbids nothing at all
print(f_set((2, 1)))

# the whole table for n = 4, with the conjugate alongside
for lam in partitions_of(4):
    print(lam, sorted(f_set(lam)), "  conjugate", conjugate(lam), sorted(f_set(conjugate(lam))))
