"""
Three routes to the trace polynomial
====================================

p_beta(d) can be read off the contents of beta, summed over characters, or
expanded by brute force in the group algebra.  All three agree exactly.
"""

from schurcert import content_polynomial, p_bruteforce, p_charsum, p_closed, root_set

beta = (2, 1)
print("contents:", content_polynomial(beta))
print("closed:  ", p_closed(beta))
print("charsum: ", p_charsum(beta))

# both ways of growing (2,1) from S_2 give the same answer
for alpha in [(2,), (1, 1)]:
    print("brute force from", alpha, ":", p_bruteforce(alpha, beta))

# the integer roots are what the certifier has to avoid
print("roots:", sorted(root_set(beta)))

# polynomials are exact: evaluate at any rational
print(p_closed((3, 2))(7), p_closed((1, 1, 1, 1))(-2))
