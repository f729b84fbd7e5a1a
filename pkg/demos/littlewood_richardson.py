"""
Littlewood-Richardson coefficients two ways
===========================================

Once through characters of Young subgroups, once by counting skew tableaux.
"""

from schurcert import lr_by_tableaux, lr_coefficient, mu_plus, nu_plus

for lam, mu, nu in [((2, 2), (1, 1), (2,)), ((4, 2), (2, 1), (2, 1)), ((3, 2, 1), (2, 1), (2, 1))]:
    print(lam, mu, nu, lr_coefficient(lam, mu, nu), lr_by_tableaux(lam, mu, nu))

# the one-box extensions a certificate is allowed to use
print(mu_plus((1,), (2,), (2, 2)))
print(nu_plus((1,), (1, 1), (2, 2)))
