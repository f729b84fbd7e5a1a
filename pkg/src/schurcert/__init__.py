"""Exact combinatorics for Schur functors in symmetric tensor categories.

When does semisimplicity of S_lam V force semisimplicity of V?  This package
computes the forbidden dimensions F(lam), the trace polynomials behind them,
Littlewood-Richardson data, and checkable certificates for each (lam, d).
"""

__version__ = "0.1.0"

from .partitions import (  # noqa: E402
    add_box,
    conjugate,
    contains_box,
    contents,
    f_set,
    is_hook,
    is_rectangle,
    partition,
    partitions_of,
    remove_boxes,
)
from .characters import branching_multiplicity, chi, irrep_dimension  # noqa: E402
from .polynomials import (  # noqa: E402
    RationalPolynomial,
    content_polynomial,
    p_bruteforce,
    p_charsum,
    p_closed,
    root_set,
)
from .lr import lr_by_tableaux, lr_coefficient, mu_plus, nu_plus  # noqa: E402
from .certify import (  # noqa: E402
    Certificate,
    CounterexampleReport,
    Witness,
    certify,
    verify_certificate,
    verify_counterexample,
)
from .superspace import SuperSpaceSpec, measure_p_scalar, schur_rank  # noqa: E402
