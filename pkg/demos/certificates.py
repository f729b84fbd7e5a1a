"""
Certificates and counterexamples
================================

certify(lam, d) returns either a certificate (d is allowed) or a report
naming a family of counterexamples (d is forbidden).  Both come with a
verifier that recomputes everything from scratch.
"""

import json

from schurcert import certify
from schurcert.certify import load, verify

cert = certify((1, 1), 3)
print(json.dumps(cert.to_json(), indent=1, sort_keys=True))
print(verify(cert))

# d = 0 is forbidden for (2,2): the super space of dimension (1|1) kills it
report = certify((2, 2), 0)
print(report, verify(report))

# documents survive a round trip through JSON
again = load(json.loads(json.dumps(cert.to_json())))
print(again == cert)

# in characteristic 7 the dimension 9 behaves like 2
print(type(certify((1, 1, 1), 9, 7)).__name__, type(certify((1, 1, 1), 9)).__name__)

# a few branches fall outside the explicit constructions and need the search
cert = certify((2, 1, 1), 3)
print({b: w.recipe for b, w in cert.branches.items()})
