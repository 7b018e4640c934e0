"""
Separation axioms with cross-checked routes
===========================================

Each axiom is computed along its definition and along its characterizations;
classify_space refuses to answer if they ever disagree.
"""

from semispace.axioms import classify_space
from semispace.core import discrete, indiscrete, sierpinski

for name, space in (("sierpinski", sierpinski()), ("indiscrete(3)", indiscrete(3)),
                    ("discrete(2)", discrete(2))):
    profile = classify_space(space)
    on = [k for k, v in profile.flags().items() if v]
    print(f"{name}: {', '.join(on) or 'nothing'}")

for flag, routes in classify_space(sierpinski()).provenance.items():
    print(f"  {flag}: {routes}")
print(classify_space(sierpinski()).scale_notes[0])
