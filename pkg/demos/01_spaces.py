"""
Finite spaces, closure and canonical forms
==========================================

Subsets are int bit masks; point i is bit i.
"""

from semispace.core import (
    Space, canonical_form, closure, complete_to_topology, format_subset,
    interior, relabel, sierpinski, subset, MissingFull,
)

# Sierpinski space: {0} is open, {1} is not
s = sierpinski()
print("opens:", [format_subset(m) for m in s.opens])
print("closure {0}:", format_subset(closure(s, subset([0]))))
print("interior {1}:", format_subset(interior(s, subset([1]))))

# validation names the failing axiom
try:
    Space(2, [0, subset([0]), subset([1])])
except MissingFull as exc:
    print("rejected:", exc)

# generate a topology from a subbasis
t = complete_to_topology(3, [subset([0]), subset([1])])
print("generated:", [format_subset(m) for m in t.opens])

# relabelled copies share one canonical form
print("same class:", canonical_form(relabel(s, [1, 0])) == canonical_form(s))
