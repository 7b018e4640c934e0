"""
Semi-open sets and their operators
==================================

A is semi-open when G <= A <= cl G for some open G.
"""

from semispace.core import Space, format_subset, sierpinski, subset
from semispace.semiops import (
    covee, is_semi_open, kernel, semi_closure, semi_derived, semi_interior,
    semi_open_family,
)

three = Space(3, [subset(p) for p in ([], [0], [1], [0, 1], [0, 1, 2])])
print("semi-open sets:", [format_subset(m) for m in semi_open_family(three)])

# two semi-open sets whose intersection is not semi-open
a, b = subset([0, 2]), subset([1, 2])
print(format_subset(a), is_semi_open(three, a), format_subset(b), is_semi_open(three, b))
print("meet", format_subset(a & b), "semi-open:", is_semi_open(three, a & b))

s = sierpinski()
for a in range(4):
    print(
        format_subset(a).ljust(7),
        "scl", format_subset(semi_closure(s, a)).ljust(7),
        "sint", format_subset(semi_interior(s, a)).ljust(7),
        "sD", format_subset(semi_derived(s, a)).ljust(7),
        "kernel", format_subset(kernel(s, a)).ljust(7),
        "covee", format_subset(covee(s, a)),
    )
