"""
Classifying every subset of a space
===================================

The census lists each subset with its class flags.
"""

from semispace.classes import CLASS_FLAGS, census, decompose_slambda
from semispace.core import format_subset, indiscrete, sierpinski

for name, space in (("sierpinski", sierpinski()), ("indiscrete(2)", indiscrete(2))):
    print(name)
    print("  subset ", " ".join(f[:10].rjust(10) for f in CLASS_FLAGS))
    for row in census(space):
        print("  ", format_subset(row.subset).ljust(6),
              " ".join(("yes" if v else "-").rjust(10) for v in row.flags().values()))

# an sλ*-closed set is its kernel cut down by its semi-closure
print("decomposition of {1}:", decompose_slambda(sierpinski(), 0b10))
# {0} in the indiscrete pair is sg*-closed yet has no such decomposition
print("indiscrete {0}:", decompose_slambda(indiscrete(2), 0b01))
