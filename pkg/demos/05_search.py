"""
Enumeration, sweeps and witnesses
=================================

Everything here is exhaustive over small ground sets.
"""

import time

from semispace.search.enumeration import brute_force_families, enumerate_topologies
from semispace.search.sweep import verify_theorems
from semispace.search.witness import find_witness
from semispace.core import format_subset

for n in (1, 2, 3, 4):
    labeled = sum(1 for _ in enumerate_topologies(n))
    classes = sum(1 for _ in enumerate_topologies(n, up_to_homeo=True))
    print(f"n={n}: {labeled} topologies, {classes} up to homeomorphism, "
          f"oracle {len(brute_force_families(n))}")

start = time.perf_counter()
report = verify_theorems(4)
print(f"{len(report.results)} properties on {sum(report.spaces_by_n.values())} spaces: "
      f"{len(report.violations)} violations in {time.perf_counter() - start:.1f}s")

for query in ("semi_T_omega AND NOT semi_T1",
              "EXISTS A, B: semi_open(A) AND semi_open(B) AND NOT semi_open(A & B)",
              "EXISTS A: slambda_closed AND NOT sg_star_closed",
              "semi_T1 AND NOT semi_T_omega"):
    result = find_witness(query, n_max=4)
    if hasattr(result, "space"):
        binds = {k: format_subset(v) for k, v in result.bindings.items()}
        print(f"{query}\n  -> opens {[format_subset(m) for m in result.space.opens]} {binds}")
    else:
        print(f"{query}\n  -> none among {result.spaces_checked} spaces up to n={result.n_max}")
