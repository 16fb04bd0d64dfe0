"""The block of S_23 with 3-core (3,1,1): count the twisted basic set, check
the three swap targets from Fock-space columns, and swap."""

import time

from modrep.basicsets import (
    LEXPRIME,
    block_datum,
    build_tilde_basic_set,
    partial_decomposition_matrix,
    restrict_to_block,
    rho_swap,
    restriction_obstacles,
)
from modrep.partitions import Partition, regularize

core = Partition((3, 1, 1))
t0 = time.perf_counter()
datum = block_datum(build_tilde_basic_set(23, 3, LEXPRIME), core)
b1, b2 = restrict_to_block(datum, core)
print(f"|B~| = {len(datum.B)}: {len(b1) // 2} + {len(b1) // 2} conjugate pairs, {len(b2)} fixed")

rho = {
    Partition((12, 6, 5)): Partition((12,) + (1,) * 11),
    Partition((9, 6, 3, 3, 1, 1)): Partition((6, 5, 5, 3, 3, 1)),
    Partition((10, 4, 4, 3, 1, 1)): Partition((9, 4, 3, 2, 1, 1, 1, 1, 1)),
}
print("regularization of (12,1^11):", regularize(rho[Partition((12, 6, 5))], 3))

D = partial_decomposition_matrix(23, 3, core)
print(f"partial matrix {len(D.rows)}x{len(D.cols)}, {D.unknown_count()} unknown entries")
for mu, lam in rho.items():
    print(f"  d[{lam}, D{mu}] = {D.entry(lam, mu)}")

new = rho_swap(b1, b2, rho, D, datum)
print("swap accepted; problems before restriction:", restriction_obstacles(new) or "none")
print(f"({time.perf_counter() - t0:.1f}s)")
