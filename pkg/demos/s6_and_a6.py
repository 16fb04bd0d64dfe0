"""Restrict a unitriangular basic set of the principal 3-block of S_6 to A_6,
then induce it back and see which entries stay undetermined."""

from modrep.basicsets import LEX, block_datum, build_tilde_basic_set, restrict_to_block, rho_swap
from modrep.clifford import induce_basic_set_to_Sn, restrict_basic_set_to_An
from modrep.partitions import Partition
from modrep.scenarios import load_golden


def show(D, datum):
    rows = [x for x in reversed(datum.order) if x in datum.psi]
    cols = [datum.psi[x] for x in rows]
    width = max(len(str(r)) for r in rows)
    print(" " * width, "  ".join(str(c) for c in cols))
    for r, line in zip(rows, D.submatrix(rows, cols)):
        cells = ("?" if e is None else str(e) for e in line)
        print(f"{str(r):>{width}}", "  ".join(f"{x:>{len(str(c))}}" for x, c in zip(cells, cols)))


full = load_golden("s6_block0_full.json")
tilde = block_datum(build_tilde_basic_set(6, 3, LEX), ())
print("twisted basic set on the block:")
show(full, tilde)

# (4,1,1) is Mullineux-fixed but not self-conjugate; swap it for (3,2,1).
b1, b2 = restrict_to_block(tilde, ())
B = rho_swap(b1, b2, {Partition((4, 1, 1)): Partition((3, 2, 1))}, full, tilde)
print("\nafter the swap:")
show(full, B)

D_An, b = restrict_basic_set_to_An(full, B)
print("\nrestricted to A_6:")
show(D_An, b)

D_Sn, B2 = induce_basic_set_to_Sn(D_An, b)
print("\ninduced back to S_6 (a 2x2 block is only known up to a permutation):")
show(D_Sn, B2)
print("constraints:", D_Sn.meta["constraints"])
