"""Build the sign-twisted unitriangular basic set for small symmetric groups
and watch it change with the choice of total order."""

from modrep.basicsets import LEX, LEXPRIME, build_tilde_basic_set
from modrep.mullineux import mullineux
from modrep.partitions import conjugate, p_regular_partitions_of

p = 3

# The 3-regular partitions of 5 and their Mullineux images.
for lam in p_regular_partitions_of(5, p):
    print(f"m{lam} = {mullineux(lam, p)}")

# Each regular lam contributes itself when m(lam) <= lam, else m(lam)'.
d = build_tilde_basic_set(5, p, LEX)
print("\nB~ for n = 5:", ", ".join(str(x) for x in reversed(d.B)))
for x in reversed(d.B):
    print(f"  {x} -> column D{d.psi[x]}")

d8 = build_tilde_basic_set(8, p, LEX)
print("\nB~ for n = 8 has", len(d8.B), "elements; Mullineux-fixed:", d8.meta["fixed"])

# The order matters: (6,2,2,1,1) is in the lex set, (5,3,2,2) and its
# conjugate replace it under the conjugate-reversed order.
lex = set(build_tilde_basic_set(12, p, LEX).B)
lexp = set(build_tilde_basic_set(12, p, LEXPRIME).B)
for lam in [(6, 2, 2, 1, 1), (5, 3, 2, 2), conjugate((5, 3, 2, 2))]:
    print(f"{lam}: lex {lam in lex}, lexprime {lam in lexp}")
