"""Two alternating groups whose 3-blocks have no unitriangular basic set."""

from modrep.basicsets import has_enough_zeros, is_unitriangularisable
from modrep.clifford import C_gamma
from modrep.fock import apply_word, check_hypothesis, extract_decomposition_column, ladder_word
from modrep.mullineux import mullineux_fixed
from modrep.scenarios import load_golden

# A_18: three split rows, three split columns, and too few zeros.
print("fixed columns:", [str(m) for m in mullineux_fixed(18, 3, core=())])
print("split rows:   ", [str(l) for l in C_gamma((), 18, 3)])
D = load_golden("a18_block0_submatrix.json")
M = [list(r) for r in D.entries]
for row in M:
    print("   ", row)
print("unitriangularisable:", bool(is_unitriangularisable(M)),
      "| enough zeros:", has_enough_zeros(M))

# A_19: one Fock-space column already rules it out.
lam = (10, 4, 4, 1)
w = ladder_word(lam, 3)
print("\nword:", w)
x = apply_word(w)
check_hypothesis(x, lam)
col = extract_decomposition_column(x, lam)
rows = C_gamma((1,), 19, 3)
print("column of D(10,4,4,1) on the split rows:",
      {str(r): col[r] for r in rows})
print("no entry equals 1, so no ordering can make this column unitriangular")
