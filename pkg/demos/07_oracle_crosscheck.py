"""Brute-force oracles against the recurrence.

Two independent exhaustive searches back the tables: a vectorized sweep over
all of S_n (any pattern, tiny n) and a sweep over all layer compositions.
Neither uses the recurrence, its optimal-prefix shortcut, or k_n.
"""

from packdense import (
    Permutation,
    brute_force_layered,
    brute_force_Mnq,
    build_table,
    density_sequence,
    qell_pattern,
)

table = build_table(2, 16)
q = qell_pattern(2)
print("n   S_n sweep   compositions   table")
for n in range(3, 9):
    sweep = brute_force_Mnq(n, q)
    layered = brute_force_layered(n, 2, method="masks")
    print(f"{n:<3} {sweep.max_count:<11} {layered:<14} {table.m(n)}")
print()

result = brute_force_Mnq(8, q)
print(f"a maximizer for n=8: {result.witness} "
      f"(layered maximizer exists: {result.layered_witness_exists})")
print()

# the sweep handles arbitrary patterns; 2413 is the classic non-layered case
r = brute_force_Mnq(7, Permutation.parse("2413"))
print(f"max copies of 2413 over S_7: {r.max_count}, witness {r.witness}")
print(f"layered maximizer exists: {r.layered_witness_exists} "
      "(layered permutations avoid 2413 entirely)")
print()

print("brute-force densities of 132 (weakly decreasing):")
for n, d in enumerate(density_sequence(Permutation.parse("132"), 8), start=3):
    print(f"  n={n}: {d} ~ {float(d):.4f}")
