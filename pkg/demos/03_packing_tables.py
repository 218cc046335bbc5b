"""Building the exact M_n / k_n tables.

M_n is the most copies of q_ell an n-permutation can hold.  A layered
optimum always exists, and peeling its last layer leaves an optimal prefix,
giving the recurrence M_n = max_k ( M_k + k*C(n-k, ell) ) whose largest
maximizer is k_n.  Densities M_n / C(n, ell+1) decrease towards the packing
density beta.
"""

from packdense import (
    build_table,
    count_qell_in_layered,
    first_n_with_k,
    last_n_with_k,
    optimal_layer_profile,
)

table = build_table(2, 30)
print("ell = 2")
print("n    M_n    k_n   density")
for n in range(1, 31):
    k = "-" if n <= 2 else table.k(n)
    density = f"{float(table.density(n)):.6f}" if n >= 3 else "-"
    print(f"{n:<4} {table.m(n):<6} {k:<5} {density}")
print()

# an optimal layered witness for n = 30, rebuilt by peeling last layers
profile = optimal_layer_profile(table, 30)
print(f"optimal profile for n=30: {profile}")
print(f"its count: {count_qell_in_layered(profile, 2)} = M_30 = {table.m(30)}")
print()

# the values n_k / n'_k where k_n first and last equals k: each k persists
# for ell or ell+1 consecutive n
print("k   n_k  n'_k  run length")
for k in range(1, table.k(30)):
    first, last = first_n_with_k(table, k), last_n_with_k(table, k)
    print(f"{k:<3} {first:<4} {last:<5} {last - first + 1}")
