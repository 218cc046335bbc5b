"""The bimodal c_{n,i} series.

c_{n,i} = M_i + i*C(n-i, ell) is the best count achievable with a last layer
of length n-i atop an optimal i-prefix.  In i it rises to its maximum M_n at
i = k_n, falls strictly to a valley at index j, then rises again - three
segments, two turning points.
"""

from packdense import bimodal_shape, build_table, c_sequence

table = build_table(2, 30)
cseq = c_sequence(table, 30)
k_turn, j_turn, well_formed = bimodal_shape(cseq)

print(f"ell = 2, n = 30: k_turn = {k_turn}, valley j = {j_turn}, bimodal = {well_formed}")
print()
peak = max(cseq.values)
for i, value in enumerate(cseq.values, start=1):
    bar = "#" * round(48 * value / peak)
    marker = "  <- k_n" if i == k_turn else ("  <- j" if i == j_turn else "")
    print(f"{i:>2} {value:>5} {bar}{marker}")
print()
print("plot-ready rows are available via:  packdense cseq --ell 2 --n 30 --format csv")
