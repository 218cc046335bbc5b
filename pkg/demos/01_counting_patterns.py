"""Counting pattern occurrences.

A pattern q occurs in a permutation p wherever some subsequence of p has the
same pairwise comparisons as q.  The fast counter walks p once per matched
prefix of q; the naive counter enumerates every subsequence.  They agree,
which is the point: the naive one is obviously correct, the fast one is fast.
"""

import math
from itertools import permutations

from packdense import Permutation, count_occurrences, count_occurrences_naive

p = Permutation.parse("41523")
q = Permutation.parse("132")
print(f"p = {p}, q = {q}")
print(f"occurrences: {count_occurrences(p, q)} (the subsequences 152 and 153)")
print(f"naive recount: {count_occurrences_naive(p, q)}")
print()

# every 3-subsequence of p matches exactly one pattern of length 3,
# so the counts over all of S_3 sum to C(5,3)
total = 0
for ranks in permutations((1, 2, 3)):
    pattern = Permutation(ranks)
    c = count_occurrences(p, pattern)
    total += c
    print(f"  c_{pattern}({p}) = {c}")
print(f"sum = {total} = C(5,3) = {math.comb(5, 3)}")
print()

# reversing and complementing both permutations preserves counts
rc_p, rc_q = p.reverse_complement(), q.reverse_complement()
print(f"reverse-complement: p -> {rc_p}, q -> {rc_q}")
print(f"count is preserved: {count_occurrences(rc_p, rc_q)}")
