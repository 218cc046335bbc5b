"""Layered permutations and closed-form counting.

A layered permutation is a sequence of descending runs whose values rise from
run to run, so it is determined by its layer lengths.  Counting copies of
q_ell = 1(ell+1)ell...2 inside one reduces to binomials: the descending
ell-part must sit inside a single layer, and the "1" comes from any earlier
layer.
"""

from packdense import (
    LayerProfile,
    Permutation,
    count_layered_in_layered,
    count_occurrences,
    count_qell_in_layered,
    decompose_layers,
    qell_pattern,
)

profile = LayerProfile.parse("3,2,3,1")
p = profile.expand()
print(f"profile {profile} expands to {p}")
print(f"decomposing it back: {decompose_layers(p)}")
print(f"2413 is not layered: {decompose_layers(Permutation.parse('2413'))}")
print()

for ell in (2, 3):
    closed = count_qell_in_layered(profile, ell)
    direct = count_occurrences(p, qell_pattern(ell))
    print(f"copies of q_{ell} in {p}: closed form {closed}, direct count {direct}")
print()

# the same idea works for any layered pattern: each pattern layer embeds in
# a single host layer, distinct layers in increasing order
host = LayerProfile.parse("2,3,4")
for text in ("1,2", "2,2", "1,1,1"):
    pattern = LayerProfile.parse(text)
    via_layers = count_layered_in_layered(pattern, host)
    via_counting = count_occurrences(host.expand(), pattern.expand())
    print(f"layered pattern {text} in host {host}: {via_layers} (= {via_counting})")
