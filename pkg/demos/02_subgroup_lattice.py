"""Subgroup lattice of S4: sizes, covers and the maximal subgroups of S5."""

from subchains import enumerate_subgroups, label, named_group

s4 = enumerate_subgroups(named_group("symmetric", 4))
print(len(s4), "subgroups of S4, orders", s4.order_histogram(range(len(s4))))
print(len(s4.covers), "covering pairs")

s5 = enumerate_subgroups(named_group("symmetric", 5))
tally: dict[str, int] = {}
for node in s5.lower_covers[s5.top]:
    name = label(s5.handle(node))
    tally[name] = tally.get(name, 0) + 1
print("maximal subgroups of S5:", tally)
