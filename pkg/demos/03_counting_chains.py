"""g and h by three independent methods, and the S5 inclusion-exclusion ledger."""

from subchains import chain_counts, enumerate_subgroups, named_group
from subchains.chains import g_by_maximal_recursion, h_by_inclusion_exclusion, naive_chain_oracle

for family, n in [("symmetric", 3), ("alternating", 4), ("symmetric", 4), ("dihedral", 12)]:
    lat = enumerate_subgroups(named_group(family, n))
    dp = chain_counts(lat)
    ie, _ = h_by_inclusion_exclusion(lat)
    naive = naive_chain_oracle(lat)
    print(f"{lat.parent.name:>4}: dp g={dp.g} h={dp.h} | ie g={g_by_maximal_recursion(lat)} "
          f"h={ie} | naive g={naive[0]} h={naive[1]}")

s5 = enumerate_subgroups(named_group("symmetric", 5))
h, ledger = h_by_inclusion_exclusion(s5)
print(f"\nS5: h={h} from {ledger.k} maximal subgroups")
print("intersections are trivial from rank", ledger.trivial_tail_rank)
for r, c in enumerate(ledger.c, 1):
    print(f"  c_{r:<2} = {c}")
