"""Closed forms checked against the lattice, and the S_n lower bound."""

from subchains import chain_counts, enumerate_subgroups, named_group
from subchains.audit import sn_bound_tables
from subchains.chains import FactoredInteger, g_cyclic_multinomial, h_dihedral_prime_power, lower_bound_h_sn

for n in [12, 30, 64, 180]:
    lattice = chain_counts(enumerate_subgroups(named_group("cyclic", n))).g
    print(f"g(C{n}) multinomial={g_cyclic_multinomial(FactoredInteger.of(n))} lattice={lattice}")
print("g(C_10^12) =", g_cyclic_multinomial(FactoredInteger.of(10**12)))

for p, m in [(2, 3), (3, 2), (5, 2)]:
    order = 2 * p**m
    lattice = chain_counts(enumerate_subgroups(named_group("dihedral", order))).h
    print(f"h(D{order}) closed form={h_dihedral_prime_power(p, m)} lattice={lattice}")

alt, sym = sn_bound_tables(5)
print("lower bound for h(S5):", lower_bound_h_sn(5, alt, sym))
