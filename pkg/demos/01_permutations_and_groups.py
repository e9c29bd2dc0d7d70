"""Permutations in cycle notation and groups closed from generators."""

from subchains import compose, format_permutation, named_group, order_of, parse_permutation
from subchains.group import close_generators

# compose(p, q) applies q first
p = parse_permutation("(1,2,3)", 5)
q = parse_permutation("(2,3)(4,5)", 5)
print("p∘q =", format_permutation(compose(p, q)), " order", order_of(compose(p, q)))

# the Frobenius group of order 20 from a 5-cycle and a 4-cycle
f20 = close_generators([parse_permutation("(1,2,3,4,5)", 5),
                        parse_permutation("(2,3,5,4)", 5)], 5, name="F20")
print(f20.name, "order", f20.order)

for family, n in [("symmetric", 4), ("alternating", 5), ("dihedral", 12), ("cyclic", 8)]:
    t = named_group(family, n)
    print(f"{t.name:>4}: degree {t.degree}, order {t.order}")
