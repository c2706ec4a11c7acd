"""Families of Young diagrams, q-hook dimensions, and branching.

Irreducible representations of the invertible n x n matrices over F_q are
indexed by "families": one Young diagram per irreducible polynomial
factor, with total weighted size n.  This script enumerates them for a
small group, evaluates the q-analogue of the hook formula, and checks the
two structural facts the dimensions must satisfy.
"""

from fqtraces import UNIT, branching_predecessors, family, green_dimension
from fqtraces.oracle import families_enumerate

Q = 2
N = 3

print(f"== irreducible representations of GL({N},{Q}) ==")
fams = families_enumerate(N, Q)
for f in fams:
    blocks = ", ".join(f"{tag}:{lam}" for tag, d, lam in f.blocks)
    print(f"  dim {str(green_dimension(f, Q)):>3}   [{blocks}]")

order = 1
for i in range(N):
    order *= Q**N - Q**i
total = sum(green_dimension(f, Q) ** 2 for f in fams)
print(f"sum of squared dimensions = {total}, group order = {order}")
assert total == order

print()
print("== branching against the embedding that frees the new diagonal entry ==")
for f in fams:
    preds = branching_predecessors(f, "GLB")
    dim = green_dimension(f, Q)
    below = sum(green_dimension(g, Q) for g in preds)
    print(f"  dim {str(dim):>3} >= {str(below):>3} = sum over its {len(preds)} predecessors")
    assert dim >= below

print()
print("== dimensions are rational functions of q: the Steinberg column ==")
for q in (2, 3, 4, 5):
    st = family((UNIT, 1, (1, 1, 1)))
    print(f"  q={q}: one-column diagram of size 3 has dimension {green_dimension(st, q)}")
