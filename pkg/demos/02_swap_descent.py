"""
Improving edge swaps and local-search descent
=============================================

A path v1 .. vt with d(v1) < d(vt) and d(v2) > d(v_{t-1}) admits an
edge swap that strictly lowers the Sombor index.  Starting from the
3-2-3 chain (two hubs joined through a middle vertex), one swap
already reaches the minimum.
"""

from sombor import Tree, apply_swap, find_path_violation, local_search, swap_from_witness

chain = Tree(7, [(0, 2), (1, 2), (0, 3), (0, 4), (1, 5), (1, 6)])
print("start:", " ".join(f"{u}-{v}" for u, v in chain.edges))
print(f"Sombor index = {chain.sombor():.9f}")

witness = find_path_violation(chain)
print(
    f"\nwitness path ends: v1={witness.first} v2={witness.second} "
    f"v_t-1={witness.second_last} v_t={witness.last}"
)

swap = swap_from_witness(chain, witness)
print(f"remove {swap.removed}, add {swap.added}")
print(f"predicted delta = {swap.predicted_delta:.9f}")

after = apply_swap(chain, swap)
print(f"after the swap  = {after.sombor():.9f}")

# iterate to a fixed point; here a single step suffices
result = local_search(chain)
print(
    f"\nlocal search: {result.steps} step(s), "
    f"{result.start_value:.9f} -> {result.final_value:.9f}"
)
