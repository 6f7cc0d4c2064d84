"""
Strip-and-attach decomposition with incremental totals
======================================================

Peeling the smallest-degree internal vertex (with its pendant
children) off a greedy tree, down to a star, records one step per
internal vertex.  Each step's delta has a closed form, so the whole
index can be rebuilt without ever touching the tree again.
"""

from sombor import base_value, build_greedy_tree, decompose, replay_totals

tree = build_greedy_tree((4, 3, 3, 2)).tree
steps = decompose(tree)
base = base_value(tree.internal_degree_sequence())
totals = replay_totals(base, steps)

print(f"greedy tree for 4,3,3,2 on {tree.n} vertices")
print(f"base star value = {base:.9f}")
for step, total in zip(steps, totals):
    print(
        f"  t={step.index_t}: promote pendant vertex {step.attached_at} "
        f"to degree {step.attached_degree} (parent degree {step.parent_degree}), "
        f"delta = {step.delta:+.9f}, total = {total:.9f}"
    )
print(f"replayed total  = {totals[-1]:.9f}")
print(f"direct Sombor   = {tree.sombor():.9f}")
