"""Walkthrough: building partial actions, validating the axioms, and reading
off the induced equivalence relation.

Run with: python3 demos/01_partial_actions_and_relations.py
"""

from skewrel import (PartialAction, build_relation, check_free,
                     enumerate_invariant_subsets, equivalence_classes,
                     validate_partial_action, witness)
from skewrel.groups import GroupSpec

# A partial action of Z_2 on {a, b, c}: the swap a <-> b is only defined on
# {a, b}, and c is untouched.
z2 = GroupSpec.cyclic(2)
g = z2.element(1)
e1 = PartialAction(z2, ["a", "b", "c"], {g: {"a": "b", "b": "a"}})

report = validate_partial_action(e1)
print("E1 validates:", report.ok)
print("E1 is free:", check_free(e1).free)

# The relation R pairs x with every h_t(x); each pair remembers which t did it.
rel = build_relation(e1)
for (x, y) in rel.sorted_pairs():
    print("  (%s, %s) via t = %s" % (x, y, rel.witnesses(x, y)[0]))
print("classes:", equivalence_classes(rel))
print("witness of (a, b):", witness(rel, "a", "b"))
print("invariant subsets:", enumerate_invariant_subsets(rel))

# A partial action of the integers by shifts: h_1 moves 1 -> 2 -> 3 but is only
# defined on {1, 2}; the composite h_2 = {1 -> 3} must be listed for axiom (2)
# to hold. Deleting it is exactly the kind of mistake validation catches.
z = GroupSpec.integers()
e2 = PartialAction(z, ["1", "2", "3"], {
    z.element(1): {"1": "2", "2": "3"},
    z.element(2): {"1": "3"},
})
print("\nE2 validates:", validate_partial_action(e2).ok)

broken = PartialAction(z, ["1", "2", "3"], {z.element(1): {"1": "2", "2": "3"}})
for line in validate_partial_action(broken).render():
    print("  violation:", line)
