"""Walk through the static solver on a small hand-checkable instance.

Five items, one knapsack of capacity 2. The greedy picks the densest
items first; the solver also considers the best single item and the best
subset of expensive items before returning the overall winner.
"""

import numpy as np

from knapgreedy import (
    GroundSet,
    Instance,
    KnapsackConstraints,
    ModularObjective,
    brute_force_opt,
    lambda_greedy,
)

costs = np.array([[1.0, 1.0, 2.0, 2.0, 1.0]])
values = [0.25, 0.25, 1.0, 1.0, 3.0]

inst = Instance(
    ground=GroundSet(5),
    constraints=KnapsackConstraints(costs, [2.0]),
    objective=ModularObjective(values),
)

result = lambda_greedy(inst, lam=1.0)
print("greedy order:", result.greedy_order)
print("chosen set:  ", result.chosen)
print("value:       ", result.value)
print("winner:      ", result.which)
print("oracle calls:", result.oracle_calls)

# cross-check against exhaustive enumeration
opt_value, opt_set = brute_force_opt(inst)
print("exhaustive optimum:", opt_value, "at", opt_set)
assert result.value == opt_value

# a larger random instance with two knapsacks
rng = np.random.default_rng(0)
n = 16
costs = rng.uniform(0.2, 2.0, size=(2, n))
weights = 0.4 * costs.sum(axis=1)
inst2 = Instance(
    ground=GroundSet(n),
    constraints=KnapsackConstraints(costs, weights),
    objective=ModularObjective(rng.uniform(0.0, 3.0, n)),
)
for lam in (1.0, 1.5, 2.0):
    r = lambda_greedy(inst2, lam)
    print("lambda=%.1f -> value %.3f with %d items (%d calls)"
          % (lam, r.value, len(r.chosen), r.oracle_calls))
