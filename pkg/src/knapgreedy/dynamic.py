"""Stepwise greedy engine that survives budget updates without a restart.

The engine interleaves single greedy selections with weight-update events.
On an update it pops the most recently added elements of the current
sequence until the remainder is a prefix that is safe under both the old
and the new budgets (small enough to be automatically feasible in both,
and contained in both cheap sets), then resumes stepping under the new
weights. Popping restores cached costs and values, so recovery consumes
oracle calls only for the greedy re-extension.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Solution, reduce_instance, validate
from .solver import (
    SolveResult,
    check_lambda,
    chi,
    complement_search,
    split_by_threshold,
)


@dataclass
class WeightUpdate:
    at_call: int
    weights: np.ndarray


class DynamicGreedy:
    """Single-owner state machine running the density greedy under mutable
    budgets.

    Phases: "greedy" while candidates remain, "finished" when the pool is
    exhausted. apply_weights() may be called in either phase and returns the
    engine to the greedy phase with the surviving prefix.
    """

    def __init__(self, inst, lam):
        check_lambda(lam, inst.constraints.k)
        validate(inst)
        red, removed = reduce_instance(inst)
        self.inst = red
        self.removed = removed
        self._calls_baseline = red.objective.eval_count
        self.lam = float(lam)
        self.cons = red.constraints
        self.obj = red.objective
        n = red.ground.n

        # Singleton values are deterministic; scanning them once here (n
        # calls) lets later updates re-derive the best feasible singleton
        # for free when singleton feasibility shifts.
        self.singleton_values = [self.obj.value({e}) for e in range(n)]
        self._refresh_vstar()

        self.cheap = set(split_by_threshold(self.cons, lam).cheap)
        self.sigma = Solution(order=[], cost_acc=np.zeros(self.cons.k), value=0.0)
        self.value_stack = []  # f(prefix) after each append, for rollback
        self.pool = sorted(self.cheap)
        self.phase = "greedy" if self.pool else "finished"
        self.dropped = []  # singletons that became infeasible after updates

    def _refresh_vstar(self):
        best_e, best_v = None, None
        for e, v in enumerate(self.singleton_values):
            if not self.cons.is_feasible_cost(self.cons.costs[:, e]):
                continue
            if best_v is None or v > best_v:
                best_e, best_v = e, v
        self.vstar = best_e
        self.vstar_value = best_v if best_v is not None else 0.0

    def step(self):
        """One greedy selection: evaluate every pooled candidate against the
        current prefix, discard the densest one from the pool, and append it
        when feasible with nonnegative gain."""
        if self.phase != "greedy":
            return
        sigma = self.sigma
        current = frozenset(sigma.order)
        best_e, best_density, best_fval = None, None, None
        for e in self.pool:
            fe = self.obj.value(current | {e})
            density = (fe - sigma.value) / self.cons.max_cost(e)
            if best_density is None or density > best_density:
                best_e, best_density, best_fval = e, density, fe
        self.pool.remove(best_e)
        gain = best_fval - sigma.value
        new_cost = sigma.cost_acc + self.cons.costs[:, best_e]
        if gain >= 0 and self.cons.is_feasible_cost(new_cost):
            sigma.order.append(best_e)
            sigma.cost_acc = new_cost
            sigma.value = best_fval
            self.value_stack.append(best_fval)
        if not self.pool:
            self.phase = "finished"

    def apply_weights(self, new_weights):
        """Stack-rollback update rule for a new budget vector."""
        new_weights = np.asarray(new_weights, dtype=float)
        old_cons = self.cons
        new_cons = old_cons.with_weights(new_weights)
        new_cheap = set(split_by_threshold(new_cons, self.lam).cheap)
        chi_cap = min(chi(old_cons), chi(new_cons))

        sigma = self.sigma
        both = self.cheap & new_cheap
        while len(sigma.order) > chi_cap or not set(sigma.order) <= both:
            e = sigma.order.pop()
            sigma.cost_acc = sigma.cost_acc - old_cons.costs[:, e]
            self.value_stack.pop()
            sigma.value = self.value_stack[-1] if self.value_stack else 0.0

        self.cons = new_cons
        self.cheap = new_cheap
        self.dropped = [
            e
            for e in range(self.inst.ground.n)
            if not new_cons.is_feasible_cost(new_cons.costs[:, e])
        ]
        self._refresh_vstar()
        self.pool = sorted(self.cheap - set(sigma.order))
        self.phase = "greedy" if self.pool else "finished"

    def run_to_completion(self):
        while self.phase == "greedy":
            self.step()

    def current_best(self):
        """Best feasible value known right now, without extra oracle calls:
        the greedy prefix versus the best feasible singleton."""
        return max(self.sigma.value, self.vstar_value)

    def finalize(self):
        """Exhaust the pool, search the expensive remainder under the
        current weights, and return the overall argmax."""
        self.run_to_completion()
        part = split_by_threshold(self.cons, self.lam)
        comp_set, comp_val = complement_search(self.obj, self.cons, part)

        chosen, value, which = tuple(self.sigma.order), self.sigma.value, "greedy-sigma"
        if self.vstar is not None and self.vstar_value > value:
            chosen, value, which = (self.vstar,), self.vstar_value, "singleton-vstar"
        if comp_val > value:
            chosen, value, which = tuple(sorted(comp_set)), comp_val, "complement-set"

        return SolveResult(
            chosen=tuple(self.inst.to_original(e) for e in chosen),
            value=float(value),
            which=which,
            greedy_order=tuple(self.inst.to_original(e) for e in self.sigma.order),
            oracle_calls=self.obj.eval_count - self._calls_baseline,
        )
