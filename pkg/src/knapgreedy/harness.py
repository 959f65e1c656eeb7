"""Drifting-budget simulation: persistent engine versus restart-from-scratch.

Budgets drift as a clamped Gaussian random walk on the fraction-of-total
scale. Two contestants consume the same weight stream under the same
per-interval oracle-call budget: a persistent dynamic engine that rolls its
solution back at each update, and a static greedy restarted from scratch.
The trace records, at every update, each contestant's best feasible value
and the oracle calls it spent in the interval.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .core import EmptyAfterReductionError, Instance
from .dynamic import DynamicGreedy, WeightUpdate
from .solver import check_lambda


@dataclass
class SimConfig:
    tau: int  # oracle calls between consecutive weight updates
    noise_sigma: float
    n_updates: int = 50
    seed: int = 0
    lam: float = 1.0
    initial_fraction: float | None = None  # None: keep the instance's weights

    def __post_init__(self):
        if self.tau <= 0:
            raise ValueError("tau must be positive")
        if self.noise_sigma < 0:
            raise ValueError("noise_sigma must be nonnegative")
        if self.initial_fraction is not None and not 0 < self.initial_fraction <= 1:
            raise ValueError("initial_fraction must be in (0, 1]")


@dataclass
class TraceRow:
    update: int
    weights: np.ndarray
    dgreedy_value: float
    restart_value: float
    dgreedy_calls: int
    restart_calls: int


@dataclass
class RunTrace:
    config: SimConfig
    rows: list = field(default_factory=list)


def perturb_weights(weights, totals, noise_sigma, rng):
    """One random-walk step on the weight-as-fraction-of-total scale,
    clamped to [0, 1] per knapsack."""
    fractions = np.asarray(weights, dtype=float) / totals
    fractions = np.clip(fractions + rng.normal(0.0, noise_sigma, size=len(totals)), 0.0, 1.0)
    return fractions * totals


class _RestartContestant:
    """Static greedy re-run from scratch at every update, interruptible at
    step granularity so a tight budget leaves an honest partial state."""

    def __init__(self, inst, lam):
        self.inst = inst
        self.lam = lam
        self.engine = None

    def restart(self, weights):
        inst = Instance(
            ground=self.inst.ground,
            constraints=self.inst.constraints.with_weights(weights),
            objective=self.inst.objective,
            index_map=self.inst.index_map,
        )
        try:
            self.engine = DynamicGreedy(inst, self.lam)
        except EmptyAfterReductionError:
            self.engine = None

    def run(self, budget, calls_used):
        if self.engine is None:
            return
        obj = self.inst.objective
        start = obj.eval_count - calls_used
        while self.engine.phase == "greedy" and obj.eval_count - start < budget:
            self.engine.step()

    def best_value(self):
        # Complement-set candidates count only once the greedy has finished.
        if self.engine is None:
            return 0.0
        if self.engine.phase == "finished":
            return self.engine.finalize().value
        return self.engine.current_best()


def run_dynamic(inst, cfg):
    """Simulate cfg.n_updates budget drifts; returns the per-update trace."""
    check_lambda(cfg.lam, inst.constraints.k)
    if cfg.tau < inst.ground.n:
        warnings.warn("budget too small: tau=%d < n=%d" % (cfg.tau, inst.ground.n), RuntimeWarning)
    rng = np.random.default_rng(cfg.seed)
    totals = inst.constraints.costs.sum(axis=1)
    if np.any(totals <= 0):
        raise ValueError("every knapsack needs positive total cost")

    weights = np.asarray(inst.constraints.weights, dtype=float)
    if cfg.initial_fraction is not None:
        weights = cfg.initial_fraction * totals

    dg_obj = inst.objective.clone()
    rs_obj = inst.objective.clone()
    dg_inst = Instance(inst.ground, inst.constraints.with_weights(weights), dg_obj)
    rs_inst = Instance(inst.ground, inst.constraints.with_weights(weights), rs_obj)

    engine = DynamicGreedy(dg_inst, cfg.lam)
    restart = _RestartContestant(rs_inst, cfg.lam)
    restart.restart(weights)

    def run_engine(budget, calls_used):
        start = dg_obj.eval_count - calls_used
        while engine.phase == "greedy" and dg_obj.eval_count - start < budget:
            engine.step()

    # Warm-up interval under the initial weights, not recorded.
    run_engine(cfg.tau, 0)
    restart.run(cfg.tau, 0)

    trace = RunTrace(config=cfg)
    for u in range(1, cfg.n_updates + 1):
        weights = perturb_weights(weights, totals, cfg.noise_sigma, rng)
        dg_start, rs_start = dg_obj.eval_count, rs_obj.eval_count
        engine.apply_weights(weights)
        restart.restart(weights)
        run_engine(cfg.tau, dg_obj.eval_count - dg_start)
        restart.run(cfg.tau, rs_obj.eval_count - rs_start)
        dg_value = engine.current_best()
        rs_value = restart.best_value()  # may spend calls on the complement
        trace.rows.append(
            TraceRow(
                update=u,
                weights=weights.copy(),
                dgreedy_value=dg_value,
                restart_value=rs_value,
                dgreedy_calls=dg_obj.eval_count - dg_start,
                restart_calls=rs_obj.eval_count - rs_start,
            )
        )
    return trace


def load_updates(path):
    """Update stream file: [{"at_call": int, "weights": [real]}], sorted."""
    with open(path) as fh:
        doc = json.load(fh)
    updates = [WeightUpdate(int(u["at_call"]), np.asarray(u["weights"], dtype=float)) for u in doc]
    if any(b.at_call < a.at_call for a, b in zip(updates, updates[1:])):
        raise ValueError("update stream must be sorted by at_call")
    return updates


def run_with_updates(inst, lam, updates):
    """Run the dynamic engine, delivering each scripted weight update once
    the engine's oracle-call counter reaches its timestamp. Updates are
    consumed at step boundaries; any still pending when the pool empties
    are applied before finalizing."""
    engine = DynamicGreedy(inst, lam)
    baseline = engine._calls_baseline
    pending = list(updates)
    while True:
        calls = engine.obj.eval_count - baseline
        if pending and (calls >= pending[0].at_call or engine.phase == "finished"):
            engine.apply_weights(pending.pop(0).weights)
            continue
        if engine.phase == "finished":
            break
        engine.step()
    return engine.finalize()


def summarize(trace):
    """Mean and population standard deviation of solution quality per
    contestant, over the recorded updates."""
    if not trace.rows:
        raise ValueError("empty trace")
    dg = np.array([r.dgreedy_value for r in trace.rows])
    rs = np.array([r.restart_value for r in trace.rows])
    return {
        "dgreedy": {"mean": float(dg.mean()), "std": float(dg.std())},
        "restart": {"mean": float(rs.mean()), "std": float(rs.std())},
    }


def _fmt(x):
    return "%.9g" % x


def trace_to_csv(trace, path):
    k = len(trace.rows[0].weights) if trace.rows else 0
    header = ["update"] + ["weight_%d" % i for i in range(k)]
    header += ["dgreedy_value", "restart_value", "dgreedy_calls", "restart_calls"]
    lines = [",".join(header)]
    for r in trace.rows:
        cells = [str(r.update)] + [_fmt(w) for w in r.weights]
        cells += [_fmt(r.dgreedy_value), _fmt(r.restart_value), str(r.dgreedy_calls), str(r.restart_calls)]
        lines.append(",".join(cells))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def summary_to_json(trace, path):
    cfg = trace.config
    payload = summarize(trace)
    payload["config"] = {
        "tau": cfg.tau,
        "noise_sigma": cfg.noise_sigma,
        "n_updates": cfg.n_updates,
        "seed": cfg.seed,
        "lam": cfg.lam,
        "initial_fraction": cfg.initial_fraction,
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
