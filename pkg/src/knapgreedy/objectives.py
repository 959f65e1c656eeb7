"""Concrete submodular objective families.

Four families: modular sums, directed-graph cuts, log-determinants of PSD
kernels (DPP-style diversity), and Gaussian differential entropy of a
covariance submatrix. Also the quality/diversity kernel builder and the
encoding of per-group cardinality budgets as 0/1-cost knapsacks.
"""

from __future__ import annotations

import math

import numpy as np

from .core import InvalidInstanceError, KnapsackConstraints, Objective

SYMMETRY_TOL = 1e-9


class NotPositiveDefiniteError(ValueError):
    """Factorization of a principal submatrix failed."""


def _check_symmetric(M, name):
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidInstanceError("%s must be square" % name)
    if not np.allclose(M, M.T, atol=SYMMETRY_TOL, rtol=0):
        raise InvalidInstanceError("%s must be symmetric" % name)
    return M


def _logdet_principal(M, S, jitter=0.0):
    """log det of the principal submatrix of M indexed by S, via Cholesky.

    Indices are sorted before extraction, so the result does not depend on
    the iteration order of S.
    """
    idx = sorted(S)
    if not idx:
        return 0.0
    sub = M[np.ix_(idx, idx)]
    if jitter:
        sub = sub + jitter * np.eye(len(idx))
    try:
        L = np.linalg.cholesky(sub)
    except np.linalg.LinAlgError:
        raise NotPositiveDefiniteError(
            "principal submatrix %r is not positive definite" % (idx,)
        )
    return float(2.0 * np.sum(np.log(np.diag(L))))


class ModularObjective(Objective):
    """f(S) = sum of fixed singleton values."""

    def __init__(self, singleton_values):
        super().__init__()
        self.singleton_values = np.asarray(singleton_values, dtype=float)

    def _value(self, S):
        return float(sum(self.singleton_values[e] for e in S))


class DirectedCutObjective(Objective):
    """Weight of arcs leaving S. Non-monotone submodular; curvature <= 2."""

    def __init__(self, n, arcs):
        super().__init__()
        self.n = n
        self.arcs = [(int(u), int(v), float(w)) for u, v, w in arcs]
        for u, v, w in self.arcs:
            if w < 0:
                raise InvalidInstanceError("negative arc weight on (%d, %d)" % (u, v))

    def _value(self, S):
        return float(sum(w for u, v, w in self.arcs if u in S and v not in S))


class DppLogDetObjective(Objective):
    """f(S) = log det(L_S + jitter*I) for a symmetric PSD kernel L.

    f(empty) = 0 by convention; the normalization constant det(L + I) of the
    underlying point process is selection-invariant and dropped.
    """

    def __init__(self, L, jitter=1e-10):
        super().__init__()
        self.L = _check_symmetric(L, "L")
        self.jitter = float(jitter)

    def _value(self, S):
        return _logdet_principal(self.L, S, jitter=self.jitter)


class EntropyObjective(Objective):
    """Differential entropy of the Gaussian restricted to the chosen sensors:
    f(S) = (1 + ln(2 pi)) / 2 * |S| + ln det(Sigma_S) / 2."""

    def __init__(self, Sigma):
        super().__init__()
        self.Sigma = _check_symmetric(Sigma, "Sigma")

    def _value(self, S):
        if not S:
            return 0.0
        const = 0.5 * (1.0 + math.log(2.0 * math.pi))
        return const * len(S) + 0.5 * _logdet_principal(self.Sigma, S)


class QdKernelSpec:
    """Quality/diversity kernel specification.

    qualities: n positive per-item quality scores.
    feature_sets: mapping of feature-family name -> (n, d) feature matrix.
    sigmas: mapping of feature-family name -> positive bandwidth.
    """

    def __init__(self, qualities, feature_sets, sigmas):
        self.qualities = np.asarray(qualities, dtype=float)
        if np.any(self.qualities <= 0):
            raise InvalidInstanceError("qualities must be positive")
        self.feature_sets = {f: np.asarray(v, dtype=float) for f, v in feature_sets.items()}
        self.sigmas = {f: float(s) for f, s in sigmas.items()}
        n = self.qualities.shape[0]
        for f, v in self.feature_sets.items():
            if f not in self.sigmas:
                raise InvalidInstanceError("missing bandwidth for feature family %r" % f)
            if v.shape[0] != n:
                raise InvalidInstanceError("feature family %r has %d rows, expected %d" % (f, v.shape[0], n))
        for f, s in self.sigmas.items():
            if s <= 0:
                raise InvalidInstanceError("nonpositive bandwidth for feature family %r" % f)


def build_qd_kernel(spec):
    """L[i, j] = q(i) * exp(-sum_f ||v_f_i - v_f_j||^2 / sigma_f) * q(j)."""
    n = spec.qualities.shape[0]
    expo = np.zeros((n, n))
    for f, V in spec.feature_sets.items():
        d2 = np.sum((V[:, None, :] - V[None, :, :]) ** 2, axis=2)
        expo += d2 / spec.sigmas[f]
    L = np.outer(spec.qualities, spec.qualities) * np.exp(-expo)
    return 0.5 * (L + L.T)


class PartitionBudget:
    """Per-group cardinality caps, encoded as 0/1-cost knapsacks."""

    def __init__(self, labels, budgets):
        self.labels = [int(x) for x in labels]
        self.budgets = [float(b) for b in budgets]
        p = len(self.budgets)
        for e, lab in enumerate(self.labels):
            if not 0 <= lab < p:
                raise InvalidInstanceError("partition label %d of element %d out of range" % (lab, e))

    def to_constraints(self):
        p, n = len(self.budgets), len(self.labels)
        costs = np.zeros((p, n))
        for e, lab in enumerate(self.labels):
            costs[lab, e] = 1.0
        return KnapsackConstraints(costs, np.asarray(self.budgets, dtype=float))


def dpp_value(obj, S):
    return obj.value(S)


def entropy_value(obj, S):
    return obj.value(S)


def cut_value(obj, S):
    return obj.value(S)
