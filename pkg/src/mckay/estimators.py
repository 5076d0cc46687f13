"""scikit-learn style wrappers over the functional core.

The exact modules do not fit the fit/transform shape, since their inputs are
groups rather than sample matrices.  Only the parts that act on batches get an
estimator: decomposing class functions into irreducibles, evaluating the
moment map, and flowing points of M to a moment-map level.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .groups import decompose
from .quiver import (FlowConfig, build_invariant_basis, coordinates, default_target, flow,
                     from_coordinates, moment_map, n_residual)
from .validation import check_class_functions, check_coordinates, check_group, check_target

__all__ = ["CharacterDecomposer", "MomentMap", "KempfNessFlow"]


class CharacterDecomposer(TransformerMixin, BaseEstimator):
    """Class functions -> integer multiplicities of the irreducible characters."""

    def __init__(self, group=None):
        self.group = group

    def fit(self, X=None, y=None):
        self.group_ = check_group(self.group)
        self.n_features_in_ = self.group_.num_classes
        return self

    def transform(self, X):
        check_is_fitted(self, "group_")
        rows = check_class_functions(X, self.group_)
        return np.array([decompose(x, self.group_) for x in rows], dtype=np.int64)


class MomentMap(TransformerMixin, BaseEstimator):
    """M-coordinates -> moment map components, one row per point."""

    def __init__(self, group=None):
        self.group = group

    def fit(self, X=None, y=None):
        self.basis_ = build_invariant_basis(check_group(self.group))
        self.n_features_in_ = self.basis_.dim
        return self

    def transform(self, X):
        check_is_fitted(self, "basis_")
        Z = check_coordinates(X, self.basis_)
        return np.array([moment_map(from_coordinates(self.basis_, z)).array for z in Z])


class KempfNessFlow(TransformerMixin, BaseEstimator):
    """Flow each point of N along imaginary F directions onto mu^-1(target).

    ``target`` may be None (level matched to each start), a scalar s for
    s (1, ..., 1), or a full vector.  After ``transform`` the attributes
    ``n_iter_`` and ``residuals_`` describe the last batch.
    """

    def __init__(self, group=None, target=None, tol=1e-10, max_iters=10_000, initial_step=0.1):
        self.group = group
        self.target = target
        self.tol = tol
        self.max_iters = max_iters
        self.initial_step = initial_step

    def fit(self, X=None, y=None):
        self.basis_ = build_invariant_basis(check_group(self.group))
        self.target_ = check_target(self.target, self.basis_.order)
        self.n_features_in_ = self.basis_.dim
        return self

    def transform(self, X):
        check_is_fitted(self, "basis_")
        Z = check_coordinates(X, self.basis_)
        out, iters, residuals = [], [], []
        for z in Z:
            p = from_coordinates(self.basis_, z)
            target = self.target_ if self.target_ is not None else default_target(p)
            cfg = FlowConfig(target=target, tol=self.tol, max_iters=self.max_iters,
                             initial_step=self.initial_step)
            res = flow(p, cfg)
            out.append(coordinates(self.basis_, res.point))
            iters.append(res.iterations)
            residuals.append((res.residual, n_residual(res.point)))
        self.n_iter_ = np.array(iters)
        self.residuals_ = np.array(residuals)
        return np.array(out)
