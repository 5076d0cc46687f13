"""Input checks shared by the estimators and the command line."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import SemanticError
from .groups import GroupData, GroupSpec, VirtualCharacter, build_group
from .quiver import InvariantBasis, LieValue

__all__ = ["check_group", "check_class_functions", "check_coordinates", "check_target"]


def check_group(group) -> GroupData:
    """Accept GroupData, a GroupSpec, or a (r, weights) pair for a cyclic group."""
    if isinstance(group, GroupData):
        return group
    if isinstance(group, GroupSpec):
        return build_group(group)
    if isinstance(group, tuple) and len(group) == 2:
        r, weights = group
        return build_group(GroupSpec.cyclic(int(r), tuple(int(a) for a in weights)))
    raise TypeError(f"cannot interpret {type(group).__name__} as a group")


def check_class_functions(X, G: GroupData) -> list[VirtualCharacter]:
    """Rows of class-function values (exact scalars or CyclotomicNumbers)."""
    out = []
    for row in X:
        x = row if isinstance(row, VirtualCharacter) else VirtualCharacter(row)
        if len(x) != G.num_classes:
            raise ValueError(f"class function has {len(x)} entries, expected {G.num_classes}")
        out.append(x)
    if not out:
        raise ValueError("no class functions given")
    return out


def check_coordinates(X, basis: InvariantBasis) -> np.ndarray:
    """2-d complex array of M-coordinates, one point per row."""
    Z = np.asarray(X, dtype=complex)
    if Z.ndim == 1:
        Z = Z[None, :]
    if Z.ndim != 2 or Z.shape[1] != basis.dim:
        raise ValueError(f"expected coordinates of shape (n_samples, {basis.dim}), got {Z.shape}")
    if not np.all(np.isfinite(Z)):
        raise ValueError("coordinates must be finite")
    return Z


def check_target(target, size: int) -> LieValue | None:
    if target is None:
        return None
    if np.isscalar(target):
        return LieValue((float(target),) * size)
    if isinstance(target, LieValue):
        target = target.components
    comps: Sequence[float] = tuple(float(t) for t in target)
    if len(comps) != size:
        raise SemanticError("target has the wrong number of components")
    return LieValue(comps)
