"""Numerical quiver data for cyclic G: the invariant space M, the moment map, the
Kempf-Ness flow and the numerical dimension of the quotient.

A cyclic G = Z_r with weights (w_1, ..., w_n) acts on R = C^r (the regular
representation) diagonally in the isotypic basis e_0, ..., e_{r-1}, where the
generator multiplies e_j by zeta_r^j.  The G-invariant part of Q (x) End R
consists of B_alpha mapping R_k to R_{k - w_alpha}; v lies in the R_0 line and
w is a multiple of the dual of e_0.  Every irrep is one-dimensional, so
F = U(1)^r acts by diagonal matrices f as (f B f^-1, f v, w f^-1), and the
moment map component k is half the k-th diagonal entry of
[B, B*] + v v* - w* w.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, SemanticError
from .groups import GroupData

__all__ = [
    "InvariantBasis",
    "QuiverPoint",
    "LieValue",
    "FlowConfig",
    "FlowResult",
    "QuotientAnalysis",
    "build_invariant_basis",
    "invariant_basis",
    "from_coordinates",
    "coordinates",
    "random_point",
    "act",
    "moment_map",
    "n_equations",
    "n_residual",
    "orbit_point",
    "equivariance_residual",
    "default_target",
    "flow",
    "kempf_ness_flow",
    "quotient_analysis",
    "quotient_dim",
]


@dataclass(frozen=True)
class InvariantBasis:
    """Coordinates of M: one complex number per arrow slot, then v, then w.

    ``arrows[t] = (source, target, alpha)`` means coordinate t is the entry of
    B_alpha taking e_source to e_target.
    """

    order: int
    weights: tuple[int, ...]
    arrows: tuple[tuple[int, int, int], ...]
    v_slots: tuple[int, ...] = (0,)
    w_slots: tuple[int, ...] = (0,)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def num_irreps(self) -> int:
        return self.order

    @property
    def dim(self) -> int:
        return len(self.arrows) + len(self.v_slots) + len(self.w_slots)


@dataclass(frozen=True, eq=False)
class QuiverPoint:
    B: np.ndarray  # shape (n, r, r)
    v: np.ndarray  # shape (r,)
    w: np.ndarray  # shape (r,), acts as a row vector
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        for name in ("B", "v", "w"):
            arr = np.array(getattr(self, name), dtype=complex)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def n(self) -> int:
        return self.B.shape[0]

    @property
    def order(self) -> int:
        return self.v.shape[0]

    def norm(self) -> float:
        return math.sqrt(float(np.vdot(self.B, self.B).real + np.vdot(self.v, self.v).real
                               + np.vdot(self.w, self.w).real))

    def scaled(self, t: complex) -> QuiverPoint:
        return QuiverPoint(t * self.B, t * self.v, t * self.w, self.weights)


@dataclass(frozen=True)
class LieValue:
    components: tuple[float, ...]

    def __post_init__(self) -> None:
        comps = tuple(float(c) for c in self.components)
        if not all(math.isfinite(c) for c in comps):
            raise ValueError("LieValue entries must be finite")
        object.__setattr__(self, "components", comps)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def distance(self, other: LieValue) -> float:
        return float(np.linalg.norm(self.array - other.array))


@dataclass(frozen=True)
class FlowConfig:
    target: LieValue | None = None
    tol: float = 1e-10
    max_iters: int = 10_000
    initial_step: float = 0.1
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be positive")
        if not self.initial_step > 0:
            raise ValueError("initial_step must be positive")


@dataclass(frozen=True)
class FlowResult:
    point: QuiverPoint
    target: LieValue
    iterations: int
    residual: float
    log_scale: tuple[float, ...]  # s with f = exp(s) taking the start to ``point``
    trace: tuple[tuple[int, float, float, float], ...] = field(repr=False)


@dataclass(frozen=True)
class QuotientAnalysis:
    dim: int
    kernel: int
    group_dim: int
    singular_values: tuple[float, ...]
    cut: float
    gap_ratio: float


def invariant_basis(order: int, weights) -> InvariantBasis:
    weights = tuple(int(a) % order for a in weights)
    if len(weights) not in (2, 3):
        raise SemanticError("wrong dimension")
    arrows = tuple((k, (k - a) % order, alpha) for alpha, a in enumerate(weights) for k in range(order))
    return InvariantBasis(order, weights, arrows)


def build_invariant_basis(G: GroupData) -> InvariantBasis:
    if not G.is_abelian or G.weights is None:
        raise SemanticError("nonabelian unsupported")
    return invariant_basis(G.order, G.weights)


def from_coordinates(basis: InvariantBasis, z) -> QuiverPoint:
    z = np.asarray(z, dtype=complex)
    if z.shape != (basis.dim,):
        raise ValueError(f"expected {basis.dim} coordinates")
    r = basis.order
    B = np.zeros((basis.n, r, r), dtype=complex)
    for t, (src, tgt, alpha) in enumerate(basis.arrows):
        B[alpha, tgt, src] = z[t]
    k = len(basis.arrows)
    v = np.zeros(r, dtype=complex)
    w = np.zeros(r, dtype=complex)
    v[list(basis.v_slots)] = z[k:k + len(basis.v_slots)]
    w[list(basis.w_slots)] = z[k + len(basis.v_slots):]
    return QuiverPoint(B, v, w, basis.weights)


def coordinates(basis: InvariantBasis, p: QuiverPoint) -> np.ndarray:
    arrows = [p.B[alpha, tgt, src] for src, tgt, alpha in basis.arrows]
    return np.array(arrows + [p.v[s] for s in basis.v_slots] + [p.w[s] for s in basis.w_slots],
                    dtype=complex)


def random_point(basis: InvariantBasis, rng: np.random.Generator) -> QuiverPoint:
    z = rng.standard_normal(basis.dim) + 1j * rng.standard_normal(basis.dim)
    return from_coordinates(basis, z)


def act(p: QuiverPoint, f) -> QuiverPoint:
    """F-action (f B f^-1, f v, w f^-1) for f given by its diagonal."""
    f = np.asarray(f, dtype=complex)
    finv = 1.0 / f
    B = f[None, :, None] * p.B * finv[None, None, :]
    return QuiverPoint(B, f * p.v, p.w * finv, p.weights)


def _hermitian_diag(p: QuiverPoint) -> np.ndarray:
    # diag of sum_a [B_a, B_a*] + v v* - w* w
    B = p.B
    rows = np.sum(np.abs(B) ** 2, axis=2)  # diag of B B*
    cols = np.sum(np.abs(B) ** 2, axis=1)  # diag of B* B
    return np.sum(rows - cols, axis=0) + np.abs(p.v) ** 2 - np.abs(p.w) ** 2


def moment_map(p: QuiverPoint) -> LieValue:
    return LieValue(tuple(0.5 * _hermitian_diag(p)))


def n_equations(p: QuiverPoint) -> list[np.ndarray]:
    """Components of B^B + vw.

    For n = 2 the single commutator [B_1, B_2] and vw both live in End(R)^G,
    so they are added.  For n = 3 the commutators are valued in Lambda^2 Q,
    which has no trivial summand, so vw is its own component.
    """
    B = p.B
    n = p.n
    vw = np.outer(p.v, p.w)
    comms = [B[a] @ B[b] - B[b] @ B[a] for a in range(n) for b in range(a + 1, n)]
    if n == 2:
        return [comms[0] + vw]
    return comms + [vw]


def n_residual(p: QuiverPoint) -> float:
    return math.sqrt(sum(float(np.sum(np.abs(c) ** 2)) for c in n_equations(p)))


def orbit_point(G: GroupData, x) -> QuiverPoint:
    """Point of N built from the functions on the orbit G.x.

    With e_i(y_k) = zeta^(-ik) / sqrt(r) on the orbit points y_k = g^k x,
    multiplication by the coordinate x_alpha sends e_i to x_alpha e_{i - w_alpha},
    and the constant function 1 is sqrt(r) e_0.
    """
    basis = build_invariant_basis(G)
    x = np.asarray(x, dtype=complex)
    if x.shape != (basis.n,):
        raise ValueError(f"expected a point of C^{basis.n}")
    r = basis.order
    orbit = np.array([[np.exp(2j * np.pi * k * a / r) * x[alpha] for alpha, a in enumerate(basis.weights)]
                      for k in range(r)])
    scale = max(1.0, float(np.max(np.abs(orbit))))
    for k in range(r):
        for l in range(k + 1, r):
            if np.max(np.abs(orbit[k] - orbit[l])) <= 1e-12 * scale:
                raise SemanticError("orbit not free")
    z = [x[alpha] for _, _, alpha in basis.arrows] + [math.sqrt(r), 0.0]
    return from_coordinates(basis, z)


def equivariance_residual(p: QuiverPoint) -> float:
    """Relative size of g.p - p for the generator g (which generates G)."""
    r = p.order
    d = np.exp(2j * np.pi * np.arange(r) / r)
    gB = np.stack([np.exp(2j * np.pi * a / r) * (d[:, None] * p.B[alpha] / d[None, :])
                   for alpha, a in enumerate(p.weights)])
    diff = math.sqrt(float(np.sum(np.abs(gB - p.B) ** 2) + np.sum(np.abs(d * p.v - p.v) ** 2)
                           + np.sum(np.abs(p.w / d - p.w) ** 2)))
    size = p.norm()
    return diff / size if size > 0 else 0.0


def default_target(p: QuiverPoint, s: float | None = None) -> LieValue:
    """s (1, ..., 1); without s, the multiple whose component sum matches mu(p)."""
    r = p.order
    if s is None:
        s = float(np.sum(moment_map(p).array)) / r
    return LieValue((float(s),) * r)


def flow(p: QuiverPoint, cfg: FlowConfig) -> FlowResult:
    """Descend along imaginary F directions until mu hits the target.

    The points exp(s) . p are parametrized by real s in R^r; the functional
    |exp(s) . p|^2 / 4 - <target, s> is convex with gradient mu - target, so
    plain gradient descent with halving backtracking converges whenever the
    target is reachable.
    """
    target = cfg.target if cfg.target is not None else default_target(p)
    if len(target) != p.order:
        raise SemanticError("target has the wrong number of components")
    start_res = n_residual(p)
    if start_res > cfg.tol:
        raise SemanticError("point not on N")
    goal = target.array
    s = np.zeros(p.order)
    current = p
    err = float(np.linalg.norm(moment_map(current).array - goal))
    trace = [(0, err, start_res, 0.0)]
    step = cfg.initial_step
    it = 0
    while err > cfg.tol:
        if it >= cfg.max_iters:
            raise ConvergenceError("did not converge")
        it += 1
        grad = moment_map(current).array - goal
        while True:
            trial_s = s - step * grad
            trial = act(p, np.exp(trial_s))
            trial_err = float(np.linalg.norm(moment_map(trial).array - goal))
            if trial_err < err:
                break
            step *= 0.5
            if step < 1e-300:
                raise ConvergenceError("did not converge")
        s, current, err = trial_s, trial, trial_err
        trace.append((it, err, n_residual(current), step))
        step = min(2.0 * step, cfg.initial_step)
    return FlowResult(current, target, it, err, tuple(float(x) for x in s), tuple(trace))


def kempf_ness_flow(p: QuiverPoint, cfg: FlowConfig) -> QuiverPoint:
    return flow(p, cfg).point


def _real_system(basis: InvariantBasis, z: np.ndarray, goal: np.ndarray) -> np.ndarray:
    p = from_coordinates(basis, z)
    parts = [np.concatenate([c.ravel().real, c.ravel().imag]) for c in n_equations(p)]
    parts.append(moment_map(p).array - goal)
    return np.concatenate(parts)


def quotient_analysis(p: QuiverPoint, target: LieValue, rel_cut: float = 1e-6,
                      min_gap: float = 1e3) -> QuotientAnalysis:
    """Kernel of the real Jacobian of (N-equations, mu - target) at p, minus dim F.

    Every equation is homogeneous quadratic in the coordinates, so the
    derivative is exact: DF(z) h = F(z + h) - F(z) - F(h) with the constant
    target removed from the last two terms.
    """
    basis = invariant_basis(p.order, p.weights)
    z = coordinates(basis, p)
    goal = target.array
    zero = np.zeros_like(goal)
    base = _real_system(basis, z, zero)
    cols = []
    for t in range(basis.dim):
        for unit in (1.0, 1j):
            h = np.zeros(basis.dim, dtype=complex)
            h[t] = unit
            cols.append(_real_system(basis, z + h, zero) - base - _real_system(basis, h, zero))
    J = np.array(cols).T
    nvars = J.shape[1]
    sv = np.linalg.svd(J, compute_uv=False)
    spectrum = np.zeros(nvars)
    spectrum[:len(sv)] = sv[:nvars]
    top = float(spectrum[0]) if nvars else 0.0
    cut = rel_cut * top
    kept = spectrum[spectrum > cut]
    dropped = spectrum[spectrum <= cut]
    rank = len(kept)
    if len(kept) and len(dropped) and dropped[0] > 0:
        gap = float(kept[-1] / dropped[0])
    else:
        gap = math.inf
    if gap < min_gap:
        raise SemanticError("rank plateau ambiguous")
    kernel = nvars - rank
    return QuotientAnalysis(kernel - basis.num_irreps, kernel, basis.num_irreps,
                            tuple(float(x) for x in spectrum), cut, gap)


def quotient_dim(p: QuiverPoint, target: LieValue) -> int:
    return quotient_analysis(p, target).dim
