"""Single-site sweeping engine.

Each update freezes every core except the center one. Because the frozen
cores are isometries, the states reachable by varying the center form a
linear subspace whose unit vectors are a lower-dimensional sphere; the
closest unit vector to the target is the normalized orthogonal
projection, and its coordinates are obtained by contracting the target
against the frozen cores. The engine performs that update, sweeps the
center along the chain, and records the trajectory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import InputError
from .mps import MPS, check_gauge, overlap_dense, random_mps, shift_center
from .target import DenseState, resolve_target
from .tensor import contract

GAUGE_TOL = 1e-8


@dataclass(frozen=True)
class ProjectionTensor:
    """Coordinates of the target's projection onto the single-site subspace."""

    coeffs: np.ndarray
    norm: float


@dataclass(frozen=True)
class MetricRecord:
    """One row of the training trajectory."""

    step: int
    sweep: int
    site: int
    direction: str  # "L" or "R"
    overlap: float
    angle: float
    distance: float
    stalled: bool


@dataclass(frozen=True)
class TrainConfig:
    n: int
    d: int = 2
    chi: int = 2
    seed: int = 0
    max_sweeps: int = 100
    tol: float = 1e-10
    stall_eps: float = 1e-14
    target: str = "named:uniform"

    def validate(self) -> None:
        if self.n < 1:
            raise InputError(f"n must be >= 1, got n={self.n}")
        if self.d < 2:
            raise InputError(f"d must be >= 2, got d={self.d}")
        if self.chi < 1:
            raise InputError(f"chi must be >= 1, got chi={self.chi}")
        if self.max_sweeps < 1:
            raise InputError(f"max_sweeps must be >= 1, got max_sweeps={self.max_sweeps}")
        if self.tol <= 0:
            raise InputError(f"tol must be > 0, got tol={self.tol}")
        if self.stall_eps <= 0:
            raise InputError(f"stall_eps must be > 0, got stall_eps={self.stall_eps}")


def _left_block(state: MPS, i: int) -> np.ndarray:
    """Dense embedding of the left bond basis: shape (d**i, chi_left)."""
    block = np.ones((1, 1))
    for core in state.sites[:i]:
        l, d, r = core.shape
        block = contract(block, [1], core, [0])
        block = block.reshape(block.shape[0] * d, r)
    return block


def _right_block(state: MPS, i: int) -> np.ndarray:
    """Dense embedding of the right bond basis: shape (chi_right, d**(n-i-1))."""
    block = np.ones((1, 1))
    for core in reversed(state.sites[i + 1:]):
        l, d, r = core.shape
        block = contract(core, [2], block, [0])
        block = block.reshape(l, d * block.shape[2])
    return block


def compute_projection_tensor(state: MPS, target: DenseState) -> ProjectionTensor:
    """Contract the target against the frozen isometries around the center."""
    if target.n != state.n or target.d != state.d:
        raise InputError(
            f"dimension mismatch: state is ({state.n}, {state.d}), "
            f"target is ({target.n}, {target.d})"
        )
    check_gauge(state, tol=GAUGE_TOL)
    i = state.center
    d = state.d
    left = _left_block(state, i)       # (d**i, chi_l)
    right = _right_block(state, i)     # (chi_r, d**(n-i-1))
    t = target.amplitudes.reshape(left.shape[0], d, right.shape[1])
    coeffs = contract(left, [0], t, [0])       # (chi_l, d, rest)
    coeffs = contract(coeffs, [2], right, [1])  # (chi_l, d, chi_r)
    return ProjectionTensor(coeffs=coeffs, norm=float(np.linalg.norm(coeffs)))


def optimal_update(
    state: MPS,
    target: DenseState,
    stall_eps: float = 1e-14,
    *,
    step: int = 0,
    sweep_index: int = 0,
    direction: str = "R",
) -> tuple[MPS, MetricRecord]:
    """Replace the center core with the closest-point solution.

    The new center is the normalized projection tensor, so the updated
    state is the unit vector of the current subspace closest to the
    target and its overlap equals the projection norm. If the projection
    norm is at or below ``stall_eps`` the state is returned unchanged and
    the record is flagged as stalled.
    """
    proj = compute_projection_tensor(state, target)
    if proj.norm <= stall_eps:
        overlap = overlap_dense(state, target)
        stalled = True
        new_state = state
    else:
        sites = list(state.sites)
        sites[state.center] = proj.coeffs / proj.norm
        new_state = replace(state, sites=tuple(sites))
        overlap = proj.norm
        stalled = False
    record = MetricRecord(
        step=step,
        sweep=sweep_index,
        site=state.center,
        direction=direction,
        overlap=overlap,
        angle=math.acos(max(-1.0, min(1.0, overlap))),
        distance=math.sqrt(max(0.0, 2.0 - 2.0 * overlap)),
        stalled=stalled,
    )
    return new_state, record


def sweep(
    state: MPS,
    target: DenseState,
    config: TrainConfig,
    sweep_index: int,
    step_offset: int = 0,
) -> tuple[MPS, list[MetricRecord]]:
    """One full sweep: updates at sites 0..n-1 then back at n-2..0.

    Emits 2n-1 records (1 for n=1) and returns with the center at site 0.
    """
    if state.center != 0:
        raise InputError(f"sweep requires center 0, got {state.center}")
    n = state.n
    records: list[MetricRecord] = []
    step = step_offset
    for site in range(n):
        state, rec = optimal_update(
            state, target, config.stall_eps,
            step=step, sweep_index=sweep_index, direction="R",
        )
        records.append(rec)
        step += 1
        if site < n - 1:
            state = shift_center(state, "right")
    for site in range(n - 2, -1, -1):
        state = shift_center(state, "left")
        state, rec = optimal_update(
            state, target, config.stall_eps,
            step=step, sweep_index=sweep_index, direction="L",
        )
        records.append(rec)
        step += 1
    return state, records


def train(config: TrainConfig) -> tuple[MPS, list[MetricRecord], str]:
    """Run sweeps until the per-sweep overlap change drops below tol.

    Returns (final state, full trajectory, termination reason), where the
    reason is "converged" or "sweep-limit". Deterministic in the config.
    """
    config.validate()
    target = resolve_target(config.target, config.n, config.d)
    state = random_mps(config.n, config.d, config.chi, config.seed)
    trajectory: list[MetricRecord] = []
    reason = "sweep-limit"
    prev_last = None
    for k in range(config.max_sweeps):
        state, records = sweep(state, target, config, k, step_offset=len(trajectory))
        trajectory.extend(records)
        last = records[-1].overlap
        if prev_last is not None and abs(last - prev_last) < config.tol:
            reason = "converged"
            break
        prev_last = last
    return state, trajectory, reason
