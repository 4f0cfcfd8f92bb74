"""Matrix product states in mixed-canonical gauge.

A state is a chain of rank-3 cores with axis order
(left bond, physical, right bond). Everything left of the center is a
left isometry, everything right of it a right isometry, and the center
core carries the full norm, so a unit-norm center means the represented
dense vector sits on the unit sphere.

Operations return new MPS values; treat instances as immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import BoundaryError, GaugeError, InputError
from .target import DenseState, check_dense_guard
from .tensor import contract, qr_orthonormalize


@dataclass(frozen=True)
class MPS:
    """Chain of (chi_left, d, chi_right) cores with an orthogonality center."""

    sites: tuple[np.ndarray, ...]
    center: int
    d: int

    @property
    def n(self) -> int:
        return len(self.sites)

    def bond_dims(self) -> list[int]:
        """Interior bond dimensions, bond i sitting between sites i and i+1."""
        return [t.shape[2] for t in self.sites[:-1]]


def bond_dim(n: int, d: int, chi: int, i: int) -> int:
    """Exact-representability cap for the bond between sites i and i+1."""
    return min(chi, d ** (i + 1), d ** (n - 1 - i))


def _validate_chain(sites) -> None:
    if sites[0].shape[0] != 1 or sites[-1].shape[2] != 1:
        raise InputError("boundary bonds must have dimension 1")
    for j in range(len(sites) - 1):
        if sites[j].shape[2] != sites[j + 1].shape[0]:
            raise InputError(
                f"bond mismatch between sites {j} and {j + 1}: "
                f"{sites[j].shape} vs {sites[j + 1].shape}"
            )


def left_defect(core: np.ndarray) -> float:
    """Deviation of a core from the left-isometry condition."""
    l, d, r = core.shape
    m = core.reshape(l * d, r)
    return float(np.max(np.abs(m.T @ m - np.eye(r))))


def right_defect(core: np.ndarray) -> float:
    """Deviation of a core from the right-isometry condition."""
    l, d, r = core.shape
    m = core.reshape(l, d * r)
    return float(np.max(np.abs(m @ m.T - np.eye(l))))


def gauge_defect(state: MPS) -> float:
    """Worst isometry defect over all non-center sites."""
    worst = 0.0
    for j, core in enumerate(state.sites):
        if j < state.center:
            worst = max(worst, left_defect(core))
        elif j > state.center:
            worst = max(worst, right_defect(core))
    return worst


def check_gauge(state: MPS, tol: float = 1e-8) -> None:
    defect = gauge_defect(state)
    if defect > tol:
        raise GaugeError(f"isometry defect {defect:.3e} exceeds {tol:g}")


def random_mps(n: int, d: int, chi: int, seed: int) -> MPS:
    """Seeded Gaussian MPS, gauged to center 0 and normalized.

    Entries are drawn from numpy's default PCG64 generator; the stream is
    fixed by the seed, so identical arguments give identical states.
    """
    if n < 1 or d < 2 or chi < 1:
        raise InputError(f"invalid sizes n={n}, d={d}, chi={chi}")
    check_dense_guard(n, d)
    rng = np.random.default_rng(seed)
    dims = [1] + [bond_dim(n, d, chi, i) for i in range(n - 1)] + [1]
    sites = [rng.standard_normal((dims[j], d, dims[j + 1])) for j in range(n)]
    # right-canonicalize down to site 0, then normalize the center
    for j in range(n - 1, 0, -1):
        l, _, r = sites[j].shape
        q, t = qr_orthonormalize(sites[j].reshape(l, d * r).T)
        sites[j] = q.T.reshape(l, d, r)
        sites[j - 1] = contract(sites[j - 1], [2], t, [1])
    sites[0] = sites[0] / np.linalg.norm(sites[0])
    _validate_chain(sites)
    return MPS(sites=tuple(sites), center=0, d=d)


def shift_center(state: MPS, direction: str) -> MPS:
    """Move the center one site left or right without changing the state."""
    j = state.center
    d = state.d
    sites = list(state.sites)
    if direction == "right":
        if j == state.n - 1:
            raise BoundaryError("cannot shift right at the last site")
        l, _, r = sites[j].shape
        q, t = qr_orthonormalize(sites[j].reshape(l * d, r))
        sites[j] = q.reshape(l, d, r)
        sites[j + 1] = contract(t, [1], sites[j + 1], [0])
        return replace(state, sites=tuple(sites), center=j + 1)
    if direction == "left":
        if j == 0:
            raise BoundaryError("cannot shift left at site 0")
        l, _, r = sites[j].shape
        q, t = qr_orthonormalize(sites[j].reshape(l, d * r).T)
        sites[j] = q.T.reshape(l, d, r)
        sites[j - 1] = contract(sites[j - 1], [2], t, [1])
        return replace(state, sites=tuple(sites), center=j - 1)
    raise InputError(f"direction must be 'left' or 'right', got {direction!r}")


def gauge_to(state: MPS, center: int) -> MPS:
    """Shift the center to the given site."""
    if not (0 <= center < state.n):
        raise InputError(f"center {center} out of range [0, {state.n})")
    while state.center < center:
        state = shift_center(state, "right")
    while state.center > center:
        state = shift_center(state, "left")
    return state


def dense_amplitudes(state: MPS) -> np.ndarray:
    """Raw big-endian amplitude vector, without the unit-norm check."""
    check_dense_guard(state.n, state.d)
    psi = np.ones((1, 1))
    for core in state.sites:
        l, d, r = core.shape
        psi = contract(psi, [1], core, [0])
        psi = psi.reshape(psi.shape[0] * d, r)
    return psi.reshape(-1)


def mps_to_dense(state: MPS) -> DenseState:
    """Contract the chain into the full amplitude vector (big-endian)."""
    return DenseState(n=state.n, d=state.d, amplitudes=dense_amplitudes(state))


def overlap_dense(state: MPS, target: DenseState) -> float:
    """Inner product with a dense target, contracting site by site.

    Folds the target through the chain one core at a time, so no second
    dense copy of the MPS is ever materialized.
    """
    if target.n != state.n or target.d != state.d:
        raise InputError(
            f"dimension mismatch: state is ({state.n}, {state.d}), "
            f"target is ({target.n}, {target.d})"
        )
    d = state.d
    env = target.amplitudes.reshape(1, -1)
    for core in state.sites:
        l, _, r = core.shape
        rest = env.shape[1] // d
        env = contract(core.reshape(l * d, r), [0], env.reshape(l * d, rest), [0])
    return float(env[0, 0])


def mps_to_json_dict(state: MPS) -> dict:
    return {
        "n": state.n,
        "d": state.d,
        "center": state.center,
        "tensors": [
            {"shape": list(core.shape), "data": core.reshape(-1).tolist()}
            for core in state.sites
        ],
    }


def mps_from_json_dict(doc: dict) -> MPS:
    sites = []
    for entry in doc["tensors"]:
        shape = tuple(entry["shape"])
        core = np.asarray(entry["data"], dtype=np.float64).reshape(shape)
        sites.append(core)
    if len(sites) != doc["n"]:
        raise InputError(f"expected {doc['n']} tensors, got {len(sites)}")
    _validate_chain(sites)
    return MPS(sites=tuple(sites), center=int(doc["center"]), d=int(doc["d"]))
