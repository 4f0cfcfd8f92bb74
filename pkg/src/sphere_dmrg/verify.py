"""Cross-checks between the sweeping engine and the dense oracle."""

from __future__ import annotations

import numpy as np

from .engine import TrainConfig, compute_projection_tensor, optimal_update
from .mps import mps_to_dense, random_mps, shift_center
from .oracle import project_onto_subspace_dense, subspace_basis_dense
from .target import check_dense_guard, resolve_target

COEFF_TOL = 1e-12
STATE_TOL = 1e-10


def oracle_check(config: TrainConfig) -> list[str]:
    """Compare engine updates against dense projections at every site.

    Performs one full sweep of the config's instance, checking at each
    center that the projection coefficients equal the dense basis inner
    products and that the updated state equals the normalized dense
    projection. Returns a list of mismatch descriptions (empty = pass).
    """
    config.validate()
    check_dense_guard(config.n, config.d)
    target = resolve_target(config.target, config.n, config.d)
    state = random_mps(config.n, config.d, config.chi, config.seed)
    mismatches: list[str] = []
    n = config.n
    schedule = ["R"] * (n - 1) + ["L"] * (n - 1) or [None]
    pos = 0
    while True:
        basis = subspace_basis_dense(state)
        proj = compute_projection_tensor(state, target)
        expected = basis.vectors @ target.amplitudes
        err = float(np.max(np.abs(proj.coeffs.reshape(-1) - expected)))
        if err > COEFF_TOL:
            mismatches.append(
                f"site {state.center}: projection coefficients differ by {err:.3e}"
            )
        dense_proj, norm = project_onto_subspace_dense(target, basis)
        state, record = optimal_update(state, target, config.stall_eps)
        if not record.stalled:
            got = mps_to_dense(state).amplitudes
            err = float(np.max(np.abs(got - dense_proj / norm)))
            if err > STATE_TOL:
                mismatches.append(
                    f"site {record.site}: updated state differs from "
                    f"normalized dense projection by {err:.3e}"
                )
        if pos >= len(schedule) or schedule[pos] is None:
            break
        state = shift_center(state, "right" if schedule[pos] == "R" else "left")
        pos += 1
    return mismatches
