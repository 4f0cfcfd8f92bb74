"""End-to-end acceptance battery.

Run with ``pytest -s tests/test_acceptance.py`` to see one PASS line per
criterion.
"""

import itertools
import json
import math
import time

import numpy as np

from sphere_dmrg.engine import TrainConfig, optimal_update, train
from sphere_dmrg.cli import main
from sphere_dmrg.mps import (
    gauge_defect,
    gauge_to,
    mps_to_dense,
    random_mps,
    shift_center,
)
from sphere_dmrg.oracle import project_onto_subspace_dense, subspace_basis_dense
from sphere_dmrg.target import DenseState, named_state
from sphere_dmrg.verify import oracle_check

OVERLAP_SLACK = 1e-12


def report(line):
    print(f"\n[PASS] {line}")


def test_c1_monotone_trajectory():
    start = time.monotonic()
    combos = itertools.product(range(3, 9), (1, 2, 4), range(3))
    checked = 0
    for n, chi, seed in combos:
        if checked >= 50:
            break
        cfg = TrainConfig(
            n=n, d=2, chi=chi, seed=seed,
            target=f"named:random:{seed + 500}", max_sweeps=2, tol=1e-30,
        )
        _, traj, _ = train(cfg)
        for a, b in zip(traj, traj[1:]):
            if a.stalled or b.stalled:
                continue
            assert b.overlap >= a.overlap - OVERLAP_SLACK, (n, chi, seed, a, b)
            # non-increasing angle, with the overlap slack mapped through
            # arccos (a fixed radian slack is meaningless where the arccos
            # derivative diverges at overlap 1)
            bound = math.acos(min(1.0, max(-1.0, a.overlap - OVERLAP_SLACK)))
            assert b.angle <= bound, (n, chi, seed, a, b)
        checked += 1
    elapsed = time.monotonic() - start
    assert checked == 50
    assert elapsed < 30.0
    report(f"C1 monotone trajectory: 50 configs, {elapsed:.2f}s")


def test_c2_engine_oracle_equivalence():
    start = time.monotonic()
    runs = 0
    for n, d, chi in itertools.product(range(2, 7), (2, 3), (1, 2, 4)):
        for seed in range(10):
            cfg = TrainConfig(
                n=n, d=d, chi=chi, seed=seed, target=f"named:random:{seed + 9000}"
            )
            mismatches = oracle_check(cfg)
            assert not mismatches, (n, d, chi, seed, mismatches)
            runs += 1
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    report(f"C2 engine-oracle equivalence: {runs} instances, {elapsed:.2f}s")


def test_c3_whole_space_collapse():
    for n in (2, 4, 6):
        chi = 2 ** (n // 2)
        cfg = TrainConfig(
            n=n, d=2, chi=chi, seed=n,
            target=f"named:random:{n + 70}", max_sweeps=1, tol=1e-30,
        )
        _, traj, _ = train(cfg)
        middle = next(r for r in traj if r.direction == "R" and r.site == n // 2)
        assert abs(middle.overlap - 1.0) < 1e-10, (n, middle)
    report("C3 whole-space collapse at the middle site (n=2,4,6)")


# scenario pinned by brute-force search over seeds; see scripts/find_asymmetry_seed.py
ASYMMETRY_SEED = 0


def test_c4_membership_asymmetry():
    n, d, chi = 4, 2, 2
    state = gauge_to(random_mps(n, d, chi, ASYMMETRY_SEED), 1)
    target = named_state("random", n, d, seed=ASYMMETRY_SEED + 1000)
    psi_prev = mps_to_dense(state).amplitudes
    state, _ = optimal_update(state, target)
    psi_k = mps_to_dense(state).amplitudes
    state = shift_center(state, "right")
    basis = subspace_basis_dense(state)
    _, norm_k = project_onto_subspace_dense(DenseState(n, d, psi_k), basis)
    _, norm_prev = project_onto_subspace_dense(DenseState(n, d, psi_prev), basis)
    assert abs(norm_k - 1.0) <= 1e-10
    assert norm_prev < 1.0 - 1e-6
    report(
        f"C4 membership asymmetry: new iterate projects with norm {norm_k:.3e}, "
        f"previous with norm {norm_prev:.6f}"
    )


# final overlap of the chi=2 recovery run, computed once with the dense-oracle
# training pipeline (scripts/pin_recovery_golden.py) and frozen here
RECOVERY_GOLDEN_OVERLAP = 0.9999999999999999


def test_c5_exact_recovery_regression(tmp_path):
    target = mps_to_dense(random_mps(4, 2, 2, seed=7))
    path = tmp_path / "target.json"
    path.write_text(json.dumps({
        "kind": "amplitudes", "n": 4, "d": 2,
        "amplitudes": target.amplitudes.tolist(),
    }))
    cfg = TrainConfig(
        n=4, d=2, chi=2, seed=8, target=f"file:{path}", tol=1e-10, max_sweeps=100
    )
    _, traj, reason = train(cfg)
    assert reason == "converged"
    assert abs(traj[-1].overlap - RECOVERY_GOLDEN_OVERLAP) <= 1e-9
    report(f"C5 exact recovery: converged at overlap {traj[-1].overlap!r}")


def test_c6_gauge_noop_suite():
    moves = 0
    for seed in range(20):
        state = random_mps(6, 2, 4, seed=seed)
        reference = mps_to_dense(state).amplitudes
        for _ in range(25):
            direction = "right" if state.center < state.n - 1 else "left"
            # bounce between the chain ends
            if state.center == 0:
                direction = "right"
            state = shift_center(state, direction)
            dense = mps_to_dense(state).amplitudes
            assert np.linalg.norm(dense - reference) < 1e-12
            assert gauge_defect(state) < 1e-10
            reference = dense
            moves += 1
    assert moves == 500
    # left-moving pass
    for seed in range(20):
        state = gauge_to(random_mps(6, 2, 4, seed=seed + 100), 5)
        reference = mps_to_dense(state).amplitudes
        for _ in range(25):
            direction = "left" if state.center > 0 else "right"
            state = shift_center(state, direction)
            dense = mps_to_dense(state).amplitudes
            assert np.linalg.norm(dense - reference) < 1e-12
            assert gauge_defect(state) < 1e-10
            reference = dense
            moves += 1
    assert moves == 1000
    report("C6 gauge no-op suite: 1000 shifts, all < 1e-12 dense drift")


def test_c7_cli_determinism(tmp_path):
    args = [
        "--sites", "4", "--bond-dim", "2", "--seed", "3",
        "--target", "named:random:11", "--max-sweeps", "5",
    ]
    assert main(args + ["--out", str(tmp_path / "a")]) == 0
    assert main(args + ["--out", str(tmp_path / "b")]) == 0
    csv_a = (tmp_path / "a" / "trajectory.csv").read_bytes()
    csv_b = (tmp_path / "b" / "trajectory.csv").read_bytes()
    assert csv_a == csv_b
    report("C7 CLI determinism: byte-identical trajectory.csv")


def test_c8_desk_scale_performance():
    cfg = TrainConfig(
        n=12, d=2, chi=16, seed=3,
        target="named:random:99", max_sweeps=50, tol=1e-30,
    )
    start = time.monotonic()
    _, traj, reason = train(cfg)
    elapsed = time.monotonic() - start
    assert reason == "sweep-limit"
    assert len(traj) == 50 * (2 * 12 - 1)
    assert elapsed < 10.0
    report(f"C8 desk-scale performance: n=12 chi=16, 50 sweeps in {elapsed:.2f}s")
