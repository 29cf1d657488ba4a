"""Where do complex-room policies fail?  Success split by spawn half, plus the
rate at which uniform random actions carry a far-half spawn to the goal.

Run from the repository root after run_policies.sh:
    python3 acceptance_runs/diagnose_complex.py
"""

from pathlib import Path

import numpy as np

from gridnav.world import World, WorldConfig, read_csv

RUNS = Path(__file__).resolve().parent
COMPLEX = WorldConfig.default("complex")


def split_by_half(run_dir):
    header, data = read_csv(run_dir / "eval_episodes.csv")
    col = {name: i for i, name in enumerate(header)}
    near = data[:, col["start_y"]] < 5.0
    success = data[:, col["success"]]
    far_returns = data[~near, col["return"]]
    return success[near].mean(), near.sum(), success[~near].mean(), (~near).sum(), far_returns


def random_far_half(n_episodes=300, seed=0):
    w = World(COMPLEX, seed=seed, tags=False)
    rng = np.random.default_rng(seed)
    far = reached = 0
    for _ in range(n_episodes):
        w.reset()
        if w.state.y < 5.0:
            continue
        far += 1
        while True:
            res = w.step(rng.uniform(-1, 1, 2))
            if res.terminated or res.truncated:
                break
        reached += res.terminated
    return reached, far


def main():
    for run_dir in sorted(RUNS.glob("complex_*_s*")):
        if not (run_dir / "eval_episodes.csv").exists():
            continue
        near, n_near, far, n_far, far_ret = split_by_half(run_dir)
        print(f"{run_dir.name}: goal half {near:.3f} (n={n_near}), far half {far:.3f} "
              f"(n={n_far}), far-half failures with return -4.0 (no collision): "
              f"{np.mean(np.isclose(far_ret, -4.0)):.2f}")
    reached, far = random_far_half()
    print(f"uniform random actions, far-half spawns reaching the goal: {reached}/{far}")


if __name__ == "__main__":
    main()
