"""Run every sweep at its default size and write JSON reports to a directory."""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from domforge.verify import (
    edge_removal_sweep,
    general_bound_sweep,
    kn_min_sweep,
    lemma_suites,
    star_min_sweep,
    sweep_forests,
)


@dataclass
class SweepConfig:
    forest_max_n: int = 13
    star_max_n: int = 12
    labeled_max_n: int = 7
    lemma_max_n: int = 10
    workers: int = 1
    timing: bool = True


def run(cfg: SweepConfig, out: Path) -> dict[str, bool]:
    out.mkdir(parents=True, exist_ok=True)
    t = cfg.timing
    ok: dict[str, bool] = {}

    def save(name: str, payload, passed: bool) -> None:
        (out / f"{name}.json").write_text(json.dumps(payload, indent=2) + "\n")
        ok[name] = passed
        print(f"{name:18s} {'ok' if passed else 'FAILED'}", flush=True)

    reps = sweep_forests(cfg.forest_max_n, cfg.workers)
    save("forests", [r.to_dict(t) for r in reps], all(r.passed for r in reps))
    reps = star_min_sweep(cfg.star_max_n)
    save("star_min", [r.to_dict(t) for r in reps], all(r.passed for r in reps))
    ns = range(2, cfg.labeled_max_n + 1)
    reps = [edge_removal_sweep(n, "any-edge", cfg.workers) for n in ns]
    save("edge_any", [r.to_dict(t) for r in reps], not any(r.counterexamples for r in reps))
    # open question: findings are recorded, never a failure
    reps = [edge_removal_sweep(n, "non-pendant-edge", cfg.workers) for n in ns]
    save("edge_nonpendant", [r.to_dict(t) for r in reps], True)
    reps = [general_bound_sweep(n, cfg.workers) for n in ns]
    save("general_bound", [r.to_dict(t) for r in reps], all(r.passed for r in reps))
    reps = [kn_min_sweep(n, cfg.workers) for n in range(1, cfg.labeled_max_n + 1)]
    save("kn_min", [r.to_dict(t) for r in reps], all(r.passed for r in reps))
    suites = lemma_suites(cfg.lemma_max_n)
    save("lemmas", suites, not any(s["failures"] for s in suites))
    return ok


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--no-timing", action="store_true")
    args = ap.parse_args()
    cfg = SweepConfig(workers=args.workers, timing=not args.no_timing)
    t0 = time.perf_counter()
    ok = run(cfg, args.out)
    (args.out / "config.json").write_text(json.dumps(asdict(cfg), indent=2) + "\n")
    print(f"done in {time.perf_counter() - t0:.1f}s")
    raise SystemExit(0 if all(ok.values()) else 1)


if __name__ == "__main__":
    main()
