"""Run every claim check over the connected graphs of each order and write a JSON summary.

    python3 scripts/run_verification.py --max-n 7 --out results/verification.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from starcrit.verify import ClaimId, summarize, verify_claim


@dataclass(frozen=True)
class VerificationConfig:
    min_n: int = 4
    max_n: int = 7
    jobs: int = 1
    claims: tuple[str, ...] = field(default_factory=lambda: tuple(c.value for c in ClaimId))


def run_all(config: VerificationConfig):
    runs = []
    for claim in config.claims:
        for n in range(config.min_n, config.max_n + 1):
            start = time.perf_counter()
            run = verify_claim(claim, n, jobs=config.jobs)
            runs.append(run)
            status = "ok" if run.verified else f"{len(run.counterexamples)} counterexamples"
            print(f"{claim:15s} n={n}  examined={run.examined:6d}  applicable={run.applicable:6d}  "
                  f"{status}  [{time.perf_counter() - start:.1f} s]")
    return runs


def main() -> None:
    defaults = VerificationConfig()
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-n", type=int, default=defaults.min_n)
    parser.add_argument("--max-n", type=int, default=defaults.max_n)
    parser.add_argument("--jobs", type=int, default=defaults.jobs)
    parser.add_argument("--claims", nargs="*", default=list(defaults.claims))
    parser.add_argument("--out", type=Path)
    args = parser.parse_args()

    config = VerificationConfig(args.min_n, args.max_n, args.jobs, tuple(args.claims))
    summary = {"config": asdict(config), **summarize(run_all(config))}
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps(summary, indent=2) + "\n")
        print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
