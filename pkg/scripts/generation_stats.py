"""Size statistics of generated patterns across seeds, per generation mode.

    python3 scripts/generation_stats.py --seeds 500 --iterations 6

Uses the five-rule, three-color example system bundled with the test suite
unless --system points at a system file.
"""

from __future__ import annotations

import argparse
import statistics
from pathlib import Path

from musicbox.budgen import MODES, generate
from musicbox.textio import parse_system

DEFAULT_SYSTEM = """\
monoid additive
multiplicity 2
colors b1 b2 b3
initial b1
rule b1 : b3 b2 b1 b1 b3 { 0 2 . 1 . 0 4 ; -5 . . 0 0 0 0 }
rule b1 : b1 b1 { 1 . 0 ; 0 . 1 }
rule b2 : b1 { -1 ; -1 }
rule b2 : b1 b1 { 0 0 ; 0 0 }
rule b3 : b3 { 0 ; 0 }
"""


def summarize(values: list[int]) -> str:
    q = statistics.quantiles(values, n=4) if len(values) > 1 else [values[0]] * 3
    return f"mean {statistics.fmean(values):9.1f}  median {q[1]:7.0f}  min {min(values):6d}  max {max(values):7d}"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--system", type=Path)
    parser.add_argument("--seeds", type=int, default=200)
    parser.add_argument("--iterations", "-k", type=int, default=5)
    args = parser.parse_args()

    text = args.system.read_text() if args.system else DEFAULT_SYSTEM
    system = parse_system(text).system
    for mode in MODES:
        arities, lengths = [], []
        for seed in range(args.seeds):
            out, _ = generate(system, mode, args.iterations, seed)
            arities.append(out.arity)
            lengths.append(out.length)
        print(f"{mode} (k={args.iterations}, {args.seeds} seeds)")
        print(f"  arity   {summarize(arities)}")
        print(f"  length  {summarize(lengths)}")


if __name__ == "__main__":
    main()
