"""Build every preset on a small phrase, generate from it and render the result.

    python3 scripts/render_presets.py --out runs/presets --seed 7

Each preset/mode pair leaves a pattern, its derivation log, an ABC file and a
MIDI file in the output directory. A summary table goes to stdout.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from musicbox.budgen import generate, replay
from musicbox.patterns import MultiPattern, Pattern
from musicbox.presets import PRESETS
from musicbox.render import Interpretation, Note, RootedScale, Scale, write_abc, write_midi
from musicbox.textio import format_pattern

PHRASE = Pattern.parse("0 2 . 1 . 0 4")

ARGUMENTS = {
    "temporizer": 2,
    "rhythmic": Pattern.parse("0 0 . 0 ."),
    "concatenating": "mir",
    "harmonizator": MultiPattern.parse("0 ; 2 ; 4"),
    "arpeggiator": MultiPattern.parse("0 . . ; . 2 . ; . . 4"),
    "stacking": "inv",
}

# homogeneous steps multiply arity quickly; keep them short
ITERATIONS = {"partial": 16, "full": 3, "homogeneous": 2}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("runs/presets"))
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--scale", default="minor_natural")
    parser.add_argument("--root", default="9:3")
    parser.add_argument("--tempo", type=int, default=128)
    args = parser.parse_args()

    scale = Scale.parse(args.scale)
    interp = Interpretation(RootedScale(scale, Note.parse(args.root)), args.tempo)
    args.out.mkdir(parents=True, exist_ok=True)

    print(f"{'preset':<14} {'mode':<12} {'voices':>6} {'length':>7} {'notes':>6} {'skips':>6}")
    for name, build in PRESETS.items():
        system = build(PHRASE, ARGUMENTS[name])
        for mode, k in ITERATIONS.items():
            out, log = generate(system, mode, k, args.seed)
            assert replay(system, log) == out
            stem = args.out / f"{name}-{mode}"
            stem.with_suffix(".txt").write_text(format_pattern(out))
            stem.with_suffix(".log").write_text(log.format())
            stem.with_suffix(".abc").write_text(write_abc(out, interp, title=f"{name} {mode}"))
            stem.with_suffix(".mid").write_bytes(write_midi(out, interp))
            skips = sum(1 for s in log.steps if s is None or (isinstance(s, tuple) and s[-1] is None))
            notes = sum(row.arity for row in out.rows)
            print(f"{name:<14} {mode:<12} {out.multiplicity:>6} {out.length:>7} {notes:>6} {skips:>6}")


if __name__ == "__main__":
    main()
