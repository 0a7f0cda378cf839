"""Command line front end.

Exit status: 0 on success, 1 when an input fails validation, 2 on usage
errors (bad flags, unreadable files). Output files are written only once
the whole result is ready.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import music_ops
from .budgen import DerivationLog, generate, replay
from .errors import ArgumentError, MusicBoxError
from .monoid import ADDITIVE, DegreeMonoid
from .morphisms import dil_beta, mul_alpha, red_k
from .patterns import MultiPattern, compose
from .presets import PRESETS
from .render import Interpretation, Note, RootedScale, Scale, write_abc, write_midi
from .textio import SystemFile, format_pattern, format_system, parse_pattern, parse_system


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, data: str | bytes) -> None:
    """Write atomically; ``None`` or ``-`` means stdout."""
    if path in (None, "-"):
        if isinstance(data, bytes):
            sys.stdout.buffer.write(data)
        else:
            sys.stdout.write(data)
        return
    mode = "wb" if isinstance(data, bytes) else "w"
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".musicbox-")
    try:
        with os.fdopen(fd, mode, **({} if mode == "wb" else {"encoding": "utf-8"})) as fh:
            fh.write(data)
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _pattern(path: str) -> MultiPattern:
    return parse_pattern(_read(path))


def _system(path: str) -> SystemFile:
    return parse_system(_read(path))


def _monoid(text: str | None) -> DegreeMonoid:
    return DegreeMonoid.parse(text) if text else ADDITIVE


def _unwrap(m: MultiPattern):
    return m.rows[0] if m.multiplicity == 1 else m


def _looks_like_system(text: str) -> bool:
    heads = {line.split("#", 1)[0].split()[0] for line in text.splitlines() if line.split("#", 1)[0].split()}
    return bool(heads & {"initial", "rule", "monoid", "multiplicity", "colors"})


# -- subcommands ------------------------------------------------------------


def cmd_check(args) -> int:
    text = _read(args.file)
    if not _looks_like_system(text):
        m = parse_pattern(text)
        print(f"pattern: multiplicity {m.multiplicity}, arity {m.arity}, length {m.length}")
        return 0
    sf = parse_system(text)
    diags = sf.system.validate()
    for d in diags:
        print(d)
    bad = any(d.level == "error" for d in diags)
    print("invalid" if bad else "ok")
    return 1 if bad else 0


def cmd_compose(args) -> int:
    x, y = _pattern(args.left), _pattern(args.right)
    out = compose(x, args.pos, y, _monoid(args.monoid))
    _write(args.out, format_pattern(out))
    return 0


def _split_op(op: str) -> tuple[str, str | None]:
    head, sep, arg = op.partition(":")
    return head, (arg if sep else None)


def _int_arg(name: str, arg: str | None) -> int:
    if arg is None:
        raise UsageError(f"--op {name} needs an argument, as in {name}:<n>")
    try:
        return int(arg)
    except ValueError:
        raise UsageError(f"--op {name}: expected an integer, got {arg!r}") from None


def apply_transform(op: str, m: MultiPattern, monoid: DegreeMonoid = ADDITIVE):
    name, arg = _split_op(op)
    x = _unwrap(m)
    if name in ("id", "inv", "mir", "minv") and arg is None:
        return music_ops.homogeneous_op(name)(x)
    if name == "mul":
        return mul_alpha(_int_arg(name, arg), x, monoid=monoid)
    if name == "red":
        return red_k(_int_arg(name, arg), x, monoid=monoid)
    if name == "dil":
        return dil_beta(_int_arg(name, arg), x)
    if name == "tran":
        return music_ops.transpose(_int_arg(name, arg), x, monoid=monoid)
    if name == "rep":
        return music_ops.repeat(_int_arg(name, arg), x, monoid=monoid)
    if name == "temp":
        return music_ops.temporize(_int_arg(name, arg), x, monoid=monoid)
    if name in ("conc", "har", "arp", "mim"):
        if not arg:
            raise UsageError(f"--op {name} needs a file, as in {name}:<file>")
        other = _unwrap(_pattern(arg))
        if name == "conc":
            return music_ops.concatenate(x, other, monoid=monoid)
        if name == "mim":
            return music_ops.mimesis(x, other, monoid=monoid)
        if m.multiplicity != 1:
            raise ArgumentError(f"{name} takes a single-row pattern")
        if not isinstance(other, MultiPattern):
            other = MultiPattern((other,))
        fn = music_ops.harmonize if name == "har" else music_ops.arpeggiate
        return fn(x, other, monoid=monoid)
    raise UsageError(f"unknown operation {op!r}")


def cmd_transform(args) -> int:
    out = apply_transform(args.op, _pattern(args.pattern), _monoid(args.monoid))
    _write(args.out, format_pattern(out))
    return 0


def cmd_generate(args) -> int:
    sf = _system(args.system)
    out, log = generate(sf.system, args.mode, args.iterations, args.seed)
    text = format_pattern(out)
    if args.log:
        _write(args.log, log.format())
    _write(args.out, text)
    return 0


def cmd_replay(args) -> int:
    sf = _system(args.system)
    log = DerivationLog.parse(_read(args.log))
    _write(args.out, format_pattern(replay(sf.system, log)))
    return 0


def _interp_from(args) -> Interpretation | None:
    if args.scale is None and args.root is None:
        return None
    if args.scale is None or args.root is None:
        raise UsageError("--scale and --root go together")
    scale = Scale.parse(args.scale)
    return Interpretation(RootedScale(scale, Note.parse(args.root, scale.eta)), args.tempo)


def cmd_preset(args) -> int:
    kind = args.kind
    p = _unwrap(_pattern(args.pattern))
    if isinstance(p, MultiPattern):
        raise ArgumentError("presets take a single-row pattern")
    need = {
        "temporizer": "t",
        "rhythmic": "flat",
        "concatenating": "op",
        "stacking": "op",
        "harmonizator": "chord",
        "arpeggiator": "arpeggio",
    }[kind]
    value = getattr(args, need)
    if value is None:
        raise UsageError(f"--kind {kind} needs --{need}")
    if need in ("flat",):
        value = _unwrap(_pattern(value))
        if isinstance(value, MultiPattern):
            raise ArgumentError("the flat pattern has a single row")
    elif need in ("chord", "arpeggio"):
        value = _pattern(value)
    system = PRESETS[kind](p, value)
    _write(args.out, format_system(SystemFile(system, _interp_from(args))))
    return 0


def cmd_render(args) -> int:
    m = _pattern(args.pattern)
    interp = None
    if args.system:
        interp = _system(args.system).interpretation
    if args.scale is not None or args.root is not None:
        interp = _interp_from(args)
    if interp is None:
        raise UsageError("render needs --scale and --root (or a --system with an interpretation block)")
    if args.tempo_set:
        interp = Interpretation(interp.rooted_scale, args.tempo)
    if args.format == "abc":
        data: str | bytes = write_abc(m, interp, title=args.title)
    else:
        data = write_midi(m, interp)
        if args.out in (None, "-") and sys.stdout.isatty():
            raise UsageError("refusing to write MIDI bytes to a terminal; use --out")
    _write(args.out, data)
    return 0


# -- parser -----------------------------------------------------------------


class _TempoAction(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)
        namespace.tempo_set = True


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _add_interp_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scale", help="scale name or comma-separated parts")
    p.add_argument("--root", help="root note as <k>:<n>, e.g. 9:3")
    p.add_argument("--tempo", type=int, default=128, action=_TempoAction, help="atoms per minute")
    p.set_defaults(tempo_set=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="musicbox", description="Multi-pattern composition and generation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a pattern or system file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compose", help="partial composition left o_pos right")
    p.add_argument("--left", required=True)
    p.add_argument("--pos", required=True, type=int)
    p.add_argument("--right", required=True)
    p.add_argument("--monoid", help="additive | 'cyclic <k>' | 'max <z>'")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("transform", help="apply a morphism or musical operation")
    p.add_argument("pattern")
    p.add_argument(
        "--op",
        required=True,
        help="id|mir|inv|minv|mul:<a>|red:<k>|dil:<b>|tran:<d>|rep:<k>|temp:<k>|conc:<f>|mim:<f>|har:<f>|arp:<f>",
    )
    p.add_argument("--monoid")
    p.add_argument("--out")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("generate", help="random generation from a system")
    p.add_argument("--system", required=True)
    p.add_argument("--mode", required=True, choices=("partial", "full", "homogeneous"))
    p.add_argument("--iterations", "-k", required=True, type=int)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--log")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("replay", help="rebuild a generated pattern from its log")
    p.add_argument("--system", required=True)
    p.add_argument("--log", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("preset", help="write one of the ready-made systems")
    p.add_argument("--kind", required=True, choices=sorted(PRESETS))
    p.add_argument("--pattern", required=True)
    p.add_argument("--t", type=int, help="temporizer: maximal extra rests")
    p.add_argument("--flat", help="rhythmic: flat pattern file")
    p.add_argument("--op", help="concatenating/stacking: id|inv|mir|minv|tran:<d>")
    p.add_argument("--chord", help="harmonizator: chord file")
    p.add_argument("--arpeggio", help="arpeggiator: arpeggio file")
    _add_interp_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_preset)

    p = sub.add_parser("render", help="write ABC or MIDI")
    p.add_argument("--pattern", required=True)
    p.add_argument("--system", help="take the interpretation block from this system file")
    _add_interp_flags(p)
    p.add_argument("--format", choices=("abc", "midi"), default="abc")
    p.add_argument("--title", default="")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "iterations", 0) < 0:
        parser.error("--iterations must be nonnegative")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"musicbox: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"musicbox: {exc}", file=sys.stderr)
        return 2
    except MusicBoxError as exc:
        print(f"musicbox: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
