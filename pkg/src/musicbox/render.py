"""Turning multi-patterns into notes, ABC text and Standard MIDI files.

One atom (a beat or a rest) lasts an eighth note. Degrees are resolved
against a rooted scale as plain integer offsets, whatever monoid produced
them.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Sequence

from .errors import ArgumentError, EtaError, FormatError
from .patterns import MultiPattern, Pattern

NAMED_SCALES: dict[str, tuple[int, ...]] = {
    "major": (2, 2, 1, 2, 2, 2, 1),
    "minor_natural": (2, 1, 2, 2, 1, 2, 2),
    "minor_harmonic": (2, 1, 2, 2, 1, 3, 1),
    "minor_pentatonic": (3, 2, 2, 3, 2),
    "hirajoshi": (2, 1, 4, 1, 4),
    "chromatic": (1,) * 12,
}


@dataclass(frozen=True, order=True)
class Note:
    """Step ``k`` in octave ``n`` of an ``eta``-tone equal temperament.

    Field order makes the dataclass ordering the pitch order.
    """

    n: int
    k: int
    eta: int = 12

    def __post_init__(self):
        if self.eta < 1:
            raise ArgumentError(f"eta must be positive, got {self.eta}")
        if not 0 <= self.k < self.eta:
            raise ArgumentError(f"step index {self.k} outside [0, {self.eta - 1}]")

    @classmethod
    def of(cls, k: int, n: int, eta: int = 12) -> Note:
        return cls(n, k, eta)

    @classmethod
    def parse(cls, text: str, eta: int = 12) -> Note:
        try:
            k, n = text.split(":")
            return cls(int(n), int(k), eta)
        except (ValueError, ArgumentError):
            raise FormatError(f"bad note {text!r}, expected <k>:<n>") from None

    def __str__(self) -> str:
        return f"{self.k}:{self.n}"


@dataclass(frozen=True)
class Scale:
    parts: tuple[int, ...]
    eta: int = 12

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts or any(p < 0 for p in self.parts):
            raise ArgumentError("scale parts are a nonempty list of nonnegative integers")
        if sum(self.parts) != self.eta:
            raise ArgumentError(f"scale parts sum to {sum(self.parts)}, not {self.eta}")

    @classmethod
    def parse(cls, text: str, eta: int = 12) -> Scale:
        """A scale name or a comma-separated list of parts."""
        text = text.strip()
        if text in NAMED_SCALES:
            return cls(NAMED_SCALES[text], eta)
        try:
            return cls(tuple(int(p) for p in text.split(",")), eta)
        except ValueError:
            raise FormatError(f"unknown scale {text!r}") from None
        except ArgumentError as exc:
            raise FormatError(str(exc)) from None

    def __str__(self) -> str:
        for name, parts in NAMED_SCALES.items():
            if parts == self.parts and self.eta == 12:
                return name
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class RootedScale:
    scale: Scale
    root: Note

    def __post_init__(self):
        if self.root.eta != self.scale.eta:
            raise ArgumentError("root and scale use different temperaments")


@dataclass(frozen=True)
class Interpretation:
    rooted_scale: RootedScale
    tempo: int = 128

    def __post_init__(self):
        if self.tempo < 1:
            raise ArgumentError(f"tempo must be positive, got {self.tempo}")


@dataclass(frozen=True)
class NoteEvent:
    voice: int
    onset: int
    duration: int
    note: Note


def scale_step_indices(rs: RootedScale) -> tuple[int, ...]:
    eta = rs.scale.eta
    steps, k = set(), rs.root.k
    for part in rs.scale.parts:
        steps.add(k % eta)
        k += part
    return tuple(sorted(steps))


def degree_to_note(rs: RootedScale, d: int) -> Note:
    steps = scale_step_indices(rs)
    j = rs.root.n * len(steps) + steps.index(rs.root.k) + d
    octave, idx = divmod(j, len(steps))
    return Note(octave, steps[idx], rs.scale.eta)


def _as_multi(m) -> MultiPattern:
    return MultiPattern((m,)) if isinstance(m, Pattern) else m


def mp_to_events(m, interp: Interpretation) -> list[NoteEvent]:
    """Each beat sounds until the next beat of its row (or the end)."""
    events = []
    for voice, row in enumerate(_as_multi(m).rows):
        word = row.word
        onsets = [j for j, a in enumerate(word) if a is not None]
        ends = onsets[1:] + [len(word)]
        for j, end in zip(onsets, ends):
            note = degree_to_note(interp.rooted_scale, word[j])
            events.append(NoteEvent(voice, j, end - j, note))
    return events


def note_to_midi(note: Note) -> int:
    if note.eta != 12:
        raise EtaError(f"MIDI needs 12-tone equal temperament, got eta = {note.eta}")
    return 12 * (note.n + 1) + note.k


# -- ABC --------------------------------------------------------------------

_SHARP_SPELLING = ("C", "^C", "D", "^D", "E", "F", "^F", "G", "^G", "A", "^A", "B")


def abc_pitch(note: Note) -> str:
    if note.eta != 12:
        raise EtaError(f"ABC needs 12-tone equal temperament, got eta = {note.eta}")
    name = _SHARP_SPELLING[note.k]
    accidental, letter = name[:-1], name[-1]
    if note.n >= 5:
        return accidental + letter.lower() + "'" * (note.n - 5)
    return accidental + letter + "," * (4 - note.n)


def _voice_tokens(events: Sequence[NoteEvent], length: int) -> list[str]:
    tokens = []
    if events and events[0].onset > 0:
        tokens.append(f"z{events[0].onset}")
    elif not events:
        tokens.append(f"z{length}")
    sharpened: set[str] = set()
    for ev in events:
        pitch = abc_pitch(ev.note)
        bare = pitch.lstrip("^")
        if pitch.startswith("^"):
            sharpened.add(bare)
        elif bare in sharpened:
            # an earlier sharp on this letter still holds (no bar lines)
            pitch = "=" + bare
            sharpened.discard(bare)
        tokens.append(f"{pitch}{ev.duration}")
    return tokens


def write_abc(m, interp: Interpretation, title: str = "", key: str = "Am", meter: str = "8/8") -> str:
    m = _as_multi(m)
    events = mp_to_events(m, interp)
    lines = [
        "X:1",
        f"T:{title}",
        f"M:{meter}",
        "L:1/8",
        f"Q:1/8={interp.tempo}",
        f"K:{key}",
    ]
    for voice in range(m.multiplicity):
        mine = [e for e in events if e.voice == voice]
        lines.append(f"V:voice{voice + 1}")
        lines.append(" ".join(_voice_tokens(mine, m.length)))
    return "\n".join(lines) + "\n"


# -- MIDI -------------------------------------------------------------------

DIVISION = 480
TICKS_PER_ATOM = DIVISION // 2
VELOCITY = 64


def _vlq(value: int) -> bytes:
    out = [value & 0x7F]
    value >>= 7
    while value:
        out.append(0x80 | (value & 0x7F))
        value >>= 7
    return bytes(reversed(out))


def _track(timed: list[tuple[int, bytes]]) -> bytes:
    body, now = bytearray(), 0
    for tick, data in timed:
        body += _vlq(tick - now) + data
        now = tick
    body += _vlq(0) + b"\xff\x2f\x00"
    return b"MTrk" + struct.pack(">I", len(body)) + bytes(body)


def write_midi(m, interp: Interpretation) -> bytes:
    """Format 1: a tempo track, then one track per voice."""
    m = _as_multi(m)
    usec = round(120_000_000 / interp.tempo)
    if usec > 0xFFFFFF:
        raise ArgumentError(f"tempo {interp.tempo} too slow for a MIDI tempo event")
    tracks = [_track([(0, b"\xff\x51\x03" + usec.to_bytes(3, "big"))])]
    events = mp_to_events(m, interp)
    for voice in range(m.multiplicity):
        channel = voice % 16
        timed = []
        for ev in (e for e in events if e.voice == voice):
            key = note_to_midi(ev.note)
            if not 0 <= key <= 127:
                raise ArgumentError(f"note {ev.note} maps to MIDI key {key}, outside [0, 127]")
            start = ev.onset * TICKS_PER_ATOM
            stop = start + ev.duration * TICKS_PER_ATOM
            # offs sort before ons at equal ticks
            timed.append((start, 1, bytes((0x90 | channel, key, VELOCITY))))
            timed.append((stop, 0, bytes((0x80 | channel, key, 0))))
        timed.sort(key=lambda t: (t[0], t[1]))
        tracks.append(_track([(tick, data) for tick, _, data in timed]))
    header = b"MThd" + struct.pack(">IHHH", 6, 1, len(tracks), DIVISION)
    return header + b"".join(tracks)
