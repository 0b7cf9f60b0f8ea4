"""Headless driver: load data, replay a command script or run an autoplay
tour, and write transcripts, statistics, exports, figures, and audio."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import narrate, plotdata, report, session as sess, sonify
from .autoplay import AutoplayConfig
from .navgrid import Axis, NavConfig, NavMode
from .plotdata import Format, SampleConfig, SampleKind


class ScriptError(ValueError):
    pass


_SCRIPT_MOVES = {
    "up": sess.MOVE_UP,
    "down": sess.MOVE_DOWN,
    "left": sess.MOVE_LEFT,
    "right": sess.MOVE_RIGHT,
}

_SCRIPT_SIMPLE = {
    "axis": sess.CYCLE_AXIS,
    "announce": sess.ANNOUNCE,
    "autoplay": sess.TOGGLE_AUTOPLAY,
    "intelligent": sess.INTELLIGENT_AUTOPLAY,
    "sonify": sess.TOGGLE_SONIFICATION,
    "verbosity": sess.CYCLE_VERBOSITY,
    "rate": sess.CYCLE_SPEECH_RATE,
    "review": sess.TOGGLE_REVIEW,
}


def parse_script(text: str) -> list[sess.Command]:
    """One directive per line; blank lines and #-comments are skipped."""
    commands = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = line.split()
        head, args = words[0], words[1:]
        try:
            commands.append(_parse_directive(head, args))
        except ScriptError as exc:
            raise ScriptError(f"line {lineno}: {exc}") from None
    return commands


def _parse_directive(head: str, args: list[str]) -> sess.Command:
    if head == "move" and len(args) == 1 and args[0] in _SCRIPT_MOVES:
        return _SCRIPT_MOVES[args[0]]
    if head == "jump" and len(args) == 1 and args[0] in ("+", "-"):
        return sess.JUMP_SEGMENT_UP if args[0] == "+" else sess.JUMP_SEGMENT_DOWN
    if head in _SCRIPT_SIMPLE and not args:
        return _SCRIPT_SIMPLE[head]
    if head == "tick" and len(args) == 1:
        try:
            dt = float(args[0])
        except ValueError:
            raise ScriptError(f"invalid tick duration {args[0]!r}")
        if dt < 0:
            raise ScriptError("tick duration must be >= 0")
        return sess.advance_time(dt)
    if head == "mode" and len(args) == 1 and args[0] in ("point", "surface"):
        return sess.set_mode(NavMode(args[0]))
    raise ScriptError(f"unknown directive {' '.join([head, *args])!r}")


def _load_dataset(args: argparse.Namespace) -> plotdata.Dataset:
    if args.input is not None:
        data = Path(args.input).read_bytes()
        fmt = Format.JSON if str(args.input).lower().endswith(".json") else Format.CSV
        return plotdata.parse_dataset(data, fmt, source_name=Path(args.input).name)
    kind = SampleKind.SINUSOIDAL if args.sample == "sinusoidal" else SampleKind.SPECTRAL_STANDIN
    nx, nz = (args.resolution or (0, 0))
    return plotdata.generate_sample(kind, SampleConfig(nx=nx, nz=nz))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _check_errors(events) -> str | None:
    for e in events:
        if e.type == "error":
            return e.payload["message"]
    return None


def _build_wav_schedule(
    batches: list, mode_by_batch: list[NavMode]
) -> sonify.CueSchedule:
    """Place each requested cue on a timeline by interval accumulation.

    Autoplay steps advance the clock by their own interval; any other cue
    occupies one base-interval slot for its mode.
    """
    entries = []
    clock = 0.0
    config = AutoplayConfig()
    for events, mode in zip(batches, mode_by_batch):
        pending_ms: float | None = None
        for e in events:
            if e.type == "autoplayStep":
                pending_ms = e.payload["intervalMs"]
            elif e.type == "cueRequested":
                slot = pending_ms if pending_ms is not None else config.base_interval_ms(mode)
                pending_ms = None
                if "cue" in e.payload:
                    entries.append((clock, _cue_from_payload(e.payload["cue"])))
                else:
                    for item in e.payload["schedule"]["entries"]:
                        entries.append((clock + item["onset"], _cue_from_payload(item["cue"])))
                clock += slot / 1000.0
    return sonify.CueSchedule(tuple(entries))


def _cue_from_payload(payload: dict) -> sonify.AudioCue:
    return sonify.AudioCue(
        kind=sonify.CueKind(payload["kind"]),
        frequency=payload["frequency"],
        pan=payload["pan"],
        oscillator=payload["oscillator"],
        duration=payload["duration"],
        gain=payload["gain"],
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sonisurf",
        description="Explore 3D surface/point data headlessly: replay command "
        "scripts or autoplay tours; write transcripts, stats, exports, "
        "figures, and rendered sonification audio.",
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="CSV or JSON dataset to load")
    src.add_argument(
        "--sample",
        choices=["sinusoidal", "spectral"],
        help="generate a built-in sample dataset",
    )
    p.add_argument(
        "--resolution",
        nargs=2,
        type=int,
        metavar=("NX", "NZ"),
        help="sample lattice resolution (generator default if omitted)",
    )
    p.add_argument("--mode", choices=["point", "surface"], help="navigation mode after load")
    p.add_argument("--axis", choices=["x", "y", "z"], help="active navigation axis (default y)")
    p.add_argument("--bins", type=int, default=12, help="segment bin count (default 12)")
    p.add_argument("--script", metavar="PATH", help="command script to replay")
    p.add_argument("--autoplay", action="store_true", help="run a full autoplay tour")
    p.add_argument(
        "--intelligent", action="store_true", help="feature-adaptive autoplay (surface mode)"
    )
    p.add_argument("--transcript", metavar="PATH", help="write the event transcript")
    p.add_argument("--wav", metavar="PATH", help="render requested cues to a stereo WAV")
    p.add_argument("--stats", action="store_true", help="print per-dimension statistics")
    p.add_argument(
        "--export",
        nargs=2,
        metavar=("FMT", "PATH"),
        help="export the dataset (FMT: csv or json)",
    )
    p.add_argument("--plot", metavar="PATH", help="render a figure of the dataset")
    p.add_argument("--sample-rate", type=int, default=44100, help="WAV sample rate (Hz)")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        dataset = _load_dataset(args)
    except (OSError, plotdata.PlotDataError) as exc:
        return _fail(str(exc))

    if args.bins < 1:
        return _fail("--bins must be >= 1")
    session = sess.Session(nav_config=NavConfig(default_bins=args.bins))

    batches: list[list] = []  # events per dispatched command
    modes: list[NavMode] = []  # navigation mode at each dispatch

    def run(cmd: sess.Command, fatal: bool = True) -> str | None:
        events = session.dispatch(cmd)
        batches.append(events)
        modes.append(session.nav.mode if session.nav else NavMode.POINT)
        return _check_errors(events) if fatal else None

    run(sess.load_dataset(dataset), fatal=False)
    if args.mode:
        message = run(sess.set_mode(NavMode(args.mode)))
        if message:
            return _fail(message)
    if args.axis:
        target = Axis(args.axis.upper())
        while session.nav.active_axis is not target:
            run(sess.CYCLE_AXIS, fatal=False)

    if args.script:
        try:
            commands = parse_script(Path(args.script).read_text(encoding="utf-8"))
        except OSError as exc:
            return _fail(str(exc))
        except ScriptError as exc:
            return _fail(f"{args.script}: {exc}")
        for cmd in commands:
            run(cmd, fatal=False)
    else:
        # No script: the default run is a full autoplay tour.
        message = run(sess.INTELLIGENT_AUTOPLAY if args.intelligent else sess.TOGGLE_AUTOPLAY)
        if message:
            return _fail(message)
        # Bounded: every 1000 ms advances at least two steps (max interval 500 ms).
        guard = 2 * len(session.autoplay.plan) + 2
        while session.autoplay.active and guard:
            run(sess.advance_time(1000.0), fatal=False)
            guard -= 1

    try:
        if args.transcript:
            text = session.transcript()
            Path(args.transcript).write_text(text + "\n" if text else "", encoding="utf-8")
        if args.stats:
            stats = plotdata.dataset_stats(dataset)
            print(narrate.describe_stats(dataset, stats))
        if args.export:
            fmt_name, out_path = args.export
            if fmt_name not in ("csv", "json"):
                return _fail(f"unknown export format {fmt_name!r}")
            Path(out_path).write_text(
                plotdata.export(dataset, Format(fmt_name)), encoding="utf-8"
            )
        if args.wav:
            if args.sample_rate < 8000:
                return _fail("--sample-rate must be >= 8000")
            schedule = _build_wav_schedule(batches, modes)
            sonify.write_wav(
                args.wav, sonify.render_pcm(schedule, args.sample_rate), args.sample_rate
            )
        if args.plot:
            report.render_figure(dataset, args.plot, session.nav, session.index)
    except OSError as exc:
        return _fail(str(exc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
