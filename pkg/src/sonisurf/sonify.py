"""Audio encoding of data points and fixed signal cues, plus a PCM renderer.

The mapping: y drives pitch over 200-1200 Hz, x drives stereo pan and the
oscillator waveform (quartile-stepped), z drives tone duration and volume.
Degenerate (flat) axes map to their midpoints. Fixed cues sit outside the
data-pitch band so they cannot be mistaken for data tones.
"""

from __future__ import annotations

import math
import wave
from dataclasses import dataclass
from enum import Enum
from typing import Any, Sequence

import numpy as np

from .plotdata import AxisMeta, Point3


class CueKind(str, Enum):
    DATA_TONE = "dataTone"
    BOUNDARY = "boundary"
    REVIEW_ENTER = "reviewEnter"
    REVIEW_EXIT = "reviewExit"


OSCILLATORS = ("sine", "square", "sawtooth", "triangle")


@dataclass(frozen=True)
class SonifyConfig:
    f_min: float = 200.0
    f_max: float = 1200.0
    pan_min: float = -1.0
    pan_max: float = 1.0
    duration_min: float = 0.12
    duration_max: float = 0.36
    gain_min: float = 0.35
    gain_max: float = 0.85
    oscillators: tuple[str, ...] = OSCILLATORS


@dataclass(frozen=True)
class AudioCue:
    kind: CueKind
    frequency: float
    pan: float
    oscillator: str
    duration: float
    gain: float

    def to_payload(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "frequency": self.frequency,
            "pan": self.pan,
            "oscillator": self.oscillator,
            "duration": self.duration,
            "gain": self.gain,
        }


@dataclass(frozen=True)
class CueSchedule:
    """Timed cues; onsets in seconds, non-decreasing."""

    entries: tuple[tuple[float, AudioCue], ...]

    @property
    def extent(self) -> float:
        """End of the last sounding cue."""
        return max((onset + cue.duration for onset, cue in self.entries), default=0.0)

    def to_payload(self) -> dict[str, Any]:
        return {
            "entries": [
                {"onset": onset, "cue": cue.to_payload()} for onset, cue in self.entries
            ]
        }


def _unit_position(value: float, lo: float, hi: float) -> float:
    """Position of value in [lo, hi] as 0..1; 0.5 when the range is flat."""
    if hi == lo:
        return 0.5
    return (value - lo) / (hi - lo)


def _lerp(lo: float, hi: float, t: float) -> float:
    return lo + (hi - lo) * t


def map_cue(
    point: Point3,
    axes: Sequence[AxisMeta],
    config: SonifyConfig = SonifyConfig(),
) -> AudioCue:
    """Encode one data point as a tone against the dataset's axis extrema."""
    if not all(math.isfinite(c) for c in point):
        raise ValueError(f"cannot sonify non-finite point {point!r}")
    tx = _unit_position(point.x, axes[0].min, axes[0].max)
    ty = _unit_position(point.y, axes[1].min, axes[1].max)
    tz = _unit_position(point.z, axes[2].min, axes[2].max)
    osc_index = min(len(config.oscillators) - 1, int(len(config.oscillators) * tx))
    return AudioCue(
        kind=CueKind.DATA_TONE,
        frequency=_lerp(config.f_min, config.f_max, ty),
        pan=_lerp(config.pan_min, config.pan_max, tx),
        oscillator=config.oscillators[osc_index],
        duration=_lerp(config.duration_min, config.duration_max, tz),
        gain=_lerp(config.gain_min, config.gain_max, tz),
    )


# Signal cues. 150 Hz sits below the data-pitch floor; the review chime is a
# 330/440/550 Hz triad, ascending on enter and mirrored on exit.
_BOUNDARY_TONE = AudioCue(CueKind.BOUNDARY, 150.0, 0.0, "square", 0.08, 0.5)
_REVIEW_FREQS = (330.0, 440.0, 550.0)
_REVIEW_STEP = 0.08


def fixed_cue(kind: CueKind) -> CueSchedule:
    """Pre-defined cue for boundary hits and review-mode transitions."""
    if kind is CueKind.BOUNDARY:
        return CueSchedule(((0.0, _BOUNDARY_TONE),))
    if kind is CueKind.REVIEW_ENTER:
        freqs = _REVIEW_FREQS
    elif kind is CueKind.REVIEW_EXIT:
        freqs = tuple(reversed(_REVIEW_FREQS))
    else:
        raise ValueError(f"no fixed cue for {kind!r}")
    entries = tuple(
        (i * _REVIEW_STEP, AudioCue(kind, f, 0.0, "sine", _REVIEW_STEP, 0.5))
        for i, f in enumerate(freqs)
    )
    return CueSchedule(entries)


def schedule_for(cue: AudioCue, onset: float = 0.0) -> CueSchedule:
    return CueSchedule(((onset, cue),))


# ---------------------------------------------------------------------------
# Offline synthesis
# ---------------------------------------------------------------------------

_FADE_SECONDS = 0.005


def _waveform(name: str, frequency: float, t: np.ndarray) -> np.ndarray:
    if name == "sine":
        return np.sin(2.0 * np.pi * frequency * t)
    phase = np.mod(frequency * t, 1.0)
    if name == "square":
        return np.where(phase < 0.5, 1.0, -1.0)
    if name == "sawtooth":
        return 2.0 * phase - 1.0
    if name == "triangle":
        return 1.0 - 4.0 * np.abs(phase - 0.5)
    raise ValueError(f"unknown oscillator {name!r}")


def render_pcm(schedule: CueSchedule, sample_rate: int = 44100) -> np.ndarray:
    """Mix a schedule to a float stereo buffer, shape (n, 2), in [-1, 1].

    Each cue is synthesized at its waveform/frequency with a 5 ms linear
    fade at both ends and equal-power panned: left = g*cos((pan+1)*pi/4),
    right = g*sin((pan+1)*pi/4). Overlaps are summed, then hard-clipped.
    """
    if sample_rate < 8000:
        raise ValueError("sample_rate must be >= 8000")
    total = math.ceil(schedule.extent * sample_rate)
    out = np.zeros((total, 2), dtype=np.float64)
    for onset, cue in schedule.entries:
        n = int(round(cue.duration * sample_rate))
        if n <= 0:
            continue
        t = np.arange(n, dtype=np.float64) / sample_rate
        mono = cue.gain * _waveform(cue.oscillator, cue.frequency, t)
        fade = min(int(round(_FADE_SECONDS * sample_rate)), n // 2)
        if fade > 0:
            ramp = np.linspace(0.0, 1.0, fade, endpoint=False)
            mono[:fade] *= ramp
            mono[-fade:] *= ramp[::-1]
        theta = (cue.pan + 1.0) * np.pi / 4.0
        start = int(round(onset * sample_rate))
        stop = min(start + n, total)
        out[start:stop, 0] += mono[: stop - start] * np.cos(theta)
        out[start:stop, 1] += mono[: stop - start] * np.sin(theta)
    np.clip(out, -1.0, 1.0, out=out)
    return out


def write_wav(path: str, buffer: np.ndarray, sample_rate: int = 44100) -> None:
    """Write a float stereo buffer as RIFF/WAVE, PCM 16-bit little-endian."""
    pcm = (np.clip(buffer, -1.0, 1.0) * 32767.0).round().astype("<i2")
    with wave.open(path, "wb") as fh:
        fh.setnchannels(2)
        fh.setsampwidth(2)
        fh.setframerate(sample_rate)
        fh.writeframes(pcm.tobytes())
