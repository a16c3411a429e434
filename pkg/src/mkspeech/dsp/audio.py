"""WAV I/O, resampling and loudness normalization.

Corpus recordings are 44.1 kHz / 16-bit RIFF WAV; analysis runs at
22.05 kHz after an explicit resampling step.  Float signals live in
[-1, 1].
"""

from fractions import Fraction
from pathlib import Path

import numpy as np
from scipy.io import wavfile
from scipy.signal import resample_poly

CORPUS_RATE = 44100
ANALYSIS_RATE = 22050

#: Loudness target for listening-test stimuli, dB relative to full scale.
TARGET_RMS_DBFS = -23.0


def read_wav(path: str | Path) -> tuple[np.ndarray, int]:
    """Read a WAV file as float64 in [-1, 1]; stereo is averaged to mono."""
    rate, data = wavfile.read(str(path))
    if data.ndim == 2:
        data = data.mean(axis=1)
    if data.dtype == np.int16:
        signal = data / 32768.0
    elif data.dtype == np.int32:
        signal = data / 2147483648.0
    elif data.dtype == np.uint8:
        signal = (data.astype(np.float64) - 128.0) / 128.0
    else:
        signal = data.astype(np.float64)
    return signal, int(rate)


def write_wav(path: str | Path, signal: np.ndarray, sample_rate: int) -> None:
    """Write PCM 16-bit, clipping anything outside [-1, 1]."""
    clipped = np.clip(np.asarray(signal, dtype=np.float64), -1.0, 1.0)
    wavfile.write(str(path), int(sample_rate), (clipped * 32767.0).astype(np.int16))


def resample(signal: np.ndarray, rate_from: int, rate_to: int) -> np.ndarray:
    if rate_from == rate_to:
        return np.asarray(signal, dtype=np.float64)
    ratio = Fraction(rate_to, rate_from)
    return resample_poly(np.asarray(signal, dtype=np.float64), ratio.numerator, ratio.denominator)


def rms_normalize(signal: np.ndarray, target_dbfs: float = TARGET_RMS_DBFS) -> np.ndarray:
    """Scale to the target RMS; back off if that would clip past 0.999."""
    signal = np.asarray(signal, dtype=np.float64)
    rms = np.sqrt(np.mean(signal**2))
    if rms == 0.0:
        return signal.copy()
    gain = 10.0 ** (target_dbfs / 20.0) / rms
    peak = np.max(np.abs(signal)) * gain
    if peak > 0.999:
        gain *= 0.999 / peak
    return signal * gain
