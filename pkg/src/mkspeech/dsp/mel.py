"""Mel filterbank analysis and its approximate inversion."""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .spectral import MagnitudeSpectrogram, StftParams, stft

LOG_FLOOR = 1e-5


@dataclass(frozen=True)
class MelParams:
    n_mels: int = 80
    fmin: float = 50.0
    fmax: float = 7600.0

    def validate(self, sample_rate: float) -> None:
        if self.n_mels < 1:
            raise ValueError("n_mels must be >= 1")
        if not (0 <= self.fmin < self.fmax <= sample_rate / 2):
            raise ValueError("need 0 <= fmin < fmax <= sample_rate/2")


@dataclass(frozen=True)
class MelSpectrogram:
    """Log-compressed frames x n_mels matrix plus its analysis parameters."""

    data: np.ndarray
    mel: MelParams
    params: StftParams

    def __post_init__(self):
        if self.data.ndim != 2 or self.data.shape[1] != self.mel.n_mels:
            raise ValueError(f"expected frames x {self.mel.n_mels} matrix, got {self.data.shape}")

    @property
    def frames(self) -> int:
        return self.data.shape[0]


def hz_to_mel(f):
    return 2595.0 * np.log10(1.0 + np.asarray(f, dtype=np.float64) / 700.0)


def mel_to_hz(m):
    return 700.0 * (10.0 ** (np.asarray(m, dtype=np.float64) / 2595.0) - 1.0)


@lru_cache(maxsize=8)
def _filterbank_cached(p: StftParams, mel: MelParams) -> np.ndarray:
    mel.validate(p.sample_rate)
    edges = mel_to_hz(np.linspace(hz_to_mel(mel.fmin), hz_to_mel(mel.fmax), mel.n_mels + 2))
    bin_freqs = np.arange(p.bins) * p.sample_rate / p.fft_size
    fb = np.zeros((mel.n_mels, p.bins))
    for m in range(mel.n_mels):
        lo, center, hi = edges[m], edges[m + 1], edges[m + 2]
        rising = (bin_freqs - lo) / (center - lo)
        falling = (hi - bin_freqs) / (hi - center)
        fb[m] = np.clip(np.minimum(rising, falling), 0.0, 1.0)
        if not np.any(fb[m] > 0):
            raise ValueError(
                f"mel filter {m} has no positive weight; lower n_mels or raise fft_size"
            )
    return fb


def mel_filterbank(p: StftParams, mel: MelParams) -> np.ndarray:
    """Triangular filters (peak 1) on the mel scale, n_mels x bins."""
    return _filterbank_cached(p, mel).copy()


def linear_to_mel(mag: MagnitudeSpectrogram, mel: MelParams) -> np.ndarray:
    """Project magnitudes onto the mel filters (no log compression)."""
    fb = _filterbank_cached(mag.params, mel)
    return mag.data @ fb.T


def mel_spectrogram(signal: np.ndarray, p: StftParams, mel: MelParams) -> MelSpectrogram:
    """Log mel spectrogram: log(max(filterbank @ |STFT|, floor))."""
    mag = MagnitudeSpectrogram(np.abs(stft(signal, p)), p)
    data = np.log(np.maximum(linear_to_mel(mag, mel), LOG_FLOOR))
    return MelSpectrogram(data=data, mel=mel, params=p)


@lru_cache(maxsize=8)
def _pinv_cached(p: StftParams, mel: MelParams) -> np.ndarray:
    return np.linalg.pinv(_filterbank_cached(p, mel))


def mel_to_linear(mel_spec: MelSpectrogram) -> MagnitudeSpectrogram:
    """Approximate magnitude inversion via the filterbank pseudo-inverse,
    clamping negative leakage to zero."""
    amplitudes = np.exp(mel_spec.data)
    mag = amplitudes @ _pinv_cached(mel_spec.params, mel_spec.mel).T
    return MagnitudeSpectrogram(np.maximum(mag, 0.0), mel_spec.params)
