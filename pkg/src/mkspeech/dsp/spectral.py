"""Short-time Fourier analysis and least-squares overlap-add resynthesis."""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.signal import get_window


class TooShort(ValueError):
    """Signal shorter than the analysis window (or the centering pad)."""


@dataclass(frozen=True)
class StftParams:
    fft_size: int = 1024
    win_size: int = 1024
    hop: int = 256
    window: str = "hann"
    sample_rate: int = 22050

    def __post_init__(self):
        if not (0 < self.hop <= self.win_size <= self.fft_size):
            raise ValueError("need 0 < hop <= win_size <= fft_size")
        if self.sample_rate <= 0:
            raise ValueError("sample_rate must be positive")

    @property
    def bins(self) -> int:
        return self.fft_size // 2 + 1

    def frame_count(self, n_samples: int) -> int:
        # centered framing: one frame per hop, plus the leading frame
        return 1 + n_samples // self.hop


@dataclass(frozen=True)
class MagnitudeSpectrogram:
    """Non-negative frames x bins matrix with its analysis parameters."""

    data: np.ndarray
    params: StftParams

    def __post_init__(self):
        if self.data.ndim != 2 or self.data.shape[1] != self.params.bins:
            raise ValueError(
                f"expected frames x {self.params.bins} matrix, got {self.data.shape}"
            )
        if np.any(self.data < 0):
            raise ValueError("magnitudes must be non-negative")

    @property
    def frames(self) -> int:
        return self.data.shape[0]


@lru_cache(maxsize=16)
def _padded_window(window: str, win_size: int, fft_size: int) -> np.ndarray:
    win = get_window(window, win_size, fftbins=True).astype(np.float64)
    left = (fft_size - win_size) // 2
    out = np.zeros(fft_size)
    out[left : left + win_size] = win
    return out


def stft(signal: np.ndarray, p: StftParams) -> np.ndarray:
    """Complex frames x bins spectrogram; centered frames, reflection pad."""
    signal = np.asarray(signal, dtype=np.float64)
    pad = p.fft_size // 2
    if len(signal) < p.win_size or len(signal) <= pad:
        raise TooShort(
            f"signal of {len(signal)} samples is too short for win {p.win_size}, fft {p.fft_size}"
        )
    x = np.pad(signal, pad, mode="reflect")
    n_frames = p.frame_count(len(signal))
    window = _padded_window(p.window, p.win_size, p.fft_size)
    idx = np.arange(p.fft_size)[None, :] + p.hop * np.arange(n_frames)[:, None]
    frames = x[idx] * window[None, :]
    return np.fft.rfft(frames, axis=1)


def istft(spec: np.ndarray, p: StftParams, length: int | None = None) -> np.ndarray:
    """Invert ``stft`` by windowed overlap-add with window-power weighting.

    This is the least-squares signal estimate, so ``istft(stft(x))``
    reproduces x up to float rounding for any window that keeps a nonzero
    overlapped power envelope.  Without ``length`` the trailing partial hop
    is unknown and (frames - 1) * hop samples are returned.
    """
    spec = np.asarray(spec)
    if spec.ndim != 2 or spec.shape[1] != p.bins:
        raise ValueError(f"expected frames x {p.bins} matrix, got {spec.shape}")
    n_frames = spec.shape[0]
    window = _padded_window(p.window, p.win_size, p.fft_size)
    frames = np.fft.irfft(spec, n=p.fft_size, axis=1) * window[None, :]

    total = (n_frames - 1) * p.hop + p.fft_size
    out = np.zeros(total)
    wss = np.zeros(total)
    wsq = window**2
    for t in range(n_frames):
        start = t * p.hop
        out[start : start + p.fft_size] += frames[t]
        wss[start : start + p.fft_size] += wsq
    nonzero = wss > np.finfo(np.float64).tiny
    out[nonzero] /= wss[nonzero]

    pad = p.fft_size // 2
    body = out[pad:]
    if length is None:
        return body[: (n_frames - 1) * p.hop]
    if length > len(body):
        return np.pad(body, (0, length - len(body)))
    return body[:length]
