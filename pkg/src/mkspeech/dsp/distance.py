"""Multi-resolution STFT distance between two waveforms."""

from dataclasses import dataclass

import numpy as np

from .mel import LOG_FLOOR
from .spectral import StftParams, stft

#: (fft, win, hop) triples used when no resolution list is given.
DEFAULT_RESOLUTION_SIZES = ((1024, 600, 120), (2048, 1200, 240), (512, 240, 50))


def default_resolutions(sample_rate: int = 22050) -> tuple[StftParams, ...]:
    return tuple(
        StftParams(fft_size=f, win_size=w, hop=h, sample_rate=sample_rate)
        for f, w, h in DEFAULT_RESOLUTION_SIZES
    )


@dataclass(frozen=True)
class ResolutionTerm:
    params: StftParams
    spectral_convergence: float
    log_magnitude_l1: float

    @property
    def total(self) -> float:
        return self.spectral_convergence + self.log_magnitude_l1


@dataclass(frozen=True)
class MrStftDistance:
    total: float
    terms: tuple[ResolutionTerm, ...]


def mr_stft_distance(
    x: np.ndarray,
    y: np.ndarray,
    resolutions: tuple[StftParams, ...] | None = None,
) -> MrStftDistance:
    """Sum over resolutions of spectral convergence plus log-magnitude L1.

    Both terms use magnitudes only, so the distance ignores phase, is
    symmetric in its arguments (convergence is normalized by the larger
    Frobenius norm) and is zero exactly when the magnitudes agree at every
    resolution.  Signals of different lengths are trimmed to the shorter.
    """
    if resolutions is None:
        resolutions = default_resolutions()
    if not resolutions:
        raise ValueError("need at least one STFT resolution")
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = min(len(x), len(y))
    x, y = x[:n], y[:n]

    terms = []
    for p in resolutions:
        mx = np.abs(stft(x, p))
        my = np.abs(stft(y, p))
        denom = max(np.linalg.norm(mx), np.linalg.norm(my))
        sc = float(np.linalg.norm(mx - my) / denom) if denom > 0 else 0.0
        log_l1 = float(
            np.mean(np.abs(np.log(np.maximum(mx, LOG_FLOOR)) - np.log(np.maximum(my, LOG_FLOOR))))
        )
        terms.append(ResolutionTerm(p, sc, log_l1))
    return MrStftDistance(total=sum(t.total for t in terms), terms=tuple(terms))
