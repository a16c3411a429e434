"""Low-pass anchor generation for MUSHRA tests."""

from functools import lru_cache

import numpy as np
from scipy.signal import firwin, kaiserord, lfilter

#: The two anchor cutoffs used in listening tests.
ANCHOR_CUTOFFS_HZ = (3500.0, 7000.0)

_STOPBAND_DB = 60.0


@lru_cache(maxsize=8)
def _design(cutoff: float, sample_rate: int) -> np.ndarray:
    # transition band [0.9, 1.1] * cutoff keeps the passband edge at
    # 0.9 * cutoff and the stopband edge under 1.15 * cutoff
    width = 0.2 * cutoff
    numtaps, beta = kaiserord(_STOPBAND_DB, width / (0.5 * sample_rate))
    numtaps |= 1  # odd length for an integer group delay
    return firwin(numtaps, cutoff, window=("kaiser", beta), fs=sample_rate)


def lowpass_anchor(signal: np.ndarray, cutoff: float, sample_rate: int) -> np.ndarray:
    """Linear-phase FIR low pass with the group delay compensated.

    Passband ripple stays within 0.5 dB below 0.9 * cutoff and stopband
    attenuation exceeds 30 dB above 1.15 * cutoff (the design targets
    60 dB).  Output length equals input length.
    """
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    if 1.15 * cutoff >= sample_rate / 2:
        raise ValueError(
            f"cutoff {cutoff} Hz leaves no stopband below Nyquist at {sample_rate} Hz"
        )
    signal = np.asarray(signal, dtype=np.float64)
    taps = _design(float(cutoff), int(sample_rate))
    delay = (len(taps) - 1) // 2
    padded = np.concatenate([signal, np.zeros(delay)])
    return lfilter(taps, 1.0, padded)[delay:]
