import numpy as np
import pytest

from helpers import speech_like, tone
from mkspeech.dsp import (
    MagnitudeSpectrogram,
    MelParams,
    StftParams,
    griffin_lim,
    mel_spectrogram,
    mel_to_linear,
    spectral_convergence,
    stft,
)

P = StftParams()


def sine_magnitude():
    return MagnitudeSpectrogram(np.abs(stft(tone(440, 2.0, 22050), P)), P)


def assert_non_increasing(convergence):
    for k in range(len(convergence) - 1):
        assert convergence[k + 1] <= convergence[k] * (1 + 1e-6) + 1e-12, (
            f"convergence rose at step {k}: {convergence[k]} -> {convergence[k + 1]}"
        )


class TestSpectralConvergence:
    def test_identical(self):
        m = np.abs(np.random.default_rng(0).standard_normal((10, 5)))
        assert spectral_convergence(m, m) == 0.0

    def test_zero_reference(self):
        assert spectral_convergence(np.ones((3, 3)), np.zeros((3, 3))) == 0.0


class TestGriffinLim:
    def test_zero_magnitude(self):
        mag = MagnitudeSpectrogram(np.zeros((50, P.bins)), P)
        out = griffin_lim(mag, iters=3, seed=1)
        assert np.abs(out).max() == 0.0

    def test_sine_convergence(self):
        signal, conv = griffin_lim(sine_magnitude(), iters=60, seed=0, return_convergence=True)
        assert conv[-1] < 0.05
        assert_non_increasing(conv)

    def test_monotone_from_any_seed(self):
        mag = sine_magnitude()
        for seed in (1, 2, 3):
            _, conv = griffin_lim(mag, iters=30, seed=seed, return_convergence=True)
            assert_non_increasing(conv)

    def test_monotone_on_inconsistent_magnitude(self):
        # mel-inverted magnitudes are not any signal's exact |STFT|
        mel = mel_spectrogram(speech_like(), P, MelParams())
        _, conv = griffin_lim(mel_to_linear(mel), iters=40, seed=0, return_convergence=True)
        assert_non_increasing(conv)

    def test_original_update_available_and_monotone(self):
        _, conv = griffin_lim(
            sine_magnitude(), iters=30, seed=0, momentum=0.0, return_convergence=True
        )
        assert_non_increasing(conv)

    def test_peak_limited(self):
        out = griffin_lim(sine_magnitude(), iters=5, seed=0)
        assert np.abs(out).max() <= 0.99 + 1e-12

    def test_deterministic_given_seed(self):
        mag = sine_magnitude()
        a = griffin_lim(mag, iters=4, seed=9)
        b = griffin_lim(mag, iters=4, seed=9)
        assert np.array_equal(a, b)

    def test_seed_changes_result(self):
        mag = sine_magnitude()
        a = griffin_lim(mag, iters=4, seed=1)
        b = griffin_lim(mag, iters=4, seed=2)
        assert not np.array_equal(a, b)

    def test_invalid_iters(self):
        with pytest.raises(ValueError):
            griffin_lim(sine_magnitude(), iters=-1)

    def test_length_parameter(self):
        out = griffin_lim(sine_magnitude(), iters=2, seed=0, length=44100)
        assert len(out) == 44100
