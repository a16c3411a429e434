import numpy as np
import pytest
from scipy.signal import chirp

from helpers import speech_like, tone
from mkspeech.dsp import (
    MagnitudeSpectrogram,
    MelParams,
    StftParams,
    TooShort,
    istft,
    load_any_spectrogram,
    load_spectrogram,
    mel_spectrogram,
    save_spectrogram,
    save_spectrogram_csv,
    stft,
)


class TestParams:
    def test_invariants(self):
        with pytest.raises(ValueError):
            StftParams(fft_size=512, win_size=1024, hop=256)
        with pytest.raises(ValueError):
            StftParams(hop=0)
        with pytest.raises(ValueError):
            StftParams(sample_rate=0)

    def test_bins(self):
        assert StftParams(fft_size=1024).bins == 513


class TestStft:
    def test_shape_22050(self):
        p = StftParams()
        out = stft(np.zeros(22050), p)
        assert out.shape == (87, 513)  # 1 + 22050 // 256 centered frames

    def test_zeros(self):
        out = stft(np.zeros(22050), StftParams())
        assert np.abs(out).max() == 0.0

    def test_impulse_frame_is_window_flat(self):
        # a frame holding one impulse has |rfft| == window value, flat in freq
        p = StftParams()
        signal = np.zeros(8192)
        signal[4096] = 1.0
        mags = np.abs(stft(signal, p))
        for frame in mags:
            if frame.max() > 1e-12:
                assert frame.std() / frame.mean() < 1e-9

    def test_too_short(self):
        with pytest.raises(TooShort):
            stft(np.zeros(100), StftParams())


class TestRoundtrip:
    @pytest.mark.parametrize(
        "p",
        [
            StftParams(),
            StftParams(fft_size=1024, win_size=600, hop=120),
            StftParams(fft_size=2048, win_size=1200, hop=240),
            StftParams(fft_size=512, win_size=240, hop=50),
        ],
    )
    def test_white_noise(self, p):
        rng = np.random.default_rng(0)
        x = rng.standard_normal(22050)
        y = istft(stft(x, p), p, length=len(x))
        assert np.linalg.norm(x - y) / np.linalg.norm(x) < 1e-6

    def test_sine(self):
        p = StftParams()
        x = tone(440, 2.0, 22050)
        y = istft(stft(x, p), p, length=len(x))
        assert np.linalg.norm(x - y) / np.linalg.norm(x) < 1e-6

    def test_chirp(self):
        p = StftParams()
        t = np.arange(44100) / 22050.0
        x = chirp(t, f0=100, f1=8000, t1=2.0)
        y = istft(stft(x, p), p, length=len(x))
        assert np.linalg.norm(x - y) / np.linalg.norm(x) < 1e-6

    def test_zero_matrix(self):
        p = StftParams()
        assert np.abs(istft(np.zeros((40, p.bins), dtype=complex), p)).max() == 0.0

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            istft(np.zeros((40, 100), dtype=complex), StftParams())

    def test_default_length(self):
        p = StftParams()
        x = np.random.default_rng(1).standard_normal(22050)
        y = istft(stft(x, p), p)
        assert len(y) == (22050 // p.hop) * p.hop


class TestContainers:
    def test_binary_roundtrip(self, tmp_path):
        p = StftParams()
        mag = MagnitudeSpectrogram(np.abs(stft(speech_like(), p)), p)
        path = tmp_path / "mag.spg"
        save_spectrogram(path, mag)
        back = load_spectrogram(path)
        assert isinstance(back, MagnitudeSpectrogram)
        assert back.params == p
        assert np.abs(back.data - mag.data).max() < 1e-4  # float32 payload

    def test_mel_roundtrip_keeps_params(self, tmp_path):
        p = StftParams()
        mel = mel_spectrogram(speech_like(), p, MelParams())
        path = tmp_path / "mel.spg"
        save_spectrogram(path, mel)
        back = load_any_spectrogram(path)
        assert back.mel == mel.mel and back.params == p

    def test_csv_fallback(self, tmp_path):
        p = StftParams()
        mel = mel_spectrogram(speech_like(), p, MelParams())
        path = tmp_path / "mel.csv"
        save_spectrogram_csv(path, mel)
        back = load_any_spectrogram(path)
        assert np.abs(back.data - mel.data).max() < 1e-6

    def test_bad_magic(self, tmp_path):
        path = tmp_path / "bad.spg"
        path.write_bytes(b"NOPE" + b"\x00" * 20)
        with pytest.raises(ValueError, match="magic"):
            load_spectrogram(path)
