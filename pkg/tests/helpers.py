"""Shared fixtures: synthetic signals and the paper-style test layout."""

from pathlib import Path

import numpy as np
from scipy.signal import lfilter

from mkspeech.dsp import write_wav

DATA_DIR = Path(__file__).parent / "data"

SYSTEM_CONDITIONS = ["rhvoice", "t2gl", "t2mb", "t2pwg"]
NATURAL = "natural"
ANCHOR = "anchor35"


def fixture_words() -> list[str]:
    return [
        w.strip()
        for w in (DATA_DIR / "words_200.txt").read_text("utf-8").splitlines()
        if w.strip()
    ]


def tone(freq: float, duration: float, sample_rate: int, amplitude: float = 0.8) -> np.ndarray:
    t = np.arange(int(duration * sample_rate)) / sample_rate
    return amplitude * np.sin(2 * np.pi * freq * t)


def speech_like(
    seed: int = 7, duration: float = 2.0, sample_rate: int = 22050, f0: float = 120.0
) -> np.ndarray:
    """Deterministic vowel-like signal: glottal pulse train with -12 dB/oct
    tilt through three formant resonators, radiation and light aspiration."""
    rng = np.random.default_rng(seed)
    n = int(duration * sample_rate)
    excitation = np.zeros(n)
    excitation[:: int(round(sample_rate / f0))] = 1.0
    for _ in range(3):
        excitation = lfilter([1.0], [1.0, -0.96], excitation)
    excitation += 0.01 * rng.standard_normal(n)
    signal = excitation
    for fc, bw in [(700, 130), (1220, 70), (2600, 160)]:
        r = np.exp(-np.pi * bw / sample_rate)
        theta = 2 * np.pi * fc / sample_rate
        signal = lfilter(
            [1 - 2 * r * np.cos(theta) + r * r], [1, -2 * r * np.cos(theta), r * r], signal
        )
    signal = np.diff(signal, prepend=0.0)
    t = np.arange(n) / sample_rate
    signal *= 0.55 + 0.45 * np.sin(2 * np.pi * 3.0 * t)
    return signal / np.abs(signal).max()


def snr_db(reference: np.ndarray, estimate: np.ndarray, guard: int = 0) -> float:
    sl = slice(guard, len(reference) - guard if guard else None)
    err = reference[sl] - estimate[sl]
    return 10 * np.log10(np.sum(reference[sl] ** 2) / np.sum(err**2))


def make_stimulus_dir(root: Path, utterances: list[str], seed: int = 0, fs: int = 22050) -> Path:
    """One short WAV per (condition, utterance), plus natural and anchor."""
    wav_dir = root / "stimuli"
    wav_dir.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)
    for utt in utterances:
        for cond in SYSTEM_CONDITIONS + [NATURAL, ANCHOR]:
            write_wav(wav_dir / f"{cond}-{utt}.wav", 0.1 * rng.standard_normal(fs // 4), fs)
    return wav_dir


def paper_layout_definition(test_id: str = "paper-layout") -> dict:
    """The experiment layout: 10 MOS utterances x 5 conditions = 50 MOS
    pages, plus 10 MUSHRA sets of 4 systems + hidden reference + anchor."""
    utterances = [f"utt{i:02d}" for i in range(1, 16)]
    mos_utts = utterances[:10]
    mushra_utts = utterances[5:15]  # 50 % overlap with the MOS set
    mos_pages = []
    page_no = 0
    for utt in mos_utts:
        for cond in SYSTEM_CONDITIONS + [NATURAL]:
            page_no += 1
            mos_pages.append(
                {
                    "page_id": f"mos-{page_no:03d}",
                    "condition": cond,
                    "audio": f"{cond}-{utt}.wav",
                    "stimulus_id": utt,
                }
            )
    mushra_pages = [
        {
            "page_id": f"mushra-{i:02d}",
            "reference_audio": f"{NATURAL}-{utt}.wav",
            "stimuli": [
                {"condition": c, "audio": f"{c}-{utt}.wav", "stimulus_id": utt}
                for c in SYSTEM_CONDITIONS
            ]
            + [
                {
                    "condition": ANCHOR,
                    "audio": f"{ANCHOR}-{utt}.wav",
                    "stimulus_id": utt,
                    "role": "anchor",
                }
            ],
        }
        for i, utt in enumerate(mushra_utts, 1)
    ]
    return {
        "test_id": test_id,
        "instructions": "Wear headphones and sit in a quiet room.",
        "audio_root": "stimuli",
        "mos_pages": mos_pages,
        "mushra_pages": mushra_pages,
    }


def paper_layout_utterances() -> list[str]:
    return [f"utt{i:02d}" for i in range(1, 16)]
