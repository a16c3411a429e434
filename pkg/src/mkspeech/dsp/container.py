"""Spectrogram interchange formats.

Binary container (little-endian throughout)::

    offset  size  field
    0       4     magic b"SPG1"
    4       1     kind: 0 = magnitude, 1 = mel
    5       4     uint32 frame count
    9       4     uint32 column count (bins or n_mels)
    13      4     uint32 JSON parameter block length
    17      n     UTF-8 JSON parameters
    17+n    ...   float32 row-major frames x columns payload

The JSON block holds the StftParams fields and, for mel data, the mel
parameters.  A CSV fallback stores the same JSON on a ``#`` comment line
followed by one comma-separated row per frame.
"""

import json
import struct
from pathlib import Path

import numpy as np

from .mel import MelParams, MelSpectrogram
from .spectral import MagnitudeSpectrogram, StftParams

MAGIC = b"SPG1"
_KINDS = {"magnitude": 0, "mel": 1}
_KIND_NAMES = {v: k for k, v in _KINDS.items()}

Spectrogram = MagnitudeSpectrogram | MelSpectrogram


def _params_dict(spec: Spectrogram) -> dict:
    p = spec.params
    out = {
        "fft_size": p.fft_size,
        "win_size": p.win_size,
        "hop": p.hop,
        "window": p.window,
        "sample_rate": p.sample_rate,
    }
    if isinstance(spec, MelSpectrogram):
        out["mel"] = {"n_mels": spec.mel.n_mels, "fmin": spec.mel.fmin, "fmax": spec.mel.fmax}
    return out


def _from_params(kind: str, params: dict, data: np.ndarray) -> Spectrogram:
    stft_params = StftParams(
        fft_size=params["fft_size"],
        win_size=params["win_size"],
        hop=params["hop"],
        window=params["window"],
        sample_rate=params["sample_rate"],
    )
    if kind == "mel":
        mel = params["mel"]
        return MelSpectrogram(
            data=data,
            mel=MelParams(n_mels=mel["n_mels"], fmin=mel["fmin"], fmax=mel["fmax"]),
            params=stft_params,
        )
    return MagnitudeSpectrogram(data=data, params=stft_params)


def save_spectrogram(path: str | Path, spec: Spectrogram) -> None:
    kind = "mel" if isinstance(spec, MelSpectrogram) else "magnitude"
    blob = json.dumps(_params_dict(spec), sort_keys=True).encode("utf-8")
    frames, cols = spec.data.shape
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<BIII", _KINDS[kind], frames, cols, len(blob)))
        fh.write(blob)
        fh.write(spec.data.astype("<f4").tobytes())


def load_spectrogram(path: str | Path) -> Spectrogram:
    raw = Path(path).read_bytes()
    if raw[:4] != MAGIC:
        raise ValueError(f"{path}: not a spectrogram container (bad magic)")
    kind_code, frames, cols, blob_len = struct.unpack_from("<BIII", raw, 4)
    if kind_code not in _KIND_NAMES:
        raise ValueError(f"{path}: unknown spectrogram kind {kind_code}")
    offset = 4 + 13
    params = json.loads(raw[offset : offset + blob_len].decode("utf-8"))
    payload = raw[offset + blob_len :]
    expected = frames * cols * 4
    if len(payload) != expected:
        raise ValueError(f"{path}: payload is {len(payload)} bytes, expected {expected}")
    data = np.frombuffer(payload, dtype="<f4").reshape(frames, cols).astype(np.float64)
    return _from_params(_KIND_NAMES[kind_code], params, data)


def save_spectrogram_csv(path: str | Path, spec: Spectrogram) -> None:
    kind = "mel" if isinstance(spec, MelSpectrogram) else "magnitude"
    header = {"kind": kind, **_params_dict(spec)}
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# " + json.dumps(header, sort_keys=True) + "\n")
        for row in spec.data:
            fh.write(",".join(f"{v:.8g}" for v in row) + "\n")


def load_spectrogram_csv(path: str | Path) -> Spectrogram:
    with open(path, "r", encoding="utf-8") as fh:
        first = fh.readline()
        if not first.startswith("#"):
            raise ValueError(f"{path}: missing parameter header line")
        header = json.loads(first[1:].strip())
        data = np.array(
            [[float(v) for v in line.split(",")] for line in fh if line.strip()]
        )
    return _from_params(header["kind"], header, data)


def load_any_spectrogram(path: str | Path) -> Spectrogram:
    """Binary container or CSV, decided by content."""
    with open(path, "rb") as fh:
        magic = fh.read(4)
    if magic == MAGIC:
        return load_spectrogram(path)
    return load_spectrogram_csv(path)
