"""Signal-processing core: STFT/mel analysis, Griffin-Lim inversion,
subband filterbank, spectral distances and anchor filtering."""

from .anchor import ANCHOR_CUTOFFS_HZ, lowpass_anchor
from .audio import (
    ANALYSIS_RATE,
    CORPUS_RATE,
    TARGET_RMS_DBFS,
    read_wav,
    resample,
    rms_normalize,
    write_wav,
)
from .container import (
    load_any_spectrogram,
    load_spectrogram,
    load_spectrogram_csv,
    save_spectrogram,
    save_spectrogram_csv,
)
from .distance import (
    DEFAULT_RESOLUTION_SIZES,
    MrStftDistance,
    ResolutionTerm,
    default_resolutions,
    mr_stft_distance,
)
from .griffinlim import griffin_lim, spectral_convergence
from .mel import (
    LOG_FLOOR,
    MelParams,
    MelSpectrogram,
    linear_to_mel,
    mel_filterbank,
    mel_spectrogram,
    mel_to_linear,
)
from .pqmf import FilterbankSpec, design_prototype, subband_analysis, subband_synthesis
from .spectral import MagnitudeSpectrogram, StftParams, TooShort, istft, stft

__all__ = [
    "ANALYSIS_RATE",
    "ANCHOR_CUTOFFS_HZ",
    "CORPUS_RATE",
    "DEFAULT_RESOLUTION_SIZES",
    "FilterbankSpec",
    "LOG_FLOOR",
    "MagnitudeSpectrogram",
    "MelParams",
    "MelSpectrogram",
    "MrStftDistance",
    "ResolutionTerm",
    "StftParams",
    "TARGET_RMS_DBFS",
    "TooShort",
    "default_resolutions",
    "design_prototype",
    "griffin_lim",
    "istft",
    "linear_to_mel",
    "load_any_spectrogram",
    "load_spectrogram",
    "load_spectrogram_csv",
    "lowpass_anchor",
    "mel_filterbank",
    "mel_spectrogram",
    "mel_to_linear",
    "mr_stft_distance",
    "read_wav",
    "resample",
    "rms_normalize",
    "save_spectrogram",
    "save_spectrogram_csv",
    "spectral_convergence",
    "stft",
    "subband_analysis",
    "subband_synthesis",
    "write_wav",
]
