"""Macedonian TTS tooling: front-end, corpus selection, vocoder DSP and
listening-test evaluation."""

__version__ = "0.1.0"
