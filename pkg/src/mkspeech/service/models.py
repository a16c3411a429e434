"""Pydantic request/response schemas of the listening-test HTTP API."""

from typing import Literal, Optional

from pydantic import BaseModel, Field

# -- test definitions -------------------------------------------------------


class StimulusIn(BaseModel):
    condition: str
    audio: str
    stimulus_id: Optional[str] = None
    role: Literal["system", "anchor"] = "system"


class MosPageIn(BaseModel):
    page_id: str
    condition: str
    audio: str
    stimulus_id: Optional[str] = None


class MushraPageIn(BaseModel):
    page_id: str
    reference_audio: str
    stimuli: list[StimulusIn]


class TestDefinitionIn(BaseModel):
    """On-disk and over-the-wire test definition.

    Relative audio paths resolve against ``audio_root`` (itself resolved
    against the definition file's directory or the server's test dir).  The
    hidden reference copy is added automatically to every MUSHRA page under
    the reserved condition id ``reference``.
    """

    __test__ = False  # not a pytest class, despite the domain name

    test_id: str = Field(min_length=1)
    instructions: str = ""
    audio_root: Optional[str] = None
    mos_pages: list[MosPageIn] = []
    mushra_pages: list[MushraPageIn] = []


class TestCreated(BaseModel):
    test_id: str
    mos_page_count: int
    mushra_page_count: int
    already_existed: bool = False


class ValidationReport(BaseModel):
    errors: list[str]


# -- sessions ---------------------------------------------------------------


class SessionRequest(BaseModel):
    listener_name: str = Field(min_length=1)
    seed: Optional[int] = None


class SessionCreated(BaseModel):
    session_id: str
    listener_id: str
    test_id: str
    page_count: int
    instructions: str


class StimulusHandle(BaseModel):
    handle: str
    audio_url: str


class ScaleInfo(BaseModel):
    kind: Literal["mos", "mushra"]
    minimum: float
    maximum: float


class PagePayload(BaseModel):
    """One page to rate; rated stimuli stay behind opaque handles."""

    done: bool = False
    page_id: Optional[str] = None
    page_type: Optional[Literal["mos", "mushra"]] = None
    page_index: Optional[int] = None
    page_count: Optional[int] = None
    scale: Optional[ScaleInfo] = None
    stimulus: Optional[StimulusHandle] = None  # MOS
    reference: Optional[StimulusHandle] = None  # MUSHRA, explicitly labeled
    stimuli: Optional[list[StimulusHandle]] = None  # MUSHRA, shuffled


class RatingSubmission(BaseModel):
    value: Optional[int] = None  # MOS
    values: Optional[dict[str, float]] = None  # MUSHRA: handle -> score


class SubmissionAck(BaseModel):
    accepted: bool
    page_id: str
    progress: int
    page_count: int
    completed: bool
