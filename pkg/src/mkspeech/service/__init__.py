"""Listening-test HTTP service: definitions, sessions, ratings, export."""

from .app import create_app
from .client import complete_session, default_rater, reference_matching_rater
from .models import (
    MosPageIn,
    MushraPageIn,
    PagePayload,
    RatingSubmission,
    SessionRequest,
    StimulusIn,
    TestDefinitionIn,
)
from .store import (
    Conflict,
    NotFound,
    SessionState,
    SubmissionError,
    TestStore,
    ValidationFailure,
    load_definition_dir,
)

__all__ = [
    "Conflict",
    "MosPageIn",
    "MushraPageIn",
    "NotFound",
    "PagePayload",
    "RatingSubmission",
    "SessionRequest",
    "SessionState",
    "StimulusIn",
    "SubmissionError",
    "TestDefinitionIn",
    "TestStore",
    "ValidationFailure",
    "complete_session",
    "create_app",
    "default_rater",
    "load_definition_dir",
    "reference_matching_rater",
]
