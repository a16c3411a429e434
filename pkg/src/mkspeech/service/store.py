"""Persistent state of the listening-test service.

Layout under ``data_dir``::

    audio/{hash}.wav                 normalized stimuli, immutable
    tests/{id}/definition.json       resolved definition + content digest
    tests/{id}/ratings.ndjson        append-only rating log (the export)
    tests/{id}/sessions/{sid}.json   session snapshots, rewritten per change

Ratings are the source of truth; session snapshots exist so progress and
duplicate detection survive restarts.  A process-wide lock serializes
mutations (the request handlers run in a thread pool).
"""

import hashlib
import json
import random
import secrets
import threading
from dataclasses import dataclass, field
from pathlib import Path

from ..dsp.audio import read_wav, rms_normalize, write_wav
from ..stats.records import MOS_SCALE, MUSHRA_SCALE, RatingRecord
from .models import TestDefinitionIn

REFERENCE_CONDITION = "reference"


class ValidationFailure(ValueError):
    """Definition problems; ``errors`` lists every one found."""

    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = errors


class Conflict(ValueError):
    """Duplicate submission, out-of-order page, or redefined test."""


class NotFound(KeyError):
    pass


class SubmissionError(ValueError):
    """Malformed rating payload (missing handle, out-of-range value)."""


@dataclass
class SessionState:
    session_id: str
    test_id: str
    listener_id: str
    listener_name: str
    seed: int
    page_order: list[str]
    pages: dict  # page_id -> {type, handles: {h: {condition, stimulus_id, audio}}, ...}
    progress: int = 0
    rated_pages: list[str] = field(default_factory=list)

    @property
    def completed(self) -> bool:
        return self.progress >= len(self.page_order)

    def page_token(self, index: int) -> str:
        """Opaque client-facing page id; experimenter page ids never leave
        the server (they may encode condition names)."""
        return f"p{index + 1:03d}"

    def to_json(self) -> dict:
        return {
            "session_id": self.session_id,
            "test_id": self.test_id,
            "listener_id": self.listener_id,
            "listener_name": self.listener_name,
            "seed": self.seed,
            "page_order": self.page_order,
            "pages": self.pages,
            "progress": self.progress,
            "rated_pages": self.rated_pages,
        }

    @classmethod
    def from_json(cls, d: dict) -> "SessionState":
        return cls(**d)


def _canonical_digest(payload: dict) -> str:
    return hashlib.sha256(
        json.dumps(payload, sort_keys=True, ensure_ascii=False).encode("utf-8")
    ).hexdigest()


class TestStore:
    __test__ = False  # not a pytest class, despite the domain name

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        (self.data_dir / "audio").mkdir(parents=True, exist_ok=True)
        (self.data_dir / "tests").mkdir(parents=True, exist_ok=True)
        self._lock = threading.RLock()

    # -- audio ---------------------------------------------------------------

    def audio_path(self, name: str) -> Path:
        path = (self.data_dir / "audio" / name).resolve()
        if path.parent != (self.data_dir / "audio").resolve() or path.suffix != ".wav":
            raise NotFound(name)
        if not path.exists():
            raise NotFound(name)
        return path

    def _store_audio(self, source: Path, salt: str = "") -> str:
        """Normalize to the target RMS and store under a content hash.

        ``salt`` goes into the hash so a hidden reference copy gets a path
        distinct from the labeled reference (URL equality would unblind it).
        """
        signal, rate = read_wav(source)
        normalized = rms_normalize(signal)
        tmp = self.data_dir / "audio" / f".tmp-{secrets.token_hex(8)}.wav"
        write_wav(tmp, normalized, rate)
        payload = tmp.read_bytes()
        digest = hashlib.sha256(payload + salt.encode("utf-8")).hexdigest()[:24]
        final = self.data_dir / "audio" / f"{digest}.wav"
        if final.exists():
            tmp.unlink()
        else:
            tmp.rename(final)
        return f"{digest}.wav"

    # -- test creation -------------------------------------------------------

    def _resolve_audio(self, base: Path, definition: TestDefinitionIn, rel: str) -> Path:
        root = Path(definition.audio_root) if definition.audio_root else Path(".")
        if not root.is_absolute():
            root = base / root
        path = Path(rel)
        return path if path.is_absolute() else root / path

    def create_test(self, definition: TestDefinitionIn, base_dir: str | Path = ".") -> dict:
        """Validate, normalize stimuli and persist the test immutably.

        Returns the resolved definition dict.  Re-creating a test with
        identical content is a no-op; redefining it with different content
        raises Conflict.
        """
        base = Path(base_dir)
        errors: list[str] = []

        if not definition.mos_pages and not definition.mushra_pages:
            errors.append("definition has no pages")
        seen_pages: set[str] = set()
        for page in list(definition.mos_pages) + list(definition.mushra_pages):
            if page.page_id in seen_pages:
                errors.append(f"duplicate page id {page.page_id!r}")
            seen_pages.add(page.page_id)

        audio_paths: dict[str, Path] = {}

        def check_audio(rel: str) -> None:
            path = self._resolve_audio(base, definition, rel)
            if not path.exists():
                errors.append(f"missing audio file: {path}")
            else:
                audio_paths[rel] = path

        for page in definition.mos_pages:
            check_audio(page.audio)
        for page in definition.mushra_pages:
            check_audio(page.reference_audio)
            systems = [s for s in page.stimuli if s.role == "system"]
            anchors = [s for s in page.stimuli if s.role == "anchor"]
            if not systems:
                errors.append(f"page {page.page_id}: no systems under test")
            if not anchors:
                errors.append(f"page {page.page_id}: no anchor stimulus")
            conditions = [s.condition for s in page.stimuli]
            if len(set(conditions)) != len(conditions):
                errors.append(f"page {page.page_id}: duplicate condition ids")
            if REFERENCE_CONDITION in conditions:
                errors.append(
                    f"page {page.page_id}: condition id {REFERENCE_CONDITION!r} is reserved"
                    " for the hidden reference"
                )
            for s in page.stimuli:
                check_audio(s.audio)
        if errors:
            raise ValidationFailure(errors)

        hashes = {rel: self._store_audio(path) for rel, path in audio_paths.items()}

        resolved: dict = {
            "test_id": definition.test_id,
            "instructions": definition.instructions,
            "mos_pages": [],
            "mushra_pages": [],
        }
        for page in definition.mos_pages:
            resolved["mos_pages"].append(
                {
                    "page_id": page.page_id,
                    "condition": page.condition,
                    "stimulus_id": page.stimulus_id or Path(page.audio).stem,
                    "audio": hashes[page.audio],
                }
            )
        for page in definition.mushra_pages:
            rated = [
                {
                    "condition": s.condition,
                    "stimulus_id": s.stimulus_id or Path(s.audio).stem,
                    "audio": hashes[s.audio],
                    "role": s.role,
                }
                for s in page.stimuli
            ]
            hidden = self._store_audio(audio_paths[page.reference_audio], salt=page.page_id)
            rated.append(
                {
                    "condition": REFERENCE_CONDITION,
                    "stimulus_id": Path(page.reference_audio).stem,
                    "audio": hidden,
                    "role": "hidden_reference",
                }
            )
            resolved["mushra_pages"].append(
                {
                    "page_id": page.page_id,
                    "reference_audio": hashes[page.reference_audio],
                    "stimuli": rated,
                }
            )
        resolved["digest"] = _canonical_digest(
            {k: v for k, v in resolved.items() if k != "digest"}
        )

        with self._lock:
            test_dir = self.data_dir / "tests" / definition.test_id
            def_path = test_dir / "definition.json"
            if def_path.exists():
                existing = json.loads(def_path.read_text("utf-8"))
                if existing["digest"] != resolved["digest"]:
                    raise Conflict(
                        f"test {definition.test_id!r} already exists with different content"
                    )
                return existing
            (test_dir / "sessions").mkdir(parents=True, exist_ok=True)
            def_path.write_text(
                json.dumps(resolved, indent=2, sort_keys=True, ensure_ascii=False), "utf-8"
            )
            (test_dir / "ratings.ndjson").touch()
        return resolved

    def load_test(self, test_id: str) -> dict:
        path = self.data_dir / "tests" / test_id / "definition.json"
        if not path.exists():
            raise NotFound(f"unknown test {test_id!r}")
        return json.loads(path.read_text("utf-8"))

    # -- sessions ------------------------------------------------------------

    def start_session(
        self, test_id: str, listener_name: str, seed: int | None = None
    ) -> SessionState:
        """Fresh session with seeded page and stimulus shuffles.

        MOS pages come first, then the MUSHRA block; each block and every
        MUSHRA page's handle order is an independent draw of the session RNG.
        """
        definition = self.load_test(test_id)
        if seed is None:
            seed = secrets.randbits(32)
        rng = random.Random(seed)
        session_id = secrets.token_hex(8)
        listener_id = f"listener-{secrets.token_hex(4)}"

        mos_ids = [p["page_id"] for p in definition["mos_pages"]]
        mushra_ids = [p["page_id"] for p in definition["mushra_pages"]]
        rng.shuffle(mos_ids)
        rng.shuffle(mushra_ids)

        pages: dict = {}
        for page in definition["mos_pages"]:
            pages[page["page_id"]] = {
                "type": MOS_SCALE,
                "handles": {
                    "h1": {
                        "condition": page["condition"],
                        "stimulus_id": page["stimulus_id"],
                        "audio": page["audio"],
                    }
                },
            }
        for page in definition["mushra_pages"]:
            rated = list(page["stimuli"])
            rng.shuffle(rated)
            pages[page["page_id"]] = {
                "type": MUSHRA_SCALE,
                "reference_audio": page["reference_audio"],
                "handles": {
                    f"h{i + 1}": {
                        "condition": s["condition"],
                        "stimulus_id": s["stimulus_id"],
                        "audio": s["audio"],
                    }
                    for i, s in enumerate(rated)
                },
            }

        state = SessionState(
            session_id=session_id,
            test_id=test_id,
            listener_id=listener_id,
            listener_name=listener_name,
            seed=seed,
            page_order=mos_ids + mushra_ids,
            pages=pages,
        )
        with self._lock:
            self._write_session(state)
        return state

    def _session_path(self, session_id: str) -> Path | None:
        for test_dir in (self.data_dir / "tests").iterdir():
            path = test_dir / "sessions" / f"{session_id}.json"
            if path.exists():
                return path
        return None

    def _write_session(self, state: SessionState) -> None:
        path = (
            self.data_dir / "tests" / state.test_id / "sessions" / f"{state.session_id}.json"
        )
        path.write_text(json.dumps(state.to_json(), sort_keys=True), "utf-8")

    def load_session(self, session_id: str) -> SessionState:
        path = self._session_path(session_id)
        if path is None:
            raise NotFound(f"unknown session {session_id!r}")
        return SessionState.from_json(json.loads(path.read_text("utf-8")))

    # -- ratings -------------------------------------------------------------

    def submit_rating(
        self,
        session_id: str,
        page_token: str,
        value: int | None = None,
        values: dict[str, float] | None = None,
    ) -> SessionState:
        """Validate a submission, map handles to conditions, append records.

        ``page_token`` is the opaque id served by next_page.  The
        idempotency key is (session, page): a page can be rated once and
        only in session order, so a stale or repeated token conflicts.
        """
        with self._lock:
            state = self.load_session(session_id)
            if state.completed:
                raise Conflict("session already completed")
            rated_tokens = {state.page_token(i) for i in range(state.progress)}
            if page_token in rated_tokens:
                raise Conflict(f"page {page_token!r} already rated")
            expected = state.page_token(state.progress)
            if page_token != expected:
                raise Conflict(f"page {page_token!r} is not the current page ({expected!r})")
            page_id = state.page_order[state.progress]
            page = state.pages[page_id]

            records: list[RatingRecord] = []
            if page["type"] == MOS_SCALE:
                if value is None:
                    raise SubmissionError("MOS submission needs a value")
                if not isinstance(value, int) or not 1 <= value <= 5:
                    raise SubmissionError(f"MOS value must be an integer 1..5, got {value!r}")
                info = page["handles"]["h1"]
                records.append(
                    RatingRecord(
                        listener_id=state.listener_id,
                        session_id=state.session_id,
                        page_id=page_id,
                        condition_id=info["condition"],
                        stimulus_id=info["stimulus_id"],
                        scale=MOS_SCALE,
                        value=float(value),
                    )
                )
            else:
                if values is None:
                    raise SubmissionError("MUSHRA submission needs per-handle values")
                expected = set(page["handles"])
                got = set(values)
                if got != expected:
                    missing = sorted(expected - got)
                    extra = sorted(got - expected)
                    parts = []
                    if missing:
                        parts.append(f"missing handles: {', '.join(missing)}")
                    if extra:
                        parts.append(f"unknown handles: {', '.join(extra)}")
                    raise SubmissionError("; ".join(parts))
                for handle, score in values.items():
                    if not 0 <= score <= 100:
                        raise SubmissionError(
                            f"MUSHRA value for {handle} must be in [0, 100], got {score}"
                        )
                for handle in sorted(values):
                    info = page["handles"][handle]
                    records.append(
                        RatingRecord(
                            listener_id=state.listener_id,
                            session_id=state.session_id,
                            page_id=page_id,
                            condition_id=info["condition"],
                            stimulus_id=info["stimulus_id"],
                            scale=MUSHRA_SCALE,
                            value=float(values[handle]),
                        )
                    )

            log = self.data_dir / "tests" / state.test_id / "ratings.ndjson"
            with open(log, "a", encoding="utf-8") as fh:
                for rec in records:
                    fh.write(rec.to_json() + "\n")
            state.rated_pages.append(page_id)
            state.progress += 1
            self._write_session(state)
            return state

    def export_ratings(self, test_id: str) -> str:
        """The raw append log; byte-identical until new submissions land."""
        self.load_test(test_id)
        log = self.data_dir / "tests" / test_id / "ratings.ndjson"
        return log.read_text("utf-8")


def load_definition_dir(store: TestStore, directory: str | Path) -> list[str]:
    """Create every ``*.json`` test definition found in ``directory``.

    Relative audio paths resolve against the directory.  Returns the ids of
    the tests now present (idempotent across restarts).
    """
    directory = Path(directory)
    loaded = []
    for path in sorted(directory.glob("*.json")):
        definition = TestDefinitionIn.model_validate_json(path.read_text("utf-8"))
        store.create_test(definition, base_dir=directory)
        loaded.append(definition.test_id)
    return loaded
