"""HTTP surface of the listening-test service."""

from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import FileResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from .models import (
    PagePayload,
    RatingSubmission,
    ScaleInfo,
    SessionCreated,
    SessionRequest,
    StimulusHandle,
    SubmissionAck,
    TestCreated,
    TestDefinitionIn,
)
from .store import (
    Conflict,
    NotFound,
    SessionState,
    SubmissionError,
    TestStore,
    ValidationFailure,
)


def _page_payload(state: SessionState) -> PagePayload:
    if state.completed:
        return PagePayload(done=True, page_count=len(state.page_order))
    page = state.pages[state.page_order[state.progress]]
    handles = [
        StimulusHandle(handle=h, audio_url=f"/audio/{info['audio']}")
        for h, info in sorted(page["handles"].items(), key=lambda kv: int(kv[0][1:]))
    ]
    common = dict(
        done=False,
        page_id=state.page_token(state.progress),
        page_index=state.progress,
        page_count=len(state.page_order),
    )
    if page["type"] == "mos":
        return PagePayload(
            page_type="mos",
            scale=ScaleInfo(kind="mos", minimum=1, maximum=5),
            stimulus=handles[0],
            **common,
        )
    return PagePayload(
        page_type="mushra",
        scale=ScaleInfo(kind="mushra", minimum=0, maximum=100),
        reference=StimulusHandle(
            handle="reference", audio_url=f"/audio/{page['reference_audio']}"
        ),
        stimuli=handles,
        **common,
    )


def create_app(
    store: TestStore,
    definition_dir: str | Path = ".",
    ui_dir: str | Path | None = None,
) -> FastAPI:
    """Build the service around a store.

    ``definition_dir`` anchors relative audio paths of definitions posted
    over HTTP.  ``ui_dir`` (or, by default, a ``frontend/dist`` checkout
    next to the package) is mounted at ``/ui`` when present.
    """
    app = FastAPI(title="mkspeech listening tests")

    @app.post("/tests", response_model=TestCreated, status_code=201)
    def create_test(definition: TestDefinitionIn) -> TestCreated:
        try:
            existed = True
            try:
                store.load_test(definition.test_id)
            except NotFound:
                existed = False
            resolved = store.create_test(definition, base_dir=definition_dir)
        except ValidationFailure as exc:
            raise HTTPException(status_code=400, detail={"errors": exc.errors})
        except Conflict as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        return TestCreated(
            test_id=resolved["test_id"],
            mos_page_count=len(resolved["mos_pages"]),
            mushra_page_count=len(resolved["mushra_pages"]),
            already_existed=existed,
        )

    @app.post("/tests/{test_id}/sessions", response_model=SessionCreated, status_code=201)
    def start_session(test_id: str, request: SessionRequest) -> SessionCreated:
        try:
            definition = store.load_test(test_id)
            state = store.start_session(test_id, request.listener_name, request.seed)
        except NotFound as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        return SessionCreated(
            session_id=state.session_id,
            listener_id=state.listener_id,
            test_id=test_id,
            page_count=len(state.page_order),
            instructions=definition["instructions"],
        )

    @app.get("/sessions/{session_id}/next", response_model=PagePayload)
    def next_page(session_id: str) -> PagePayload:
        try:
            state = store.load_session(session_id)
        except NotFound as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        return _page_payload(state)

    @app.post(
        "/sessions/{session_id}/pages/{page_id}/ratings",
        response_model=SubmissionAck,
        status_code=201,
    )
    def submit_rating(session_id: str, page_id: str, body: RatingSubmission) -> SubmissionAck:
        try:
            state = store.submit_rating(session_id, page_id, body.value, body.values)
        except NotFound as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except Conflict as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        except SubmissionError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return SubmissionAck(
            accepted=True,
            page_id=page_id,
            progress=state.progress,
            page_count=len(state.page_order),
            completed=state.completed,
        )

    @app.get("/tests/{test_id}/export")
    def export(test_id: str) -> PlainTextResponse:
        try:
            payload = store.export_ratings(test_id)
        except NotFound as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        return PlainTextResponse(payload, media_type="application/x-ndjson")

    @app.get("/audio/{name}")
    def audio(name: str) -> FileResponse:
        try:
            path = store.audio_path(name)
        except NotFound:
            raise HTTPException(status_code=404, detail=f"no such stimulus {name!r}")
        return FileResponse(
            path,
            media_type="audio/wav",
            headers={"cache-control": "public, max-age=31536000, immutable"},
        )

    ui_dist = (
        Path(ui_dir)
        if ui_dir is not None
        else Path(__file__).resolve().parents[3] / "frontend" / "dist"
    )
    if ui_dist.is_dir():
        app.mount("/ui", StaticFiles(directory=ui_dist, html=True), name="ui")

    return app
