"""Headless scripted client: completes a session over the HTTP API alone.

Works against any httpx-compatible client (a live server via
``httpx.Client(base_url=...)`` or the in-process ``fastapi.testclient``),
which keeps the end-to-end path identical either way.
"""

from typing import Callable, Protocol


class HttpClient(Protocol):
    def get(self, url: str): ...

    def post(self, url: str, json: dict): ...


#: rater(page_payload) -> int (MOS) or {handle: float} (MUSHRA)
Rater = Callable[[dict], int | dict[str, float]]


def default_rater(page: dict) -> int | dict[str, float]:
    """Neutral ratings: MOS 3, MUSHRA 50 everywhere.

    Note that rating the hidden reference 50 makes the listener fail
    ITU-style post-screening; use ``reference_matching_rater`` for sessions
    that should survive it.
    """
    if page["page_type"] == "mos":
        return 3
    return {s["handle"]: 50.0 for s in page["stimuli"]}


def reference_matching_rater(client: HttpClient) -> Rater:
    """A rater that spots the hidden reference by comparing audio bytes.

    Downloads the labeled reference and every rated stimulus through the
    public API, gives byte-identical stimuli 100 and everything else 50, so
    the scripted listener passes hidden-reference post-screening.
    """

    def rate(page: dict) -> int | dict[str, float]:
        if page["page_type"] == "mos":
            return 3
        reference_bytes = client.get(page["reference"]["audio_url"]).content
        scores = {}
        for stim in page["stimuli"]:
            body = client.get(stim["audio_url"]).content
            scores[stim["handle"]] = 100.0 if body == reference_bytes else 50.0
        return scores

    return rate


def complete_session(
    client: HttpClient,
    test_id: str,
    listener_name: str,
    seed: int | None = None,
    rater: Rater = default_rater,
    fetch_audio: bool = False,
) -> dict:
    """Start a session and rate every page until the service says done.

    Returns a summary with the session id and the number of pages rated.
    """
    response = client.post(
        f"/tests/{test_id}/sessions", json={"listener_name": listener_name, "seed": seed}
    )
    response.raise_for_status()
    session = response.json()
    session_id = session["session_id"]

    pages_rated = 0
    while True:
        response = client.get(f"/sessions/{session_id}/next")
        response.raise_for_status()
        page = response.json()
        if page["done"]:
            break
        if fetch_audio:
            urls = [s["audio_url"] for s in page.get("stimuli") or []]
            if page.get("stimulus"):
                urls.append(page["stimulus"]["audio_url"])
            if page.get("reference"):
                urls.append(page["reference"]["audio_url"])
            for url in urls:
                client.get(url).raise_for_status()
        rating = rater(page)
        body = {"value": rating} if isinstance(rating, int) else {"values": rating}
        response = client.post(
            f"/sessions/{session_id}/pages/{page['page_id']}/ratings", json=body
        )
        response.raise_for_status()
        pages_rated += 1

    return {
        "session_id": session_id,
        "listener_id": session["listener_id"],
        "pages_rated": pages_rated,
    }
