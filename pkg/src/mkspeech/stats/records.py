"""Rating records and their on-disk formats (JSONL and CSV)."""

import csv
import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable

MOS_SCALE = "mos"
MUSHRA_SCALE = "mushra"

CSV_FIELDS = (
    "listener_id",
    "session_id",
    "page_id",
    "condition_id",
    "stimulus_id",
    "scale",
    "value",
)


@dataclass(frozen=True)
class RatingRecord:
    """One listener's score for one stimulus on one page."""

    listener_id: str
    session_id: str
    page_id: str
    condition_id: str
    stimulus_id: str
    scale: str
    value: float

    def __post_init__(self):
        if self.scale == MOS_SCALE:
            if self.value not in (1, 2, 3, 4, 5):
                raise ValueError(f"MOS value must be an integer 1..5, got {self.value}")
        elif self.scale == MUSHRA_SCALE:
            if not 0 <= self.value <= 100:
                raise ValueError(f"MUSHRA value must be in [0, 100], got {self.value}")
        else:
            raise ValueError(f"unknown scale {self.scale!r}")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "RatingRecord":
        return cls(
            listener_id=str(d["listener_id"]),
            session_id=str(d["session_id"]),
            page_id=str(d["page_id"]),
            condition_id=str(d["condition_id"]),
            stimulus_id=str(d["stimulus_id"]),
            scale=str(d["scale"]),
            value=float(d["value"]),
        )


def write_jsonl(path: str | Path, records: Iterable[RatingRecord]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")


def read_jsonl(path: str | Path) -> list[RatingRecord]:
    records = []
    for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            records.append(RatingRecord.from_dict(json.loads(line)))
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise ValueError(f"{path}:{lineno}: bad rating record: {exc}") from exc
    return records


def write_csv(path: str | Path, records: Iterable[RatingRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for rec in records:
            writer.writerow(asdict(rec))


def read_csv(path: str | Path) -> list[RatingRecord]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        missing = set(CSV_FIELDS) - set(reader.fieldnames or ())
        if missing:
            raise ValueError(f"{path}: missing columns {sorted(missing)}")
        return [RatingRecord.from_dict(row) for row in reader]


def read_records(path: str | Path) -> list[RatingRecord]:
    """JSONL or CSV, decided by the first line."""
    with open(path, "r", encoding="utf-8") as fh:
        first = fh.readline().lstrip()
    if first.startswith("{"):
        return read_jsonl(path)
    return read_csv(path)
