"""Core data model: projects, snapshots, clone links, and detection reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

LANG_C = "C"
LANG_CPP = "C++"
LANG_JAVA = "Java"

DEFAULT_EXTENSION_MAP = {
    ".c": LANG_C,
    ".h": LANG_C,
    ".cc": LANG_CPP,
    ".cpp": LANG_CPP,
    ".cxx": LANG_CPP,
    ".hpp": LANG_CPP,
    ".hh": LANG_CPP,
    ".java": LANG_JAVA,
}

IDENTICAL = "identical"
SIMILAR = "similar"

REPORT_SCHEMA_VERSION = 1


class SupplyMapError(Exception):
    """Base class for all errors raised by this package."""


class ManifestError(SupplyMapError):
    """Corpus manifest is unreadable or violates its invariants."""


class RepositoryError(SupplyMapError):
    """A repository could not be read; fatal for that project only."""


class BlobNotFoundError(SupplyMapError):
    """A (snapshot, path) pair does not resolve to file content."""


class PlanError(SupplyMapError):
    """An ecosystem plan is internally inconsistent."""


class SchemaError(SupplyMapError):
    """A serialized artifact does not match its expected schema."""


class ExportFormatError(SupplyMapError):
    """Unknown export format identifier."""


@dataclass(frozen=True)
class Project:
    id: str
    name: str
    repo_path: str


@dataclass(frozen=True, order=True)
class SnapshotRef:
    """Identity of one tagged snapshot: enough to name it across artifacts."""

    project_id: str
    commit_time: int
    tag: str


@dataclass(frozen=True)
class FileRecord:
    path: str
    digest: str
    language: str
    fingerprint_id: int
    token_count: int


@dataclass(frozen=True)
class Snapshot:
    project_id: str
    tag: str
    commit_time: int
    commit_id: str
    files: tuple[FileRecord, ...]

    @property
    def ref(self) -> SnapshotRef:
        return SnapshotRef(self.project_id, self.commit_time, self.tag)


@dataclass(frozen=True)
class FileCorrespondence:
    dest_path: str
    origin_path: str
    kind: str  # IDENTICAL or SIMILAR
    similarity: float
    dest_digest: str
    origin_digest: str


@dataclass(frozen=True)
class CandidateOrigin:
    """One (producer, origin snapshot) proposal for a query snapshot."""

    producer_id: str
    origin: SnapshotRef
    dest: SnapshotRef
    correspondences: tuple[FileCorrespondence, ...]

    @property
    def n_files(self) -> int:
        return len(self.correspondences)

    @property
    def n_identical(self) -> int:
        return sum(1 for c in self.correspondences if c.kind == IDENTICAL)


@dataclass(frozen=True)
class CloneLink:
    producer_id: str
    origin: SnapshotRef
    consumer_id: str
    dest: SnapshotRef
    correspondences: tuple[FileCorrespondence, ...]

    @property
    def link_time(self) -> int:
        return self.dest.commit_time

    @property
    def key(self) -> tuple[str, str, str, str]:
        return (self.producer_id, self.origin.tag, self.consumer_id, self.dest.tag)


@dataclass
class DetectionConfig:
    similarity_threshold: float = 0.8
    min_files: int = 20
    extension_map: dict[str, str] = field(
        default_factory=lambda: dict(DEFAULT_EXTENSION_MAP)
    )
    trigram_set_semantics: bool = False
    tie_break: str = "producer-tag"

    def __post_init__(self) -> None:
        if not 0 < self.similarity_threshold <= 1:
            raise ValueError(
                f"similarity_threshold must be in (0, 1], got {self.similarity_threshold}"
            )
        if self.min_files < 1:
            raise ValueError(f"min_files must be >= 1, got {self.min_files}")


@dataclass(frozen=True)
class StepCounts:
    step: int
    n_projects: int
    n_links: int | None
    n_files: int | None
    n_files_unique: int | None


@dataclass
class DetectionReport:
    config: DetectionConfig
    project_ids: list[str]
    stepwise: list[StepCounts]
    links: list[CloneLink]


def link_sort_key(link: CloneLink) -> tuple:
    return (
        link.consumer_id,
        link.dest.commit_time,
        link.dest.tag,
        link.producer_id,
        link.origin.commit_time,
        link.origin.tag,
    )


def correspondence_to_dict(c: FileCorrespondence) -> dict:
    return {
        "dest_path": c.dest_path,
        "origin_path": c.origin_path,
        "kind": c.kind,
        "similarity": c.similarity,
        "dest_digest": c.dest_digest,
        "origin_digest": c.origin_digest,
    }


def correspondence_from_dict(d: dict) -> FileCorrespondence:
    return FileCorrespondence(
        dest_path=d["dest_path"],
        origin_path=d["origin_path"],
        kind=d["kind"],
        similarity=float(d["similarity"]),
        dest_digest=d.get("dest_digest", ""),
        origin_digest=d.get("origin_digest", ""),
    )


def link_to_dict(link: CloneLink) -> dict:
    return {
        "producer": link.producer_id,
        "origin_tag": link.origin.tag,
        "origin_time": link.origin.commit_time,
        "consumer": link.consumer_id,
        "dest_tag": link.dest.tag,
        "dest_time": link.dest.commit_time,
        "files": [
            correspondence_to_dict(c)
            for c in sorted(link.correspondences, key=lambda c: c.dest_path)
        ],
    }


def link_from_dict(d: dict) -> CloneLink:
    return CloneLink(
        producer_id=d["producer"],
        origin=SnapshotRef(d["producer"], int(d["origin_time"]), d["origin_tag"]),
        consumer_id=d["consumer"],
        dest=SnapshotRef(d["consumer"], int(d["dest_time"]), d["dest_tag"]),
        correspondences=tuple(correspondence_from_dict(f) for f in d["files"]),
    )


def report_to_dict(report: DetectionReport) -> dict:
    cfg = report.config
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "config": {
            "similarity_threshold": cfg.similarity_threshold,
            "min_files": cfg.min_files,
            "extension_map": dict(sorted(cfg.extension_map.items())),
            "trigram_set_semantics": cfg.trigram_set_semantics,
            "tie_break": cfg.tie_break,
            "projects": sorted(report.project_ids),
        },
        "stepwise": [
            {
                "step": row.step,
                "n_projects": row.n_projects,
                "n_links": row.n_links,
                "n_files": row.n_files,
                "n_files_unique": row.n_files_unique,
            }
            for row in report.stepwise
        ],
        "links": [link_to_dict(l) for l in sorted(report.links, key=link_sort_key)],
    }


def report_to_json(report: DetectionReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def report_from_dict(data: dict) -> DetectionReport:
    try:
        cfg_d = data["config"]
        config = DetectionConfig(
            similarity_threshold=cfg_d["similarity_threshold"],
            min_files=cfg_d["min_files"],
            extension_map=dict(cfg_d.get("extension_map", DEFAULT_EXTENSION_MAP)),
            trigram_set_semantics=cfg_d.get("trigram_set_semantics", False),
            tie_break=cfg_d.get("tie_break", "producer-tag"),
        )
        stepwise = [
            StepCounts(
                step=row["step"],
                n_projects=row["n_projects"],
                n_links=row["n_links"],
                n_files=row["n_files"],
                n_files_unique=row["n_files_unique"],
            )
            for row in data["stepwise"]
        ]
        links = [link_from_dict(l) for l in data["links"]]
        projects = list(cfg_d.get("projects", []))
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed detection report: {exc}") from exc
    return DetectionReport(
        config=config, project_ids=projects, stepwise=stepwise, links=links
    )


def report_from_json(text: str) -> DetectionReport:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"detection report is not valid JSON: {exc}") from exc
    return report_from_dict(data)


def with_correspondences(
    link: CloneLink, kept: tuple[FileCorrespondence, ...]
) -> CloneLink:
    return replace(link, correspondences=kept)
