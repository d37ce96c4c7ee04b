"""Directory-backed scenario store with optimistic concurrency.

Each scenario lives in one JSON file holding the document plus a
revision counter. Writers must present the revision they read; a stale
revision is rejected so concurrent editors cannot silently clobber each
other.
"""

from __future__ import annotations

import json
import os
import re
import threading
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError, RevisionConflict, ScenarioNotFound

_SCENARIO_ID_RE = re.compile(r"^[A-Za-z0-9_-]+$")


@dataclass(frozen=True)
class StoredScenario:
    scenario_id: str
    revision: int
    document: dict


class ScenarioStore:
    def __init__(self, root: str | os.PathLike[str]):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def _path(self, scenario_id: str) -> Path:
        if not _SCENARIO_ID_RE.match(scenario_id):
            raise ParseError(
                f"invalid scenario id {scenario_id!r}; "
                "expected letters, digits, underscore, or hyphen"
            )
        return self.root / f"{scenario_id}.json"

    def list_ids(self) -> list[str]:
        return sorted(p.stem for p in self.root.glob("*.json"))

    def get(self, scenario_id: str) -> StoredScenario:
        path = self._path(scenario_id)
        with self._lock:
            if not path.exists():
                raise ScenarioNotFound(f"no stored scenario {scenario_id!r}")
            raw = json.loads(path.read_text())
        return StoredScenario(
            scenario_id=scenario_id,
            revision=raw["revision"],
            document=raw["scenario"],
        )

    def put(
        self, scenario_id: str, document: dict, expected_revision: int | None
    ) -> StoredScenario:
        """Create (expected_revision None) or update (must match current)."""
        path = self._path(scenario_id)
        with self._lock:
            if path.exists():
                current = json.loads(path.read_text())["revision"]
                if expected_revision is None or expected_revision != current:
                    raise RevisionConflict(
                        f"scenario {scenario_id!r} is at revision {current}; "
                        f"got expected_revision {expected_revision}"
                    )
                revision = current + 1
            else:
                if expected_revision is not None:
                    raise RevisionConflict(
                        f"scenario {scenario_id!r} does not exist yet; "
                        "omit expected_revision to create it"
                    )
                revision = 1
            payload = {"revision": revision, "scenario": document}
            tmp = path.with_suffix(".json.tmp")
            tmp.write_text(json.dumps(payload, indent=2) + "\n")
            os.replace(tmp, path)
        return StoredScenario(scenario_id=scenario_id, revision=revision, document=document)
