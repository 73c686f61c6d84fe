"""Report assembly and canonical JSON emission.

Reports are deterministic for a fixed input, version and flags: the
comparable payload carries no timestamps, and timing (plus cache counters)
lives in a segregated block that golden comparisons drop.
"""

from __future__ import annotations

import hashlib
import json
from typing import Optional

from . import __version__


def digest_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def digest_params(params: dict) -> str:
    return digest_bytes(json.dumps(params, sort_keys=True).encode("utf-8"))


def make_report(command: str, input_digest: str, components=None,
                expectations=None, timing: Optional[dict] = None) -> dict:
    return {
        "version": __version__,
        "input_digest": input_digest,
        "command": command,
        "components": components or [],
        "expectations": expectations or [],
        "timing": timing or {},
    }


def expectations_payload(expectations) -> list:
    return [{"name": e.name, "status": e.status, "measured": e.measured,
             "provenance": e.provenance} for e in expectations]


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def comparable(report: dict) -> dict:
    out = dict(report)
    out.pop("timing", None)
    return out
