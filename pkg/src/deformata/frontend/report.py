"""Machine-readable command reports (JSON schema version 1)."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

SCHEMA = 1
EXIT = {"pass": 0, "fail": 1, "error": 2, "inconclusive": 3}


def digest(inputs):
    blob = json.dumps(inputs, sort_keys=True, ensure_ascii=False).encode("utf-8")
    return "sha256:" + hashlib.sha256(blob).hexdigest()


def jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if v is None or isinstance(v, (bool, int, float, str)):
        return v
    return str(v)


@dataclass
class Report:
    command: str
    inputs: dict
    status: str = "pass"
    findings: list = field(default_factory=list)
    result: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)  # human-readable summary
    timing: float = 0.0

    def finding(self, kind, message, witness=None, failed=True):
        self.findings.append({"kind": kind, "message": message,
                              "witness": jsonable(witness) if witness is not None else None})
        if failed and self.status == "pass":
            self.status = "fail"

    def say(self, line):
        self.lines.append(line)

    @property
    def exit_code(self):
        return EXIT[self.status]

    def as_dict(self, timing=True):
        out = {
            "schema": SCHEMA,
            "command": self.command,
            "inputs": digest(self.inputs),
            "status": self.status,
            "bounds": jsonable(self.bounds),
            "findings": self.findings,
            "result": jsonable(self.result),
        }
        if timing:
            out["timing"] = round(self.timing, 6)
        return out

    def to_json(self, timing=True):
        return json.dumps(self.as_dict(timing), indent=2, sort_keys=True, ensure_ascii=False)

    def to_text(self):
        out = list(self.lines)
        for f in self.findings:
            w = f" [{json.dumps(f['witness'], ensure_ascii=False)}]" if f["witness"] else ""
            out.append(f"{f['kind']}: {f['message']}{w}")
        out.append(f"status: {self.status}")
        return "\n".join(out)
