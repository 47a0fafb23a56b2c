"""Schema-versioned JSON reports and a plain-text renderer."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

SCHEMA_VERSION = 1
VERDICTS = ("pass", "pass-with-note", "fail", "unknown")


@dataclass
class Check:
    name: str
    verdict: str
    observed: object = None
    expected: object = None
    note: str = ""
    citation: str = ""
    typo_flag: bool = False

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")

    @property
    def ok(self) -> bool:
        return self.verdict in ("pass", "pass-with-note")

    def as_dict(self):
        d = {"name": self.name, "verdict": self.verdict}
        if self.observed is not None:
            d["observed"] = self.observed
        if self.expected is not None:
            d["expected"] = self.expected
        if self.note:
            d["note"] = self.note
        if self.citation:
            d["citation"] = self.citation
        return d


def check(name, ok, observed=None, expected=None, note="", citation="", typo_flag=False) -> Check:
    if ok is None:
        verdict = "unknown"
    elif ok:
        verdict = "pass-with-note" if typo_flag else "pass"
    else:
        verdict = "fail"
    return Check(name, verdict, observed, expected, note, citation, typo_flag)


def captured(name, fn, *args, **kwargs) -> list:
    """Run a check producer; an exception becomes a single failing check."""
    try:
        out = fn(*args, **kwargs)
    except Exception as exc:  # noqa: BLE001 - sub-operation errors are captured per check
        return [Check(name, "fail", observed=f"{type(exc).__name__}: {exc}")]
    return out if isinstance(out, list) else [out]


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    started: float = field(default_factory=time.perf_counter)
    elapsed: float = 0.0

    def add(self, *checks):
        for c in checks:
            if isinstance(c, list):
                self.checks.extend(c)
            else:
                self.checks.append(c)

    def finish(self):
        self.elapsed = time.perf_counter() - self.started
        return self

    @property
    def verdict(self) -> str:
        if any(c.verdict == "fail" for c in self.checks):
            return "fail"
        if any(c.verdict == "unknown" for c in self.checks):
            return "unknown"
        return "pass"

    @property
    def flags(self) -> list:
        return [c.note for c in self.checks if c.typo_flag]

    def exit_code(self) -> int:
        return 0 if self.verdict == "pass" else 1

    def as_dict(self, timing: bool = True):
        from . import __version__
        d = {
            "schema_version": SCHEMA_VERSION,
            "engine_version": __version__,
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "summary": {v: sum(1 for c in self.checks if c.verdict == v) for v in VERDICTS},
            "paper_typo_flags": self.flags,
            "checks": [c.as_dict() for c in self.checks],
        }
        cites = sorted({c.citation for c in self.checks if c.citation})
        if cites:
            d["citations"] = cites
        if self.data:
            d["data"] = self.data
        if timing:
            d["timing"] = {"seconds": round(self.elapsed, 3)}
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing), indent=2, ensure_ascii=False, default=str)

    def render(self) -> str:
        lines = [f"{self.command}: {self.verdict.upper()}"]
        for c in self.checks:
            line = f"  {c.verdict.upper():15s} {c.name}"
            if isinstance(c.observed, dict):
                line += "  [" + ", ".join(f"{k}={v}" for k, v in c.observed.items()) + "]"
            elif c.observed is not None:
                line += f"  [{c.observed}]"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
        if self.flags:
            lines.append(f"  paper typo flags: {len(self.flags)}")
        lines.append(f"  {len(self.checks)} checks in {self.elapsed:.2f} s")
        return "\n".join(lines)
