"""Verification reports and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from importlib import resources

from . import __version__
from .suites.catalog import ERRATA
from .suites.runner import IdentityCheck, SuiteConfig, summarize


@dataclass
class Report:
    config: dict
    checks: list
    errata: list = field(default_factory=lambda: list(ERRATA))
    version: str = __version__
    timestamp: str = ""

    @classmethod
    def build(cls, checks, config: SuiteConfig, suites=None) -> Report:
        cfg = config.as_dict()
        if suites is not None:
            cfg["suites"] = list(suites)
        stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        return cls(cfg, list(checks), timestamp=stamp)

    @property
    def summary(self) -> dict:
        return summarize(self.checks)

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "timestamp": self.timestamp,
            "config": dict(self.config),
            "checks": [c.as_dict() for c in self.checks],
            "summary": self.summary,
            "errata": list(self.errata),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        checks = [IdentityCheck.from_dict(c) for c in d["checks"]]
        rep = cls(dict(d["config"]), checks, list(d["errata"]), d["version"], d["timestamp"])
        if rep.summary != d["summary"]:
            raise ValueError("summary counts do not match the check list")
        return rep

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))


def load_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("report_schema.json").read_text())
