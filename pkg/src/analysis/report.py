"""
Report objects emitted by the CLI commands.

The JSON shape is documented in docs/report_schema.md.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

SCHEMA_VERSION = 1


@dataclass
class Report:
    """
    Attributes:
        command: subcommand name (analyze, lie, lien, reproduce)
        arguments: the command's inputs as given
        verdicts: booleans, orders, factor lists and branches
        witnesses: complement or section generators in 1-indexed cycle notation
        timing: wall-clock seconds per phase
    """
    command: str
    arguments: Dict[str, Any] = field(default_factory=dict)
    verdicts: Dict[str, Any] = field(default_factory=dict)
    witnesses: Dict[str, List[str]] = field(default_factory=dict)
    timing: Dict[str, float] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> Report:
        return cls(
            command=data["command"],
            arguments=dict(data.get("arguments", {})),
            verdicts=dict(data.get("verdicts", {})),
            witnesses={k: list(v) for k, v in data.get("witnesses", {}).items()},
            timing={k: float(v) for k, v in data.get("timing", {}).items()},
            schema_version=int(data.get("schema_version", SCHEMA_VERSION)),
        )

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def save(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json(), encoding="utf-8")
        return path

    def render(self) -> str:
        """Human-readable rendering: one aligned line per verdict."""
        lines = [f"== {self.command} " + " ".join(f"{k}={v}" for k, v in self.arguments.items())]
        width = max((len(k) for k in self.verdicts), default=0)
        for key, value in self.verdicts.items():
            lines.append(f"  {key.ljust(width)} : {_render_value(value)}")
        for key, gens in self.witnesses.items():
            lines.append(f"  witness {key}:")
            lines.extend(f"    {g}" for g in gens)
        if self.timing:
            lines.append("  time: " + ", ".join(f"{k} {v:.2f}s" for k, v in self.timing.items()))
        return "\n".join(lines)


def _render_value(value: Any) -> str:
    if isinstance(value, list):
        if value and isinstance(value[0], dict):
            return "\n" + "\n".join(f"      {json.dumps(v, sort_keys=True)}" for v in value)
        return ", ".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return str(value)
