"""Line-oriented run reports: ``key: value`` lines, then a JSON block."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

JSON_MARKER = "--- json ---"


def decimal6(x) -> str:
    return format(float(x), ".6g")


def rational_text(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator} (~{decimal6(x)})"


def _jsonable(v):
    if isinstance(v, Fraction):
        return {"exact": f"{v.numerator}/{v.denominator}", "decimal": decimal6(v)}
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    return str(v)


def _text(v) -> str:
    if isinstance(v, Fraction):
        return rational_text(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(_jsonable(v))
    return str(v)


@dataclass
class RunReport:
    command: list
    version: str
    values: dict = field(default_factory=dict)
    artifacts: dict = field(default_factory=dict)  # path -> sha256
    wall_time: float = 0.0

    def __setitem__(self, key, value):
        self.values[key] = value

    def __getitem__(self, key):
        return self.values[key]

    def as_dict(self) -> dict:
        return {"command": list(self.command), "version": self.version,
                "values": _jsonable(self.values), "artifacts": dict(self.artifacts),
                "wall_time": round(self.wall_time, 6)}

    def render(self) -> str:
        lines = [f"command: {' '.join(self.command)}", f"version: {self.version}"]
        lines += [f"{k}: {_text(v)}" for k, v in self.values.items()]
        lines += [f"artifact: {p} sha256={d}" for p, d in self.artifacts.items()]
        lines.append(f"wall_time: {self.wall_time:.3f}s")
        lines.append(JSON_MARKER)
        lines.append(json.dumps(self.as_dict(), sort_keys=True))
        return "\n".join(lines) + "\n"


def parse_report(text: str) -> dict:
    """Return the machine-readable block of a rendered report."""
    _, sep, tail = text.partition(JSON_MARKER + "\n")
    if not sep:
        raise ValueError("no JSON block in report")
    return json.loads(tail)
