"""Suite configuration: defaults, validation, and the flat key = value file
format consumed by the `verify` subcommand.  Rational parameters cross this
boundary as exact strings ("3", "5/2"); nothing is ever parsed through a
float."""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path

from .classes import ClassSpec, Kind
from .errors import ConfigError
from .series import as_fraction

_KINDS = ("all", "starlike", "convex", "noshiro", "meromorphic")
_FORMATS = ("json", "csv", "text")
_MUTATIONS = ("", "starlike-inverse")


@dataclass
class SuiteConfig:
    kind: str = "all"
    A: Fraction = field(default_factory=lambda: Fraction(3))
    B: Fraction = field(default_factory=lambda: Fraction(1))
    N: int = 20
    j_max: int = 3
    a_step: Fraction = field(default_factory=lambda: Fraction(1, 5))
    a_max: Fraction = field(default_factory=lambda: Fraction(4, 5))
    t_max: int = 3
    n_max: int = 10
    identity_samples: int = 1000
    seed: int = 0
    exact_only: bool = False
    unproven: bool = False
    mutate: str = ""
    format: str = "json"
    output: str = "report.json"

    def validate(self) -> "SuiteConfig":
        if self.kind not in _KINDS:
            raise ConfigError(f"kind must be one of {_KINDS}, got {self.kind!r}")
        if self.format not in _FORMATS:
            raise ConfigError(f"format must be one of {_FORMATS}, got {self.format!r}")
        if self.mutate not in _MUTATIONS:
            raise ConfigError(f"mutate must be one of {_MUTATIONS}, got {self.mutate!r}")
        if self.N < 0:
            raise ConfigError(f"N must be >= 0, got {self.N}")
        for name in ("j_max", "t_max", "n_max", "identity_samples"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1")
        if not 0 < self.a_step <= 1 or not 0 <= self.a_max < 1:
            raise ConfigError("need 0 < a_step <= 1 and 0 <= a_max < 1")
        if self.kind != "all":
            spec = ClassSpec(Kind(self.kind), self.A, self.B)
            if spec.regime() == "invalid":
                raise ConfigError(
                    f"({self.kind}, A={self.A}, B={self.B}) fits no parameter regime"
                )
        return self

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            out[f.name] = str(value) if isinstance(value, Fraction) else value
        return out


_INT_KEYS = {"N", "j_max", "t_max", "n_max", "identity_samples", "seed"}
_FRACTION_KEYS = {"A", "B", "a_step", "a_max"}
_BOOL_KEYS = {"exact_only", "unproven"}
_STR_KEYS = {"kind", "mutate", "format", "output"}
_ALL_KEYS = _INT_KEYS | _FRACTION_KEYS | _BOOL_KEYS | _STR_KEYS


def parse_suite_config(text: str, source: str = "<config>") -> SuiteConfig:
    """Parse the flat key = value format.  Unknown keys are rejected, '#'
    starts a comment, blank lines are ignored."""
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, rhs = line.partition("=")
        key = key.strip()
        rhs = rhs.strip()
        if key not in _ALL_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        try:
            if key in _INT_KEYS:
                values[key] = int(rhs)
            elif key in _FRACTION_KEYS:
                values[key] = as_fraction(rhs)
            elif key in _BOOL_KEYS:
                if rhs not in ("true", "false"):
                    raise ValueError("expected true or false")
                values[key] = rhs == "true"
            else:
                values[key] = rhs
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ConfigError(f"{source}:{lineno}: bad value for {key!r}: {exc}") from exc
    try:
        return SuiteConfig(**values).validate()
    except ConfigError as exc:
        raise ConfigError(f"{source}: {exc}") from exc


def load_suite_config(path: str | Path) -> SuiteConfig:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {p}: {exc}") from exc
    return parse_suite_config(text, source=str(p))
