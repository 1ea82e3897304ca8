"""Experiment configuration: one dataclass, loaded from YAML or JSON text."""
from __future__ import annotations

import dataclasses
import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

import yaml

from ..errors import InvalidInput
from ..outerspace.graph import format_fraction, parse_fraction

SCHEMA = {
    "rank": "int, 2 or 3",
    "eps": "rational 'p/q', thick-part bound",
    "depth": "int m, laminations are phi^m(seed), phi^-m(seed)",
    "grid": "[start, stop, step] rationals",
    "B": "rational > 1, contracting constant under test",
    "samples": "int, sample trees for contraction tests",
    "morse_K": "number >= 1",
    "morse_budget": "int, certified chains",
    "schottky_k": "int > 0",
    "schottky_L": "int, freeness word length",
    "orbit_L": "int, orbit word length",
    "seed": "int, root RNG seed",
    "catalog": "name of the catalog automorphism for the axis",
    "psi": "name of the second Schottky generator",
    "thresholds": "dict of acceptance thresholds",
}

DEFAULT_THRESHOLDS = {
    "kappa_stability": 0.10,
    "morse_drift": 0.10,
    "fills_fraction": 0.90,
    "contraction_violations": 0,
}


@dataclass(frozen=True)
class ExperimentConfig:
    rank: int = 2
    eps: Fraction = Fraction(1, 20)
    depth: int = 8
    grid: tuple = (Fraction(-4), Fraction(4), Fraction(1, 2))
    B: Fraction = Fraction(20)
    samples: int = 200
    morse_K: float = 2.0
    morse_budget: int = 100
    schottky_k: int = 4
    schottky_L: int = 6
    orbit_L: int = 4
    seed: int = 0
    catalog: str = "golden"
    psi: str = "golden-conj"
    thresholds: dict = field(default_factory=lambda: dict(DEFAULT_THRESHOLDS))

    def __post_init__(self):
        object.__setattr__(self, "eps", parse_fraction(self.eps))
        object.__setattr__(self, "B", parse_fraction(self.B))
        if len(self.grid) != 3:
            raise InvalidInput("grid must be [start, stop, step]")
        object.__setattr__(self, "grid", tuple(parse_fraction(q) for q in self.grid))
        if self.rank not in (2, 3):
            raise InvalidInput("rank must be 2 or 3")
        if self.eps <= 0 or self.grid[2] <= 0 or self.grid[0] > self.grid[1]:
            raise InvalidInput("eps and the grid step must be positive, start <= stop")
        if self.B <= 1:
            raise InvalidInput("B must exceed 1")
        th = dict(DEFAULT_THRESHOLDS)
        th.update(self.thresholds or {})
        object.__setattr__(self, "thresholds", th)

    def to_dict(self):
        out = {}
        for f in dataclasses.fields(self):
            v = getattr(self, f.name)
            if isinstance(v, Fraction):
                v = format_fraction(v)
            elif f.name == "grid":
                v = [format_fraction(q) for q in v]
            out[f.name] = v
        return out

    def digest(self):
        text = json.dumps(self.to_dict(), sort_keys=True)
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def replace(self, **kw):
        return dataclasses.replace(self, **kw)


def load_config(text):
    """Parse YAML (a superset of JSON); unknown keys are rejected."""
    try:
        data = yaml.safe_load(text) or {}
    except yaml.YAMLError as e:
        raise InvalidInput(f"config does not parse: {e}") from None
    if not isinstance(data, dict):
        raise InvalidInput("config must be a mapping")
    known = {f.name for f in dataclasses.fields(ExperimentConfig)}
    extra = set(data) - known
    if extra:
        raise InvalidInput(f"unknown config keys: {sorted(extra)}")
    for key in ("eps", "B"):
        if key in data:
            data[key] = str(data[key])
    if "grid" in data:
        data["grid"] = [str(q) for q in data["grid"]]
    try:
        return ExperimentConfig(**data)
    except (TypeError, ValueError) as e:
        raise InvalidInput(str(e)) from None
