"""Deterministic JSON reports, CSV tables and a timestamp sidecar."""
from __future__ import annotations

import csv
import datetime
import json
from fractions import Fraction
from importlib import metadata
from pathlib import Path

from ..outerspace.graph import format_fraction


def package_version():
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "unknown"


def _plain(x):
    if isinstance(x, Fraction):
        return format_fraction(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "to_dict"):
        return _plain(x.to_dict())
    if isinstance(x, float) and x != x:
        return None
    return x


def build(command, config, body, verdict):
    return {
        "command": command,
        "version": package_version(),
        "config": config.to_dict() if config is not None else None,
        "config_hash": config.digest() if config is not None else None,
        "verdict": verdict,
        "result": _plain(body),
    }


def dumps(report):
    return json.dumps(_plain(report), sort_keys=True, indent=2) + "\n"


def write(report, path):
    """Write the report and a sidecar holding the wall-clock time, kept out of the report."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(report))
    side = path.with_suffix(path.suffix + ".meta")
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
    side.write_text(json.dumps({"written": stamp}) + "\n")
    return path


def write_csv(rows, header, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for r in rows:
            w.writerow([format_fraction(v) if isinstance(v, Fraction) else v for v in r])
    return path
