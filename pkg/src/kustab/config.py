"""User variety configuration.

A config file is a single JSON document:

    {"default_variety": "q3",
     "varieties": [{"name": "X", "dim": 3, "degree": 2, "index": 3,
                    "todd": ["1", "3/2", "13/12", "1/2"],
                    "denoms": [1, 1, 2, 12],
                    "low_deg_H_generated": true}]}

Rationals are serialized as "p/q" strings so exactness survives the round
trip.  Preset varieties are always available; config entries may shadow
them by name.
"""

from __future__ import annotations

import json

from .exact import DomainError, rat
from .variety import PRESETS, VarietyDesc


def variety_from_dict(rec: dict) -> VarietyDesc:
    try:
        return VarietyDesc(
            name=str(rec["name"]),
            dim=int(rec["dim"]),
            degree=int(rec["degree"]),
            index=int(rec["index"]),
            todd=tuple(rat(t) for t in rec["todd"]),
            denoms=tuple(int(d) for d in rec["denoms"]),
            low_deg_H_generated=bool(rec.get("low_deg_H_generated", True)))
    except KeyError as exc:
        raise DomainError(f"config variety missing field {exc}") from None


def load_config(path: str) -> tuple[dict[str, VarietyDesc], str | None]:
    """Parse a config file into a name -> descriptor map plus the default name."""
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    varieties = {}
    names = []
    for rec in doc.get("varieties", []):
        v = variety_from_dict(rec)
        key = v.name.lower()
        if key in names:
            raise DomainError(f"duplicate variety name: {v.name}")
        names.append(key)
        varieties[key] = v
    default = doc.get("default_variety")
    return varieties, (default.lower() if default else None)


def registry(config_path: str | None = None) -> tuple[dict[str, VarietyDesc], str]:
    """Presets merged with an optional config; returns (map, default name)."""
    table = dict(PRESETS)
    default = "q3"
    if config_path:
        extra, cfg_default = load_config(config_path)
        table.update(extra)
        if cfg_default:
            if cfg_default not in table:
                raise DomainError(f"unknown default variety: {cfg_default}")
            default = cfg_default
    return table, default
