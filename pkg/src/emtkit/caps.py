"""Enumeration and construction caps.

Exhaustive verification is exponential in the worst case, so every
enumeration is bounded by an explicit cap.  Exceeding a cap raises
:class:`~emtkit.errors.CapExceeded`, which verifiers report as an
inconclusive outcome, never as a pass.  The ``EMTKIT_CAPS`` environment
variable overrides the defaults with a comma-separated ``name=value`` list,
e.g. ``EMTKIT_CAPS=product=128,enum=8192``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Caps:
    product: int = 64      # max points in a product carrier
    enum: int = 4096       # max candidate functions for one hom-set enumeration
    oracle: int = 6        # max points accepted by the chain-enumeration oracle
    opens: int = 4096      # max materialized open sets per topology
    factor: int = 4096     # max candidate factorizations per probe (co)cone
    theoremb: int = 6      # max points accepted by the eight-way checker
    probe: int = 2         # max points of a default verification probe


DEFAULTS = Caps()

ENV_VAR = "EMTKIT_CAPS"
_FIELD_NAMES = tuple(f.name for f in fields(Caps))


def caps_from_env(text: str | None = None) -> Caps:
    """Parse the override list; unknown names and bad values raise ValueError."""
    if text is None:
        text = os.environ.get(ENV_VAR, "")
    caps = DEFAULTS
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, eq, value = item.partition("=")
        if not eq or name not in _FIELD_NAMES:
            raise ValueError(f"bad cap override {item!r}; known caps: {', '.join(_FIELD_NAMES)}")
        caps = replace(caps, **{name: int(value)})
    return caps


def effective_caps(caps: Caps | None = None) -> Caps:
    return caps if caps is not None else caps_from_env()
