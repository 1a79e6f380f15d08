"""Deterministic JSON report assembly for the command-line tools.

Reports are byte-identical across runs with the same configuration: keys
are sorted, no timestamps or machine identifiers are embedded, and the
thread count only ever appears inside the echoed configuration block.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np


@dataclass
class RunConfig:
    threads: int = 1
    seed: int = 0
    cap_order: int = 10000
    cap_lattice: int = 10000
    cap_nodes: int = 10 ** 8
    sample_count: int = 10 ** 6
    out: str | None = None

    def block(self):
        d = asdict(self)
        d.pop("out")
        return d


def tool_block():
    from . import __version__
    return {"name": "rbgroups", "version": __version__}


def group_block(G, ref=None):
    b = {"name": G.name, "order": int(G.order),
         "fingerprint": G.fingerprint_hex()}
    if ref is not None:
        b["ref"] = ref
    return b


def operator_block(op, include_images=True):
    b = {"provenance": to_jsonable(op.provenance)}
    if include_images:
        b["images"] = [int(x) for x in op.images]
    return b


def to_jsonable(x):
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return [to_jsonable(v) for v in x.tolist()]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, frozenset):
        return sorted(str(v) for v in x)
    return x


def render(payload) -> str:
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=2) + "\n"


def emit(payload, out_path=None):
    text = render(payload)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return text
