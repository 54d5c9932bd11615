"""JSON interchange for the artifact types.

Canonical forms: multigraph edges as sorted [u, v, mult] with u < v;
blocks as sorted integer lists, sorted lexicographically.  A "base"
field carries the uniform background multiplicity so near-complete
multigraphs stay small on disk.
"""

from __future__ import annotations

import json

from .dioph import DiophInstance
from .errors import InvalidParameterError
from .gdd import GddInstance
from .leave import EvidenceItem, LeaveCertificate
from .multigraph import Multigraph
from .oracle import BlockCollection
from .params import CaseLabel


def multigraph_to_dict(g: Multigraph) -> dict:
    out = {"n": g.n, "edges": [[u, v, m] for (u, v), m in sorted(g.mult_map.items())]}
    if g.base:
        out["base"] = g.base
    return out


def multigraph_from_dict(d: dict) -> Multigraph:
    return Multigraph(
        int(d["n"]),
        base=int(d.get("base", 0)),
        mult_map={(int(u), int(v)): int(m) for u, v, m in d.get("edges", [])},
    )


def blocks_to_list(blocks) -> list:
    return sorted(sorted(int(x) for x in b) for b in blocks)


def gdd_to_dict(inst: GddInstance) -> dict:
    return {
        "points": inst.v,
        "groups": [list(g) for g in inst.groups],
        "lambda": inst.lam,
        "blocks": blocks_to_list(inst.blocks),
    }


def gdd_from_dict(d: dict) -> GddInstance:
    blocks = tuple(tuple(b) for b in blocks_to_list(d["blocks"]))
    k = len(blocks[0]) if blocks else 3
    return GddInstance(
        groups=tuple(tuple(int(x) for x in g) for g in d["groups"]),
        blocks=blocks,
        lam=int(d["lambda"]),
        k=k,
    )


def packing_to_dict(bc: BlockCollection) -> dict:
    return {
        "n": bc.n,
        "k": bc.k,
        "t": bc.t,
        "lambda": bc.lam,
        "blocks": blocks_to_list(bc.blocks),
    }


def packing_from_dict(d: dict) -> BlockCollection:
    return BlockCollection(
        n=int(d["n"]),
        k=int(d["k"]),
        t=int(d["t"]),
        lam=int(d["lambda"]),
        blocks=tuple(tuple(b) for b in blocks_to_list(d["blocks"])),
    )


def certificate_to_dict(cert: LeaveCertificate) -> dict:
    return {
        "case": cert.case.value,
        "n": cert.n,
        "k": cert.k,
        "xi": cert.xi,
        "params": dict(cert.parameters),
        "graph": multigraph_to_dict(cert.graph),
        "evidence": [
            {
                "kind": e.kind,
                "params": list(e.params),
                "copies": e.copies,
                **({"blocks": blocks_to_list(e.blocks)} if e.blocks else {}),
            }
            for e in cert.evidence
        ],
    }


def certificate_from_dict(d: dict) -> LeaveCertificate:
    params = {
        key: tuple(v) if isinstance(v, list) else v
        for key, v in d["params"].items()
    }
    return LeaveCertificate(
        n=int(d["n"]),
        k=int(d["k"]),
        case=CaseLabel(d["case"]),
        xi=int(d["xi"]),
        graph=multigraph_from_dict(d["graph"]),
        parameters=params,
        evidence=tuple(
            EvidenceItem(
                kind=e["kind"],
                params=tuple(e["params"]),
                copies=int(e["copies"]),
                blocks=tuple(tuple(b) for b in e["blocks"])
                if e.get("blocks")
                else None,
            )
            for e in d["evidence"]
        ),
    )


def dioph_from_dict(d: dict) -> DiophInstance:
    return DiophInstance(
        equalities=tuple((int(p), int(a)) for p, a in d.get("equalities", [])),
        avoidances=tuple(
            (int(q), tuple(int(b) for b in forb))
            for q, forb in d.get("avoidances", [])
        ),
    )


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def identify(d: dict) -> str:
    """Best-effort artifact type from the key shape."""
    if "xi" in d:
        return "certificate"
    if "groups" in d:
        return "gdd"
    if "t" in d and "blocks" in d:
        return "packing"
    if "edges" in d or ("n" in d and "base" in d):
        return "multigraph"
    if "equalities" in d or "avoidances" in d:
        return "dioph"
    raise InvalidParameterError("unrecognized artifact shape")
