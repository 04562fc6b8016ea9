"""Catalog records and their line-oriented JSON persistence.

A catalog file holds one JSON object per line with the keys
code, order, bipartite, contracted, rigid, g, boundary, h1.
Every field is recomputable from the code alone; reading with
``check=True`` verifies stored values against recomputation.
``rigid`` is null for non-bipartite graphs, where rigidity is undefined.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from gemcensus import code as codemod
from gemcensus import core, moves


@dataclass(frozen=True)
class CatalogRecord:
    code: str
    order: int
    bipartite: bool
    contracted: bool
    rigid: bool | None
    g: tuple[int, int, int, int]
    boundary: core.BoundaryProfile
    h1: core.AbelianGroup

    def to_json_obj(self) -> dict:
        return {
            "code": self.code,
            "order": self.order,
            "bipartite": self.bipartite,
            "contracted": self.contracted,
            "rigid": self.rigid,
            "g": list(self.g),
            "boundary": [
                {"orientable": s.orientable, "genus": s.genus}
                for s in self.boundary.components
            ],
            "h1": {"rank": self.h1.rank, "torsion": list(self.h1.torsion)},
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "CatalogRecord":
        return cls(
            code=obj["code"],
            order=obj["order"],
            bipartite=obj["bipartite"],
            contracted=obj["contracted"],
            rigid=obj["rigid"],
            g=tuple(obj["g"]),
            boundary=core.BoundaryProfile(tuple(
                core.SurfaceType(s["orientable"], s["genus"])
                for s in obj["boundary"]
            )),
            h1=core.AbelianGroup(obj["h1"]["rank"],
                                 tuple(obj["h1"]["torsion"])),
        )


def record_from_graph(g: core.ColoredGraph,
                      code_text: str | None = None) -> CatalogRecord:
    """Compute all record fields for a graph.  ``code_text`` skips the
    canonicalization when the caller already holds the canonical code."""
    if code_text is None:
        code_text = codemod.canonical_code(g).text
    bipartite = core.is_bipartite(g)
    return CatalogRecord(
        code=code_text,
        order=g.order,
        bipartite=bipartite,
        contracted=core.is_contracted(g),
        rigid=moves.is_rigid(g) if bipartite else None,
        g=core.g_vector(g),
        boundary=core.boundary_profile(g),
        h1=core.first_homology(g),
    )


def record_from_code(code_text: str) -> CatalogRecord:
    return record_from_graph(codemod.decode(code_text), code_text)


def write_catalog(records: Iterable[CatalogRecord], path) -> int:
    """Write one record per line; returns the number written."""
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_json_obj(), separators=(", ", ": ")))
            fh.write("\n")
            count += 1
    return count


def read_catalog(path, check: bool = False) -> list[CatalogRecord]:
    """Read a catalog file back.  With ``check``, recompute every record
    from its code and fail loudly on any disagreement."""
    records = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = CatalogRecord.from_json_obj(json.loads(line))
            except (ValueError, KeyError) as exc:
                raise ValueError(f"{path}:{lineno}: bad record: {exc}") from exc
            if check:
                # no code_text shortcut: this also re-canonicalizes
                fresh = record_from_graph(codemod.decode(rec.code))
                if fresh != rec:
                    raise ValueError(
                        f"{path}:{lineno}: stored record disagrees with "
                        f"recomputation for code {rec.code}")
            records.append(rec)
    return records
