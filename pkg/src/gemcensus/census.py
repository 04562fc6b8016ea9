"""Census generation for contracted 4-colored graphs without 2-dipoles.

The pipeline builds graphs in stages.  Two-colored graphs on 2p vertices
are disjoint unions of alternating cycles, one per partition of 2p into
even parts.  Adding a third matching in all ways and keeping only
graphs whose components are all positive-genus surfaces yields the
surface set S(2p); those components stay singular in every completion,
so adding the fourth matching in all ways and keeping connected,
contracted graphs without 2-dipoles produces exactly the census of
graphs representing manifolds with non-empty boundary.  Duplicates are
rejected by canonical code at both stages.

The matching-completion inner loops live in ``gemcensus._kernel``; this
module orchestrates them, optionally across worker processes (bounded by
the GEM_THREADS environment variable), and turns surviving codes into
catalog records.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from gemcensus import _kernel
from gemcensus.catalog import CatalogRecord, record_from_code

BOUNDARY_CLASSES = ("any", "toric", "toric-connected")

_BOUNDARY_MODE = {"any": 0, "toric": 1, "toric-connected": 2}


@dataclass(frozen=True)
class CensusFilter:
    """Which graphs a census keeps.

    bipartite: True for bipartite graphs only, False for non-bipartite
    only, None for both.  boundary: "any", "toric" (all boundary
    components tori) or "toric-connected" (exactly one torus).
    rigid_only restricts to rigid graphs and needs bipartite=True.
    contracted_only/no_2_dipoles document the pipeline invariants and
    cannot be switched off.
    """

    bipartite: bool | None = None
    boundary: str = "any"
    require_boundary: bool = True
    rigid_only: bool = False
    contracted_only: bool = True
    no_2_dipoles: bool = True

    def __post_init__(self):
        if self.boundary not in BOUNDARY_CLASSES:
            raise ValueError(f"boundary must be one of {BOUNDARY_CLASSES}")
        if self.rigid_only and self.bipartite is not True:
            raise ValueError("rigid censuses are bipartite censuses")
        if not (self.contracted_only and self.no_2_dipoles):
            raise ValueError(
                "the generation pipeline always produces contracted "
                "graphs without 2-dipoles")
        if not self.require_boundary:
            raise ValueError(
                "closed-manifold graphs are outside this census")


@dataclass(frozen=True)
class CyclePartition:
    """The two-colored graph whose {0,1}-cycles have the given even
    lengths, vertices numbered consecutively along each cycle."""

    parts: tuple[int, ...]
    m0: tuple[int, ...]
    m1: tuple[int, ...]


@dataclass(frozen=True)
class SurfaceGraph:
    """A 3-colored graph every component of which is a positive-genus
    surface, with its canonical code."""

    matchings: tuple[tuple[int, ...], ...]
    code: str


@dataclass(frozen=True)
class SurfaceGraphSet:
    order: int
    members: tuple[SurfaceGraph, ...]

    def __len__(self):
        return len(self.members)


def _even_partitions(total: int) -> list[tuple[int, ...]]:
    out = []

    def rec(left, biggest, acc):
        if not left:
            out.append(tuple(acc))
            return
        part = min(left, biggest)
        while part >= 2:
            acc.append(part)
            rec(left - part, part, acc)
            acc.pop()
            part -= 2
    rec(total, total, [])
    return out


def generate_two_colored(order: int) -> list[CyclePartition]:
    """One two-colored graph per partition of ``order`` into even parts,
    in a fixed normal form (cycles laid out consecutively, parts
    non-increasing)."""
    if order < 2 or order % 2:
        raise ValueError("order must be even and positive")
    result = []
    for parts in _even_partitions(order):
        m0 = [0] * order
        m1 = [0] * order
        start = 0
        for length in parts:
            for i in range(start, start + length, 2):
                m0[i] = i + 1
                m0[i + 1] = i
            for i in range(start + 1, start + length - 1, 2):
                m1[i] = i + 1
                m1[i + 1] = i
            m1[start] = start + length - 1
            m1[start + length - 1] = start
            start += length
        result.append(CyclePartition(parts, tuple(m0), tuple(m1)))
    return result


def _surface_task(args):
    m0, m1, bipartite_only, torus_only, connected_only = args
    return _kernel.complete_surfaces(
        m0, m1, bipartite_only=bipartite_only, torus_only=torus_only,
        connected_only=connected_only)


def _surface_members(order, bipartite_only=False, torus_only=False,
                     connected_only=False, workers=1):
    tasks = [
        (cp.m0, cp.m1, bipartite_only, torus_only, connected_only)
        for cp in generate_two_colored(order)
    ]
    merged: dict[str, tuple] = {}
    for result in _run_tasks(_surface_task, tasks, workers):
        for code, ms in result.items():
            merged.setdefault(code, ms)
    return merged


def build_surface_set(order: int) -> SurfaceGraphSet:
    """The full surface set S(2p): all 3-colored graphs on ``order``
    vertices, up to color-respecting isomorphism, whose components are
    all positive-genus surfaces."""
    merged = _surface_members(order)
    members = tuple(
        SurfaceGraph(tuple(tuple(m) for m in merged[code]), code)
        for code in sorted(merged)
    )
    return SurfaceGraphSet(order, members)


def _gem_task(args):
    ms, want_bip, boundary_mode = args
    return _kernel.complete_gems(
        ms[0], ms[1], ms[2], want_bipartite=want_bip,
        boundary_mode=boundary_mode)


def _run_tasks(fn, tasks, workers):
    if workers <= 1 or len(tasks) <= 1:
        for t in tasks:
            yield fn(t)
        return
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        yield from pool.map(fn, tasks, chunksize=1)


def resolve_workers(workers: int | None = None) -> int:
    """Worker count: the explicit argument, else GEM_THREADS, else 1;
    GEM_THREADS always bounds the result."""
    bound = 0
    env = os.environ.get("GEM_THREADS", "").strip()
    if env:
        bound = max(1, int(env))
    if workers is None:
        return bound or 1
    workers = max(1, workers)
    return min(workers, bound) if bound else workers


def census_codes(order: int, filt: CensusFilter,
                 workers: int | None = None) -> list[str]:
    """Canonical codes of the census before the rigidity post-filter,
    sorted."""
    workers = resolve_workers(workers)
    toric = filt.boundary != "any"
    bases = _surface_members(
        order,
        bipartite_only=filt.bipartite is True,
        torus_only=toric,
        connected_only=filt.boundary == "toric-connected",
        workers=workers,
    )
    want_bip = {True: 1, False: 0, None: -1}[filt.bipartite]
    mode = _BOUNDARY_MODE[filt.boundary]
    tasks = [(ms, want_bip, mode) for ms in bases.values()]
    codes: set[str] = set()
    for result in _run_tasks(_gem_task, tasks, workers):
        codes.update(result)
    return sorted(codes)


def enumerate_census(order: int, filt: CensusFilter | None = None,
                     workers: int | None = None) -> Iterator[CatalogRecord]:
    """One catalog record per isomorphism class passing the filter, in
    canonical-code order.  Record fields are recomputed from the decoded
    code, independently of the search that produced it."""
    filt = filt or CensusFilter()
    for code in census_codes(order, filt, workers):
        rec = record_from_code(code)
        if filt.rigid_only and not rec.rigid:
            continue
        yield rec
