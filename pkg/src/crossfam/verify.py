"""Exact verification of crossing / intersecting families.

The verifier is the final gate for every constructor: a family is only ever
returned to a caller after this module confirmed, with exact arithmetic,
that every member matches its pattern and every pair satisfies the family
kind's condition.  Violation reports name the offending members.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List

from .geom import (
    GeomError,
    PointSet,
    Subgraph,
    pattern_edge_count,
    pattern_vertex_count,
    subgraphs_cross,
)


@dataclass
class VerifyResult:
    ok: bool
    violations: List[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _member_subgraph(fam, idx) -> Subgraph:
    m = fam.members[idx]
    if isinstance(m, Subgraph):
        return m
    raise GeomError(f"member {idx} is not a subgraph")


def verify_family(ps: PointSet, fam, max_violations: int = 25) -> VerifyResult:
    """Check every member's shape and the pairwise family condition.

    Malformed members (wrong counts, unknown ids, bad degree sequence)
    raise GeomError; semantic failures are collected as violations.
    """
    if fam.kind not in ("crossing", "intersecting"):
        raise GeomError(f"unknown family kind {fam.kind!r}")
    n = len(ps)
    members = [_member_subgraph(fam, i) for i in range(len(fam.members))]
    for i, g in enumerate(members):
        if g.pattern != fam.pattern or g.t != fam.t:
            raise GeomError(
                f"member {i} pattern {g.pattern}/{g.t} != family "
                f"{fam.pattern}/{fam.t}")
        for v in g.vertices:
            if v not in ps:
                raise GeomError(f"member {i} uses unknown point id {v}")
        g.validate()

    violations: List[str] = []

    vsets = [frozenset(g.vertices) for g in members]
    esets = [frozenset(g.edges) for g in members]
    for i in range(len(members)):
        if len(violations) >= max_violations:
            break
        for j in range(i + 1, len(members)):
            if len(violations) >= max_violations:
                break
            if fam.kind == "crossing":
                if vsets[i] & vsets[j]:
                    violations.append(
                        f"members ({i},{j}) share vertices "
                        f"{sorted(vsets[i] & vsets[j])}")
                elif not subgraphs_cross(members[i], members[j], ps):
                    violations.append(f"members ({i},{j}) do not cross")
            else:
                if esets[i] & esets[j]:
                    shared = sorted((e.a, e.b) for e in esets[i] & esets[j])
                    violations.append(
                        f"members ({i},{j}) share edges {shared}")
                elif not (vsets[i] & vsets[j]
                          or subgraphs_cross(members[i], members[j], ps)):
                    violations.append(f"members ({i},{j}) do not intersect")

    if len(members) < fam.claimed_bound:
        violations.append(
            f"bound: {len(members)} members < claimed {fam.claimed_bound}")

    # size caps implied by vertex-disjointness / edge-disjointness
    nv = pattern_vertex_count(fam.pattern, fam.t)
    ne = pattern_edge_count(fam.pattern, fam.t)
    if fam.kind == "crossing" and len(members) > n // nv:
        violations.append(
            f"{len(members)} members exceed n/|V| = {n // nv}")
    if fam.kind == "intersecting" and ne > 0 and \
            len(members) > (n * (n - 1) // 2) // ne:
        violations.append(
            f"{len(members)} members exceed C(n,2)/|E| = "
            f"{(n * (n - 1) // 2) // ne}")

    return VerifyResult(not violations, violations)
