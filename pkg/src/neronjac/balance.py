"""Balanced and strictly balanced multidegrees.

A multidegree of total degree d on a (quasi)stable graph of genus g >= 2 is
balanced when every connected proper subcurve Z satisfies

    deg_Z >= m_Z(d) = d * w_Z / (2g - 2) - delta_Z / 2

and every exceptional vertex carries degree exactly 1.  Strictly balanced
additionally requires strict inequality for every Z whose boundary nodes do
not all lie on exceptional components.

Every comparison is done on integers after clearing denominators by
2*(2g-2); the public bound m_Z(d) is an exact Fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import _kernel
from .graphs import (
    Subcurve,
    WeightedGraph,
    connected_subset_masks,
    contract_separating,
    subcurve_stats,
)


def _require_genus(g: WeightedGraph) -> int:
    genus = g.genus
    if genus < 2:
        raise ValueError(f"genus must be at least 2, got {genus}")
    return genus


def _vertices(z) -> frozenset[int]:
    if isinstance(z, Subcurve):
        return z.vertices
    return frozenset(z)


def m_lower_bound(g: WeightedGraph, z, d: int) -> Fraction:
    """Exact lower bound m_Z(d) for the degree of a subcurve Z."""
    genus = _require_genus(g)
    stats = subcurve_stats(g, _vertices(z))
    return Fraction(d * stats.w, 2 * genus - 2) - Fraction(stats.delta, 2)


def _m_of_set(g: WeightedGraph, vs, d: int) -> Fraction:
    """m for an arbitrary, possibly empty or disconnected vertex set.

    w is additive over connected components, so the formula applies as-is.
    """
    if not vs:
        return Fraction(0)
    return m_lower_bound(g, vs, d)


@dataclass(frozen=True)
class _SubsetCheck:
    mask: int
    w: int
    delta: int
    exempt: bool  # boundary entirely on exceptional components


@lru_cache(maxsize=None)
def _balance_checks(g: WeightedGraph) -> tuple[_SubsetCheck, ...]:
    checks = []
    for mask in connected_subset_masks(g, proper=True):
        vs = frozenset(v for v in range(g.n_vertices) if mask >> v & 1)
        stats = subcurve_stats(g, vs)
        exempt = all(
            g.edges[i][0] in g.exceptional or g.edges[i][1] in g.exceptional
            for i in g.boundary_edges(vs)
        )
        checks.append(_SubsetCheck(mask, stats.w, stats.delta, exempt))
    return tuple(checks)


def _threshold(genus: int, d: int, w: int, delta: int) -> int:
    # scale * deg_Z >= threshold  <=>  deg_Z >= m_Z(d), scale = 2*(2g-2)
    return 2 * d * w - (2 * genus - 2) * delta


def _check_multidegree(g: WeightedGraph, multidegree) -> tuple[int, ...]:
    md = tuple(int(x) for x in multidegree)
    if len(md) != g.n_vertices:
        raise ValueError(
            f"multidegree has {len(md)} entries, graph has {g.n_vertices} vertices"
        )
    return md


def _mask_sum(md, mask: int) -> int:
    acc = 0
    v = 0
    while mask:
        if mask & 1:
            acc += md[v]
        mask >>= 1
        v += 1
    return acc


def is_balanced(g: WeightedGraph, multidegree) -> bool:
    genus = _require_genus(g)
    md = _check_multidegree(g, multidegree)
    if any(md[v] != 1 for v in g.exceptional):
        return False
    d = sum(md)
    scale = 2 * (2 * genus - 2)
    return all(
        scale * _mask_sum(md, c.mask) >= _threshold(genus, d, c.w, c.delta)
        for c in _balance_checks(g)
    )


def is_strictly_balanced(g: WeightedGraph, multidegree) -> bool:
    genus = _require_genus(g)
    md = _check_multidegree(g, multidegree)
    if not is_balanced(g, md):
        return False
    d = sum(md)
    scale = 2 * (2 * genus - 2)
    return all(
        c.exempt
        or scale * _mask_sum(md, c.mask) > _threshold(genus, d, c.w, c.delta)
        for c in _balance_checks(g)
    )


@dataclass(frozen=True)
class BalancedSet:
    """Complete enumeration of balanced multidegrees of one total degree,
    with the strictly balanced sublist flagged."""

    degree: int
    members: tuple[tuple[int, ...], ...]
    strict_members: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def strict_size(self) -> int:
        return len(self.strict_members)


def enumerate_balanced(g: WeightedGraph, d: int) -> BalancedSet:
    """All balanced multidegrees of total degree d, lexicographically
    ordered, with the strictly balanced ones flagged.

    Per-vertex bounds come from the singleton subcurve below and the
    complement above; exceptional vertices are pinned to degree 1.
    """
    genus = _require_genus(g)
    n = g.n_vertices
    all_vertices = frozenset(range(n))
    lows, highs = [], []
    for v in range(n):
        lo = math.ceil(_m_of_set(g, {v}, d))
        hi = d - math.ceil(_m_of_set(g, all_vertices - {v}, d))
        if v in g.exceptional:
            lo, hi = max(lo, 1), min(hi, 1)
        lows.append(lo)
        highs.append(hi)

    checks = _balance_checks(g)
    scale = 2 * (2 * genus - 2)
    masks = [c.mask for c in checks]
    thresholds = [_threshold(genus, d, c.w, c.delta) for c in checks]
    members = tuple(
        _kernel.enumerate_box(lows, highs, d, masks, thresholds, scale)
    )
    strict = tuple(
        md
        for md in members
        if all(
            c.exempt
            or scale * _mask_sum(md, c.mask) > _threshold(genus, d, c.w, c.delta)
            for c in checks
        )
    )
    return BalancedSet(degree=d, members=members, strict_members=strict)


def is_d_general(g: WeightedGraph, d: int) -> bool:
    """True iff every balanced multidegree of total degree d is strictly
    balanced."""
    if not g.is_stable:
        raise ValueError("d-generality is defined for stable graphs")
    bs = enumerate_balanced(g, d)
    return bs.members == bs.strict_members


def is_weakly_d_general(g: WeightedGraph, d: int) -> bool:
    """True iff the bridge contraction of g is d-general."""
    if not g.is_stable:
        raise ValueError("weak d-generality is defined for stable graphs")
    contracted, _ = contract_separating(g)
    return is_d_general(contracted, d)


def alpha(g: WeightedGraph, multidegree) -> tuple[int, ...]:
    """Push a balanced multidegree forward to the bridge contraction by
    summing over contraction fibers; the result is balanced there."""
    md = _check_multidegree(g, multidegree)
    if not is_balanced(g, md):
        raise ValueError("multidegree is not balanced")
    contracted, phi = contract_separating(g)
    out = [0] * contracted.n_vertices
    for v, val in enumerate(md):
        out[phi[v]] += val
    return tuple(out)
