"""Exact polyhedral cones via the double description method.

Built for small ambient dimensions (at most a dozen); everything is
computed over exact rationals, so facet and ray data are reproducible and
membership verdicts on cone boundaries are correct.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .matrices import Subspace, det, rank, sparse_from_dense

__all__ = [
    "DegeneratePairing",
    "ConeMembership",
    "PolyhedralCone",
    "cone_from_inequalities",
    "cone_from_rays",
    "dual_cone_polyhedral",
]


class DegeneratePairing(ValueError):
    """Raised when a pairing used for cone duality is singular."""


class ConeMembership(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def _dot(a: Sequence, b: Sequence) -> Fraction:
    s = Fraction(0)
    for x, y in zip(a, b):
        if x and y:
            s += x * y
    return s


def _primitive(vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale by a positive rational to a primitive integer vector."""
    denoms = [v.denominator for v in vec if v]
    if not denoms:
        return tuple(vec)
    mult = 1
    for d in denoms:
        mult = mult * d // gcd(mult, d)
    ints = [int(v * mult) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(Fraction(v, g) for v in ints)


def cone_from_inequalities(
    normals: Sequence[Sequence[Fraction]], ambient: int
) -> tuple[list[tuple], list[tuple]]:
    """Generators (lineality basis, extreme rays) of {x : n.x >= 0 for all n}."""
    lineality = [
        tuple(Fraction(1) if j == i else Fraction(0) for j in range(ambient))
        for i in range(ambient)
    ]
    rays: list[tuple] = []
    active: list[set] = []  # per ray, indices of processed constraints it saturates

    for idx, a in enumerate(normals):
        vals_l = [_dot(a, l) for l in lineality]
        pivot = next((k for k, v in enumerate(vals_l) if v), None)
        if pivot is not None:
            l0, v0 = lineality[pivot], vals_l[pivot]
            if v0 < 0:
                l0 = tuple(-x for x in l0)
                v0 = -v0
            new_lin = []
            for k, l in enumerate(lineality):
                if k == pivot:
                    continue
                c = vals_l[k] / v0 if vals_l[k] else Fraction(0)
                new_lin.append(tuple(x - c * y for x, y in zip(l, l0)))
            new_rays, new_active = [], []
            for r, act in zip(rays, active):
                c = _dot(a, r) / v0
                new_rays.append(tuple(x - c * y for x, y in zip(r, l0)))
                new_active.append(act | {idx})
            new_rays.append(l0)
            new_active.append(set(range(idx)))
            lineality, rays, active = new_lin, new_rays, new_active
            continue
        vals = [_dot(a, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        zer = [k for k, v in enumerate(vals) if v == 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        new_rays = [rays[k] for k in pos] + [rays[k] for k in zer]
        new_active = [set(active[k]) for k in pos] + [active[k] | {idx} for k in zer]
        for p in pos:
            for q in neg:
                common = active[p] & active[q]
                adjacent = True
                for k in range(len(rays)):
                    if k in (p, q):
                        continue
                    if common <= active[k]:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = tuple(
                    vals[p] * rq - vals[q] * rp for rp, rq in zip(rays[p], rays[q])
                )
                new_rays.append(_primitive(combo))
                new_active.append(common | {idx})
        rays, active = new_rays, new_active

    rays = [_primitive(r) for r in rays if any(r)]
    # deduplicate
    seen, uniq = set(), []
    for r in rays:
        if r not in seen:
            seen.add(r)
            uniq.append(r)
    lin = Subspace.from_vectors(ambient, lineality)
    return list(lin.basis), uniq


def cone_from_rays(
    rays: Sequence[Sequence[Fraction]], ambient: int
) -> tuple[list[tuple], list[tuple]]:
    """(facet normals, span equations) of the cone generated by rays.

    Facet normals are valid inequalities n.x >= 0; equations e.x = 0 cut out
    the linear hull.  Obtained by dualizing: the dual cone's rays are the
    facet normals and its lineality spans the equations.
    """
    lin, dual_rays = cone_from_inequalities(list(rays), ambient)
    return dual_rays, lin


def _vrep_to_hrep(
    ambient: int, rays: Sequence[tuple], lineality: Sequence[tuple]
) -> tuple[list[tuple], list[tuple]]:
    gens = [tuple(r) for r in rays]
    for l in lineality:
        gens.append(tuple(l))
        gens.append(tuple(-x for x in l))
    if not gens:
        return [], list(Subspace.full(ambient).basis)
    return cone_from_rays(gens, ambient)


@dataclass(frozen=True)
class PolyhedralCone:
    """A closed convex polyhedral cone with both descriptions available."""

    ambient: int
    rays: tuple[tuple, ...]
    lineality: tuple[tuple, ...] = ()
    facet_normals: tuple[tuple, ...] = ()
    equations: tuple[tuple, ...] = ()

    @classmethod
    def from_rays(
        cls, ambient: int, rays: Sequence[Sequence], lineality: Sequence[Sequence] = ()
    ) -> "PolyhedralCone":
        rays = [_primitive(tuple(r)) for r in rays]
        lin = Subspace.from_vectors(ambient, lineality)
        facets, eqs = _vrep_to_hrep(ambient, rays, lin.basis)
        return cls(ambient, tuple(rays), tuple(lin.basis), tuple(facets), tuple(eqs))

    @classmethod
    def from_inequalities(
        cls, ambient: int, normals: Sequence[Sequence]
    ) -> "PolyhedralCone":
        lin, rays = cone_from_inequalities(list(normals), ambient)
        facets, eqs = _vrep_to_hrep(ambient, rays, lin)
        return cls(ambient, tuple(rays), tuple(lin), tuple(facets), tuple(eqs))

    @property
    def dim(self) -> int:
        vecs = list(self.rays) + list(self.lineality)
        if not vecs:
            return 0
        return rank(sparse_from_dense(vecs), self.ambient)

    def membership(self, x: Sequence[Fraction]) -> ConeMembership:
        """Relative-interior membership: 0 is Boundary for a nontrivial cone."""
        for e in self.equations:
            if _dot(e, x):
                return ConeMembership.OUTSIDE
        strict = True
        for f in self.facet_normals:
            v = _dot(f, x)
            if v < 0:
                return ConeMembership.OUTSIDE
            if v == 0:
                strict = False
        if not (self.rays or self.lineality):
            # the zero cone
            return ConeMembership.BOUNDARY if not any(x) else ConeMembership.OUTSIDE
        return ConeMembership.INTERIOR if strict else ConeMembership.BOUNDARY


def dual_cone_polyhedral(
    rays: Sequence[Sequence[Fraction]],
    pairing: Sequence[Sequence[Fraction]],
    ambient: int | None = None,
) -> PolyhedralCone:
    """The cone {x : pairing(x, r) >= 0 for every generator r}.

    ``pairing`` is the bilinear form matrix B, pairing(x, r) = x^T B r; it
    must be non-degenerate.  The open-dual variant {x : pairing(x, r) > 0
    for r != 0} is the relative interior of the result (membership INTERIOR).
    """
    ambient = ambient if ambient is not None else len(pairing)
    b = [list(row) for row in pairing]
    if len(b) != ambient or det(b) == 0:
        raise DegeneratePairing("pairing matrix is singular or mis-sized")
    normals = []
    for r in rays:
        normals.append(tuple(_dot(row, r) for row in b))
    lin, dual_rays = cone_from_inequalities(normals, ambient)
    facets, eqs = _vrep_to_hrep(ambient, dual_rays, lin)
    return PolyhedralCone(
        ambient, tuple(dual_rays), tuple(lin), tuple(facets), tuple(eqs)
    )
