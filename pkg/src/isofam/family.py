"""Recursive enumeration of the distinguished family of isotropic subspaces.

A subspace is in the family when it is zero or the full preimage, under some
quotient map pi_i, of a family member one dimension down.  Members are stored
in reduced row-echelon form so the many (pivot, child) routes to the same
subspace deduplicate by plain equality.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .f2core import (
    Interval,
    QuotientModel,
    Vec,
    basis_vector,
    interval_vector,
    intervals,
    pairing,
)


def rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon form over GF(2); rows sorted by decreasing pivot."""
    pivots: dict[int, int] = {}
    for v in vectors:
        cur = v
        while cur:
            p = cur.bit_length() - 1
            if p in pivots:
                cur ^= pivots[p]
            else:
                pivots[p] = cur
                break
    for p in sorted(pivots):
        for q in pivots:
            if q > p and (pivots[q] >> p) & 1:
                pivots[q] ^= pivots[p]
    return tuple(pivots[p] for p in sorted(pivots, reverse=True))


@dataclass(frozen=True, order=True)
class Subspace:
    """Isotropic subspace in canonical (RREF) basis form."""

    d: int
    rows: tuple[int, ...]

    @classmethod
    def span(cls, vectors: Iterable[Vec], d: int) -> "Subspace":
        vs = list(vectors)
        for v in vs:
            if v.d != d:
                raise ValueError(f"vector has d={v.d}, expected {d}")
        return cls(d, rref(v.bits for v in vs))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: Vec) -> bool:
        if v.d != self.d:
            return False
        cur = v.bits
        for r in self.rows:
            if (cur >> (r.bit_length() - 1)) & 1:
                cur ^= r
        return cur == 0

    def vectors(self) -> Iterator[Vec]:
        """All 2^dim elements of the subspace."""
        elems = [0]
        for r in self.rows:
            elems += [e ^ r for e in elems]
        for e in sorted(elems):
            yield Vec(self.d, e)

    def basis(self) -> list[Vec]:
        return [Vec(self.d, r) for r in self.rows]

    @functools.cached_property
    def alpha(self) -> frozenset[Interval]:
        """All odd intervals whose interval vector lies in the subspace."""
        return frozenset(
            iv for iv in intervals(self.d) if self.contains(interval_vector(iv, self.d))
        )

    def is_isotropic(self) -> bool:
        bas = self.basis()
        return all(pairing(x, y) == 0 for x in bas for y in bas)

    def to_json_dict(self) -> dict:
        return {
            "basis": [Vec(self.d, r).to_bitstring() for r in self.rows],
            "alpha": [str(iv) for iv in sorted(self.alpha)],
        }

    def __repr__(self) -> str:
        if not self.rows:
            return f"<0 in F2^{2 * self.d}>"
        gens = ", ".join(repr(Vec(self.d, r)) for r in self.rows)
        return f"<{gens}>"


def zero_subspace(d: int) -> Subspace:
    return Subspace(d, ())


@functools.lru_cache(maxsize=None)
def enumerate_family(d: int) -> tuple[Subspace, ...]:
    """All members of the family for parameter d, sorted by (dim, rows).

    Built bottom-up: every nonzero member is the preimage of a member of the
    (d-1)-family through one of the 2d quotient pivots.
    """
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if d == 0:
        return (zero_subspace(0),)
    members = {zero_subspace(d)}
    for i in range(1, 2 * d + 1):
        q = QuotientModel(d, i)
        e_i = basis_vector(i, d)
        for child in enumerate_family(d - 1):
            lifted = [q.section(v).bits for v in child.basis()]
            members.add(Subspace(d, rref(lifted + [e_i.bits])))
    return tuple(sorted(members, key=lambda x: (x.dim, x.rows)))


@functools.lru_cache(maxsize=None)
def _family_set(d: int) -> frozenset[Subspace]:
    return frozenset(enumerate_family(d))


def is_in_family(x: Subspace) -> bool:
    return x in _family_set(x.d)


def project_member(x: Subspace, i: int) -> Subspace:
    """Image of a family member under pi_i; requires e_i in the subspace."""
    d = x.d
    e_i = basis_vector(i, d)
    if not x.contains(e_i):
        raise ValueError(f"e{i} not contained in {x!r}")
    q = QuotientModel(d, i)
    return Subspace.span([q.project(v) for v in x.basis()], d - 1)


def extend_to_lagrangian(x: Subspace) -> Subspace:
    """A Lagrangian family member containing x.

    Deterministic: the zero subspace extends to <e_1, e_3, ..., e_{2d-1}>;
    otherwise recurse through the smallest pivot i with e_i in x.
    """
    d = x.d
    if x.dim == d:
        return x
    if x.dim == 0:
        return Subspace.span([basis_vector(i, d) for i in range(1, 2 * d, 2)], d)
    i = next(k for k in range(1, 2 * d + 1) if x.contains(basis_vector(k, d)))
    q = QuotientModel(d, i)
    child = extend_to_lagrangian(project_member(x, i))
    lifted = [q.section(v).bits for v in child.basis()]
    return Subspace(d, rref(lifted + [1 << (i - 1)]))


def parity_split(x: Subspace) -> tuple[Subspace, Subspace]:
    """Intersections with the even-index and odd-index coordinate subspaces."""
    d = x.d
    even_mask = sum(1 << (i - 1) for i in range(2, 2 * d + 1, 2))
    odd_mask = sum(1 << (i - 1) for i in range(1, 2 * d + 1, 2))
    even = [v for v in x.vectors() if v.bits & ~even_mask == 0]
    odd = [v for v in x.vectors() if v.bits & ~odd_mask == 0]
    return Subspace.span(even, d), Subspace.span(odd, d)


def family_to_json(d: int) -> str:
    members = enumerate_family(d)
    return json.dumps(
        {
            "d": d,
            "count": len(members),
            "subspaces": [x.to_json_dict() for x in members],
        },
        indent=2,
    )
