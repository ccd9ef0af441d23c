"""Interval-counting profiles, the vector-valued map on family members, and
the breadth-first reachability oracle over the union of all members."""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass

from .f2core import Vec, basis_vector, pairing, zero
from .family import Subspace, enumerate_family


@dataclass(frozen=True)
class Profile:
    """Per-index interval-coverage counts f and their triangular-number parity.

    f[j-1] counts the intervals of the owning subspace covering index j;
    the parity bit is f(f+1)/2 mod 2, i.e. 1 exactly when f is 1 or 2 mod 4.
    """

    d: int
    f: tuple[int, ...]
    parity: tuple[int, ...]


def profile(x: Subspace) -> Profile:
    d = x.d
    f = tuple(
        sum(1 for iv in x.alpha if j in iv) for j in range(1, 2 * d + 1)
    )
    parity = tuple((v * (v + 1) // 2) % 2 for v in f)
    return Profile(d, f, parity)


def phi_vector(x: Subspace) -> Vec:
    """The sum of e_j over indices j whose coverage count is 1 or 2 mod 4."""
    p = profile(x)
    bits = 0
    for j, bit in enumerate(p.parity, start=1):
        if bit:
            bits |= 1 << (j - 1)
    return Vec(x.d, bits)


@functools.lru_cache(maxsize=None)
def tilde_v(d: int) -> frozenset[Vec]:
    """Union of all family members."""
    out: set[Vec] = set()
    for x in enumerate_family(d):
        out.update(x.vectors())
    return frozenset(out)


@functools.lru_cache(maxsize=None)
def reachable_set(d: int) -> tuple[frozenset[Vec], dict[Vec, int]]:
    """BFS closure of 0 under moves x -> x + e_j with (e_j, x) = 0.

    Returns the reachable set and the minimal move count per vector.
    Exploration is index-ascending so distances are deterministic.
    """
    start = zero(d)
    dist: dict[Vec, int] = {start: 0}
    frontier = [start]
    while frontier:
        nxt: list[Vec] = []
        for x in frontier:
            for j in range(1, 2 * d + 1):
                e_j = basis_vector(j, d)
                if pairing(e_j, x):
                    continue
                y = x ^ e_j
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return frozenset(dist), dist


@functools.lru_cache(maxsize=None)
def _phi_table(d: int) -> dict[Vec, Subspace]:
    return {phi_vector(x): x for x in enumerate_family(d)}


def phi_inverse(v: Vec, d: int) -> Subspace:
    """The unique family member mapping to v; raises if v is out of range."""
    table = _phi_table(d)
    if v not in table:
        raise KeyError(f"{v!r} is not the image of any family member at d={d}")
    return table[v]


def phi_pairs_to_json(d: int) -> str:
    members = enumerate_family(d)
    return json.dumps(
        {
            "d": d,
            "pairs": [
                {
                    "subspace": x.to_json_dict()["basis"],
                    "phi": phi_vector(x).to_bitstring(),
                }
                for x in members
            ],
            "tilde_v_size": len(tilde_v(d)),
        },
        indent=2,
    )
