"""Symmetric-group combinatorics: partitions, Kostka numbers by tableau
enumeration, an independent character-theoretic oracle, and the multiplicity
vectors of the distinguished non-irreducible representations for m in 3..5.

Multiplicities of irreducibles in the permutation module induced from the
trivial representation of a Young subgroup of content mu are Kostka numbers
(Young's rule).  The character oracle recomputes them as
(1/|S_mu|) * sum over g in S_mu of chi_lambda(g), with chi_lambda evaluated
by the Murnaghan-Nakayama rule, giving a second fully independent route.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass

Partition = tuple[int, ...]


def is_partition(p: Partition) -> bool:
    return all(a >= 1 for a in p) and all(a >= b for a, b in zip(p, p[1:]))


def partitions(m: int) -> list[Partition]:
    """All partitions of m in descending lexicographic order."""
    if m < 0:
        raise ValueError("m must be >= 0")

    def gen(n: int, cap: int):
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    return list(gen(m, m))


def partition_str(p: Partition) -> str:
    return "+".join(str(a) for a in p)


def parse_partition(s: str) -> Partition:
    p = tuple(int(t) for t in s.replace(" ", "").split("+"))
    if not is_partition(p):
        raise ValueError(f"{s!r} is not a weakly decreasing partition")
    return p


def kostka(shape: Partition, content: Partition) -> int:
    """Number of semistandard Young tableaux of the given shape and content.

    Rows weakly increase, columns strictly increase; entry i appears
    content[i-1] times.  Computed by exhaustive backtracking (m <= 5 in the
    intended use, so this is instant).
    """
    if sum(shape) != sum(content):
        raise ValueError(f"|shape|={sum(shape)} != |content|={sum(content)}")
    if not shape:
        return 1
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    remaining = list(content)
    tableau = [[0] * width for width in shape]
    count = 0

    def place(idx: int) -> None:
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        r, c = cells[idx]
        lo = tableau[r][c - 1] if c > 0 else 1
        above = tableau[r - 1][c] if r > 0 else 0
        lo = max(lo, above + 1)
        for val in range(lo, len(remaining) + 1):
            if remaining[val - 1] == 0:
                continue
            remaining[val - 1] -= 1
            tableau[r][c] = val
            place(idx + 1)
            remaining[val - 1] += 1
        tableau[r][c] = 0

    place(0)
    return count


@functools.lru_cache(maxsize=None)
def mn_character(shape: Partition, cycle_type: Partition) -> int:
    """Irreducible symmetric-group character value by Murnaghan-Nakayama.

    Rim hooks are removed in beta-number (first-column hook length)
    coordinates: subtracting the hook length from one beta number, with sign
    (-1)^(number of beta numbers jumped over).
    """
    if sum(shape) != sum(cycle_type):
        raise ValueError("shape and cycle type must have equal size")
    if not cycle_type:
        return 1
    k = cycle_type[0]
    rest = cycle_type[1:]
    nrows = len(shape) + k  # padding so every removal stays representable
    beta = [
        (shape[i] if i < len(shape) else 0) + (nrows - 1 - i) for i in range(nrows)
    ]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        crossings = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((bset - {b}) | {nb}, reverse=True)
        new_shape = tuple(
            x - (nrows - 1 - i) for i, x in enumerate(new_beta)
        )
        new_shape = tuple(a for a in new_shape if a > 0)
        total += (-1) ** crossings * mn_character(new_shape, rest)
    return total


def _young_subgroup_cycle_types(content: Partition) -> dict[Partition, int]:
    """Cycle types (with counts) of the elements of a Young subgroup.

    The subgroup is the direct product of symmetric groups on blocks of the
    given sizes, so cycle types concatenate across blocks.
    """
    per_block: list[dict[Partition, int]] = []
    for size in content:
        counts: dict[Partition, int] = {}
        for perm in itertools.permutations(range(size)):
            ct = _cycle_type(perm)
            counts[ct] = counts.get(ct, 0) + 1
        per_block.append(counts)
    combined: dict[Partition, int] = {(): 1}
    for counts in per_block:
        nxt: dict[Partition, int] = {}
        for ct1, n1 in combined.items():
            for ct2, n2 in counts.items():
                merged = tuple(sorted(ct1 + ct2, reverse=True))
                nxt[merged] = nxt.get(merged, 0) + n1 * n2
        combined = nxt
    return combined


def _cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    lens = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur]
            n += 1
        lens.append(n)
    return tuple(sorted(lens, reverse=True))


def kostka_by_characters(shape: Partition, content: Partition) -> int:
    """Multiplicity of the irreducible of the given shape in the permutation
    module of content mu, via restriction to the Young subgroup.

    Independent of the tableau count: uses Murnaghan-Nakayama character
    values averaged over the subgroup.
    """
    if sum(shape) != sum(content):
        raise ValueError("size mismatch")
    order = 1
    for size in content:
        for k in range(2, size + 1):
            order *= k
    total = 0
    for ct, n in _young_subgroup_cycle_types(content).items():
        total += n * mn_character(shape, ct)
    if total % order:
        raise ArithmeticError("inner product is not an integer")
    return total // order


def nonsign_partitions(m: int) -> list[Partition]:
    """Partitions of m other than the all-ones one, descending lex order."""
    ones = tuple([1] * m)
    return [p for p in partitions(m) if p != ones]


def unique_bijection(m: int) -> dict[Partition, Partition]:
    """The unique matching of non-sign shapes to proper Young-subgroup
    contents in which each shape occurs with multiplicity 1 in its match.

    Verified unique by exhaustive search over perfect matchings of the
    Kostka = 1 bipartite graph; raises if zero or several matchings exist.
    """
    shapes = nonsign_partitions(m)
    contents = nonsign_partitions(m)
    edges = {
        s: [c for c in contents if kostka(s, c) == 1] for s in shapes
    }
    matchings: list[dict[Partition, Partition]] = []

    def search(idx: int, used: set[Partition], acc: dict[Partition, Partition]):
        if idx == len(shapes):
            matchings.append(dict(acc))
            return
        s = shapes[idx]
        for c in edges[s]:
            if c in used:
                continue
            used.add(c)
            acc[s] = c
            search(idx + 1, used, acc)
            used.discard(c)
            del acc[s]

    search(0, set(), {})
    if len(matchings) != 1:
        raise ValueError(
            f"expected exactly one unit-multiplicity matching for m={m}, "
            f"found {len(matchings)}"
        )
    return matchings[0]


def permutation_module_vectors(m: int) -> dict[Partition, tuple[int, ...]]:
    """Full multiplicity vector of each proper Young permutation module,
    over all partitions of m.  Distinct contents must give distinct vectors
    for the content-indexed description of the modules to be faithful."""
    all_parts = partitions(m)
    return {
        mu: tuple(kostka(lam, mu) for lam in all_parts)
        for mu in nonsign_partitions(m)
    }


@dataclass(frozen=True)
class CxRow:
    """Multiplicity vector of one distinguished representation.

    ``multiplicities`` maps each non-sign shape to its multiplicity in the
    permutation module matched to ``rho``; the entry at ``rho`` itself is 1.
    """

    m: int
    rho: Partition
    multiplicities: dict[Partition, int]

    def vector(self, order: list[Partition] | None = None) -> tuple[int, ...]:
        order = order if order is not None else nonsign_partitions(self.m)
        return tuple(self.multiplicities[p] for p in order)


def cx_multiplicities(m: int) -> list[CxRow]:
    """One row per non-sign shape rho: the decomposition of the permutation
    module matched to rho over all non-sign shapes."""
    shapes = nonsign_partitions(m)
    bij = unique_bijection(m)
    rows = []
    for rho in shapes:
        mult = {rho2: kostka(rho2, bij[rho]) for rho2 in shapes}
        rows.append(CxRow(m, rho, mult))
    return rows


def kostka_table_json(m: int) -> str:
    parts = partitions(m)
    return json.dumps(
        {
            "m": m,
            "shapes": [partition_str(p) for p in parts],
            "table": {
                partition_str(lam): {
                    partition_str(mu): kostka(lam, mu) for mu in parts
                }
                for lam in parts
            },
        },
        indent=2,
    )
