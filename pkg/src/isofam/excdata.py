"""Hardcoded multiplicity tables for families in exceptional Weyl groups.

One table per family size n in {1, 2, 3, 4, 5, 11, 17}.  Each table stores
the printed column labels, the integer matrix, the position of the marked
unit entry in every row, and the row classification.  The tables are literal
data; nothing here recomputes them from representation theory.  The leading
block of the n in {4, 11, 17} tables is independently reproduced by the
symmetric-group machinery in :mod:`isofam.symgrp` and cross-checked by
:func:`cross_check_cx`.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import symgrp
from .symgrp import Partition, partition_str
from .zbasis import bareiss_determinant

SPECIAL = "special"
CX = "cx"
INTERMEDIATE = "intermediate"
CONSTRUCTIBLE = "constructible"


@dataclass(frozen=True)
class FamilyTable:
    weyl_types: tuple[str, ...]
    n_c: int
    column_labels: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]
    marks: tuple[int, ...]  # 0-based column of the marked unit entry per row
    row_class: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "weyl_types": list(self.weyl_types),
            "n_c": self.n_c,
            "column_labels": list(self.column_labels),
            "matrix": [list(row) for row in self.matrix],
            "marks": [c + 1 for c in self.marks],
            "row_class": list(self.row_class),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["row", "class"] + list(self.column_labels))
        for r, row in enumerate(self.matrix):
            w.writerow([f"r{r + 1}", self.row_class[r]] + list(row))
        return buf.getvalue()


def _rows(*rows: str) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(t) for t in row.split()) for row in rows)


_PAIR_LABELS_5 = ("(1,1)", "(1,r)", "(g2,1)", "(g3,1)", "(1,e)")

TABLES: dict[int, FamilyTable] = {
    1: FamilyTable(
        weyl_types=("G2", "F4", "E6", "E7", "E8"),
        n_c=1,
        column_labels=("(1,1)",),
        matrix=_rows("1"),
        marks=(0,),
        row_class=(SPECIAL,),
    ),
    2: FamilyTable(
        weyl_types=("E7", "E8"),
        n_c=2,
        column_labels=("(1,1)", "(1,e)"),
        matrix=_rows("1 0", "1 1"),
        marks=(0, 1),
        row_class=(SPECIAL, CONSTRUCTIBLE),
    ),
    3: FamilyTable(
        weyl_types=("F4", "E6", "E7", "E8"),
        n_c=3,
        column_labels=("(1,1)", "(g2,1)", "(1,e)"),
        matrix=_rows("1 0 0", "1 1 0", "1 0 1"),
        marks=(0, 1, 2),
        row_class=(SPECIAL, CONSTRUCTIBLE, CONSTRUCTIBLE),
    ),
    4: FamilyTable(
        weyl_types=("G2",),
        n_c=4,
        column_labels=("(1,1)", "(1,r)", "(g2,1)", "(g3,1)"),
        matrix=_rows("1 0 0 0", "1 1 0 0", "1 1 1 0", "1 0 1 1"),
        marks=(0, 1, 2, 3),
        row_class=(CX, CX, CONSTRUCTIBLE, CONSTRUCTIBLE),
    ),
    5: FamilyTable(
        weyl_types=("E6", "E7", "E8"),
        n_c=5,
        column_labels=_PAIR_LABELS_5,
        matrix=_rows(
            "1 0 0 0 0",
            "1 1 0 0 0",
            "1 1 1 0 0",
            "1 0 1 1 0",
            "1 2 0 0 1",
        ),
        marks=(0, 1, 2, 3, 4),
        row_class=(
            SPECIAL,
            INTERMEDIATE,
            CONSTRUCTIBLE,
            CONSTRUCTIBLE,
            CONSTRUCTIBLE,
        ),
    ),
    11: FamilyTable(
        weyl_types=("F4",),
        n_c=11,
        column_labels=(
            "12_1", "9_3", "6_2", "1_3", "16_1", "9_2",
            "4_4", "6_1", "4_3", "4_1", "1_2",
        ),
        matrix=_rows(
            "1 0 0 0 0 0 0 0 0 0 0",
            "1 1 0 0 0 0 0 0 0 0 0",
            "1 1 1 0 0 0 0 0 0 0 0",
            "1 2 1 1 0 0 0 0 0 0 0",
            "1 1 1 0 1 0 0 0 0 0 0",
            "1 0 1 0 1 1 0 0 0 0 0",
            "1 2 1 1 1 0 1 0 0 0 0",
            "1 1 0 0 1 0 1 1 0 0 0",
            "1 0 0 0 1 1 0 1 1 0 0",
            "1 1 1 0 2 1 0 0 0 1 0",
            "1 0 1 0 1 2 0 0 1 0 1",
        ),
        marks=tuple(range(11)),
        row_class=(CX,) * 4 + (INTERMEDIATE,) * 2 + (CONSTRUCTIBLE,) * 5,
    ),
    17: FamilyTable(
        weyl_types=("E8",),
        n_c=17,
        column_labels=(
            "4480", "5670", "4536", "1680", "1400", "70", "7168", "5600",
            "3150", "4200", "2688", "2016", "448", "1134", "1344", "420", "168",
        ),
        matrix=_rows(
            "1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
            "1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
            "1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
            "1 2 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0",
            "1 2 2 1 1 0 0 0 0 0 0 0 0 0 0 0 0",
            "1 3 3 3 2 1 0 0 0 0 0 0 0 0 0 0 0",
            "1 1 1 0 0 0 1 0 0 0 0 0 0 0 0 0 0",
            "1 2 2 1 1 0 1 1 0 0 0 0 0 0 0 0 0",
            "1 1 1 0 0 0 1 1 1 0 0 0 0 0 0 0 0",
            "1 1 1 0 1 0 1 1 0 1 0 0 0 0 0 0 0",
            "1 2 2 1 1 0 2 2 0 1 1 0 0 0 0 0 0",
            "1 1 1 0 0 0 2 1 1 1 1 1 0 0 0 0 0",
            "1 3 3 3 2 1 1 2 0 0 0 0 1 0 0 0 0",
            "1 2 1 1 0 0 1 2 1 0 0 0 1 1 0 0 0",
            "1 1 0 0 0 0 1 1 1 1 0 0 0 1 1 0 0",
            "1 0 0 0 0 0 1 0 1 1 0 1 0 0 1 1 0",
            "1 1 1 0 1 0 1 1 0 2 0 0 0 0 1 0 1",
        ),
        marks=tuple(range(17)),
        row_class=(CX,) * 6 + (INTERMEDIATE,) * 4 + (CONSTRUCTIBLE,) * 7,
    ),
}

# Direct-sum presentations printed alongside the tables, as label -> mult
# maps; used as an internal consistency check against the leading matrix rows.
PRINTED_SUMS: dict[int, tuple[dict[str, int], ...]] = {
    4: (
        {"(1,1)": 1},
        {"(1,1)": 1, "(1,r)": 1},
    ),
    11: (
        {"12_1": 1},
        {"12_1": 1, "9_3": 1},
        {"12_1": 1, "9_3": 1, "6_2": 1},
        {"12_1": 1, "9_3": 2, "6_2": 1, "1_3": 1},
    ),
    17: (
        {"4480": 1},
        {"4480": 1, "5670": 1},
        {"4480": 1, "5670": 1, "4536": 1},
        {"4480": 1, "5670": 2, "4536": 1, "1680": 1},
        {"4480": 1, "5670": 2, "4536": 2, "1400": 1, "1680": 1},
        {"4480": 1, "5670": 3, "4536": 3, "1400": 2, "1680": 3, "70": 1},
    ),
}

# family size -> symmetric group degree for the cross-checked tables
CX_DEGREE = {4: 3, 11: 4, 17: 5}


class TableNotFound(KeyError):
    pass


def family_table(weyl_type: str | None = None, n_c: int | None = None) -> FamilyTable:
    """Look up a stored table by family size, optionally validating the type."""
    if n_c is None:
        if weyl_type is None:
            raise TableNotFound("need a Weyl type or a family size")
        candidates = {4: "G2", 11: "F4", 17: "E8"}
        for size, wt in candidates.items():
            if wt == weyl_type:
                return TABLES[size]
        raise TableNotFound(
            f"type {weyl_type!r} has several stored tables; pass n_c explicitly"
        )
    if n_c not in TABLES:
        raise TableNotFound(f"no stored table with n_c={n_c}")
    t = TABLES[n_c]
    if weyl_type is not None and weyl_type not in t.weyl_types:
        raise TableNotFound(f"n_c={n_c} is not realized in type {weyl_type}")
    return t


def all_tables() -> list[FamilyTable]:
    return [TABLES[k] for k in sorted(TABLES)]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class TableReport:
    n_c: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_table(t: FamilyTable) -> TableReport:
    """Structural verification: marked unit entries forming a row/column
    bijection, unitriangularity relative to the marks, determinant 1, and a
    unit first row whenever it is classified special."""
    rep = TableReport(t.n_c)
    n = t.n_c
    shapes_ok = (
        len(t.matrix) == n
        and all(len(row) == n for row in t.matrix)
        and len(t.marks) == n
        and len(t.row_class) == n
        and len(t.column_labels) == n
    )
    rep.checks.append(CheckResult("shape", shapes_ok, f"{n}x{n}"))
    bijective = len(set(t.marks)) == n
    units = all(t.matrix[r][c] == 1 for r, c in enumerate(t.marks))
    rep.checks.append(
        CheckResult("marks bijective on unit entries", bijective and units)
    )
    violations = [
        (r + 1, c + 1)
        for r, row in enumerate(t.matrix)
        for c in range(t.marks[r] + 1, n)
        if row[c] != 0
    ]
    rep.checks.append(
        CheckResult(
            "unitriangular past the marks",
            not violations,
            "" if not violations else f"nonzero at {violations}",
        )
    )
    det = bareiss_determinant(t.matrix)
    rep.checks.append(CheckResult("determinant 1", det == 1, f"det={det}"))
    if t.row_class[0] == SPECIAL:
        unit = t.matrix[0] == tuple([1] + [0] * (n - 1))
        rep.checks.append(CheckResult("special row is a unit vector", unit))
    return rep


@dataclass
class CrossCheckReport:
    n_c: int
    m: int
    passed: bool
    column_partitions: dict[str, str] = field(default_factory=dict)
    row_partitions: list[str] = field(default_factory=list)
    detail: str = ""


def cross_check_cx(n_c: int) -> CrossCheckReport:
    """Match the leading block of a table against the symmetric-group rows.

    Searches all assignments of shapes to the leading columns for one under
    which the block rows are exactly the multiplicity vectors produced by
    :func:`isofam.symgrp.cx_multiplicities`; exactly one assignment must
    survive.
    """
    if n_c not in CX_DEGREE:
        raise TableNotFound(f"n_c={n_c} has no symmetric-group block")
    m = CX_DEGREE[n_c]
    t = TABLES[n_c]
    k = sum(1 for c in t.row_class if c == CX)
    block = [t.matrix[r][:k] for r in range(k)]
    shapes = symgrp.nonsign_partitions(m)
    assert len(shapes) == k
    rows = symgrp.cx_multiplicities(m)
    import itertools

    solutions = []
    for perm in itertools.permutations(shapes):
        # column c of the block corresponds to shape perm[c]
        translated = [
            {perm[c]: block[r][c] for c in range(k)} for r in range(k)
        ]
        matching: list[Partition] = []
        used: set[Partition] = set()
        ok = True
        for r in range(k):
            hits = [
                row.rho
                for row in rows
                if row.rho not in used and row.multiplicities == translated[r]
            ]
            if len(hits) != 1:
                ok = False
                break
            matching.append(hits[0])
            used.add(hits[0])
        if ok:
            solutions.append((perm, matching))
    if len(solutions) != 1:
        return CrossCheckReport(
            n_c,
            m,
            False,
            detail=f"{len(solutions)} consistent column assignments (need 1)",
        )
    perm, matching = solutions[0]
    return CrossCheckReport(
        n_c,
        m,
        True,
        column_partitions={
            t.column_labels[c]: partition_str(perm[c]) for c in range(k)
        },
        row_partitions=[partition_str(p) for p in matching],
    )


def verify_printed_sums(n_c: int) -> CheckResult:
    """The direct sums printed next to a table must equal its leading rows."""
    t = TABLES[n_c]
    sums = PRINTED_SUMS[n_c]
    for r, summ in enumerate(sums):
        vec = tuple(summ.get(label, 0) for label in t.column_labels)
        if vec != t.matrix[r]:
            return CheckResult(
                f"printed sums match rows (n_c={n_c})",
                False,
                f"row {r + 1}: {vec} != {t.matrix[r]}",
            )
    return CheckResult(f"printed sums match rows (n_c={n_c})", True)


def tables_to_json() -> str:
    return json.dumps({str(k): t.to_json_dict() for k, t in TABLES.items()}, indent=2)
