"""Full structural check suite: every lemma-style property of the family,
the map, the integer basis, the symmetric-group block, and the stored
exceptional tables, each reported as one named pass/fail line."""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import excdata, family, phimap, symgrp, zbasis
from .f2core import QuotientModel, Vec, basis_vector, interval_vector, pairing
from .family import Subspace, enumerate_family


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f" ({self.detail})" if self.detail else ""
        return f"{self.name}: {status}{suffix}"


def _ok(name: str, violations: list, detail: str = "") -> Check:
    if violations:
        shown = "; ".join(str(v) for v in violations[:3])
        more = f" (+{len(violations) - 3} more)" if len(violations) > 3 else ""
        return Check(name, False, f"{len(violations)} violations: {shown}{more}")
    return Check(name, True, detail)


def check_base_enumerations() -> list[Check]:
    """The hand-checkable enumerations for d = 0, 1, 2."""
    out = []
    f0 = enumerate_family(0)
    out.append(
        Check("enumeration d=0 is the zero space alone", f0 == (family.zero_subspace(0),))
    )
    f1 = set(enumerate_family(1))
    want1 = {
        family.zero_subspace(1),
        Subspace.span([basis_vector(1, 1)], 1),
        Subspace.span([basis_vector(2, 1)], 1),
    }
    out.append(Check("enumeration d=1 is {0, <e1>, <e2>}", f1 == want1))
    f2 = set(enumerate_family(2))
    e = lambda i: basis_vector(i, 2)
    e13 = interval_vector(family.Interval(1, 3), 2)
    e24 = interval_vector(family.Interval(2, 4), 2)
    want2 = {
        family.zero_subspace(2),
        Subspace.span([e(1)], 2),
        Subspace.span([e(2)], 2),
        Subspace.span([e(3)], 2),
        Subspace.span([e(4)], 2),
        Subspace.span([e(1), e(4)], 2),
        Subspace.span([e(2), e13], 2),
        Subspace.span([e(2), e(4)], 2),
        Subspace.span([e(1), e(3)], 2),
        Subspace.span([e(3), e24], 2),
    }
    out.append(Check("enumeration d=2 is the ten listed subspaces", f2 == want2))
    return out


def check_family(d: int) -> list[Check]:
    members = enumerate_family(d)
    out = []
    bad_iso = [x for x in members if not x.is_isotropic()]
    out.append(_ok(f"all members isotropic (d={d})", bad_iso))

    bad_basis = []
    for x in members:
        ivs = sorted(x.alpha)
        if len(ivs) != x.dim:
            bad_basis.append(x)
            continue
        if Subspace.span([interval_vector(iv, d) for iv in ivs], d) != x:
            bad_basis.append(x)
    out.append(_ok(f"interval vectors form a basis of each member (d={d})", bad_basis))

    bad_inner = []
    for x in members:
        for iv in x.alpha:
            if iv.a < iv.b and not any(
                x.contains(basis_vector(i, d)) for i in range(iv.a + 1, iv.b)
            ):
                bad_inner.append((x, iv))
    out.append(
        _ok(f"wide member intervals contain an inner basis vector (d={d})", bad_inner)
    )

    bad_proj = []
    if d >= 1:
        lower = set(enumerate_family(d - 1))
        for x in members:
            for i in range(1, 2 * d + 1):
                if x.contains(basis_vector(i, d)):
                    if family.project_member(x, i) not in lower:
                        bad_proj.append((x, i))
    out.append(_ok(f"quotients of members stay in the family (d={d})", bad_proj))

    bad_ext = []
    fam_set = set(members)
    for x in members:
        ext = family.extend_to_lagrangian(x)
        good = (
            ext.dim == d
            and ext in fam_set
            and all(ext.contains(v) for v in x.basis())
        )
        if not good:
            bad_ext.append(x)
    out.append(_ok(f"every member extends to a Lagrangian member (d={d})", bad_ext))

    out.append(_ok(f"staircase structure of member intervals (d={d})", _staircase_violations(d)))

    bad_par = []
    for x in members:
        x0, x1 = family.parity_split(x)
        if x0.dim + x1.dim != x.dim:
            bad_par.append((x, "not a direct sum"))
            continue
        if not all(x.contains(v) for v in x0.basis() + x1.basis()):
            bad_par.append((x, "parts escape the member"))
            continue
        # each parity part annihilates the other; on Lagrangian members it
        # is exactly the perpendicular of the other inside its parity
        # subspace (for smaller members only the inclusion can hold, by a
        # dimension count)
        evens = [Vec(d, b) for b in _parity_masks(d, 0)]
        odds = [Vec(d, b) for b in _parity_masks(d, 1)]
        perp_of_odd = {
            v for v in evens if all(pairing(v, w) == 0 for w in x1.basis())
        }
        perp_of_even = {
            v for v in odds if all(pairing(v, w) == 0 for w in x0.basis())
        }
        if not (
            set(x0.vectors()) <= perp_of_odd and set(x1.vectors()) <= perp_of_even
        ):
            bad_par.append((x, "parts fail to annihilate each other"))
        elif x.dim == d and (
            set(x0.vectors()) != perp_of_odd or set(x1.vectors()) != perp_of_even
        ):
            bad_par.append((x, "perp determination fails on a Lagrangian member"))
    out.append(_ok(f"parity decomposition and perp determination (d={d})", bad_par))
    return out


def _parity_masks(d: int, parity: int) -> list[int]:
    """All bitmasks supported on indices of the given parity (1 = odd e_i)."""
    idxs = [i for i in range(1, 2 * d + 1) if i % 2 == (parity % 2)]
    masks = [0]
    for i in idxs:
        masks += [m | (1 << (i - 1)) for m in masks]
    return masks


def _staircase_violations(d: int) -> list:
    bad = []
    for x in enumerate_family(d):
        if x.dim == 0:
            continue
        alpha = sorted(x.alpha)
        i = min(iv.a for iv in alpha)
        j = min(
            k for k in range(1, 2 * d + 1) if x.contains(basis_vector(k, d))
        )
        if i > j:
            bad.append((x, "i > j"))
            continue
        for h in range(i, j + 1):
            ends = [iv.b for iv in alpha if iv.a == h]
            if len(ends) != 1:
                bad.append((x, f"{len(ends)} intervals start at {h}"))
                continue
            tilde_h = ends[0]
            if tilde_h < j:
                bad.append((x, f"interval [{h},{tilde_h}] ends before {j}"))
            if j < 2 * d and h < j and tilde_h <= j:
                bad.append((x, f"interval [{h},{tilde_h}] should pass {j}"))
        if j < 2 * d:
            for iv in alpha:
                if iv.a == j + 1 and iv.b > j + 1:
                    bad.append((x, f"forbidden interval {iv}"))
    return bad


def check_phi(d: int) -> list[Check]:
    members = enumerate_family(d)
    out = []

    bad_member = [x for x in members if not x.contains(phimap.phi_vector(x))]
    out.append(_ok(f"image vector lies in its member (d={d})", bad_member))

    bad_compat = []
    for x in members:
        for i in range(1, 2 * d + 1):
            if not x.contains(basis_vector(i, d)):
                continue
            q = QuotientModel(d, i)
            v = phimap.phi_vector(x)
            if pairing(v, basis_vector(i, d)) != 0:
                bad_compat.append((x, i, "not perpendicular"))
                continue
            child = family.project_member(x, i)
            if q.project(v) != phimap.phi_vector(child):
                bad_compat.append((x, i, "projection mismatch"))
    out.append(_ok(f"image vector compatible with quotients (d={d})", bad_compat))

    images = {phimap.phi_vector(x) for x in members}
    tv = phimap.tilde_v(d)
    out.append(
        Check(
            f"member map injective and onto the union (d={d})",
            len(images) == len(members) and images == set(tv),
            f"{len(members)} members, {len(tv)} union elements",
        )
    )

    reach, dist = phimap.reachable_set(d)
    out.append(
        Check(
            f"BFS closure equals the union of members (d={d})",
            set(reach) == set(tv),
            f"{len(reach)} reachable",
        )
    )
    return out


def check_zbasis(
    d: int,
    rng_seed: int = 20260823,
    n_random: int = 100,
    roundtrip: bool = True,
) -> list[Check]:
    out = []
    cert = zbasis.basis_matrix(d)
    out.append(
        Check(
            f"membership matrix square with determinant +-1 (d={d})",
            abs(cert.determinant) == 1,
            f"{len(cert.matrix)}x{len(cert.matrix)}, det={cert.determinant}",
        )
    )
    if d <= 3:
        diag = zbasis.smith_normal_form(cert.matrix)
        out.append(
            Check(
                f"Smith normal form is the identity (d={d})",
                diag == [1] * len(cert.matrix),
            )
        )
    if roundtrip:
        rng = random.Random(rng_seed + d)
        bad = 0
        for _ in range(n_random):
            f = {v: rng.randint(-5, 5) for v in cert.column_order}
            coeffs = zbasis.decompose(f, d)
            if zbasis.recompose(coeffs, d) != f:
                bad += 1
        out.append(
            Check(
                f"decompose/recompose round-trips on {n_random} random functions (d={d})",
                bad == 0,
                f"{bad} failures",
            )
        )
    return out


def check_zbasis_induction(d: int) -> Check:
    """Constructive version of the generation argument: for every nonzero
    union element x, one BFS predecessor x' and pivot j exist with
    x + x' = e_j, and the point-mass sum at {x, x'} decomposes using only
    members that are full preimages through pivot j."""
    cert = zbasis.basis_matrix(d)
    _, dist = phimap.reachable_set(d)
    bad = []
    for x in cert.column_order:
        if dist[x] == 0:
            continue
        found = False
        for j in range(1, 2 * d + 1):
            e_j = basis_vector(j, d)
            if pairing(e_j, x) != 0:
                continue
            xp = x ^ e_j
            if xp not in dist or dist[xp] != dist[x] - 1:
                continue
            f = {v: 0 for v in cert.column_order}
            f[x] += 1
            f[xp] += 1
            coeffs = zbasis.decompose(f, d)
            support = [s for s, c in coeffs.items() if c != 0]
            if all(s.contains(e_j) for s in support):
                found = True
                break
        if not found:
            bad.append(x)
    return _ok(f"point masses generated through a single pivot (d={d})", bad)


def check_symgrp() -> list[Check]:
    out = []
    for m in (3, 4, 5):
        bij = symgrp.unique_bijection(m)
        out.append(
            Check(
                f"unique unit-multiplicity matching is the identity (m={m})",
                all(k == v for k, v in bij.items()),
            )
        )
        vecs = symgrp.permutation_module_vectors(m)
        out.append(
            Check(
                f"proper Young permutation modules pairwise distinct (m={m})",
                len(set(vecs.values())) == len(vecs),
            )
        )
        mismatches = []
        for lam in symgrp.partitions(m):
            for mu in symgrp.partitions(m):
                a = symgrp.kostka(lam, mu)
                b = symgrp.kostka_by_characters(lam, mu)
                if a != b:
                    mismatches.append((lam, mu, a, b))
        out.append(
            _ok(f"tableau and character Kostka computations agree (m={m})", mismatches)
        )
    return out


def check_exceptional() -> list[Check]:
    out = []
    for t in excdata.all_tables():
        rep = excdata.verify_table(t)
        for c in rep.checks:
            out.append(
                Check(f"table n_c={t.n_c}: {c.name}", c.passed, c.detail)
            )
    for n_c, m in sorted(excdata.CX_DEGREE.items()):
        rep = excdata.cross_check_cx(n_c)
        out.append(
            Check(
                f"table n_c={n_c}: leading block matches symmetric-group rows (m={m})",
                rep.passed,
                rep.detail or ", ".join(f"{k}->{v}" for k, v in rep.column_partitions.items()),
            )
        )
        c = excdata.verify_printed_sums(n_c)
        out.append(Check(f"table n_c={n_c}: {c.name}", c.passed, c.detail))
    for n_c, m in sorted(excdata.CX_DEGREE.items()):
        t = excdata.TABLES[n_c]
        k = sum(1 for c in t.row_class if c == excdata.CX)
        out.append(
            Check(
                f"table n_c={n_c}: count of distinguished rows matches shapes (m={m})",
                k == len(symgrp.nonsign_partitions(m)),
                f"{k} rows",
            )
        )
    return out


def worker_count() -> int:
    raw = os.environ.get("ISOFAM_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_all(d_max: int = 5) -> list[Check]:
    """Every check for all d <= d_max plus the tables; deterministic order."""
    jobs = [check_base_enumerations, check_symgrp, check_exceptional]
    for d in range(d_max + 1):
        jobs.append(lambda d=d: check_family(d))
        jobs.append(lambda d=d: check_phi(d))
        jobs.append(lambda d=d: check_zbasis(d, roundtrip=d <= 4))
    for d in range(min(d_max, 3) + 1):
        jobs.append(lambda d=d: [check_zbasis_induction(d)])
    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(lambda job: job(), jobs))
    else:
        results = [job() for job in jobs]
    out: list[Check] = []
    for r in results:
        out.extend(r)
    return out
