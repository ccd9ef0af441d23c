"""End-to-end acceptance gate.

Eight criteria, one test each, every test emitting a single PASS/FAIL line
to the terminal.  Everything runs on exact integer arithmetic; the only
tolerances are the two wall-clock budgets stated inline.
"""

import random
import time

import pytest

from isofam import excdata, symgrp, verify, zbasis
from isofam.f2core import Interval, basis_vector, interval_vector
from isofam.family import Subspace, enumerate_family, zero_subspace
from isofam.phimap import phi_vector, reachable_set, tilde_v
from isofam.zbasis import decompose, recompose, smith_normal_form

D_MAX = 5


def _report(capsys, name, ok, detail=""):
    line = f"{name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    with capsys.disabled():
        print(line)
    assert ok, line


def test_criterion_1_small_enumerations(capsys):
    start = time.perf_counter()
    e = basis_vector
    got1 = set(enumerate_family(1))
    want1 = {
        zero_subspace(1),
        Subspace.span([e(1, 1)], 1),
        Subspace.span([e(2, 1)], 1),
    }
    d = 2
    e13 = interval_vector(Interval(1, 3), d)
    e24 = interval_vector(Interval(2, 4), d)
    got2 = set(enumerate_family(d))
    want2 = {
        zero_subspace(d),
        Subspace.span([e(1, d)], d),
        Subspace.span([e(2, d)], d),
        Subspace.span([e(3, d)], d),
        Subspace.span([e(4, d)], d),
        Subspace.span([e(1, d), e(4, d)], d),
        Subspace.span([e(2, d), e13], d),
        Subspace.span([e(2, d), e(4, d)], d),
        Subspace.span([e(1, d), e(3, d)], d),
        Subspace.span([e(3, d), e24], d),
    }
    elapsed = time.perf_counter() - start
    ok = got1 == want1 and got2 == want2 and elapsed < 1.0
    _report(capsys, "base enumerations exact", ok, f"{elapsed:.3f}s")


def test_criterion_2_bijection(capsys):
    start = time.perf_counter()
    ok = True
    for d in range(D_MAX + 1):
        members = enumerate_family(d)
        union = tilde_v(d)
        images = {phi_vector(x) for x in members}
        ok = ok and len(members) == len(union) == len(images) and images == union
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 300.0
    _report(
        capsys,
        f"member-to-vector map bijective for d <= {D_MAX}",
        ok,
        f"{elapsed:.1f}s",
    )


def test_criterion_3_unimodular(capsys):
    ok = True
    detail = []
    for d in range(D_MAX + 1):
        cert = zbasis.basis_matrix(d)
        ok = ok and abs(cert.determinant) == 1
        detail.append(f"d={d}:det={cert.determinant}")
        if d <= 3:
            ok = ok and smith_normal_form(cert.matrix) == [1] * len(cert.matrix)
    _report(
        capsys,
        f"membership matrices unimodular for d <= {D_MAX}",
        ok,
        " ".join(detail),
    )


def test_criterion_4_reachability(capsys):
    ok = all(
        set(reachable_set(d)[0]) == set(tilde_v(d)) for d in range(D_MAX + 1)
    )
    _report(capsys, f"step-reachable set equals member union for d <= {D_MAX}", ok)


def test_criterion_5_structural_properties(capsys):
    checks = [verify.check_base_enumerations()]
    for d in range(D_MAX + 1):
        checks.append(verify.check_family(d))
        checks.append(verify.check_phi(d))
    flat = [c for group in checks for c in group]
    failed = [c.name for c in flat if not c.passed]
    _report(
        capsys,
        f"per-member structural properties for d <= {D_MAX}",
        not failed,
        f"{len(flat)} checks" + (f", failed: {failed}" if failed else ""),
    )


def test_criterion_6_stored_tables(capsys):
    reports = [excdata.verify_table(t) for t in excdata.all_tables()]
    failed = [
        (r.n_c, c.name) for r in reports for c in r.checks if not c.passed
    ]
    _report(
        capsys,
        "all seven stored multiplicity tables verify",
        not failed,
        f"sizes {[t.n_c for t in excdata.all_tables()]}"
        + (f", failed: {failed}" if failed else ""),
    )


def test_criterion_7_symmetric_group_cross_checks(capsys):
    ok = True
    for n_c in sorted(excdata.CX_DEGREE):
        cc = excdata.cross_check_cx(n_c)
        ok = ok and cc.passed
        ok = ok and excdata.verify_printed_sums(n_c).passed
    for m in range(1, 6):
        for lam in symgrp.partitions(m):
            for mu in symgrp.partitions(m):
                ok = ok and symgrp.kostka(lam, mu) == symgrp.kostka_by_characters(
                    lam, mu
                )
    _report(capsys, "multiplicity blocks and two-route Kostka values agree", ok)


@pytest.mark.parametrize("d", range(5))
def test_criterion_8_round_trips(capsys, d):
    cert = zbasis.basis_matrix(d)
    rng = random.Random(97 + d)
    ok = True
    for _ in range(100):
        f = {v: rng.randint(-9, 9) for v in cert.column_order}
        ok = ok and recompose(decompose(f, d), d) == f
    _report(capsys, f"100 random decomposition round-trips at d={d}", ok)
