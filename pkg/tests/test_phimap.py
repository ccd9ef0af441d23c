import pytest

from isofam.f2core import Interval, QuotientModel, Vec, basis_vector, interval_vector, pairing, zero
from isofam.family import Subspace, enumerate_family, project_member, zero_subspace
from isofam.phimap import (
    phi_inverse,
    phi_vector,
    profile,
    reachable_set,
    tilde_v,
)


def e(i, d):
    return basis_vector(i, d)


def span(d, *vecs):
    return Subspace.span(list(vecs), d)


class TestProfile:
    def test_zero_space(self):
        p = profile(zero_subspace(2))
        assert p.f == (0, 0, 0, 0)
        assert p.parity == (0, 0, 0, 0)

    def test_interval_member(self):
        x = span(2, e(2, 2), interval_vector(Interval(1, 3), 2))
        p = profile(x)
        assert p.f == (1, 2, 1, 0)
        assert p.parity == (1, 1, 1, 0)

    def test_line(self):
        p = profile(span(1, e(1, 1)))
        assert p.f == (1, 0)
        assert p.parity == (1, 0)

    def test_parity_rule(self):
        # parity bit is 1 exactly for counts 1 or 2 mod 4
        for f in range(12):
            expected = 1 if f % 4 in (1, 2) else 0
            assert (f * (f + 1) // 2) % 2 == expected


class TestPhiVector:
    def test_zero(self):
        assert phi_vector(zero_subspace(3)) == zero(3)

    def test_interval_member(self):
        x = span(2, e(2, 2), interval_vector(Interval(1, 3), 2))
        v = phi_vector(x)
        assert v == interval_vector(Interval(1, 3), 2)
        assert x.contains(v)

    def test_line(self):
        assert phi_vector(span(1, e(1, 1))) == e(1, 1)

    @pytest.mark.parametrize("d", range(6))
    def test_image_lies_in_member(self, d):
        for x in enumerate_family(d):
            assert x.contains(phi_vector(x))

    @pytest.mark.parametrize("d", range(1, 5))
    def test_compatible_with_quotients(self, d):
        for x in enumerate_family(d):
            for i in range(1, 2 * d + 1):
                if not x.contains(e(i, d)):
                    continue
                q = QuotientModel(d, i)
                v = phi_vector(x)
                assert pairing(v, e(i, d)) == 0
                assert q.project(v) == phi_vector(project_member(x, i))


class TestTildeV:
    def test_d0(self):
        assert tilde_v(0) == {zero(0)}

    def test_d1(self):
        assert tilde_v(1) == {zero(1), e(1, 1), e(2, 1)}

    def test_d2(self):
        d = 2
        expected = {
            zero(d),
            e(1, d), e(2, d), e(3, d), e(4, d),
            e(1, d) ^ e(4, d),
            e(2, d) ^ e(4, d),
            e(1, d) ^ e(3, d),
            interval_vector(Interval(1, 3), d),
            interval_vector(Interval(2, 4), d),
        }
        assert tilde_v(d) == expected


class TestReachability:
    def test_origin_distance(self):
        _, dist = reachable_set(2)
        assert dist[zero(2)] == 0

    def test_single_move(self):
        _, dist = reachable_set(1)
        assert dist[e(1, 1)] == 1

    @pytest.mark.parametrize("d", range(6))
    def test_reachable_equals_union(self, d):
        reach, _ = reachable_set(d)
        assert set(reach) == set(tilde_v(d))

    @pytest.mark.parametrize("d", range(4))
    def test_moves_respect_perpendicularity(self, d):
        # every recorded distance is witnessed by a legal predecessor
        _, dist = reachable_set(d)
        for x, n in dist.items():
            if n == 0:
                continue
            assert any(
                pairing(e(j, d), x) == 0
                and (x ^ e(j, d)) in dist
                and dist[x ^ e(j, d)] == n - 1
                for j in range(1, 2 * d + 1)
            )


class TestBijection:
    @pytest.mark.parametrize("d", range(6))
    def test_injective_and_onto(self, d):
        members = enumerate_family(d)
        images = {phi_vector(x) for x in members}
        assert len(images) == len(members)
        assert images == set(tilde_v(d))

    def test_inverse_of_zero(self):
        assert phi_inverse(zero(2), 2) == zero_subspace(2)

    def test_inverse_of_line_image(self):
        assert phi_inverse(e(1, 1), 1) == span(1, e(1, 1))

    def test_inverse_round_trip_d2(self):
        v = e(1, 2) ^ e(3, 2)
        x = phi_inverse(v, 2)
        assert phi_vector(x) == v
        assert x in set(enumerate_family(2))

    def test_inverse_rejects_outside_range(self):
        with pytest.raises(KeyError):
            phi_inverse(e(1, 2) ^ e(2, 2), 2)
