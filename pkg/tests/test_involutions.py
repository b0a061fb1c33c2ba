import itertools

import pytest

from shifted_kschur.enumeration import EnumSpec, enumerate_fillings
from shifted_kschur.involutions import (NuSubsetState, bottom_removable_box,
                                        certificate_covers, iota,
                                        minimal_tableau, pairing_certificate,
                                        pi, verify_involution)
from shifted_kschur.shapes import (SkewShape, StrictPartition,
                                   strict_partitions_up_to_weight,
                                   strict_subpartitions)
from tests.conftest import rows


def sp(*parts):
    return StrictPartition(tuple(parts))


class TestMinimalTableau:
    def test_straight_p(self, shape_421):
        assert minimal_tableau(shape_421, "P", 3) == \
            rows(shape_421, 3, "P", "1 1 1 1 | 2 2 | 3")

    def test_straight_q(self, shape_421):
        assert minimal_tableau(shape_421, "Q", 3) == \
            rows(shape_421, 3, "Q", "1' 1 1 1 | 2' 2 | 3'")

    def test_skew_p(self, skew_6431_42):
        assert minimal_tableau(skew_6431_42, "P", 5) == \
            rows(skew_6431_42, 5, "P", "1' 1 | 1' 1 | 1 1 2' | 2")

    def test_skew_q(self, skew_6431_42):
        assert minimal_tableau(skew_6431_42, "Q", 5) == \
            rows(skew_6431_42, 5, "Q", "1' 1 | 1' 1 | 1' 1 2' | 2'")

    def test_empty_shape(self):
        t = minimal_tableau(SkewShape(sp()), "P", 1)
        assert t.size() == 0

    def test_raises_when_no_tableau_exists(self):
        with pytest.raises(ValueError):
            minimal_tableau(SkewShape(sp(2, 1)), "P", 1)

    def test_greedy_matches_exhaustive_minimum(self):
        # the greedy fill must achieve the minimum total entry value and
        # the unique minimum-size single tableau among all candidates
        for lam in strict_partitions_up_to_weight(5):
            for mu in strict_subpartitions(lam):
                shape = SkewShape(lam, mu)
                for family, n in itertools.product("PQ", (1, 2)):
                    spec = EnumSpec(shape, n, family, "single")
                    singles = list(enumerate_fillings(spec))
                    try:
                        tmin = minimal_tableau(shape, family, n)
                    except ValueError:
                        assert not singles, (lam, mu, family, n)
                        continue
                    assert singles, (lam, mu, family, n)
                    def total(t):
                        return sum(sum((e + 1) // 2 for e in cell)
                                   for cell in t.cells.values())
                    assert total(tmin) == min(total(t) for t in singles)

    def test_greedy_fails_iff_empty(self):
        for lam in strict_partitions_up_to_weight(4):
            shape = SkewShape(lam)
            for family, n in itertools.product("PQ", (1, 2)):
                spec = EnumSpec(shape, n, family, "set-valued")
                empty = next(iter(enumerate_fillings(spec)), None) is None
                try:
                    minimal_tableau(shape, family, n)
                    assert not empty
                except ValueError:
                    assert empty


class TestIota:
    def test_straight_examples(self, shape_421, set_valued_examples):
        images = {
            "T1": rows(shape_421, 3, "P", "1 1 1 3' | 2 3' | 3"),
            "T2": rows(shape_421, 3, "P", "1 1,2' 2 2,3' | 2 3' | 3"),
            "T3": rows(shape_421, 3, "Q", "1' 1 1 1 | 2' 2 | 3"),
            "T4": rows(shape_421, 3, "Q", "1' 1 1 1,2,3 | 2',2 2 | 3'"),
        }
        for key, T in set_valued_examples.items():
            assert iota(T) == images[key], key
            assert iota(images[key]) == T, key

    def test_skew_q_examples(self, skew_6431_42):
        t3 = rows(skew_6431_42, 5, "Q", "1' 1,2,3 | 1' 1 | 1' 1 2' | 2'")
        t3_image = rows(skew_6431_42, 5, "Q", "1' 2,3 | 1' 1 | 1' 1 2' | 2'")
        t4 = rows(skew_6431_42, 5, "Q", "3' 3,4,5 | 1' 3',4' | 1' 1 4',5 | 2'")
        t4_image = rows(skew_6431_42, 5, "Q",
                        "1',3' 3,4,5 | 1' 3',4' | 1' 1 4',5 | 2'")
        assert iota(t3) == t3_image
        assert iota(t4) == t4_image
        assert iota(t3_image) == t3
        assert iota(t4_image) == t4

    def test_skew_p_examples(self, skew_6431_42):
        # the first differing box gets the minimal content toggled, so the
        # image of a tableau disagreeing first at (3,4) inserts a 1 there
        t1 = rows(skew_6431_42, 5, "P", "3,4' 4,5' | 1' 4',4 | 1 2',4 5' | 5")
        assert iota(t1) == rows(skew_6431_42, 5, "P",
                                "3,4' 4,5' | 1' 4',4 | 1 1,2',4 5' | 5")
        t2 = rows(skew_6431_42, 5, "P", "1' 3',5 | 1' 1 | 1 1 4 | 2")
        assert iota(t2) == rows(skew_6431_42, 5, "P",
                                "1' 3',5 | 1' 1 | 1 1 2',4 | 2")

    def test_undefined_on_minimal(self, shape_421):
        with pytest.raises(ValueError):
            iota(minimal_tableau(shape_421, "P", 3))

    def test_one_box_q_swap(self):
        shape = SkewShape(sp(1))
        t = rows(shape, 1, "Q", "1")
        assert iota(t) == rows(shape, 1, "Q", "1',1")
        assert iota(iota(t)) == t


class TestVerifyInvolution:
    def test_small_sweep(self):
        for lam in strict_partitions_up_to_weight(4):
            for family, n in itertools.product("PQ", (1, 2)):
                try:
                    rep = verify_involution(SkewShape(lam), family, n)
                except ValueError:
                    continue
                assert rep.ok, rep.violations[:3]

    def test_skew(self):
        rep = verify_involution(SkewShape.parse("3,1/1"), "Q", 2)
        assert rep.ok and rep.checked > 0

    def test_empty_shape_is_vacuous(self):
        rep = verify_involution(SkewShape(sp()), "P", 1)
        assert rep.ok and rep.checked == 0


class TestPi:
    def test_bottom_box(self):
        assert bottom_removable_box(sp(7, 5, 4, 2)) == (4, 5)
        assert bottom_removable_box(sp(1)) == (1, 1)

    def test_involution_without_fixed_points(self):
        for mu in strict_partitions_up_to_weight(6):
            if not mu:
                continue
            from shifted_kschur.shapes import removable_boxes
            rem = sorted(removable_boxes(mu))
            for k in range(len(rem) + 1):
                for chosen in itertools.combinations(rem, k):
                    st = NuSubsetState(mu, frozenset(chosen))
                    im = pi(st)
                    assert im != st
                    assert pi(im) == st
                    assert abs(im.b - st.b) == 1

    def test_flagship_example(self):
        mu = sp(7, 5, 4, 2)
        st = NuSubsetState(mu)
        im = pi(st)
        assert im.nu == sp(7, 5, 4, 1)
        assert im.b == 1

    def test_single_part(self):
        st = NuSubsetState(sp(1), frozenset({(1, 1)}))
        assert pi(st).nu == sp(1) and pi(st).b == 0


def _family_elements(lam, mu, n, family):
    from shifted_kschur.involutions import _element
    from shifted_kschur.shapes import removable_boxes, remove_subset
    out = []
    rem = sorted(removable_boxes(mu))
    for k in range(len(rem) + 1):
        for chosen in itertools.combinations(rem, k):
            nu = remove_subset(mu, frozenset(chosen))
            spec = EnumSpec(SkewShape(lam, nu), n, family, "set-valued")
            out.extend(_element(nu, T) for T in enumerate_fillings(spec))
    return out


class TestPairingCertificate:
    def test_small_complete(self):
        cert = pairing_certificate(sp(2, 1), sp(1), 2, "P")
        assert cert.complete
        assert all(p.tag in ("iota", "pi") for p in cert.pairs)
        ok, why = certificate_covers(
            cert, _family_elements(sp(2, 1), sp(1), 2, "P"))
        assert ok, why

    def test_equal_shapes(self):
        cert = pairing_certificate(sp(2), sp(2), 1, "Q")
        ok, why = certificate_covers(
            cert, _family_elements(sp(2), sp(2), 1, "Q"))
        assert cert.complete and ok, why

    def test_minimal_only_flagship(self):
        cert = pairing_certificate(sp(9, 8, 6, 4), sp(7, 5, 4, 2), 2, "P",
                                   minimal_only=True)
        pi_pairs = [p for p in cert.pairs if p.tag == "pi"]
        assert len(pi_pairs) == 4

    def test_rejects_empty_mu(self):
        with pytest.raises(ValueError):
            pairing_certificate(sp(2, 1), sp(), 2, "P")

    def test_scale_guard(self):
        with pytest.raises(ValueError, match="minimal_only"):
            pairing_certificate(sp(9, 8, 6, 4), sp(7, 5, 4, 2), 2, "P",
                                max_boxes=8)

    def test_json_roundtrippable(self):
        cert = pairing_certificate(sp(2, 1), sp(1), 2, "Q")
        doc = cert.to_json()
        assert doc["pairs"] and not doc["leftover"]
