from fractions import Fraction

from hypothesis import given, settings, strategies as st

from pellred.polyring import ONE, Poly, ZERO
from pellred.redei import (
    RedeiPair,
    norm_identity_holds,
    redei_closed_form,
    redei_matrix,
    redei_recurrence,
    redei_sequence,
)

inputs = st.lists(st.integers(min_value=-10, max_value=10), max_size=5).map(Poly)


class TestKnownValues:
    def test_initial_conditions(self):
        pair = redei_recurrence(Poly("x^2+3"), Poly("x"), 0)
        assert (pair.N, pair.D) == (ONE, ZERO)

    def test_recurrence_table3_row4(self):
        pair = redei_recurrence(Poly("x^2+3"), Poly("x"), 4)
        assert pair.N == Poly("8x^4+24x^2+9")
        assert pair.D == Poly("8x^3+12x")

    def test_recurrence_table2_row6(self):
        pair = redei_recurrence(Poly("x^4+2"), Poly("x^2"), 6)
        assert pair.N == Poly("32x^12+96x^8+72x^4+8")

    def test_matrix_n1(self):
        pair = redei_matrix(Poly("x^2+3"), Poly("x"), 1)
        assert (pair.N, pair.D) == (Poly("x"), ONE)

    def test_matrix_table1_row5(self):
        pair = redei_matrix(Poly("x^4-1"), Poly("x^2"), 5)
        assert pair.N == Poly("16x^10-20x^6+5x^2")
        assert pair.D == Poly("16x^8-12x^4+1")

    def test_closed_form_n2(self):
        z, alpha = Poly("3x-1"), Poly("x^3+2")
        pair = redei_closed_form(alpha, z, 2)
        assert pair.N == z * z + alpha
        assert pair.D == z * 2

    def test_closed_form_table2_row3(self):
        pair = redei_closed_form(Poly("x^4+2"), Poly("x^2"), 3)
        assert pair.N == Poly("4x^6+6x^2")
        assert pair.D == Poly("4x^4+2")

    def test_closed_form_table3_row5(self):
        pair = redei_closed_form(Poly("x^2+3"), Poly("x"), 5)
        assert pair.N == Poly("16x^5+60x^3+45x")


class TestThreeWayAgreement:
    @settings(max_examples=20, deadline=None)
    @given(inputs, inputs, st.integers(min_value=0, max_value=12))
    def test_all_methods_agree(self, alpha, z, n):
        a = redei_recurrence(alpha, z, n)
        b = redei_matrix(alpha, z, n)
        c = redei_closed_form(alpha, z, n)
        assert (a.N, a.D) == (b.N, b.D) == (c.N, c.D)

    def test_sequence_matches_per_index(self):
        alpha, z = Poly("x^3-2x+1"), Poly("2x+3")
        chain = redei_sequence(alpha, z, 12)
        for n in (0, 1, 5, 12):
            single = redei_recurrence(alpha, z, n)
            assert (chain[n].N, chain[n].D) == (single.N, single.D)


class TestNormIdentity:
    @settings(max_examples=20, deadline=None)
    @given(inputs, inputs, st.integers(min_value=0, max_value=10))
    def test_holds_for_constructed_pairs(self, alpha, z, n):
        assert norm_identity_holds(redei_recurrence(alpha, z, n))

    def test_detects_tampering(self):
        pair = redei_recurrence(Poly("x^2+3"), Poly("x"), 3)
        bad = RedeiPair(pair.n, pair.alpha, pair.z, pair.N + 1, pair.D)
        assert not norm_identity_holds(bad)

    def test_unit_norm_family(self):
        # z^2 - alpha == 1 here, so the norm is 1 at every index.
        alpha, z = Poly("x^4-1"), Poly("x^2")
        for pair in redei_sequence(alpha, z, 8):
            assert pair.N * pair.N - alpha * (pair.D * pair.D) == ONE


class TestBackwardStep:
    def test_inverse_matrix_recovers_previous(self):
        alpha, z = Poly("x^2+3"), Poly("2x-1")
        det = z * z - alpha
        chain = redei_sequence(alpha, z, 20)
        for n in range(1, 21):
            cur, prev = chain[n], chain[n - 1]
            # Apply [[z, -alpha], [-1, z]] / (z^2 - alpha) exactly.
            back_n = (z * cur.N - alpha * cur.D).div_exact(det)
            back_d = (z * cur.D - cur.N).div_exact(det)
            assert (back_n, back_d) == (prev.N, prev.D)


class TestDivisibility:
    def test_power_of_d_divides_pell_pairs(self):
        for f in (Poly("x"), Poly("x^2"), Poly("x^3+x"), Poly("x^2+1")):
            for d in (2, -2):
                alpha = f * f + d
                for pair in redei_sequence(alpha, f, 20):
                    need = abs(d) ** (pair.n // 2)
                    assert all(c % need == 0 for c in pair.N.coeffs)
                    assert all(c % need == 0 for c in pair.D.coeffs)

    def test_three_does_not_divide_n2(self):
        pair = redei_recurrence(Poly("x^2+3"), Poly("x"), 2)
        assert pair.N == Poly("2x^2+3")
        assert any(c % 3 for c in pair.N.coeffs)


class TestDegreeLaw:
    def test_pell_shape_degrees(self):
        for f, d in ((Poly("x"), 5), (Poly("x^2"), -3), (Poly("2x^3+x"), 2)):
            m = f.degree
            for pair in redei_sequence(f * f + d, f, 10):
                assert pair.N.degree == pair.n * m
                if pair.n >= 1:
                    assert pair.D.degree == (pair.n - 1) * m
