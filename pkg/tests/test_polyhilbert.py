import pytest
from hypothesis import given, settings, strategies as st

from semigap.core import compute_apery, profile, validate_generators
from semigap.errors import MirrorDegreeTooSmall, NotDivisible, SymmetricInput
from semigap.oracle import build_sieve
from semigap.polyhilbert import (
    SparsePoly,
    apery_gf,
    betti_top,
    format_poly,
    gap_windows,
    hgap_bounds_via_v,
    hgap_poly_from_v,
    hilbert_truncated,
    mirror,
    numerator_q,
    v_polynomial,
    xi_and_min_hgap,
)

from golden import EX1, EX2, EX3, XI_COUNTEREXAMPLE

polys = st.dictionaries(st.integers(0, 40), st.integers(-5, 5), max_size=8).map(SparsePoly)


def q_of(values):
    g = validate_generators(values)
    return g, numerator_q(g, compute_apery(g))


def sieve_numerator(values):
    """Q rebuilt from the sieve: the indicator series times every binomial, cut at the known degree."""
    sv = build_sieve(values)
    n = sv.bound
    series = [int(s in sv) for s in range(n + 1)]
    for d in values:
        series = [series[k] - (series[k - d] if k >= d else 0) for k in range(n + 1)]
    return SparsePoly({k: c for k, c in enumerate(series) if c})


class TestSparsePoly:
    def test_binomial_product(self):
        assert SparsePoly.binomial_product([5, 7]) == SparsePoly({0: 1, 5: -1, 7: -1, 12: 1})

    def test_zero_terms_dropped(self):
        p = SparsePoly({3: 0, 4: 2})
        assert p.terms == {4: 2} and len(p) == 1

    def test_identities(self):
        q = SparsePoly(EX1["q"])
        assert q + SparsePoly() == q
        assert (q - q).is_zero()

    def test_scalar_multiple(self):
        assert SparsePoly({1: 2}) * 3 == SparsePoly({1: 6})

    def test_degree_of_zero(self):
        assert SparsePoly().degree() == float("-inf")

    def test_weight_counts_multiplicity(self):
        assert SparsePoly({0: 1, 5: -3}).weight() == 4

    def test_pairs_round_trip(self):
        q = SparsePoly(EX2["q"])
        assert SparsePoly.from_pairs(q.to_pairs()) == q
        assert q.to_pairs()[0] == [0, 1]

    def test_divide_exact(self):
        prod = SparsePoly.binomial_product([3, 4])
        assert (prod * SparsePoly({2: 1, 9: -4})).divide_exact(prod) == SparsePoly({2: 1, 9: -4})

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            SparsePoly({0: 1, 1: 1}).divide_exact(SparsePoly({0: 1, 2: -1}))

    def test_format(self):
        assert format_poly(SparsePoly(EX1["q"])) == "1 - z^26 - z^33 - z^35 + z^46 + z^48"
        assert format_poly(SparsePoly({1: -2, 3: 1})) == "-2z + z^3"
        assert format_poly(SparsePoly()) == "0"

    def test_hashable(self):
        assert len({SparsePoly({1: 1}), SparsePoly({1: 1})}) == 1


@settings(max_examples=200)
@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a - a == SparsePoly()


@settings(max_examples=200)
@given(polys, st.lists(st.integers(1, 12), min_size=1, max_size=4))
def test_division_inverts_multiplication(a, degrees):
    divisor = SparsePoly.binomial_product(degrees)
    assert (a * divisor).divide_exact(divisor) == a


@settings(max_examples=200)
@given(polys, st.integers(0, 20))
def test_mirror_involution(p, extra):
    n = max(p.degree(), 0) + extra
    assert mirror(mirror(p, n), n) == p


class TestMirror:
    def test_examples(self):
        assert mirror(SparsePoly({0: 1, 6: -1}), 6) == SparsePoly({6: 1, 0: -1})
        assert mirror(SparsePoly(EX1["q"]), 48) == SparsePoly(
            {0: 1, 2: 1, 13: -1, 15: -1, 22: -1, 48: 1})
        assert mirror(SparsePoly(), 0).is_zero()

    def test_too_small(self):
        with pytest.raises(MirrorDegreeTooSmall):
            mirror(SparsePoly({5: 1}), 4)


class TestNumerator:
    def test_apery_gf(self):
        g = validate_generators(EX1["generators"])
        assert apery_gf(compute_apery(g)) == SparsePoly({0: 1, 11: 1, 13: 1, 22: 1, 24: 1})
        g = validate_generators(EX3["generators"])
        assert apery_gf(compute_apery(g)) == SparsePoly({0: 1, 7: 1, 9: 1, 11: 1, 13: 1})

    @pytest.mark.parametrize("ex", [EX1, EX2, EX3, XI_COUNTEREXAMPLE])
    def test_worked_examples(self, ex):
        _, q = q_of(ex["generators"])
        assert q == SparsePoly(ex["q"])

    def test_pair(self):
        _, q = q_of((2, 3))
        assert q == SparsePoly({0: 1, 6: -1})

    def test_weights(self):
        assert q_of(EX2["generators"])[1].weight() == 26
        _, q3 = q_of(EX3["generators"])
        assert (q3.weight(), len(q3), q3.degree()) == (50, 27, 53)

    @pytest.mark.parametrize("values", [(5, 11, 13), (3, 4, 5), (11, 16, 21, 29), (5, 7, 9, 11, 13)])
    def test_matches_sieve(self, values):
        assert q_of(values)[1] == sieve_numerator(values)


class TestSeries:
    def test_example_one(self):
        g, q = q_of(EX1["generators"])
        series = hilbert_truncated(g, q, 19)
        assert [k for k, c in enumerate(series) if c] == [0, 5, 10, 11, 13, 15, 16, 18]

    def test_pair(self):
        g, q = q_of((2, 3))
        assert hilbert_truncated(g, q, 5) == [1, 0, 1, 1, 1, 1]

    def test_window_zero(self):
        g, q = q_of(EX2["generators"])
        assert hilbert_truncated(g, q, 0) == [1]

    def test_gap_windows(self):
        g, q = q_of(EX1["generators"])
        h, gg = gap_windows(hilbert_truncated(g, q, 40), 19)
        assert h.support() == list(EX1["h_gaps"])
        assert gg.support() == list(EX1["g_gaps"])


class TestV:
    def test_example_one(self):
        _, q = q_of(EX1["generators"])
        assert v_polynomial(q, 3) == SparsePoly(EX1["v"])

    def test_pair_vanishes(self):
        _, q = q_of((2, 3))
        assert v_polynomial(q, 2).is_zero()

    def test_three_four_five(self):
        _, q = q_of((3, 4, 5))
        assert q == SparsePoly({0: 1, 8: -1, 9: -1, 10: -1, 13: 1, 14: 1})
        # the quotient by the three binomials must be the single h-gap z^1
        assert v_polynomial(q, 3) == SparsePoly({1: 1, 4: -1, 5: -1, 6: -1, 8: 1, 9: 1, 10: 1, 13: -1})

    @pytest.mark.parametrize("ex", [EX1, EX3])
    def test_quotient_is_h_gaps(self, ex):
        g, q = q_of(ex["generators"])
        h = hgap_poly_from_v(v_polynomial(q, g.m), g)
        assert h == SparsePoly({x: 1 for x in ex["h_gaps"]})

    def test_bounds(self):
        for values, want in [((5, 11, 13), (2, 17)), (EX2["generators"], (19, 1417)), ((3, 7, 8), (1, 4))]:
            g, q = q_of(values)
            assert hgap_bounds_via_v(v_polynomial(q, g.m), g) == want

    def test_bounds_symmetric(self):
        g, q = q_of((2, 3))
        with pytest.raises(SymmetricInput):
            hgap_bounds_via_v(v_polynomial(q, 2), g)


class TestXi:
    @pytest.mark.parametrize("ex, min_h", [(EX2, 19), (EX3, 2)])
    def test_worked_examples(self, ex, min_h):
        _, q = q_of(ex["generators"])
        xi, got = xi_and_min_hgap(q)
        assert (xi.degree, xi.xi_max, xi.xi_min, got) == (ex["deg_q"], ex["xi_max"], ex["xi_min"], min_h)

    def test_example_one(self):
        _, q = q_of(EX1["generators"])
        xi, got = xi_and_min_hgap(q)
        assert (xi.degree, xi.xi_max, got) == (48, 46, 2)
        assert xi.size == q.weight() - 2

    def test_symmetric_rejected(self):
        _, q = q_of((3, 4))
        with pytest.raises(SymmetricInput):
            xi_and_min_hgap(q)

    def test_counterexample(self):
        # An inner positive term above the top syzygy pushes max Xi to 113,
        # so deg Q - max Xi = 32 while the only h-gap is 34.
        g, q = q_of(XI_COUNTEREXAMPLE["generators"])
        xi, got = xi_and_min_hgap(q)
        assert (xi.degree, xi.xi_max, got) == (145, 113, 32)
        assert hgap_bounds_via_v(v_polynomial(q, g.m), g) == (34, 34)
        assert xi.xi_min + xi.xi_max == xi.degree


class TestBettiTop:
    def test_examples(self):
        for values, want in [((5, 11, 13), [46, 48]),
                             (EX2["generators"], [1774, 1945, 1984, 2003, 2046, 2065]),
                             ((2, 3), [6])]:
            g, q = q_of(values)
            assert betti_top(profile(compute_apery(g)), g, q) == want
