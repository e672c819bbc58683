import pytest
from hypothesis import given, settings, strategies as st

from semigap.core import (
    classify_gaps,
    compute_apery,
    contains,
    profile,
    validate_generators,
)
from semigap.errors import (
    EmptyInput,
    GcdNotOne,
    InvalidInput,
    NegativeArgument,
    NonPositiveGenerator,
    NotMinimal,
    OverflowBudgetExceeded,
)
from semigap.oracle import brute_analyze, _sieve_minimal

from golden import EX1, EX2, EX3


def pipeline(values):
    ap = compute_apery(validate_generators(values))
    p = profile(ap)
    return ap, p, classify_gaps(ap, p)


class TestValidate:
    def test_accepts_and_sorts(self):
        g = validate_generators([13, 5, 11])
        assert g.values == (5, 11, 13)
        assert (g.m, g.multiplicity, g.total) == (3, 5, 29)

    def test_duplicates_collapse(self):
        assert validate_generators([3, 5, 3]).values == (3, 5)

    def test_pair(self):
        assert validate_generators([2, 3]).m == 2

    @pytest.mark.parametrize("raw, exc", [
        ([], EmptyInput),
        ([0, 3], NonPositiveGenerator),
        ([-2, 3], NonPositiveGenerator),
        ([2.5, 3], NonPositiveGenerator),
        ([True, 3], NonPositiveGenerator),
        ([4, 6], GcdNotOne),
        ([2**63, 3], OverflowBudgetExceeded),
    ])
    def test_rejects(self, raw, exc):
        with pytest.raises(exc):
            validate_generators(raw)

    def test_gcd_message(self):
        with pytest.raises(GcdNotOne, match="gcd is 2"):
            validate_generators([4, 6])

    def test_not_minimal_witness(self):
        with pytest.raises(NotMinimal) as info:
            validate_generators([3, 4, 7])
        err = info.value
        assert err.offender == 7
        assert sum(g * k for g, k in err.witness.items()) == 7
        assert "7 = 3 + 4" in str(err)

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            validate_generators([6, 9, 15])

    def test_one_alone(self):
        ap, p, gc = pipeline([1])
        assert (p.frobenius, p.genus, p.conductor, p.type) == (-1, 0, 0, 1)
        assert p.symmetric and gc.gaps == ()

    def test_one_makes_others_redundant(self):
        with pytest.raises(NotMinimal):
            validate_generators([1, 2])


class TestApery:
    def test_example_one(self):
        assert compute_apery(validate_generators(EX1["generators"])).entries == (0, 11, 22, 13, 24)

    def test_pair(self):
        assert compute_apery(validate_generators((2, 3))).entries == (0, 3)

    def test_med_is_generators(self):
        assert compute_apery(validate_generators(EX3["generators"])).entries == (0, 11, 7, 13, 9)

    def test_contains(self):
        ap = compute_apery(validate_generators(EX1["generators"]))
        assert contains(ap, 16)
        assert not contains(ap, 19)
        assert contains(ap, 0)
        assert all(contains(ap, s) for s in range(20, 200))
        with pytest.raises(NegativeArgument):
            contains(ap, -1)


class TestProfile:
    def test_example_one(self):
        _, p, gc = pipeline(EX1["generators"])
        assert (p.frobenius, p.genus, p.type) == (19, 12, 2)
        assert p.pseudo_frobenius == EX1["pseudo_frobenius"]
        assert not p.symmetric
        assert gc.g_gaps == EX1["g_gaps"]
        assert gc.h_gaps == EX1["h_gaps"]
        assert (gc.min_h, gc.max_h) == (2, 17)

    def test_pair_symmetric(self):
        _, p, gc = pipeline((2, 3))
        assert (p.frobenius, p.genus, p.pseudo_frobenius) == (1, 1, (1,))
        assert p.symmetric and gc.g_gaps == (1,) and gc.h_gaps == ()
        assert gc.min_h is None and gc.max_h is None

    def test_example_two(self):
        _, p, gc = pipeline(EX2["generators"])
        assert (p.frobenius, p.genus, p.type) == (1436, 840, 6)
        assert p.pseudo_frobenius == EX2["pseudo_frobenius"]
        assert (gc.min_h, gc.max_h) == (19, 1417)

    def test_example_three(self):
        _, p, gc = pipeline(EX3["generators"])
        assert (p.frobenius, p.genus) == (8, 6)
        assert gc.g_gaps == EX3["g_gaps"] and gc.h_gaps == EX3["h_gaps"]
        assert p.pseudo_frobenius == EX3["pseudo_frobenius"]

    def test_pseudo_symmetric_flag(self):
        _, p, gc = pipeline((3, 4, 5))
        assert p.pseudo_symmetric and gc.h_gaps == (1,)


@st.composite
def minimal_tuples(draw, max_m=4, max_d=40):
    m = draw(st.integers(2, max_m))
    values = tuple(sorted(draw(st.sets(st.integers(2, max_d), min_size=m, max_size=m))))
    from math import gcd
    from functools import reduce
    if reduce(gcd, values) != 1 or not _sieve_minimal(values):
        return None
    return values


@settings(max_examples=150, deadline=None)
@given(minimal_tuples())
def test_matches_brute_force(values):
    if values is None:
        return
    ap, p, gc = pipeline(values)
    ref = brute_analyze(values)
    assert ap.entries == ref.apery
    assert (p.frobenius, p.genus, p.pseudo_frobenius) == (ref.frobenius, ref.genus, ref.pseudo_frobenius)
    assert (gc.g_gaps, gc.h_gaps) == (ref.g_gaps, ref.h_gaps)
    assert len(gc.g_gaps) == p.conductor - p.genus
    assert len(gc.h_gaps) == 2 * p.genus - p.conductor


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 60), min_size=1, max_size=5))
def test_validation_agrees_with_sieve(raw):
    from math import gcd
    from functools import reduce
    values = tuple(sorted(set(raw)))
    ok = reduce(gcd, values) == 1 and _sieve_minimal(values)
    if ok:
        assert validate_generators(raw).values == values
    else:
        with pytest.raises(InvalidInput):
            validate_generators(raw)
