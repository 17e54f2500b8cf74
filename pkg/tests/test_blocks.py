import pytest

from nearfactor.blocks import (
    block_x_xminus1,
    compose,
    compose_all,
    from_word,
    inflate,
    patterned_starter,
    perfect_odd_chain,
    perfect_odd_list,
    perfect_ones,
    perfect_xx,
    realize_12,
    realize_1y,
    realize_constant,
    times,
    word_of,
)
from nearfactor.model import (
    EMPTY,
    Infeasible,
    InvalidInput,
    Kind,
    LengthList,
    Mode,
    NearOneFactor,
    PreconditionViolation,
    Realization,
    validate,
)
from nearfactor.oracle import SearchOptions, search_realization

S1 = (6, 6, 0, 1, 1, 3, 6, 6, 3)
S2 = (3, 3, 4, 3, 3, 0, 4)
S3 = (6, 6, 3, 1, 1, 3, 6, 6, 0)


def linear_ok(r: Realization):
    verdict = validate(r.factor, r.list, Mode.LINEAR)
    assert verdict, verdict.reason
    assert verdict.kind is r.kind


class TestSmallBlocks:
    def test_perfect_xx(self):
        r = perfect_xx(3)
        assert r.factor == NearOneFactor.build(7, [(0, 3), (1, 4), (2, 5)], 6)
        assert r.kind is Kind.PERFECT and r.list == LengthList.parse("3^3")
        assert perfect_xx(1).factor == NearOneFactor.build(3, [(0, 1)], 2)
        assert perfect_xx(12).list == LengthList.parse("12^12")

    @pytest.mark.parametrize("x", range(1, 6))
    def test_perfect_xx_exists_by_search(self, x):
        # the search agrees a perfect realization exists
        lst = LengthList.from_counts({x: x})
        assert search_realization(lst, SearchOptions(Mode.LINEAR, required_isolated=2 * x)) is not None
        linear_ok(perfect_xx(x))

    def test_block_x_xminus1(self):
        r = block_x_xminus1(4)
        assert r.factor == NearOneFactor.build(7, [(0, 4), (1, 5), (2, 6)], 3)
        assert r.list == LengthList.parse("4^3")
        r2 = block_x_xminus1(2)
        assert r2.factor == NearOneFactor.build(3, [(0, 2)], 1) and r2.kind is Kind.ALMOST_PERFECT
        r1 = block_x_xminus1(1)
        assert r1.factor.v == 1 and not r1.factor.edges
        for x in range(2, 12):
            linear_ok(block_x_xminus1(x))

    def test_odd_chain(self):
        assert word_of(perfect_odd_chain(2)) == (5, 3, 1, 1, 3, 5, 0)
        assert word_of(perfect_odd_chain(0)) == (1, 1, 0)
        for k in range(21):
            r = perfect_odd_chain(k)
            linear_ok(r)
            assert r.list == LengthList.of(range(1, 2 * k + 2, 2))

    def test_odd_list(self):
        r = perfect_odd_list([2, 1])
        assert r.list == LengthList.parse("1^2,3") and r.kind is Kind.PERFECT
        assert perfect_odd_list([1]).factor == perfect_odd_chain(0).factor
        r = perfect_odd_list([3, 3, 3])
        assert r.list == LengthList.parse("1^3,3^3,5^3")
        linear_ok(r)
        with pytest.raises(PreconditionViolation):
            perfect_odd_list([1, 2])
        with pytest.raises(PreconditionViolation):
            perfect_odd_list([])


class TestCompose:
    def test_p_plus_ap(self):
        r = compose(from_word(S3), from_word(S2))
        assert word_of(r) == (6, 6, 3, 1, 1, 3, 6, 6, 3, 3, 4, 3, 3, 0, 4)
        assert r.kind is Kind.ALMOST_PERFECT and r.list == LengthList.parse("1,3^3,4,6^2")

    def test_ap_plus_ap(self):
        r = compose(from_word(S2), from_word(S2))
        assert word_of(r) == (3, 3, 4, 3, 3, 4, 4, 3, 3, 4, 3, 3, 0)
        assert r.kind is Kind.PERFECT and r.list == LengthList.parse("3^4,4^2")

    def test_p_plus_p(self):
        r = compose(from_word(S3), from_word(S3))
        assert word_of(r) == (6, 6, 3, 1, 1, 3, 6, 6, 6, 6, 3, 1, 1, 3, 6, 6, 0)
        assert r.kind is Kind.PERFECT

    def test_p_plus_r(self):
        r = compose(from_word(S3), from_word(S1))
        assert word_of(r) == (6, 6, 3, 1, 1, 3, 6, 6, 6, 6, 0, 1, 1, 3, 6, 6, 3)
        assert r.kind is Kind.LINEAR and r.list == LengthList.parse("1^2,3^2,6^4")

    def test_p_plus_hooked(self):
        r = compose(perfect_xx(3), realize_12(0, 1))
        assert word_of(r) == (3, 3, 3, 3, 3, 3, 2, 0, 2)
        assert r.kind is Kind.ALMOST_PERFECT and r.factor.isolated == 7

    @pytest.mark.parametrize("a, b", [(S1, S3), (S1, S1), (S2, S3), (S2, S1)])
    def test_unsupported(self, a, b):
        with pytest.raises(InvalidInput):
            compose(from_word(a), from_word(b))

    def test_cyclic_rejected(self):
        cyc = Realization(NearOneFactor.build(7, [(0, 6), (1, 5), (2, 4)], 3), Kind.CYCLIC, LengthList.parse("1,2,3"))
        with pytest.raises(InvalidInput):
            compose(from_word(S3), cyc)

    def test_empty_is_identity(self):
        assert compose_all([EMPTY, from_word(S2), EMPTY]).factor == from_word(S2).factor
        assert compose_all([]) is EMPTY
        assert times(perfect_xx(2), 0) is EMPTY

    def test_times(self):
        r = times(perfect_xx(2), 3)
        assert word_of(r) == (2, 2, 2, 2) * 3 + (0,)
        with pytest.raises(InvalidInput):
            times(from_word(S2), 2)


class TestInflate:
    def test_one_three_block(self):
        r = inflate(from_word(S3), {3: 1})
        assert r.list == LengthList.parse("1,3^4,6^2") and r.kind is Kind.PERFECT
        linear_ok(r)

    def test_no_change(self):
        r = from_word(S1)
        assert inflate(r, {1: 0, 3: 0, 6: 0}) is r

    def test_two_length_inflation(self):
        r = inflate(from_word(S3), {2: 2, 3: 1})
        assert r.list == LengthList.parse("1,2^4,3^4,6^2") and r.kind is Kind.PERFECT
        linear_ok(r)

    def test_kind_kept(self):
        for w in (S1, S2, S3):
            assert inflate(from_word(w), {4: 2}).kind is from_word(w).kind


class TestRealize1y:
    def test_r1_word(self):
        r = realize_1y(2, 5, 1)
        assert word_of(r) == (5, 1, 1, 1, 1, 5, 0)
        assert r.kind is Kind.PERFECT and r.list == LengthList.parse("1^2,5")

    def test_r3_word(self):
        r = realize_1y(2, 5, 3)
        assert word_of(r) == (1, 1, 5, 5, 5, 1, 1, 5, 5, 5, 0)
        assert r.list == LengthList.parse("1^2,5^3")

    def test_bound(self):
        with pytest.raises(PreconditionViolation):
            realize_1y(0, 3, 1)

    @pytest.mark.parametrize("y", range(2, 9))
    def test_many(self, y):
        for b in range(0, 3 * y + 2):
            for a in range((y - 1) // 2, (y - 1) // 2 + 6):
                if a + b == 0:
                    continue
                r = realize_1y(a, y, b)
                assert r.list == LengthList.from_counts({1: a, y: b})
                linear_ok(r)


class TestRealize12:
    def test_words(self):
        assert word_of(realize_12(1, 1)) == (1, 1, 2, 0, 2)
        assert realize_12(1, 1).factor.isolated == 3
        assert word_of(realize_12(2, 2)) == (1, 1, 2, 2, 2, 2, 1, 1, 0)
        r = realize_12(1, 2)
        assert r.kind is Kind.PERFECT and r.list == LengthList.parse("1,2^2")

    def test_zero_zero(self):
        with pytest.raises(InvalidInput):
            realize_12(0, 0)

    def test_only_twos(self):
        assert realize_12(0, 2).kind is Kind.PERFECT
        assert realize_12(0, 1).kind is Kind.ALMOST_PERFECT


class TestConstantAndStarter:
    def test_constant(self):
        r = realize_constant(2, 3)
        assert validate(r.factor, LengthList.parse("2^3"))
        assert r.kind is Kind.CYCLIC

    def test_constant_infeasible(self):
        with pytest.raises(Infeasible) as exc:
            realize_constant(3, 4)
        assert exc.value.verdict.divisor == 3

    def test_constant_range(self):
        with pytest.raises(InvalidInput):
            realize_constant(5, 4)

    def test_starter(self):
        r = patterned_starter(3)
        assert r.factor == NearOneFactor.build(7, [(0, 5), (1, 4), (2, 3)], 6)
        for n in range(1, 30):
            assert validate(patterned_starter(n).factor, LengthList.of(range(1, n + 1)))

    def test_constant_all_units(self):
        from math import gcd

        for n in range(1, 25):
            for x in range(1, n + 1):
                if x == 1 or gcd(x, 2 * n + 1) == 1:
                    r = realize_constant(x, n)
                    assert validate(r.factor, LengthList.from_counts({x: n}))
