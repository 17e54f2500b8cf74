import pytest
from hypothesis import given
from hypothesis import strategies as st

from nearfactor.feasibility import check_condition, divisors, violations
from nearfactor.model import InvalidInput, LengthList
from nearfactor.oracle import enumerate_lists

from conftest import brute_force_lists


def naive_violations(lst):
    v = lst.v
    out = []
    for d in range(1, v + 1):
        if v % d == 0:
            count = sum(1 for x in lst.elements() if x % d == 0)
            if 2 * count > v - d:
                out.append(d)
    return out


@pytest.mark.parametrize("v, expected", [(45, [1, 3, 5, 9, 15, 45]), (13, [1, 13]), (1, [1]), (36, [1, 2, 3, 4, 6, 9, 12, 18, 36])])
def test_divisors(v, expected):
    assert divisors(v) == expected


def test_feasible_k13():
    assert check_condition(LengthList.parse("1^2,4^3,6"))


def test_three_to_the_seven():
    verdict = check_condition(LengthList.parse("3^7"))
    assert not verdict
    assert (verdict.divisor, verdict.count, verdict.bound) == (3, 7, 6)
    assert "d=3" in str(verdict)
    assert verdict.to_dict() == {"status": "violated", "divisor": 3, "count": 7, "bound": 6}


def test_two_length_example():
    assert check_condition(LengthList.parse("6^9,10^13")).to_dict() == {"status": "feasible"}


def test_smallest_divisor_reported():
    # v = 45: 3 and 5 both violated
    lst = LengthList.parse("15^22")
    assert [x.divisor for x in violations(lst)] == [3, 5, 15]
    assert check_condition(lst).divisor == 3


def test_rejects_cyclic_out_of_range():
    with pytest.raises(InvalidInput):
        check_condition(LengthList.parse("5"))


@given(st.integers(1, 30).flatmap(lambda n: st.lists(st.integers(1, n), min_size=n, max_size=n)))
def test_matches_naive_definition(xs):
    lst = LengthList.of(xs)
    expected = naive_violations(lst)
    assert [x.divisor for x in violations(lst)] == expected
    assert bool(check_condition(lst)) == (not expected)
    assert 1 not in expected and lst.v not in expected


@pytest.mark.parametrize("v", [3, 5, 7, 9, 11])
def test_necessity_against_brute_force(v):
    realizable = brute_force_lists(v)
    for lst in enumerate_lists((v - 1) // 2):
        if tuple(lst.elements()) in realizable:
            assert check_condition(lst), lst
