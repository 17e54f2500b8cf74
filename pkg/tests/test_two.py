import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nearfactor.feasibility import check_condition
from nearfactor.grid import build_cop_grid, build_notcop_grid, build_xy_grid
from nearfactor.model import Infeasible, InvalidInput, LengthList, NearOneFactor, PreconditionViolation, validate
from nearfactor.oracle import SearchOptions, search_realization
from nearfactor.two import realize_two


class TestGrids:
    def test_worked_matrix(self):
        g = build_xy_grid(45, 6, 10, 5)
        assert g.rows[0] == (0, 10, 20, 30, 40, 5, 15, 25, 35)
        assert g.as_array().shape == (5, 9)
        assert sorted(g.cells()) == list(range(45))
        assert g.row_steps_ok()

    def test_small_xy(self):
        g = build_xy_grid(9, 1, 3, 3)
        assert np.array_equal(g.as_array(), np.array([[0, 3, 6], [1, 4, 7], [2, 5, 8]]))

    def test_bad_input(self):
        with pytest.raises(InvalidInput):
            build_xy_grid(45, 5, 10, 5)
        with pytest.raises(InvalidInput):
            build_xy_grid(45, 6, 7, 1)

    def test_cell_out_of_range(self):
        g = build_cop_grid(29, 12)
        assert g.m(5, 3) == 28 and len(g.rows[5]) == 2
        with pytest.raises(PreconditionViolation):
            g.m(6, 3)

    def test_notcop_row_starts(self):
        g = build_notcop_grid(49, 21, 7)
        assert [r[0] for r in g.rows] == [0, 2, 1, 3, 4, 6, 5]
        # column neighbours alternate 2, 1 down the first column
        col = [r[0] for r in g.rows]
        assert [abs(col[i + 1] - col[i]) for i in range(6)] == [2, 1, 2, 1, 2, 1]

    @settings(max_examples=80)
    @given(st.integers(3, 60), st.integers(2, 40))
    def test_layouts_distinct_and_stepped(self, n, t):
        v = 2 * n + 1
        if t >= v:
            return
        grids = [build_cop_grid(v, t)]
        d = math.gcd(t, v)
        if d > 1:
            grids.append(build_notcop_grid(v, t, d))
        for g in grids:
            g.check_distinct()
            assert g.row_steps_ok()
            assert sorted(g.cells()) == list(range(v))

    def test_complete_pairs_rows(self):
        g = build_xy_grid(9, 1, 3, 3)
        edges, iso = g.complete({0, 1})
        assert iso == 2 or iso in g.cells()
        assert len(edges) == 3
        with pytest.raises(PreconditionViolation):
            g.complete(set())

    def test_odd_rows_checkpoint(self):
        g = build_xy_grid(9, 1, 3, 3)
        assert g.odd_rows(set()) == [1, 2, 3]
        assert g.odd_rows({0, 1}) == [3]


class TestRealizeTwo:
    def test_worked_example(self):
        r = realize_two(6, 9, 10, 13)
        assert validate(r.factor, LengthList.parse("6^9,10^13"))
        assert r.factor.isolated == 35
        step = r.trace[-1]
        assert step.params["case"] == "2" and step.params["branch"] == "odd"

    def test_unit_case(self):
        r = realize_two(2, 1, 3, 2)
        assert r.factor == NearOneFactor.build(7, [(0, 3), (1, 6), (2, 5)], 4)
        assert r.trace[-1].params["unit"] == 5

    def test_infeasible(self):
        with pytest.raises(Infeasible) as exc:
            realize_two(3, 4, 6, 3)
        assert exc.value.verdict.divisor == 3

    def test_argument_order_irrelevant(self):
        a = realize_two(10, 13, 6, 9)
        assert validate(a.factor, LengthList.parse("6^9,10^13"))

    def test_degenerate_counts(self):
        assert validate(realize_two(2, 0, 3, 5).factor, LengthList.parse("3^5"))
        assert validate(realize_two(2, 3, 3, 0).factor, LengthList.parse("2^3"))

    def test_agrees_with_search_small(self):
        # every two-length list up to v = 19: construction iff the search finds one
        for n in range(2, 10):
            for x in range(1, n + 1):
                for y in range(x + 1, n + 1):
                    for a in range(1, n):
                        lst = LengthList.from_counts({x: a, y: n - a})
                        found = search_realization(lst, SearchOptions(normalize=True)) is not None
                        try:
                            r = realize_two(x, a, y, n - a)
                        except Infeasible:
                            assert not found, lst
                            continue
                        assert found, lst
                        assert validate(r.factor, lst), lst

    @settings(max_examples=300, deadline=None)
    @given(st.integers(2, 150).flatmap(lambda n: st.tuples(
        st.just(n), st.integers(1, n), st.integers(1, n), st.integers(0, n))))
    def test_large_lists_validate(self, t):
        n, x, y, a = t
        if x == y:
            return
        lst = LengthList.from_counts({x: a, y: n - a})
        if not check_condition(lst):
            with pytest.raises(Infeasible):
                realize_two(x, a, y, n - a)
            return
        r = realize_two(x, a, y, n - a)
        assert validate(r.factor, lst)


class TestClosedColumns:
    """v/d divides x: the grid columns close into cycles."""

    @pytest.mark.parametrize("x, a, y, b", [(3, 3, 5, 4), (3, 5, 5, 2), (5, 2, 6, 5), (3, 8, 11, 8), (7, 2, 9, 8)])
    def test_torus_branch(self, x, a, y, b):
        r = realize_two(x, a, y, b)
        assert validate(r.factor, LengthList.from_counts({x: a, y: b}))
        assert r.trace[-1].params["branch"] == "odd,torus"

    def test_torus_full_range(self):
        # every odd-branch count across the admissible range, v = 15 * 7
        v, x, y = 105, 21, 5
        n = (v - 1) // 2
        d = math.gcd(y, v)
        for a in range((d - 1) // 2, (d - 1) * v // (2 * d) + 1):
            lst = LengthList.from_counts({x: a, y: n - a})
            if check_condition(lst):
                assert validate(realize_two(x, a, y, n - a).factor, lst)

    def test_interchanged_unit_case(self):
        r = realize_two(5, 7, 6, 35)
        assert r.trace[-1].params["case"] == "4:3"
        assert validate(r.factor, LengthList.parse("5^7,6^35"))
