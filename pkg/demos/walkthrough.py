"""A guided tour: feasibility, the building blocks, the grid constructions and the search.

Run with ``python demos/walkthrough.py``.
"""

from nearfactor import LengthList, check_condition, solve
from nearfactor.blocks import compose, from_word, word_of
from nearfactor.model import to_sequence
from nearfactor.oracle import SearchOptions, search_realization


def section(title):
    print()
    print(title)
    print("-" * len(title))


section("1. The divisor condition")
for text in ["1^2,4^3,6", "3^7", "6^9,10^13"]:
    lst = LengthList.parse(text)
    print(f"{lst} on K_{lst.v}: {check_condition(lst)}")

section("2. Slot words and composition")
s3 = from_word((6, 6, 3, 1, 1, 3, 6, 6, 0))
s2 = from_word((3, 3, 4, 3, 3, 0, 4))
for left, right in [(s3, s3), (s3, s2), (s2, s2)]:
    out = compose(left, right)
    print(f"{left.kind.short:>2} + {right.kind.short:<2} -> {out.kind.short:<2} {word_of(out)}")

section("3. Two distinct lengths on a grid")
res = solve(LengthList.parse("6^9,10^13"))
print(f"method {res.method}, isolated vertex {res.realization.factor.isolated}")
grid = next(s.params["grid"] for s in res.realization.trace if "grid" in s.params)
print(grid.render(isolated=res.realization.factor.isolated))

section("4. Lists {1^a, 2^b, t^c}")
for text in ["1^4,2^2,12^26", "1^3,2^2,21^19", "1^2,2^3,12^9", "1,2,19^23", "1,2,10^12"]:
    res = solve(LengthList.parse(text))
    print(f"{text:<16} {res.verdict:<27} via {res.method}")

section("5. Exhaustive search as a referee")
lst = LengthList.parse("3^2,4")
r = search_realization(lst, SearchOptions("linear", required_isolated=5))
print(f"{lst}: {to_sequence(r)}  ({r.kind.value})")
print(f"{{3^7}} realizable: {search_realization(LengthList.parse('3^7')) is not None}")
