"""Parameter corners where the general constructions needed an extra pattern.

Each list below is built constructively and checked against its target.
"""

from nearfactor import LengthList, validate
from nearfactor.onetwot import realize_12t_big, realize_12t_coprime
from nearfactor.two import realize_two

cases = [
    ("closed columns, odd branch", lambda: realize_two(3, 3, 5, 4), "3^3,5^4", "cyclic"),
    ("closed columns, odd branch", lambda: realize_two(21, 22, 5, 30), "5^30,21^22", "cyclic"),
    ("swapped unit case", lambda: realize_two(5, 7, 6, 35), "5^7,6^35", "cyclic"),
    ("r = t-1 with b odd", lambda: realize_12t_big(6, 1, 13, 12), "1^6,2,13^12", "linear"),
    ("v = qt + t - 1, q odd, b odd", lambda: realize_12t_coprime(1, 1, 7, 11), "1,2,7^11", "cyclic"),
]
for label, build, text, mode in cases:
    r = build()
    verdict = validate(r.factor, LengthList.parse(text), mode)
    step = r.trace[-1]
    print(f"{label:<30} {text:<14} {step.name}:{step.params.get('case') or step.params.get('branch')}  {'ok' if verdict else verdict.reason}")
