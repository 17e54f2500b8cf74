"""Check the divisor condition against exhaustive search for every list up to a given order.

    python demos/small_sweep.py 15
    NEARFACTOR_WORKERS=4 python demos/small_sweep.py 21
"""

import sys

from nearfactor.oracle import sweep

v_max = int(sys.argv[1]) if len(sys.argv) > 1 else 15
report = sweep(v_max, verify_infeasible=v_max <= 15)
print(report.summary())
print(f"wall time {report.wall_time:.2f}s")
print("every feasible list was realized" if report.ok else "some list was not settled")
