"""
Why D_{3,2} is not regular
==========================

Prefixes of an infinite square-free word are pairwise distinguishable: for
m < n the suffix reverse(w_m) puts w_m inside the language and w_n outside.
"""

from powerdel import is_deletable, mn_witnesses
from powerdel.analysis import check_witnesses

ws = mn_witnesses(3, 6)
for m, prefix in enumerate(ws.prefixes):
    print(prefix, ws.separators[m])

for m in range(3):
    for n in range(m + 1, 4):
        z = ws.separators[m][n]
        a, b = ws.prefixes[m] + z, ws.prefixes[n] + z
        print(f"{a:>12} {is_deletable(a, 2)!s:>5}   {b:>12} {is_deletable(b, 2)!s:>5}")

print(check_witnesses(ws, 3))
