"""Independent exact-arithmetic oracle for the frozen test values.

Uses fractions and brute force only; shares no code with the C++ library.
Run: python3 tests/oracle/derive_expected.py
"""
from fractions import Fraction as F
from itertools import combinations, product
import math

# 3x6 instance: rows {1,2,3,4}, {1,2,5}, {3,4,6} (1-based elements).
rows = [{0, 1, 2, 3}, {0, 1, 4}, {2, 3, 5}]
n = 6
print("column_counts", [sum(j in r for r in rows) for j in range(n)])
print("gains(all)", [len(r) for r in rows])


def greedy(rows, n, k_max=None):
    unc = set(range(n))
    sel, counts = [], [n]
    while unc and (k_max is None or len(sel) < k_max):
        gains = [len(r & unc) for r in rows]
        best = max(range(len(rows)), key=lambda i: (gains[i], -i))
        sel.append(best)
        unc -= rows[best]
        counts.append(len(unc))
    return sel, counts, unc


print("greedy", greedy(rows, n)[:2])
sel, _, unc = greedy(rows, n, 1)
patch = []
for j in sorted(unc):
    if j in unc:
        r = min(i for i in range(len(rows)) if i not in sel + patch and j in rows[i])
        patch.append(r)
        unc -= rows[r]
print("patch after k=1", patch)
for size in range(1, 4):
    found = [c for c in combinations(range(3), size)
             if set().union(*(rows[i] for i in c)) == set(range(n))]
    if found:
        print("exact", size, found[0])
        break


def improved(g, m, k):
    b = F(1)
    for j in range(k):
        b *= max(F(0), 1 - g * m / (m - j))
    return b


g, m = F(1, 4), 4
print("improved(0.25,4)", [float(improved(g, m, k)) for k in range(5)])
M = m * (1 - g)
for k in (1, 2, 3):
    cf = (1 - g) ** k
    for i in range(1, k):
        cf *= (1 - i / M) / (1 - F(i, m))
    print("closed", k, cf, "ratio", cf / (1 - g) ** k)
print("improved(0.5,2,2)", improved(F(1, 2), 2, 2))
print("size terms", [k + math.ceil(100 * improved(g, m, k)) for k in range(5)])


def prod_exact(x, y):
    p = F(1)
    for i in range(1, x):
        p *= 1 - F(i, y)
    return p


for x, y in ((1, 1), (3, 4), (2, 2)):
    print("product", x, y, prod_exact(x, y),
          (1 - x / y) ** ((x - 1) / 2), F(1 - F(x, 2 * y)) ** (x - 1))

# Enumeration counts of matrices without an all-zero column.
for mm, nn in ((2, 2), (2, 3), (2, 4), (3, 3)):
    cnt = 0
    for cells in product((0, 1), repeat=mm * nn):
        if all(any(cells[i * nn + j] for i in range(mm)) for j in range(nn)):
            cnt += 1
    print("enum", mm, nn, cnt)

# Identity 3x3 improved bound with gamma = 1/3.
print("identity", [improved(F(1, 3), 3, k) for k in range(4)])
print("pairs", 200 * 201 // 2)
