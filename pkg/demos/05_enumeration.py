"""
Counting skew braces
====================

Brace structures on G are the regular subgroups of Hol(G).
"""
import tempfile
import time

from skewbrace.catalog import small_group_catalog
from skewbrace.enumeration import braces_by_table_search, braces_on_group, holomorph, write_corpus
from skewbrace.structure import brace_is_supersoluble

for n in [4, 6, 8]:
    for G in small_group_catalog(n):
        t0 = time.perf_counter()
        a = len(braces_on_group(G))
        t1 = time.perf_counter()
        b = len(braces_by_table_search(G))
        t2 = time.perf_counter()
        print(f"{G.name:10s} |Hol|={holomorph(G).order:5d} braces={a:4d} "
              f"(table search {b}) {t1 - t0:.2f}s vs {t2 - t1:.2f}s")

# square-free orders: everything is supersoluble
for n in [6, 10, 14, 15, 21, 30]:
    bs = [B for G in small_group_catalog(n) for B in braces_on_group(G)]
    print(n, len(bs), "braces, supersoluble:", all(brace_is_supersoluble(B) for B in bs))

with tempfile.TemporaryDirectory() as out:
    paths = write_corpus(6, out)
    print(len(paths), "files, e.g.", paths[-1].name)
