"""
Local h-polynomials of cube subdivisions
========================================

Cut a segment, stack two squares, draw a Schlegel diagram, and compare
how the short cubical h-polynomial changes against the local h-polynomial.
"""

from cubicalh import corpus
from cubicalh.enumeration import h_short_cubical
from cubicalh.subdivision import local_h_long, local_h_short, is_locally_quasi_geometric

# a segment with t interior points: the local h counts them twice over
for t in range(4):
    s = corpus.gen_segment(t)
    print(f"segment t={t}: h = {h_short_cubical(s.source, 1).poly}, local h = {local_h_short(s).poly}")

# Schlegel diagrams are geometric, so their local h is nonnegative and symmetric
for d in (1, 2, 3):
    s = corpus.gen_schlegel(d)
    print(f"schlegel d={d}: short {local_h_short(s).poly}, long {local_h_long(s).poly}")

# two cubes carried onto one is not locally quasi-geometric and the local h goes negative
s = corpus.gen_pushed_cube()
print("pushed cube lqg:", is_locally_quasi_geometric(s))
print("pushed cube local h:", local_h_short(s).poly)
