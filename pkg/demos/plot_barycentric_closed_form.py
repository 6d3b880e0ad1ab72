"""
Cubical barycentric subdivision
===============================

The short h-polynomial of the order-t barycentric subdivision follows from
the h-polynomial of the original complex by a change of variables.
"""

from cubicalh.complexes import standard_cube
from cubicalh.corpus import gen_cubical_barycentric, square_path
from cubicalh.enumeration import h_short_cubical
from cubicalh.subdivision import cbs_closed_form

for label, K in [("square", standard_cube(2)), ("two squares", square_path()), ("cube", standard_cube(3))]:
    for t in (1, 2):
        built = gen_cubical_barycentric(K, t)
        print(f"{label}, t={t}: {len(built.source)} faces")
        print("   closed form:", cbs_closed_form(K, t).poly)
        print("   constructed:", h_short_cubical(built.source, K.dim).poly)
