"""
Formal subdivisions of posets
=============================

The same machinery runs on posets without a minimum element.  An interval
poset subdivides the face poset of a simplex; a prism surface subdivides a
rank-2 poset whose h-polynomial is that of an annulus.
"""

from cubicalh import corpus
from cubicalh.complexes import standard_cube
from cubicalh.formal import gamma, h_general, is_kernel, lambda_kernel, local_h_general, validate_formal
from cubicalh.poset import chain

for d in range(1, 5):
    F = corpus.gen_interval_poset_subdivision(d)
    print(f"simplex on {d} vertices: valid={validate_formal(F).ok}, local h = {local_h_general(F)}")

F = corpus.gen_annulus()
print("annulus h:", h_general(F.source).poly)
print("annulus local h:", local_h_general(F))

# gamma on the faces of a cube is 2^rank
P = standard_cube(2).face_poset()
print({t: str(v) for t, v in gamma(P).values.items()})

# chains are not Eulerian, so (x-1)^rank is not a kernel there
print("kernel on a 3-chain:", is_kernel(lambda_kernel(chain(3))))
