"""Expected values for the derived examples, frozen before the package tests ran.

``test_oracles.py`` recomputes each one by brute force.
"""

from oracles import pairs

C3 = (3, [(0, 1), (1, 2), (0, 2)])
C4 = (4, [(0, 1), (1, 2), (2, 3), (0, 3)])
C5 = (5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
K4 = (4, pairs(4))
K5 = (5, pairs(5))
BOWTIE = (5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
TWO_TRIANGLES = (6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
NET = (6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])

# "E?~o": graph6 for 6 vertices, decoded by hand from the 15 upper-triangle bits
E_TILDE_O_EDGES = [(0, 4), (1, 4), (2, 4), (3, 4), (0, 5), (1, 5), (2, 5), (3, 5)]

BICYCLE_DIM = {"C4": 1, "C3": 0, "K4": 2, "BOWTIE": 0, "K5": 0, "TWO_TRIANGLES": 0}
TAU = {"C4": 0, "C3": 1, "K4": 1, "K5": 2, "BOWTIE": 2, "NET": 1}
F2_NULLITY_A = {"C4": 2, "C3": 1, "C5": 1, "K5": 1}
F2_NULLITY_J = {4: 3, 5: 4}
# 2-nullity of P for K4: P = J since degrees are odd
F2_NULLITY_P_K4 = 3
