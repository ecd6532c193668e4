"""Frozen edge lists of the built-in fullerene solids.

Vertex labels are 0-based. Edge tuples are (i, j) with i < j, sorted
lexicographically. The lists were generated once from standard geometric
constructions (LCF code for the dodecahedron, hexagonal-barrel coordinates
for C24, truncation of the icosahedron for C60) and verified to be cubic,
connected, and to carry the expected face structure and symmetry group.
"""

# Pentagonal dodecahedron: 20 vertices, 30 edges, 12 pentagonal faces.
DODECAHEDRON_EDGES = (
    (0, 1), (0, 10), (0, 19), (1, 2), (1, 8), (2, 3),
    (2, 6), (3, 4), (3, 19), (4, 5), (4, 17), (5, 6),
    (5, 15), (6, 7), (7, 8), (7, 14), (8, 9), (9, 10),
    (9, 13), (10, 11), (11, 12), (11, 18), (12, 13), (12, 16),
    (13, 14), (14, 15), (15, 16), (16, 17), (17, 18), (18, 19),
)

# The unique C24 fullerene isomer (12 pentagons, 2 hexagons, D6d symmetry):
# vertices 0-5 form the top hexagonal face, 6-11 the bottom hexagonal face,
# 12-23 the middle 12-ring; every edge lies on at least one pentagon.
C24_EDGES = (
    (0, 1), (0, 5), (0, 12), (1, 2), (1, 14), (2, 3),
    (2, 16), (3, 4), (3, 18), (4, 5), (4, 20), (5, 22),
    (6, 7), (6, 11), (6, 13), (7, 8), (7, 15), (8, 9),
    (8, 17), (9, 10), (9, 19), (10, 11), (10, 21), (11, 23),
    (12, 13), (12, 23), (13, 14), (14, 15), (15, 16), (16, 17),
    (17, 18), (18, 19), (19, 20), (20, 21), (21, 22), (22, 23),
)

# Truncated icosahedron (buckyball): 60 vertices, 90 edges. Vertices
# 5k..5k+4 form the k-th pentagonal face. The 60 pentagon edges lie on
# the 12 pentagons; the 30 inter-pentagon edges join distinct pentagons
# and border two hexagons.
C60_PENTAGON_EDGES = (
    (0, 1), (0, 4), (1, 2), (2, 3), (3, 4), (5, 6),
    (5, 9), (6, 7), (7, 8), (8, 9), (10, 11), (10, 14),
    (11, 12), (12, 13), (13, 14), (15, 16), (15, 19), (16, 17),
    (17, 18), (18, 19), (20, 21), (20, 24), (21, 22), (22, 23),
    (23, 24), (25, 26), (25, 29), (26, 27), (27, 28), (28, 29),
    (30, 31), (30, 34), (31, 32), (32, 33), (33, 34), (35, 36),
    (35, 39), (36, 37), (37, 38), (38, 39), (40, 41), (40, 44),
    (41, 42), (42, 43), (43, 44), (45, 46), (45, 49), (46, 47),
    (47, 48), (48, 49), (50, 51), (50, 54), (51, 52), (52, 53),
    (53, 54), (55, 56), (55, 59), (56, 57), (57, 58), (58, 59),
)

C60_INTER_PENTAGON_EDGES = (
    (0, 42), (1, 33), (2, 14), (3, 5), (4, 36), (6, 13),
    (7, 26), (8, 16), (9, 37), (10, 32), (11, 22), (12, 27),
    (15, 38), (17, 25), (18, 46), (19, 56), (20, 48), (21, 28),
    (23, 31), (24, 52), (29, 47), (30, 53), (34, 41), (35, 43),
    (39, 55), (40, 54), (44, 59), (45, 57), (49, 51), (50, 58),
)
