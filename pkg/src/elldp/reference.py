"""Published table values the verifier compares against.

Nothing in the computing modules imports this file; only the ``tables``
command and the tests read it.
"""

# 2rho_{j} = m_j varpi_j, root-system node order 1..l
M_VECTOR = {
    "E8": (23, 17, 13, 9, 11, 14, 19, 29),
    "E7": (17, 14, 11, 8, 10, 13, 18),
    "E6": (12, 11, 9, 7, 9, 12),
    "D5": (8, 7, 8, 6, 8),
}

# degrees d_i of the alpha_5-graded pieces, i = 1..r
Z_DEGREES = {
    "E8": (2, 3, 3, 2, 1),
    "E7": (4, 4, 2),
    "E6": (6, 3),
    "D5": (8,),
}

# weight -> multiplicity
Z_WEIGHTS = {
    "E8": {1: 2, 2: 3, 3: 3, 4: 2, 5: 1},
    "E7": {1: 4, 2: 4, 3: 2},
    "E6": {1: 6, 2: 3},
    "D5": {1: 8},
}

# 1 together with the highest-root coefficients
LOOIJENGA_WEIGHTS = {
    "E8": {1: 1, 2: 2, 3: 2, 4: 2, 5: 1, 6: 1},
    "E7": {1: 2, 2: 3, 3: 2, 4: 1},
    "E6": {1: 3, 2: 3, 3: 1},
    "D5": {1: 4, 2: 2},
}

# X0 = (relations) in A^n(ambient)
CI_TABLE = {
    "E8": {"relations": (6,), "ambient": (1, 2, 3)},
    "E7": {"relations": (4,), "ambient": (1, 1, 2)},
    "E6": {"relations": (3,), "ambient": (1, 1, 1)},
    "D5": {"relations": (2, 2), "ambient": (1, 1, 1, 1)},
}

RANK = {"D5": 5, "E6": 6, "E7": 7, "E8": 8}

# dim H^0(E, g) = l + 4 for the subregular bundle
H0_DIMENSION = {t: l + 4 for t, l in RANK.items()}

# dim Z = l + 3
Z_WEIGHT_COUNT = {t: l + 3 for t, l in RANK.items()}

# classical counts on del Pezzo surfaces of degree 9 - l
LINE_COUNT = {"D5": 16, "E6": 27, "E7": 56, "E8": 240}
ROOT_COUNT = {"D5": 40, "E6": 72, "E7": 126, "E8": 240}

# |P/Q|
DISCRIMINANT = {"D5": 4, "E6": 3, "E7": 2, "E8": 1}

POSITIVE_ROOT_COUNT = {"D5": 20, "E6": 36, "E7": 63, "E8": 120}

# unstable cocharacters -sum r_i alpha_i^v, as r
REGULAR_COCHARACTERS = [(4,)]
SUBREGULAR_COCHARACTERS = [(5,), (4, 5)]

MILNOR = {
    "A1": 1,
    "E8": 8,
    "simply_elliptic_E8": 10,
}
