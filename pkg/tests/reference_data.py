"""Frozen reference values the implementation must reproduce.

Grid marks are (row, col) positions of the X labels in the published
codeword tables for q = 5, 7, 9, 11, 13; generator sets are the
published S listings for q = 5, 7, 9; the interleaved rows carry the
published [[2q^2, 2q, t=q]] parameters and gains.
"""

GRID_MARKS = {
    5: {(0, 0), (1, 3), (2, 1), (3, 4), (4, 2)},
    7: {(0, 0), (1, 2), (2, 4), (3, 6), (4, 1), (5, 3), (6, 5)},
    9: {(0, 0), (0, 3), (0, 6),
        (3, 2), (3, 5), (3, 8),
        (6, 1), (6, 4), (6, 7)},
    11: {(0, 0), (1, 7), (2, 3), (3, 10), (4, 6), (5, 2), (6, 9), (7, 5),
         (8, 1), (9, 8), (10, 4)},
    13: {(0, 0), (1, 4), (2, 8), (3, 12), (4, 3), (5, 7), (6, 11), (7, 2),
         (8, 6), (9, 10), (10, 1), (11, 5), (12, 9)},
}

GENERATOR_SETS = {
    5: {(-4, -3), (-4, 2), (-3, 4), (-3, -1), (-2, 1), (-2, -4), (-1, 3),
        (-1, -2), (1, -3), (1, 2), (2, -1), (2, 4), (3, 1), (3, -4), (4, 3),
        (4, -2)},
    7: {(-6, 4), (-6, -3), (-5, 1), (-5, -6), (-4, 5), (-4, -2), (-3, 2),
        (-3, -5), (-2, 6), (-2, -1), (-1, 3), (-1, -4), (1, 4), (1, -3),
        (2, 1), (2, -6), (3, 5), (3, -2), (4, 2), (4, -5), (5, 6), (5, -1),
        (6, 3), (6, -4)},
    9: {(-8, 6), (-8, -3), (-7, 3), (-7, -6), (-5, 6), (-5, -3), (-4, 3),
        (-4, -6), (-2, 6), (-2, -3), (-1, 3), (-1, -6), (1, 6), (1, -3),
        (2, 3), (2, -6), (4, 6), (4, -3), (5, 3), (5, -6), (7, 6), (7, -3),
        (8, 3), (8, -6)},
}

# q -> (n, k, t, gain to five decimals)
INTERLEAVED_ROWS = {
    5: (50, 10, 5, "1.2"),
    7: (98, 14, 7, "1.14286"),
    9: (162, 18, 9, "1.11111"),
    11: (242, 22, 11, "1.09091"),
    13: (338, 26, 13, "1.07692"),
    15: (450, 30, 15, "1.06667"),
    17: (578, 34, 17, "1.05882"),
}

# q -> {move vector: weight}; the distance is the minimum of the weights
EXAMPLE_CANDIDATES = {
    7: {(1, -3): 4, (2, 1): 3},
    9: {(1, -3): 4, (3, 0): 3},
    11: {(1, -3): 4, (3, 2): 5},
    13: {(1, -3): 4, (4, 1): 5},
}

EXAMPLE_DISTANCES = {7: 3, 9: 3, 11: 4, 13: 4}

T2_COLUMN_CODES = ["00", "12", "24", "31", "43"]
T2_ROW_CODES = ["00", "13", "21", "34", "42"]
