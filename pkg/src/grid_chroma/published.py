"""Published reference values for optimal counts and greedy baselines.

Keys use the radio range as decimal text.
"""

RANGES = ("1", "1.5", "2", "2.5", "3", "3.5", "4", "4.5", "5", "5.5", "6", "6.5", "7")

# (range, hops) -> (vector1, vector2, colors)
OPTIMAL_VECTORS = {
    ("1", 2): ((2, 1), (-1, 2), 5),
    ("1.5", 2): ((-3, 0), (0, 3), 9),
    ("2", 2): ((3, 2), (-2, 3), 13),
    ("2.5", 2): ((4, 3), (-1, 5), 23),
    ("3", 2): ((5, 3), (-1, 6), 33),
    ("3.5", 2): ((5, 4), (-6, 3), 39),
    ("4", 2): ((7, 3), (-6, 5), 53),
    ("4.5", 2): ((9, 2), (-6, 7), 75),
    ("5", 2): ((9, 4), (-1, 10), 94),
    ("5.5", 2): ((9, 6), (-1, 11), 105),
    ("6", 2): ((11, 4), (-9, 8), 124),
    ("6.5", 2): ((13, 1), (-7, 11), 150),
    ("7", 2): ((10, 9), (-4, 13), 166),
    ("1", 3): ((2, 2), (-2, 2), 8),
    ("1.5", 3): ((4, 0), (0, 4), 16),
    ("2", 3): ((4, 3), (-3, 4), 25),
    ("2.5", 3): ((5, 5), (-7, 2), 45),
    ("3", 3): ((7, 5), (-8, 4), 68),
    ("3.5", 3): ((8, 5), (-8, 5), 80),
    ("4", 3): ((8, 8), (-11, 3), 112),
    ("4.5", 3): ((13, 3), (-9, 10), 157),
    ("5", 3): ((14, 4), (3, 15), 198),
    ("5.5", 3): ((16, 0), (8, 14), 224),
    ("6", 3): ((17, 4), (-12, 13), 269),
    ("6.5", 3): ((-19, 0), (9, 17), 323),
    ("7", 3): ((15, 13), (-19, 7), 352),
}

OPTIMAL_COUNTS = {key: v[2] for key, v in OPTIMAL_VECTORS.items()}

# 3-hop greedy counts: (grid side, priority) -> {range: colors}
GREEDY_PRIORITIES = {
    (10, "line"): {"1": 8, "2": 30},
    (10, "diagonal"): {"1": 8, "2": 28},
    (10, "center"): {"1": 8, "2": 30},
    (10, "random"): {"1": 13, "2": 36},
    (20, "line"): {"1": 15, "2": 33},
    (20, "diagonal"): {"1": 8, "2": 29},
    (20, "center"): {"1": 8, "2": 30},
    (20, "random"): {"1": 14, "2": 41},
}

# 3-hop: (range, grid side) -> (lattice colors, line/column greedy colors)
GREEDY_VS_LATTICE = {
    ("1", 10): (8, 8), ("1", 20): (8, 8), ("1", 30): (8, 8),
    ("1.5", 10): (16, 16), ("1.5", 20): (16, 16), ("1.5", 30): (16, 16),
    ("2", 10): (25, 30), ("2", 20): (25, 33), ("2", 30): (25, 33),
    ("3", 20): (68, 80), ("3", 30): (68, 83),
    ("3.5", 20): (80, 91), ("3.5", 30): (80, 91),
}
