"""Worked example tableaux and expansions used as golden data (None = inner cell)."""

_ = None

SSRCT_2423 = [[5, 3], [8, 8, 6, 3], [_, 2], [_, _, 9]]
SSRT_4322 = [[_, _, 9, 3], [_, 8, 6], [8, 3], [5, 2]]

RHO_BETA = (2, 3, 2)
RHO_SSRT = [[_, _, _, 8, 7], [_, _, 6, 4], [_, _, 3], [5, 5, 2], [4], [1]]
RHO_SSRCT = [[1], [4], [5, 5, 3], [_, _, 6, 4], [_, _, _, 8, 7], [_, _, 2]]

STANDARDIZE_IN = [[_, _, _, _, 3, 3, 1, 1, 1], [_, 2, 1], [_, 1], [_, _, _, 2]]
STANDARDIZE_OUT = [[_, _, _, _, 9, 8, 3, 2, 1], [_, 7, 4], [_, 5], [_, _, _, 6]]

INSERT_RC_BEFORE = [[1, 1], [3, 2, 2, 2], [6, 5, 4], [7, 4, 3]]
INSERT_RC_AFTER = [[1, 1], [2], [3, 3, 2, 2], [6, 5, 5], [7, 4, 4]]

INSERT_RT_BEFORE = [[7, 5, 4, 2], [6, 4, 3], [3, 2, 2], [1, 1]]
INSERT_RT_AFTER = [[7, 5, 5, 2], [6, 4, 4], [3, 3, 2], [2, 1], [1]]

RECT_RC_INPUT = [[3, 2], [_, _, _, 6], [_, 1], [_, _, 5, 4]]
RECT_RC_CHAIN = [
    [],
    [[3]],
    [[3, 1]],
    [[1], [3, 2]],
    [[1], [3, 2], [5]],
    [[1], [3, 2], [5, 4]],
    [[1], [3, 2], [5, 4], [6]],
]

RECT_RT_INPUT = [[_, _, _, 6], [_, _, 5, 4], [_, 2], [3, 1]]
RECT_RT_CHAIN = [
    [],
    [[3]],
    [[3, 1]],
    [[3, 2], [1]],
    [[5, 2], [3], [1]],
    [[5, 4], [3, 2], [1]],
    [[6, 4], [5, 2], [3], [1]],
]

NCLR_SHAPE = ((1, 4, 3), (3, 2))
NCLR_WITNESSES = [
    [[1], [_, _, _, 2], [_, _, 3]],
    [[3], [_, _, _, 2], [_, _, 1]],
]

BIG_SHAPE = ((9, 3, 2, 4), (4, 1, 1, 3))
BIG_SCHUR = {(7, 1, 1): 1, (7, 2): 1, (6, 2, 1): 2, (6, 1, 1, 1): 1, (5, 2, 1, 1): 1, (5, 2, 2): 1}

BIG_LEFT = [
    [[_, _, _, _, 1, 1, 1, 1, 1], [_, 2, 1], [_, 1], [_, _, _, 3]],
    [[_, _, _, _, 1, 1, 1, 1, 1], [_, 2, 1], [_, 1], [_, _, _, 2]],
    [[_, _, _, _, 2, 1, 1, 1, 1], [_, 2, 1], [_, 1], [_, _, _, 3]],
    [[_, _, _, _, 3, 1, 1, 1, 1], [_, 2, 1], [_, 1], [_, _, _, 2]],
    [[_, _, _, _, 4, 1, 1, 1, 1], [_, 2, 1], [_, 1], [_, _, _, 3]],
    [[_, _, _, _, 4, 2, 1, 1, 1], [_, 2, 1], [_, 1], [_, _, _, 3]],
    [[_, _, _, _, 3, 3, 1, 1, 1], [_, 2, 1], [_, 1], [_, _, _, 2]],
]

BIG_RIGHT = [
    [[_, _, _, _, 3, 3, 3, 3, 3], [_, 3, 2], [_, 1], [_, _, _, 3]],
    [[_, _, _, _, 2, 2, 2, 2, 2], [_, 2, 1], [_, 1], [_, _, _, 2]],
    [[_, _, _, _, 3, 3, 3, 3, 3], [_, 2, 2], [_, 1], [_, _, _, 3]],
    [[_, _, _, _, 3, 3, 3, 3, 3], [_, 3, 1], [_, 2], [_, _, _, 2]],
    [[_, _, _, _, 4, 4, 4, 4, 4], [_, 4, 2], [_, 1], [_, _, _, 3]],
    [[_, _, _, _, 4, 4, 4, 4, 4], [_, 3, 2], [_, 1], [_, _, _, 3]],
    [[_, _, _, _, 3, 3, 3, 3, 3], [_, 2, 1], [_, 1], [_, _, _, 2]],
]

SMALL_SHAPE = ((2, 3, 3, 2), (1, 2, 1))
SMALL_SCHUR = {(2, 2, 1, 1): 1, (2, 2, 2): 1}

SMALL_LEFT = [
    [[1, 1], [_, 3, 2], [_, _, 4], [_, 2]],
    [[1, 1], [_, 3, 3], [_, _, 2], [_, 2]],
]

SMALL_RIGHT = [
    [[3, 2], [_, 4, 4], [_, _, 3], [_, 1]],
    [[1, 1], [_, 3, 3], [_, _, 2], [_, 2]],
]
