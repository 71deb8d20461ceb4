"""Published reference values for the four summary tables.

Rows cover p = 2..5, columns n = 1..10.  Table 1 holds total areas,
table 2 counts of words by area, table 3 total semi-perimeters, table 4
total inner points.  These are the values this package cross-checks its
own computations against; see the ``tables`` CLI command, which flags any
cell where the computation disagrees with the published number.
"""

TABLE_TOTAL_AREA = {
    2: (2, 7, 16, 35, 70, 136, 256, 473, 860, 1545),
    3: (3, 11, 31, 73, 168, 370, 790, 1658, 3425, 6989),
    4: (4, 15, 43, 111, 261, 602, 1350, 2966, 6414, 13714),
    5: (5, 19, 55, 143, 351, 816, 1865, 4178, 9218, 20094),
}

TABLE_AREA_COUNTS = {
    2: (0, 1, 1, 1, 2, 2, 3, 4, 4, 7),
    3: (0, 0, 1, 0, 1, 2, 0, 2, 3, 1),
    4: (0, 0, 0, 1, 0, 0, 1, 1, 1, 1),
    5: (0, 0, 0, 0, 1, 0, 0, 0, 1, 1),
}

TABLE_TOTAL_SPER = {
    2: (3, 8, 16, 33, 63, 119, 219, 398, 714, 1269),
    3: (4, 10, 25, 54, 118, 251, 521, 1071, 2176, 4380),
    4: (5, 12, 29, 69, 152, 335, 727, 1557, 3297, 6931),
    5: (6, 14, 33, 77, 177, 390, 856, 1859, 4001, 8545),
}

TABLE_TOTAL_INNER = {
    2: (0, 1, 3, 7, 15, 30, 58, 109, 201, 365),
    3: (0, 3, 10, 26, 63, 143, 313, 668, 1398, 2883),
    4: (0, 5, 18, 50, 124, 296, 679, 1517, 3325, 7184),
    5: (0, 7, 26, 74, 190, 457, 1070, 2439, 5453, 12013),
}

PUBLISHED_TABLES = {
    1: TABLE_TOTAL_AREA,
    2: TABLE_AREA_COUNTS,
    3: TABLE_TOTAL_SPER,
    4: TABLE_TOTAL_INNER,
}

TABLE_TITLES = {
    1: "total area by length",
    2: "word count by area",
    3: "total semi-perimeter by length",
    4: "total inner points by length",
}
