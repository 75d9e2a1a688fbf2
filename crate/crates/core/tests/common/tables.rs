/// Row `j` (rim index, 0 = hub), column `i - 1`: `(position in ordering, label)`.
pub const TABLE_P7_W7: [[(usize, u64); 7]; 8] = [
    [(23, 72), (39, 139), (55, 206), (0, 0), (38, 133), (54, 200), (22, 69)],
    [(17, 51), (31, 104), (47, 171), (12, 37), (24, 76), (40, 143), (1, 5)],
    [(20, 60), (35, 120), (51, 187), (15, 46), (28, 92), (44, 159), (4, 14)],
    [(2, 6), (25, 80), (41, 147), (18, 55), (32, 108), (48, 175), (7, 23)],
    [(5, 15), (29, 96), (45, 163), (21, 64), (36, 124), (52, 191), (10, 32)],
    [(8, 24), (33, 112), (49, 179), (3, 10), (26, 84), (42, 151), (13, 41)],
    [(11, 33), (37, 128), (53, 195), (6, 19), (30, 100), (46, 167), (16, 50)],
    [(14, 42), (27, 88), (43, 155), (9, 28), (34, 116), (50, 183), (19, 59)],
];

/// Row `j` (rim index, 0 = hub), column `i - 1`: `(position in ordering, label)`.
pub const TABLE_P8_W7: [[(usize, u64); 8]; 8] = [
    [(48, 201), (32, 134), (16, 67), (0, 0), (63, 263), (47, 196), (31, 129), (15, 62)],
    [(56, 234), (40, 167), (24, 100), (8, 33), (49, 206), (33, 139), (17, 72), (1, 5)],
    [(60, 250), (44, 183), (28, 116), (12, 49), (53, 222), (37, 155), (21, 88), (5, 21)],
    [(50, 210), (34, 143), (18, 76), (2, 9), (57, 238), (41, 171), (25, 104), (9, 37)],
    [(54, 226), (38, 159), (22, 92), (6, 25), (61, 254), (45, 187), (29, 120), (13, 53)],
    [(58, 242), (42, 175), (26, 108), (10, 41), (51, 214), (35, 147), (19, 80), (3, 13)],
    [(62, 258), (46, 191), (30, 124), (14, 57), (55, 230), (39, 163), (23, 96), (7, 29)],
    [(52, 218), (36, 151), (20, 84), (4, 17), (59, 246), (43, 179), (27, 112), (11, 45)],
];
