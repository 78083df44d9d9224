//! Published values of `a_k(n)` and candidate counts kept for comparison.

/// `(k, n, a_k(n))` from the table covering `3 <= k <= 20`.
pub const TABLE_SMALL_K: &[(u32, u32, u64)] = &[
    (3, 5, 4),
    (3, 6, 12),
    (3, 7, 24),
    (3, 8, 66),
    (3, 9, 160),
    (3, 10, 448),
    (3, 11, 1186),
    (3, 12, 3334),
    (3, 13, 9235),
    (4, 5, 12),
    (4, 6, 35),
    (4, 7, 108),
    (4, 8, 369),
    (4, 9, 1285),
    (4, 10, 4655),
    (4, 11, 17073),
    (4, 12, 63600),
    (4, 13, 238591),
    (5, 5, 25),
    (5, 6, 118),
    (5, 7, 551),
    (5, 8, 2812),
    (5, 9, 14445),
    (5, 10, 76092),
    (5, 11, 403976),
    (5, 12, 2167116),
    (5, 13, 11698961),
    (6, 5, 22),
    (6, 6, 82),
    (6, 7, 333),
    (6, 8, 1448),
    (6, 9, 6572),
    (6, 10, 30490),
    (6, 11, 143552),
    (6, 12, 683101),
    (6, 13, 3274826),
    (7, 5, 25),
    (7, 6, 118),
    (7, 7, 558),
    (7, 8, 2876),
    (7, 9, 14982),
    (7, 10, 80075),
    (7, 11, 431889),
    (7, 12, 2354991),
    (7, 13, 12930257),
    (8, 5, 50),
    (8, 6, 269),
    (8, 7, 1605),
    (8, 8, 10102),
    (8, 9, 65323),
    (8, 10, 430302),
    (8, 11, 2868320),
    (8, 12, 19299334),
    (8, 13, 130807068),
    (9, 5, 82),
    (9, 6, 585),
    (9, 7, 4418),
    (9, 8, 34838),
    (9, 9, 280014),
    (9, 10, 2285047),
    (9, 11, 18838395),
    (9, 12, 156644526),
    (9, 13, 1311575691),
    (10, 5, 127),
    (10, 6, 985),
    (10, 7, 8350),
    (10, 8, 73675),
    (10, 9, 664411),
    (10, 10, 6078768),
    (10, 11, 56198759),
    (10, 12, 523924389),
    (11, 5, 186),
    (11, 6, 1750),
    (11, 7, 17501),
    (11, 8, 181127),
    (11, 9, 1908239),
    (11, 10, 20376032),
    (11, 11, 219770162),
    (11, 12, 2390025622),
    (12, 5, 168),
    (12, 6, 1438),
    (12, 7, 13512),
    (12, 8, 131801),
    (12, 9, 1314914),
    (12, 10, 13303523),
    (12, 11, 136035511),
    (12, 12, 1402844804),
    (13, 5, 187),
    (13, 6, 1765),
    (13, 7, 17775),
    (13, 8, 185297),
    (13, 9, 1968684),
    (13, 10, 21208739),
    (13, 11, 230877323),
    (14, 5, 263),
    (14, 6, 2718),
    (14, 7, 30467),
    (14, 8, 352375),
    (14, 9, 4158216),
    (14, 10, 49734303),
    (14, 11, 601094660),
    (15, 5, 362),
    (15, 6, 4336),
    (15, 7, 55264),
    (15, 8, 725869),
    (15, 9, 9707046),
    (15, 10, 131517548),
    (15, 11, 1800038803),
    (16, 5, 472),
    (16, 6, 6040),
    (16, 7, 83252),
    (16, 8, 1180526),
    (16, 9, 17054708),
    (16, 10, 249598727),
    (16, 11, 3690421289),
    (17, 5, 613),
    (17, 6, 8814),
    (17, 7, 134422),
    (17, 8, 2104485),
    (17, 9, 33522023),
    (17, 10, 540742895),
    (18, 5, 566),
    (18, 6, 7678),
    (18, 7, 112514),
    (18, 8, 1694978),
    (18, 9, 26019735),
    (18, 10, 404616118),
    (19, 5, 615),
    (19, 6, 8839),
    (19, 7, 135175),
    (19, 8, 2123088),
    (19, 9, 33942901),
    (19, 10, 549711709),
    (20, 5, 776),
    (20, 6, 11876),
    (20, 7, 195122),
    (20, 8, 3291481),
    (20, 9, 56537856),
    (20, 10, 983715865),
];

/// `(k, n, a_k(n))` from the table covering `21 <= k <= 50`.
pub const TABLE_LARGE_K: &[(u32, u32, u64)] = &[
    (21, 5, 972),
    (21, 6, 16410),
    (21, 7, 294091),
    (21, 8, 5402087),
    (36, 5, 4575),
    (36, 6, 130711),
    (36, 7, 3943836),
    (22, 5, 1179),
    (22, 6, 20970),
    (22, 7, 397852),
    (22, 8, 7739008),
    (37, 5, 4796),
    (37, 6, 140434),
    (37, 7, 4326289),
    (23, 5, 1437),
    (23, 6, 27720),
    (23, 7, 566007),
    (23, 8, 11832175),
    (38, 5, 5380),
    (38, 6, 163027),
    (38, 7, 5204536),
    (24, 5, 1347),
    (24, 6, 24998),
    (24, 7, 495773),
    (24, 8, 10079003),
    (39, 5, 6089),
    (39, 6, 193587),
    (39, 7, 6464267),
    (25, 5, 1439),
    (25, 6, 27787),
    (25, 7, 568602),
    (25, 8, 11917261),
    (40, 5, 6760),
    (40, 6, 221521),
    (40, 7, 7634297),
    (26, 5, 1711),
    (26, 6, 34763),
    (26, 7, 751172),
    (26, 8, 16624712),
    (41, 5, 7578),
    (41, 6, 259396),
    (41, 7, 9311913),
    (27, 5, 2045),
    (27, 6, 44687),
    (27, 7, 1031920),
    (27, 8, 24389611),
    (42, 5, 7282),
    (42, 6, 244564),
    (42, 7, 8643473),
    (28, 5, 2376),
    (28, 6, 54133),
    (28, 7, 1307384),
    (28, 8, 32317393),
    (43, 5, 7584),
    (43, 6, 259838),
    (43, 7, 9341040),
    (29, 5, 2786),
    (29, 6, 67601),
    (29, 7, 1729686),
    (29, 8, 45260884),
    (44, 5, 8373),
    (44, 6, 295558),
    (44, 7, 10958872),
    (30, 5, 2641),
    (30, 6, 62252),
    (30, 7, 1557663),
    (30, 8, 39891448),
    (45, 5, 9321),
    (45, 6, 342841),
    (45, 7, 13215115),
    (31, 5, 2790),
    (31, 6, 67777),
    (31, 7, 1737915),
    (31, 8, 45587429),
    (46, 5, 10207),
    (46, 6, 385546),
    (46, 7, 15274792),
    (32, 5, 3204),
    (32, 6, 81066),
    (32, 7, 2169846),
    (32, 8, 59424885),
    (47, 5, 11282),
    (47, 6, 442543),
    (47, 7, 18169170),
    (33, 5, 3706),
    (33, 6, 99420),
    (33, 7, 2808616),
    (33, 8, 81124890),
    (48, 5, 10890),
    (48, 6, 420154),
    (48, 7, 17012270),
    (34, 5, 4193),
    (34, 6, 116465),
    (34, 7, 3413064),
    (34, 8, 102292464),
    (49, 5, 11290),
    (49, 6, 443178),
    (49, 7, 18217475),
    (35, 5, 4789),
    (35, 6, 140075),
    (35, 7, 4306774),
    (35, 8, 135337752),
    (50, 5, 12309),
    (50, 6, 495988),
    (50, 7, 20944951),
];

/// `(k, n, a_k(n), c1, c2)` from the candidate comparison table.
pub const TABLE_CANDIDATES: &[(u32, u32, u64, u64, u64)] = &[
    (5, 4, 7, 21, 19),
    (5, 5, 25, 74, 62),
    (5, 6, 118, 242, 192),
    (5, 7, 551, 1038, 816),
    (5, 8, 2812, 4476, 3541),
    (5, 9, 14445, 21945, 17297),
    (5, 10, 76092, 111232, 87336),
    (5, 11, 403976, 580139, 452215),
    (7, 4, 7, 31, 19),
    (7, 5, 25, 107, 62),
    (7, 6, 118, 356, 196),
    (7, 7, 558, 1530, 821),
    (7, 8, 2876, 6682, 3584),
    (7, 9, 14982, 33057, 17778),
    (7, 10, 80075, 168881, 91109),
    (7, 11, 431889, 889721, 479814),
    (13, 4, 23, 126, 76),
    (13, 5, 187, 721, 408),
    (13, 6, 1765, 5059, 2697),
    (13, 7, 17775, 43842, 23412),
    (13, 8, 185297, 420958, 223789),
    (13, 9, 1968684, 4294445, 2274489),
    (13, 10, 21208739, 45258582, 23849241),
    (13, 11, 230877323, 485481211, 254712159),
    (17, 4, 48, 255, 171),
    (17, 5, 614, 2039, 1261),
    (17, 6, 8814, 22038, 12964),
    (17, 7, 134422, 292887, 173839),
    (17, 8, 2104485, 4311681, 2545538),
    (17, 9, 33522023, 66600525, 39008006),
    (17, 10, 540742895, 1057440375, 614066925),
];
