//! Orbit-character coefficient tables for degrees 8, 12 and 14, as printed,
//! with each block prefactor multiplied into its entries. Each row is
//! `(coefficient, ν)` for the term `coefficient · Q(ν) · μ(ν)`.

pub const OMEGA_8: [(u64, &[u32]); 22] = [
    (40320, &[8]),
    (705600, &[4, 4]),
    (282240, &[5, 3]),
    (141120, &[6, 2]),
    (40320, &[7, 1]),
    (806400, &[3, 3, 2]),
    (604800, &[4, 2, 2]),
    (201600, &[4, 3, 1]),
    (120960, &[5, 2, 1]),
    (80640, &[6, 1, 1]),
    (7257600, &[2, 2, 2, 2]),
    (403200, &[3, 2, 2, 1]),
    (537600, &[3, 3, 1, 1]),
    (201600, &[4, 2, 1, 1]),
    (241920, &[5, 1, 1, 1]),
    (1451520, &[2, 2, 2, 1, 1]),
    (483840, &[3, 2, 1, 1, 1]),
    (967680, &[4, 1, 1, 1, 1]),
    (2903040, &[2, 2, 1, 1, 1, 1]),
    (4838400, &[3, 1, 1, 1, 1, 1]),
    (29030400, &[2, 1, 1, 1, 1, 1, 1]),
    (1625702400, &[1, 1, 1, 1, 1, 1, 1, 1]),
];

pub const OMEGA_12: [(u64, &[u32]); 70] = [
    (40320, &[12]),
    (9313920, &[6, 6]),
    (3991680, &[7, 5]),
    (2494800, &[8, 4]),
    (1108800, &[9, 3]),
    (332640, &[10, 2]),
    (60480, &[11, 1]),
    (149688000, &[4, 4, 4]),
    (19958400, &[5, 4, 3]),
    (23950080, &[5, 5, 2]),
    (26611200, &[6, 3, 3]),
    (9979200, &[6, 4, 2]),
    (3991680, &[6, 5, 1]),
    (5702400, &[7, 3, 2]),
    (2851200, &[7, 4, 1]),
    (4276800, &[8, 2, 2]),
    (1425600, &[8, 3, 1]),
    (475200, &[9, 2, 1]),
    (190080, &[10, 1, 1]),
    (1064448000, &[3, 3, 3, 3]),
    (66528000, &[4, 3, 3, 2]),
    (99792000, &[4, 4, 2, 2]),
    (33264000, &[4, 4, 3, 1]),
    (39916800, &[5, 3, 2, 2]),
    (26611200, &[5, 3, 3, 1]),
    (9979200, &[5, 4, 2, 1]),
    (15966720, &[5, 5, 1, 1]),
    (59875200, &[6, 2, 2, 2]),
    (6652800, &[6, 3, 2, 1]),
    (6652800, &[6, 4, 1, 1]),
    (5702400, &[7, 2, 2, 1]),
    (3801600, &[7, 3, 1, 1]),
    (1425600, &[8, 2, 1, 1]),
    (950400, &[9, 1, 1, 1]),
    (479001600, &[3, 3, 2, 2, 2]),
    (159667200, &[3, 3, 3, 2, 1]),
    (718502400, &[4, 2, 2, 2, 2]),
    (39916800, &[4, 3, 2, 2, 1]),
    (53222400, &[4, 3, 3, 1, 1]),
    (39916800, &[4, 4, 2, 1, 1]),
    (71850240, &[5, 2, 2, 2, 1]),
    (15966720, &[5, 3, 2, 1, 1]),
    (23950080, &[5, 4, 1, 1, 1]),
    (15966720, &[6, 2, 2, 1, 1]),
    (15966720, &[6, 3, 1, 1, 1]),
    (6842880, &[7, 2, 1, 1, 1]),
    (6842880, &[8, 1, 1, 1, 1]),
    (32332608000, &[2, 2, 2, 2, 2, 2]),
    (718502400, &[3, 2, 2, 2, 2, 1]),
    (159667200, &[3, 3, 2, 2, 1, 1]),
    (479001600, &[3, 3, 3, 1, 1, 1]),
    (179625600, &[4, 2, 2, 2, 1, 1]),
    (59875200, &[4, 3, 2, 1, 1, 1]),
    (239500800, &[4, 4, 1, 1, 1, 1]),
    (71850240, &[5, 2, 2, 1, 1, 1]),
    (95800320, &[5, 3, 1, 1, 1, 1]),
    (47900160, &[6, 2, 1, 1, 1, 1]),
    (68428800, &[7, 1, 1, 1, 1, 1]),
    (7185024000, &[2, 2, 2, 2, 2, 1, 1]),
    (718502400, &[3, 2, 2, 2, 1, 1, 1]),
    (638668800, &[3, 3, 2, 1, 1, 1, 1]),
    (479001600, &[4, 2, 2, 1, 1, 1, 1]),
    (798336000, &[4, 3, 1, 1, 1, 1, 1]),
    (479001600, &[5, 2, 1, 1, 1, 1, 1]),
    (958003200, &[6, 1, 1, 1, 1, 1, 1]),
    (17244057600, &[2, 2, 2, 2, 1, 1, 1, 1]),
    (4790016000, &[3, 2, 2, 1, 1, 1, 1, 1]),
    (19160064000, &[3, 3, 1, 1, 1, 1, 1, 1]),
    (7185024000, &[4, 2, 1, 1, 1, 1, 1, 1]),
    (20118067200, &[5, 1, 1, 1, 1, 1, 1, 1]),
];

pub const OMEGA_14: [(u64, &[u32]); 116] = [
    (40320, &[14]),
    (34594560, &[7, 7]),
    (15135120, &[8, 6]),
    (10090080, &[9, 5]),
    (5045040, &[10, 4]),
    (1834560, &[11, 3]),
    (458640, &[12, 2]),
    (70560, &[13, 1]),
    (363242880, &[5, 5, 4]),
    (302702400, &[6, 4, 4]),
    (121080960, &[6, 5, 3]),
    (121080960, &[6, 6, 2]),
    (86486400, &[7, 4, 3]),
    (51891840, &[7, 5, 2]),
    (17297280, &[7, 6, 1]),
    (86486400, &[8, 3, 3]),
    (32432400, &[8, 4, 2]),
    (12972960, &[8, 5, 1]),
    (14414400, &[9, 3, 2]),
    (7207200, &[9, 4, 1]),
    (8648640, &[10, 2, 2]),
    (2882880, &[10, 3, 1]),
    (786240, &[11, 2, 1]),
    (262080, &[12, 1, 1]),
    (2018016000, &[4, 4, 3, 3]),
    (2270268000, &[4, 4, 4, 2]),
    (2421619200, &[5, 3, 3, 3]),
    (302702400, &[5, 4, 3, 2]),
    (302702400, &[5, 4, 4, 1]),
    (726485760, &[5, 5, 2, 2]),
    (242161920, &[5, 5, 3, 1]),
    (403603200, &[6, 3, 3, 2]),
    (302702400, &[6, 4, 2, 2]),
    (100900800, &[6, 4, 3, 1]),
    (60540480, &[6, 5, 2, 1]),
    (80720640, &[6, 6, 1, 1]),
    (172972800, &[7, 3, 2, 2]),
    (115315200, &[7, 3, 3, 1]),
    (43243200, &[7, 4, 2, 1]),
    (34594560, &[7, 5, 1, 1]),
    (194594400, &[8, 2, 2, 2]),
    (21621600, &[8, 3, 2, 1]),
    (21621600, &[8, 4, 1, 1]),
    (14414400, &[9, 2, 2, 1]),
    (9609600, &[9, 3, 1, 1]),
    (2882880, &[10, 2, 1, 1]),
    (1572480, &[11, 1, 1, 1]),
    (19372953600, &[3, 3, 3, 3, 2]),
    (2421619200, &[4, 3, 3, 2, 2]),
    (2421619200, &[4, 3, 3, 3, 1]),
    (5448643200, &[4, 4, 2, 2, 2]),
    (605404800, &[4, 4, 3, 2, 1]),
    (1816214400, &[4, 4, 4, 1, 1]),
    (2179457280, &[5, 3, 2, 2, 2]),
    (484323840, &[5, 3, 3, 2, 1]),
    (363242880, &[5, 4, 2, 2, 1]),
    (242161920, &[5, 4, 3, 1, 1]),
    (290594304, &[5, 5, 2, 1, 1]),
    (4358914560, &[6, 2, 2, 2, 2]),
    (242161920, &[6, 3, 2, 2, 1]),
    (322882560, &[6, 3, 3, 1, 1]),
    (121080960, &[6, 4, 2, 1, 1]),
    (145297152, &[6, 5, 1, 1, 1]),
    (311351040, &[7, 2, 2, 2, 1]),
    (69189120, &[7, 3, 2, 1, 1]),
    (103783680, &[7, 4, 1, 1, 1]),
    (51891840, &[8, 2, 2, 1, 1]),
    (51891840, &[8, 3, 1, 1, 1]),
    (17297280, &[9, 2, 1, 1, 1]),
    (13837824, &[10, 1, 1, 1, 1]),
    (43589145600, &[3, 3, 2, 2, 2, 2]),
    (7264857600, &[3, 3, 3, 2, 2, 1]),
    (19372953600, &[3, 3, 3, 3, 1, 1]),
    (81729648000, &[4, 2, 2, 2, 2, 2]),
    (2724321600, &[4, 3, 2, 2, 2, 1]),
    (1210809600, &[4, 3, 3, 2, 1, 1]),
    (1816214400, &[4, 4, 2, 2, 1, 1]),
    (1816214400, &[4, 4, 3, 1, 1, 1]),
    (6538371840, &[5, 2, 2, 2, 2, 1]),
    (726485760, &[5, 3, 2, 2, 1, 1]),
    (1452971520, &[5, 3, 3, 1, 1, 1]),
    (544864320, &[5, 4, 2, 1, 1, 1]),
    (1743565824, &[5, 5, 1, 1, 1, 1]),
    (1089728640, &[6, 2, 2, 2, 1, 1]),
    (363242880, &[6, 3, 2, 1, 1, 1]),
    (726485760, &[6, 4, 1, 1, 1, 1]),
    (311351040, &[7, 2, 2, 1, 1, 1]),
    (415134720, &[7, 3, 1, 1, 1, 1]),
    (155675520, &[8, 2, 1, 1, 1, 1]),
    (172972800, &[9, 1, 1, 1, 1, 1]),
    (6865290432000, &[2, 2, 2, 2, 2, 2, 2]),
    (108972864000, &[3, 2, 2, 2, 2, 2, 1]),
    (14529715200, &[3, 3, 2, 2, 2, 1, 1]),
    (14529715200, &[3, 3, 3, 2, 1, 1, 1]),
    (21794572800, &[4, 2, 2, 2, 2, 1, 1]),
    (3632428800, &[4, 3, 2, 2, 1, 1, 1]),
    (9686476800, &[4, 3, 3, 1, 1, 1, 1]),
    (7264857600, &[4, 4, 2, 1, 1, 1, 1]),
    (6538371840, &[5, 2, 2, 2, 1, 1, 1]),
    (2905943040, &[5, 3, 2, 1, 1, 1, 1]),
    (7264857600, &[5, 4, 1, 1, 1, 1, 1]),
    (2905943040, &[6, 2, 2, 1, 1, 1, 1]),
    (4843238400, &[6, 3, 1, 1, 1, 1, 1]),
    (2075673600, &[7, 2, 1, 1, 1, 1, 1]),
    (3113510400, &[8, 1, 1, 1, 1, 1, 1]),
    (1961511552000, &[2, 2, 2, 2, 2, 2, 1, 1]),
    (130767436800, &[3, 2, 2, 2, 2, 1, 1, 1]),
    (58118860800, &[3, 3, 2, 2, 1, 1, 1, 1]),
    (290594304000, &[3, 3, 3, 1, 1, 1, 1, 1]),
    (65383718400, &[4, 2, 2, 2, 1, 1, 1, 1]),
    (36324288000, &[4, 3, 2, 1, 1, 1, 1, 1]),
    (217945728000, &[4, 4, 1, 1, 1, 1, 1, 1]),
    (43589145600, &[5, 2, 2, 1, 1, 1, 1, 1]),
    (87178291200, &[5, 3, 1, 1, 1, 1, 1, 1]),
    (43589145600, &[6, 2, 1, 1, 1, 1, 1, 1]),
    (87178291200, &[7, 1, 1, 1, 1, 1, 1, 1]),
];
