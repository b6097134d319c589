// (p, k, coefficients of x^0..x^{k-1}); the polynomial is monic of degree k.
pub(crate) const DEFINING_POLYNOMIALS: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 0, 0, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (2, 8, &[1, 1, 0, 1, 1, 0, 0, 0]),
    (2, 9, &[1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (2, 10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 12, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 13, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 14, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 15, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 16, &[1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 2, &[1, 0]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 1, 0, 0]),
    (3, 5, &[1, 2, 0, 0, 0]),
    (3, 6, &[2, 1, 0, 0, 0, 0]),
    (3, 7, &[2, 0, 1, 0, 0, 0, 0]),
    (3, 8, &[2, 0, 1, 0, 0, 0, 0, 0]),
    (3, 9, &[1, 0, 1, 2, 0, 0, 0, 0, 0]),
    (3, 10, &[1, 0, 2, 0, 0, 0, 0, 0, 0, 0]),
    (3, 11, &[2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 12, &[2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 13, &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 14, &[2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 15, &[2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 16, &[1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 2, &[2, 0]),
    (5, 3, &[1, 1, 0]),
    (5, 4, &[2, 0, 0, 0]),
    (5, 5, &[1, 4, 0, 0, 0]),
    (5, 6, &[2, 1, 0, 0, 0, 0]),
    (5, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (5, 8, &[2, 0, 0, 0, 0, 0, 0, 0]),
    (5, 9, &[3, 2, 1, 0, 0, 0, 0, 0, 0]),
    (5, 10, &[3, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (5, 11, &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 12, &[4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 13, &[2, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 14, &[2, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 15, &[2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 16, &[2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 2, &[1, 0]),
    (7, 3, &[2, 0, 0]),
    (7, 4, &[1, 1, 0, 0]),
    (7, 5, &[3, 1, 0, 0, 0]),
    (7, 6, &[2, 0, 0, 0, 0, 0]),
    (7, 7, &[1, 6, 0, 0, 0, 0, 0]),
    (7, 8, &[3, 1, 0, 0, 0, 0, 0, 0]),
    (7, 9, &[2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 10, &[3, 2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 11, &[3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 12, &[2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 13, &[3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 14, &[4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 15, &[6, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, 16, &[3, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (11, 2, &[1, 0]),
    (11, 3, &[4, 1, 0]),
    (11, 4, &[2, 1, 0, 0]),
    (11, 5, &[2, 0, 0, 0, 0]),
    (11, 6, &[2, 1, 0, 0, 0, 0]),
    (11, 7, &[4, 1, 0, 0, 0, 0, 0]),
    (11, 8, &[4, 1, 0, 0, 0, 0, 0, 0]),
    (11, 9, &[5, 1, 0, 0, 0, 0, 0, 0, 0]),
    (11, 10, &[3, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (11, 11, &[1, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (11, 12, &[7, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (11, 13, &[4, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (11, 14, &[4, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (11, 15, &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (11, 16, &[5, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (13, 2, &[2, 0]),
    (13, 3, &[2, 0, 0]),
    (13, 4, &[2, 0, 0, 0]),
    (13, 5, &[2, 4, 0, 0, 0]),
    (13, 6, &[2, 0, 0, 0, 0, 0]),
    (13, 7, &[2, 3, 0, 0, 0, 0, 0]),
    (13, 8, &[2, 0, 0, 0, 0, 0, 0, 0]),
    (13, 9, &[2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (13, 10, &[9, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (13, 11, &[5, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (13, 12, &[2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (13, 13, &[1, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (13, 14, &[2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (13, 15, &[6, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (13, 16, &[2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (17, 2, &[3, 0]),
    (17, 3, &[3, 1, 0]),
    (17, 4, &[3, 0, 0, 0]),
    (17, 5, &[3, 1, 0, 0, 0]),
    (17, 6, &[7, 1, 0, 0, 0, 0]),
    (17, 7, &[5, 1, 0, 0, 0, 0, 0]),
    (17, 8, &[3, 0, 0, 0, 0, 0, 0, 0]),
    (17, 9, &[3, 1, 0, 0, 0, 0, 0, 0, 0]),
    (17, 10, &[7, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (17, 11, &[7, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (17, 12, &[2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (17, 13, &[6, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (17, 14, &[8, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (17, 15, &[6, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (19, 2, &[1, 0]),
    (19, 3, &[2, 0, 0]),
    (19, 4, &[8, 1, 0, 0]),
    (19, 5, &[3, 1, 0, 0, 0]),
    (19, 6, &[4, 0, 0, 0, 0, 0]),
    (19, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (19, 8, &[2, 1, 0, 0, 0, 0, 0, 0]),
    (19, 9, &[2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (19, 10, &[1, 4, 0, 0, 0, 0, 0, 0, 0, 0]),
    (19, 11, &[7, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (19, 12, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (19, 13, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (19, 14, &[9, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (23, 2, &[1, 0]),
    (23, 3, &[3, 1, 0]),
    (23, 4, &[2, 1, 0, 0]),
    (23, 5, &[3, 1, 0, 0, 0]),
    (23, 6, &[15, 1, 0, 0, 0, 0]),
    (23, 7, &[11, 5, 0, 0, 0, 0, 0]),
    (23, 8, &[5, 1, 0, 0, 0, 0, 0, 0]),
    (23, 9, &[3, 1, 0, 0, 0, 0, 0, 0, 0]),
    (23, 10, &[7, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (23, 11, &[2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (23, 12, &[5, 9, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (23, 13, &[10, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (29, 2, &[2, 0]),
    (29, 3, &[4, 1, 0]),
    (29, 4, &[2, 0, 0, 0]),
    (29, 5, &[8, 1, 0, 0, 0]),
    (29, 6, &[3, 1, 0, 0, 0, 0]),
    (29, 7, &[2, 0, 0, 0, 0, 0, 0]),
    (29, 8, &[2, 0, 0, 0, 0, 0, 0, 0]),
    (29, 9, &[3, 1, 0, 0, 0, 0, 0, 0, 0]),
    (29, 10, &[5, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (29, 11, &[4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (29, 12, &[2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (31, 2, &[1, 0]),
    (31, 3, &[3, 0, 0]),
    (31, 4, &[1, 1, 0, 0]),
    (31, 5, &[2, 0, 0, 0, 0]),
    (31, 6, &[5, 0, 0, 0, 0, 0]),
    (31, 7, &[3, 1, 0, 0, 0, 0, 0]),
    (31, 8, &[4, 1, 0, 0, 0, 0, 0, 0]),
    (31, 9, &[3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (31, 10, &[2, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (31, 11, &[1, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (31, 12, &[18, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (37, 2, &[2, 0]),
    (37, 3, &[2, 0, 0]),
    (37, 4, &[2, 0, 0, 0]),
    (37, 5, &[5, 1, 0, 0, 0]),
    (37, 6, &[2, 0, 0, 0, 0, 0]),
    (37, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (37, 8, &[2, 0, 0, 0, 0, 0, 0, 0]),
    (37, 9, &[2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (37, 10, &[3, 2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (37, 11, &[14, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (41, 2, &[3, 0]),
    (41, 3, &[1, 1, 0]),
    (41, 4, &[3, 0, 0, 0]),
    (41, 5, &[2, 0, 0, 0, 0]),
    (41, 6, &[3, 1, 0, 0, 0, 0]),
    (41, 7, &[3, 1, 0, 0, 0, 0, 0]),
    (41, 8, &[3, 0, 0, 0, 0, 0, 0, 0]),
    (41, 9, &[1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (41, 10, &[6, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (41, 11, &[3, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (43, 2, &[1, 0]),
    (43, 3, &[3, 0, 0]),
    (43, 4, &[3, 1, 0, 0]),
    (43, 5, &[7, 1, 0, 0, 0]),
    (43, 6, &[6, 0, 0, 0, 0, 0]),
    (43, 7, &[2, 0, 0, 0, 0, 0, 0]),
    (43, 8, &[9, 2, 0, 0, 0, 0, 0, 0]),
    (43, 9, &[3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (43, 10, &[1, 3, 0, 0, 0, 0, 0, 0, 0, 0]),
    (43, 11, &[11, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (47, 2, &[1, 0]),
    (47, 3, &[4, 1, 0]),
    (47, 4, &[5, 1, 0, 0]),
    (47, 5, &[3, 1, 0, 0, 0]),
    (47, 6, &[1, 1, 0, 0, 0, 0]),
    (47, 7, &[3, 1, 0, 0, 0, 0, 0]),
    (47, 8, &[9, 1, 0, 0, 0, 0, 0, 0]),
    (47, 9, &[13, 1, 0, 0, 0, 0, 0, 0, 0]),
    (47, 10, &[17, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (47, 11, &[10, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
];
