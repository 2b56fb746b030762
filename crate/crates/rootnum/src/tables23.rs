//! Local root numbers at p = 2, 3 for potentially good reduction, as
//! declarative rows keyed on the minimal model.
//!
//! A row matches when v(c4), v(c6) fall in the inclusive ranges and v(Δ)
//! equals `vd`; the sign is then read off the residues of the units
//! c4/p^v(c4) mod p^k4 and c6/p^v(c6) mod p^k6. A zero invariant has
//! valuation `INF` and unit 0.

pub const INF: u32 = u32::MAX;

pub struct Row {
    pub p: u64,
    pub v4: (u32, u32),
    pub v6: (u32, u32),
    pub vd: u32,
    pub k4: u32,
    pub k6: u32,
    /// (c4 unit mod p^k4, c6 unit mod p^k6, W)
    pub classes: &'static [(u32, u32, i8)],
}

#[rustfmt::skip]
pub static ROWS: &[Row] = &[
    Row { p: 2, v4: (4, 4), v6: (5, 5), vd: 4, k4: 3, k6: 3, classes: &[(1, 1, 1), (1, 3, 1), (1, 5, 1), (1, 7, -1), (3, 1, -1), (3, 3, -1), (3, 5, -1), (3, 7, -1), (5, 1, 1), (5, 3, -1), (5, 5, 1), (5, 7, 1), (7, 1, -1), (7, 3, -1), (7, 5, -1), (7, 7, -1)] },
    Row { p: 2, v4: (5, 5), v6: (5, 5), vd: 4, k4: 0, k6: 3, classes: &[(0, 1, -1), (0, 3, 1), (0, 5, 1), (0, 7, 1)] },
    Row { p: 2, v4: (6, INF), v6: (5, 5), vd: 4, k4: 0, k6: 0, classes: &[(0, 0, -1)] },
    Row { p: 2, v4: (4, 4), v6: (7, 7), vd: 6, k4: 4, k6: 2, classes: &[(1, 1, 1), (1, 3, 1), (3, 1, -1), (3, 3, 1), (5, 1, 1), (5, 3, 1), (7, 1, -1), (7, 3, 1), (9, 1, 1), (9, 3, 1), (11, 1, 1), (11, 3, -1), (13, 1, 1), (13, 3, 1), (15, 1, 1), (15, 3, -1)] },
    Row { p: 2, v4: (4, 4), v6: (8, 8), vd: 6, k4: 4, k6: 0, classes: &[(1, 0, -1), (3, 0, 1), (5, 0, -1), (7, 0, -1), (9, 0, -1), (11, 0, -1), (13, 0, -1), (15, 0, 1)] },
    Row { p: 2, v4: (4, 4), v6: (9, INF), vd: 6, k4: 4, k6: 0, classes: &[(1, 0, -1), (3, 0, -1), (5, 0, -1), (7, 0, 1), (9, 0, -1), (11, 0, 1), (13, 0, -1), (15, 0, -1)] },
    Row { p: 2, v4: (5, 5), v6: (6, 6), vd: 6, k4: 2, k6: 0, classes: &[(1, 0, -1), (3, 0, 1)] },
    Row { p: 2, v4: (6, INF), v6: (6, 6), vd: 6, k4: 0, k6: 2, classes: &[(0, 1, 1), (0, 3, -1)] },
    Row { p: 2, v4: (4, 4), v6: (6, 6), vd: 7, k4: 3, k6: 3, classes: &[(3, 1, -1), (3, 3, -1), (3, 5, 1), (3, 7, 1), (7, 1, -1), (7, 3, 1), (7, 5, 1), (7, 7, -1)] },
    Row { p: 2, v4: (4, 4), v6: (6, 6), vd: 8, k4: 5, k6: 4, classes: &[(5, 1, -1), (5, 3, -1), (5, 5, -1), (5, 7, 1), (5, 9, 1), (5, 11, -1), (5, 13, -1), (5, 15, 1), (13, 1, -1), (13, 3, 1), (13, 5, 1), (13, 7, -1), (13, 9, -1), (13, 11, 1), (13, 13, -1), (13, 15, -1), (21, 1, 1), (21, 3, -1), (21, 5, -1), (21, 7, 1), (21, 9, -1), (21, 11, -1), (21, 13, -1), (21, 15, 1), (29, 1, -1), (29, 3, 1), (29, 5, -1), (29, 7, -1), (29, 9, -1), (29, 11, 1), (29, 13, 1), (29, 15, -1)] },
    Row { p: 2, v4: (5, 5), v6: (7, 7), vd: 8, k4: 2, k6: 3, classes: &[(1, 1, -1), (1, 3, 1), (1, 5, 1), (1, 7, -1), (3, 1, 1), (3, 3, 1), (3, 5, -1), (3, 7, -1)] },
    Row { p: 2, v4: (6, 6), v6: (7, 7), vd: 8, k4: 2, k6: 3, classes: &[(1, 1, 1), (1, 3, 1), (1, 5, -1), (1, 7, 1), (3, 1, -1), (3, 3, 1), (3, 5, 1), (3, 7, 1)] },
    Row { p: 2, v4: (7, INF), v6: (7, 7), vd: 8, k4: 0, k6: 0, classes: &[(0, 0, -1)] },
    Row { p: 2, v4: (4, 4), v6: (6, 6), vd: 9, k4: 5, k6: 4, classes: &[(1, 3, -1), (1, 5, 1), (1, 11, -1), (1, 13, -1), (9, 1, 1), (9, 7, 1), (9, 9, -1), (9, 15, 1), (17, 3, -1), (17, 5, -1), (17, 11, -1), (17, 13, 1), (25, 1, -1), (25, 7, 1), (25, 9, 1), (25, 15, 1)] },
    Row { p: 2, v4: (5, 5), v6: (8, 8), vd: 9, k4: 3, k6: 2, classes: &[(1, 1, -1), (1, 3, 1), (3, 1, -1), (3, 3, 1), (5, 1, 1), (5, 3, -1), (7, 1, 1), (7, 3, -1)] },
    Row { p: 2, v4: (5, 5), v6: (9, INF), vd: 9, k4: 3, k6: 0, classes: &[(1, 0, 1), (3, 0, 1), (5, 0, -1), (7, 0, -1)] },
    Row { p: 2, v4: (4, 4), v6: (6, 6), vd: 10, k4: 6, k6: 5, classes: &[(1, 7, -1), (1, 9, 1), (1, 23, 1), (1, 25, 1), (9, 3, 1), (9, 13, 1), (9, 19, -1), (9, 29, 1), (17, 1, 1), (17, 15, -1), (17, 17, 1), (17, 31, 1), (25, 5, 1), (25, 11, 1), (25, 21, 1), (25, 27, -1), (33, 7, 1), (33, 9, 1), (33, 23, -1), (33, 25, 1), (41, 3, -1), (41, 13, 1), (41, 19, 1), (41, 29, 1), (49, 1, 1), (49, 15, 1), (49, 17, 1), (49, 31, -1), (57, 5, 1), (57, 11, -1), (57, 21, 1), (57, 27, 1)] },
    Row { p: 2, v4: (6, 6), v6: (8, 8), vd: 10, k4: 2, k6: 2, classes: &[(1, 1, -1), (1, 3, 1), (3, 1, 1), (3, 3, -1)] },
    Row { p: 2, v4: (7, INF), v6: (8, 8), vd: 10, k4: 0, k6: 2, classes: &[(0, 1, 1), (0, 3, -1)] },
    Row { p: 2, v4: (4, 4), v6: (6, 6), vd: 11, k4: 0, k6: 3, classes: &[(0, 1, 1), (0, 3, 1), (0, 5, 1), (0, 7, -1)] },
    Row { p: 2, v4: (4, 4), v6: (6, 6), vd: 12, k4: 0, k6: 0, classes: &[(0, 0, -1)] },
    Row { p: 2, v4: (6, 6), v6: (10, 10), vd: 12, k4: 4, k6: 2, classes: &[(1, 1, -1), (1, 3, 1), (3, 1, 1), (3, 3, 1), (5, 1, 1), (5, 3, -1), (7, 1, 1), (7, 3, 1), (9, 1, 1), (9, 3, -1), (11, 1, 1), (11, 3, 1), (13, 1, -1), (13, 3, 1), (15, 1, 1), (15, 3, 1)] },
    Row { p: 2, v4: (6, 6), v6: (11, 11), vd: 12, k4: 4, k6: 0, classes: &[(1, 0, 1), (3, 0, -1), (5, 0, -1), (7, 0, -1), (9, 0, -1), (11, 0, -1), (13, 0, 1), (15, 0, -1)] },
    Row { p: 2, v4: (6, 6), v6: (12, INF), vd: 12, k4: 4, k6: 0, classes: &[(1, 0, -1), (3, 0, -1), (5, 0, 1), (7, 0, -1), (9, 0, 1), (11, 0, -1), (13, 0, -1), (15, 0, -1)] },
    Row { p: 2, v4: (7, 7), v6: (9, 9), vd: 12, k4: 2, k6: 3, classes: &[(1, 1, 1), (1, 3, -1), (1, 5, -1), (1, 7, 1), (3, 1, 1), (3, 3, 1), (3, 5, -1), (3, 7, -1)] },
    Row { p: 2, v4: (8, INF), v6: (9, 9), vd: 12, k4: 0, k6: 0, classes: &[(0, 0, -1)] },
    Row { p: 2, v4: (6, 6), v6: (9, 9), vd: 13, k4: 4, k6: 2, classes: &[(3, 1, -1), (3, 3, -1), (7, 1, -1), (7, 3, 1), (11, 1, 1), (11, 3, 1), (15, 1, 1), (15, 3, -1)] },
    Row { p: 2, v4: (6, 6), v6: (9, 9), vd: 14, k4: 4, k6: 3, classes: &[(5, 1, 1), (5, 3, 1), (5, 5, -1), (5, 7, -1), (13, 1, -1), (13, 3, -1), (13, 5, 1), (13, 7, 1)] },
    Row { p: 2, v4: (7, 7), v6: (10, 10), vd: 14, k4: 3, k6: 3, classes: &[(1, 1, -1), (1, 3, -1), (1, 5, 1), (1, 7, 1), (3, 1, -1), (3, 3, 1), (3, 5, 1), (3, 7, -1), (5, 1, 1), (5, 3, 1), (5, 5, -1), (5, 7, -1), (7, 1, 1), (7, 3, -1), (7, 5, -1), (7, 7, 1)] },
    Row { p: 2, v4: (8, INF), v6: (10, 10), vd: 14, k4: 0, k6: 2, classes: &[(0, 1, 1), (0, 3, -1)] },
    Row { p: 2, v4: (6, 6), v6: (9, 9), vd: 15, k4: 5, k6: 4, classes: &[(1, 3, -1), (1, 5, 1), (1, 11, 1), (1, 13, -1), (9, 1, -1), (9, 7, 1), (9, 9, 1), (9, 15, -1), (17, 3, 1), (17, 5, -1), (17, 11, -1), (17, 13, 1), (25, 1, 1), (25, 7, -1), (25, 9, -1), (25, 15, 1)] },
    Row { p: 2, v4: (7, 7), v6: (11, 11), vd: 15, k4: 3, k6: 2, classes: &[(1, 1, 1), (1, 3, -1), (3, 1, -1), (3, 3, 1), (5, 1, -1), (5, 3, 1), (7, 1, 1), (7, 3, -1)] },
    Row { p: 2, v4: (7, 7), v6: (12, INF), vd: 15, k4: 3, k6: 0, classes: &[(1, 0, -1), (3, 0, -1), (5, 0, 1), (7, 0, 1)] },
    Row { p: 2, v4: (6, 6), v6: (9, 9), vd: 16, k4: 0, k6: 2, classes: &[(0, 1, -1), (0, 3, 1)] },
    Row { p: 2, v4: (6, 6), v6: (9, 9), vd: 17, k4: 0, k6: 2, classes: &[(0, 1, -1), (0, 3, 1)] },
    Row { p: 2, v4: (6, 6), v6: (9, 9), vd: 18, k4: 0, k6: 2, classes: &[(0, 1, -1), (0, 3, 1)] },
    Row { p: 3, v4: (2, 2), v6: (3, 3), vd: 3, k4: 0, k6: 2, classes: &[(0, 1, -1), (0, 2, 1), (0, 4, 1), (0, 5, -1), (0, 7, 1), (0, 8, 1)] },
    Row { p: 3, v4: (2, 2), v6: (4, 4), vd: 3, k4: 1, k6: 1, classes: &[(1, 1, -1), (1, 2, 1), (2, 1, 1), (2, 2, -1)] },
    Row { p: 3, v4: (2, 2), v6: (5, INF), vd: 3, k4: 0, k6: 0, classes: &[(0, 0, 1)] },
    Row { p: 3, v4: (3, INF), v6: (3, 3), vd: 3, k4: 0, k6: 2, classes: &[(0, 1, -1), (0, 2, -1), (0, 4, 1), (0, 5, 1), (0, 7, 1), (0, 8, 1)] },
    Row { p: 3, v4: (2, 2), v6: (3, 3), vd: 4, k4: 0, k6: 0, classes: &[(0, 0, 1)] },
    Row { p: 3, v4: (2, 2), v6: (3, 3), vd: 5, k4: 2, k6: 3, classes: &[(1, 8, 1), (1, 10, 1), (1, 17, -1), (1, 19, -1), (4, 1, 1), (4, 10, -1), (4, 17, 1), (4, 26, -1), (7, 1, -1), (7, 8, -1), (7, 19, 1), (7, 26, 1)] },
    Row { p: 3, v4: (3, INF), v6: (4, 4), vd: 5, k4: 0, k6: 1, classes: &[(0, 1, -1), (0, 2, 1)] },
    Row { p: 3, v4: (2, 2), v6: (3, 3), vd: 6, k4: 0, k6: 0, classes: &[(0, 0, -1)] },
    Row { p: 3, v4: (3, 3), v6: (5, 5), vd: 6, k4: 1, k6: 0, classes: &[(1, 0, -1), (2, 0, 1)] },
    Row { p: 3, v4: (3, 3), v6: (6, INF), vd: 6, k4: 0, k6: 0, classes: &[(0, 0, -1)] },
    Row { p: 3, v4: (4, INF), v6: (5, 5), vd: 7, k4: 0, k6: 1, classes: &[(0, 1, -1), (0, 2, 1)] },
    Row { p: 3, v4: (4, 4), v6: (6, 6), vd: 9, k4: 0, k6: 2, classes: &[(0, 1, -1), (0, 2, 1), (0, 4, 1), (0, 5, -1), (0, 7, 1), (0, 8, 1)] },
    Row { p: 3, v4: (4, 4), v6: (7, 7), vd: 9, k4: 0, k6: 1, classes: &[(0, 1, -1), (0, 2, 1)] },
    Row { p: 3, v4: (4, 4), v6: (8, INF), vd: 9, k4: 0, k6: 0, classes: &[(0, 0, 1)] },
    Row { p: 3, v4: (5, INF), v6: (6, 6), vd: 9, k4: 0, k6: 2, classes: &[(0, 1, 1), (0, 2, 1), (0, 4, 1), (0, 5, 1), (0, 7, -1), (0, 8, -1)] },
    Row { p: 3, v4: (4, 4), v6: (6, 6), vd: 10, k4: 0, k6: 2, classes: &[(0, 2, 1), (0, 4, -1), (0, 5, -1), (0, 7, 1)] },
    Row { p: 3, v4: (4, 4), v6: (6, 6), vd: 11, k4: 0, k6: 1, classes: &[(0, 1, 1), (0, 2, -1)] },
    Row { p: 3, v4: (5, INF), v6: (7, 7), vd: 11, k4: 0, k6: 1, classes: &[(0, 1, 1), (0, 2, -1)] },
    Row { p: 3, v4: (5, 5), v6: (8, 8), vd: 12, k4: 0, k6: 0, classes: &[(0, 0, 1)] },
    Row { p: 3, v4: (6, INF), v6: (8, 8), vd: 13, k4: 0, k6: 1, classes: &[(0, 1, 1), (0, 2, -1)] },
];
