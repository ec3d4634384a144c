//! Reference tables and closed-form values, shared by the
//! integration tests. Indices are 1-based in the transcriptions.

#![allow(dead_code)]

use bgue::Coeff;

fn cell(text: &str) -> Coeff {
    let (num, unit) = if let Some(c) = text.strip_suffix("J/D") {
        (c, "J/D")
    } else if let Some(c) = text.strip_suffix('J') {
        (c, "J")
    } else {
        panic!("unparseable cell {text}")
    };
    let c: i64 = num.parse().expect("integer coefficient");
    if unit == "J" {
        Coeff::j(c)
    } else {
        Coeff::j_over_d(c)
    }
}

/// The reference `n = 2` matrix `M` in the conventional basis order.
pub fn m2() -> Vec<Vec<Coeff>> {
    let w = Coeff::w(1);
    let j = |c| Coeff::j(c);
    let jd = |c| Coeff::j_over_d(c);
    let mut m = vec![vec![Coeff::ZERO; 8]; 8];
    let cells = [
        (1, 1, w),
        (1, 3, jd(-2)),
        (2, 1, jd(1)),
        (2, 2, j(1) + w),
        (3, 1, jd(-1)),
        (3, 3, w),
        (3, 6, jd(-1)),
        (4, 3, jd(1)),
        (4, 4, j(1) + w),
        (5, 2, jd(2)),
        (5, 5, j(2) + w),
        (5, 8, jd(2)),
        (6, 3, jd(-2)),
        (6, 6, w),
        (7, 4, jd(4)),
        (7, 7, j(2) + w),
        (8, 6, jd(1)),
        (8, 8, j(1) + w),
    ];
    for (r, c, v) in cells {
        m[r - 1][c - 1] = v;
    }
    m
}

/// Nonzero cells of the reference `n = 3` matrix `M_J`, one row per line:
/// `row: col=value ...`.
const M3_TEXT: &str = "
1: 1=-3J 2=-6J/D
2: 1=-1J/D 2=-3J 3=-3J/D 4=-2J/D
3: 2=-2J/D 3=-3J 5=-4J/D
4: 2=-3J/D 4=-3J 5=-3J/D
5: 3=-3J/D 4=-1J/D 5=-3J 6=-2J/D
6: 5=-6J/D 6=-3J
7: 1=1J/D 7=-2J 8=-2J/D
8: 2=1J/D 7=-1J/D 8=-2J 10=-1J/D
9: 2=1J/D 9=-2J 11=-1J/D 13=-1J/D
10: 3=1J/D 8=-2J/D 10=-2J
11: 3=1J/D 9=-1J/D 11=-2J 14=-1J/D
12: 3=1J/D 12=-2J 15=-2J/D
13: 4=1J/D 9=-1J/D 13=-2J 14=-1J/D
14: 5=1J/D 11=-1J/D 13=-1J/D 14=-2J
15: 5=1J/D 12=-1J/D 15=-2J 16=-1J/D
16: 6=1J/D 15=-2J/D 16=-2J
17: 7=2J/D 12=2J/D 17=-1J
18: 8=1J/D 9=1J/D 15=2J/D 18=-1J
19: 9=4J/D 19=-1J
20: 10=1J/D 12=1J/D 16=2J/D 20=-1J
21: 11=2J/D 16=2J/D 21=-1J
22: 11=1J/D 12=1J/D 13=2J/D 22=-1J
23: 14=2J/D 15=2J/D 23=-1J
24: 17=3J/D 20=6J/D
25: 18=4J/D 19=1J/D 23=4J/D
26: 21=3J/D 22=6J/D
";

/// The reference `n = 3` matrix `M_J` in the conventional basis order.
pub fn m3_j() -> Vec<Vec<Coeff>> {
    let mut m = vec![vec![Coeff::ZERO; 26]; 26];
    for line in M3_TEXT.lines().filter(|l| !l.trim().is_empty()) {
        let (row, rest) = line.split_once(':').expect("row separator");
        let r: usize = row.trim().parse().expect("row index");
        for item in rest.split_whitespace() {
            let (col, val) = item.split_once('=').expect("cell separator");
            let c: usize = col.parse().expect("column index");
            m[r - 1][c - 1] = cell(val);
        }
    }
    m
}

/// Category sizes of the `n = 3` table in the conventional basis order.
pub const N3_SIZES: [usize; 26] = [
    1, 6, 9, 4, 12, 4, 9, 18, 36, 9, 36, 36, 36, 36, 72, 36, 18, 72, 18, 36, 36, 72, 72, 6, 18, 12,
];

/// Category sizes for `n = 2` in the conventional basis order.
pub const N2_SIZES: [usize; 8] = [1, 4, 2, 8, 2, 1, 2, 4];

/// The closed-form spectrum of `M_J` for `n = 3` (units of `J`).
pub fn n3_spectrum(d: f64) -> Vec<f64> {
    let mut v = vec![0.0; 3];
    v.push(-3.0 * (d - 2.0) / d);
    v.push(-3.0 * (d - 1.0) / d);
    v.extend([-2.0 * (d - 1.0) / d; 3]);
    v.extend([-3.0; 2]);
    v.extend([-2.0; 4]);
    v.extend([-1.0; 7]);
    v.push(-3.0 * (d + 1.0) / d);
    v.extend([-2.0 * (d + 1.0) / d; 3]);
    v.push(-3.0 * (d + 2.0) / d);
    v
}

/// The `n = 2` closed form: `f = C(D) · (1, e^{-Jt}, e^{-(2-2/D)Jt}, e^{-2Jt}, e^{-(2+2/D)Jt})`.
pub fn n2_closed_form(d: f64, jt: f64) -> Vec<f64> {
    let c: [[f64; 5]; 8] = [
        [0.0, 0.0, 1.0 / 4.0, 1.0 / 2.0, 1.0 / 4.0],
        [
            0.0,
            (d * d - 2.0) / (d * (d * d - 4.0)),
            -1.0 / (4.0 * (d - 2.0)),
            -1.0 / (2.0 * d),
            -1.0 / (4.0 * (d + 2.0)),
        ],
        [0.0, 0.0, -1.0 / 4.0, 0.0, 1.0 / 4.0],
        [
            0.0,
            -1.0 / (d * d - 4.0),
            1.0 / (4.0 * (d - 2.0)),
            0.0,
            -1.0 / (4.0 * (d + 2.0)),
        ],
        [
            1.0 / (d * d - 1.0),
            -2.0 / (d * d - 4.0),
            1.0 / (2.0 * (d - 1.0) * (d - 2.0)),
            0.0,
            1.0 / (2.0 * (d + 1.0) * (d + 2.0)),
        ],
        [0.0, 0.0, 1.0 / 4.0, -1.0 / 2.0, 1.0 / 4.0],
        [
            -1.0 / (d.powi(3) - d),
            4.0 / (d * (d * d - 4.0)),
            -1.0 / (2.0 * (d - 1.0) * (d - 2.0)),
            0.0,
            1.0 / (2.0 * (d + 1.0) * (d + 2.0)),
        ],
        [
            0.0,
            2.0 / (d * (d * d - 4.0)),
            -1.0 / (4.0 * (d - 2.0)),
            1.0 / (2.0 * d),
            -1.0 / (4.0 * (d + 2.0)),
        ],
    ];
    let xi = [
        1.0,
        (-jt).exp(),
        (-(2.0 - 2.0 / d) * jt).exp(),
        (-2.0 * jt).exp(),
        (-(2.0 + 2.0 / d) * jt).exp(),
    ];
    c.iter()
        .map(|row| row.iter().zip(&xi).map(|(a, b)| a * b).sum())
        .collect()
}

/// The ten time dependences multiplying the vectors `v_a`.
pub fn xi(d: f64, t: f64) -> [f64; 10] {
    [
        (-t).exp(),
        (-2.0 * t).exp(),
        (-2.0 * (d + 1.0) * t / d).exp(),
        (-2.0 * (d - 1.0) * t / d).exp(),
        (-3.0 * t).exp(),
        (-3.0 * (d + 1.0) * t / d).exp(),
        (-3.0 * (d - 1.0) * t / d).exp(),
        (-3.0 * (d + 2.0) * t / d).exp(),
        (-3.0 * (d - 2.0) * t / d).exp(),
        1.0,
    ]
}

/// The vectors `v_a` exactly as tabulated (so that
/// `f_a(t) = v_a · ξ(t)` at `J = 1`).
pub fn xi_vectors_as_tabulated(d: f64) -> Vec<[f64; 10]> {
    vec![
        // v1
        [
            0.0,
            0.0,
            0.0,
            0.0,
            1.0 / 2.0,
            2.0 / 9.0,
            2.0 / 9.0,
            1.0 / 36.0,
            1.0 / 36.0,
            0.0,
        ],
        // v2
        [
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            1.0 / 9.0,
            -1.0 / 9.0,
            1.0 / 36.0,
            -1.0 / 36.0,
            0.0,
        ],
        // v3
        [0.0, 0.0, 0.0, 0.0, -1.0 / 18.0, 0.0, 0.0, 1.0 / 36.0, 1.0 / 36.0, 0.0],
        // v4
        [
            0.0,
            0.0,
            0.0,
            0.0,
            -1.0 / 6.0,
            1.0 / 18.0,
            1.0 / 18.0,
            1.0 / 36.0,
            1.0 / 36.0,
            0.0,
        ],
        // v5
        [
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            -1.0 / 18.0,
            1.0 / 18.0,
            1.0 / 36.0,
            -1.0 / 36.0,
            0.0,
        ],
        // v6
        [
            0.0,
            0.0,
            0.0,
            0.0,
            1.0 / 6.0,
            -1.0 / 9.0,
            -1.0 / 9.0,
            1.0 / 36.0,
            1.0 / 36.0,
            0.0,
        ],
        // v7
        [
            0.0,
            (5.0 - d.powi(2)) / (18.0 * d - 2.0 * d.powi(3)),
            (d.powi(2) + 3.0 * d - 2.0) / (4.0 * (d - 2.0) * (d + 1.0) * (d + 4.0)),
            (d.powi(2) - 3.0 * d - 2.0) / (4.0 * (d - 4.0) * (d - 1.0) * (d + 2.0)),
            -(20.0 - 9.0 * d.powi(2)) / (72.0 * d - 18.0 * d.powi(3)),
            -2.0 * (d + 2.0) / (9.0 * (d + 1.0) * (d + 3.0)),
            -2.0 * (d - 2.0) / (9.0 * (d.powi(2) - 4.0 * d + 3.0)),
            -1.0 / (36.0 * (d + 4.0)),
            1.0 / (144.0 - 36.0 * d),
            0.0,
        ],
        // v8
        [
            0.0,
            0.0,
            (d.powi(2) + 3.0 * d - 2.0) / (4.0 * (d - 2.0) * (d + 1.0) * (d + 4.0)),
            (-d.powi(2) + 3.0 * d + 2.0) / (4.0 * (d.powi(3) - 3.0 * d.powi(2) - 6.0 * d + 8.0)),
            4.0 / (36.0 - 9.0 * d.powi(2)),
            -1.0 / (9.0 * d + 9.0),
            1.0 / (9.0 * (d - 1.0)),
            -1.0 / (36.0 * (d + 4.0)),
            1.0 / (36.0 * (d - 4.0)),
            0.0,
        ],
        // v9
        [
            0.0,
            1.0 / (18.0 - 2.0 * d.powi(2)),
            -(d + 2.0) / (4.0 * (d.powi(3) + 3.0 * d.powi(2) - 6.0 * d - 8.0)),
            -(d - 2.0) / (4.0 * (d - 4.0) * (d - 1.0) * (d + 2.0)),
            2.0 / (9.0 * (d.powi(2) - 4.0)),
            -(2.0 * d + 3.0) / (18.0 * (d + 1.0) * (d + 3.0)),
            (2.0 * d - 3.0) / (18.0 * (d - 3.0) * (d - 1.0)),
            -1.0 / (36.0 * (d + 4.0)),
            1.0 / (36.0 * (d - 4.0)),
            0.0,
        ],
        // v10
        [
            0.0,
            -(d.powi(2) - 5.0) / (2.0 * d * (d.powi(2) - 9.0)),
            (d.powi(2) + 3.0 * d - 2.0) / (4.0 * (d - 2.0) * (d + 1.0) * (d + 4.0)),
            (d.powi(2) - 3.0 * d - 2.0) / (4.0 * (d - 4.0) * (d - 1.0) * (d + 2.0)),
            (20.0 - d.powi(2)) / (72.0 * d - 18.0 * d.powi(3)),
            -2.0 / (9.0 * (d + 1.0) * (d + 3.0)),
            2.0 / (9.0 * (d.powi(2) - 4.0 * d + 3.0)),
            -1.0 / (36.0 * (d + 4.0)),
            1.0 / (144.0 - 36.0 * d),
            0.0,
        ],
        // v11
        [
            0.0,
            1.0 / (18.0 * d - 2.0 * d.powi(3)),
            -(d + 2.0) / (4.0 * (d.powi(3) + 3.0 * d.powi(2) - 6.0 * d - 8.0)),
            (d - 2.0) / (4.0 * (d - 4.0) * (d - 1.0) * (d + 2.0)),
            -(d.powi(2) + 4.0) / (72.0 * d - 18.0 * d.powi(3)),
            -1.0 / (18.0 * (d + 1.0) * (d + 3.0)),
            1.0 / (18.0 * (d.powi(2) - 4.0 * d + 3.0)),
            -1.0 / (36.0 * (d + 4.0)),
            1.0 / (144.0 - 36.0 * d),
            0.0,
        ],
        // v12
        [
            0.0,
            1.0 / (d * (d.powi(2) - 9.0)),
            1.0 / (2.0 * (d - 2.0) * (d + 1.0) * (d + 4.0)),
            1.0 / (2.0 * (d.powi(3) - 3.0 * d.powi(2) - 6.0 * d + 8.0)),
            (8.0 - d.powi(2)) / (72.0 * d - 18.0 * d.powi(3)),
            1.0 / (9.0 * (d.powi(2) + 4.0 * d + 3.0)),
            -1.0 / (9.0 * (d.powi(2) - 4.0 * d + 3.0)),
            -1.0 / (36.0 * (d + 4.0)),
            1.0 / (144.0 - 36.0 * d),
            0.0,
        ],
        // v13
        [
            0.0,
            -1.0 / (18.0 * d - 2.0 * d.powi(3)),
            -(d + 2.0) / (4.0 * (d.powi(3) + 3.0 * d.powi(2) - 6.0 * d - 8.0)),
            (d - 2.0) / (4.0 * (d - 4.0) * (d - 1.0) * (d + 2.0)),
            (4.0 - 3.0 * d.powi(2)) / (72.0 * d - 18.0 * d.powi(3)),
            -(d + 2.0) / (18.0 * (d + 1.0) * (d + 3.0)),
            -(d - 2.0) / (18.0 * (d.powi(2) - 4.0 * d + 3.0)),
            -1.0 / (36.0 * (d + 4.0)),
            1.0 / (144.0 - 36.0 * d),
            0.0,
        ],
        // v14
        [
            0.0,
            1.0 / (2.0 * (d.powi(2) - 9.0)),
            -(d + 2.0) / (4.0 * (d.powi(3) + 3.0 * d.powi(2) - 6.0 * d - 8.0)),
            -(d - 2.0) / (4.0 * (d - 4.0) * (d - 1.0) * (d + 2.0)),
            2.0 / (9.0 * (d.powi(2) - 4.0)),
            d / (18.0 * (d.powi(2) + 4.0 * d + 3.0)),
            -d / (18.0 * (d.powi(2) - 4.0 * d + 3.0)),
            -1.0 / (36.0 * (d + 4.0)),
            1.0 / (36.0 * (d - 4.0)),
            0.0,
        ],
        // v15
        [
            0.0,
            0.0,
            1.0 / (2.0 * (d - 2.0) * (d + 1.0) * (d + 4.0)),
            -1.0 / (2.0 * (d.powi(3) - 3.0 * d.powi(2) - 6.0 * d + 8.0)),
            1.0 / (36.0 - 9.0 * d.powi(2)),
            1.0 / (18.0 * d + 18.0),
            1.0 / (18.0 - 18.0 * d),
            -1.0 / (36.0 * (d + 4.0)),
            1.0 / (36.0 * (d - 4.0)),
            0.0,
        ],
        // v16
        [
            0.0,
            1.0 / (9.0 * d - d.powi(3)),
            1.0 / (2.0 * (d - 2.0) * (d + 1.0) * (d + 4.0)),
            1.0 / (2.0 * (d.powi(3) - 3.0 * d.powi(2) - 6.0 * d + 8.0)),
            -(8.0 - 3.0 * d.powi(2)) / (72.0 * d - 18.0 * d.powi(3)),
            (d + 2.0) / (9.0 * (d.powi(2) + 4.0 * d + 3.0)),
            (d - 2.0) / (9.0 * (d - 3.0) * (d - 1.0)),
            -1.0 / (36.0 * (d + 4.0)),
            1.0 / (144.0 - 36.0 * d),
            0.0,
        ],
        // v17
        [
            (d.powi(4) - 8.0 * d.powi(2) + 6.0) / (d.powi(6) - 13.0 * d.powi(4) + 36.0 * d.powi(2)),
            (3.0 - d.powi(2)) / (d.powi(2) * (d.powi(2) - 9.0)),
            -d * (d + 3.0) / (2.0 * (d.powi(4) + 5.0 * d.powi(3) - 20.0 * d - 16.0)),
            -(d - 3.0) * d / (2.0 * (d.powi(4) - 5.0 * d.powi(3) + 20.0 * d - 16.0)),
            (6.0 - 4.0 * d.powi(2)) / (36.0 * d.powi(2) - 9.0 * d.powi(4)),
            2.0 / (9.0 * (d + 1.0) * (d + 3.0)),
            2.0 / (9.0 * (d.powi(2) - 4.0 * d + 3.0)),
            1.0 / (18.0 * (d + 3.0) * (d + 4.0)),
            1.0 / (18.0 * (d.powi(2) - 7.0 * d + 12.0)),
            0.0,
        ],
        // v18
        [
            1.0 / (9.0 * d - d.powi(3)),
            -1.0 / (18.0 * d - 2.0 * d.powi(3)),
            -d / (4.0 * (d.powi(3) + 3.0 * d.powi(2) - 6.0 * d - 8.0)),
            d / (4.0 * (d.powi(3) - 3.0 * d.powi(2) - 6.0 * d + 8.0)),
            -2.0 / (36.0 * d - 9.0 * d.powi(3)),
            1.0 / (18.0 * (d.powi(2) + 4.0 * d + 3.0)),
            -1.0 / (18.0 * (d.powi(2) - 4.0 * d + 3.0)),
            1.0 / (18.0 * (d + 3.0) * (d + 4.0)),
            -1.0 / (18.0 * (d - 4.0) * (d - 3.0)),
            0.0,
        ],
        // v19
        [
            1.0 / (9.0 * d - d.powi(3)),
            2.0 / (d * (d.powi(2) - 9.0)),
            1.0 / ((d - 2.0) * (d + 1.0) * (d + 4.0)),
            1.0 / (d.powi(3) - 3.0 * d.powi(2) - 6.0 * d + 8.0),
            4.0 / (36.0 * d - 9.0 * d.powi(3)),
            2.0 / (9.0 * (d + 1.0) * (d + 3.0)),
            -2.0 / (9.0 * (d.powi(2) - 4.0 * d + 3.0)),
            1.0 / (18.0 * (d + 3.0) * (d + 4.0)),
            -1.0 / (18.0 * (d - 4.0) * (d - 3.0)),
            0.0,
        ],
        // v20
        [
            (2.0 * d.powi(2) - 3.0) / (d.powi(2) * (d.powi(4) - 13.0 * d.powi(2) + 36.0)),
            (d.powi(2) - 3.0) / (2.0 * d.powi(2) * (d.powi(2) - 9.0)),
            (d.powi(2) + 3.0 * d + 4.0) / (-4.0 * d.powi(4) - 20.0 * d.powi(3) + 80.0 * d + 64.0),
            (d.powi(2) - 3.0 * d + 4.0) / (-4.0 * d.powi(4) + 20.0 * d.powi(3) - 80.0 * d + 64.0),
            (d.powi(2) + 3.0) / (9.0 * d.powi(2) * (d.powi(2) - 4.0)),
            -1.0 / (9.0 * (d + 1.0) * (d + 3.0)),
            -1.0 / (9.0 * (d.powi(2) - 4.0 * d + 3.0)),
            1.0 / (18.0 * (d + 3.0) * (d + 4.0)),
            1.0 / (18.0 * (d.powi(2) - 7.0 * d + 12.0)),
            0.0,
        ],
        // v21
        [
            (d.powi(2) + 6.0) / (d.powi(6) - 13.0 * d.powi(4) + 36.0 * d.powi(2)),
            3.0 / (d.powi(2) * (d.powi(2) - 9.0)),
            d / (2.0 * (d.powi(4) + 5.0 * d.powi(3) - 20.0 * d - 16.0)),
            d / (-2.0 * d.powi(4) + 10.0 * d.powi(3) - 40.0 * d + 32.0),
            (d.powi(2) - 6.0) / (9.0 * d.powi(2) * (d.powi(2) - 4.0)),
            -1.0 / (9.0 * (d + 1.0) * (d + 3.0)),
            -1.0 / (9.0 * (d.powi(2) - 4.0 * d + 3.0)),
            1.0 / (18.0 * (d + 3.0) * (d + 4.0)),
            1.0 / (18.0 * (d.powi(2) - 7.0 * d + 12.0)),
            0.0,
        ],
        // v22
        [
            (2.0 * d.powi(2) - 3.0) / (d.powi(2) * (d.powi(4) - 13.0 * d.powi(2) + 36.0)),
            3.0 / (18.0 * d.powi(2) - 2.0 * d.powi(4)),
            (3.0 * d + 4.0) / (4.0 * (d.powi(4) + 5.0 * d.powi(3) - 20.0 * d - 16.0)),
            (4.0 - 3.0 * d) / (4.0 * (d.powi(4) - 5.0 * d.powi(3) + 20.0 * d - 16.0)),
            (3.0 - 2.0 * d.powi(2)) / (9.0 * d.powi(2) * (d.powi(2) - 4.0)),
            1.0 / (18.0 * (d.powi(2) + 4.0 * d + 3.0)),
            1.0 / (18.0 * (d.powi(2) - 4.0 * d + 3.0)),
            1.0 / (18.0 * (d + 3.0) * (d + 4.0)),
            1.0 / (18.0 * (d.powi(2) - 7.0 * d + 12.0)),
            0.0,
        ],
        // v23
        [
            -5.0 / (d.powi(5) - 13.0 * d.powi(3) + 36.0 * d),
            1.0 / (9.0 * d - d.powi(3)),
            d / (2.0 * (d.powi(4) + 5.0 * d.powi(3) - 20.0 * d - 16.0)),
            d / (2.0 * (d.powi(4) - 5.0 * d.powi(3) + 20.0 * d - 16.0)),
            1.0 / (36.0 * d - 9.0 * d.powi(3)),
            -1.0 / (9.0 * (d + 1.0) * (d + 3.0)),
            1.0 / (9.0 * (d.powi(2) - 4.0 * d + 3.0)),
            1.0 / (18.0 * (d + 3.0) * (d + 4.0)),
            -1.0 / (18.0 * (d - 4.0) * (d - 3.0)),
            0.0,
        ],
        // v24
        [
            3.0 / (9.0 * d - d.powi(3)),
            0.0,
            3.0 / (2.0 * (d - 2.0) * (d + 1.0) * (d + 4.0)),
            3.0 / (2.0 * (d.powi(3) - 3.0 * d.powi(2) - 6.0 * d + 8.0)),
            2.0 / (12.0 * d - 3.0 * d.powi(3)),
            0.0,
            0.0,
            -1.0 / (6.0 * (d + 2.0) * (d + 3.0) * (d + 4.0)),
            -1.0 / (6.0 * (d.powi(3) - 9.0 * d.powi(2) + 26.0 * d - 24.0)),
            (2.0 - d.powi(2)) / (d.powi(5) - 5.0 * d.powi(3) + 4.0 * d),
        ],
        // v25
        [
            5.0 / (d.powi(4) - 13.0 * d.powi(2) + 36.0),
            0.0,
            1.0 / (2.0 * (d.powi(3) + 7.0 * d.powi(2) + 14.0 * d + 8.0)),
            1.0 / (-2.0 * d.powi(3) + 14.0 * d.powi(2) - 28.0 * d + 16.0),
            0.0,
            0.0,
            0.0,
            -1.0 / (6.0 * (d + 2.0) * (d + 3.0) * (d + 4.0)),
            1.0 / (6.0 * (d - 4.0) * (d - 3.0) * (d - 2.0)),
            1.0 / (d.powi(4) - 5.0 * d.powi(2) + 4.0),
        ],
        // v26
        [
            -15.0 / (d.powi(5) - 13.0 * d.powi(3) + 36.0 * d),
            0.0,
            -3.0 / (d.powi(4) + 5.0 * d.powi(3) - 20.0 * d - 16.0),
            3.0 / (d.powi(4) - 5.0 * d.powi(3) + 20.0 * d - 16.0),
            -1.0 / (12.0 * d - 3.0 * d.powi(3)),
            0.0,
            0.0,
            -1.0 / (6.0 * (d + 2.0) * (d + 3.0) * (d + 4.0)),
            -1.0 / (6.0 * (d.powi(3) - 9.0 * d.powi(2) + 26.0 * d - 24.0)),
            -2.0 / (d.powi(5) - 5.0 * d.powi(3) + 4.0 * d),
        ],
    ]
}

/// The vectors `v_a` with the constant components of `v₂₄, v₂₅, v₂₆`
/// sign-corrected so that `f(0) = e₁`; the corrected constants are the
/// `S₃` Weingarten values `Wg(e), Wg((12)), Wg((123))`.
pub fn xi_vectors(d: f64) -> Vec<[f64; 10]> {
    let mut v = xi_vectors_as_tabulated(d);
    for a in [23, 24, 25] {
        v[a][9] = -v[a][9];
    }
    v
}
