//! Low-order Padé coefficients written out by hand in `A, B, C, D`.

use freesub_core::arith::rat_int;
use freesub_core::poly::Poly;
use freesub_core::ring::Rationals;

/// Formulas times 6, so everything stays integral.
pub fn p1(n: i128, [a, b, c, d]: [i128; 4]) -> i128 {
    6 * (-(n - 1) * a - n * n * b - (2 * n - 1) * c + d)
}

pub fn q1(n: i128, [a, b, c, _]: [i128; 4]) -> i128 {
    6 * (-n * a - n * n * b - 2 * n * c)
}

pub fn p2(n: i128, [a, b, c, d]: [i128; 4]) -> i128 {
    3 * (n - 2) * (n - 1) * a * a + 3 * (n - 2) * (n - 1) * (2 * n + 1) * a * b + 12 * (n - 2) * (n - 1) * a * c
        - 6 * (n - 1) * a * d
        + 3 * (n - 1) * (n - 1) * n * n * b * b
        + 6 * (n - 1) * (2 * n * n - 2 * n - 1) * b * c
        - 6 * (n - 1) * (n + 1) * b * d
        + 6 * (n - 1) * (2 * n - 3) * c * c
        - 18 * (n - 1) * c * d
}

pub fn q2(n: i128, [a, b, c, d]: [i128; 4]) -> i128 {
    3 * (n - 1) * n * a * a + 3 * (n - 1) * n * (2 * n - 1) * a * b + 6 * (n - 1) * (2 * n - 1) * a * c
        + 3 * (n - 1) * (n - 1) * n * n * b * b
        + 6 * (n - 1) * n * (2 * n - 1) * b * c
        + 6 * (n - 1) * (2 * n - 1) * c * c
        - 6 * (n - 1) * c * d
}

pub fn p3(n: i128, [a, b, c, d]: [i128; 4]) -> i128 {
    -(n - 3) * (n - 2) * (n - 1) * a * a * a
        - 3 * (n - 3) * (n - 2) * (n * n - n - 1) * a * a * b
        - 3 * (n - 3) * (n - 2) * (2 * n - 3) * a * a * c
        + 3 * (n - 2) * (n - 1) * a * a * d
        - (n - 3) * (n - 2) * (3 * n * n * n - 3 * n * n - n - 2) * a * b * b
        - 3 * (n - 3) * (n - 2) * (2 * n - 3) * (2 * n + 1) * a * b * c
        + 3 * (n - 2) * (n + 1) * (2 * n - 3) * a * b * d
        - 6 * (n - 3) * (n - 2) * (2 * n - 3) * a * c * c
        + 6 * (n - 2) * (3 * n - 5) * a * c * d
        - (n - 2) * (n - 2) * (n - 1) * (n - 1) * n * n * b * b * b
        - (n - 2) * (2 * n - 3) * (3 * n * n * n - 6 * n * n - n - 2) * b * b * c
        + 3 * (n - 2) * (n * n * n - n - 2) * b * b * d
        - 6 * (n - 2) * (2 * n - 3) * (n * n - 2 * n - 1) * b * c * c
        + 6 * (n - 2) * (3 * n * n - 2 * n - 3) * b * c * d
        - 2 * (n - 2) * (2 * n - 5) * (2 * n - 3) * c * c * c
        + 12 * (n - 2) * (2 * n - 3) * d * c * c
        - 6 * (n - 2) * c * d * d
}

pub fn q3(n: i128, [a, b, c, d]: [i128; 4]) -> i128 {
    -(n - 2) * (n - 1) * n * a * a * a
        - 3 * (n - 2) * (n - 1) * (n - 1) * n * a * a * b
        - 6 * (n - 2) * (n - 1) * (n - 1) * a * a * c
        - (n - 2) * (n - 1) * n * (3 * n * n - 6 * n + 2) * a * b * b
        - 6 * (n - 2) * (n - 1) * n * (2 * n - 3) * a * b * c
        - 6 * (n - 2) * (n - 1) * (2 * n - 3) * a * c * c
        + 6 * (n - 2) * (n - 1) * a * c * d
        - (n - 2) * (n - 2) * (n - 1) * (n - 1) * n * n * b * b * b
        - 2 * (n - 2) * (n - 1) * n * (3 * n * n - 6 * n + 2) * b * b * c
        - 6 * (n - 2) * (n - 1) * n * (2 * n - 3) * b * c * c
        + 6 * (n - 2) * (n - 1) * n * b * c * d
        - 4 * (n - 2) * (n - 1) * (2 * n - 3) * c * c * c
        + 12 * (n - 2) * (n - 1) * c * c * d
}

pub fn explicit(coeffs: &[i128]) -> Poly<Rationals> {
    Poly::new(Rationals, coeffs.iter().map(|&c| rat_int(c)).collect())
}

/// `(P_n, Q_n)` for `n = 1, 2, 3` written out in `A, B, C, D`.
pub fn low_order(n: u32, [a, b, c, d]: [i128; 4]) -> (Vec<i128>, Vec<i128>) {
    match n {
        1 => (vec![1, -b - c + d], vec![1, -a - b - 2 * c]),
        2 => (
            vec![1, -a - 4 * b - 3 * c + d, -a * d + 2 * b * b + 3 * b * c - 3 * b * d + c * c - 3 * c * d],
            vec![
                1,
                -2 * a - 4 * b - 4 * c,
                a * a + 3 * a * b + 3 * a * c + 2 * b * b + 6 * b * c + 3 * c * c - c * d,
            ],
        ),
        3 => (
            vec![
                1,
                -2 * a - 9 * b - 5 * c + d,
                a * a + 7 * a * b + 4 * a * c - 2 * a * d + 18 * b * b + 22 * b * c - 8 * b * d + 6 * c * c
                    - 6 * c * d,
                a * a * d + 6 * a * b * d + 4 * a * c * d - 6 * b * b * b - 11 * b * b * c + 11 * b * b * d
                    - 6 * b * c * c
                    + 18 * b * c * d
                    - c * c * c
                    + 6 * c * c * d
                    - c * d * d,
            ],
            vec![
                1,
                -3 * a - 9 * b - 6 * c,
                3 * a * a + 15 * a * b + 10 * a * c + 18 * b * b + 30 * b * c + 10 * c * c - 2 * c * d,
                -a * a * a - 6 * a * a * b - 4 * a * a * c - 11 * a * b * b - 18 * a * b * c - 6 * a * c * c
                    + 2 * a * c * d
                    - 6 * b * b * b
                    - 22 * b * b * c
                    - 18 * b * c * c
                    + 6 * b * c * d
                    - 4 * c * c * c
                    + 4 * c * c * d,
            ],
        ),
        _ => unreachable!(),
    }
}

pub fn abcd(t: [i64; 5]) -> [i128; 4] {
    [t[0] as i128, t[1] as i128, t[2] as i128, t[3] as i128]
}
