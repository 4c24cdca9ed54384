#![allow(dead_code)]

pub mod appendix;

use freesub_core::riccati::RiccatiParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Integer `(A, B, C, D, E)` with `E^2 = A^2 - 4CD`, `B, C, E` nonzero.
/// Writing `A = u + v`, `E = v - u` gives `CD = uv`; taking `u = C s` keeps `D` integral.
pub fn random_tuple(rng: &mut ChaCha8Rng) -> [i64; 5] {
    loop {
        let c = rng.random_range(-5i64..=5);
        let b = rng.random_range(-7i64..=7);
        let s = rng.random_range(-4i64..=4);
        let v = rng.random_range(-9i64..=9);
        let u = c * s;
        let (a, d, e) = (u + v, s * v, v - u);
        if b != 0 && c != 0 && e != 0 {
            return [a, b, c, d, e];
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn params(t: [i64; 5]) -> RiccatiParams {
    RiccatiParams::from_ints(t[0], t[1], t[2], t[3], t[4]).expect("valid tuple")
}

/// Tuples whose closed form is defined for every order up to `max_n`.
pub fn closed_form_tuples(seed: u64, count: usize, max_n: u32) -> Vec<[i64; 5]> {
    tuples_where(seed, count, |p| (0..=max_n).all(|n| freesub_core::pade::pade_pair(p, n).is_ok()))
}

pub fn tuples_where(seed: u64, count: usize, keep: impl Fn(&RiccatiParams) -> bool) -> Vec<[i64; 5]> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let t = random_tuple(&mut r);
        if keep(&params(t)) {
            out.push(t);
        }
    }
    out
}
