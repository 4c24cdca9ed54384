//! Floor-sum valuations against direct evaluation, and the denominator lemmas.

use freesub_core::groups::{params_for, FamilyKind, GroupFamily};
use freesub_core::modular::{base_degree, second_class};
use freesub_core::pade::pade_coeff_q;
use freesub_core::valuation::{
    legendre_vp_sum, lemma_divisibility, qnk_transformed, vp_pochhammer_ratio, ValuationCase, Variant,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn primes(v: Variant) -> &'static [u64] {
    match v {
        Variant::Expp | Variant::Expp2 => &[7, 13],
        Variant::Expp3 | Variant::Expp4 => &[11, 17, 23],
    }
}

#[test]
fn floor_sums_equal_direct_valuations() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for v in Variant::ALL {
        for _ in 0..500 {
            let ps = primes(v);
            let p = ps[rng.random_range(0..ps.len())];
            let n = rng.random_range(0..80u64);
            let k = rng.random_range(0..=n);
            let j = rng.random_range(0..=k);
            let case = ValuationCase::new(p, n, k, j, v).unwrap();
            assert_eq!(legendre_vp_sum(&case), vp_pochhammer_ratio(&case).unwrap(), "{case:?}");
        }
    }
}

#[test]
fn equal_indices() {
    for v in Variant::ALL {
        for &p in primes(v) {
            for k in 0..20 {
                let case = ValuationCase::new(p, k + 3, k, k, v).unwrap();
                assert_eq!(legendre_vp_sum(&case), vp_pochhammer_ratio(&case).unwrap());
            }
        }
    }
}

/// Orders `n <= 3p` in the two admissible classes.
fn valid_orders(kind: FamilyKind, p: u64) -> Vec<u64> {
    let d = base_degree(kind, p).unwrap();
    let s = second_class(kind, p).unwrap();
    (0..=3 * p).filter(|n| n % p == d || n % p == s).collect()
}

#[test]
fn summands_divisible_in_high_range() {
    for (p, pair) in [(7, [Variant::Expp, Variant::Expp2]), (13, [Variant::Expp, Variant::Expp2])] {
        let d = base_degree(FamilyKind::Modular3, p).unwrap();
        for n in valid_orders(FamilyKind::Modular3, p) {
            for k in 0..n.saturating_sub(d) {
                for j in 0..=k {
                    for v in pair {
                        let case = ValuationCase::new(p, n, k, j, v).unwrap();
                        assert!(legendre_vp_sum(&case) >= 1, "{case:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn modular_lemma_instances() {
    for m in [1, 2, 7] {
        let family = GroupFamily::modular3(m);
        for p in [7, 11, 13] {
            for n in valid_orders(FamilyKind::Modular3, p) {
                assert!(lemma_divisibility(&family, p, n).unwrap(), "m={m} p={p} n={n}");
            }
        }
    }
}

#[test]
fn hecke_lemma_instances() {
    for m in [1, 2] {
        let family = GroupFamily::hecke4(m);
        for p in [5, 7, 13] {
            for n in valid_orders(FamilyKind::Hecke4, p) {
                assert!(lemma_divisibility(&family, p, n).unwrap(), "m={m} p={p} n={n}");
            }
        }
    }
}

#[test]
fn invalid_classes_are_rejected() {
    let family = GroupFamily::modular3(1);
    assert!(lemma_divisibility(&family, 7, 2).is_err());
    assert!(lemma_divisibility(&GroupFamily::hecke4(1), 7, 3).is_err());
}

#[test]
fn transformed_coefficients() {
    for (m, max_n) in [(1, 6), (2, 4)] {
        let family = GroupFamily::modular3(m);
        let params = params_for(&family);
        for n in 0..=max_n {
            for k in 0..=n {
                let q = pade_coeff_q(&params, n as u32, (n - k) as u32).unwrap();
                assert_eq!(qnk_transformed(&family, n, k).unwrap(), q, "m={m} n={n} k={k}");
            }
        }
    }
    assert!(qnk_transformed(&GroupFamily::hecke4(1), 1, 0).is_err());
}

#[test]
fn printed_expp4_shifts_miscount() {
    use freesub_core::valuation::legendre_vp_sum_as_printed;
    let case = ValuationCase::new(11, 25, 17, 15, Variant::Expp4).unwrap();
    assert_eq!(vp_pochhammer_ratio(&case).unwrap(), 2);
    assert_eq!(legendre_vp_sum(&case), 2);
    assert_eq!(legendre_vp_sum_as_printed(&case), 3);
    // the other three variants are unaffected
    for v in [Variant::Expp, Variant::Expp2, Variant::Expp3] {
        let p = primes(v)[0];
        let case = ValuationCase::new(p, 30, 12, 5, v).unwrap();
        assert_eq!(legendre_vp_sum_as_printed(&case), legendre_vp_sum(&case));
    }
}
