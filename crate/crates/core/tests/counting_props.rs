use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;
use slicelab::counting::{
    alfa_inequality, certify_e_upper, g_logmass, kozep_chain, kozep_chain_dominates, kozep_ratio,
    majorization_check, verify_kozep_range, AlfaVerdict, Alpha, CertificateVerdict,
};
use slicelab::slice::binom_ext;

fn binom_f64(a: u32, b: u32) -> f64 {
    (0..b).fold(1.0, |acc, i| acc * (a - i) as f64 / (i + 1) as f64)
}

fn central_f64(m: u32) -> f64 {
    binom_f64(m, m / 2)
}

/// Floating-point ratio, computed directly from the definition.
fn kozep_f64(n: u32, t: u32) -> f64 {
    let mut num = (t + 1) as f64 * central_f64(n - t);
    for l in t + 1..=n {
        num += (l as f64 * (l as f64).log2() + 2.0) * central_f64(n - l);
    }
    num / central_f64(n)
}

#[test]
fn kozep_encloses_float_value() {
    for t in 1..=8 {
        for n in t..=60 {
            let r = kozep_ratio(n, t, 128).unwrap();
            let v = kozep_f64(n, t);
            let slack = 1e-9 * v.max(1.0);
            assert!(
                r.lo_f64() <= v + slack && v - slack <= r.hi_f64(),
                "n={n} t={t}: {v} vs [{}, {}]",
                r.lo_f64(),
                r.hi_f64()
            );
        }
    }
}

#[test]
fn kozep_t7_range_certified() {
    let rep = verify_kozep_range(7, 7, 99).unwrap();
    assert!(rep.all_certified);
    assert!(rep.indeterminate.is_empty());
    let worst = (7..=99).map(|n| kozep_f64(n, 7)).fold(0.0, f64::max);
    assert!((worst - 0.5756).abs() < 1e-3, "{worst}");
}

#[test]
fn chain_stages() {
    let c = kozep_chain(256).unwrap();
    assert!(c.first_below_0_2 && c.middle_below_0_71 && c.total_below_0_92);
    assert!((c.first.hi_f64() - 0.19336).abs() < 1e-4);
    assert!((c.middle.hi_f64() - 0.70820).abs() < 1e-4);
    assert!((c.tail.hi_f64() - 0.003295).abs() < 1e-5);
}

#[test]
fn chain_dominates_concrete_n() {
    for n in (100..=300).step_by(7).chain([101, 299, 300]) {
        assert_eq!(kozep_chain_dominates(n, 256).unwrap(), [true; 3], "n={n}");
    }
}

#[test]
fn majorization_holds_small_n() {
    for n in 1..=30 {
        for k in 0..=n / 2 {
            let issues = majorization_check(n, k).unwrap();
            assert!(issues.is_empty(), "n={n} k={k}: {issues:?}");
        }
    }
}

#[test]
fn certificate_matches_exact_comparison() {
    for n in 2..=14u32 {
        for k in 1..=n / 2 {
            let cert = certify_e_upper(n, k).unwrap();
            let limit = BigUint::one()
                << binom_ext(n as i64, k as i64)
                    .to_u64_digits()
                    .first()
                    .copied()
                    .unwrap_or(0);
            let exact: Vec<u32> = (0..=n)
                .filter(|&t| g_logmass(n, k, t).unwrap().expand().unwrap() < limit)
                .collect();
            assert_eq!(cert.certified_t, exact, "n={n} k={k}");
            assert_eq!(cert.t, exact.first().copied());
            assert!(cert.upward_closed);
        }
    }
}

#[test]
fn lower_half_always_defined() {
    for n in 1..=60u32 {
        for k in 0..=n / 2 {
            for t in 0..=n {
                g_logmass(n, k, t).unwrap();
            }
        }
    }
    assert!(matches!(
        g_logmass(4, 4, 0),
        Err(slicelab::Error::Domain(_))
    ));
}

#[test]
fn certificate_pins() {
    for ((n, k), t) in [
        ((100, 50), 5),
        ((20, 10), 5),
        ((50, 12), 9),
        ((2, 1), 2),
        ((4, 2), 3),
        ((10, 5), 4),
    ] {
        let cert = certify_e_upper(n, k).unwrap();
        assert_eq!(cert.verdict, CertificateVerdict::Certified);
        assert_eq!(cert.t, Some(t), "n={n} k={k}");
    }
}

#[test]
fn g_small_values() {
    let g = |n, k, t| g_logmass(n, k, t).unwrap().expand().unwrap();
    let v3: Vec<BigUint> = (0..=3).map(|t| g(3, 1, t)).collect();
    assert_eq!(v3, [192u32, 96, 12, 2].map(BigUint::from));
    let v4: Vec<BigUint> = (0..=4).map(|t| g(4, 2, t)).collect();
    assert_eq!(v4, [147456u32, 36864, 576, 16, 2].map(BigUint::from));
}

#[test]
fn alfa_large_c_is_vacuous() {
    let r = alfa_inequality(Alpha::new(1, 4).unwrap(), 50, 40, 128).unwrap();
    assert_eq!(r.verdict, AlfaVerdict::Holds);
}

proptest! {
    #[test]
    fn log2_g_encloses_exact(n in 2u32..=12, k_frac in 0.0f64..=0.5, t_frac in 0.0f64..=1.0) {
        let k = ((n as f64 * k_frac) as u32).min(n / 2);
        let t = ((n as f64 * t_frac) as u32).min(n);
        let m = g_logmass(n, k, t).unwrap();
        let exact = m.expand().unwrap();
        let bits = exact.bits();
        let iv = m.log2(128);
        // 2^(bits-1) <= g < 2^bits
        prop_assert!(iv.hi_f64() >= (bits - 1) as f64 - 1e-9);
        prop_assert!(iv.lo_f64() <= bits as f64 + 1e-9);
    }

    #[test]
    fn g_is_nonincreasing_in_t(n in 2u32..=12, k in 0u32..=6) {
        let k = k.min(n / 2);
        let gs: Vec<BigUint> = (0..=n).map(|t| g_logmass(n, k, t).unwrap().expand().unwrap()).collect();
        prop_assert!(gs.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn alfa_slice_size_is_floor(num in 1u64..10, extra in 1u64..30, n in 1u32..500) {
        let den = 2 * num + extra;
        let a = Alpha::new(num, den).unwrap();
        prop_assert_eq!(a.slice_size(n) as u64, n as u64 * num / den);
    }
}
