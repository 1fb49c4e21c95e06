//! Randomized structural invariants: operator algebra, exact-arithmetic
//! identities, and bit-identical agreement between the parallel and
//! sequential code paths.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use etaq::arith::{kronecker, ord_p, p_free_part, twisted_divisor_sum};
use etaq::chars::{bernoulli_number, bernoulli_poly_eval};
use etaq::eisenstein::{eisenstein_coeffs, eisenstein_coeffs_sequential};
use etaq::operators::{hecke_tp, op_sieve, op_twist, op_u, op_v};
use etaq::series::{eta_quotient_series, rat_int, CoeffSeries, EtaQuotientSpec};
use etaq::{sturm_bound, CharacterSpec, EisensteinSpec, HurwitzTable};

fn rational(num: i64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Series with small rational coefficients and the given length range.
fn series(len: impl Into<proptest::collection::SizeRange>) -> impl Strategy<Value = CoeffSeries> {
    proptest::collection::vec((-50i64..=50, 1u64..=6), len)
        .prop_map(|v| CoeffSeries::from_coeffs(v.into_iter().map(|(n, d)| rational(n, d)).collect()))
}

/// Eta-quotient specs with a handful of small dilations and exponents.
fn eta_spec() -> impl Strategy<Value = EtaQuotientSpec> {
    proptest::collection::btree_map(1u64..=4, (-3i64..=3).prop_filter("nonzero", |&d| d != 0), 1..=3)
        .prop_map(|m| EtaQuotientSpec::new(m.into_iter().collect()).unwrap())
}

/// Fundamental discriminants used for characters and twists.
const DISCS: [i64; 8] = [-8, -4, -3, 1, 5, 8, 12, 13];

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn mul_parallel_matches_sequential(a in series(130..=200), b in series(130..=200)) {
        prop_assert_eq!(a.mul(&b), a.mul_sequential(&b));
    }

    #[test]
    fn mul_commutes_and_associates(a in series(1..=40), b in series(1..=40), c in series(1..=40)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn inverse_round_trips(s in series(1..=40), head in 1i64..=20) {
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = rat_int(head);
        let s = CoeffSeries::from_coeffs(coeffs);
        let t = s.truncation();
        prop_assert_eq!(s.mul(&s.inverse().unwrap()), CoeffSeries::one(t));
    }

    #[test]
    fn downsample_inverts_upsample(s in series(1..=60), l in 2u64..=7) {
        prop_assert_eq!(op_u(&op_v(&s, l), l), s);
    }

    #[test]
    fn downsamples_compose(s in series(1..=80), a in 2u64..=4, b in 2u64..=4) {
        prop_assert_eq!(op_u(&op_u(&s, a), b), op_u(&s, a * b));
    }

    #[test]
    fn upsamples_compose(s in series(1..=40), a in 2u64..=4, b in 2u64..=4) {
        prop_assert_eq!(op_v(&op_v(&s, a), b), op_v(&s, a * b));
    }

    #[test]
    fn sieves_partition_the_series(s in series(1..=60), m in 1u64..=8) {
        let mut acc = CoeffSeries::zero(s.truncation());
        for r in 0..m {
            acc = acc.add(&op_sieve(&s, m, r));
        }
        prop_assert_eq!(acc, s);
    }

    #[test]
    fn sieves_are_orthogonal_idempotents(s in series(1..=60), m in 2u64..=8, r in 0u64..8, r2 in 0u64..8) {
        let (r, r2) = (r % m, r2 % m);
        let once = op_sieve(&s, m, r);
        prop_assert_eq!(op_sieve(&once, m, r).clone(), once.clone());
        if r != r2 {
            prop_assert_eq!(op_sieve(&once, m, r2), CoeffSeries::zero(s.truncation()));
        }
    }

    #[test]
    fn double_twist_masks_to_coprime_support(s in series(1..=60), di in 0usize..DISCS.len()) {
        let chi = CharacterSpec::kronecker(DISCS[di]).unwrap();
        let twice = op_twist(&op_twist(&s, &chi), &chi);
        let masked = CoeffSeries::from_coeffs(
            s.coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| {
                    if chi.eval(n as i64) == 0 {
                        BigRational::zero()
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        );
        prop_assert_eq!(twice, masked);
    }

    #[test]
    fn bernoulli_reflection_and_difference(k in 0u32..=12, num in -24i64..=24, den in 1u64..=9) {
        let x = rational(num, den);
        let refl = bernoulli_poly_eval(k, &(BigRational::one() - &x));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(refl, bernoulli_poly_eval(k, &x) * rat_int(sign));
        if k >= 1 {
            let step = bernoulli_poly_eval(k, &(&x + BigRational::one())) - bernoulli_poly_eval(k, &x);
            let mut pow = BigRational::one();
            for _ in 0..k - 1 {
                pow *= &x;
            }
            prop_assert_eq!(step, rat_int(k as i64) * pow);
        }
        prop_assert_eq!(bernoulli_poly_eval(k, &BigRational::zero()), bernoulli_number(k));
    }

    #[test]
    fn free_part_factors_the_integer(n in 1u64..=100_000, pi in 0usize..4) {
        let p = [2u64, 3, 5, 7][pi];
        let (a, m) = (ord_p(n, p), p_free_part(n, p));
        prop_assert_eq!(p.pow(a) * m, n);
        prop_assert_ne!(m % p, 0);
    }

    #[test]
    fn kronecker_is_completely_multiplicative(
        a in -60i64..=60,
        b in -60i64..=60,
        m in 1i64..=60,
        n in 1i64..=60,
    ) {
        prop_assert_eq!(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n));
        prop_assert_eq!(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n));
    }

    #[test]
    fn twisted_divisor_sums_are_multiplicative(
        m in 1u64..=400,
        n in 1u64..=400,
        di in 0usize..DISCS.len(),
        k in 0u32..=3,
    ) {
        prop_assume!(num_integer::gcd(m, n) == 1);
        let d = DISCS[di];
        prop_assert_eq!(
            twisted_divisor_sum(m * n, d, k),
            twisted_divisor_sum(m, d, k) * twisted_divisor_sum(n, d, k)
        );
    }

    #[test]
    fn sturm_bound_is_monotone(k2 in 1u64..=12, level in 1u64..=200, c in 1u64..=6) {
        prop_assert!(sturm_bound(k2, level) <= sturm_bound(k2 + 1, level));
        prop_assert!(sturm_bound(k2, level) <= sturm_bound(k2, level * c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn eta_quotient_times_reciprocal_is_one(spec in eta_spec(), t in 1u64..=60) {
        let flipped =
            EtaQuotientSpec::new(spec.terms().iter().map(|&(j, d)| (j, -d)).collect()).unwrap();
        let (e, c) = eta_quotient_series(&spec, t);
        let (e2, c2) = eta_quotient_series(&flipped, t);
        prop_assert_eq!(e + e2, 0);
        prop_assert_eq!(c.mul(&c2), CoeffSeries::one(t));
    }

    #[test]
    fn eisenstein_parallel_matches_sequential(k in 1u32..=4, di in 0usize..DISCS.len(), t in 0u64..=300) {
        let psi = CharacterSpec::kronecker(DISCS[di]).unwrap();
        let spec = match EisensteinSpec::new(k, CharacterSpec::trivial(), psi) {
            Ok(spec) => spec,
            Err(_) => return Ok(()),
        };
        prop_assert_eq!(
            eisenstein_coeffs(&spec, t).unwrap(),
            eisenstein_coeffs_sequential(&spec, t).unwrap()
        );
    }

    #[test]
    fn hurwitz_parallel_matches_sequential(limit in 0u64..=2500) {
        let par = HurwitzTable::up_to(limit);
        let seq = HurwitzTable::up_to_sequential(limit);
        prop_assert_eq!(par.series(limit), seq.series(limit));
    }

    #[test]
    fn eisenstein_is_a_hecke_eigenvector(t in 14u64..=140) {
        // T_7 on the weight-2 series with right character (12/.) scales it
        // by 1 + chi(7) 7.
        let chi12 = CharacterSpec::kronecker(12).unwrap();
        let spec = EisensteinSpec::new(2, CharacterSpec::trivial(), chi12.clone()).unwrap();
        let e = eisenstein_coeffs(&spec, t).unwrap();
        let image = hecke_tp(&e, 7, 2, &chi12);
        prop_assert_eq!(image, e.truncated(t / 7).scale(&rat_int(-6)));
    }
}
