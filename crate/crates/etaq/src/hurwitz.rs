//! Hurwitz class numbers `H(d)` by direct enumeration of reduced binary
//! quadratic forms, bulk tabulation, the multiplicative scaling factor for
//! imprimitive discriminants, and the sieved combinations used in
//! class-number identities.
//!
//! `H(d)` counts classes of positive definite forms of discriminant `-d`
//! with forms proportional to `x^2 + y^2` weighted `1/2` and to
//! `x^2 + xy + y^2` weighted `1/3`; `H(0) = -1/12` and `H(d) = 0` for
//! `d = 1, 2 (mod 4)`. All values are stored as `12 H(d)`, which is always
//! an integer.
//!
//! Enumeration runs over reduced triples `|b| <= a <= c` with
//! `4ac - b^2 = d`, folding the `+/-b` pair and the boundary conventions
//! (`b >= 0` when `|b| = a` or `a = c`) into a per-triple weight.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::{is_fundamental_discriminant, isqrt, kronecker, mobius, Factorization};
use crate::error::{Error, Result};
use crate::parallel;
use crate::series::CoeffSeries;

/// Weight contributed by the reduced triple `(a, b, c)`, scaled by 12 and
/// accounting for the `(a, -b, c)` partner when it is a distinct reduced
/// form.
fn weight12(a: u64, b: u64, c: u64) -> i64 {
    if b == 0 {
        if c == a {
            6
        } else {
            12
        }
    } else if b == a {
        if c == a {
            4
        } else {
            12
        }
    } else if c == a {
        12
    } else {
        24
    }
}

/// `12 H(d)` for a single `d >= 0`.
pub fn hurwitz_twelve_times(d: u64) -> i64 {
    if d == 0 {
        return -1;
    }
    match d % 4 {
        1 | 2 => return 0,
        _ => {}
    }
    let mut acc = 0i64;
    let mut b = if d.is_multiple_of(4) { 0u64 } else { 1u64 };
    while 3 * b * b <= d {
        let m = (d + b * b) / 4;
        let mut a = b.max(1);
        while a * a <= m {
            if m.is_multiple_of(a) {
                acc += weight12(a, b, m / a);
            }
            a += 1;
        }
        b += 2;
    }
    acc
}

/// `H(d)` as an exact rational.
pub fn hurwitz_class_number(d: u64) -> BigRational {
    BigRational::new(BigInt::from(hurwitz_twelve_times(d)), BigInt::from(12))
}

/// Table of `12 H(d)` for `0 <= d <= limit`, built by one sweep over all
/// reduced forms with discriminant in range.
pub struct HurwitzTable {
    twelfths: Vec<i64>,
}

impl HurwitzTable {
    pub fn up_to(limit: u64) -> Self {
        let a_max = {
            let mut a = isqrt(limit / 3);
            while 3 * (a + 1) * (a + 1) <= limit {
                a += 1;
            }
            a
        };
        let a_values: Vec<u64> = (1..=a_max).collect();
        // Work per value of a is roughly uniform (about limit/4 inner steps),
        // so fixed-size chunks balance well.
        let chunk = Self::chunk_size(a_values.len());
        let len = limit as usize + 1;
        let mut twelfths = parallel::fold_chunks(
            &a_values,
            chunk,
            |chunk_vals| {
                let mut table = vec![0i64; len];
                for &a in chunk_vals {
                    for b in 0..=a {
                        let c_max = (limit + b * b) / (4 * a);
                        for c in a..=c_max {
                            let d = 4 * a * c - b * b;
                            table[d as usize] += weight12(a, b, c);
                        }
                    }
                }
                table
            },
            |mut x, y| {
                for (xi, yi) in x.iter_mut().zip(y) {
                    *xi += yi;
                }
                x
            },
            || vec![0i64; len],
        );
        twelfths[0] = -1;
        HurwitzTable { twelfths }
    }

    /// Single-threaded build, independent of the feature flag; used to pin
    /// down determinism in tests and benches.
    pub fn up_to_sequential(limit: u64) -> Self {
        let len = limit as usize + 1;
        let mut twelfths = vec![0i64; len];
        let mut a = 1u64;
        while 3 * a * a <= limit {
            for b in 0..=a {
                let c_max = (limit + b * b) / (4 * a);
                for c in a..=c_max {
                    let d = 4 * a * c - b * b;
                    twelfths[d as usize] += weight12(a, b, c);
                }
            }
            a += 1;
        }
        twelfths[0] = -1;
        HurwitzTable { twelfths }
    }

    #[cfg(feature = "parallel")]
    fn chunk_size(n: usize) -> usize {
        (n / (rayon::current_num_threads() * 8)).max(1)
    }

    #[cfg(not(feature = "parallel"))]
    fn chunk_size(n: usize) -> usize {
        n.max(1)
    }

    pub fn limit(&self) -> u64 {
        self.twelfths.len() as u64 - 1
    }

    pub fn twelve_times(&self, d: u64) -> i64 {
        self.twelfths[d as usize]
    }

    pub fn value(&self, d: u64) -> BigRational {
        BigRational::new(BigInt::from(self.twelve_times(d)), BigInt::from(12))
    }

    /// `sum_{n <= t} H(n) q^n`.
    pub fn series(&self, t: u64) -> CoeffSeries {
        assert!(t <= self.limit());
        let coeffs = (0..=t).map(|n| self.value(n)).collect();
        CoeffSeries::from_coeffs(coeffs)
    }

    /// `sum_{n <= t} ( H(l1 l2 n) - l2 H(l1 n / l2) ) q^n`, the second term
    /// present only when `l2 | n`. Requires the table to reach `l1 l2 t`.
    pub fn sieved_series(&self, l1: u64, l2: u64, t: u64) -> Result<CoeffSeries> {
        check_sieve_pair(l1, l2)?;
        assert!(l1 * l2 * t <= self.limit());
        let l2_big = BigRational::from_integer(BigInt::from(l2));
        let coeffs = (0..=t)
            .map(|n| {
                let mut v = self.value(l1 * l2 * n);
                if n % l2 == 0 {
                    v -= &l2_big * self.value(l1 * n / l2);
                }
                v
            })
            .collect();
        Ok(CoeffSeries::from_coeffs(coeffs))
    }
}

/// `l1` and `l2` must be coprime with `l2` squarefree.
pub fn check_sieve_pair(l1: u64, l2: u64) -> Result<()> {
    if l1 == 0
        || l2 == 0
        || num_integer::gcd(l1, l2) != 1
        || !Factorization::of(l2).is_squarefree()
    {
        return Err(Error::BadSievePair(l1, l2));
    }
    Ok(())
}

/// Standalone version of [`HurwitzTable::sieved_series`], building a table
/// just large enough.
pub fn hurwitz_sieved(l1: u64, l2: u64, t: u64) -> Result<CoeffSeries> {
    check_sieve_pair(l1, l2)?;
    HurwitzTable::up_to(l1 * l2 * t).sieved_series(l1, l2, t)
}

/// The factor `S_D(f) = sum_{e | f} mu(e) (−D/e)-character value sigma(f/e)`
/// in `H(D f^2) = H(D) S_D(f)`, for `-D` a fundamental discriminant.
pub fn s_d_factor(d: u64, f: u64) -> Result<i64> {
    if !is_fundamental_discriminant(-(d as i64)) {
        return Err(Error::NotFundamental(d));
    }
    assert!(f >= 1);
    let mut acc = 0i64;
    for e in Factorization::of(f).divisors() {
        let mu = mobius(e);
        if mu == 0 {
            continue;
        }
        let chi = kronecker(-(d as i64), e as i64);
        if chi == 0 {
            continue;
        }
        let sig = Factorization::of(f / e).sigma() as i64;
        acc += mu as i64 * chi as i64 * sig;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn pinned_small_values() {
        let expect: &[(u64, i64, i64)] = &[
            (0, -1, 12),
            (3, 1, 3),
            (4, 1, 2),
            (7, 1, 1),
            (8, 1, 1),
            (11, 1, 1),
            (12, 4, 3),
            (15, 2, 1),
            (16, 3, 2),
            (19, 1, 1),
            (20, 2, 1),
            (23, 3, 1),
            (24, 2, 1),
            (27, 4, 3),
            (28, 2, 1),
            (31, 3, 1),
            (32, 3, 1),
        ];
        for &(d, num, den) in expect {
            assert_eq!(hurwitz_class_number(d), rat(num, den), "d={d}");
        }
        for d in [1u64, 2, 5, 6, 9, 10, 13, 14, 2021, 4046] {
            assert_eq!(hurwitz_twelve_times(d), 0, "d={d}");
        }
    }

    #[test]
    fn table_matches_single_values() {
        let table = HurwitzTable::up_to(4000);
        for d in 0..=4000u64 {
            assert_eq!(table.twelve_times(d), hurwitz_twelve_times(d), "d={d}");
        }
    }

    #[test]
    fn parallel_table_matches_sequential() {
        let a = HurwitzTable::up_to(6000);
        let b = HurwitzTable::up_to_sequential(6000);
        assert_eq!(a.twelfths, b.twelfths);
    }

    #[test]
    fn scaling_factor_on_imprimitive_discriminants() {
        for d in 1..=100u64 {
            if !is_fundamental_discriminant(-(d as i64)) {
                continue;
            }
            let base = hurwitz_class_number(d);
            for f in 1..=10u64 {
                let s = s_d_factor(d, f).unwrap();
                let lhs = hurwitz_class_number(d * f * f);
                assert_eq!(lhs, base.clone() * rat(s, 1), "d={d} f={f}");
            }
        }
        assert_eq!(s_d_factor(3, 3).unwrap(), 4);
        assert_eq!(s_d_factor(8, 2).unwrap(), 3);
        assert_eq!(s_d_factor(12, 2), Err(Error::NotFundamental(12)));
    }

    #[test]
    fn sieved_series_values() {
        let table = HurwitzTable::up_to(240);
        let s = table.sieved_series(4, 3, 20).unwrap();
        // n = 1: H(12) = 4/3; n = 3: H(36) - 3 H(4) = 5/2 - 3/2 = 1.
        assert_eq!(s.coeff(1), &rat(4, 3));
        assert_eq!(s.coeff(3), &rat(1, 1));
        assert_eq!(s.coeff(0).clone(), rat(1, 6));
        let free = hurwitz_sieved(4, 3, 20).unwrap();
        assert_eq!(s, free);
        assert!(table.sieved_series(4, 2, 5).is_err());
        assert!(table.sieved_series(4, 12, 2).is_err());
        assert!(check_sieve_pair(1, 3).is_ok());
    }
}
