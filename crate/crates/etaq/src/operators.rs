//! Index-space operators on coefficient series: downsampling `U_l`,
//! upsampling `V_l`, residue-class sieving, character twists, and the Hecke
//! operator `T_p` for a fixed weight and nebentypus.
//!
//! All of these act on truncated series and report the tightest truncation
//! that the input supports: `U_l` divides it by `l`, `V_l` multiplies it,
//! sieving and twisting preserve it, and `T_p` divides it by `p`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::Factorization;
use crate::chars::CharacterSpec;
use crate::series::CoeffSeries;

/// `(U_l s)[n] = s[l n]`. Truncation drops to `floor(T / l)`.
pub fn op_u(s: &CoeffSeries, l: u64) -> CoeffSeries {
    assert!(l >= 1);
    let t = s.truncation() / l;
    let coeffs = (0..=t).map(|n| s.coeff(l * n).clone()).collect();
    CoeffSeries::from_coeffs(coeffs)
}

/// `(V_l s)[l n] = s[n]`, zero elsewhere. Truncation rises to `l T`.
pub fn op_v(s: &CoeffSeries, l: u64) -> CoeffSeries {
    assert!(l >= 1);
    let t = s.truncation() * l;
    let mut coeffs = vec![BigRational::zero(); t as usize + 1];
    for (n, c) in s.coeffs().iter().enumerate() {
        coeffs[n * l as usize] = c.clone();
    }
    CoeffSeries::from_coeffs(coeffs)
}

/// Keeps coefficients with `n = residue (mod modulus)`, zeroing the rest.
pub fn op_sieve(s: &CoeffSeries, modulus: u64, residue: u64) -> CoeffSeries {
    assert!(modulus >= 1);
    let r = (residue % modulus) as usize;
    let m = modulus as usize;
    let coeffs = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| if n % m == r { c.clone() } else { BigRational::zero() })
        .collect();
    CoeffSeries::from_coeffs(coeffs)
}

/// Coefficient-wise twist `s[n] -> chi(n) s[n]`.
pub fn op_twist(s: &CoeffSeries, chi: &CharacterSpec) -> CoeffSeries {
    let coeffs = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| match chi.eval(n as i64) {
            1 => c.clone(),
            -1 => -c.clone(),
            _ => BigRational::zero(),
        })
        .collect();
    CoeffSeries::from_coeffs(coeffs)
}

/// Hecke operator at a prime `p` for weight `k` and character `chi`:
///
/// ```text
/// (T_p s)[n] = s[p n] + chi(p) p^(k-1) s[n / p]   (second term only when p | n)
/// ```
///
/// Truncation drops to `floor(T / p)`.
pub fn hecke_tp(s: &CoeffSeries, p: u64, k: u32, chi: &CharacterSpec) -> CoeffSeries {
    assert!(p >= 2);
    let t = s.truncation() / p;
    let scale = BigRational::from_integer(
        BigInt::from(chi.eval(p as i64)) * BigInt::from(p).pow(k - 1),
    );
    let coeffs = (0..=t)
        .map(|n| {
            let mut c = s.coeff(p * n).clone();
            if n % p == 0 {
                c += &scale * s.coeff(n / p);
            }
            c
        })
        .collect();
    CoeffSeries::from_coeffs(coeffs)
}

/// Checks `|c(n)|^2 <= d(n)^2 n^(k-1)` for `n >= 1`, given the squared
/// absolute values of the coefficients of a weight-`k` newform. Entry 0 is
/// ignored. Returns the indices that violate the bound.
pub fn deligne_violations(norm_squares: &[BigRational], k: u32) -> Vec<u64> {
    let mut bad = Vec::new();
    for (n, c2) in norm_squares.iter().enumerate().skip(1) {
        let d = Factorization::of(n as u64).num_divisors();
        let bound = BigInt::from(d * d) * BigInt::from(n).pow(k - 1);
        if c2 > &BigRational::from_integer(bound) {
            bad.push(n as u64);
        }
    }
    bad
}

/// [`deligne_violations`] applied to a rational coefficient series, squaring
/// each coefficient in place.
pub fn deligne_violations_rational(s: &CoeffSeries, k: u32) -> Vec<u64> {
    let squares: Vec<BigRational> = s.coeffs().iter().map(|c| c * c).collect();
    deligne_violations(&squares, k)
}
