//! Eisenstein series attached to pairs of real characters, the
//! quasi-modular weight-2 series, and L-normalized variants.
//!
//! For weight `k` and characters `chi`, `psi` the series is
//!
//! ```text
//! E = c0 + 2 * sum_{n>=1} ( sum_{d|n} chi(n/d) psi(d) d^(k-1) ) q^n
//! ```
//!
//! with constant term `c0 = L(1-k, psi)` when `chi` is trivial and 0
//! otherwise. Weight 2 with both characters trivial is rejected: that corner
//! is covered by [`e2_coeffs`], which is quasi-modular rather than modular
//! and carries the classical `1 - 24 sum sigma(n) q^n` normalization.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::Factorization;
use crate::chars::{l_norm_const, l_value, CharacterSpec};
use crate::error::{Error, Result};
use crate::parallel;
use crate::series::CoeffSeries;

/// Weight and character pair for an Eisenstein series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisensteinSpec {
    k: u32,
    chi: CharacterSpec,
    psi: CharacterSpec,
}

impl EisensteinSpec {
    pub fn new(k: u32, chi: CharacterSpec, psi: CharacterSpec) -> Result<Self> {
        if k < 2 {
            return Err(Error::BadEisenstein(format!("weight {k} below 2")));
        }
        if k == 2 && chi.is_trivial() && psi.is_trivial() {
            return Err(Error::BadEisenstein(
                "weight 2 with two trivial characters is not modular".into(),
            ));
        }
        Ok(EisensteinSpec { k, chi, psi })
    }

    pub fn weight(&self) -> u32 {
        self.k
    }

    pub fn chi(&self) -> &CharacterSpec {
        &self.chi
    }

    pub fn psi(&self) -> &CharacterSpec {
        &self.psi
    }

    /// `n >= 1` coefficient: `2 sum_{d|n} chi(n/d) psi(d) d^(k-1)`.
    fn coeff_at(&self, n: u64) -> BigInt {
        let mut acc = BigInt::zero();
        for d in Factorization::of(n).divisors() {
            let c = self.chi.eval((n / d) as i64) * self.psi.eval(d as i64);
            match c {
                1 => acc += BigInt::from(d).pow(self.k - 1),
                -1 => acc -= BigInt::from(d).pow(self.k - 1),
                _ => {}
            }
        }
        acc * 2
    }

    fn constant_term(&self) -> Result<BigRational> {
        if self.chi.is_trivial() {
            l_value(self.k, self.psi.discriminant())
        } else {
            Ok(BigRational::zero())
        }
    }
}

impl std::fmt::Display for EisensteinSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "E_{{{},{},{}}}", self.k, self.chi, self.psi)
    }
}

/// Expansion of the series described by `spec` through `q^t`.
pub fn eisenstein_coeffs(spec: &EisensteinSpec, t: u64) -> Result<CoeffSeries> {
    let c0 = spec.constant_term()?;
    let len = t as usize + 1;
    let mut ints = parallel::map_indices(len, |n| {
        if n == 0 {
            BigInt::zero()
        } else {
            spec.coeff_at(n as u64)
        }
    });
    ints[0] = BigInt::zero();
    let mut coeffs: Vec<BigRational> = ints.into_iter().map(BigRational::from_integer).collect();
    coeffs[0] = c0;
    Ok(CoeffSeries::from_coeffs(coeffs))
}

/// Sequential variant of [`eisenstein_coeffs`], for benches and determinism
/// cross-checks.
pub fn eisenstein_coeffs_sequential(spec: &EisensteinSpec, t: u64) -> Result<CoeffSeries> {
    let mut coeffs = vec![spec.constant_term()?];
    for n in 1..=t {
        coeffs.push(BigRational::from_integer(spec.coeff_at(n)));
    }
    Ok(CoeffSeries::from_coeffs(coeffs))
}

/// Quasi-modular `E_2 = 1 - 24 sum_{n>=1} sigma(n) q^n` through `q^t`.
pub fn e2_coeffs(t: u64) -> CoeffSeries {
    let len = t as usize + 1;
    let coeffs = parallel::map_indices(len, |n| {
        if n == 0 {
            BigRational::from_integer(BigInt::from(1))
        } else {
            BigRational::from_integer(BigInt::from(Factorization::of(n as u64).sigma()) * -24)
        }
    });
    CoeffSeries::from_coeffs(coeffs)
}

/// Eisenstein series of weight `k` for the character attached to the odd
/// prime `p`, rescaled by `1 / L(1-k, chi)` so the constant term is 1.
pub fn normalized_eisenstein(k: u32, p: u64, t: u64) -> Result<CoeffSeries> {
    let norm = l_norm_const(k, p)?;
    let chi = CharacterSpec::kronecker(crate::arith::prime_discriminant(p))?;
    let spec = EisensteinSpec::new(k, CharacterSpec::trivial(), chi)?;
    Ok(eisenstein_coeffs(&spec, t)?.scale(&norm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, rat_int};

    fn eis(k: u32, chi_d: i64, psi_d: i64) -> EisensteinSpec {
        EisensteinSpec::new(
            k,
            CharacterSpec::kronecker(chi_d).unwrap(),
            CharacterSpec::kronecker(psi_d).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(EisensteinSpec::new(1, CharacterSpec::trivial(), CharacterSpec::trivial()).is_err());
        assert!(EisensteinSpec::new(2, CharacterSpec::trivial(), CharacterSpec::trivial()).is_err());
        assert!(eisenstein_coeffs(&eis(2, 1, -4), 4).is_ok());
    }

    #[test]
    fn e2_pinned() {
        let s = e2_coeffs(6);
        let expect: Vec<i64> = vec![1, -24, -72, -96, -168, -144, -288];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(s.coeff(n as u64), &rat_int(*e), "n={n}");
        }
    }

    #[test]
    fn both_characters_odd_gives_twisted_sigma() {
        // chi = psi = chi_{-4}: coefficient at odd n is 2 * (-4/n) * sigma(n).
        let s = eisenstein_coeffs(&eis(2, -4, -4), 12).unwrap();
        assert!(s.coeff(0).is_zero());
        for n in 1..=12u64 {
            let expect = if n % 2 == 0 {
                rat_int(0)
            } else {
                let sig = Factorization::of(n).sigma() as i64;
                rat_int(2 * crate::arith::kronecker(-4, n as i64) as i64 * sig)
            };
            assert_eq!(s.coeff(n), &expect, "n={n}");
        }
    }

    #[test]
    fn weight_three_constant_term() {
        // chi trivial, psi = chi_{-4}: constant term L(-2, chi_{-4}) = -1/2.
        let spec = EisensteinSpec::new(
            3,
            CharacterSpec::trivial(),
            CharacterSpec::kronecker(-4).unwrap(),
        )
        .unwrap();
        let s = eisenstein_coeffs(&spec, 5).unwrap();
        assert_eq!(s.coeff(0), &rat(-1, 2));
        // 2 * sum_{d|n} psi(d) d^2 with psi = chi_{-4} vanishing on even d.
        assert_eq!(s.coeff(1), &rat_int(2));
        assert_eq!(s.coeff(2), &rat_int(2));
        assert_eq!(s.coeff(3), &rat_int(-16));
        assert_eq!(s.coeff(4), &rat_int(2));
        assert_eq!(s.coeff(5), &rat_int(52));
    }

    #[test]
    fn parallel_matches_sequential() {
        let spec = EisensteinSpec::new(
            2,
            CharacterSpec::kronecker(12).unwrap(),
            CharacterSpec::trivial(),
        )
        .unwrap();
        let a = eisenstein_coeffs(&spec, 200).unwrap();
        let b = eisenstein_coeffs_sequential(&spec, 200).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn normalized_has_unit_constant() {
        let s = normalized_eisenstein(2, 5, 8).unwrap();
        assert_eq!(s.coeff(0), &rat_int(1));
        // 1/L * 2 * sum_{d|n} chi_5(d) d at n=1: (-5/2) * 2 = -5.
        assert_eq!(s.coeff(1), &rat_int(-5));
        let s = normalized_eisenstein(3, 3, 4).unwrap();
        assert_eq!(s.coeff(0), &rat_int(1));
        // 1/L(-2, chi_{-3}) = -9/2; n=1 coefficient 2 -> -9.
        assert_eq!(s.coeff(1), &rat_int(-9));
        assert_eq!(normalized_eisenstein(2, 3, 4), Err(Error::ZeroLValue { k: 2, d: -3 }));
    }
}
