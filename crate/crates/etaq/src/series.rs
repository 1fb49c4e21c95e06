//! Dense truncated q-expansions over exact rationals, and eta-quotient
//! expansion through the pentagonal number theorem.
//!
//! A [`CoeffSeries`] holds coefficients for q^0 .. q^T. The truncation T is
//! the last reliable index: arithmetic never reads past it, results of
//! binary operations carry the minimum of the input truncations, and nothing
//! is ever silently zero-extended.
//!
//! An eta-quotient `prod_j eta(j z)^{d_j}` splits into the prefactor
//! `q^(e/24)` with `e = sum j d_j` and the product part
//! `prod_j (q^j; q^j)_inf^{d_j}`, whose expansion starts at q^0 with constant
//! term 1. [`eta_quotient_series`] returns the product-part coefficients
//! together with `e`; [`eta_quotient_fourier`] folds the prefactor back in
//! when `e` is a nonnegative multiple of 24.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::parallel;

/// Shorthand for an integer as a `BigRational`.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d` as a `BigRational`.
pub fn rat(n: i64, d: i64) -> BigRational {
    assert!(d != 0);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Truncated power series in q with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffSeries {
    coeffs: Vec<BigRational>,
}

impl CoeffSeries {
    /// Wraps explicit coefficients; index = exponent of q. The vector length
    /// fixes the truncation, so it must be nonempty.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least q^0");
        CoeffSeries { coeffs }
    }

    pub fn from_integers(vals: &[i64]) -> Self {
        Self::from_coeffs(vals.iter().map(|&v| rat_int(v)).collect())
    }

    pub(crate) fn from_bigints(vals: Vec<BigInt>) -> Self {
        Self::from_coeffs(
            vals.into_iter()
                .map(BigRational::from_integer)
                .collect(),
        )
    }

    pub fn zero(truncation: u64) -> Self {
        Self::constant(BigRational::zero(), truncation)
    }

    pub fn one(truncation: u64) -> Self {
        Self::constant(BigRational::one(), truncation)
    }

    pub fn constant(c: BigRational, truncation: u64) -> Self {
        let mut coeffs = vec![BigRational::zero(); truncation as usize + 1];
        coeffs[0] = c;
        CoeffSeries { coeffs }
    }

    /// Last reliable index.
    pub fn truncation(&self) -> u64 {
        (self.coeffs.len() - 1) as u64
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: u64) -> &BigRational {
        assert!(
            n <= self.truncation(),
            "coefficient {n} beyond truncation {}",
            self.truncation()
        );
        &self.coeffs[n as usize]
    }

    /// Sign of the coefficient at `n`: -1, 0, or 1.
    pub fn sign(&self, n: u64) -> i32 {
        sign_of(self.coeff(n))
    }

    /// Copy truncated to `t <= truncation()`.
    pub fn truncated(&self, t: u64) -> Self {
        assert!(t <= self.truncation());
        CoeffSeries {
            coeffs: self.coeffs[..=t as usize].to_vec(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let t = self.truncation().min(rhs.truncation()) as usize;
        CoeffSeries {
            coeffs: (0..=t).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let t = self.truncation().min(rhs.truncation()) as usize;
        CoeffSeries {
            coeffs: (0..=t).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CoeffSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by q^s. Shifting preserves knowledge, so the result is
    /// reliable through `truncation() + s`.
    pub fn shift_up(&self, s: u64) -> Self {
        let mut coeffs = vec![BigRational::zero(); s as usize];
        coeffs.extend_from_slice(&self.coeffs);
        CoeffSeries { coeffs }
    }

    /// Cauchy product at the minimum truncation. Dispatches to a data-parallel
    /// evaluation of output coefficients when worthwhile; results are
    /// bit-identical to [`CoeffSeries::mul_sequential`].
    pub fn mul(&self, rhs: &Self) -> Self {
        let t = self.truncation().min(rhs.truncation()) as usize;
        if t < 128 {
            return self.mul_sequential(rhs);
        }
        let a = &self.coeffs;
        let b = &rhs.coeffs;
        let coeffs = parallel::map_indices(t + 1, |n| {
            let mut acc = BigRational::zero();
            for i in 0..=n {
                if !a[i].is_zero() && !b[n - i].is_zero() {
                    acc += &a[i] * &b[n - i];
                }
            }
            acc
        });
        CoeffSeries { coeffs }
    }

    /// Plain O(T^2) product; the reference path for the parallel one.
    pub fn mul_sequential(&self, rhs: &Self) -> Self {
        let t = self.truncation().min(rhs.truncation()) as usize;
        let mut coeffs = vec![BigRational::zero(); t + 1];
        for (i, ai) in self.coeffs.iter().enumerate().take(t + 1) {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in rhs.coeffs.iter().enumerate().take(t + 1 - i) {
                if !bj.is_zero() {
                    coeffs[i + j] += ai * bj;
                }
            }
        }
        CoeffSeries { coeffs }
    }

    /// Multiplicative inverse at the same truncation. Requires a nonzero
    /// constant term.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let inv0 = self.coeffs[0].recip();
        let t = self.truncation() as usize;
        let mut g: Vec<BigRational> = Vec::with_capacity(t + 1);
        g.push(inv0.clone());
        for n in 1..=t {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &g[n - k];
                }
            }
            g.push(-acc * &inv0);
        }
        Ok(CoeffSeries { coeffs: g })
    }

    /// Integer power by binary exponentiation; negative exponents go through
    /// the inverse and therefore need a nonzero constant term.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e == 0 {
            return Ok(Self::one(self.truncation()));
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one(self.truncation());
        let mut sq = base;
        loop {
            if exp & 1 == 1 {
                acc = acc.mul(&sq);
            }
            exp >>= 1;
            if exp == 0 {
                break;
            }
            sq = sq.mul(&sq);
        }
        Ok(acc)
    }
}

impl fmt::Display for CoeffSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})q^{n}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.coeffs.len())
    }
}

/// Exponent/sign pairs of `(q^j; q^j)_inf - 1` up to `t`, by the pentagonal
/// number theorem: exponents `j k(3k-1)/2` for k = 1, -1, 2, -2, ... with
/// sign `(-1)^k`. Sorted ascending; `true` marks a negative term.
fn pentagonal_terms(j: u64, t: u64) -> Vec<(usize, bool)> {
    assert!(j >= 1);
    let mut terms = Vec::new();
    let mut k = 1u64;
    loop {
        let g_pos = k * (3 * k - 1) / 2;
        let g_neg = k * (3 * k + 1) / 2;
        let neg = k % 2 == 1;
        let e_pos = j.saturating_mul(g_pos);
        let e_neg = j.saturating_mul(g_neg);
        if e_pos > t && e_neg > t {
            break;
        }
        if e_pos <= t {
            terms.push((e_pos as usize, neg));
        }
        if e_neg <= t {
            terms.push((e_neg as usize, neg));
        }
        k += 1;
    }
    terms
}

/// Truncated expansion of `(q^j; q^j)_inf`. All coefficients are -1, 0, or 1.
pub fn pochhammer_series(j: u64, t: u64) -> CoeffSeries {
    let mut vals = vec![BigInt::zero(); t as usize + 1];
    vals[0] = BigInt::one();
    for (e, neg) in pentagonal_terms(j, t) {
        vals[e] = if neg { -BigInt::one() } else { BigInt::one() };
    }
    CoeffSeries::from_bigints(vals)
}

// One pass of multiplication by (q^j; q^j)_inf on integer coefficients.
// Every output index only reads the input, so the pass parallelizes.
fn poch_mul(vals: &[BigInt], terms: &[(usize, bool)]) -> Vec<BigInt> {
    parallel::map_indices(vals.len(), |n| {
        let mut acc = vals[n].clone();
        for &(e, neg) in terms {
            if e > n {
                break;
            }
            if neg {
                acc -= &vals[n - e];
            } else {
                acc += &vals[n - e];
            }
        }
        acc
    })
}

// One pass of division by (q^j; q^j)_inf, in place. The recurrence
// g[n] = s[n] - sum_e c_e g[n-e] uses the unit constant term, so no actual
// division happens and integrality is preserved exactly.
fn poch_div(vals: &mut [BigInt], terms: &[(usize, bool)]) {
    for n in 1..vals.len() {
        let (head, tail) = vals.split_at_mut(n);
        let gn = &mut tail[0];
        for &(e, neg) in terms {
            if e > n {
                break;
            }
            if neg {
                *gn += &head[n - e];
            } else {
                *gn -= &head[n - e];
            }
        }
    }
}

/// An eta-quotient `prod_j eta(j z)^{d_j}`: distinct positive multipliers
/// `j`, nonzero integer exponents `d_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotientSpec {
    terms: Vec<(u64, i64)>,
}

impl EtaQuotientSpec {
    pub fn new(mut terms: Vec<(u64, i64)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::BadEtaSpec("empty spec".into()));
        }
        terms.sort_unstable_by_key(|&(j, _)| j);
        for w in terms.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::BadEtaSpec(format!("repeated multiplier {}", w[0].0)));
            }
        }
        for &(j, d) in &terms {
            if j == 0 {
                return Err(Error::BadEtaSpec("multiplier 0".into()));
            }
            if d == 0 {
                return Err(Error::BadEtaSpec(format!("zero exponent on multiplier {j}")));
            }
        }
        Ok(EtaQuotientSpec { terms })
    }

    /// Parses whitespace-separated `j^d` tokens; a bare `j` means exponent 1.
    /// Example: `"1^-2 2^3 4^2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for tok in s.split_whitespace() {
            let (j_str, d_str) = match tok.split_once('^') {
                Some((a, b)) => (a, Some(b)),
                None => (tok, None),
            };
            let j: u64 = j_str
                .parse()
                .map_err(|_| Error::BadEtaSpec(format!("bad multiplier {j_str:?} in {tok:?}")))?;
            let d: i64 = match d_str {
                Some(ds) => ds
                    .parse()
                    .map_err(|_| Error::BadEtaSpec(format!("bad exponent {ds:?} in {tok:?}")))?,
                None => 1,
            };
            terms.push((j, d));
        }
        Self::new(terms)
    }

    pub fn terms(&self) -> &[(u64, i64)] {
        &self.terms
    }

    /// `sum j d_j`, i.e. 24 times the q-power of the eta prefactor.
    pub fn exponent24(&self) -> i64 {
        self.terms.iter().map(|&(j, d)| j as i64 * d).sum()
    }

    /// `sum d_j`, i.e. twice the weight.
    pub fn weight_times_two(&self) -> i64 {
        self.terms.iter().map(|&(_, d)| d).sum()
    }

    /// Replaces z by c z, multiplying every multiplier by `c`.
    pub fn dilate(&self, c: u64) -> Self {
        assert!(c >= 1);
        EtaQuotientSpec {
            terms: self.terms.iter().map(|&(j, d)| (j * c, d)).collect(),
        }
    }
}

impl fmt::Display for EtaQuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(j, d) in &self.terms {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if d == 1 {
                write!(f, "{j}")?;
            } else {
                write!(f, "{j}^{d}")?;
            }
        }
        Ok(())
    }
}

/// Expands the product part of an eta-quotient to truncation `t` and returns
/// `(sum j d_j, series)`. The series starts at q^0 with constant term 1; its
/// coefficients are integers carried as rationals, like every other series
/// here. Positive exponents apply pentagonal multiplication passes, negative
/// ones the matching division recurrence, so the cost per factor is
/// O(t sqrt(t/j)) rather than a full Cauchy product.
pub fn eta_quotient_series(spec: &EtaQuotientSpec, t: u64) -> (i64, CoeffSeries) {
    let mut vals = vec![BigInt::zero(); t as usize + 1];
    vals[0] = BigInt::one();
    for &(j, d) in spec.terms() {
        let terms = pentagonal_terms(j, t);
        if d > 0 {
            for _ in 0..d {
                vals = poch_mul(&vals, &terms);
            }
        } else {
            for _ in 0..(-d) {
                poch_div(&mut vals, &terms);
            }
        }
    }
    (spec.exponent24(), CoeffSeries::from_bigints(vals))
}

/// Full Fourier expansion in integer powers of q, i.e. the product part
/// shifted by the prefactor exponent. Errors unless `sum j d_j` is a
/// nonnegative multiple of 24.
pub fn eta_quotient_fourier(spec: &EtaQuotientSpec, t: u64) -> Result<CoeffSeries> {
    let e24 = spec.exponent24();
    if e24 < 0 || e24 % 24 != 0 {
        return Err(Error::NoIntegralExpansion(e24));
    }
    let shift = (e24 / 24) as u64;
    if shift > t {
        // Every coefficient up to t lies below the leading power.
        return Ok(CoeffSeries::zero(t));
    }
    let (_, c) = eta_quotient_series(spec, t - shift);
    Ok(c.shift_up(shift))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(vals: &[i64]) -> CoeffSeries {
        CoeffSeries::from_integers(vals)
    }

    #[test]
    fn add_sub_min_truncation() {
        let a = series(&[1, 2, 3, 4]);
        let b = series(&[1, 1]);
        assert_eq!(a.add(&b), series(&[2, 3]));
        assert_eq!(a.sub(&b), series(&[0, 1]));
    }

    #[test]
    fn mul_examples() {
        let a = series(&[1, 1, 0, 0]);
        let b = series(&[1, -1, 0, 0]);
        assert_eq!(a.mul(&b), series(&[1, 0, -1, 0]));

        let one = CoeffSeries::one(7);
        let arb = series(&[3, -1, 4, 1, -5, 9, 2, 6]);
        assert_eq!(arb.mul(&one), arb);

        // Geometric series telescopes against (1 - q).
        let t = 300;
        let ones = CoeffSeries::from_coeffs(vec![BigRational::one(); t + 1]);
        let mut lin = vec![0i64; t + 1];
        lin[0] = 1;
        lin[1] = -1;
        assert_eq!(ones.mul(&series(&lin)), CoeffSeries::one(t as u64));
    }

    #[test]
    fn mul_parallel_matches_sequential() {
        let coeffs: Vec<BigRational> = (0..400)
            .map(|n: i64| rat((n * 2654435761) % 2001 - 1000, (n % 7) + 1))
            .collect();
        let a = CoeffSeries::from_coeffs(coeffs.clone());
        let b = CoeffSeries::from_coeffs(coeffs.into_iter().rev().collect());
        assert_eq!(a.mul(&b), a.mul_sequential(&b));
    }

    #[test]
    fn inverse_examples() {
        // 1/(1-q) is all ones.
        let mut lin = vec![0i64; 9];
        lin[0] = 1;
        lin[1] = -1;
        let inv = series(&lin).inverse().unwrap();
        assert_eq!(inv, CoeffSeries::from_coeffs(vec![BigRational::one(); 9]));

        // 1/(q;q) gives partition numbers.
        let inv = pochhammer_series(1, 9).inverse().unwrap();
        assert_eq!(inv, series(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30]));

        // Constant series inverts to the reciprocal.
        let c = CoeffSeries::constant(rat(3, 2), 4);
        assert_eq!(c.inverse().unwrap(), CoeffSeries::constant(rat(2, 3), 4));

        assert_eq!(
            CoeffSeries::zero(5).inverse(),
            Err(Error::NonInvertibleSeries)
        );
    }

    #[test]
    fn inverse_roundtrip() {
        let a = series(&[2, 5, -3, 7, 0, 1, -4, 2, 2]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), CoeffSeries::one(8));
    }

    #[test]
    fn pow_examples() {
        let a = series(&[1, 4, 1, 5, 9, 2]);
        assert_eq!(a.pow(0).unwrap(), CoeffSeries::one(5));
        assert_eq!(a.pow(1).unwrap(), a);
        assert_eq!(a.pow(-1).unwrap(), a.inverse().unwrap());
        assert_eq!(a.pow(3).unwrap(), a.mul(&a).mul(&a));
        // (q;q)^3 starts 1 - 3q.
        let cube = pochhammer_series(1, 4).pow(3).unwrap();
        assert_eq!(cube.coeff(1), &rat_int(-3));
    }

    #[test]
    fn pow_negative_needs_unit() {
        let a = series(&[0, 1]);
        assert_eq!(a.pow(-2), Err(Error::NonInvertibleSeries));
    }

    #[test]
    fn pentagonal_expansion_pinned() {
        assert_eq!(
            pochhammer_series(1, 12),
            series(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1])
        );
        assert_eq!(pochhammer_series(2, 2), series(&[1, 0, -1]));
        assert_eq!(pochhammer_series(5, 0), series(&[1]));
    }

    #[test]
    fn pentagonal_matches_finite_product() {
        // prod_{n=1..t} (1 - q^{jn}) agrees with the sparse expansion to q^t.
        for j in [1u64, 2, 3] {
            let t = 240u64;
            let mut prod = CoeffSeries::one(t);
            let mut n = 1u64;
            while j * n <= t {
                let mut f = vec![0i64; t as usize + 1];
                f[0] = 1;
                f[(j * n) as usize] = -1;
                prod = prod.mul(&series(&f));
                n += 1;
            }
            assert_eq!(prod, pochhammer_series(j, t), "j={j}");
        }
    }

    #[test]
    fn eta_spec_parsing() {
        let spec = EtaQuotientSpec::parse("1^-2 2^3 4^2").unwrap();
        assert_eq!(spec.terms(), &[(1, -2), (2, 3), (4, 2)]);
        assert_eq!(spec.exponent24(), -2 + 6 + 8);
        assert_eq!(spec.weight_times_two(), 3);
        assert_eq!(spec.to_string(), "1^-2 2^3 4^2");

        let bare = EtaQuotientSpec::parse("2 3^2").unwrap();
        assert_eq!(bare.terms(), &[(2, 1), (3, 2)]);

        assert!(EtaQuotientSpec::parse("").is_err());
        assert!(EtaQuotientSpec::parse("1^2 1^3").is_err());
        assert!(EtaQuotientSpec::parse("0^2").is_err());
        assert!(EtaQuotientSpec::parse("2^0").is_err());
        assert!(EtaQuotientSpec::parse("x^2").is_err());
        assert!(EtaQuotientSpec::parse("2^two").is_err());
    }

    #[test]
    fn eta_dilation() {
        let spec = EtaQuotientSpec::parse("1^-1 2^2").unwrap();
        let d = spec.dilate(8);
        assert_eq!(d.terms(), &[(8, -1), (16, 2)]);
        assert_eq!(d.exponent24(), 24);
    }

    #[test]
    fn eta_expansion_pinned() {
        // eta(z)^2/eta(2z): signed squares 1 - 2q + 2q^4 - 2q^9.
        let spec = EtaQuotientSpec::parse("1^2 2^-1").unwrap();
        let (e24, c) = eta_quotient_series(&spec, 9);
        assert_eq!(e24, 0);
        assert_eq!(c, series(&[1, -2, 0, 0, 2, 0, 0, 0, 0, -2]));

        let spec = EtaQuotientSpec::parse("1^4 2^-2").unwrap();
        let (e24, c) = eta_quotient_series(&spec, 1);
        assert_eq!(e24, 0);
        assert_eq!(c, series(&[1, -4]));

        // (q^2;q^2)^2/(q;q) is the triangular-number theta.
        let spec = EtaQuotientSpec::parse("1^-1 2^2").unwrap();
        let (e24, c) = eta_quotient_series(&spec, 10);
        assert_eq!(e24, 3);
        assert_eq!(c, series(&[1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]));
    }

    #[test]
    fn eta_expansion_matches_generic_series_ops() {
        // The pentagonal fast path agrees with plain mul/pow on rationals.
        let spec = EtaQuotientSpec::parse("1^3 2^-2 3^3").unwrap();
        let t = 60u64;
        let (_, fast) = eta_quotient_series(&spec, t);
        let slow = pochhammer_series(1, t)
            .pow(3)
            .unwrap()
            .mul(&pochhammer_series(2, t).pow(-2).unwrap())
            .mul(&pochhammer_series(3, t).pow(3).unwrap());
        assert_eq!(fast, slow);
        assert!(fast.is_integral());
    }

    #[test]
    fn eta_fourier_shift() {
        // eta(16z)^2/eta(8z): exponent sum 24, so one full power of q.
        let spec = EtaQuotientSpec::parse("8^-1 16^2").unwrap();
        let f = eta_quotient_fourier(&spec, 30).unwrap();
        // Support on odd squares.
        for n in 0..=30u64 {
            let expect = if n % 2 == 1 && is_square(n) { 1 } else { 0 };
            assert_eq!(f.coeff(n), &rat_int(expect), "n={n}");
        }

        let bad = EtaQuotientSpec::parse("1^2").unwrap();
        assert!(matches!(
            eta_quotient_fourier(&bad, 10),
            Err(Error::NoIntegralExpansion(2))
        ));
        let neg = EtaQuotientSpec::parse("1^-24").unwrap();
        assert!(eta_quotient_fourier(&neg, 10).is_err());
    }

    fn is_square(n: u64) -> bool {
        let r = (n as f64).sqrt().round() as u64;
        r * r == n
    }

    #[test]
    fn shift_up_extends_truncation() {
        let a = series(&[5, 6]);
        let s = a.shift_up(2);
        assert_eq!(s.truncation(), 3);
        assert_eq!(s, series(&[0, 0, 5, 6]));
    }

    #[test]
    fn display_renders_exact_values() {
        let s = CoeffSeries::from_coeffs(vec![rat_int(1), rat(-1, 3)]);
        assert_eq!(s.to_string(), "(1)q^0 + (-1/3)q^1 + O(q^2)");
    }
}
