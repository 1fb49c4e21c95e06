//! Real Dirichlet characters given by Kronecker symbols, Bernoulli numbers
//! and polynomials, and exact values `L(1-k, chi)`.
//!
//! The L-value of a character attached to a discriminant D is computed by the
//! finite formula
//!
//! ```text
//! L(1-k, chi_D) = -(|D|^(k-1) / k) * sum_{r=1..|D|} chi_D(r) B_k(r/|D|)
//! ```
//!
//! entirely in rational arithmetic. D = 1 gives the Riemann zeta values
//! `zeta(1-k)`.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{check_discriminant, kronecker, prime_discriminant};
use crate::error::{Error, Result};
use crate::series::rat_int;

/// A real character: either the trivial character (modulus 1) or
/// `n -> kronecker(d, n)` for a discriminant `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharacterSpec {
    Trivial,
    Kronecker(i64),
}

impl CharacterSpec {
    pub fn trivial() -> Self {
        CharacterSpec::Trivial
    }

    /// Character attached to a discriminant (`d = 0 or 1 mod 4`, nonzero).
    /// `d = 1` normalizes to the trivial character.
    pub fn kronecker(d: i64) -> Result<Self> {
        if d == 1 {
            return Ok(CharacterSpec::Trivial);
        }
        check_discriminant(d)?;
        Ok(CharacterSpec::Kronecker(d))
    }

    pub fn eval(&self, n: i64) -> i32 {
        match self {
            CharacterSpec::Trivial => 1,
            CharacterSpec::Kronecker(d) => kronecker(*d, n),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, CharacterSpec::Trivial)
    }

    /// Discriminant defining the character; 1 for the trivial one.
    pub fn discriminant(&self) -> i64 {
        match self {
            CharacterSpec::Trivial => 1,
            CharacterSpec::Kronecker(d) => *d,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.discriminant().unsigned_abs()
    }

    /// `chi(-1)`: 1 for even characters, -1 for odd ones.
    pub fn parity(&self) -> i32 {
        if self.discriminant() < 0 {
            -1
        } else {
            1
        }
    }
}

impl std::fmt::Display for CharacterSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CharacterSpec::Trivial => write!(f, "chi_1"),
            CharacterSpec::Kronecker(d) => write!(f, "chi_{d}"),
        }
    }
}

static BERNOULLI_MEMO: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();

/// `B_k` with `B_1 = -1/2`, memoized behind a mutex so concurrent callers
/// see one deterministic table.
pub fn bernoulli_number(k: u32) -> BigRational {
    let memo = BERNOULLI_MEMO.get_or_init(|| Mutex::new(vec![BigRational::one()]));
    let mut table = memo.lock().unwrap();
    while table.len() <= k as usize {
        // sum_{j=0..m} C(m+1, j) B_j = 0 solved for B_m.
        let m = table.len();
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (j, bj) in table.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bj;
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        let bm = -acc / BigRational::from_integer(BigInt::from(m + 1));
        table.push(bm);
    }
    table[k as usize].clone()
}

/// Bernoulli polynomial `B_k(x) = sum_j C(k, j) B_j x^(k-j)`, by Horner.
pub fn bernoulli_poly_eval(k: u32, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut binom = BigInt::one();
    for j in 0..=k {
        acc = acc * x + BigRational::from_integer(binom.clone()) * bernoulli_number(j);
        if j < k {
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
    }
    acc
}

/// Exact `L(1-k, chi_d)` for `k >= 1` and `d` a discriminant or 1.
pub fn l_value(k: u32, d: i64) -> Result<BigRational> {
    assert!(k >= 1);
    if d != 1 {
        check_discriminant(d)?;
    }
    let a = d.unsigned_abs();
    let mut char_sum = BigRational::zero();
    for r in 1..=a {
        let chi = kronecker(d, r as i64);
        if chi != 0 {
            let x = BigRational::new(BigInt::from(r), BigInt::from(a));
            char_sum += rat_int(chi as i64) * bernoulli_poly_eval(k, &x);
        }
    }
    let scale = BigRational::new(BigInt::from(a).pow(k - 1), BigInt::from(k));
    Ok(-scale * char_sum)
}

/// The normalizing constant `1 / L(1-k, chi)` for the character attached to
/// the odd prime `p` via `prime_discriminant`. Errors when the L-value
/// vanishes, which happens exactly when `k` and `(p-1)/2` have different
/// parities.
pub fn l_norm_const(k: u32, p: u64) -> Result<BigRational> {
    let d = prime_discriminant(p);
    let lv = l_value(k, d)?;
    if lv.is_zero() {
        return Err(Error::ZeroLValue { k, d });
    }
    Ok(lv.recip())
}

/// Sign predicted for `1 / L(1-k, chi_{prime_discriminant(p)})` by the
/// closed form `(-1)^(floor(k/2) + floor((p-1)/4)) * (-2/p)`. The floors make
/// the exponent well defined for every `k` of the right parity; this reading
/// reproduces the specializations `(-2/p)` at `k = (p-1)/2` and `(2/p)` at
/// `k = p(p-1)/2` for all odd `p`.
pub fn l_sign_predicted(k: u32, p: u64) -> i32 {
    let e = (k / 2 + (p as u32 - 1) / 4) % 2;
    let base = kronecker(-2, p as i64);
    if e == 0 {
        base
    } else {
        -base
    }
}

/// Compares the exact sign of `1 / L(1-k, chi)` with [`l_sign_predicted`].
pub fn l_sign_check(k: u32, p: u64) -> Result<bool> {
    let exact = l_norm_const(k, p)?;
    let sign = if exact.is_positive() { 1 } else { -1 };
    Ok(sign == l_sign_predicted(k, p))
}
