//! Integer number theory: factorization, the Kronecker symbol, twisted
//! divisor sums, and exhaustive representation counts for small quadratic and
//! triangular forms.
//!
//! Everything here is exact and deliberately elementary; these functions act
//! as ground truth for the series machinery built on top of them.

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Prime factorization `n = prod p_i^{e_i}` with the primes ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// Factors `n >= 1` by trial division.
    pub fn of(n: u64) -> Self {
        assert!(n >= 1, "factorization needs n >= 1");
        let mut pairs = Vec::new();
        let mut m = n;
        let mut push = |p: u64, m: &mut u64| {
            let mut e = 0u32;
            while (*m).is_multiple_of(p) {
                *m /= p;
                e += 1;
            }
            if e > 0 {
                pairs.push((p, e));
            }
        };
        push(2, &mut m);
        push(3, &mut m);
        let mut p = 5u64;
        while p.saturating_mul(p) <= m {
            push(p, &mut m);
            push(p + 2, &mut m);
            p += 6;
        }
        if m > 1 {
            pairs.push((m, 1));
        }
        Factorization { n, pairs }
    }

    pub fn value(&self) -> u64 {
        self.n
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.pairs {
            let prev = divs.clone();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                divs.extend(prev.iter().map(|d| d * pk));
            }
        }
        divs.sort_unstable();
        divs
    }

    pub fn num_divisors(&self) -> u64 {
        self.pairs.iter().map(|&(_, e)| e as u64 + 1).product()
    }

    /// Sum of divisors.
    pub fn sigma(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, e)| {
                let mut s = 1u64;
                let mut pk = 1u64;
                for _ in 0..e {
                    pk *= p;
                    s += pk;
                }
                s
            })
            .product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }

    pub fn mobius(&self) -> i32 {
        if !self.is_squarefree() {
            0
        } else if self.pairs.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn ord_of(&self, p: u64) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }
}

pub fn factorize(n: u64) -> Factorization {
    Factorization::of(n)
}

pub fn mobius(n: u64) -> i32 {
    Factorization::of(n).mobius()
}

pub fn sigma(n: u64) -> u64 {
    Factorization::of(n).sigma()
}

/// Largest power of `p` dividing `n`, as the exponent.
pub fn ord_p(n: u64, p: u64) -> u32 {
    assert!(n >= 1 && p >= 2);
    let mut e = 0;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    e
}

/// `n` with every factor of `p` removed.
pub fn p_free_part(n: u64, p: u64) -> u64 {
    assert!(n >= 1 && p >= 2);
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m
}

pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

pub fn is_perfect_square(n: u64) -> bool {
    let r = isqrt(n);
    r * r == n
}

// (a/2) for the Kronecker symbol, indexed by a mod 8.
const TAB2: [i32; 8] = [0, 1, 0, -1, 0, -1, 0, 1];

/// Kronecker symbol `(a/n)`, the full extension of the Jacobi symbol to all
/// integer pairs: `(a/0) = 1` iff `a = ±1`, `(a/2)` vanishes on even `a` and
/// is `±1` according to `a mod 8`, and `(a/-1)` is the sign of `a`.
pub fn kronecker(a: i64, n: i64) -> i32 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    if a % 2 == 0 && n % 2 == 0 {
        return 0;
    }
    let mut a = a;
    let mut n = n;
    let mut v = 0u32;
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    let mut k = if v.is_multiple_of(2) {
        1
    } else {
        TAB2[(a & 7) as usize]
    };
    if n < 0 {
        n = -n;
        if a < 0 {
            k = -k;
        }
    }
    // n is now odd and positive; standard binary-reciprocity loop.
    loop {
        if a == 0 {
            return if n > 1 { 0 } else { k };
        }
        let mut v = 0u32;
        while a % 2 == 0 {
            a /= 2;
            v += 1;
        }
        if v % 2 == 1 {
            k *= TAB2[(n & 7) as usize];
        }
        // Two's complement makes `a & n & 2` test a = n = 3 (mod 4) even for
        // negative a.
        if a & n & 2 != 0 {
            k = -k;
        }
        let r = a.abs();
        a = n % r;
        n = r;
    }
}

/// Discriminant attached to an odd prime: `p` itself when `p = 1 (mod 4)`,
/// otherwise `-p`. Always `1 (mod 4)`.
pub fn prime_discriminant(p: u64) -> i64 {
    assert!(p >= 3 && p % 2 == 1, "needs an odd prime, got {p}");
    if p % 4 == 1 {
        p as i64
    } else {
        -(p as i64)
    }
}

/// True iff `d` is a fundamental discriminant (`1` counts as the trivial one).
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let r4 = d.rem_euclid(4);
    if r4 == 1 {
        let a = d.unsigned_abs();
        Factorization::of(a).is_squarefree()
    } else if r4 == 0 {
        let m = d / 4;
        let rm = m.rem_euclid(4);
        (rm == 2 || rm == 3) && Factorization::of(m.unsigned_abs()).is_squarefree()
    } else {
        false
    }
}

/// `sum over d | n of (disc/d) d^k`, exact.
pub fn twisted_divisor_sum(n: u64, disc: i64, k: u32) -> BigInt {
    let mut total = BigInt::from(0);
    for d in Factorization::of(n).divisors() {
        let chi = kronecker(disc, d as i64);
        if chi != 0 {
            total += chi * BigInt::from(d).pow(k);
        }
    }
    total
}

/// Sign of `sum over d | n of (d/p) d^k`, the divisor sum twisted by the
/// Legendre symbol mod an odd prime. By quadratic reciprocity that character
/// is `kronecker(prime_discriminant(p), .)`, so this reuses
/// [`twisted_divisor_sum`]. The result always equals `(m/p)` for `m` the
/// p-free part of `n`.
pub fn sign_of_twisted_sum(n: u64, p: u64, k: u32) -> i32 {
    use num_traits::Zero;
    let s = twisted_divisor_sum(n, prime_discriminant(p), k);
    if s.is_zero() {
        0
    } else if s > BigInt::from(0) {
        1
    } else {
        -1
    }
}

/// Number of integer vectors `x` with `sum a_j x_j^2 = n`, by exhaustive
/// enumeration with branch pruning. It is an oracle; clarity beats speed.
pub fn rep_count_quadratic(coeffs: &[u64], n: u64) -> u64 {
    assert!(!coeffs.is_empty() && coeffs.iter().all(|&a| a >= 1));
    fn rec(coeffs: &[u64], rem: u64) -> u64 {
        let a = coeffs[0];
        if coeffs.len() == 1 {
            if rem == 0 {
                return 1;
            }
            if !rem.is_multiple_of(a) {
                return 0;
            }
            return if is_perfect_square(rem / a) { 2 } else { 0 };
        }
        let rest = &coeffs[1..];
        let mut total = rec(rest, rem);
        let mut x = 1u64;
        while a * x * x <= rem {
            total += 2 * rec(rest, rem - a * x * x);
            x += 1;
        }
        total
    }
    rec(coeffs, n)
}

/// Number of triples `(x, y, z)` of nonnegative integers with
/// `T(x) + T(y) + 2 T(z) = n`, where `T(m) = m(m+1)/2`.
pub fn triangular_rep_count(n: u64) -> u64 {
    let tri = |m: u64| m * (m + 1) / 2;
    let is_tri = |t: u64| {
        let s = 8 * t + 1;
        is_perfect_square(s)
    };
    let mut count = 0;
    let mut x = 0;
    while tri(x) <= n {
        let rem_x = n - tri(x);
        let mut y = 0;
        while tri(y) <= rem_x {
            let rem = rem_x - tri(y);
            if rem.is_multiple_of(2) && is_tri(rem / 2) {
                count += 1;
            }
            y += 1;
        }
        x += 1;
    }
    count
}

/// Checks `p` for primality by trial division (used to validate CLI input).
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    Factorization::of(p).pairs() == [(p, 1)]
}

/// Rejects non-discriminants early so downstream character code can assume
/// `d = 0 or 1 (mod 4)`.
pub fn check_discriminant(d: i64) -> Result<i64> {
    if d != 0 && matches!(d.rem_euclid(4), 0 | 1) {
        Ok(d)
    } else {
        Err(Error::InvalidDiscriminant(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_basics() {
        assert_eq!(Factorization::of(1).pairs(), &[]);
        assert_eq!(Factorization::of(12).pairs(), &[(2, 2), (3, 1)]);
        assert_eq!(Factorization::of(9991).pairs(), &[(97, 1), (103, 1)]);
        assert_eq!(Factorization::of(97).pairs(), &[(97, 1)]);
    }

    #[test]
    fn divisors_and_sigma() {
        let f = Factorization::of(12);
        assert_eq!(f.divisors(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(f.sigma(), 28);
        assert_eq!(f.num_divisors(), 6);
        assert_eq!(sigma(6), 12);
        assert_eq!(Factorization::of(1).divisors(), vec![1]);
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn kronecker_pinned_values() {
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(12, 1), 1);
        assert_eq!(kronecker(12, 5), -1);
        assert_eq!(kronecker(-3, 2), -1);
        // (a/0) is 1 exactly at a = ±1.
        assert_eq!(kronecker(1, 0), 1);
        assert_eq!(kronecker(-1, 0), 1);
        assert_eq!(kronecker(5, 0), 0);
        // (a/2) by residue mod 8.
        assert_eq!(kronecker(7, 2), 1);
        assert_eq!(kronecker(3, 2), -1);
        assert_eq!(kronecker(6, 2), 0);
        // sign handling at negative second argument
        assert_eq!(kronecker(-1, -1), -1);
        assert_eq!(kronecker(1, -1), 1);
    }

    #[test]
    fn kronecker_agrees_with_euler_criterion_mod_odd_primes() {
        // For odd prime p and p not dividing a, (a/p) = a^((p-1)/2) mod p.
        for &p in &[3u64, 5, 7, 11, 13, 17, 19, 23] {
            for a in -30i64..=30 {
                let expect = if a.rem_euclid(p as i64) == 0 {
                    0
                } else {
                    let mut acc = 1i64;
                    let base = a.rem_euclid(p as i64);
                    for _ in 0..(p - 1) / 2 {
                        acc = acc * base % p as i64;
                    }
                    if acc == 1 {
                        1
                    } else {
                        -1
                    }
                };
                assert_eq!(kronecker(a, p as i64), expect, "({a}/{p})");
            }
        }
    }

    #[test]
    fn kronecker_multiplicative_and_periodic() {
        for d in [-24i64, -8, -4, -3, 5, 8, 12] {
            assert!(is_fundamental_discriminant(d));
            for n in 1i64..=60 {
                for m in 1i64..=60 {
                    assert_eq!(
                        kronecker(d, n * m),
                        kronecker(d, n) * kronecker(d, m),
                        "chi_{d} multiplicative at {n},{m}"
                    );
                }
                assert_eq!(
                    kronecker(d, n + d.abs()),
                    kronecker(d, n),
                    "chi_{d} periodic at {n}"
                );
            }
        }
    }

    #[test]
    fn fundamental_discriminants() {
        for d in [1i64, -3, -4, 5, 8, -8, 12, -24, -7, 13] {
            assert!(is_fundamental_discriminant(d), "{d}");
        }
        for d in [0i64, 4, 9, -12, 25, -9, 3, -5] {
            assert!(!is_fundamental_discriminant(d), "{d}");
        }
    }

    #[test]
    fn twisted_divisor_sums() {
        // Trivial twist (disc 1) gives sigma_k.
        assert_eq!(twisted_divisor_sum(6, 1, 1), BigInt::from(12));
        assert_eq!(twisted_divisor_sum(1, -4, 7), BigInt::from(1));
        assert_eq!(twisted_divisor_sum(5, 12, 1), BigInt::from(-4));
    }

    #[test]
    fn twisted_divisor_sum_is_multiplicative() {
        for d in [-4i64, -3, 12, 5] {
            for k in 0u32..=2 {
                for m in 1u64..=40 {
                    for n in 1u64..=40 {
                        if num_integer::gcd(m, n) == 1 {
                            assert_eq!(
                                twisted_divisor_sum(m * n, d, k),
                                twisted_divisor_sum(m, d, k) * twisted_divisor_sum(n, d, k)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn twisted_sum_signs() {
        assert_eq!(sign_of_twisted_sum(5, 3, 2), -1);
        assert_eq!(sign_of_twisted_sum(9, 3, 2), 1);
        assert_eq!(sign_of_twisted_sum(4, 3, 2), 1);
    }

    #[test]
    fn twisted_sum_sign_is_legendre_of_p_free_part() {
        for &p in &[3u64, 5, 7, 11, 13] {
            for k in 1u32..=3 {
                for n in 1u64..=2000 {
                    let m = p_free_part(n, p);
                    assert_eq!(
                        sign_of_twisted_sum(n, p, k),
                        kronecker(m as i64, p as i64),
                        "n={n} p={p} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn rep_counts() {
        assert_eq!(rep_count_quadratic(&[1, 1, 2, 2, 2], 0), 1);
        assert_eq!(rep_count_quadratic(&[1, 1, 2, 2, 2], 1), 4);
        assert_eq!(rep_count_quadratic(&[1, 1, 2, 2], 1), 4);
        assert_eq!(rep_count_quadratic(&[1], 4), 2);
        assert_eq!(rep_count_quadratic(&[1, 1], 5), 8);
    }

    #[test]
    fn triangular_counts() {
        assert_eq!(triangular_rep_count(0), 1);
        assert_eq!(triangular_rep_count(1), 2);
        assert_eq!(triangular_rep_count(2), 2);
    }

    #[test]
    fn prime_discriminants() {
        assert_eq!(prime_discriminant(5), 5);
        assert_eq!(prime_discriminant(3), -3);
        assert_eq!(prime_discriminant(7), -7);
        assert_eq!(prime_discriminant(13), 13);
    }

    #[test]
    fn ord_and_free_part() {
        assert_eq!(ord_p(54, 3), 3);
        assert_eq!(p_free_part(54, 3), 2);
        assert_eq!(ord_p(7, 3), 0);
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(15), 3);
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt(u64::MAX), 4294967295);
    }
}
