//! Symbolic descriptions of coefficient sequences: series leaves combined
//! linearly and pushed through the index-space operators. Evaluating a
//! pipeline back-propagates the requested truncation through each operator,
//! so a `U_l` node transparently asks its child for `l` times as many terms
//! and the result is reliable through the full requested range.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::chars::CharacterSpec;
use crate::eisenstein::{e2_coeffs, eisenstein_coeffs, normalized_eisenstein, EisensteinSpec};
use crate::error::{Error, Result};
use crate::hurwitz::{check_sieve_pair, HurwitzTable};
use crate::operators::{hecke_tp, op_sieve, op_twist, op_u};
use crate::series::{eta_quotient_fourier, eta_quotient_series, CoeffSeries, EtaQuotientSpec};

/// A coefficient sequence described symbolically.
#[derive(Clone, Debug)]
pub enum Pipeline {
    /// Product-part coefficients of an eta quotient (no q-power prefactor).
    EtaProduct(EtaQuotientSpec),
    /// Fourier coefficients of an eta quotient with its integral q-shift.
    EtaFourier(EtaQuotientSpec),
    Eisenstein(EisensteinSpec),
    /// Eisenstein series normalized to constant term 1 by its L-value.
    EisensteinNormalized { k: u32, p: u64 },
    /// Quasi-modular weight-2 series.
    E2,
    /// Hurwitz class number series H(0) + H(3)q^3 + H(4)q^4 + ...
    Hurwitz,
    Const(BigRational),
    Scale(BigRational, Box<Pipeline>),
    Sum(Vec<Pipeline>),
    U(u64, Box<Pipeline>),
    V(u64, Box<Pipeline>),
    Sieve {
        modulus: u64,
        residue: u64,
        inner: Box<Pipeline>,
    },
    Twist(CharacterSpec, Box<Pipeline>),
    Hecke {
        p: u64,
        weight: u32,
        chi: CharacterSpec,
        inner: Box<Pipeline>,
    },
}

impl Pipeline {
    pub fn eta_c(spec: EtaQuotientSpec) -> Self {
        Pipeline::EtaProduct(spec)
    }

    pub fn eta_fourier(spec: EtaQuotientSpec) -> Self {
        Pipeline::EtaFourier(spec)
    }

    pub fn eisenstein(k: u32, chi: CharacterSpec, psi: CharacterSpec) -> Result<Self> {
        Ok(Pipeline::Eisenstein(EisensteinSpec::new(k, chi, psi)?))
    }

    pub fn constant(c: BigRational) -> Self {
        Pipeline::Const(c)
    }

    pub fn scaled(self, c: BigRational) -> Self {
        Pipeline::Scale(c, Box::new(self))
    }

    pub fn negated(self) -> Self {
        self.scaled(BigRational::from_integer(BigInt::from(-1)))
    }

    pub fn sum(parts: Vec<Pipeline>) -> Self {
        assert!(!parts.is_empty());
        Pipeline::Sum(parts)
    }

    pub fn u(self, l: u64) -> Self {
        Pipeline::U(l, Box::new(self))
    }

    pub fn v(self, l: u64) -> Self {
        Pipeline::V(l, Box::new(self))
    }

    pub fn sieve(self, modulus: u64, residue: u64) -> Self {
        Pipeline::Sieve {
            modulus,
            residue,
            inner: Box::new(self),
        }
    }

    pub fn twist(self, chi: CharacterSpec) -> Self {
        Pipeline::Twist(chi, Box::new(self))
    }

    pub fn hecke(self, p: u64, weight: u32, chi: CharacterSpec) -> Self {
        Pipeline::Hecke {
            p,
            weight,
            chi,
            inner: Box::new(self),
        }
    }

    /// The sieved class number combination `H | (U_{l1 l2} - l2 U_{l1} V_{l2})`
    /// assembled from operator nodes, so evaluating it exercises the same
    /// machinery as any other pipeline.
    pub fn hurwitz_sieved(l1: u64, l2: u64) -> Result<Self> {
        check_sieve_pair(l1, l2)?;
        let first = Pipeline::Hurwitz.u(l1 * l2);
        let second = Pipeline::Hurwitz
            .u(l1)
            .v(l2)
            .scaled(BigRational::from_integer(BigInt::from(-(l2 as i64))));
        Ok(Pipeline::sum(vec![first, second]))
    }

    /// Evaluates the pipeline to truncation `t`.
    pub fn eval(&self, t: u64) -> Result<CoeffSeries> {
        match self {
            Pipeline::EtaProduct(spec) => Ok(eta_quotient_series(spec, t).1),
            Pipeline::EtaFourier(spec) => eta_quotient_fourier(spec, t),
            Pipeline::Eisenstein(spec) => eisenstein_coeffs(spec, t),
            Pipeline::EisensteinNormalized { k, p } => normalized_eisenstein(*k, *p, t),
            Pipeline::E2 => Ok(e2_coeffs(t)),
            Pipeline::Hurwitz => Ok(HurwitzTable::up_to(t).series(t)),
            Pipeline::Const(c) => Ok(CoeffSeries::constant(c.clone(), t)),
            Pipeline::Scale(c, inner) => Ok(inner.eval(t)?.scale(c)),
            Pipeline::Sum(parts) => {
                let mut acc = parts[0].eval(t)?;
                for part in &parts[1..] {
                    acc = acc.add(&part.eval(t)?);
                }
                Ok(acc)
            }
            Pipeline::U(l, inner) => {
                assert!(*l >= 1);
                let need = t
                    .checked_mul(*l)
                    .ok_or(Error::TruncationUnreachable(t))?;
                Ok(op_u(&inner.eval(need)?, *l))
            }
            Pipeline::V(l, inner) => {
                assert!(*l >= 1);
                // The image vanishes off multiples of l, so extending to t
                // with zeros stays exact.
                let s = inner.eval(t / *l)?;
                let mut coeffs = vec![BigRational::zero(); t as usize + 1];
                for (n, c) in s.coeffs().iter().enumerate() {
                    coeffs[n * *l as usize] = c.clone();
                }
                Ok(CoeffSeries::from_coeffs(coeffs))
            }
            Pipeline::Sieve {
                modulus,
                residue,
                inner,
            } => Ok(op_sieve(&inner.eval(t)?, *modulus, *residue)),
            Pipeline::Twist(chi, inner) => Ok(op_twist(&inner.eval(t)?, chi)),
            Pipeline::Hecke {
                p,
                weight,
                chi,
                inner,
            } => {
                let need = t
                    .checked_mul(*p)
                    .ok_or(Error::TruncationUnreachable(t))?;
                Ok(hecke_tp(&inner.eval(need)?, *p, *weight, chi))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::hurwitz_sieved;
    use crate::series::{rat, rat_int};

    #[test]
    fn truncation_back_propagation() {
        let spec = EtaQuotientSpec::parse("1^1").unwrap();
        let direct = eta_quotient_series(&spec, 30).1;
        let round_trip = Pipeline::eta_c(spec).v(3).u(3).eval(30).unwrap();
        assert_eq!(round_trip, direct);
    }

    #[test]
    fn v_node_fills_tail_zeros() {
        let s = Pipeline::eta_c(EtaQuotientSpec::parse("1^1").unwrap())
            .v(4)
            .eval(10)
            .unwrap();
        assert_eq!(s.truncation(), 10);
        assert_eq!(s.coeff(4), &rat_int(-1));
        assert_eq!(s.coeff(9), &rat_int(0));
        assert_eq!(s.coeff(10), &rat_int(0));
    }

    #[test]
    fn sieved_class_number_routes_agree() {
        for (l1, l2) in [(1u64, 3u64), (4, 3), (1, 1)] {
            let via_ops = Pipeline::hurwitz_sieved(l1, l2).unwrap().eval(60).unwrap();
            let direct = hurwitz_sieved(l1, l2, 60).unwrap();
            assert_eq!(via_ops, direct, "l1={l1} l2={l2}");
        }
        assert!(Pipeline::hurwitz_sieved(2, 4).is_err());
    }

    #[test]
    fn sieved_class_number_pinned() {
        let h13 = Pipeline::hurwitz_sieved(1, 3).unwrap().eval(3).unwrap();
        assert_eq!(h13.coeff(1), &rat(1, 3));
        assert_eq!(h13.coeff(3), &rat_int(0));
        let h43 = Pipeline::hurwitz_sieved(4, 3).unwrap().eval(1).unwrap();
        assert_eq!(h43.coeff(0), &rat(1, 6));
    }

    #[test]
    fn normalized_node_matches_scaled_plain_node() {
        let scaled = Pipeline::eisenstein(
            2,
            CharacterSpec::trivial(),
            CharacterSpec::kronecker(5).unwrap(),
        )
        .unwrap()
        .scaled(rat(-5, 2));
        let normalized = Pipeline::EisensteinNormalized { k: 2, p: 5 };
        assert_eq!(scaled.eval(25).unwrap(), normalized.eval(25).unwrap());
    }

    #[test]
    fn sum_scale_const() {
        let one = Pipeline::constant(rat_int(1));
        let combo = Pipeline::sum(vec![
            one.clone().scaled(rat(1, 2)),
            one.scaled(rat(1, 3)).negated(),
        ]);
        let s = combo.eval(4).unwrap();
        assert_eq!(s.truncation(), 4);
        assert_eq!(s.coeff(0), &rat(1, 6));
        assert_eq!(s.coeff(4), &rat_int(0));
    }
}
