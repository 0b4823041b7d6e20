use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::HyperfieldError;

/// A point of the unit circle, stored exactly as a rational number of turns
/// in `[0, 1)`. The angle `p/q` denotes `exp(2πi·p/q)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhaseAngle(BigRational);

/// Reduces a rational modulo one into `[0, 1)`.
pub(crate) fn frac(r: &BigRational) -> BigRational {
    r - r.floor()
}

pub(crate) fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

impl PhaseAngle {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self, HyperfieldError> {
        let den = denominator.into();
        if !den.is_positive() {
            return Err(HyperfieldError::BadDenominator);
        }
        Ok(Self::from_turns(&BigRational::new(numerator.into(), den)))
    }

    /// Any rational number of turns, reduced modulo one.
    pub fn from_turns(turns: &BigRational) -> Self {
        PhaseAngle(frac(turns))
    }

    pub fn zero() -> Self {
        PhaseAngle(BigRational::zero())
    }

    pub fn half_turn() -> Self {
        PhaseAngle(half())
    }

    /// The `j`-th of the `k`-th roots of unity, `j/k` turns.
    pub fn root_of_unity(j: u64, k: u64) -> Self {
        assert!(k > 0, "root_of_unity needs k > 0");
        Self::from_turns(&BigRational::new(BigInt::from(j), BigInt::from(k)))
    }

    pub fn turns(&self) -> &BigRational {
        &self.0
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &PhaseAngle) -> PhaseAngle {
        Self::from_turns(&(&self.0 + &other.0))
    }

    pub fn sub(&self, other: &PhaseAngle) -> PhaseAngle {
        Self::from_turns(&(&self.0 - &other.0))
    }

    pub fn antipode(&self) -> PhaseAngle {
        Self::from_turns(&(&self.0 + half()))
    }

    /// Multiplicative inverse of the corresponding unit complex number.
    pub fn inverse(&self) -> PhaseAngle {
        Self::from_turns(&(-&self.0))
    }

    /// True when the angle is a `k`-th root of unity.
    pub fn is_root_of_unity(&self, k: u64) -> bool {
        k > 0 && (BigInt::from(k) % self.denominator()).is_zero()
    }

    /// Counter-clockwise distance from `self` to `other`, in `[0, 1)`.
    pub fn ccw_to(&self, other: &PhaseAngle) -> BigRational {
        frac(&(&other.0 - &self.0))
    }
}

impl fmt::Display for PhaseAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for PhaseAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PhaseAngle {
    type Err = HyperfieldError;

    /// Parses `p/q`; `p` may be any integer, the result is reduced modulo one.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HyperfieldError::Parse(s.to_string());
        let (p, q) = s.trim().split_once('/').ok_or_else(bad)?;
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        PhaseAngle::new(p, q)
    }
}
