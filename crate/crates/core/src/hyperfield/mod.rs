//! Exact arithmetic in the tropical phase hyperfield `TΦ = {0} ∪ S¹`.
//!
//! Multiplication is the product of unit complex numbers (addition of
//! angles). Addition is multivalued: `x ⊞ 0 = {x}`, `x ⊞ -x = {0} ∪ S¹`, and
//! otherwise `x ⊞ y` is the shorter closed arc from `x` to `y`. Sums of sets
//! are unions of pairwise sums, so every value that arises is an [`ArcSet`].
//!
//! Angles are rational numbers of turns, which keeps every predicate exact.

mod angle;
mod arcset;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

pub use angle::PhaseAngle;
pub use arcset::{Arc, ArcSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperfieldError {
    #[error("sum of an empty multiset")]
    EmptySum,
    #[error("angle denominator must be positive")]
    BadDenominator,
    #[error("cannot parse hyperfield value `{0}`")]
    Parse(String),
}

/// An element of `TΦ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TPhiValue {
    Zero,
    Unit(PhaseAngle),
}

impl TPhiValue {
    pub fn one() -> TPhiValue {
        TPhiValue::Unit(PhaseAngle::zero())
    }

    pub fn minus_one() -> TPhiValue {
        TPhiValue::Unit(PhaseAngle::half_turn())
    }

    /// `exp(2πi·j/k)`.
    pub fn root(j: u64, k: u64) -> TPhiValue {
        TPhiValue::Unit(PhaseAngle::root_of_unity(j, k))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, TPhiValue::Zero)
    }

    pub fn angle(&self) -> Option<&PhaseAngle> {
        match self {
            TPhiValue::Zero => None,
            TPhiValue::Unit(a) => Some(a),
        }
    }

    pub fn neg(&self) -> TPhiValue {
        match self {
            TPhiValue::Zero => TPhiValue::Zero,
            TPhiValue::Unit(a) => TPhiValue::Unit(a.antipode()),
        }
    }

    pub fn mul(&self, other: &TPhiValue) -> TPhiValue {
        match (self, other) {
            (TPhiValue::Unit(a), TPhiValue::Unit(b)) => TPhiValue::Unit(a.add(b)),
            _ => TPhiValue::Zero,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<TPhiValue> {
        self.angle().map(|a| TPhiValue::Unit(a.inverse()))
    }

    /// True when the value lies in `TΦ_k`, i.e. it is zero or a `k`-th root of unity.
    pub fn in_discretization(&self, k: u64) -> bool {
        match self {
            TPhiValue::Zero => true,
            TPhiValue::Unit(a) => a.is_root_of_unity(k),
        }
    }

    /// All of `TΦ_k` in increasing order: zero, then `j/k` for `j = 0..k`.
    pub fn discretization(k: u64) -> Vec<TPhiValue> {
        std::iter::once(TPhiValue::Zero).chain((0..k).map(|j| TPhiValue::root(j, k))).collect()
    }
}

impl std::ops::Neg for &TPhiValue {
    type Output = TPhiValue;

    fn neg(self) -> TPhiValue {
        TPhiValue::neg(self)
    }
}

impl std::ops::Mul for &TPhiValue {
    type Output = TPhiValue;

    fn mul(self, rhs: &TPhiValue) -> TPhiValue {
        TPhiValue::mul(self, rhs)
    }
}

impl fmt::Display for TPhiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TPhiValue::Zero => write!(f, "0"),
            TPhiValue::Unit(a) => write!(f, "{a}"),
        }
    }
}

impl fmt::Debug for TPhiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for TPhiValue {
    type Err = HyperfieldError;

    /// `0` is zero; `p/q` is the unit at `p/q` turns. `1` and `-1` are
    /// accepted as shorthands for `0/1` and `1/2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "0" => Ok(TPhiValue::Zero),
            "1" => Ok(TPhiValue::one()),
            "-1" => Ok(TPhiValue::minus_one()),
            t => Ok(TPhiValue::Unit(t.parse()?)),
        }
    }
}

pub fn neg(v: &TPhiValue) -> TPhiValue {
    v.neg()
}

pub fn mul(a: &TPhiValue, b: &TPhiValue) -> TPhiValue {
    a.mul(b)
}

/// `a ⊞ b`.
pub fn boxplus_pair(a: &TPhiValue, b: &TPhiValue) -> ArcSet {
    ArcSet::singleton(a).add_value(b)
}

/// The set-valued sum of all terms, folded left in the given order.
pub fn boxplus_fold<'a, I>(terms: I) -> Result<ArcSet, HyperfieldError>
where
    I: IntoIterator<Item = &'a TPhiValue>,
{
    let mut iter = terms.into_iter();
    let first = iter.next().ok_or(HyperfieldError::EmptySum)?;
    Ok(iter.fold(ArcSet::singleton(first), |acc, t| acc.add_value(t)))
}

/// Decides `0 ∈ t_1 ⊞ … ⊞ t_m` without building the sum.
///
/// After discarding zeros and repeated values, zero is in the sum iff two
/// terms are antipodal or no open semicircle contains all of them, i.e. the
/// largest gap between circularly consecutive angles is under half a turn.
pub fn contains_zero<'a, I>(terms: I) -> Result<bool, HyperfieldError>
where
    I: IntoIterator<Item = &'a TPhiValue>,
{
    let mut seen_any = false;
    let mut angles: Vec<&PhaseAngle> = Vec::new();
    for t in terms {
        seen_any = true;
        if let TPhiValue::Unit(a) = t {
            angles.push(a);
        }
    }
    if !seen_any {
        return Err(HyperfieldError::EmptySum);
    }
    if angles.is_empty() {
        return Ok(true);
    }
    angles.sort();
    angles.dedup();
    if angles.len() == 1 {
        return Ok(false);
    }
    let half = PhaseAngle::half_turn();
    for a in &angles {
        if angles.binary_search(&&a.add(&half)).is_ok() {
            return Ok(true);
        }
    }
    let mut max_gap = BigRational::zero();
    for (i, a) in angles.iter().enumerate() {
        let next = angles[(i + 1) % angles.len()];
        let gap = a.ccw_to(next);
        if gap > max_gap {
            max_gap = gap;
        }
    }
    Ok(max_gap < *half.turns())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(p: i64, q: i64) -> TPhiValue {
        TPhiValue::Unit(PhaseAngle::new(p, q).unwrap())
    }

    fn arc(p: i64, q: i64, lp: i64, lq: i64) -> ArcSet {
        ArcSet::from_parts(
            false,
            false,
            vec![Arc { start: PhaseAngle::new(p, q).unwrap(), length: BigRational::new(lp.into(), lq.into()) }],
        )
    }

    #[test]
    fn neg_examples() {
        assert_eq!(neg(&u(0, 1)), u(1, 2));
        assert_eq!(neg(&TPhiValue::Zero), TPhiValue::Zero);
        assert_eq!(neg(&u(1, 4)), u(3, 4));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(mul(&u(1, 3), &u(1, 2)), u(5, 6));
        assert_eq!(mul(&TPhiValue::Zero, &u(1, 7)), TPhiValue::Zero);
        assert_eq!(mul(&u(2, 3), &u(2, 3)), u(1, 3));
    }

    #[test]
    fn boxplus_pair_examples() {
        assert_eq!(boxplus_pair(&u(1, 4), &TPhiValue::Zero), ArcSet::singleton(&u(1, 4)));
        let s = boxplus_pair(&u(0, 1), &u(1, 2));
        assert!(s.contains_zero() && s.is_full_circle());
        assert_eq!(boxplus_pair(&u(0, 1), &u(1, 4)), arc(0, 1, 1, 4));
        assert_eq!(boxplus_pair(&u(1, 3), &u(1, 3)), ArcSet::singleton(&u(1, 3)));
        // the shorter arc goes through 0 here
        assert_eq!(boxplus_pair(&u(7, 8), &u(1, 8)), arc(7, 8, 1, 4));
        assert_eq!(boxplus_pair(&TPhiValue::Zero, &TPhiValue::Zero), ArcSet::zero());
    }

    #[test]
    fn boxplus_fold_examples() {
        assert_eq!(boxplus_fold(&[u(0, 1)]).unwrap(), ArcSet::singleton(&u(0, 1)));
        assert_eq!(boxplus_fold(&[u(0, 1), u(1, 4)]).unwrap(), arc(0, 1, 1, 4));
        assert_eq!(boxplus_fold(&[u(0, 1), u(1, 2), u(1, 4)]).unwrap(), ArcSet::everything());
        assert_eq!(boxplus_fold(&[]), Err(HyperfieldError::EmptySum));
    }

    #[test]
    fn contains_zero_examples() {
        assert!(contains_zero(&[u(0, 1), u(1, 2), u(1, 4)]).unwrap());
        assert!(!contains_zero(&[u(0, 1), u(1, 4)]).unwrap());
        assert!(contains_zero(&[u(0, 1), u(1, 3), u(2, 3)]).unwrap());
        assert!(!contains_zero(&[u(0, 1)]).unwrap());
        assert!(contains_zero(&[TPhiValue::Zero, TPhiValue::Zero]).unwrap());
        assert!(!contains_zero(&[TPhiValue::Zero, u(1, 5)]).unwrap());
        assert!(!contains_zero(&[u(1, 5), u(1, 5)]).unwrap());
        assert_eq!(contains_zero(&[]), Err(HyperfieldError::EmptySum));
    }

    #[test]
    fn parse_values() {
        assert_eq!("0".parse::<TPhiValue>().unwrap(), TPhiValue::Zero);
        assert_eq!("0/1".parse::<TPhiValue>().unwrap(), TPhiValue::one());
        assert_eq!("-1".parse::<TPhiValue>().unwrap(), u(1, 2));
        assert_eq!(u(3, 6).to_string(), "1/2");
        assert!("x".parse::<TPhiValue>().is_err());
    }

    #[test]
    fn discretization_listing() {
        let d = TPhiValue::discretization(4);
        assert_eq!(d.len(), 5);
        assert!(d.windows(2).all(|w| w[0] < w[1]));
        assert!(d.iter().all(|v| v.in_discretization(4)));
        assert!(!u(1, 3).in_discretization(4));
    }
}
