use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::angle::{frac, half};
use super::{PhaseAngle, TPhiValue};

/// A closed arc of the circle: all angles `start + t` for `t` in `[0, length]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Arc {
    pub start: PhaseAngle,
    pub length: BigRational,
}

impl Arc {
    pub fn point(a: PhaseAngle) -> Arc {
        Arc { start: a, length: BigRational::zero() }
    }

    pub fn end(&self) -> PhaseAngle {
        PhaseAngle::from_turns(&(self.start.turns() + &self.length))
    }

    pub fn contains(&self, a: &PhaseAngle) -> bool {
        self.start.ccw_to(a) <= self.length
    }

    pub fn rotate(&self, by: &PhaseAngle) -> Arc {
        Arc { start: self.start.add(by), length: self.length.clone() }
    }

    fn intersects(&self, other: &Arc) -> bool {
        self.contains(&other.start) || other.contains(&self.start)
    }

    /// `self ⊞ other` for two arcs that contain no antipodal pair.
    ///
    /// With `other` lifted to `[c, d]`, every point of `self` lifts into the
    /// open window `(d - 1/2, c + 1/2)`; the sum is then the interval hull.
    fn hull_sum(&self, other: &Arc) -> Arc {
        let c = other.start.turns().clone();
        let d = &c + &other.length;
        let lo = &d - half();
        let a = &lo + frac(&(self.start.turns() - &lo));
        let b = &a + &self.length;
        let start = if a < c { a } else { c };
        let end = if b > d { b } else { d };
        Arc { start: PhaseAngle::from_turns(&start), length: end - start }
    }
}

/// A subset of `{0} ∪ S¹` that is a finite union of closed arcs, optionally
/// together with zero. Always held in canonical form, so derived equality is
/// set equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ArcSet {
    contains_zero: bool,
    full_circle: bool,
    arcs: Vec<Arc>,
}

impl ArcSet {
    pub fn empty() -> ArcSet {
        ArcSet { contains_zero: false, full_circle: false, arcs: Vec::new() }
    }

    /// The set `{0}`.
    pub fn zero() -> ArcSet {
        ArcSet { contains_zero: true, full_circle: false, arcs: Vec::new() }
    }

    /// The whole hyperfield `{0} ∪ S¹`.
    pub fn everything() -> ArcSet {
        ArcSet { contains_zero: true, full_circle: true, arcs: Vec::new() }
    }

    pub fn circle() -> ArcSet {
        ArcSet { contains_zero: false, full_circle: true, arcs: Vec::new() }
    }

    pub fn singleton(v: &TPhiValue) -> ArcSet {
        match v {
            TPhiValue::Zero => ArcSet::zero(),
            TPhiValue::Unit(a) => ArcSet::from_parts(false, false, vec![Arc::point(a.clone())]),
        }
    }

    /// Builds the canonical form of an arbitrary union. Arcs of length `>= 1`
    /// are allowed and cover the circle.
    pub fn from_parts(contains_zero: bool, full_circle: bool, arcs: Vec<Arc>) -> ArcSet {
        if full_circle || arcs.iter().any(|a| a.length >= BigRational::one()) {
            return ArcSet { contains_zero, full_circle: true, arcs: Vec::new() };
        }
        let one = BigRational::one();
        // unwrap onto [0, 1]
        let mut intervals: Vec<(BigRational, BigRational)> = Vec::with_capacity(arcs.len() + 1);
        for arc in arcs {
            let lo = arc.start.turns().clone();
            let hi = &lo + &arc.length;
            if hi > one {
                intervals.push((lo, one.clone()));
                intervals.push((BigRational::zero(), hi - &one));
            } else {
                intervals.push((lo, hi));
            }
        }
        intervals.sort();
        let mut merged: Vec<(BigRational, BigRational)> = Vec::with_capacity(intervals.len());
        for (lo, hi) in intervals {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => {
                    if hi > last.1 {
                        last.1 = hi;
                    }
                }
                _ => merged.push((lo, hi)),
            }
        }
        if merged.len() == 1 && merged[0].0.is_zero() && merged[0].1 == one {
            return ArcSet { contains_zero, full_circle: true, arcs: Vec::new() };
        }
        // glue the piece ending at 1 onto the piece starting at 0
        if merged.len() >= 2 && merged[0].0.is_zero() && merged[merged.len() - 1].1 == one {
            let (_, first_hi) = merged.remove(0);
            let last = merged.last_mut().unwrap();
            last.1 = &one + first_hi;
        }
        let arcs = merged
            .into_iter()
            .map(|(lo, hi)| {
                let length = &hi - &lo;
                Arc { start: PhaseAngle::from_turns(&lo), length }
            })
            .collect();
        ArcSet { contains_zero, full_circle: false, arcs }
    }

    pub fn contains_zero(&self) -> bool {
        self.contains_zero
    }

    pub fn is_full_circle(&self) -> bool {
        self.full_circle
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn is_empty(&self) -> bool {
        !self.contains_zero && !self.full_circle && self.arcs.is_empty()
    }

    fn has_units(&self) -> bool {
        self.full_circle || !self.arcs.is_empty()
    }

    pub fn contains(&self, v: &TPhiValue) -> bool {
        match v {
            TPhiValue::Zero => self.contains_zero,
            TPhiValue::Unit(a) => self.full_circle || self.arcs.iter().any(|arc| arc.contains(a)),
        }
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.iter().cloned());
        ArcSet::from_parts(
            self.contains_zero || other.contains_zero,
            self.full_circle || other.full_circle,
            arcs,
        )
    }

    /// Pointwise product with a scalar: rotation for a unit, `{0}` or the
    /// empty set for zero.
    pub fn scale(&self, by: &TPhiValue) -> ArcSet {
        match by {
            TPhiValue::Zero if self.is_empty() => ArcSet::empty(),
            TPhiValue::Zero => ArcSet::zero(),
            TPhiValue::Unit(a) => ArcSet::from_parts(
                self.contains_zero,
                self.full_circle,
                self.arcs.iter().map(|arc| arc.rotate(a)).collect(),
            ),
        }
    }

    /// Pointwise negation (rotation by a half turn).
    pub fn negate(&self) -> ArcSet {
        self.scale(&TPhiValue::Unit(PhaseAngle::half_turn()))
    }

    /// `self ⊞ {v}`.
    pub fn add_value(&self, v: &TPhiValue) -> ArcSet {
        self.boxplus(&ArcSet::singleton(v))
    }

    /// The set sum `A ⊞ B`, the union of `a ⊞ b` over all pairs.
    pub fn boxplus(&self, other: &ArcSet) -> ArcSet {
        if self.is_empty() || other.is_empty() {
            return ArcSet::empty();
        }
        let mut zero = false;
        let mut full = false;
        let mut arcs = Vec::new();
        // 0 ⊞ B = B
        if self.contains_zero {
            zero |= other.contains_zero;
            full |= other.full_circle;
            arcs.extend(other.arcs.iter().cloned());
        }
        if other.contains_zero {
            zero |= self.contains_zero;
            full |= self.full_circle;
            arcs.extend(self.arcs.iter().cloned());
        }
        // a full circle on one side meets an antipode of any unit on the other
        if (self.full_circle && other.has_units()) || (other.full_circle && self.has_units()) {
            return ArcSet::everything();
        }
        for x in &self.arcs {
            for y in &other.arcs {
                if x.intersects(&y.rotate(&PhaseAngle::half_turn())) {
                    return ArcSet::everything();
                }
                arcs.push(x.hull_sum(y));
            }
        }
        ArcSet::from_parts(zero, full, arcs)
    }
}

impl fmt::Display for ArcSet {
    /// Comma-separated `[start,end]` arcs, then `FULL` and `+0` markers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.arcs.is_empty() {
            let arcs: Vec<String> = self.arcs.iter().map(|a| format!("[{},{}]", a.start, a.end())).collect();
            parts.push(arcs.join(","));
        }
        if self.full_circle {
            parts.push("FULL".to_string());
        }
        if self.contains_zero {
            parts.push("+0".to_string());
        }
        if parts.is_empty() {
            write!(f, "EMPTY")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ang(p: i64, q: i64) -> PhaseAngle {
        PhaseAngle::new(p, q).unwrap()
    }

    fn arc(p: i64, q: i64, lp: i64, lq: i64) -> Arc {
        Arc { start: ang(p, q), length: BigRational::new(lp.into(), lq.into()) }
    }

    #[test]
    fn touching_arcs_merge() {
        let s = ArcSet::from_parts(false, false, vec![arc(1, 4, 1, 4), arc(0, 1, 1, 4)]);
        assert_eq!(s.arcs(), &[arc(0, 1, 1, 2)]);
        assert_eq!(s.to_string(), "[0/1,1/2]");
    }

    #[test]
    fn wrapping_arc_is_glued() {
        let a = ArcSet::from_parts(false, false, vec![arc(3, 4, 1, 2)]);
        let b = ArcSet::from_parts(false, false, vec![arc(0, 1, 1, 4), arc(3, 4, 1, 4)]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "[3/4,1/4]");
        assert!(a.contains(&TPhiValue::Unit(ang(0, 1))));
        assert!(!a.contains(&TPhiValue::Unit(ang(1, 2))));
    }

    #[test]
    fn covering_arcs_become_full() {
        let s = ArcSet::from_parts(true, false, vec![arc(0, 1, 1, 2), arc(1, 2, 1, 2)]);
        assert_eq!(s, ArcSet::everything());
        assert_eq!(s.to_string(), "FULL +0");
    }

    #[test]
    fn circle_plus_zero_has_no_zero() {
        assert_eq!(ArcSet::circle().boxplus(&ArcSet::zero()), ArcSet::circle());
        assert_eq!(ArcSet::zero().boxplus(&ArcSet::zero()), ArcSet::zero());
        assert_eq!(ArcSet::empty().boxplus(&ArcSet::everything()), ArcSet::empty());
    }

    #[test]
    fn arc_hull_sum() {
        // [0, 1/5] ⊞ [3/10, 9/20] = [0, 9/20]
        let a = ArcSet::from_parts(false, false, vec![arc(0, 1, 1, 5)]);
        let b = ArcSet::from_parts(false, false, vec![arc(3, 10, 3, 20)]);
        assert_eq!(a.boxplus(&b), ArcSet::from_parts(false, false, vec![arc(0, 1, 9, 20)]));
        // [0, 3/10] contains the antipode of 3/5
        let c = ArcSet::from_parts(false, false, vec![arc(0, 1, 3, 10)]);
        assert_eq!(c.add_value(&TPhiValue::Unit(ang(3, 5))), ArcSet::everything());
    }
}
