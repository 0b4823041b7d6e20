//! Phased vectors over `TΦⁿ`, perp sets, and strong Grassmann–Plücker
//! functions.
//!
//! Ground sets are `[n] = {1, …, n}` and tuples are 1-based throughout, which
//! matches the GP file format.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::hyperfield::{contains_zero, HyperfieldError, PhaseAngle, TPhiValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhasedError {
    #[error("vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("the zero vector is not in TΦⁿ − {{0}}")]
    ZeroVector,
    #[error("discretization order k = {0} is odd; TΦ_k has no antipodes")]
    OddDiscretization(u64),
    #[error("value {0} is not a {1}-th root of unity")]
    NotInDiscretization(TPhiValue, u64),
    #[error("no vectors given")]
    NoVectors,
    #[error("index {0} is outside the ground set [1, {1}]")]
    IndexOutOfRange(usize, usize),
    #[error("expected {expected} entries, got {got}")]
    BadArity { expected: usize, got: usize },
    #[error("tuple {0:?} is not strictly increasing")]
    NotStrictlyIncreasing(Vec<usize>),
    #[error("rank {r} is not in [1, {n}]")]
    BadRank { n: usize, r: usize },
    #[error("function is identically zero")]
    IdenticallyZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Hyperfield(#[from] HyperfieldError),
}

/// An element of `TΦⁿ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhasedVector(pub Vec<TPhiValue>);

impl PhasedVector {
    pub fn new(entries: Vec<TPhiValue>) -> Self {
        PhasedVector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[TPhiValue] {
        &self.0
    }

    /// 0-based indices of the non-zero entries.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, _)| i).collect()
    }

    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(TPhiValue::is_zero)
    }

    /// Coordinatewise order with `0 < u` for every unit: `self ≤ other` iff
    /// `other` agrees with `self` on the support of `self`.
    pub fn le(&self, other: &PhasedVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a.is_zero() || a == b)
    }

    pub fn scale(&self, t: &TPhiValue) -> PhasedVector {
        PhasedVector(self.0.iter().map(|v| v.mul(t)).collect())
    }
}

impl fmt::Display for PhasedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl fmt::Debug for PhasedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for PhasedVector {
    type Err = PhasedError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Err(PhasedError::Parse("empty vector".into()));
        }
        let entries = s.split(',').map(str::parse).collect::<Result<Vec<TPhiValue>, _>>()?;
        Ok(PhasedVector(entries))
    }
}

fn check_lengths(vs: &[PhasedVector], n: usize) -> Result<(), PhasedError> {
    match vs.iter().find(|v| v.len() != n) {
        Some(v) => Err(PhasedError::LengthMismatch(n, v.len())),
        None => Ok(()),
    }
}

/// `x ∈ {v_1, …, v_m}⊥`: zero lies in `v_1 x_1 ⊞ … ⊞ v_n x_n` for every `v`.
pub fn perp_membership(vs: &[PhasedVector], x: &PhasedVector) -> Result<bool, PhasedError> {
    check_lengths(vs, x.len())?;
    if x.is_zero() {
        return Err(PhasedError::ZeroVector);
    }
    for v in vs {
        let terms: Vec<TPhiValue> = v.0.iter().zip(&x.0).map(|(a, b)| a.mul(b)).collect();
        if !contains_zero(&terms)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every non-zero vector of `TΦ_k`, in lexicographic order.
pub fn discretized_vectors(n: usize, k: u64) -> impl Iterator<Item = PhasedVector> {
    let scalars = TPhiValue::discretization(k);
    (0..n)
        .map(|_| scalars.clone())
        .multi_cartesian_product()
        .map(PhasedVector)
        .filter(|v| !v.is_zero())
}

/// The perp set `{v_1, …, v_m}⊥` restricted to `(TΦ_k)ⁿ − {0}`.
pub fn perp_enumerate(vs: &[PhasedVector], k: u64) -> Result<Vec<PhasedVector>, PhasedError> {
    if k % 2 == 1 {
        return Err(PhasedError::OddDiscretization(k));
    }
    let n = vs.first().ok_or(PhasedError::NoVectors)?.len();
    check_lengths(vs, n)?;
    for v in vs {
        if let Some(bad) = v.0.iter().find(|e| !e.in_discretization(k)) {
            return Err(PhasedError::NotInDiscretization(bad.clone(), k));
        }
    }
    let mut out = Vec::new();
    for x in discretized_vectors(n, k) {
        if perp_membership(vs, &x)? {
            out.push(x);
        }
    }
    Ok(out)
}

pub(crate) fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Position of a strictly increasing 1-based tuple in the lexicographic
/// listing of all `r`-subsets of `[n]`.
fn subset_rank(n: usize, tuple: &[usize]) -> usize {
    let r = tuple.len();
    let mut rank = 0;
    let mut prev = 0;
    for (i, &c) in tuple.iter().enumerate() {
        for j in prev + 1..c {
            rank += binomial(n - j, r - i - 1);
        }
        prev = c;
    }
    rank
}

/// Sorts a tuple of distinct entries, returning the sorted tuple and whether
/// the sorting permutation is odd.
fn sort_with_parity(tuple: &[usize]) -> (Vec<usize>, bool) {
    let mut odd = false;
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            if tuple[i] > tuple[j] {
                odd = !odd;
            }
        }
    }
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    (sorted, odd)
}

/// An alternating map `[n]^r → TΦ`, stored on strictly increasing tuples in
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GPFunction {
    n: usize,
    r: usize,
    values: Vec<TPhiValue>,
}

impl GPFunction {
    /// `values` lists the function on the increasing tuples of `[n]` in
    /// lexicographic order.
    pub fn new(n: usize, r: usize, values: Vec<TPhiValue>) -> Result<Self, PhasedError> {
        if r == 0 || r > n {
            return Err(PhasedError::BadRank { n, r });
        }
        let expected = binomial(n, r);
        if values.len() != expected {
            return Err(PhasedError::BadArity { expected, got: values.len() });
        }
        Ok(GPFunction { n, r, values })
    }

    pub fn zero(n: usize, r: usize) -> Result<Self, PhasedError> {
        Self::new(n, r, vec![TPhiValue::Zero; binomial(n, r)])
    }

    /// Builds a function from `(increasing tuple, value)` pairs; missing tuples are zero.
    pub fn from_entries<I>(n: usize, r: usize, entries: I) -> Result<Self, PhasedError>
    where
        I: IntoIterator<Item = (Vec<usize>, TPhiValue)>,
    {
        let mut phi = Self::zero(n, r)?;
        for (tuple, value) in entries {
            phi.check_tuple(&tuple)?;
            if tuple.windows(2).any(|w| w[0] >= w[1]) {
                return Err(PhasedError::NotStrictlyIncreasing(tuple));
            }
            let idx = subset_rank(n, &tuple);
            phi.values[idx] = value;
        }
        Ok(phi)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn values(&self) -> &[TPhiValue] {
        &self.values
    }

    /// The increasing tuples paired with their stored values.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &TPhiValue)> {
        (1..=self.n).combinations(self.r).zip(&self.values)
    }

    pub fn is_identically_zero(&self) -> bool {
        self.values.iter().all(TPhiValue::is_zero)
    }

    pub fn scale(&self, t: &TPhiValue) -> GPFunction {
        GPFunction { n: self.n, r: self.r, values: self.values.iter().map(|v| v.mul(t)).collect() }
    }

    fn check_tuple(&self, tuple: &[usize]) -> Result<(), PhasedError> {
        if tuple.len() != self.r {
            return Err(PhasedError::BadArity { expected: self.r, got: tuple.len() });
        }
        match tuple.iter().find(|&&i| i == 0 || i > self.n) {
            Some(&i) => Err(PhasedError::IndexOutOfRange(i, self.n)),
            None => Ok(()),
        }
    }

    /// Evaluates on an arbitrary tuple: zero on repeated entries, otherwise
    /// the stored value rotated by a half turn per odd sorting permutation.
    pub fn eval(&self, tuple: &[usize]) -> Result<TPhiValue, PhasedError> {
        self.check_tuple(tuple)?;
        let (sorted, odd) = sort_with_parity(tuple);
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Ok(TPhiValue::Zero);
        }
        let v = &self.values[subset_rank(self.n, &sorted)];
        Ok(if odd { v.neg() } else { v.clone() })
    }
}

impl fmt::Debug for GPFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GP(n={}, r={}; {})", self.n, self.r, self.values.iter().join(" "))
    }
}

impl fmt::Display for GPFunction {
    /// The GP file format: `n r`, then one `i1 … ir : v` line per non-zero value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.r)?;
        for (tuple, v) in self.entries() {
            if !v.is_zero() {
                writeln!(f, "{} : {}", tuple.iter().join(" "), v)?;
            }
        }
        Ok(())
    }
}

impl FromStr for GPFunction {
    type Err = PhasedError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines().map(|l| l.split('#').next().unwrap().trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| PhasedError::Parse("missing `n r` header".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| PhasedError::Parse(format!("bad header `{header}`"))))
            .collect::<Result<_, _>>()?;
        let [n, r] = nums[..] else {
            return Err(PhasedError::Parse(format!("bad header `{header}`")));
        };
        let mut entries = Vec::new();
        for line in lines {
            let (lhs, rhs) =
                line.split_once(':').ok_or_else(|| PhasedError::Parse(format!("missing `:` in `{line}`")))?;
            let tuple: Vec<usize> = lhs
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| PhasedError::Parse(format!("bad index in `{line}`"))))
                .collect::<Result<_, _>>()?;
            entries.push((tuple, rhs.trim().parse()?));
        }
        GPFunction::from_entries(n, r, entries)
    }
}

pub fn gp_eval(phi: &GPFunction, tuple: &[usize]) -> Result<TPhiValue, PhasedError> {
    phi.eval(tuple)
}

fn check_increasing(tuple: &[usize], n: usize) -> Result<(), PhasedError> {
    if let Some(&i) = tuple.iter().find(|&&i| i == 0 || i > n) {
        return Err(PhasedError::IndexOutOfRange(i, n));
    }
    if tuple.windows(2).any(|w| w[0] >= w[1]) {
        return Err(PhasedError::NotStrictlyIncreasing(tuple.to_vec()));
    }
    Ok(())
}

/// The terms `(-1)^k φ(x_1..x̂_k..x_{r+1}) · φ(x_k, y_1..y_{r-1})`, `k = 1..=r+1`.
fn relation_terms(phi: &GPFunction, xs: &[usize], ys: &[usize]) -> Result<Vec<TPhiValue>, PhasedError> {
    let mut terms = Vec::with_capacity(xs.len());
    let mut left = Vec::with_capacity(phi.r);
    let mut right = Vec::with_capacity(phi.r);
    for k in 0..xs.len() {
        left.clear();
        left.extend(xs.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x));
        right.clear();
        right.push(xs[k]);
        right.extend_from_slice(ys);
        let t = phi.eval(&left)?.mul(&phi.eval(&right)?);
        // 1-based k: odd k gets the sign
        terms.push(if k % 2 == 0 { t.neg() } else { t });
    }
    Ok(terms)
}

/// One strong Grassmann–Plücker relation for sorted `xs` (`r+1` elements)
/// and sorted `ys` (`r-1` elements).
pub fn gp_relation_check(phi: &GPFunction, xs: &[usize], ys: &[usize]) -> Result<bool, PhasedError> {
    let r = phi.r;
    if xs.len() != r + 1 {
        return Err(PhasedError::BadArity { expected: r + 1, got: xs.len() });
    }
    if ys.len() != r - 1 {
        return Err(PhasedError::BadArity { expected: r - 1, got: ys.len() });
    }
    check_increasing(xs, phi.n)?;
    check_increasing(ys, phi.n)?;
    Ok(contains_zero(&relation_terms(phi, xs, ys)?)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GPFailure {
    IdenticallyZero,
    Relation { xs: Vec<usize>, ys: Vec<usize> },
}

impl fmt::Display for GPFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GPFailure::IdenticallyZero => write!(f, "not identically zero"),
            GPFailure::Relation { xs, ys } => {
                write!(f, "GP relation fails at xs=({}) ys=({})", xs.iter().join(" "), ys.iter().join(" "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GPVerdict {
    Pass,
    Fail(GPFailure),
}

impl GPVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, GPVerdict::Pass)
    }
}

/// Checks that `φ` is a strong GP function: not identically zero, and every
/// relation over subsets holds. Reports the lexicographically first failure.
pub fn gp_verify_all(phi: &GPFunction) -> GPVerdict {
    if phi.is_identically_zero() {
        return GPVerdict::Fail(GPFailure::IdenticallyZero);
    }
    let r = phi.r;
    for xs in (1..=phi.n).combinations(r + 1) {
        for ys in (1..=phi.n).combinations(r - 1) {
            let terms = relation_terms(phi, &xs, &ys).expect("tuples are in range");
            if !contains_zero(&terms).expect("relations have r+1 >= 2 terms") {
                return GPVerdict::Fail(GPFailure::Relation { xs, ys });
            }
        }
    }
    GPVerdict::Pass
}

/// Same verdict as [`gp_verify_all`], but sweeping every ordering of `xs` and
/// `ys`. Only useful as a cross-check.
pub fn gp_verify_all_tuples(phi: &GPFunction) -> GPVerdict {
    if phi.is_identically_zero() {
        return GPVerdict::Fail(GPFailure::IdenticallyZero);
    }
    let r = phi.r;
    for xs in (1..=phi.n).permutations(r + 1) {
        for ys in (1..=phi.n).permutations(r - 1) {
            let terms = relation_terms(phi, &xs, &ys).expect("tuples are in range");
            if !contains_zero(&terms).expect("relations have r+1 >= 2 terms") {
                return GPVerdict::Fail(GPFailure::Relation { xs, ys });
            }
        }
    }
    GPVerdict::Pass
}

/// Representative of the scalar class of `φ`: the first non-zero value in
/// lexicographic tuple order becomes `1`.
pub fn gp_normalize(phi: &GPFunction) -> Result<GPFunction, PhasedError> {
    let lead = phi.values.iter().find(|v| !v.is_zero()).ok_or(PhasedError::IdenticallyZero)?;
    Ok(phi.scale(&lead.inverse().expect("lead is a unit")))
}

pub fn is_normalized(phi: &GPFunction) -> bool {
    phi.values.iter().find(|v| !v.is_zero()) == Some(&TPhiValue::Unit(PhaseAngle::zero()))
}

/// A set of distinct-entry `r`-tuples such that every distinct-entry tuple is
/// in the set or one transposition away from it, and no transposition of a
/// member is a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    pub n: usize,
    pub r: usize,
    pub tuples: Vec<Vec<usize>>,
}

impl Transversal {
    pub fn d(&self) -> usize {
        self.tuples.len()
    }
}

/// All tuples obtained from `t` by swapping two positions.
pub fn transpositions(t: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..t.len()).tuple_combinations().map(move |(i, j)| {
        let mut s = t.to_vec();
        s.swap(i, j);
        s
    })
}

fn is_transposition_of(a: &[usize], b: &[usize]) -> bool {
    let diff: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    match diff[..] {
        [i, j] => a[i] == b[j] && a[j] == b[i],
        // a tuple with a repeated entry is a transposition of itself
        [] => a.iter().duplicates().next().is_some(),
        _ => false,
    }
}

/// Greedy construction over the lexicographic order of distinct-entry tuples:
/// take the least tuple not yet excluded, then exclude its transpositions.
pub fn transversal(n: usize, r: usize) -> Result<Transversal, PhasedError> {
    if r == 0 || r > n {
        return Err(PhasedError::BadRank { n, r });
    }
    // permutations of a sorted range come out in lexicographic order
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    for s in (1..=n).permutations(r) {
        if !chosen.iter().any(|m| is_transposition_of(m, &s)) {
            chosen.push(s);
        }
    }
    Ok(Transversal { n, r, tuples: chosen })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransversalViolation {
    RepeatedEntry(Vec<usize>),
    Uncovered(Vec<usize>),
    TranspositionInside(Vec<usize>, Vec<usize>),
}

/// Checks the three defining properties, reading "obtainable by a
/// transposition" as "in the set or one transposition away".
pub fn check_transversal(t: &Transversal) -> Result<(), TransversalViolation> {
    for m in &t.tuples {
        if m.iter().duplicates().next().is_some() {
            return Err(TransversalViolation::RepeatedEntry(m.clone()));
        }
    }
    let members: BTreeSet<&Vec<usize>> = t.tuples.iter().collect();
    for s in (1..=t.n).permutations(t.r) {
        if !members.contains(&s) && !transpositions(&s).any(|u| members.contains(&u)) {
            return Err(TransversalViolation::Uncovered(s));
        }
    }
    for m in &t.tuples {
        if let Some(u) = transpositions(m).find(|u| members.contains(u)) {
            return Err(TransversalViolation::TranspositionInside(m.clone(), u));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(p: i64, q: i64) -> TPhiValue {
        TPhiValue::Unit(PhaseAngle::new(p, q).unwrap())
    }

    fn pv(s: &str) -> PhasedVector {
        s.parse().unwrap()
    }

    #[test]
    fn perp_membership_examples() {
        let ones = [pv("1,1")];
        for j in 0..12 {
            let a = PhaseAngle::root_of_unity(j, 12);
            let x = PhasedVector(vec![TPhiValue::Unit(a.clone()), TPhiValue::Unit(a.antipode())]);
            assert!(perp_membership(&ones, &x).unwrap());
        }
        assert!(!perp_membership(&ones, &pv("0/1,0/1")).unwrap());
        assert!(perp_membership(&[pv("1,1,1")], &pv("0/1,1/2,0")).unwrap());
    }

    #[test]
    fn perp_membership_errors() {
        assert_eq!(perp_membership(&[pv("1,1")], &pv("1,1,1")), Err(PhasedError::LengthMismatch(3, 2)));
        assert_eq!(perp_membership(&[pv("1,1")], &pv("0,0")), Err(PhasedError::ZeroVector));
    }

    #[test]
    fn perp_enumerate_examples() {
        let got = perp_enumerate(&[pv("1,1")], 2).unwrap();
        assert_eq!(got, vec![pv("0/1,1/2"), pv("1/2,0/1")]);
        let got = perp_enumerate(&[pv("1,1")], 4).unwrap();
        assert_eq!(got.len(), 4);
        assert!(got.iter().all(|x| x.0[1] == x.0[0].neg()));
        let got = perp_enumerate(&[pv("1,1,1")], 2).unwrap();
        assert_eq!(got.len(), 12);
        assert_eq!(got.iter().filter(|x| x.support_size() == 2).count(), 6);
        assert_eq!(got.iter().filter(|x| x.support_size() == 3).count(), 6);
        assert_eq!(perp_enumerate(&[pv("1,1")], 3), Err(PhasedError::OddDiscretization(3)));
        assert_eq!(
            perp_enumerate(&[pv("1,1/3")], 4),
            Err(PhasedError::NotInDiscretization(u(1, 3), 4))
        );
    }

    #[test]
    fn subset_rank_is_lex_position() {
        for n in 1..7 {
            for r in 1..=n {
                for (i, c) in (1..=n).combinations(r).enumerate() {
                    assert_eq!(subset_rank(n, &c), i);
                }
            }
        }
    }

    #[test]
    fn gp_eval_examples() {
        let phi = GPFunction::from_entries(3, 2, vec![(vec![1, 2], u(1, 5))]).unwrap();
        assert_eq!(gp_eval(&phi, &[2, 1]).unwrap(), u(1, 5).neg());
        assert_eq!(gp_eval(&phi, &[1, 1]).unwrap(), TPhiValue::Zero);
        assert_eq!(gp_eval(&phi, &[1, 2]).unwrap(), u(1, 5));
        assert_eq!(gp_eval(&phi, &[1, 4]), Err(PhasedError::IndexOutOfRange(4, 3)));
        assert_eq!(gp_eval(&phi, &[1]), Err(PhasedError::BadArity { expected: 2, got: 1 }));
    }

    #[test]
    fn relation_examples() {
        let phi = GPFunction::new(2, 1, vec![u(1, 7), u(2, 9)]).unwrap();
        assert!(gp_relation_check(&phi, &[1, 2], &[]).unwrap());
        let phi = GPFunction::new(3, 2, vec![TPhiValue::one(); 3]).unwrap();
        assert!(gp_relation_check(&phi, &[1, 2, 3], &[1]).unwrap());
        assert_eq!(
            gp_relation_check(&phi, &[1, 2], &[1]),
            Err(PhasedError::BadArity { expected: 3, got: 2 })
        );
        assert_eq!(
            gp_relation_check(&phi, &[2, 1, 3], &[1]),
            Err(PhasedError::NotStrictlyIncreasing(vec![2, 1, 3]))
        );
        // all terms zero
        let phi = GPFunction::from_entries(4, 2, vec![(vec![1, 2], TPhiValue::one())]).unwrap();
        assert!(gp_relation_check(&phi, &[2, 3, 4], &[3]).unwrap());
    }

    #[test]
    fn verify_examples() {
        let phi = GPFunction::new(3, 1, vec![TPhiValue::one(); 3]).unwrap();
        assert_eq!(gp_verify_all(&phi), GPVerdict::Pass);
        let zero = GPFunction::zero(3, 2).unwrap();
        let v = gp_verify_all(&zero);
        assert_eq!(v, GPVerdict::Fail(GPFailure::IdenticallyZero));
        if let GPVerdict::Fail(f) = v {
            assert_eq!(f.to_string(), "not identically zero");
        }
        let phi = GPFunction::new(3, 2, vec![TPhiValue::one(); 3]).unwrap();
        assert_eq!(gp_verify_all(&phi), GPVerdict::Pass);
    }

    #[test]
    fn verify_finds_failing_relation() {
        // xs={1,2,3}, ys={4}: terms -φ23φ14, φ13φ24, -φ12φ34 = 3/4, 5/8, 1/2,
        // all inside an open semicircle
        let phi = GPFunction::new(4, 2, vec![u(0, 1), u(0, 1), u(0, 1), u(1, 4), u(5, 8), u(0, 1)]).unwrap();
        let v = gp_verify_all(&phi);
        assert_eq!(v, GPVerdict::Fail(GPFailure::Relation { xs: vec![1, 2, 3], ys: vec![4] }));
        assert_eq!(v.passed(), gp_verify_all_tuples(&phi).passed());
    }

    #[test]
    fn normalize_examples() {
        let phi = GPFunction::new(3, 2, vec![u(1, 4), u(1, 2), TPhiValue::Zero]).unwrap();
        let norm = gp_normalize(&phi).unwrap();
        assert_eq!(norm.values(), &[u(0, 1), u(1, 4), TPhiValue::Zero]);
        assert_eq!(gp_normalize(&norm).unwrap(), norm);
        assert_eq!(gp_normalize(&phi.scale(&u(1, 3))).unwrap(), norm);
        assert!(is_normalized(&norm));
        assert_eq!(gp_normalize(&GPFunction::zero(3, 2).unwrap()), Err(PhasedError::IdenticallyZero));
    }

    #[test]
    fn transversal_examples() {
        let t = transversal(3, 2).unwrap();
        assert_eq!(t.tuples, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(t.d(), 3);
        let t = transversal(2, 2).unwrap();
        assert_eq!(t.tuples, vec![vec![1, 2]]);
        let t = transversal(3, 3).unwrap();
        assert_eq!(t.tuples, vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]);
        assert!(check_transversal(&t).is_ok());
    }

    #[test]
    fn transversal_checker_rejects() {
        let bad = Transversal { n: 3, r: 2, tuples: vec![vec![1, 2], vec![2, 1]] };
        assert!(matches!(check_transversal(&bad), Err(TransversalViolation::Uncovered(_))));
        let bad = Transversal { n: 2, r: 2, tuples: vec![vec![1, 2], vec![2, 1]] };
        assert!(matches!(check_transversal(&bad), Err(TransversalViolation::TranspositionInside(..))));
        let bad = Transversal { n: 2, r: 2, tuples: vec![vec![1, 1], vec![1, 2]] };
        assert!(matches!(check_transversal(&bad), Err(TransversalViolation::RepeatedEntry(_))));
    }

    #[test]
    fn gp_file_roundtrip() {
        let text = "3 2\n1 2 : 1/4\n# comment\n2 3 : 0/1\n";
        let phi: GPFunction = text.parse().unwrap();
        assert_eq!(phi.values(), &[u(1, 4), TPhiValue::Zero, u(0, 1)]);
        assert_eq!(phi.to_string().parse::<GPFunction>().unwrap(), phi);
        assert!("3 2\n2 1 : 1/4\n".parse::<GPFunction>().is_err());
        assert!("3\n".parse::<GPFunction>().is_err());
    }
}
