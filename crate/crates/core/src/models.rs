//! Finite model families: powers of `TΦ_k`, their perp subposets, and
//! enumeration of strong Grassmann–Plücker functions.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::homology::{HomologyGroup, HomologySummary};
use crate::hyperfield::TPhiValue;
use crate::phased::{binomial, discretized_vectors, gp_verify_all, perp_enumerate, GPFunction, PhasedError, PhasedVector};
use crate::poset::{build_poset, FinitePoset, MirroredPoset, PosetError};

/// Printed next to every perp model.
pub const DISCRETIZATION_CAVEAT: &str = "discretized perp posets do not approximate the continuum homotopy type: \
for n=2 and one vector the model is an antichain of points, not a circle";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("model would have {count} elements or candidates, above the cap of {cap}")]
    SizeCapExceeded { count: u128, cap: u128 },
    #[error("no non-zero vector of the discretization lies in the perp set")]
    EmptyPerp,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error(transparent)]
    Phased(#[from] PhasedError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelFamily {
    Power,
    Perp(Vec<PhasedVector>),
    Grassmannian(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPhiModelSpec {
    pub n: usize,
    pub k: u64,
    pub family: ModelFamily,
}

impl TPhiModelSpec {
    pub fn validate(&self) -> Result<(), ModelError> {
        if self.n == 0 || self.k == 0 {
            return Err(ModelError::BadParameters(format!("need n >= 1 and k >= 1, got n={} k={}", self.n, self.k)));
        }
        match &self.family {
            ModelFamily::Power => Ok(()),
            ModelFamily::Perp(vs) => {
                if self.k % 2 == 1 {
                    return Err(PhasedError::OddDiscretization(self.k).into());
                }
                if vs.is_empty() {
                    return Err(PhasedError::NoVectors.into());
                }
                for v in vs {
                    if v.len() != self.n {
                        return Err(PhasedError::LengthMismatch(self.n, v.len()).into());
                    }
                    if let Some(bad) = v.entries().iter().find(|e| !e.in_discretization(self.k)) {
                        return Err(PhasedError::NotInDiscretization(bad.clone(), self.k).into());
                    }
                }
                Ok(())
            }
            &ModelFamily::Grassmannian(r) if r == 0 || r > self.n => {
                Err(PhasedError::BadRank { n: self.n, r }.into())
            }
            ModelFamily::Grassmannian(_) => Ok(()),
        }
    }
}

/// The chain `1 < 2 < … < n`.
pub fn index_chain(n: usize) -> FinitePoset {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let pairs: Vec<(String, String)> = labels.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
    build_poset(labels, pairs).expect("a chain is acyclic")
}

/// Element labels are vectors written `v1,…,vn`.
pub fn element_vector(p: &FinitePoset, x: usize) -> PhasedVector {
    p.label(x).parse().expect("model labels are phased vectors")
}

/// Coordinatewise order on `vectors`, mirrored onto a chain of support sizes.
/// Support sizes that never occur are left out of the chain.
fn mirrored_from_vectors(vectors: Vec<PhasedVector>, n: usize) -> Result<(MirroredPoset, Vec<usize>), ModelError> {
    let labels: Vec<String> = vectors.iter().map(ToString::to_string).collect();
    let mut pairs = Vec::new();
    for (i, x) in vectors.iter().enumerate() {
        for (j, y) in vectors.iter().enumerate() {
            if i != j && x.le(y) {
                pairs.push((i, j));
            }
        }
    }
    let poset = FinitePoset::from_closed_relation(labels, pairs)?;
    finish_mirror(poset, n)
}

fn finish_mirror(poset: FinitePoset, n: usize) -> Result<(MirroredPoset, Vec<usize>), ModelError> {
    let sizes: Vec<usize> = (0..poset.len()).map(|x| element_vector(&poset, x).support_size()).collect();
    let present: BTreeSet<usize> = sizes.iter().copied().collect();
    let pruned: Vec<usize> = (1..=n).filter(|s| !present.contains(s)).collect();
    let kept: Vec<String> = present.iter().map(ToString::to_string).collect();
    let pairs: Vec<(String, String)> = kept.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
    let index = build_poset(kept, pairs)?;
    let mirror = sizes.iter().map(|s| index.index_of(&s.to_string()).expect("size is present")).collect();
    Ok((MirroredPoset::new(poset, index, mirror)?, pruned))
}

/// `(TΦ_k)ⁿ − {0}` with the coordinatewise order (`0 <` every unit), mirrored
/// onto the chain `[n]` by support size.
pub fn build_tphi_power(n: usize, k: u64, cap: u128) -> Result<MirroredPoset, ModelError> {
    TPhiModelSpec { n, k, family: ModelFamily::Power }.validate()?;
    let count = u128::from(k + 1).checked_pow(n as u32).map_or(u128::MAX, |c| c - 1);
    if count > cap {
        return Err(ModelError::SizeCapExceeded { count, cap });
    }
    let vectors: Vec<PhasedVector> = discretized_vectors(n, k).collect();
    let position: std::collections::HashMap<&PhasedVector, usize> =
        vectors.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let choices = TPhiValue::discretization(k);
    // the strict upper set of x: fill some zeros of x with units
    let mut pairs = Vec::new();
    for (i, x) in vectors.iter().enumerate() {
        let zeros: Vec<usize> = (0..n).filter(|&c| x.entries()[c].is_zero()).collect();
        for fill in zeros.iter().map(|_| choices.iter()).multi_cartesian_product() {
            if fill.iter().all(|v| v.is_zero()) {
                continue;
            }
            let mut y = x.entries().to_vec();
            for (&c, v) in zeros.iter().zip(fill) {
                y[c] = v.clone();
            }
            pairs.push((i, position[&PhasedVector(y)]));
        }
    }
    let labels = vectors.iter().map(ToString::to_string).collect();
    let poset = FinitePoset::from_closed_relation(labels, pairs)?;
    let (mp, pruned) = finish_mirror(poset, n)?;
    debug_assert!(pruned.is_empty());
    Ok(mp)
}

/// A perp model together with the support sizes dropped from the index chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerpModel {
    pub mirrored: MirroredPoset,
    pub pruned_strata: Vec<usize>,
}

/// The subposet of `(TΦ_k)ⁿ − {0}` on `{v_1, …, v_m}⊥`.
pub fn build_perp_poset(vs: &[PhasedVector], k: u64) -> Result<PerpModel, ModelError> {
    let n = vs.first().ok_or(PhasedError::NoVectors)?.len();
    TPhiModelSpec { n, k, family: ModelFamily::Perp(vs.to_vec()) }.validate()?;
    let elements = perp_enumerate(vs, k)?;
    if elements.is_empty() {
        return Err(ModelError::EmptyPerp);
    }
    let (mirrored, pruned_strata) = mirrored_from_vectors(elements, n)?;
    Ok(PerpModel { mirrored, pruned_strata })
}

/// Number of candidate functions `(k+1)^C(n,r)`, saturating.
pub fn grassmannian_candidates(n: usize, r: usize, k: u64) -> u128 {
    u128::from(k + 1).checked_pow(binomial(n, r) as u32).unwrap_or(u128::MAX)
}

/// Decodes the `idx`-th normalized candidate with leading value at `lead`.
fn candidate(n: usize, r: usize, m: usize, lead: usize, mut idx: u128, scalars: &[TPhiValue]) -> GPFunction {
    let base = scalars.len() as u128;
    let mut values = vec![TPhiValue::Zero; m];
    values[lead] = TPhiValue::one();
    for slot in values[lead + 1..].iter_mut().rev() {
        *slot = scalars[(idx % base) as usize].clone();
        idx /= base;
    }
    GPFunction::new(n, r, values).expect("arity matches")
}

/// All strong GP functions `[n]^r → TΦ_k ∪ {0}` up to scalars, one normalized
/// representative each, sorted.
pub fn enum_grassmannian(n: usize, r: usize, k: u64, cap: u128, parallel: bool) -> Result<Vec<GPFunction>, ModelError> {
    TPhiModelSpec { n, k, family: ModelFamily::Grassmannian(r) }.validate()?;
    let count = grassmannian_candidates(n, r, k);
    if count > cap {
        return Err(ModelError::SizeCapExceeded { count, cap });
    }
    let m = binomial(n, r);
    let scalars = TPhiValue::discretization(k);
    let base = scalars.len() as u128;
    let mut out = Vec::new();
    for lead in 0..m {
        let span = base.pow((m - lead - 1) as u32);
        let test = |idx: u128| {
            let phi = candidate(n, r, m, lead, idx, &scalars);
            gp_verify_all(&phi).passed().then_some(phi)
        };
        if parallel {
            let found: Vec<GPFunction> = (0..span as u64).into_par_iter().filter_map(|i| test(u128::from(i))).collect();
            out.extend(found);
        } else {
            out.extend((0..span).filter_map(test));
        }
    }
    out.sort();
    Ok(out)
}

/// Reduced homology of an `n`-fold join of `k`-point spaces: free of rank
/// `(k−1)ⁿ` in dimension `n−1`.
pub fn expected_join_betti(n: usize, k: u64) -> HomologySummary {
    let mut groups = vec![HomologyGroup::default(); n];
    if n > 0 {
        groups[n - 1].betti = (k.saturating_sub(1)).pow(n as u32) as usize;
    }
    HomologySummary { reduced: true, groups }
}
