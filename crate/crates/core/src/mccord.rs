//! The comparison map `Δ(X) → X` on finite posets: contractibility
//! certificates for preimages of basic opens `↑x`, homology of the finite
//! space, and CW homotopy type reports.

use thiserror::Error;

use crate::complex::{collapse_certify, cone_apexes, order_complex, CollapseCertificate, ComplexError, SimplicialComplex};
use crate::homology::{homology_groups, HomologySummary};
use crate::poset::{core_reduction, discrete_type_classes, FinitePoset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum McCordError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// `Δ(↑x)`, the order complex of the upset of `x`.
pub fn comparison_fiber_complex(p: &FinitePoset, x: &str, cap: u128) -> Result<SimplicialComplex, McCordError> {
    let i = p.index_of(x).map_err(|_| McCordError::UnknownElement(x.to_string()))?;
    Ok(order_complex(&p.induced(&p.upset(&[i])), cap)?)
}

/// Evidence that `Δ(↑x)` is contractible, strongest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisCertificate {
    ConeApex { apex: String },
    CollapseSequence { steps: usize },
    /// Reduced homology vanishes; no statement about `π₁` beyond `H₁`.
    HomologyOnly,
    Obstruction(HomologySummary),
    /// Nothing could be computed within the size cap.
    Inconclusive,
}

impl BasisCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            BasisCertificate::ConeApex { .. } => "cone-apex",
            BasisCertificate::CollapseSequence { .. } => "collapse-sequence",
            BasisCertificate::HomologyOnly => "homology-only",
            BasisCertificate::Obstruction(_) => "obstruction",
            BasisCertificate::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisEntry {
    pub element: String,
    pub certificate: BasisCertificate,
    /// Number of simplices of `Δ(↑x)`.
    pub simplices: u128,
    /// Whether the certificate was checked on the built complex rather than
    /// read off the poset (done only above the size cap).
    pub on_complex: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McCordReport {
    pub entries: Vec<BasisEntry>,
    /// Homology of `Δ(X)`, absent when `Δ(X)` is over the size cap.
    pub homology: Option<HomologySummary>,
}

impl McCordReport {
    /// Every basic open has evidence of a contractible preimage.
    pub fn passed(&self) -> bool {
        self.entries
            .iter()
            .all(|e| !matches!(e.certificate, BasisCertificate::Obstruction(_) | BasisCertificate::Inconclusive))
    }

    pub fn all_cone_apex(&self) -> bool {
        self.entries.iter().all(|e| matches!(e.certificate, BasisCertificate::ConeApex { .. }))
    }

    pub fn lines(&self) -> Vec<String> {
        let w = self.entries.iter().map(|e| e.element.len()).max().unwrap_or(0).max("element".len());
        let mut out = vec![format!("{:<w$}  {:<17}  simplices", "element", "certificate")];
        for e in &self.entries {
            out.push(format!("{:<w$}  {:<17}  {}", e.element, e.certificate.kind(), e.simplices));
        }
        match &self.homology {
            Some(h) => out.extend(h.lines()),
            None => out.push("homology: order complex over the size cap".to_string()),
        }
        out.push(format!("verdict: {}", if self.passed() { "pass" } else { "fail" }));
        out
    }
}

/// Certificate for a single basic open `↑x`.
pub fn certify_basis_element(p: &FinitePoset, x: usize, cap: u128) -> BasisEntry {
    let up = p.upset(&[x]);
    let sub = p.induced(&up);
    let label = p.label(x).to_string();
    let xi = sub.index_of(&label).expect("x lies in its upset");
    let simplices = sub.chain_count();
    if let Ok(c) = order_complex(&sub, cap) {
        let certificate = if cone_apexes(&c).contains(&(xi as u32)) {
            BasisCertificate::ConeApex { apex: label.clone() }
        } else {
            match collapse_certify(&c) {
                CollapseCertificate::Collapsible { steps, .. } => BasisCertificate::CollapseSequence { steps: steps.len() },
                CollapseCertificate::Inconclusive { .. } => homology_certificate(homology_groups(&c, true)),
            }
        };
        return BasisEntry { element: label, certificate, simplices, on_complex: true };
    }
    // every maximal chain of ↑x passes through its minimum
    let certificate = if sub.minimal_elements() == [xi] {
        BasisCertificate::ConeApex { apex: label.clone() }
    } else {
        match core_reduced_homology(&sub, cap, true) {
            Ok(h) => homology_certificate(h),
            Err(_) => BasisCertificate::Inconclusive,
        }
    };
    BasisEntry { element: label, certificate, simplices, on_complex: false }
}

fn homology_certificate(h: HomologySummary) -> BasisCertificate {
    if h.is_trivial() {
        BasisCertificate::HomologyOnly
    } else {
        BasisCertificate::Obstruction(h)
    }
}

/// Certificates for every basic open `↑x`, plus the homology of `Δ(X)`.
pub fn basis_certificates(p: &FinitePoset, cap: u128) -> McCordReport {
    let entries = (0..p.len()).map(|x| certify_basis_element(p, x, cap)).collect();
    McCordReport { entries, homology: finite_space_homology(p, cap).ok() }
}

/// Homology of the finite space, computed on `Δ(X)`.
pub fn finite_space_homology(p: &FinitePoset, cap: u128) -> Result<HomologySummary, ComplexError> {
    Ok(homology_groups(&order_complex(p, cap)?, false))
}

/// Homology of `Δ(X)` computed on the core of `X`. Removing beat points does
/// not change the homotopy type of the order complex. Padded to the
/// dimension of `Δ(X)`.
pub fn core_reduced_homology(p: &FinitePoset, cap: u128, reduced: bool) -> Result<HomologySummary, ComplexError> {
    if p.is_empty() {
        return Ok(HomologySummary { reduced, groups: Vec::new() });
    }
    let (core, _) = core_reduction(p);
    Ok(homology_groups(&order_complex(&core, cap)?, reduced).padded(p.height() - 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentEvidence {
    Cone,
    Collapse { steps: usize },
    /// Beat-point reduction leaves a single point.
    CoreIsPoint,
    Obstructed(HomologySummary),
    Inconclusive,
}

impl ComponentEvidence {
    pub fn contractible(&self) -> bool {
        matches!(self, ComponentEvidence::Cone | ComponentEvidence::Collapse { .. } | ComponentEvidence::CoreIsPoint)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub elements: Vec<String>,
    pub evidence: ComponentEvidence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CwVerdict {
    CwType,
    Obstructed,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwReport {
    pub components: Vec<ComponentReport>,
}

impl CwReport {
    pub fn verdict(&self) -> CwVerdict {
        if self.components.iter().all(|c| c.evidence.contractible()) {
            CwVerdict::CwType
        } else if self.components.iter().any(|c| matches!(c.evidence, ComponentEvidence::Obstructed(_))) {
            CwVerdict::Obstructed
        } else {
            CwVerdict::Inconclusive
        }
    }

    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![format!("components: {} (π0 finite, hence discrete)", self.components.len())];
        for (i, c) in self.components.iter().enumerate() {
            let what = match &c.evidence {
                ComponentEvidence::Cone => "CW type: component contractible (cone)".to_string(),
                ComponentEvidence::Collapse { steps } => {
                    format!("CW type: component contractible ({steps} elementary collapses)")
                }
                ComponentEvidence::CoreIsPoint => "CW type: component contractible (core is a point)".to_string(),
                ComponentEvidence::Obstructed(h) => format!("obstructed: {}", h.lines().join(", ")),
                ComponentEvidence::Inconclusive => "inconclusive".to_string(),
            };
            out.push(format!("component {} ({} elements): {what}", i + 1, c.elements.len()));
        }
        let verdict = match self.verdict() {
            CwVerdict::CwType => "CW type",
            CwVerdict::Obstructed => "obstructed",
            CwVerdict::Inconclusive => "inconclusive",
        };
        out.push(format!("verdict: {verdict}"));
        out
    }
}

fn component_evidence(sub: &FinitePoset, cap: u128) -> ComponentEvidence {
    let nontrivial = |h: HomologySummary| {
        if h.is_trivial() {
            ComponentEvidence::Inconclusive
        } else {
            ComponentEvidence::Obstructed(h)
        }
    };
    if let Ok(c) = order_complex(sub, cap) {
        return match collapse_certify(&c) {
            CollapseCertificate::Collapsible { cone_apex: Some(_), .. } => ComponentEvidence::Cone,
            CollapseCertificate::Collapsible { steps, .. } => ComponentEvidence::Collapse { steps: steps.len() },
            CollapseCertificate::Inconclusive { .. } => {
                if core_reduction(sub).0.len() == 1 {
                    ComponentEvidence::CoreIsPoint
                } else {
                    nontrivial(homology_groups(&c, true))
                }
            }
        };
    }
    let (core, _) = core_reduction(sub);
    if core.len() == 1 {
        return ComponentEvidence::CoreIsPoint;
    }
    match order_complex(&core, cap) {
        Ok(c) => nontrivial(homology_groups(&c, true)),
        Err(_) => ComponentEvidence::Inconclusive,
    }
}

/// Per discrete-type class, evidence for or against contractibility of its
/// order complex.
pub fn cw_type_report(p: &FinitePoset, cap: u128) -> CwReport {
    let components = discrete_type_classes(p)
        .into_iter()
        .map(|class| {
            let sub = p.induced(&class);
            ComponentReport { elements: sub.labels().to_vec(), evidence: component_evidence(&sub, cap) }
        })
        .collect();
    CwReport { components }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::DEFAULT_SIMPLEX_CAP;
    use crate::models::{build_perp_poset, build_tphi_power};
    use crate::poset::build_poset;

    const CAP: u128 = DEFAULT_SIMPLEX_CAP;

    fn chain() -> FinitePoset {
        build_poset(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    fn antichain(k: usize) -> FinitePoset {
        build_poset((0..k).map(|i| format!("p{i}")), Vec::<(String, String)>::new()).unwrap()
    }

    #[test]
    fn fiber_complexes() {
        assert_eq!(comparison_fiber_complex(&chain(), "c", CAP).unwrap().simplex_count(), 1);
        assert_eq!(comparison_fiber_complex(&chain(), "a", CAP).unwrap().simplex_count(), 7);
        let p = build_tphi_power(2, 2, 100).unwrap().poset;
        let c = comparison_fiber_complex(&p, "0/1,0", CAP).unwrap();
        assert_eq!(c.face_counts(), [3, 2]);
        assert_eq!(cone_apexes(&c).len(), 1);
        assert!(matches!(comparison_fiber_complex(&p, "nope", CAP), Err(McCordError::UnknownElement(_))));
    }

    #[test]
    fn certificates_are_cones() {
        let p = build_tphi_power(2, 2, 100).unwrap().poset;
        let report = basis_certificates(&p, CAP);
        assert_eq!(report.entries.len(), 8);
        assert!(report.all_cone_apex());
        assert_eq!(report.homology.unwrap().bettis(), [1, 1]);
        assert!(basis_certificates(&chain(), CAP).all_cone_apex());
    }

    #[test]
    fn above_cap_uses_poset_criterion() {
        let report = basis_certificates(&chain(), 3);
        assert!(report.all_cone_apex());
        assert!(report.homology.is_none());
        assert!(!report.entries[0].on_complex);
        assert!(report.entries[2].on_complex);
    }

    #[test]
    fn finite_space_homology_examples() {
        assert_eq!(finite_space_homology(&antichain(4), CAP).unwrap().bettis(), [4]);
        let perp = build_perp_poset(&["0/1,0/1,0/1".parse().unwrap()], 2).unwrap();
        assert_eq!(finite_space_homology(&perp.mirrored.poset, CAP).unwrap().bettis(), [1, 1]);
    }

    #[test]
    fn core_reduction_preserves_homology() {
        for (n, k) in [(2, 2), (3, 1), (3, 2), (2, 3)] {
            let p = build_tphi_power(n, k, 1000).unwrap().poset;
            assert_eq!(core_reduced_homology(&p, CAP, true).unwrap(), homology_groups(&order_complex(&p, CAP).unwrap(), true));
        }
    }

    #[test]
    fn cw_reports() {
        assert_eq!(cw_type_report(&chain(), CAP).verdict(), CwVerdict::CwType);
        let r = cw_type_report(&antichain(3), CAP);
        assert_eq!(r.components.len(), 3);
        assert_eq!(r.verdict(), CwVerdict::CwType);
        let p = build_tphi_power(2, 2, 100).unwrap().poset;
        let r = cw_type_report(&p, CAP);
        assert_eq!(r.verdict(), CwVerdict::Obstructed);
        assert_eq!(r.lines().last().unwrap(), "verdict: obstructed");
    }
}
