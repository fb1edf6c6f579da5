//! Certificates and obstructions built on the invariants and lattices.

mod certificate;
mod pair;

pub use certificate::{
    band_prime_certificate, band_prime_certificate_with_cap, diagram_hash, CertificateReport, CertificateVerdict,
    FactorRecord, TaitSummary,
};
pub use pair::{concordance_pair_obstructions, Finding};

use serde::Serialize;

use crate::diagram::{classify_special, OrientedDiagram, SpecialityReport};
use crate::error::Result;
use crate::hfk::{thin_hfk, HfkTable};
use crate::invariants::{bundle, Fibered, InvariantBundle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Anisotropy {
    pub holds: bool,
    pub sigma: i64,
    pub span: i64,
}

/// `|σ| = span(Δ)`: the signature of the rational Milnor form fills its
/// rank, so the form is definite.
pub fn anisotropy_check(b: &InvariantBundle) -> Anisotropy {
    Anisotropy { holds: b.signature.abs() == b.span(), sigma: b.signature, span: b.span() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityConditions {
    pub fibered: Fibered,
    pub prime_power_leading: bool,
    pub two_bridge_asserted: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimalityVerdict {
    MinimalCertified,
    EvidenceOnly,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityEvidence {
    pub anisotropy: Anisotropy,
    pub conditions: MinimalityConditions,
    pub verdict: MinimalityVerdict,
    pub invariant_bundle: InvariantBundle,
    /// Present for alternating diagrams, whose knots are thin.
    pub hfk: Option<HfkTable>,
}

/// The invariants compared in pair queries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotProfile {
    pub speciality: SpecialityReport,
    pub bundle: InvariantBundle,
    pub hfk: Option<HfkTable>,
}

pub fn profile(od: &OrientedDiagram) -> Result<KnotProfile> {
    let speciality = classify_special(od)?;
    let bundle = bundle(od)?;
    let hfk = bundle.alternating.then(|| thin_hfk(&bundle.alexander, bundle.signature));
    Ok(KnotProfile { speciality, bundle, hfk })
}

/// Ribbon-concordance minimality for special alternating knots that are
/// fibered, have prime-power leading coefficient, or are asserted two-bridge.
/// Diagrams that are not special alternating get `not_applicable`; special
/// alternating ones meeting none of the conditions get `evidence_only`.
pub fn minimality_evidence(od: &OrientedDiagram, assert_two_bridge: bool) -> Result<MinimalityEvidence> {
    let KnotProfile { speciality, bundle, hfk } = profile(od)?;
    let conditions = MinimalityConditions {
        fibered: bundle.fibered_alternating,
        prime_power_leading: bundle.leading_coeff_prime_power,
        two_bridge_asserted: assert_two_bridge,
    };
    let verdict = if !speciality.is_special_alternating() {
        MinimalityVerdict::NotApplicable
    } else if conditions.fibered == Fibered::Yes || conditions.prime_power_leading || assert_two_bridge {
        MinimalityVerdict::MinimalCertified
    } else {
        MinimalityVerdict::EvidenceOnly
    };
    Ok(MinimalityEvidence { anisotropy: anisotropy_check(&bundle), conditions, verdict, invariant_bundle: bundle, hfk })
}
