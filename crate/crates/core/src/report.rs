//! Versioned reports for the command line.

use std::fmt;

use serde::Serialize;

use crate::diagram::{orient, Diagram, SpecialityReport};
use crate::error::Result;
use crate::hfk::HfkTable;
use crate::invariants::InvariantBundle;
use crate::lattice::DEFAULT_RANK_CAP;
use crate::obstruct::{
    band_prime_certificate_with_cap, concordance_pair_obstructions, diagram_hash, minimality_evidence, profile,
    CertificateReport, Finding, KnotProfile, MinimalityEvidence,
};

pub const ANALYSIS_SCHEMA: &str = "bandprime.analysis/1";
pub const PAIR_SCHEMA: &str = "bandprime.pair/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub rank_cap: usize,
    pub assert_two_bridge: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { rank_cap: DEFAULT_RANK_CAP, assert_two_bridge: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub pd: String,
    pub diagram_hash: String,
    pub crossings: usize,
    pub warnings: Vec<String>,
    pub speciality: SpecialityReport,
    pub invariants: InvariantBundle,
    pub hfk: Option<HfkTable>,
    pub certificate: CertificateReport,
    pub minimality: MinimalityEvidence,
}

pub fn analyze(d: &Diagram, opts: AnalyzeOptions) -> Result<AnalysisReport> {
    let od = orient(d);
    let KnotProfile { speciality, bundle, hfk } = profile(&od)?;
    let certificate = band_prime_certificate_with_cap(&od, opts.rank_cap)?;
    let minimality = minimality_evidence(&od, opts.assert_two_bridge)?;
    let warnings = d
        .nugatory_crossings()
        .into_iter()
        .map(|c| format!("crossing {c} ({}) is nugatory", fmt_crossing(d.crossings()[c])))
        .collect();
    Ok(AnalysisReport {
        schema: ANALYSIS_SCHEMA,
        pd: d.to_pd_string(),
        diagram_hash: diagram_hash(d),
        crossings: d.crossing_count(),
        warnings,
        speciality,
        invariants: bundle,
        hfk,
        certificate,
        minimality,
    })
}

fn fmt_crossing(x: [u32; 4]) -> String {
    format!("X({},{},{},{})", x[0], x[1], x[2], x[3])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairSide {
    pub pd: String,
    pub profile: KnotProfile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub schema: &'static str,
    pub lower: PairSide,
    pub upper: PairSide,
    pub upper_is_special_alternating: bool,
    pub findings: Vec<Finding>,
    pub obstructed: bool,
}

pub fn pair(lower: &Diagram, upper: &Diagram) -> Result<PairReport> {
    let l = profile(&orient(lower))?;
    let u = profile(&orient(upper))?;
    let special = u.speciality.is_special_alternating();
    let findings = concordance_pair_obstructions(&l, &u, special);
    Ok(PairReport {
        schema: PAIR_SCHEMA,
        lower: PairSide { pd: lower.to_pd_string(), profile: l },
        upper: PairSide { pd: upper.to_pd_string(), profile: u },
        upper_is_special_alternating: special,
        obstructed: !findings.is_empty(),
        findings,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn snake<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(_) => String::from("?"),
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = if self.pd.is_empty() { "(unknot)" } else { &self.pd };
        writeln!(f, "diagram      {pd}")?;
        writeln!(f, "crossings    {}", self.crossings)?;
        for w in &self.warnings {
            writeln!(f, "warning      {w}")?;
        }
        let s = &self.speciality;
        writeln!(f, "alternating  {}", yes_no(s.is_alternating))?;
        write!(f, "special      {}", yes_no(s.is_special))?;
        if let Some(c) = s.orientable_color {
            write!(f, " (orientable color {c})")?;
        }
        writeln!(f)?;
        let b = &self.invariants;
        writeln!(f, "signature    {}", b.signature)?;
        writeln!(f, "determinant  {}", b.determinant)?;
        writeln!(f, "alexander    {}", b.alexander)?;
        writeln!(f, "genus        {}{}", b.genus, if b.alternating { "" } else { " (upper bound)" })?;
        writeln!(f, "fibered      {}", snake(&b.fibered_alternating))?;
        if let Some(h) = &self.hfk {
            let cells: Vec<String> = h.entries.iter().map(|e| format!("{}@({},{})", e.rank, e.alexander, e.maslov)).collect();
            writeln!(f, "hfk          {}  (δ = {}, total {})", cells.join(" "), h.delta_grading, h.total_rank())?;
        }
        let c = &self.certificate;
        writeln!(f, "band prime   {}", snake(&c.verdict))?;
        for (i, factor) in c.factors.iter().enumerate() {
            let gram = factor.flow_lattice.matrix();
            writeln!(
                f,
                "  factor {i}   {}  flow lattice {gram}  σ = {}{}",
                if factor.pd.is_empty() { "(unknot)" } else { &factor.pd },
                factor.signature,
                if factor.trivial { "  trivial" } else { "" }
            )?;
        }
        for n in &c.notes {
            writeln!(f, "  note       {n}")?;
        }
        let m = &self.minimality;
        writeln!(f, "anisotropy   {} (|σ| = {}, span = {})", yes_no(m.anisotropy.holds), m.anisotropy.sigma.abs(), m.anisotropy.span)?;
        write!(f, "minimality   {}", snake(&m.verdict))
    }
}

impl fmt::Display for PairReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |pd: &str| if pd.is_empty() { "(unknot)".to_string() } else { pd.to_string() };
        writeln!(f, "lower  {}", show(&self.lower.pd))?;
        writeln!(f, "upper  {}", show(&self.upper.pd))?;
        if self.findings.is_empty() {
            return write!(f, "no obstruction found");
        }
        writeln!(f, "obstructed:")?;
        for (i, finding) in self.findings.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "  {finding}")?;
        }
        Ok(())
    }
}
