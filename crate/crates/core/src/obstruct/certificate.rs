use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::diagram::{checkerboard, classify_special, connected_sum_factors, orient, Color, Diagram, OrientedDiagram, SpecialityReport};
use crate::error::{Error, Result};
use crate::invariants::{gl_signature, seifert_matrix_special};
use crate::lattice::{indecomposable_summands, isometric, Decomposition, Definiteness, GramForm, Provenance, DEFAULT_RANK_CAP};
use crate::matrix::IntMatrix;
use crate::tait::{blocks, flow_lattice, tait_graph, BlockDecomposition, TaitGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateVerdict {
    BandPrimeCertified,
    NotApplicable,
    Inconsistency,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TaitSummary {
    pub vertices: usize,
    pub edges: usize,
    pub uniform_sign: Option<i8>,
    pub cycle_rank: usize,
    pub blocks: usize,
    pub cyclic_blocks: usize,
    pub articulation_vertices: Vec<usize>,
}

impl TaitSummary {
    fn new(g: &TaitGraph, b: &BlockDecomposition) -> Self {
        TaitSummary {
            vertices: g.vertices,
            edges: g.edge_count(),
            uniform_sign: g.uniform_sign(),
            cycle_rank: g.cycle_rank(),
            blocks: b.blocks.len(),
            cyclic_blocks: b.cyclic_block_count(),
            articulation_vertices: b.articulation_vertices.clone(),
        }
    }
}

/// Everything needed to re-check one prime factor by hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorRecord {
    pub pd: String,
    /// A factor whose surface is a disk: a nugatory piece of the diagram.
    pub trivial: bool,
    pub tait_color: Color,
    pub tait: TaitSummary,
    pub tait_graph: TaitGraph,
    pub flow_lattice: GramForm,
    /// Definiteness of the symmetrized Seifert form.
    pub definiteness: Definiteness,
    /// `±1` such that the symmetrized Seifert form is this sign times a
    /// positive definite form; absent for trivial factors.
    pub geometric_sign: Option<i8>,
    pub seifert_symmetrized: GramForm,
    /// `U` with `Uᵀ (sign · (V + Vᵀ)) U` equal to the flow lattice Gram.
    pub isometry_witness: Option<IntMatrix>,
    pub decomposition: Decomposition,
    pub indecomposable: bool,
    pub signature: i64,
    pub lattice_signature: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    /// SHA-256 of the canonical PD string.
    pub diagram_hash: String,
    pub speciality: SpecialityReport,
    pub factors: Vec<FactorRecord>,
    /// Summand count of the whole diagram's flow lattice, absent when not
    /// applicable.
    pub full_lattice_summands: Option<usize>,
    pub verdict: CertificateVerdict,
    pub notes: Vec<String>,
}

pub fn diagram_hash(d: &Diagram) -> String {
    Sha256::digest(d.to_pd_string().as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn band_prime_certificate(od: &OrientedDiagram) -> Result<CertificateReport> {
    band_prime_certificate_with_cap(od, DEFAULT_RANK_CAP)
}

/// Runs the band-primeness pipeline: split into connected-sum factors, then
/// for each factor check that the orientable surface's form is definite,
/// isometric up to sign to the Tait flow lattice, indecomposable, and has
/// nonzero signature.
///
/// Failed checks on a special alternating input produce the
/// `inconsistency` verdict with notes; lattices above `cap` are an error.
pub fn band_prime_certificate_with_cap(od: &OrientedDiagram, cap: usize) -> Result<CertificateReport> {
    let d = od.diagram();
    let speciality = classify_special(od)?;
    let mut report = CertificateReport {
        diagram_hash: diagram_hash(d),
        speciality,
        factors: Vec::new(),
        full_lattice_summands: None,
        verdict: CertificateVerdict::NotApplicable,
        notes: Vec::new(),
    };
    if !speciality.is_special_alternating() {
        let why = match (speciality.is_alternating, speciality.is_special) {
            (false, false) => "diagram is neither alternating nor special",
            (false, true) => "diagram is not alternating",
            _ => "diagram is not special",
        };
        report.notes.push(why.to_string());
        return Ok(report);
    }

    let mut notes = Vec::new();
    for (i, f) in connected_sum_factors(d)?.into_iter().enumerate() {
        let record = certify_factor(&f, cap, &mut |msg| notes.push(format!("factor {i}: {msg}")))?;
        report.factors.push(record);
    }

    let color = speciality.orientable_color.expect("special diagrams have an orientable color");
    let g = tait_graph(&checkerboard(d), color);
    let flow = flow_lattice(&g);
    let summands = summand_count(&flow, cap)?;
    let cyclic = blocks(&g).cyclic_block_count();
    let nontrivial = report.factors.iter().filter(|f| !f.trivial).count();
    if summands != cyclic || cyclic != nontrivial {
        notes.push(format!(
            "flow lattice has {summands} indecomposable summands, the Tait graph {cyclic} cyclic blocks, the diagram {nontrivial} nontrivial factors"
        ));
    }
    report.full_lattice_summands = Some(summands);

    if notes.is_empty() {
        report.verdict = CertificateVerdict::BandPrimeCertified;
        if nontrivial == 0 {
            report.notes.push("diagram of the unknot; no nontrivial factors".to_string());
        }
    } else {
        report.verdict = CertificateVerdict::Inconsistency;
        report.notes = notes;
    }
    Ok(report)
}

fn summand_count(flow: &GramForm, cap: usize) -> Result<usize> {
    if flow.rank() == 0 {
        return Ok(0);
    }
    Ok(indecomposable_summands(flow, cap)?.summands.len())
}

fn certify_factor(f: &Diagram, cap: usize, fail: &mut dyn FnMut(String)) -> Result<FactorRecord> {
    let od = orient(f);
    let speciality = classify_special(&od)?;
    let Some(color) = speciality.orientable_color.filter(|_| speciality.is_alternating) else {
        return Err(Error::Inconsistency(format!("factor {f} of a special alternating diagram is not special alternating")));
    };
    let g = tait_graph(&checkerboard(f), color);
    let b = blocks(&g);
    let flow = flow_lattice(&g);
    if flow.rank() > cap {
        return Err(Error::RankCap { rank: flow.rank(), cap });
    }
    let v = seifert_matrix_special(&od)?;
    let sym = GramForm::with_provenance(v.add(&v.transpose()), Provenance::SeifertSymmetrized)
        .expect("V + Vᵀ is symmetric");
    let signature = gl_signature(&od)?;
    let definiteness = sym.definiteness();

    let mut record = FactorRecord {
        pd: f.to_pd_string(),
        trivial: flow.rank() == 0,
        tait_color: color,
        tait: TaitSummary::new(&g, &b),
        tait_graph: g,
        flow_lattice: flow.clone(),
        definiteness,
        geometric_sign: None,
        seifert_symmetrized: sym.clone(),
        isometry_witness: None,
        decomposition: Decomposition { summands: Vec::new(), witness: IntMatrix::zeros(0, 0) },
        indecomposable: false,
        signature,
        lattice_signature: 0,
    };
    if sym.rank() != flow.rank() {
        fail(format!("Seifert form has rank {}, flow lattice rank {}", sym.rank(), flow.rank()));
        return Ok(record);
    }
    if record.trivial {
        if signature != 0 {
            fail(format!("trivial factor has signature {signature}"));
        }
        return Ok(record);
    }

    let sign: i8 = match definiteness {
        Definiteness::PositiveDefinite => 1,
        Definiteness::NegativeDefinite => -1,
        other => {
            fail(format!("symmetrized Seifert form is {other:?}"));
            return Ok(record);
        }
    };
    record.geometric_sign = Some(sign);
    record.lattice_signature = sign as i64 * flow.rank() as i64;
    let positive = if sign < 0 { sym.neg() } else { sym };
    record.isometry_witness = isometric(&positive, &flow, cap)?;
    if record.isometry_witness.is_none() {
        fail("symmetrized Seifert form is not isometric to the flow lattice".to_string());
    }
    record.decomposition = indecomposable_summands(&flow, cap)?;
    record.indecomposable = record.decomposition.summands.len() == 1;
    if !record.indecomposable {
        fail(format!("flow lattice splits into {} summands", record.decomposition.summands.len()));
    }
    if b.cyclic_block_count() != record.decomposition.summands.len() {
        fail(format!(
            "Tait graph has {} cyclic blocks but the flow lattice {} summands",
            b.cyclic_block_count(),
            record.decomposition.summands.len()
        ));
    }
    if signature != record.lattice_signature {
        fail(format!("signature {signature} differs from lattice signature {}", record.lattice_signature));
    }
    if signature == 0 {
        fail("signature is zero".to_string());
    }
    Ok(record)
}
