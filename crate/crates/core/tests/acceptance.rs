//! Acceptance suite. Runs every criterion with exact integer arithmetic and
//! prints one PASS/FAIL line each; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use bandprime::corpus::{bundled, CorpusEntry};
use bandprime::diagram::{checkerboard, classify_special, orient, parse_pd, Color, Diagram};
use bandprime::hfk::thin_hfk;
use bandprime::invariants::{alexander_from_crossings, alexander_from_seifert, bundle, goeritz_matrix, seifert_matrix_special, LaurentPolynomial};
use bandprime::lattice::{indecomposable_summands, isometric, verify_isometry, GramForm, DEFAULT_RANK_CAP};
use bandprime::obstruct::{band_prime_certificate, minimality_evidence, CertificateVerdict, MinimalityVerdict};
use bandprime::tait::{blocks, flow_lattice};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

struct Knot {
    entry: CorpusEntry,
    diagram: Diagram,
    special_alternating: bool,
}

fn corpus() -> Vec<Knot> {
    bundled()
        .into_iter()
        .map(|entry| {
            let diagram = parse_pd(&entry.pd).unwrap_or_else(|e| panic!("{}: {e}", entry.name));
            let special_alternating = classify_special(&orient(&diagram)).unwrap().is_special_alternating();
            Knot { entry, diagram, special_alternating }
        })
        .collect()
}

fn reference_special_list() -> BTreeSet<&'static str> {
    include_str!("data/special_alternating.txt").split_whitespace().collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn isometry_instances(knots: &[Knot]) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let got: BTreeSet<&str> = knots.iter().filter(|k| k.special_alternating).map(|k| k.entry.name.as_str()).collect();
    ensure(got == reference_special_list(), || format!("special alternating set {got:?} differs from the reference list"))?;
    for k in knots.iter().filter(|k| k.special_alternating) {
        let od = orient(&k.diagram);
        let color = classify_special(&od).unwrap().orientable_color.unwrap();
        let flow = flow_lattice(&bandprime::tait::tait_graph(&checkerboard(&k.diagram), color));
        let v = seifert_matrix_special(&od).map_err(|e| format!("{}: {e}", k.entry.name))?;
        let sym = GramForm::new(v.add(&v.transpose())).unwrap();
        let signed = [sym.clone(), sym.neg()]
            .into_iter()
            .find(|q| q.rank() == 0 || q.definiteness() == bandprime::lattice::Definiteness::PositiveDefinite)
            .ok_or_else(|| format!("{}: symmetrized Seifert form is not definite", k.entry.name))?;
        let u = isometric(&signed, &flow, DEFAULT_RANK_CAP)
            .map_err(|e| format!("{}: {e}", k.entry.name))?
            .ok_or_else(|| format!("{}: no isometry", k.entry.name))?;
        ensure(verify_isometry(&signed, &flow, &u), || format!("{}: witness does not verify", k.entry.name))?;
        checked += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1} s"))?;
    Ok(format!("{checked} special alternating diagrams, witnesses verified, {secs:.2} s"))
}

fn summands_match_blocks() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b10c);
    let mut separable = 0;
    const GRAPHS: usize = 1500;
    for i in 0..GRAPHS {
        let g = common::random_planar_multigraph(&mut rng, 10);
        ensure(g.is_connected() && g.edge_count() <= 10, || format!("graph {i}: generator produced {g:?}"))?;
        let flow = flow_lattice(&g);
        let u = common::random_unimodular(&mut rng, flow.rank());
        let scrambled = GramForm::new(flow.transform(&u).matrix().clone()).unwrap();
        let summands = if scrambled.rank() == 0 {
            0
        } else {
            let d = indecomposable_summands(&scrambled, DEFAULT_RANK_CAP).map_err(|e| format!("graph {i}: {e}"))?;
            ensure(d.verify(&scrambled), || format!("graph {i}: decomposition witness fails"))?;
            d.summands.len()
        };
        let b = blocks(&g);
        ensure(summands == b.cyclic_block_count(), || {
            format!("graph {i} {:?}: {summands} summands vs {} cyclic blocks", g.edges, b.cyclic_block_count())
        })?;
        separable += usize::from(b.cyclic_block_count() > 1);
    }
    Ok(format!("{GRAPHS} graphs (≤ 10 edges), {separable} with several cyclic blocks, all counts equal"))
}

fn special_alternating_identity(knots: &[Knot]) -> Outcome {
    let mut special = 0;
    let mut nonspecial = 0;
    for k in knots {
        let od = orient(&k.diagram);
        let s = classify_special(&od).unwrap();
        let b = bundle(&od).map_err(|e| format!("{}: {e}", k.entry.name))?;
        let identity = b.signature.abs() == 2 * b.genus && 2 * b.genus == b.span();
        if s.is_special_alternating() {
            ensure(identity, || format!("{}: |σ| = {}, 2g = {}, span = {}", k.entry.name, b.signature.abs(), 2 * b.genus, b.span()))?;
            special += 1;
        } else if s.is_alternating && b.signature.abs() != 2 * b.genus {
            ensure(!identity, || format!("{}: identity holds on a non-special diagram", k.entry.name))?;
            nonspecial += 1;
        }
    }
    let fig8 = bundle(&orient(&knots.iter().find(|k| k.entry.name == "4_1").unwrap().diagram)).unwrap();
    ensure((fig8.signature, 2 * fig8.genus) == (0, 2), || "figure-eight: expected σ = 0, 2g = 2".into())?;
    Ok(format!("holds on {special} special alternating, fails on {nonspecial} non-special alternating (4_1: 0 ≠ 2)"))
}

fn thin_hfk_consistency(knots: &[Knot]) -> Outcome {
    let mut n = 0;
    for k in knots {
        let od = orient(&k.diagram);
        let b = bundle(&od).map_err(|e| format!("{}: {e}", k.entry.name))?;
        if !b.alternating {
            continue;
        }
        let h = thin_hfk(&b.alexander, b.signature);
        let det = k.entry.det.ok_or_else(|| format!("{}: no expected det", k.entry.name))?;
        let delta: LaurentPolynomial = k.entry.alexander.as_deref().unwrap_or("").parse().map_err(|e| format!("{}: {e}", k.entry.name))?;
        ensure(h.is_thin(), || format!("{}: not thin", k.entry.name))?;
        ensure(h.total_rank() == det, || format!("{}: total rank {} ≠ det {det}", k.entry.name, h.total_rank()))?;
        ensure(h.euler_characteristic().as_ref() == Some(&delta), || {
            format!("{}: Euler characteristic {:?} ≠ Δ {delta}", k.entry.name, h.euler_characteristic())
        })?;
        n += 1;
    }
    Ok(format!("{n} alternating knots: rank = det and χ = Δ against the reference values"))
}

fn band_prime_certification(knots: &[Knot]) -> Outcome {
    let mut n = 0;
    for k in knots.iter().filter(|k| k.special_alternating) {
        let r = band_prime_certificate(&orient(&k.diagram)).map_err(|e| format!("{}: {e}", k.entry.name))?;
        ensure(r.verdict == CertificateVerdict::BandPrimeCertified, || format!("{}: {:?} {:?}", k.entry.name, r.verdict, r.notes))?;
        n += 1;
    }
    let granny = knots.iter().find(|k| k.entry.name == "3_1#3_1").unwrap();
    let r = band_prime_certificate(&orient(&granny.diagram)).unwrap();
    let a2 = GramForm::from_rows(&[vec![2, 1], vec![1, 2]]).unwrap();
    ensure(r.factors.len() == 2, || format!("granny: {} factors", r.factors.len()))?;
    for f in &r.factors {
        ensure(f.signature == -2, || format!("granny factor σ = {}", f.signature))?;
        let iso = isometric(&f.flow_lattice, &a2, DEFAULT_RANK_CAP).map_err(|e| e.to_string())?;
        ensure(iso.is_some(), || format!("granny factor lattice {} is not A2", f.flow_lattice.matrix()))?;
    }
    Ok(format!("{n}/{n} special alternating diagrams certified; granny: 2 factors ≅ [[2,1],[1,2]], σ = -2 each"))
}

fn minimality_dispatch(knots: &[Knot]) -> Outcome {
    let get = |name: &str| &knots.iter().find(|k| k.entry.name == name).unwrap().diagram;
    let t = minimality_evidence(&orient(get("3_1")), false).unwrap();
    ensure(t.verdict == MinimalityVerdict::MinimalCertified && t.conditions.fibered == bandprime::invariants::Fibered::Yes, || {
        format!("trefoil: {:?}", t.verdict)
    })?;
    let f = minimality_evidence(&orient(get("5_2")), false).unwrap();
    ensure(f.verdict == MinimalityVerdict::MinimalCertified && f.conditions.prime_power_leading, || format!("5_2: {:?}", f.verdict))?;
    ensure(f.invariant_bundle.leading_coeff == 2, || "5_2 leading coefficient".into())?;
    let mut others = Vec::new();
    for k in knots.iter().filter(|k| k.special_alternating) {
        let e = minimality_evidence(&orient(&k.diagram), false).unwrap();
        let lead = e.invariant_bundle.leading_coeff.abs();
        if lead != 1 && !bandprime::invariants::is_prime_power(lead as u64) {
            ensure(e.verdict == MinimalityVerdict::EvidenceOnly, || format!("{}: {:?}", k.entry.name, e.verdict))?;
            others.push(format!("{} (a = {lead})", k.entry.name));
        }
    }
    ensure(!others.is_empty(), || "no special alternating knot with composite leading coefficient".into())?;
    Ok(format!("3_1 fibered, 5_2 prime power; evidence_only: {}", others.join(", ")))
}

fn oracle_equivalence(knots: &[Knot]) -> Outcome {
    let mut backends = 0;
    for k in knots.iter().filter(|k| k.special_alternating) {
        let od = orient(&k.diagram);
        let a = alexander_from_crossings(&od).map_err(|e| e.to_string())?;
        let s = alexander_from_seifert(&seifert_matrix_special(&od).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(a == s, || format!("{}: {a} vs {s}", k.entry.name))?;
        backends += 1;
    }
    for k in knots {
        let delta = alexander_from_crossings(&orient(&k.diagram)).map_err(|e| e.to_string())?;
        let cb = checkerboard(&k.diagram);
        for color in [Color::Black, Color::White] {
            let det = goeritz_matrix(&cb, color).det();
            ensure(det.magnitude() == BigInt::from(delta.eval_at_minus_one()).magnitude(), || {
                format!("{} {color}: Goeritz det {det} vs Δ(-1) = {}", k.entry.name, delta.eval_at_minus_one())
            })?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ee5);
    let mut graphs = 0;
    for i in 0..600 {
        let g = common::random_planar_multigraph(&mut rng, 8);
        let trees = common::spanning_trees_brute_force(&g);
        let det = flow_lattice(&g).det();
        ensure(det == BigInt::from(trees), || format!("graph {i} {:?}: det {det} vs {trees} trees", g.edges))?;
        graphs += 1;
    }
    Ok(format!(
        "backends agree on {backends}; Goeritz det = |Δ(-1)| on {} diagrams × 2 colors; Kirchhoff on {graphs} graphs",
        knots.len()
    ))
}

fn mirror_behavior(knots: &[Knot]) -> Outcome {
    for k in knots {
        let (od, om) = (orient(&k.diagram), orient(&k.diagram.mirror()));
        let (b, m) = (bundle(&od).map_err(|e| e.to_string())?, bundle(&om).map_err(|e| e.to_string())?);
        ensure(m.signature == -b.signature, || format!("{}: σ {} → {}", k.entry.name, b.signature, m.signature))?;
        ensure(m.determinant == b.determinant && m.span() == b.span() && m.genus == b.genus, || {
            format!("{}: det/span/genus changed under mirroring", k.entry.name)
        })?;
        let (v, w) = (band_prime_certificate(&od).unwrap().verdict, band_prime_certificate(&om).unwrap().verdict);
        ensure(v == w, || format!("{}: verdict {v:?} → {w:?}", k.entry.name))?;
    }
    Ok(format!("{} diagrams: σ negated; det, span, genus, verdict preserved", knots.len()))
}

fn main() {
    let start = Instant::now();
    let knots = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("Seifert form and flow lattice isometry", Box::new(|| isometry_instances(&knots))),
        ("Summands equal cyclic blocks", Box::new(summands_match_blocks)),
        ("special alternating identity", Box::new(|| special_alternating_identity(&knots))),
        ("thin HFK consistency", Box::new(|| thin_hfk_consistency(&knots))),
        ("band prime certification", Box::new(|| band_prime_certification(&knots))),
        ("minimality dispatch", Box::new(|| minimality_dispatch(&knots))),
        ("oracle equivalence", Box::new(|| oracle_equivalence(&knots))),
        ("mirror behavior", Box::new(|| mirror_behavior(&knots))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.2} s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
