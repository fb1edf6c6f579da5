use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use bandprime::corpus::{bundled, load, CorpusEntry};
use bandprime::diagram::parse_pd;
use bandprime::obstruct::CertificateVerdict;
use bandprime::report::{analyze, AnalysisReport, AnalyzeOptions};
use bandprime::Error;
use rayon::prelude::*;
use serde::Serialize;

use crate::{exit_code, fail, print_json, EXIT_INCONSISTENCY, EXIT_OK, EXIT_RANK_CAP};

pub const BATCH_SCHEMA: &str = "bandprime.batch/1";

pub struct BatchArgs {
    pub corpus: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub check: bool,
    pub json: bool,
    pub options: AnalyzeOptions,
}

#[derive(Serialize)]
struct Row {
    name: String,
    /// A certificate verdict, or `failed` / `rank_cap` / `inconsistency`
    /// when analysis stopped with an error.
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    mismatches: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<String>,
}

#[derive(Serialize)]
struct Summary {
    schema: &'static str,
    counts: BTreeMap<String, usize>,
    entries: Vec<Row>,
}

fn status_of(v: CertificateVerdict) -> &'static str {
    match v {
        CertificateVerdict::BandPrimeCertified => "band_prime_certified",
        CertificateVerdict::NotApplicable => "not_applicable",
        CertificateVerdict::Inconsistency => "inconsistency",
    }
}

fn analyze_entry(e: &CorpusEntry, options: AnalyzeOptions, check: bool) -> (Result<AnalysisReport, Error>, Vec<String>) {
    let report = parse_pd(&e.pd).and_then(|d| analyze(&d, options));
    let mismatches = match (&report, check) {
        (Ok(r), true) => e.mismatches(&r.invariants).unwrap_or_else(|err| vec![err.to_string()]),
        _ => Vec::new(),
    };
    (report, mismatches)
}

fn file_name(index: usize, name: &str) -> String {
    let safe: String = name.chars().map(|c| if c.is_ascii_alphanumeric() || "-_.".contains(c) { c } else { '_' }).collect();
    format!("{index:04}-{safe}.json")
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    std::fs::write(path, text)
}

pub fn run(args: BatchArgs) -> u8 {
    let entries = match &args.corpus {
        Some(path) => match load(path) {
            Ok(e) => e,
            Err(e) => return fail(&e),
        },
        None => bundled(),
    };
    if let Some(dir) = &args.out {
        if let Err(e) = std::fs::create_dir_all(dir) {
            eprintln!("error: cannot create {}: {e}", dir.display());
            return crate::EXIT_INPUT;
        }
    }

    let results: Vec<_> = entries.par_iter().map(|e| analyze_entry(e, args.options, args.check)).collect();

    let mut rows = Vec::with_capacity(entries.len());
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for s in ["band_prime_certified", "not_applicable", "inconsistency", "failed", "rank_cap"] {
        counts.insert(s.to_string(), 0);
    }
    let mut inconsistent = false;
    let mut mismatched = 0;
    for (i, (entry, (result, mismatches))) in entries.iter().zip(results).enumerate() {
        let mut row = Row { name: entry.name.clone(), status: String::new(), error: None, mismatches, report: None };
        match result {
            Ok(report) => {
                row.status = status_of(report.certificate.verdict).to_string();
                inconsistent |= report.certificate.verdict == CertificateVerdict::Inconsistency;
                if let Some(dir) = &args.out {
                    let name = file_name(i, &entry.name);
                    if let Err(e) = write_json(&dir.join(&name), &report) {
                        eprintln!("error: cannot write {name}: {e}");
                        return crate::EXIT_INPUT;
                    }
                    row.report = Some(name);
                }
            }
            Err(e) => {
                row.status = match exit_code(&e) {
                    EXIT_INCONSISTENCY => "inconsistency",
                    EXIT_RANK_CAP => "rank_cap",
                    _ => "failed",
                }
                .to_string();
                inconsistent |= row.status == "inconsistency";
                eprintln!("warning: entry {}: {e}", entry.name);
                row.error = Some(e.to_string());
            }
        }
        for m in &row.mismatches {
            eprintln!("mismatch: entry {}: {m}", entry.name);
        }
        mismatched += usize::from(!row.mismatches.is_empty());
        *counts.entry(row.status.clone()).or_default() += 1;
        rows.push(row);
    }
    if args.check {
        counts.insert("mismatched".to_string(), mismatched);
    }

    let summary = Summary { schema: BATCH_SCHEMA, counts, entries: rows };
    if let Some(dir) = &args.out {
        if let Err(e) = write_json(&dir.join("summary.json"), &summary) {
            eprintln!("error: cannot write summary.json: {e}");
            return crate::EXIT_INPUT;
        }
    }
    if args.json {
        print_json(&summary);
    } else {
        println!("entries {:>5}", summary.entries.len());
        for (k, v) in &summary.counts {
            println!("{k:<22}{v:>5}");
        }
    }

    if inconsistent || mismatched > 0 {
        EXIT_INCONSISTENCY
    } else {
        EXIT_OK
    }
}
