//! Knot lists with optional expected invariants.
//!
//! CSV files have a header row naming at least `name` and `pd`; the columns
//! `sigma`, `det`, `alexander` and `genus` are optional and may be left
//! blank. JSON files hold an array of objects with the same keys.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{InvariantBundle, LaurentPolynomial};

const BUNDLED: &str = include_str!("../data/knots.csv");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    #[serde(default)]
    pub pd: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub det: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
}

/// The knots shipped with the crate: prime knots through nine crossings and
/// a few connected sums, with expected values.
pub fn bundled() -> Vec<CorpusEntry> {
    parse_csv(BUNDLED).expect("bundled corpus parses")
}

pub fn parse_csv(text: &str) -> Result<Vec<CorpusEntry>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| Error::Corpus(e.to_string()))?.clone();
    for required in ["name", "pd"] {
        if !headers.iter().any(|h| h == required) {
            return Err(Error::Corpus(format!("missing column {required:?}")));
        }
    }
    let mut out = Vec::new();
    for (i, row) in reader.deserialize::<CorpusEntry>().enumerate() {
        let mut e = row.map_err(|e| Error::Corpus(format!("row {}: {e}", i + 1)))?;
        if e.alexander.as_deref() == Some("") {
            e.alexander = None;
        }
        out.push(e);
    }
    Ok(out)
}

pub fn parse_json(text: &str) -> Result<Vec<CorpusEntry>> {
    serde_json::from_str(text).map_err(|e| Error::Corpus(e.to_string()))
}

/// Reads a corpus file, choosing the format by the `.json` extension.
pub fn load(path: &Path) -> Result<Vec<CorpusEntry>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
    if path.extension().is_some_and(|x| x.eq_ignore_ascii_case("json")) {
        parse_json(&text)
    } else {
        parse_csv(&text)
    }
}

impl CorpusEntry {
    /// Expected values that disagree with `b`.
    ///
    /// The genus column holds the knot genus. It must match exactly for
    /// alternating diagrams; otherwise it must lie between `span(Δ)/2` and
    /// the genus of the Seifert-algorithm surface.
    pub fn mismatches(&self, b: &InvariantBundle) -> Result<Vec<String>> {
        let mut out = Vec::new();
        if let Some(s) = self.sigma {
            if s != b.signature {
                out.push(format!("sigma: expected {s}, computed {}", b.signature));
            }
        }
        if let Some(d) = self.det {
            if d != b.determinant {
                out.push(format!("det: expected {d}, computed {}", b.determinant));
            }
        }
        if let Some(text) = &self.alexander {
            let expected: LaurentPolynomial = text.parse()?;
            if expected != b.alexander {
                out.push(format!("alexander: expected {expected}, computed {}", b.alexander));
            }
        }
        if let Some(g) = self.genus {
            let ok = if b.alternating { g == b.genus } else { b.genus_lower_bound() <= g && g <= b.genus };
            if !ok {
                out.push(format!("genus: expected {g}, computed {} (lower bound {})", b.genus, b.genus_lower_bound()));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_corpus_loads() {
        let c = bundled();
        assert!(c.len() > 80);
        let trefoil = c.iter().find(|e| e.name == "3_1").unwrap();
        assert_eq!((trefoil.sigma, trefoil.det, trefoil.genus), (Some(-2), Some(3), Some(1)));
        let unknot = c.iter().find(|e| e.name == "0_1").unwrap();
        assert_eq!(unknot.pd, "");
        let nonalt = c.iter().find(|e| e.name == "8_19").unwrap();
        assert_eq!(nonalt.sigma, None);
    }

    #[test]
    fn optional_columns() {
        let c = parse_csv("name,pd\nk,\"X(1,2,2,1)\"\n").unwrap();
        assert_eq!(c[0].pd, "X(1,2,2,1)");
        assert_eq!(c[0].alexander, None);
        assert!(parse_csv("").unwrap().is_empty());
        assert!(matches!(parse_csv("name,sigma\nk,1\n"), Err(Error::Corpus(_))));
        assert!(matches!(parse_csv("name,pd,sigma\nk,,x\n"), Err(Error::Corpus(_))));
    }

    #[test]
    fn json_format() {
        let c = parse_json(r#"[{"name": "u", "pd": "", "det": 1}, {"name": "k", "pd": "X(1,2,2,1)"}]"#).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].det, Some(1));
        assert!(parse_json("[]").unwrap().is_empty());
        assert!(parse_json("{").is_err());
    }
}
