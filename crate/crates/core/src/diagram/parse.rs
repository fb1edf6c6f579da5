//! PD text input. The grammar is documented in `docs/pd-syntax.md`.

use super::Diagram;
use crate::error::{Error, Result};

/// Parses either the token form `X(1,5,2,4) X(3,1,4,6) ...` (brackets
/// `X[...]` are also accepted) or a JSON array of quadruples
/// `[[1,5,2,4],[3,1,4,6],...]`. Empty input is the unknot.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let trimmed = text.trim_start();
    let crossings = if trimmed.starts_with('[') {
        parse_json(text)?
    } else {
        Cursor { bytes: text.as_bytes(), at: 0 }.crossings()?
    };
    Diagram::from_crossings(crossings)
}

fn parse_json(text: &str) -> Result<Vec<[u32; 4]>> {
    let raw: Vec<Vec<u64>> = serde_json::from_str(text).map_err(|e| Error::Syntax {
        offset: byte_offset(text, e.line(), e.column()),
        message: e.to_string(),
    })?;
    raw.into_iter()
        .map(|q| {
            let q: [u64; 4] = q.try_into().map_err(|q: Vec<u64>| Error::Syntax {
                offset: 0,
                message: format!("crossing has {} entries, expected 4", q.len()),
            })?;
            let mut out = [0u32; 4];
            for (o, v) in out.iter_mut().zip(q) {
                *o = label(v, 0)?;
            }
            Ok(out)
        })
        .collect()
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let before: usize = text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    before + column.saturating_sub(1)
}

fn label(v: u64, offset: usize) -> Result<u32> {
    match u32::try_from(v) {
        Ok(l) if l > 0 => Ok(l),
        _ => Err(Error::Syntax { offset, message: format!("arc label {v} is not a positive 32-bit integer") }),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl Cursor<'_> {
    fn crossings(&mut self) -> Result<Vec<[u32; 4]>> {
        let mut out = Vec::new();
        loop {
            self.skip_separators();
            match self.peek() {
                None => return Ok(out),
                Some(b'X') | Some(b'x') => {
                    self.at += 1;
                    out.push(self.crossing()?);
                }
                Some(c) => return Err(self.error(format!("expected 'X', found {:?}", c as char))),
            }
        }
    }

    fn crossing(&mut self) -> Result<[u32; 4]> {
        self.skip_ws();
        let close = match self.peek() {
            Some(b'(') => b')',
            Some(b'[') => b']',
            _ => return Err(self.error("expected '(' or '[' after 'X'".into())),
        };
        self.at += 1;
        let mut labels = [0u32; 4];
        for (i, slot) in labels.iter_mut().enumerate() {
            self.skip_ws();
            *slot = self.number()?;
            self.skip_ws();
            let want = if i == 3 { close } else { b',' };
            match self.peek() {
                Some(c) if c == want => self.at += 1,
                Some(c) if c == close => {
                    return Err(self.error(format!("crossing has {} entries, expected 4", i + 1)))
                }
                _ => return Err(self.error(format!("expected {:?}", want as char))),
            }
        }
        Ok(labels)
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.at;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.at += 1;
        }
        if start == self.at {
            return Err(self.error("expected an arc label".into()));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.at]).expect("ascii digits");
        let value = digits.parse::<u64>().unwrap_or(u64::MAX);
        label(value, start)
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.at).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.at += 1;
        }
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace() || c == b',') {
            self.at += 1;
        }
    }

    fn error(&self, message: String) -> Error {
        Error::Syntax { offset: self.at, message }
    }
}
