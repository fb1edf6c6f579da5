use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer Laurent polynomial in `t`, stored as exponent → nonzero
/// coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::from_terms([(0, c)])
    }

    pub fn monomial(exp: i32, c: i64) -> Self {
        Self::from_terms([(exp, c)])
    }

    /// Sums the given terms; repeated exponents are added together.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            *out.entry(e).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        LaurentPolynomial { terms: out }
    }

    /// Coefficients of `c[0] + c[1] t + c[2] t² + ...`.
    pub fn from_coefficients(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (i as i32, c)))
    }

    pub fn terms(&self) -> &BTreeMap<i32, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Highest minus lowest exponent; zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (hi - lo) as i64,
            _ => 0,
        }
    }

    /// Coefficient of the highest-degree term.
    pub fn leading_coeff(&self) -> i64 {
        self.max_exp().map_or(0, |e| self.coeff(e))
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn eval_at_minus_one(&self) -> i64 {
        self.terms.iter().map(|(&e, &c)| if e.rem_euclid(2) == 0 { c } else { -c }).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&e, &c)| self.coeff(-e) == c)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, &c)| (e, c * k)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms.iter().flat_map(|(&a, &x)| other.terms.iter().map(move |(&b, &y)| (a + b, x * y))),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(other.terms.iter()).map(|(&e, &c)| (e, c)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    /// The symmetric representative up to units `±t^k`, with positive value
    /// at `t = 1`. Fails if the span is odd or the value at 1 is zero.
    pub fn alexander_normalized(&self) -> Result<Self> {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Err(self.polynomial_error("zero polynomial has no normalization"));
        };
        if (lo + hi) % 2 != 0 {
            return Err(self.polynomial_error("odd span cannot be made symmetric"));
        }
        let centered = self.shift(-(lo + hi) / 2);
        match centered.eval_at_one().signum() {
            0 => Err(self.polynomial_error("vanishes at t = 1")),
            1 => Ok(centered),
            _ => Ok(centered.scale(-1)),
        }
    }

    /// Whether `self` divides `other` in `Q[t, t⁻¹]`. For polynomials with
    /// unit content (Alexander polynomials) this is divisibility over the
    /// integers as well.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        if other.is_zero() {
            return true;
        }
        let lo_d = self.min_exp().unwrap();
        let lo_n = other.min_exp().unwrap();
        let d: Vec<Rational64> = dense(&self.shift(-lo_d));
        let mut r: Vec<Rational64> = dense(&other.shift(-lo_n));
        if r.len() < d.len() {
            return false;
        }
        let lead = *d.last().unwrap();
        for top in (d.len() - 1..r.len()).rev() {
            let q = r[top] / lead;
            if q.is_zero() {
                continue;
            }
            let base = top + 1 - d.len();
            for (i, &dc) in d.iter().enumerate() {
                r[base + i] -= q * dc;
            }
        }
        r.iter().all(Zero::is_zero)
    }

    fn polynomial_error(&self, message: &str) -> Error {
        Error::Polynomial { text: self.to_string(), message: message.into() }
    }
}

fn dense(p: &LaurentPolynomial) -> Vec<Rational64> {
    let hi = p.max_exp().unwrap_or(0);
    (0..=hi).map(|e| Rational64::from_integer(p.coeff(e))).collect()
}

/// Terms in descending order of exponent: `2t - 3 + 2t^-1`, `t^2 - t + 1`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, &c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (e, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}")?,
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Accepts the display form plus a few common variants: `*` between
/// coefficient and `t`, braces around exponents (`t^{-1}`), and the Unicode
/// minus sign.
impl FromStr for LaurentPolynomial {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let err = |message: &str| Error::Polynomial { text: text.into(), message: message.into() };
        let cleaned: String =
            text.replace('\u{2212}', "-").chars().filter(|c| !c.is_whitespace() && !matches!(c, '{' | '}' | '*')).collect();
        if cleaned.is_empty() {
            return Err(err("empty polynomial"));
        }
        let digits_split = text.as_bytes().windows(3).any(|w| {
            w[0].is_ascii_digit() && w[1].is_ascii_whitespace() && w[2].is_ascii_digit()
        });
        if digits_split {
            return Err(err("whitespace inside a number"));
        }
        let mut terms = Vec::new();
        let bytes = cleaned.as_bytes();
        let mut at = 0;
        while at < bytes.len() {
            let mut sign = 1;
            if bytes[at] == b'+' || bytes[at] == b'-' {
                if bytes[at] == b'-' {
                    sign = -1;
                }
                at += 1;
            } else if at > 0 {
                return Err(err("expected '+' or '-' between terms"));
            }
            let start = at;
            while at < bytes.len() && bytes[at].is_ascii_digit() {
                at += 1;
            }
            let coeff: Option<i64> = if start == at {
                None
            } else {
                Some(cleaned[start..at].parse().map_err(|_| err("coefficient out of range"))?)
            };
            let exp = if at < bytes.len() && bytes[at] == b't' {
                at += 1;
                if at < bytes.len() && bytes[at] == b'^' {
                    at += 1;
                    let s = at;
                    if at < bytes.len() && bytes[at] == b'-' {
                        at += 1;
                    }
                    while at < bytes.len() && bytes[at].is_ascii_digit() {
                        at += 1;
                    }
                    cleaned[s..at].parse::<i32>().map_err(|_| err("malformed exponent"))?
                } else {
                    1
                }
            } else if coeff.is_none() {
                return Err(err("expected a coefficient or 't'"));
            } else {
                0
            };
            terms.push((exp, sign * coeff.unwrap_or(1)));
        }
        Ok(Self::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    terms: BTreeMap<String, i64>,
    #[serde(default)]
    text: Option<String>,
}

/// `{"terms": {"-1": 1, "0": -1, "1": 1}, "text": "t - 1 + t^-1"}`.
impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { terms: self.terms.iter().map(|(e, c)| (e.to_string(), *c)).collect(), text: Some(self.to_string()) }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(d)?;
        let terms = wire
            .terms
            .into_iter()
            .map(|(e, c)| e.parse::<i32>().map(|e| (e, c)).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn display_round_trip() {
        for s in ["t - 1 + t^-1", "2t - 3 + 2t^-1", "-t + 3 - t^-1", "1", "t^2 - t + 1 - t^-1 + t^-2", "-2t^3 + 5"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(p("t^{-1} - 1 + t"), p("t - 1 + t^-1"));
        assert_eq!(p("3*t^2 \u{2212} t"), LaurentPolynomial::from_terms([(2, 3), (1, -1)]));
    }

    #[test]
    fn malformed_text() {
        for s in ["", "t^", "2 3", "x", "t^a"] {
            assert!(s.parse::<LaurentPolynomial>().is_err(), "{s:?}");
        }
    }

    #[test]
    fn evaluation_and_span() {
        let d = p("2t - 3 + 2t^-1");
        assert_eq!(d.eval_at_one(), 1);
        assert_eq!(d.eval_at_minus_one(), -7);
        assert_eq!(d.span(), 2);
        assert_eq!(d.leading_coeff(), 2);
        assert!(d.is_symmetric());
    }

    #[test]
    fn normalization() {
        let raw = LaurentPolynomial::from_coefficients(&[-1, 1, -1]);
        assert_eq!(raw.alexander_normalized().unwrap(), p("t - 1 + t^-1"));
        let raw = LaurentPolynomial::from_coefficients(&[0, 0, 1, -3, 1]);
        assert_eq!(raw.alexander_normalized().unwrap(), p("-t + 3 - t^-1"));
        assert!(LaurentPolynomial::from_coefficients(&[1, 1]).alexander_normalized().is_err());
    }

    #[test]
    fn divisibility() {
        let tre = p("t - 1 + t^-1");
        let granny = tre.mul(&tre);
        assert!(tre.divides(&granny));
        assert!(!granny.divides(&tre));
        assert!(!p("-t + 3 - t^-1").divides(&granny));
        assert!(LaurentPolynomial::constant(1).divides(&tre));
        assert!(!p("2t - 3 + 2t^-1").divides(&p("t - 1 + t^-1")));
    }

    #[test]
    fn json_shape() {
        let text = serde_json::to_string(&p("t - 1 + t^-1")).unwrap();
        assert_eq!(text, r#"{"terms":{"-1":1,"0":-1,"1":1},"text":"t - 1 + t^-1"}"#);
        assert_eq!(serde_json::from_str::<LaurentPolynomial>(&text).unwrap(), p("t - 1 + t^-1"));
    }
}
