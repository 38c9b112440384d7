//! Parsers for the plain-text structure tables shipped with the crate.
//!
//! Grammar, shared by every table file:
//!   - `#` starts a comment, blank lines are skipped;
//!   - an *element expression* is a whitespace-separated list of terms,
//!     each `coef*name`, `name` or `-name`, with `coef` a rational `p` or
//!     `p/q`; the single token `0` denotes the zero element;
//!   - a *pair table* line is `row col -> element-expression`.
//!
//! Basis names never contain whitespace or `*`, so the split is unambiguous.

use crate::error::Error;
use crate::scalar::{int, Rational};
use num_bigint::BigInt;
use std::str::FromStr;

#[derive(Debug, Clone)]
pub struct PairEntry {
    pub row: String,
    pub col: String,
    pub value: Vec<(Rational, String)>,
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d == BigInt::from(0) {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        BigInt::from_str(s.trim()).ok().map(Rational::from)
    }
}

pub fn parse_terms(expr: &str, file: &str) -> Result<Vec<(Rational, String)>, Error> {
    let mut out = Vec::new();
    for tok in expr.split_whitespace() {
        if tok == "0" {
            continue;
        }
        let (coef, name) = if let Some((c, n)) = tok.split_once('*') {
            let coef = parse_rational(c).ok_or_else(|| Error::Table {
                file: file.to_string(),
                detail: format!("bad coefficient in term {tok:?}"),
            })?;
            (coef, n.to_string())
        } else if let Some(rest) = tok.strip_prefix('-') {
            (int(-1), rest.to_string())
        } else {
            (int(1), tok.to_string())
        };
        out.push((coef, name));
    }
    Ok(out)
}

/// Parse a `row col -> value` table.
pub fn parse_pair_table(text: &str, file: &str) -> Result<Vec<PairEntry>, Error> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |detail: String| Error::Table {
            file: file.to_string(),
            detail: format!("line {}: {}", lineno + 1, detail),
        };
        let (head, value) = line
            .split_once("->")
            .ok_or_else(|| err("missing ->".into()))?;
        let mut keys = head.split_whitespace();
        let row = keys.next().ok_or_else(|| err("missing row key".into()))?;
        let col = keys.next().ok_or_else(|| err("missing col key".into()))?;
        if keys.next().is_some() {
            return Err(err("too many keys before ->".into()));
        }
        entries.push(PairEntry {
            row: row.to_string(),
            col: col.to_string(),
            value: parse_terms(value, file)?,
        });
    }
    Ok(entries)
}

/// A `row col -> rational` table (the psi forms).
pub fn parse_scalar_table(
    text: &str,
    file: &str,
) -> Result<Vec<(String, String, Rational)>, Error> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |detail: String| Error::Table {
            file: file.to_string(),
            detail: format!("line {}: {}", lineno + 1, detail),
        };
        let (head, value) = line
            .split_once("->")
            .ok_or_else(|| err("missing ->".into()))?;
        let mut keys = head.split_whitespace();
        let row = keys.next().ok_or_else(|| err("missing row key".into()))?;
        let col = keys.next().ok_or_else(|| err("missing col key".into()))?;
        let val = parse_rational(value.trim())
            .ok_or_else(|| err(format!("bad rational {value:?}")))?;
        out.push((row.to_string(), col.to_string(), val));
    }
    Ok(out)
}

/// Simple `key: value` sections introduced by `[section ...]` headers,
/// used by the orbit catalog.
#[derive(Debug, Clone)]
pub struct Section {
    pub header: Vec<String>,
    pub fields: Vec<(String, String)>,
}

impl Section {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

pub fn parse_sections(text: &str, file: &str) -> Result<Vec<Section>, Error> {
    let mut sections: Vec<Section> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |detail: String| Error::Table {
            file: file.to_string(),
            detail: format!("line {}: {}", lineno + 1, detail),
        };
        if let Some(h) = line.strip_prefix('[') {
            let h = h
                .strip_suffix(']')
                .ok_or_else(|| err("unterminated section header".into()))?;
            sections.push(Section {
                header: h.split_whitespace().map(str::to_string).collect(),
                fields: Vec::new(),
            });
        } else {
            let (k, v) = line
                .split_once(':')
                .ok_or_else(|| err(format!("expected key: value, got {line:?}")))?;
            let section = sections
                .last_mut()
                .ok_or_else(|| err("field outside any section".into()))?;
            section
                .fields
                .push((k.trim().to_string(), v.trim().to_string()));
        }
    }
    Ok(sections)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn terms_parse() {
        let t = parse_terms("8*h1 12*h2", "t").unwrap();
        assert_eq!(t, vec![(int(8), "h1".into()), (int(12), "h2".into())]);
        let t = parse_terms("-1/2*R(1,-1) x6 -y4", "t").unwrap();
        assert_eq!(
            t,
            vec![
                (rat(-1, 2), "R(1,-1)".into()),
                (int(1), "x6".into()),
                (int(-1), "y4".into())
            ]
        );
        assert!(parse_terms("0", "t").unwrap().is_empty());
    }

    #[test]
    fn pair_table_parses() {
        let txt = "# comment\ne3 e2 -> -2*x6\ne0 e0 -> 0\n";
        let t = parse_pair_table(txt, "t").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].row, "e3");
        assert_eq!(t[0].value, vec![(int(-2), "x6".into())]);
        assert!(t[1].value.is_empty());
    }

    #[test]
    fn sections_parse() {
        let txt = "[case g3 E+x2]\ne: 1*E 1*x2\nh: 1*H 1*h2\n";
        let s = parse_sections(txt, "t").unwrap();
        assert_eq!(s[0].header, vec!["case", "g3", "E+x2"]);
        assert_eq!(s[0].get("e"), Some("1*E 1*x2"));
    }
}
