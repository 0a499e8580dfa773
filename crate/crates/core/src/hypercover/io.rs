//! Line-oriented instance format and the set-cover report.
//!
//! Instances:
//!
//! ```text
//! c optional comment
//! p cover <#elements> <#sets>
//! s <id> <e1> <e2> ...
//! ```
//!
//! Elements are implicitly `1..=#elements`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CoverInstance;
use crate::error::{CoverError, Result};

pub fn parse_instance(text: &str) -> Result<CoverInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut sets: Vec<(u64, Vec<u64>)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tokens = line.split_ascii_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(CoverError::Parse("duplicate p line".into()));
                }
                if tokens.next() != Some("cover") {
                    return Err(CoverError::Parse(format!("line {}: expected 'p cover'", lineno + 1)));
                }
                let ne = parse_num(tokens.next(), lineno)?;
                let ns = parse_num(tokens.next(), lineno)?;
                header = Some((ne as usize, ns as usize));
            }
            Some("s") => {
                if header.is_none() {
                    return Err(CoverError::Parse("s line before p line".into()));
                }
                let id = parse_num(tokens.next(), lineno)?;
                let elems: Vec<u64> =
                    tokens.map(|t| parse_num(Some(t), lineno)).collect::<Result<_>>()?;
                sets.push((id, elems));
            }
            Some(other) => {
                return Err(CoverError::Parse(format!("line {}: unknown record '{other}'", lineno + 1)));
            }
            None => {}
        }
    }
    let Some((ne, ns)) = header else {
        return Err(CoverError::Parse("missing 'p cover' header".into()));
    };
    if sets.len() != ns {
        return Err(CoverError::Parse(format!("header declares {ns} sets, found {}", sets.len())));
    }
    let ground: Vec<u64> = (1..=ne as u64).collect();
    CoverInstance::new(ground, &sets)
}

fn parse_num(tok: Option<&str>, lineno: usize) -> Result<u64> {
    tok.ok_or_else(|| CoverError::Parse(format!("line {}: missing number", lineno + 1)))?
        .parse()
        .map_err(|e| CoverError::Parse(format!("line {}: {e}", lineno + 1)))
}

/// Elements are written by 1-based position, matching what `parse_instance`
/// reads back; external ground ids are not preserved by the text format.
pub fn format_instance(instance: &CoverInstance) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "p cover {} {}", instance.num_elements(), instance.num_sets()).unwrap();
    for s in 0..instance.num_sets() {
        write!(out, "s {}", instance.set_ids()[s]).unwrap();
        for e in instance.members(s) {
            write!(out, " {}", e + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn read_instance(path: &Path) -> Result<CoverInstance> {
    parse_instance(&std::fs::read_to_string(path)?)
}

/// JSON report for a set-cover run.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SetCoverReport {
    pub greedy_size: usize,
    /// Exact minimum when the search was within budget.
    pub tau: Option<usize>,
    pub tau_star: f64,
    pub max_deg: usize,
    pub ls_bound: f64,
    pub holds: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercover::fano_instance;

    #[test]
    fn roundtrip_fano() {
        let fano = fano_instance();
        let text = format_instance(&fano);
        assert!(text.starts_with("p cover 7 7"));
        let parsed = parse_instance(&text).unwrap();
        assert_eq!(parsed.num_elements(), 7);
        assert_eq!(parsed.num_sets(), 7);
        for s in 0..7 {
            assert_eq!(parsed.members(s), fano.members(s));
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_instance("s 1 2").is_err());
        assert!(parse_instance("p cover 2 1\ns 1 5").is_err());
        assert!(parse_instance("p cover 2 2\ns 1 1").is_err());
        assert!(parse_instance("q cover 1 1").is_err());
    }
}
