//! Check parameters: integers, integer lists and words.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use overpartition::interlacing::Profile;
use overpartition::Partition;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    List(Vec<i64>),
    Text(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::List(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("missing parameter `{0}`")]
    Missing(String),
    #[error("parameter `{name}`: {msg}")]
    Invalid { name: String, msg: String },
    #[error("cannot parse `{0}` as key=value")]
    Syntax(String),
}

pub type Params = BTreeMap<String, ParamValue>;

/// Parses `r=2,c=3,lambda=[4,4,2],profile=0101`.
pub fn parse_params(s: &str) -> Result<Params, ParamError> {
    let mut out = Params::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut pieces = Vec::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                pieces.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&s[start..]);
    for piece in pieces.into_iter().map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = piece
            .split_once('=')
            .ok_or_else(|| ParamError::Syntax(piece.to_string()))?;
        out.insert(k.trim().to_string(), parse_value(v.trim()));
    }
    Ok(out)
}

fn parse_value(v: &str) -> ParamValue {
    if let Some(inner) = v.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
        let items: Result<Vec<i64>, _> = inner
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(str::parse)
            .collect();
        if let Ok(items) = items {
            return ParamValue::List(items);
        }
    }
    // `0101` is a word, not the integer 101
    let word = v.len() > 1 && v.starts_with('0');
    match v.parse() {
        Ok(n) if !word => ParamValue::Int(n),
        _ => ParamValue::Text(v.to_string()),
    }
}

fn invalid(name: &str, msg: impl Into<String>) -> ParamError {
    ParamError::Invalid {
        name: name.to_string(),
        msg: msg.into(),
    }
}

/// Typed access to a parameter map.
pub struct Args<'a>(pub &'a Params);

impl Args<'_> {
    fn get(&self, name: &str) -> Result<&ParamValue, ParamError> {
        self.0
            .get(name)
            .ok_or_else(|| ParamError::Missing(name.to_string()))
    }

    pub fn has(&self, name: &str) -> bool {
        self.0.contains_key(name)
    }

    pub fn u32(&self, name: &str) -> Result<u32, ParamError> {
        match self.get(name)? {
            ParamValue::Int(v) => {
                u32::try_from(*v).map_err(|_| invalid(name, "must be a nonnegative integer"))
            }
            _ => Err(invalid(name, "must be an integer")),
        }
    }

    pub fn u32_or(&self, name: &str, default: u32) -> Result<u32, ParamError> {
        if self.has(name) {
            self.u32(name)
        } else {
            Ok(default)
        }
    }

    pub fn list(&self, name: &str) -> Result<Vec<u32>, ParamError> {
        match self.get(name)? {
            ParamValue::List(v) => v
                .iter()
                .map(|&x| {
                    u32::try_from(x).map_err(|_| invalid(name, "entries must be nonnegative"))
                })
                .collect(),
            ParamValue::Int(v) => Ok(vec![
                u32::try_from(*v).map_err(|_| invalid(name, "must be nonnegative"))?
            ]),
            ParamValue::Text(_) => Err(invalid(name, "must be a list of integers")),
        }
    }

    pub fn text(&self, name: &str) -> Result<String, ParamError> {
        Ok(self.get(name)?.to_string())
    }

    pub fn partition(&self, name: &str) -> Result<Partition, ParamError> {
        let parts = self.list(name)?;
        Partition::try_new(parts.into_iter().filter(|&x| x > 0).collect::<Vec<_>>())
            .map_err(|_| invalid(name, "parts must be weakly decreasing"))
    }

    pub fn set(&self, name: &str) -> Result<BTreeSet<u32>, ParamError> {
        Ok(self.list(name)?.into_iter().collect())
    }

    /// A 0/1 word given as `0101` or `[0,1,0,1]`.
    pub fn profile(&self, name: &str) -> Result<Profile, ParamError> {
        let bits: Vec<u8> = match self.get(name)? {
            ParamValue::List(v) => v.iter().map(|&b| b as u8).collect(),
            ParamValue::Int(_) | ParamValue::Text(_) => self
                .text(name)?
                .chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(invalid(name, "profile letters must be 0 or 1")),
                })
                .collect::<Result<_, _>>()?,
        };
        Profile::new(bits).map_err(|e| invalid(name, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_values() {
        let p = parse_params("r=2, lambda=[4,4,2],profile=0101,topology=cylindric").unwrap();
        assert_eq!(p["r"], ParamValue::Int(2));
        assert_eq!(p["lambda"], ParamValue::List(vec![4, 4, 2]));
        assert_eq!(p["topology"], ParamValue::Text("cylindric".into()));
        let a = Args(&p);
        assert_eq!(
            a.partition("lambda").unwrap(),
            Partition::new(vec![4, 4, 2])
        );
        assert_eq!(a.profile("profile").unwrap().bits(), &[0, 1, 0, 1]);
    }

    #[test]
    fn empty_and_bad_input() {
        assert!(parse_params("").unwrap().is_empty());
        assert!(matches!(parse_params("r"), Err(ParamError::Syntax(_))));
        let p = parse_params("lambda=[1,2]").unwrap();
        assert!(Args(&p).partition("lambda").is_err());
        assert!(matches!(Args(&p).u32("r"), Err(ParamError::Missing(_))));
    }
}
