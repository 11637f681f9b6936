//! The `bijection` subcommand: one JSON object in, its image and a
//! record of statistics on both sides out.

use overpartition::bijections::bender_knuth::{bender_knuth, bender_knuth_inverse, pair_a_poly};
use overpartition::bijections::paths::{paths_to_pop, pop_to_paths};
use overpartition::bijections::rsk::{
    matrix_counts, occurrence_counts, rsk_forward, rsk_inverse, BlockMatrix,
};
use overpartition::bijections::super_tableau::{stanley_involution, super_to_pop, SuperTableau};
use overpartition::border::plane_a_poly;
use overpartition::tilings::{pop_to_tiling, tiling_to_pop, Window};
use overpartition::{Entry, PlaneOverpartition, PlanePartition, ReversePlaneOverpartition};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// `{"matrix": [[..]]}` (full 2n x 2n) or `{"n", "a", "b", "c", "d"}`.
    Rsk,
    /// `{"p": [[..]], "q": [[..]], "n": 2}`.
    RskInverse,
    /// `{"sigma": [[..]], "lambda": [[..]]}`, column-strict of one shape.
    BenderKnuth,
    /// `{"pi": [[..]]}`.
    BenderKnuthInverse,
    /// `{"pop": [[..]], "x": 3}`.
    Paths,
    /// `{"tableau": [[..]], "k": 2, "l": 2}`.
    SuperTableau,
    /// `{"rpop": [[..]], "n": 2}`.
    Stanley,
    /// `{"pop": [[..]]}`.
    Tiling,
}

#[derive(Debug, Error)]
pub enum BijectionError {
    #[error("bad input: {0}")]
    Input(String),
    #[error("{0}")]
    Map(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub kind: Kind,
    pub image: Value,
    pub before: Value,
    pub after: Value,
    /// Statistics agree and the inverse recovers the input.
    pub consistent: bool,
}

fn field<T: for<'de> Deserialize<'de>>(v: &Value, name: &str) -> Result<T, BijectionError> {
    let f = v
        .get(name)
        .ok_or_else(|| BijectionError::Input(format!("missing `{name}`")))?;
    serde_json::from_value(f.clone()).map_err(|e| BijectionError::Input(format!("`{name}`: {e}")))
}

fn pop(v: &Value, name: &str) -> Result<PlaneOverpartition, BijectionError> {
    let rows: Vec<Vec<Entry>> = field(v, name)?;
    PlaneOverpartition::new(rows).map_err(|e| BijectionError::Input(format!("`{name}`: {e:?}")))
}

fn plane(v: &Value, name: &str) -> Result<PlanePartition, BijectionError> {
    let rows: Vec<Vec<u32>> = field(v, name)?;
    PlanePartition::new(rows).map_err(|e| BijectionError::Input(format!("`{name}`: {e:?}")))
}

fn pop_stats(p: &PlaneOverpartition) -> Value {
    json!({ "weight": p.weight(), "overlined": p.overlined_count(), "shape": p.shape() })
}

fn map_err(e: impl std::fmt::Display) -> BijectionError {
    BijectionError::Map(e.to_string())
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("serializable")
}

pub fn run(kind: Kind, input: &Value) -> Result<Record, BijectionError> {
    let (image, before, after, consistent) = match kind {
        Kind::Rsk => {
            let m = match input.get("matrix") {
                Some(_) => BlockMatrix::from_full(&field::<Vec<Vec<u32>>>(input, "matrix")?)
                    .map_err(map_err)?,
                None => serde_json::from_value(input.clone())
                    .map_err(|e| BijectionError::Input(e.to_string()))?,
            };
            m.check().map_err(map_err)?;
            let (p, q) = rsk_forward(&m).map_err(map_err)?;
            let (before, after) = (matrix_counts(&m), occurrence_counts(&p, &q, m.n));
            let ok = before == after && rsk_inverse(&p, &q, m.n).as_ref() == Ok(&m);
            (
                json!({ "p": p, "q": q }),
                to_value(before),
                to_value(after),
                ok,
            )
        }
        Kind::RskInverse => {
            let (p, q, n) = (
                pop(input, "p")?,
                pop(input, "q")?,
                field::<usize>(input, "n")?,
            );
            let m = rsk_inverse(&p, &q, n).map_err(map_err)?;
            let (before, after) = (occurrence_counts(&p, &q, n), matrix_counts(&m));
            let ok = before == after;
            (to_value(&m), to_value(before), to_value(after), ok)
        }
        Kind::BenderKnuth => {
            let (s, l) = (plane(input, "sigma")?, plane(input, "lambda")?);
            let pi = bender_knuth(&s, &l).map_err(map_err)?;
            let a = plane_a_poly(&pi);
            let ok = pair_a_poly(&s, &l).as_ref() == Some(&a)
                && bender_knuth_inverse(&pi) == (s.clone(), l.clone());
            (
                to_value(&pi),
                json!({ "weight": s.weight() + l.weight(), "cells": s.shape().weight(), "a_poly": pair_a_poly(&s, &l).map(|x| x.to_string()) }),
                json!({ "weight": pi.weight(), "a_poly": a.to_string() }),
                ok && pi.weight() + s.shape().weight() == s.weight() + l.weight(),
            )
        }
        Kind::BenderKnuthInverse => {
            let pi = plane(input, "pi")?;
            let (s, l) = bender_knuth_inverse(&pi);
            let ok = bender_knuth(&s, &l).ok().as_ref() == Some(&pi);
            (
                json!({ "sigma": s, "lambda": l }),
                json!({ "weight": pi.weight() }),
                json!({ "weight": s.weight() + l.weight(), "cells": s.shape().weight() }),
                ok,
            )
        }
        Kind::Paths => {
            let p = pop(input, "pop")?;
            let x = field::<Option<u32>>(input, "x")
                .unwrap_or(None)
                .unwrap_or(p.largest().max(1));
            let paths = pop_to_paths(&p, x).map_err(map_err)?;
            let (o, w) = paths.iter().fold((0, 0), |(a, b), path| {
                let (o, w) = path.weight();
                (a + o, b + w)
            });
            let ok = paths_to_pop(&paths).as_ref() == Ok(&p)
                && (o, w) == (p.overlined_count(), p.weight());
            (
                to_value(&paths),
                pop_stats(&p),
                json!({ "weight": w, "overlined": o }),
                ok,
            )
        }
        Kind::SuperTableau => {
            let rows: Vec<Vec<Entry>> = field(input, "tableau")?;
            let t = SuperTableau::new(rows).map_err(map_err)?;
            let (k, l) = (field::<u32>(input, "k")?, field::<u32>(input, "l")?);
            let p = super_to_pop(&t, k, l).map_err(map_err)?;
            let ok = p.shape() == t.shape() && p.overlined_count() == t.overlined_count();
            (
                to_value(&p),
                json!({ "shape": t.shape(), "overlined": t.overlined_count() }),
                pop_stats(&p),
                ok,
            )
        }
        Kind::Stanley => {
            let rows: Vec<Vec<Entry>> = field(input, "rpop")?;
            let r = ReversePlaneOverpartition::new(rows)
                .map_err(|e| BijectionError::Input(format!("{e:?}")))?;
            let n = field::<u32>(input, "n")?;
            let s = stanley_involution(&r, n);
            let ok = stanley_involution(&s, n) == r && s.weight() == r.weight();
            (
                to_value(s.cells()),
                json!({ "weight": r.weight(), "overlined": r.overlined_count() }),
                json!({ "weight": s.weight(), "overlined": s.overlined_count() }),
                ok,
            )
        }
        Kind::Tiling => {
            let p = pop(input, "pop")?;
            let t = pop_to_tiling(&p, Window::fitting(&p)).map_err(map_err)?;
            let back = tiling_to_pop(&t).map_err(map_err)?;
            let ok = back == p;
            (to_value(&t), pop_stats(&p), pop_stats(&back), ok)
        }
    };
    Ok(Record {
        kind,
        image,
        before,
        after,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rsk_from_full_matrix() {
        let input = json!({ "matrix": [[0, 2, 1, 0], [2, 0, 1, 0], [1, 1, 0, 1], [0, 0, 1, 1]] });
        let r = run(Kind::Rsk, &input).unwrap();
        assert!(r.consistent);
        assert_eq!(r.image["p"], r.image["q"]);
    }

    #[test]
    fn paths_and_tiling() {
        let input = json!({ "pop": [[{ "v": 2, "o": false }, { "v": 1, "o": true }]] });
        assert!(run(Kind::Paths, &input).unwrap().consistent);
        assert!(run(Kind::Tiling, &input).unwrap().consistent);
    }

    #[test]
    fn bad_input() {
        assert!(run(Kind::BenderKnuth, &json!({ "sigma": [[1]] })).is_err());
        let bad = json!({ "pop": [[{ "v": 1, "o": false }, { "v": 2, "o": false }]] });
        assert!(matches!(
            run(Kind::Tiling, &bad),
            Err(BijectionError::Input(_))
        ));
    }
}
