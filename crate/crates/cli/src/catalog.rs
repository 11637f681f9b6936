//! Named checks pairing a brute-force oracle with a closed form or a
//! bijection property.

use std::collections::BTreeSet;
use std::time::Instant;

use overpartition::bijections::bender_knuth::{
    bender_knuth, bender_knuth_inverse, pair_a_poly, phi_column_strict,
};
use overpartition::bijections::rsk::{
    all_block_matrices, matrix_counts, occurrence_counts, rsk_forward, rsk_inverse,
    symmetric_block_matrices, BlockMatrix,
};
use overpartition::border::{plane_a_poly, sequence_a_poly};
use overpartition::closedform::*;
use overpartition::enumerate::*;
use overpartition::interlacing::{Profile, Topology};
use overpartition::series::geometric;
use overpartition::tilings::{
    apply_move_to_pop, boundary_violations, local_move, pop_to_tiling, tiling_to_pop, Move, Window,
};
use overpartition::{
    CoeffPoly, Partition, PlaneOverpartition, PlanePartition, TPoly, TruncSeries, Validate,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::params::{Args, ParamError, ParamValue, Params};
use crate::report::{Discrepancy, Status, VerificationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("{0}")]
    Invalid(String),
}

/// Result of one check: the first disagreement, if any, and how much was
/// compared.
#[derive(Debug, Default)]
pub struct Outcome {
    pub discrepancy: Option<Discrepancy>,
    pub checked: u64,
}

impl Outcome {
    fn series(pairs: &[(&TruncSeries, &TruncSeries)]) -> Self {
        let mut checked = 0;
        for (oracle, formula) in pairs {
            if let Some(e) = oracle.first_difference(formula) {
                return Self {
                    discrepancy: Some(Discrepancy::at(e, oracle, formula)),
                    checked,
                };
            }
            checked += (oracle.order() + 1).max(0) as u64;
        }
        Self {
            discrepancy: None,
            checked,
        }
    }

    /// Counts one instance; keeps the first failure.
    fn record(&mut self, failure: Option<Discrepancy>) {
        self.checked += 1;
        if self.discrepancy.is_none() {
            self.discrepancy = failure;
        }
    }

    fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: T, got: T) {
        let fail = (expected != got)
            .then(|| Discrepancy::instance(format!("{what}: {expected:?}"), format!("{got:?}")));
        self.record(fail);
    }
}

type Check = fn(&Args, i64) -> Result<Outcome, VerifyError>;

pub struct Identity {
    pub id: &'static str,
    pub about: &'static str,
    pub params: &'static str,
    check: Check,
}

macro_rules! identity {
    ($id:literal, $params:literal, $about:literal, $f:expr) => {
        Identity {
            id: $id,
            about: $about,
            params: $params,
            check: $f,
        }
    };
}

pub static CATALOG: &[Identity] = &[
    identity!(
        "all-weighted",
        "",
        "all plane overpartitions, weighted by overlines",
        check_all_weighted
    ),
    identity!(
        "box",
        "r, c",
        "plane overpartitions in an r x c box",
        check_box
    ),
    identity!(
        "box-t",
        "r, c",
        "plane partitions in a box weighted by A(t)",
        check_box_t
    ),
    identity!(
        "shape",
        "lambda, [example]",
        "hook-content product for a fixed shape",
        check_shape
    ),
    identity!(
        "bounded-shape",
        "lambda",
        "hook-content product for shapes between rows of lambda",
        check_bounded_shape
    ),
    identity!(
        "det-hook",
        "lambda",
        "determinant of (-aq^s)_m/(q)_m entries against the hook-content products",
        check_det_hook
    ),
    identity!(
        "box-det-sum",
        "r, c",
        "box series as a sum of determinants over doubled partitions",
        check_box_det_sum
    ),
    identity!(
        "reverse-shape",
        "lambda",
        "reverse plane overpartitions of a shape",
        check_reverse_shape
    ),
    identity!(
        "w-pfaffian",
        "tuple",
        "closed forms of W against the Pfaffian",
        check_w_pfaffian
    ),
    identity!(
        "w-recursion",
        "tuple",
        "W(r_1, ..., r_k, 0) = W(r_1 - 1, ..., r_k - 1)",
        check_w_recursion
    ),
    identity!(
        "max-entry",
        "n",
        "plane overpartitions with largest entry at most n",
        check_max_entry
    ),
    identity!(
        "max-entry-limit",
        "",
        "large-n limit of the bounded-entry series",
        check_max_entry_limit
    ),
    identity!(
        "parts-in-set",
        "set",
        "plane overpartitions with parts in a set",
        check_parts_in_set
    ),
    identity!(
        "odd-parts",
        "",
        "plane overpartitions with odd parts",
        check_odd_parts
    ),
    identity!(
        "row-bounded",
        "n, c",
        "one-row plane overpartitions",
        check_row_bounded
    ),
    identity!(
        "skew",
        "profile",
        "interlacing sequences of a profile weighted by A(t)",
        check_skew
    ),
    identity!(
        "skew-specializations",
        "lambda",
        "t = 0 and t = -1 of the skew hook product",
        check_skew_specializations
    ),
    identity!(
        "cylindric",
        "profile",
        "cylindric partitions of a profile weighted by A(t)",
        check_cylindric
    ),
    identity!(
        "cylindric-period-one",
        "",
        "period-one cylindric partitions are partitions",
        check_cylindric_period_one
    ),
    identity!(
        "phi-equals-a",
        "profile, topology",
        "b(first) Phi = A on every enumerated sequence",
        check_phi_equals_a
    ),
    identity!(
        "cauchy",
        "m, n, d",
        "sum of Q(x) P(y) against the Cauchy product",
        check_cauchy
    ),
    identity!(
        "rsk-example",
        "",
        "insertion of the worked 4 x 4 matrix",
        check_rsk_example
    ),
    identity!(
        "rsk-stats",
        "n, max, [random, seed]",
        "round trip and occurrence counts of insertion",
        check_rsk_stats
    ),
    identity!(
        "rsk-transpose",
        "n, max, [random, seed]",
        "transposing M swaps P and Q",
        check_rsk_transpose
    ),
    identity!(
        "rsk-symmetric",
        "n, max, [random, seed]",
        "M symmetric iff P = Q",
        check_rsk_symmetric
    ),
    identity!(
        "rsk-max-entry",
        "n",
        "images of symmetric matrices give the bounded-entry series",
        check_rsk_max_entry
    ),
    identity!(
        "bk-weights",
        "cells, bound",
        "gluing pairs of column-strict fillings",
        check_bk_weights
    ),
    identity!(
        "bk-example",
        "",
        "gluing of the worked pair of column-strict fillings",
        check_bk_example
    ),
    identity!(
        "tiling-roundtrip",
        "[max_weight]",
        "plane overpartition to tiling and back",
        check_tiling_roundtrip
    ),
    identity!(
        "tiling-moves",
        "[max_weight]",
        "local moves swap two dominoes",
        check_tiling_moves
    ),
    identity!(
        "tiling-boundary",
        "cells, bound",
        "boundary conditions for a shape and bound",
        check_tiling_boundary
    ),
];

pub fn lookup(id: &str) -> Option<&'static Identity> {
    CATALOG.iter().find(|i| i.id == id)
}

/// Runs one check. Mathematical failures are reported in the returned
/// report; only unknown ids and bad parameters are errors.
pub fn verify(id: &str, params: &Params, order: i64) -> Result<VerificationReport, VerifyError> {
    let ident = lookup(id).ok_or_else(|| VerifyError::UnknownIdentity(id.to_string()))?;
    if order < 0 {
        return Err(VerifyError::Invalid(
            "truncation must be nonnegative".into(),
        ));
    }
    let start = Instant::now();
    let mut outcome = Outcome::default();
    for (label, p) in expand(id, params)? {
        let sub = (ident.check)(&Args(&p), order)?;
        outcome.checked += sub.checked;
        if outcome.discrepancy.is_none() {
            outcome.discrepancy = sub.discrepancy.map(|mut d| {
                if !label.is_empty() {
                    d.oracle = format!("{label}: {}", d.oracle);
                }
                d
            });
        }
    }
    Ok(VerificationReport {
        identity_id: id.to_string(),
        parameters: params.clone(),
        truncation: order,
        status: if outcome.discrepancy.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        first_discrepancy: outcome.discrepancy,
        error: None,
        checked: outcome.checked,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

fn int(v: u64) -> ParamValue {
    ParamValue::Int(v as i64)
}

fn list(v: &[u32]) -> ParamValue {
    ParamValue::List(v.iter().map(|&x| x as i64).collect())
}

/// Sweep parameters stand for a family of instances:
/// `max_cells` for every nonempty `lambda` with at most that many cells,
/// `max_len` for every `profile` up to that length,
/// `tuple_max` and `tuple_len` for strictly decreasing `tuple`s,
/// `max_r`, `max_c` and `max_n` for every `r`, `c` and `n` from 1.
fn expand(id: &str, params: &Params) -> Result<Vec<(String, Params)>, VerifyError> {
    let a = Args(params);
    let mut out = vec![(String::new(), params.clone())];
    let sweep = |key: &str, values: Vec<(&str, ParamValue)>, out: &mut Vec<(String, Params)>| {
        let mut next = Vec::new();
        for (label, p) in out.iter() {
            for (k, v) in &values {
                let mut q = p.clone();
                q.remove(key);
                q.insert(k.to_string(), v.clone());
                let l = format!("{label}{}{k}={v}", if label.is_empty() { "" } else { " " });
                next.push((l, q));
            }
        }
        *out = next;
    };
    if a.has("max_cells") {
        let vals = Partition::all_up_to(a.u32("max_cells")?)
            .iter()
            .filter(|l| !l.is_empty())
            .map(|l| ("lambda", list(l.parts())))
            .collect();
        sweep("max_cells", vals, &mut out);
    }
    if a.has("max_len") {
        let planar = id == "skew" || (a.has("topology") && a.text("topology")? == "planar");
        let vals = (1..=a.u32("max_len")? as usize)
            .flat_map(Profile::all_words)
            .filter(|p| !planar || Profile::skew(p.bits().to_vec()).is_ok())
            .map(|p| ("profile", ParamValue::Text(p.to_string())))
            .collect();
        sweep("max_len", vals, &mut out);
    }
    if a.has("tuple_max") {
        let (top, len) = (a.u32("tuple_max")?, a.u32("tuple_len")?);
        let mut tuples: Vec<Vec<u32>> = vec![vec![]];
        let mut frontier = tuples.clone();
        for _ in 0..len {
            let next: Vec<Vec<u32>> = frontier
                .iter()
                .flat_map(|t| {
                    let below = t.last().copied().unwrap_or(top + 1);
                    (0..below).map(move |x| [t.as_slice(), &[x]].concat())
                })
                .collect();
            tuples.extend(next.iter().cloned());
            frontier = next;
        }
        if id == "w-recursion" {
            tuples.retain(|t| t.last() != Some(&0));
        }
        let mut p = params.clone();
        p.remove("tuple_len");
        out = vec![(String::new(), p)];
        sweep(
            "tuple_max",
            tuples.iter().map(|t| ("tuple", list(t))).collect(),
            &mut out,
        );
    }
    for key in ["max_r", "max_c", "max_n"] {
        if a.has(key) {
            let vals = (1..=a.u32(key)?)
                .map(|v| (&key[4..], int(v as u64)))
                .collect();
            sweep(key, vals, &mut out);
        }
    }
    Ok(out)
}

/// Like [`verify`], with errors folded into a report.
pub fn verify_report(id: &str, params: &Params, order: i64) -> VerificationReport {
    let run = std::panic::catch_unwind(|| verify(id, params, order));
    let err = match run {
        Ok(Ok(r)) => return r,
        Ok(Err(e)) => e.to_string(),
        Err(_) => "check panicked".to_string(),
    };
    VerificationReport {
        identity_id: id.to_string(),
        parameters: params.clone(),
        truncation: order,
        status: Status::Error,
        first_discrepancy: None,
        error: Some(err),
        checked: 0,
        runtime_ms: 0,
    }
}

fn check_all_weighted(_: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let oracle = pop_gf(&Constraint::All, n);
    let formula = gf_all_weighted(n);
    Ok(Outcome::series(&[
        (&oracle, &formula),
        (&oracle.eval_a(1), &gf_plane_overpartitions(n)),
    ]))
}

fn check_box(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let (r, c) = (a.u32("r")?, a.u32("c")?);
    let oracle = pop_gf(&Constraint::Box(r, c), n).eval_a(1);
    let formula = gf_box(r, c, n);
    let via_t = gf_box_t(r, c, n).eval_t(-1);
    Ok(Outcome::series(&[(&oracle, &formula), (&oracle, &via_t)]))
}

fn check_box_t(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let (r, c) = (a.u32("r")?, a.u32("c")?);
    let pps = enum_plane_partitions(r, c, n as u64);
    let oracle = weighted_gf(pps.iter(), WeightSpec::TQ, n)
        .map_err(|e| VerifyError::Invalid(e.to_string()))?;
    Ok(Outcome::series(&[(&oracle, &gf_box_t(r, c, n))]))
}

fn hook(lambda: &Partition, variant: HookVariant, n: i64) -> Result<TruncSeries, VerifyError> {
    gf_hook_content(lambda, variant, n).map_err(|e| VerifyError::Invalid(e.to_string()))
}

fn check_shape(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let l = a.partition("lambda")?;
    let oracle = pop_gf(&Constraint::Shape(l.clone()), n);
    let formula = hook(&l, HookVariant::Shape, n)?;
    let mut out = Outcome::series(&[(&oracle, &formula)]);
    if a.has("example") {
        // a single filling of the shape must show up in the formula's coefficient
        let text = a.text("example")?;
        let pop = PlaneOverpartition::parse(&text).map_err(VerifyError::Invalid)?;
        out.expect_eq("example shape", l.clone(), pop.shape());
        let (o, w) = (pop.overlined_count(), pop.weight() as i64);
        let c = if w <= n {
            formula.coeff(w).coefficient(o, 0)
        } else {
            0.into()
        };
        let fail = (c < 1.into()).then(|| {
            Discrepancy::instance(
                format!("{pop}: a^{o} q^{w} present"),
                format!("coefficient {c}"),
            )
        });
        out.record(fail);
    }
    Ok(out)
}

fn check_bounded_shape(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let l = a.partition("lambda")?;
    let oracle = pop_gf(&Constraint::BoundedShape(l.clone()), n);
    Ok(Outcome::series(&[(
        &oracle,
        &hook(&l, HookVariant::Bounded, n)?,
    )]))
}

fn check_det_hook(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let l = a.partition("lambda")?;
    let shape = det_m(&l, false, n).shift(l.weight() as i64).truncate(n);
    let bounded = det_m(&l, true, n);
    Ok(Outcome::series(&[
        (&shape, &hook(&l, HookVariant::Shape, n)?),
        (&bounded, &hook(&l, HookVariant::Bounded, n)?),
    ]))
}

fn check_box_det_sum(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let (r, c) = (a.u32("r")?, a.u32("c")?);
    let oracle = pop_gf(&Constraint::Box(r, c), n);
    let sum = gf_box_det_sum(r, c, n);
    Ok(Outcome::series(&[
        (&oracle, &sum),
        (&oracle.eval_a(1), &gf_box(r, c, n)),
    ]))
}

fn check_reverse_shape(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let l = a.partition("lambda")?;
    let rpops = enum_reverse_pops(&l, n as u64);
    let oracle = weighted_gf(rpops.iter(), WeightSpec::AQ, n)
        .map_err(|e| VerifyError::Invalid(e.to_string()))?
        .eval_a(1);
    let formula = gf_reverse_hook(&l, n);
    let w = w_gf(&shape_tuple(&l), n).map_err(|e| VerifyError::Invalid(e.to_string()))?;
    let mut pairs = vec![(&oracle, &formula), (&oracle, &w)];
    let rect = l.parts().first().map(|&c| gf_box(l.len() as u32, c, n));
    if let Some(b) = rect
        .as_ref()
        .filter(|_| l.parts().windows(2).all(|p| p[0] == p[1]))
    {
        pairs.push((&oracle, b));
    }
    Ok(Outcome::series(&pairs))
}

fn tuple(a: &Args) -> Result<Vec<u32>, VerifyError> {
    let t = if a.has("tuple") {
        a.list("tuple")?
    } else {
        Vec::new()
    };
    if !t.windows(2).all(|w| w[0] > w[1]) {
        return Err(VerifyError::Invalid(
            "tuple must be strictly decreasing".into(),
        ));
    }
    Ok(t)
}

fn check_w_pfaffian(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let t = tuple(a)?;
    let err = |e: WError| VerifyError::Invalid(e.to_string());
    let pf = w_pfaffian(&t, n).map_err(err)?;
    let closed = w_gf(&t, n).map_err(err)?;
    let product = w_product(&t, n).map_err(err)?;
    Ok(Outcome::series(&[(&pf, &closed), (&pf, &product)]))
}

fn check_w_recursion(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let t = tuple(a)?;
    if t.last() == Some(&0) {
        return Err(VerifyError::Invalid("tuple must not end in 0".into()));
    }
    let err = |e: WError| VerifyError::Invalid(e.to_string());
    let mut with_zero = t.clone();
    with_zero.push(0);
    let lowered: Vec<u32> = t.iter().map(|r| r - 1).collect();
    Ok(Outcome::series(&[(
        &w_pfaffian(&with_zero, n).map_err(err)?,
        &w_pfaffian(&lowered, n).map_err(err)?,
    )]))
}

fn check_max_entry(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let m = a.u32("n")?;
    Ok(Outcome::series(&[(
        &pop_gf(&Constraint::MaxEntry(m), n),
        &gf_max_entry(m, n),
    )]))
}

fn check_max_entry_limit(_: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let big = gf_max_entry(n as u32, n);
    let bigger = gf_max_entry(n as u32 + 3, n);
    Ok(Outcome::series(&[
        (&big, &bigger),
        (&big, &gf_all_weighted(n)),
    ]))
}

fn check_parts_in_set(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let s = a.set("set")?;
    if s.contains(&0) {
        return Err(VerifyError::Invalid(
            "set must hold positive integers".into(),
        ));
    }
    Ok(Outcome::series(&[(
        &pop_gf(&Constraint::PartsIn(s.clone()), n),
        &gf_parts_in_set(&s, n),
    )]))
}

fn check_odd_parts(_: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let odds: BTreeSet<u32> = (1..=n.max(1) as u32).filter(|x| x % 2 == 1).collect();
    let oracle = pop_gf(&Constraint::PartsIn(odds.clone()), n);
    Ok(Outcome::series(&[
        (&oracle, &gf_odd_parts(n)),
        (&oracle, &gf_parts_in_set(&odds, n)),
    ]))
}

fn check_row_bounded(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let (m, c) = (a.u32("n")?, a.u32("c")?);
    let rows = enum_row_overpartitions(m, c as usize, n as u64);
    let oracle = weighted_gf(rows.iter(), WeightSpec::AQ, n)
        .map_err(|e| VerifyError::Invalid(e.to_string()))?;
    Ok(Outcome::series(&[(&oracle, &gf_row_bounded(m, c, n))]))
}

fn interlacing(p: &Profile, t: Topology, n: i64) -> Result<TruncSeries, VerifyError> {
    interlacing_gf(p, t, n).map_err(|e| VerifyError::Invalid(e.to_string()))
}

fn check_skew(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let p = a.profile("profile")?;
    let oracle = interlacing(&p, Topology::Planar, n)?;
    Ok(Outcome::series(&[(&oracle, &gf_skew(&p, n))]))
}

fn check_skew_specializations(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let l = a.partition("lambda")?;
    let p = Profile::of_shape(&l);
    let g = gf_skew(&p, n);
    let oracle = interlacing(&p, Topology::Planar, n)?;
    let reverse = weighted_gf(enum_reverse_pops(&l, n as u64).iter(), WeightSpec::AQ, n)
        .map_err(|e| VerifyError::Invalid(e.to_string()))?
        .eval_a(1);
    Ok(Outcome::series(&[
        (&oracle, &gf_skew_hook(&l, n)),
        (&oracle.eval_t(0), &gf_gansner(&l, n)),
        (&reverse, &g.eval_t(-1)),
    ]))
}

fn check_cylindric(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let p = a.profile("profile")?;
    if p.is_empty() {
        return Err(VerifyError::Invalid(
            "cylindric profile must be nonempty".into(),
        ));
    }
    let oracle = interlacing(&p, Topology::Cylindric, n)?;
    Ok(Outcome::series(&[(&oracle, &gf_cylindric(&p, n))]))
}

fn check_cylindric_period_one(_: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let p = Profile::new(vec![1]).expect("valid profile");
    let mut partitions = TruncSeries::one(n);
    for k in 1..=n {
        partitions = &partitions * &geometric(&CoeffPoly::one(), k, n);
    }
    let oracle = interlacing(&p, Topology::Cylindric, n)?;
    Ok(Outcome::series(&[
        (&partitions, &oracle),
        (&partitions, &gf_cylindric(&p, n)),
    ]))
}

fn check_phi_equals_a(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let p = a.profile("profile")?;
    let topology = match a.text("topology")?.as_str() {
        "planar" => Topology::Planar,
        "cylindric" => Topology::Cylindric,
        other => return Err(VerifyError::Invalid(format!("unknown topology `{other}`"))),
    };
    let seqs = enum_interlacing(&p, topology, n as u64)
        .map_err(|e| VerifyError::Invalid(e.to_string()))?;
    let mut out = Outcome::default();
    for seq in &seqs {
        let phi = phi_sequence(seq);
        let lhs = match topology {
            Topology::Planar => &b_lambda(&seq.partitions()[0]) * &phi,
            Topology::Cylindric => phi,
        };
        let rhs = sequence_a_poly(seq);
        let fail = (lhs != rhs).then(|| Discrepancy::instance(format!("{seq}: {rhs}"), &lhs));
        out.record(fail);
    }
    Ok(out)
}

fn check_cauchy(a: &Args, _: i64) -> Result<Outcome, VerifyError> {
    let (m, k, d) = (a.u32("m")? as usize, a.u32("n")? as usize, a.u32("d")?);
    let sum = cauchy_sum(m, k, d).truncate(2 * d);
    let product = cauchy_product(m, k, d);
    let mut out = Outcome::default();
    for (e, c) in product.terms.iter() {
        let got = sum.terms.get(e).cloned().unwrap_or_default();
        out.record((&got != c).then(|| Discrepancy::instance(format!("{e:?}: {c}"), &got)));
    }
    out.expect_eq("term count", product.terms.len(), sum.terms.len());
    Ok(out)
}

/// Every matrix of size `n` with `A`, `D` entries at most `max`, or
/// `random` seeded samples from that range.
fn matrices(a: &Args) -> Result<Vec<BlockMatrix>, VerifyError> {
    let n = a.u32("n")? as usize;
    let max = a.u32("max")?;
    if !a.has("random") {
        if (4 * n * n) as f64 * ((max + 1) as f64).log2() > 26.0 {
            return Err(VerifyError::Invalid(
                "exhaustive range too large; pass random".into(),
            ));
        }
        return Ok(all_block_matrices(n, max));
    }
    let count = a.u32("random")?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.u32_or("seed", 0)? as u64);
    let mut out = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let mut m = BlockMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.a[i][j] = rng.gen_range(0..=max);
                m.b[i][j] = rng.gen_range(0..=1);
                m.c[i][j] = rng.gen_range(0..=1);
                m.d[i][j] = rng.gen_range(0..=max);
            }
        }
        out.push(m);
    }
    Ok(out)
}

fn check_rsk_example(_: &Args, _: i64) -> Result<Outcome, VerifyError> {
    let m = BlockMatrix::from_full(&[
        vec![0, 2, 1, 0],
        vec![2, 0, 1, 0],
        vec![1, 1, 0, 1],
        vec![0, 0, 1, 1],
    ])
    .map_err(|e| VerifyError::Invalid(e.to_string()))?;
    let expected =
        PlaneOverpartition::parse("2 2 2/2' 1 1/2' 1'/1/1'/1'").map_err(VerifyError::Invalid)?;
    let (p, q) = rsk_forward(&m).map_err(|e| VerifyError::Invalid(e.to_string()))?;
    let mut out = Outcome::default();
    out.expect_eq("P", expected.to_string(), p.to_string());
    out.expect_eq("Q", expected.to_string(), q.to_string());
    out.expect_eq("round trip", Ok(m.clone()), rsk_inverse(&p, &q, m.n));
    Ok(out)
}

fn check_rsk_stats(a: &Args, _: i64) -> Result<Outcome, VerifyError> {
    let mut out = Outcome::default();
    for m in matrices(a)? {
        let (p, q) = rsk_forward(&m).map_err(|e| VerifyError::Invalid(e.to_string()))?;
        let valid = p.is_valid() && q.is_valid() && p.shape() == q.shape();
        out.expect_eq("valid pair of equal shape", true, valid);
        out.expect_eq(
            "occurrence counts",
            matrix_counts(&m),
            occurrence_counts(&p, &q, m.n),
        );
        out.expect_eq("round trip", Ok(m.clone()), rsk_inverse(&p, &q, m.n));
    }
    Ok(out)
}

fn check_rsk_transpose(a: &Args, _: i64) -> Result<Outcome, VerifyError> {
    let mut out = Outcome::default();
    for m in matrices(a)? {
        let (p, q) = rsk_forward(&m).map_err(|e| VerifyError::Invalid(e.to_string()))?;
        let (pt, qt) =
            rsk_forward(&m.transpose()).map_err(|e| VerifyError::Invalid(e.to_string()))?;
        out.expect_eq(
            "image of the transpose",
            (q.to_string(), p.to_string()),
            (pt.to_string(), qt.to_string()),
        );
    }
    Ok(out)
}

fn check_rsk_symmetric(a: &Args, _: i64) -> Result<Outcome, VerifyError> {
    let mut out = Outcome::default();
    for m in matrices(a)? {
        let (p, q) = rsk_forward(&m).map_err(|e| VerifyError::Invalid(e.to_string()))?;
        out.expect_eq("symmetric iff P = Q", m.is_symmetric(), p == q);
    }
    Ok(out)
}

fn check_rsk_max_entry(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let m = a.u32("n")?;
    let images: Vec<PlaneOverpartition> = symmetric_block_matrices(m as usize, n as u64)
        .iter()
        .map(|x| rsk_forward(x).map(|(p, _)| p))
        .collect::<Result<_, _>>()
        .map_err(|e| VerifyError::Invalid(e.to_string()))?;
    let sum = weighted_gf(images.iter(), WeightSpec::AQ, n)
        .map_err(|e| VerifyError::Invalid(e.to_string()))?;
    let distinct: BTreeSet<String> = images.iter().map(|p| p.to_string()).collect();
    let mut out = Outcome::series(&[(&gf_max_entry(m, n), &sum)]);
    if out.discrepancy.is_none() {
        out.expect_eq("distinct images", images.len(), distinct.len());
    }
    Ok(out)
}

fn check_bk_weights(a: &Args, _: i64) -> Result<Outcome, VerifyError> {
    let (cells, max) = (a.u32("cells")?, a.u32("bound")?);
    let mut out = Outcome::default();
    for shape in Partition::all_up_to(cells) {
        let tabs = enum_column_strict(&shape, max);
        for s in &tabs {
            for l in &tabs {
                let Ok(pi) = bender_knuth(s, l) else {
                    out.record(Some(Discrepancy::instance(
                        "a plane partition",
                        format!("rejected {s} | {l}"),
                    )));
                    continue;
                };
                out.expect_eq(
                    "weight",
                    s.weight() + l.weight(),
                    pi.weight() + shape.weight(),
                );
                out.expect_eq(
                    "round trip",
                    (s.clone(), l.clone()),
                    bender_knuth_inverse(&pi),
                );
                out.expect_eq("A polynomial", Some(plane_a_poly(&pi)), pair_a_poly(s, l));
            }
        }
    }
    Ok(out)
}

fn check_bk_example(_: &Args, _: i64) -> Result<Outcome, VerifyError> {
    let pp = |s: &str| PlanePartition::parse(s).map_err(VerifyError::Invalid);
    let (sigma, lambda) = (pp("4 4 4 4/2 2 2 1/1 1 1")?, pp("4 4 3 3/3 3 2 2/1 1 1")?);
    let pi = bender_knuth(&sigma, &lambda).map_err(|e| VerifyError::Invalid(e.to_string()))?;
    let (one, two) = (TPoly::one_minus_t_pow(1), TPoly::one_minus_t_pow(2));
    let mut out = Outcome::default();
    out.expect_eq("glued", pp("4 4 4 4/4 4 3/4 4 3/2 2")?, pi.clone());
    out.expect_eq(
        "round trip",
        (sigma.clone(), lambda.clone()),
        bender_knuth_inverse(&pi),
    );
    out.expect_eq(
        "phi of first",
        &one.pow(2) * &two,
        phi_column_strict(&sigma),
    );
    out.expect_eq(
        "phi of second",
        &one.pow(3) * &two,
        phi_column_strict(&lambda),
    );
    out.expect_eq(
        "A polynomial",
        Some(plane_a_poly(&pi)),
        pair_a_poly(&sigma, &lambda),
    );
    Ok(out)
}

fn check_tiling_roundtrip(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let w = a.u32_or("max_weight", n as u32)?;
    let mut out = Outcome::default();
    for pop in enum_pops(&Constraint::All, w as u64) {
        let t = pop_to_tiling(&pop, Window::fitting(&pop))
            .map_err(|e| VerifyError::Invalid(e.to_string()))?;
        out.expect_eq("round trip", Some(pop.clone()), tiling_to_pop(&t).ok());
    }
    Ok(out)
}

fn check_tiling_moves(a: &Args, n: i64) -> Result<Outcome, VerifyError> {
    let w = a.u32_or("max_weight", n as u32)?;
    let mut out = Outcome::default();
    for pop in enum_pops(&Constraint::All, w as u64) {
        let win = Window::for_shape(&pop.shape(), pop.largest() + 1);
        let t = pop_to_tiling(&pop, win).map_err(|e| VerifyError::Invalid(e.to_string()))?;
        for (pt, px) in win.points() {
            for mv in Move::all_at(pt, px) {
                let by_tiling = local_move(&t, mv).ok();
                let by_pop = apply_move_to_pop(&pop, mv).and_then(|q| pop_to_tiling(&q, win).ok());
                let changed = by_tiling.as_ref().map(|t2| t.diff(t2).len());
                let fail = if by_tiling != by_pop {
                    Some(Discrepancy::instance(
                        format!("{pop} {mv:?}: {by_pop:?}"),
                        format!("{by_tiling:?}"),
                    ))
                } else if changed.is_some_and(|c| c != 2) {
                    Some(Discrepancy::instance(
                        format!("{pop} {mv:?}: 2 dominoes"),
                        format!("{changed:?}"),
                    ))
                } else {
                    None
                };
                out.record(fail);
            }
        }
    }
    Ok(out)
}

fn check_tiling_boundary(a: &Args, _: i64) -> Result<Outcome, VerifyError> {
    let (cells, max) = (a.u32("cells")?, a.u32("bound")?);
    let mut out = Outcome::default();
    for shape in Partition::all_up_to(cells) {
        for bound in 1..=max {
            let w = Window::for_shape(&shape, bound);
            for pop in enum_pops(
                &Constraint::Shape(shape.clone()),
                shape.weight() * bound as u64,
            ) {
                if pop.largest() > bound {
                    continue;
                }
                let t = pop_to_tiling(&pop, w).map_err(|e| VerifyError::Invalid(e.to_string()))?;
                let bad = boundary_violations(&t, &shape, bound);
                out.expect_eq("boundary violations", Vec::new(), bad);
            }
        }
    }
    Ok(out)
}
