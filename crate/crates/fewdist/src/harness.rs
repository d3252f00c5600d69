//! Sweep engine, construction catalog, and report serialization.
//!
//! A sweep walks a family of space parameters, enumerates every distance set
//! of the given size, and disposes of each set by the cheapest valid rule:
//! a closed-form condition bound where its side condition holds, the
//! ratio-condition fallback `2n+3` where the pair is inadmissible, and the
//! Delsarte linear program.  Every applicable rule is evaluated and the
//! minimum taken, so the per-set bound is the best the toolbox can certify;
//! the reported disposal class is the rule that attained the minimum
//! (condition before fallback before LP on ties).
//!
//! The final bound of a parameter row is the maximum of the per-set bounds —
//! a code realizes *some* distance set, so the worst set governs.  Each row
//! also carries the best known construction and flags:
//!
//! * `matched` — the bound coincides with the construction, pinning the
//!   maximum code size exactly;
//! * `exception` — the row violates the family's generic claim (either the
//!   bound or a known construction exceeds it), as happens where sporadic
//!   codes such as the Golay family beat the generic pattern.

use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bounds::{
    binary2_bound, binary3_bound, corollary_bounds, dgs_bound, lrs_fallback_bound, BoundReport,
    BoundValue, Method,
};
use crate::exact::{binom_int, BigInt, BigRational};
use crate::expansion::{annihilator, expand, DistanceSet};
use crate::lp::{delsarte_lp, LpBoundOutcome};
use crate::spaces::Space;
use crate::{Error, Result};

/// Which sweep family to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Two-distance constant-weight codes over `(n, w)` grids.
    Johnson2,
    /// Binary codes with 2, 3, or 4 distances over an `n` range.
    Hamming(usize),
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Johnson2 => "johnson2",
            Family::Hamming(2) => "hamming2",
            Family::Hamming(3) => "hamming3",
            Family::Hamming(4) => "hamming4",
            Family::Hamming(_) => unreachable!("validated at construction"),
        }
    }

    pub fn s(&self) -> usize {
        match self {
            Family::Johnson2 => 2,
            Family::Hamming(s) => *s,
        }
    }

    /// Default parameter range: the ranges the sweeps are known to be
    /// worthwhile on (the LP grows loose and slow beyond these).
    pub fn default_n_range(&self) -> (u32, u32) {
        match self {
            Family::Johnson2 => (6, 44),
            Family::Hamming(2) => (6, 78),
            Family::Hamming(3) => (8, 24),
            Family::Hamming(4) => (10, 33),
            Family::Hamming(_) => unreachable!(),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "johnson2" => Ok(Family::Johnson2),
            "hamming2" => Ok(Family::Hamming(2)),
            "hamming3" => Ok(Family::Hamming(3)),
            "hamming4" => Ok(Family::Hamming(4)),
            other => Err(Error::Domain(format!(
                "unknown family `{other}` (expected johnson2|hamming2|hamming3|hamming4)"
            ))),
        }
    }
}

/// Parameters of one sweep run.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub family: Family,
    /// Inclusive `n` range.
    pub n_range: (u32, u32),
    /// Inclusive `w` range (Johnson only); intersected with `3..=n/2`.
    pub w_range: Option<(u32, u32)>,
    /// Restrict the disposal rules to these methods; `None` means all.
    pub methods: Option<Vec<Method>>,
    pub lp_enabled: bool,
    /// Worker threads; 0 uses the global default.
    pub jobs: usize,
    /// Maximum number of LP solves before the sweep refuses.
    pub lp_budget: Option<u64>,
}

impl SweepSpec {
    pub fn new(family: Family) -> Self {
        SweepSpec {
            family,
            n_range: family.default_n_range(),
            w_range: None,
            methods: None,
            lp_enabled: true,
            jobs: 0,
            lp_budget: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_range.0 > self.n_range.1 {
            return Err(Error::Domain("empty n range".into()));
        }
        if let Some((lo, hi)) = self.w_range {
            if lo > hi {
                return Err(Error::Domain("empty w range".into()));
            }
        }
        if let Some(methods) = &self.methods {
            if methods.is_empty() {
                return Err(Error::Domain("empty method set".into()));
            }
        }
        Ok(())
    }

    fn method_allowed(&self, m: Method) -> bool {
        self.methods.as_ref().is_none_or(|set| set.contains(&m))
    }
}

/// How a distance set was disposed of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Disposal {
    /// A closed-form bound whose side condition held.
    Condition,
    /// Ratio-condition fallback `2n+3`.
    Lrs,
    /// Delsarte linear program.
    Lp,
    /// Nothing else applied; the all-degrees sum.
    Dgs,
}

impl Disposal {
    pub fn as_str(&self) -> &'static str {
        match self {
            Disposal::Condition => "condition",
            Disposal::Lrs => "lrs",
            Disposal::Lp => "lp",
            Disposal::Dgs => "dgs",
        }
    }
}

/// One parameter row of a sweep.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub n: u32,
    pub w_or_q: u32,
    pub s: usize,
    /// The distance set attaining the final bound (first in enumeration
    /// order on ties) and the rule that disposed of it.
    pub binding_set: Vec<u64>,
    pub disposal: Disposal,
    /// Max over distance sets of (min over applicable rules).
    pub bound: BigInt,
    /// Best known construction size.
    pub construction: BigInt,
    pub construction_note: &'static str,
    /// Bound equals construction: the maximum code size is pinned exactly.
    pub matched: bool,
    /// The family's generic claim fails on this row.
    pub exception: bool,
}

struct Budget<'a> {
    counter: &'a AtomicU64,
    limit: Option<u64>,
}

impl Budget<'_> {
    fn charge_lp(&self) -> Result<()> {
        let used = self.counter.fetch_add(1, Ordering::Relaxed) + 1;
        match self.limit {
            Some(limit) if used > limit => Err(Error::Budget(format!(
                "sweep requires more than {limit} LP solves; raise --budget or shrink the range"
            ))),
            _ => Ok(()),
        }
    }
}

fn lp_value(outcome: &LpBoundOutcome) -> BigInt {
    match &outcome.report.value {
        BoundValue::Finite(v) => v.clone(),
        BoundValue::Infinite => unreachable!("finite spaces always get a finite marker"),
    }
}

fn finite_value(report: &BoundReport) -> BigInt {
    report
        .value_int()
        .expect("condition bounds are finite")
        .clone()
}

/// Minimum over applicable rules; disposal priority on ties follows the
/// candidate order (condition, lrs, lp, dgs).
fn pick_min(candidates: Vec<(Disposal, BigInt)>) -> (Disposal, BigInt) {
    let mut best: Option<(Disposal, BigInt)> = None;
    for (class, value) in candidates {
        let better = match &best {
            None => true,
            Some((_, bv)) => value < *bv,
        };
        if better {
            best = Some((class, value));
        }
    }
    best.expect("at least the all-degrees fallback applies")
}

fn dispose_johnson2(
    spec: &SweepSpec,
    budget: &Budget,
    n: u32,
    w: u32,
    d1: u64,
    d2: u64,
) -> Result<(Disposal, BigInt)> {
    let space = Space::johnson(n, w)?;
    let ds = DistanceSet::from_integers(space, &[d1, d2])?;
    let mut candidates = Vec::new();
    if spec.method_allowed(Method::RcwNew) {
        let cond = corollary_bounds(&ds)?;
        if cond.applicable {
            candidates.push((Disposal::Condition, finite_value(&cond)));
        }
    }
    if spec.method_allowed(Method::LrsFallback) {
        let lrs = lrs_fallback_bound(n, d1, d2)?;
        if lrs.applicable {
            candidates.push((Disposal::Lrs, finite_value(&lrs)));
        }
    }
    if spec.lp_enabled && spec.method_allowed(Method::Lp) {
        budget.charge_lp()?;
        let out = delsarte_lp(&ds, None)?;
        candidates.push((Disposal::Lp, lp_value(&out)));
    }
    if candidates.is_empty() {
        candidates.push((Disposal::Dgs, finite_value(&dgs_bound(space, 2)?)));
    }
    Ok(pick_min(candidates))
}

fn dispose_hamming(
    spec: &SweepSpec,
    budget: &Budget,
    n: u32,
    dists: &[u64],
) -> Result<(Disposal, BigInt)> {
    let space = Space::hamming(n, 2)?;
    let ds = DistanceSet::from_integers(space, dists)?;
    let s = dists.len();
    let mut candidates = Vec::new();
    match s {
        2 => {
            if spec.method_allowed(Method::Binary2) {
                let cond = binary2_bound(n, dists[0], dists[1])?;
                if cond.applicable {
                    candidates.push((Disposal::Condition, finite_value(&cond)));
                }
            }
            if spec.method_allowed(Method::LrsFallback) {
                let lrs = lrs_fallback_bound(n, dists[0], dists[1])?;
                if lrs.applicable {
                    candidates.push((Disposal::Lrs, finite_value(&lrs)));
                }
            }
        }
        3 => {
            if spec.method_allowed(Method::Binary3) {
                let cond = binary3_bound(n, dists[0], dists[1], dists[2])?;
                if cond.applicable {
                    candidates.push((Disposal::Condition, finite_value(&cond)));
                }
            }
        }
        4 => {
            // positive-coefficient rule: with f_1 <= 0 and f_3 <= 0 the
            // expansion supports at most h_0 + h_2 + h_4
            if spec.method_allowed(Method::Nozaki) {
                let exp = expand(space, &annihilator(&ds))?;
                if !exp.coeff(1).is_positive() && !exp.coeff(3).is_positive() {
                    let value = BigInt::from(1)
                        + binom_int(n as u64, 2)
                        + binom_int(n as u64, 4);
                    candidates.push((Disposal::Condition, value));
                }
            }
        }
        _ => {
            return Err(Error::Domain(format!(
                "binary sweeps cover s in 2..=4, got {s}"
            )))
        }
    }
    if spec.lp_enabled && spec.method_allowed(Method::Lp) {
        budget.charge_lp()?;
        let out = delsarte_lp(&ds, None)?;
        candidates.push((Disposal::Lp, lp_value(&out)));
    }
    if candidates.is_empty() {
        candidates.push((Disposal::Dgs, finite_value(&dgs_bound(space, s)?)));
    }
    Ok(pick_min(candidates))
}

/// Best known construction for a parameter row, with its description.
pub fn construction(family: Family, n: u32, w: u32) -> (BigInt, &'static str) {
    let nu = n as u64;
    match family {
        Family::Johnson2 => {
            if (n, w) == (23, 7) {
                // 253 weight-7 words of the binary Golay code, distances {4,6}
                (BigInt::from(253), "weight-7 words of the length-23 Golay code")
            } else {
                (
                    binom_int(nu - w as u64 + 2, 2),
                    "w-2 ones fixed, 2 ones free (EKR-type)",
                )
            }
        }
        Family::Hamming(2) => (
            BigInt::from(1) + binom_int(nu, 2),
            "all weight-2 words plus the zero word",
        ),
        Family::Hamming(3) => {
            if n == 23 {
                (
                    BigInt::from(2048),
                    "even-weight subcode of the length-23 Golay code",
                )
            } else if n == 24 {
                (BigInt::from(2048), "half of the extended Golay code")
            } else {
                (
                    BigInt::from(nu) + binom_int(nu, 3),
                    "all words of weights 1 and 3",
                )
            }
        }
        Family::Hamming(4) => (
            BigInt::from(1) + binom_int(nu, 2) + binom_int(nu, 4),
            "all words of weights 0, 2, and 4",
        ),
        Family::Hamming(_) => unreachable!(),
    }
}

/// The generic per-row claim the family is expected to satisfy.
pub fn generic_claim(family: Family, n: u32) -> BigInt {
    let n_ = n as i64;
    match family {
        Family::Johnson2 => BigInt::from((n_ - 1) * (n_ - 2) / 2),
        Family::Hamming(2) => BigInt::from((n_ * n_ - n_ + 2) / 2),
        Family::Hamming(3) => BigInt::from(n_) + binom_int(n as u64, 3),
        Family::Hamming(4) => BigInt::from(1) + binom_int(n as u64, 2) + binom_int(n as u64, 4),
        Family::Hamming(_) => unreachable!(),
    }
}

fn distance_tuples(s: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(s);
    fn rec(out: &mut Vec<Vec<u64>>, current: &mut Vec<u64>, next: u64, max: u64, left: usize) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for d in next..=max.saturating_sub(left as u64 - 1) {
            current.push(d);
            rec(out, current, d + 1, max, left - 1);
            current.pop();
        }
    }
    rec(&mut out, &mut current, 1, max, s);
    out
}

fn sweep_row(
    spec: &SweepSpec,
    budget: &Budget,
    n: u32,
    w: u32,
) -> Result<SweepRow> {
    let family = spec.family;
    let s = family.s();
    let max = match family {
        Family::Johnson2 => w as u64,
        Family::Hamming(_) => n as u64,
    };
    let sets = distance_tuples(s, max);
    let disposed: Vec<(Disposal, BigInt)> = sets
        .par_iter()
        .map(|dists| match family {
            Family::Johnson2 => dispose_johnson2(spec, budget, n, w, dists[0], dists[1]),
            Family::Hamming(_) => dispose_hamming(spec, budget, n, dists),
        })
        .collect::<Result<_>>()?;

    let mut binding = 0usize;
    for (i, (_, value)) in disposed.iter().enumerate() {
        if *value > disposed[binding].1 {
            binding = i;
        }
    }
    let (disposal, bound) = disposed[binding].clone();
    let (construction, construction_note) = construction(family, n, w);
    let claim = generic_claim(family, n);
    let matched = bound == construction;
    let exception = bound > claim || construction > claim;
    Ok(SweepRow {
        n,
        w_or_q: match family {
            Family::Johnson2 => w,
            Family::Hamming(_) => 2,
        },
        s,
        binding_set: sets[binding].clone(),
        disposal,
        bound,
        construction,
        construction_note,
        matched,
        exception,
    })
}

/// Runs a sweep; rows come back in deterministic parameter order regardless
/// of worker count.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let mut params: Vec<(u32, u32)> = Vec::new();
    for n in spec.n_range.0..=spec.n_range.1 {
        match spec.family {
            Family::Johnson2 => {
                let (lo, hi) = spec.w_range.unwrap_or((3, n / 2));
                for w in lo.max(3)..=hi.min(n / 2) {
                    params.push((n, w));
                }
            }
            Family::Hamming(s) => {
                if n as usize >= s {
                    params.push((n, 2));
                }
            }
        }
    }
    let counter = AtomicU64::new(0);
    let budget = Budget {
        counter: &counter,
        limit: spec.lp_budget,
    };

    let work = || -> Result<Vec<SweepRow>> {
        params
            .par_iter()
            .map(|&(n, w)| sweep_row(spec, &budget, n, w))
            .collect()
    };
    if spec.jobs > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(spec.jobs)
            .build()
            .map_err(|e| Error::Domain(format!("worker pool: {e}")))?;
        pool.install(work)
    } else {
        work()
    }
}

/// Two-distance constant-weight sweep over inclusive ranges.
pub fn sweep_johnson_two_distance(
    n_range: (u32, u32),
    w_range: Option<(u32, u32)>,
) -> Result<Vec<SweepRow>> {
    let mut spec = SweepSpec::new(Family::Johnson2);
    spec.n_range = n_range;
    spec.w_range = w_range;
    run_sweep(&spec)
}

/// Binary s-distance sweep (`s` in 2..=4) over an inclusive `n` range.
pub fn sweep_hamming(s: usize, n_range: (u32, u32)) -> Result<Vec<SweepRow>> {
    if !(2..=4).contains(&s) {
        return Err(Error::Domain(format!("binary sweeps cover s in 2..=4, got {s}")));
    }
    let mut spec = SweepSpec::new(Family::Hamming(s));
    spec.n_range = n_range;
    run_sweep(&spec)
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

/// A `BigInt` as a JSON number when it fits, decimal string otherwise.
fn bigint_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

fn rational_json(r: &BigRational) -> Value {
    if r.is_integer() {
        bigint_json(&r.to_integer())
    } else {
        json!(format!("{}/{}", r.numer(), r.denom()))
    }
}

pub fn space_json(space: Space) -> Value {
    match space {
        Space::Hamming { n, q } => json!({"kind": "hamming", "n": n, "q": q}),
        Space::Johnson { n, w } => json!({"kind": "johnson", "n": n, "w": w}),
        Space::Sphere { n } => json!({"kind": "sphere", "n": n}),
    }
}

fn distances_json(values: &[BigRational]) -> Value {
    Value::Array(values.iter().map(rational_json).collect())
}

/// The report schema used by the `bound` and `lp` subcommands.
pub fn report_json(ds: &DistanceSet, report: &BoundReport) -> Value {
    json!({
        "space": space_json(ds.space()),
        "distances": distances_json(ds.values()),
        "method": report.method.as_str(),
        "value": match &report.value {
            BoundValue::Finite(v) => bigint_json(v),
            BoundValue::Infinite => Value::Null,
        },
        "value_exact": report.exact.as_ref().map(|r| format!("{}/{}", r.numer(), r.denom())),
        "applicable": report.applicable,
        "conditions": report.conditions.iter().map(|c| json!({
            "name": c.name,
            "ok": c.satisfied,
            "witness": c.witness.as_ref().map(rational_json),
        })).collect::<Vec<_>>(),
        "citation": report.citation,
    })
}

/// Extends [`report_json`] with the LP's primal, dual, and degree cap.
pub fn lp_json(ds: &DistanceSet, outcome: &LpBoundOutcome) -> Value {
    let mut base = report_json(ds, &outcome.report);
    let obj = base.as_object_mut().unwrap();
    obj.insert(
        "alpha".into(),
        Value::Array(outcome.solution.primal.iter().map(rational_json).collect()),
    );
    obj.insert(
        "dual".into(),
        Value::Array(outcome.solution.dual.iter().map(rational_json).collect()),
    );
    obj.insert("degree_cap".into(), json!(outcome.degree_cap));
    base
}

fn distance_set_string(values: &[u64]) -> String {
    values
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// CSV rendering: one line per row, RFC-style quoting on the distance set.
pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut out =
        String::from("n,w_or_q,s,distance_set,disposal,bound,construction,matched,exception\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},\"{}\",{},{},{},{},{}\n",
            r.n,
            r.w_or_q,
            r.s,
            distance_set_string(&r.binding_set),
            r.disposal.as_str(),
            r.bound,
            r.construction,
            r.matched,
            r.exception
        ));
    }
    out
}

/// JSON rendering with a versioned schema marker.
pub fn rows_to_json(family: Family, rows: &[SweepRow]) -> Value {
    json!({
        "schema": "fewdist-sweep/1",
        "family": family.as_str(),
        "rows": rows.iter().map(|r| json!({
            "n": r.n,
            "w_or_q": r.w_or_q,
            "s": r.s,
            "distance_set": r.binding_set,
            "disposal": r.disposal.as_str(),
            "bound": bigint_json(&r.bound),
            "construction": bigint_json(&r.construction),
            "construction_note": r.construction_note,
            "matched": r.matched,
            "exception": r.exception,
        })).collect::<Vec<_>>(),
    })
}

/// Human-readable table.
pub fn rows_to_table(rows: &[SweepRow]) -> String {
    let mut out = format!(
        "{:>4} {:>5} {:>2}  {:<16} {:<10} {:>14} {:>14} {:>8} {:>10}\n",
        "n", "w/q", "s", "binding set", "disposal", "bound", "construction", "matched", "exception"
    );
    for r in rows {
        out.push_str(&format!(
            "{:>4} {:>5} {:>2}  {:<16} {:<10} {:>14} {:>14} {:>8} {:>10}\n",
            r.n,
            r.w_or_q,
            r.s,
            format!("{{{}}}", distance_set_string(&r.binding_set)),
            r.disposal.as_str(),
            r.bound.to_string(),
            r.construction.to_string(),
            if r.matched { "yes" } else { "no" },
            if r.exception { "YES" } else { "no" },
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn johnson_13_5_row() {
        let rows = sweep_johnson_two_distance((13, 13), Some((5, 5))).unwrap();
        assert_eq!(rows.len(), 1);
        let row = &rows[0];
        assert_eq!(row.bound, BigInt::from(45));
        assert_eq!(row.construction, BigInt::from(45));
        assert!(row.matched);
        assert!(!row.exception);
        assert_eq!(row.binding_set, vec![1, 2]);
        assert_eq!(row.disposal, Disposal::Lp);
    }

    #[test]
    fn hamming2_n10_row() {
        let rows = sweep_hamming(2, (10, 10)).unwrap();
        let row = &rows[0];
        assert_eq!(row.bound, BigInt::from(46));
        assert!(row.matched);
        assert!(!row.exception);
    }

    #[test]
    fn determinism_across_worker_counts() {
        let mut spec = SweepSpec::new(Family::Johnson2);
        spec.n_range = (10, 13);
        spec.jobs = 1;
        let csv1 = rows_to_csv(&run_sweep(&spec).unwrap());
        spec.jobs = 4;
        let csv4 = rows_to_csv(&run_sweep(&spec).unwrap());
        assert_eq!(csv1, csv4);
    }

    #[test]
    fn budget_refusal() {
        let mut spec = SweepSpec::new(Family::Johnson2);
        spec.n_range = (12, 14);
        spec.lp_budget = Some(3);
        match run_sweep(&spec) {
            Err(Error::Budget(msg)) => assert!(msg.contains("LP solves")),
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn disposal_partition() {
        // each pair lands in exactly one class, and the class is consistent
        // with its rule's side condition
        let spec = SweepSpec::new(Family::Johnson2);
        let counter = AtomicU64::new(0);
        let budget = Budget { counter: &counter, limit: None };
        let (n, w) = (13u32, 5u32);
        let mut seen = 0;
        for d2 in 2..=w as u64 {
            for d1 in 1..d2 {
                let (class, value) = dispose_johnson2(&spec, &budget, n, w, d1, d2).unwrap();
                seen += 1;
                match class {
                    Disposal::Lrs => {
                        assert!(!crate::bounds::lrs_admissible(n, d1, d2).0);
                        assert_eq!(value, BigInt::from(2 * n as u64 + 3));
                    }
                    Disposal::Lp | Disposal::Condition => {}
                    Disposal::Dgs => panic!("dgs fallback should not fire with LP enabled"),
                }
            }
        }
        assert_eq!(seen, 10);
    }

    #[test]
    fn no_lp_sweep_still_classifies() {
        let mut spec = SweepSpec::new(Family::Johnson2);
        spec.n_range = (13, 13);
        spec.w_range = Some((5, 5));
        spec.lp_enabled = false;
        let rows = run_sweep(&spec).unwrap();
        // without the LP the corollary and fallback still dispose of all pairs
        assert_eq!(rows[0].bound, BigInt::from(66));
    }

    #[test]
    fn csv_shape() {
        let rows = sweep_johnson_two_distance((13, 13), Some((5, 5))).unwrap();
        let csv = rows_to_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "n,w_or_q,s,distance_set,disposal,bound,construction,matched,exception"
        );
        assert_eq!(lines.next().unwrap(), "13,5,2,\"1,2\",lp,45,45,true,false");
    }
}
