//! Closed-form upper bounds on few-distance codes.
//!
//! Every bound returns a [`BoundReport`] carrying the floored integer value,
//! the unfloored rational where the method produces one, and the full list of
//! side conditions that were checked, each with its exact witness.  A bound
//! whose side condition fails is *inapplicable*: it still reports a valid
//! fallback value (usually the positive-coefficient sum over all degrees) but
//! is skipped when the harness composes methods by taking minima.

use num_traits::{One, Zero};

use crate::exact::{binom_int, frac, rat, BigInt, BigRational};
use crate::expansion::{annihilator, expand, positive_dim_sum, DistanceSet};
use crate::spaces::{dim_h, recurrence_b, Space};
use crate::{Error, Result};

/// Which rule produced a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Dgs,
    Nozaki,
    ThmNew,
    Rcw,
    RcwNew,
    Def,
    Ekr,
    HammingEqH,
    Binary2,
    Binary3,
    SphereDgs,
    SphereEven,
    LrsFallback,
    Lp,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Dgs => "dgs",
            Method::Nozaki => "nozaki",
            Method::ThmNew => "thm-new",
            Method::Rcw => "rcw",
            Method::RcwNew => "rcw-new",
            Method::Def => "def",
            Method::Ekr => "ekr",
            Method::HammingEqH => "hamming-eqh",
            Method::Binary2 => "binary2",
            Method::Binary3 => "binary3",
            Method::SphereDgs => "sphere-dgs",
            Method::SphereEven => "sphere-even",
            Method::LrsFallback => "lrs",
            Method::Lp => "lp",
        }
    }

    pub const ALL: [Method; 14] = [
        Method::Dgs,
        Method::Nozaki,
        Method::ThmNew,
        Method::Rcw,
        Method::RcwNew,
        Method::Def,
        Method::Ekr,
        Method::HammingEqH,
        Method::Binary2,
        Method::Binary3,
        Method::SphereDgs,
        Method::SphereEven,
        Method::LrsFallback,
        Method::Lp,
    ];
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown method `{s}`")))
    }
}

/// One side condition of a bound, with its exact witness value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub name: String,
    pub satisfied: bool,
    pub witness: Option<BigRational>,
}

impl Condition {
    fn new(name: &str, satisfied: bool, witness: Option<BigRational>) -> Self {
        Condition {
            name: name.to_string(),
            satisfied,
            witness,
        }
    }
}

/// An upper-bound value; `Infinite` carries no information.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundValue {
    Finite(BigInt),
    Infinite,
}

impl BoundValue {
    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            BoundValue::Finite(v) => Some(v),
            BoundValue::Infinite => None,
        }
    }
}

impl std::fmt::Display for BoundValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundValue::Finite(v) => write!(f, "{v}"),
            BoundValue::Infinite => write!(f, "inf"),
        }
    }
}

/// A bound value together with the rule that produced it, the side
/// conditions that were checked, and a citation for the rule.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub method: Method,
    pub value: BoundValue,
    /// Unfloored rational optimum, when the method produces a non-integer.
    pub exact: Option<BigRational>,
    /// Whether every side condition of the method held.  Inapplicable
    /// reports still carry a valid fallback value.
    pub applicable: bool,
    pub conditions: Vec<Condition>,
    pub citation: String,
}

impl BoundReport {
    fn finite(method: Method, value: BigInt, citation: &str) -> Self {
        BoundReport {
            method,
            value: BoundValue::Finite(value),
            exact: None,
            applicable: true,
            conditions: Vec::new(),
            citation: citation.to_string(),
        }
    }

    fn with_exact(mut self, exact: BigRational) -> Self {
        self.exact = Some(exact);
        self
    }

    fn condition(mut self, name: &str, satisfied: bool, witness: Option<BigRational>) -> Self {
        if !satisfied {
            self.applicable = false;
        }
        self.conditions.push(Condition::new(name, satisfied, witness));
        self
    }

    /// Records a condition without affecting applicability (the reported
    /// value is valid either way).
    fn condition_info(mut self, name: &str, satisfied: bool, witness: Option<BigRational>) -> Self {
        self.conditions.push(Condition::new(name, satisfied, witness));
        self
    }

    /// Bound value as an integer, `None` when infinite.
    pub fn value_int(&self) -> Option<&BigInt> {
        self.value.as_int()
    }
}

fn dim_sum(space: Space, upto: usize) -> Result<BigInt> {
    let mut sum = BigInt::zero();
    for i in 0..=upto {
        sum += dim_h(space, i)?;
    }
    Ok(sum)
}

/// The value `h_0 + ... + h_{s-2} + h_s` shared by the refined bounds.
fn dropped_penultimate_sum(space: Space, s: usize) -> Result<BigInt> {
    debug_assert!(s >= 2);
    Ok(dim_sum(space, s - 2)? + dim_h(space, s)?)
}

/// Distance-sum defect `D = b_0 + ... + b_{s-1} - d_1 - ... - d_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DQuantity {
    pub value: BigRational,
}

impl DQuantity {
    pub fn compute(ds: &DistanceSet) -> Result<Self> {
        let mut value = -ds.sum();
        for i in 0..ds.size() {
            value += recurrence_b(ds.space(), i)?;
        }
        Ok(DQuantity { value })
    }
}

/// Positive-coefficient bound over all degrees: `|C| <= h_0 + ... + h_s`.
pub fn dgs_bound(space: Space, s: usize) -> Result<BoundReport> {
    Ok(BoundReport::finite(
        Method::Dgs,
        dim_sum(space, s)?,
        "Delsarte-Goethals-Seidel bound: |C| <= h_0 + ... + h_s",
    ))
}

/// Sum of `h_i` over the strictly positive coefficients of the annihilator's
/// expansion in the orthogonal basis.
pub fn nozaki_bound(ds: &DistanceSet) -> Result<BoundReport> {
    let exp = expand(ds.space(), &annihilator(ds))?;
    Ok(BoundReport::finite(
        Method::Nozaki,
        positive_dim_sum(&exp)?,
        "Nozaki bound: |C| <= sum of h_i over positive annihilator coefficients",
    ))
}

/// Refinement of the positive-coefficient bound that drops `h_{s-1}` when
/// the defect `D` has the right sign for the space's `c_i` sign pattern.
///
/// Requires `s >= 2`.  When the defect condition fails the report is marked
/// inapplicable and falls back to the all-degrees sum.
pub fn thm_new_bound(ds: &DistanceSet) -> Result<BoundReport> {
    let space = ds.space();
    let s = ds.size();
    let citation =
        "refined positive-coefficient bound: drops h_{s-1} under a distance-sum defect condition";
    if s < 2 {
        let fallback = dim_sum(space, s)?;
        return Ok(BoundReport::finite(Method::ThmNew, fallback, citation).condition(
            "s >= 2",
            false,
            Some(rat(s as i64)),
        ));
    }
    let d = DQuantity::compute(ds)?.value;
    match space {
        // c_i < 0 throughout: refined sum applies when D >= 0
        Space::Hamming { .. } | Space::Johnson { .. } => {
            if d >= BigRational::zero() {
                Ok(
                    BoundReport::finite(Method::ThmNew, dropped_penultimate_sum(space, s)?, citation)
                        .condition("D >= 0", true, Some(d)),
                )
            } else {
                Ok(BoundReport::finite(Method::ThmNew, dim_sum(space, s)?, citation)
                    .condition("D >= 0", false, Some(d)))
            }
        }
        // c_i > 0 but the zero-distance point sits above the distances, so
        // the annihilator positive at τ_0 = 1 is Π(x - t_i), whose top
        // coefficient r_s·c_1···c_s stays positive for every s.  Only
        // h_{s-1} can be dropped, and its coefficient c_1···c_{s-1}·D is
        // nonpositive exactly when D <= 0 (that is, Σt_i >= 0).
        Space::Sphere { .. } => {
            if d <= BigRational::zero() {
                Ok(
                    BoundReport::finite(Method::ThmNew, dropped_penultimate_sum(space, s)?, citation)
                        .condition("D <= 0 (sum of inner products >= 0)", true, Some(d)),
                )
            } else {
                Ok(BoundReport::finite(Method::ThmNew, dim_sum(space, s)?, citation)
                    .condition("D <= 0 (sum of inner products >= 0)", false, Some(d)))
            }
        }
    }
}

/// Plain intersecting-family bound `|F| <= C(n, s)`.
pub fn rcw_bound(n: u32, s: usize) -> BoundReport {
    BoundReport::finite(
        Method::Rcw,
        binom_int(n as u64, s as i64),
        "Ray-Chaudhuri-Wilson bound: |F| <= C(n, s)",
    )
}

fn check_ells(n: u32, w: u32, ells: &[u64]) -> Result<()> {
    if ells.is_empty() {
        return Err(Error::Domain("need at least one intersection size".into()));
    }
    if 2 * w > n || w == 0 {
        return Err(Error::Domain(format!("need 0 < w <= n/2, got n={n}, w={w}")));
    }
    for (i, l) in ells.iter().enumerate() {
        if *l >= w as u64 {
            return Err(Error::Domain(format!("intersection size {l} not below w={w}")));
        }
        if ells[..i].contains(l) {
            return Err(Error::Domain(format!("duplicate intersection size {l}")));
        }
    }
    Ok(())
}

/// Improved intersecting-family bound: when the intersection sizes are large
/// enough the count drops to `C(n,s) - C(n,s-1)·(n-2s+3)/(n-s+2)`.
pub fn rcw_new_bound(n: u32, w: u32, ells: &[u64]) -> Result<BoundReport> {
    check_ells(n, w, ells)?;
    let s = ells.len();
    let citation = "improved Ray-Chaudhuri-Wilson bound under the intersection-sum condition";
    let (n_, w_, s_) = (n as i64, w as i64, s as i64);
    // threshold s(w² - (s-1)(2w - n/2)) / (n - 2(s-1))
    let threshold = rat(s_) * (rat(w_ * w_) - rat(s_ - 1) * (rat(2 * w_) - frac(n_, 2)))
        / rat(n_ - 2 * (s_ - 1));
    let ell_sum = rat(ells.iter().map(|&l| l as i64).sum::<i64>());
    let ok = ell_sum >= threshold;
    let margin = &ell_sum - &threshold;
    if ok {
        let exact = rat(1) * BigRational::from_integer(binom_int(n as u64, s_))
            - BigRational::from_integer(binom_int(n as u64, s_ - 1))
                * frac(n_ - 2 * s_ + 3, n_ - s_ + 2);
        let value = exact.floor().to_integer();
        Ok(BoundReport::finite(Method::RcwNew, value, citation)
            .with_exact(exact)
            .condition("intersection-sum margin >= 0", true, Some(margin)))
    } else {
        Ok(
            BoundReport::finite(Method::RcwNew, binom_int(n as u64, s_), citation).condition(
                "intersection-sum margin >= 0",
                false,
                Some(margin),
            ),
        )
    }
}

/// Constant-weight specializations for two and three distances:
/// `(n-1)(n-2)/2` and `floor(n(n²-6n+11)/6)` under distance-sum conditions.
pub fn corollary_bounds(ds: &DistanceSet) -> Result<BoundReport> {
    let Space::Johnson { n, w } = ds.space() else {
        return Err(Error::Domain(
            "the constant-weight corollaries apply to the Johnson space only".into(),
        ));
    };
    let s = ds.size();
    let (n_, w_) = (n as i64, w as i64);
    let sum = ds.sum();
    match s {
        2 => {
            let citation = "constant-weight 2-distance bound (n-1)(n-2)/2 under d_1+d_2 condition";
            let threshold = frac(2 * w_ * (n_ - w_) - n_, n_ - 2);
            let margin = &threshold - &sum;
            if sum <= threshold {
                let value = BigInt::from((n_ - 1) * (n_ - 2) / 2);
                Ok(BoundReport::finite(Method::RcwNew, value, citation).condition(
                    "d_1+d_2 <= (2w(n-w)-n)/(n-2)",
                    true,
                    Some(margin),
                ))
            } else {
                Ok(
                    BoundReport::finite(Method::RcwNew, binom_int(n as u64, 2), citation)
                        .condition("d_1+d_2 <= (2w(n-w)-n)/(n-2)", false, Some(margin)),
                )
            }
        }
        3 => {
            let citation =
                "constant-weight 3-distance bound n(n²-6n+11)/6 under d_1+d_2+d_3 condition";
            let threshold = frac(3 * w_ * (n_ - w_) - 3 * n_, n_ - 4);
            let margin = &threshold - &sum;
            if sum <= threshold {
                let exact = frac(n_ * (n_ * n_ - 6 * n_ + 11), 6);
                let value = exact.floor().to_integer();
                Ok(BoundReport::finite(Method::RcwNew, value, citation)
                    .with_exact(exact)
                    .condition("d_1+d_2+d_3 <= (3w(n-w)-3n)/(n-4)", true, Some(margin)))
            } else {
                Ok(
                    BoundReport::finite(Method::RcwNew, binom_int(n as u64, 3), citation)
                        .condition("d_1+d_2+d_3 <= (3w(n-w)-3n)/(n-4)", false, Some(margin)),
                )
            }
        }
        _ => Err(Error::Domain(format!(
            "constant-weight corollaries cover s = 2 or 3, got s = {s}"
        ))),
    }
}

/// Product bound `|F| <= Π (n-l_i)/(w-l_i)`, valid for `n >= w·C(3w, w)`.
/// The applicability condition is recorded, not enforced.
pub fn def_bound(n: u32, w: u32, ells: &[u64]) -> Result<BoundReport> {
    check_ells(n, w, ells)?;
    let citation = "Deza-Erdos-Frankl bound: |F| <= prod (n-l_i)/(w-l_i) for n >= w·C(3w,w)";
    let mut exact = BigRational::one();
    for &l in ells {
        exact *= frac(n as i64 - l as i64, w as i64 - l as i64);
    }
    let value = exact.floor().to_integer();
    let gate = BigRational::from_integer(BigInt::from(w) * binom_int(3 * w as u64, w as i64));
    let nn = rat(n as i64);
    let ok = nn >= gate;
    Ok(BoundReport::finite(Method::Def, value, citation)
        .with_exact(exact)
        .condition("n >= w·C(3w, w)", ok, Some(nn - gate)))
}

/// Erdos-Ko-Rado-type bound `|F| <= C(n-w+s, s)`, valid for
/// `n >= (w-s+1)(s+1)`; the condition is recorded, not enforced.
pub fn ekr_bound(n: u32, w: u32, s: usize) -> Result<BoundReport> {
    if s == 0 || s as u64 > w as u64 {
        return Err(Error::Domain(format!("need 1 <= s <= w, got s={s}, w={w}")));
    }
    if 2 * w > n {
        return Err(Error::Domain(format!("need w <= n/2, got n={n}, w={w}")));
    }
    let citation = "Erdos-Ko-Rado bound: |F| <= C(n-w+s, s) for n >= (w-s+1)(s+1)";
    let value = binom_int(n as u64 - w as u64 + s as u64, s as i64);
    let gate = (w as i64 - s as i64 + 1) * (s as i64 + 1);
    let ok = n as i64 >= gate;
    Ok(BoundReport::finite(Method::Ekr, value, citation).condition(
        "n >= (w-s+1)(s+1)",
        ok,
        Some(rat(n as i64 - gate)),
    ))
}

/// q-ary few-distance bound: when the distance sum is at most
/// `(s/q)·((q-1)n - (q-2)(s-1)/2)` the count drops to
/// `h_0 + ... + h_{s-2} + h_s`.
pub fn hamming_eqh_bound(ds: &DistanceSet) -> Result<BoundReport> {
    let space = ds.space();
    let Space::Hamming { n, q } = space else {
        return Err(Error::Domain("this bound applies to the Hamming space only".into()));
    };
    let s = ds.size();
    let citation = "q-ary few-distance bound: h_0+...+h_{s-2}+h_s under the distance-sum condition";
    if s < 2 {
        let fallback = dim_sum(space, s)?;
        return Ok(BoundReport::finite(Method::HammingEqH, fallback, citation).condition(
            "s >= 2",
            false,
            Some(rat(s as i64)),
        ));
    }
    let (n_, q_, s_) = (n as i64, q as i64, s as i64);
    let threshold = frac(s_, q_) * (rat((q_ - 1) * n_) - frac((q_ - 2) * (s_ - 1), 2));
    let sum = ds.sum();
    let margin = &threshold - &sum;
    if sum <= threshold {
        Ok(
            BoundReport::finite(Method::HammingEqH, dropped_penultimate_sum(space, s)?, citation)
                .condition("d_1+...+d_s <= (s/q)[(q-1)n - (q-2)(s-1)/2]", true, Some(margin)),
        )
    } else {
        Ok(BoundReport::finite(Method::HammingEqH, dim_sum(space, s)?, citation).condition(
            "d_1+...+d_s <= (s/q)[(q-1)n - (q-2)(s-1)/2]",
            false,
            Some(margin),
        ))
    }
}

/// Binary two-distance bound `(n²-n+2)/2` when `d_1 + d_2 <= n`.
pub fn binary2_bound(n: u32, d1: u64, d2: u64) -> Result<BoundReport> {
    let space = Space::hamming(n, 2)?;
    let ds = DistanceSet::from_integers(space, &[d1, d2])?;
    let citation = "binary 2-distance bound: (n²-n+2)/2 when d_1+d_2 <= n";
    let n_ = n as i64;
    let margin = rat(n_) - ds.sum();
    if margin >= BigRational::zero() {
        let value = BigInt::from((n_ * n_ - n_ + 2) / 2);
        Ok(BoundReport::finite(Method::Binary2, value, citation).condition(
            "d_1+d_2 <= n",
            true,
            Some(margin),
        ))
    } else {
        Ok(BoundReport::finite(Method::Binary2, dim_sum(space, 2)?, citation).condition(
            "d_1+d_2 <= n",
            false,
            Some(margin),
        ))
    }
}

/// Constant coefficient of the binary three-distance annihilator:
/// `f_0 = -(n/2-d_1)(n/2-d_2)(n/2-d_3) + (n/4)(d_1+d_2+d_3) - 3n²/8`.
pub fn binary3_f0(n: u32, d1: u64, d2: u64, d3: u64) -> BigRational {
    let n_ = n as i64;
    let half = frac(n_, 2);
    let term = |d: u64| &half - &rat(d as i64);
    -(term(d1) * term(d2) * term(d3)) + frac(n_, 4) * rat((d1 + d2 + d3) as i64)
        - frac(3 * n_ * n_, 8)
}

/// Binary three-distance bound.  Under `d_1+d_2+d_3 <= 3n/2` the count is at
/// most `1 + n + C(n,3)`; if additionally `f_0 <= 0` it drops to `n + C(n,3)`.
///
/// The classical phrasing of the refinement — none or two of the distances
/// exceed `n/2` — is recorded as a separate informational condition; the
/// decision is made on the sign of `f_0` directly.
pub fn binary3_bound(n: u32, d1: u64, d2: u64, d3: u64) -> Result<BoundReport> {
    let space = Space::hamming(n, 2)?;
    let ds = DistanceSet::from_integers(space, &[d1, d2, d3])?;
    let citation = "binary 3-distance bound: n + C(n,3) when d_1+d_2+d_3 <= 3n/2 and f_0 <= 0";
    let n_ = n as i64;
    let margin = frac(3 * n_, 2) - ds.sum();
    let f0 = binary3_f0(n, d1, d2, d3);
    let above_half = [d1, d2, d3]
        .iter()
        .filter(|&&d| rat(d as i64) > frac(n_, 2))
        .count();
    let verbal_ok = above_half == 0 || above_half == 2;
    let weak = BigInt::from(1 + n_) + binom_int(n as u64, 3);
    let strong = BigInt::from(n_) + binom_int(n as u64, 3);
    let report = if margin >= BigRational::zero() {
        if f0 <= BigRational::zero() {
            BoundReport::finite(Method::Binary3, strong, citation)
                .condition("d_1+d_2+d_3 <= 3n/2", true, Some(margin))
                .condition_info("f_0 <= 0", true, Some(f0))
        } else {
            // the weaker 1 + n + C(n,3) still holds under the sum condition
            BoundReport::finite(Method::Binary3, weak, citation)
                .condition("d_1+d_2+d_3 <= 3n/2", true, Some(margin))
                .condition_info("f_0 <= 0", false, Some(f0))
        }
    } else {
        BoundReport::finite(Method::Binary3, dim_sum(space, 3)?, citation).condition(
            "d_1+d_2+d_3 <= 3n/2",
            false,
            Some(margin),
        )
    };
    Ok(report.condition_info(
        "none or two distances exceed n/2 (informational)",
        verbal_ok,
        Some(rat(above_half as i64)),
    ))
}

/// Spherical positive-coefficient bound in closed form:
/// `M_s = C(n+s-1, s) + C(n+s-2, s-1)`.
pub fn sphere_dgs_bound(n: u32, s: usize) -> BoundReport {
    let value = binom_int(n as u64 + s as u64 - 1, s as i64)
        + binom_int(n as u64 + s as u64 - 2, s as i64 - 1);
    BoundReport::finite(
        Method::SphereDgs,
        value,
        "spherical Delsarte-Goethals-Seidel bound M_s = C(n+s-1,s) + C(n+s-2,s-1)",
    )
}

/// Even-s spherical improvement: when `s` is even and `t_1 + ... + t_s >= 0`,
/// `|C| <= M_{s-2} + ((n+2s-2)/s)·C(n+s-3, s-1)`.
pub fn sphere_even_bound(ds: &DistanceSet) -> Result<BoundReport> {
    let Space::Sphere { n } = ds.space() else {
        return Err(Error::Domain("this bound applies to the sphere only".into()));
    };
    let s = ds.size();
    let citation = "even-s spherical bound: M_{s-2} + ((n+2s-2)/s)·C(n+s-3, s-1) when Σt_i >= 0";
    let sum = ds.sum();
    let even = s % 2 == 0 && s >= 2;
    if even && sum >= BigRational::zero() {
        let m_sm2 = sphere_dgs_bound(n, s - 2).value_int().unwrap().clone();
        let exact = BigRational::from_integer(m_sm2)
            + frac(n as i64 + 2 * s as i64 - 2, s as i64)
                * BigRational::from_integer(binom_int(n as u64 + s as u64 - 3, s as i64 - 1));
        debug_assert!(exact.is_integer());
        Ok(BoundReport::finite(Method::SphereEven, exact.to_integer(), citation)
            .condition("s even", true, Some(rat(s as i64)))
            .condition("t_1+...+t_s >= 0", true, Some(sum)))
    } else {
        let fallback = sphere_dgs_bound(n, s).value_int().unwrap().clone();
        Ok(BoundReport::finite(Method::SphereEven, fallback, citation)
            .condition("s even", s % 2 == 0 && s >= 2, Some(rat(s as i64)))
            .condition("t_1+...+t_s >= 0", sum >= BigRational::zero(), Some(sum)))
    }
}

/// Tests the ratio condition for large binary two-distance sets:
/// `d_1/d_2 = (k-1)/k` for an integer `k` with `2 <= k` and `(2k-1)² <= 2n`.
///
/// Returns the witness `k` when the pair is admissible.  Inadmissible pairs
/// support the fallback bound `|C| <= 2n + 3`.
pub fn lrs_admissible(n: u32, d1: u64, d2: u64) -> (bool, Option<u64>) {
    debug_assert!(d1 < d2);
    let diff = d2 - d1;
    if d2 % diff != 0 {
        return (false, None);
    }
    let k = d2 / diff;
    if k < 2 {
        return (false, None);
    }
    if (2 * k - 1).pow(2) <= 2 * n as u64 {
        (true, Some(k))
    } else {
        (false, None)
    }
}

/// Fallback bound `2n + 3` for pairs failing the ratio condition.
/// Admissible pairs get an inapplicable, infinite report.
pub fn lrs_fallback_bound(n: u32, d1: u64, d2: u64) -> Result<BoundReport> {
    if d1 == 0 || d1 >= d2 {
        return Err(Error::Domain(format!("need 1 <= d1 < d2, got ({d1}, {d2})")));
    }
    let citation = "Larman-Rogers-Seidel fallback: |C| <= 2n+3 unless d_1/d_2 = (k-1)/k with (2k-1)² <= 2n";
    let (admissible, k) = lrs_admissible(n, d1, d2);
    if admissible {
        Ok(BoundReport {
            method: Method::LrsFallback,
            value: BoundValue::Infinite,
            exact: None,
            applicable: true,
            conditions: Vec::new(),
            citation: citation.to_string(),
        }
        .condition(
            "ratio inadmissible",
            false,
            k.map(|k| rat(k as i64)),
        ))
    } else {
        Ok(
            BoundReport::finite(Method::LrsFallback, BigInt::from(2 * n as u64 + 3), citation)
                .condition("ratio inadmissible", true, None),
        )
    }
}
