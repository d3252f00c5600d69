//! Exact-rational linear programming and the Delsarte bound.
//!
//! The solver is a dense two-phase simplex with Bland's anti-cycling rule,
//! running entirely over `BigRational`.  Problems here are tiny (a handful of
//! variables, at most a few dozen constraints), so correctness and exact dual
//! certificates matter more than speed.  Every tableau entry is a reduced
//! rational by construction, which keeps coefficient growth in check.

use num_traits::{One, Signed, Zero};

use crate::bounds::{BoundReport, BoundValue, Condition, Method};
use crate::exact::{rat, BigRational};
use crate::expansion::DistanceSet;
use crate::spaces::{dim_h, ortho_eval, Space};
use crate::{Error, Result};

/// Maximize `objective·x + constant` subject to `row·x >= rhs` and `x >= 0`.
#[derive(Clone, Debug)]
pub struct LpProblem {
    objective: Vec<BigRational>,
    constant: BigRational,
    rows: Vec<(Vec<BigRational>, BigRational)>,
}

impl LpProblem {
    pub fn maximize(objective: Vec<BigRational>, constant: BigRational) -> Self {
        LpProblem {
            objective,
            constant,
            rows: Vec::new(),
        }
    }

    /// Adds the constraint `coeffs·x >= rhs`.
    pub fn add_ge(&mut self, coeffs: Vec<BigRational>, rhs: BigRational) {
        assert_eq!(coeffs.len(), self.objective.len(), "row width mismatch");
        self.rows.push((coeffs, rhs));
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn objective(&self) -> &[BigRational] {
        &self.objective
    }

    pub fn constant(&self) -> &BigRational {
        &self.constant
    }

    pub fn rows(&self) -> &[(Vec<BigRational>, BigRational)] {
        &self.rows
    }

    /// The same problem without one constraint row.
    pub fn without_row(&self, idx: usize) -> LpProblem {
        let mut p = self.clone();
        p.rows.remove(idx);
        p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Solution of an [`LpProblem`].
///
/// At `Optimal` the primal is feasible, the dual is feasible for the dual
/// program (`dualᵀA >= c` componentwise, entries `<= 0` for `>=` rows), and
/// `dual·rhs` equals the optimum minus the objective constant; complementary
/// slackness holds exactly.
#[derive(Clone, Debug)]
pub struct LpSolution {
    pub status: LpStatus,
    pub value: BigRational,
    pub primal: Vec<BigRational>,
    pub dual: Vec<BigRational>,
}

struct Tableau {
    // rows[j] has ncols entries followed by the rhs
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, j: usize) -> &BigRational {
        &self.rows[j][self.ncols]
    }

    fn pivot(&mut self, prow: usize, pcol: usize, obj: &mut [BigRational]) {
        let inv = self.rows[prow][pcol].clone().recip();
        for entry in self.rows[prow].iter_mut() {
            *entry *= &inv;
        }
        for j in 0..self.rows.len() {
            if j == prow {
                continue;
            }
            let factor = self.rows[j][pcol].clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..=self.ncols {
                let delta = &factor * &self.rows[prow][c];
                self.rows[j][c] -= delta;
            }
        }
        let factor = obj[pcol].clone();
        if !factor.is_zero() {
            for c in 0..=self.ncols {
                let delta = &factor * &self.rows[prow][c];
                obj[c] -= delta;
            }
        }
        self.basis[prow] = pcol;
    }

    /// One Bland step: entering column is the lowest-index improving one,
    /// leaving row breaks ratio ties by the lowest basic variable index.
    fn bland_step(&mut self, obj: &mut [BigRational], allowed: impl Fn(usize) -> bool) -> Step {
        let entering = (0..self.ncols).find(|&c| allowed(c) && obj[c].is_positive());
        let Some(e) = entering else {
            return Step::Optimal;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for j in 0..self.rows.len() {
            let pivot = &self.rows[j][e];
            if !pivot.is_positive() {
                continue;
            }
            let ratio = self.rhs(j) / pivot;
            let better = match &leave {
                None => true,
                Some((jj, best)) => {
                    ratio < *best || (ratio == *best && self.basis[j] < self.basis[*jj])
                }
            };
            if better {
                leave = Some((j, ratio));
            }
        }
        let Some((prow, _)) = leave else {
            return Step::Unbounded;
        };
        self.pivot(prow, e, obj);
        Step::Pivoted
    }
}

enum Step {
    Pivoted,
    Optimal,
    Unbounded,
}

/// Reduced-cost row `c - c_B·T` for a basis (with a spare rhs slot).
fn reduced_costs(t: &Tableau, cost: &[BigRational]) -> Vec<BigRational> {
    let mut obj = cost.to_vec();
    obj.push(BigRational::zero());
    for (j, &b) in t.basis.iter().enumerate() {
        let cb = &cost[b];
        if cb.is_zero() {
            continue;
        }
        for c in 0..=t.ncols {
            let delta = cb * &t.rows[j][c];
            obj[c] -= delta;
        }
    }
    obj
}

/// Exact two-phase simplex.  `Infeasible`/`Unbounded` are ordinary statuses.
pub fn simplex(p: &LpProblem) -> LpSolution {
    let nv = p.num_vars();
    let m = p.num_rows();
    let nslack = m;

    // Equality form: sigma_j·(a_j·x) - sigma_j·s_j = sigma_j·b_j with
    // sigma chosen so every rhs is nonnegative.  Rows with positive rhs get
    // an artificial basic variable; the rest start with their slack basic.
    let mut sigma = vec![BigRational::one(); m];
    let mut art_of_row: Vec<Option<usize>> = vec![None; m];
    let mut narts = 0;
    for (j, (_, rhs)) in p.rows.iter().enumerate() {
        if rhs.is_positive() {
            art_of_row[j] = Some(narts);
            narts += 1;
        } else {
            sigma[j] = -BigRational::one();
        }
    }
    let ncols = nv + nslack + narts;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for (j, (coeffs, rhs)) in p.rows.iter().enumerate() {
        let mut row = vec![BigRational::zero(); ncols + 1];
        for (i, a) in coeffs.iter().enumerate() {
            row[i] = a * &sigma[j];
        }
        row[nv + j] = -&sigma[j];
        if let Some(a) = art_of_row[j] {
            row[nv + nslack + a] = BigRational::one();
            basis.push(nv + nslack + a);
        } else {
            basis.push(nv + j);
        }
        row[ncols] = rhs * &sigma[j];
        rows.push(row);
    }
    let mut t = Tableau { rows, basis, ncols };

    // original equality-form matrix, kept for the dual solve
    let orig: Vec<Vec<BigRational>> = t.rows.clone();
    // tableau row -> original row index; shrinks when redundant rows drop
    let mut alive: Vec<usize> = (0..m).collect();

    if narts > 0 {
        // Phase 1: maximize -(sum of artificials)
        let mut cost = vec![BigRational::zero(); ncols];
        for a in 0..narts {
            cost[nv + nslack + a] = -BigRational::one();
        }
        let mut obj = reduced_costs(&t, &cost);
        loop {
            match t.bland_step(&mut obj, |_| true) {
                Step::Pivoted => {}
                Step::Optimal => break,
                Step::Unbounded => unreachable!("phase 1 objective is bounded above by zero"),
            }
        }
        let attained: BigRational = t
            .basis
            .iter()
            .enumerate()
            .map(|(j, &b)| &cost[b] * t.rhs(j))
            .sum();
        if attained.is_negative() {
            return LpSolution {
                status: LpStatus::Infeasible,
                value: BigRational::zero(),
                primal: Vec::new(),
                dual: Vec::new(),
            };
        }
        // Drive leftover artificials out of the basis; drop redundant rows.
        let mut j = 0;
        while j < t.rows.len() {
            if t.basis[j] >= nv + nslack {
                match (0..nv + nslack).find(|&c| !t.rows[j][c].is_zero()) {
                    Some(c) => {
                        let mut scratch = vec![BigRational::zero(); ncols + 1];
                        t.pivot(j, c, &mut scratch);
                    }
                    None => {
                        t.rows.remove(j);
                        t.basis.remove(j);
                        alive.remove(j);
                        continue;
                    }
                }
            }
            j += 1;
        }
    }

    // Phase 2: the real objective, artificial columns banned.
    let mut cost = vec![BigRational::zero(); ncols];
    cost[..nv].clone_from_slice(&p.objective);
    let mut obj = reduced_costs(&t, &cost);
    let structural_limit = nv + nslack;
    loop {
        match t.bland_step(&mut obj, |c| c < structural_limit) {
            Step::Pivoted => {}
            Step::Optimal => break,
            Step::Unbounded => {
                return LpSolution {
                    status: LpStatus::Unbounded,
                    value: BigRational::zero(),
                    primal: Vec::new(),
                    dual: Vec::new(),
                }
            }
        }
    }

    let mut primal = vec![BigRational::zero(); nv];
    for (j, &b) in t.basis.iter().enumerate() {
        if b < nv {
            primal[b] = t.rhs(j).clone();
        }
    }
    let value = p
        .objective
        .iter()
        .zip(&primal)
        .map(|(c, x)| c * x)
        .fold(p.constant.clone(), |acc, v| acc + v);

    let dual = solve_dual(p, &t, &orig, &sigma, &cost, &alive, nv, nslack);

    debug_assert!(verify_optimal(p, &primal, &dual, &value));

    LpSolution {
        status: LpStatus::Optimal,
        value,
        primal,
        dual,
    }
}

/// Solves `Bᵀy = c_B` over the original equality matrix and maps the
/// multipliers back to the user's `>=` rows (0 for dropped redundant rows).
fn solve_dual(
    p: &LpProblem,
    t: &Tableau,
    orig: &[Vec<BigRational>],
    sigma: &[BigRational],
    cost: &[BigRational],
    alive: &[usize],
    nv: usize,
    nslack: usize,
) -> Vec<BigRational> {
    let m_alive = t.rows.len();
    debug_assert_eq!(alive.len(), m_alive);

    let mut mat = vec![vec![BigRational::zero(); m_alive + 1]; m_alive];
    for (k, &bcol) in t.basis.iter().enumerate() {
        debug_assert!(bcol < nv + nslack, "artificials never stay basic");
        for (jj, &orig_row) in alive.iter().enumerate() {
            mat[k][jj] = orig[orig_row][bcol].clone();
        }
        mat[k][m_alive] = cost[bcol].clone();
    }
    let y = gauss_solve(mat);

    let mut dual = vec![BigRational::zero(); p.num_rows()];
    for (jj, &orig_row) in alive.iter().enumerate() {
        dual[orig_row] = &y[jj] * &sigma[orig_row];
    }
    dual
}

/// Gaussian elimination on an augmented exact system; the matrix is square
/// and nonsingular (it is a simplex basis).
fn gauss_solve(mut mat: Vec<Vec<BigRational>>) -> Vec<BigRational> {
    let n = mat.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !mat[r][col].is_zero())
            .expect("basis matrix is nonsingular");
        mat.swap(col, pivot);
        let inv = mat[col][col].clone().recip();
        for c in col..=n {
            mat[col][c] *= &inv;
        }
        for r in 0..n {
            if r != col && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in col..=n {
                    let delta = &f * &mat[col][c];
                    mat[r][c] -= delta;
                }
            }
        }
    }
    (0..n).map(|r| mat[r][n].clone()).collect()
}

/// Exact optimality check: primal feasibility, dual feasibility,
/// strong duality, and complementary slackness.
pub fn verify_optimal(
    p: &LpProblem,
    primal: &[BigRational],
    dual: &[BigRational],
    value: &BigRational,
) -> bool {
    // primal feasible
    for x in primal {
        if x.is_negative() {
            return false;
        }
    }
    for (j, (row, rhs)) in p.rows.iter().enumerate() {
        let lhs: BigRational = row.iter().zip(primal).map(|(a, x)| a * x).sum();
        if lhs < *rhs {
            return false;
        }
        // complementary slackness on rows
        if !dual[j].is_zero() && lhs != *rhs {
            return false;
        }
    }
    // dual feasible: multipliers <= 0 and dualᵀA >= c componentwise
    for d in dual {
        if d.is_positive() {
            return false;
        }
    }
    for i in 0..p.num_vars() {
        let col: BigRational = p.rows.iter().zip(dual).map(|((row, _), d)| &row[i] * d).sum();
        if col < p.objective[i] {
            return false;
        }
        // complementary slackness on variables
        if !primal[i].is_zero() && col != p.objective[i] {
            return false;
        }
    }
    // strong duality
    let dual_value: BigRational = p.rows.iter().zip(dual).map(|((_, rhs), d)| rhs * d).sum();
    &dual_value + &p.constant == *value
}

/// Outcome of a Delsarte linear program, with the raw solution attached.
#[derive(Clone, Debug)]
pub struct LpBoundOutcome {
    pub report: BoundReport,
    pub solution: LpSolution,
    /// Highest polynomial degree used in the constraints.
    pub degree_cap: usize,
}

/// The distance-distribution linear program: maximize `1 + Σ α_i` subject to
/// `Σ_i α_i·p_k(d_i) >= -p_k(τ_0)` for `k = 0..=K` and `α >= 0`.
///
/// `K` defaults to the space's rank on the finite spaces; the sphere's
/// constraint family is infinite, so a degree cap is required there.
/// Truncation only ever enlarges the feasible set, so a capped optimum is
/// still a valid upper bound.
pub fn delsarte_lp(ds: &DistanceSet, degree_cap: Option<usize>) -> Result<LpBoundOutcome> {
    let space = ds.space();
    let cap = match (space.max_degree(), degree_cap) {
        (Some(rank), cap) => cap.unwrap_or(rank).min(rank),
        (None, Some(cap)) => cap,
        (None, None) => {
            return Err(Error::Domain(
                "the sphere's constraint family is infinite; pass a degree cap".into(),
            ))
        }
    };
    let s = ds.size();
    let mut problem = LpProblem::maximize(vec![BigRational::one(); s], BigRational::one());
    let per_distance: Vec<Vec<BigRational>> = ds
        .values()
        .iter()
        .map(|d| ortho_eval(space, cap, d))
        .collect::<Result<_>>()?;
    for k in 0..=cap {
        let coeffs: Vec<BigRational> = per_distance.iter().map(|v| v[k].clone()).collect();
        let rhs = match space {
            Space::Sphere { .. } => -BigRational::one(),
            _ => -BigRational::from_integer(dim_h(space, k)?),
        };
        problem.add_ge(coeffs, rhs);
    }

    let solution = simplex(&problem);
    let citation = "Delsarte linear programming bound";
    let report = match solution.status {
        LpStatus::Optimal => {
            let exact = solution.value.clone();
            let value = exact.floor().to_integer();
            let mut rep = BoundReport {
                method: Method::Lp,
                value: BoundValue::Finite(value),
                exact: Some(exact),
                applicable: true,
                conditions: Vec::new(),
                citation: citation.to_string(),
            };
            if !space.is_finite() {
                rep.conditions.push(Condition {
                    name: "degree-truncated (bound remains valid)".into(),
                    satisfied: true,
                    witness: Some(rat(cap as i64)),
                });
            }
            rep
        }
        LpStatus::Unbounded => {
            let value = match space.point_count() {
                Some(count) => BoundValue::Finite(count),
                None => BoundValue::Infinite,
            };
            BoundReport {
                method: Method::Lp,
                value,
                exact: None,
                applicable: true,
                conditions: vec![Condition {
                    name: "lp-bounded (optimum carries no information)".into(),
                    satisfied: false,
                    witness: None,
                }],
                citation: citation.to_string(),
            }
        }
        LpStatus::Infeasible => {
            return Err(Error::Domain(
                "distance-distribution program infeasible; this cannot happen with α = 0".into(),
            ))
        }
    };
    Ok(LpBoundOutcome {
        report,
        solution,
        degree_cap: cap,
    })
}

/// [`delsarte_lp`] reduced to the report alone.
pub fn delsarte_lp_bound(ds: &DistanceSet, degree_cap: Option<usize>) -> Result<BoundReport> {
    Ok(delsarte_lp(ds, degree_cap)?.report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, BigInt};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_variable_box() {
        // maximize 1 + α subject to -α >= -5, α >= 0
        let mut p = LpProblem::maximize(vec![rat(1)], rat(1));
        p.add_ge(vec![rat(-1)], rat(-5));
        let sol = simplex(&p);
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.value, rat(6));
        assert_eq!(sol.primal, vec![rat(5)]);
    }

    #[test]
    fn infeasible_detected() {
        // x >= 3 and -x >= -1
        let mut p = LpProblem::maximize(vec![rat(1)], rat(0));
        p.add_ge(vec![rat(1)], rat(3));
        p.add_ge(vec![rat(-1)], rat(-1));
        assert_eq!(simplex(&p).status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        let mut p = LpProblem::maximize(vec![rat(1)], rat(0));
        p.add_ge(vec![rat(1)], rat(-1));
        assert_eq!(simplex(&p).status, LpStatus::Unbounded);
    }

    #[test]
    fn corner_optimum() {
        // maximize x + y with -x - y >= -4, -x + y >= -2  (x,y >= 0)
        let mut p = LpProblem::maximize(vec![rat(1), rat(1)], rat(0));
        p.add_ge(vec![rat(-1), rat(-1)], rat(-4));
        p.add_ge(vec![rat(-1), rat(1)], rat(-2));
        let sol = simplex(&p);
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.value, rat(4));
    }

    /// Brute-force vertex enumeration for problems with few variables:
    /// intersect every choice of `nv` hyperplanes drawn from the constraint
    /// rows and the coordinate planes, keep the feasible points, take the
    /// best objective value.
    fn vertex_oracle(p: &LpProblem) -> Option<BigRational> {
        let nv = p.num_vars();
        let mut planes: Vec<(Vec<BigRational>, BigRational)> = p.rows.clone();
        for i in 0..nv {
            let mut e = vec![BigRational::zero(); nv];
            e[i] = BigRational::one();
            planes.push((e, BigRational::zero()));
        }
        let idx: Vec<usize> = (0..planes.len()).collect();
        let mut best: Option<BigRational> = None;
        let mut choose = vec![0usize; nv];
        fn rec(
            planes: &[(Vec<BigRational>, BigRational)],
            idx: &[usize],
            choose: &mut Vec<usize>,
            start: usize,
            depth: usize,
            p: &LpProblem,
            best: &mut Option<BigRational>,
        ) {
            let nv = p.num_vars();
            if depth == nv {
                // solve the square system
                let mut mat: Vec<Vec<BigRational>> = choose
                    .iter()
                    .map(|&c| {
                        let mut row = planes[c].0.clone();
                        row.push(planes[c].1.clone());
                        row
                    })
                    .collect();
                // gaussian elimination, bail if singular
                for col in 0..nv {
                    let Some(pr) = (col..nv).find(|&r| !mat[r][col].is_zero()) else {
                        return;
                    };
                    mat.swap(col, pr);
                    let inv = mat[col][col].clone().recip();
                    for c in col..=nv {
                        mat[col][c] *= &inv;
                    }
                    for r in 0..nv {
                        if r != col && !mat[r][col].is_zero() {
                            let f = mat[r][col].clone();
                            for c in col..=nv {
                                let d = &f * &mat[col][c];
                                mat[r][c] -= d;
                            }
                        }
                    }
                }
                let x: Vec<BigRational> = (0..nv).map(|r| mat[r][nv].clone()).collect();
                if x.iter().any(|v| v.is_negative()) {
                    return;
                }
                for (row, rhs) in &p.rows {
                    let lhs: BigRational = row.iter().zip(&x).map(|(a, v)| a * v).sum();
                    if lhs < *rhs {
                        return;
                    }
                }
                let val: BigRational = p
                    .objective
                    .iter()
                    .zip(&x)
                    .map(|(c, v)| c * v)
                    .fold(p.constant.clone(), |acc, v| acc + v);
                if best.as_ref().is_none_or(|b| val > *b) {
                    *best = Some(val);
                }
                return;
            }
            for pos in start..idx.len() {
                choose[depth] = idx[pos];
                rec(planes, idx, choose, pos + 1, depth + 1, p, best);
            }
        }
        rec(&planes, &idx, &mut choose, 0, 0, p, &mut best);
        best
    }

    fn random_problem(rng: &mut ChaCha8Rng, nv: usize, extra_rows: usize) -> LpProblem {
        let objective = (0..nv).map(|_| rat(rng.gen_range(-3i64..6))).collect();
        let mut p = LpProblem::maximize(objective, rat(rng.gen_range(-2i64..3)));
        // box rows keep everything bounded
        for i in 0..nv {
            let mut row = vec![BigRational::zero(); nv];
            row[i] = rat(-1);
            p.add_ge(row, rat(-rng.gen_range(1i64..8)));
        }
        for _ in 0..extra_rows {
            let row: Vec<BigRational> =
                (0..nv).map(|_| frac(rng.gen_range(-4i64..5), rng.gen_range(1i64..3))).collect();
            let rhs = rat(rng.gen_range(-6i64..3));
            p.add_ge(row, rhs);
        }
        p
    }

    #[test]
    fn simplex_matches_vertex_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut optimal_seen = 0;
        for _ in 0..60 {
            let nv = rng.gen_range(1usize..4);
            let extra = rng.gen_range(1usize..4);
            let p = random_problem(&mut rng, nv, extra);
            let sol = simplex(&p);
            match sol.status {
                LpStatus::Optimal => {
                    optimal_seen += 1;
                    let oracle = vertex_oracle(&p).expect("bounded feasible LP has a vertex");
                    assert_eq!(sol.value, oracle, "optimum disagrees with enumeration");
                    assert!(verify_optimal(&p, &sol.primal, &sol.dual, &sol.value));
                }
                LpStatus::Infeasible => {
                    assert!(vertex_oracle(&p).is_none());
                }
                LpStatus::Unbounded => unreachable!("box rows keep the problem bounded"),
            }
        }
        assert!(optimal_seen > 20);
    }

    #[test]
    fn delsarte_johnson_13_5() {
        let j = Space::johnson(13, 5).unwrap();
        for (pair, expected) in [([1u64, 2u64], 45i64), ([2, 3], 33), ([2, 4], 27)] {
            let ds = DistanceSet::from_integers(j, &pair).unwrap();
            let out = delsarte_lp(&ds, None).unwrap();
            assert_eq!(out.report.value_int(), Some(&BigInt::from(expected)));
            assert_eq!(out.solution.status, LpStatus::Optimal);
        }
    }

    #[test]
    fn delsarte_single_distance_sanity() {
        // two points at distance d always exist, so the optimum is >= 2
        for d in 1..=6u64 {
            let h = Space::hamming(6, 2).unwrap();
            let ds = DistanceSet::from_integers(h, &[d]).unwrap();
            let out = delsarte_lp(&ds, None).unwrap();
            assert!(out.solution.value >= rat(2), "distance {d}");
        }
    }

    #[test]
    fn delsarte_sphere_requires_cap() {
        let sp = Space::sphere(3).unwrap();
        let ds = DistanceSet::new(sp, vec![frac(-1, 2), frac(1, 2)]).unwrap();
        assert!(delsarte_lp_bound(&ds, None).is_err());
        let out8 = delsarte_lp(&ds, Some(8)).unwrap();
        // three unit vectors pairwise at 60 degrees realize this set
        assert!(out8.solution.value >= rat(3));
        // M_2 caps any 2-distance set on S^2
        assert!(*out8.report.value_int().unwrap() <= BigInt::from(20));
        assert!(out8
            .report
            .conditions
            .iter()
            .any(|c| c.name.starts_with("degree-truncated")));
        // more constraints can only tighten the truncated bound
        let out4 = delsarte_lp(&ds, Some(4)).unwrap();
        assert!(out8.solution.value <= out4.solution.value);
    }

    #[test]
    fn deletion_monotone() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..100 {
            let nv = rng.gen_range(1usize..4);
            let extra = rng.gen_range(1usize..5);
            let p = random_problem(&mut rng, nv, extra);
            let full = simplex(&p);
            let drop_idx = rng.gen_range(0..p.num_rows());
            let smaller = simplex(&p.without_row(drop_idx));
            // removing a constraint can only grow the feasible set
            let full_rank = match full.status {
                LpStatus::Infeasible => 0,
                LpStatus::Optimal => 1,
                LpStatus::Unbounded => 2,
            };
            let small_rank = match smaller.status {
                LpStatus::Infeasible => 0,
                LpStatus::Optimal => 1,
                LpStatus::Unbounded => 2,
            };
            match (full.status, smaller.status) {
                (LpStatus::Optimal, LpStatus::Optimal) => {
                    assert!(smaller.value >= full.value);
                }
                _ => assert!(small_rank >= full_rank),
            }
        }
    }
}
