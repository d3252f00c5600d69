//! The three metric spaces and their orthogonal polynomial families.
//!
//! Each space carries a family `{p_i}` of orthogonal polynomials with
//! `p_0 ≡ 1`: Krawtchouk on the Hamming space, Hahn on the Johnson space,
//! Gegenbauer on the sphere.  The family satisfies the three-term recurrence
//! `x·p_i = a_i·p_{i+1} + b_i·p_i + c_i·p_{i-1}` whose coefficient rows are
//! exposed by [`recurrence`].
//!
//! Normalization: on the finite spaces `p_i(0) = h_i`, where `h_i` is the
//! dimension of the i-th harmonic space; on the sphere `p_i(1) = 1`.  The
//! norm constant `r_i = 1/L(p_i^2)` therefore equals `1/h_i` on the finite
//! spaces but `h_i` on the sphere; callers should use
//! [`crate::expansion::norm_constant`], which computes `L(p_i^2)` directly
//! and does not assume either convention.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::exact::{binom, binom_int, factorial, frac, rat, BigInt, BigRational, Poly};
use crate::{Error, Result};

/// Descriptor of one of the three metric spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    /// Words of length `n` over an alphabet of size `q`, Hamming distance.
    Hamming { n: u32, q: u32 },
    /// Binary words of length `n` and weight `w`; the distance is half the
    /// Hamming distance, so it ranges over `0..=w`.
    Johnson { n: u32, w: u32 },
    /// Unit sphere in `R^n`; "distance" is the inner product `t ∈ [-1, 1)`.
    Sphere { n: u32 },
}

impl Space {
    pub fn hamming(n: u32, q: u32) -> Result<Space> {
        if n < 1 {
            return Err(Error::Domain("Hamming space needs n >= 1".into()));
        }
        if q < 2 {
            return Err(Error::Domain("Hamming space needs q >= 2".into()));
        }
        Ok(Space::Hamming { n, q })
    }

    pub fn johnson(n: u32, w: u32) -> Result<Space> {
        if w < 1 || 2 * w > n {
            return Err(Error::Domain(format!(
                "Johnson space needs 1 <= w <= n/2, got n={n}, w={w}"
            )));
        }
        Ok(Space::Johnson { n, w })
    }

    pub fn sphere(n: u32) -> Result<Space> {
        if n < 2 {
            return Err(Error::Domain("sphere needs ambient dimension n >= 2".into()));
        }
        Ok(Space::Sphere { n })
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, Space::Sphere { .. })
    }

    /// Largest polynomial degree in the family, `None` when unbounded.
    pub fn max_degree(&self) -> Option<usize> {
        match self {
            Space::Hamming { n, .. } => Some(*n as usize),
            Space::Johnson { w, .. } => Some(*w as usize),
            Space::Sphere { .. } => None,
        }
    }

    /// Largest distance value of a finite space.
    pub fn max_distance(&self) -> Option<u64> {
        match self {
            Space::Hamming { n, .. } => Some(*n as u64),
            Space::Johnson { w, .. } => Some(*w as u64),
            Space::Sphere { .. } => None,
        }
    }

    /// The zero-distance point of the distance domain: 0 on the finite
    /// spaces, inner product 1 on the sphere.
    pub fn tau0(&self) -> BigRational {
        match self {
            Space::Sphere { .. } => BigRational::one(),
            _ => BigRational::zero(),
        }
    }

    /// Number of points of a finite space.
    pub fn point_count(&self) -> Option<BigInt> {
        match self {
            Space::Hamming { n, q } => Some(BigInt::from(*q).pow(*n)),
            Space::Johnson { n, w } => Some(binom_int(*n as u64, *w as i64)),
            Space::Sphere { .. } => None,
        }
    }

    fn check_degree(&self, i: usize) -> Result<()> {
        if let Some(max) = self.max_degree() {
            if i > max {
                return Err(Error::Domain(format!(
                    "degree {i} exceeds the rank {max} of {self}"
                )));
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Space::Hamming { n, q } => write!(f, "H_{q}^{n}"),
            Space::Johnson { n, w } => write!(f, "J^{{{n},{w}}}"),
            Space::Sphere { n } => write!(f, "S^{}", n - 1),
        }
    }
}

/// One row of the three-term recurrence `x·p_i = a_i·p_{i+1} + b_i·p_i + c_i·p_{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceRow {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

/// Dimension `h_i` of the i-th harmonic space.
pub fn dim_h(space: Space, i: usize) -> Result<BigInt> {
    space.check_degree(i)?;
    let i64i = i as i64;
    Ok(match space {
        Space::Hamming { n, q } => {
            binom_int(n as u64, i64i) * BigInt::from(q - 1).pow(i as u32)
        }
        Space::Johnson { n, .. } => {
            binom_int(n as u64, i64i) - binom_int(n as u64, i64i - 1)
        }
        Space::Sphere { n } => {
            if i == 0 {
                BigInt::one()
            } else {
                binom_int(n as u64 + i as u64 - 2, i64i)
                    + binom_int(n as u64 + i as u64 - 3, i64i - 1)
            }
        }
    })
}

/// Recurrence coefficients `(a_i, b_i, c_i)`.
///
/// On the Johnson space the row is only defined for `2i <= n - 2`; the
/// denominators `n-2i-1` and `n-2i` vanish otherwise.  Use [`recurrence_b`] /
/// [`recurrence_c`] for the individual entries, which stay valid further.
pub fn recurrence(space: Space, i: usize) -> Result<RecurrenceRow> {
    match space {
        Space::Hamming { n, q } => Ok(RecurrenceRow {
            a: frac(-(i as i64 + 1), q),
            b: frac(i as i64 + (q as i64 - 1) * (n as i64 - i as i64), q),
            c: frac(-(n as i64 - i as i64 + 1) * (q as i64 - 1), q),
        }),
        Space::Johnson { n, w } => {
            let (n, w, i) = (n as i64, w as i64, i as i64);
            if n - 2 * i - 1 <= 0 {
                return Err(Error::Domain(format!(
                    "Johnson recurrence row {i} undefined: the a_i denominator \
                     (n-2i-1)(n-2i) vanishes; rows require i < n/2 \
                     (here n={n}, so i <= {})",
                    (n - 2) / 2
                )));
            }
            Ok(RecurrenceRow {
                a: frac(-(i + 1) * (w - i) * (n - w - i), (n - 2 * i - 1) * (n - 2 * i)),
                b: johnson_b(n, w, i),
                c: johnson_c(n, w, i),
            })
        }
        Space::Sphere { n } => {
            let (n, i) = (n as i64, i as i64);
            Ok(RecurrenceRow {
                a: frac(n - 2 + i, n - 2 + 2 * i),
                b: BigRational::zero(),
                c: frac(i, n - 2 + 2 * i),
            })
        }
    }
}

fn johnson_b(n: i64, w: i64, i: i64) -> BigRational {
    frac(
        (n + 2) * w * (n - w) - n * i * (n - i + 1),
        (n - 2 * i) * (n - 2 * i + 2),
    )
}

fn johnson_c(n: i64, w: i64, i: i64) -> BigRational {
    frac(
        -(w - i + 1) * (n - w - i + 1) * (n - i + 2),
        (n - 2 * i + 2) * (n - 2 * i + 3),
    )
}

/// The `b_i` entry alone; on the Johnson space valid for all `i < w`.
pub fn recurrence_b(space: Space, i: usize) -> Result<BigRational> {
    match space {
        Space::Johnson { n, w } => {
            let (n, w, i) = (n as i64, w as i64, i as i64);
            if n - 2 * i == 0 || n - 2 * i + 2 == 0 {
                return Err(Error::Domain(format!(
                    "Johnson b_{i} undefined at n={n}: denominator (n-2i)(n-2i+2) vanishes"
                )));
            }
            Ok(johnson_b(n, w, i))
        }
        _ => Ok(recurrence(space, i)?.b),
    }
}

/// The `c_i` entry alone; on the Johnson space valid for all `i <= w`.
pub fn recurrence_c(space: Space, i: usize) -> Result<BigRational> {
    match space {
        Space::Johnson { n, w } => {
            let (n, w, i) = (n as i64, w as i64, i as i64);
            if n - 2 * i + 2 == 0 || n - 2 * i + 3 == 0 {
                return Err(Error::Domain(format!(
                    "Johnson c_{i} undefined at n={n}: denominator (n-2i+2)(n-2i+3) vanishes"
                )));
            }
            Ok(johnson_c(n, w, i))
        }
        _ => Ok(recurrence(space, i)?.c),
    }
}

static POLY_CACHE: LazyLock<RwLock<HashMap<(Space, usize), Arc<Poly>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// The degree-`i` orthogonal polynomial of the space, in the monomial basis.
///
/// Krawtchouk and Hahn polynomials are built from their explicit sums; the
/// recurrence serves as a cross-check in tests.  Gegenbauer polynomials are
/// built from the recurrence seeded at `p_0 ≡ 1`.
pub fn ortho_poly(space: Space, i: usize) -> Result<Arc<Poly>> {
    space.check_degree(i)?;
    if let Some(p) = POLY_CACHE.read().unwrap().get(&(space, i)) {
        return Ok(p.clone());
    }
    let built = Arc::new(match space {
        Space::Hamming { n, q } => krawtchouk(n, q, i),
        Space::Johnson { n, w } => hahn(n, w, i),
        Space::Sphere { .. } => gegenbauer(space, i)?,
    });
    let mut cache = POLY_CACHE.write().unwrap();
    Ok(cache.entry((space, i)).or_insert(built).clone())
}

/// `C(t, j)` where `t` is an affine polynomial: `t(t-1)...(t-j+1)/j!`.
fn binom_poly(t: &Poly, j: usize) -> Poly {
    let mut p = Poly::one();
    for r in 0..j {
        p = &p * &(t - &Poly::constant(rat(r as i64)));
    }
    p.scaled(&frac(BigInt::one(), factorial(j as u64)))
}

fn krawtchouk(n: u32, q: u32, i: usize) -> Poly {
    let x = Poly::x();
    let n_minus_x = &Poly::constant(rat(n as i64)) - &x;
    let mut sum = Poly::zero();
    for j in 0..=i {
        let term = &binom_poly(&x, j) * &binom_poly(&n_minus_x, i - j);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let scale = rat(sign) * rat(q as i64 - 1).pow((i - j) as i32);
        sum = &sum + &term.scaled(&scale);
    }
    sum
}

fn hahn(n: u32, w: u32, i: usize) -> Poly {
    let x = Poly::x();
    let lead = binom(n as u64, i as i64) - binom(n as u64, i as i64 - 1);
    let mut sum = Poly::zero();
    for j in 0..=i {
        let num = binom(i as u64, j as i64) * binom(n as u64 + 1 - i as u64, j as i64);
        let den = binom(w as u64, j as i64) * binom(n as u64 - w as u64, j as i64);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        sum = &sum + &binom_poly(&x, j).scaled(&(rat(sign) * num / den));
    }
    sum.scaled(&lead)
}

fn gegenbauer(space: Space, i: usize) -> Result<Poly> {
    if i == 0 {
        return Ok(Poly::one());
    }
    let prev = ortho_poly(space, i - 1)?;
    let row = recurrence(space, i - 1)?;
    // p_{i} = (x·p_{i-1} - b_{i-1}·p_{i-1} - c_{i-1}·p_{i-2}) / a_{i-1}
    let mut p = &(&Poly::x() * &prev) - &prev.scaled(&row.b);
    if i >= 2 {
        let prev2 = ortho_poly(space, i - 2)?;
        p = &p - &prev2.scaled(&row.c);
    }
    Ok(p.scaled(&row.a.recip()))
}

/// Values `p_0(x), ..., p_kmax(x)` via the recurrence on values.
pub fn ortho_eval(space: Space, kmax: usize, x: &BigRational) -> Result<Vec<BigRational>> {
    space.check_degree(kmax)?;
    let mut vals = Vec::with_capacity(kmax + 1);
    vals.push(BigRational::one());
    for i in 0..kmax {
        let row = recurrence(space, i)?;
        let mut next = (x - &row.b) * &vals[i];
        if i >= 1 {
            next -= &row.c * &vals[i - 1];
        }
        vals.push(next / &row.a);
    }
    Ok(vals)
}

/// Weight of the induced distance measure at an integer distance.
///
/// Only the finite spaces carry a discrete measure; for the sphere use
/// [`sphere_moment`].
pub fn measure_weight(space: Space, x: u64) -> Result<BigRational> {
    match space {
        Space::Hamming { n, q } => {
            if x > n as u64 {
                return Err(Error::Domain(format!(
                    "distance {x} outside 0..={n} in {space}"
                )));
            }
            let num = binom_int(n as u64, x as i64) * BigInt::from(q - 1).pow(x as u32);
            Ok(BigRational::new(num, BigInt::from(q).pow(n)))
        }
        Space::Johnson { n, w } => {
            if x > w as u64 {
                return Err(Error::Domain(format!(
                    "distance {x} outside 0..={w} in {space}"
                )));
            }
            let num = binom_int(w as u64, x as i64) * binom_int(n as u64 - w as u64, x as i64);
            Ok(BigRational::new(num, binom_int(n as u64, w as i64)))
        }
        Space::Sphere { .. } => Err(Error::Unsupported(
            "the sphere has no discrete distance measure; use sphere_moment".into(),
        )),
    }
}

/// k-th moment of the projected uniform measure on the sphere `S^{n-1}`:
/// zero for odd k and `(2m-1)!! / ((n)(n+2)...(n+2m-2))` for `k = 2m`.
pub fn sphere_moment(n: u32, k: usize) -> BigRational {
    if k % 2 == 1 {
        return BigRational::zero();
    }
    let m = k / 2;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..m {
        num *= BigInt::from(2 * j as u64 + 1);
        den *= BigInt::from(n as u64 + 2 * j as u64);
    }
    BigRational::new(num, den)
}

/// Moment `L(x^k)` of the space's distance measure.
pub fn moment(space: Space, k: usize) -> Result<BigRational> {
    match space {
        Space::Sphere { n } => Ok(sphere_moment(n, k)),
        _ => {
            let max = space.max_distance().unwrap();
            let mut sum = BigRational::zero();
            for x in 0..=max {
                let xk = BigRational::from_integer(BigInt::from(x).pow(k as u32));
                sum += xk * measure_weight(space, x)?;
            }
            Ok(sum)
        }
    }
}

/// Applies the measure functional `L` to a polynomial.
pub fn functional(space: Space, f: &Poly) -> Result<BigRational> {
    let mut sum = BigRational::zero();
    for (k, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero() {
            sum += c * moment(space, k)?;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn all_test_spaces() -> Vec<Space> {
        vec![
            Space::hamming(24, 2).unwrap(),
            Space::hamming(10, 3).unwrap(),
            Space::hamming(8, 4).unwrap(),
            Space::johnson(13, 5).unwrap(),
            Space::johnson(12, 6).unwrap(),
            Space::johnson(18, 8).unwrap(),
            Space::sphere(3).unwrap(),
            Space::sphere(4).unwrap(),
            Space::sphere(10).unwrap(),
        ]
    }

    #[test]
    fn constructors_validate() {
        assert!(Space::hamming(0, 2).is_err());
        assert!(Space::hamming(5, 1).is_err());
        assert!(Space::johnson(13, 7).is_err());
        assert!(Space::johnson(13, 0).is_err());
        assert!(Space::sphere(1).is_err());
        assert!(Space::johnson(12, 6).is_ok());
    }

    #[test]
    fn dim_h_values() {
        let h24 = Space::hamming(24, 2).unwrap();
        assert_eq!(dim_h(h24, 3).unwrap(), BigInt::from(2024));
        assert_eq!(dim_h(h24, 1).unwrap(), BigInt::from(24));
        for space in all_test_spaces() {
            assert_eq!(dim_h(space, 0).unwrap(), BigInt::one());
        }
        for n in 2..10u32 {
            assert_eq!(dim_h(Space::sphere(n).unwrap(), 1).unwrap(), BigInt::from(n));
        }
        // out of range
        assert!(dim_h(Space::johnson(13, 5).unwrap(), 6).is_err());
        assert!(dim_h(h24, 25).is_err());
    }

    #[test]
    fn hamming_24_b_is_12() {
        let space = Space::hamming(24, 2).unwrap();
        for i in 0..10 {
            assert_eq!(recurrence(space, i).unwrap().b, rat(12));
        }
    }

    #[test]
    fn sphere_b_is_zero() {
        let space = Space::sphere(7).unwrap();
        for i in 0..10 {
            assert!(recurrence(space, i).unwrap().b.is_zero());
        }
    }

    #[test]
    fn johnson_b0() {
        let space = Space::johnson(13, 5).unwrap();
        assert_eq!(recurrence(space, 0).unwrap().b, frac(40, 13));
    }

    #[test]
    fn johnson_row_denominator_guard() {
        let space = Space::johnson(12, 6).unwrap();
        let err = recurrence(space, 6).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        assert!(err.to_string().contains("i < n/2"));
        // b entries stay valid for i < w, c entries for i <= w
        assert!(recurrence_b(space, 5).is_ok());
        assert!(recurrence_c(space, 6).is_ok());
    }

    #[test]
    fn krawtchouk_low_degrees() {
        // K_1 = n(q-1) - qx, K_2 = 1/2·(q²x² - q(2qn-q-2n+2)x + (q-1)²n(n-1))
        for (n, q) in [(24u32, 2u32), (10, 3), (7, 5)] {
            let space = Space::hamming(n, q).unwrap();
            let (n_, q_) = (n as i64, q as i64);
            assert_eq!(*ortho_poly(space, 0).unwrap(), Poly::one());
            let k1 = Poly::from_coeffs(vec![rat(n_ * (q_ - 1)), rat(-q_)]);
            assert_eq!(*ortho_poly(space, 1).unwrap(), k1);
            let k2 = Poly::from_coeffs(vec![
                frac((q_ - 1) * (q_ - 1) * n_ * (n_ - 1), 2),
                frac(-q_ * (2 * q_ * n_ - q_ - 2 * n_ + 2), 2),
                frac(q_ * q_, 2),
            ]);
            assert_eq!(*ortho_poly(space, 2).unwrap(), k2);
        }
    }

    #[test]
    fn sphere_low_degrees() {
        for n in [3u32, 4, 10] {
            let space = Space::sphere(n).unwrap();
            assert_eq!(*ortho_poly(space, 0).unwrap(), Poly::one());
            assert_eq!(*ortho_poly(space, 1).unwrap(), Poly::x());
            // p_2 = (n x² - 1)/(n - 1)
            let p2 = Poly::from_coeffs(vec![
                frac(-1, n as i64 - 1),
                rat(0),
                frac(n as i64, n as i64 - 1),
            ]);
            assert_eq!(*ortho_poly(space, 2).unwrap(), p2);
        }
    }

    #[test]
    fn recurrence_identity() {
        // x·p_i = a_i·p_{i+1} + b_i·p_i + c_i·p_{i-1}, coefficient by coefficient
        for space in all_test_spaces() {
            let top = space.max_degree().map_or(8, |m| m.saturating_sub(1).min(8));
            for i in 1..top {
                if matches!(space, Space::Johnson { n, .. } if 2 * (i as u32 + 1) > n - 1) {
                    break;
                }
                let row = recurrence(space, i).unwrap();
                let lhs = &Poly::x() * &*ortho_poly(space, i).unwrap();
                let rhs = &(&ortho_poly(space, i + 1).unwrap().scaled(&row.a)
                    + &ortho_poly(space, i).unwrap().scaled(&row.b))
                    + &ortho_poly(space, i - 1).unwrap().scaled(&row.c);
                assert_eq!(lhs, rhs, "recurrence fails for {space} at i={i}");
            }
        }
    }

    #[test]
    fn orthogonality() {
        for space in all_test_spaces() {
            let top = space.max_degree().map_or(5, |m| m.min(5));
            for i in 0..=top {
                for j in 0..i {
                    let prod = &*ortho_poly(space, i).unwrap() * &*ortho_poly(space, j).unwrap();
                    assert!(
                        functional(space, &prod).unwrap().is_zero(),
                        "L(p_{i}·p_{j}) != 0 in {space}"
                    );
                }
            }
        }
    }

    #[test]
    fn normalization() {
        for space in all_test_spaces() {
            let top = space.max_degree().map_or(6, |m| m.min(6));
            let tau0 = space.tau0();
            for i in 0..=top {
                let v = ortho_poly(space, i).unwrap().eval(&tau0);
                match space {
                    Space::Sphere { .. } => assert!(v.is_one(), "p_{i}(1) != 1 on {space}"),
                    _ => assert_eq!(
                        v,
                        BigRational::from_integer(dim_h(space, i).unwrap()),
                        "p_{i}(0) != h_{i} on {space}"
                    ),
                }
            }
        }
    }

    #[test]
    fn degree_exactly_i() {
        for space in all_test_spaces() {
            let top = space.max_degree().map_or(6, |m| m.min(6));
            for i in 0..=top {
                assert_eq!(ortho_poly(space, i).unwrap().degree(), Some(i));
            }
        }
    }

    #[test]
    fn c_sign_pattern() {
        // c_i < 0 on the finite spaces, c_i > 0 on the sphere
        for space in all_test_spaces() {
            let top = space.max_degree().map_or(8, |m| m.min(8));
            for i in 1..=top {
                let c = recurrence_c(space, i).unwrap();
                match space {
                    Space::Sphere { .. } => assert!(c.is_positive()),
                    _ => assert!(c.is_negative(), "c_{i} not negative on {space}"),
                }
            }
        }
    }

    #[test]
    fn ortho_eval_matches_polys() {
        for space in all_test_spaces() {
            let top = space.max_degree().map_or(7, |m| m.min(7));
            for x in [rat(0), rat(2), frac(1, 3), frac(-1, 2)] {
                let vals = ortho_eval(space, top, &x).unwrap();
                for (i, v) in vals.iter().enumerate() {
                    assert_eq!(*v, ortho_poly(space, i).unwrap().eval(&x));
                }
            }
        }
    }

    #[test]
    fn hamming_weights() {
        let space = Space::hamming(2, 2).unwrap();
        assert_eq!(measure_weight(space, 0).unwrap(), frac(1, 4));
        assert_eq!(measure_weight(space, 1).unwrap(), frac(1, 2));
        assert_eq!(measure_weight(space, 2).unwrap(), frac(1, 4));
    }

    #[test]
    fn johnson_weight_at_zero() {
        let space = Space::johnson(6, 3).unwrap();
        assert_eq!(measure_weight(space, 0).unwrap(), frac(1, 20));
    }

    #[test]
    fn weights_sum_to_one() {
        for space in all_test_spaces().into_iter().filter(Space::is_finite) {
            let mut sum = BigRational::zero();
            for x in 0..=space.max_distance().unwrap() {
                sum += measure_weight(space, x).unwrap();
            }
            assert!(sum.is_one(), "weights of {space} sum to {sum}");
        }
    }

    #[test]
    fn sphere_measure_unsupported() {
        assert!(matches!(
            measure_weight(Space::sphere(4).unwrap(), 0),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn sphere_moments() {
        for n in [2u32, 3, 4, 9] {
            assert!(sphere_moment(n, 0).is_one());
            assert!(sphere_moment(n, 1).is_zero());
            assert!(sphere_moment(n, 7).is_zero());
            assert_eq!(sphere_moment(n, 2), frac(1, n as i64));
            assert_eq!(sphere_moment(n, 4), frac(3, n as i64 * (n as i64 + 2)));
        }
    }

    #[test]
    fn sphere_moment_matches_quadrature() {
        // Simpson quadrature of x^k·(1-x²)^((n-3)/2) over [-1, 1], normalized.
        fn quad(n: u32, k: u32) -> f64 {
            let steps = 20_000usize;
            let h = 2.0 / steps as f64;
            let density = |x: f64| (1.0 - x * x).powf((n as f64 - 3.0) / 2.0);
            let mut num = 0.0;
            let mut den = 0.0;
            for t in 0..steps {
                let x0 = -1.0 + t as f64 * h;
                let xm = x0 + h / 2.0;
                let x1 = x0 + h;
                // endpoints of the density can be infinite for n = 2; Simpson
                // midweighting avoids evaluating exactly at ±1
                let (d0, dm, d1) = (
                    density(x0.clamp(-1.0 + 1e-12, 1.0 - 1e-12)),
                    density(xm),
                    density(x1.clamp(-1.0 + 1e-12, 1.0 - 1e-12)),
                );
                num += h / 6.0 * (d0 * x0.powi(k as i32) + 4.0 * dm * xm.powi(k as i32) + d1 * x1.powi(k as i32));
                den += h / 6.0 * (d0 + 4.0 * dm + d1);
            }
            num / den
        }
        for n in [3u32, 4, 6] {
            for k in [2u32, 4, 6] {
                let exact = sphere_moment(n, k as usize);
                let approx = quad(n, k);
                let exact_f = exact.numer().to_string().parse::<f64>().unwrap()
                    / exact.denom().to_string().parse::<f64>().unwrap();
                assert!(
                    (exact_f - approx).abs() < 1e-5,
                    "moment mismatch n={n} k={k}: {exact_f} vs {approx}"
                );
            }
        }
    }
}
