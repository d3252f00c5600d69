//! Annihilator polynomials and expansion in the orthogonal basis.
//!
//! For a distance set `{d_1 < ... < d_s}` the annihilator is the degree-s
//! polynomial vanishing at every occurring distance and positive at the
//! zero-distance point: `Π(d_i - x)` on the finite spaces, `Π(x - t_i)` on
//! the sphere.  [`expand`] writes any polynomial in the basis `{p_i}` by an
//! exact triangular change of basis; the Fourier-style route through the
//! measure functional is kept as a test oracle.

use num_traits::{One, Signed, Zero};

use crate::exact::{rat, BigInt, BigRational, Poly};
use crate::spaces::{self, dim_h, ortho_poly, recurrence_b, recurrence_c, Space};
use crate::{Error, Result};

/// A strictly increasing set of distance values in one space.
///
/// Values are integers `1..=max` on the finite spaces and rational inner
/// products in `[-1, 1)` on the sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceSet {
    space: Space,
    values: Vec<BigRational>,
}

impl DistanceSet {
    pub fn new(space: Space, values: Vec<BigRational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("a distance set needs at least one value".into()));
        }
        for pair in values.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::Domain(
                    "distance values must be strictly increasing".into(),
                ));
            }
        }
        match space {
            Space::Sphere { .. } => {
                for t in &values {
                    if *t < rat(-1) || *t >= rat(1) {
                        return Err(Error::Domain(format!(
                            "inner product {t} outside [-1, 1)"
                        )));
                    }
                }
            }
            _ => {
                let max = space.max_distance().unwrap();
                for d in &values {
                    if !d.is_integer() || *d < rat(1) || *d > rat(max as i64) {
                        return Err(Error::Domain(format!(
                            "distance {d} not an integer in 1..={max} for {space}"
                        )));
                    }
                }
            }
        }
        Ok(DistanceSet { space, values })
    }

    /// Convenience constructor from integer distances.
    pub fn from_integers(space: Space, values: &[u64]) -> Result<Self> {
        DistanceSet::new(space, values.iter().map(|&d| rat(d as i64)).collect())
    }

    pub fn space(&self) -> Space {
        self.space
    }

    /// Number of distances `s`.
    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Distances as integers; `None` on the sphere.
    pub fn integer_values(&self) -> Option<Vec<u64>> {
        if !self.space.is_finite() {
            return None;
        }
        Some(
            self.values
                .iter()
                .map(|d| u64::try_from(d.to_integer()).unwrap())
                .collect(),
        )
    }

    pub fn sum(&self) -> BigRational {
        self.values.iter().sum()
    }
}

impl std::fmt::Display for DistanceSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// The annihilator polynomial of a distance set, positive at the
/// zero-distance point: `Π(d_i - x)` (finite spaces), `Π(x - t_i)` (sphere).
pub fn annihilator(ds: &DistanceSet) -> Poly {
    let mut f = Poly::one();
    for v in ds.values() {
        let factor = match ds.space() {
            Space::Sphere { .. } => Poly::from_coeffs(vec![-v.clone(), BigRational::one()]),
            _ => Poly::from_coeffs(vec![v.clone(), -BigRational::one()]),
        };
        f = &f * &factor;
    }
    f
}

/// Coefficients of a polynomial in the basis `{p_0, ..., p_deg}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    space: Space,
    coeffs: Vec<BigRational>,
    basis_normalization: Vec<BigRational>,
}

impl Expansion {
    pub fn space(&self) -> Space {
        self.space
    }

    /// Coefficients `f_0, ..., f_deg`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The values `p_i(τ_0)` of the basis used.
    pub fn basis_normalization(&self) -> &[BigRational] {
        &self.basis_normalization
    }

    /// Rebuilds `Σ f_i·p_i` in the monomial basis.
    pub fn reconstruct(&self) -> Result<Poly> {
        let mut p = Poly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                p = &p + &ortho_poly(self.space, i)?.scaled(c);
            }
        }
        Ok(p)
    }
}

/// Expands `f` in the space's orthogonal basis by triangular elimination
/// from the top degree down.  Exact; each `p_i` has degree exactly `i`.
pub fn expand(space: Space, f: &Poly) -> Result<Expansion> {
    let deg = match f.degree() {
        None => {
            return Ok(Expansion {
                space,
                coeffs: Vec::new(),
                basis_normalization: Vec::new(),
            })
        }
        Some(d) => d,
    };
    if let Some(max) = space.max_degree() {
        if deg > max {
            return Err(Error::Domain(format!(
                "degree {deg} exceeds the basis range {max} of {space}"
            )));
        }
    }
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    let mut residual = f.clone();
    for i in (0..=deg).rev() {
        let p = ortho_poly(space, i)?;
        let top = residual.coeff(i);
        if top.is_zero() {
            continue;
        }
        let c = top / p.leading_coeff().expect("basis polynomial is nonzero");
        residual = &residual - &p.scaled(&c);
        coeffs[i] = c;
    }
    debug_assert!(residual.is_zero());
    let tau0 = space.tau0();
    let basis_normalization = (0..=deg)
        .map(|i| ortho_poly(space, i).map(|p| p.eval(&tau0)))
        .collect::<Result<_>>()?;
    Ok(Expansion {
        space,
        coeffs,
        basis_normalization,
    })
}

/// Norm constant `r_i = 1/L(p_i^2)`, computed from the measure directly.
///
/// Equals `1/h_i` on the finite spaces and `h_i` on the sphere under this
/// crate's normalization.
pub fn norm_constant(space: Space, i: usize) -> Result<BigRational> {
    let p = ortho_poly(space, i)?;
    let sq = &*p * &*p;
    let norm = spaces::functional(space, &sq)?;
    debug_assert!(norm.is_positive());
    Ok(norm.recip())
}

/// Closed forms for the two leading coefficients of `Π(d_i - x) = Σ f_i p_i`:
/// `f_s = (-1)^s·r_s·c_1···c_s` and, for `s >= 2`,
/// `f_{s-1} = (-1)^s·r_{s-1}·c_1···c_{s-1}·Σ_j(b_{j-1} - d_j)`.
///
/// For `s = 1` the second slot reports the direct `f_0` from [`expand`]
/// instead, since the closed form requires `s >= 2`.
pub fn lemma_leading_coeffs(ds: &DistanceSet) -> Result<(BigRational, BigRational)> {
    let space = ds.space();
    let s = ds.size();
    let sign = if s % 2 == 0 { BigRational::one() } else { -BigRational::one() };

    let mut c_prod_upto_sm1 = BigRational::one();
    for i in 1..s {
        c_prod_upto_sm1 *= recurrence_c(space, i)?;
    }
    let c_prod_full = &c_prod_upto_sm1 * &recurrence_c(space, s)?;
    let f_s = &sign * norm_constant(space, s)? * c_prod_full;

    if s == 1 {
        let f = Poly::from_coeffs(vec![ds.values()[0].clone(), -BigRational::one()]);
        let f0 = expand(space, &f)?.coeff(0);
        return Ok((f_s, f0));
    }

    let mut defect = BigRational::zero();
    for (j, d) in ds.values().iter().enumerate() {
        defect += recurrence_b(space, j)? - d;
    }
    let f_sm1 = sign * norm_constant(space, s - 1)? * c_prod_upto_sm1 * defect;
    Ok((f_s, f_sm1))
}

/// Test oracle: Fourier coefficient `f_i = r_i·L(f·p_i)` via the measure.
pub fn fourier_coeff(space: Space, f: &Poly, i: usize) -> Result<BigRational> {
    let p = ortho_poly(space, i)?;
    let prod = f * &*p;
    Ok(norm_constant(space, i)? * spaces::functional(space, &prod)?)
}

/// Signed count used in reports: `h_i` summed over strictly positive
/// expansion coefficients.  Zero coefficients never count as positive.
pub fn positive_dim_sum(exp: &Expansion) -> Result<BigInt> {
    let mut sum = BigInt::zero();
    for (i, c) in exp.coeffs().iter().enumerate() {
        if c.is_positive() {
            sum += dim_h(exp.space(), i)?;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn distance_set_validation() {
        let h = Space::hamming(8, 2).unwrap();
        assert!(DistanceSet::from_integers(h, &[]).is_err());
        assert!(DistanceSet::from_integers(h, &[3, 3]).is_err());
        assert!(DistanceSet::from_integers(h, &[0, 2]).is_err());
        assert!(DistanceSet::from_integers(h, &[2, 9]).is_err());
        assert!(DistanceSet::from_integers(h, &[2, 8]).is_ok());
        let s = Space::sphere(3).unwrap();
        assert!(DistanceSet::new(s, vec![rat(1)]).is_err());
        assert!(DistanceSet::new(s, vec![frac(-1, 2), frac(1, 2)]).is_ok());
        assert!(DistanceSet::new(s, vec![rat(-1)]).is_ok());
        let j = Space::johnson(13, 5).unwrap();
        assert!(DistanceSet::new(j, vec![frac(1, 2)]).is_err());
        assert!(DistanceSet::from_integers(j, &[1, 5]).is_ok());
    }

    #[test]
    fn annihilator_examples() {
        let h = Space::hamming(24, 2).unwrap();
        let ds = DistanceSet::from_integers(h, &[8, 12, 16]).unwrap();
        let f = annihilator(&ds);
        let expected = &(&Poly::from_coeffs(vec![rat(8), rat(-1)])
            * &Poly::from_coeffs(vec![rat(12), rat(-1)]))
            * &Poly::from_coeffs(vec![rat(16), rat(-1)]);
        assert_eq!(f, expected);
        assert!(f.eval(&rat(0)).is_positive());

        let sp = Space::sphere(4).unwrap();
        let ds = DistanceSet::new(sp, vec![rat(0)]).unwrap();
        assert_eq!(annihilator(&ds), Poly::x());

        let j = Space::johnson(13, 5).unwrap();
        let ds = DistanceSet::from_integers(j, &[1, 2]).unwrap();
        // (1-x)(2-x) = x² - 3x + 2
        assert_eq!(
            annihilator(&ds),
            Poly::from_coeffs(vec![rat(2), rat(-3), rat(1)])
        );
    }

    #[test]
    fn golay_expansion() {
        let h = Space::hamming(24, 2).unwrap();
        let ds = DistanceSet::from_integers(h, &[8, 12, 16]).unwrap();
        let exp = expand(h, &annihilator(&ds)).unwrap();
        assert_eq!(
            exp.coeffs(),
            &[rat(0), frac(3, 4), rat(0), frac(3, 4)]
        );
    }

    #[test]
    fn basis_element_roundtrip() {
        for space in [
            Space::hamming(10, 3).unwrap(),
            Space::johnson(12, 5).unwrap(),
            Space::sphere(5).unwrap(),
        ] {
            let p2 = ortho_poly(space, 2).unwrap();
            let exp = expand(space, &p2).unwrap();
            assert_eq!(exp.coeffs(), &[rat(0), rat(0), rat(1)]);
        }
    }

    #[test]
    fn single_distance_coeff() {
        // f = 3 - x on H_2^5 has f_1 = 1/q = 1/2
        let h = Space::hamming(5, 2).unwrap();
        let f = Poly::from_coeffs(vec![rat(3), rat(-1)]);
        let exp = expand(h, &f).unwrap();
        assert_eq!(exp.coeff(1), frac(1, 2));
    }

    #[test]
    fn expand_rejects_overdegree() {
        let j = Space::johnson(8, 3).unwrap();
        let p = Poly::monomial(rat(1), 4);
        assert!(expand(j, &p).is_err());
    }

    #[test]
    fn norm_constants() {
        let h = Space::hamming(24, 2).unwrap();
        assert_eq!(norm_constant(h, 1).unwrap(), frac(1, 24));
        for space in [
            Space::hamming(9, 2).unwrap(),
            Space::johnson(11, 4).unwrap(),
            Space::sphere(6).unwrap(),
        ] {
            assert!(norm_constant(space, 0).unwrap().is_one());
        }
        // sphere: r_2 = (n-1)(n+2)/2 = h_2
        for n in [3i64, 5, 8] {
            let sp = Space::sphere(n as u32).unwrap();
            assert_eq!(norm_constant(sp, 2).unwrap(), frac((n - 1) * (n + 2), 2));
            assert_eq!(
                norm_constant(sp, 2).unwrap(),
                BigRational::from_integer(dim_h(sp, 2).unwrap())
            );
        }
        // finite spaces: r_i = 1/h_i
        for space in [Space::hamming(10, 3).unwrap(), Space::johnson(13, 5).unwrap()] {
            for i in 0..=4 {
                assert_eq!(
                    norm_constant(space, i).unwrap(),
                    BigRational::from_integer(dim_h(space, i).unwrap()).recip()
                );
            }
        }
    }

    #[test]
    fn lemma_single_distance() {
        // s = 1: f_1 = (-1)·r_1·c_1 = 1/q on any Hamming space
        for (n, q, d) in [(8u32, 2u32, 3u64), (11, 3, 5), (6, 4, 2)] {
            let h = Space::hamming(n, q).unwrap();
            let ds = DistanceSet::from_integers(h, &[d]).unwrap();
            let (f1, f0) = lemma_leading_coeffs(&ds).unwrap();
            assert_eq!(f1, frac(1, q as i64));
            let exp = expand(h, &annihilator(&ds)).unwrap();
            assert_eq!(f0, exp.coeff(0));
        }
    }

    #[test]
    fn lemma_golay_vanishing() {
        let h = Space::hamming(24, 2).unwrap();
        let ds = DistanceSet::from_integers(h, &[8, 12, 16]).unwrap();
        let (f3, f2) = lemma_leading_coeffs(&ds).unwrap();
        assert_eq!(f3, frac(3, 4));
        assert!(f2.is_zero());
    }

    #[test]
    fn lemma_sum_factor_vanishes() {
        // s = 2 with d_1 + d_2 = b_0 + b_1 forces f_1 = 0
        let h = Space::hamming(9, 2).unwrap();
        // b_i = ((q-1)n)/q... here b_0 + b_1 = (9 + 10)/2 ... use exact rows
        let b0 = recurrence_b(h, 0).unwrap();
        let b1 = recurrence_b(h, 1).unwrap();
        let total = b0 + b1; // = 9 for q = 2
        assert_eq!(total, rat(9));
        let ds = DistanceSet::from_integers(h, &[4, 5]).unwrap();
        let (_, f1) = lemma_leading_coeffs(&ds).unwrap();
        assert!(f1.is_zero());
        let exp = expand(h, &annihilator(&ds)).unwrap();
        assert!(exp.coeff(1).is_zero());
    }

    #[test]
    fn expand_matches_fourier_route() {
        // triangular solve == r_i·L(f·p_i) on both finite spaces and the sphere
        let cases: Vec<(Space, Poly)> = vec![
            (
                Space::hamming(7, 2).unwrap(),
                Poly::from_coeffs(vec![rat(2), frac(-7, 3), rat(1), rat(4)]),
            ),
            (
                Space::johnson(10, 4).unwrap(),
                Poly::from_coeffs(vec![rat(-1), rat(2), frac(5, 2), rat(1)]),
            ),
            (
                Space::sphere(5).unwrap(),
                Poly::from_coeffs(vec![frac(1, 3), rat(0), rat(-2), rat(1), rat(1)]),
            ),
        ];
        for (space, f) in cases {
            let exp = expand(space, &f).unwrap();
            for i in 0..=f.degree().unwrap() {
                assert_eq!(
                    exp.coeff(i),
                    fourier_coeff(space, &f, i).unwrap(),
                    "coefficient {i} disagrees on {space}"
                );
            }
            assert_eq!(exp.reconstruct().unwrap(), f);
        }
    }
}
