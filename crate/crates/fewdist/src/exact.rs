//! Exact scalars and dense univariate polynomials.
//!
//! All arithmetic in this crate runs over arbitrary-precision rationals.
//! `BigRational` values are kept in lowest terms with a positive denominator
//! by construction, so equality and sign tests are exact.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::RwLock;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Signed, Zero};

/// Rational from an integer value.
pub fn rat<T: Into<BigInt>>(n: T) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Rational `p/q` in lowest terms.
pub fn frac<P: Into<BigInt>, Q: Into<BigInt>>(p: P, q: Q) -> BigRational {
    BigRational::new(p.into(), q.into())
}

// Pascal-triangle rows, grown on demand.  Row `n` holds C(n, 0..=n).
static PASCAL: RwLock<Vec<Vec<BigInt>>> = RwLock::new(Vec::new());

/// Binomial coefficient C(n, k) as an integer; zero for k < 0 or k > n.
pub fn binom_int(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    {
        let rows = PASCAL.read().unwrap();
        if n < rows.len() {
            return rows[n][k].clone();
        }
    }
    let mut rows = PASCAL.write().unwrap();
    while rows.len() <= n {
        let m = rows.len();
        let row: Vec<BigInt> = if m == 0 {
            vec![BigInt::one()]
        } else {
            let prev = &rows[m - 1];
            (0..=m)
                .map(|j| {
                    let left = if j > 0 { prev[j - 1].clone() } else { BigInt::zero() };
                    let right = if j < m { prev[j].clone() } else { BigInt::zero() };
                    left + right
                })
                .collect()
        };
        rows.push(row);
    }
    rows[n][k].clone()
}

/// Binomial coefficient C(n, k) as a rational scalar.
pub fn binom(n: u64, k: i64) -> BigRational {
    BigRational::from_integer(binom_int(n, k))
}

/// n! as an integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Dense univariate polynomial over exact rationals, monomial basis.
///
/// `coeffs[i]` is the coefficient of `x^i`; trailing zeros are trimmed, so
/// the zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scaled(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}·")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
