//! Rational functions in one variable over the rationals, kept in a canonical
//! reduced form, plus power-series expansion and the induced linear
//! recurrence on series coefficients.
//!
//! Canonical form: numerator and denominator are coprime, and the denominator
//! has integer coefficients with content 1 and a positive constant term
//! (positive leading coefficient when the constant term vanishes). Two equal
//! values therefore compare equal structurally, which the fixture tests rely
//! on.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, Signed, Zero};

use crate::error::Error;
use crate::poly::Polynomial;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

fn integer_content(coeffs: &[BigInt]) -> BigInt {
    coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

impl RationalFunction {
    /// Reduce and sign-normalize `num/den`.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction { num: Polynomial::zero(), den: Polynomial::one() });
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g);
        let den = den.exact_div(&g);

        // Scale both sides by the unique positive rational making the
        // denominator a primitive integer polynomial, then fix its sign.
        let lcm = den.denominator_lcm();
        let scaled = den.scale(&BigRational::from_integer(lcm.clone()));
        let content = integer_content(&scaled.integer_coefficients().unwrap());
        let mut factor = BigRational::new(lcm, content);
        let candidate = den.scale(&factor);
        let anchor = if !candidate.coeff(0).is_zero() {
            candidate.coeff(0)
        } else {
            candidate.leading_coeff().unwrap().clone()
        };
        if anchor.is_negative() {
            factor = -factor;
        }
        Ok(RationalFunction { num: num.scale(&factor), den: den.scale(&factor) })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction::from_polynomial(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        RationalFunction::from_polynomial(Polynomial::one())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<RationalFunction> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        RationalFunction::new(&self.num * &other.den, &self.den * &other.num)
    }

    /// Floating-point value; the caller keeps `x` away from poles.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// Numerator and denominator as integer coefficient lists, scaled by one
    /// common factor so both are integral and jointly primitive.
    pub fn integer_pair(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let factor = BigRational::from_integer(self.num.denominator_lcm());
        let num = self.num.scale(&factor).integer_coefficients().unwrap();
        let den = self.den.scale(&factor).integer_coefficients().unwrap();
        let joint = integer_content(&num).gcd(&integer_content(&den));
        let reduce = |v: Vec<BigInt>| v.into_iter().map(|c| c / &joint).collect();
        (reduce(num), reduce(den))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// First `kmax+1` Taylor coefficients at the origin, by the recurrence the
/// denominator induces: `d_0 c_k = num_k − Σ_{j≥1} d_j c_{k−j}`.
pub fn series_expand(rf: &RationalFunction, kmax: usize) -> Result<Vec<BigRational>> {
    let d0 = rf.denominator().coeff(0);
    if d0.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    let den = rf.denominator().coeffs();
    let mut series: Vec<BigRational> = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let mut acc = rf.numerator().coeff(k);
        for j in 1..den.len().min(k + 1) {
            acc -= &den[j] * &series[k - j];
        }
        series.push(acc / &d0);
    }
    Ok(series)
}

/// Linear recurrence satisfied by the series coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    /// `b_k = Σ_j coeffs[j-1] · b_{k-j}` once `k ≥ valid_from`.
    pub coeffs: Vec<BigRational>,
    /// One past the numerator degree: before this the numerator interferes.
    pub valid_from: usize,
}

pub fn recurrence_from(rf: &RationalFunction) -> Result<Recurrence> {
    let d0 = rf.denominator().coeff(0);
    if d0.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    let den = rf.denominator().coeffs();
    let coeffs = den[1..].iter().map(|d| -(d / &d0)).collect();
    let valid_from = rf.numerator().degree().map_or(0, |d| d + 1);
    Ok(Recurrence { coeffs, valid_from })
}
