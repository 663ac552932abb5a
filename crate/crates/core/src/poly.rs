//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored ascending by degree with no trailing zeros, so the
//! zero polynomial is the empty list and equality is structural. Everything
//! here is plain ring arithmetic; the variable is rendered as `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    /// Trims trailing zeros; the empty list is the zero polynomial.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c · t^deg`.
    pub fn monomial(c: BigRational, deg: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial::new(coeffs)
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::new(
            coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, factor: &BigRational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// Leading coefficient made 1 (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lead) => self.scale(&lead.recip()),
            None => Polynomial::zero(),
        }
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn divrem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let d_deg = divisor.degree().ok_or(Error::ZeroDenominator)?;
        let d_lead = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d_deg];
        for k in (d_deg..rem.len()).rev() {
            let factor = &rem[k] / d_lead;
            if factor.is_zero() {
                continue;
            }
            for (j, d_c) in divisor.coeffs.iter().enumerate() {
                let idx = k - d_deg + j;
                let delta = &factor * d_c;
                rem[idx] = &rem[idx] - delta;
            }
            quot[k - d_deg] = factor;
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Division known to be exact; panics on a nonzero remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.divrem(divisor).expect("exact_div by zero");
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Monic greatest common divisor (1 for coprime inputs, 0 only for 0,0).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect();
        Polynomial::new(coeffs)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval_at(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Floating-point evaluation (coefficients converted, then Horner).
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().expect("coefficient out of f64 range");
        }
        acc
    }

    /// Substitution `self(inner(t))`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// Squarefree decomposition: pairs `(factor, multiplicity)` with the
    /// factors monic, squarefree, pairwise coprime, and
    /// `self = lead · Π factor^multiplicity`.
    pub fn squarefree_decomposition(&self) -> Vec<(Polynomial, usize)> {
        if self.degree().is_none_or(|d| d == 0) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let deriv = self.derivative();
        let a0 = self.gcd(&deriv);
        let mut b = self.exact_div(&a0);
        let mut c = deriv.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut mult = 1;
        while b.degree().is_some_and(|deg| deg > 0) {
            let a = b.gcd(&d);
            if a.degree().is_some_and(|deg| deg > 0) {
                out.push((a.clone(), mult));
            }
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            d = &c - &b.derivative();
            mult += 1;
        }
        out
    }

    /// The product of the squarefree factors: same roots, all simple.
    pub fn squarefree_part(&self) -> Polynomial {
        let mut acc = Polynomial::one();
        for (factor, _) in self.squarefree_decomposition() {
            acc = &acc * &factor;
        }
        acc
    }

    /// Least common multiple of the coefficient denominators (1 for zero).
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// The coefficients as integers, if they all are.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

fn fmt_coeff(c: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.to_integer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
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
            if k == 0 || !abs.is_one() {
                fmt_coeff(&abs, f)?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}
