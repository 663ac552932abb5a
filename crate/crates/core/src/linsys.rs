//! Exact linear solving over the field of rational functions.
//!
//! Rows are first multiplied through by the least common multiple of their
//! entry denominators, turning the system into one over the polynomial ring;
//! elimination then uses Bareiss's fraction-free scheme (each cross-product
//! step divides exactly by the previous pivot), which keeps intermediate
//! degrees near the size of the underlying minors instead of letting them
//! balloon. Back-substitution happens over rational functions, and every
//! solve re-substitutes its result into the original system as a self-check.

use crate::error::Error;
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::Result;

/// A square system `A·x = rhs`; `labels` names the unknowns (syllable ids).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub a: Vec<Vec<RationalFunction>>,
    pub rhs: Vec<RationalFunction>,
    pub labels: Vec<usize>,
}

impl LinearSystem {
    pub fn dim(&self) -> usize {
        self.rhs.len()
    }
}

fn poly_lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero();
    }
    (&(a.exact_div(&a.gcd(b))) * b).monic()
}

/// Multiply one equation through by the LCM of its denominators.
fn clear_row(row: &[RationalFunction], rhs: &RationalFunction) -> Vec<Polynomial> {
    let mut lcm = Polynomial::one();
    for entry in row.iter().chain(std::iter::once(rhs)) {
        lcm = poly_lcm(&lcm, entry.denominator());
    }
    row.iter()
        .chain(std::iter::once(rhs))
        .map(|entry| &entry.numerator().clone() * &lcm.exact_div(entry.denominator()))
        .collect()
}

/// Exact solution of `sys`, or a singular-matrix error.
pub fn solve_linear_system(sys: &LinearSystem) -> Result<Vec<RationalFunction>> {
    let n = sys.dim();
    assert!(sys.a.len() == n && sys.a.iter().all(|row| row.len() == n), "matrix not square");

    // Augmented polynomial matrix, one row per equation.
    let mut m: Vec<Vec<Polynomial>> =
        (0..n).map(|i| clear_row(&sys.a[i], &sys.rhs[i])).collect();

    let mut prev_pivot = Polynomial::one();
    for k in 0..n {
        // Lowest-degree nonzero pivot keeps the minors small.
        let pivot_row = (k..n)
            .filter(|&r| !m[r][k].is_zero())
            .min_by_key(|&r| m[r][k].degree().unwrap())
            .ok_or(Error::SingularMatrix)?;
        m.swap(k, pivot_row);
        for i in k + 1..n {
            for j in k + 1..=n {
                let cross = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = cross.exact_div(&prev_pivot);
            }
            m[i][k] = Polynomial::zero();
        }
        prev_pivot = m[k][k].clone();
    }

    let mut solution = vec![RationalFunction::zero(); n];
    for i in (0..n).rev() {
        let mut acc = RationalFunction::from_polynomial(m[i][n].clone());
        for j in i + 1..n {
            let term = &RationalFunction::from_polynomial(m[i][j].clone()) * &solution[j];
            acc = &acc - &term;
        }
        if m[i][i].is_zero() {
            return Err(Error::SingularMatrix);
        }
        solution[i] = acc.div(&RationalFunction::from_polynomial(m[i][i].clone()))?;
    }

    for (row, rhs) in sys.a.iter().zip(&sys.rhs) {
        let mut acc = RationalFunction::zero();
        for (entry, x) in row.iter().zip(&solution) {
            acc = &acc + &(entry * x);
        }
        assert_eq!(&acc, rhs, "solution failed re-substitution");
    }
    Ok(solution)
}
