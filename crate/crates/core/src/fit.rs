//! Exact polynomial interpolation over the rationals.
//!
//! Samples are solved by Gaussian elimination in sample order: the first
//! rows that determine a new monomial become the solving points, and every
//! other sample is held out and must evaluate exactly.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::poly::{monomials, Polynomial, Rational};

/// An interpolating polynomial with zero residual on every sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittedPolynomial {
    pub polynomial: Polynomial,
    pub degree: u32,
    /// Samples whose rows pinned down the coefficients.
    pub solving_points: Vec<Vec<i64>>,
    /// Samples not used in solving; each evaluates exactly.
    pub held_out: Vec<Vec<i64>>,
}

impl FittedPolynomial {
    pub fn sample_count(&self) -> usize {
        self.solving_points.len() + self.held_out.len()
    }
}

pub fn fit_univariate(values: &[(i64, BigInt)], degree: u32) -> Result<FittedPolynomial> {
    let samples: Vec<(Vec<i64>, BigInt)> = values.iter().map(|(x, y)| (vec![*x], y.clone())).collect();
    fit_multivariate(&samples, &["n"], degree)
}

/// Fits `Σ c_e x^e` over all monomials of total degree `≤ degree`.
///
/// Errors: a repeated point is [`Error::DuplicateSample`]; monomials the
/// grid cannot separate give [`Error::Underdetermined`]; a held-out sample
/// off the fitted polynomial gives [`Error::NotPolynomial`].
pub fn fit_multivariate<S: AsRef<str>>(samples: &[(Vec<i64>, BigInt)], variables: &[S], degree: u32) -> Result<FittedPolynomial> {
    let mut seen = HashSet::new();
    for (x, _) in samples {
        if x.len() != variables.len() {
            return Err(Error::domain("fit", format!("sample {x:?} does not have {} coordinates", variables.len())));
        }
        if !seen.insert(x.clone()) {
            return Err(Error::DuplicateSample(x.clone()));
        }
    }
    let basis = monomials(variables.len(), degree);
    let width = basis.len();
    let mut rows: Vec<(usize, Vec<Rational>)> = samples
        .iter()
        .enumerate()
        .map(|(i, (x, y))| {
            let mut row: Vec<Rational> = basis.iter().map(|e| Rational::from_integer(monomial_value(x, e))).collect();
            row.push(Rational::from_integer(y.clone()));
            (i, row)
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut missing = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r].1[col].is_zero()) else {
            missing.push(Polynomial::monomial_name(variables, &basis[col]));
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next].1[col].recip();
        for v in rows[next].1.iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[next].1.clone();
        for (r, (_, row)) in rows.iter_mut().enumerate() {
            if r != next && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push((col, next));
        next += 1;
    }
    if !missing.is_empty() {
        let missing = missing.into_iter().map(|m| if m.is_empty() { "1".to_owned() } else { m }).collect();
        return Err(Error::Underdetermined { needed: width, got: samples.len(), missing });
    }

    let polynomial = Polynomial::from_terms(
        variables,
        pivots.iter().map(|&(col, r)| (rows[r].1[width].clone(), basis[col].clone())),
    );
    let solving: HashSet<usize> = pivots.iter().map(|&(_, r)| rows[r].0).collect();
    for (x, y) in samples {
        let residual = Rational::from_integer(y.clone()) - polynomial.eval(x);
        if !residual.is_zero() {
            return Err(Error::NotPolynomial { point: x.clone(), residual: residual.to_string() });
        }
    }
    let (solving_points, held_out) = samples.iter().enumerate().fold((Vec::new(), Vec::new()), |(mut s, mut h), (i, (x, _))| {
        if solving.contains(&i) {
            s.push(x.clone());
        } else {
            h.push(x.clone());
        }
        (s, h)
    });
    Ok(FittedPolynomial { polynomial, degree, solving_points, held_out })
}

fn monomial_value(x: &[i64], e: &[u32]) -> BigInt {
    x.iter().zip(e).map(|(&v, &k)| Pow::pow(BigInt::from(v), k)).product()
}
