//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Sub;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

/// Exact arbitrary-precision fraction, always in lowest terms.
pub type Rational = BigRational;

/// `Σ c_e · x^e` over exponent vectors `e`, one entry per variable.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    variables: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Polynomial {
    pub fn zero<S: AsRef<str>>(variables: &[S]) -> Self {
        Polynomial { variables: variables.iter().map(|v| v.as_ref().to_owned()).collect(), terms: BTreeMap::new() }
    }

    pub fn from_terms<S: AsRef<str>>(variables: &[S], terms: impl IntoIterator<Item = (Rational, Vec<u32>)>) -> Self {
        let mut p = Polynomial::zero(variables);
        for (c, e) in terms {
            p.add_term(c, e);
        }
        p
    }

    pub fn add_term(&mut self, coefficient: Rational, exponents: Vec<u32>) {
        assert_eq!(exponents.len(), self.variables.len(), "exponent vector length must match the variables");
        let slot = self.terms.entry(exponents).or_insert_with(Rational::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `0` for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[i64]) -> Rational {
        assert_eq!(point.len(), self.variables.len(), "point dimension must match the variables");
        let point: Vec<BigInt> = point.iter().map(|&x| BigInt::from(x)).collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let m: BigInt = e.iter().zip(&point).map(|(&k, x)| Pow::pow(x, k)).product();
                c * Rational::from_integer(m)
            })
            .sum()
    }

    /// Substitutes `x_i = scale_i · t`, producing a polynomial in `t`.
    pub fn along_ray(&self, scales: &[i64], variable: &str) -> Polynomial {
        assert_eq!(scales.len(), self.variables.len(), "one scale per variable");
        let mut out = Polynomial::zero(&[variable]);
        for (e, c) in &self.terms {
            let factor: BigInt = e.iter().zip(scales).map(|(&k, &s)| Pow::pow(BigInt::from(s), k)).product();
            out.add_term(c * Rational::from_integer(factor), vec![e.iter().sum()]);
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        Polynomial::from_terms(&self.variables, self.terms.iter().map(|(e, c)| (c * factor, e.clone())))
    }

    /// Monomial as text, e.g. `n^2 k`; empty for the constant monomial.
    pub fn monomial_name<S: AsRef<str>>(variables: &[S], exponents: &[u32]) -> String {
        let parts: Vec<String> = variables
            .iter()
            .zip(exponents)
            .filter(|(_, &k)| k > 0)
            .map(|(v, &k)| if k == 1 { v.as_ref().to_owned() } else { format!("{}^{k}", v.as_ref()) })
            .collect();
        parts.join(" ")
    }

    /// Terms from highest total degree down, then by exponent vector.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| {
            let (da, db): (u32, u32) = (a.0.iter().sum(), b.0.iter().sum());
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        t
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.variables, rhs.variables, "polynomials over different variables");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(-c.clone(), e.clone());
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let magnitude = c.abs();
            let mono = Polynomial::monomial_name(&self.variables, e);
            if mono.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{magnitude} {mono}")?;
            }
        }
        Ok(())
    }
}

/// All exponent vectors in `vars` variables with total degree `≤ degree`,
/// by increasing degree.
pub fn monomials(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(vars: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == vars {
            out.push(prefix.clone());
            return;
        }
        for k in 0..=budget {
            prefix.push(k);
            rec(vars, budget - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, degree, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().sum::<u32>().cmp(&b.iter().sum()).then_with(|| b.cmp(a)));
    out
}
