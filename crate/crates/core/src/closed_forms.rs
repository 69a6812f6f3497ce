//! Closed-form polynomials for the lattice families and the cone.
//!
//! Every formula is a fixed table of rational coefficients evaluated
//! exactly. A non-integral result is an error, never a rounding.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::compute::Index;
use crate::distance::w_lambda;
use crate::error::{Error, Result};
use crate::families::{build_m, build_z, FamilySpec};
use crate::poly::{Polynomial, Rational};

/// `(numerator, denominator, [e_n, e_k, e_l])`.
type Term = (i64, i64, [u32; 3]);

/// Parameter validity predicate of a formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaDomain {
    /// `n ≥ 0`.
    Natural,
    /// `0 ≤ k ≤ n`.
    KAtMostN,
    /// `0 ≤ l ≤ k ≤ n`.
    LAtMostKAtMostN,
}

impl FormulaDomain {
    pub fn arity(self) -> usize {
        match self {
            FormulaDomain::Natural => 1,
            FormulaDomain::KAtMostN => 2,
            FormulaDomain::LAtMostKAtMostN => 3,
        }
    }

    pub fn contains(self, params: &[i64]) -> bool {
        params.len() == self.arity()
            && params.iter().all(|&p| p >= 0)
            && params.windows(2).all(|w| w[1] <= w[0])
    }

    pub fn describe(self) -> &'static str {
        match self {
            FormulaDomain::Natural => "n >= 0",
            FormulaDomain::KAtMostN => "0 <= k <= n",
            FormulaDomain::LAtMostKAtMostN => "0 <= l <= k <= n",
        }
    }
}

/// A polynomial with exact rational coefficients and a parameter domain.
#[derive(Debug)]
pub struct PolynomialFormula {
    pub id: &'static str,
    pub variables: &'static [&'static str],
    terms: &'static [Term],
    pub source: &'static str,
    pub domain: FormulaDomain,
    /// Where the table is known to disagree with direct computation.
    pub note: Option<&'static str>,
    trusted: fn(&[i64]) -> bool,
}

fn everywhere(_: &[i64]) -> bool {
    true
}

/// Strip `0 ≤ n − k ≤ 2` on which the printed `WW(Z_{n,k})` table matches
/// the distance oracle.
fn ww_z_strip(p: &[i64]) -> bool {
    (0..=2).contains(&(p[0] - p[1]))
}

/// Strip `−1 ≤ n − 2k ≤ 2` on which the printed `WW(M_{n,k})` table matches
/// the distance oracle.
fn ww_m_strip(p: &[i64]) -> bool {
    (-1..=2).contains(&(p[0] - 2 * p[1]))
}

impl PolynomialFormula {
    pub fn polynomial(&self) -> Polynomial {
        let arity = self.variables.len();
        Polynomial::from_terms(
            self.variables,
            self.terms
                .iter()
                .map(|&(num, den, e)| (Rational::new(num.into(), den.into()), e[..arity].to_vec())),
        )
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(_, _, e)| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Whether the table is expected to match direct computation at
    /// `params`. `false` only for the hyper-Wiener tables outside the
    /// strips where they were found to hold.
    pub fn trusted_at(&self, params: &[i64]) -> bool {
        self.domain.contains(params) && (self.trusted)(params)
    }

    pub fn eval(&self, params: &[i64]) -> Result<BigInt> {
        if !self.domain.contains(params) {
            return Err(Error::domain(
                self.id,
                format!("{params:?} is outside {} ({} parameters)", self.domain.describe(), self.domain.arity()),
            ));
        }
        let value = self.polynomial().eval(params);
        if value.denom().is_one() {
            Ok(value.numer().clone())
        } else {
            Err(Error::NonIntegral { id: self.id.to_owned(), params: params.to_vec(), value: value.to_string() })
        }
    }
}

/// Every stored formula, in a stable order.
pub fn list_formulas() -> &'static [PolynomialFormula] {
    &FORMULAS
}

/// Looks a formula up by id, ignoring ASCII case.
pub fn formula(id: &str) -> Result<&'static PolynomialFormula> {
    FORMULAS
        .iter()
        .find(|f| f.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownFormula(id.to_owned()))
}

pub fn eval_formula(id: &str, params: &[i64]) -> Result<BigInt> {
    formula(id)?.eval(params)
}

/// `W_λ` of the cone on `n` layers as `5·(W_λ(M_{2n,n}) − W_λ(Z_{n,n}))`,
/// both terms computed by BFS on the standalone constructions.
pub fn cone_wlambda_via_sectors(n: i64, lambda: u32) -> Result<BigInt> {
    let m = build_m(2 * n, n)?;
    let z = build_z(n, n)?;
    Ok(5 * (w_lambda(m.graph(), lambda)? - w_lambda(z.graph(), lambda)?))
}

/// A closed-form value together with the formulas it was assembled from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedValue {
    pub value: BigInt,
    pub formulas: Vec<&'static str>,
    /// `false` when a contributing table is outside its trusted region.
    pub trusted: bool,
}

struct Acc {
    formulas: Vec<&'static str>,
    trusted: bool,
}

impl Acc {
    fn eval(&mut self, id: &str, params: &[i64]) -> Result<BigInt> {
        let f = formula(id)?;
        if !self.formulas.contains(&f.id) {
            self.formulas.push(f.id);
        }
        self.trusted &= f.trusted_at(params);
        f.eval(params)
    }
}

/// Evaluates `index` of `spec` from the closed forms alone.
///
/// `Z_{n,k}` and `Z_{k,n}` are isomorphic, so `k > n` is answered with the
/// parameters swapped. `W_0` is the pair count, `W_1 = W` and
/// `W_2 = 2·WW − W`; higher `λ` have no closed form.
pub fn closed_form(spec: FamilySpec, index: Index) -> Result<ClosedValue> {
    let mut acc = Acc { formulas: Vec::new(), trusted: true };
    let value = match index {
        Index::WLambda(0) => {
            let n = BigInt::from(spec.expected_vertex_count());
            &n * (&n - 1u32) / 2u32
        }
        Index::Wiener | Index::WLambda(1) => wiener_closed(&mut acc, spec)?,
        Index::Hyper => hyper_closed(&mut acc, spec)?,
        Index::WLambda(2) => 2 * hyper_closed(&mut acc, spec)? - wiener_closed(&mut acc, spec)?,
        Index::WLambda(l) => return Err(Error::NoClosedForm(format!("W_{l} of {spec}"))),
    };
    Ok(ClosedValue { value, formulas: acc.formulas, trusted: acc.trusted })
}

fn ordered(n: u32, k: u32) -> [i64; 2] {
    [n.max(k).into(), n.min(k).into()]
}

fn wiener_closed(acc: &mut Acc, spec: FamilySpec) -> Result<BigInt> {
    match spec {
        FamilySpec::A { n } => acc.eval("W_A", &[n.into()]),
        FamilySpec::Z { n, k } => acc.eval("W_Z", &ordered(n, k)),
        FamilySpec::M { n, k } => acc.eval("W_M", &[n.into(), k.into()]),
        FamilySpec::ZL { n, k, l } => acc.eval("W_ZL", &[n.into(), k.into(), l.into()]),
        FamilySpec::Cone { n } => {
            let n = i64::from(n);
            Ok(5 * (acc.eval("W_M", &[2 * n, n])? - acc.eval("W_Z", &[n, n])?))
        }
    }
}

fn hyper_closed(acc: &mut Acc, spec: FamilySpec) -> Result<BigInt> {
    match spec {
        FamilySpec::Z { n, k } => acc.eval("WW_Z", &ordered(n, k)),
        FamilySpec::M { n, k } => acc.eval("WW_M", &[n.into(), k.into()]),
        FamilySpec::Cone { n } => acc.eval("WW_cone", &[n.into()]),
        FamilySpec::A { .. } | FamilySpec::ZL { .. } => Err(Error::NoClosedForm(format!("the hyper-Wiener index of {spec}"))),
    }
}

static FORMULAS: [PolynomialFormula; 15] = [
    PolynomialFormula {
        id: "W_A",
        variables: &["n"],
        terms: W_A,
        source: "Wiener index of A_n: \"9 + (261/10)n + 29n^2 + ...\"",
        domain: FormulaDomain::Natural,
        note: None,
        trusted: everywhere,
    },
    PolynomialFormula {
        id: "W_Z",
        variables: &["n", "k"],
        terms: W_Z,
        source: "Wiener index of Z_{n,k}: \"1 + (56/15)k + (32/3)nk + ...\"",
        domain: FormulaDomain::KAtMostN,
        note: None,
        trusted: everywhere,
    },
    PolynomialFormula {
        id: "W_M",
        variables: &["n", "k"],
        terms: W_M,
        source: "Wiener index of M_{n,k}: \"4 + (26/3)n + (109/15)k + ...\"",
        domain: FormulaDomain::KAtMostN,
        note: None,
        trusted: everywhere,
    },
    PolynomialFormula {
        id: "W_ZL",
        variables: &["n", "k", "l"],
        terms: W_ZL,
        source: "Wiener index of Z_{n,k,l}: \"(4/5)l - (1/15)k + (2/3)n + ...\"",
        domain: FormulaDomain::LAtMostKAtMostN,
        note: None,
        trusted: everywhere,
    },
    PolynomialFormula {
        id: "WW_Z",
        variables: &["n", "k"],
        terms: WW_Z,
        source: "hyper-Wiener index of Z_{n,k}: \"1 + (43/10)k + (21/5)n + ...\"",
        domain: FormulaDomain::KAtMostN,
        note: Some("matches direct computation only for 0 <= n - k <= 2; e.g. Z_{3,0} is the path P_8 with WW = 210, the table gives 212"),
        trusted: ww_z_strip,
    },
    PolynomialFormula {
        id: "WW_M",
        variables: &["n", "k"],
        terms: WW_M,
        source: "hyper-Wiener index of M_{n,k}: \"5 + (113/12)k + (193/15)n + ...\"",
        domain: FormulaDomain::KAtMostN,
        note: Some("matches direct computation only for -1 <= n - 2k <= 2; e.g. M_{3,0} is the path P_9 with WW = 330, the table gives 332"),
        trusted: ww_m_strip,
    },
    PolynomialFormula {
        id: "WW_Znn",
        variables: &["n"],
        terms: WW_ZNN,
        source: "hyper-Wiener index of Z_{n,n}: \"1 + (17/2)n + ...\"",
        domain: FormulaDomain::Natural,
        note: None,
        trusted: everywhere,
    },
    PolynomialFormula {
        id: "WW_M2nn",
        variables: &["n"],
        terms: WW_M2NN,
        source: "hyper-Wiener index of M_{2n,n}: \"5 + (703/20)n + ...\"",
        domain: FormulaDomain::Natural,
        note: None,
        trusted: everywhere,
    },
    PolynomialFormula {
        id: "WW_cone",
        variables: &["n"],
        terms: WW_CONE,
        source: "hyper-Wiener index of the one-pentagon cone G_n: \"20 + (533/4)n + ...\"",
        domain: FormulaDomain::Natural,
        note: None,
        trusted: everywhere,
    },
    PolynomialFormula {
        id: "count_a",
        variables: &["n"],
        terms: &[(1, 1, [2, 0, 0]), (4, 1, [1, 0, 0]), (4, 1, [0, 0, 0])],
        source: "vertex count of A_n: \"(n+2)^2\"",
        domain: FormulaDomain::Natural,
        note: None,
        trusted: everywhere,
    },
    PolynomialFormula {
        id: "count_z",
        variables: &["n", "k"],
        terms: &[(2, 1, [1, 1, 0]), (2, 1, [1, 0, 0]), (2, 1, [0, 1, 0]), (2, 1, [0, 0, 0])],
        source: "vertex count of Z_{n,k}: \"2(n+1)(k+1)\"",
        domain: FormulaDomain::KAtMostN,
        note: None,
        trusted: everywhere,
    },
    PolynomialFormula {
        id: "count_m",
        variables: &["n", "k"],
        terms: &[(2, 1, [1, 1, 0]), (-1, 1, [0, 2, 0]), (2, 1, [1, 0, 0]), (2, 1, [0, 1, 0]), (3, 1, [0, 0, 0])],
        source: "vertex count of M_{n,k}: \"(k+1)(2n-k+3)\"",
        domain: FormulaDomain::KAtMostN,
        note: None,
        trusted: everywhere,
    },
    PolynomialFormula {
        id: "count_zl",
        variables: &["n", "k", "l"],
        terms: &[
            (2, 1, [1, 1, 0]),
            (2, 1, [1, 0, 0]),
            (-1, 1, [0, 2, 0]),
            (-1, 1, [0, 0, 2]),
            (2, 1, [0, 1, 1]),
            (2, 1, [0, 0, 1]),
            (1, 1, [0, 0, 0]),
        ],
        source: "vertex count of Z_{n,k,l}: \"2(n+1)(k+1) - (k-l+1)^2\"",
        domain: FormulaDomain::LAtMostKAtMostN,
        note: None,
        trusted: everywhere,
    },
    PolynomialFormula {
        id: "count_cone",
        variables: &["n"],
        terms: &[(5, 1, [2, 0, 0]), (10, 1, [1, 0, 0]), (5, 1, [0, 0, 0])],
        source: "vertex count of G_n: \"5(n+1)^2\"",
        domain: FormulaDomain::Natural,
        note: None,
        trusted: everywhere,
    },
    PolynomialFormula {
        id: "edges_cone",
        variables: &["n"],
        terms: &[(15, 2, [2, 0, 0]), (25, 2, [1, 0, 0]), (5, 1, [0, 0, 0])],
        source: "edge count of G_n: \"5(n+1)(3n+2)/2\"",
        domain: FormulaDomain::Natural,
        note: None,
        trusted: everywhere,
    },
];

const W_A: &[Term] = &[
    (9, 1, [0, 0, 0]),
    (261, 10, [1, 0, 0]),
    (29, 1, [2, 0, 0]),
    (31, 2, [3, 0, 0]),
    (4, 1, [4, 0, 0]),
    (2, 5, [5, 0, 0]),
];

// 17 terms
const W_Z: &[Term] = &[
    (1, 1, [0, 0, 0]),
    (56, 15, [0, 1, 0]),
    (11, 3, [1, 0, 0]),
    (4, 1, [0, 2, 0]),
    (32, 3, [1, 1, 0]),
    (4, 1, [2, 0, 0]),
    (4, 3, [0, 3, 0]),
    (28, 3, [1, 2, 0]),
    (28, 3, [2, 1, 0]),
    (4, 3, [3, 0, 0]),
    (8, 3, [1, 3, 0]),
    (6, 1, [2, 2, 0]),
    (8, 3, [3, 1, 0]),
    (-1, 15, [0, 5, 0]),
    (1, 3, [1, 4, 0]),
    (2, 3, [2, 3, 0]),
    (4, 3, [3, 2, 0]),
];

// 17 terms
const W_M: &[Term] = &[
    (4, 1, [0, 0, 0]),
    (109, 15, [0, 1, 0]),
    (26, 3, [1, 0, 0]),
    (1, 2, [0, 2, 0]),
    (16, 1, [1, 1, 0]),
    (6, 1, [2, 0, 0]),
    (-5, 2, [0, 3, 0]),
    (4, 1, [1, 2, 0]),
    (34, 3, [2, 1, 0]),
    (4, 3, [3, 0, 0]),
    (-8, 3, [1, 3, 0]),
    (4, 1, [2, 2, 0]),
    (8, 3, [3, 1, 0]),
    (-4, 15, [0, 5, 0]),
    (2, 3, [1, 4, 0]),
    (-4, 3, [2, 3, 0]),
    (4, 3, [3, 2, 0]),
];

// 40 terms
const W_ZL: &[Term] = &[
    (4, 5, [0, 0, 1]),
    (-1, 15, [0, 1, 0]),
    (2, 3, [1, 0, 0]),
    (3, 2, [0, 0, 2]),
    (4, 3, [0, 1, 1]),
    (-5, 6, [0, 2, 0]),
    (13, 3, [1, 0, 1]),
    (4, 3, [1, 1, 0]),
    (2, 1, [2, 0, 0]),
    (-7, 6, [0, 0, 3]),
    (23, 6, [0, 1, 2]),
    (-1, 6, [0, 2, 1]),
    (-7, 6, [0, 3, 0]),
    (1, 3, [1, 0, 2]),
    (7, 1, [1, 1, 1]),
    (4, 1, [2, 0, 1]),
    (10, 3, [2, 1, 0]),
    (4, 3, [3, 0, 0]),
    (-4, 3, [0, 1, 3]),
    (2, 1, [0, 2, 2]),
    (-2, 3, [0, 4, 0]),
    (-4, 3, [1, 0, 3]),
    (4, 1, [1, 1, 2]),
    (-2, 1, [2, 0, 2]),
    (8, 1, [2, 1, 1]),
    (8, 3, [3, 1, 0]),
    (-2, 15, [0, 0, 5]),
    (1, 3, [0, 1, 4]),
    (-2, 3, [0, 3, 2]),
    (2, 3, [0, 4, 1]),
    (-4, 15, [0, 5, 0]),
    (-1, 3, [1, 0, 4]),
    (-4, 3, [1, 1, 3]),
    (4, 1, [1, 2, 2]),
    (-8, 3, [1, 3, 1]),
    (2, 3, [1, 4, 0]),
    (-2, 1, [2, 1, 2]),
    (4, 1, [2, 2, 1]),
    (-4, 3, [2, 3, 0]),
    (4, 3, [3, 2, 0]),
];

// 28 terms
const WW_Z: &[Term] = &[
    (1, 1, [0, 0, 0]),
    (43, 10, [0, 1, 0]),
    (21, 5, [1, 0, 0]),
    (211, 36, [0, 2, 0]),
    (1283, 90, [1, 1, 0]),
    (1043, 180, [2, 0, 0]),
    (10, 3, [0, 3, 0]),
    (47, 3, [1, 2, 0]),
    (47, 3, [2, 1, 0]),
    (10, 3, [3, 0, 0]),
    (25, 36, [0, 4, 0]),
    (67, 9, [1, 3, 0]),
    (38, 3, [2, 2, 0]),
    (67, 9, [3, 1, 0]),
    (25, 36, [4, 0, 0]),
    (-2, 15, [0, 5, 0]),
    (2, 1, [1, 4, 0]),
    (10, 3, [2, 3, 0]),
    (13, 3, [3, 2, 0]),
    (3, 2, [4, 1, 0]),
    (-1, 30, [5, 0, 0]),
    (-1, 18, [0, 6, 0]),
    (1, 5, [1, 5, 0]),
    (1, 2, [2, 4, 0]),
    (2, 9, [3, 3, 0]),
    (5, 6, [4, 2, 0]),
    (-1, 15, [5, 1, 0]),
    (1, 90, [6, 0, 0]),
];

// 27 terms
const WW_M: &[Term] = &[
    (5, 1, [0, 0, 0]),
    (113, 12, [0, 1, 0]),
    (193, 15, [1, 0, 0]),
    (133, 120, [0, 2, 0]),
    (727, 30, [1, 1, 0]),
    (2123, 180, [2, 0, 0]),
    (-29, 12, [0, 3, 0]),
    (35, 6, [1, 2, 0]),
    (22, 1, [2, 1, 0]),
    (14, 3, [3, 0, 0]),
    (7, 24, [0, 4, 0]),
    (-23, 6, [1, 3, 0]),
    (41, 6, [2, 2, 0]),
    (26, 3, [3, 1, 0]),
    (25, 36, [4, 0, 0]),
    (-1, 3, [1, 4, 0]),
    (-2, 3, [2, 3, 0]),
    (2, 1, [3, 2, 0]),
    (5, 3, [4, 1, 0]),
    (-1, 30, [5, 0, 0]),
    (3, 5, [0, 6, 0]),
    (-34, 15, [1, 5, 0]),
    (10, 3, [2, 4, 0]),
    (-8, 3, [3, 3, 0]),
    (4, 3, [4, 2, 0]),
    (-2, 15, [5, 1, 0]),
    (1, 90, [6, 0, 0]),
];

// 7 terms
const WW_ZNN: &[Term] = &[
    (1, 1, [0, 0, 0]),
    (17, 2, [1, 0, 0]),
    (1166, 45, [2, 0, 0]),
    (38, 1, [3, 0, 0]),
    (521, 18, [4, 0, 0]),
    (11, 1, [5, 0, 0]),
    (74, 45, [6, 0, 0]),
];

// 7 terms
const WW_M2NN: &[Term] = &[
    (5, 1, [0, 0, 0]),
    (703, 20, [1, 0, 0]),
    (34831, 360, [2, 0, 0]),
    (1615, 12, [3, 0, 0]),
    (7229, 72, [4, 0, 0]),
    (574, 15, [5, 0, 0]),
    (263, 45, [6, 0, 0]),
];

// 7 terms
const WW_CONE: &[Term] = &[
    (20, 1, [0, 0, 0]),
    (533, 4, [1, 0, 0]),
    (8501, 24, [2, 0, 0]),
    (5795, 12, [3, 0, 0]),
    (8575, 24, [4, 0, 0]),
    (409, 3, [5, 0, 0]),
    (21, 1, [6, 0, 0]),
];


#[cfg(test)]
mod tests {
    use super::*;

    fn eval(id: &str, params: &[i64]) -> i64 {
        i64::try_from(eval_formula(id, params).unwrap()).unwrap()
    }

    #[test]
    fn anchor_values() {
        assert_eq!(eval("WW_cone", &[0]), 20);
        assert_eq!(eval("WW_cone", &[1]), 1505);
        assert_eq!(eval("W_A", &[1]), 84);
        assert_eq!(eval("W_Z", &[1, 1]), 62);
        assert_eq!(eval("W_M", &[2, 1]), 185);
        assert_eq!(eval("WW_Z", &[1, 1]), 115);
        assert_eq!(eval("WW_M", &[2, 1]), 416);
        assert_eq!(eval("WW_Znn", &[1]), 115);
        assert_eq!(eval("WW_M2nn", &[1]), 416);
    }

    #[test]
    fn lookup_ignores_case() {
        assert_eq!(formula("ww_cone").unwrap().id, "WW_cone");
        assert_eq!(formula("nope").unwrap_err(), Error::UnknownFormula("nope".into()));
    }

    #[test]
    fn domain_is_enforced() {
        assert!(matches!(eval_formula("W_M", &[1, 2]), Err(Error::Domain { .. })));
        assert!(matches!(eval_formula("W_ZL", &[3, 1, 2]), Err(Error::Domain { .. })));
        assert!(matches!(eval_formula("W_A", &[-1]), Err(Error::Domain { .. })));
        assert!(matches!(eval_formula("W_A", &[1, 1]), Err(Error::Domain { .. })));
    }

    #[test]
    fn listing_metadata() {
        let cone = formula("WW_cone").unwrap();
        assert_eq!((cone.degree(), cone.term_count()), (6, 7));
        assert_eq!(formula("W_ZL").unwrap().variables.len(), 3);
        assert!(list_formulas().iter().all(|f| !f.source.is_empty()));
    }

    #[test]
    fn chain_identities_on_the_diagonals() {
        for n in 0..=8 {
            let zn = eval("WW_Z", &[n, n]);
            let m2n = eval("WW_M", &[2 * n, n]);
            assert_eq!(zn, eval("WW_Znn", &[n]));
            assert_eq!(m2n, eval("WW_M2nn", &[n]));
            assert_eq!(5 * (m2n - zn), eval("WW_cone", &[n]));
        }
    }

    #[test]
    fn path_degenerations() {
        let path = |m: i64| m * (m * m - 1) / 6;
        for n in 0..=8 {
            assert_eq!(eval("W_Z", &[n, 0]), path(2 * n + 2));
            assert_eq!(eval("W_M", &[n, 0]), path(2 * n + 3));
        }
    }

    #[test]
    fn integrality_on_grids() {
        for f in list_formulas() {
            let pts: Vec<Vec<i64>> = match f.domain.arity() {
                1 => (0..=12).map(|n| vec![n]).collect(),
                2 => (0..=10).flat_map(|n| (0..=n).map(move |k| vec![n, k])).collect(),
                _ => (0..=8).flat_map(|n| (0..=n).flat_map(move |k| (0..=k).map(move |l| vec![n, k, l]))).collect(),
            };
            for p in pts {
                f.eval(&p).unwrap();
            }
        }
    }

    #[test]
    fn cone_by_sectors_small() {
        assert_eq!(cone_wlambda_via_sectors(1, 0).unwrap(), BigInt::from(190));
        assert_eq!(cone_wlambda_via_sectors(1, 1).unwrap(), BigInt::from(615));
        assert_eq!(cone_wlambda_via_sectors(1, 2).unwrap(), BigInt::from(2395));
    }

    #[test]
    fn dispatcher_composes_tables() {
        let cone = closed_form(FamilySpec::Cone { n: 1 }, Index::Wiener).unwrap();
        assert_eq!(cone.value, BigInt::from(615));
        assert_eq!(cone.formulas, ["W_M", "W_Z"]);
        let w2 = closed_form(FamilySpec::Cone { n: 1 }, Index::WLambda(2)).unwrap();
        assert_eq!(w2.value, BigInt::from(2395));
        let swapped = closed_form(FamilySpec::Z { n: 0, k: 3 }, Index::Wiener).unwrap();
        assert_eq!(swapped.value, BigInt::from(84));
        assert!(!closed_form(FamilySpec::Z { n: 3, k: 0 }, Index::Hyper).unwrap().trusted);
        assert!(matches!(closed_form(FamilySpec::A { n: 1 }, Index::Hyper), Err(Error::NoClosedForm(_))));
    }
}
