use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("invalid edge ({0}, {1}): {2}")]
    InvalidEdge(usize, usize, &'static str),

    #[error("graph is disconnected: vertex {unreachable} is unreachable from vertex {from}")]
    Disconnected { from: usize, unreachable: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("parameter domain violated for {what}: {reason}")]
    Domain { what: String, reason: String },

    #[error("expected a {expected} instance, got {found}")]
    WrongFamily { expected: &'static str, found: String },

    #[error("graph is not bipartite, so the cut method does not apply")]
    NotBipartite,

    #[error("edge class {class} is not a convex cut: {reason}")]
    InvalidCut { class: usize, reason: String },

    #[error("unknown formula id `{0}`")]
    UnknownFormula(String),

    #[error("formula `{id}` evaluated to the non-integer {value} at {params:?}")]
    NonIntegral { id: String, params: Vec<i64>, value: String },

    #[error("no closed form available for {0}")]
    NoClosedForm(String),

    #[error("sample point {0:?} appears more than once")]
    DuplicateSample(Vec<i64>),

    #[error("underdetermined fit: need at least {needed} independent samples, got {got}; unresolved monomials: {missing:?}")]
    Underdetermined { needed: usize, got: usize, missing: Vec<String> },

    #[error("samples are not a polynomial of the requested degree: residual at {point:?} is {residual}")]
    NotPolynomial { point: Vec<i64>, residual: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn domain(what: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Domain { what: what.into(), reason: reason.into() }
    }

    /// `true` for errors caused by caller input (bad parameters, wrong
    /// method for the instance), `false` for failures of the computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::VertexOutOfRange { .. }
                | Error::InvalidEdge(..)
                | Error::EmptyGraph
                | Error::Domain { .. }
                | Error::WrongFamily { .. }
                | Error::NotBipartite
                | Error::UnknownFormula(_)
                | Error::NoClosedForm(_)
                | Error::DuplicateSample(_)
                | Error::Underdetermined { .. }
        )
    }
}
