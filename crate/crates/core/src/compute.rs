//! One entry point for every way of evaluating an index.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{closed_form, cone_wlambda_via_sectors};
use crate::cuts::{hyper_wiener_from_partition, theta_classes_by_splits, theta_star_classes, wlambda_from_partition, CutPartition};
use crate::distance::{half_exact, hyper_wiener, w_lambda};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;

/// Distance-based index to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Index {
    Wiener,
    Hyper,
    WLambda(u32),
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Wiener => f.write_str("wiener"),
            Index::Hyper => f.write_str("hyper"),
            Index::WLambda(l) => write!(f, "wlambda({l})"),
        }
    }
}

/// How an index is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// All-pairs breadth-first search.
    Bfs,
    /// Convex edge cuts; bipartite instances only.
    Cuts,
    /// Closed-form polynomials, no graph is built.
    Closed,
    /// Cone only: `5·(W_λ(M_{2n,n}) − W_λ(Z_{n,n}))`.
    Sectors,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Bfs => "bfs",
            Method::Cuts => "cuts",
            Method::Closed => "closed",
            Method::Sectors => "sectors",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    /// Accepts `theorem3` as an alias of `sectors`.
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bfs" => Ok(Method::Bfs),
            "cuts" => Ok(Method::Cuts),
            "closed" => Ok(Method::Closed),
            "sectors" | "theorem3" => Ok(Method::Sectors),
            _ => Err(Error::domain("method", format!("unknown method `{s}` (expected bfs, cuts, closed or sectors)"))),
        }
    }
}

/// Above this many vertices the cut classes come from vertex splits
/// instead of the all-pairs relation.
pub const EXACT_CUT_LIMIT: usize = 1000;

/// Cut classes by whichever route suits the graph size.
pub fn cut_partition(g: &Graph) -> Result<CutPartition> {
    if g.vertex_count() <= EXACT_CUT_LIMIT {
        theta_star_classes(g)
    } else {
        theta_classes_by_splits(g)
    }
}

/// Evaluates `index` on `g` using a cut partition.
pub fn index_via_cuts(g: &Graph, index: Index) -> Result<BigInt> {
    let partition = cut_partition(g)?;
    match index {
        Index::Wiener | Index::WLambda(1) => Ok(partition.wiener()),
        Index::Hyper => hyper_wiener_from_partition(g, &partition),
        Index::WLambda(l) => wlambda_from_partition(g, &partition, l),
    }
}

/// Evaluates `index` on `g` by BFS.
pub fn index_via_bfs(g: &Graph, index: Index) -> Result<BigInt> {
    match index {
        Index::Wiener => w_lambda(g, 1),
        Index::Hyper => hyper_wiener(g),
        Index::WLambda(l) => w_lambda(g, l),
    }
}

/// Evaluates `index` of the family member `spec` with `method`.
///
/// `cuts` fails with [`Error::NotBipartite`] on cones and `sectors` with
/// [`Error::WrongFamily`] on anything but a cone. `closed` returns the
/// table value even where a table is known to be unreliable; use
/// [`closed_form`] to see that flag.
pub fn compute(spec: FamilySpec, index: Index, method: Method) -> Result<BigInt> {
    match method {
        Method::Bfs => index_via_bfs(spec.build().graph(), index),
        Method::Cuts => index_via_cuts(spec.build().graph(), index),
        Method::Closed => Ok(closed_form(spec, index)?.value),
        Method::Sectors => {
            let FamilySpec::Cone { n } = spec else {
                return Err(Error::WrongFamily { expected: "cone", found: spec.to_string() });
            };
            let n = i64::from(n);
            match index {
                Index::Wiener => cone_wlambda_via_sectors(n, 1),
                Index::WLambda(l) => cone_wlambda_via_sectors(n, l),
                Index::Hyper => half_exact(
                    cone_wlambda_via_sectors(n, 2)? + cone_wlambda_via_sectors(n, 1)?,
                    "W_2 + W_1",
                ),
            }
        }
    }
}
