//! Hop distances and the distance-based indices built on them.
//!
//! Every index here is a moment of the distance distribution: `W_λ` sums
//! `d(u, v)^λ` over unordered pairs, the Wiener index is `W_1` and the
//! hyper-Wiener index is `(W_2 + W_1) / 2`. Distances are computed with one
//! BFS per source; rows are independent, so they run on the rayon pool and
//! are merged in source order.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sentinel used internally for "not reached yet".
const UNSEEN: u32 = u32::MAX;

/// Exact hop distances from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<u32>> {
    g.check_vertex(source)?;
    let dist = bfs_raw(g, source);
    match dist.iter().position(|&d| d == UNSEEN) {
        Some(v) => Err(Error::Disconnected { from: source, unreachable: v }),
        None => Ok(dist),
    }
}

fn bfs_raw(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNSEEN; g.vertex_count()];
    let mut queue = VecDeque::with_capacity(g.vertex_count());
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] == UNSEEN {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Dense `n × n` table of hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// All-pairs distances by BFS from every vertex.
pub fn all_pairs(g: &Graph) -> Result<DistanceMatrix> {
    g.require_connected()?;
    let n = g.vertex_count();
    let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| bfs_raw(g, s)).collect();
    Ok(DistanceMatrix { n, d: rows.concat() })
}

/// Number of unordered vertex pairs at each distance `k ≥ 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DistanceDistribution {
    counts: BTreeMap<u32, u64>,
}

impl DistanceDistribution {
    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn count(&self, distance: u32) -> u64 {
        self.counts.get(&distance).copied().unwrap_or(0)
    }

    pub fn pair_count(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn diameter(&self) -> u32 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    /// `Σ_k counts[k] · k^λ`, exactly.
    pub fn moment(&self, lambda: u32) -> BigInt {
        self.counts
            .iter()
            .map(|(&k, &c)| BigInt::from(c) * Pow::pow(BigInt::from(k), lambda))
            .sum()
    }

    /// Floating-point moment for real exponents.
    pub fn moment_real(&self, lambda: f64) -> f64 {
        self.counts.iter().map(|(&k, &c)| c as f64 * f64::from(k).powf(lambda)).sum()
    }

    fn merge(mut self, other: Self) -> Self {
        for (k, c) in other.counts {
            *self.counts.entry(k).or_insert(0) += c;
        }
        self
    }
}

/// Distance distribution over unordered pairs, without materializing the
/// full matrix.
pub fn distance_distribution(g: &Graph) -> Result<DistanceDistribution> {
    g.require_connected()?;
    let n = g.vertex_count();
    let dist = (0..n)
        .into_par_iter()
        .map(|s| {
            let row = bfs_raw(g, s);
            let mut local = DistanceDistribution::default();
            for &d in &row[s + 1..] {
                *local.counts.entry(d).or_insert(0) += 1;
            }
            local
        })
        .reduce(DistanceDistribution::default, DistanceDistribution::merge);
    Ok(dist)
}

/// `W_λ(g) = Σ_{u<v} d(u, v)^λ`. `W_0` is the number of pairs.
pub fn w_lambda(g: &Graph, lambda: u32) -> Result<BigInt> {
    Ok(distance_distribution(g)?.moment(lambda))
}

/// `W_λ` for a real exponent, in floating point.
pub fn w_lambda_real(g: &Graph, lambda: f64) -> Result<f64> {
    Ok(distance_distribution(g)?.moment_real(lambda))
}

pub fn wiener(g: &Graph) -> Result<BigInt> {
    w_lambda(g, 1)
}

/// Hyper-Wiener index `(W_2 + W_1) / 2`.
///
/// `d² + d` is even for every pair, so the halving is exact; an odd sum is
/// reported as an invariant violation.
pub fn hyper_wiener(g: &Graph) -> Result<BigInt> {
    hyper_from_distribution(&distance_distribution(g)?)
}

pub(crate) fn hyper_from_distribution(dist: &DistanceDistribution) -> Result<BigInt> {
    half_exact(dist.moment(2) + dist.moment(1), "W_2 + W_1")
}

pub(crate) fn half_exact(value: BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = value.div_rem(&BigInt::from(2));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Invariant(format!("{what} = {value} is odd")))
    }
}

/// `D^λ(F, K) = Σ_{u∈F} Σ_{v∈K} d(u, v)^λ` over ordered pairs.
///
/// `f` and `k` are treated as sets; repeated entries count once. Pairs
/// `(v, v)` contribute nothing for every `λ`, including `λ = 0`, so that
/// `D^λ(V, V) = 2 W_λ` holds for all exponents.
pub fn d_lambda(g: &Graph, f: &[usize], k: &[usize], lambda: u32) -> Result<BigInt> {
    for &v in f.iter().chain(k) {
        g.check_vertex(v)?;
    }
    g.require_connected()?;
    let mut f = f.to_vec();
    f.sort_unstable();
    f.dedup();
    let mut k = k.to_vec();
    k.sort_unstable();
    k.dedup();
    let per_source: Vec<BTreeMap<u32, u64>> = f
        .par_iter()
        .map(|&u| {
            let row = bfs_raw(g, u);
            let mut counts = BTreeMap::new();
            for &v in &k {
                *counts.entry(row[v]).or_insert(0u64) += 1;
            }
            counts
        })
        .collect();
    let mut total = BigInt::zero();
    for counts in per_source {
        for (d, c) in counts {
            if d > 0 {
                total += BigInt::from(c) * Pow::pow(BigInt::from(d), lambda);
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn bfs_on_small_graphs() {
        assert_eq!(bfs_distances(&Graph::path(3), 0).unwrap(), vec![0, 1, 2]);
        let mut c5 = bfs_distances(&Graph::cycle(5), 3).unwrap();
        c5.sort_unstable();
        assert_eq!(c5, vec![0, 1, 1, 2, 2]);
    }

    #[test]
    fn bfs_errors() {
        assert_eq!(
            bfs_distances(&Graph::path(3), 3),
            Err(Error::VertexOutOfRange { vertex: 3, count: 3 })
        );
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(bfs_distances(&g, 0), Err(Error::Disconnected { from: 0, unreachable: 2 }));
        assert!(matches!(all_pairs(&g), Err(Error::Disconnected { .. })));
        assert!(matches!(wiener(&g), Err(Error::Disconnected { .. })));
    }

    #[test]
    fn single_edge_matrix() {
        let m = all_pairs(&Graph::path(2)).unwrap();
        assert_eq!((m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)), (0, 1, 1, 0));
    }

    #[test]
    fn distributions() {
        let c6 = distance_distribution(&Graph::cycle(6)).unwrap();
        assert_eq!(c6.counts(), &BTreeMap::from([(1, 6), (2, 6), (3, 3)]));
        let star = distance_distribution(&Graph::star(3)).unwrap();
        assert_eq!(star.counts(), &BTreeMap::from([(1, 3), (2, 3)]));
        let c5 = distance_distribution(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.counts(), &BTreeMap::from([(1, 5), (2, 5)]));
    }

    #[test]
    fn indices_on_cycles_and_paths() {
        assert_eq!(w_lambda(&Graph::cycle(5), 0).unwrap(), big(10));
        assert_eq!(w_lambda(&Graph::cycle(6), 2).unwrap(), big(57));
        assert_eq!(wiener(&Graph::path(2)).unwrap(), big(1));
        assert_eq!(wiener(&Graph::cycle(5)).unwrap(), big(15));
        assert_eq!(hyper_wiener(&Graph::path(2)).unwrap(), big(1));
        assert_eq!(hyper_wiener(&Graph::cycle(5)).unwrap(), big(20));
        assert_eq!(hyper_wiener(&Graph::cycle(6)).unwrap(), big(42));
    }

    #[test]
    fn real_exponent() {
        assert_eq!(w_lambda_real(&Graph::cycle(5), 1.0).unwrap(), 15.0);
        assert_eq!(w_lambda_real(&Graph::cycle(6), 0.0).unwrap(), 15.0);
        assert_eq!(w_lambda_real(&Graph::path(2), 2.5).unwrap(), 1.0);
    }

    #[test]
    fn d_lambda_basics() {
        let c6 = Graph::cycle(6);
        for lambda in 0..3 {
            assert_eq!(d_lambda(&c6, &[2], &[2], lambda).unwrap(), big(0));
        }
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(d_lambda(&c6, &all, &all, 1).unwrap(), big(54));
        assert_eq!(d_lambda(&c6, &[0, 0], &[3], 1).unwrap(), big(3));
        assert!(matches!(d_lambda(&c6, &[6], &[0], 1), Err(Error::VertexOutOfRange { .. })));
    }
}
