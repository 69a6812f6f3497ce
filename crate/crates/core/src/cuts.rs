//! Convex edge cuts and the cut method.
//!
//! In a partial cube the Djoković–Winkler relation `Θ` is an equivalence on
//! edges, and removing one `Θ`-class leaves exactly two convex components.
//! With classes `F_1..F_c` and components `(A_i, B_i)`:
//!
//! * `W(G) = Σ_i |A_i|·|B_i|`
//! * `W_{λ+1}(G) = c·W_λ(G) − Σ_i (W_λ(A_i) + W_λ(B_i))`
//!
//! and taking `λ = 1` in the second line gives the hyper-Wiener index.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::distance::{all_pairs, bfs_distances, distance_distribution, half_exact, DistanceDistribution, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// One `Θ*`-class: its edges (as indices into [`Graph::edges`]) and the two
/// vertex sets left after deleting them.
///
/// `side_a` is the component containing the smaller endpoint of the
/// lowest-numbered edge in the class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutClass {
    pub edges: Vec<usize>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl CutClass {
    pub fn sizes(&self) -> (usize, usize) {
        (self.side_a.len(), self.side_b.len())
    }
}

/// The `Θ*`-classes of a graph, ordered by their lowest edge index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutPartition {
    classes: Vec<CutClass>,
}

impl CutPartition {
    pub fn classes(&self) -> &[CutClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `Σ |A_i|·|B_i|`.
    pub fn wiener(&self) -> BigInt {
        self.classes
            .iter()
            .map(|c| BigInt::from(c.side_a.len()) * BigInt::from(c.side_b.len()))
            .sum()
    }

    /// Whether the class edge sets are disjoint and cover every edge of `g`.
    pub fn partitions_edges_of(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.edge_count()];
        for class in &self.classes {
            for &e in &class.edges {
                if e >= seen.len() || std::mem::replace(&mut seen[e], true) {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn require_bipartite(g: &Graph) -> Result<()> {
    g.require_connected()?;
    if g.is_bipartite() {
        Ok(())
    } else {
        Err(Error::NotBipartite)
    }
}

/// `Θ*`-classes from the defining relation: edges `xy` and `uv` are related
/// when `d(x,u) + d(y,v) ≠ d(x,v) + d(y,u)`, closed transitively.
///
/// Every class is then checked to split `g` into exactly two convex
/// components; a class that does not is an [`Error::InvalidCut`].
pub fn theta_star_classes(g: &Graph) -> Result<CutPartition> {
    require_bipartite(g)?;
    let dm = all_pairs(g)?;
    let edges = g.edges();
    let mut uf = UnionFind::new(edges.len());
    for (i, &(x, y)) in edges.iter().enumerate() {
        for (j, &(u, v)) in edges.iter().enumerate().skip(i + 1) {
            if dm.get(x, u) + dm.get(y, v) != dm.get(x, v) + dm.get(y, u) {
                uf.union(i, j);
            }
        }
    }
    let mut grouped: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for e in 0..edges.len() {
        let root = uf.find(e);
        grouped[root].push(e);
    }
    let grouped: Vec<Vec<usize>> = grouped.into_iter().filter(|c| !c.is_empty()).collect();
    let classes = grouped
        .into_par_iter()
        .enumerate()
        .map(|(index, class_edges)| {
            let class = split_by_removal(g, index, class_edges)?;
            for side in [&class.side_a, &class.side_b] {
                if !convex_with(g, side, |u| dm.row(u).to_vec()) {
                    return Err(Error::InvalidCut { class: index, reason: format!("component {side:?} is not convex") });
                }
            }
            Ok(class)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CutPartition { classes })
}

/// Removes `class_edges` and requires exactly two components.
fn split_by_removal(g: &Graph, index: usize, class_edges: Vec<usize>) -> Result<CutClass> {
    let mut removed = vec![false; g.edge_count()];
    for &e in &class_edges {
        removed[e] = true;
    }
    let (x, y) = g.edges()[class_edges[0]];
    let from_x = g.reachable_from(x, |e| !removed[e]);
    if from_x[y] {
        return Err(Error::InvalidCut { class: index, reason: "removing the class leaves the graph connected".into() });
    }
    let from_y = g.reachable_from(y, |e| !removed[e]);
    let side_a: Vec<usize> = (0..g.vertex_count()).filter(|&v| from_x[v]).collect();
    let side_b: Vec<usize> = (0..g.vertex_count()).filter(|&v| from_y[v]).collect();
    if side_a.len() + side_b.len() != g.vertex_count() {
        return Err(Error::InvalidCut { class: index, reason: "removing the class leaves more than two components".into() });
    }
    Ok(CutClass { edges: class_edges, side_a, side_b })
}

/// `Θ*`-classes by vertex splits, for large partial cubes.
///
/// For an unassigned edge `xy` the class is the set of edges joining
/// `W_xy = {w : d(w,x) < d(w,y)}` to its complement. Each class costs two
/// BFS runs instead of the all-pairs table. Overlapping classes (which
/// means `Θ` is not transitive) and disconnected sides are rejected;
/// convexity of the sides is not re-checked here, use
/// [`theta_star_classes`] when that certificate is needed.
pub fn theta_classes_by_splits(g: &Graph) -> Result<CutPartition> {
    require_bipartite(g)?;
    let edges = g.edges();
    let mut owner: Vec<Option<usize>> = vec![None; edges.len()];
    let mut classes = Vec::new();
    for first in 0..edges.len() {
        if owner[first].is_some() {
            continue;
        }
        let index = classes.len();
        let (x, y) = edges[first];
        let dx = bfs_distances(g, x)?;
        let dy = bfs_distances(g, y)?;
        let near_x: Vec<bool> = dx.iter().zip(&dy).map(|(a, b)| a < b).collect();
        let mut class_edges = Vec::new();
        for (e, &(u, v)) in edges.iter().enumerate() {
            if near_x[u] != near_x[v] {
                if let Some(other) = owner[e] {
                    return Err(Error::InvalidCut {
                        class: index,
                        reason: format!("edge {e} is already in class {other}; the relation is not transitive"),
                    });
                }
                owner[e] = Some(index);
                class_edges.push(e);
            }
        }
        let class = split_by_removal(g, index, class_edges)?;
        if class.side_a.iter().any(|&v| !near_x[v]) {
            return Err(Error::InvalidCut { class: index, reason: "split sides are not the removal components".into() });
        }
        classes.push(class);
    }
    Ok(CutPartition { classes })
}

/// Whether `s` contains every vertex of every shortest path between two of
/// its members.
pub fn is_convex(g: &Graph, s: &[usize]) -> Result<bool> {
    for &v in s {
        g.check_vertex(v)?;
    }
    g.require_connected()?;
    Ok(convex_with(g, s, |u| bfs_distances(g, u).expect("connected")))
}

/// For each `u ∈ s`, marks every vertex lying on a shortest path from `u`
/// to some member of `s` (sweeping outward-in by distance from `u`) and
/// fails if a marked vertex is outside `s`.
fn convex_with(g: &Graph, s: &[usize], row: impl Fn(usize) -> Vec<u32>) -> bool {
    let n = g.vertex_count();
    let mut member = vec![false; n];
    for &v in s {
        member[v] = true;
    }
    let mut on = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for &u in s {
        let d = row(u);
        let levels = d.iter().max().map_or(0, |&m| m as usize + 1);
        let mut start = vec![0usize; levels + 1];
        for &x in &d {
            start[x as usize + 1] += 1;
        }
        for i in 1..=levels {
            start[i] += start[i - 1];
        }
        order.clear();
        order.resize(n, 0);
        for (w, &x) in d.iter().enumerate() {
            order[start[x as usize]] = w;
            start[x as usize] += 1;
        }
        for &w in order.iter().rev() {
            on[w] = member[w] || g.neighbors(w).iter().any(|&x| d[x] == d[w] + 1 && on[x]);
            if on[w] && !member[w] {
                return false;
            }
        }
    }
    true
}

/// Whether the subgraph induced by `s` is connected and preserves all
/// distances of `g` between its vertices.
pub fn is_isometric(g: &Graph, s: &[usize]) -> Result<bool> {
    let dm = all_pairs(g)?;
    is_isometric_with(g, &dm, s)
}

pub(crate) fn is_isometric_with(g: &Graph, dm: &DistanceMatrix, s: &[usize]) -> Result<bool> {
    let h = g.induced_subgraph(s)?;
    if !h.is_connected() {
        return Ok(false);
    }
    let hm = all_pairs(&h)?;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if hm.get(i, j) != dm.get(s[i], s[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Wiener index as `Σ |A_i|·|B_i|` over the `Θ*`-classes.
pub fn wiener_via_cuts(g: &Graph) -> Result<BigInt> {
    Ok(theta_star_classes(g)?.wiener())
}

fn side_distributions(g: &Graph, partition: &CutPartition) -> Result<Vec<[DistanceDistribution; 2]>> {
    partition
        .classes()
        .iter()
        .map(|class| {
            Ok([
                distance_distribution(&g.induced_subgraph(&class.side_a)?)?,
                distance_distribution(&g.induced_subgraph(&class.side_b)?)?,
            ])
        })
        .collect()
}

/// `W_λ` by running `W_{μ+1} = c·W_μ − Σ (W_μ(A_i) + W_μ(B_i))` up from
/// `W_0 = C(n, 2)`. Component values come from BFS on the extracted
/// components, which are isometric because they are convex.
pub fn wlambda_via_recursion(g: &Graph, lambda: u32) -> Result<BigInt> {
    wlambda_from_partition(g, &theta_star_classes(g)?, lambda)
}

/// [`wlambda_via_recursion`] with the classes already computed.
pub fn wlambda_from_partition(g: &Graph, partition: &CutPartition, lambda: u32) -> Result<BigInt> {
    let sides = side_distributions(g, partition)?;
    let n = BigInt::from(g.vertex_count());
    let c = BigInt::from(partition.len());
    let mut w = &n * (&n - 1u32) / 2u32;
    for mu in 0..lambda {
        let correction: BigInt = sides.iter().map(|[a, b]| a.moment(mu) + b.moment(mu)).sum();
        w = &c * w - correction;
    }
    Ok(w)
}

/// `WW = ((c + 1)/2)·W − ½ Σ (W(A_i) + W(B_i))` with `c` the class count.
pub fn hyper_wiener_via_cuts(g: &Graph) -> Result<BigInt> {
    hyper_wiener_from_partition(g, &theta_star_classes(g)?)
}

/// [`hyper_wiener_via_cuts`] with the classes already computed.
pub fn hyper_wiener_from_partition(g: &Graph, partition: &CutPartition) -> Result<BigInt> {
    let sides = side_distributions(g, partition)?;
    let c = BigInt::from(partition.len());
    let correction: BigInt = sides.iter().map(|[a, b]| a.moment(1) + b.moment(1)).sum();
    half_exact((c + 1u32) * partition.wiener() - correction, "(c + 1)·W − Σ W(sides)")
}
