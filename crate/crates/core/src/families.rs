//! Constructors for the honeycomb families and the one-pentagon nanocone.
//!
//! The four lattice families are cut out of the honeycomb lattice as runs of
//! zigzag lines (see [`line_point`]):
//!
//! * `Z(n, k)`: `k + 1` lines of `2n + 2` vertices. This is a parallelogram
//!   of `k` rows of `n` hexagons whose two acute corners each carry one
//!   pendant edge. `Z(n, 0)` is the path on `2n + 2` vertices.
//! * `M(n, k)`: line `r` has `2(n − k + r) + 3` vertices, giving rows of
//!   `n − k + 1, …, n` hexagons; the two ends of the longest line are the
//!   pendant vertices. `M(n, 0)` is the path on `2n + 3` vertices.
//! * `A(n)`: `M(n, n)` plus one apex vertex hung below the short end, so the
//!   triangle of hexagons carries three pendant edges. `A(0)` is `K_{1,3}`.
//! * `ZL(n, k, l)`: `Z(n, k)` with the corner at the pendant of the last
//!   line cut away in a staircase: line `l + d` loses its first `2d + 1`
//!   vertices, for `d = 0..=k − l`.
//!
//! The cone `G_n` is a pentagon surrounded by `n` rings. Ring `j` is a cycle
//! of `5(2j + 1)` vertices split into five sector arcs of `2j + 1`; within a
//! sector, every even arc position `t` of ring `j` is joined to position
//! `t + 1` of ring `j + 1`.

use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::{line_point, LatticePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    A,
    Z,
    M,
    ZL,
    Cone,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::A, Family::Z, Family::M, Family::ZL, Family::Cone];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::Z => "z",
            Family::M => "m",
            Family::ZL => "zl",
            Family::Cone => "cone",
        }
    }

    /// Names of the integer parameters, in order.
    pub fn parameter_names(self) -> &'static [&'static str] {
        match self {
            Family::A | Family::Cone => &["n"],
            Family::Z | Family::M => &["n", "k"],
            Family::ZL => &["n", "k", "l"],
        }
    }

    pub fn is_lattice(self) -> bool {
        self != Family::Cone
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain("family", format!("unknown family `{s}` (expected a, z, m, zl or cone)")))
    }
}

/// A family together with validated parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    A { n: u32 },
    Z { n: u32, k: u32 },
    M { n: u32, k: u32 },
    ZL { n: u32, k: u32, l: u32 },
    Cone { n: u32 },
}

fn non_negative(family: Family, name: &str, value: i64) -> Result<u32> {
    u32::try_from(value)
        .map_err(|_| Error::domain(format!("{family} parameter {name}"), format!("{value} is not a non-negative 32-bit integer")))
}

impl FamilySpec {
    /// Validates `params` against the family's domain.
    ///
    /// `Z` accepts any `n, k ≥ 0`; `M` needs `k ≤ n`; `ZL` needs
    /// `l ≤ k ≤ n`.
    pub fn new(family: Family, params: &[i64]) -> Result<Self> {
        let names = family.parameter_names();
        if params.len() != names.len() {
            return Err(Error::domain(
                family.name(),
                format!("expected {} parameter(s) {:?}, got {}", names.len(), names, params.len()),
            ));
        }
        let p: Vec<u32> = params
            .iter()
            .zip(names)
            .map(|(&v, name)| non_negative(family, name, v))
            .collect::<Result<_>>()?;
        let spec = match family {
            Family::A => FamilySpec::A { n: p[0] },
            Family::Cone => FamilySpec::Cone { n: p[0] },
            Family::Z => FamilySpec::Z { n: p[0], k: p[1] },
            Family::M => {
                if p[1] > p[0] {
                    return Err(Error::domain("m", format!("k = {} exceeds n = {}", p[1], p[0])));
                }
                FamilySpec::M { n: p[0], k: p[1] }
            }
            Family::ZL => {
                if !(p[2] <= p[1] && p[1] <= p[0]) {
                    return Err(Error::domain("zl", format!("need l <= k <= n, got n = {}, k = {}, l = {}", p[0], p[1], p[2])));
                }
                FamilySpec::ZL { n: p[0], k: p[1], l: p[2] }
            }
        };
        Ok(spec)
    }

    pub fn family(self) -> Family {
        match self {
            FamilySpec::A { .. } => Family::A,
            FamilySpec::Z { .. } => Family::Z,
            FamilySpec::M { .. } => Family::M,
            FamilySpec::ZL { .. } => Family::ZL,
            FamilySpec::Cone { .. } => Family::Cone,
        }
    }

    pub fn params(self) -> Vec<i64> {
        match self {
            FamilySpec::A { n } | FamilySpec::Cone { n } => vec![n.into()],
            FamilySpec::Z { n, k } | FamilySpec::M { n, k } => vec![n.into(), k.into()],
            FamilySpec::ZL { n, k, l } => vec![n.into(), k.into(), l.into()],
        }
    }

    /// Vertex count from the closed counting formulas.
    pub fn expected_vertex_count(self) -> u64 {
        let w = |v: u32| u64::from(v);
        match self {
            FamilySpec::A { n } => (w(n) + 2).pow(2),
            FamilySpec::Z { n, k } => 2 * (w(n) + 1) * (w(k) + 1),
            FamilySpec::M { n, k } => (w(k) + 1) * (2 * w(n) - w(k) + 3),
            FamilySpec::ZL { n, k, l } => 2 * (w(n) + 1) * (w(k) + 1) - (w(k) - w(l) + 1).pow(2),
            FamilySpec::Cone { n } => 5 * (w(n) + 1).pow(2),
        }
    }

    pub fn build(self) -> FamilyInstance {
        match self {
            FamilySpec::Cone { n } => build_cone_unchecked(n),
            _ => build_lattice(self),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(i64::to_string).collect();
        write!(f, "{}({})", self.family(), params.join(","))
    }
}

/// Vertex count predicted by the counting formula for `family(params)`.
pub fn expected_vertex_count(family: Family, params: &[i64]) -> Result<u64> {
    Ok(FamilySpec::new(family, params)?.expected_vertex_count())
}

/// Position of a cone vertex: ring (layer) `j`, sector `0..5`, arc index
/// `0..=2j` counterclockwise within the sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConeLabel {
    pub layer: u32,
    pub sector: u32,
    pub arc: u32,
}

impl ConeLabel {
    /// Where this vertex sits when its sector and the next two are unrolled
    /// into the flat honeycomb (sector `s` is turned by `60°·s`).
    pub fn flat_point(self) -> LatticePoint {
        let (j, t) = (i64::from(self.layer), i64::from(self.arc));
        LatticePoint::new(2 * j + 1 - (t + 1) / 2, t - j).rotate60_times(self.sector)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum VertexLabel {
    /// Position `index` on zigzag line `line`.
    Lattice { line: u32, index: u32 },
    /// The extra vertex below the short end of an `A` graph.
    Apex,
    Cone(ConeLabel),
}

/// A constructed family member with its canonical numbering.
///
/// Lattice families are numbered line by line in increasing position with
/// the pendant vertices last; the cone is numbered by layer, then sector,
/// then arc index.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    spec: FamilySpec,
    graph: Graph,
    labels: Vec<VertexLabel>,
    embedding: Vec<(Rational64, Rational64)>,
    points: Option<Vec<LatticePoint>>,
}

impl FamilyInstance {
    pub fn spec(&self) -> FamilySpec {
        self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    /// Plane coordinates, metadata only. Lattice families use the affine
    /// honeycomb coordinates of [`LatticePoint::embed`]; the cone uses
    /// concentric rings of radius `layer + 1`, rounded to `10⁻⁶`.
    pub fn embedding(&self) -> &[(Rational64, Rational64)] {
        &self.embedding
    }

    /// Honeycomb coordinates of each vertex (lattice families only).
    pub fn lattice_points(&self) -> Option<&[LatticePoint]> {
        self.points.as_deref()
    }

    /// Index of the vertex at `point`, for lattice families.
    pub fn vertex_at(&self, point: LatticePoint) -> Option<usize> {
        self.points.as_ref()?.iter().position(|&p| p == point)
    }
}

pub fn build_a(n: i64) -> Result<FamilyInstance> {
    Ok(FamilySpec::new(Family::A, &[n])?.build())
}

pub fn build_z(n: i64, k: i64) -> Result<FamilyInstance> {
    Ok(FamilySpec::new(Family::Z, &[n, k])?.build())
}

pub fn build_m(n: i64, k: i64) -> Result<FamilyInstance> {
    Ok(FamilySpec::new(Family::M, &[n, k])?.build())
}

pub fn build_zl(n: i64, k: i64, l: i64) -> Result<FamilyInstance> {
    Ok(FamilySpec::new(Family::ZL, &[n, k, l])?.build())
}

pub fn build_cone(n: i64) -> Result<FamilyInstance> {
    Ok(FamilySpec::new(Family::Cone, &[n])?.build())
}

/// Lattice sites of a family member: `(line, index)` pairs, the pendant
/// subset, and whether an apex is present.
struct Sites {
    body: Vec<(u32, u32)>,
    pendants: Vec<(u32, u32)>,
    apex: bool,
}

fn lattice_sites(spec: FamilySpec) -> Sites {
    let mut body = Vec::new();
    let mut pendants = Vec::new();
    let mut apex = false;
    match spec {
        FamilySpec::Z { n, k } => {
            let last = 2 * n + 1;
            for r in 0..=k {
                for i in 0..=last {
                    let pendant = (r == 0 && i == last) || (r == k && i == 0);
                    if pendant { &mut pendants } else { &mut body }.push((r, i));
                }
            }
        }
        FamilySpec::M { n, k } => trapezoid_sites(n, k, &mut body, &mut pendants),
        FamilySpec::A { n } => {
            trapezoid_sites(n, n, &mut body, &mut pendants);
            apex = true;
        }
        FamilySpec::ZL { n, k, l } => {
            let last = 2 * n + 1;
            for r in 0..=k {
                let first = if r >= l { 2 * (r - l) + 1 } else { 0 };
                for i in first..=last {
                    let pendant = r == 0 && i == last;
                    if pendant { &mut pendants } else { &mut body }.push((r, i));
                }
            }
        }
        FamilySpec::Cone { .. } => unreachable!("the cone is not a lattice family"),
    }
    Sites { body, pendants, apex }
}

fn trapezoid_sites(n: u32, k: u32, body: &mut Vec<(u32, u32)>, pendants: &mut Vec<(u32, u32)>) {
    for r in 0..=k {
        let last = 2 * (n - k + r) + 2;
        for i in 0..=last {
            let pendant = r == k && (i == 0 || i == last);
            if pendant { &mut *pendants } else { &mut *body }.push((r, i));
        }
    }
}

/// The apex of `A(n)`: below position 1 of line 0.
fn apex_point() -> LatticePoint {
    line_point(0, 1).offset(0, -1)
}

fn build_lattice(spec: FamilySpec) -> FamilyInstance {
    let sites = lattice_sites(spec);
    let mut labels: Vec<VertexLabel> = Vec::new();
    let mut points: Vec<LatticePoint> = Vec::new();
    for &(line, index) in sites.body.iter().chain(&sites.pendants) {
        labels.push(VertexLabel::Lattice { line, index });
        points.push(line_point(line, index));
    }
    if sites.apex {
        labels.push(VertexLabel::Apex);
        points.push(apex_point());
    }
    let graph = lattice_graph(&points);
    let embedding = points.iter().map(|p| p.embed()).collect();
    FamilyInstance { spec, graph, labels, embedding, points: Some(points) }
}

/// Induced honeycomb subgraph on a set of lattice vertices.
pub(crate) fn lattice_graph(points: &[LatticePoint]) -> Graph {
    let index: HashMap<LatticePoint, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    assert_eq!(index.len(), points.len(), "lattice sites must be distinct");
    let mut edges = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for q in p.neighbors() {
            if let Some(&j) = index.get(&q) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    Graph::new(points.len(), edges).expect("lattice adjacency is simple")
}

/// Canonical index of a cone label in `G_n`.
pub fn cone_index(label: ConeLabel) -> usize {
    let j = label.layer as usize;
    // Rings 0..j hold 5 j² vertices in total.
    5 * j * j + label.sector as usize * (2 * j + 1) + label.arc as usize
}

fn build_cone_unchecked(n: u32) -> FamilyInstance {
    let mut labels = Vec::new();
    let mut embedding = Vec::new();
    for layer in 0..=n {
        let arcs = 2 * layer + 1;
        let ring = 5 * arcs;
        for sector in 0..5 {
            for arc in 0..arcs {
                labels.push(VertexLabel::Cone(ConeLabel { layer, sector, arc }));
                let pos = f64::from(sector * arcs + arc) + 0.5;
                let theta = std::f64::consts::TAU * pos / f64::from(ring);
                let radius = f64::from(layer + 1);
                embedding.push((micro(radius * theta.cos()), micro(radius * theta.sin())));
            }
        }
    }
    let mut edges = Vec::new();
    for layer in 0..=n {
        let arcs = 2 * layer + 1;
        let ring = 5 * arcs as usize;
        let base = cone_index(ConeLabel { layer, sector: 0, arc: 0 });
        for i in 0..ring {
            edges.push((base + i, base + (i + 1) % ring));
        }
        if layer < n {
            for sector in 0..5 {
                for arc in (0..arcs).step_by(2) {
                    let inner = cone_index(ConeLabel { layer, sector, arc });
                    let outer = cone_index(ConeLabel { layer: layer + 1, sector, arc: arc + 1 });
                    edges.push((inner, outer));
                }
            }
        }
    }
    let graph = Graph::new(labels.len(), edges).expect("cone edges are simple");
    FamilyInstance { spec: FamilySpec::Cone { n }, graph, labels, embedding, points: None }
}

fn micro(x: f64) -> Rational64 {
    Rational64::new((x * 1e6).round() as i64, 1_000_000)
}

fn cone_order(cone: &FamilyInstance) -> Result<u32> {
    match cone.spec {
        FamilySpec::Cone { n } => Ok(n),
        other => Err(Error::WrongFamily { expected: "cone", found: other.to_string() }),
    }
}

/// The five sector classes `F_1..F_5` of a cone, each in canonical order.
pub fn sector_partition(cone: &FamilyInstance) -> Result<[Vec<usize>; 5]> {
    cone_order(cone)?;
    let mut sectors: [Vec<usize>; 5] = Default::default();
    for (v, label) in cone.labels.iter().enumerate() {
        match label {
            VertexLabel::Cone(c) => sectors[c.sector as usize].push(v),
            _ => return Err(Error::Invariant(format!("cone vertex {v} has a lattice label"))),
        }
    }
    Ok(sectors)
}

/// The permutation `(layer, sector, arc) ↦ (layer, sector + 1 mod 5, arc)`.
pub fn cone_rotation(cone: &FamilyInstance) -> Result<Vec<usize>> {
    cone_order(cone)?;
    Ok(cone
        .labels
        .iter()
        .map(|label| match *label {
            VertexLabel::Cone(c) => cone_index(ConeLabel { sector: (c.sector + 1) % 5, ..c }),
            _ => unreachable!("checked by cone_order"),
        })
        .collect())
}

/// An explicit isomorphism from the union of the first `sectors` sector
/// classes of a cone onto a standalone lattice family member.
#[derive(Debug, Clone)]
pub struct SectorWitness {
    /// Cone vertices in the union, in canonical cone order.
    pub cone_vertices: Vec<usize>,
    /// The standalone family member (`A(n−1)`, `Z(n,n)` or `M(2n,n)`).
    pub family: FamilyInstance,
    /// `mapping[i]` is the family vertex matched with `cone_vertices[i]`.
    pub mapping: Vec<usize>,
}

impl SectorWitness {
    /// Checks that `mapping` is a bijection and that it carries the induced
    /// edges of the union exactly onto the family's edges.
    pub fn verify(&self, cone: &FamilyInstance) -> bool {
        let target = self.family.graph();
        if self.mapping.len() != target.vertex_count() || self.cone_vertices.len() != self.mapping.len() {
            return false;
        }
        let mut hit = vec![false; self.mapping.len()];
        for &m in &self.mapping {
            if m >= hit.len() || std::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        let Ok(induced) = cone.graph.induced_subgraph(&self.cone_vertices) else {
            return false;
        };
        induced.edge_count() == target.edge_count()
            && induced.edges().iter().all(|&(u, v)| target.has_edge(self.mapping[u], self.mapping[v]))
    }
}

/// Builds the sector-union isomorphism witness for `sectors ∈ {1, 2, 3}`.
///
/// One sector of `G_n` is `A(n − 1)` (so `n ≥ 1`), two adjacent sectors
/// form `Z(n, n)` and three form `M(2n, n)`. The bijection goes through the
/// flat honeycomb: unroll the sectors with [`ConeLabel::flat_point`], then
/// move the picture onto the standalone construction by a fixed lattice
/// isometry.
pub fn sector_witness(cone: &FamilyInstance, sectors: u32) -> Result<SectorWitness> {
    let n = cone_order(cone)?;
    let ni = i64::from(n);
    let (spec, place): (FamilySpec, Box<dyn Fn(LatticePoint) -> LatticePoint>) = match sectors {
        1 if n >= 1 => (FamilySpec::A { n: n - 1 }, Box::new(|p: LatticePoint| p.rotate60().offset(0, -3))),
        1 => return Err(Error::domain("sector union", "a single sector of G_0 is one vertex, not an A graph")),
        2 => (FamilySpec::Z { n, k: n }, Box::new(|p: LatticePoint| p.offset(-1, -1))),
        3 => (FamilySpec::M { n: 2 * n, k: n }, Box::new(move |p: LatticePoint| p.negate().offset(ni, ni))),
        _ => return Err(Error::domain("sector union", format!("{sectors} sectors; expected 1, 2 or 3"))),
    };
    let family = spec.build();
    let lookup: HashMap<LatticePoint, usize> = family
        .lattice_points()
        .expect("lattice family")
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    let mut cone_vertices = Vec::new();
    let mut mapping = Vec::new();
    for (v, label) in cone.labels.iter().enumerate() {
        let VertexLabel::Cone(c) = *label else { unreachable!("checked by cone_order") };
        if c.sector < sectors {
            let target = place(c.flat_point());
            let image = lookup.get(&target).copied().ok_or_else(|| {
                Error::Invariant(format!("cone vertex {c:?} maps to {target:?}, which is not in {spec}"))
            })?;
            cone_vertices.push(v);
            mapping.push(image);
        }
    }
    Ok(SectorWitness { cone_vertices, family, mapping })
}
