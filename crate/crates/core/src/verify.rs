//! Cross-checks between the distance oracle, the cut method, the closed
//! forms and the sector decomposition of the cone.
//!
//! A suite never fails with an error: a construction or evaluation error
//! becomes a failed [`CheckResult`] carrying the message.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::closed_forms::{cone_wlambda_via_sectors, formula, FormulaDomain};
use crate::compute::{index_via_bfs, Index};
use crate::cuts::{hyper_wiener_from_partition, theta_classes_by_splits, theta_star_classes, wlambda_from_partition};
use crate::distance::{d_lambda, distance_distribution, hyper_wiener, w_lambda, wiener};
use crate::error::{Error, Result};
use crate::families::{build_a, build_cone, build_m, build_z, build_zl, cone_rotation, sector_partition, sector_witness, FamilySpec};
use crate::fit::{fit_multivariate, FittedPolynomial};
use crate::graph::Graph;
use crate::poly::{Polynomial, Rational};

fn decimal<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One exact comparison. `status` is pass iff both sides were computed
/// and are equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub params: Vec<i64>,
    #[serde(serialize_with = "decimal")]
    pub expected: Option<BigInt>,
    pub expected_by: String,
    #[serde(serialize_with = "decimal")]
    pub actual: Option<BigInt>,
    pub actual_by: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    fn new(id: impl Into<String>, params: &[i64], expected: (Result<BigInt>, &str), actual: (Result<BigInt>, &str)) -> Self {
        let mut note = None;
        let mut take = |r: Result<BigInt>| match r {
            Ok(v) => Some(v),
            Err(e) => {
                note.get_or_insert_with(|| e.to_string());
                None
            }
        };
        let (exp, act) = (take(expected.0), take(actual.0));
        let status = match (&exp, &act) {
            (Some(a), Some(b)) if a == b => Status::Pass,
            _ => Status::Fail,
        };
        CheckResult {
            id: id.into(),
            params: params.to_vec(),
            expected: exp,
            expected_by: expected.1.to_owned(),
            actual: act,
            actual_by: actual.1.to_owned(),
            status,
            note,
        }
    }

    fn with_note(mut self, note: Option<&str>) -> Self {
        if self.status == Status::Fail && self.note.is_none() {
            self.note = note.map(str::to_owned);
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Option<BigInt>| v.as_ref().map_or_else(|| "error".to_owned(), BigInt::to_string);
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {} {:?}: {} ({}) vs {} ({})",
            self.id,
            self.params,
            show(&self.expected),
            self.expected_by,
            show(&self.actual),
            self.actual_by
        )?;
        if let Some(note) = &self.note {
            write!(f, " [{note}]")?;
        }
        Ok(())
    }
}

/// Coefficient-level comparison of an interpolated polynomial with a
/// stored table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FitComparison {
    pub formula: String,
    pub degree: u32,
    pub samples: usize,
    pub held_out: usize,
    pub fitted: String,
    pub table: String,
    /// `fitted − table`; `"0"` when they agree.
    pub difference: String,
    pub coefficients: Vec<CoefficientRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientRow {
    pub monomial: String,
    pub fitted: String,
    pub table: String,
}

impl FitComparison {
    pub fn new(formula_id: &str, fit: &FittedPolynomial, table: &Polynomial) -> Self {
        let mut keys: Vec<&Vec<u32>> = fit.polynomial.terms().keys().chain(table.terms().keys()).collect();
        keys.sort_by(|a, b| a.iter().sum::<u32>().cmp(&b.iter().sum()).then_with(|| b.cmp(a)));
        keys.dedup();
        let coefficients = keys
            .into_iter()
            .map(|e| {
                let m = Polynomial::monomial_name(table.variables(), e);
                CoefficientRow {
                    monomial: if m.is_empty() { "1".into() } else { m },
                    fitted: fit.polynomial.coefficient(e).to_string(),
                    table: table.coefficient(e).to_string(),
                }
            })
            .collect();
        FitComparison {
            formula: formula_id.to_owned(),
            degree: fit.degree,
            samples: fit.sample_count(),
            held_out: fit.held_out.len(),
            fitted: fit.polynomial.to_string(),
            table: table.to_string(),
            difference: (&fit.polynomial - table).to_string(),
            coefficients,
        }
    }

    pub fn agrees(&self) -> bool {
        self.difference == "0"
    }
}

/// Instance size bounds for the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Bound on `n` (and so on `k`, `l`) for the lattice families.
    pub max_n: u32,
    /// Bound on `n` for `A_n`.
    pub max_a: u32,
    /// Bound on the cone order for the cone and sector suites.
    pub max_cone: u32,
    /// Bound on the cone order for the edge-count check.
    pub max_edge_count_cone: u32,
    /// Bound on the cone order for isometry and `D^λ` checks.
    pub max_sector_cone: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 6, max_a: 8, max_cone: 8, max_edge_count_cone: 20, max_sector_cone: 4 }
    }
}

impl Limits {
    /// Every family and cone bound set to `n`; the edge-count sweep keeps
    /// its default and the sector checks stay at most 4.
    pub fn uniform(n: u32) -> Self {
        Limits { max_n: n, max_a: n, max_cone: n, max_edge_count_cone: 20, max_sector_cone: n.min(4) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Cone indices against the closed forms and the sector sum.
    Cone,
    /// `W_λ(G_n) = 5·(W_λ(M_{2n,n}) − W_λ(Z_{n,n}))`, standalone and extracted.
    Sectors,
    /// Every lattice table against the distance oracle.
    Formulas,
    /// Cut method against the distance oracle.
    Cuts,
    /// Counts, symmetries, isometries and isomorphisms.
    Structure,
    /// `D^λ` sums over the sector classes.
    Dlambda,
    /// Interpolation from oracle data against the tables.
    Fit,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] =
        [Suite::Cone, Suite::Sectors, Suite::Formulas, Suite::Cuts, Suite::Structure, Suite::Dlambda, Suite::Fit];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cone => "cone",
            Suite::Sectors => "sectors",
            Suite::Formulas => "formulas",
            Suite::Cuts => "cuts",
            Suite::Structure => "structure",
            Suite::Dlambda => "dlambda",
            Suite::Fit => "fit",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    /// Accepts `theorem3` as an alias of `sectors`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        if lower == "theorem3" {
            return Ok(Suite::Sectors);
        }
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == lower)
            .ok_or_else(|| Error::domain("suite", format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub limits: Limits,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub fits: Vec<FitComparison>,
}

impl VerificationReport {
    fn assemble(suite: Suite, limits: Limits, mut checks: Vec<CheckResult>, fits: Vec<FitComparison>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| a.params.cmp(&b.params)));
        let passed = checks.iter().filter(|c| c.passed()).count();
        VerificationReport { suite, limits, passed, failed: checks.len() - passed, checks, fits }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        for fit in &self.fits {
            let verdict = if fit.agrees() { "matches table" } else { "differs from table" };
            writeln!(f, "fit {} (degree {}, {} samples, {} held out): {verdict}", fit.formula, fit.degree, fit.samples, fit.held_out)?;
            writeln!(f, "  fitted: {}", fit.fitted)?;
            if !fit.agrees() {
                writeln!(f, "  table:  {}", fit.table)?;
                writeln!(f, "  fitted - table: {}", fit.difference)?;
            }
        }
        write!(f, "suite {}: {} passed, {} failed", self.suite, self.passed, self.failed)
    }
}

/// Runs `suite` within `limits`.
pub fn run_suite(suite: Suite, limits: Limits) -> VerificationReport {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut checks = Vec::new();
    let mut fits = Vec::new();
    for s in suites {
        match s {
            Suite::Cone => checks.extend(cone_suite(limits)),
            Suite::Sectors => checks.extend(sectors_suite(limits)),
            Suite::Formulas => checks.extend(formulas_suite(limits)),
            Suite::Cuts => checks.extend(cuts_suite(limits)),
            Suite::Structure => checks.extend(structure_suite(limits)),
            Suite::Dlambda => checks.extend(dlambda_suite(limits)),
            Suite::Fit => {
                let (c, f) = fit_suite();
                checks.extend(c);
                fits.extend(f);
            }
            Suite::All => unreachable!("expanded above"),
        }
    }
    VerificationReport::assemble(suite, limits, checks, fits)
}

fn attempt<T>(f: impl FnOnce() -> Result<T>) -> Result<T> {
    f()
}

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

fn cone_suite(limits: Limits) -> Vec<CheckResult> {
    (0..=i64::from(limits.max_cone))
        .into_par_iter()
        .flat_map_iter(|n| {
            let p = [n];
            let mut out = Vec::new();
            let cone = match build_cone(n) {
                Ok(c) => c,
                Err(e) => return vec![CheckResult::new("cone/build", &p, (Err(e.clone()), "construction"), (Err(e), "construction"))],
            };
            let g = cone.graph();
            let dist = distance_distribution(g);
            let moment = |l: u32| dist.as_ref().map(|d| d.moment(l)).map_err(Clone::clone);
            let hyper = dist.as_ref().map_err(Clone::clone).and_then(|_| hyper_wiener(g));
            out.push(CheckResult::new("cone/hyper/bfs-vs-closed", &p, (hyper.clone(), "bfs"), (formula("WW_cone").and_then(|f| f.eval(&p)), "WW_cone")));
            let w_closed = attempt(|| Ok(5 * (formula("W_M")?.eval(&[2 * n, n])? - formula("W_Z")?.eval(&[n, n])?)));
            out.push(CheckResult::new("cone/wiener/bfs-vs-closed", &p, (moment(1), "bfs"), (w_closed, "5(W_M(2n,n) - W_Z(n,n))")));
            let chain = attempt(|| Ok(5 * (formula("WW_M2nn")?.eval(&p)? - formula("WW_Znn")?.eval(&p)?)));
            out.push(CheckResult::new("cone/hyper/closed-chain", &p, (formula("WW_cone").and_then(|f| f.eval(&p)), "WW_cone"), (chain, "5(WW_M2nn - WW_Znn)")));
            let sector_hyper = attempt(|| {
                let s = cone_wlambda_via_sectors(n, 2)? + cone_wlambda_via_sectors(n, 1)?;
                Ok(s / 2u32)
            });
            out.push(CheckResult::new("cone/hyper/bfs-vs-sectors", &p, (hyper, "bfs"), (sector_hyper, "sectors")));
            for l in 0..=3u32 {
                out.push(CheckResult::new(
                    format!("cone/wlambda{l}/bfs-vs-sectors"),
                    &p,
                    (moment(l), "bfs"),
                    (cone_wlambda_via_sectors(n, l), "sectors"),
                ));
            }
            out
        })
        .collect()
}

fn sectors_suite(limits: Limits) -> Vec<CheckResult> {
    (0..=i64::from(limits.max_cone))
        .into_par_iter()
        .flat_map_iter(|n| {
            let p = [n];
            let parts = attempt(|| {
                let cone = build_cone(n)?;
                let sectors = sector_partition(&cone)?;
                let union = |count: usize| -> Result<Graph> {
                    let mut vs: Vec<usize> = sectors[..count].concat();
                    vs.sort_unstable();
                    cone.graph().induced_subgraph(&vs)
                };
                Ok((cone.graph().clone(), union(2)?, union(3)?, build_z(n, n)?, build_m(2 * n, n)?))
            });
            let (g, z_ext, m_ext, z, m) = match parts {
                Ok(parts) => parts,
                Err(e) => return vec![CheckResult::new("sectors/build", &p, (Err(e.clone()), "construction"), (Err(e), "construction"))],
            };
            (0..=3u32)
                .flat_map(|l| {
                    let pl = [n, i64::from(l)];
                    let direct = w_lambda(&g, l);
                    let standalone = attempt(|| Ok(5 * (w_lambda(m.graph(), l)? - w_lambda(z.graph(), l)?)));
                    let extracted = attempt(|| Ok(5 * (w_lambda(&m_ext, l)? - w_lambda(&z_ext, l)?)));
                    [
                        CheckResult::new("sectors/wlambda/standalone", &pl, (direct.clone(), "bfs on G_n"), (standalone.clone(), "5(M_{2n,n} - Z_{n,n}) built")),
                        CheckResult::new("sectors/wlambda/extracted", &pl, (direct, "bfs on G_n"), (extracted.clone(), "5(M_{2n,n} - Z_{n,n}) extracted")),
                        CheckResult::new("sectors/wlambda/standalone-vs-extracted", &pl, (standalone, "built"), (extracted, "extracted")),
                    ]
                })
                .collect()
        })
        .collect()
}

fn family_grid(limits: Limits) -> Vec<FamilySpec> {
    let mut specs: Vec<FamilySpec> = (0..=limits.max_a).map(|n| FamilySpec::A { n }).collect();
    for n in 0..=limits.max_n {
        for k in 0..=n {
            specs.push(FamilySpec::Z { n, k });
            specs.push(FamilySpec::M { n, k });
            for l in 0..=k {
                specs.push(FamilySpec::ZL { n, k, l });
            }
        }
    }
    specs
}

/// Ids of the tables that describe `spec` directly, with their arguments.
fn tables_for(spec: FamilySpec) -> Vec<(&'static str, Index)> {
    match spec {
        FamilySpec::A { .. } => vec![("W_A", Index::Wiener), ("count_a", Index::WLambda(0))],
        FamilySpec::Z { .. } => vec![("W_Z", Index::Wiener), ("WW_Z", Index::Hyper), ("count_z", Index::WLambda(0))],
        FamilySpec::M { .. } => vec![("W_M", Index::Wiener), ("WW_M", Index::Hyper), ("count_m", Index::WLambda(0))],
        FamilySpec::ZL { .. } => vec![("W_ZL", Index::Wiener), ("count_zl", Index::WLambda(0))],
        FamilySpec::Cone { .. } => vec![("WW_cone", Index::Hyper), ("count_cone", Index::WLambda(0))],
    }
}

fn formulas_suite(limits: Limits) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = family_grid(limits)
        .into_par_iter()
        .flat_map_iter(|spec| {
            let inst = spec.build();
            let p = spec.params();
            tables_for(spec)
                .into_iter()
                .map(|(id, index)| {
                    let f = formula(id).expect("known id");
                    let (oracle, by) = match index {
                        Index::WLambda(0) => (Ok(big(inst.graph().vertex_count())), "vertex count"),
                        _ => (index_via_bfs(inst.graph(), index), "bfs"),
                    };
                    let note = if f.trusted_at(&p) { None } else { f.note };
                    CheckResult::new(format!("formulas/{id}"), &p, (oracle, by), (f.eval(&p), id)).with_note(note)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.par_extend((0..=i64::from(limits.max_n)).into_par_iter().flat_map_iter(|n| {
        let p = [n];
        let znn = build_z(n, n).and_then(|z| hyper_wiener(z.graph()));
        let m2nn = build_m(2 * n, n).and_then(|m| hyper_wiener(m.graph()));
        [
            CheckResult::new("formulas/WW_Znn", &p, (znn, "bfs"), (formula("WW_Znn").and_then(|f| f.eval(&p)), "WW_Znn")),
            CheckResult::new("formulas/WW_M2nn", &p, (m2nn, "bfs"), (formula("WW_M2nn").and_then(|f| f.eval(&p)), "WW_M2nn")),
        ]
    }));
    out
}

/// Small graphs checked by the cut suite at every size bound.
fn fixed_cut_graphs() -> Vec<(&'static str, Graph)> {
    vec![("P2", Graph::path(2)), ("P3", Graph::path(3)), ("C6", Graph::cycle(6))]
}

fn cut_checks(name: &str, params: &[i64], g: &Graph) -> Vec<CheckResult> {
    let id = |what: &str| format!("cuts/{what}/{name}");
    let partition = match theta_star_classes(g) {
        Ok(p) => p,
        Err(e) => return vec![CheckResult::new(id("classes"), params, (Ok(big(g.edge_count())), "edge count"), (Err(e), "Θ* classes"))],
    };
    let covered = if partition.partitions_edges_of(g) { g.edge_count() } else { 0 };
    let two_sides = partition.classes().iter().filter(|c| !c.side_a.is_empty() && !c.side_b.is_empty()).count();
    let w = wiener(g);
    let mut out = vec![
        CheckResult::new(id("classes"), params, (Ok(big(g.edge_count())), "edge count"), (Ok(big(covered)), "edges partitioned")),
        CheckResult::new(id("two-convex-sides"), params, (Ok(big(partition.len())), "class count"), (Ok(big(two_sides)), "classes with two convex sides")),
        CheckResult::new(id("wiener"), params, (w.clone(), "bfs"), (Ok(partition.wiener()), "cuts")),
        CheckResult::new(id("wlambda2"), params, (w_lambda(g, 2), "bfs"), (wlambda_from_partition(g, &partition, 2), "cuts recursion")),
        CheckResult::new(id("hyper"), params, (hyper_wiener(g), "bfs"), (hyper_wiener_from_partition(g, &partition), "cuts")),
    ];
    out.push(CheckResult::new(id("split-route"), params, (w, "bfs"), (theta_classes_by_splits(g).map(|p| p.wiener()), "cuts by splits")));
    out
}

fn cuts_suite(limits: Limits) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = fixed_cut_graphs().iter().flat_map(|(name, g)| cut_checks(name, &[], g)).collect();
    out.par_extend(family_grid(limits).into_par_iter().flat_map_iter(|spec| {
        let inst = spec.build();
        cut_checks(spec.family().name(), &spec.params(), inst.graph())
    }));
    out
}

fn bool_check(id: impl Into<String>, params: &[i64], ok: Result<bool>, what: &str) -> CheckResult {
    CheckResult::new(id, params, (Ok(BigInt::from(1)), "true"), (ok.map(|b| BigInt::from(u8::from(b))), what))
}

fn structure_suite(limits: Limits) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = (0..=i64::from(limits.max_edge_count_cone))
        .into_par_iter()
        .flat_map_iter(|n| {
            let p = [n];
            let cone = build_cone(n);
            let edges = cone.as_ref().map(|c| big(c.graph().edge_count())).map_err(Clone::clone);
            let count = cone.as_ref().map(|c| big(c.graph().vertex_count())).map_err(Clone::clone);
            let rotation = cone.as_ref().map_err(Clone::clone).and_then(|c| Ok(c.graph().is_automorphism(&cone_rotation(c)?)));
            [
                CheckResult::new("structure/cone-edges", &p, (formula("edges_cone").and_then(|f| f.eval(&p)), "5(n+1)(3n+2)/2"), (edges, "built")),
                CheckResult::new("structure/cone-vertices", &p, (formula("count_cone").and_then(|f| f.eval(&p)), "5(n+1)^2"), (count, "built")),
                bool_check("structure/cone-rotation", &p, rotation, "rotation is an automorphism"),
            ]
        })
        .collect();
    out.par_extend((0..=i64::from(limits.max_sector_cone)).into_par_iter().flat_map_iter(|n| {
        let p = [n];
        let mut checks = Vec::new();
        let cone = match build_cone(n) {
            Ok(c) => c,
            Err(e) => return vec![bool_check("structure/sector-build", &p, Err(e), "construction")],
        };
        let dm = crate::distance::all_pairs(cone.graph());
        let sectors = sector_partition(&cone);
        for count in 1..=3usize {
            let iso = attempt(|| {
                let sectors = sectors.as_ref().map_err(Clone::clone)?;
                let dm = dm.as_ref().map_err(Clone::clone)?;
                let mut vs: Vec<usize> = sectors[..count].concat();
                vs.sort_unstable();
                crate::cuts::is_isometric_with(cone.graph(), dm, &vs)
            });
            checks.push(bool_check(format!("structure/sector-isometric/{count}"), &p, iso, "induced subgraph is isometric"));
        }
        for count in 1..=3u32 {
            if count == 1 && n == 0 {
                continue;
            }
            let ok = sector_witness(&cone, count).map(|w| w.verify(&cone));
            checks.push(bool_check(format!("structure/sector-isomorphism/{count}"), &p, ok, "witness maps edges onto edges"));
        }
        checks
    }));
    out.par_extend((0..=i64::from(limits.max_n)).into_par_iter().flat_map_iter(|n| {
        (0..n).flat_map(move |k| {
            let p = [n, k];
            let zl = build_z(n, k);
            let zr = build_z(k, n);
            let idx = |z: &Result<crate::families::FamilyInstance>, index| {
                z.as_ref().map_err(Clone::clone).and_then(|z| index_via_bfs(z.graph(), index))
            };
            [
                CheckResult::new("structure/z-transpose/wiener", &p, (idx(&zl, Index::Wiener), "Z(n,k)"), (idx(&zr, Index::Wiener), "Z(k,n)")),
                CheckResult::new("structure/z-transpose/hyper", &p, (idx(&zl, Index::Hyper), "Z(n,k)"), (idx(&zr, Index::Hyper), "Z(k,n)")),
            ]
        })
    }));
    out
}

fn dlambda_suite(limits: Limits) -> Vec<CheckResult> {
    (0..=i64::from(limits.max_sector_cone))
        .into_par_iter()
        .flat_map_iter(|n| {
            let built = attempt(|| Ok((build_cone(n)?, build_z(n, n)?, build_m(2 * n, n)?)));
            let (cone, z, m) = match built {
                Ok(b) => b,
                Err(e) => return vec![CheckResult::new("dlambda/build", &[n], (Err(e.clone()), "construction"), (Err(e), "construction"))],
            };
            let g = cone.graph();
            let all: Vec<usize> = (0..g.vertex_count()).collect();
            let sectors = sector_partition(&cone).expect("cone");
            let mut out = Vec::new();
            for l in 1..=2u32 {
                let p = [n, i64::from(l)];
                let per_sector: Vec<Result<BigInt>> = sectors.iter().map(|f| d_lambda(g, f, &all, l)).collect();
                let diff = attempt(|| Ok(2 * (w_lambda(m.graph(), l)? - w_lambda(z.graph(), l)?)));
                out.push(CheckResult::new("dlambda/first-sector", &p, (diff, "2(W_λ(M_{2n,n}) - W_λ(Z_{n,n}))"), (per_sector[0].clone(), "D^λ(F_1, V)")));
                let nested = attempt(|| {
                    let three: Vec<usize> = sectors[..3].concat();
                    let two: Vec<usize> = sectors[..2].concat();
                    Ok(d_lambda(g, &three, &three, l)? - d_lambda(g, &two, &two, l)?)
                });
                out.push(CheckResult::new("dlambda/nested-unions", &p, (per_sector[0].clone(), "D^λ(F_1, V)"), (nested, "D^λ(F_123, F_123) - D^λ(F_12, F_12)")));
                for (s, d) in per_sector.iter().enumerate().skip(1) {
                    out.push(CheckResult::new(
                        format!("dlambda/sector-{}", s + 1),
                        &p,
                        (per_sector[0].clone(), "D^λ(F_1, V)"),
                        (d.clone(), "D^λ(F_s, V)"),
                    ));
                }
                let total: Result<BigInt> = per_sector.iter().cloned().sum();
                out.push(CheckResult::new("dlambda/sum", &p, (w_lambda(g, l).map(|w| 2 * w), "2 W_λ(G_n)"), (total, "Σ_s D^λ(F_s, V)")));
            }
            out
        })
        .collect()
}

/// Direct value of the quantity a formula describes, from the constructed
/// graph rather than the table.
pub fn oracle_value(id: &str, params: &[i64]) -> Result<BigInt> {
    let f = formula(id)?;
    if !f.domain.contains(params) {
        return Err(Error::domain(f.id, format!("{params:?} is outside {}", f.domain.describe())));
    }
    let p = params;
    let g = match f.id {
        "W_A" | "count_a" => build_a(p[0])?,
        "W_Z" | "WW_Z" | "count_z" => build_z(p[0], p[1])?,
        "W_M" | "WW_M" | "count_m" => build_m(p[0], p[1])?,
        "W_ZL" | "count_zl" => build_zl(p[0], p[1], p[2])?,
        "WW_Znn" => build_z(p[0], p[0])?,
        "WW_M2nn" => build_m(2 * p[0], p[0])?,
        "WW_cone" | "count_cone" | "edges_cone" => build_cone(p[0])?,
        other => return Err(Error::UnknownFormula(other.to_owned())),
    };
    let g = g.graph();
    match f.id {
        id if id.starts_with("count_") => Ok(big(g.vertex_count())),
        "edges_cone" => Ok(big(g.edge_count())),
        id if id.starts_with("WW_") => hyper_wiener(g),
        _ => wiener(g),
    }
}

/// All domain points of `domain` with every coordinate in `lo..=hi`.
pub fn domain_grid(domain: FormulaDomain, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        match domain {
            FormulaDomain::Natural => out.push(vec![n]),
            FormulaDomain::KAtMostN => out.extend((lo..=n).map(|k| vec![n, k])),
            FormulaDomain::LAtMostKAtMostN => {
                out.extend((lo..=n).flat_map(|k| (lo..=k).map(move |l| vec![n, k, l])));
            }
        }
    }
    out
}

/// A second grid, disjoint from `domain_grid(domain, 0, size)`, with the
/// same number of points and the same unisolvence: `n` is shifted up by
/// `size + 1` and the lower coordinates are left in place.
pub fn shifted_grid(domain: FormulaDomain, size: i64) -> Vec<Vec<i64>> {
    domain_grid(domain, 0, size)
        .into_iter()
        .map(|mut p| {
            p[0] += size + 1;
            p
        })
        .collect()
}

/// Interpolates the oracle values of `id` on `points` with the table's
/// degree.
pub fn fit_target(id: &str, points: &[Vec<i64>]) -> Result<FittedPolynomial> {
    let f = formula(id)?;
    let samples: Vec<(Vec<i64>, BigInt)> =
        points.par_iter().map(|p| Ok((p.clone(), oracle_value(f.id, p)?))).collect::<Result<_>>()?;
    fit_multivariate(&samples, f.variables, f.degree())
}

/// Tables re-derived by the fit suite.
pub const FITTED_TABLES: [&str; 9] = ["W_A", "W_Z", "W_M", "W_ZL", "WW_Z", "WW_M", "WW_Znn", "WW_M2nn", "WW_cone"];

fn fit_suite() -> (Vec<CheckResult>, Vec<FitComparison>) {
    let results: Vec<(&str, Result<FittedPolynomial>, Result<FittedPolynomial>)> = FITTED_TABLES
        .par_iter()
        .map(|&id| {
            let f = formula(id).expect("known id");
            let size = i64::from(f.degree()) + 1;
            let first = fit_target(id, &domain_grid(f.domain, 0, size));
            let second = fit_target(id, &shifted_grid(f.domain, size));
            (id, first, second)
        })
        .collect();
    let mut checks = Vec::new();
    let mut fits = Vec::new();
    let count_diff = |a: &Polynomial, b: &Polynomial| big((a - b).term_count());
    let mut fitted = std::collections::HashMap::new();
    for (id, first, second) in results {
        let table = formula(id).expect("known id").polynomial();
        match (&first, &second) {
            (Ok(a), Ok(b)) => {
                let cmp = FitComparison::new(id, a, &table);
                checks.push(
                    CheckResult::new(format!("fit/{id}/table"), &[], (Ok(big(0)), "coefficients differing"), (Ok(count_diff(&a.polynomial, &table)), "fitted vs table"))
                        .with_note((!cmp.agrees()).then_some(cmp.difference.as_str()).map(|d| format!("fitted - table = {d}")).as_deref()),
                );
                checks.push(CheckResult::new(format!("fit/{id}/two-grids"), &[], (Ok(big(0)), "coefficients differing"), (Ok(count_diff(&a.polynomial, &b.polynomial)), "grid 1 vs grid 2")));
                fits.push(cmp);
                fitted.insert(id, a.polynomial.clone());
            }
            _ => {
                let err = first.as_ref().err().or(second.as_ref().err()).cloned().expect("one side failed");
                checks.push(CheckResult::new(format!("fit/{id}/table"), &[], (Ok(big(0)), "coefficients differing"), (Err(err), "fit")));
            }
        }
    }
    let chain = |name: &str, lhs: Option<Polynomial>, rhs: Option<&Polynomial>| {
        let actual = match (lhs, rhs) {
            (Some(l), Some(r)) => Ok(count_diff(&l, r)),
            _ => Err(Error::Invariant("a fit in the chain failed".into())),
        };
        CheckResult::new(format!("fit/chain/{name}"), &[], (Ok(big(0)), "coefficients differing"), (actual, "fitted polynomials"))
    };
    let five = Rational::from_integer(5.into());
    checks.push(chain("z-diagonal", fitted.get("WW_Z").map(|p| p.along_ray(&[1, 1], "n")), fitted.get("WW_Znn")));
    checks.push(chain("m-diagonal", fitted.get("WW_M").map(|p| p.along_ray(&[2, 1], "n")), fitted.get("WW_M2nn")));
    checks.push(chain(
        "cone",
        fitted.get("WW_M2nn").zip(fitted.get("WW_Znn")).map(|(m, z)| (m - z).scale(&five)),
        fitted.get("WW_cone"),
    ));
    (checks, fits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("theorem3".parse::<Suite>().unwrap(), Suite::Sectors);
    }

    #[test]
    fn small_cone_suite_passes() {
        let r = run_suite(Suite::Cone, Limits::uniform(2));
        assert!(r.all_passed(), "{r}");
        let c = r.checks.iter().find(|c| c.id == "cone/hyper/bfs-vs-closed" && c.params == [1]).unwrap();
        assert_eq!(c.expected, Some(BigInt::from(1505)));
    }

    #[test]
    fn sector_identity_values() {
        let r = run_suite(Suite::Sectors, Limits::uniform(1));
        assert!(r.all_passed(), "{r}");
        let vals: Vec<_> = r
            .checks
            .iter()
            .filter(|c| c.id == "sectors/wlambda/standalone" && c.params[0] == 1 && c.params[1] <= 2)
            .map(|c| c.actual.clone().unwrap())
            .collect();
        assert_eq!(vals, [190, 615, 2395].map(BigInt::from));
    }

    #[test]
    fn failing_construction_is_data() {
        let c = CheckResult::new("x", &[], (Err(Error::EmptyGraph), "a"), (Ok(BigInt::from(1)), "b"));
        assert!(!c.passed());
        assert_eq!(c.note.as_deref(), Some("graph has no vertices"));
    }

    #[test]
    fn grids() {
        assert_eq!(domain_grid(FormulaDomain::KAtMostN, 0, 1), vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
        assert_eq!(shifted_grid(FormulaDomain::KAtMostN, 1), vec![vec![2, 0], vec![3, 0], vec![3, 1]]);
        assert_eq!(domain_grid(FormulaDomain::LAtMostKAtMostN, 0, 6).len(), 84);
    }
}
