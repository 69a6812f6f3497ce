use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use nanocone::closed_forms::closed_form;
use nanocone::compute::{index_via_bfs, Index};
use nanocone::cuts::{theta_classes_by_splits, theta_star_classes, wiener_via_cuts};
use nanocone::distance::{all_pairs, d_lambda, w_lambda};
use nanocone::families::{Family, FamilySpec};
use nanocone::fit::fit_multivariate;
use nanocone::graph::Graph;
use nanocone::poly::Polynomial;

/// Floyd–Warshall on the adjacency matrix, as an independent oracle.
fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// A random connected graph: a random tree plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
            let extra = prop::collection::vec((0..n, 0..n), 0..n);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: BTreeSet<(usize, usize)> = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
            edges.extend(extra.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b))));
            Graph::new(n, edges).unwrap()
        })
}

fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), (1..n).map(|v| 0..v).collect::<Vec<_>>()))
        .prop_map(|(n, parents)| Graph::new(n, parents.into_iter().enumerate().map(|(i, p)| (p, i + 1))).unwrap())
}

fn lattice_spec() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (0i64..5).prop_map(|n| FamilySpec::new(Family::A, &[n]).unwrap()),
        (0i64..5, 0i64..5).prop_map(|(n, k)| FamilySpec::new(Family::Z, &[n, k]).unwrap()),
        (0i64..6, 0i64..6).prop_map(|(a, b)| FamilySpec::new(Family::M, &[a.max(b), a.min(b)]).unwrap()),
        (0i64..5, 0i64..5, 0i64..5).prop_map(|(a, b, c)| {
            let mut p = [a, b, c];
            p.sort_unstable_by(|x, y| y.cmp(x));
            FamilySpec::new(Family::ZL, &p).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bfs_matches_floyd_warshall(g in connected_graph(14)) {
        let dm = all_pairs(&g).unwrap();
        let fw = floyd_warshall(&g);
        for (u, row) in fw.iter().enumerate() {
            for (v, &d) in row.iter().enumerate() {
                prop_assert_eq!(u64::from(dm.get(u, v)), d);
            }
        }
        let w: u64 = (0..g.vertex_count()).flat_map(|u| (u + 1..g.vertex_count()).map(move |v| (u, v))).map(|(u, v)| fw[u][v]).sum();
        prop_assert_eq!(w_lambda(&g, 1).unwrap(), BigInt::from(w));
    }

    #[test]
    fn vertex_partition_sums_to_twice_w_lambda(g in connected_graph(12), labels in prop::collection::vec(0usize..3, 12), lambda in 0u32..4) {
        let parts: Vec<Vec<usize>> = (0..3)
            .map(|p| (0..g.vertex_count()).filter(|&v| labels[v] == p).collect())
            .collect();
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        let total: BigInt = parts.iter().map(|f| d_lambda(&g, f, &all, lambda).unwrap()).sum();
        prop_assert_eq!(total, 2 * w_lambda(&g, lambda).unwrap());
    }

    #[test]
    fn trees_have_singleton_cut_classes(g in tree(16)) {
        let p = theta_star_classes(&g).unwrap();
        prop_assert_eq!(p.len(), g.edge_count());
        prop_assert!(p.classes().iter().all(|c| c.edges.len() == 1));
        prop_assert_eq!(wiener_via_cuts(&g).unwrap(), w_lambda(&g, 1).unwrap());
    }

    #[test]
    fn cut_routes_agree_on_lattice_members(spec in lattice_spec()) {
        let inst = spec.build();
        let g = inst.graph();
        let exact = theta_star_classes(g).unwrap();
        let splits = theta_classes_by_splits(g).unwrap();
        let key = |p: &nanocone::cuts::CutPartition| {
            let mut v: Vec<Vec<usize>> = p.classes().iter().map(|c| c.edges.clone()).collect();
            v.sort();
            v
        };
        prop_assert_eq!(key(&exact), key(&splits));
        prop_assert!(exact.partitions_edges_of(g));
        prop_assert_eq!(exact.wiener(), w_lambda(g, 1).unwrap());
    }

    #[test]
    fn closed_wiener_matches_bfs(spec in prop_oneof![lattice_spec(), (0i64..6).prop_map(|n| FamilySpec::new(Family::Cone, &[n]).unwrap())]) {
        let closed = closed_form(spec, Index::Wiener).unwrap();
        prop_assert!(closed.trusted);
        prop_assert_eq!(closed.value, index_via_bfs(spec.build().graph(), Index::Wiener).unwrap());
        let pairs = closed_form(spec, Index::WLambda(0)).unwrap().value;
        prop_assert_eq!(pairs, w_lambda(spec.build().graph(), 0).unwrap());
    }

    #[test]
    fn trusted_hyper_tables_match_bfs(n in 0u32..7, k in 0u32..7) {
        for spec in [FamilySpec::Z { n, k }, FamilySpec::M { n: n.max(k), k: n.min(k) }] {
            let closed = closed_form(spec, Index::Hyper).unwrap();
            let bfs = index_via_bfs(spec.build().graph(), Index::Hyper).unwrap();
            prop_assert_eq!(closed.trusted, closed.value == bfs, "{} trusted={} closed={} bfs={}", spec, closed.trusted, closed.value, bfs);
        }
    }

    #[test]
    fn fitting_recovers_random_polynomials(coeffs in prop::collection::vec((-20i64..20, 1i64..7), 6)) {
        let basis = nanocone::poly::monomials(2, 2);
        let p = Polynomial::from_terms(
            &["n", "k"],
            coeffs.iter().zip(&basis).map(|(&(a, b), e)| (BigRational::new(a.into(), b.into()), e.clone())),
        );
        let lcm = 60i64;
        let samples: Vec<(Vec<i64>, BigInt)> = (0..5)
            .flat_map(|n| (0..=n).map(move |k| vec![n * lcm, k * lcm]))
            .map(|x| {
                let v = p.eval(&x);
                prop_assume!(v.is_integer());
                Ok((x, v.to_integer()))
            })
            .collect::<Result<_, _>>()?;
        let fit = fit_multivariate(&samples, &["n", "k"], 2).unwrap();
        prop_assert_eq!(fit.polynomial, p);
        prop_assert_eq!(fit.held_out.len(), samples.len() - 6);
    }
}
