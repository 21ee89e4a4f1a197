use alphaspec::bounds::{
    lower_degree_based, lower_nikiforov, lower_zagreb_randic, rowsum_bounds, upper_degree_based,
};
use alphaspec::indices::{forgotten, randic, zagreb1, zagreb1_lower_bound, zagreb1_upper_bound};
use alphaspec::linalg::{
    a_alpha, adjacency, char_poly_eval, eigenvalues_with, spectrum, EigenMethod, DEFAULT_EIGEN_TOL,
};
use alphaspec::{Family, Graph, LineGraph, SymMatrix};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut pairs = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                pairs.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, pairs).unwrap()
}

/// Any simple graph on 1..=12 vertices.
fn any_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12, prop::collection::vec(any::<bool>(), 66))
        .prop_map(|(n, bits)| graph_from_bits(n, &bits))
}

fn graph_with_edges() -> impl Strategy<Value = Graph> {
    any_graph().prop_filter("needs an edge", |g| g.size() > 0)
}

/// Circulant graph on `n` vertices with the given jumps, always regular.
fn circulant() -> impl Strategy<Value = Graph> {
    (4usize..=14, prop::collection::vec(1usize..=7, 1..=3))
        .prop_map(|(n, jumps)| {
            let mut pairs = Vec::new();
            for v in 0..n {
                for &j in &jumps {
                    let j = j % n;
                    if j == 0 {
                        continue;
                    }
                    let u = (v + j) % n;
                    let (a, b) = (v.min(u), v.max(u));
                    if !pairs.contains(&(a, b)) {
                        pairs.push((a, b));
                    }
                }
            }
            Graph::from_edge_list(n, pairs).unwrap()
        })
        .prop_filter("needs an edge", |g| g.size() > 0)
}

/// Random symmetric matrix of order 1..=12 with entries in [-5, 5].
fn symmetric() -> impl Strategy<Value = SymMatrix> {
    (1usize..=12, prop::collection::vec(-5.0f64..5.0, 144)).prop_map(|(n, v)| {
        SymMatrix::from_fn(n, |i, j| v[i.min(j) * 12 + i.max(j)])
    })
}

fn sorted_eigs(g: &Graph, alpha: f64) -> Vec<f64> {
    spectrum(&a_alpha(g, alpha).unwrap())
        .unwrap()
        .eigenvalues()
        .to_vec()
}

fn alpha() -> impl Strategy<Value = f64> {
    0.0f64..=1.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn weyl_sandwich(a in symmetric(), seed in prop::collection::vec(-5.0f64..5.0, 144)) {
        let n = a.order();
        let b = SymMatrix::from_fn(n, |i, j| seed[i.min(j) * 12 + i.max(j)]);
        let (ea, eb) = (spectrum(&a).unwrap(), spectrum(&b).unwrap());
        let sum = spectrum(&a.combine(1.0, &b, 1.0)).unwrap();
        for i in 1..=n {
            let (ai, si) = (ea.nth(i).unwrap(), sum.nth(i).unwrap());
            prop_assert!(ai + eb.lambda_min() <= si + 1e-9);
            prop_assert!(si <= ai + eb.lambda1() + 1e-9);
        }
    }

    #[test]
    fn eigenvalues_nondecreasing_in_alpha(g in any_graph(), a in alpha(), b in alpha()) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let (x, y) = (sorted_eigs(&g, lo), sorted_eigs(&g, hi));
        let laplacian_norm = 2.0 * g.max_degree() as f64;
        for (p, q) in x.iter().zip(&y) {
            prop_assert!(*p <= q + 1e-9);
            prop_assert!(q - p <= (hi - lo) * laplacian_norm + 1e-9);
        }
    }

    #[test]
    fn solvers_agree(g in any_graph(), a in alpha()) {
        let m = a_alpha(&g, a).unwrap();
        let j = eigenvalues_with(&m, EigenMethod::Jacobi, DEFAULT_EIGEN_TOL).unwrap();
        let t = eigenvalues_with(&m, EigenMethod::Tridiagonal, DEFAULT_EIGEN_TOL).unwrap();
        for (x, y) in j.eigenvalues().iter().zip(t.eigenvalues()) {
            prop_assert!((x - y).abs() < 1e-9, "{x} vs {y}");
        }
    }

    #[test]
    fn vertex_deletion_interlaces(g in any_graph().prop_filter("n >= 2", |g| g.order() >= 2), a in alpha(), pick in any::<prop::sample::Index>()) {
        let v = pick.index(g.order());
        let host = sorted_eigs(&g, a);
        let keep: Vec<usize> = (0..g.order()).filter(|&u| u != v).collect();
        let sub = spectrum(&a_alpha(&g, a).unwrap().principal_submatrix(&keep)).unwrap();
        let deleted = sorted_eigs(&g.delete_vertex(v).unwrap(), a);
        for i in 0..keep.len() {
            let s = sub.eigenvalues()[i];
            prop_assert!(host[i + 1] <= s + 1e-9 && s <= host[i] + 1e-9);
            prop_assert!(deleted[i] <= s + 1e-9);
        }
    }

    #[test]
    fn trace_laws(g in any_graph(), a in alpha()) {
        let e = sorted_eigs(&g, a);
        let m = g.size() as f64;
        let sq: f64 = g.degrees().iter().map(|&d| (d * d) as f64).sum();
        prop_assert!((e.iter().sum::<f64>() - 2.0 * a * m).abs() < 1e-8);
        let want = a * a * sq + 2.0 * (1.0 - a).powi(2) * m;
        prop_assert!((e.iter().map(|x| x * x).sum::<f64>() - want).abs() < 1e-7 * want.max(1.0));
    }

    #[test]
    fn second_eigenvalue_nonnegative_off_complete(g in any_graph(), a in alpha()) {
        prop_assume!(g.order() >= 2 && !g.is_complete());
        prop_assert!(sorted_eigs(&g, a)[1] >= -1e-9);
    }

    #[test]
    fn line_graph_adjacency_floor(g in graph_with_edges()) {
        let lg = LineGraph::of(&g).unwrap();
        let s = spectrum(&adjacency(&lg.graph)).unwrap();
        prop_assert!(s.lambda_min() >= -2.0 - 1e-9);
    }

    #[test]
    fn characteristic_polynomial_matches_eigenvalues(g in any_graph().prop_filter("small", |g| g.order() <= 8), a in alpha(), x in -5.0f64..5.0) {
        let m = a_alpha(&g, a).unwrap();
        let e = sorted_eigs(&g, a);
        let prod: f64 = e.iter().map(|l| x - l).product();
        let det = char_poly_eval(&m, x);
        prop_assert!((det - prod).abs() <= 1e-7 * prod.abs().max(1.0), "{det} vs {prod}");
    }

    #[test]
    fn index_inequalities(g in graph_with_edges()) {
        let (n, m) = (g.order(), g.size());
        let z1 = zagreb1(&g).value;
        prop_assert!(forgotten(&g).value >= z1 * z1 / (2.0 * m as f64) - 1e-9 * z1);
        if n >= 3 {
            prop_assert!(z1 >= zagreb1_lower_bound(n, m, g.max_degree(), g.min_degree()) - 1e-9 * z1);
        }
        if g.is_connected() {
            prop_assert!(z1 <= zagreb1_upper_bound(n, m, g.min_degree()) + 1e-9 * z1);
        }
        // Cauchy-Schwarz on the degree sequence.
        prop_assert!(z1 >= 4.0 * (m * m) as f64 / n as f64 - 1e-9 * z1);
        let r1 = randic(&g, 1.0).unwrap().value;
        prop_assert!((r1 - alphaspec::indices::zagreb2(&g).value).abs() < 1e-9 * r1.max(1.0));
    }

    #[test]
    fn line_graph_size_and_degrees(g in graph_with_edges()) {
        let lg = LineGraph::of(&g).unwrap();
        let sq: usize = g.degrees().iter().map(|d| d * d).sum();
        prop_assert_eq!(lg.graph.order(), g.size());
        prop_assert_eq!(2 * lg.graph.size() + 2 * g.size(), sq);
        for (k, &(u, v)) in lg.source_edges.iter().enumerate() {
            prop_assert_eq!(lg.graph.degree(k) + 2, g.degree(u) + g.degree(v));
        }
    }

    #[test]
    fn edge_deletion_is_vertex_deletion_in_line_graph(g in graph_with_edges(), pick in any::<prop::sample::Index>(), a in alpha()) {
        let (u, v) = g.edges()[pick.index(g.size())];
        let lg = LineGraph::of(&g).unwrap();
        let e = lg.vertex_of(u, v).unwrap();
        let keep: Vec<usize> = (0..lg.graph.order()).filter(|&k| k != e).collect();
        let smaller = g.delete_edge(u, v).unwrap();
        if smaller.size() == 0 {
            prop_assert!(keep.is_empty());
        } else {
            let induced = lg.graph.induced_subgraph(&keep).unwrap();
            let direct = LineGraph::of(&smaller).unwrap().graph;
            prop_assert_eq!(direct.size(), induced.size());
            for (x, y) in sorted_eigs(&direct, a).iter().zip(sorted_eigs(&induced, a)) {
                prop_assert!((x - y).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn lower_bounds_below_largest(g in graph_with_edges(), a in alpha()) {
        let l1 = sorted_eigs(&g, a)[0];
        let slack = 1e-9 * l1.max(1.0);
        prop_assert!(lower_nikiforov(g.max_degree(), a).unwrap() <= l1 + slack);
        let rs = rowsum_bounds(&g, a).unwrap();
        prop_assert!(rs.lower <= l1 + slack && l1 <= rs.upper + slack);
        if g.order() >= 3 {
            prop_assert!(lower_zagreb_randic(&g, a).unwrap() <= l1 + slack);
        }
        if g.order() >= 2 && !g.has_isolated_vertex() {
            prop_assert!(lower_degree_based(&g, a).unwrap() <= l1 + slack);
        }
        if let Ok(u) = upper_degree_based(&g, a) {
            prop_assert!(l1 <= u + slack);
        }
    }

    #[test]
    fn regular_correspondence_and_equalities(g in circulant(), a in alpha()) {
        let r = g.regularity().unwrap() as f64;
        let adj = spectrum(&adjacency(&g)).unwrap();
        let e = sorted_eigs(&g, a);
        for (x, y) in e.iter().zip(adj.eigenvalues()) {
            prop_assert!((x - (a * r + (1.0 - a) * y)).abs() < 1e-9);
        }
        prop_assert!((e[0] - r).abs() < 1e-9);
        prop_assert!((upper_degree_based(&g, a).unwrap() - r).abs() < 1e-9);
        prop_assert!((lower_zagreb_randic(&g, a).unwrap() - r).abs() < 1e-9);
        let rs = rowsum_bounds(&g, a).unwrap();
        prop_assert!((rs.lower - r).abs() < 1e-9 && (rs.upper - r).abs() < 1e-9);
    }

    #[test]
    fn star_attains_degree_based_bound(n in 3usize..=60, a in alpha()) {
        let g = Family::Star(n).build().unwrap();
        let l1 = sorted_eigs(&g, a)[0];
        prop_assert!((lower_degree_based(&g, a).unwrap() - l1).abs() < 1e-8);
    }
}

#[test]
fn degree_based_and_zagreb_randic_are_incomparable() {
    let path = Family::Path(50).build().unwrap();
    let pine = Family::Pineapple(50, 1).build().unwrap();
    for i in 0..10 {
        let a = i as f64 / 10.0;
        assert!(lower_degree_based(&path, a).unwrap() > lower_zagreb_randic(&path, a).unwrap());
        assert!(lower_zagreb_randic(&pine, a).unwrap() > lower_degree_based(&pine, a).unwrap());
    }
}

#[test]
fn rowsum_and_zagreb_randic_cross_on_stars_and_wheels() {
    for g in [
        Family::Star(21).build().unwrap(),
        Family::Wheel(10).build().unwrap(),
        Family::Wheel(50).build().unwrap(),
    ] {
        let diff: Vec<f64> = (0..=20)
            .map(|i| {
                let a = i as f64 / 20.0;
                lower_zagreb_randic(&g, a).unwrap() - rowsum_bounds(&g, a).unwrap().lower
            })
            .collect();
        assert!(diff[0] < 0.0 && diff[20] > 0.0, "{diff:?}");
    }
}

#[test]
fn degree_based_dominates_nikiforov_on_wheels() {
    for n in [10, 50, 100] {
        let g = Family::Wheel(n).build().unwrap();
        for i in 0..=20 {
            let a = i as f64 / 20.0;
            let d =
                lower_degree_based(&g, a).unwrap() - lower_nikiforov(g.max_degree(), a).unwrap();
            assert!(d >= -1e-12, "W_{n} alpha={a}: {d}");
        }
    }
}
