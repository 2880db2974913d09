//! The index and determinant dualities between the Laplacian and the
//! cycle form, checked against the brute-force eigensolve oracle on
//! seeded random graphs.

use cycleform::graph::SignFilter;
use cycleform::oracle::{brute_force_index, random_connected_graph, RandomGraphSpec};
use cycleform::{
    detred_identity_check, index_bounds, index_via_cycles, mixed_cycle_reduction, Error,
    WeightedGraph,
};
use proptest::prelude::*;

fn spec(seed: u64) -> RandomGraphSpec {
    RandomGraphSpec {
        min_vertices: 2,
        max_vertices: 10,
        min_edges: 0,
        max_edges: 20,
        weight_min: 0.1,
        weight_max: 2.0,
        negative_probability: 0.5,
        seed,
    }
}

fn graphs() -> impl Strategy<Value = WeightedGraph> {
    any::<u64>().prop_map(|seed| random_connected_graph(&spec(seed)).unwrap())
}

fn trees() -> impl Strategy<Value = WeightedGraph> {
    (2usize..=10, any::<u64>()).prop_map(|(n, seed)| {
        random_connected_graph(&RandomGraphSpec {
            min_vertices: n,
            max_vertices: n,
            min_edges: 0,
            max_edges: n - 1,
            weight_min: 0.1,
            weight_max: 2.0,
            negative_probability: 0.5,
            seed,
        })
        .unwrap()
    })
}

proptest! {
    #[test]
    fn cycle_index_matches_the_eigensolve(g in graphs()) {
        let via_cycles = index_via_cycles(&g).unwrap();
        let direct = brute_force_index(&g);
        prop_assert_eq!(via_cycles, direct);
    }

    #[test]
    fn sign_topology_bounds_hold(g in graphs()) {
        let (lower, upper) = index_bounds(&g);
        let n_plus = brute_force_index(&g).n_plus;
        prop_assert!(lower <= n_plus, "lower {} > n+ {}", lower, n_plus);
        prop_assert!(n_plus <= upper, "n+ {} > upper {}", n_plus, upper);
    }

    #[test]
    fn tree_index_counts_negative_edges(g in trees()) {
        prop_assert_eq!(g.edge_count(), g.vertex_count() - 1);
        let negatives = g.negative_edge_count();
        let (lower, upper) = index_bounds(&g);
        prop_assert_eq!(lower, negatives);
        prop_assert_eq!(upper, negatives);
        prop_assert_eq!(brute_force_index(&g).n_plus, negatives);
        prop_assert_eq!(index_via_cycles(&g).unwrap().n_plus, negatives);
    }

    #[test]
    fn index_bounded_by_negative_edges_and_bridges(g in graphs()) {
        let n_plus = brute_force_index(&g).n_plus;
        // every edge appears once in the covering tree, so the tree bound
        // is the total negative edge count
        prop_assert!(n_plus <= g.negative_edge_count());
        // negative bridges always destabilize: they sit in no cycle, so
        // the cycle form cannot cancel them
        let tree_set = g.tree_set().unwrap();
        let negative_bridges = tree_set
            .iter()
            .filter(|&&e| g.edges()[e].weight < 0.0)
            .count();
        prop_assert!(n_plus >= negative_bridges);
    }

    #[test]
    fn mixed_reduction_agrees_with_direct_index(g in graphs()) {
        let reduction = mixed_cycle_reduction(&g).unwrap();
        let tree = g.spanning_tree().unwrap();
        let basis = g.cycle_basis(&tree);
        let z = cycleform::cycle_form(&g, &basis);
        let direct = cycleform::inertia(&z.matrix, 1e-9).unwrap();
        prop_assert_eq!(reduction.z_inertia, direct);
    }

    #[test]
    fn reduced_determinant_matches_eigenvalue_product(g in graphs()) {
        use cycleform::oracle::sym_eigen;
        use cycleform::spectral::{det_red, laplacian};
        let l = laplacian(&g);
        match det_red(&l) {
            Ok(value) => {
                // second route: product of the N - 1 eigenvalues of
                // largest magnitude
                let eigenvalues = sym_eigen(&l).unwrap().eigenvalues;
                let drop = (0..eigenvalues.len())
                    .min_by(|&i, &j| eigenvalues[i].abs().total_cmp(&eigenvalues[j].abs()))
                    .unwrap();
                let product: f64 = eigenvalues
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, &l)| l)
                    .product();
                prop_assert!(
                    (value - product).abs() <= 1e-8 * value.abs().max(product.abs()).max(1e-9),
                    "projected determinant {} vs eigenvalue product {}", value, product
                );
            }
            Err(Error::DegenerateKernel { .. }) => {}
            Err(other) => return Err(TestCaseError::fail(format!("{other}"))),
        }
    }

    #[test]
    fn determinant_duality_in_magnitude(g in graphs()) {
        match detred_identity_check(&g) {
            Ok(report) => {
                prop_assert!(
                    (report.ratio - 1.0).abs() <= 1e-8,
                    "ratio {} off by more than 1e-8", report.ratio
                );
                // empirical sign factor: (-1)^|E|
                let expected = if g.edge_count() % 2 == 0 { 1 } else { -1 };
                prop_assert_eq!(report.sign_factor, expected);
            }
            Err(Error::SingularCycleForm) | Err(Error::DegenerateKernel { .. }) => {
                // measure-zero weight draws; nothing to compare
            }
            Err(other) => return Err(TestCaseError::fail(format!("{other}"))),
        }
    }
}

#[test]
fn stable_with_cycle_rank_negatives_forces_positive_spanning_tree() {
    // big positive tree weights, tiny negative chords: every chord's
    // reciprocal dominates its cycle, so the cycle form has full positive
    // index and the Laplacian is stable with exactly C negative edges
    for seed in 0..40u64 {
        let spec = RandomGraphSpec {
            min_vertices: 4,
            max_vertices: 9,
            min_edges: 0,
            max_edges: 16,
            weight_min: 1.0,
            weight_max: 2.0,
            negative_probability: 0.0,
            seed,
        };
        let g = random_connected_graph(&spec).unwrap();
        let tree = g.spanning_tree().unwrap();
        let edges: Vec<(usize, usize, f64)> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(idx, e)| {
                if tree.non_tree_edges.contains(&idx) {
                    (e.tail, e.head, -0.01)
                } else {
                    (e.tail, e.head, e.weight)
                }
            })
            .collect();
        let signed = WeightedGraph::new(g.vertex_count(), &edges).unwrap();
        let c = signed.cycle_rank();
        assert_eq!(signed.negative_edge_count(), c);
        if c == 0 {
            continue;
        }
        assert_eq!(brute_force_index(&signed).n_plus, 0);
        assert_eq!(index_via_cycles(&signed).unwrap().n_plus, 0);

        // the positive subgraph must be a spanning tree
        let (components, _) = signed.connected_components(SignFilter::PositiveOnly);
        assert_eq!(components, 1);
        let positive_edges = signed.edge_count() - signed.negative_edge_count();
        assert_eq!(positive_edges, signed.vertex_count() - 1);
    }
}
