//! Acceptance suite: one test per criterion, each printing a pass line
//! (run with `-- --nocapture` to see them). Tolerances are pinned in the
//! assertions. All randomness is seeded, so outcomes are reproducible.

use std::time::{Duration, Instant};

use cycleform::graph::SignFilter;
use cycleform::kuramoto::{
    classify_fixed_point, omega_profile, stability_indicator, twisted_configuration,
};
use cycleform::linalg::{det, inv, orthonormalize, zero_sum_basis};
use cycleform::oracle::{
    brute_force_index, count_inertia, random_connected_graph, sym_eigen, RandomGraphSpec,
};
use cycleform::spectral::{
    cycle_form, det_red, detred_identity_check, index_bounds, index_via_cycles, inertia,
    laplacian, threshold_one_cycle, threshold_two_cycle, Inertia,
};
use cycleform::{
    build_cover, build_projections, cycle_basis_via_cover, laplacian_restriction_check, Error,
    WeightedGraph,
};
use ndarray::{s, Array2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CRITERION_1_GRAPHS: usize = 1000;

fn criterion_1_spec(seed: u64) -> RandomGraphSpec {
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

fn criterion_1_graphs() -> impl Iterator<Item = WeightedGraph> {
    (0..CRITERION_1_GRAPHS as u64)
        .map(|seed| random_connected_graph(&criterion_1_spec(seed)).unwrap())
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-12)
}

#[test]
fn criterion_1_cycle_index_exactness() {
    let started = Instant::now();
    for (seed, g) in criterion_1_graphs().enumerate() {
        let cycles = index_via_cycles(&g).unwrap();
        let direct = brute_force_index(&g);
        assert_eq!(
            cycles.n_plus, direct.n_plus,
            "seed {seed}: cycles {cycles:?} vs direct {direct:?}"
        );
        assert_eq!(cycles, direct, "seed {seed}: full inertia mismatch");
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "criterion 1 (index via cycles equals eigensolve on {CRITERION_1_GRAPHS} graphs): PASS ({elapsed:?})"
    );
}

#[test]
fn criterion_2_sign_topology_bounds() {
    for (seed, g) in criterion_1_graphs().enumerate() {
        let (lower, upper) = index_bounds(&g);
        let n_plus = brute_force_index(&g).n_plus;
        assert!(
            lower <= n_plus && n_plus <= upper,
            "seed {seed}: {lower} <= {n_plus} <= {upper} violated"
        );
    }
    // on trees the bounds pinch to the negative edge count
    for case in 0..200u64 {
        let n = 2 + (case % 9) as usize;
        let g = random_connected_graph(&RandomGraphSpec {
            min_vertices: n,
            max_vertices: n,
            min_edges: 0,
            max_edges: n - 1,
            weight_min: 0.1,
            weight_max: 2.0,
            negative_probability: 0.5,
            seed: 10_000 + case,
        })
        .unwrap();
        assert_eq!(g.edge_count(), n - 1);
        let negatives = g.negative_edge_count();
        let (lower, upper) = index_bounds(&g);
        let n_plus = brute_force_index(&g).n_plus;
        assert_eq!((lower, upper, n_plus), (negatives, negatives, negatives));
    }
    println!("criterion 2 (sign-topology bounds, trees pinched): PASS");
}

#[test]
fn criterion_3_determinant_duality() {
    let mut checked = 0usize;
    for (seed, g) in criterion_1_graphs().enumerate() {
        match detred_identity_check(&g) {
            Ok(report) => {
                assert!(
                    (report.ratio - 1.0).abs() <= 1e-8,
                    "seed {seed}: ratio {}",
                    report.ratio
                );
                checked += 1;
            }
            Err(Error::SingularCycleForm) | Err(Error::DegenerateKernel { .. }) => {}
            Err(other) => panic!("seed {seed}: {other}"),
        }
    }
    assert!(checked >= CRITERION_1_GRAPHS * 9 / 10, "only {checked} nonsingular");

    // diamond against the two eight-term expansions
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    let mut kept = 0usize;
    while kept < 50 {
        let w: [f64; 5] = std::array::from_fn(|_| {
            let magnitude = rng.random_range(0.5..2.0);
            if rng.random_bool(0.5) {
                -magnitude
            } else {
                magnitude
            }
        });
        let [a, b, c, d, e] = w;
        let tree_sum = a * b * c
            + a * b * d
            + a * c * d
            + a * c * e
            + a * d * e
            + b * c * d
            + b * c * e
            + b * d * e;
        let laurent_sum = 1.0 / (d * e)
            + 1.0 / (c * e)
            + 1.0 / (b * e)
            + 1.0 / (b * d)
            + 1.0 / (b * c)
            + 1.0 / (a * e)
            + 1.0 / (a * d)
            + 1.0 / (a * c);
        if tree_sum.abs() < 0.05 {
            continue; // stay away after cancellation; comparisons below are relative
        }
        kept += 1;
        let g = WeightedGraph::new(
            4,
            &[(0, 1, a), (1, 2, b), (2, 3, c), (0, 3, d), (0, 2, e)],
        )
        .unwrap();
        let lhs = det_red(&laplacian(&g)).unwrap() / 4.0;
        assert!(
            rel_close(lhs.abs(), tree_sum.abs(), 1e-8),
            "det_red/N {lhs} vs tree expansion {tree_sum}"
        );
        let tree = g.spanning_tree().unwrap();
        let z = cycle_form(&g, &g.cycle_basis(&tree));
        let det_z = det(&z.matrix);
        assert!(
            rel_close(det_z.abs(), laurent_sum.abs(), 1e-8),
            "det Z {det_z} vs reciprocal expansion {laurent_sum}"
        );
    }
    println!("criterion 3 (reduced-determinant duality, {checked} graphs + diamond expansions): PASS");
}

#[test]
fn criterion_4_ring_table_reference_values() {
    let started = Instant::now();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_cycleform"))
        .args(["--format", "json", "ring-table"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let report: cycleform_cli::report::Report =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let rows = match report.results {
        cycleform_cli::report::Results::RingTable(r) => r.rows,
        other => panic!("wrong payload: {other:?}"),
    };
    let reference = [
        (3usize, 0.447),
        (4, 0.392),
        (5, 0.358),
        (10, 0.297),
        (20, 0.272),
        (30, 0.264),
        (40, 0.261),
        (50, 0.258),
    ];
    assert_eq!(rows.len(), reference.len());
    let mut previous = f64::INFINITY;
    for (row, (n, link)) in rows.iter().zip(reference) {
        assert_eq!(row.n, n);
        assert!(
            (row.normalized_link - link).abs() <= 1e-3,
            "n = {n}: {} vs {link}",
            row.normalized_link
        );
        assert!(row.is_long, "n = {n} not flagged long");
        assert!(row.normalized_link > 0.25, "n = {n} not above a quarter turn");
        assert!(row.normalized_link < previous, "n = {n} broke monotonicity");
        previous = row.normalized_link;
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("criterion 4 (ring table reference values): PASS ({elapsed:?})");
}

#[test]
fn criterion_5_ring_stability_dichotomy() {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut agreements = 0usize;
    for n in 3..=12usize {
        let mut samples = 0usize;
        while samples < 200 {
            let zeta: f64 = rng.random_range(0.0..std::f64::consts::FRAC_PI_2);
            let wrap_cos = ((n - 1) as f64 * zeta).cos();
            if zeta.cos().abs() <= 1e-6 || wrap_cos.abs() <= 1e-6 {
                continue; // degenerate sample per the criterion
            }
            samples += 1;
            let pc = twisted_configuration(n, zeta);
            let classification = classify_fixed_point(&pc, 1e-8).unwrap();
            let h = stability_indicator(n, zeta).unwrap();
            assert_eq!(
                classification.unstable_dim == 0,
                h > 0.0,
                "n = {n}, zeta = {zeta}: unstable_dim {} vs h {h}",
                classification.unstable_dim
            );
            agreements += 1;
        }
    }
    assert_eq!(agreements, 200 * 10);
    println!("criterion 5 (twisted-state dichotomy, {agreements} samples): PASS");
}

#[test]
fn criterion_6_threshold_flips() {
    let mut rng = ChaCha8Rng::seed_from_u64(606);

    // one-cycle rings
    for case in 0..50 {
        let n = rng.random_range(3..=10usize);
        let mut weights: Vec<f64> = (0..n).map(|_| rng.random_range(0.1..2.0)).collect();
        let slot = rng.random_range(0..n);
        let critical = threshold_one_cycle(&weights, slot);
        assert!(critical < 0.0);
        for (factor, expect_stable) in [(0.99, true), (1.01, false)] {
            weights[slot] = critical * factor;
            let g = WeightedGraph::ring(&weights).unwrap();
            let stable = brute_force_index(&g).n_plus == 0;
            assert_eq!(stable, expect_stable, "case {case}, factor {factor}");
        }
    }

    // two-cycle graphs with one negative edge on the shared path
    for case in 0..50 {
        let k1 = rng.random_range(2..=4usize);
        let k2 = rng.random_range(2..=4usize);
        let k12 = rng.random_range(1..=3usize);
        let gamma = rng.random_range(0.5..2.0);
        let bound = threshold_two_cycle(k1, k2, k12, gamma);
        let critical = 1.0 / bound;
        assert!(critical < 0.0);
        for (factor, expect_stable) in [(0.99, true), (1.01, false)] {
            let mut weights = vec![gamma; k1 + k2 + k12];
            *weights.last_mut().unwrap() = critical * factor;
            let g = WeightedGraph::theta(k1, k2, k12, &weights).unwrap();
            let stable = brute_force_index(&g).n_plus == 0;
            assert_eq!(
                stable, expect_stable,
                "case {case}: k = ({k1}, {k2}, {k12}), factor {factor}"
            );
        }
    }
    println!("criterion 6 (one- and two-cycle threshold flips, 50 + 50 instances): PASS");
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Array2<f64> {
    let mut m = Array2::zeros((n, n));
    for i in 0..n {
        for j in i..n {
            let x = rng.random_range(-1.0..1.0);
            m[[i, j]] = x;
            m[[j, i]] = x;
        }
    }
    m
}

fn inertia_of(m: &Array2<f64>) -> Inertia {
    count_inertia(&sym_eigen(m).unwrap().eigenvalues, 1e-9)
}

/// Well-conditioned random split of a nonsingular symmetric matrix into a
/// subspace restriction and the complementary inverse restriction.
fn split_instance(
    rng: &mut ChaCha8Rng,
    n: usize,
    k: usize,
) -> (Array2<f64>, Array2<f64>, Array2<f64>) {
    loop {
        let m = random_symmetric(rng, n);
        if det(&m).abs() < 1e-3 {
            continue;
        }
        let mut raw = Array2::zeros((n, n));
        for v in raw.iter_mut() {
            *v = rng.random_range(-1.0..1.0);
        }
        if det(&raw).abs() < 1e-3 {
            continue;
        }
        let basis = orthonormalize(&raw);
        let v_s = basis.slice(s![.., 0..k]).to_owned();
        let v_perp = basis.slice(s![.., k..n]).to_owned();
        let restricted = v_s.t().dot(&m).dot(&v_s);
        if det(&restricted).abs() < 1e-6 {
            continue;
        }
        let m_inv = inv(&m).expect("determinant checked");
        let complement = v_perp.t().dot(&m_inv).dot(&v_perp);
        return (m, restricted, complement);
    }
}

#[test]
fn criterion_7_matrix_lemma_suites() {
    // inertia additivity across a subspace split
    let mut rng = ChaCha8Rng::seed_from_u64(701);
    for _ in 0..500 {
        let n = rng.random_range(2..=8usize);
        let k = rng.random_range(1..n);
        let (m, restricted, complement) = split_instance(&mut rng, n, k);
        assert_eq!(
            inertia_of(&m).n_plus,
            inertia_of(&restricted).n_plus + inertia_of(&complement).n_plus
        );
    }

    // determinantal version
    let mut rng = ChaCha8Rng::seed_from_u64(702);
    for _ in 0..500 {
        let n = rng.random_range(2..=8usize);
        let k = rng.random_range(1..n);
        let (m, restricted, complement) = split_instance(&mut rng, n, k);
        let lhs = det(&m);
        let rhs = det(&restricted) / det(&complement);
        assert!(rel_close(lhs, rhs, 1e-8), "{lhs} vs {rhs}");
    }

    // congruence invariance of the sign counts
    let mut rng = ChaCha8Rng::seed_from_u64(703);
    for _ in 0..500 {
        let n = rng.random_range(2..=8usize);
        let m = random_symmetric(&mut rng, n);
        let u = loop {
            let mut u = Array2::zeros((n, n));
            for v in u.iter_mut() {
                *v = rng.random_range(-1.0..1.0);
            }
            if det(&u).abs() > 1e-3 {
                break u;
            }
        };
        let congruent = u.t().dot(&m).dot(&u);
        assert_eq!(inertia_of(&m).n_minus, inertia_of(&congruent).n_minus);
    }

    // rank-one update of a singular symmetric matrix
    let mut rng = ChaCha8Rng::seed_from_u64(704);
    let mut done = 0usize;
    while done < 500 {
        let n = rng.random_range(2..=8usize);
        let m = random_symmetric(&mut rng, n);
        let dec = sym_eigen(&m).unwrap();
        let kill = (0..n)
            .min_by(|&i, &j| dec.eigenvalues[i].abs().total_cmp(&dec.eigenvalues[j].abs()))
            .unwrap();
        let gap = (0..n)
            .filter(|&i| i != kill)
            .map(|i| dec.eigenvalues[i].abs())
            .fold(f64::INFINITY, f64::min);
        if gap < 1e-3 {
            continue;
        }
        done += 1;
        let mut lambda = Array2::zeros((n, n));
        for i in 0..n {
            lambda[[i, i]] = if i == kill { 0.0 } else { dec.eigenvalues[i] };
        }
        let v = &dec.eigenvectors;
        let h = v.dot(&lambda).dot(&v.t());
        let kernel = v.column(kill);
        let pseudo_det: f64 = (0..n)
            .filter(|&i| i != kill)
            .map(|i| dec.eigenvalues[i])
            .product();
        let y: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let z: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let mut update = h.clone();
        for i in 0..n {
            for j in 0..n {
                update[[i, j]] += y[i] * z[j];
            }
        }
        let x_dot_y: f64 = (0..n).map(|i| kernel[i] * y[i]).sum();
        let x_dot_z: f64 = (0..n).map(|i| kernel[i] * z[i]).sum();
        let lhs = det(&update);
        let rhs = x_dot_y * x_dot_z / kernel.dot(&kernel) * pseudo_det;
        assert!(
            (lhs - rhs).abs() <= 1e-8 * lhs.abs().max(rhs.abs()).max(1e-9),
            "{lhs} vs {rhs}"
        );
        // consistency of the dedicated reduced determinant on Laplacians:
        // checked separately in criterion 3; here the generic identity only
    }
    println!("criterion 7 (subspace-split, congruence and rank-one determinant lemmas, 4 x 500): PASS");
}

#[test]
fn criterion_8_covering_machinery() {
    for (seed, g) in criterion_1_graphs().enumerate() {
        let tree = g.spanning_tree().unwrap();
        let cover = build_cover(&g, &tree).unwrap();
        let projections = build_projections(&cover);
        assert!(
            laplacian_restriction_check(&g, &cover, &projections),
            "seed {seed}: restriction identity failed"
        );
        let fundamental = g.cycle_basis(&tree);
        let via_cover = cycle_basis_via_cover(&cover, &projections);
        let z_fund = cycle_form(&g, &fundamental);
        let z_cover = cycle_form(&g, &via_cover);
        let n_plus_fund = inertia(&z_fund.matrix, 1e-9).unwrap().n_plus;
        let n_plus_cover = inertia(&z_cover.matrix, 1e-9).unwrap().n_plus;
        assert_eq!(n_plus_fund, n_plus_cover, "seed {seed}: basis-dependent index");
    }
    println!("criterion 8 (covering restriction identity and basis independence): PASS");
}

#[test]
fn zero_sum_basis_spans_the_reduced_space() {
    // helper sanity for criterion 3's reduced determinant: the projector
    // annihilates the ones vector and preserves dimension
    for n in 2..8 {
        let p = zero_sum_basis(n);
        assert_eq!(p.dim(), (n, n - 1));
        for col in p.columns() {
            assert!(col.sum().abs() < 1e-12);
        }
    }
}

#[test]
fn omega_profile_consistency_with_criterion_5() {
    // the twisted states used in the dichotomy are exact fixed points
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    for _ in 0..100 {
        let n = rng.random_range(3..=12usize);
        let zeta = rng.random_range(0.0..std::f64::consts::FRAC_PI_2);
        let pc = twisted_configuration(n, zeta);
        let residual: f64 = cycleform::kuramoto::fixed_point_residual(&pc)
            .iter()
            .fold(0.0, |m, r| m.max(r.abs()));
        assert!(residual <= 1e-12, "n {n}, zeta {zeta}: residual {residual}");
        let _ = omega_profile(n, zeta);
    }
}

#[test]
fn connectivity_filters_match_component_labels() {
    // labels returned with the counts are consistent partitions
    for g in criterion_1_graphs().take(50) {
        for filter in [SignFilter::All, SignFilter::PositiveOnly, SignFilter::NegativeOnly] {
            let (count, labels) = g.connected_components(filter);
            assert_eq!(labels.len(), g.vertex_count());
            let max = labels.iter().max().copied().unwrap_or(0);
            assert_eq!(max + 1, count);
        }
    }
}
