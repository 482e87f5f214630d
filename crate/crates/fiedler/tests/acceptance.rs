//! Acceptance gate: one test per criterion, each printing a pass/fail
//! line. Tolerances are pinned here, not configurable.

use fiedler::enumerate::connected_regular_graphs;
use fiedler::graph::Graph;
use fiedler::harness::{run_suite, HarnessConfig};
use fiedler::join_theory::{classify_imbalance, min_multiplicity, Verdict};
use fiedler::regular::{c4_eigenvector, decide_imbalance_two, I2Branch};
use fiedler::sign_oracle::{enumerate_sign_cells, min_imbalance};
use fiedler::spectra::{
    algebraic_connectivity, eigen_residual, fiedler_eigenspace, laplacian_matrix,
    laplacian_spectrum,
};
use std::time::Instant;

fn report(number: usize, name: &str, started: Instant) {
    println!(
        "[acceptance] criterion {number:02} {name}: PASS ({:.2}s)",
        started.elapsed().as_secs_f64()
    );
}

fn run_passing_suite(name: &str) {
    let outcome = run_suite(name, &HarnessConfig::default()).expect("suite runs");
    assert!(
        outcome.passed(),
        "suite {name} failed on {} of {} cases; first failures: {:?}",
        outcome.failures.len(),
        outcome.cases,
        &outcome.failures[..outcome.failures.len().min(5)]
    );
    assert!(outcome.cases > 0, "suite {name} ran no cases");
}

fn petersen() -> Graph {
    Graph::from_edges(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    )
    .unwrap()
}

fn rook_3x3() -> Graph {
    let mut g = Graph::new(9).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            let v = 3 * i + j;
            for jj in j + 1..3 {
                g.add_edge(v, 3 * i + jj).unwrap();
            }
            for ii in i + 1..3 {
                g.add_edge(v, 3 * ii + j).unwrap();
            }
        }
    }
    g
}

/// Criterion 1: the seven-vertex worked example. alpha = 4 within 1e-8,
/// multiplicity 3, imbalance classified 1, the three block eigenvectors
/// have residual <= 1e-8, and the exact 3-dimensional enumeration
/// achieves imbalances {1, 2, 3}. Under one second.
#[test]
fn criterion_01_worked_example() {
    let started = Instant::now();
    let g1 = Graph::complete(2).disjoint_union(&Graph::empty(1)).unwrap();
    let g2 = Graph::empty(1).join(&Graph::empty(3)).unwrap();
    let g = g1.join(&g2).unwrap();

    let ac = algebraic_connectivity(&g).unwrap();
    assert!((ac.alpha - 4.0).abs() <= 1e-8, "alpha = {}", ac.alpha);
    assert_eq!(ac.multiplicity, 3);
    assert_eq!(
        classify_imbalance(&g).unwrap().verdict,
        Verdict::ImbalanceOne
    );

    let lap = laplacian_matrix(&g);
    let x1 = [1.0, 1.0, -2.0, 0.0, 0.0, 0.0, 0.0];
    let x2 = [0.0, 0.0, 0.0, 0.0, 1.0, -1.0, 0.0];
    let x3 = [0.0, 0.0, 0.0, 0.0, 1.0, 0.0, -1.0];
    for x in [&x1[..], &x2[..], &x3[..]] {
        assert!(eigen_residual(&lap, x, 4.0) <= 1e-8);
    }

    let cells = enumerate_sign_cells(&ac.basis).unwrap();
    assert!(cells.exact, "three-dimensional enumeration must be exact");
    let imbalances = cells.imbalances();
    for want in [1usize, 2, 3] {
        assert!(imbalances.contains(&want), "missing imbalance {want}");
    }
    assert!(
        started.elapsed().as_secs_f64() < 1.0,
        "criterion must finish under 1s"
    );
    report(1, "worked-example", started);
}

/// Criterion 2: exhaustive equivalence on all connected non-complete
/// graphs with n <= 6: numeric alpha = delta, the structural join test,
/// and (for Fiedler multiplicity <= 3) the exact oracle all agree.
#[test]
fn criterion_02_imbalance_one_equivalence() {
    let started = Instant::now();
    run_passing_suite("imbalance-one-equivalence");
    report(2, "imbalance-one-equivalence", started);
}

/// Criterion 3: on the same corpus, the oracle reports imbalance 0
/// exactly for the disconnected graphs.
#[test]
fn criterion_03_imbalance_zero() {
    let started = Instant::now();
    run_passing_suite("imbalance-zero");
    report(3, "imbalance-zero", started);
}

/// Criterion 4: the closed-form minimum-multiplicity table equals the
/// brute-force component count for all 1 <= k <= ell <= 12 and matches
/// the two anchors. Under one minute.
#[test]
fn criterion_04_multiplicity_table() {
    let started = Instant::now();
    run_passing_suite("multiplicity-table");
    assert_eq!(min_multiplicity(16, 5).unwrap(), 13);
    assert_eq!(min_multiplicity(15, 4).unwrap(), 13);
    assert!(
        started.elapsed().as_secs_f64() < 60.0,
        "criterion must finish under 1min"
    );
    report(4, "multiplicity-table", started);
}

/// Criterion 5: the extremal generators hit exactly ell minimum-degree
/// vertices, the recognized k, and the minimum multiplicity (grouping
/// tolerance 1e-6) for all 1 <= k <= ell <= 10, including the cocktail
/// witnesses for even ell.
#[test]
fn criterion_05_extremal_generators() {
    let started = Instant::now();
    run_passing_suite("extremal-generators");
    report(5, "extremal-generators", started);
}

/// Criterion 6: 500 seeded random connected creation sequences (n <= 12):
/// Laplacian spectrum equals the conjugate degree sequence after integer
/// rounding (residuals <= 1e-8) and every one has imbalance 1.
#[test]
fn criterion_06_threshold_suite() {
    let started = Instant::now();
    run_passing_suite("threshold-random");
    report(6, "threshold-random", started);
}

/// Criterion 7: the minimum imbalance over the least-adjacency eigenspace
/// of a cycle equals floor(n/2) for n = 3..12, with the odd cases by the
/// exact two-dimensional sweep, and equals exactly 2 for n in {4, 5}.
#[test]
fn criterion_07_cycle_imbalance() {
    let started = Instant::now();
    run_passing_suite("cycle-imbalance");
    report(7, "cycle-imbalance", started);
}

/// Criterion 8: the regular imbalance-2 decision answers yes for C_5 and
/// the complement of the 3x3 rook's graph, no for the complement of the
/// Petersen graph; yes verdicts carry oracle witnesses of imbalance
/// exactly 2; the 4-cycle eigenvector has residual <= 1e-8 on the rook's
/// and cocktail-3 graphs; and on every connected regular graph with
/// n <= 8 and Fiedler multiplicity <= 3 the verdict matches the oracle.
#[test]
fn criterion_08_regular_imbalance_two() {
    let started = Instant::now();
    let c5 = Graph::cycle(5).unwrap();
    let cert = decide_imbalance_two(&c5).unwrap();
    assert!(cert.yes);
    assert_eq!(cert.branch, Some(I2Branch::FiveCycle));

    let rook_complement = rook_3x3().complement();
    let cert = decide_imbalance_two(&rook_complement).unwrap();
    assert!(cert.yes);
    assert!(matches!(cert.branch, Some(I2Branch::FourCycle { .. })));

    let petersen_complement = petersen().complement();
    assert!(!decide_imbalance_two(&petersen_complement).unwrap().yes);

    // oracle confirmation of the two yes verdicts
    for g in [&c5, &rook_complement] {
        let (_, basis) = fiedler_eigenspace(g).unwrap();
        let (i, witness, _) = min_imbalance(&basis).unwrap();
        assert_eq!(i, 2, "oracle must realize imbalance exactly 2");
        let profile = fiedler::spectra::sign_profile(&witness, fiedler::spectra::SIGN_TOL).unwrap();
        assert_eq!(profile.imbalance, 2);
    }

    // explicit 4-cycle eigenvectors
    let rook = rook_3x3();
    let cycle = rook.find_induced_c4().unwrap();
    c4_eigenvector(&rook, cycle).unwrap();
    let cp3 = Graph::cocktail(3).unwrap();
    let cycle = cp3.find_induced_c4().unwrap();
    c4_eigenvector(&cp3, cycle).unwrap();

    // exhaustive regular sweep n <= 8 (multiplicity <= 3 two-sided)
    run_passing_suite("regular-imbalance-two");
    report(8, "regular-imbalance-two", started);
}

/// Criterion 9: the eight-vertex example has common zero support
/// {v5..v8} with a simple Fiedler eigenvalue and largest Laplacian
/// eigenvalue below 8; the join containment holds on 100 seeded random
/// joins satisfying the premise.
#[test]
fn criterion_09_zero_support() {
    let started = Instant::now();
    run_passing_suite("zero-support");
    report(9, "zero-support", started);
}

/// Criterion 10: exhaustive n <= 6 equivalence of the combinatorial
/// recognizer and the spectral three-eigenvalue test, with the clique
/// identity on every recognized graph.
#[test]
fn criterion_10_three_eigenvalues() {
    let started = Instant::now();
    run_passing_suite("three-eigenvalues");
    report(10, "three-eigenvalues", started);
}

/// Sanity check backing criterion 8: the regular enumeration actually
/// covers orders up to 8.
#[test]
fn regular_corpus_is_nonempty() {
    assert!(!connected_regular_graphs(8).is_empty());
    let spectrum = laplacian_spectrum(&Graph::complete(3)).unwrap();
    assert_eq!(spectrum.order(), 3);
}
