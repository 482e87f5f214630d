//! Named verification suites. Each suite sweeps a family of graphs
//! (exhaustive small-order enumeration, seeded random instances, and any
//! externally supplied corpus) and checks one structural statement
//! against the numeric spectra and the sign-pattern oracle. The CLI
//! `verify` command and the integration tests both drive these.

use crate::enumerate::{connected_regular_graphs, graphs_with_order, random_graph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::join_theory::{
    self, classify_imbalance, extremal_kjoin, fiedler_multiplicity, min_multiplicity,
    min_nontrivial_components, multiplicity_lower_bound, recognize_kjoin, Verdict,
};
use crate::regular::{c4_eigenvector, cycle_least_eigen, decide_imbalance_two};
use crate::sign_oracle::{enumerate_sign_cells, min_imbalance};
use crate::spectra::{
    adjacency_spectrum, algebraic_connectivity, common_zero_support, join_spectrum,
    laplacian_spectrum, DECISION_TOL,
};
use crate::three_eigs;
use crate::threshold::{
    build_threshold, is_threshold, random_creation_sequence, threshold_alpha_structure,
    threshold_spectrum_check,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Shared configuration for suite runs.
#[derive(Clone, Debug, Default)]
pub struct HarnessConfig {
    /// Seed for every randomized sweep; equal seeds give identical runs.
    pub seed: u64,
    /// Extra graphs (typically parsed from a graph6 file) folded into the
    /// sweeps that accept a corpus.
    pub corpus: Vec<Graph>,
}

/// Result of one suite: the number of cases checked and per-case failure
/// diagnostics (offending graph6 string plus a message).
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "graph6-roundtrip",
    "complement-duality",
    "connectivity-bounds",
    "kernel-multiplicity",
    "regular-duality",
    "join-spectrum",
    "fiedler-orthogonality",
    "imbalance-zero",
    "imbalance-one-equivalence",
    "cut-vertex-structure",
    "oracle-implies-alpha-delta",
    "multiplicity-formula",
    "multiplicity-table",
    "extremal-generators",
    "multiplicity-lower-bound",
    "imbalance-above-one",
    "zero-support",
    "extreme-classification",
    "threshold-random",
    "threshold-structure",
    "threshold-roundtrip",
    "three-eigenvalues",
    "cycle-imbalance",
    "regular-imbalance-two",
    "regular-identities",
    "least-eigenvalue-floor",
    "c4-eigenvector",
    "augmentation",
];

pub fn run_suite(name: &str, config: &HarnessConfig) -> Result<SuiteOutcome> {
    match name {
        "graph6-roundtrip" => graph6_roundtrip(config),
        "complement-duality" => complement_duality(config),
        "connectivity-bounds" => connectivity_bounds(config),
        "kernel-multiplicity" => kernel_multiplicity(config),
        "regular-duality" => regular_duality(config),
        "join-spectrum" => join_spectrum_suite(config),
        "fiedler-orthogonality" => fiedler_orthogonality(config),
        "imbalance-zero" => imbalance_zero(config),
        "imbalance-one-equivalence" => imbalance_one_equivalence(config),
        "cut-vertex-structure" => cut_vertex_structure(config),
        "oracle-implies-alpha-delta" => oracle_implies_alpha_delta(config),
        "multiplicity-formula" => multiplicity_formula(config),
        "multiplicity-table" => multiplicity_table(config),
        "extremal-generators" => extremal_generators(config),
        "multiplicity-lower-bound" => lower_bound_suite(config),
        "imbalance-above-one" => imbalance_above_one(config),
        "zero-support" => zero_support(config),
        "extreme-classification" => extreme_classification(config),
        "threshold-random" => threshold_random(config),
        "threshold-structure" => threshold_structure(config),
        "threshold-roundtrip" => threshold_roundtrip(config),
        "three-eigenvalues" => three_eigenvalues(config),
        "cycle-imbalance" => cycle_imbalance(config),
        "regular-imbalance-two" => regular_imbalance_two(config),
        "regular-identities" => regular_identities(config),
        "least-eigenvalue-floor" => least_eigenvalue_floor(config),
        "c4-eigenvector" => c4_eigenvector_suite(config),
        "augmentation" => augmentation_suite(config),
        other => Err(Error::InvalidParameter(format!("unknown suite {other:?}"))),
    }
}

pub fn run_all(config: &HarnessConfig) -> Result<Vec<SuiteOutcome>> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, config))
        .collect()
}

fn outcome(name: &'static str) -> SuiteOutcome {
    SuiteOutcome {
        name,
        cases: 0,
        failures: Vec::new(),
    }
}

fn fail(out: &mut SuiteOutcome, g: &Graph, message: impl std::fmt::Display) {
    out.failures
        .push(format!("{}: {message}", graph6::encode(g)));
}

/// All graphs on orders 0..=max, plus the configured corpus.
fn small_graphs(max: usize, config: &HarnessConfig) -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (0..=max).flat_map(graphs_with_order).collect();
    graphs.extend(config.corpus.iter().cloned());
    graphs
}

fn connected_non_complete(max: usize, config: &HarnessConfig) -> Vec<Graph> {
    small_graphs(max, config)
        .into_iter()
        .filter(|g| g.n() >= 2 && g.is_connected() && !g.is_complete())
        .collect()
}

// --- suites ---

fn graph6_roundtrip(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("graph6-roundtrip");
    for g in small_graphs(5, config) {
        out.cases += 1;
        let encoded = graph6::encode(&g);
        match graph6::decode(&encoded) {
            Ok(back) if back == g => {}
            Ok(_) => fail(&mut out, &g, "decode(encode(g)) differs"),
            Err(e) => fail(&mut out, &g, format!("decode failed: {e}")),
        }
    }
    // known encoder outputs
    for (text, n, edges) in [
        ("@", 1, vec![]),
        ("A_", 2, vec![(0, 1)]),
        (
            "C~",
            4,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        ),
        ("DQc", 5, vec![(0, 2), (0, 4), (1, 3), (3, 4)]),
    ] {
        out.cases += 1;
        let g = Graph::from_edges(n, &edges)?;
        if graph6::encode(&g) != text {
            fail(&mut out, &g, format!("expected encoding {text}"));
        }
        if graph6::decode(text)? != g {
            fail(
                &mut out,
                &g,
                format!("decoding {text} gave the wrong graph"),
            );
        }
    }
    Ok(out)
}

fn complement_duality(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("complement-duality");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..200 {
        let n1 = 1 + (rng.gen::<u64>() % 6) as usize;
        let n2 = 1 + (rng.gen::<u64>() % 6) as usize;
        let a = random_graph(n1, 0.5, &mut rng);
        let b = random_graph(n2, 0.5, &mut rng);
        out.cases += 1;
        if a.complement().complement() != a {
            fail(&mut out, &a, "complement is not an involution");
        }
        let lhs = a.join(&b)?.complement();
        let rhs = a.complement().disjoint_union(&b.complement())?;
        if lhs != rhs {
            fail(&mut out, &a, "join/union duality failed");
        }
    }
    Ok(out)
}

fn connectivity_bounds(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("connectivity-bounds");
    let mut graphs = connected_non_complete(6, config);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for n in [7usize, 8] {
        for _ in 0..250 {
            let g = random_graph(n, 0.5, &mut rng);
            if g.is_connected() && !g.is_complete() {
                graphs.push(g);
            }
        }
    }
    for g in graphs {
        out.cases += 1;
        let alpha = algebraic_connectivity(&g)?.alpha;
        let v = g.vertex_connectivity()? as f64;
        let delta = g.min_degree() as f64;
        if alpha > v + DECISION_TOL || v > delta + DECISION_TOL {
            fail(
                &mut out,
                &g,
                format!("alpha {alpha} <= v {v} <= delta {delta} failed"),
            );
        }
    }
    Ok(out)
}

fn kernel_multiplicity(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("kernel-multiplicity");
    for g in small_graphs(6, config) {
        if g.n() == 0 {
            continue;
        }
        out.cases += 1;
        let zero_mult = laplacian_spectrum(&g)?.multiplicity_of(0.0);
        if zero_mult != g.component_count() {
            fail(
                &mut out,
                &g,
                format!(
                    "kernel multiplicity {zero_mult} differs from component count {}",
                    g.component_count()
                ),
            );
        }
    }
    Ok(out)
}

fn regular_duality(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("regular-duality");
    let mut graphs: Vec<Graph> = (2..=8).flat_map(connected_regular_graphs).collect();
    graphs.extend(
        config
            .corpus
            .iter()
            .filter(|g| g.regular_degree().is_some())
            .cloned(),
    );
    for g in graphs {
        let Some(r) = g.regular_degree() else {
            continue;
        };
        out.cases += 1;
        let lap = laplacian_spectrum(&g)?.values();
        let mut adj = adjacency_spectrum(&g)?.values();
        adj.reverse();
        let ok = lap
            .iter()
            .zip(&adj)
            .all(|(l, a)| (l - (r as f64 - a)).abs() <= 1e-8);
        if !ok {
            fail(
                &mut out,
                &g,
                "laplacian and reversed adjacency spectra disagree",
            );
        }
    }
    Ok(out)
}

fn join_spectrum_suite(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("join-spectrum");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..200 {
        let n1 = 1 + (rng.gen::<u64>() % 8) as usize;
        let n2 = 1 + (rng.gen::<u64>() % 8) as usize;
        let a = random_graph(n1, 0.4, &mut rng);
        let b = random_graph(n2, 0.6, &mut rng);
        out.cases += 1;
        let formula = join_spectrum(&laplacian_spectrum(&a)?, &laplacian_spectrum(&b)?);
        let joined = a.join(&b)?;
        let direct = laplacian_spectrum(&joined)?.values();
        if formula.len() != direct.len()
            || formula
                .iter()
                .zip(&direct)
                .any(|(f, d)| (f - d).abs() > 1e-8)
        {
            fail(
                &mut out,
                &joined,
                "join spectrum formula disagrees with eigensolve",
            );
        }
    }
    Ok(out)
}

fn fiedler_orthogonality(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("fiedler-orthogonality");
    for g in small_graphs(6, config) {
        if g.n() < 2 {
            continue;
        }
        out.cases += 1;
        let ac = algebraic_connectivity(&g)?;
        for b in &ac.basis {
            if b.iter().sum::<f64>().abs() > 1e-8 {
                fail(&mut out, &g, "basis vector not orthogonal to all-ones");
                break;
            }
        }
    }
    Ok(out)
}

fn imbalance_zero(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("imbalance-zero");
    for g in small_graphs(6, config) {
        if g.n() < 2 {
            continue;
        }
        out.cases += 1;
        let (i, _, _) = crate::sign_oracle::graph_imbalance(&g)?;
        if (i == 0) != !g.is_connected() {
            fail(
                &mut out,
                &g,
                format!("oracle imbalance {i} vs connected {}", g.is_connected()),
            );
        }
    }
    Ok(out)
}

fn imbalance_one_equivalence(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("imbalance-one-equivalence");
    for g in connected_non_complete(6, config) {
        out.cases += 1;
        let ac = algebraic_connectivity(&g)?;
        let numeric = (ac.alpha - g.min_degree() as f64).abs() <= DECISION_TOL;
        // classify_imbalance hard-errors if numeric and structural split
        let verdict = match classify_imbalance(&g) {
            Ok(cert) => cert.verdict,
            Err(e) => {
                fail(&mut out, &g, format!("classification inconsistency: {e}"));
                continue;
            }
        };
        let structural = verdict == Verdict::ImbalanceOne;
        if numeric != structural {
            fail(&mut out, &g, "numeric and structural tests disagree");
            continue;
        }
        if ac.multiplicity <= 3 {
            let (i, _, exact) = min_imbalance(&ac.basis)?;
            if !exact {
                fail(&mut out, &g, "exact enumeration demoted to inexact");
                continue;
            }
            if (i == 1) != structural {
                fail(
                    &mut out,
                    &g,
                    format!("oracle imbalance {i} vs structural {structural}"),
                );
            }
        }
    }
    Ok(out)
}

fn cut_vertex_structure(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("cut-vertex-structure");
    for g in connected_non_complete(6, config) {
        if classify_imbalance(&g)?.verdict != Verdict::ImbalanceOne {
            continue;
        }
        out.cases += 1;
        let cuts = g.cut_vertices()?;
        if cuts.len() > 1 {
            fail(
                &mut out,
                &g,
                format!("imbalance-1 graph with {} cut vertices", cuts.len()),
            );
            continue;
        }
        if cuts.len() == 1 {
            let v = cuts.as_slice()[0];
            let dominating = g.degree(v) == g.n() - 1;
            let pendant = (0..g.n()).any(|u| g.degree(u) == 1 && g.has_edge(u, v));
            if !dominating || !pendant {
                fail(&mut out, &g, "cut vertex is not dominating-with-pendant");
            }
        }
    }
    Ok(out)
}

fn oracle_implies_alpha_delta(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("oracle-implies-alpha-delta");
    for g in connected_non_complete(6, config) {
        let ac = algebraic_connectivity(&g)?;
        if ac.multiplicity > 3 {
            continue;
        }
        let (i, _, exact) = min_imbalance(&ac.basis)?;
        if !exact || i != 1 {
            continue;
        }
        out.cases += 1;
        if (ac.alpha - g.min_degree() as f64).abs() > DECISION_TOL {
            fail(&mut out, &g, "oracle imbalance 1 without alpha = delta");
        }
    }
    Ok(out)
}

fn multiplicity_formula(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("multiplicity-formula");
    let mut graphs = connected_non_complete(6, config);
    // random joins reaching order 9
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..100 {
        let n1 = 2 + (rng.gen::<u64>() % 4) as usize;
        let n2 = 1 + (rng.gen::<u64>() % 4) as usize;
        let a = random_graph(n1, 0.35, &mut rng);
        let b = random_graph(n2, 0.5, &mut rng);
        let j = a.join(&b)?;
        if j.n() <= 9 && !j.is_complete() {
            graphs.push(j);
        }
    }
    for g in graphs {
        let Some(d) = recognize_kjoin(&g).ok().flatten() else {
            continue;
        };
        out.cases += 1;
        let formula = fiedler_multiplicity(&d, g.n())?;
        let numeric = algebraic_connectivity(&g)?.multiplicity;
        if formula != numeric {
            fail(
                &mut out,
                &g,
                format!("formula {formula} vs numeric multiplicity {numeric}"),
            );
        }
    }
    Ok(out)
}

fn multiplicity_table(_config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("multiplicity-table");
    for ell in 1..=12usize {
        for k in 1..=ell {
            out.cases += 1;
            let closed = min_multiplicity(ell, k)?;
            let brute = (ell - k) + min_nontrivial_components(ell, k, ell + 3)?;
            if closed != brute {
                out.failures.push(format!(
                    "(ell={ell}, k={k}): closed form {closed} vs brute force {brute}"
                ));
            }
        }
    }
    for (ell, k, want) in [(16, 5, 13), (15, 4, 13)] {
        out.cases += 1;
        if min_multiplicity(ell, k)? != want {
            out.failures
                .push(format!("anchor (ell={ell}, k={k}) != {want}"));
        }
    }
    Ok(out)
}

fn extremal_generators(_config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("extremal-generators");
    for ell in 1..=10usize {
        for k in 1..=ell {
            out.cases += 1;
            let g = extremal_kjoin(ell, k)?;
            let min_degree_count = g.min_degree_vertices().len();
            if min_degree_count != ell {
                fail(
                    &mut out,
                    &g,
                    format!("(ell={ell},k={k}): {min_degree_count} minimum-degree vertices"),
                );
                continue;
            }
            match recognize_kjoin(&g)? {
                Some(d) if d.k == k => {}
                Some(d) => {
                    fail(
                        &mut out,
                        &g,
                        format!("(ell={ell},k={k}): recognized k = {}", d.k),
                    );
                    continue;
                }
                None => {
                    fail(
                        &mut out,
                        &g,
                        format!("(ell={ell},k={k}): imbalance is not 1"),
                    );
                    continue;
                }
            }
            let am = algebraic_connectivity(&g)?.multiplicity;
            let want = min_multiplicity(ell, k)?;
            if am != want {
                fail(
                    &mut out,
                    &g,
                    format!("(ell={ell},k={k}): multiplicity {am}, minimum is {want}"),
                );
            }
        }
    }
    // the even-case witnesses of the lower bound
    for ell in [4usize, 6, 8, 10] {
        out.cases += 1;
        let mut g = Graph::empty(2);
        for _ in 1..ell / 2 {
            g = g.join(&Graph::empty(2))?;
        }
        let am = algebraic_connectivity(&g)?.multiplicity;
        if am != ell / 2 {
            fail(
                &mut out,
                &g,
                format!("cocktail witness for ell={ell} has multiplicity {am}"),
            );
        }
    }
    Ok(out)
}

fn lower_bound_suite(_config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("multiplicity-lower-bound");
    for ell in 1..=10usize {
        out.cases += 1;
        let (bound, witnesses) = multiplicity_lower_bound(ell)?;
        let table_min = (1..=ell)
            .map(|k| min_multiplicity(ell, k))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .min()
            .expect("nonempty");
        if bound != table_min {
            out.failures.push(format!(
                "ell={ell}: bound {bound} vs table minimum {table_min}"
            ));
            continue;
        }
        for w in witnesses {
            if w.min_degree_vertices().len() != ell {
                fail(
                    &mut out,
                    &w,
                    format!("ell={ell}: witness has wrong minimum-degree count"),
                );
                continue;
            }
            let am = algebraic_connectivity(&w)?.multiplicity;
            if am != bound {
                fail(
                    &mut out,
                    &w,
                    format!("ell={ell}: witness multiplicity {am} != bound {bound}"),
                );
            }
            if classify_imbalance(&w)?.verdict != Verdict::ImbalanceOne {
                fail(
                    &mut out,
                    &w,
                    format!("ell={ell}: witness does not have imbalance 1"),
                );
            }
        }
    }
    Ok(out)
}

/// Whether a recognized 1-join is of the exceptional N_3 v G' shape with
/// alpha(G') strictly above the floor.
fn is_exception_family(g: &Graph, d: &join_theory::KJoinDecomposition) -> Result<bool> {
    if d.k != 1 || d.elementary[0].n() != 3 || !d.elementary[0].is_edgeless() {
        return Ok(false);
    }
    let Some(combined) = &d.combined else {
        return Ok(false);
    };
    let floor = 2.0 * g.min_degree() as f64 - g.n() as f64;
    let alpha = if combined.n() < 2 {
        0.0
    } else {
        algebraic_connectivity(combined)?.alpha
    };
    Ok(alpha > floor + DECISION_TOL)
}

fn imbalance_above_one(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("imbalance-above-one");
    let mut graphs = connected_non_complete(6, config);
    // explicit exception-family instances
    for m in 2..=5 {
        graphs.push(Graph::empty(3).join(&Graph::complete(m))?);
    }
    for g in graphs {
        let Some(d) = recognize_kjoin(&g).ok().flatten() else {
            continue;
        };
        let ac = algebraic_connectivity(&g)?;
        if ac.multiplicity > 3 {
            continue;
        }
        out.cases += 1;
        let cells = enumerate_sign_cells(&ac.basis)?;
        if !cells.exact {
            fail(&mut out, &g, "expected exact enumeration");
            continue;
        }
        let max_imbalance = cells.imbalances().into_iter().max().unwrap_or(0);
        if is_exception_family(&g, &d)? {
            if ac.multiplicity != 2 || max_imbalance > 1 {
                fail(
                    &mut out,
                    &g,
                    format!(
                        "exception family: multiplicity {} max imbalance {max_imbalance}",
                        ac.multiplicity
                    ),
                );
            }
        } else {
            let has_above_one = max_imbalance > 1;
            if (ac.multiplicity > 1) != has_above_one {
                fail(
                    &mut out,
                    &g,
                    format!(
                        "multiplicity {} vs max achievable imbalance {max_imbalance}",
                        ac.multiplicity
                    ),
                );
            }
        }
    }
    Ok(out)
}

fn zero_support(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("zero-support");
    // the eight-vertex example: pendant edges at v2 and v3, both joined
    // to four common vertices
    let example = Graph::from_edges(
        8,
        &[
            (0, 1),
            (2, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (1, 7),
            (2, 4),
            (2, 5),
            (2, 6),
            (2, 7),
        ],
    )?;
    out.cases += 1;
    let ac = algebraic_connectivity(&example)?;
    let support = common_zero_support(&ac.basis)?;
    let lambda_max = laplacian_spectrum(&example)?.largest().value;
    if support.as_slice() != [4, 5, 6, 7]
        || ac.multiplicity != 1
        || lambda_max >= example.n() as f64 - DECISION_TOL
    {
        fail(
            &mut out,
            &example,
            format!(
                "support {:?}, multiplicity {}, lambda_max {lambda_max}",
                support.as_slice(),
                ac.multiplicity
            ),
        );
    }
    // random joins satisfying the containment premise
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut accepted = 0;
    while accepted < 100 {
        let n2 = 1 + (rng.gen::<u64>() % 4) as usize;
        let n1 = n2 + 1 + (rng.gen::<u64>() % 4) as usize;
        let g1 = random_graph(n1, 0.4, &mut rng);
        let g2 = random_graph(n2, 0.6, &mut rng);
        let g = g1.join(&g2)?;
        let ac = algebraic_connectivity(&g)?;
        let alpha_g2 = if g2.n() < 2 {
            0.0
        } else {
            algebraic_connectivity(&g2)?.alpha
        };
        if alpha_g2 <= ac.alpha - n1 as f64 + DECISION_TOL {
            continue; // premise not satisfied
        }
        accepted += 1;
        out.cases += 1;
        let support = common_zero_support(&ac.basis)?;
        let contained = (n1..n1 + n2).all(|v| support.contains(v));
        if !contained {
            fail(
                &mut out,
                &g,
                "second factor escapes the common zero support",
            );
        }
    }
    Ok(out)
}

fn extreme_classification(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("extreme-classification");
    // decide_extreme hard-errors whenever its structural form disagrees
    // with the numeric (imbalance 1, simple eigenvalue) test, so the
    // sweep is the equivalence check
    for g in connected_non_complete(6, config) {
        out.cases += 1;
        match join_theory::decide_extreme(&g) {
            Ok(cert) => {
                if let Err(e) = cert.revalidate(&g) {
                    fail(
                        &mut out,
                        &g,
                        format!("certificate failed revalidation: {e}"),
                    );
                }
            }
            Err(e) => fail(&mut out, &g, format!("classification inconsistency: {e}")),
        }
    }
    Ok(out)
}

fn threshold_random(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("threshold-random");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..500 {
        let n = 2 + (rng.gen::<u64>() % 11) as usize;
        let seq = random_creation_sequence(n, true, &mut rng);
        let g = build_threshold(&seq)?;
        out.cases += 1;
        if !threshold_spectrum_check(&g)? {
            fail(
                &mut out,
                &g,
                format!("spectrum differs from conjugate degrees ({seq})"),
            );
        }
        if classify_imbalance(&g)?.verdict != Verdict::ImbalanceOne {
            fail(
                &mut out,
                &g,
                format!("connected threshold without imbalance 1 ({seq})"),
            );
        }
    }
    Ok(out)
}

fn threshold_structure(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("threshold-structure");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..300 {
        let n = 2 + (rng.gen::<u64>() % 11) as usize;
        let seq = random_creation_sequence(n, rng.gen::<bool>(), &mut rng);
        let g = build_threshold(&seq)?;
        if !g.is_connected() {
            // disconnected thresholds: all but at most one component are
            // singletons
            out.cases += 1;
            let components = g.connected_components();
            let singletons = components.iter().filter(|c| c.len() == 1).count();
            if singletons < components.len() - 1 {
                fail(&mut out, &g, format!("non-singleton split ({seq})"));
            }
            continue;
        }
        if g.is_complete() {
            continue;
        }
        out.cases += 1;
        // alpha = dominating count, multiplicity = singleton structure;
        // threshold_alpha_structure hard-errors on violation
        if let Err(e) = threshold_alpha_structure(&g) {
            fail(&mut out, &g, format!("{e} ({seq})"));
        }
    }
    Ok(out)
}

fn threshold_roundtrip(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("threshold-roundtrip");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..300 {
        let n = 1 + (rng.gen::<u64>() % 12) as usize;
        let seq = random_creation_sequence(n, rng.gen::<bool>(), &mut rng);
        let g = build_threshold(&seq)?;
        out.cases += 1;
        let Some(recovered) = is_threshold(&g) else {
            fail(
                &mut out,
                &g,
                format!("built threshold graph not recognized ({seq})"),
            );
            continue;
        };
        let h = build_threshold(&recovered)?;
        let mut dg = g.degrees();
        let mut dh = h.degrees();
        dg.sort_unstable();
        dh.sort_unstable();
        if dg != dh {
            fail(
                &mut out,
                &g,
                format!("peel/rebuild changed the degree sequence ({seq})"),
            );
        }
    }
    Ok(out)
}

fn three_eigenvalues(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("three-eigenvalues");
    for g in connected_non_complete(6, config) {
        out.cases += 1;
        let recognized = match three_eigs::recognize(&g) {
            Ok(r) => r,
            Err(e) => {
                fail(&mut out, &g, format!("recognition inconsistency: {e}"));
                continue;
            }
        };
        let spectral =
            three_eigs::spectral_triple_status(&g)? == three_eigs::SpectralTriple::WithLargestN;
        if recognized.is_some() != spectral {
            fail(&mut out, &g, "combinatorial and spectral tests disagree");
            continue;
        }
        if let Some(form) = recognized {
            let checks = three_eigs::corollary_checks(&form, &g)?;
            if checks.iter().any(|c| !c.passed) {
                fail(&mut out, &g, format!("corollary checks failed: {checks:?}"));
            }
            let numeric = algebraic_connectivity(&g)?;
            if (numeric.alpha - form.alpha() as f64).abs() > DECISION_TOL
                || numeric.multiplicity != form.multiplicity()
                || g.n() != form.order()
            {
                fail(&mut out, &g, "parameter identities failed");
            }
        }
    }
    Ok(out)
}

fn cycle_imbalance(_config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("cycle-imbalance");
    for n in 3..=12usize {
        out.cases += 1;
        let cycle = Graph::cycle(n)?;
        let basis = adjacency_spectrum(&cycle)?.smallest().basis.clone();
        let (i, _, exact) = min_imbalance(&basis)?;
        if !exact || i != n / 2 {
            fail(
                &mut out,
                &cycle,
                format!("oracle {i} (exact {exact}) vs floor(n/2) = {}", n / 2),
            );
        }
        let data = cycle_least_eigen(n)?;
        if data.value != n / 2 {
            fail(
                &mut out,
                &cycle,
                "explicit eigenvector data has the wrong value",
            );
        }
    }
    for n in [4usize, 5] {
        out.cases += 1;
        if cycle_least_eigen(n)?.value != 2 {
            out.failures
                .push(format!("cycle on {n} vertices should give exactly 2"));
        }
    }
    Ok(out)
}

fn regular_imbalance_two(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("regular-imbalance-two");
    let mut graphs: Vec<Graph> = (2..=8).flat_map(connected_regular_graphs).collect();
    graphs.extend(
        config
            .corpus
            .iter()
            .filter(|g| g.n() >= 2 && g.regular_degree().is_some() && g.is_connected())
            .cloned(),
    );
    for g in graphs {
        out.cases += 1;
        let cert = match decide_imbalance_two(&g) {
            Ok(c) => c,
            Err(e) => {
                fail(&mut out, &g, format!("decision error: {e}"));
                continue;
            }
        };
        if g.n() < 2 {
            continue;
        }
        let ac = algebraic_connectivity(&g)?;
        if ac.multiplicity <= 3 {
            let (i, _, exact) = min_imbalance(&ac.basis)?;
            if !exact {
                fail(&mut out, &g, "exact enumeration demoted to inexact");
                continue;
            }
            if cert.yes != (i == 2) {
                fail(
                    &mut out,
                    &g,
                    format!("verdict {} vs oracle imbalance {i}", cert.yes),
                );
            }
        } else if cert.yes {
            // one-sided: a yes must be confirmed by a found witness
            let (i, _, _) = min_imbalance(&ac.basis)?;
            if i != 2 {
                fail(
                    &mut out,
                    &g,
                    format!("yes verdict but best found imbalance is {i}"),
                );
            }
        }
    }
    Ok(out)
}

fn regular_identities(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("regular-identities");
    let mut graphs: Vec<Graph> = (2..=8).flat_map(connected_regular_graphs).collect();
    graphs.extend(
        config
            .corpus
            .iter()
            .filter(|g| g.n() >= 2 && g.regular_degree().is_some() && g.is_connected())
            .cloned(),
    );
    for g in graphs {
        let Some(r) = g.regular_degree() else {
            continue;
        };
        if g.n() < 2 {
            continue;
        }
        out.cases += 1;
        let alpha = algebraic_connectivity(&g)?.alpha;
        let mu2 = adjacency_spectrum(&g)?.values()[1];
        let mu_min_complement = {
            let complement = g.complement();
            let comps = complement.connected_components();
            let mut mu = f64::INFINITY;
            for set in comps {
                let h = complement.induced(set.as_slice())?;
                let value = if h.n() == 1 {
                    0.0
                } else {
                    adjacency_spectrum(&h)?.smallest().value
                };
                mu = mu.min(value);
            }
            mu
        };
        if (alpha - (r as f64 - mu2)).abs() > 1e-8 {
            fail(&mut out, &g, "alpha = r - mu_2 failed");
        }
        if (mu2 - (-1.0 - mu_min_complement)).abs() > 1e-8 {
            fail(&mut out, &g, "mu_2 = -1 - mu_min(complement) failed");
        }
    }
    Ok(out)
}

fn least_eigenvalue_floor(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("least-eigenvalue-floor");
    let mut graphs: Vec<Graph> = (2..=8).flat_map(connected_regular_graphs).collect();
    graphs.extend(
        config
            .corpus
            .iter()
            .filter(|g| g.n() >= 2 && g.regular_degree().is_some() && g.is_connected())
            .cloned(),
    );
    for g in graphs {
        if g.n() < 2 {
            continue;
        }
        let mu_min = adjacency_spectrum(&g)?.smallest().value;
        if mu_min <= -2.0 + DECISION_TOL {
            continue;
        }
        out.cases += 1;
        let odd_cycle = g.regular_degree() == Some(2) && g.n() % 2 == 1;
        if !g.is_complete() && !odd_cycle {
            fail(
                &mut out,
                &g,
                format!("least eigenvalue {mu_min} above -2 on unexpected graph"),
            );
        }
    }
    Ok(out)
}

fn c4_eigenvector_suite(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("c4-eigenvector");
    let mut graphs: Vec<Graph> = (2..=8).flat_map(connected_regular_graphs).collect();
    graphs.extend(
        config
            .corpus
            .iter()
            .filter(|g| g.n() >= 2 && g.regular_degree().is_some() && g.is_connected())
            .cloned(),
    );
    for g in graphs {
        if g.n() < 2 {
            continue;
        }
        let mu_min = adjacency_spectrum(&g)?.smallest().value;
        if (mu_min + 2.0).abs() > DECISION_TOL {
            continue;
        }
        let Some(cycle) = g.find_induced_c4() else {
            continue;
        };
        out.cases += 1;
        if let Err(e) = c4_eigenvector(&g, cycle) {
            fail(&mut out, &g, format!("4-cycle eigenvector failed: {e}"));
        }
    }
    Ok(out)
}

fn augmentation_suite(config: &HarnessConfig) -> Result<SuiteOutcome> {
    let mut out = outcome("augmentation");
    for g in small_graphs(5, config) {
        if g.n() < 3 || !g.is_connected() {
            continue;
        }
        if classify_imbalance(&g)?.verdict == Verdict::ImbalanceOne {
            continue;
        }
        out.cases += 1;
        let (augmented, added) = join_theory::augment_to_imbalance_one(&g)?;
        let is_join = join_theory::join_factorization(&g)?.len() >= 2;
        let expected = if is_join { 1 } else { 2 };
        if added != expected {
            fail(
                &mut out,
                &g,
                format!("added {added} vertices, expected {expected}"),
            );
            continue;
        }
        if classify_imbalance(&augmented)?.verdict != Verdict::ImbalanceOne {
            fail(&mut out, &g, "augmented graph does not have imbalance 1");
            continue;
        }
        let original: Vec<usize> = (0..g.n()).collect();
        if augmented.induced(&original)? != g {
            fail(
                &mut out,
                &g,
                "augmentation does not preserve the induced subgraph",
            );
        }
    }
    Ok(out)
}
