//! Deciding imbalance 2 for connected regular graphs.
//!
//! For an r-regular graph the Fiedler eigenspace coincides with the
//! eigenspace of the least adjacency eigenvalue of the complement, so the
//! decision reduces to the complement components attaining that minimum:
//! imbalance 2 holds iff one of them is a 5-cycle with the minimum in
//! (-2, -1), or attains -2 and contains an induced 4-cycle. Also provides
//! the necessary-condition screen for imbalance-2 witnesses, the cycle
//! formulas, and the explicit ±1-on-a-4-cycle eigenvector.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::join_theory::Check;
use crate::spectra::{
    adjacency_matrix, adjacency_spectrum, algebraic_connectivity, eigen_residual, laplacian_matrix,
    sign_profile, DECISION_TOL, RESIDUAL_TOL, SIGN_TOL,
};

/// Which branch of the characterization a yes-instance satisfies.
#[derive(Clone, Debug, PartialEq)]
pub enum I2Branch {
    /// The witness component is C_5 and the least eigenvalue lies in
    /// (-2, -1).
    FiveCycle,
    /// The least eigenvalue is -2 and the witness component contains an
    /// induced 4-cycle (vertices in host labelling, cycle order).
    FourCycle { cycle: [usize; 4] },
}

/// Decision record for the regular imbalance-2 test.
#[derive(Clone, Debug)]
pub struct RegularI2Certificate {
    pub yes: bool,
    /// Witness complement component (host labelling), when yes.
    pub component: Option<VertexSet>,
    pub branch: Option<I2Branch>,
    /// Least adjacency eigenvalue over the complement.
    pub mu_min: f64,
    /// alpha(G) recomputed spectrally; the identity
    /// alpha = r + 1 + mu_min holds within tolerance.
    pub alpha: f64,
    pub checks: Vec<Check>,
}

/// Necessary-condition screen for a Fiedler vector with exactly two
/// negative entries: the negative pair is adjacent, 0 < delta - alpha
/// <= 1, at least one negative vertex has minimum degree (both when
/// delta - alpha = 1), and for regular graphs 0 < mu_2 <= 1 with a
/// matching of size two when mu_2 = 1.
pub fn screen_imbalance_two(g: &Graph, witness: &[f64]) -> Result<Vec<Check>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if witness.len() != g.n() {
        return Err(Error::MalformedWitness("length mismatch".into()));
    }
    let ac = algebraic_connectivity(g)?;
    let scale = 1.0 + laplacian_matrix(g).inf_norm();
    let residual = eigen_residual(&laplacian_matrix(g), witness, ac.alpha);
    if residual > DECISION_TOL * scale {
        return Err(Error::MalformedWitness("not a Fiedler vector".into()));
    }
    let profile = sign_profile(witness, SIGN_TOL)?;
    if profile.minus.len() != 2 {
        return Err(Error::MalformedWitness(format!(
            "expected exactly two negative entries, got {}",
            profile.minus.len()
        )));
    }
    let negatives: Vec<usize> = profile.minus.iter().collect();
    let (a, b) = (negatives[0], negatives[1]);
    let delta = g.min_degree() as f64;
    let gap = delta - ac.alpha;
    let mut checks = vec![
        Check::new("negative pair adjacent", g.has_edge(a, b)),
        Check::new(
            "0 < delta - alpha <= 1",
            gap > DECISION_TOL && gap <= 1.0 + DECISION_TOL,
        ),
        Check::new(
            "a negative vertex has minimum degree",
            g.degree(a) as f64 == delta || g.degree(b) as f64 == delta,
        ),
    ];
    if (gap - 1.0).abs() <= DECISION_TOL {
        checks.push(Check::new(
            "both negative vertices have minimum degree",
            g.degree(a) as f64 == delta && g.degree(b) as f64 == delta,
        ));
    }
    if g.regular_degree().is_some() {
        let mu2 = adjacency_spectrum(g)?.values()[1];
        checks.push(Check::new(
            "0 < mu_2 <= 1",
            mu2 > DECISION_TOL && mu2 <= 1.0 + DECISION_TOL,
        ));
        if (mu2 - 1.0).abs() <= DECISION_TOL {
            checks.push(Check::new(
                "matching of size two",
                has_two_disjoint_edges(g),
            ));
        }
    }
    Ok(checks)
}

fn has_two_disjoint_edges(g: &Graph) -> bool {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in edges.iter().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                return true;
            }
        }
    }
    false
}

/// Decide imbalance 2 for a connected regular graph, with a certified
/// complement-component witness.
pub fn decide_imbalance_two(g: &Graph) -> Result<RegularI2Certificate> {
    let Some(r) = g.regular_degree() else {
        return Err(Error::Precondition(
            "imbalance-2 decision needs a regular graph".into(),
        ));
    };
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Err(Error::TooSmall { min: 2, got: g.n() });
    }
    let complement = g.complement();
    let components = complement.connected_components();
    // least adjacency eigenvalue per component, and the global minimum
    let mut mu_values = Vec::with_capacity(components.len());
    for set in &components {
        let h = complement.induced(set.as_slice())?;
        let mu = if h.n() == 1 {
            0.0
        } else {
            adjacency_spectrum(&h)?.smallest().value
        };
        mu_values.push(mu);
    }
    let mu_min = mu_values.iter().copied().fold(f64::INFINITY, f64::min);
    let alpha = algebraic_connectivity(g)?.alpha;
    let identity_ok = (alpha - (r as f64 + 1.0 + mu_min)).abs() <= DECISION_TOL;

    let mut verdict_component = None;
    let mut branch = None;
    for (set, &mu) in components.iter().zip(&mu_values) {
        if (mu - mu_min).abs() > DECISION_TOL {
            continue;
        }
        let h = complement.induced(set.as_slice())?;
        // branch 1: the component is a 5-cycle with mu in (-2, -1)
        let is_c5 = h.n() == 5 && h.regular_degree() == Some(2) && h.is_connected();
        if is_c5 && mu > -2.0 + DECISION_TOL && mu < -1.0 - DECISION_TOL {
            verdict_component = Some(set.clone());
            branch = Some(I2Branch::FiveCycle);
            break;
        }
        // branch 2: mu = -2 and an induced 4-cycle. Cocktail party
        // components qualify too: their -2 eigenvectors constant on
        // non-adjacent pairs realize imbalance exactly 2, and every
        // regular join with least eigenvalue -2 contains an induced
        // 4-cycle, so no separate exclusion is needed.
        if (mu + 2.0).abs() <= DECISION_TOL {
            if let Some(local) = h.find_induced_c4() {
                let hosts: Vec<usize> = set.iter().collect();
                let cycle = [
                    hosts[local[0]],
                    hosts[local[1]],
                    hosts[local[2]],
                    hosts[local[3]],
                ];
                verdict_component = Some(set.clone());
                branch = Some(I2Branch::FourCycle { cycle });
                break;
            }
        }
    }
    let yes = branch.is_some();
    let checks = vec![
        Check::new("alpha = r + 1 + mu_min", identity_ok),
        Check::new("graph is regular and connected", true),
    ];
    if !identity_ok {
        return Err(Error::Inconsistency(
            "regular eigenvalue identity failed".into(),
        ));
    }
    Ok(RegularI2Certificate {
        yes,
        component: verdict_component,
        branch,
        mu_min,
        alpha,
        checks,
    })
}

/// The least-adjacency-eigenvalue data of a cycle: the minimum achievable
/// imbalance over that eigenspace is floor(n/2), realized by explicit
/// eigenvectors (one alternating vector for even n, a cosine/sine pair
/// for odd n).
#[derive(Clone, Debug)]
pub struct CycleLeastEigen {
    pub value: usize,
    pub mu: f64,
    pub vectors: Vec<Vec<f64>>,
}

pub fn cycle_least_eigen(n: usize) -> Result<CycleLeastEigen> {
    if n < 3 {
        return Err(Error::TooSmall { min: 3, got: n });
    }
    let pi = std::f64::consts::PI;
    let mu = 2.0 * (2.0 * pi * (n / 2) as f64 / n as f64).cos();
    let vectors: Vec<Vec<f64>> = if n.is_multiple_of(2) {
        vec![(0..n)
            .map(|j| if j % 2 == 0 { 1.0 } else { -1.0 })
            .collect()]
    } else {
        let v = (0..n)
            .map(|j| (-1.0f64).powi(j as i32) * (pi * j as f64 / n as f64).cos())
            .collect();
        let w = (0..n)
            .map(|j| (-1.0f64).powi(j as i32) * (pi * j as f64 / n as f64).sin())
            .collect();
        vec![v, w]
    };
    let cycle = Graph::cycle(n)?;
    let a = adjacency_matrix(&cycle);
    let scale = 1.0 + a.inf_norm();
    for x in &vectors {
        if eigen_residual(&a, x, mu) > RESIDUAL_TOL * scale {
            return Err(Error::Inconsistency(
                "cycle eigenvector residual too large".into(),
            ));
        }
    }
    Ok(CycleLeastEigen {
        value: n / 2,
        mu,
        vectors,
    })
}

/// The vector +1, -1, +1, -1 on an induced 4-cycle of a connected regular
/// graph with least adjacency eigenvalue -2 (zeros elsewhere) is an
/// eigenvector for -2. Errors when the residual check fails, which
/// signals a least eigenvalue other than -2 or a non-induced cycle.
pub fn c4_eigenvector(h: &Graph, cycle: [usize; 4]) -> Result<Vec<f64>> {
    if h.regular_degree().is_none() || !h.is_connected() {
        return Err(Error::Precondition(
            "needs a connected regular graph".into(),
        ));
    }
    let [a, b, c, d] = cycle;
    let induced = h.has_edge(a, b)
        && h.has_edge(b, c)
        && h.has_edge(c, d)
        && h.has_edge(d, a)
        && !h.has_edge(a, c)
        && !h.has_edge(b, d);
    if !induced {
        return Err(Error::Precondition(
            "cycle is not an induced 4-cycle".into(),
        ));
    }
    let mu_min = adjacency_spectrum(h)?.smallest().value;
    if (mu_min + 2.0).abs() > DECISION_TOL {
        return Err(Error::Inconsistency(format!(
            "least adjacency eigenvalue is {mu_min}, not -2"
        )));
    }
    let mut x = vec![0.0; h.n()];
    x[a] = 1.0;
    x[b] = -1.0;
    x[c] = 1.0;
    x[d] = -1.0;
    let m = adjacency_matrix(h);
    let scale = 1.0 + m.inf_norm();
    if eigen_residual(&m, &x, -2.0) > RESIDUAL_TOL * scale {
        return Err(Error::Inconsistency(
            "4-cycle vector residual exceeds tolerance".into(),
        ));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign_oracle::{enumerate_sign_cells, graph_imbalance};
    use crate::spectra::fiedler_eigenspace;

    pub fn petersen() -> Graph {
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

    /// Rook's graph on a 3x3 board: the Cartesian product of two
    /// triangles.
    pub fn rook_3x3() -> Graph {
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

    #[test]
    fn decide_named_instances() {
        // C_5: self-complementary; witness component is itself a 5-cycle
        let cert = decide_imbalance_two(&Graph::cycle(5).unwrap()).unwrap();
        assert!(cert.yes);
        assert_eq!(cert.branch, Some(I2Branch::FiveCycle));
        assert!(cert.mu_min > -2.0 && cert.mu_min < -1.0);

        // complement of the rook's graph: mu_min(rook) = -2, not cocktail,
        // has an induced 4-cycle
        let cert = decide_imbalance_two(&rook_3x3().complement()).unwrap();
        assert!(cert.yes);
        assert!(matches!(cert.branch, Some(I2Branch::FourCycle { .. })));
        assert!((cert.mu_min + 2.0).abs() < 1e-9);

        // complement of Petersen: the complement component is Petersen,
        // girth 5, no induced 4-cycle
        let cert = decide_imbalance_two(&petersen().complement()).unwrap();
        assert!(!cert.yes);

        // complete graphs and cocktail parties have imbalance 1
        assert!(!decide_imbalance_two(&Graph::complete(6)).unwrap().yes);
        assert!(
            !decide_imbalance_two(&Graph::cocktail(4).unwrap())
                .unwrap()
                .yes
        );

        assert!(decide_imbalance_two(&Graph::path(4).unwrap()).is_err());
    }

    #[test]
    fn verdicts_match_oracle() {
        // C_5 yes: oracle finds exactly 2
        let (i, _, exact) = graph_imbalance(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!((i, exact), (2, true));
        // Petersen itself: its complement component is the rook-like
        // triangular graph which contains an induced C4, so imbalance 2
        let cert = decide_imbalance_two(&petersen()).unwrap();
        assert!(cert.yes);
        let (_, basis) = fiedler_eigenspace(&petersen()).unwrap();
        let cells = enumerate_sign_cells(&basis).unwrap();
        assert!(cells.imbalances().contains(&2));
        assert!(!cells.imbalances().contains(&1));
    }

    #[test]
    fn screen_accepts_and_rejects() {
        // C_5 witness from the exact oracle, oriented so the minority
        // side is negative
        let c5 = Graph::cycle(5).unwrap();
        let (_, basis) = fiedler_eigenspace(&c5).unwrap();
        let (i, mut witness, _) = crate::sign_oracle::min_imbalance(&basis).unwrap();
        assert_eq!(i, 2);
        let profile = sign_profile(&witness, SIGN_TOL).unwrap();
        if profile.minus.len() != 2 {
            for x in witness.iter_mut() {
                *x = -*x;
            }
        }
        let checks = screen_imbalance_two(&c5, &witness).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");

        // complement of rook: delta - alpha = 1, all degrees minimal
        let g = rook_3x3().complement();
        let cycle = rook_3x3().find_induced_c4().unwrap();
        let x = c4_eigenvector(&rook_3x3(), cycle).unwrap();
        // the same vector is a Fiedler vector of the complement
        let checks = screen_imbalance_two(&g, &x).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");

        // a witness with three negative entries is malformed
        let bad = vec![-1.0, -1.0, -1.0, 1.0, 2.0];
        assert!(matches!(
            screen_imbalance_two(&c5, &bad),
            Err(Error::MalformedWitness(_))
        ));
    }

    #[test]
    fn cycle_values() {
        let data = cycle_least_eigen(4).unwrap();
        assert_eq!(data.value, 2);
        assert_eq!(data.vectors, vec![vec![1.0, -1.0, 1.0, -1.0]]);
        assert_eq!(cycle_least_eigen(5).unwrap().value, 2);
        let data = cycle_least_eigen(7).unwrap();
        assert_eq!(data.value, 3);
        assert_eq!(data.vectors.len(), 2);
        assert!(cycle_least_eigen(2).is_err());
    }

    #[test]
    fn c4_vectors() {
        let c4 = Graph::cycle(4).unwrap();
        let x = c4_eigenvector(&c4, [0, 1, 2, 3]).unwrap();
        assert_eq!(x, vec![1.0, -1.0, 1.0, -1.0]);

        let rook = rook_3x3();
        let cycle = rook.find_induced_c4().unwrap();
        c4_eigenvector(&rook, cycle).unwrap();

        let cp3 = Graph::cocktail(3).unwrap();
        let cycle = cp3.find_induced_c4().unwrap();
        c4_eigenvector(&cp3, cycle).unwrap();

        // K_{3,3} has an induced 4-cycle but least eigenvalue -3
        let k33 = Graph::empty(3).join(&Graph::empty(3)).unwrap();
        let cycle = k33.find_induced_c4().unwrap();
        assert!(matches!(
            c4_eigenvector(&k33, cycle),
            Err(Error::Inconsistency(_))
        ));

        // non-induced cycle rejected
        assert!(c4_eigenvector(&Graph::complete(4), [0, 1, 2, 3]).is_err());
    }
}
