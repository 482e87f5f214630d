//! Connected graphs with exactly three distinct Laplacian eigenvalues
//! 0, alpha, n: recognition as K_p v (v^q N_r) and the resulting
//! parameter identities for alpha, the Fiedler multiplicity, and the
//! clique number.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::join_theory::{self, classify_imbalance, Check, Verdict};
use crate::spectra::{algebraic_connectivity, laplacian_spectrum, DECISION_TOL};

/// The parameters of K_p v (v_{i=1}^q N_r).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThreeEigsForm {
    /// Order of the complete part (>= 0).
    pub p: usize,
    /// Number of empty parts (>= 1).
    pub q: usize,
    /// Order of each empty part (>= 2).
    pub r: usize,
}

impl ThreeEigsForm {
    pub fn order(&self) -> usize {
        self.q * self.r + self.p
    }

    pub fn alpha(&self) -> usize {
        self.r * (self.q - 1) + self.p
    }

    pub fn multiplicity(&self) -> usize {
        self.q * (self.r - 1)
    }

    pub fn clique_number(&self) -> usize {
        self.p + self.q
    }

    pub fn build(&self) -> Result<Graph> {
        if self.q < 1 || self.r < 2 || self.p + self.q < 2 {
            return Err(Error::InvalidParameter(format!("invalid form {self:?}")));
        }
        let mut g = Graph::empty(self.r);
        for _ in 1..self.q {
            g = g.join(&Graph::empty(self.r))?;
        }
        if self.p > 0 {
            g = Graph::complete(self.p).join(&g)?;
        }
        Ok(g)
    }
}

/// Spectral status used as the cross-check: does the graph have exactly
/// three distinct Laplacian eigenvalues, and is the largest equal to n?
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectralTriple {
    /// Three distinct values 0 < alpha < n with the largest exactly n.
    WithLargestN,
    /// Three distinct values but the largest differs from n.
    LargestBelowN,
    /// Not a three-eigenvalue graph.
    Other,
}

pub fn spectral_triple_status(g: &Graph) -> Result<SpectralTriple> {
    let spectrum = laplacian_spectrum(g)?;
    if spectrum.groups.len() != 3 {
        return Ok(SpectralTriple::Other);
    }
    let largest = spectrum.largest().value;
    if (largest - g.n() as f64).abs() <= DECISION_TOL {
        Ok(SpectralTriple::WithLargestN)
    } else {
        Ok(SpectralTriple::LargestBelowN)
    }
}

/// Recognize K_p v (v^q N_r) combinatorially: every join factor is K_1 or
/// an empty graph, all empty factors share one order r >= 2. Cross-checked
/// against the spectral test; disagreement is an internal error.
pub fn recognize(g: &Graph) -> Result<Option<ThreeEigsForm>> {
    if !g.is_connected() || g.is_complete() {
        return Err(Error::Precondition(
            "three-eigenvalue recognition needs a connected non-complete graph".into(),
        ));
    }
    let factors = join_factorization_shapes(g)?;
    let combinatorial = match factors {
        Some((p, q, r)) if p + q >= 2 && q >= 1 => Some(ThreeEigsForm { p, q, r }),
        _ => None,
    };
    let spectral = spectral_triple_status(g)? == SpectralTriple::WithLargestN;
    if combinatorial.is_some() != spectral {
        return Err(Error::Inconsistency(format!(
            "three-eigenvalue recognition: combinatorial {} vs spectral {spectral}",
            combinatorial.is_some()
        )));
    }
    if let Some(form) = &combinatorial {
        let ac = algebraic_connectivity(g)?;
        if (ac.alpha - form.alpha() as f64).abs() > DECISION_TOL
            || ac.multiplicity != form.multiplicity()
        {
            return Err(Error::Inconsistency(
                "three-eigenvalue parameter identities failed".into(),
            ));
        }
    }
    Ok(combinatorial)
}

/// Classify the factors: Some((p, q, r)) when all are K_1 or N_r with a
/// common r >= 2.
fn join_factorization_shapes(g: &Graph) -> Result<Option<(usize, usize, usize)>> {
    let factors = join_factorization_graphs(g)?;
    let mut p = 0usize;
    let mut q = 0usize;
    let mut r: Option<usize> = None;
    for f in &factors {
        if f.n() == 1 {
            p += 1;
        } else if f.is_edgeless() {
            match r {
                None => r = Some(f.n()),
                Some(order) if order == f.n() => {}
                Some(_) => return Ok(None),
            }
            q += 1;
        } else {
            return Ok(None);
        }
    }
    match r {
        Some(r) => Ok(Some((p, q, r))),
        None => Ok(None), // all factors K_1 means complete, excluded by pre
    }
}

fn join_factorization_graphs(g: &Graph) -> Result<Vec<Graph>> {
    Ok(join_theory::join_factorization(g)?
        .into_iter()
        .map(|(f, _)| f)
        .collect())
}

/// The two downstream identities for a recognized graph: the imbalance is
/// 1, and the clique number is n minus the Fiedler multiplicity.
pub fn corollary_checks(form: &ThreeEigsForm, g: &Graph) -> Result<Vec<Check>> {
    let imbalance = classify_imbalance(g)?.verdict;
    let clique = g.clique_number();
    Ok(vec![
        Check::new("imbalance one", imbalance == Verdict::ImbalanceOne),
        Check::new(
            "clique number equals n minus multiplicity",
            clique == form.order() - form.multiplicity(),
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_forms() {
        // K_2 v N_3 v N_3: p=2, q=2, r=3
        let g = Graph::complete(2)
            .join(&Graph::empty(3).join(&Graph::empty(3)).unwrap())
            .unwrap();
        let form = recognize(&g).unwrap().unwrap();
        assert_eq!(form, ThreeEigsForm { p: 2, q: 2, r: 3 });
        assert_eq!(form.order(), 8);
        assert_eq!(form.alpha(), 5);
        assert_eq!(form.multiplicity(), 4);
        assert_eq!(form.clique_number(), 4);
        assert_eq!(form.build().unwrap().n(), 8);
        assert!(form.build().unwrap().is_isomorphic(&g));

        // C_4 = N_2 v N_2: p=0, q=2, r=2
        let c4 = Graph::cycle(4).unwrap();
        let form = recognize(&c4).unwrap().unwrap();
        assert_eq!(form, ThreeEigsForm { p: 0, q: 2, r: 2 });
        assert_eq!(form.alpha(), 2);
        assert_eq!(form.multiplicity(), 2);

        // star K_1 v N_4: spectrum {5, 1, 1, 1, 0}
        let star = Graph::star(5).unwrap();
        let form = recognize(&star).unwrap().unwrap();
        assert_eq!(form, ThreeEigsForm { p: 1, q: 1, r: 4 });
        assert_eq!(form.alpha(), 1);
        assert_eq!(form.multiplicity(), 3);

        assert!(recognize(&Graph::cycle(5).unwrap()).unwrap().is_none());
        assert!(recognize(&Graph::path(4).unwrap()).unwrap().is_none());
        assert!(recognize(&Graph::complete(4)).is_err());
    }

    #[test]
    fn corollaries_hold() {
        for g in [
            Graph::cycle(4).unwrap(),
            Graph::star(5).unwrap(),
            Graph::complete(2)
                .join(&Graph::empty(3).join(&Graph::empty(3)).unwrap())
                .unwrap(),
        ] {
            let form = recognize(&g).unwrap().unwrap();
            let checks = corollary_checks(&form, &g).unwrap();
            assert!(checks.iter().all(|c| c.passed), "{g:?}: {checks:?}");
        }
    }

    #[test]
    fn spectral_status() {
        assert_eq!(
            spectral_triple_status(&Graph::cycle(4).unwrap()).unwrap(),
            SpectralTriple::WithLargestN
        );
        // C_5 has three distinct Laplacian values, but the largest is
        // below n (it is not a join)
        assert_eq!(
            spectral_triple_status(&Graph::cycle(5).unwrap()).unwrap(),
            SpectralTriple::LargestBelowN
        );
        assert_eq!(
            spectral_triple_status(&Graph::path(4).unwrap()).unwrap(),
            SpectralTriple::Other
        );
        // K_2: two distinct values only
        assert_eq!(
            spectral_triple_status(&Graph::complete(2)).unwrap(),
            SpectralTriple::Other
        );
    }
}
