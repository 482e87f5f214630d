//! Threshold graphs: construction from creation sequences, recognition by
//! reverse peeling, the conjugate-degree-sequence spectrum identity, and
//! the algebraic-connectivity structure of connected threshold graphs.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::spectra::{
    algebraic_connectivity, laplacian_matrix, laplacian_spectrum, DECISION_TOL, RESIDUAL_TOL,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CreationOp {
    Isolated,
    Dominating,
}

/// A threshold-graph build recipe: the first entry is the seed vertex
/// (conventionally recorded as isolated), each later op adds one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CreationSequence(pub Vec<CreationOp>);

impl CreationSequence {
    pub fn parse(text: &str) -> Result<CreationSequence> {
        let ops = text
            .trim()
            .chars()
            .map(|c| match c {
                'i' | 'I' => Ok(CreationOp::Isolated),
                'd' | 'D' => Ok(CreationOp::Dominating),
                other => Err(Error::InvalidParameter(format!(
                    "creation sequence characters must be i or d, got {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        if ops.is_empty() {
            return Err(Error::InvalidParameter("empty creation sequence".into()));
        }
        Ok(CreationSequence(ops))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The built graph is connected iff the final op dominates (n >= 2).
    pub fn builds_connected(&self) -> bool {
        self.0.len() == 1 || self.0.last() == Some(&CreationOp::Dominating)
    }
}

impl std::fmt::Display for CreationSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for op in &self.0 {
            f.write_str(match op {
                CreationOp::Isolated => "i",
                CreationOp::Dominating => "d",
            })?;
        }
        Ok(())
    }
}

/// Build the threshold graph of a creation sequence; vertex labels follow
/// creation order.
pub fn build_threshold(seq: &CreationSequence) -> Result<Graph> {
    if seq.is_empty() {
        return Err(Error::InvalidParameter("empty creation sequence".into()));
    }
    let n = seq.len();
    let mut g = Graph::new(n)?;
    for (v, op) in seq.0.iter().enumerate() {
        if *op == CreationOp::Dominating {
            for u in 0..v {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Recognize a threshold graph by reverse peeling: repeatedly strip a
/// dominating vertex (preferred) or an isolated vertex; `None` when
/// neither exists. The returned sequence is in creation order.
pub fn is_threshold(g: &Graph) -> Option<CreationSequence> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let mut alive: Vec<usize> = (0..n).collect();
    let mut degrees: Vec<usize> = g.degrees();
    let mut peeled: Vec<CreationOp> = Vec::new();
    while alive.len() > 1 {
        let m = alive.len();
        let dominating = alive.iter().position(|&v| degrees[v] == m - 1);
        let isolated = alive.iter().position(|&v| degrees[v] == 0);
        let (pos, op) = match (dominating, isolated) {
            (Some(p), _) => (p, CreationOp::Dominating),
            (None, Some(p)) => (p, CreationOp::Isolated),
            (None, None) => return None,
        };
        let v = alive.swap_remove(pos);
        for &u in &alive {
            if g.has_edge(u, v) {
                degrees[u] -= 1;
            }
        }
        peeled.push(op);
    }
    peeled.push(CreationOp::Isolated); // the seed
    peeled.reverse();
    Some(CreationSequence(peeled))
}

/// Conjugate of the degree sequence: d*_k = #{i : d_i >= k} for k = 1..n.
pub fn conjugate_degree_sequence(g: &Graph) -> Vec<usize> {
    let degrees = g.degrees();
    (1..=g.n())
        .map(|k| degrees.iter().filter(|&&d| d >= k).count())
        .collect()
}

/// For a connected threshold graph the Laplacian spectrum is integral and
/// equals the conjugate degree sequence. Verifies the eigenvalue
/// residuals, rounds, and compares exactly.
pub fn threshold_spectrum_check(g: &Graph) -> Result<bool> {
    if is_threshold(g).is_none() {
        return Err(Error::Precondition(
            "spectrum check needs a threshold graph".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spectrum = laplacian_spectrum(g)?;
    let scale = 1.0 + laplacian_matrix(g).inf_norm();
    let mut rounded = Vec::with_capacity(g.n());
    for value in spectrum.values() {
        let nearest = value.round();
        if (value - nearest).abs() > RESIDUAL_TOL * scale {
            return Ok(false);
        }
        rounded.push(nearest as usize);
    }
    Ok(rounded == conjugate_degree_sequence(g))
}

/// Structure of the algebraic connectivity of a connected non-complete
/// threshold graph: alpha equals the number of dominating vertices, and
/// removing them leaves multiplicity-of-alpha singleton components plus
/// one more component.
#[derive(Clone, Debug)]
pub struct ThresholdAlphaStructure {
    /// alpha as an integer: the count of degree n-1 vertices.
    pub alpha: usize,
    /// Fiedler multiplicity.
    pub multiplicity: usize,
    pub dominating: VertexSet,
}

pub fn threshold_alpha_structure(g: &Graph) -> Result<ThresholdAlphaStructure> {
    if is_threshold(g).is_none() {
        return Err(Error::Precondition("needs a threshold graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Err(Error::Precondition("needs a non-complete graph".into()));
    }
    let n = g.n();
    let dominating: VertexSet = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    let k = dominating.len();
    let ac = algebraic_connectivity(g)?;
    if (ac.alpha - k as f64).abs() > DECISION_TOL {
        return Err(Error::Inconsistency(format!(
            "threshold alpha {} differs from dominating count {k}",
            ac.alpha
        )));
    }
    let rest: Vec<usize> = (0..n).filter(|v| !dominating.contains(*v)).collect();
    let components = g.induced(&rest)?.connected_components();
    let singletons = components.iter().filter(|c| c.len() == 1).count();
    // multiplicity-many components are singletons; the one remaining
    // component may be larger (or itself a singleton in the all-empty case)
    if components.len() != ac.multiplicity + 1 || singletons < ac.multiplicity {
        return Err(Error::Inconsistency(format!(
            "threshold component structure: {} components, {} singletons, multiplicity {}",
            components.len(),
            singletons,
            ac.multiplicity
        )));
    }
    Ok(ThresholdAlphaStructure {
        alpha: k,
        multiplicity: ac.multiplicity,
        dominating,
    })
}

/// Seeded random creation sequence of length n; connected iff requested.
pub fn random_creation_sequence<R: rand::Rng>(
    n: usize,
    connected: bool,
    rng: &mut R,
) -> CreationSequence {
    let mut ops = vec![CreationOp::Isolated];
    for i in 1..n {
        // the final op dominates exactly when a connected result is
        // requested; short-circuiting keeps the random stream aligned
        let op = if (connected && i == n - 1) || rng.gen::<bool>() {
            CreationOp::Dominating
        } else {
            CreationOp::Isolated
        };
        ops.push(op);
    }
    CreationSequence(ops)
}
