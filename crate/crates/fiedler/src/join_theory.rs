//! Structural theory of graphs whose Fiedler vectors have at most one
//! negative entry: join factorization, imbalance classification with
//! certificates, k-join recognition, the Fiedler-multiplicity formula,
//! the minimum-multiplicity table with extremal generators, the extreme
//! (imbalance 1, multiplicity 1) classification, and augmentation.
//!
//! Everywhere a threshold like alpha = delta is decided, the numeric test
//! (tolerance [`DECISION_TOL`]) is cross-checked against the structural
//! equivalent when one exists; disagreement is a hard
//! [`Error::Inconsistency`], never a silent choice.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::spectra::{
    algebraic_connectivity, eigen_residual, laplacian_matrix, sign_profile, DECISION_TOL, SIGN_TOL,
};

/// Decision tag of a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// i(G) = 0: disconnected.
    ImbalanceZero,
    /// i(G) = 1.
    ImbalanceOne,
    /// i(G) >= 2.
    ImbalanceAtLeastTwo,
    /// i(G) = 1 and the Fiedler eigenvalue is simple.
    Extreme,
    NotExtreme,
}

/// A named validated predicate attached to a certificate.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Check {
        Check {
            name: name.into(),
            passed,
        }
    }
}

/// Machine-checkable evidence for a yes/no decision.
#[derive(Clone, Debug)]
pub enum Witness {
    /// A realized eigenvector.
    Vector(Vec<f64>),
    /// A validated k-join decomposition.
    Decomposition(Box<KJoinDecomposition>),
    /// Spectral refutation data.
    Spectral { alpha: f64, delta: f64 },
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub verdict: Verdict,
    pub witness: Witness,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Re-validate the witness against the graph, independently of the
    /// decision path that produced it.
    pub fn revalidate(&self, g: &Graph) -> Result<()> {
        let scale = 1.0 + laplacian_matrix(g).inf_norm();
        match (&self.verdict, &self.witness) {
            (Verdict::ImbalanceZero, Witness::Vector(x)) => {
                if g.is_connected() {
                    return Err(Error::Inconsistency(
                        "imbalance-0 verdict on connected graph".into(),
                    ));
                }
                let residual = eigen_residual(&laplacian_matrix(g), x, 0.0);
                let profile = sign_profile(x, SIGN_TOL)?;
                if residual > DECISION_TOL * scale || profile.imbalance != 0 {
                    return Err(Error::Inconsistency("invalid imbalance-0 witness".into()));
                }
            }
            (Verdict::ImbalanceOne, Witness::Vector(x)) => {
                let ac = algebraic_connectivity(g)?;
                let residual = eigen_residual(&laplacian_matrix(g), x, ac.alpha);
                let profile = sign_profile(x, SIGN_TOL)?;
                if residual > DECISION_TOL * scale || profile.imbalance != 1 {
                    return Err(Error::Inconsistency("invalid imbalance-1 witness".into()));
                }
            }
            (Verdict::ImbalanceAtLeastTwo, Witness::Spectral { alpha, delta }) => {
                let ac = algebraic_connectivity(g)?;
                if (ac.alpha - alpha).abs() > DECISION_TOL
                    || (g.min_degree() as f64 - delta).abs() > 0.5
                    || *alpha >= *delta - DECISION_TOL
                {
                    return Err(Error::Inconsistency("invalid spectral refutation".into()));
                }
            }
            (Verdict::Extreme, Witness::Decomposition(d)) => {
                d.validate(g)?;
                let ac = algebraic_connectivity(g)?;
                if ac.multiplicity != 1 {
                    return Err(Error::Inconsistency(
                        "extreme verdict with multiple Fiedler dimensions".into(),
                    ));
                }
            }
            (Verdict::NotExtreme, _) => {}
            _ => return Err(Error::Inconsistency("certificate shape mismatch".into())),
        }
        if !self.all_checks_pass() {
            return Err(Error::Inconsistency(
                "certificate carries failed checks".into(),
            ));
        }
        Ok(())
    }
}

/// The unique join decomposition of a graph with imbalance 1: elementary
/// graphs of equal order n - delta each holding at least one isolated
/// vertex, an optional combined graph of higher-degree vertices, and the
/// derived isolated-vertex statistics.
#[derive(Clone, Debug)]
pub struct KJoinDecomposition {
    pub elementary: Vec<Graph>,
    /// Vertex sets of the elementary slots in host labelling.
    pub elementary_vertices: Vec<VertexSet>,
    pub combined: Option<Graph>,
    pub combined_vertices: Option<VertexSet>,
    pub k: usize,
    /// Number of minimum-degree vertices of the host graph.
    pub ell: usize,
    /// Per-slot count of isolated vertices beyond the first.
    pub c: Vec<usize>,
    pub c_max: usize,
    /// How many slots attain c_max.
    pub q: usize,
    /// ell - k - c_max * q.
    pub r: usize,
    /// Components of order > 1 across the elementary slots.
    pub p: usize,
}

impl KJoinDecomposition {
    fn derive(
        elementary: Vec<Graph>,
        elementary_vertices: Vec<VertexSet>,
        combined: Option<Graph>,
        combined_vertices: Option<VertexSet>,
        ell: usize,
    ) -> Self {
        let k = elementary.len();
        let c: Vec<usize> = elementary
            .iter()
            .map(|g| (0..g.n()).filter(|&v| g.degree(v) == 0).count() - 1)
            .collect();
        let c_max = c.iter().copied().max().unwrap_or(0);
        let q = c.iter().filter(|&&x| x == c_max).count();
        let r = ell - k - c_max * q;
        let p = elementary
            .iter()
            .map(|g| {
                g.connected_components()
                    .iter()
                    .filter(|c| c.len() > 1)
                    .count()
            })
            .sum();
        KJoinDecomposition {
            elementary,
            elementary_vertices,
            combined,
            combined_vertices,
            k,
            ell,
            c,
            c_max,
            q,
            r,
            p,
        }
    }

    /// Validate every structural invariant against the host graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let fail = |msg: &str| Err(Error::Inconsistency(format!("k-join validation: {msg}")));
        if self.k == 0 || self.elementary.len() != self.k {
            return fail("no elementary slots");
        }
        let order = self.elementary[0].n();
        if order < 2 {
            return fail("elementary order below 2");
        }
        if self.elementary.iter().any(|e| e.n() != order) {
            return fail("unequal elementary orders");
        }
        if self
            .elementary
            .iter()
            .any(|e| (0..e.n()).all(|v| e.degree(v) > 0))
        {
            return fail("slot without isolated vertex");
        }
        if self.combined.is_none() && self.k < 2 {
            return fail("elementary join needs k >= 2");
        }
        let delta = g.min_degree();
        if order != n - delta {
            return fail("slot order is not n - delta");
        }
        // Cover check: slots + combined partition V(G), cross edges all
        // present, each block induces its stated graph.
        let mut cover = vec![false; n];
        let mut blocks: Vec<&VertexSet> = self.elementary_vertices.iter().collect();
        if let Some(cv) = &self.combined_vertices {
            blocks.push(cv);
        }
        for set in &blocks {
            for v in set.iter() {
                if cover[v] {
                    return fail("blocks overlap");
                }
                cover[v] = true;
            }
        }
        if cover.iter().any(|&b| !b) {
            return fail("blocks do not cover the graph");
        }
        for (i, a) in blocks.iter().enumerate() {
            for b in blocks.iter().skip(i + 1) {
                for u in a.iter() {
                    for v in b.iter() {
                        if !g.has_edge(u, v) {
                            return fail("missing cross edge between blocks");
                        }
                    }
                }
            }
        }
        for (graph, verts) in self
            .elementary
            .iter()
            .zip(&self.elementary_vertices)
            .chain(self.combined.iter().zip(self.combined_vertices.iter()))
        {
            if g.induced(verts.as_slice())? != *graph {
                return fail("block does not induce its stated graph");
            }
        }
        if let Some(combined) = &self.combined {
            let expected = (self.k * delta).checked_sub((self.k - 1) * n);
            if expected != Some(combined.n()) {
                return fail("combined order is not k*delta - (k-1)*n");
            }
            let cv = self
                .combined_vertices
                .as_ref()
                .expect("combined vertices present");
            if cv.iter().any(|v| g.degree(v) <= delta) {
                return fail("combined vertex of minimum degree");
            }
            let floor = combined.n() as f64 - order as f64;
            if alpha_or_zero(combined)? < floor - DECISION_TOL {
                return fail("combined graph fails its connectivity floor");
            }
        }
        if self.ell != self.k + self.c.iter().sum::<usize>() {
            return fail("isolated-vertex counts do not add up");
        }
        if self.ell != g.min_degree_vertices().len() {
            return fail("ell differs from the minimum-degree count");
        }
        Ok(())
    }
}

/// Factor a graph as a join of join-indecomposable graphs: the induced
/// subgraphs on the connected components of the complement. Returns a
/// single factor iff the complement is connected.
pub fn join_factorization(g: &Graph) -> Result<Vec<(Graph, VertexSet)>> {
    let comps = g.complement().connected_components();
    comps
        .into_iter()
        .map(|set| Ok((g.induced(set.as_slice())?, set)))
        .collect()
}

/// Classify i(G) into {0, 1, >=2} with a certificate.
///
/// The imbalance-1 test is done twice: numerically (alpha = delta) and
/// structurally (a join factor of order n - delta with an isolated vertex
/// whose co-factor clears the connectivity floor 2*delta - n). The two
/// sides must agree.
pub fn classify_imbalance(g: &Graph) -> Result<Certificate> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall { min: 2, got: n });
    }
    if !g.is_connected() {
        return Ok(Certificate {
            verdict: Verdict::ImbalanceZero,
            witness: Witness::Vector(vec![1.0; n]),
            checks: vec![Check::new("graph disconnected", true)],
        });
    }
    if g.is_complete() {
        // alpha(K_n) = n; the vector (1, -1, 0, ...) realizes imbalance 1
        let mut x = vec![0.0; n];
        x[0] = 1.0;
        x[1] = -1.0;
        return Ok(Certificate {
            verdict: Verdict::ImbalanceOne,
            witness: Witness::Vector(x),
            checks: vec![Check::new("complete graph", true)],
        });
    }
    let ac = algebraic_connectivity(g)?;
    let delta = g.min_degree();
    let numeric = (ac.alpha - delta as f64).abs() <= DECISION_TOL;
    let structural = imbalance_one_structure(g)?;
    if numeric != structural.is_some() {
        return Err(Error::Inconsistency(format!(
            "alpha = delta numerically ({numeric}) but structurally ({})",
            structural.is_some()
        )));
    }
    match structural {
        Some(factor_vertices) => {
            let witness = lemma_style_witness(g, &factor_vertices);
            let scale = 1.0 + laplacian_matrix(g).inf_norm();
            let residual = eigen_residual(&laplacian_matrix(g), &witness, ac.alpha);
            let profile = sign_profile(&witness, SIGN_TOL)?;
            let checks = vec![
                Check::new("alpha equals delta", numeric),
                Check::new("join factor with isolated vertex", true),
                Check::new("witness residual", residual <= DECISION_TOL * scale),
                Check::new("witness imbalance one", profile.imbalance == 1),
            ];
            if checks.iter().any(|c| !c.passed) {
                return Err(Error::Inconsistency(
                    "imbalance-1 witness failed validation".into(),
                ));
            }
            Ok(Certificate {
                verdict: Verdict::ImbalanceOne,
                witness: Witness::Vector(witness),
                checks,
            })
        }
        None => Ok(Certificate {
            verdict: Verdict::ImbalanceAtLeastTwo,
            witness: Witness::Spectral {
                alpha: ac.alpha,
                delta: delta as f64,
            },
            checks: vec![
                Check::new("alpha below delta", ac.alpha < delta as f64 - DECISION_TOL),
                Check::new("no qualifying join factor", true),
            ],
        }),
    }
}

/// The structural side of the imbalance-1 test: some complement component
/// F of order n - delta containing an isolated vertex, such that the join
/// of the remaining factors clears the floor 2*delta - n. Returns F's
/// vertex set when found.
fn imbalance_one_structure(g: &Graph) -> Result<Option<VertexSet>> {
    let n = g.n();
    let delta = g.min_degree();
    let factors = join_factorization(g)?;
    if factors.len() < 2 {
        return Ok(None);
    }
    for (factor, vertices) in &factors {
        if factor.n() != n - delta {
            continue;
        }
        if !(0..factor.n()).any(|v| factor.degree(v) == 0) {
            continue;
        }
        let rest: Vec<usize> = (0..n).filter(|v| !vertices.contains(*v)).collect();
        let co = g.induced(&rest)?;
        let floor = 2.0 * delta as f64 - n as f64;
        if alpha_or_zero(&co)? >= floor - DECISION_TOL {
            return Ok(Some(vertices.clone()));
        }
    }
    Ok(None)
}

/// alpha for graphs of any order, with the single-vertex convention
/// alpha(K_1) = 0.
fn alpha_or_zero(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Ok(0.0);
    }
    Ok(algebraic_connectivity(g)?.alpha)
}

/// The explicit imbalance-1 Fiedler vector for a join G = F v G2 where F
/// has an isolated vertex v: ones on F except v, -(|F| - 1) at v, zero
/// elsewhere.
fn lemma_style_witness(g: &Graph, factor_vertices: &VertexSet) -> Vec<f64> {
    let mut x = vec![0.0; g.n()];
    let isolated = factor_vertices
        .iter()
        .find(|&v| factor_vertices.iter().all(|u| u == v || !g.has_edge(u, v)))
        .expect("factor has an isolated vertex");
    for v in factor_vertices.iter() {
        x[v] = 1.0;
    }
    x[isolated] = -((factor_vertices.len() - 1) as f64);
    x
}

/// Recognize the unique k-join decomposition of a connected non-complete
/// graph with imbalance 1; `None` iff the imbalance is not 1.
///
/// The elementary slots are exactly the complement components of order
/// n - delta containing a vertex of degree delta; the combined graph is
/// the join of whatever is left.
pub fn recognize_kjoin(g: &Graph) -> Result<Option<KJoinDecomposition>> {
    if !g.is_connected() || g.is_complete() {
        return Err(Error::Precondition(
            "k-join recognition needs a connected non-complete graph".into(),
        ));
    }
    let cert = classify_imbalance(g)?;
    if cert.verdict != Verdict::ImbalanceOne {
        return Ok(None);
    }
    let n = g.n();
    let delta = g.min_degree();
    let factors = join_factorization(g)?;
    let mut elementary = Vec::new();
    let mut elementary_vertices = Vec::new();
    let mut combined_sets: Vec<VertexSet> = Vec::new();
    for (factor, vertices) in factors {
        let has_isolated = (0..factor.n()).any(|v| factor.degree(v) == 0);
        if factor.n() == n - delta && has_isolated {
            elementary.push(factor);
            elementary_vertices.push(vertices);
        } else {
            combined_sets.push(vertices);
        }
    }
    let (combined, combined_vertices) = if combined_sets.is_empty() {
        (None, None)
    } else {
        let mut verts: Vec<usize> = combined_sets.iter().flat_map(|s| s.iter()).collect();
        verts.sort_unstable();
        (Some(g.induced(&verts)?), Some(VertexSet::new(verts)))
    };
    let ell = g.min_degree_vertices().len();
    let decomposition = KJoinDecomposition::derive(
        elementary,
        elementary_vertices,
        combined,
        combined_vertices,
        ell,
    );
    decomposition.validate(g)?;
    Ok(Some(decomposition))
}

/// Fiedler multiplicity from a k-join decomposition: the slots contribute
/// sum(beta(G_i)) - k; the combined graph adds its own multiplicity
/// exactly when its algebraic connectivity sits on the structural floor
/// |V(G')| - |V(G_1)| = (k+1)*delta - k*n, because its eigenvectors land
/// at alpha(G') + n - |V(G')| in the join.
pub fn fiedler_multiplicity(decomposition: &KJoinDecomposition, n: usize) -> Result<usize> {
    let base: usize = decomposition
        .elementary
        .iter()
        .map(|g| g.component_count())
        .sum::<usize>()
        - decomposition.k;
    let Some(combined) = &decomposition.combined else {
        return Ok(base);
    };
    let delta = n - decomposition.elementary[0].n();
    let k = decomposition.k;
    let floor = ((k + 1) * delta) as f64 - (k * n) as f64;
    if (alpha_or_zero(combined)? - floor).abs() <= DECISION_TOL {
        let extra = if combined.n() < 2 {
            1
        } else {
            algebraic_connectivity(combined)?.multiplicity
        };
        Ok(base + extra)
    } else {
        Ok(base)
    }
}

/// Minimum Fiedler multiplicity among k-joins with exactly `ell` minimum
/// degree vertices: exact closed-form case dispatch, checked in order.
pub fn min_multiplicity(ell: usize, k: usize) -> Result<usize> {
    if ell < 1 || k < 1 || k > ell {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k <= ell, got ({ell}, {k})"
        )));
    }
    if k == ell || (k == ell - 1 && k >= 2) {
        return Ok(ell);
    }
    if ell.is_multiple_of(k) && k < ell {
        return Ok(ell - k);
    }
    if (ell + 1).is_multiple_of(k) && ell + 1 >= 4 * k && 2 <= k && k <= ell - 2 {
        // equivalently ell - floor((ell - k) / c) with cell size
        // c = (ell + 1) / k
        return Ok(ell - k * (ell - k) / (ell + 1));
    }
    if !ell.is_multiple_of(k) && (ell - k) % 2 == 1 && (ell - k) / 2 < k && k - 1 <= ell - 3 {
        return Ok(ell - (ell - k) / 3);
    }
    let c_tilde = ((ell - k).div_ceil(k)).max(2);
    Ok(ell - (ell - k) / c_tilde)
}

/// Independent brute force for the minimum number of order->=2 components
/// across the elementary slots: enumerate every distribution of the
/// ell - k surplus isolated vertices over k equal-order slots (common
/// order at most `max_order`) and every way of filling each slot with
/// components of order >= 2, and take the smallest total filler count.
pub fn min_nontrivial_components(ell: usize, k: usize, max_order: usize) -> Result<usize> {
    if ell < k || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k <= ell, got ({ell}, {k})"
        )));
    }
    let surplus = ell - k;
    let mut best: Option<usize> = None;
    let mut counts = vec![0usize; k];
    enumerate_distributions(surplus, k, surplus, 0, &mut counts, &mut |c| {
        for order in 2..=max_order {
            let mut total = 0usize;
            let mut feasible = true;
            for &ci in c.iter() {
                let Some(filler) = order.checked_sub(1 + ci) else {
                    feasible = false;
                    break;
                };
                match min_parts_at_least_two(filler) {
                    Some(parts) => total += parts,
                    None => {
                        feasible = false;
                        break;
                    }
                }
            }
            if feasible && best.is_none_or(|b| total < b) {
                best = Some(total);
            }
        }
    });
    best.ok_or_else(|| Error::Inconsistency("no feasible slot assignment".into()))
}

/// Minimum number of parts >= 2 summing to `f`, by direct enumeration of
/// partitions; `None` when no partition exists (f = 1).
fn min_parts_at_least_two(f: usize) -> Option<usize> {
    fn rec(f: usize, largest: usize) -> Option<usize> {
        if f == 0 {
            return Some(0);
        }
        let mut best: Option<usize> = None;
        for part in (2..=largest.min(f)).rev() {
            if let Some(rest) = rec(f - part, part) {
                let total = rest + 1;
                if best.is_none_or(|b| total < b) {
                    best = Some(total);
                }
            }
        }
        best
    }
    rec(f, f)
}

/// Non-increasing distributions of `remaining` over `slots` parts.
fn enumerate_distributions(
    remaining: usize,
    slots: usize,
    cap: usize,
    index: usize,
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if index == slots {
        if remaining == 0 {
            f(current);
        }
        return;
    }
    let upper = remaining.min(cap);
    for value in (0..=upper).rev() {
        current[index] = value;
        enumerate_distributions(remaining - value, slots, value, index + 1, current, f);
    }
    current[index] = 0;
}

/// A graph with exactly `ell` minimum-degree vertices, imbalance 1,
/// recognized join count `k`, and the minimum possible Fiedler
/// multiplicity for those parameters.
pub fn extremal_kjoin(ell: usize, k: usize) -> Result<Graph> {
    if ell < 1 || k < 1 || k > ell {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k <= ell, got ({ell}, {k})"
        )));
    }
    // per-slot surplus isolated counts
    let every_slot_fills = k == ell || (k == ell - 1 && k >= 2);
    let c: Vec<usize> = if k == ell {
        vec![0; k]
    } else if k == ell - 1 && k >= 2 {
        let mut c = vec![0; k];
        c[0] = 1;
        c
    } else if ell.is_multiple_of(k) {
        vec![ell / k - 1; k]
    } else {
        normal_form_counts(ell, k)
    };
    let c_max = *c.iter().max().unwrap();
    // slot order: when every slot needs a filler the order must leave
    // room for components of size >= 2 next to every isolated block
    let order = if every_slot_fills {
        c_max + 3
    } else {
        c_max + 1
    };
    let mut slots = Vec::with_capacity(k);
    for &ci in &c {
        let isolated = Graph::empty(ci + 1);
        let filler = order - (ci + 1);
        let slot = if filler == 0 {
            isolated
        } else {
            isolated.disjoint_union(&Graph::complete(filler))?
        };
        slots.push(slot);
    }
    let mut g = slots[0].clone();
    for slot in &slots[1..] {
        g = g.join(slot)?;
    }
    if k == 1 {
        // a 1-join must carry a combined graph; K_1 always qualifies
        g = g.join(&Graph::complete(1))?;
    }
    Ok(g)
}

/// The surplus assignment minimizing the filler count when k does not
/// divide ell and 2 <= k <= ell - 2: pick the cell size, fill as many
/// slots as possible to it, and spread the remainder so no slot sits
/// exactly one below the maximum.
fn normal_form_counts(ell: usize, k: usize) -> Vec<usize> {
    let surplus = ell - k;
    let c0 = (surplus.div_ceil(k)).max(2);
    let r0 = surplus - c0 * (surplus / c0);
    let c_max = if c0 == 2 && r0 == 1 {
        3
    } else if surplus / c0 == k - 1 && r0 == c0 - 1 {
        c0 + 1
    } else {
        c0
    };
    let q = surplus / c_max;
    let r = surplus - c_max * q;
    let mut c = vec![c_max; q];
    if r > 0 {
        if c_max - r != 1 {
            c.push(r);
        } else {
            // split the remainder to avoid a gap of exactly one
            c.push(r - 1);
            c.push(1);
        }
    }
    c.retain(|&x| x > 0);
    c.resize(k, 0);
    c
}

/// Greatest lower bound for the Fiedler multiplicity over all graphs with
/// imbalance 1 and exactly `ell` minimum-degree vertices, with attaining
/// witness graphs.
pub fn multiplicity_lower_bound(ell: usize) -> Result<(usize, Vec<Graph>)> {
    if ell < 1 {
        return Err(Error::InvalidParameter("need ell >= 1".into()));
    }
    let join_copies = |g: &Graph, copies: usize| -> Result<Graph> {
        let mut out = g.clone();
        for _ in 1..copies {
            out = out.join(g)?;
        }
        Ok(out)
    };
    let paw_part = Graph::empty(1).disjoint_union(&Graph::complete(2))?;
    if ell == 1 {
        let g = Graph::complete(2)
            .disjoint_union(&Graph::empty(1))?
            .join(&Graph::complete(1))?;
        return Ok((1, vec![g]));
    }
    if ell.is_multiple_of(2) {
        let bound = ell / 2;
        let witnesses = if ell >= 4 {
            let g = join_copies(&Graph::empty(2), ell / 2)?;
            vec![g.clone(), g.join(&Graph::complete(1))?]
        } else {
            vec![
                Graph::empty(2).join(&Graph::complete(1))?,
                Graph::empty(2).join(&Graph::complete(3))?,
            ]
        };
        return Ok((bound, witnesses));
    }
    let bound = ell - ell / 3;
    let witnesses = if ell.is_multiple_of(3) {
        let mut g = join_copies(&Graph::empty(3), ell / 3)?;
        if ell == 3 {
            g = g.join(&Graph::complete(1))?;
        }
        vec![g]
    } else if ell % 3 == 1 {
        // ell = 3b + 1 with b >= 2
        let g = join_copies(&Graph::empty(3), ell / 3)?;
        vec![g.join(&paw_part)?]
    } else {
        // ell = 3d + 2
        let mut g = paw_part.join(&paw_part)?;
        for _ in 0..ell / 3 {
            g = g.join(&Graph::empty(3))?;
        }
        let mut out = vec![g];
        if ell == 5 {
            out.push(Graph::empty(5).join(&Graph::complete(1))?);
            out.push(Graph::empty(4).join(&Graph::empty(1).disjoint_union(&Graph::complete(3))?)?);
        }
        out
    };
    Ok((bound, witnesses))
}

/// Decide whether i(G) = 1 with a simple Fiedler eigenvalue: either K_n
/// minus one edge, or a combined 1-join whose single slot has exactly one
/// isolated vertex and whose combined graph clears the floor 2*delta - n
/// strictly in both connectivity and minimum degree.
pub fn decide_extreme(g: &Graph) -> Result<Certificate> {
    if !g.is_connected() || g.is_complete() {
        return Err(Error::Precondition(
            "extreme test needs a connected non-complete graph".into(),
        ));
    }
    let n = g.n();
    let non_edges = n * (n - 1) / 2 - g.edge_count();
    let ac = algebraic_connectivity(g)?;
    let numeric_extreme =
        classify_imbalance(g)?.verdict == Verdict::ImbalanceOne && ac.multiplicity == 1;
    let structural = if non_edges == 1 {
        true // exactly one non-edge: this is N_2 v K_{n-2}
    } else {
        match recognize_kjoin(g)? {
            Some(d) if d.k == 1 && d.combined.is_some() => {
                let slot = &d.elementary[0];
                let isolated = (0..slot.n()).filter(|&v| slot.degree(v) == 0).count();
                let combined = d.combined.as_ref().unwrap();
                let floor = 2.0 * g.min_degree() as f64 - n as f64;
                let alpha_strict = alpha_or_zero(combined)? > floor + DECISION_TOL;
                let degree_strict = (combined.min_degree() as f64) > floor + DECISION_TOL;
                // the slot must be one isolated vertex plus one connected
                // piece: its multiplicity contribution is its component
                // count minus one
                isolated == 1 && slot.component_count() == 2 && alpha_strict && degree_strict
            }
            _ => false,
        }
    };
    if structural != numeric_extreme {
        return Err(Error::Inconsistency(format!(
            "extreme classification: structural {structural} vs numeric {numeric_extreme}"
        )));
    }
    if structural {
        let decomposition = recognize_kjoin(g)?
            .ok_or_else(|| Error::Inconsistency("extreme graph failed recognition".into()))?;
        Ok(Certificate {
            verdict: Verdict::Extreme,
            witness: Witness::Decomposition(Box::new(decomposition)),
            checks: vec![
                Check::new(
                    "imbalance one with simple Fiedler eigenvalue",
                    numeric_extreme,
                ),
                Check::new("structural form", structural),
            ],
        })
    } else {
        Ok(Certificate {
            verdict: Verdict::NotExtreme,
            witness: Witness::Spectral {
                alpha: ac.alpha,
                delta: g.min_degree() as f64,
            },
            checks: vec![Check::new("not of extreme form", true)],
        })
    }
}

/// Extend a connected graph with imbalance != 1 to one with imbalance 1
/// by adding one vertex (when the graph is a join) or two (otherwise).
/// The input stays as an induced subgraph on its original labels.
pub fn augment_to_imbalance_one(g: &Graph) -> Result<(Graph, usize)> {
    if g.n() < 3 {
        return Err(Error::TooSmall { min: 3, got: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Precondition(
            "augmentation needs a connected graph".into(),
        ));
    }
    if classify_imbalance(g)?.verdict == Verdict::ImbalanceOne {
        return Err(Error::Precondition("graph already has imbalance 1".into()));
    }
    let factors = join_factorization(g)?;
    if factors.len() >= 2 {
        // G = H_1 v H_2 with |H_1| >= |H_2|: one vertex joined to the
        // smaller side suffices. Take H_2 as the smallest factor.
        let smallest = factors
            .iter()
            .enumerate()
            .min_by_key(|(i, (f, _))| (f.n(), *i))
            .map(|(i, _)| i)
            .expect("at least two factors");
        let n = g.n();
        let mut out = Graph::new(n + 1)?;
        for (u, v) in g.edges() {
            out.add_edge(u, v)?;
        }
        for v in factors[smallest].1.iter() {
            out.add_edge(n, v)?;
        }
        Ok((out, 1))
    } else {
        // not a join: ({v} + G) v {w}
        let out = g
            .disjoint_union(&Graph::empty(1))?
            .join(&Graph::complete(1))?;
        Ok((out, 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign_oracle::graph_imbalance;

    fn example_join() -> Graph {
        let g1 = Graph::complete(2).disjoint_union(&Graph::empty(1)).unwrap();
        let g2 = Graph::empty(1).join(&Graph::empty(3)).unwrap();
        g1.join(&g2).unwrap()
    }

    #[test]
    fn factorization() {
        let factors = join_factorization(&Graph::complete(3)).unwrap();
        assert_eq!(factors.len(), 3);
        assert!(factors.iter().all(|(f, _)| f.n() == 1));
        let factors = join_factorization(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(factors.len(), 1);
        // the worked example factors as {K_2 + N_1, N_1, N_3}
        let factors = join_factorization(&example_join()).unwrap();
        let mut shapes: Vec<(usize, usize)> = factors
            .iter()
            .map(|(f, _)| (f.n(), f.edge_count()))
            .collect();
        shapes.sort_unstable();
        assert_eq!(shapes, vec![(1, 0), (3, 0), (3, 1)]);
        // rejoining the factors reproduces the graph
        let (first, rest) = factors.split_first().unwrap();
        let mut rejoined = first.0.clone();
        for (f, _) in rest {
            rejoined = rejoined.join(f).unwrap();
        }
        assert_eq!(rejoined.edge_count(), example_join().edge_count());
    }

    #[test]
    fn classify_basics() {
        let two_k2 = Graph::complete(2)
            .disjoint_union(&Graph::complete(2))
            .unwrap();
        let cert = classify_imbalance(&two_k2).unwrap();
        assert_eq!(cert.verdict, Verdict::ImbalanceZero);
        cert.revalidate(&two_k2).unwrap();

        let cert = classify_imbalance(&example_join()).unwrap();
        assert_eq!(cert.verdict, Verdict::ImbalanceOne);
        cert.revalidate(&example_join()).unwrap();

        let c5 = Graph::cycle(5).unwrap();
        let cert = classify_imbalance(&c5).unwrap();
        assert_eq!(cert.verdict, Verdict::ImbalanceAtLeastTwo);
        cert.revalidate(&c5).unwrap();
        let (i, _, exact) = graph_imbalance(&c5).unwrap();
        assert_eq!((i, exact), (2, true));

        assert_eq!(
            classify_imbalance(&Graph::complete(6)).unwrap().verdict,
            Verdict::ImbalanceOne
        );
        assert!(classify_imbalance(&Graph::empty(1)).is_err());
    }

    #[test]
    fn recognize_worked_example() {
        let g = example_join();
        let d = recognize_kjoin(&g).unwrap().unwrap();
        assert_eq!(d.k, 2);
        assert_eq!(d.ell, 4);
        assert_eq!(
            d.elementary.iter().map(|e| e.n()).collect::<Vec<_>>(),
            vec![3, 3]
        );
        assert!(d.combined.as_ref().is_some_and(|c| c.n() == 1));
        assert_eq!(fiedler_multiplicity(&d, g.n()).unwrap(), 3);
        assert_eq!(algebraic_connectivity(&g).unwrap().multiplicity, 3);
    }

    #[test]
    fn recognize_elementary_and_combined() {
        // v^3 N_2: elementary 3-join with ell = 6
        let g = Graph::cocktail(3).unwrap();
        let d = recognize_kjoin(&g).unwrap().unwrap();
        assert_eq!((d.k, d.ell, d.p), (3, 6, 0));
        assert_eq!(d.c, vec![1, 1, 1]);
        assert!(d.combined.is_none());
        assert_eq!(fiedler_multiplicity(&d, 6).unwrap(), 3);
        // N_2 v K_3: combined 1-join with ell = 2
        let g = Graph::empty(2).join(&Graph::complete(3)).unwrap();
        let d = recognize_kjoin(&g).unwrap().unwrap();
        assert_eq!((d.k, d.ell), (1, 2));
        assert_eq!(d.combined.as_ref().map(|c| c.n()), Some(3));
        assert_eq!(fiedler_multiplicity(&d, 5).unwrap(), 1);
        // C_5 is not a k-join
        assert!(recognize_kjoin(&Graph::cycle(5).unwrap())
            .unwrap()
            .is_none());
        assert!(recognize_kjoin(&Graph::complete(4)).is_err());
    }

    #[test]
    fn multiplicity_table_anchors() {
        assert_eq!(min_multiplicity(16, 5).unwrap(), 13);
        assert_eq!(min_multiplicity(15, 4).unwrap(), 13);
        assert_eq!(min_multiplicity(5, 5).unwrap(), 5);
        assert_eq!(min_multiplicity(6, 3).unwrap(), 3);
        assert_eq!(min_multiplicity(2, 1).unwrap(), 1);
        assert!(min_multiplicity(3, 4).is_err());
    }

    #[test]
    fn component_oracle_anchors() {
        assert_eq!(min_nontrivial_components(12, 5, 15).unwrap(), 3);
        assert_eq!(min_nontrivial_components(8, 2, 11).unwrap(), 0);
        assert_eq!(min_nontrivial_components(5, 5, 8).unwrap(), 5);
    }

    #[test]
    fn extremal_constructions() {
        for (ell, k, expected_am) in [(6, 3, 3), (5, 4, 5), (2, 1, 1), (1, 1, 1), (7, 3, 5)] {
            let g = extremal_kjoin(ell, k).unwrap();
            assert_eq!(g.min_degree_vertices().len(), ell, "(ell,k)=({ell},{k})");
            let d = recognize_kjoin(&g)
                .unwrap()
                .expect("extremal graph has imbalance 1");
            assert_eq!(d.k, k, "(ell,k)=({ell},{k})");
            let am = algebraic_connectivity(&g).unwrap().multiplicity;
            assert_eq!(am, expected_am, "(ell,k)=({ell},{k})");
            assert_eq!(am, min_multiplicity(ell, k).unwrap());
        }
        // the (16, 5) case: surplus 11 split as 3+3+3+1+1
        let g = extremal_kjoin(16, 5).unwrap();
        assert_eq!(g.min_degree_vertices().len(), 16);
        assert_eq!(algebraic_connectivity(&g).unwrap().multiplicity, 13);
    }

    #[test]
    fn lower_bounds() {
        let (b, ws) = multiplicity_lower_bound(2).unwrap();
        assert_eq!(b, 1);
        assert!(!ws.is_empty());
        let (b, _) = multiplicity_lower_bound(6).unwrap();
        assert_eq!(b, 3);
        let (b, ws) = multiplicity_lower_bound(5).unwrap();
        assert_eq!(b, 4);
        assert_eq!(ws.len(), 3);
        for (ell, expect) in [(1, 1), (3, 2), (7, 5), (9, 6), (4, 2), (10, 5)] {
            let (b, ws) = multiplicity_lower_bound(ell).unwrap();
            assert_eq!(b, expect, "ell={ell}");
            for w in &ws {
                assert_eq!(w.min_degree_vertices().len(), ell, "ell={ell}");
                let am = algebraic_connectivity(w).unwrap().multiplicity;
                assert_eq!(am, b, "ell={ell}");
                assert_eq!(
                    classify_imbalance(w).unwrap().verdict,
                    Verdict::ImbalanceOne
                );
            }
        }
    }

    #[test]
    fn extreme_classification() {
        // (K_3 + N_1) v K_2
        let g = Graph::complete(3)
            .disjoint_union(&Graph::empty(1))
            .unwrap()
            .join(&Graph::complete(2))
            .unwrap();
        let cert = decide_extreme(&g).unwrap();
        assert_eq!(cert.verdict, Verdict::Extreme);
        cert.revalidate(&g).unwrap();
        // N_2 v K_4 = K_6 minus an edge
        let g = Graph::empty(2).join(&Graph::complete(4)).unwrap();
        assert_eq!(decide_extreme(&g).unwrap().verdict, Verdict::Extreme);
        // v^3 N_2 has multiplicity 3
        assert_eq!(
            decide_extreme(&Graph::cocktail(3).unwrap())
                .unwrap()
                .verdict,
            Verdict::NotExtreme
        );
        // N_3 v K_3: multiplicity 2, not extreme
        let g = Graph::empty(3).join(&Graph::complete(3)).unwrap();
        assert_eq!(decide_extreme(&g).unwrap().verdict, Verdict::NotExtreme);
    }

    #[test]
    fn augmentation() {
        // C_5 v K_1 is a join with imbalance >= 2: one vertex suffices
        let wheel = Graph::cycle(5).unwrap().join(&Graph::complete(1)).unwrap();
        assert_eq!(
            classify_imbalance(&wheel).unwrap().verdict,
            Verdict::ImbalanceAtLeastTwo
        );
        let (g, added) = augment_to_imbalance_one(&wheel).unwrap();
        assert_eq!(added, 1);
        assert_eq!(g.n(), 7);
        assert_eq!(
            classify_imbalance(&g).unwrap().verdict,
            Verdict::ImbalanceOne
        );
        assert_eq!(g.induced(&[0, 1, 2, 3, 4, 5]).unwrap(), wheel);
        // C_5 is not a join: two vertices
        let c5 = Graph::cycle(5).unwrap();
        let (g, added) = augment_to_imbalance_one(&c5).unwrap();
        assert_eq!(added, 2);
        assert_eq!(
            classify_imbalance(&g).unwrap().verdict,
            Verdict::ImbalanceOne
        );
        assert_eq!(g.induced(&[0, 1, 2, 3, 4]).unwrap(), c5);
        // P_4 is not a join either
        let (_, added) = augment_to_imbalance_one(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(added, 2);
        // precondition: already imbalance 1
        assert!(augment_to_imbalance_one(&Graph::path(3).unwrap()).is_err());
    }
}
