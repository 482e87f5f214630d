//! Dense symmetric eigendecomposition (cyclic Jacobi), Laplacian and
//! adjacency spectra with multiplicity grouping, Fiedler eigenspace
//! extraction, sign profiles, and the analytic join-spectrum formula.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Residual bound factor for eigenpairs: |Mx - λx| <= RESIDUAL_TOL * (1 + |M|_inf).
pub const RESIDUAL_TOL: f64 = 1e-8;
/// Two consecutive eigenvalues join one multiplicity group iff their
/// difference is at most GROUP_GAP_TOL * (1 + |M|_inf).
pub const GROUP_GAP_TOL: f64 = 1e-6;
/// Default sign-classification tolerance, relative to max|x|. Must
/// classify the exact structural zeros of join eigenvectors as zero.
pub const SIGN_TOL: f64 = 1e-7;
/// Tolerance for scalar decisions such as alpha = delta.
pub const DECISION_TOL: f64 = 1e-7;

/// Small dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Matrix {
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    /// Max absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if (self.get(i, j) - self.get(j, i)).abs() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// y = M x
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }
}

pub fn adjacency_matrix(g: &Graph) -> Matrix {
    let mut m = Matrix::zeros(g.n());
    for (u, v) in g.edges() {
        m.set(u, v, 1.0);
        m.set(v, u, 1.0);
    }
    m
}

pub fn laplacian_matrix(g: &Graph) -> Matrix {
    let mut m = Matrix::zeros(g.n());
    for (u, v) in g.edges() {
        m.set(u, v, -1.0);
        m.set(v, u, -1.0);
    }
    for v in 0..g.n() {
        m.set(v, v, g.degree(v) as f64);
    }
    m
}

/// Full eigendecomposition of a symmetric matrix.
#[derive(Clone, Debug)]
pub struct Eigen {
    /// Eigenvalues in non-increasing order.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors, `vectors[k]` pairs with `values[k]`.
    /// Deterministic orientation: first non-negligible entry positive.
    pub vectors: Vec<Vec<f64>>,
}

/// Cyclic Jacobi eigendecomposition. Deterministic sweep order; returns
/// eigenpairs sorted by descending eigenvalue with a fixed sign
/// convention, and verifies the reconstruction residual.
pub fn symmetric_eigen(m: &Matrix) -> Result<Eigen> {
    if !m.is_symmetric(1e-12) {
        return Err(Error::NotSymmetric);
    }
    let n = m.n();
    if n == 0 {
        return Ok(Eigen {
            values: vec![],
            vectors: vec![],
        });
    }
    let scale = 1.0 + m.inf_norm();
    let mut a = m.clone();
    let mut q = Matrix::zeros(n);
    for i in 0..n {
        q.set(i, i, 1.0);
    }
    let stop = 1e-14 * scale;
    let mut converged = false;
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                off = off.max(a.get(i, j).abs());
            }
        }
        if off <= stop {
            converged = true;
            break;
        }
        for p in 0..n {
            for r in p + 1..n {
                let apr = a.get(p, r);
                if apr.abs() <= stop * 1e-2 {
                    continue;
                }
                let app = a.get(p, p);
                let arr = a.get(r, r);
                let theta = 0.5 * (arr - app) / apr;
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let s = theta.signum();
                    s / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // A <- Jt A J on rows/cols p, r
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akr = a.get(k, r);
                    a.set(k, p, c * akp - s * akr);
                    a.set(k, r, s * akp + c * akr);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let ark = a.get(r, k);
                    a.set(p, k, c * apk - s * ark);
                    a.set(r, k, s * apk + c * ark);
                }
                for k in 0..n {
                    let qkp = q.get(k, p);
                    let qkr = q.get(k, r);
                    q.set(k, p, c * qkp - s * qkr);
                    q.set(k, r, s * qkp + c * qkr);
                }
            }
        }
    }
    if !converged {
        // final check after the last sweep
        let mut off = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                off = off.max(a.get(i, j).abs());
            }
        }
        if off > stop {
            return Err(Error::NoConvergence);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a.get(j, j)
            .partial_cmp(&a.get(i, i))
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(i.cmp(&j))
    });
    let values: Vec<f64> = order.iter().map(|&k| a.get(k, k)).collect();
    let mut vectors = Vec::with_capacity(n);
    for &k in &order {
        let mut v: Vec<f64> = (0..n).map(|i| q.get(i, k)).collect();
        orient(&mut v);
        vectors.push(v);
    }
    // Residual contract: |QΛQ^T - M|_inf <= RESIDUAL_TOL * scale.
    let mut err = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let recon: f64 = (0..n)
                .map(|k| vectors[k][i] * values[k] * vectors[k][j])
                .sum();
            err = err.max((recon - m.get(i, j)).abs());
        }
    }
    if err > RESIDUAL_TOL * scale {
        return Err(Error::NoConvergence);
    }
    Ok(Eigen { values, vectors })
}

fn orient(v: &mut [f64]) {
    let max = v.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    if max == 0.0 {
        return;
    }
    for &x in v.iter() {
        if x.abs() > 1e-8 * max {
            if x < 0.0 {
                for y in v.iter_mut() {
                    *y = -*y;
                }
            }
            return;
        }
    }
}

/// One eigenvalue group: a representative value, its multiplicity, and an
/// orthonormal basis of the group eigenspace.
#[derive(Clone, Debug)]
pub struct EigenGroup {
    pub value: f64,
    pub multiplicity: usize,
    pub basis: Vec<Vec<f64>>,
}

/// Grouped spectrum, sorted non-increasing by value.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub groups: Vec<EigenGroup>,
    /// Value scale used for grouping (1 + |M|_inf).
    pub scale: f64,
}

impl Spectrum {
    fn from_eigen(eigen: Eigen, scale: f64) -> Spectrum {
        let gap = GROUP_GAP_TOL * scale;
        let mut groups: Vec<EigenGroup> = Vec::new();
        for (value, vector) in eigen.values.into_iter().zip(eigen.vectors) {
            match groups.last_mut() {
                Some(g) if (g.value - value).abs() <= gap => {
                    g.multiplicity += 1;
                    g.basis.push(vector);
                }
                _ => groups.push(EigenGroup {
                    value,
                    multiplicity: 1,
                    basis: vec![vector],
                }),
            }
        }
        Spectrum { groups, scale }
    }

    pub fn order(&self) -> usize {
        self.groups.iter().map(|g| g.multiplicity).sum()
    }

    /// All eigenvalues with multiplicity, non-increasing.
    pub fn values(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.order());
        for g in &self.groups {
            out.extend(std::iter::repeat_n(g.value, g.multiplicity));
        }
        out
    }

    /// Multiplicity of `value` under the grouping tolerance.
    pub fn multiplicity_of(&self, value: f64) -> usize {
        self.groups
            .iter()
            .filter(|g| (g.value - value).abs() <= GROUP_GAP_TOL * self.scale)
            .map(|g| g.multiplicity)
            .sum()
    }

    pub fn smallest(&self) -> &EigenGroup {
        self.groups.last().expect("nonempty spectrum")
    }

    pub fn largest(&self) -> &EigenGroup {
        self.groups.first().expect("nonempty spectrum")
    }
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    if g.n() == 0 {
        return Err(Error::TooSmall { min: 1, got: 0 });
    }
    let m = laplacian_matrix(g);
    let scale = 1.0 + m.inf_norm();
    Ok(Spectrum::from_eigen(symmetric_eigen(&m)?, scale))
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    if g.n() == 0 {
        return Err(Error::TooSmall { min: 1, got: 0 });
    }
    let m = adjacency_matrix(g);
    let scale = 1.0 + m.inf_norm();
    Ok(Spectrum::from_eigen(symmetric_eigen(&m)?, scale))
}

/// Algebraic connectivity: the second-smallest Laplacian eigenvalue with
/// its eigenspace.
#[derive(Clone, Debug)]
pub struct AlgebraicConnectivity {
    pub alpha: f64,
    pub multiplicity: usize,
    /// Orthonormal basis, orthogonal to the all-ones vector. For a
    /// disconnected graph this is the kernel with the all-ones direction
    /// projected out (dimension = components - 1).
    pub basis: Vec<Vec<f64>>,
}

/// Algebraic connectivity of a graph on >= 2 vertices. For disconnected
/// input this returns alpha = 0 with the quotient kernel basis rather
/// than rejecting.
pub fn algebraic_connectivity(g: &Graph) -> Result<AlgebraicConnectivity> {
    if g.n() < 2 {
        return Err(Error::TooSmall { min: 2, got: g.n() });
    }
    let spectrum = laplacian_spectrum(g)?;
    let zero_group = spectrum.smallest();
    if zero_group.multiplicity > 1 {
        // Disconnected: quotient the kernel by the all-ones direction.
        let basis = project_out_ones(&zero_group.basis);
        let multiplicity = basis.len();
        return Ok(AlgebraicConnectivity {
            alpha: 0.0,
            multiplicity,
            basis,
        });
    }
    let group = &spectrum.groups[spectrum.groups.len() - 2];
    Ok(AlgebraicConnectivity {
        alpha: group.value,
        multiplicity: group.multiplicity,
        basis: group.basis.clone(),
    })
}

/// The full eigenspace of the second-smallest Laplacian eigenvalue. For a
/// disconnected graph this is the whole kernel (the all-ones vector
/// included), which is the right minimization domain for imbalance.
pub fn fiedler_eigenspace(g: &Graph) -> Result<(f64, Vec<Vec<f64>>)> {
    if g.n() < 2 {
        return Err(Error::TooSmall { min: 2, got: g.n() });
    }
    let spectrum = laplacian_spectrum(g)?;
    let zero_group = spectrum.smallest();
    if zero_group.multiplicity > 1 {
        return Ok((0.0, zero_group.basis.clone()));
    }
    let group = &spectrum.groups[spectrum.groups.len() - 2];
    Ok((group.value, group.basis.clone()))
}

/// Gram-Schmidt the all-ones direction out of a basis and re-orthonormalize.
fn project_out_ones(basis: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = basis[0].len();
    let ones_unit = 1.0 / (n as f64).sqrt();
    let mut cleaned: Vec<Vec<f64>> = Vec::new();
    for b in basis {
        let mut v = b.clone();
        let dot_ones: f64 = v.iter().sum::<f64>() * ones_unit;
        for x in v.iter_mut() {
            *x -= dot_ones * ones_unit;
        }
        for c in &cleaned {
            let d: f64 = v.iter().zip(c).map(|(a, b)| a * b).sum();
            for (x, y) in v.iter_mut().zip(c) {
                *x -= d * y;
            }
        }
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            for x in v.iter_mut() {
                *x /= norm;
            }
            orient(&mut v);
            cleaned.push(v);
        }
    }
    cleaned
}

/// The Laplacian spectrum of a join, computed analytically from the two
/// factor spectra (orders p and q): {0} ∪ {λ_i(G1)+q : i < p} ∪
/// {λ_j(G2)+p : j < q} ∪ {p+q}, returned sorted non-increasing.
pub fn join_spectrum(s1: &Spectrum, s2: &Spectrum) -> Vec<f64> {
    let p = s1.order();
    let q = s2.order();
    let mut out = Vec::with_capacity(p + q);
    out.push(0.0);
    out.push((p + q) as f64);
    let mut v1 = s1.values();
    v1.pop(); // drop the smallest (the kernel eigenvalue 0)
    out.extend(v1.into_iter().map(|l| l + q as f64));
    let mut v2 = s2.values();
    v2.pop();
    out.extend(v2.into_iter().map(|l| l + p as f64));
    out.sort_by(|a, b| b.partial_cmp(a).unwrap());
    out
}

/// The partition of vertices induced by the signs of a vector, and its
/// imbalance min(|plus|, |minus|).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignProfile {
    pub plus: VertexSet,
    pub minus: VertexSet,
    pub zero: VertexSet,
    pub imbalance: usize,
}

impl SignProfile {
    /// Signs as a vector over {-1, 0, +1}.
    pub fn signs(&self, n: usize) -> Vec<i8> {
        let mut out = vec![0i8; n];
        for v in self.plus.iter() {
            out[v] = 1;
        }
        for v in self.minus.iter() {
            out[v] = -1;
        }
        out
    }
}

/// Classify the entries of `x`: entries with |x_j| <= tol * max|x| count
/// as zero. Rejects the zero vector.
pub fn sign_profile(x: &[f64], tol: f64) -> Result<SignProfile> {
    if tol < 0.0 {
        return Err(Error::InvalidParameter(
            "sign tolerance must be >= 0".into(),
        ));
    }
    let max = x.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    if max == 0.0 {
        return Err(Error::ZeroVector);
    }
    let cut = tol * max;
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut zero = Vec::new();
    for (j, &v) in x.iter().enumerate() {
        if v.abs() <= cut {
            zero.push(j);
        } else if v > 0.0 {
            plus.push(j);
        } else {
            minus.push(j);
        }
    }
    let imbalance = plus.len().min(minus.len());
    Ok(SignProfile {
        plus: VertexSet::new(plus),
        minus: VertexSet::new(minus),
        zero: VertexSet::new(zero),
        imbalance,
    })
}

/// Vertices at which every basis vector (hence every vector of the span)
/// vanishes.
pub fn common_zero_support(basis: &[Vec<f64>]) -> Result<VertexSet> {
    if basis.is_empty() {
        return Err(Error::InvalidParameter("empty basis".into()));
    }
    let n = basis[0].len();
    let mut common: Vec<usize> = (0..n).collect();
    for b in basis {
        let max = b.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
        if max == 0.0 {
            return Err(Error::ZeroVector);
        }
        let cut = SIGN_TOL * max;
        common.retain(|&j| b[j].abs() <= cut);
    }
    Ok(VertexSet::new(common))
}

/// Max-norm residual |Mx - λx|_inf.
pub fn eigen_residual(m: &Matrix, x: &[f64], lambda: f64) -> f64 {
    m.mul_vec(x)
        .iter()
        .zip(x)
        .map(|(mx, xi)| (mx - lambda * xi).abs())
        .fold(0.0, f64::max)
}
