//! Signless Laplacian `Q(G) = D(G) + A(G)` and its largest eigenvalue, the
//! Q-index `q(G)`.
//!
//! [`q_index`] runs power iteration on each connected component and reports
//! the residual `‖Qx − ρx‖₂` of the returned unit vector. For a symmetric
//! matrix that residual bounds the distance from `ρ` to the spectrum, which is
//! what [`certified_compare`] uses as an interval radius. A cyclic Jacobi
//! eigensolver ([`q_index_dense`]) serves as an independent oracle and as the
//! fallback for orders up to [`DENSE_FALLBACK_MAX`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Largest order for which a failed power iteration falls back to Jacobi.
pub const DENSE_FALLBACK_MAX: usize = 64;

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_OFF_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("the Q-index of the empty graph is undefined")]
    EmptyGraph,
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error(
        "{method:?} eigensolver did not converge after {iterations} iterations \
         (estimate {estimate}, residual {residual})"
    )]
    NotConverged {
        method: Method,
        estimate: f64,
        residual: f64,
        iterations: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Power,
    Dense,
}

/// Q-index estimate together with the evidence for it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectralResult {
    pub q: f64,
    /// Unit eigenvector estimate, one entry per vertex.
    pub vector: Vec<f64>,
    /// `‖Q·x − q·x‖₂`.
    pub residual: f64,
    pub iterations: usize,
    pub method: Method,
}

impl SpectralResult {
    /// `[q − residual, q + residual]`, guaranteed to contain an eigenvalue.
    pub fn interval(&self) -> (f64, f64) {
        (self.q - self.residual, self.q + self.residual)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Ge,
    Lt,
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Comparison {
    pub verdict: Verdict,
    /// `q − threshold`.
    pub margin: f64,
}

/// Dense symmetric matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n, "row {i} has the wrong length");
            m.data[i * n..(i + 1) * n].copy_from_slice(r);
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: f64) {
        self.data[i * self.n + j] = x;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }
}

/// `Q(G) = D(G) + A(G)`.
pub fn signless_laplacian(g: &Graph) -> Result<DenseMatrix, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let mut q = DenseMatrix::zeros(n);
    for u in 0..n {
        q.set(u, u, g.degree(u) as f64);
        for v in g.neighbors(u) {
            q.set(u, v, 1.0);
        }
    }
    Ok(q)
}

/// Full eigendecomposition of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    /// Eigenvalues, unsorted, aligned with the columns of `vectors`.
    pub values: Vec<f64>,
    /// Eigenvectors stored as columns of a row-major matrix.
    pub vectors: DenseMatrix,
    pub sweeps: usize,
}

impl SymmetricEigen {
    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.vectors.order()).map(|i| self.vectors.get(i, j)).collect()
    }

    pub fn max_index(&self) -> Option<usize> {
        (0..self.values.len()).max_by(|&a, &b| self.values[a].total_cmp(&self.values[b]))
    }
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// `1e-12 · max(1, ‖A‖_F)`.
pub fn jacobi_eigen(matrix: &DenseMatrix) -> Result<SymmetricEigen, SpectralError> {
    let n = matrix.order();
    let mut a = matrix.clone();
    let mut v = DenseMatrix::zeros(n);
    for i in 0..n {
        v.set(i, i, 1.0);
    }
    let target = JACOBI_OFF_TOL * matrix.frobenius().max(1.0);
    let mut sweeps = 0;
    loop {
        let off = a.off_diagonal_norm();
        if off <= target {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            let top = (0..n).map(|i| a.get(i, i)).fold(f64::NEG_INFINITY, f64::max);
            return Err(SpectralError::NotConverged {
                method: Method::Dense,
                estimate: top,
                residual: off,
                iterations: sweeps,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a.get(k, p), a.get(k, q));
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let (apk, aqk) = (a.get(p, k), a.get(q, k));
                    a.set(p, k, c * apk - s * aqk);
                    a.set(q, k, s * apk + c * aqk);
                }
                for k in 0..n {
                    let (vkp, vkq) = (v.get(k, p), v.get(k, q));
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }
    Ok(SymmetricEigen {
        values: (0..n).map(|i| a.get(i, i)).collect(),
        vectors: v,
        sweeps,
    })
}

fn check_inputs(g: &Graph, tol: f64) -> Result<(), SpectralError> {
    if g.order() == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectralError::InvalidTolerance(tol));
    }
    Ok(())
}

/// Sparse `Q·x` over adjacency lists.
fn apply_q(adj: &[Vec<usize>], x: &[f64], out: &mut [f64]) {
    for (u, nbrs) in adj.iter().enumerate() {
        let mut s = nbrs.len() as f64 * x[u];
        for &v in nbrs {
            s += x[v];
        }
        out[u] = s;
    }
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|a| a * a).sum::<f64>().sqrt()
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Rayleigh quotient and residual of a unit vector.
fn rayleigh_residual(adj: &[Vec<usize>], x: &[f64]) -> (f64, f64) {
    let mut y = vec![0.0; x.len()];
    apply_q(adj, x, &mut y);
    let rho = dot(x, &y);
    let r = y.iter().zip(x).map(|(a, b)| (a - rho * b).powi(2)).sum::<f64>().sqrt();
    (rho, r)
}

fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|u| g.neighbors(u).collect()).collect()
}

struct PowerOutcome {
    q: f64,
    vector: Vec<f64>,
    residual: f64,
    iterations: usize,
    converged: bool,
}

/// Power iteration on one connected component given by adjacency lists.
fn power_component(adj: &[Vec<usize>], tol: f64) -> PowerOutcome {
    let n = adj.len();
    if adj.iter().all(Vec::is_empty) {
        let mut vector = vec![0.0; n];
        vector[0] = 1.0;
        return PowerOutcome {
            q: 0.0,
            vector,
            residual: 0.0,
            iterations: 0,
            converged: true,
        };
    }
    let cap = 100 * n + 10_000;
    let mut x: Vec<f64> = (0..n).map(|u| 1.0 + u as f64 / (10.0 * n as f64)).collect();
    let nx = norm(&x);
    x.iter_mut().for_each(|a| *a /= nx);
    let mut y = vec![0.0; n];
    let mut rho = 0.0;
    let mut residual = f64::INFINITY;
    for it in 1..=cap {
        apply_q(adj, &x, &mut y);
        rho = dot(&x, &y);
        residual = y.iter().zip(&x).map(|(a, b)| (a - rho * b).powi(2)).sum::<f64>().sqrt();
        if residual <= tol * rho.max(1.0) {
            return PowerOutcome {
                q: rho,
                vector: x,
                residual,
                iterations: it,
                converged: true,
            };
        }
        let ny = norm(&y);
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / ny;
        }
    }
    PowerOutcome {
        q: rho,
        vector: x,
        residual,
        iterations: cap,
        converged: false,
    }
}

/// Q-index by power iteration only, component by component.
pub fn q_index_power(g: &Graph, tol: f64) -> Result<SpectralResult, SpectralError> {
    check_inputs(g, tol)?;
    let n = g.order();
    let mut best: Option<(PowerOutcome, Vec<usize>)> = None;
    let mut iterations = 0;
    for comp in g.components() {
        let members: Vec<usize> = comp.iter().collect();
        let sub = g.induced_subgraph(&comp).expect("component of this graph");
        let out = power_component(&adjacency_lists(&sub), tol);
        iterations += out.iterations;
        if !out.converged {
            return Err(SpectralError::NotConverged {
                method: Method::Power,
                estimate: out.q,
                residual: out.residual,
                iterations,
            });
        }
        if best.as_ref().is_none_or(|(b, _)| out.q > b.q) {
            best = Some((out, members));
        }
    }
    let (out, members) = best.expect("n >= 1 gives at least one component");
    let mut vector = vec![0.0; n];
    for (i, &u) in members.iter().enumerate() {
        vector[u] = out.vector[i];
    }
    Ok(SpectralResult {
        q: out.q,
        vector,
        residual: out.residual,
        iterations,
        method: Method::Power,
    })
}

/// Q-index from a full Jacobi eigendecomposition of `Q(G)`.
pub fn q_index_dense(g: &Graph) -> Result<SpectralResult, SpectralError> {
    let q = signless_laplacian(g)?;
    let eig = jacobi_eigen(&q)?;
    let top = eig.max_index().expect("n >= 1");
    let mut x = eig.column(top);
    if x.iter().sum::<f64>() < 0.0 {
        x.iter_mut().for_each(|a| *a = -*a);
    }
    if g.is_connected() {
        // Perron vector is positive; rounding can leave entries at -1e-17.
        x.iter_mut().for_each(|a| *a = a.max(0.0));
    }
    let nx = norm(&x);
    x.iter_mut().for_each(|a| *a /= nx);
    let (rho, residual) = rayleigh_residual(&adjacency_lists(g), &x);
    Ok(SpectralResult {
        q: rho,
        vector: x,
        residual,
        iterations: eig.sweeps,
        method: Method::Dense,
    })
}

/// Q-index of `g` with stopping rule `‖Qx − ρx‖₂ ≤ tol·max(1, ρ)`.
///
/// Power iteration is tried first; if it exhausts its budget on a graph of
/// order at most [`DENSE_FALLBACK_MAX`], the Jacobi solver is used instead.
pub fn q_index(g: &Graph, tol: f64) -> Result<SpectralResult, SpectralError> {
    match q_index_power(g, tol) {
        Err(SpectralError::NotConverged { .. }) if g.order() <= DENSE_FALLBACK_MAX => {
            let r = q_index_dense(g)?;
            if r.residual <= tol * r.q.max(1.0) {
                Ok(r)
            } else {
                Err(SpectralError::NotConverged {
                    method: Method::Dense,
                    estimate: r.q,
                    residual: r.residual,
                    iterations: r.iterations,
                })
            }
        }
        other => other,
    }
}

/// Threshold test that never guesses: `ge` if `q − residual ≥ threshold`,
/// `lt` if `q + residual < threshold`, otherwise `indeterminate`.
pub fn certified_compare(r: &SpectralResult, threshold: f64) -> Comparison {
    let verdict = if r.q - r.residual >= threshold {
        Verdict::Ge
    } else if r.q + r.residual < threshold {
        Verdict::Lt
    } else {
        Verdict::Indeterminate
    };
    Comparison {
        verdict,
        margin: r.q - threshold,
    }
}
