//! Adjacency spectrum with eigenvalues grouped into distinct values, the
//! principal idempotents (spectral projectors), and the trace scalar product
//! on matrices.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::mat::{sym_eigen, Mat};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not regular (degrees range {min}..={max})")]
    NotRegular { min: usize, max: usize },
    #[error("grouping tolerance must be positive, got {0}")]
    BadGroupingTol(f64),
    #[error("largest eigenvalue {lambda0} has multiplicity {mult}, contradicting connectivity")]
    PerronMultiplicity { lambda0: f64, mult: usize },
    #[error("largest eigenvalue {lambda0} differs from degree {degree}")]
    PerronValue { lambda0: f64, degree: usize },
    #[error("idempotent residual {residual} exceeds the hard ceiling {ceiling}")]
    IdempotentResidual { residual: f64, ceiling: f64 },
}

/// Distinct eigenvalues in decreasing order with multiplicities and an
/// orthonormal eigenbasis grouped by eigenvalue.
#[derive(Debug, Clone)]
pub struct Spectrum {
    n: usize,
    lambdas: Vec<f64>,
    mults: Vec<usize>,
    /// Orthonormal basis, columns ordered so the first `mults[0]` columns span
    /// the λ₀ eigenspace, the next `mults[1]` the λ₁ eigenspace, and so on.
    basis: Mat,
    grouping_tol: f64,
    warnings: Vec<String>,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct eigenvalues minus one.
    pub fn d(&self) -> usize {
        self.lambdas.len() - 1
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn lambda(&self, j: usize) -> f64 {
        self.lambdas[j]
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    pub fn grouping_tol(&self) -> f64 {
        self.grouping_tol
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Assemble a spectrum from known eigenvalues/multiplicities and an
    /// orthonormal basis. Intended for oracles and synthetic inputs; the
    /// analysis pipeline always goes through [`eigendecompose`].
    pub fn from_parts(lambdas: Vec<f64>, mults: Vec<usize>, basis: Mat) -> Spectrum {
        let n: usize = mults.iter().sum();
        assert_eq!(lambdas.len(), mults.len());
        assert_eq!(basis.n(), n);
        Spectrum { n, lambdas, mults, basis, grouping_tol: 0.0, warnings: Vec::new() }
    }
}

/// Eigendecompose the adjacency matrix of a connected regular graph and group
/// raw eigenvalues into distinct values by gap splitting.
pub fn eigendecompose(g: &Graph, grouping_tol: Option<f64>) -> Result<Spectrum, SpectralError> {
    let n = g.n();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let degree = g.degree().ok_or_else(|| {
        let degs = (0..n).map(|u| g.degree_of(u));
        SpectralError::NotRegular {
            min: degs.clone().min().unwrap_or(0),
            max: degs.max().unwrap_or(0),
        }
    })?;
    if let Some(t) = grouping_tol {
        if !(t > 0.0) {
            return Err(SpectralError::BadGroupingTol(t));
        }
    }

    let eigen = sym_eigen(&g.adjacency_matrix());
    let raw = &eigen.values; // decreasing
    let tol = grouping_tol.unwrap_or_else(|| 1e-9 * 1.0_f64.max(raw[0].abs()));

    // single-linkage gap splitting on the sorted values
    let mut bounds = Vec::new(); // exclusive end index of each group
    for k in 1..n {
        if raw[k - 1] - raw[k] > tol {
            bounds.push(k);
        }
    }
    bounds.push(n);

    let mut warnings = Vec::new();
    let mut lambdas = Vec::with_capacity(bounds.len());
    let mut mults = Vec::with_capacity(bounds.len());
    let mut start = 0usize;
    for (gi, &end) in bounds.iter().enumerate() {
        let group = &raw[start..end];
        let spread = group[0] - group[group.len() - 1];
        if spread > tol {
            warnings.push(format!(
                "eigenvalue group {gi} has internal spread {spread:.3e} above the grouping tolerance {tol:.3e}"
            ));
        }
        if end < n {
            let gap = raw[end - 1] - raw[end];
            if gap <= 2.0 * tol {
                warnings.push(format!(
                    "ambiguous eigenvalue gap {gap:.3e} between groups {gi} and {} (tolerance {tol:.3e})",
                    gi + 1
                ));
            }
        }
        lambdas.push(group.iter().sum::<f64>() / group.len() as f64);
        mults.push(group.len());
        start = end;
    }

    if mults[0] != 1 {
        return Err(SpectralError::PerronMultiplicity { lambda0: lambdas[0], mult: mults[0] });
    }
    if (lambdas[0] - degree as f64).abs() > 1e-8 * 1.0_f64.max(degree as f64) {
        return Err(SpectralError::PerronValue { lambda0: lambdas[0], degree });
    }

    Ok(Spectrum {
        n,
        lambdas,
        mults,
        basis: eigen.vectors,
        grouping_tol: tol,
        warnings,
    })
}

/// Worst-case residuals of the idempotent invariants, reported alongside the
/// verdicts.
#[derive(Debug, Clone, Copy, Default)]
pub struct IdempotentResiduals {
    /// max over j,k of max-entry |E_j E_k − δ_jk E_j|
    pub pairwise: f64,
    /// max-entry |Σ_j E_j − I|
    pub completeness: f64,
    /// max over j of max-entry |A E_j − λ_j E_j|
    pub eigen: f64,
    /// max over j of |tr E_j − m_j|
    pub trace: f64,
}

impl IdempotentResiduals {
    pub fn max(&self) -> f64 {
        self.pairwise.max(self.completeness).max(self.eigen).max(self.trace)
    }
}

/// The principal idempotents E_0 .. E_d: orthogonal projections onto the
/// eigenspaces, built from the orthonormal eigenbasis.
#[derive(Debug, Clone)]
pub struct Idempotents {
    mats: Vec<Mat>,
    pub residuals: IdempotentResiduals,
}

impl Idempotents {
    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn get(&self, j: usize) -> &Mat {
        &self.mats[j]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Mat> {
        self.mats.iter()
    }
}

/// Build the idempotents of `g` from a spectrum produced by
/// [`eigendecompose`]. `working_tol` sets the hard residual ceiling at ten
/// times its value.
pub fn idempotents(
    g: &Graph,
    s: &Spectrum,
    working_tol: f64,
) -> Result<Idempotents, SpectralError> {
    let n = s.n;
    let mut mats = Vec::with_capacity(s.lambdas.len());
    let mut col = 0usize;
    for &m in &s.mults {
        let mut e = Mat::zeros(n);
        for k in col..col + m {
            for i in 0..n {
                let vik = s.basis[(i, k)];
                if vik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    e[(i, j)] += vik * s.basis[(j, k)];
                }
            }
        }
        mats.push(e);
        col += m;
    }

    let mut residuals = IdempotentResiduals::default();
    let a = g.adjacency_matrix();
    let mut total = Mat::zeros(n);
    for (j, e) in mats.iter().enumerate() {
        total.add_scaled(1.0, e);
        let ae = a.mul(e);
        residuals.eigen = residuals.eigen.max(ae.max_abs_diff(&e.scale(s.lambdas[j])));
        residuals.trace = residuals.trace.max((e.trace() - s.mults[j] as f64).abs());
        for (k, f) in mats.iter().enumerate() {
            let prod = e.mul(f);
            let expect = if j == k { e.clone() } else { Mat::zeros(n) };
            residuals.pairwise = residuals.pairwise.max(prod.max_abs_diff(&expect));
        }
    }
    residuals.completeness = total.max_abs_diff(&Mat::identity(n));

    let ceiling = 10.0 * working_tol;
    if residuals.max() > ceiling {
        return Err(SpectralError::IdempotentResidual { residual: residuals.max(), ceiling });
    }
    Ok(Idempotents { mats, residuals })
}

/// The trace scalar product ⟨R, S⟩ = (1/n)·sum(R ∘ S), which equals
/// (1/n)·tr(RS) for symmetric arguments. The 1/n factor normalizes ‖I‖² = 1
/// and ‖J‖² = n.
pub fn mat_inner(r: &Mat, s: &Mat) -> f64 {
    assert_eq!(r.n(), s.n(), "matrix dimension mismatch");
    let n = r.n();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            acc += r[(i, j)] * s[(i, j)];
        }
    }
    acc / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn k4() -> Graph {
        Graph::from_edge_list(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn k4_spectrum() {
        let s = eigendecompose(&k4(), None).unwrap();
        assert_eq!(s.d(), 1);
        assert!((s.lambda(0) - 3.0).abs() < 1e-12);
        assert!((s.lambda(1) + 1.0).abs() < 1e-12);
        assert_eq!(s.mults(), &[1, 3]);
        assert!(s.warnings().is_empty());
    }

    #[test]
    fn k4_idempotents() {
        let g = k4();
        let s = eigendecompose(&g, None).unwrap();
        let idem = idempotents(&g, &s, 1e-6).unwrap();
        let e0 = Mat::ones(4).scale(0.25);
        assert!(idem.get(0).max_abs_diff(&e0) < 1e-12);
        let e1 = Mat::identity(4).sub(&e0);
        assert!(idem.get(1).max_abs_diff(&e1) < 1e-12);
        assert!(idem.residuals.max() < 1e-12);
    }

    #[test]
    fn mat_inner_normalization() {
        assert_eq!(mat_inner(&Mat::identity(6), &Mat::identity(6)), 1.0);
        assert_eq!(mat_inner(&Mat::ones(6), &Mat::ones(6)), 6.0);
    }

    #[test]
    fn irregular_rejected() {
        let path = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            eigendecompose(&path, None).unwrap_err(),
            SpectralError::NotRegular { min: 1, max: 2 }
        );
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::build(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(eigendecompose(&g, None).unwrap_err(), SpectralError::Disconnected);
    }

    #[test]
    fn bad_grouping_tol() {
        let g = k4();
        assert_eq!(
            eigendecompose(&g, Some(0.0)).unwrap_err(),
            SpectralError::BadGroupingTol(0.0)
        );
    }
}
