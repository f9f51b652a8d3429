//! Predistance polynomials, the three-term recurrence, the Hoffman
//! polynomial, the preidempotent polynomials, and the two bracket transforms.
//!
//! Polynomials are represented primarily as value tables at the d+1 distinct
//! eigenvalues, where the orthogonalization is exact in principle; monomial
//! coefficients are derived secondarily by Newton interpolation for reporting
//! and for evaluating p_i(A) by Horner on matrices.

use alloc::vec;
use alloc::vec::Vec;

use crate::characterize::MatrixBundle;
use crate::graph::DistanceMatrices;
use crate::mat::Mat;
use crate::spectral::Spectrum;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PolyError {
    #[error("trace moment ⟨x,1⟩ = {0} is not zero; the spectrum does not come from a loopless graph")]
    NonzeroTrace(f64),
    #[error("normalization degenerate while constructing the degree-{degree} polynomial")]
    DegenerateNormalization { degree: usize },
    #[error("the transform needs {needed} distance matrices, found {found} (diameter below d)")]
    SquareBracketUnsupported { needed: usize, found: usize },
}

/// Scalar product ⟨f,g⟩ = (1/n) Σ_l m_l f(λ_l) g(λ_l) on value vectors over
/// the distinct eigenvalues.
pub fn inner_delta(f: &[f64], g: &[f64], s: &Spectrum) -> f64 {
    assert_eq!(f.len(), s.d() + 1, "value vector length mismatch");
    assert_eq!(g.len(), s.d() + 1, "value vector length mismatch");
    let mut acc = 0.0;
    for l in 0..f.len() {
        acc += s.mults()[l] as f64 * f[l] * g[l];
    }
    acc / s.n() as f64
}

/// Dual scalar product ⟨f,g⟩ = (1/n) Σ_l n_l f(λ_l) g(λ_l), weighted by the
/// predistance norms n_l instead of the multiplicities.
pub fn inner_blacktriangle(f: &[f64], g: &[f64], s: &Spectrum, ps: &PolySequence) -> f64 {
    assert!(ps.is_full(), "dual scalar product needs the full polynomial sequence");
    assert_eq!(f.len(), s.d() + 1, "value vector length mismatch");
    assert_eq!(g.len(), s.d() + 1, "value vector length mismatch");
    let mut acc = 0.0;
    for l in 0..f.len() {
        acc += ps.norm(l) * f[l] * g[l];
    }
    acc / s.n() as f64
}

/// The predistance polynomials p_0 .. p_k as value tables over the d+1
/// distinct eigenvalues, with their recurrence coefficients, norms
/// n_i = p_i(λ_0) and leading coefficients ω_i.
///
/// A full sequence has k = d. [`predistance_prefix`] can stop earlier, which
/// is useful when only the low-degree polynomials are wanted (for a graph
/// whose diameter sits far below d the high-degree norms underflow, which is
/// exactly the degenerate-normalization error).
#[derive(Debug, Clone)]
pub struct PolySequence {
    num_nodes: usize,
    values: Vec<Vec<f64>>,
    coeffs: Vec<Vec<f64>>,
    alpha: Vec<f64>,
    beta: Vec<f64>,
    gamma: Vec<f64>,
    norms: Vec<f64>,
    leading: Vec<f64>,
}

impl PolySequence {
    /// d + 1: number of distinct eigenvalues carrying the value tables.
    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    /// Highest constructed degree k.
    pub fn max_degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_full(&self) -> bool {
        self.max_degree() + 1 == self.num_nodes
    }

    /// p_i(λ_l).
    pub fn value(&self, i: usize, l: usize) -> f64 {
        self.values[i][l]
    }

    pub fn values_row(&self, i: usize) -> &[f64] {
        &self.values[i]
    }

    /// Monomial coefficients of p_i in ascending degree order (length i+1).
    pub fn coeffs(&self, i: usize) -> &[f64] {
        &self.coeffs[i]
    }

    pub fn alpha(&self, i: usize) -> f64 {
        self.alpha[i]
    }

    /// β_i, with the convention β_d = 0 for a full sequence.
    pub fn beta(&self, i: usize) -> f64 {
        if i == self.max_degree() {
            assert!(self.is_full(), "β at the top degree of a prefix is undefined");
            0.0
        } else {
            self.beta[i]
        }
    }

    /// γ_i for 1 ≤ i ≤ k, with the convention γ_0 = 0.
    pub fn gamma(&self, i: usize) -> f64 {
        if i == 0 {
            0.0
        } else {
            self.gamma[i - 1]
        }
    }

    /// α_0 .. α_k.
    pub fn alphas(&self) -> &[f64] {
        &self.alpha
    }

    /// β_0 .. β_{k−1}.
    pub fn betas(&self) -> &[f64] {
        &self.beta
    }

    /// γ_1 .. γ_k.
    pub fn gammas(&self) -> &[f64] {
        &self.gamma
    }

    /// ω_0 .. ω_k.
    pub fn leadings(&self) -> &[f64] {
        &self.leading
    }

    /// n_i = ⟨p_i, p_i⟩ = p_i(λ_0).
    pub fn norm(&self, i: usize) -> f64 {
        self.norms[i]
    }

    pub fn norms(&self) -> &[f64] {
        &self.norms
    }

    /// Leading coefficient ω_i = (γ_1 ⋯ γ_i)⁻¹.
    pub fn leading(&self, i: usize) -> f64 {
        self.leading[i]
    }

    /// s_i(λ_0) = Σ_{j≤i} n_j, the partial Hoffman value at λ_0.
    pub fn partial_sum_at_lambda0(&self, i: usize) -> f64 {
        self.norms[..=i].iter().sum()
    }

    /// Evaluate p_i at a scalar by Horner on the monomial coefficients.
    pub fn eval(&self, i: usize, x: f64) -> f64 {
        horner(&self.coeffs[i], x)
    }

    /// Evaluate p_i at the adjacency matrix by Horner on the monomial
    /// coefficients.
    pub fn eval_mat(&self, i: usize, a: &Mat) -> Mat {
        horner_mat(&self.coeffs[i], a)
    }
}

pub(crate) fn horner(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub(crate) fn horner_mat(coeffs: &[f64], a: &Mat) -> Mat {
    let n = a.n();
    let mut acc = Mat::zeros(n);
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if k == coeffs.len() - 1 {
            for i in 0..n {
                acc[(i, i)] = c;
            }
        } else {
            acc = acc.mul(a);
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
    }
    acc
}

/// Construct the full predistance sequence p_0 .. p_d.
pub fn predistance(s: &Spectrum) -> Result<PolySequence, PolyError> {
    predistance_prefix(s, s.d())
}

/// Construct p_0 .. p_k by the three-term recurrence: α_i and β_{i−1} from
/// scalar products against the previous polynomials, γ_{i+1} fixed by the
/// normalization ⟨p_{i+1}, p_{i+1}⟩ = p_{i+1}(λ_0). The recurrence residual is
/// re-orthogonalized against all previous polynomials before normalizing —
/// the extra projections vanish in exact arithmetic and keep the numerical
/// orthogonality at machine precision for large k.
pub fn predistance_prefix(s: &Spectrum, k: usize) -> Result<PolySequence, PolyError> {
    let d = s.d();
    assert!(k <= d, "cannot construct more than d+1 orthogonal polynomials");
    let lam = s.lambdas();

    let ones = vec![1.0; d + 1];
    let trace_moment = inner_delta(lam, &ones, s);
    if trace_moment.abs() > 1e-8 * 1.0_f64.max(lam[0].abs()) {
        return Err(PolyError::NonzeroTrace(trace_moment));
    }

    let mut values: Vec<Vec<f64>> = vec![ones];
    let mut norms = vec![1.0_f64];
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    let mut gamma = Vec::new();

    for i in 0..k {
        let xp: Vec<f64> = lam.iter().zip(&values[i]).map(|(&x, &p)| x * p).collect();
        let a_i = inner_delta(&xp, &values[i], s) / norms[i];
        alpha.push(a_i);
        let mut r: Vec<f64> = xp.iter().zip(&values[i]).map(|(&x, &p)| x - a_i * p).collect();
        if i >= 1 {
            let b = inner_delta(&xp, &values[i - 1], s) / norms[i - 1];
            beta.push(b);
            for (rl, &pl) in r.iter_mut().zip(&values[i - 1]) {
                *rl -= b * pl;
            }
        }
        for j in 0..=i {
            let c = inner_delta(&r, &values[j], s) / norms[j];
            for (rl, &pl) in r.iter_mut().zip(&values[j]) {
                *rl -= c * pl;
            }
        }
        let rr = inner_delta(&r, &r, s);
        let r0 = r[0];
        if !(rr > 0.0) || !(r0 > 0.0) {
            return Err(PolyError::DegenerateNormalization { degree: i + 1 });
        }
        let g = rr / r0;
        gamma.push(g);
        let next: Vec<f64> = r.iter().map(|&x| x / g).collect();
        norms.push(next[0]);
        values.push(next);
    }
    // coefficients not produced by the construction loop: α_k, and β_{k−1}
    // when the loop stopped before computing it
    {
        let xp: Vec<f64> = lam.iter().zip(&values[k]).map(|(&x, &p)| x * p).collect();
        alpha.push(inner_delta(&xp, &values[k], s) / norms[k]);
        if k >= 1 {
            beta.push(inner_delta(&xp, &values[k - 1], s) / norms[k - 1]);
        }
    }

    let mut leading = vec![1.0];
    for &g in &gamma {
        let prev = *leading.last().expect("nonempty");
        leading.push(prev / g);
    }

    let coeffs = values
        .iter()
        .enumerate()
        .map(|(i, row)| newton_coeffs(&lam[..=i], &row[..=i]))
        .collect();

    Ok(PolySequence { num_nodes: d + 1, values, coeffs, alpha, beta, gamma, norms, leading })
}

/// Monomial coefficients (ascending) of the polynomial interpolating
/// `(xs[j], ys[j])`, by Newton divided differences.
fn newton_coeffs(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let k = xs.len() - 1;
    let mut dd = ys.to_vec();
    for level in 1..=k {
        for j in (level..=k).rev() {
            dd[j] = (dd[j] - dd[j - 1]) / (xs[j] - xs[j - level]);
        }
    }
    let mut coeffs = vec![dd[k]];
    for j in (0..k).rev() {
        let mut next = vec![0.0; coeffs.len() + 1];
        for (t, &c) in coeffs.iter().enumerate() {
            next[t + 1] += c;
            next[t] -= xs[j] * c;
        }
        next[0] += dd[j];
        coeffs = next;
    }
    coeffs
}

/// The Hoffman polynomial H = Σ_i p_i, satisfying H(λ_0) = n and H(λ_j) = 0
/// for j ≥ 1, and H(A) = J exactly when the graph is connected and regular.
#[derive(Debug, Clone)]
pub struct HoffmanPoly {
    pub values: Vec<f64>,
    pub coeffs: Vec<f64>,
}

pub fn hoffman(ps: &PolySequence) -> HoffmanPoly {
    assert!(ps.is_full(), "the Hoffman polynomial needs the full sequence");
    let d = ps.max_degree();
    let mut values = vec![0.0; d + 1];
    let mut coeffs = vec![0.0; d + 1];
    for i in 0..=d {
        for l in 0..=d {
            values[l] += ps.value(i, l);
        }
        for (t, &c) in ps.coeffs(i).iter().enumerate() {
            coeffs[t] += c;
        }
    }
    HoffmanPoly { values, coeffs }
}

/// Value table of the preidempotent polynomials:
/// q_j(λ_i) = (m_j / n_i) · p_i(λ_j). Dual to the predistance family:
/// q_j(λ_0) = m_j and ⟨q_i, q_j⟩ = δ_ij m_i under the n-weighted product.
#[derive(Debug, Clone)]
pub struct PreidempotentTable {
    q: Vec<Vec<f64>>,
}

impl PreidempotentTable {
    /// q_j(λ_i).
    pub fn value(&self, j: usize, i: usize) -> f64 {
        self.q[j][i]
    }

    pub fn row(&self, j: usize) -> &[f64] {
        &self.q[j]
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }
}

pub fn preidempotent_table(s: &Spectrum, ps: &PolySequence) -> PreidempotentTable {
    assert!(ps.is_full(), "the preidempotent table needs the full sequence");
    let d = s.d();
    let q = (0..=d)
        .map(|j| {
            let mj = s.mults()[j] as f64;
            (0..=d).map(|i| mj * ps.value(i, j) / ps.norm(i)).collect()
        })
        .collect();
    PreidempotentTable { q }
}

/// f{A} = (1/√n) Σ_l f(λ_l) p_l(A).
pub fn curly_bracket(f: &[f64], bundle: &MatrixBundle) -> Mat {
    let p_a = bundle.poly_matrices();
    assert_eq!(f.len(), p_a.len(), "curly bracket needs all d+1 evaluated polynomials");
    let n = bundle.n();
    let mut out = Mat::zeros(n);
    for (l, mat) in p_a.iter().enumerate() {
        out.add_scaled(f[l], mat);
    }
    out.scale(1.0 / libm::sqrt(n as f64))
}

/// f[A] = (1/n) Σ_i f(λ_i) A_i. Needs d+1 distance matrices, so it is only
/// defined when D = d.
pub fn square_bracket(f: &[f64], dm: &DistanceMatrices) -> Result<Mat, PolyError> {
    if f.len() != dm.len() {
        return Err(PolyError::SquareBracketUnsupported { needed: f.len(), found: dm.len() });
    }
    let n = dm.get(0).n();
    let mut out = Mat::zeros(n);
    for (i, mat) in dm.iter().enumerate() {
        out.add_scaled(f[i], mat);
    }
    Ok(out.scale(1.0 / n as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::Mat;
    use crate::spectral::Spectrum;

    fn petersen_spectrum() -> Spectrum {
        Spectrum::from_parts(vec![3.0, 1.0, -2.0], vec![1, 5, 4], Mat::identity(10))
    }

    fn k4_spectrum() -> Spectrum {
        Spectrum::from_parts(vec![3.0, -1.0], vec![1, 3], Mat::identity(4))
    }

    #[test]
    fn inner_delta_examples() {
        let s = petersen_spectrum();
        let ones = vec![1.0; 3];
        assert!((inner_delta(&ones, &ones, &s) - 1.0).abs() < 1e-15);
        let x = s.lambdas().to_vec();
        // (1/10)(9 + 5·1 + 4·4) = 3 = δ
        assert!((inner_delta(&x, &x, &s) - 3.0).abs() < 1e-15);
        let k4 = k4_spectrum();
        let x4 = k4.lambdas().to_vec();
        assert!(inner_delta(&x4, &[1.0, 1.0], &k4).abs() < 1e-15);
    }

    #[test]
    fn petersen_predistance() {
        let s = petersen_spectrum();
        let ps = predistance(&s).unwrap();
        assert_eq!(ps.norms(), &[1.0, 3.0, 6.0]);
        // p_2 = x² − 3
        assert_eq!(ps.coeffs(2).len(), 3);
        assert!((ps.coeffs(2)[0] + 3.0).abs() < 1e-12);
        assert!(ps.coeffs(2)[1].abs() < 1e-12);
        assert!((ps.coeffs(2)[2] - 1.0).abs() < 1e-12);
        // recurrence identities
        for i in 0..=2 {
            assert!((ps.alpha(i) + ps.beta(i) + ps.gamma(i) - 3.0).abs() < 1e-12);
        }
        for i in 0..2 {
            assert!((ps.beta(i) * ps.norm(i) - ps.gamma(i + 1) * ps.norm(i + 1)).abs() < 1e-12);
        }
    }

    #[test]
    fn k4_predistance() {
        let s = k4_spectrum();
        let ps = predistance(&s).unwrap();
        assert_eq!(ps.norms(), &[1.0, 3.0]);
        // p_1 = x
        assert!(ps.coeffs(1)[0].abs() < 1e-14);
        assert!((ps.coeffs(1)[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn c5_predistance() {
        let c = 2.0 * core::f64::consts::PI / 5.0;
        let s = Spectrum::from_parts(
            vec![2.0, 2.0 * libm::cos(c), 2.0 * libm::cos(2.0 * c)],
            vec![1, 2, 2],
            Mat::identity(5),
        );
        let ps = predistance(&s).unwrap();
        // p_2 = x² − 2 with n_2 = 2
        assert!((ps.coeffs(2)[0] + 2.0).abs() < 1e-12);
        assert!(ps.coeffs(2)[1].abs() < 1e-12);
        assert!((ps.coeffs(2)[2] - 1.0).abs() < 1e-12);
        assert!((ps.norm(2) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn hoffman_petersen() {
        let s = petersen_spectrum();
        let ps = predistance(&s).unwrap();
        let h = hoffman(&ps);
        // H = x² + x − 2
        assert!((h.coeffs[0] + 2.0).abs() < 1e-12);
        assert!((h.coeffs[1] - 1.0).abs() < 1e-12);
        assert!((h.coeffs[2] - 1.0).abs() < 1e-12);
        assert!((h.values[0] - 10.0).abs() < 1e-12);
        assert!(h.values[1].abs() < 1e-12);
        assert!(h.values[2].abs() < 1e-12);
    }

    #[test]
    fn preidempotent_petersen() {
        let s = petersen_spectrum();
        let ps = predistance(&s).unwrap();
        let q = preidempotent_table(&s, &ps);
        // q_0 ≡ 1
        for i in 0..=2 {
            assert!((q.value(0, i) - 1.0).abs() < 1e-12);
        }
        // q_1 = (5, 5/3, −5/3); q_2(λ_0) = m_2 = 4
        assert!((q.value(1, 0) - 5.0).abs() < 1e-12);
        assert!((q.value(1, 1) - 5.0 / 3.0).abs() < 1e-12);
        assert!((q.value(1, 2) + 5.0 / 3.0).abs() < 1e-12);
        assert!((q.value(2, 0) - 4.0).abs() < 1e-12);
        // duality: ⟨q_i, q_j⟩ = δ_ij m_i under the n-weighted product
        for i in 0..=2 {
            for j in 0..=2 {
                let want = if i == j { s.mults()[i] as f64 } else { 0.0 };
                let got = inner_blacktriangle(q.row(i), q.row(j), &s, &ps);
                assert!((got - want).abs() < 1e-12, "duality failed at ({i},{j}): {got}");
            }
        }
    }

    #[test]
    fn blacktriangle_constant() {
        let s = petersen_spectrum();
        let ps = predistance(&s).unwrap();
        let ones = vec![1.0; 3];
        assert!((inner_blacktriangle(&ones, &ones, &s, &ps) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn nonzero_trace_rejected() {
        let s = Spectrum::from_parts(vec![2.0, 1.0], vec![1, 1], Mat::identity(2));
        assert!(matches!(predistance(&s), Err(PolyError::NonzeroTrace(_))));
    }

    #[test]
    fn horner_matches_values() {
        let s = petersen_spectrum();
        let ps = predistance(&s).unwrap();
        for i in 0..=2 {
            for (l, &x) in s.lambdas().iter().enumerate() {
                assert!((ps.eval(i, x) - ps.value(i, l)).abs() < 1e-12);
            }
        }
    }
}
