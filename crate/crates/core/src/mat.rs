//! Dense square matrices over `f64` and a cyclic Jacobi eigensolver for
//! symmetric matrices. Desk scale (n up to a few thousand), row-major storage.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    n: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(n: usize) -> Self {
        Mat { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// The all-ones matrix J.
    pub fn ones(n: usize) -> Self {
        Mat { n, data: vec![1.0; n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                let dst = &mut out.data[i * n..(i + 1) * n];
                for j in 0..n {
                    dst[j] += a * row[j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.zip(other, |a, b| a - b)
    }

    pub fn hadamard(&self, other: &Mat) -> Mat {
        self.zip(other, |a, b| a * b)
    }

    fn zip(&self, other: &Mat, f: impl Fn(f64, f64) -> f64) -> Mat {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        Mat {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: f64) -> Mat {
        Mat { n: self.n, data: self.data.iter().map(|&a| c * a).collect() }
    }

    /// `self += c * other`, in place.
    pub fn add_scaled(&mut self, c: f64, other: &Mat) {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a += c * b;
        }
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }

    /// Sum of all entries.
    pub fn sum(&self) -> f64 {
        self.data.iter().sum()
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        self.data[i * self.n..(i + 1) * self.n].iter().sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &a| m.max(a.abs()))
    }

    /// Max-entrywise absolute difference, the matrix comparison used by every
    /// matrix-valued test in this crate.
    pub fn max_abs_diff(&self, other: &Mat) -> f64 {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (&a, &b)| m.max((a - b).abs()))
    }

    pub fn frobenius(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|&a| a * a).sum())
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// Eigendecomposition of a symmetric matrix: `values` in decreasing order,
/// `vectors` orthonormal with column k the eigenvector of `values[k]`.
#[derive(Clone, Debug)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: Mat,
}

/// Cyclic Jacobi eigensolver for symmetric matrices.
///
/// Deterministic (fixed sweep order, no pivot search) and accurate to a few
/// ulps of `‖A‖` for the matrix sizes this crate targets; the eigenvector
/// matrix is a product of plane rotations and so orthonormal by construction.
pub fn sym_eigen(a: &Mat) -> SymEigen {
    let n = a.n();
    let mut a = a.clone();
    let mut v = Mat::identity(n);
    if n > 1 {
        let scale = a.frobenius().max(f64::MIN_POSITIVE);
        let target = f64::EPSILON * scale;
        for _sweep in 0..100 {
            let mut off2 = 0.0;
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[(p, q)];
                    off2 += 2.0 * apq * apq;
                }
            }
            if libm::sqrt(off2) <= target {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut a, &mut v, p, q);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]).then(i.cmp(&j)));
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = Mat::from_fn(n, |r, c| v[(r, order[c])]);
    SymEigen { values, vectors }
}

/// One Jacobi rotation zeroing `a[(p, q)]`, accumulated into `v`.
fn rotate(a: &mut Mat, v: &mut Mat, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let app = a[(p, p)];
    let aqq = a[(q, q)];
    // Entries that can no longer affect the diagonal at working precision are
    // flushed to zero, which is what terminates the sweep loop.
    if apq.abs() <= f64::EPSILON * 0.5 * (app.abs() + aqq.abs()) * 1e-3 {
        a[(p, q)] = 0.0;
        a[(q, p)] = 0.0;
        return;
    }
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta >= 0.0 {
        1.0 / (theta + libm::sqrt(1.0 + theta * theta))
    } else {
        1.0 / (theta - libm::sqrt(1.0 + theta * theta))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;
    let tau = s / (1.0 + c);
    let n = a.n();

    a[(p, p)] = app - t * apq;
    a[(q, q)] = aqq + t * apq;
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for k in 0..n {
        if k != p && k != q {
            let akp = a[(k, p)];
            let akq = a[(k, q)];
            let new_kp = akp - s * (akq + tau * akp);
            let new_kq = akq + s * (akp - tau * akq);
            a[(k, p)] = new_kp;
            a[(p, k)] = new_kp;
            a[(k, q)] = new_kq;
            a[(q, k)] = new_kq;
        }
    }
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp - s * (vkq + tau * vkp);
        v[(k, q)] = vkq + s * (vkp - tau * vkq);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reconstruct(e: &SymEigen) -> Mat {
        let n = e.vectors.n();
        let mut out = Mat::zeros(n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    out[(i, j)] += e.values[k] * e.vectors[(i, k)] * e.vectors[(j, k)];
                }
            }
        }
        out
    }

    #[test]
    fn eigen_diag() {
        let mut a = Mat::zeros(3);
        a[(0, 0)] = 2.0;
        a[(1, 1)] = -1.0;
        a[(2, 2)] = 5.0;
        let e = sym_eigen(&a);
        assert_eq!(e.values, vec![5.0, 2.0, -1.0]);
    }

    #[test]
    fn eigen_2x2() {
        // [[0,1],[1,0]] has eigenvalues ±1
        let mut a = Mat::zeros(2);
        a[(0, 1)] = 1.0;
        a[(1, 0)] = 1.0;
        let e = sym_eigen(&a);
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] + 1.0).abs() < 1e-14);
        assert!(reconstruct(&e).max_abs_diff(&a) < 1e-14);
    }

    #[test]
    fn eigen_reconstructs_random_symmetric() {
        // splitmix-style fill, fixed seed
        let mut state: u64 = 0xdeadbeef;
        let mut next = move || {
            state = state.wrapping_add(0x9E3779B97F4A7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
            z ^= z >> 31;
            (z >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for n in [1usize, 2, 5, 17, 40] {
            let mut a = Mat::zeros(n);
            for i in 0..n {
                for j in 0..=i {
                    let x = next();
                    a[(i, j)] = x;
                    a[(j, i)] = x;
                }
            }
            let e = sym_eigen(&a);
            assert!(
                reconstruct(&e).max_abs_diff(&a) < 1e-12,
                "reconstruction failed for n={n}"
            );
            // columns orthonormal
            for p in 0..n {
                for q in 0..n {
                    let dot: f64 = (0..n).map(|k| e.vectors[(k, p)] * e.vectors[(k, q)]).sum();
                    let want = if p == q { 1.0 } else { 0.0 };
                    assert!((dot - want).abs() < 1e-12);
                }
            }
            // sorted decreasing
            for k in 1..n {
                assert!(e.values[k - 1] >= e.values[k]);
            }
        }
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn mul_shape_mismatch_panics() {
        let a = Mat::zeros(2);
        let b = Mat::zeros(3);
        let _ = a.mul(&b);
    }
}
