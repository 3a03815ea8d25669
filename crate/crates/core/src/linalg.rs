//! Dense symmetric matrices and their full eigendecomposition.
//!
//! The solver reduces the matrix to tridiagonal form with Householder
//! reflections and then runs the implicit-shift QL iteration, accumulating
//! the transformations into the eigenvector matrix. Instances here are small
//! (a few thousand rows at most), where a dense solve is exact to machine
//! precision and needs no external linear-algebra stack.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Convergence threshold on a subdiagonal entry, relative to the running
/// tridiagonal scale.
const OFFDIAG_TOL: f64 = 1e-14;
/// QL sweeps allowed per eigenvalue before the solve is declared broken.
const MAX_SWEEPS: usize = 50;
/// Entries at or below this magnitude count as zero when fixing signs.
pub const SIGN_TOL: f64 = 1e-9;

/// Dense symmetric real matrix, stored full and row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    /// Builds from rows, taking the lower triangle as authoritative and
    /// mirroring it into the upper one.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.len();
        let mut m = SymMatrix::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for (j, &x) in row.iter().enumerate().take(i + 1) {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: f64) {
        self.data[i * self.dim + j] = x;
        self.data[j * self.dim + i] = x;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.dim)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Full eigendecomposition of a symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Row-major `dim × dim`; column `j` is the unit eigenvector of
    /// `eigenvalues[j]`.
    vectors: Vec<f64>,
    /// `max_j ‖M x_j − λ_j x_j‖∞`.
    pub max_residual: f64,
}

impl SpectrumResult {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Entry `i` of eigenvector `j`.
    #[inline]
    pub fn component(&self, i: usize, j: usize) -> f64 {
        self.vectors[i * self.dim() + j]
    }

    /// Eigenvector `j` as an owned vector.
    pub fn vector(&self, j: usize) -> Vec<f64> {
        (0..self.dim()).map(|i| self.component(i, j)).collect()
    }
}

/// Flips `v` so that its first entry with `|x| > SIGN_TOL` is positive.
pub fn canonicalize_sign(v: &mut [f64]) {
    if let Some(&first) = v.iter().find(|x| x.abs() > SIGN_TOL) {
        if first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// Eigenvalues (ascending) and orthonormal eigenvectors of `m`.
///
/// Each eigenvector is sign-canonicalized with [`canonicalize_sign`]. Within
/// a repeated eigenvalue the returned basis is whatever the iteration
/// produces; it is deterministic but otherwise arbitrary.
pub fn eigen_sym(m: &SymMatrix) -> Result<SpectrumResult> {
    let n = m.dim();
    if m.data.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFiniteMatrix);
    }
    if n == 0 {
        return Ok(SpectrumResult {
            eigenvalues: Vec::new(),
            vectors: Vec::new(),
            max_residual: 0.0,
        });
    }
    let mut v = m.data.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(n, &mut v, &mut d, &mut e);
    ql_implicit(n, &mut v, &mut d, &mut e)?;

    // selection sort keeps the order of equal eigenvalues stable
    for i in 0..n.saturating_sub(1) {
        let mut k = i;
        for j in i + 1..n {
            if d[j] < d[k] {
                k = j;
            }
        }
        if k != i {
            d.swap(i, k);
            for r in 0..n {
                v.swap(r * n + i, r * n + k);
            }
        }
    }

    let mut col = vec![0.0; n];
    let mut max_residual: f64 = 0.0;
    for j in 0..n {
        for r in 0..n {
            col[r] = v[r * n + j];
        }
        canonicalize_sign(&mut col);
        for r in 0..n {
            v[r * n + j] = col[r];
        }
        let mx = m.mul_vec(&col);
        let res = mx
            .iter()
            .zip(&col)
            .map(|(a, b)| (a - d[j] * b).abs())
            .fold(0.0, f64::max);
        max_residual = max_residual.max(res);
    }

    Ok(SpectrumResult {
        eigenvalues: d,
        vectors: v,
        max_residual,
    })
}

/// Householder reduction of the symmetric matrix in `v` to tridiagonal form.
/// On return `d` holds the diagonal, `e[1..]` the subdiagonal and `v` the
/// accumulated orthogonal transformation.
fn tridiagonalize(n: usize, v: &mut [f64], d: &mut [f64], e: &mut [f64]) {
    let at = |i: usize, j: usize| i * n + j;
    for j in 0..n {
        d[j] = v[at(n - 1, j)];
    }
    for i in (1..n).rev() {
        let scale: f64 = d[..i].iter().map(|x| x.abs()).sum();
        let mut h = 0.0;
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
                v[at(j, i)] = 0.0;
            }
        } else {
            for dk in d[..i].iter_mut() {
                *dk /= scale;
                h += *dk * *dk;
            }
            let mut f = d[i - 1];
            let mut g = libm::sqrt(h);
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            e[..i].iter_mut().for_each(|x| *x = 0.0);
            for j in 0..i {
                f = d[j];
                v[at(j, i)] = f;
                g = e[j] + v[at(j, j)] * f;
                for k in j + 1..i {
                    g += v[at(k, j)] * d[k];
                    e[k] += v[at(k, j)] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[at(k, j)] -= f * e[k] + g * d[k];
                }
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    for i in 0..n - 1 {
        v[at(n - 1, i)] = v[at(i, i)];
        v[at(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[at(k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[at(k, i + 1)] * v[at(k, j)];
                }
                for k in 0..=i {
                    v[at(k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[at(k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[at(n - 1, j)];
        v[at(n - 1, j)] = 0.0;
    }
    v[at(n - 1, n - 1)] = 1.0;
    e[0] = 0.0;
}

/// Implicit-shift QL iteration on the tridiagonal matrix `(d, e)`,
/// rotating the columns of `v` along.
fn ql_implicit(n: usize, v: &mut [f64], d: &mut [f64], e: &mut [f64]) -> Result<()> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut shift_total = 0.0;
    let mut scale: f64 = 0.0;
    for l in 0..n {
        scale = scale.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > OFFDIAG_TOL * scale {
            m += 1;
        }
        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > MAX_SWEEPS {
                    return Err(Error::NoConvergence { index: l });
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = libm::hypot(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d[l + 2..].iter_mut() {
                    *di -= h;
                }
                shift_total += h;

                p = d[m];
                let (mut c, mut c2, mut c3) = (1.0, 1.0, 1.0);
                let el1 = e[l + 1];
                let (mut s, mut s2) = (0.0, 0.0);
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = libm::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for k in 0..n {
                        let row = k * n;
                        h = v[row + i + 1];
                        v[row + i + 1] = s * v[row + i] + c * h;
                        v[row + i] = c * v[row + i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= OFFDIAG_TOL * scale {
                    break;
                }
            }
        }
        d[l] += shift_total;
        e[l] = 0.0;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_decomposition(m: &SymMatrix, s: &SpectrumResult) {
        let n = m.dim();
        assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        for a in 0..n {
            for b in 0..n {
                let dot: f64 = (0..n).map(|i| s.component(i, a) * s.component(i, b)).sum();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-8, "gram[{a}][{b}] = {dot}");
            }
        }
        assert!(s.max_residual <= 1e-8 * m.norm_inf().max(1.0));
    }

    #[test]
    fn k2_laplacian() {
        let m = SymMatrix::from_rows(&[[1.0, -1.0], [-1.0, 1.0]]).unwrap();
        let s = eigen_sym(&m).unwrap();
        assert!((s.eigenvalues[0]).abs() < 1e-12);
        assert!((s.eigenvalues[1] - 2.0).abs() < 1e-12);
        check_decomposition(&m, &s);
    }

    #[test]
    fn diagonal_and_one_by_one() {
        let m =
            SymMatrix::from_rows(&[[3.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 2.0]]).unwrap();
        let s = eigen_sym(&m).unwrap();
        assert_eq!(s.eigenvalues, [-1.0, 2.0, 3.0]);
        let one = SymMatrix::from_rows(&[[5.0]]).unwrap();
        assert_eq!(eigen_sym(&one).unwrap().eigenvalues, [5.0]);
        let zero = SymMatrix::zeros(4);
        check_decomposition(&zero, &eigen_sym(&zero).unwrap());
    }

    #[test]
    fn rejects_non_finite() {
        let m = SymMatrix::from_rows(&[[1.0, 0.0], [f64::NAN, 1.0]]).unwrap();
        assert_eq!(eigen_sym(&m), Err(Error::NonFiniteMatrix));
    }

    #[test]
    fn lower_triangle_is_authoritative() {
        let m = SymMatrix::from_rows(&[[1.0, 9.0], [2.0, 1.0]]).unwrap();
        assert_eq!(m.get(0, 1), 2.0);
    }

    #[test]
    fn sign_canonical() {
        let mut v = [0.0, -1e-12, -0.5, 0.5];
        canonicalize_sign(&mut v);
        assert!(v[2] > 0.0);
    }

    proptest! {
        #[test]
        fn random_symmetric_decomposes(n in 1usize..12, seed in proptest::collection::vec(-5.0f64..5.0, 144)) {
            let mut m = SymMatrix::zeros(n);
            for i in 0..n {
                for j in 0..=i {
                    m.set(i, j, seed[i * 12 + j]);
                }
            }
            let s = eigen_sym(&m).unwrap();
            check_decomposition(&m, &s);
            let sum: f64 = s.eigenvalues.iter().sum();
            prop_assert!((sum - m.trace()).abs() < 1e-8 * (1.0 + m.trace().abs()));
        }
    }
}
