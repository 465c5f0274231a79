//! Small dense complex matrices and vectors.
//!
//! Everything here is sized for n ≤ 4; no external linear-algebra
//! dependency is warranted at that scale. Matrices are row-major.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Dense n×n complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix { n, data: vec![C64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "rows must form a square matrix");
        CMatrix { n, data: rows.iter().flatten().copied().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.n, v.len());
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: C64) -> CMatrix {
        CMatrix { n: self.n, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        CMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        CMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> CMatrix {
        let mut out = CMatrix::identity(self.n);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn det(&self) -> C64 {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = C64::new(1.0, 0.0);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| {
                    a[i * n + col].norm().partial_cmp(&a[j * n + col].norm()).unwrap()
                })
                .unwrap();
            if a[pivot * n + col].norm() == 0.0 {
                return C64::new(0.0, 0.0);
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            for i in col + 1..n {
                let f = a[i * n + col] / p;
                for j in col..n {
                    let s = a[col * n + j];
                    a[i * n + j] -= f * s;
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan with partial pivoting.
    pub fn inverse(&self) -> Result<CMatrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = CMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| a[(i, col)].norm().partial_cmp(&a[(j, col)].norm()).unwrap())
                .unwrap();
            if a[(pivot, col)].norm() < 1e-300 {
                return Err(Error::RootFinding("singular matrix in inverse".into()));
            }
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a[(col, j)], a[(pivot, j)]);
                    a[(col, j)] = y;
                    a[(pivot, j)] = x;
                    let (x, y) = (inv[(col, j)], inv[(pivot, j)]);
                    inv[(col, j)] = y;
                    inv[(pivot, j)] = x;
                }
            }
            let p = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= p;
                inv[(col, j)] /= p;
            }
            for i in 0..n {
                if i == col {
                    continue;
                }
                let f = a[(i, col)];
                for j in 0..n {
                    let s = a[(col, j)];
                    a[(i, j)] -= f * s;
                    let s = inv[(col, j)];
                    inv[(i, j)] -= f * s;
                }
            }
        }
        Ok(inv)
    }

    /// Solve A x = b by Gaussian elimination with partial pivoting.
    pub fn solve(&self, b: &[C64]) -> Result<Vec<C64>> {
        let n = self.n;
        assert_eq!(b.len(), n);
        let mut a = self.data.clone();
        let mut rhs = b.to_vec();
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| {
                    a[i * n + col].norm().partial_cmp(&a[j * n + col].norm()).unwrap()
                })
                .unwrap();
            if a[pivot * n + col].norm() < 1e-300 {
                return Err(Error::RootFinding("singular matrix in solve".into()));
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                }
                rhs.swap(col, pivot);
            }
            for i in col + 1..n {
                let f = a[i * n + col] / a[col * n + col];
                for j in col..n {
                    let s = a[col * n + j];
                    a[i * n + j] -= f * s;
                }
                let s = rhs[col];
                rhs[i] -= f * s;
            }
        }
        for i in (0..n).rev() {
            let mut acc = rhs[i];
            for j in i + 1..n {
                acc -= a[i * n + j] * rhs[j];
            }
            rhs[i] = acc / a[i * n + i];
        }
        Ok(rhs)
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

/// Hermitian inner product ⟨w,z⟩ = Σ conj(w_i) z_i, anti-linear in the first slot.
pub fn hdot(w: &[C64], z: &[C64]) -> C64 {
    w.iter().zip(z).map(|(a, b)| a.conj() * b).sum()
}

pub fn norm_sq(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// Roots of a monic complex cubic λ³ + aλ² + bλ + c via Cardano.
pub fn cubic_roots_complex(a: C64, b: C64, c: C64) -> [C64; 3] {
    // depressed: λ = u - a/3, u³ + pu + q
    let third = C64::new(1.0 / 3.0, 0.0);
    let p = b - a * a * third;
    let q = c - a * b * third + a * a * a * C64::new(2.0 / 27.0, 0.0);
    let disc = (q * q * C64::new(0.25, 0.0) + p * p * p * C64::new(1.0 / 27.0, 0.0)).sqrt();
    let mut u3 = -q * C64::new(0.5, 0.0) + disc;
    if u3.norm() < 1e-30 {
        u3 = -q * C64::new(0.5, 0.0) - disc;
    }
    let omega = C64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let mut roots = [C64::new(0.0, 0.0); 3];
    if u3.norm() < 1e-300 {
        // triple root of the depressed cubic
        for r in roots.iter_mut() {
            *r = -a * third;
        }
        return roots;
    }
    let u0 = u3.cbrt();
    for (k, r) in roots.iter_mut().enumerate() {
        let u = u0 * omega.powu(k as u32);
        *r = u - p / (u * C64::new(3.0, 0.0)) - a * third;
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn inverse_roundtrip() {
        let m = CMatrix::from_rows(&[
            vec![c(1.0, 1.0), c(2.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 0.0), c(3.0, 0.5), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 2.0), c(-1.0, 0.0)],
        ]);
        let inv = m.inverse().unwrap();
        let prod = m.mul(&inv).sub(&CMatrix::identity(3));
        assert!(prod.max_abs() < 1e-12);
    }

    #[test]
    fn cubic_roots_reconstruct() {
        let (a, b, cc) = (c(1.0, -2.0), c(0.5, 0.3), c(-2.0, 1.0));
        for r in cubic_roots_complex(a, b, cc) {
            let val = r * r * r + a * r * r + b * r + cc;
            assert!(val.norm() < 1e-10, "residual {}", val.norm());
        }
    }

    #[test]
    fn det_of_singular_is_zero() {
        let m = CMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(2.0, 0.0)],
            vec![c(2.0, 0.0), c(4.0, 0.0)],
        ]);
        assert!(m.det().norm() < 1e-14);
    }
}
