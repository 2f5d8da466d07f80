//! Small dense complex matrices and the two-qubit density-matrix carrier.
//!
//! Everything here is sized for 2×2 and 4×4 problems. Eigen- and singular
//! value decompositions use cyclic Jacobi rotations, which at these sizes
//! converge in a handful of sweeps and give eigenvalues accurate to a few
//! ulps of the matrix norm.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Largest entrywise asymmetry `|m_ij - conj(m_ji)|` accepted by the
/// eigensolver before it rejects the input.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Tolerances a [`DensityMatrix`] must satisfy.
pub const STATE_HERMITIAN_TOL: f64 = 1e-12;
pub const STATE_TRACE_TOL: f64 = 1e-12;
pub const STATE_PSD_TOL: f64 = 1e-10;

const MAX_SWEEPS: usize = 100;

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row-major entries. Panics if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Self { rows, cols, data }
    }

    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Self {
        Self::from_vec(rows, cols, data.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn diag(values: &[f64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { C64::new(values[i], 0.0) } else { ZERO })
    }

    /// Outer product `|v><v|`.
    pub fn projector(v: &[C64]) -> Self {
        let n = v.len();
        Self::from_fn(n, n, |i, j| v[i] * v[j].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise `|m_ij - conj(m_ji)|`; infinite for non-square input.
    pub fn hermitian_asymmetry(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0_f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `(A + A†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] + self[(j, i)].conj()) * 0.5
        })
    }

    /// `A B - B A`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `A B + B A`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;

    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;

    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;

    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Pauli matrix by index: 0 = identity, 1 = x, 2 = y, 3 = z.
pub fn pauli(index: usize) -> CMatrix {
    match index {
        0 => CMatrix::identity(2),
        1 => CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]),
        2 => CMatrix::from_vec(2, 2, vec![ZERO, -I, I, ZERO]),
        3 => CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]),
        _ => panic!("pauli index {index} out of range"),
    }
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    CMatrix::from_fn(rows, cols, |i, j| {
        a[(i / b.rows, j / b.cols)] * b[(i % b.rows, j % b.cols)]
    })
}

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct Eigensystem {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors stored as columns, in the order of `values`.
    pub vectors: CMatrix,
}

impl Eigensystem {
    pub fn vector(&self, k: usize) -> Vec<C64> {
        (0..self.vectors.rows()).map(|i| self.vectors[(i, k)]).collect()
    }

    /// `V f(Λ) V†`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let n = self.values.len();
        let mapped: Vec<f64> = self.values.iter().map(|&v| f(v)).collect();
        CMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| self.vectors[(i, k)] * self.vectors[(j, k)].conj() * mapped[k])
                .sum()
        })
    }
}

/// Unitary 2×2 block `[[c, s], [-s e^{-iφ}, c e^{-iφ}]]` that diagonalises the
/// Hermitian block `[[a, b], [b*, d]]` with `b = |b| e^{iφ}` under `V† H V`.
fn jacobi_rotation(a: f64, d: f64, b: C64) -> (f64, f64, C64) {
    let abs_b = b.norm();
    let phase = if abs_b > 0.0 { (b / abs_b).conj() } else { ONE };
    let tau = (d - a) / (2.0 * abs_b);
    let t = if tau.is_finite() {
        let sign = if tau >= 0.0 { 1.0 } else { -1.0 };
        sign / (tau.abs() + (1.0 + tau * tau).sqrt())
    } else {
        0.0
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, t * c, phase)
}

/// Diagonalises a Hermitian matrix with cyclic complex Jacobi rotations.
///
/// Inputs whose asymmetry is within [`HERMITIAN_TOL`] are symmetrised to
/// `(H + H†)/2` first; anything worse is rejected.
pub fn hermitian_eigensystem(h: &CMatrix) -> Result<Eigensystem> {
    if !h.is_square() {
        return Err(Error::Dimension(format!(
            "eigensystem needs a square matrix, got {}x{}",
            h.rows, h.cols
        )));
    }
    let asymmetry = h.hermitian_asymmetry();
    if !(asymmetry <= HERMITIAN_TOL) {
        return Err(Error::NotHermitian { asymmetry });
    }
    let n = h.rows;
    let mut a = h.hermitian_part();
    let mut v = CMatrix::identity(n);
    let scale = a.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= f64::EPSILON * 1e-3 * scale || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let b = a[(p, q)];
                if b.norm() == 0.0 {
                    continue;
                }
                let (c, s, ph) = jacobi_rotation(a[(p, p)].re, a[(q, q)].re, b);
                // A <- A V on columns p, q.
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c - akq * ph * s;
                    a[(k, q)] = akp * s + akq * ph * c;
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * ph * s;
                    v[(k, q)] = vkp * s + vkq * ph * c;
                }
                // A <- V† A on rows p, q.
                let phc = ph.conj();
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c - aqk * phc * s;
                    a[(q, k)] = apk * s + aqk * phc * c;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)].im = 0.0;
                a[(q, q)].im = 0.0;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = CMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(Eigensystem { values, vectors })
}

/// Singular values in descending order, by one-sided (Hestenes) Jacobi.
///
/// Works on the columns of the matrix directly, so small singular values
/// keep absolute accuracy near machine epsilon instead of its square root.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let mut a = if m.rows >= m.cols { m.clone() } else { m.dagger() };
    let (rows, cols) = (a.rows, a.cols);
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..cols {
            for q in (p + 1)..cols {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = ZERO;
                for k in 0..rows {
                    alpha += a[(k, p)].norm_sqr();
                    beta += a[(k, q)].norm_sqr();
                    gamma += a[(k, p)].conj() * a[(k, q)];
                }
                if gamma.norm() <= f64::EPSILON * 0.5 * (alpha * beta).sqrt() || gamma.norm() == 0.0 {
                    continue;
                }
                rotated = true;
                let (c, s, ph) = jacobi_rotation(alpha, beta, gamma);
                for k in 0..rows {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c - akq * ph * s;
                    a[(k, q)] = akp * s + akq * ph * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = (0..cols)
        .map(|j| (0..rows).map(|k| a[(k, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    sv
}

/// Trace norm `Tr sqrt(A† A)`, the sum of singular values.
pub fn trace_norm(a: &CMatrix) -> f64 {
    singular_values(a).iter().sum()
}

/// Which qubit of a two-qubit state to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// A validated two-qubit density operator.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix(CMatrix);

impl DensityMatrix {
    /// Validates a 4×4 matrix and stores its Hermitian part.
    pub fn new(m: CMatrix) -> Result<Self> {
        if m.rows != 4 || m.cols != 4 {
            return Err(Error::Dimension(format!(
                "density matrix must be 4x4, got {}x{}",
                m.rows, m.cols
            )));
        }
        let asymmetry = m.hermitian_asymmetry();
        if !(asymmetry <= STATE_HERMITIAN_TOL) {
            return Err(Error::NotHermitian { asymmetry });
        }
        let m = m.hermitian_part();
        let tr = m.trace().re;
        if !((tr - 1.0).abs() <= STATE_TRACE_TOL) {
            return Err(Error::InvalidState(format!("trace {tr} differs from 1")));
        }
        let min_eig = hermitian_eigensystem(&m)?.values[0];
        if min_eig < -STATE_PSD_TOL {
            return Err(Error::InvalidState(format!(
                "minimum eigenvalue {min_eig:.3e} is negative"
            )));
        }
        Ok(Self(m))
    }

    /// Normalised projector onto the (not necessarily normalised) pure state `psi`.
    pub fn pure(psi: [C64; 4]) -> Self {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        Self(CMatrix::projector(&psi).scale_real(1.0 / norm))
    }

    pub fn maximally_mixed() -> Self {
        Self(CMatrix::identity(4).scale_real(0.25))
    }

    /// `|Φ+> = (|00> + |11>)/√2`.
    pub fn phi_plus() -> Self {
        Self::pure([ONE, ZERO, ZERO, ONE])
    }

    /// `|Ψ-> = (|01> - |10>)/√2`.
    pub fn singlet() -> Self {
        Self::pure([ZERO, ONE, -ONE, ZERO])
    }

    pub fn product(a: &CMatrix, b: &CMatrix) -> Result<Self> {
        Self::new(kron(a, b))
    }

    /// Convex combination `(1 - p) self + p other`.
    pub fn mix(&self, other: &Self, p: f64) -> Self {
        Self(&self.0.scale_real(1.0 - p) + &other.0.scale_real(p))
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    pub(crate) fn from_matrix_unchecked(m: CMatrix) -> Self {
        Self(m)
    }

    /// `U ρ U†`.
    pub fn conjugate_by(&self, u: &CMatrix) -> Self {
        Self((&(u * &self.0) * &u.dagger()).hermitian_part())
    }

    pub fn min_eigenvalue(&self) -> f64 {
        hermitian_eigensystem(&self.0)
            .map(|e| e.values[0])
            .unwrap_or(f64::NAN)
    }
}

/// Reduced single-qubit state.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> CMatrix {
    let m = rho.matrix();
    CMatrix::from_fn(2, 2, |i, j| match keep {
        Subsystem::First => (0..2).map(|k| m[(2 * i + k, 2 * j + k)]).sum(),
        Subsystem::Second => (0..2).map(|k| m[(2 * k + i, 2 * k + j)]).sum(),
    })
}

/// Wootters concurrence `max(0, √μ1 − √μ2 − √μ3 − √μ4)`.
///
/// The `√μ_k` are the singular values of `√ρ √ρ̃` with
/// `ρ̃ = (σy⊗σy) ρ* (σy⊗σy)`. Writing `ρ = V D V†` these equal the singular
/// values of `√D (V† Y V*) √D`, which avoids forming `ρ ρ̃` explicitly.
pub fn wootters_concurrence(rho: &DensityMatrix) -> f64 {
    let eig = hermitian_eigensystem(rho.matrix()).expect("density matrices are Hermitian");
    let yy = kron(&pauli(2), &pauli(2));
    let v = &eig.vectors;
    let w = &(&v.dagger() * &yy) * &v.conj();
    let roots: Vec<f64> = eig.values.iter().map(|&d| d.max(0.0).sqrt()).collect();
    let k = CMatrix::from_fn(4, 4, |i, j| w[(i, j)] * (roots[i] * roots[j]));
    let sv = singular_values(&k);
    (sv[0] - sv[1] - sv[2] - sv[3]).clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let k = kron(&pauli(0), &pauli(0));
        assert_eq!(k, CMatrix::identity(4));
    }

    #[test]
    fn kron_zz_is_diagonal() {
        let k = kron(&pauli(3), &pauli(3));
        assert_eq!(k, CMatrix::diag(&[1.0, -1.0, -1.0, 1.0]));
    }

    #[test]
    fn kron_xx_is_antidiagonal() {
        let k = kron(&pauli(1), &pauli(1));
        let expected = CMatrix::from_fn(4, 4, |i, j| if i + j == 3 { ONE } else { ZERO });
        assert_eq!(k, expected);
    }

    #[test]
    fn eigenvalues_of_sigma_z() {
        let e = hermitian_eigensystem(&pauli(3)).unwrap();
        assert!(close(e.values[0], -1.0, 1e-14) && close(e.values[1], 1.0, 1e-14));
    }

    #[test]
    fn eigenvalues_of_sigma_y_with_vectors() {
        let y = pauli(2);
        let e = hermitian_eigensystem(&y).unwrap();
        for k in 0..2 {
            let v = CMatrix::from_vec(2, 1, e.vector(k));
            let lhs = &y * &v;
            let rhs = v.scale_real(e.values[k]);
            assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        }
    }

    #[test]
    fn eigenvalues_of_diagonal_are_sorted() {
        let e = hermitian_eigensystem(&CMatrix::diag(&[0.3, 0.1, 0.4, 0.2])).unwrap();
        let expected = [0.1, 0.2, 0.3, 0.4];
        for (got, want) in e.values.iter().zip(expected) {
            assert!(close(*got, want, 1e-15));
        }
    }

    #[test]
    fn bell_projector_spectrum() {
        let e = hermitian_eigensystem(DensityMatrix::phi_plus().matrix()).unwrap();
        let expected = [0.0, 0.0, 0.0, 1.0];
        for (got, want) in e.values.iter().zip(expected) {
            assert!(close(*got, want, 1e-14), "{:?}", e.values);
        }
    }

    #[test]
    fn eigensystem_rejects_non_hermitian() {
        let m = CMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(
            hermitian_eigensystem(&m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn eigensystem_symmetrises_tiny_asymmetry() {
        let mut m = pauli(1);
        m[(0, 1)] += C64::new(1e-12, 0.0);
        let e = hermitian_eigensystem(&m).unwrap();
        assert!(close(e.values[1], 1.0 + 0.5e-12, 1e-14));
    }

    #[test]
    fn trace_norm_simple_cases() {
        assert!(close(trace_norm(&pauli(1)), 2.0, 1e-14));
        assert!(close(trace_norm(&CMatrix::diag(&[1.0, -2.0])), 3.0, 1e-14));
        // non-normal: singular values of [[0, 1], [0, 0]] are (1, 0)
        let n = CMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(close(trace_norm(&n), 1.0, 1e-14));
    }

    #[test]
    fn partial_trace_of_bell_is_maximally_mixed() {
        let r = partial_trace(&DensityMatrix::phi_plus(), Subsystem::Second);
        assert!(r.max_abs_diff(&CMatrix::identity(2).scale_real(0.5)) < 1e-15);
    }

    #[test]
    fn partial_trace_of_product_recovers_factor() {
        let a = CMatrix::from_vec(
            2,
            2,
            vec![C64::new(0.7, 0.0), C64::new(0.1, 0.2), C64::new(0.1, -0.2), C64::new(0.3, 0.0)],
        );
        let b = CMatrix::diag(&[0.25, 0.75]);
        let rho = DensityMatrix::product(&a, &b).unwrap();
        assert!(partial_trace(&rho, Subsystem::First).max_abs_diff(&a) < 1e-15);
        assert!(partial_trace(&rho, Subsystem::Second).max_abs_diff(&b) < 1e-15);
    }

    #[test]
    fn density_matrix_validation() {
        assert!(DensityMatrix::new(CMatrix::diag(&[0.5, 0.5, 0.0, 0.0])).is_ok());
        assert!(matches!(
            DensityMatrix::new(CMatrix::diag(&[0.5, 0.6, 0.0, 0.0])),
            Err(Error::InvalidState(_))
        ));
        assert!(matches!(
            DensityMatrix::new(CMatrix::diag(&[1.2, -0.2, 0.0, 0.0])),
            Err(Error::InvalidState(_))
        ));
        assert!(matches!(
            DensityMatrix::new(CMatrix::identity(2)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn wootters_reference_states() {
        assert!(close(wootters_concurrence(&DensityMatrix::phi_plus()), 1.0, 1e-12));
        assert!(close(wootters_concurrence(&DensityMatrix::singlet()), 1.0, 1e-12));
        assert!(close(wootters_concurrence(&DensityMatrix::maximally_mixed()), 0.0, 1e-12));
    }

    #[test]
    fn wootters_bell_like_pure_state() {
        // sin φ |01> + cos φ |10> has concurrence sin 2φ
        let phi = std::f64::consts::PI / 8.0;
        let psi = [ZERO, C64::new(phi.sin(), 0.0), C64::new(phi.cos(), 0.0), ZERO];
        let c = wootters_concurrence(&DensityMatrix::pure(psi));
        assert!(close(c, (2.0 * phi).sin(), 1e-12));
        assert!(close(c, std::f64::consts::FRAC_1_SQRT_2, 1e-12));
    }
}
