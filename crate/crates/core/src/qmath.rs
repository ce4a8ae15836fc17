//! Dense linear algebra for one- and two-qubit density matrices.
//!
//! Matrices are stored over the ordered basis `{|00>, |01>, |10>, |11>}`
//! with `sigma_z |0> = +|0>`; the first tensor factor is subsystem A.

use nalgebra::{Complex, Matrix2, Matrix4, Vector4};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type Mat2 = Matrix2<C64>;
pub type Mat4 = Matrix4<C64>;

/// Largest tolerated `|m_ij - conj(m_ji)|`.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Largest tolerated `|Tr(rho) - 1|`.
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues in `[-CLAMP_TOL, 0)` are rounding noise and get clamped to 0;
/// anything below is rejected.
pub const CLAMP_TOL: f64 = 1e-10;
/// Largest tolerated `|sum E^dag E - I|` for a Kraus set.
pub const COMPLETENESS_TOL: f64 = 1e-10;

const JACOBI_MAX_SWEEPS: usize = 64;

/// Selects one qubit of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subsystem {
    A,
    B,
}

fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

pub fn identity2() -> Mat2 {
    Mat2::identity()
}

pub fn sigma_x() -> Mat2 {
    Mat2::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0))
}

pub fn sigma_y() -> Mat2 {
    Mat2::new(c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0))
}

pub fn sigma_z() -> Mat2 {
    Mat2::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0))
}

/// The three Pauli matrices in the order x, y, z.
pub fn paulis() -> [Mat2; 3] {
    [sigma_x(), sigma_y(), sigma_z()]
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|i, j| a[(i / 2, j / 2)] * b[(i % 2, j % 2)])
}

/// Embeds a single-qubit operator on the chosen subsystem.
pub fn local_operator(op: &Mat2, on: Subsystem) -> Mat4 {
    match on {
        Subsystem::A => kron(op, &identity2()),
        Subsystem::B => kron(&identity2(), op),
    }
}

/// Largest elementwise deviation from Hermiticity.
pub fn hermiticity_deviation<const N: usize>(m: &nalgebra::SMatrix<C64, N, N>) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..N {
        for j in i..N {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Largest elementwise modulus of `a - b`.
pub fn max_abs_diff<const N: usize>(
    a: &nalgebra::SMatrix<C64, N, N>,
    b: &nalgebra::SMatrix<C64, N, N>,
) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn hermitize<const N: usize>(m: &nalgebra::SMatrix<C64, N, N>) -> nalgebra::SMatrix<C64, N, N> {
    (m + m.adjoint()).scale(0.5)
}

/// Eigen-decomposition of a 4×4 Hermitian matrix.
///
/// Eigenvalues are sorted in descending order and column `k` of
/// `eigenvectors` belongs to `eigenvalues[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: [f64; 4],
    eigenvectors: Mat4,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64; 4] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &Mat4 {
        &self.eigenvectors
    }

    /// `V f(Λ) V†`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Mat4 {
        let v = &self.eigenvectors;
        let mut out = Mat4::zeros();
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let fl = f(lambda);
            if fl == 0.0 {
                continue;
            }
            let col = v.column(k);
            out += (col * col.adjoint()).scale(fl);
        }
        out
    }

    pub fn reconstruct(&self) -> Mat4 {
        self.map(|x| x)
    }
}

/// Diagonalizes a Hermitian 4×4 matrix with cyclic complex Jacobi rotations.
///
/// Jacobi keeps exact zeros exact and resolves tiny eigenvalues of graded
/// matrices to high relative accuracy, which matters for `sqrt(rho)` at low
/// temperature. The sweep order is fixed, so results are bit-reproducible.
pub fn spectral_decompose(m: &Mat4) -> Result<Spectrum> {
    let deviation = hermiticity_deviation(m);
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let mut a = hermitize(m);
    let mut v = Mat4::identity();

    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..3 {
            for q in (p + 1)..4 {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                if mag <= 1e-18 * (app.abs() * aqq.abs()).sqrt() || mag < 1e-300 {
                    a[(p, q)] = C64::new(0.0, 0.0);
                    a[(q, p)] = C64::new(0.0, 0.0);
                    continue;
                }
                rotated = true;
                // Remove the phase of a_pq, then apply a real rotation.
                let phase = apq / mag;
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + tau.hypot(1.0))
                } else {
                    -1.0 / (-tau + tau.hypot(1.0))
                };
                let cs = 1.0 / t.hypot(1.0);
                let sn = t * cs;
                let mut u = Mat4::identity();
                u[(p, p)] = C64::new(cs, 0.0);
                u[(p, q)] = C64::new(sn, 0.0);
                u[(q, p)] = -phase.conj() * sn;
                u[(q, q)] = phase.conj() * cs;
                a = u.adjoint() * a * u;
                a[(p, q)] = C64::new(0.0, 0.0);
                a[(q, p)] = C64::new(0.0, 0.0);
                for k in 0..4 {
                    a[(k, k)].im = 0.0;
                }
                v *= u;
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let eigenvalues = order.map(|k| a[(k, k)].re);
    let eigenvectors = Mat4::from_fn(|i, j| v[(i, order[j])]);
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Principal square root of a Hermitian positive-semidefinite matrix.
pub fn matrix_sqrt(m: &Mat4) -> Result<Mat4> {
    let spectrum = spectral_decompose(m)?;
    if let Some(&bad) = spectrum.eigenvalues.iter().find(|&&l| l < -CLAMP_TOL) {
        return Err(Error::NegativeEigenvalue { value: bad });
    }
    Ok(spectrum.map(|l| l.max(0.0).sqrt()))
}

/// Shannon entropy in bits of a probability vector, with `0 log 0 = 0`.
pub fn entropy_bits(probabilities: &[f64]) -> f64 {
    -probabilities
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.log2())
        .sum::<f64>()
}

/// Common read access to validated density matrices.
pub trait DensityMatrix {
    /// Eigenvalues, clamped to be non-negative.
    fn eigenvalues(&self) -> &[f64];

    /// Dimension of the Hilbert space.
    fn dim(&self) -> usize {
        self.eigenvalues().len()
    }
}

/// Von Neumann entropy `-Tr(rho log2 rho)` in bits.
pub fn von_neumann_entropy(rho: &impl DensityMatrix) -> f64 {
    entropy_bits(rho.eigenvalues()).max(0.0)
}

/// A validated two-qubit density matrix together with its spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitState {
    elements: Mat4,
    spectrum: Spectrum,
}

impl TwoQubitState {
    /// Validates Hermiticity, unit trace and positivity. Eigenvalues in
    /// `[-1e-10, 0)` are clamped to zero and the matrix is rebuilt from the
    /// clamped spectrum.
    pub fn new(elements: Mat4) -> Result<Self> {
        let deviation = hermiticity_deviation(&elements);
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = elements.trace().re;
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::TraceNotUnit { trace });
        }
        let mut spectrum = spectral_decompose(&elements)?;
        let smallest = spectrum.eigenvalues[3];
        if smallest < -CLAMP_TOL {
            return Err(Error::NegativeEigenvalue { value: smallest });
        }
        if smallest < 0.0 {
            for l in spectrum.eigenvalues.iter_mut() {
                *l = l.max(0.0);
            }
            let total: f64 = spectrum.eigenvalues.iter().sum();
            for l in spectrum.eigenvalues.iter_mut() {
                *l /= total;
            }
            let elements = spectrum.reconstruct();
            return Ok(Self { elements, spectrum });
        }
        Ok(Self {
            elements: hermitize(&elements),
            spectrum,
        })
    }

    /// Builds a state from a real matrix given row by row.
    pub fn from_real_rows(rows: [[f64; 4]; 4]) -> Result<Self> {
        Self::new(Mat4::from_fn(|i, j| C64::new(rows[i][j], 0.0)))
    }

    /// `|psi><psi|` for a (not necessarily normalized) vector.
    pub fn pure(psi: &Vector4<C64>) -> Result<Self> {
        let norm = psi.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::TraceNotUnit { trace: norm * norm });
        }
        let psi = psi.unscale(norm);
        Self::new(psi * psi.adjoint())
    }

    pub fn maximally_mixed() -> Self {
        Self::new(Mat4::identity().scale(0.25)).expect("I/4 is a valid state")
    }

    /// `(|01> - |10>)(<01| - <10|) / 2`.
    pub fn singlet() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Self::pure(&Vector4::new(
            c(0.0, 0.0),
            c(s, 0.0),
            c(-s, 0.0),
            c(0.0, 0.0),
        ))
        .expect("singlet is a valid state")
    }

    /// Computational basis projector `|ab><ab|` with `index = 2a + b`.
    pub fn basis(index: usize) -> Self {
        let mut m = Mat4::zeros();
        m[(index, index)] = c(1.0, 0.0);
        Self::new(m).expect("basis projector is a valid state")
    }

    /// `rho_a ⊗ rho_b`.
    pub fn product(a: &SingleQubitState, b: &SingleQubitState) -> Result<Self> {
        Self::new(kron(&a.elements, &b.elements))
    }

    pub fn elements(&self) -> &Mat4 {
        &self.elements
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn entropy(&self) -> f64 {
        von_neumann_entropy(self)
    }

    /// Principal square root; infallible because the spectrum is already
    /// clamped.
    pub fn sqrt(&self) -> Mat4 {
        self.spectrum.map(f64::sqrt)
    }

    pub fn partial_trace(&self, keep: Subsystem) -> SingleQubitState {
        partial_trace(self, keep)
    }

    /// Trace distance `||rho - sigma||_1 / 2`.
    pub fn trace_distance(&self, other: &TwoQubitState) -> f64 {
        let diff = self.elements - other.elements;
        let spectrum = spectral_decompose(&hermitize(&diff)).expect("difference is Hermitian");
        0.5 * spectrum.eigenvalues.iter().map(|l| l.abs()).sum::<f64>()
    }
}

impl DensityMatrix for TwoQubitState {
    fn eigenvalues(&self) -> &[f64] {
        &self.spectrum.eigenvalues
    }
}

/// A validated single-qubit density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SingleQubitState {
    elements: Mat2,
    eigenvalues: [f64; 2],
}

/// Eigenvalues of a 2×2 Hermitian matrix, descending.
fn hermitian2_eigenvalues(m: &Mat2) -> [f64; 2] {
    let mean = 0.5 * (m[(0, 0)].re + m[(1, 1)].re);
    let half_gap = 0.5 * (m[(0, 0)].re - m[(1, 1)].re);
    let radius = half_gap.hypot(m[(0, 1)].norm());
    [mean + radius, mean - radius]
}

impl SingleQubitState {
    pub fn new(elements: Mat2) -> Result<Self> {
        let deviation = hermiticity_deviation(&elements);
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = elements.trace().re;
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::TraceNotUnit { trace });
        }
        let elements = hermitize(&elements);
        let mut eigenvalues = hermitian2_eigenvalues(&elements);
        if eigenvalues[1] < -CLAMP_TOL {
            return Err(Error::NegativeEigenvalue {
                value: eigenvalues[1],
            });
        }
        eigenvalues[1] = eigenvalues[1].max(0.0);
        Ok(Self {
            elements,
            eigenvalues,
        })
    }

    /// State with Bloch vector `(x, y, z)`, `|r| <= 1`.
    pub fn from_bloch(x: f64, y: f64, z: f64) -> Result<Self> {
        let [sx, sy, sz] = paulis();
        Self::new((identity2() + sx.scale(x) + sy.scale(y) + sz.scale(z)).scale(0.5))
    }

    pub fn elements(&self) -> &Mat2 {
        &self.elements
    }

    pub fn entropy(&self) -> f64 {
        von_neumann_entropy(self)
    }
}

impl DensityMatrix for SingleQubitState {
    fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }
}

/// Entropy in bits of the normalized version of an unnormalized 2×2
/// Hermitian PSD block with trace `weight`.
pub(crate) fn block_entropy(block: &Mat2, weight: f64) -> f64 {
    let [hi, lo] = hermitian2_eigenvalues(block);
    entropy_bits(&[hi.max(0.0) / weight, lo.max(0.0) / weight])
}

/// Reduces a matrix over the full pair to one qubit without validation.
pub(crate) fn partial_trace_matrix(m: &Mat4, keep: Subsystem) -> Mat2 {
    Mat2::from_fn(|i, j| match keep {
        Subsystem::A => m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)],
        Subsystem::B => m[(i, j)] + m[(2 + i, 2 + j)],
    })
}

/// Reduced state of the kept qubit.
pub fn partial_trace(rho: &TwoQubitState, keep: Subsystem) -> SingleQubitState {
    SingleQubitState::new(partial_trace_matrix(&rho.elements, keep))
        .expect("partial trace of a valid state is a valid state")
}

/// Largest elementwise deviation of `sum E^dag E` from the identity.
pub fn completeness_deviation(operators: &[Mat4]) -> f64 {
    let sum = operators
        .iter()
        .fold(Mat4::zeros(), |acc, e| acc + e.adjoint() * e);
    max_abs_diff(&sum, &Mat4::identity())
}

/// `rho -> sum_k E_k rho E_k^dag`.
pub fn apply_kraus(rho: &TwoQubitState, operators: &[Mat4]) -> Result<TwoQubitState> {
    let deviation = completeness_deviation(operators);
    if deviation > COMPLETENESS_TOL {
        return Err(Error::IncompleteChannel { deviation });
    }
    let out = operators
        .iter()
        .fold(Mat4::zeros(), |acc, e| acc + e * rho.elements * e.adjoint());
    let out = hermitize(&out);
    let trace = out.trace().re;
    TwoQubitState::new(out.unscale(trace))
}
