//! Exact numerical backend for the two-site (1/2, 1) XY system.
//!
//! Builds spin operator matrices from ladder coefficients, assembles the
//! 6×6 Hamiltonian H = B(s^z⊗I + I⊗S^z) − J(s^x⊗S^x + s^y⊗S^y), forms the
//! Gibbs state ρ = e^{−H/T}/Z, applies the partial transpose over the
//! spin-1/2 subsystem and reads the negativity off the spectrum. Every step
//! is generic matrix arithmetic; this module is the ground-truth oracle the
//! closed forms are audited against.
//!
//! The model is real in the product basis: s^y and S^y are purely imaginary,
//! so they are stored through their imaginary parts and the y⊗y product
//! contributes a real matrix (i² = −1).

use crate::matrix::{symmetric_eigen, BasisOrder, DenseSym6, EigenDecomp, DIM};
use crate::types::block_min_eigenvalue;
use crate::{Error, EvalMode, NegativityResult};

/// Spin operator matrices of dimension 2s+1, basis ordered m = s, s−1, …, −s.
///
/// `sy_imag` is the imaginary part of S^y, i.e. S^y = i·sy_imag, so the su(2)
/// commutator becomes real-checkable: sx·sy_imag − sy_imag·sx = sz.
#[derive(Debug, Clone)]
pub struct SpinOps {
    pub s: f64,
    pub sx: Vec<Vec<f64>>,
    pub sy_imag: Vec<Vec<f64>>,
    pub sz: Vec<Vec<f64>>,
}

/// Builds spin matrices for s ∈ {1/2, 1} from the ladder matrix elements
/// ⟨m±1|S±|m⟩ = √(s(s+1) − m(m±1)), with ħ = 1.
pub fn spin_operators(s: f64) -> Result<SpinOps, Error> {
    if !(s == 0.5 || s == 1.0) {
        return Err(Error::UnsupportedSpin(s));
    }
    let n = (2.0 * s + 1.0) as usize;
    let m_of = |k: usize| s - k as f64;

    let mut sp = vec![vec![0.0; n]; n]; // raising operator
    for k in 1..n {
        let m = m_of(k);
        sp[k - 1][k] = (s * (s + 1.0) - m * (m + 1.0)).sqrt();
    }

    let mut sx = vec![vec![0.0; n]; n];
    let mut sy_imag = vec![vec![0.0; n]; n];
    let mut sz = vec![vec![0.0; n]; n];
    for i in 0..n {
        sz[i][i] = m_of(i);
        for j in 0..n {
            // S− is the transpose of S+
            sx[i][j] = 0.5 * (sp[i][j] + sp[j][i]);
            sy_imag[i][j] = 0.5 * (sp[j][i] - sp[i][j]);
        }
    }
    Ok(SpinOps { s, sx, sy_imag, sz })
}

/// H = B(s^z⊗I + I⊗S^z) − J(s^x⊗S^x + s^y⊗S^y) in the product basis.
pub fn build_hamiltonian(j: f64, b: f64) -> Result<DenseSym6, Error> {
    if !j.is_finite() {
        return Err(Error::NonFinite { name: "J", value: j });
    }
    if !b.is_finite() {
        return Err(Error::NonFinite { name: "B", value: b });
    }
    let half = spin_operators(0.5).expect("1/2 is supported");
    let one = spin_operators(1.0).expect("1 is supported");

    // product index = 3·(spin-1/2 index) + (spin-1 index)
    let h = DenseSym6::from_upper(BasisOrder::Product, |row, col| {
        let (a, mu) = (row / 3, row % 3);
        let (n, nu) = (col / 3, col % 3);
        let id_half = if a == n { 1.0 } else { 0.0 };
        let id_one = if mu == nu { 1.0 } else { 0.0 };
        let field = b * (half.sz[a][n] * id_one + id_half * one.sz[mu][nu]);
        // y⊗y = (i·sy_imag)⊗(i·Sy_imag) = −(sy_imag⊗Sy_imag)
        let exchange = half.sx[a][n] * one.sx[mu][nu] - half.sy_imag[a][n] * one.sy_imag[mu][nu];
        field - j * exchange
    });
    Ok(h)
}

/// Boltzmann weights shifted by the ground energy, plus ln Z.
///
/// Shifting by E_min before exponentiating keeps every weight in (0, 1], so
/// no temperature underflows Z or overflows a weight; as T → 0⁺ the weights
/// converge to the (possibly degenerate) ground-space indicator on their own.
fn boltzmann_weights(eig: &EigenDecomp, t: f64) -> ([f64; DIM], f64) {
    let e0 = eig.eigenvalues[0];
    let mut w = [0.0; DIM];
    for (k, slot) in w.iter_mut().enumerate() {
        *slot = (-(eig.eigenvalues[k] - e0) / t).exp();
    }
    let z: f64 = w.iter().sum();
    (w, -e0 / t + z.ln())
}

/// Gibbs state ρ(T) = e^{−H/T} / Z, symmetric positive semidefinite, trace 1.
pub fn gibbs_state(h: &DenseSym6, t: f64) -> Result<DenseSym6, Error> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::NonPositiveTemperature(t));
    }
    let eig = symmetric_eigen(h)?;
    let (w, _) = boltzmann_weights(&eig, t);
    let z: f64 = w.iter().sum();
    let rho = DenseSym6::from_upper(h.basis(), |i, j| {
        let mut acc = 0.0;
        for k in 0..DIM {
            acc += eig.eigenvectors[i][k] * w[k] * eig.eigenvectors[j][k];
        }
        acc / z
    });
    Ok(rho)
}

/// ln Z = ln tr e^{−H/T}, evaluated with the same ground-energy shift as
/// [`gibbs_state`].
pub fn log_partition(h: &DenseSym6, t: f64) -> Result<f64, Error> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::NonPositiveTemperature(t));
    }
    let eig = symmetric_eigen(h)?;
    Ok(boltzmann_weights(&eig, t).1)
}

/// Subsystem selector for the partial transpose. Only the spin-1/2 site is
/// needed here; negativity is the same either way for a state of this model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    First,
}

/// Partial transpose over the spin-1/2 labels:
/// ρ^{T1}[(m,μ),(n,ν)] = ρ[(n,μ),(m,ν)].
///
/// Pure index arithmetic in the product basis; inputs tagged with the other
/// basis order are permuted in and back out, so the result carries the same
/// basis tag as the input. Applying it twice returns the original matrix
/// bit-for-bit.
pub fn partial_transpose(rho: &DenseSym6, _subsystem: Subsystem) -> DenseSym6 {
    let p = rho.to_basis(BasisOrder::Product);
    let out = DenseSym6::from_upper(BasisOrder::Product, |row, col| {
        let (m, mu) = (row / 3, row % 3);
        let (n, nu) = (col / 3, col % 3);
        p.get(3 * n + mu, 3 * m + nu)
    });
    out.to_basis(rho.basis())
}

/// Negativity of a partially transposed unit-trace state.
///
/// N = Σ|negative eigenvalues|, cross-checked against the trace-norm form
/// (‖ρ^{T1}‖₁ − 1)/2; the two must agree to 1e−12 for unit-trace input. The
/// per-block fields are read from the 2×2 blocks the transpose occupies in
/// the block-friendly basis order.
pub fn negativity_of_state(rho_pt: &DenseSym6) -> Result<NegativityResult, Error> {
    let trace = rho_pt.trace();
    if (trace - 1.0).abs() > 1e-10 {
        return Err(Error::NotUnitTrace(trace));
    }
    let eig = symmetric_eigen(rho_pt)?;
    let mut sum_neg = 0.0;
    let mut trace_norm = 0.0;
    for lam in eig.eigenvalues {
        trace_norm += lam.abs();
        if lam < 0.0 {
            sum_neg += -lam;
        }
    }
    let from_trace_norm = 0.5 * (trace_norm - 1.0);
    let mismatch = (sum_neg - from_trace_norm).abs();
    if mismatch > 1e-12 {
        return Err(Error::NegativityRouteMismatch(mismatch));
    }

    let paper = rho_pt.to_basis(BasisOrder::Paper);
    let lmin_12 = block_min_eigenvalue(paper.get(0, 0), paper.get(1, 1), paper.get(0, 1));
    let lmin_56 = block_min_eigenvalue(paper.get(4, 4), paper.get(5, 5), paper.get(4, 5));
    let mut out = NegativityResult::from_blocks(lmin_12, lmin_56, EvalMode::Oracle);
    out.negativity = sum_neg;
    Ok(out)
}
