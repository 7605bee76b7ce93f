//! Dense 6×6 symmetric matrices and a cyclic Jacobi eigensolver.
//!
//! Everything downstream runs on the two-site Hilbert space of dimension
//! 2 × 3 = 6, so the storage is a fixed array and the eigensolver is a plain
//! cyclic Jacobi iteration: dependency-free, bit-deterministic, and more than
//! accurate enough at this size.

use crate::Error;

pub const DIM: usize = 6;

/// Basis orderings for the two-spin product space.
///
/// `Product` is |s_z⟩⊗|S_z⟩ with the spin-1/2 label outer (+1/2 first) and
/// the spin-1 label inner (+1, 0, −1). `Paper` is the block-friendly order
/// {|−½,−1⟩, |½,0⟩, |−½,1⟩, |½,−1⟩, |−½,0⟩, |½,1⟩} in which the partial
/// transpose splits into 2×2 ⊕ 1×1 ⊕ 1×1 ⊕ 2×2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisOrder {
    Product,
    Paper,
}

/// Paper-order position i holds product-order basis state PAPER_TO_PRODUCT[i].
const PAPER_TO_PRODUCT: [usize; DIM] = [5, 1, 3, 2, 4, 0];

/// Real symmetric 6×6 matrix; storage keeps `m[i][j] == m[j][i]` exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DenseSym6 {
    m: [[f64; DIM]; DIM],
    basis: BasisOrder,
}

impl DenseSym6 {
    pub fn zeros(basis: BasisOrder) -> Self {
        DenseSym6 { m: [[0.0; DIM]; DIM], basis }
    }

    pub fn identity(basis: BasisOrder) -> Self {
        let mut out = Self::zeros(basis);
        for i in 0..DIM {
            out.m[i][i] = 1.0;
        }
        out
    }

    /// Builds from the upper triangle of `f`; the lower triangle is mirrored
    /// so symmetry holds bit-for-bit no matter what `f` does below the
    /// diagonal.
    pub fn from_upper(basis: BasisOrder, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut out = Self::zeros(basis);
        for i in 0..DIM {
            for j in i..DIM {
                let v = f(i, j);
                out.m[i][j] = v;
                out.m[j][i] = v;
            }
        }
        out
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m[i][j]
    }

    /// Sets both (i, j) and (j, i).
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.m[i][j] = v;
        self.m[j][i] = v;
    }

    pub fn basis(&self) -> BasisOrder {
        self.basis
    }

    pub fn trace(&self) -> f64 {
        (0..DIM).map(|i| self.m[i][i]).sum()
    }

    pub fn max_abs_diff(&self, other: &DenseSym6) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..DIM {
            for j in 0..DIM {
                d = d.max((self.m[i][j] - other.m[i][j]).abs());
            }
        }
        d
    }

    /// Exact permutation between the two basis orders (no arithmetic).
    pub fn to_basis(&self, basis: BasisOrder) -> DenseSym6 {
        if self.basis == basis {
            return *self;
        }
        let mut out = Self::zeros(basis);
        match (self.basis, basis) {
            (BasisOrder::Product, BasisOrder::Paper) => {
                for i in 0..DIM {
                    for j in 0..DIM {
                        out.m[i][j] = self.m[PAPER_TO_PRODUCT[i]][PAPER_TO_PRODUCT[j]];
                    }
                }
            }
            (BasisOrder::Paper, BasisOrder::Product) => {
                for i in 0..DIM {
                    for j in 0..DIM {
                        out.m[PAPER_TO_PRODUCT[i]][PAPER_TO_PRODUCT[j]] = self.m[i][j];
                    }
                }
            }
            _ => unreachable!(),
        }
        out
    }
}

/// Full eigendecomposition of a [`DenseSym6`]: `A = V · diag(λ) · Vᵀ` with
/// eigenvalues ascending and eigenvectors as the columns of `V`.
#[derive(Debug, Clone)]
pub struct EigenDecomp {
    pub eigenvalues: [f64; DIM],
    /// Orthogonal matrix whose column k is the eigenvector of eigenvalue k.
    pub eigenvectors: [[f64; DIM]; DIM],
}

/// Off-diagonal Frobenius norm threshold for convergence.
const JACOBI_OFF_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi diagonalization of a symmetric 6×6 matrix.
///
/// Rotations that would act on an exactly-zero entry are skipped, so sparsity
/// patterns that decouple coordinates are preserved exactly (the model's
/// Hamiltonian couples only two pairs of basis states; its Gibbs state keeps
/// those exact zeros).
pub fn symmetric_eigen(input: &DenseSym6) -> Result<EigenDecomp, Error> {
    let mut a = input.m;
    let mut v = [[0.0; DIM]; DIM];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    let mut converged = false;
    let mut off = off_frobenius(&a);
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off < JACOBI_OFF_TOL {
            converged = true;
            break;
        }
        for p in 0..DIM - 1 {
            for q in p + 1..DIM {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                // Rotation angle choice per the classic two-by-two
                // annihilation; the large-theta branch avoids theta² overflow.
                let theta = 0.5 * (a[q][q] - a[p][p]) / apq;
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                let app = a[p][p];
                let aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for r in 0..DIM {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r][p];
                    let arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[p][r] = a[r][p];
                    a[r][q] = s * arp + c * arq;
                    a[q][r] = a[r][q];
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
        off = off_frobenius(&a);
    }
    if !converged && off >= JACOBI_OFF_TOL {
        return Err(Error::EigenNoConvergence(off));
    }

    // Sort ascending; ties keep their sweep order so output is deterministic.
    let mut idx = [0usize; DIM];
    for (i, slot) in idx.iter_mut().enumerate() {
        *slot = i;
    }
    idx.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));

    let mut eigenvalues = [0.0; DIM];
    let mut eigenvectors = [[0.0; DIM]; DIM];
    for (k, &src) in idx.iter().enumerate() {
        eigenvalues[k] = a[src][src];
        for r in 0..DIM {
            eigenvectors[r][k] = v[r][src];
        }
    }
    Ok(EigenDecomp { eigenvalues, eigenvectors })
}

fn off_frobenius(a: &[[f64; DIM]; DIM]) -> f64 {
    let mut s = 0.0;
    for i in 0..DIM {
        for j in 0..DIM {
            if i != j {
                s += a[i][j] * a[i][j];
            }
        }
    }
    s.sqrt()
}
