use serde::Serialize;

/// Which of the three evaluation routes produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EvalMode {
    /// Stable analytic elements of the partially transposed Gibbs state.
    Canonical,
    /// As-published element formulas, evaluated exactly as printed.
    Published,
    /// Full matrix pipeline (Hamiltonian → Gibbs → partial transpose → eigen).
    Oracle,
}

impl EvalMode {
    pub fn cli_name(self) -> &'static str {
        match self {
            EvalMode::Canonical => "canonical",
            EvalMode::Published => "published",
            EvalMode::Oracle => "oracle",
        }
    }
}

/// Negativity of a partially transposed state, with its per-block origin.
///
/// The partial transpose of this model's Gibbs state is block diagonal: two
/// 2×2 blocks and two 1×1 blocks. Only the 2×2 blocks can go negative, one
/// eigenvalue each, so the negativity splits into (at most) two
/// contributions. `neg_block_12` / `neg_block_56` are those minimum block
/// eigenvalues clamped to ≤ 0; `negativity` is the sum of their magnitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativityResult {
    pub negativity: f64,
    pub neg_block_12: f64,
    pub neg_block_56: f64,
    pub mode: EvalMode,
}

impl NegativityResult {
    pub fn from_blocks(lmin_12: f64, lmin_56: f64, mode: EvalMode) -> Self {
        let neg_block_12 = lmin_12.min(0.0);
        let neg_block_56 = lmin_56.min(0.0);
        NegativityResult {
            negativity: -neg_block_12 - neg_block_56,
            neg_block_12,
            neg_block_56,
            mode,
        }
    }
}

/// Smaller eigenvalue of the symmetric 2×2 block [[d1, od], [od, d2]].
pub(crate) fn block_min_eigenvalue(d1: f64, d2: f64, od: f64) -> f64 {
    0.5 * (d1 + d2) - f64::hypot(0.5 * (d1 - d2), od)
}

/// Smaller block eigenvalue with a deterministic zero at the boundary.
///
/// A block counts as negative only if its minimum eigenvalue sits below
/// `-1e-16 · (d1 + d2)`; points on the exact vanishing boundary then report
/// zero instead of a roundoff-sign coin flip.
pub(crate) fn gated_block_min(d1: f64, d2: f64, od: f64) -> f64 {
    let lmin = block_min_eigenvalue(d1, d2, od);
    if lmin < -1e-16 * (d1 + d2) {
        lmin
    } else {
        0.0
    }
}
