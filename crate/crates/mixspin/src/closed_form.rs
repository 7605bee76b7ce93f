//! Canonical analytic engine: spectrum, partially transposed Gibbs elements,
//! log-partition function and negativity as explicit functions of (J, B, T).
//!
//! The two-site Hamiltonian splits into two field-aligned product levels at
//! ±3B/2 and two exchange doublets at ±B/2 ∓ J/√2, so the Gibbs state and
//! its partial transpose are closed-form in (J, B, T). Every exponential is
//! evaluated relative to the largest exponent, which keeps the elements
//! finite for any T > 0 and |J|/T up to 1e6 and beyond — the raw cosh/sinh
//! forms would overflow long before that.

use std::f64::consts::SQRT_2;

use crate::types::{block_min_eigenvalue, gated_block_min};
use crate::{Error, EvalMode, NegativityResult};

/// Labels for the six energy levels.
///
/// `Aligned*` are the fully polarized product states (energy ±3B/2).
/// `HalfUp*`/`HalfDown*` are the total-S_z = ±1/2 doublets; `Sym` is the
/// in-phase combination of the two coupled basis states (energy ∓J/√2 below
/// / above the sector mean ±B/2), `Anti` the out-of-phase one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    AlignedUp,
    AlignedDown,
    HalfUpSym,
    HalfUpAnti,
    HalfDownSym,
    HalfDownAnti,
}

/// The six energies of the two-site system at given (J, B).
#[derive(Debug, Clone, Copy)]
pub struct Spectrum {
    pub levels: [(Level, f64); 6],
}

impl Spectrum {
    pub fn energies_sorted(&self) -> [f64; 6] {
        let mut e = self.levels.map(|(_, v)| v);
        e.sort_by(f64::total_cmp);
        e
    }

    pub fn energy(&self, level: Level) -> f64 {
        self.levels.iter().find(|(l, _)| *l == level).expect("all levels present").1
    }
}

/// Energy levels {±3B/2, ±B/2 ∓ J/√2}; the set is the same for every
/// distance law once J = J(R) is substituted.
pub fn spectrum(j: f64, b: f64) -> Spectrum {
    let k = j / SQRT_2;
    Spectrum {
        levels: [
            (Level::AlignedUp, 1.5 * b),
            (Level::AlignedDown, -1.5 * b),
            (Level::HalfUpSym, 0.5 * b - k),
            (Level::HalfUpAnti, 0.5 * b + k),
            (Level::HalfDownSym, -0.5 * b - k),
            (Level::HalfDownAnti, -0.5 * b + k),
        ],
    }
}

/// The eight independent entries of the partially transposed Gibbs state in
/// the block-friendly basis order, plus ln Z.
///
/// Layout: diagonal a11..a66 with a22 = a33 and a44 = a55 by construction;
/// a12 couples the a11/a22 block, a56 the a55/a66 block. For J > 0 both
/// coherences are positive (the exchange ground combination is in-phase);
/// they flip sign with J and the negativity depends only on their squares.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtElements {
    pub a11: f64,
    pub a22: f64,
    pub a33: f64,
    pub a44: f64,
    pub a55: f64,
    pub a66: f64,
    pub a12: f64,
    pub a56: f64,
    pub log_z: f64,
}

impl PtElements {
    pub fn diagonal_sum(&self) -> f64 {
        self.a11 + self.a22 + self.a33 + self.a44 + self.a55 + self.a66
    }
}

/// Shifted Boltzmann weights of the six levels.
///
/// Exponents are ±3g and ±g ± x with g = B/(2T), x = J/(√2 T); the shift
/// m = max(3|g|, |g| + |x|) is the largest of them, so every weight lies in
/// (0, 1] and the partition sum never overflows.
struct ShiftedWeights {
    /// e^{3g − m}, weight of the aligned-down product level (energy −3B/2)
    w_up: f64,
    /// e^{−3g − m}
    w_dn: f64,
    /// e^{g + x − m}
    e_pp: f64,
    /// e^{g − x − m}
    e_pm: f64,
    /// e^{−g + x − m}
    e_mp: f64,
    /// e^{−g − x − m}
    e_mm: f64,
    /// shifted partition sum Σ weights = Z · e^{−m}
    z: f64,
    /// the shift m
    shift: f64,
}

fn shifted_weights(j: f64, b: f64, t: f64) -> Result<ShiftedWeights, Error> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::NonPositiveTemperature(t));
    }
    if !j.is_finite() {
        return Err(Error::NonFinite { name: "J", value: j });
    }
    if !b.is_finite() {
        return Err(Error::NonFinite { name: "B", value: b });
    }
    let g = b / (2.0 * t);
    let x = j / (SQRT_2 * t);
    let shift = (3.0 * g.abs()).max(g.abs() + x.abs());
    let w_up = (3.0 * g - shift).exp();
    let w_dn = (-3.0 * g - shift).exp();
    let e_pp = (g + x - shift).exp();
    let e_pm = (g - x - shift).exp();
    let e_mp = (-g + x - shift).exp();
    let e_mm = (-g - x - shift).exp();
    let z = w_up + w_dn + e_pp + e_pm + e_mp + e_mm;
    Ok(ShiftedWeights { w_up, w_dn, e_pp, e_pm, e_mp, e_mm, z, shift })
}

/// Elements of ρ^{T1} for the Gibbs state at (J, B, T).
pub fn pt_elements(j: f64, b: f64, t: f64) -> Result<PtElements, Error> {
    let w = shifted_weights(j, b, t)?;
    let z = w.z;
    // e^{∓B/2T} cosh(x) and e^{±B/2T} sinh(x), assembled from the shifted
    // weights so the largest term is exactly representable
    Ok(PtElements {
        a11: w.w_up / z,
        a22: 0.5 * (w.e_mp + w.e_mm) / z,
        a33: 0.5 * (w.e_mp + w.e_mm) / z,
        a44: 0.5 * (w.e_pp + w.e_pm) / z,
        a55: 0.5 * (w.e_pp + w.e_pm) / z,
        a66: w.w_dn / z,
        a12: 0.5 * (w.e_pp - w.e_pm) / z,
        a56: 0.5 * (w.e_mp - w.e_mm) / z,
        log_z: w.shift + z.ln(),
    })
}

/// ln Z(J, B, T), finite for every T > 0.
pub fn log_partition(j: f64, b: f64, t: f64) -> Result<f64, Error> {
    let w = shifted_weights(j, b, t)?;
    Ok(w.shift + w.z.ln())
}

/// Negativity from the closed-form elements.
///
/// Each 2×2 block {(a11, a22, a12), (a55, a66, a56)} contributes the
/// magnitude of its minimum eigenvalue when that eigenvalue is negative
/// (equivalently when the coherence squared exceeds the diagonal product);
/// the 1×1 blocks a33, a44 never contribute. A block is counted negative
/// only below −1e−16·(sum of its diagonals), so exact-boundary points report
/// zero deterministically.
pub fn negativity(j: f64, b: f64, t: f64) -> Result<NegativityResult, Error> {
    let e = pt_elements(j, b, t)?;
    Ok(negativity_of_elements(&e, EvalMode::Canonical))
}

/// Block rule shared with the as-published route.
pub(crate) fn negativity_of_elements(e: &PtElements, mode: EvalMode) -> NegativityResult {
    let lmin_12 = gated_block_min(e.a11, e.a22, e.a12);
    let lmin_56 = gated_block_min(e.a55, e.a66, e.a56);
    NegativityResult::from_blocks(lmin_12, lmin_56, mode)
}

/// x = |J|/(√2 T) at which entanglement vanishes: both blocks cross zero at
/// cosh x = (1 + √5)/2, independent of B.
pub fn vanishing_x() -> f64 {
    ((1.0 + 5.0_f64.sqrt()) / 2.0).acosh()
}

/// Raw (ungated) minimum block eigenvalues, used by PPT assertions in tests.
pub fn raw_block_minima(e: &PtElements) -> (f64, f64) {
    (
        block_min_eigenvalue(e.a11, e.a22, e.a12),
        block_min_eigenvalue(e.a55, e.a66, e.a56),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decoupled_spectrum_is_field_levels_only() {
        let s = spectrum(0.0, 1.0);
        let mut got = s.energies_sorted();
        let mut expect = [1.5, -1.5, 0.5, 0.5, -0.5, -0.5];
        expect.sort_by(f64::total_cmp);
        for k in 0..6 {
            assert!((got[k] - expect[k]).abs() < 1e-15);
        }
        got = spectrum(0.0, 0.0).energies_sorted();
        assert_eq!(got, [0.0; 6]);
    }

    #[test]
    fn inverse_square_point_reproduces_the_level_set() {
        // J = 1/R² at R = 1, B = 1
        let s = spectrum(1.0, 1.0);
        let q = 0.5_f64.sqrt();
        assert!((s.energy(Level::AlignedUp) - 1.5).abs() < 1e-15);
        assert!((s.energy(Level::HalfUpSym) - (0.5 - q)).abs() < 1e-15);
        assert!((s.energy(Level::HalfUpAnti) - (0.5 + q)).abs() < 1e-15);
        assert!((s.energy(Level::HalfDownSym) - (-0.5 - q)).abs() < 1e-15);
        assert!((s.energy(Level::HalfDownAnti) - (-0.5 + q)).abs() < 1e-15);
    }

    #[test]
    fn spectrum_is_traceless() {
        for (j, b) in [(1.0, 1.0), (7.3, -2.2), (-4.0, 0.9)] {
            let sum: f64 = spectrum(j, b).levels.iter().map(|(_, e)| e).sum();
            assert!(sum.abs() < 1e-12);
        }
    }

    #[test]
    fn trig_route_at_half_pi_matches_the_unified_form() {
        // R = π/2 makes the trigonometric law J = 1; the sector levels are
        // ∓0.5 + 1/√2 and ∓0.5 − 1/√2
        let s = spectrum(1.0, 1.0);
        let q = 0.5_f64.sqrt();
        assert!((s.energy(Level::HalfDownSym) - (-0.5 - q)).abs() < 1e-15);
        assert!((s.energy(Level::HalfUpSym) - (0.5 - q)).abs() < 1e-15);
    }

    #[test]
    fn coherences_vanish_without_exchange() {
        let e = pt_elements(0.0, 1.0, 1.0).unwrap();
        assert_eq!(e.a12, 0.0);
        assert_eq!(e.a56, 0.0);
    }

    #[test]
    fn diagonal_sum_is_one() {
        for (j, b, t) in [
            (2.0, 1.0, 1.0),
            (-3.0, 0.2, 0.05),
            (100.0, 4.0, 0.001),
            (1e6, 1.0, 1.0),
            (0.5, -7.0, 30.0),
        ] {
            let e = pt_elements(j, b, t).unwrap();
            assert!((e.diagonal_sum() - 1.0).abs() < 1e-12, "at ({j}, {b}, {t})");
            assert!(e.a11 >= 0.0 && e.a22 >= 0.0 && e.a44 >= 0.0 && e.a66 >= 0.0);
            assert!((e.a22 - e.a33).abs() < 1e-14 && (e.a44 - e.a55).abs() < 1e-14);
        }
    }

    #[test]
    fn log_partition_of_six_unit_weights_is_ln_6() {
        assert!((log_partition(0.0, 0.0, 1.0).unwrap() - 6.0_f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn extreme_arguments_stay_finite() {
        // raw cosh(J/(√2 T)) would overflow at x ≈ 710; go far beyond
        let lz = log_partition(200.0, 1.0, 0.01).unwrap();
        assert!(lz.is_finite());
        // leading term is (J/√2 + B/2)/T
        let lead = (200.0 / SQRT_2 + 0.5) / 0.01;
        assert!(lz > lead && lz < lead + 2.0);

        let e = pt_elements(1e6, 1.0, 1.0).unwrap();
        assert!(e.diagonal_sum().is_finite());
        let n = negativity(1e6, 1.0, 1.0).unwrap();
        assert!(n.negativity.is_finite());
    }

    #[test]
    fn ppt_point_reports_exactly_zero() {
        // x = 1/√2 < vanishing threshold: both blocks positive semidefinite
        let n = negativity(1.0, 1.0, 1.0).unwrap();
        assert_eq!(n.negativity, 0.0);
        assert_eq!(n.neg_block_12, 0.0);
        assert_eq!(n.neg_block_56, 0.0);
        let (l12, l56) = raw_block_minima(&pt_elements(1.0, 1.0, 1.0).unwrap());
        assert!(l12 > 0.0 && l56 > 0.0);
    }

    #[test]
    fn deep_plateau_saturates_at_half() {
        let n = negativity(2.0, 1.0, 0.02).unwrap();
        assert!((n.negativity - 0.5).abs() < 1e-8);
    }

    #[test]
    fn vanishing_x_is_the_golden_ratio_arccosh() {
        let x = vanishing_x();
        assert!((x.cosh() - (1.0 + 5.0_f64.sqrt()) / 2.0).abs() < 1e-15);
        // sinh²x = cosh x exactly at the boundary
        assert!((x.sinh().powi(2) - x.cosh()).abs() < 1e-14);
    }

    #[test]
    fn temperature_domain_is_enforced() {
        assert!(matches!(negativity(1.0, 1.0, 0.0), Err(Error::NonPositiveTemperature(_))));
        assert!(matches!(pt_elements(1.0, 1.0, -2.0), Err(Error::NonPositiveTemperature(_))));
        assert!(matches!(log_partition(1.0, 1.0, f64::NAN), Err(Error::NonPositiveTemperature(_))));
    }
}
