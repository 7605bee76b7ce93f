//! Long-range distance laws mapping the separation R to the exchange J.
//!
//! Three laws (inverse-square, trigonometric, hyperbolic) plus a constant
//! law that addresses J directly, used by sweeps and fuzz tests. Each law is
//! even in R; the trigonometric one is π-periodic. Singularities (R at 0 or
//! at integer multiples of π) are policed with an explicit guard instead of
//! being left to 1/0 arithmetic.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::Error;
use serde::Serialize;

/// Half-width of the guard band around each singular point of R.
const SINGULAR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CouplingKind {
    /// J(R) = J0 / R²
    InverseSquare,
    /// J(R) = J0 / sin²R
    #[serde(rename = "trig")]
    Trigonometric,
    /// J(R) = J0 / sinh²R
    Hyperbolic,
    /// J = J0 independent of R; sweeps address J directly through this kind.
    Constant,
}

impl CouplingKind {
    pub fn cli_name(self) -> &'static str {
        match self {
            CouplingKind::InverseSquare => "inverse-square",
            CouplingKind::Trigonometric => "trig",
            CouplingKind::Hyperbolic => "hyperbolic",
            CouplingKind::Constant => "constant",
        }
    }

    pub fn from_cli_name(name: &str) -> Option<Self> {
        match name {
            "inverse-square" => Some(CouplingKind::InverseSquare),
            "trig" => Some(CouplingKind::Trigonometric),
            "hyperbolic" => Some(CouplingKind::Hyperbolic),
            "constant" => Some(CouplingKind::Constant),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainReason {
    Ok,
    Singular,
    NonFinite,
}

/// Verdict of [`Coupling::domain_check`]: `ok` ⇔ `reason == Ok`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DomainVerdict {
    pub ok: bool,
    pub reason: DomainReason,
}

impl DomainVerdict {
    fn ok() -> Self {
        DomainVerdict { ok: true, reason: DomainReason::Ok }
    }
    fn singular() -> Self {
        DomainVerdict { ok: false, reason: DomainReason::Singular }
    }
    fn non_finite() -> Self {
        DomainVerdict { ok: false, reason: DomainReason::NonFinite }
    }
}

/// A coupling law with its overall strength J0 fixed at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coupling {
    kind: CouplingKind,
    j0: f64,
}

/// Folds R to its distance from the nearest integer multiple of π.
///
/// sin²R depends on R only through that distance, and folding makes the
/// identities sin²(π − R) = sin²R and sin²(R + π) = sin²R hold numerically
/// instead of approximately: for R ∈ [π/2, π] the subtraction π − R is exact
/// (Sterbenz), so mirror pairs produce bit-identical J.
fn fold_half_period(r: f64) -> f64 {
    let m = r.abs().rem_euclid(PI);
    if m > FRAC_PI_2 {
        PI - m
    } else {
        m
    }
}

impl Coupling {
    pub fn new(kind: CouplingKind, j0: f64) -> Result<Self, Error> {
        if !j0.is_finite() {
            return Err(Error::NonFinite { name: "J0", value: j0 });
        }
        Ok(Coupling { kind, j0 })
    }

    pub fn inverse_square(j0: f64) -> Result<Self, Error> {
        Self::new(CouplingKind::InverseSquare, j0)
    }
    pub fn trigonometric(j0: f64) -> Result<Self, Error> {
        Self::new(CouplingKind::Trigonometric, j0)
    }
    pub fn hyperbolic(j0: f64) -> Result<Self, Error> {
        Self::new(CouplingKind::Hyperbolic, j0)
    }
    pub fn constant(j0: f64) -> Result<Self, Error> {
        Self::new(CouplingKind::Constant, j0)
    }

    pub fn kind(&self) -> CouplingKind {
        self.kind
    }

    pub fn j0(&self) -> f64 {
        self.j0
    }

    /// Checks whether R is evaluable for this law; never errors.
    pub fn domain_check(&self, r: f64) -> DomainVerdict {
        match self.kind {
            CouplingKind::Constant => DomainVerdict::ok(),
            _ if !r.is_finite() => DomainVerdict::non_finite(),
            CouplingKind::InverseSquare | CouplingKind::Hyperbolic => {
                if r.abs() <= SINGULAR_TOL {
                    DomainVerdict::singular()
                } else {
                    DomainVerdict::ok()
                }
            }
            CouplingKind::Trigonometric => {
                if fold_half_period(r) <= SINGULAR_TOL {
                    DomainVerdict::singular()
                } else {
                    DomainVerdict::ok()
                }
            }
        }
    }

    /// Exchange strength J(R). All laws are computed from |R| (or the folded
    /// half-period distance), so evenness is exact by construction.
    pub fn strength(&self, r: f64) -> Result<f64, Error> {
        let verdict = self.domain_check(r);
        if !verdict.ok {
            return match verdict.reason {
                DomainReason::NonFinite => Err(Error::NonFinite { name: "R", value: r }),
                _ => Err(Error::SingularCoupling { kind: self.kind, r }),
            };
        }
        Ok(match self.kind {
            CouplingKind::InverseSquare => self.j0 / (r * r),
            CouplingKind::Trigonometric => {
                let s = fold_half_period(r).sin();
                self.j0 / (s * s)
            }
            CouplingKind::Hyperbolic => {
                let s = r.abs().sinh();
                self.j0 / (s * s)
            }
            CouplingKind::Constant => self.j0,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn direct_substitutions() {
        let inv = Coupling::inverse_square(1.0).unwrap();
        assert_eq!(inv.strength(2.0).unwrap(), 0.25);

        let trig = Coupling::trigonometric(1.0).unwrap();
        assert!((trig.strength(FRAC_PI_2).unwrap() - 1.0).abs() < 1e-15);

        let hyp = Coupling::hyperbolic(1.0).unwrap();
        assert!((hyp.strength(1.0_f64.asinh()).unwrap() - 1.0).abs() < 1e-15);

        let c = Coupling::constant(3.5).unwrap();
        assert_eq!(c.strength(123.0).unwrap(), 3.5);
    }

    #[test]
    fn singularity_verdicts() {
        let inv = Coupling::inverse_square(1.0).unwrap();
        assert_eq!(inv.domain_check(0.0).reason, DomainReason::Singular);
        assert!(inv.strength(0.0).is_err());

        let trig = Coupling::trigonometric(1.0).unwrap();
        assert_eq!(trig.domain_check(PI).reason, DomainReason::Singular);
        assert_eq!(trig.domain_check(-3.0 * PI).reason, DomainReason::Singular);
        assert_eq!(trig.domain_check(0.5e-12).reason, DomainReason::Singular);
        assert!(trig.domain_check(1e-9).ok);

        let hyp = Coupling::hyperbolic(1.0).unwrap();
        assert!(hyp.domain_check(-0.5).ok);
        assert_eq!(hyp.domain_check(f64::NAN).reason, DomainReason::NonFinite);
    }

    #[test]
    fn trig_reflection_is_bit_exact() {
        let trig = Coupling::trigonometric(1.0).unwrap();
        for k in 1..400 {
            let r = PI * k as f64 / 401.0;
            let a = trig.strength(r).unwrap();
            let b = trig.strength(PI - r).unwrap();
            assert_eq!(a.to_bits(), b.to_bits(), "mirror mismatch at k={k}");
        }
    }

    proptest! {
        #[test]
        fn evenness_is_exact(r in -10.0f64..10.0, kind in 0usize..3) {
            let c = match kind {
                0 => Coupling::inverse_square(1.3).unwrap(),
                1 => Coupling::trigonometric(0.7).unwrap(),
                _ => Coupling::hyperbolic(2.0).unwrap(),
            };
            if c.domain_check(r).ok {
                prop_assert_eq!(
                    c.strength(r).unwrap().to_bits(),
                    c.strength(-r).unwrap().to_bits()
                );
            } else {
                prop_assert!(!c.domain_check(-r).ok);
            }
        }

        #[test]
        fn trig_periodicity_within_1e12_relative(r in 0.05f64..3.0) {
            let trig = Coupling::trigonometric(1.0).unwrap();
            if trig.domain_check(r).ok && trig.domain_check(r + PI).ok {
                let a = trig.strength(r).unwrap();
                let b = trig.strength(r + PI).unwrap();
                prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
            }
        }

        #[test]
        fn positive_j0_gives_positive_j(r in -6.0f64..6.0, kind in 0usize..3) {
            let c = match kind {
                0 => Coupling::inverse_square(1.0).unwrap(),
                1 => Coupling::trigonometric(1.0).unwrap(),
                _ => Coupling::hyperbolic(1.0).unwrap(),
            };
            if c.domain_check(r).ok {
                prop_assert!(c.strength(r).unwrap() > 0.0);
            }
        }
    }
}
