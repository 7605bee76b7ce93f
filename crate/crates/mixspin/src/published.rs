//! Verbatim implementation of the as-published element formulas for the
//! three distance laws, kept so their fidelity to the canonical Gibbs state
//! can be audited point by point.
//!
//! Everything here is evaluated exactly as printed — raw exponentials, no
//! shifting, printed coherence signs — because the audit's purpose includes
//! reproducing the overflow behavior of the originals. A non-finite
//! sub-expression surfaces as a typed [`Error::EvaluationOverflow`], never a
//! silent infinity or NaN. The formulas fix J0 = 1; other strengths are
//! rejected.
//!
//! Known divergences this route preserves on purpose:
//! * the printed coherences carry a minus sign where the Gibbs state has a
//!   positive one (negativity is sign-blind; audits log signs separately);
//! * the hyperbolic-law elements exchange the roles of the field and
//!   exchange arguments relative to the canonical route, which shows up as
//!   an O(0.1) negativity discrepancy away from limiting regimes;
//! * the trigonometric-law elements normalize to unit trace only at special
//!   points; the audit measures, rather than assumes, their trace.

use std::f64::consts::SQRT_2;

use crate::closed_form::{negativity_of_elements, PtElements};
use crate::coupling::CouplingKind;
use crate::{Error, EvalMode, NegativityResult};

/// Intermediate quantities of the printed formulas, exposed for audits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Intermediates {
    /// The inverse-square elements use no named intermediates.
    InverseSquare,
    /// varphi = 3 − 4cos2R + cos4R (= 8 sin⁴R); delta1, delta2 and mu∓ are
    /// the printed exponent combinations of the trigonometric law.
    Trigonometric {
        varphi: f64,
        delta1: f64,
        delta2: f64,
        mu_minus: f64,
        mu_plus: f64,
    },
    /// eta and xi of the hyperbolic law; their product is e^{−B/T}.
    Hyperbolic { eta: f64, xi: f64 },
}

/// Printed elements plus the intermediates they were assembled from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PublishedElements {
    pub elements: PtElements,
    pub intermediates: Intermediates,
}

fn check_finite(value: f64, what: &'static str) -> Result<f64, Error> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::EvaluationOverflow(what))
    }
}

fn check_domain(kind: CouplingKind, r: f64, t: f64) -> Result<(), Error> {
    if kind == CouplingKind::Constant {
        return Err(Error::PublishedConstant);
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::NonPositiveTemperature(t));
    }
    let c = crate::coupling::Coupling::new(kind, 1.0).expect("finite j0");
    if !c.domain_check(r).ok {
        return Err(Error::SingularCoupling { kind, r });
    }
    Ok(())
}

/// Elements of ρ^{T1} computed from the printed formulas of the given law.
///
/// `j0` must be 1 — the printed formulas carry no overall strength.
pub fn pt_elements_published(
    kind: CouplingKind,
    j0: f64,
    r: f64,
    b: f64,
    t: f64,
) -> Result<PublishedElements, Error> {
    if j0 != 1.0 {
        return Err(Error::PublishedStrength(j0));
    }
    check_domain(kind, r, t)?;
    match kind {
        CouplingKind::InverseSquare => inverse_square_elements(r, b, t),
        CouplingKind::Trigonometric => trigonometric_elements(r, b, t),
        CouplingKind::Hyperbolic => hyperbolic_elements(r, b, t),
        CouplingKind::Constant => unreachable!("rejected above"),
    }
}

/// Printed negativity: the same block rule as the canonical route, applied
/// to printed elements. The ≤ 0.5 state bound is deliberately not asserted —
/// printed elements need not form a valid state.
pub fn negativity(
    kind: CouplingKind,
    j0: f64,
    r: f64,
    b: f64,
    t: f64,
) -> Result<NegativityResult, Error> {
    let p = pt_elements_published(kind, j0, r, b, t)?;
    Ok(negativity_of_elements(&p.elements, EvalMode::Published))
}

fn inverse_square_elements(r: f64, b: f64, t: f64) -> Result<PublishedElements, Error> {
    let arg = 1.0 / (SQRT_2 * r * r * t);
    let ch = check_finite(arg.cosh(), "cosh(1/(√2 R² T))")?;
    let sh = check_finite(arg.sinh(), "sinh(1/(√2 R² T))")?;
    let e3p = check_finite((1.5 * b / t).exp(), "e^{3B/2T}")?;
    let e3m = check_finite((-1.5 * b / t).exp(), "e^{−3B/2T}")?;
    let e1p = check_finite((0.5 * b / t).exp(), "e^{B/2T}")?;
    let e1m = check_finite((-0.5 * b / t).exp(), "e^{−B/2T}")?;
    let z = check_finite(
        2.0 * ((1.5 * b / t).cosh() + 2.0 * (0.5 * b / t).cosh() * ch),
        "Z (inverse-square)",
    )?;
    let elements = PtElements {
        a11: check_finite(e3p / z, "a11")?,
        a12: check_finite(-e1p * sh / z, "a12")?,
        a22: check_finite(e1m * ch / z, "a22")?,
        a33: check_finite(e1m * ch / z, "a33")?,
        a44: check_finite(e1p * ch / z, "a44")?,
        a55: check_finite(e1p * ch / z, "a55")?,
        a56: check_finite(-e1m * sh / z, "a56")?,
        a66: check_finite(e3m / z, "a66")?,
        log_z: check_finite(z.ln(), "ln Z")?,
    };
    Ok(PublishedElements { elements, intermediates: Intermediates::InverseSquare })
}

fn trigonometric_elements(r: f64, b: f64, t: f64) -> Result<PublishedElements, Error> {
    let csc4 = (1.0 / r.sin()).powi(4);
    let varphi = 3.0 - 4.0 * (2.0 * r).cos() + (4.0 * r).cos();
    let delta1 = b * (2.0 * r).cos() * csc4 / (2.0 * t);
    let delta2 = b * (3.0 + (4.0 * r).cos()) * csc4 / (8.0 * t);
    let mu_arg = csc4
        * (3.0 * b + 4.0 * b * (2.0 * r).cos() + b * (4.0 * r).cos()
            + 8.0 * SQRT_2 * r.sin().powi(4).sqrt())
        / (16.0 * t);
    let mu_minus = check_finite((-mu_arg).exp(), "mu_minus")?;
    let mu_plus = check_finite(mu_arg.exp(), "mu_plus")?;

    let z = check_finite(
        mu_minus
            * (-(delta1 + delta2)).exp()
            * ((delta1 + 2.0 * delta2).exp()
                + (2.0 * delta1 + delta2).exp()
                + mu_plus * ((5.0 * delta1 - delta2) / 2.0).exp()
                + mu_plus * mu_plus * delta2.exp()
                + mu_plus * ((-delta1 + 5.0 * delta2) / 2.0).exp()
                + mu_plus * mu_plus * delta1.exp()),
        "Z (trigonometric)",
    )?;

    let e3p = check_finite((1.5 * b / t).exp(), "e^{3B/2T}")?;
    let e3m = check_finite((-1.5 * b / t).exp(), "e^{−3B/2T}")?;
    let ed1p = check_finite(delta1.exp(), "e^{delta1}")?;
    let ed1m = check_finite((-delta1).exp(), "e^{−delta1}")?;
    let ed2p = check_finite(delta2.exp(), "e^{delta2}")?;
    let ed2m = check_finite((-delta2).exp(), "e^{−delta2}")?;

    let elements = PtElements {
        a11: check_finite(e3p / z, "a11")?,
        a12: check_finite(mu_minus * (-ed1m + ed2m) / (2.0 * z), "a12")?,
        a22: check_finite(mu_plus * (ed1p + ed2p) / (2.0 * z), "a22")?,
        a33: check_finite(mu_plus * (ed1p + ed2p) / (2.0 * z), "a33")?,
        a44: check_finite(mu_minus * (ed1m + ed2m) / (2.0 * z), "a44")?,
        a55: check_finite(mu_minus * (ed1m + ed2m) / (2.0 * z), "a55")?,
        a56: check_finite(mu_plus * (ed1p - ed2p) / (2.0 * z), "a56")?,
        a66: check_finite(e3m / z, "a66")?,
        log_z: check_finite(z.ln(), "ln Z")?,
    };
    Ok(PublishedElements {
        elements,
        intermediates: Intermediates::Trigonometric { varphi, delta1, delta2, mu_minus, mu_plus },
    })
}

fn hyperbolic_elements(r: f64, b: f64, t: f64) -> Result<PublishedElements, Error> {
    let sinh4 = r.sinh().powi(4);
    let csch4 = (1.0 / r.sinh()).powi(4);
    let eta = check_finite((-(b - SQRT_2 * csch4 * sinh4.sqrt()) / (2.0 * t)).exp(), "eta")?;
    let xi = check_finite((-(b + SQRT_2 / sinh4.sqrt()) / (2.0 * t)).exp(), "xi")?;
    let ebt = check_finite((b / t).exp(), "e^{B/T}")?;
    let z = check_finite(2.0 * (1.5 * b / t).cosh() + (1.0 + ebt) * (xi + eta), "Z (hyperbolic)")?;
    let e3p = check_finite((1.5 * b / t).exp(), "e^{3B/2T}")?;
    let e3m = check_finite((-1.5 * b / t).exp(), "e^{−3B/2T}")?;

    let elements = PtElements {
        a11: check_finite(e3p / z, "a11")?,
        a12: check_finite(eta * (1.0 - ebt) / (2.0 * z), "a12")?,
        a22: check_finite(xi * (1.0 + ebt) / (2.0 * z), "a22")?,
        a33: check_finite(xi * (1.0 + ebt) / (2.0 * z), "a33")?,
        a44: check_finite(eta * (1.0 + ebt) / (2.0 * z), "a44")?,
        a55: check_finite(eta * (1.0 + ebt) / (2.0 * z), "a55")?,
        a56: check_finite(xi * (1.0 - ebt) / (2.0 * z), "a56")?,
        a66: check_finite(e3m / z, "a66")?,
        log_z: check_finite(z.ln(), "ln Z")?,
    };
    Ok(PublishedElements { elements, intermediates: Intermediates::Hyperbolic { eta, xi } })
}
