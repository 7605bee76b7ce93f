//! Thermal entanglement of the two-site mixed-spin (1/2, 1) XY system.
//!
//! A spin-1/2 and a spin-1 exchange through the x and y spin components with
//! strength `J` under a uniform field `B`, in equilibrium at temperature `T`
//! (k_B = 1). Entanglement is measured by the negativity of the partial
//! transpose of the Gibbs state. Three long-range distance laws map the
//! separation `R` to the exchange strength: `J0/R²`, `J0/sin²R`, `J0/sinh²R`.
//!
//! The crate keeps three independent evaluation routes and audits them
//! against each other:
//!
//! * [`spin`] — exact matrix pipeline (operators → Hamiltonian → Gibbs state
//!   → partial transpose → eigenvalues), the ground-truth oracle;
//! * [`closed_form`] — stable analytic elements of the partially transposed
//!   Gibbs state, exact for all parameter magnitudes;
//! * [`published`] — a verbatim transcription of the as-published element
//!   formulas this project audits, evaluated raw so that their overflow and
//!   fidelity behavior is observable.
//!
//! [`analysis`] adds parameter sweeps, critical-point (sudden-death)
//! location, plateau detection, canned figure datasets and cross-route
//! validation; [`cli`] exposes all of it as a command-line tool.

pub mod analysis;
pub mod cli;
pub mod closed_form;
pub mod coupling;
mod error;
pub mod matrix;
pub mod output;
pub mod published;
pub mod spin;
mod types;

pub use error::Error;
pub use types::{EvalMode, NegativityResult};
