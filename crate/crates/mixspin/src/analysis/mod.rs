//! Parameter sweeps over (R, T, B), critical-threshold location, plateau
//! detection, figure-dataset presets and cross-route validation.

mod plateau;
mod presets;
mod sweep;
mod threshold;
mod validate;

pub use plateau::{detect_plateaus, Plateau};
pub use presets::{figure_preset, FigurePreset, FIGURE_IDS};
pub use sweep::{
    sweep, sweep_with_workers, Axis, AxisValues, ParamName, RecordStatus, SweepRecord, SweepSpec,
};
pub use threshold::{find_threshold, CriticalPoint};
pub use validate::{validate_modes, SamplePoint, SplitMix64, ValidationReport, WorstEntry};
