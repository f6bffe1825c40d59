//! Coverage planning for low-altitude drone small cells (DSCs).
//!
//! The crate is organised bottom-up:
//!
//! * [`channel`]: air-to-ground path loss and LOS probability.
//! * [`single_dsc`]: optimal altitude, minimum transmit power and coverage
//!   radius of a single DSC.
//! * [`dual_free`]: two DSCs without mutual interference, with the
//!   closed-form circle-union area.
//! * [`dual_interf`]: two DSCs sharing a channel, SINR coverage by polar
//!   integration and grid-search optimizers.
//! * [`geometry`]: grid and Monte-Carlo area oracles used to cross-check the
//!   closed forms and integrals.

// `!(x > 0.0)` is how inputs reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channel;
pub mod dual_free;
pub mod dual_interf;
mod error;
pub mod geometry;
mod roots;
pub mod single_dsc;

pub use channel::{Environment, LinkGeometry, RadioConfig, SPEED_OF_LIGHT};
pub use dual_free::{DualPlacement, Placement, TargetArea};
pub use dual_interf::{CoverageReport, Dsc, InterferenceScenario, PolarCoverageSlice, SearchGrid};
pub use error::{Error, Result};
pub use geometry::{AreaEstimate, AreaMode, Rect};
pub use single_dsc::{AltitudeSolution, CoverageSolution, PowerSolution, UniqueMinimum};
