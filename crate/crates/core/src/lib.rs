//! Resource estimation and floorplanning for the CMOS hybrid-qubit architecture.
//!
//! The crate is split by concern:
//!
//! * [`spinspace`]: the three-spin logical basis of a hybrid qubit and the
//!   total-spin operators used to check it.
//! * [`physics`]: exchange coupling, SWAP duration and end-to-end chain
//!   transfer time as a function of inter-dot distance.
//! * [`chainsim`]: a discrete simulator of the odd/even SWAP schedule that
//!   moves states along a communication chain.
//! * [`floorplan`]: the device catalog, hierarchical placement, design-rule
//!   checks, rectilinear route lengths and SVG export.
//! * [`qec`]: concatenated Steane-code error rates and overhead scaling.
//!
//! The most common types are re-exported at the crate root.

pub mod chainsim;
pub mod floorplan;
pub mod numfmt;
pub mod physics;
pub mod qec;
pub mod spinspace;

pub use chainsim::{make_schedule, make_sequential_schedule, run_chain, transfer_report};
pub use chainsim::{ChainError, ChainState, SwapSchedule, TransferReport};
pub use floorplan::{
    builtin_catalog, check_design_rules, compose, export_svg, path_length, summarize,
};
pub use floorplan::{
    Floorplan, FloorplanError, ModuleKind, ModuleSpec, Placement, PlacementId, Rect,
    RegisterSummary, Rotation, RoutingError, SvgOptions, Violation,
};
pub use physics::{chain_length, exchange_coupling, sweep_t_total, t_swap, t_total};
pub use physics::{ChainGeometry, PhysicsError, PhysicsParams, SweepPoint};
pub use qec::{logical_error_rate, overhead, suppression_condition};
pub use qec::{LogicalErrorRate, Overhead, QecError, QecLevel, SteaneParams};
pub use spinspace::{apply_s_squared, apply_sz, build_logical_basis, LogicalBasis, ThreeSpinState};
