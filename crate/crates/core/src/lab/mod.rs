//! Claim verifiers. Each returns a [`VerifyReport`] whose witnesses can be
//! re-validated with the core operations alone.
//!
//! A verdict of `INDETERMINATE` only ever comes from a size guard or a
//! search budget in [`LabConfig`]; `FAIL` always names the offending
//! instance. Random instances come from a seeded ChaCha generator and the
//! seed is recorded in the report.

mod adjoint;
mod config;
mod duality;
pub mod generate;
mod hfunc;
pub mod iso;
mod leveled;
mod obstruction;
mod report;
mod steep;
pub mod suite;
mod util;

pub use adjoint::{
    verify_adjunction, verify_chi3k, verify_chick, verify_gencol, verify_gencol_lower_tight,
    verify_yz,
};
pub use config::LabConfig;
pub use duality::{verify_duality_tree, verify_hompath, verify_inadprod, verify_mulpath};
pub use hfunc::{h_function, verify_h_function, HRow, HTable, H_FUNCTION_MAX_K};
pub use leveled::{shortest_climb, Climb};
pub use obstruction::{verify_finobs, verify_minty};
pub use report::{Verdict, VerifyReport, Witness, WitnessKind};
pub use steep::{find_steep_path, verify_steep_consequence, verify_steep_path, SteepPath};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 2024;
