use serde::Serialize;

use crate::chromatic::DEFAULT_COLOURING_BUDGET;
use crate::constructions::{DEFAULT_DUAL_LIMIT, DEFAULT_PRODUCT_THRESHOLD, DEFAULT_VERTEX_LIMIT};
use crate::hom::{BRUTE_FORCE_LIMIT, DEFAULT_BUDGET};

/// Guards and budgets shared by every verifier. Any verdict reached by
/// hitting one of these is `INDETERMINATE`, never `FAIL`.
#[derive(Clone, Debug, Serialize)]
pub struct LabConfig {
    /// Node expansions per homomorphism search.
    pub hom_budget: u64,
    /// Node expansions per colourability decision.
    pub colouring_budget: u64,
    /// Largest chromatic number the solver is asked to certify.
    pub chi_limit: usize,
    pub vertex_limit: usize,
    pub dual_limit: usize,
    pub product_threshold: usize,
    pub brute_force_limit: u128,
    /// Largest algebraic length the steep-path search accepts.
    pub max_steep_length: usize,
    /// Largest state space (vertices times levels) of a climb search.
    pub max_climb_states: usize,
    /// Re-decide every homomorphism question that fits the brute-force
    /// guard with the exhaustive oracle.
    pub cross_check: bool,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            hom_budget: DEFAULT_BUDGET,
            colouring_budget: DEFAULT_COLOURING_BUDGET,
            chi_limit: 16,
            vertex_limit: DEFAULT_VERTEX_LIMIT,
            dual_limit: DEFAULT_DUAL_LIMIT,
            product_threshold: DEFAULT_PRODUCT_THRESHOLD,
            brute_force_limit: BRUTE_FORCE_LIMIT,
            max_steep_length: 4,
            max_climb_states: 1 << 24,
            cross_check: true,
        }
    }
}
