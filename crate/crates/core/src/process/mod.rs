//! First-principles simulator of the two-reactor/flash-separator process.
//!
//! Two parallel reactions (A -> B, B -> C) run in two stirred-tank reactors
//! whose effluent is separated in a flash tank; the overhead vapor is
//! recycled to the first reactor. The nine states are the A/B mass fractions
//! and the temperature in each vessel; the three manipulated inputs are the
//! vessel heat duties.

mod dynamics;
mod integrate;
mod params;
mod references;
mod state;
mod steady_state;

pub use dynamics::{derivatives, vapor_composition};
pub use integrate::{rk4_advance, rk4_step, stochastic_step, truncated_normal};
pub use params::{DisturbanceSpec, HeatInputs, ProcessParams};
pub use references::{generate_reference_set, InputGrid, ReferencePair, ReferenceSet};
pub use state::ProcessState;
pub use steady_state::{integrate_to_steady, solve_steady_state};

/// Number of process states.
pub const STATE_DIM: usize = 9;
/// Number of manipulated inputs.
pub const ACTION_DIM: usize = 3;
