//! Distributed Lyapunov actor-critic (DLAC) control of a benchmark chemical
//! process with two reactors and a flash separator.
//!
//! The crate is organized around the training pipeline:
//!
//! * [`process`] — first-principles simulator of the nine-state
//!   reactor/separator process, steady-state solving, and reference-set
//!   generation.
//! * [`mdp`] — the tracking MDP built on top of the simulator: subsystem
//!   partition, normalization, stage costs, and rollouts.
//! * [`neural`] — small feed-forward networks with analytic backpropagation,
//!   squashed-Gaussian policy heads, and checkpointing.
//! * [`trainer`] — the DLAC algorithm itself: per-subsystem replay buffers,
//!   temporal-difference critics, scalar Lyapunov messages, and Lagrangian
//!   actor updates.
//! * [`diagnostics`] — empirical checks of the Lyapunov decrease condition,
//!   tracking-error reports, and the Gelman-Rubin convergence statistic.
//! * [`baselines`] — open-loop control for comparative evaluation.

pub mod baselines;
pub mod config;
pub mod diagnostics;
pub mod error;
pub mod mdp;
pub mod neural;
pub mod process;
pub mod trainer;

pub use error::{Error, Result};
