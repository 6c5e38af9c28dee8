//! Simulation and analysis toolkit for Hong-Ou-Mandel (HOM) interference of
//! biexciton and exciton photons emitted by a quantum-dot cascade.
//!
//! The crate is organised around the measurement chain:
//!
//! * [`quantum`] — dense density-matrix evolution under a Lindblad generator
//!   and two-time correlators via the quantum regression procedure.
//! * [`cascade`] — the three-level biexciton–exciton cascade with pure
//!   dephasing, optionally augmented with weakly coupled sensor qubits, and
//!   the per-line intensities and first-order coherences it emits.
//! * [`hom`] — assembly of the HOM two-photon correlation from intensities
//!   and coherences, instrument-response convolution, and the triple-peak
//!   coincidence pattern with its `P0` / visibility summary.
//! * [`oracle`] — closed-form and quadrature implementations of the cascade
//!   two-photon amplitude and its reduced purity, used as ground truth.
//! * [`histogram`] — coincidence/decay histogram analysis: peak areas, `P0`,
//!   pulsed `g2(0)`, and IRF-aware lifetime fits.
//! * [`fitting`] — grid-search coherence-time extraction against simulated,
//!   IRF-convolved templates, with template caching and sweep bookkeeping.
//! * [`pipeline`] — orchestration of one full simulation run.
//!
//! Units: time in picoseconds, rates in 1/ps, Hamiltonians in rad/ps.

pub mod cascade;
pub mod error;
pub mod fitting;
pub mod grid;
pub mod histogram;
pub mod hom;
pub mod linalg;
pub mod oracle;
pub mod pipeline;
pub mod quantum;

pub use error::Error;
pub use grid::TimeGrid;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
