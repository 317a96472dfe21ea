//! Dense statevector quantum circuit simulator.
//!
//! Qubit 0 is the least significant bit of every amplitude index and the
//! leftmost character of every ket string.

pub mod algorithms;
pub mod bits;
pub mod circuit;
pub mod display;
pub mod error;
pub mod executor;
pub mod gates;
pub mod matrix;
pub mod multicontrol;
pub mod qasm;
pub mod qft;
pub mod state;

pub use bits::BitSeq;
pub use circuit::{Circuit, Clbit, EditAction, Instruction, Qubit, RegClass, RegisterDecl};
pub use display::{format_amplitude, format_counts, format_wavefunction, DisplayOptions};
pub use error::{Error, Result};
pub use executor::{joint_distribution, run_counts, run_statevector, run_statevector_from, Counts, RunSeed};
pub use gates::{gate_matrix, GateKind, GateSpec};
pub use matrix::{is_unitary, Matrix};
pub use qasm::{emit_qasm, parse_qasm};
pub use state::{basis_index, global_phase_equiv, zero_state, Statevector};
