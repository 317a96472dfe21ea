//! Blackbox generators and drivers for the textbook algorithms.
//!
//! Every random generator draws its hidden structure first and then calls a
//! deterministic `apply_*` builder, so a given structure can be built
//! directly. Random draws per generator, in order:
//!
//! - Deutsch: one `gen_range(0..4)` selecting the function.
//! - Deutsch–Jozsa: one `gen_range(0..2^Q)` (or `0..4` with [`DjOdds::Even`]);
//!   balanced functions then draw their inputs with `index::sample`.
//! - Bernstein–Vazirani: one `gen_range(0..2^Q)` for `a`.
//! - Simon: one `gen_range(0..2^Q)` for `s`, then one shuffle of the outputs.
//! - Coin flip and [`simons_classical`]: one `u64` seed for the sampler.

mod coin;
mod deutsch;
mod grover;
mod oracles;
mod simon;

use std::fmt;

pub use coin::coin_flip;
pub use deutsch::{apply_deutsch_blackbox, blackbox_g_deutsch, deutsch, deutsch_with, DeutschFunction};
pub use grover::{
    grover, grover_diffusion, grover_iterations, grover_oracle, grover_with_iterations,
    reflect_about_average, GroverPlan,
};
pub use oracles::{
    apply_bv_oracle, apply_dj_oracle, bernstein_vazirani, bernstein_vazirani_with, blackbox_g_bv,
    blackbox_g_dj, deutsch_jozsa, deutsch_jozsa_with, DjKind, DjOdds, DjRecord,
};
pub use simon::{
    apply_simon_oracle, blackbox_g_simon, confirms_shift, simon_circuit, simon_circuit_with, simon_table,
    simons_classical, simons_solver, SimonOutcome, SimonRecord,
};

use crate::bits::BitSeq;
use crate::circuit::{Circuit, Qubit};
use crate::error::{Error, Result};
use crate::multicontrol::{n_not, x_transformation};

/// Hidden structure behind a generated blackbox.
#[derive(Debug, Clone, PartialEq)]
pub enum BlackboxRecord {
    Deutsch(DeutschFunction),
    Dj(DjRecord),
    Bv(BitSeq),
    Simon(SimonRecord),
}

impl fmt::Display for BlackboxRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlackboxRecord::Deutsch(func) => write!(f, "f: {}", func.label()),
            BlackboxRecord::Dj(rec) => {
                write!(f, "f: {}", rec.label())?;
                if !rec.one_states.is_empty() {
                    let kets: Vec<String> = rec.one_states.iter().map(|s| format!("|{s}>")).collect();
                    write!(f, "\nstates mapped to 1: {}", kets.join(" "))?;
                }
                Ok(())
            }
            BlackboxRecord::Bv(a) => write!(f, "hidden a: {a}"),
            BlackboxRecord::Simon(rec) => {
                write!(f, "hidden s: {}", rec.s)?;
                let q = rec.s.len();
                for (x, &y) in rec.f_table.iter().enumerate() {
                    let total = 1 << q;
                    let x = crate::bits::to_binary(x, total).map_err(|_| fmt::Error)?;
                    let y = crate::bits::to_binary(y, total).map_err(|_| fmt::Error)?;
                    write!(f, "\nf(|{x}>) = |{y}>")?;
                }
                Ok(())
            }
        }
    }
}

pub(crate) fn check_register(q: usize, qreg: &[Qubit]) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidSize(format!("need at least 2 qubits, got {q}")));
    }
    if qreg.len() != q {
        return Err(Error::Length(format!("Q = {q} but {} qubits supplied", qreg.len())));
    }
    Ok(())
}

/// Adds a register of `size` qubits under a fresh name; empty when `size` is 0.
pub(crate) fn scratch(circuit: &mut Circuit, prefix: &str, size: usize) -> Result<Vec<Qubit>> {
    if size == 0 {
        return Ok(Vec::new());
    }
    let name = circuit.fresh_register_name(prefix);
    Ok(circuit.add_qreg(&name, size)?.qubits())
}

/// Flips the ancilla line exactly when `qreg` holds `pattern`.
pub(crate) fn flip_on_pattern(
    circuit: &mut Circuit,
    qreg: &[Qubit],
    ancilla: &Qubit,
    cascade_ancs: &[Qubit],
    pattern: &BitSeq,
) -> Result<()> {
    x_transformation(circuit, qreg, pattern)?;
    n_not(circuit, qreg, ancilla, cascade_ancs)?;
    x_transformation(circuit, qreg, pattern)
}

pub(crate) fn h_all(circuit: &mut Circuit, qubits: &[Qubit]) -> Result<()> {
    for q in qubits {
        circuit.h(q)?;
    }
    Ok(())
}
