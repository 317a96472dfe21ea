use rand::Rng;

use super::h_all;
use crate::circuit::{Circuit, Qubit};
use crate::error::{Error, Result};

/// The four one-bit functions, named by their action on inputs (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeutschFunction {
    /// f(0,1) -> (0,1)
    Identity,
    /// f(0,1) -> (1,0)
    Negation,
    /// f(0,1) -> 0
    ConstantZero,
    /// f(0,1) -> 1
    ConstantOne,
}

impl DeutschFunction {
    pub const ALL: [DeutschFunction; 4] = [
        DeutschFunction::Identity,
        DeutschFunction::Negation,
        DeutschFunction::ConstantZero,
        DeutschFunction::ConstantOne,
    ];

    pub fn label(self) -> &'static str {
        match self {
            DeutschFunction::Identity => "f(0,1) -> (0,1)",
            DeutschFunction::Negation => "f(0,1) -> (1,0)",
            DeutschFunction::ConstantZero => "f(0,1) -> 0",
            DeutschFunction::ConstantOne => "f(0,1) -> 1",
        }
    }

    pub fn is_balanced(self) -> bool {
        matches!(self, DeutschFunction::Identity | DeutschFunction::Negation)
    }
}

fn pair(qreg: &[Qubit]) -> Result<(&Qubit, &Qubit)> {
    match qreg {
        [a, b] => Ok((a, b)),
        _ => Err(Error::Length(format!("Deutsch needs 2 qubits, got {}", qreg.len()))),
    }
}

/// Appends `|x>|y> -> |x>|y ⊕ f(x)>` with x on `qreg[0]` and y on `qreg[1]`.
pub fn apply_deutsch_blackbox(circuit: &mut Circuit, qreg: &[Qubit], f: DeutschFunction) -> Result<()> {
    let (x, y) = pair(qreg)?;
    match f {
        DeutschFunction::Identity => {
            circuit.cx(x, y)?;
        }
        DeutschFunction::Negation => {
            circuit.x(x)?.cx(x, y)?.x(x)?;
        }
        DeutschFunction::ConstantZero => {
            circuit.id(x)?.id(y)?;
        }
        DeutschFunction::ConstantOne => {
            circuit.x(y)?;
        }
    }
    Ok(())
}

pub fn blackbox_g_deutsch<R: Rng + ?Sized>(
    circuit: &mut Circuit,
    qreg: &[Qubit],
    rng: &mut R,
) -> Result<DeutschFunction> {
    pair(qreg)?;
    let f = DeutschFunction::ALL[rng.gen_range(0..4)];
    apply_deutsch_blackbox(circuit, qreg, f)?;
    Ok(f)
}

/// H on both, the blackbox for `f`, H on both. Expects `qreg[1]` already in |1>.
pub fn deutsch_with(circuit: &mut Circuit, qreg: &[Qubit], f: DeutschFunction) -> Result<()> {
    pair(qreg)?;
    h_all(circuit, qreg)?;
    apply_deutsch_blackbox(circuit, qreg, f)?;
    h_all(circuit, qreg)
}

/// Random-function Deutsch run. Measuring `qreg[0]` then gives 1 iff f is balanced.
pub fn deutsch<R: Rng + ?Sized>(circuit: &mut Circuit, qreg: &[Qubit], rng: &mut R) -> Result<DeutschFunction> {
    pair(qreg)?;
    h_all(circuit, qreg)?;
    let f = blackbox_g_deutsch(circuit, qreg, rng)?;
    h_all(circuit, qreg)?;
    Ok(f)
}
