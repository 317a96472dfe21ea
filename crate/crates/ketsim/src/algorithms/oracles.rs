//! Phase-kickback oracles for Deutsch–Jozsa and Bernstein–Vazirani.
//!
//! Both expect the ancilla line in |−>, so flipping it on an input negates
//! that input's amplitude.

use rand::seq::index;
use rand::Rng;

use super::{check_register, flip_on_pattern, h_all, scratch};
use crate::bits::{dot_mod2, to_binary, BitSeq};
use crate::circuit::{Circuit, Qubit};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DjKind {
    ConstantZero,
    ConstantOne,
    Balanced,
}

/// How often the generator picks a constant function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DjOdds {
    /// Constant with probability 2 / 2^Q, split between 0 and 1.
    #[default]
    Uniform,
    /// Constant and balanced equally likely.
    Even,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DjRecord {
    pub kind: DjKind,
    /// Inputs mapped to 1, ascending.
    pub one_states: Vec<BitSeq>,
}

impl DjRecord {
    pub fn constant_zero() -> Self {
        DjRecord {
            kind: DjKind::ConstantZero,
            one_states: Vec::new(),
        }
    }

    pub fn constant_one(q: usize) -> Self {
        DjRecord {
            kind: DjKind::ConstantOne,
            one_states: (0..1 << q).map(|x| to_binary(x, 1 << q).expect("in range")).collect(),
        }
    }

    /// Balanced function that is 1 exactly on `inputs` (as numbers).
    pub fn balanced(q: usize, inputs: &[usize]) -> Result<Self> {
        let mut one_states = inputs
            .iter()
            .map(|&x| to_binary(x, 1 << q))
            .collect::<Result<Vec<_>>>()?;
        one_states.sort();
        Ok(DjRecord {
            kind: DjKind::Balanced,
            one_states,
        })
    }

    pub fn is_constant(&self) -> bool {
        self.kind != DjKind::Balanced
    }

    pub fn label(&self) -> &'static str {
        if self.is_constant() {
            "constant"
        } else {
            "balanced"
        }
    }
}

/// Appends the oracle for `record`. Allocates Q−2 internal ancillas.
pub fn apply_dj_oracle(circuit: &mut Circuit, qreg: &[Qubit], ancilla: &Qubit, record: &DjRecord) -> Result<()> {
    let q = qreg.len();
    check_register(q, qreg)?;
    let cascade = scratch(circuit, "nn_anc", q - 2)?;
    match record.kind {
        DjKind::ConstantZero => {
            for x in qreg {
                circuit.id(x)?;
            }
        }
        DjKind::ConstantOne => {
            circuit.x(ancilla)?;
        }
        DjKind::Balanced => {
            for state in &record.one_states {
                flip_on_pattern(circuit, qreg, ancilla, &cascade, state)?;
            }
        }
    }
    Ok(())
}

pub fn blackbox_g_dj<R: Rng + ?Sized>(
    q: usize,
    circuit: &mut Circuit,
    qreg: &[Qubit],
    ancilla: &Qubit,
    rng: &mut R,
    odds: DjOdds,
) -> Result<DjRecord> {
    check_register(q, qreg)?;
    let r = match odds {
        DjOdds::Uniform => rng.gen_range(0..1usize << q),
        DjOdds::Even => rng.gen_range(0..4),
    };
    let record = match r {
        0 => DjRecord::constant_zero(),
        1 => DjRecord::constant_one(q),
        _ => {
            let inputs = index::sample(rng, 1 << q, 1 << (q - 1)).into_vec();
            DjRecord::balanced(q, &inputs)?
        }
    };
    apply_dj_oracle(circuit, qreg, ancilla, &record)?;
    Ok(record)
}

fn sandwich(
    circuit: &mut Circuit,
    qreg: &[Qubit],
    ancilla: &Qubit,
    body: impl FnOnce(&mut Circuit) -> Result<()>,
) -> Result<()> {
    h_all(circuit, qreg)?;
    circuit.h(ancilla)?;
    body(circuit)?;
    h_all(circuit, qreg)?;
    circuit.h(ancilla)?;
    Ok(())
}

/// H on main and ancilla, the oracle for `record`, H again. Expects the ancilla in |1>.
pub fn deutsch_jozsa_with(circuit: &mut Circuit, qreg: &[Qubit], ancilla: &Qubit, record: &DjRecord) -> Result<()> {
    sandwich(circuit, qreg, ancilla, |c| apply_dj_oracle(c, qreg, ancilla, record))
}

pub fn deutsch_jozsa<R: Rng + ?Sized>(
    q: usize,
    circuit: &mut Circuit,
    qreg: &[Qubit],
    ancilla: &Qubit,
    rng: &mut R,
    odds: DjOdds,
) -> Result<DjRecord> {
    check_register(q, qreg)?;
    let mut record = None;
    sandwich(circuit, qreg, ancilla, |c| {
        record = Some(blackbox_g_dj(q, c, qreg, ancilla, rng, odds)?);
        Ok(())
    })?;
    Ok(record.expect("set by the oracle step"))
}

/// Negates every input with odd overlap with `a`. Allocates Q−2 internal ancillas.
pub fn apply_bv_oracle(circuit: &mut Circuit, qreg: &[Qubit], ancilla: &Qubit, a: &BitSeq) -> Result<()> {
    let q = qreg.len();
    check_register(q, qreg)?;
    let cascade = scratch(circuit, "nn_anc", q - 2)?;
    for x in 0..1usize << q {
        let x = to_binary(x, 1 << q)?;
        if dot_mod2(&x, a)? == 1 {
            flip_on_pattern(circuit, qreg, ancilla, &cascade, &x)?;
        }
    }
    Ok(())
}

pub fn blackbox_g_bv<R: Rng + ?Sized>(
    q: usize,
    circuit: &mut Circuit,
    qreg: &[Qubit],
    ancilla: &Qubit,
    rng: &mut R,
) -> Result<BitSeq> {
    check_register(q, qreg)?;
    let a = to_binary(rng.gen_range(0..1usize << q), 1 << q)?;
    apply_bv_oracle(circuit, qreg, ancilla, &a)?;
    Ok(a)
}

pub fn bernstein_vazirani_with(circuit: &mut Circuit, qreg: &[Qubit], ancilla: &Qubit, a: &BitSeq) -> Result<()> {
    sandwich(circuit, qreg, ancilla, |c| apply_bv_oracle(c, qreg, ancilla, a))
}

pub fn bernstein_vazirani<R: Rng + ?Sized>(
    q: usize,
    circuit: &mut Circuit,
    qreg: &[Qubit],
    ancilla: &Qubit,
    rng: &mut R,
) -> Result<BitSeq> {
    check_register(q, qreg)?;
    let mut a = None;
    sandwich(circuit, qreg, ancilla, |c| {
        a = Some(blackbox_g_bv(q, c, qreg, ancilla, rng)?);
        Ok(())
    })?;
    Ok(a.expect("set by the oracle step"))
}
