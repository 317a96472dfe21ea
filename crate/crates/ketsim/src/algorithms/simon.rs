use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_register, h_all, scratch};
use crate::bits::{dot_mod2, from_binary, to_binary, BitSeq};
use crate::circuit::{Circuit, Qubit};
use crate::error::{Error, Result};
use crate::executor::{joint_distribution, Sampler};
use crate::multicontrol::{n_control_u, x_transformation, ControlledOp};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimonRecord {
    pub s: BitSeq,
    /// `f_table[x]` is f(x), inputs and outputs as numbers.
    pub f_table: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimonOutcome {
    /// Remaining nonzero candidates for s; empty means s = 0.
    pub candidates: Vec<BitSeq>,
    /// Distinct measured strings in qubit order, in first-seen order.
    pub unique_results: Vec<String>,
    pub runs: usize,
}

/// Two-to-one table with `f(x) = f(x ⊕ s)`; a permutation when `s` is 0.
pub fn simon_table<R: Rng + ?Sized>(q: usize, s: usize, rng: &mut R) -> Vec<usize> {
    let total = 1usize << q;
    let mut outputs: Vec<usize> = (0..total).collect();
    outputs.shuffle(rng);
    let mut outputs = outputs.into_iter();
    let mut table = vec![usize::MAX; total];
    for x in 0..total {
        if table[x] == usize::MAX {
            let y = outputs.next().expect("enough outputs");
            table[x] = y;
            table[x ^ s] = y;
        }
    }
    table
}

/// Appends `|x>|0> -> |x>|f(x)>`. Allocates Q−1 internal ancillas.
pub fn apply_simon_oracle(circuit: &mut Circuit, qreg: &[Qubit], out_reg: &[Qubit], f_table: &[usize]) -> Result<()> {
    let q = qreg.len();
    check_register(q, qreg)?;
    if out_reg.len() != q || f_table.len() != 1 << q {
        return Err(Error::Length(format!(
            "Q = {q} needs {q} output qubits and {} table entries",
            1usize << q
        )));
    }
    if let Some(&bad) = f_table.iter().find(|&&y| y >= 1 << q) {
        return Err(Error::Range(format!("table output {bad} exceeds {q} bits")));
    }
    let ancillas = scratch(circuit, "nu_anc", q - 1)?;
    for (x, &y) in f_table.iter().enumerate() {
        let ops: Vec<ControlledOp> = to_binary(y, 1 << q)?
            .bits()
            .iter()
            .zip(out_reg)
            .filter(|(&bit, _)| bit == 1)
            .map(|(_, t)| ControlledOp::X(t.clone()))
            .collect();
        if ops.is_empty() {
            continue;
        }
        let pattern = to_binary(x, 1 << q)?;
        x_transformation(circuit, qreg, &pattern)?;
        n_control_u(circuit, qreg, &ancillas, &ops)?;
        x_transformation(circuit, qreg, &pattern)?;
    }
    Ok(())
}

pub fn blackbox_g_simon<R: Rng + ?Sized>(
    q: usize,
    circuit: &mut Circuit,
    qreg: &[Qubit],
    out_reg: &[Qubit],
    rng: &mut R,
) -> Result<SimonRecord> {
    check_register(q, qreg)?;
    let s = rng.gen_range(0..1usize << q);
    let f_table = simon_table(q, s, rng);
    apply_simon_oracle(circuit, qreg, out_reg, &f_table)?;
    Ok(SimonRecord {
        s: to_binary(s, 1 << q)?,
        f_table,
    })
}

/// Full measured circuit for a given table: registers `q`, `out`, the oracle
/// ancillas, and `c`; main register measured with `q[i] -> c[i]`.
pub fn simon_circuit_with(q: usize, f_table: &[usize]) -> Result<Circuit> {
    let mut circuit = Circuit::new("simon", vec![], vec![])?;
    let main = circuit.add_qreg("q", q)?.qubits();
    let out = circuit.add_qreg("out", q)?.qubits();
    h_all(&mut circuit, &main)?;
    apply_simon_oracle(&mut circuit, &main, &out, f_table)?;
    h_all(&mut circuit, &main)?;
    let c = circuit.add_creg("c", q)?;
    for (i, qb) in main.iter().enumerate() {
        circuit.measure(qb, &c.clbit(i))?;
    }
    Ok(circuit)
}

pub fn simon_circuit<R: Rng + ?Sized>(q: usize, rng: &mut R) -> Result<(Circuit, SimonRecord)> {
    if q < 2 {
        return Err(Error::InvalidSize(format!("need at least 2 qubits, got {q}")));
    }
    let s = rng.gen_range(0..1usize << q);
    let f_table = simon_table(q, s, rng);
    let circuit = simon_circuit_with(q, &f_table)?;
    Ok((
        circuit,
        SimonRecord {
            s: to_binary(s, 1 << q)?,
            f_table,
        },
    ))
}

/// Every nonzero s' of length `n` orthogonal to all equations, ascending.
pub fn simons_solver(equations: &[BitSeq], n: usize) -> Result<Vec<BitSeq>> {
    if let Some(e) = equations.iter().find(|e| e.len() != n) {
        return Err(Error::Length(format!("equation {e} is not {n} bits long")));
    }
    let mut out = Vec::new();
    for candidate in 1..1usize << n {
        let s = to_binary(candidate, 1 << n)?;
        if equations
            .iter()
            .all(|e| dot_mod2(&s, e).map(|d| d == 0).unwrap_or(false))
        {
            out.push(s);
        }
    }
    Ok(out)
}

/// Samples the measured Simon circuit one shot at a time until at most one
/// candidate remains. `max_runs` defaults to 64·2^Q.
pub fn simons_classical<R: Rng + ?Sized>(
    q: usize,
    circuit: &Circuit,
    rng: &mut R,
    max_runs: Option<usize>,
) -> Result<SimonOutcome> {
    if circuit.num_clbits() != q {
        return Err(Error::Length(format!(
            "expected {q} classical bits, found {}",
            circuit.num_clbits()
        )));
    }
    let max_runs = max_runs.unwrap_or(64 << q);
    let sampler = Sampler::new(&joint_distribution(circuit)?);
    let mut shots = ChaCha8Rng::seed_from_u64(rng.gen());
    let mut seen = BTreeSet::new();
    let mut equations = Vec::new();
    let mut unique_results = Vec::new();
    let mut candidates = simons_solver(&[], q)?;
    let mut runs = 0;
    while runs < max_runs && candidates.len() > 1 {
        runs += 1;
        let result: String = sampler.sample(&mut shots).chars().rev().collect();
        if seen.insert(result.clone()) {
            equations.push(result.parse::<BitSeq>()?);
            unique_results.push(result);
            candidates = simons_solver(&equations, q)?;
        }
    }
    if candidates.len() > 1 {
        return Err(Error::NonConvergence {
            runs,
            candidates: candidates.len(),
            unique_results,
        });
    }
    Ok(SimonOutcome {
        candidates,
        unique_results,
        runs,
    })
}

/// True when `f(0) = f(s')`, the check that separates s = s' from s = 0.
pub fn confirms_shift(f_table: &[usize], s: &BitSeq) -> bool {
    f_table.first() == f_table.get(from_binary(s))
}
