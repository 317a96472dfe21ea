//! Multi-controlled gates built from CCX cascades onto clean ancillas.

use crate::bits::BitSeq;
use crate::circuit::{Circuit, Instruction, Qubit};
use crate::error::{Error, Result};
use crate::gates::{GateKind, GateSpec};

#[derive(Debug, Clone, PartialEq)]
pub enum ControlledOp {
    X(Qubit),
    Z(Qubit),
    Phase(Qubit, f64),
    Swap(Qubit, Qubit),
}

impl ControlledOp {
    /// Builds an op from a kind name (`X`, `Z`, `PHASE`, `SWAP`, any case).
    pub fn from_parts(kind: &str, targets: &[Qubit], angle: Option<f64>) -> Result<Self> {
        let bad = |why: &str| Err(Error::Request(format!("{kind}: {why}")));
        match (kind.to_ascii_uppercase().as_str(), targets, angle) {
            ("X", [t], None) => Ok(ControlledOp::X(t.clone())),
            ("Z", [t], None) => Ok(ControlledOp::Z(t.clone())),
            ("PHASE", [t], Some(a)) => Ok(ControlledOp::Phase(t.clone(), a)),
            ("SWAP", [a, b], None) => Ok(ControlledOp::Swap(a.clone(), b.clone())),
            ("X" | "Z" | "PHASE" | "SWAP", _, _) => bad("wrong targets or angle"),
            _ => bad("unknown op kind"),
        }
    }

    pub fn targets(&self) -> Vec<&Qubit> {
        match self {
            ControlledOp::X(t) | ControlledOp::Z(t) | ControlledOp::Phase(t, _) => vec![t],
            ControlledOp::Swap(a, b) => vec![a, b],
        }
    }

    fn controlled_by(&self, control: &Qubit) -> Result<Instruction> {
        let c = control.clone();
        Ok(match self {
            ControlledOp::X(t) => Instruction::gate(GateSpec::fixed(GateKind::CX), &[c, t.clone()]),
            ControlledOp::Z(t) => Instruction::gate(GateSpec::fixed(GateKind::CZ), &[c, t.clone()]),
            ControlledOp::Phase(t, a) => {
                Instruction::gate(GateSpec::new(GateKind::CU1, Some(*a))?, &[c, t.clone()])
            }
            ControlledOp::Swap(a, b) => Instruction::gate(
                GateSpec::fixed(GateKind::CSWAP),
                &[c, a.clone(), b.clone()],
            ),
        })
    }
}

fn ccx(a: &Qubit, b: &Qubit, t: &Qubit) -> Instruction {
    Instruction::gate(GateSpec::fixed(GateKind::CCX), &[a.clone(), b.clone(), t.clone()])
}

/// X on every qubit whose pattern bit is 0.
pub fn x_transformation(circuit: &mut Circuit, qubits: &[Qubit], pattern: &BitSeq) -> Result<()> {
    if qubits.len() != pattern.len() {
        return Err(Error::Length(format!(
            "{} qubits but pattern has {} bits",
            qubits.len(),
            pattern.len()
        )));
    }
    for q in qubits {
        circuit.qubit_index(q)?;
    }
    for (q, &bit) in qubits.iter().zip(pattern.bits()) {
        if bit == 0 {
            circuit.x(q)?;
        }
    }
    Ok(())
}

/// Resolves every group and rejects any qubit appearing twice.
fn check_disjoint(circuit: &Circuit, groups: &[&[Qubit]]) -> Result<()> {
    let mut seen = Vec::new();
    for q in groups.iter().flat_map(|g| g.iter()) {
        let i = circuit.qubit_index(q)?;
        if seen.contains(&i) {
            return Err(Error::Aliasing(format!(
                "{}[{}] appears in more than one role",
                q.register(),
                q.index()
            )));
        }
        seen.push(i);
    }
    Ok(())
}

/// CCX sequence that ANDs `controls` (at least two) into `target`, using
/// `ancillas[..controls.len() - 2]` as scratch. The last gate hits `target`.
fn cascade(controls: &[Qubit], ancillas: &[Qubit], target: &Qubit) -> Vec<Instruction> {
    if let [a, b] = controls {
        return vec![ccx(a, b, target)];
    }
    let mut gates = Vec::new();
    let mut fresh = ancillas.iter();
    let mut active = std::collections::VecDeque::new();
    for pair in controls.chunks(2) {
        if let [a, b] = pair {
            let anc = fresh.next().expect("ancilla budget checked by caller");
            gates.push(ccx(a, b, anc));
            active.push_back(anc);
        }
    }
    let mut leftover = (controls.len() % 2 == 1).then(|| &controls[controls.len() - 1]);
    loop {
        let (a, b) = match leftover.take() {
            Some(c) => (c, active.pop_front().expect("at least one active ancilla")),
            None => {
                let a = active.pop_front().expect("two active ancillas");
                (a, active.pop_front().expect("two active ancillas"))
            }
        };
        if active.is_empty() {
            gates.push(ccx(a, b, target));
            return gates;
        }
        let anc = fresh.next().expect("ancilla budget checked by caller");
        gates.push(ccx(a, b, anc));
        active.push_back(anc);
    }
}

fn check_budget(ancillas: &[Qubit], needed: usize) -> Result<()> {
    if ancillas.len() < needed {
        return Err(Error::Capacity(format!(
            "{needed} ancillas needed, {} supplied",
            ancillas.len()
        )));
    }
    Ok(())
}

fn check_controls(controls: &[Qubit]) -> Result<()> {
    if controls.is_empty() {
        return Err(Error::InvalidSize("at least one control is required".into()));
    }
    Ok(())
}

/// Appends an n-controlled X. Needs `max(n - 2, 0)` clean ancillas and
/// returns them clean.
pub fn n_not(circuit: &mut Circuit, controls: &[Qubit], target: &Qubit, ancillas: &[Qubit]) -> Result<()> {
    check_controls(controls)?;
    check_disjoint(circuit, &[controls, std::slice::from_ref(target), ancillas])?;
    let gates = match controls {
        [c] => vec![Instruction::gate(
            GateSpec::fixed(GateKind::CX),
            &[c.clone(), target.clone()],
        )],
        _ => {
            check_budget(ancillas, controls.len() - 2)?;
            let mut forward = cascade(controls, ancillas, target);
            let hit = forward.pop().expect("cascade is nonempty");
            let mut gates = forward.clone();
            gates.push(hit);
            gates.extend(forward.into_iter().rev());
            gates
        }
    };
    for g in gates {
        circuit.append(g)?;
    }
    Ok(())
}

/// Appends each op controlled on all of `controls`. Needs `n - 1` clean
/// ancillas and returns them clean.
pub fn n_control_u(
    circuit: &mut Circuit,
    controls: &[Qubit],
    ancillas: &[Qubit],
    ops: &[ControlledOp],
) -> Result<()> {
    check_controls(controls)?;
    if ops.is_empty() {
        return Err(Error::Request("no operations requested".into()));
    }
    let targets: Vec<Qubit> = ops.iter().flat_map(|op| op.targets()).cloned().collect();
    check_disjoint(circuit, &[controls, ancillas])?;
    for t in &targets {
        check_disjoint(circuit, &[controls, ancillas, std::slice::from_ref(t)])?;
    }
    let n = controls.len();
    check_budget(ancillas, n - 1)?;
    let (forward, c_a) = if n == 1 {
        (Vec::new(), controls[0].clone())
    } else {
        let c_a = ancillas[n - 2].clone();
        (cascade(controls, &ancillas[..n - 2], &c_a), c_a)
    };
    let mut gates = forward.clone();
    for op in ops {
        gates.push(op.controlled_by(&c_a)?);
    }
    gates.extend(forward.into_iter().rev());
    for g in gates {
        circuit.append(g)?;
    }
    Ok(())
}
