//! Quantum Fourier transform circuits and the dense DFT they are checked against.
//!
//! No swap network is appended. Under qubit-0-LSB indexing the standard-mode
//! circuit realizes the DFT with the input index bit-reversed:
//! `QFT|x> = Σ_y ω^(rev(x)·y) |y> / √N`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bits::BitSeq;
use crate::circuit::{Circuit, Qubit};
use crate::error::{Error, Result};
use crate::executor::run_statevector;
use crate::matrix::Matrix;
use crate::multicontrol::x_transformation;
use crate::state::Statevector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QftMode {
    /// Phase π/2^(k−j) between control k and target j.
    #[default]
    Standard,
    /// Phase π/2^k indexed by the control's absolute position.
    PaperCompat,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QftStep {
    H(usize),
    /// Controlled phase; positions index the qubit slice.
    Cu1 { control: usize, target: usize, angle: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct QftPlan {
    pub qubits: usize,
    pub mode: QftMode,
    pub steps: Vec<QftStep>,
}

impl QftPlan {
    pub fn new(qubits: usize, mode: QftMode) -> Result<Self> {
        if qubits == 0 {
            return Err(Error::InvalidSize("a QFT needs at least one qubit".into()));
        }
        let mut steps = Vec::new();
        for j in 0..qubits {
            steps.push(QftStep::H(j));
            for k in j + 1..qubits {
                steps.push(QftStep::Cu1 {
                    control: k,
                    target: j,
                    angle: rotation_angle(mode, k, j),
                });
            }
        }
        Ok(QftPlan { qubits, mode, steps })
    }

    /// Reverse order with negated phases.
    pub fn inverse(&self) -> QftPlan {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|&s| match s {
                QftStep::Cu1 { control, target, angle } => QftStep::Cu1 {
                    control,
                    target,
                    angle: -angle,
                },
                h => h,
            })
            .collect();
        QftPlan {
            qubits: self.qubits,
            mode: self.mode,
            steps,
        }
    }

    /// Phases of the controlled rotations, in gate order.
    pub fn angles(&self) -> Vec<f64> {
        self.steps
            .iter()
            .filter_map(|s| match s {
                QftStep::Cu1 { angle, .. } => Some(*angle),
                QftStep::H(_) => None,
            })
            .collect()
    }

    fn append_to(&self, circuit: &mut Circuit, qubits: &[Qubit]) -> Result<()> {
        if qubits.len() != self.qubits {
            return Err(Error::Length(format!(
                "plan covers {} qubits, {} supplied",
                self.qubits,
                qubits.len()
            )));
        }
        for q in qubits {
            circuit.qubit_index(q)?;
        }
        for step in &self.steps {
            match *step {
                QftStep::H(j) => circuit.h(&qubits[j])?,
                QftStep::Cu1 { control, target, angle } => {
                    circuit.cu1(angle, &qubits[control], &qubits[target])?
                }
            };
        }
        Ok(())
    }
}

pub fn rotation_angle(mode: QftMode, control: usize, target: usize) -> f64 {
    match mode {
        QftMode::Standard => PI / 2f64.powi((control - target) as i32),
        QftMode::PaperCompat => PI / 2f64.powi(control as i32),
    }
}

pub fn qft(circuit: &mut Circuit, qubits: &[Qubit], mode: QftMode) -> Result<QftPlan> {
    let plan = QftPlan::new(qubits.len(), mode)?;
    plan.append_to(circuit, qubits)?;
    Ok(plan)
}

pub fn qft_dgr(circuit: &mut Circuit, qubits: &[Qubit], mode: QftMode) -> Result<QftPlan> {
    let plan = QftPlan::new(qubits.len(), mode)?.inverse();
    plan.append_to(circuit, qubits)?;
    Ok(plan)
}

/// Entry (k, j) is ω^(k·j) with ω = e^(2πi/size), optionally scaled by 1/√size.
pub fn dft_matrix(size: usize, normalized: bool) -> Result<Matrix> {
    if size < 2 || !size.is_power_of_two() {
        return Err(Error::InvalidSize(format!("{size} is not a power of two >= 2")));
    }
    let scale = if normalized { 1.0 / (size as f64).sqrt() } else { 1.0 };
    let mut m = Matrix::zeros(size, size);
    for k in 0..size {
        for j in 0..size {
            m[(k, j)] = unit_root((k * j) % size, size) * scale;
        }
    }
    Ok(m)
}

/// `e^(2πi·e/size)`, exact at quarter turns.
fn unit_root(e: usize, size: usize) -> Complex64 {
    if (4 * e).is_multiple_of(size) {
        return match 4 * e / size {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, 2.0 * PI * e as f64 / size as f64)
}

/// Two-qubit search using QFTs in place of the Hadamard layers. Registers
/// `q[2]` and `anc[1]`.
pub fn qft_grover_circuit(marked: &BitSeq) -> Result<Circuit> {
    if marked.len() != 2 {
        return Err(Error::Length(format!("marked must have 2 bits, got {}", marked.len())));
    }
    let mut circuit = Circuit::new("qft_grover", vec![], vec![])?;
    let q = circuit.add_qreg("q", 2)?.qubits();
    let anc = circuit.add_qreg("anc", 1)?.qubit(0);
    circuit.id(&q[0])?.id(&q[1])?.x(&anc)?;
    qft(&mut circuit, &q, QftMode::Standard)?;

    x_transformation(&mut circuit, &q, marked)?;
    circuit.h(&anc)?.ccx(&q[0], &q[1], &anc)?;
    x_transformation(&mut circuit, &q, marked)?;
    circuit.h(&anc)?;

    qft(&mut circuit, &q, QftMode::Standard)?;

    circuit.h(&anc)?;
    let zeros = BitSeq::zeros(2);
    x_transformation(&mut circuit, &q, &zeros)?;
    circuit.ccx(&q[0], &q[1], &anc)?.h(&anc)?;
    x_transformation(&mut circuit, &q, &zeros)?;

    qft_dgr(&mut circuit, &q, QftMode::Standard)?;
    Ok(circuit)
}

pub fn qft_grover_demo(marked: &BitSeq) -> Result<Statevector> {
    run_statevector(&qft_grover_circuit(marked)?)
}
