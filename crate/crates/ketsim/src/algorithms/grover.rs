use std::f64::consts::PI;

use num_complex::Complex64;

use super::{flip_on_pattern, h_all};
use crate::bits::BitSeq;
use crate::circuit::{Circuit, Qubit};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroverPlan {
    pub q: usize,
    pub marked: BitSeq,
    pub iterations: usize,
}

/// `round(π/4 · 2^(Q/2))`
pub fn grover_iterations(q: usize) -> usize {
    (PI / 4.0 * 2f64.powf(q as f64 / 2.0)).round() as usize
}

/// Negates the amplitude of `marked`. Expects `phase_anc` in |1>.
pub fn grover_oracle(
    marked: &BitSeq,
    circuit: &mut Circuit,
    qreg: &[Qubit],
    phase_anc: &Qubit,
    cascade_ancs: &[Qubit],
) -> Result<()> {
    if marked.len() != qreg.len() {
        return Err(Error::Length(format!(
            "marked has {} bits for {} qubits",
            marked.len(),
            qreg.len()
        )));
    }
    circuit.h(phase_anc)?;
    flip_on_pattern(circuit, qreg, phase_anc, cascade_ancs, marked)?;
    circuit.h(phase_anc)?;
    Ok(())
}

/// Net effect on the main register: `I − 2|s><s|` for the uniform state |s>.
pub fn grover_diffusion(
    q: usize,
    circuit: &mut Circuit,
    qreg: &[Qubit],
    phase_anc: &Qubit,
    cascade_ancs: &[Qubit],
) -> Result<()> {
    if q != qreg.len() {
        return Err(Error::Length(format!("Q = {q} but {} qubits supplied", qreg.len())));
    }
    h_all(circuit, qreg)?;
    grover_oracle(&BitSeq::zeros(q), circuit, qreg, phase_anc, cascade_ancs)?;
    h_all(circuit, qreg)
}

/// `x_i -> 2·mean − x_i`
pub fn reflect_about_average(amplitudes: &[Complex64]) -> Vec<Complex64> {
    let mean = amplitudes.iter().sum::<Complex64>() / amplitudes.len() as f64;
    amplitudes.iter().map(|&x| 2.0 * mean - x).collect()
}

/// Search circuit with an explicit iteration count. Registers, in order:
/// `q[Q]`, `anc[1]`, `nanc[Q−2]` (omitted when Q = 2), `c[Q]`. No measurements.
pub fn grover_with_iterations(q: usize, marked: &BitSeq, iterations: usize) -> Result<(Circuit, GroverPlan)> {
    if q < 2 {
        return Err(Error::InvalidSize(format!("need at least 2 qubits, got {q}")));
    }
    if marked.len() != q {
        return Err(Error::Length(format!("marked has {} bits for Q = {q}", marked.len())));
    }
    let mut circuit = Circuit::new("grover", vec![], vec![])?;
    let main = circuit.add_qreg("q", q)?.qubits();
    let anc = circuit.add_qreg("anc", 1)?.qubit(0);
    let nanc = if q > 2 {
        circuit.add_qreg("nanc", q - 2)?.qubits()
    } else {
        Vec::new()
    };
    circuit.add_creg("c", q)?;
    h_all(&mut circuit, &main)?;
    circuit.x(&anc)?;
    for _ in 0..iterations {
        grover_oracle(marked, &mut circuit, &main, &anc, &nanc)?;
        grover_diffusion(q, &mut circuit, &main, &anc, &nanc)?;
    }
    Ok((
        circuit,
        GroverPlan {
            q,
            marked: marked.clone(),
            iterations,
        },
    ))
}

pub fn grover(q: usize, marked: &BitSeq) -> Result<(Circuit, GroverPlan)> {
    grover_with_iterations(q, marked, grover_iterations(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_counts() {
        let counts: Vec<usize> = (2..=6).map(grover_iterations).collect();
        assert_eq!(counts, vec![2, 2, 3, 4, 6]);
    }

    #[test]
    fn reflection_examples() {
        let v: Vec<Complex64> = [2.0, 3.0, 5.0, 9.0].iter().map(|&x| Complex64::new(x, 0.0)).collect();
        let r: Vec<f64> = reflect_about_average(&v).iter().map(|z| z.re).collect();
        assert_eq!(r, vec![7.5, 6.5, 4.5, 0.5]);
        let flat = vec![Complex64::new(0.3, -0.1); 5];
        for (a, b) in reflect_about_average(&flat).iter().zip(&flat) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn plan_and_registers() {
        let (c, plan) = grover(2, &"10".parse().unwrap()).unwrap();
        assert_eq!(plan.iterations, 2);
        assert!(c.register("nanc").is_none());
        let (c, _) = grover(4, &"0110".parse().unwrap()).unwrap();
        assert_eq!(c.register("nanc").unwrap().size(), 2);
        assert!(matches!(grover(3, &"01".parse().unwrap()), Err(Error::Length(_))));
    }
}
