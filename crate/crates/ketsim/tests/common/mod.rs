//! Shared helpers and brute-force oracles for the integration tests.
#![allow(dead_code)]

use ketsim::display::DisplayOptions;
use ketsim::{format_wavefunction, run_statevector, run_statevector_from, Circuit, Matrix, Statevector};
use num_complex::Complex64;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn wf(state: &Statevector) -> String {
    format_wavefunction(state, &DisplayOptions::default()).unwrap()
}

pub fn wf_sys(state: &Statevector, systems: &[i64], show: &[bool]) -> String {
    let opts = DisplayOptions::default().with_systems(systems).with_show_systems(show);
    format_wavefunction(state, &opts).unwrap()
}

pub fn circuit_wf(circuit: &Circuit) -> String {
    wf(&run_statevector(circuit).unwrap())
}

pub fn tokens(text: &str) -> Vec<&str> {
    text.split_whitespace().collect()
}

#[track_caller]
pub fn assert_tokens(actual: &str, expected: &str) {
    assert_eq!(tokens(actual), tokens(expected), "\nactual:   {actual}\nexpected: {expected}");
}

/// Full-register matrix of a k-qubit gate, built entry by entry from the
/// definition: identity on non-targets, `m` on the target bits with
/// `targets[0]` as the local least significant bit.
pub fn embedded(m: &Matrix, targets: &[usize], n: usize) -> Matrix {
    let dim = 1usize << n;
    let mask: usize = targets.iter().map(|&t| 1 << t).sum();
    let local = |idx: usize| -> usize {
        targets
            .iter()
            .enumerate()
            .map(|(b, &t)| ((idx >> t) & 1) << b)
            .sum()
    };
    let mut out = Matrix::zeros(dim, dim);
    for r in 0..dim {
        for col in 0..dim {
            if r & !mask == col & !mask {
                out[(r, col)] = m[(local(r), local(col))];
            }
        }
    }
    out
}

/// Column j is the circuit applied to basis state j.
pub fn circuit_unitary(circuit: &Circuit) -> Matrix {
    let n = circuit.num_qubits();
    let dim = 1usize << n;
    let mut out = Matrix::zeros(dim, dim);
    for col in 0..dim {
        let s = run_statevector_from(circuit, Statevector::basis(n, col).unwrap()).unwrap();
        for (r, &z) in s.amplitudes().iter().enumerate() {
            out[(r, col)] = z;
        }
    }
    out
}

/// Action of `circuit` on the first `system` qubits with every later qubit
/// starting at 0. Panics if any later qubit ends anywhere but 0.
pub fn system_unitary(circuit: &Circuit, system: usize) -> Matrix {
    let n = circuit.num_qubits();
    let dim = 1usize << system;
    let mut out = Matrix::zeros(dim, dim);
    for col in 0..dim {
        let s = run_statevector_from(circuit, Statevector::basis(n, col).unwrap()).unwrap();
        for (idx, &z) in s.amplitudes().iter().enumerate() {
            if idx >> system != 0 {
                assert!(z.norm() < 1e-12, "ancilla left dirty for input {col}");
            } else {
                out[(idx, col)] = z;
            }
        }
    }
    out
}

/// Permutation flipping qubit `target` when every qubit in `controls` is 1.
pub fn multi_controlled_x(controls: &[usize], target: usize, n: usize) -> Matrix {
    let perm: Vec<usize> = (0..1usize << n)
        .map(|i| {
            if controls.iter().all(|&c| (i >> c) & 1 == 1) {
                i ^ (1 << target)
            } else {
                i
            }
        })
        .collect();
    Matrix::permutation(&perm)
}

/// Hadamard on every qubit of an n-qubit register, as a dense matrix.
pub fn hadamard_all(n: usize) -> Matrix {
    let dim = 1usize << n;
    let scale = 1.0 / (dim as f64).sqrt();
    let mut out = Matrix::zeros(dim, dim);
    for r in 0..dim {
        for col in 0..dim {
            let sign = if (r & col).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
            out[(r, col)] = c(sign * scale, 0.0);
        }
    }
    out
}

/// Deterministic pseudo-random normalized state.
pub fn random_state(n: usize, seed: u64) -> Statevector {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut amps: Vec<Complex64> = (0..1usize << n)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut amps {
        *z /= norm;
    }
    Statevector::from_amplitudes(amps).unwrap()
}

/// `|<index|psi>|`
pub fn magnitude_at(state: &Statevector, index: usize) -> f64 {
    state.amplitude(index).norm()
}

/// Reduced state of the first `system` qubits, assuming the rest factor out
/// as a single basis state. Returns the system amplitudes for the dominant
/// assignment of the remaining qubits.
pub fn main_amplitudes(state: &Statevector, system: usize) -> Vec<Complex64> {
    let mut best = (0, 0.0);
    let rest_count = state.len() >> system;
    for rest in 0..rest_count {
        let weight: f64 = (0..1usize << system)
            .map(|i| state.probability(i | (rest << system)))
            .sum();
        if weight > best.1 {
            best = (rest, weight);
        }
    }
    (0..1usize << system)
        .map(|i| state.amplitude(i | (best.0 << system)))
        .collect()
}

/// One single-gate example: preparation, the gate under test, and the
/// printed states before and after the gate.
pub struct GateExample {
    pub name: &'static str,
    pub before: Circuit,
    pub after: Circuit,
    pub initial: &'static str,
    pub final_state: &'static str,
}

type Step = fn(&mut Circuit, &[ketsim::Qubit]);

fn example(
    name: &'static str,
    n: usize,
    prep: Step,
    op: Step,
    initial: &'static str,
    final_state: &'static str,
) -> GateExample {
    let mut before = Circuit::new("qc", vec![], vec![]).unwrap();
    let q = before.add_qreg("q", n).unwrap().qubits();
    prep(&mut before, &q);
    let mut after = before.clone();
    op(&mut after, &q);
    GateExample {
        name,
        before,
        after,
        initial,
        final_state,
    }
}

/// The printed single-gate examples, excluding RZ.
pub fn gate_examples() -> Vec<GateExample> {
    use std::f64::consts::PI;
    vec![
        example("id", 1, |c, q| { c.id(&q[0]).unwrap(); }, |c, q| { c.id(&q[0]).unwrap(); }, "1.0 |0>", "1.0 |0>"),
        example("h", 1, |c, q| { c.id(&q[0]).unwrap(); }, |c, q| { c.h(&q[0]).unwrap(); }, "1.0 |0>", "0.70711 |0>  0.70711 |1>"),
        example("x", 1, |c, q| { c.id(&q[0]).unwrap(); }, |c, q| { c.x(&q[0]).unwrap(); }, "1.0 |0>", "1.0 |1>"),
        example("y", 1, |c, q| { c.id(&q[0]).unwrap(); }, |c, q| { c.y(&q[0]).unwrap(); }, "1.0 |0>", "1.0j |1>"),
        example(
            "z", 1,
            |c, q| { c.h(&q[0]).unwrap(); },
            |c, q| { c.z(&q[0]).unwrap(); },
            "0.70711 |0>  0.70711 |1>",
            "0.70711 |0> -0.70711 |1>",
        ),
        example(
            "u1", 1,
            |c, q| { c.h(&q[0]).unwrap(); },
            |c, q| { c.u1(PI / 4.0, &q[0]).unwrap(); },
            "0.70711 |0>  0.70711 |1>",
            "0.70711 |0>  0.5+0.5j |1>",
        ),
        example(
            "s", 1,
            |c, q| { c.h(&q[0]).unwrap(); },
            |c, q| { c.s(&q[0]).unwrap(); },
            "0.70711 |0>  0.70711 |1>",
            "0.70711 |0>  0.70711j |1>",
        ),
        example(
            "t", 1,
            |c, q| { c.h(&q[0]).unwrap(); },
            |c, q| { c.t(&q[0]).unwrap(); },
            "0.70711 |0>  0.70711 |1>",
            "0.70711 |0>  0.5+0.5j |1>",
        ),
        example(
            "rx", 1,
            |c, q| { c.id(&q[0]).unwrap(); },
            |c, q| { c.rx(PI / 2.0, &q[0]).unwrap(); },
            "1.0 |0>",
            "0.70711 |0> -0.70711j |1>",
        ),
        example(
            "ry", 1,
            |c, q| { c.id(&q[0]).unwrap(); },
            |c, q| { c.ry(PI / 2.0, &q[0]).unwrap(); },
            "1.0 |0>",
            "0.70711 |0>  0.70711 |1>",
        ),
        example(
            "cx", 2,
            |c, q| { c.h(&q[0]).unwrap().z(&q[0]).unwrap().id(&q[1]).unwrap(); },
            |c, q| { c.cx(&q[0], &q[1]).unwrap(); },
            "0.70711 |00> -0.70711 |10>",
            "0.70711 |00> -0.70711 |11>",
        ),
        example(
            "cz", 2,
            |c, q| { c.h(&q[0]).unwrap().x(&q[1]).unwrap(); },
            |c, q| { c.cz(&q[0], &q[1]).unwrap(); },
            "0.70711 |01> 0.70711 |11>",
            "0.70711 |01> -0.70711 |11>",
        ),
        example(
            "cu1", 2,
            |c, q| { c.x(&q[0]).unwrap().h(&q[1]).unwrap().id(&q[1]).unwrap(); },
            |c, q| { c.cu1(PI / 2.0, &q[0], &q[1]).unwrap(); },
            "0.70711 |10>  0.70711 |11>",
            "0.70711 |10>  0.70711j |11>",
        ),
        example(
            "swap", 2,
            |c, q| { c.x(&q[0]).unwrap().h(&q[1]).unwrap().id(&q[1]).unwrap(); },
            |c, q| { c.swap(&q[0], &q[1]).unwrap(); },
            "0.70711 |10>  0.70711 |11>",
            "0.70711 |01>  0.70711 |11>",
        ),
        example(
            "cswap", 3,
            |c, q| { c.h(&q[0]).unwrap().x(&q[1]).unwrap().id(&q[2]).unwrap(); },
            |c, q| { c.cswap(&q[0], &q[1], &q[2]).unwrap(); },
            "0.70711 |010>  0.70711 |110>",
            "0.70711 |010>  0.70711 |101>",
        ),
        example(
            "ccx", 3,
            |c, q| { c.x(&q[0]).unwrap().x(&q[1]).unwrap().h(&q[2]).unwrap().z(&q[2]).unwrap(); },
            |c, q| { c.ccx(&q[0], &q[1], &q[2]).unwrap(); },
            "0.70711 |110> -0.70711 |111>",
            "-0.70711 |110> 0.70711 |111>",
        ),
    ]
}

/// RZ(π/2) after H, with the printed final state as amplitudes.
pub fn rz_example() -> (Circuit, Statevector) {
    use std::f64::consts::{FRAC_1_SQRT_2, PI};
    let mut circuit = Circuit::new("qc", vec![], vec![]).unwrap();
    let q = circuit.add_qreg("q", 1).unwrap().qubit(0);
    circuit.h(&q).unwrap().rz(PI / 2.0, &q).unwrap();
    let printed = Statevector::from_amplitudes(vec![c(FRAC_1_SQRT_2, 0.0), c(0.0, FRAC_1_SQRT_2)]).unwrap();
    (circuit, printed)
}

/// Circuit with one quantum register per `(name, size)` pair, in order.
pub fn with_qregs(regs: &[(&str, usize)]) -> (Circuit, Vec<Vec<ketsim::Qubit>>) {
    let mut circuit = Circuit::new("qc", vec![], vec![]).unwrap();
    let qubits = regs
        .iter()
        .map(|&(name, size)| circuit.add_qreg(name, size).unwrap().qubits())
        .collect();
    (circuit, qubits)
}

/// Listing without the two header lines.
pub fn body(circuit: &Circuit) -> String {
    ketsim::emit_qasm(circuit)[ketsim::qasm::HEADER.len()..].to_string()
}
