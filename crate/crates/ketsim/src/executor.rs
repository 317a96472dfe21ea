//! Circuit execution: exact statevectors and seeded shot sampling.
//!
//! Count keys render the classical register with bit 0 as the rightmost
//! character. Sampling uses ChaCha8 seeded from a 64-bit [`RunSeed`] and takes
//! one uniform draw per shot against the cumulative distribution, with
//! outcomes ordered by key.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, Instruction};
use crate::error::{Error, Result};
use crate::state::Statevector;

pub const DEFAULT_SHOTS: u64 = 1024;

const NEGLIGIBLE_PROBABILITY: f64 = 1e-20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RunSeed(pub u64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counts {
    entries: BTreeMap<String, u64>,
    shots: u64,
}

impl Counts {
    /// Builds counts from raw entries; all keys must share one length.
    pub fn from_entries<K: Into<String>>(entries: impl IntoIterator<Item = (K, u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, v) in entries {
            *map.entry(k.into()).or_insert(0) += v;
        }
        let mut lengths = map.keys().map(String::len);
        if let Some(first) = lengths.next() {
            if lengths.any(|l| l != first) {
                return Err(Error::Creg("count keys differ in length".into()));
            }
        }
        let shots = map.values().sum();
        Ok(Counts { entries: map, shots })
    }

    pub fn entries(&self) -> &BTreeMap<String, u64> {
        &self.entries
    }

    pub fn get(&self, key: &str) -> u64 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }
}

/// Evolves `|0...0>` through every gate, skipping measurements.
fn evolve(circuit: &Circuit) -> Result<Statevector> {
    evolve_from(circuit, Statevector::zero(circuit.num_qubits())?)
}

fn evolve_from(circuit: &Circuit, mut state: Statevector) -> Result<Statevector> {
    if state.num_qubits() != circuit.num_qubits() {
        return Err(Error::Dimension(format!(
            "circuit has {} qubits, state has {}",
            circuit.num_qubits(),
            state.num_qubits()
        )));
    }
    for inst in circuit.instructions() {
        if let Instruction::Gate { spec, qubits } = inst {
            let targets = qubits
                .iter()
                .rev()
                .map(|q| circuit.qubit_index(q))
                .collect::<Result<Vec<_>>>()?;
            state.apply_unchecked(&spec.matrix(), &targets);
        }
    }
    Ok(state)
}

pub fn run_statevector(circuit: &Circuit) -> Result<Statevector> {
    if circuit.instructions().iter().any(Instruction::is_measure) {
        return Err(Error::MeasurementInStatevector);
    }
    evolve(circuit)
}

/// Like [`run_statevector`] but starting from `initial`.
pub fn run_statevector_from(circuit: &Circuit, initial: Statevector) -> Result<Statevector> {
    if circuit.instructions().iter().any(Instruction::is_measure) {
        return Err(Error::MeasurementInStatevector);
    }
    evolve_from(circuit, initial)
}

/// Checks the sampling preconditions and returns (qubit, clbit) flat index pairs.
fn measurement_map(circuit: &Circuit) -> Result<Vec<(usize, usize)>> {
    if circuit.cregs().len() != 1 {
        return Err(Error::Creg(format!(
            "expected exactly one classical register, found {}",
            circuit.cregs().len()
        )));
    }
    let mut measured = HashSet::new();
    let mut pairs = Vec::new();
    for (pos, inst) in circuit.instructions().iter().enumerate() {
        match inst {
            Instruction::Measure { qubit, clbit } => {
                let q = circuit.qubit_index(qubit)?;
                measured.insert(q);
                pairs.push((q, circuit.clbit_index(clbit)?));
            }
            Instruction::Gate { qubits, .. } => {
                for q in qubits {
                    if measured.contains(&circuit.qubit_index(q)?) {
                        return Err(Error::Ordering(format!(
                            "instruction {pos} acts on {}[{}] after it was measured",
                            q.register(),
                            q.index()
                        )));
                    }
                }
            }
        }
    }
    Ok(pairs)
}

/// Exact outcome distribution over count keys.
pub fn joint_distribution(circuit: &Circuit) -> Result<BTreeMap<String, f64>> {
    let pairs = measurement_map(circuit)?;
    let state = evolve(circuit)?;
    let width = circuit.num_clbits();
    let mut dist = BTreeMap::new();
    for (index, amp) in state.amplitudes().iter().enumerate() {
        let p = amp.norm_sqr();
        if p <= NEGLIGIBLE_PROBABILITY {
            continue;
        }
        let mut key = vec![b'0'; width];
        for &(q, c) in &pairs {
            key[width - 1 - c] = if (index >> q) & 1 == 1 { b'1' } else { b'0' };
        }
        *dist
            .entry(String::from_utf8(key).expect("ascii key"))
            .or_insert(0.0) += p;
    }
    Ok(dist)
}

/// Draws outcomes from a fixed distribution.
#[derive(Debug, Clone)]
pub struct Sampler {
    keys: Vec<String>,
    cumulative: Vec<f64>,
}

impl Sampler {
    pub fn new(dist: &BTreeMap<String, f64>) -> Self {
        let mut total = 0.0;
        let mut keys = Vec::with_capacity(dist.len());
        let mut cumulative = Vec::with_capacity(dist.len());
        for (k, &p) in dist {
            total += p;
            keys.push(k.clone());
            cumulative.push(total);
        }
        Sampler { keys, cumulative }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> &str {
        let total = self.cumulative.last().copied().unwrap_or(0.0);
        let u = rng.gen::<f64>() * total;
        let i = self
            .cumulative
            .partition_point(|&c| c <= u)
            .min(self.keys.len() - 1);
        &self.keys[i]
    }
}

pub fn run_counts(circuit: &Circuit, shots: u64, seed: RunSeed) -> Result<Counts> {
    if shots == 0 {
        return Err(Error::Range("shots must be at least 1".into()));
    }
    let sampler = Sampler::new(&joint_distribution(circuit)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    let mut entries = BTreeMap::new();
    for _ in 0..shots {
        *entries.entry(sampler.sample(&mut rng).to_string()).or_insert(0) += 1;
    }
    Ok(Counts { entries, shots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::RegisterDecl;
    use num_complex::Complex64;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn setup(n: usize) -> (Circuit, RegisterDecl, RegisterDecl) {
        let q = RegisterDecl::quantum("q", n).unwrap();
        let c = RegisterDecl::classical("c", n).unwrap();
        (Circuit::new("qc", vec![q.clone()], vec![c.clone()]).unwrap(), q, c)
    }

    #[test]
    fn statevector_examples() {
        let (mut qc, q, _) = setup(1);
        qc.h(&q.qubit(0)).unwrap();
        let s = run_statevector(&qc).unwrap();
        assert_eq!(s.amplitudes(), &[Complex64::new(FRAC_1_SQRT_2, 0.0); 2]);

        let (mut qc, q, _) = setup(2);
        qc.id(&q.qubit(0)).unwrap().x(&q.qubit(1)).unwrap();
        let s = run_statevector(&qc).unwrap();
        assert_eq!(s.amplitude(crate::state::basis_index(&[0, 1]).unwrap()), Complex64::new(1.0, 0.0));

        let (qc, _, _) = setup(3);
        assert_eq!(run_statevector(&qc).unwrap(), Statevector::zero(3).unwrap());
    }

    #[test]
    fn measurement_rejected_in_statevector_mode() {
        let (mut qc, q, c) = setup(1);
        qc.measure(&q.qubit(0), &c.clbit(0)).unwrap();
        assert_eq!(run_statevector(&qc), Err(Error::MeasurementInStatevector));
    }

    #[test]
    fn classical_key_is_reversed() {
        let (mut qc, q, c) = setup(2);
        qc.id(&q.qubit(0)).unwrap().x(&q.qubit(1)).unwrap();
        for i in 0..2 {
            qc.measure(&q.qubit(i), &c.clbit(i)).unwrap();
        }
        let counts = run_counts(&qc, 1024, RunSeed(0)).unwrap();
        assert_eq!(counts.get("10"), 1024);
        assert_eq!(counts.entries().len(), 1);
    }

    #[test]
    fn crossed_measurement_wiring() {
        let (mut qc, q, c) = setup(3);
        qc.h(&q.qubit(0)).unwrap();
        qc.measure(&q.qubit(0), &c.clbit(1)).unwrap();
        qc.measure(&q.qubit(1), &c.clbit(0)).unwrap();
        qc.measure(&q.qubit(2), &c.clbit(2)).unwrap();
        let dist = joint_distribution(&qc).unwrap();
        assert_eq!(dist.keys().collect::<Vec<_>>(), ["000", "010"]);
    }

    #[test]
    fn precondition_errors() {
        let (mut qc, q, c) = setup(1);
        qc.measure(&q.qubit(0), &c.clbit(0)).unwrap();
        qc.h(&q.qubit(0)).unwrap();
        assert!(matches!(run_counts(&qc, 10, RunSeed(1)), Err(Error::Ordering(_))));

        let q = RegisterDecl::quantum("q", 1).unwrap();
        let bare = Circuit::new("qc", vec![q.clone()], vec![]).unwrap();
        assert!(matches!(joint_distribution(&bare), Err(Error::Creg(_))));
        let two = Circuit::new(
            "qc",
            vec![q],
            vec![
                RegisterDecl::classical("a", 1).unwrap(),
                RegisterDecl::classical("b", 1).unwrap(),
            ],
        )
        .unwrap();
        assert!(matches!(run_counts(&two, 1, RunSeed(1)), Err(Error::Creg(_))));

        let (qc, _, _) = setup(1);
        assert!(matches!(run_counts(&qc, 0, RunSeed(1)), Err(Error::Range(_))));
    }

    #[test]
    fn seeded_runs_repeat() {
        let (mut qc, q, c) = setup(2);
        qc.h(&q.qubit(0)).unwrap().h(&q.qubit(1)).unwrap();
        qc.measure(&q.qubit(0), &c.clbit(0)).unwrap();
        let a = run_counts(&qc, 1024, RunSeed(42)).unwrap();
        let b = run_counts(&qc, 1024, RunSeed(42)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.entries().keys().collect::<Vec<_>>(), ["00", "01"]);
        assert_eq!(a.shots(), 1024);
        for n in a.entries().values() {
            assert!((*n as i64 - 512).abs() <= 70);
        }
    }

    #[test]
    fn counts_from_entries_checks_widths() {
        assert!(Counts::from_entries([("0", 1), ("01", 1)]).is_err());
        assert_eq!(Counts::from_entries([("01", 2), ("00", 3)]).unwrap().shots(), 5);
    }
}
