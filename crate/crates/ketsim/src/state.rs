//! Dense statevectors.
//!
//! Qubit 0 is the least significant bit of an amplitude index. Ket strings
//! print qubit 0 leftmost, so index 1 of a three-qubit register is `|100>`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{is_unitary, Matrix};

pub const MAX_QUBITS: usize = 24;

const UNITARITY_TOL: f64 = 1e-10;
const NORM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

fn check_qubit_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSize("a statevector needs at least one qubit".into()));
    }
    if n > MAX_QUBITS {
        return Err(Error::Capacity(format!(
            "{n} qubits requested, at most {MAX_QUBITS} supported"
        )));
    }
    Ok(())
}

impl Statevector {
    /// The all-zero state `|0...0>`.
    pub fn zero(num_qubits: usize) -> Result<Self> {
        Statevector::basis(num_qubits, 0)
    }

    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        check_qubit_count(num_qubits)?;
        let len = 1usize << num_qubits;
        if index >= len {
            return Err(Error::Index { index, len });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); len];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Statevector {
            num_qubits,
            amplitudes,
        })
    }

    /// Wraps raw amplitudes. The length must be a power of two and the norm 1.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidSize(format!(
                "amplitude count {len} is not a power of two >= 2"
            )));
        }
        let num_qubits = len.trailing_zeros() as usize;
        check_qubit_count(num_qubits)?;
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::Domain(format!("state norm is {norm}, expected 1")));
        }
        Ok(Statevector {
            num_qubits,
            amplitudes,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn probability(&self, index: usize) -> f64 {
        self.amplitudes[index].norm_sqr()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn inner(&self, other: &Statevector) -> Result<Complex64> {
        self.check_same_dim(other)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    fn check_same_dim(&self, other: &Statevector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "{} vs {} amplitudes",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }

    /// Applies a k-qubit unitary to `targets`; `targets[0]` is the least
    /// significant bit of the matrix's local index.
    pub fn apply_unitary(&mut self, matrix: &Matrix, targets: &[usize]) -> Result<()> {
        if !is_unitary(matrix, UNITARITY_TOL)? {
            return Err(Error::NotUnitary);
        }
        if matrix.rows() != 1 << targets.len() {
            return Err(Error::Target(format!(
                "{}x{} matrix cannot act on {} targets",
                matrix.rows(),
                matrix.cols(),
                targets.len()
            )));
        }
        self.check_targets(targets)?;
        self.apply_unchecked(matrix, targets);
        Ok(())
    }

    pub(crate) fn check_targets(&self, targets: &[usize]) -> Result<()> {
        for (i, &t) in targets.iter().enumerate() {
            if t >= self.num_qubits {
                return Err(Error::Target(format!(
                    "qubit {t} out of range for {} qubits",
                    self.num_qubits
                )));
            }
            if targets[..i].contains(&t) {
                return Err(Error::Target(format!("qubit {t} targeted twice")));
            }
        }
        Ok(())
    }

    /// Kernel behind [`apply_unitary`](Self::apply_unitary) with no validation.
    pub(crate) fn apply_unchecked(&mut self, matrix: &Matrix, targets: &[usize]) {
        let k = targets.len();
        let dim = 1usize << k;
        let offsets: Vec<usize> = (0..dim)
            .map(|j| {
                (0..k)
                    .filter(|&b| (j >> b) & 1 == 1)
                    .map(|b| 1usize << targets[b])
                    .sum()
            })
            .collect();
        let mut sorted = targets.to_vec();
        sorted.sort_unstable();

        let m = matrix.as_slice();
        let mut gathered = vec![Complex64::new(0.0, 0.0); dim];
        for i in 0..(self.amplitudes.len() >> k) {
            let mut base = i;
            for &t in &sorted {
                base = (base & ((1 << t) - 1)) | ((base >> t) << (t + 1));
            }
            for (g, &off) in gathered.iter_mut().zip(&offsets) {
                *g = self.amplitudes[base + off];
            }
            for (r, &off) in offsets.iter().enumerate() {
                let row = &m[r * dim..(r + 1) * dim];
                self.amplitudes[base + off] = row.iter().zip(&gathered).map(|(a, b)| a * b).sum();
            }
        }
    }
}

pub fn zero_state(num_qubits: usize) -> Result<Statevector> {
    Statevector::zero(num_qubits)
}

/// Index of a per-qubit bit assignment: `sum bits[i] * 2^i`.
pub fn basis_index(bits: &[u8]) -> Result<usize> {
    if bits.len() > MAX_QUBITS {
        return Err(Error::Capacity(format!("{} qubits", bits.len())));
    }
    bits.iter().enumerate().try_fold(0usize, |acc, (i, &b)| match b {
        0 => Ok(acc),
        1 => Ok(acc | (1 << i)),
        other => Err(Error::Domain(format!("bit value {other} at position {i}"))),
    })
}

/// Per-qubit bits of `index`, qubit 0 first.
pub fn basis_label(index: usize, num_qubits: usize) -> Vec<u8> {
    (0..num_qubits).map(|i| ((index >> i) & 1) as u8).collect()
}

/// Ket text of `index` without the delimiters, qubit 0 leftmost.
pub fn ket_bits(index: usize, num_qubits: usize) -> String {
    (0..num_qubits)
        .map(|i| if (index >> i) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// True when `a = c * b` entrywise within `tol` for some unit-modulus `c`.
pub fn global_phase_equiv(a: &Statevector, b: &Statevector, tol: f64) -> Result<bool> {
    a.check_same_dim(b)?;
    let pivot = (0..b.len())
        .max_by(|&i, &j| b.probability(i).total_cmp(&b.probability(j)))
        .unwrap_or(0);
    let bp = b.amplitude(pivot);
    if bp.norm() <= tol {
        return Ok(a.amplitudes.iter().all(|z| z.norm() <= tol));
    }
    let c = a.amplitude(pivot) / bp;
    if (c.norm() - 1.0).abs() > tol {
        return Ok(false);
    }
    Ok(a
        .amplitudes
        .iter()
        .zip(&b.amplitudes)
        .all(|(x, y)| (x - c * y).norm() <= tol))
}
