//! Most-significant-first bit sequences.
//!
//! Bit `i` of a [`BitSeq`] drives qubit `i`, so qubit 0 carries the most
//! significant bit and the ket of `to_binary(n, 2^Q)` reads as `n` in binary.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSeq(Vec<u8>);

impl BitSeq {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Domain(format!("bit value {b}")));
        }
        Ok(BitSeq(bits))
    }

    pub fn zeros(len: usize) -> Self {
        BitSeq(vec![0; len])
    }

    pub fn ones(len: usize) -> Self {
        BitSeq(vec![1; len])
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    /// Statevector index of the basis state this sequence selects.
    pub fn basis_index(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &b)| usize::from(b) << i)
            .sum()
    }

    /// Number of qubits `total` spans; `total` must be a power of two.
    fn width(total: usize) -> Result<usize> {
        if !total.is_power_of_two() || total < 2 {
            return Err(Error::Range(format!("{total} is not a power of two >= 2")));
        }
        Ok(total.trailing_zeros() as usize)
    }
}

impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BitSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Domain(format!("{other:?} is not a bit"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BitSeq)
    }
}

fn same_len(a: &BitSeq, b: &BitSeq) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::Length(format!("{} vs {} bits", a.len(), b.len())));
    }
    Ok(())
}

pub fn oplus(a: &BitSeq, b: &BitSeq) -> Result<BitSeq> {
    same_len(a, b)?;
    Ok(BitSeq(a.0.iter().zip(&b.0).map(|(x, y)| x ^ y).collect()))
}

pub fn dot_mod2(a: &BitSeq, b: &BitSeq) -> Result<u8> {
    same_len(a, b)?;
    Ok(a.0.iter().zip(&b.0).fold(0, |acc, (x, y)| acc ^ (x & y)))
}

pub fn to_binary(n: usize, total: usize) -> Result<BitSeq> {
    let width = BitSeq::width(total)?;
    if n >= total {
        return Err(Error::Range(format!("{n} does not fit below {total}")));
    }
    Ok(BitSeq(
        (0..width).rev().map(|i| ((n >> i) & 1) as u8).collect(),
    ))
}

pub fn from_binary(bits: &BitSeq) -> usize {
    bits.0.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b))
}
