use rand::Rng;

use crate::circuit::{Circuit, RegisterDecl};
use crate::error::{Error, Result};
use crate::executor::{run_counts, RunSeed};

/// Flips a fair quantum coin `flips` times; returns (heads, tails) where
/// heads is outcome 0.
pub fn coin_flip<R: Rng + ?Sized>(flips: u64, rng: &mut R) -> Result<(u64, u64)> {
    if flips == 0 {
        return Err(Error::Range("flips must be at least 1".into()));
    }
    let q = RegisterDecl::quantum("q", 1)?;
    let c = RegisterDecl::classical("c", 1)?;
    let mut circuit = Circuit::new("coin", vec![q.clone()], vec![c.clone()])?;
    circuit.h(&q.qubit(0))?.measure(&q.qubit(0), &c.clbit(0))?;
    let counts = run_counts(&circuit, flips, RunSeed(rng.gen()))?;
    Ok((counts.get("0"), counts.get("1")))
}
