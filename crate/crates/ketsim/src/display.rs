//! Ket-notation rendering of wavefunctions and counts.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::executor::Counts;
use crate::state::{ket_bits, Statevector};

pub const DEFAULT_PRECISION: usize = 5;

pub const SYSTEMS_NOT_INTEGERS: &str = "systems must be an array of all integers";
pub const SYSTEMS_LENGTH_MISMATCH: &str = "systems and show_systems need to be arrays of equal length";
pub const SHOW_SYSTEMS_NOT_TRUTH_VALUES: &str = "show_systems must be an array of Truth Values";
pub const SYSTEMS_SUM_MISMATCH: &str = "systems must sum to the number of qubits";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisplayOptions {
    pub precision: usize,
    pub column: bool,
    /// Qubit group sizes, in qubit order.
    pub systems: Option<Vec<i64>>,
    /// Per-group visibility. Ignored unless `systems` is set.
    pub show_systems: Option<Vec<bool>>,
}

impl Default for DisplayOptions {
    fn default() -> Self {
        DisplayOptions {
            precision: DEFAULT_PRECISION,
            column: false,
            systems: None,
            show_systems: None,
        }
    }
}

impl DisplayOptions {
    pub fn with_precision(mut self, precision: usize) -> Self {
        self.precision = precision;
        self
    }

    pub fn with_column(mut self, column: bool) -> Self {
        self.column = column;
        self
    }

    pub fn with_systems(mut self, systems: &[i64]) -> Self {
        self.systems = Some(systems.to_vec());
        self
    }

    pub fn with_show_systems(mut self, show: &[bool]) -> Self {
        self.show_systems = Some(show.to_vec());
        self
    }
}

/// Parses textual truth values (`true`/`false`, `True`/`False`, `1`/`0`).
pub fn parse_truth_values<S: AsRef<str>>(items: &[S]) -> Result<Vec<bool>> {
    items
        .iter()
        .map(|s| match s.as_ref().trim() {
            "true" | "True" | "1" => Ok(true),
            "false" | "False" | "0" => Ok(false),
            _ => Err(Error::Display(SHOW_SYSTEMS_NOT_TRUTH_VALUES.into())),
        })
        .collect()
}

/// Parses textual group sizes; anything but a positive integer is rejected.
pub fn parse_systems<S: AsRef<str>>(items: &[S]) -> Result<Vec<i64>> {
    items
        .iter()
        .map(|s| {
            s.as_ref()
                .trim()
                .parse::<i64>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| Error::Display(SYSTEMS_NOT_INTEGERS.into()))
        })
        .collect()
}

fn round_to(x: f64, precision: usize) -> f64 {
    let r: f64 = format!("{x:.precision$}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn decimal(x: f64) -> String {
    let s = x.to_string();
    if s.contains('.') {
        s
    } else {
        s + ".0"
    }
}

/// Rounded amplitude text, or `None` when both parts round to zero.
pub fn format_amplitude(z: Complex64, precision: usize) -> Option<String> {
    let re = round_to(z.re, precision);
    let im = round_to(z.im, precision);
    match (re != 0.0, im != 0.0) {
        (false, false) => None,
        (true, false) => Some(decimal(re)),
        (false, true) => Some(format!("{}j", decimal(im))),
        (true, true) => {
            let sign = if im > 0.0 { "+" } else { "" };
            Some(format!("{}{}{}j", decimal(re), sign, decimal(im)))
        }
    }
}

struct Groups {
    /// (size, visible) per group, in qubit order.
    layout: Vec<(usize, bool)>,
}

impl Groups {
    fn from_options(opts: &DisplayOptions, num_qubits: usize) -> Result<Option<Groups>> {
        let Some(systems) = &opts.systems else {
            return Ok(None);
        };
        if systems.iter().any(|&s| s <= 0) {
            return Err(Error::Display(SYSTEMS_NOT_INTEGERS.into()));
        }
        let show = match &opts.show_systems {
            Some(show) if show.len() != systems.len() => {
                return Err(Error::Display(SYSTEMS_LENGTH_MISMATCH.into()))
            }
            Some(show) => show.clone(),
            None => vec![true; systems.len()],
        };
        if systems.iter().sum::<i64>() != num_qubits as i64 {
            return Err(Error::Display(SYSTEMS_SUM_MISMATCH.into()));
        }
        Ok(Some(Groups {
            layout: systems.iter().map(|&s| s as usize).zip(show).collect(),
        }))
    }

    fn render(&self, bits: &str) -> String {
        let mut start = 0;
        let mut visible = Vec::new();
        for &(size, show) in &self.layout {
            if show {
                visible.push(&bits[start..start + size]);
            }
            start += size;
        }
        visible.join(">|")
    }
}

pub fn format_wavefunction(state: &Statevector, opts: &DisplayOptions) -> Result<String> {
    if opts.precision == 0 {
        return Err(Error::Display("precision must be at least 1".into()));
    }
    let groups = Groups::from_options(opts, state.num_qubits())?;
    let n = state.num_qubits();
    let terms: Vec<String> = state
        .amplitudes()
        .iter()
        .enumerate()
        .filter_map(|(i, &z)| {
            let amp = format_amplitude(z, opts.precision)?;
            let bits = ket_bits(i, n);
            let ket = match &groups {
                Some(g) => g.render(&bits),
                None => bits,
            };
            Some(format!("{amp} |{ket}>"))
        })
        .collect();
    Ok(terms.join(if opts.column { "\n" } else { "  " }))
}

pub fn format_counts(counts: &Counts, column: bool) -> String {
    let mut entries: Vec<(u64, String)> = counts
        .entries()
        .iter()
        .map(|(k, &v)| (v, k.chars().rev().collect()))
        .collect();
    entries.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    entries
        .iter()
        .map(|(v, ket)| format!("{v}|{ket}>"))
        .collect::<Vec<_>>()
        .join(if column { "\n" } else { "  " })
}
