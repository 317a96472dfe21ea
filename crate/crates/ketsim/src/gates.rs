//! Gate catalog.
//!
//! Multi-qubit matrices use the printed local ordering where the first qubit
//! argument is the most significant bit of the local index.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    I,
    X,
    Y,
    Z,
    H,
    S,
    T,
    U1,
    RX,
    RY,
    RZ,
    CX,
    CZ,
    CU1,
    SWAP,
    CSWAP,
    CCX,
}

impl GateKind {
    pub const ALL: [GateKind; 17] = [
        GateKind::I,
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::H,
        GateKind::S,
        GateKind::T,
        GateKind::U1,
        GateKind::RX,
        GateKind::RY,
        GateKind::RZ,
        GateKind::CX,
        GateKind::CZ,
        GateKind::CU1,
        GateKind::SWAP,
        GateKind::CSWAP,
        GateKind::CCX,
    ];

    pub fn arity(self) -> usize {
        match self {
            GateKind::CX | GateKind::CZ | GateKind::CU1 | GateKind::SWAP => 2,
            GateKind::CSWAP | GateKind::CCX => 3,
            _ => 1,
        }
    }

    pub fn is_parametric(self) -> bool {
        matches!(
            self,
            GateKind::U1 | GateKind::RX | GateKind::RY | GateKind::RZ | GateKind::CU1
        )
    }

    /// qelib1 mnemonic.
    pub fn mnemonic(self) -> &'static str {
        match self {
            GateKind::I => "id",
            GateKind::X => "x",
            GateKind::Y => "y",
            GateKind::Z => "z",
            GateKind::H => "h",
            GateKind::S => "s",
            GateKind::T => "t",
            GateKind::U1 => "u1",
            GateKind::RX => "rx",
            GateKind::RY => "ry",
            GateKind::RZ => "rz",
            GateKind::CX => "cx",
            GateKind::CZ => "cz",
            GateKind::CU1 => "cu1",
            GateKind::SWAP => "swap",
            GateKind::CSWAP => "cswap",
            GateKind::CCX => "ccx",
        }
    }

    /// Inverse of [`mnemonic`](Self::mnemonic); also accepts `iden`.
    pub fn from_mnemonic(name: &str) -> Option<GateKind> {
        if name == "iden" {
            return Some(GateKind::I);
        }
        GateKind::ALL.into_iter().find(|k| k.mnemonic() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateSpec {
    kind: GateKind,
    angle: Option<f64>,
}

impl GateSpec {
    pub fn new(kind: GateKind, angle: Option<f64>) -> Result<Self> {
        match (kind.is_parametric(), angle) {
            (true, None) => Err(Error::Parameter(format!(
                "{} requires an angle",
                kind.mnemonic()
            ))),
            (false, Some(_)) => Err(Error::Parameter(format!(
                "{} takes no angle",
                kind.mnemonic()
            ))),
            (true, Some(a)) if !a.is_finite() => {
                Err(Error::Parameter(format!("angle {a} is not finite")))
            }
            _ => Ok(GateSpec { kind, angle }),
        }
    }

    /// Non-parametric gate. Panics if `kind` needs an angle.
    pub fn fixed(kind: GateKind) -> Self {
        GateSpec::new(kind, None).expect("gate kind takes no angle")
    }

    /// Parametric gate. Panics if `kind` takes no angle or the angle is not finite.
    pub fn rotation(kind: GateKind, angle: f64) -> Self {
        GateSpec::new(kind, Some(angle)).expect("gate kind takes a finite angle")
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn angle(&self) -> Option<f64> {
        self.angle
    }

    pub fn arity(&self) -> usize {
        self.kind.arity()
    }

    pub fn matrix(&self) -> Matrix {
        gate_matrix(self)
    }
}

impl fmt::Display for GateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.angle {
            Some(a) => write!(f, "{}({})", self.kind.mnemonic(), a),
            None => f.write_str(self.kind.mnemonic()),
        }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn phase(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

pub fn gate_matrix(spec: &GateSpec) -> Matrix {
    let one = c(1.0, 0.0);
    let zero = c(0.0, 0.0);
    let theta = spec.angle.unwrap_or(0.0);
    let two = |rows: [[Complex64; 2]; 2]| {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("square rows")
    };
    match spec.kind {
        GateKind::I => Matrix::identity(2),
        GateKind::X => Matrix::permutation(&[1, 0]),
        GateKind::Y => two([[zero, c(0.0, -1.0)], [c(0.0, 1.0), zero]]),
        GateKind::Z => Matrix::diagonal(&[one, -one]),
        GateKind::H => two([
            [c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)],
            [c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0)],
        ]),
        GateKind::S => Matrix::diagonal(&[one, c(0.0, 1.0)]),
        GateKind::T => Matrix::diagonal(&[one, phase(std::f64::consts::FRAC_PI_4)]),
        GateKind::U1 => Matrix::diagonal(&[one, phase(theta)]),
        GateKind::RX => {
            let (s, co) = (theta / 2.0).sin_cos();
            two([[c(co, 0.0), c(0.0, -s)], [c(0.0, -s), c(co, 0.0)]])
        }
        GateKind::RY => {
            let (s, co) = (theta / 2.0).sin_cos();
            two([[c(co, 0.0), c(-s, 0.0)], [c(s, 0.0), c(co, 0.0)]])
        }
        GateKind::RZ => Matrix::diagonal(&[phase(-theta / 2.0), phase(theta / 2.0)]),
        GateKind::CX => Matrix::permutation(&[0, 1, 3, 2]),
        GateKind::CZ => Matrix::diagonal(&[one, one, one, -one]),
        GateKind::CU1 => Matrix::diagonal(&[one, one, one, phase(theta)]),
        GateKind::SWAP => Matrix::permutation(&[0, 2, 1, 3]),
        GateKind::CSWAP => Matrix::permutation(&[0, 1, 2, 3, 4, 6, 5, 7]),
        GateKind::CCX => Matrix::permutation(&[0, 1, 2, 3, 4, 5, 7, 6]),
    }
}
