//! Single-qubit channel representations and conversions.
//!
//! A channel is written as a 4x4 real transfer matrix acting on the vector
//! of expectation values `(<I>, <X>, <Y>, <Z>)`; a diagonal channel is
//! abbreviated `[x, y, z]`.  Diagonal channels correspond one-to-one to
//! probabilistic Pauli-error channels.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance absorbing floating-point drift in the CP inequality checks.
pub const CP_TOLERANCE: f64 = 1e-12;

/// A trace-preserving single-qubit channel as a 4x4 transfer matrix.
///
/// Convention: `<sigma>_out = sum_{sigma'} m[sigma][sigma'] <sigma'>_in`
/// with rows/columns ordered I, X, Y, Z.  The first row is forced to
/// `(1, 0, 0, 0)` at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitChannel {
    m: [[f64; 4]; 4],
}

impl QubitChannel {
    /// Build from a row-major matrix; the trace-preservation row must be
    /// `(1, 0, 0, 0)` exactly.
    pub fn new(m: [[f64; 4]; 4]) -> Result<Self> {
        if m[0] != [1.0, 0.0, 0.0, 0.0] {
            return Err(Error::Domain(format!(
                "first row must be (1, 0, 0, 0) for trace preservation, got {:?}",
                m[0]
            )));
        }
        Ok(QubitChannel { m })
    }

    pub fn identity() -> Self {
        QubitChannel::from_diagonal(&DiagonalChannel::identity())
    }

    pub fn from_diagonal(c: &DiagonalChannel) -> Self {
        let mut m = [[0.0; 4]; 4];
        m[0][0] = 1.0;
        m[1][1] = c.x;
        m[2][2] = c.y;
        m[3][3] = c.z;
        QubitChannel { m }
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.m[row][col]
    }

    pub fn matrix(&self) -> &[[f64; 4]; 4] {
        &self.m
    }

    /// The diagonal part as `[x, y, z]`, if all off-diagonals are below
    /// `tol` in magnitude.
    pub fn as_diagonal(&self, tol: f64) -> Option<DiagonalChannel> {
        for r in 0..4 {
            for c in 0..4 {
                if r != c && self.m[r][c].abs() > tol {
                    return None;
                }
            }
        }
        Some(DiagonalChannel::new(self.m[1][1], self.m[2][2], self.m[3][3]))
    }

    /// Apply to an expectation-value 4-vector; `v[0]` must be 1.
    pub fn apply(&self, v: &[f64; 4]) -> [f64; 4] {
        debug_assert!((v[0] - 1.0).abs() < 1e-9, "expectation vector must have <I> = 1");
        let mut out = [0.0; 4];
        for r in 0..4 {
            for c in 0..4 {
                out[r] += self.m[r][c] * v[c];
            }
        }
        out
    }
}

/// A diagonal channel `[x, y, z]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagonalChannel {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl DiagonalChannel {
    /// Build without a physicality check.
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        DiagonalChannel { x, y, z }
    }

    /// Build and verify the four complete-positivity inequalities.
    pub fn new_physical(x: f64, y: f64, z: f64) -> Result<Self> {
        let c = DiagonalChannel { x, y, z };
        c.check_physical()?;
        Ok(c)
    }

    pub fn identity() -> Self {
        DiagonalChannel { x: 1.0, y: 1.0, z: 1.0 }
    }

    /// The four CP inequalities, each as (description, value); the channel
    /// is physical iff every value is <= 1.
    fn cp_values(&self) -> [(&'static str, f64); 4] {
        let (x, y, z) = (self.x, self.y, self.z);
        [
            ("-x+y+z", -x + y + z),
            ("x-y+z", x - y + z),
            ("x+y-z", x + y - z),
            ("-x-y-z", -x - y - z),
        ]
    }

    pub fn is_physical(&self) -> bool {
        self.cp_values().iter().all(|(_, v)| *v <= 1.0 + CP_TOLERANCE)
    }

    /// Errors with the violated inequality if the channel is not CP.
    pub fn check_physical(&self) -> Result<()> {
        for (name, v) in self.cp_values() {
            if v > 1.0 + CP_TOLERANCE {
                return Err(Error::NotCompletelyPositive(format!(
                    "{name} = {v} > 1 for [{}, {}, {}]",
                    self.x, self.y, self.z
                )));
            }
        }
        Ok(())
    }

    /// The equivalent Pauli-error probabilities; requires physicality.
    pub fn to_pauli_probs(&self) -> Result<PauliProbs> {
        self.check_physical()?;
        let (x, y, z) = (self.x, self.y, self.z);
        Ok(PauliProbs {
            p_x: (1.0 + x - y - z) / 4.0,
            p_y: (1.0 - x + y - z) / 4.0,
            p_z: (1.0 - x - y + z) / 4.0,
        })
    }

    /// Fidelity of the pure state with the given Bloch vector through this
    /// channel: `(1 + x<X>^2 + y<Y>^2 + z<Z>^2) / 2`.
    pub fn pure_state_fidelity(&self, bloch: [f64; 3]) -> f64 {
        0.5 * (1.0
            + self.x * bloch[0] * bloch[0]
            + self.y * bloch[1] * bloch[1]
            + self.z * bloch[2] * bloch[2])
    }

    /// Worst-case fidelity of a pure state: `(1 + min(x, y, z)) / 2`.
    pub fn worst_case_fidelity(&self) -> f64 {
        0.5 * (1.0 + self.x.min(self.y).min(self.z))
    }
}

/// Exclusive Pauli-error probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PauliProbs {
    pub p_x: f64,
    pub p_y: f64,
    pub p_z: f64,
}

impl PauliProbs {
    pub fn new(p_x: f64, p_y: f64, p_z: f64) -> Result<Self> {
        let p = PauliProbs { p_x, p_y, p_z };
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<()> {
        let tol = CP_TOLERANCE;
        for (name, p) in [("p_X", self.p_x), ("p_Y", self.p_y), ("p_Z", self.p_z)] {
            if p < -tol {
                return Err(Error::NotCompletelyPositive(format!("{name} = {p} < 0")));
            }
        }
        let sum = self.p_x + self.p_y + self.p_z;
        if sum > 1.0 + tol {
            return Err(Error::NotCompletelyPositive(format!(
                "p_X + p_Y + p_Z = {sum} > 1"
            )));
        }
        Ok(())
    }

    pub fn p_identity(&self) -> f64 {
        1.0 - self.p_x - self.p_y - self.p_z
    }

    pub fn to_diagonal(&self) -> DiagonalChannel {
        DiagonalChannel {
            x: 1.0 - 2.0 * (self.p_y + self.p_z),
            y: 1.0 - 2.0 * (self.p_x + self.p_z),
            z: 1.0 - 2.0 * (self.p_x + self.p_y),
        }
    }
}

/// The symmetric depolarizing channel `[e^-gt, e^-gt, e^-gt]` with gamma
/// normalized to 1 (time in units of 1/gamma).
pub fn depolarizing(gamma_t: f64) -> Result<DiagonalChannel> {
    if gamma_t < 0.0 || !gamma_t.is_finite() {
        return Err(Error::Domain(format!(
            "depolarizing time must be finite and >= 0, got {gamma_t}"
        )));
    }
    let e = (-gamma_t).exp();
    Ok(DiagonalChannel::new(e, e, e))
}

/// A channel specified at the CLI boundary.
#[derive(Debug, Clone)]
pub enum ChannelInput {
    Diagonal(DiagonalChannel),
    General(QubitChannel),
}

impl ChannelInput {
    pub fn as_channel(&self) -> QubitChannel {
        match self {
            ChannelInput::Diagonal(d) => QubitChannel::from_diagonal(d),
            ChannelInput::General(g) => *g,
        }
    }
}

/// Parse a CLI channel literal: `diag:x,y,z`, `pauli:pX,pY,pZ`,
/// `depol:gamma_t`, or a JSON row-major array of 16 numbers (inline or via
/// `file:path`) for a general channel.
///
/// Diagonal forms are validated against the CP constraints; general
/// matrices only have the trace-preservation row enforced, since complete
/// positivity of an arbitrary transfer matrix is not checked here.
pub fn parse_channel_literal(text: &str) -> Result<ChannelInput> {
    if let Some(rest) = text.strip_prefix("diag:") {
        let v = parse_floats(rest, 3)?;
        return Ok(ChannelInput::Diagonal(DiagonalChannel::new_physical(v[0], v[1], v[2])?));
    }
    if let Some(rest) = text.strip_prefix("pauli:") {
        let v = parse_floats(rest, 3)?;
        return Ok(ChannelInput::Diagonal(PauliProbs::new(v[0], v[1], v[2])?.to_diagonal()));
    }
    if let Some(rest) = text.strip_prefix("depol:") {
        let v = parse_floats(rest, 1)?;
        return Ok(ChannelInput::Diagonal(depolarizing(v[0])?));
    }
    let json = if let Some(path) = text.strip_prefix("file:") {
        std::fs::read_to_string(path)?
    } else if text.trim_start().starts_with('[') {
        text.to_string()
    } else {
        return Err(Error::Parse {
            index: 0,
            message: format!(
                "unrecognized channel literal {text:?}; expected diag:x,y,z, pauli:pX,pY,pZ, \
                 depol:gamma_t, a JSON array of 16 numbers, or file:path"
            ),
        });
    };
    let entries: Vec<f64> = serde_json::from_str(&json)?;
    if entries.len() != 16 {
        return Err(Error::Parse {
            index: 0,
            message: format!("general channel needs 16 entries, got {}", entries.len()),
        });
    }
    let mut m = [[0.0; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            m[r][c] = entries[4 * r + c];
        }
    }
    Ok(ChannelInput::General(QubitChannel::new(m)?))
}

fn parse_floats(text: &str, expected: usize) -> Result<Vec<f64>> {
    let vals: std::result::Result<Vec<f64>, _> =
        text.split(',').map(|s| s.trim().parse::<f64>()).collect();
    let vals = vals.map_err(|e| Error::Parse { index: 0, message: format!("{e} in {text:?}") })?;
    if vals.len() != expected {
        return Err(Error::Parse {
            index: 0,
            message: format!("expected {expected} comma-separated numbers, got {}", vals.len()),
        });
    }
    Ok(vals)
}
