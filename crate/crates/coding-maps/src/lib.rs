//! Exact effective channels and concatenation dynamics for stabilizer
//! codes under independent single-qubit noise.
//!
//! A code storing one qubit in n turns a physical channel acting on each
//! register qubit into an effective logical channel: encode, apply the
//! noise, measure the syndrome, recover, decode.  Because the encoding and
//! decoding operators expand exactly over the Pauli basis with
//! power-of-two-denominator coefficients, the effective channel is a
//! polynomial in the physical channel's matrix entries and can be computed
//! without any density-matrix simulation.  For diagonal channels
//! `[x, y, z]` the whole map collapses to three exact polynomials; those
//! maps compose symbolically under concatenation, and their fixed-point
//! structure under iteration yields storage thresholds for infinitely
//! concatenated codes.
//!
//! Highlights:
//!
//! - [`pauli`]: exact signed Pauli algebra on bit masks.
//! - [`channel`]: transfer-matrix and diagonal channel forms, CP checks,
//!   Pauli-error probabilities, the depolarizing family.
//! - [`code`]: validated stabilizer codes, syndrome recovery tables, and
//!   the exact Pauli expansions of encoding/decoding operators.
//! - [`catalog`]: bitflip, phaseflip (both logical conventions), Shor
//!   (as a concatenation recipe), Steane, and the five-qubit code.
//! - [`coding_map`]: effective channels for arbitrary inputs and the
//!   exact polynomial maps for diagonal ones.
//! - [`polymap`]: sparse exact polynomials and symbolic map composition.
//! - [`dynamics`]: fixed points, storage thresholds, depolarizing sweeps.
//! - [`oracle`]: an independent dense-matrix reference path for
//!   cross-checking (registers up to five qubits).

pub mod catalog;
pub mod channel;
pub mod code;
pub mod coding_map;
pub mod dyadic;
pub mod dynamics;
pub mod error;
pub mod expansion;
pub mod oracle;
pub mod pauli;
pub mod polymap;

pub use channel::{depolarizing, DiagonalChannel, PauliProbs, QubitChannel};
pub use code::{correctable_polynomial, LoadedCode, RecoveryPolicy, StabilizerCode};
pub use coding_map::{diagonal_poly_map, effective_channel_general, effective_channel_per_site};
pub use dyadic::Dyadic;
pub use dynamics::{
    fixed_points_1d, iterate_map, storage_threshold, FixedPoint, Stability, ThresholdReport,
};
pub use error::{Error, Result};
pub use pauli::{eta, parse_pauli, pauli_mul, PauliString, SignedPauli};
pub use polymap::{compose_maps, Poly, PolyMap};
