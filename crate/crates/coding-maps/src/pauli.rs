//! Exact algebra of signed n-qubit Pauli operators in a symplectic
//! bit-vector representation.
//!
//! A Pauli string is stored as a pair of bit masks: bit `i` of `x_mask` is
//! set iff qubit `i` carries `X` or `Y`, and bit `i` of `z_mask` is set iff
//! qubit `i` carries `Z` or `Y`.  Products and commutation checks are then
//! word-parallel XOR/AND/popcount operations.  Qubit 0 is the leftmost
//! letter in text form, so `"ZZI"` has `Z` on qubits 0 and 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Maximum supported register size (masks are single machine words).
pub const MAX_QUBITS: usize = 64;

/// A single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Letter {
    I = 0,
    X = 1,
    Y = 2,
    Z = 3,
}

impl Letter {
    /// Index into a 4x4 transfer matrix: I, X, Y, Z -> 0, 1, 2, 3.
    pub fn index(self) -> usize {
        match self {
            Letter::I => 0,
            Letter::X => 1,
            Letter::Y => 2,
            Letter::Z => 3,
        }
    }

    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    fn to_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }
}

/// A power of the imaginary unit, tracked exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    PlusOne,
    PlusI,
    MinusOne,
    MinusI,
}

impl Phase {
    fn from_exponent(k: u32) -> Self {
        match k % 4 {
            0 => Phase::PlusOne,
            1 => Phase::PlusI,
            2 => Phase::MinusOne,
            _ => Phase::MinusI,
        }
    }

    /// True for +1 and -1.
    pub fn is_real(self) -> bool {
        matches!(self, Phase::PlusOne | Phase::MinusOne)
    }

    /// The sign bit for a real phase; errors on +/-i.
    pub fn sign_bit(self) -> Result<u8> {
        match self {
            Phase::PlusOne => Ok(0),
            Phase::MinusOne => Ok(1),
            _ => Err(Error::Domain(
                "product phase is imaginary; not a Hermitian Pauli".into(),
            )),
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Phase::PlusOne => "+1",
            Phase::PlusI => "+i",
            Phase::MinusOne => "-1",
            Phase::MinusI => "-i",
        };
        f.write_str(s)
    }
}

/// An unsigned n-qubit Pauli string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    n: usize,
    x_mask: u64,
    z_mask: u64,
}

impl PauliString {
    /// The identity string on `n` qubits.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1 && n <= MAX_QUBITS, "register size out of range");
        PauliString { n, x_mask: 0, z_mask: 0 }
    }

    pub fn from_masks(n: usize, x_mask: u64, z_mask: u64) -> Self {
        assert!(n >= 1 && n <= MAX_QUBITS, "register size out of range");
        let keep = mask_bits(n);
        PauliString { n, x_mask: x_mask & keep, z_mask: z_mask & keep }
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        let mut x_mask = 0u64;
        let mut z_mask = 0u64;
        for (i, l) in letters.iter().enumerate() {
            match l {
                Letter::I => {}
                Letter::X => x_mask |= 1 << i,
                Letter::Y => {
                    x_mask |= 1 << i;
                    z_mask |= 1 << i;
                }
                Letter::Z => z_mask |= 1 << i,
            }
        }
        PauliString { n: letters.len(), x_mask, z_mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_mask(&self) -> u64 {
        self.x_mask
    }

    pub fn z_mask(&self) -> u64 {
        self.z_mask
    }

    pub fn letter(&self, qubit: usize) -> Letter {
        debug_assert!(qubit < self.n);
        Letter::from_bits(self.x_mask >> qubit & 1 == 1, self.z_mask >> qubit & 1 == 1)
    }

    pub fn is_identity(&self) -> bool {
        self.x_mask == 0 && self.z_mask == 0
    }

    /// Total weight: number of non-identity letters.
    pub fn weight(&self) -> u32 {
        (self.x_mask | self.z_mask).count_ones()
    }

    /// Per-letter weights `(w_X, w_Y, w_Z)`.
    pub fn weights(&self) -> (u32, u32, u32) {
        let y = self.x_mask & self.z_mask;
        let x = self.x_mask & !y;
        let z = self.z_mask & !y;
        (x.count_ones(), y.count_ones(), z.count_ones())
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", self.letter(i).to_char())?;
        }
        Ok(())
    }
}

/// A Hermitian signed Pauli operator `(-1)^sign_bit * body`.
///
/// Only real signs are representable; operations whose result carries a
/// +/-i phase return the phase separately (see [`pauli_mul`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedPauli {
    sign_bit: u8,
    body: PauliString,
}

impl SignedPauli {
    pub fn new(sign_bit: u8, body: PauliString) -> Self {
        debug_assert!(sign_bit <= 1);
        SignedPauli { sign_bit: sign_bit & 1, body }
    }

    pub fn positive(body: PauliString) -> Self {
        SignedPauli { sign_bit: 0, body }
    }

    pub fn identity(n: usize) -> Self {
        SignedPauli::positive(PauliString::identity(n))
    }

    pub fn sign_bit(&self) -> u8 {
        self.sign_bit
    }

    /// The sign as +1 or -1.
    pub fn sign(&self) -> i32 {
        if self.sign_bit == 0 {
            1
        } else {
            -1
        }
    }

    pub fn body(&self) -> &PauliString {
        &self.body
    }

    pub fn n(&self) -> usize {
        self.body.n
    }

    pub fn negated(&self) -> Self {
        SignedPauli { sign_bit: self.sign_bit ^ 1, body: self.body }
    }
}

impl fmt::Display for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign_bit == 1 {
            f.write_str("-")?;
        }
        write!(f, "{}", self.body)
    }
}

impl FromStr for SignedPauli {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pauli(s)
    }
}

fn mask_bits(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Exact product of two signed Paulis, factored as `phase * body`.
///
/// The phase accumulates `(-1)^{a+a'}` from the input signs together with
/// the per-qubit i-factors of the letter products; for commuting Hermitian
/// inputs it is always +/-1.
pub fn pauli_mul(a: &SignedPauli, b: &SignedPauli) -> Result<(Phase, PauliString)> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(a.n(), b.n()));
    }
    // Each letter is i^{x z} X^x Z^z; multiplying X^x1 Z^z1 * X^x2 Z^z2
    // picks up (-1)^{z1 x2} from reordering, and the output letter
    // contributes i^{-x3 z3} when renormalized to Hermitian form.
    let x3 = a.body.x_mask ^ b.body.x_mask;
    let z3 = a.body.z_mask ^ b.body.z_mask;
    let mut exp: u32 = (a.body.x_mask & a.body.z_mask).count_ones()
        + (b.body.x_mask & b.body.z_mask).count_ones()
        + 2 * (a.body.z_mask & b.body.x_mask).count_ones();
    // subtract i-exponent of the result letters, mod 4
    exp += 4u32.wrapping_sub((x3 & z3).count_ones() % 4) % 4;
    exp += 2 * (a.sign_bit as u32 + b.sign_bit as u32);
    Ok((
        Phase::from_exponent(exp),
        PauliString { n: a.n(), x_mask: x3, z_mask: z3 },
    ))
}

/// Product of two commuting Hermitian Paulis as a signed Pauli.
pub fn hermitian_mul(a: &SignedPauli, b: &SignedPauli) -> Result<SignedPauli> {
    let (phase, body) = pauli_mul(a, b)?;
    Ok(SignedPauli::new(phase.sign_bit()?, body))
}

/// Commutation indicator: +1 iff `a` and `b` commute.
///
/// Computed as `(-1)^{<a.x, b.z> + <a.z, b.x>}` over GF(2).
pub fn eta(a: &PauliString, b: &PauliString) -> Result<i32> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(a.n, b.n));
    }
    let anti = ((a.x_mask & b.z_mask).count_ones() + (a.z_mask & b.x_mask).count_ones()) & 1;
    Ok(if anti == 0 { 1 } else { -1 })
}

/// Parse the text form: optional '+'/'-' sign then letters from {I,X,Y,Z}.
pub fn parse_pauli(text: &str) -> Result<SignedPauli> {
    let mut sign_bit = 0u8;
    let mut chars = text.char_indices().peekable();
    match chars.peek() {
        Some((_, '+')) => {
            chars.next();
        }
        Some((_, '-')) => {
            sign_bit = 1;
            chars.next();
        }
        _ => {}
    }
    let mut letters = Vec::new();
    for (idx, c) in chars {
        let l = match c {
            'I' => Letter::I,
            'X' => Letter::X,
            'Y' => Letter::Y,
            'Z' => Letter::Z,
            _ => {
                return Err(Error::Parse {
                    index: idx,
                    message: format!("illegal character {c:?}; expected I, X, Y or Z"),
                })
            }
        };
        letters.push(l);
    }
    if letters.is_empty() {
        return Err(Error::Parse { index: text.len(), message: "empty Pauli body".into() });
    }
    if letters.len() > MAX_QUBITS {
        return Err(Error::Parse {
            index: 0,
            message: format!("more than {MAX_QUBITS} qubits"),
        });
    }
    Ok(SignedPauli::new(sign_bit, PauliString::from_letters(&letters)))
}
