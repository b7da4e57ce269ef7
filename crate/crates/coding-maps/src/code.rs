//! Stabilizer code definitions: generators, logical operators, the
//! syndrome -> recovery table, validation, the JSON code-spec format, and
//! the exact Pauli expansions of the encoding and decoding operators.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::expansion::PauliExpansion;
use crate::pauli::{eta, hermitian_mul, pauli_mul, parse_pauli, Letter, PauliString, Phase, SignedPauli};

/// Recovery-table construction policy.
#[derive(Debug, Clone)]
pub enum RecoveryPolicy {
    /// Minimum-weight recovery per syndrome; equal-weight ties broken by
    /// least `(w_Y, x_mask, z_mask)`.
    MinWeight,
    /// Explicit syndrome -> operator entries, validated for consistency
    /// and totality.
    Explicit(Vec<(String, SignedPauli)>),
}

/// Syndrome-indexed recovery operators.
///
/// Bit `k` of a syndrome is 1 iff the error anticommutes with generator
/// `k` (in spec order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeTable {
    entries: Vec<SignedPauli>,
}

impl SyndromeTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn recovery(&self, syndrome: usize) -> &SignedPauli {
        &self.entries[syndrome]
    }

    pub fn iter(&self) -> impl Iterator<Item = &SignedPauli> {
        self.entries.iter()
    }
}

/// A validated stabilizer code storing one logical qubit.
#[derive(Debug)]
pub struct StabilizerCode {
    name: String,
    n: usize,
    generators: Vec<SignedPauli>,
    logical_x: SignedPauli,
    logical_y: SignedPauli,
    logical_z: SignedPauli,
    group: Vec<SignedPauli>,
    recovery: SyndromeTable,
    encoding_cache: OnceLock<[PauliExpansion; 4]>,
    decoding_cache: OnceLock<[PauliExpansion; 4]>,
}

impl StabilizerCode {
    /// Validate generators and logicals, enumerate the stabilizer group,
    /// derive the logical Y, and build the recovery table.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<SignedPauli>,
        logical_x: SignedPauli,
        logical_z: SignedPauli,
        policy: RecoveryPolicy,
    ) -> Result<Self> {
        let name = name.into();
        let n = generators
            .first()
            .map(|g| g.n())
            .ok_or_else(|| Error::InvalidCode("no generators given".into()))?;
        if generators.len() != n - 1 {
            return Err(Error::InvalidCode(format!(
                "a one-qubit code on {n} qubits needs {} generators, got {}",
                n - 1,
                generators.len()
            )));
        }
        for g in &generators {
            if g.n() != n {
                return Err(Error::DimensionMismatch(n, g.n()));
            }
        }
        for (i, a) in generators.iter().enumerate() {
            for b in generators.iter().skip(i + 1) {
                if eta(a.body(), b.body())? != 1 {
                    return Err(Error::InvalidCode(format!(
                        "generators {a} and {b} anticommute"
                    )));
                }
            }
        }
        let group = enumerate_group(n, &generators)?;
        {
            let mut seen = HashSet::new();
            for e in &group {
                if !seen.insert(*e.body()) {
                    return Err(Error::InvalidCode(format!(
                        "generators are dependent: element {} repeats in the group",
                        e.body()
                    )));
                }
            }
        }
        for (label, l) in [("logical_x", &logical_x), ("logical_z", &logical_z)] {
            if l.n() != n {
                return Err(Error::DimensionMismatch(n, l.n()));
            }
            for g in &generators {
                if eta(l.body(), g.body())? != 1 {
                    return Err(Error::InvalidCode(format!(
                        "{label} {l} anticommutes with generator {g}"
                    )));
                }
            }
        }
        if eta(logical_x.body(), logical_z.body())? != -1 {
            return Err(Error::InvalidCode(format!(
                "logical_x {logical_x} and logical_z {logical_z} must anticommute"
            )));
        }
        let logical_y = derive_logical_y(&logical_x, &logical_z)?;
        let mut code = StabilizerCode {
            name,
            n,
            generators,
            logical_x,
            logical_y,
            logical_z,
            group,
            recovery: SyndromeTable { entries: Vec::new() },
            encoding_cache: OnceLock::new(),
            decoding_cache: OnceLock::new(),
        };
        code.recovery = code.build_recovery(&policy)?;
        Ok(code)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[SignedPauli] {
        &self.generators
    }

    /// All `2^(n-1)` stabilizer elements with signs; index `k` is the
    /// product of the generators selected by the bits of `k`.
    pub fn group(&self) -> &[SignedPauli] {
        &self.group
    }

    pub fn recovery_table(&self) -> &SyndromeTable {
        &self.recovery
    }

    /// The logical operator for `sigma` (identity for `Letter::I`).
    pub fn logical(&self, sigma: Letter) -> SignedPauli {
        match sigma {
            Letter::I => SignedPauli::identity(self.n),
            Letter::X => self.logical_x,
            Letter::Y => self.logical_y,
            Letter::Z => self.logical_z,
        }
    }

    /// The syndrome of an error: bit `k` set iff it anticommutes with
    /// generator `k`.
    pub fn syndrome_of(&self, p: &PauliString) -> Result<usize> {
        let mut s = 0usize;
        for (k, g) in self.generators.iter().enumerate() {
            if eta(p, g.body())? == -1 {
                s |= 1 << k;
            }
        }
        Ok(s)
    }

    /// Build a recovery table under the given policy (the table embedded
    /// in the code is built once at construction; this is also usable for
    /// testing alternative tables).
    pub fn build_recovery(&self, policy: &RecoveryPolicy) -> Result<SyndromeTable> {
        let slots = 1usize << (self.n - 1);
        match policy {
            RecoveryPolicy::MinWeight => self.min_weight_table(slots),
            RecoveryPolicy::Explicit(entries) => self.explicit_table(slots, entries),
        }
    }

    fn min_weight_table(&self, slots: usize) -> Result<SyndromeTable> {
        let mut table: Vec<Option<PauliString>> = vec![None; slots];
        let mut filled = 0usize;
        for w in 0..=self.n as u32 {
            // best candidate of this weight per syndrome
            let mut best: BTreeMap<usize, PauliString> = BTreeMap::new();
            for cand in WeightEnumerator::new(self.n, w) {
                let s = self.syndrome_of(&cand)?;
                if table[s].is_some() {
                    continue;
                }
                let better = match best.get(&s) {
                    None => true,
                    Some(prev) => rank_key(&cand) < rank_key(prev),
                };
                if better {
                    best.insert(s, cand);
                }
            }
            for (s, cand) in best {
                table[s] = Some(cand);
                filled += 1;
            }
            if filled == slots {
                break;
            }
        }
        let entries: Option<Vec<SignedPauli>> = table
            .into_iter()
            .map(|t| t.map(SignedPauli::positive))
            .collect();
        entries
            .map(|entries| SyndromeTable { entries })
            .ok_or_else(|| Error::Recovery("some syndromes have no recovery operator".into()))
    }

    fn explicit_table(
        &self,
        slots: usize,
        entries: &[(String, SignedPauli)],
    ) -> Result<SyndromeTable> {
        let mut table: Vec<Option<SignedPauli>> = vec![None; slots];
        for (key, op) in entries {
            let s = parse_syndrome_key(key, self.n - 1)?;
            let actual = self.syndrome_of(op.body())?;
            if actual != s {
                return Err(Error::Recovery(format!(
                    "operator {op} listed under syndrome {key:?} actually has syndrome {}",
                    format_syndrome(actual, self.n - 1)
                )));
            }
            if table[s].replace(*op).is_some() {
                return Err(Error::Recovery(format!("duplicate entry for syndrome {key:?}")));
            }
        }
        let entries: Option<Vec<SignedPauli>> = table.into_iter().collect();
        entries
            .map(|entries| SyndromeTable { entries })
            .ok_or_else(|| Error::Recovery("explicit table is missing syndromes".into()))
    }

    /// The four encoding operators `E_I, E_X, E_Y, E_Z` as exact Pauli
    /// expansions: `E_sigma = sum_k (-1)^a(S_k sigma_bar) phi(S_k
    /// sigma_bar) / 2^n`, one distinct monomial per stabilizer element.
    pub fn encoding_expansion(&self) -> &[PauliExpansion; 4] {
        self.encoding_cache.get_or_init(|| {
            let mut out: [PauliExpansion; 4] = Default::default();
            for sigma in [Letter::I, Letter::X, Letter::Y, Letter::Z] {
                let bar = self.logical(sigma);
                let exp = &mut out[sigma.index()];
                for s_k in &self.group {
                    let prod = hermitian_mul(s_k, &bar).expect("group element times logical");
                    let coeff = Dyadic::new(prod.sign() as i128, self.n as u32);
                    exp.add(*prod.body(), coeff);
                }
            }
            out
        })
    }

    /// The four decoding operators `D_I, D_X, D_Y, D_Z` as exact Pauli
    /// expansions: `D_sigma = sum_k (-1)^a f_{k sigma} phi(S_k sigma_bar)
    /// / |S|` with `f_{k sigma} = sum_j eta(S_k, R_j) eta(R_j, sigma_bar)`.
    pub fn decoding_expansion(&self) -> &[PauliExpansion; 4] {
        self.decoding_cache.get_or_init(|| {
            let mut out: [PauliExpansion; 4] = Default::default();
            let group_size = self.group.len() as u32;
            let log2s = group_size.trailing_zeros();
            for sigma in [Letter::I, Letter::X, Letter::Y, Letter::Z] {
                let bar = self.logical(sigma);
                let exp = &mut out[sigma.index()];
                for s_k in &self.group {
                    let f = self.f_coefficient(s_k, &bar);
                    if f == 0 {
                        continue;
                    }
                    let prod = hermitian_mul(s_k, &bar).expect("group element times logical");
                    let coeff = Dyadic::new((prod.sign() as i128) * f as i128, log2s);
                    exp.add(*prod.body(), coeff);
                }
            }
            out
        })
    }

    /// The logical letter an error acts as once its syndrome's recovery
    /// has been applied.
    ///
    /// `R_s E` commutes with every generator, so it lies in the
    /// normalizer and its class is read off its commutation with the
    /// logical X and Z.
    pub fn logical_action(&self, error: &PauliString) -> Result<Letter> {
        let s = self.syndrome_of(error)?;
        let (_, residual) = pauli_mul(
            self.recovery.recovery(s),
            &SignedPauli::positive(*error),
        )?;
        let vs_z = eta(&residual, self.logical_z.body())?;
        let vs_x = eta(&residual, self.logical_x.body())?;
        Ok(match (vs_z, vs_x) {
            (1, 1) => Letter::I,
            (-1, 1) => Letter::X,
            (-1, -1) => Letter::Y,
            (1, -1) => Letter::Z,
            _ => unreachable!("eta returns +/-1"),
        })
    }

    /// `f_{k sigma}` for a stabilizer element and logical operator.
    pub fn f_coefficient(&self, s_k: &SignedPauli, bar: &SignedPauli) -> i64 {
        let mut f = 0i64;
        for r in self.recovery.iter() {
            let a = eta(s_k.body(), r.body()).expect("equal lengths");
            let b = eta(r.body(), bar.body()).expect("equal lengths");
            f += (a * b) as i64;
        }
        f
    }
}

/// Tie-break ranking for equal-weight recovery candidates: fewest Y
/// letters first, then least masks.  Preferring Y-free representatives
/// keeps X- and Z-corrections independent where the syndrome allows it.
fn rank_key(p: &PauliString) -> (u32, u64, u64) {
    let (_, w_y, _) = p.weights();
    (w_y, p.x_mask(), p.z_mask())
}

fn derive_logical_y(logical_x: &SignedPauli, logical_z: &SignedPauli) -> Result<SignedPauli> {
    let (phase, body) = pauli_mul(logical_x, logical_z)?;
    // logical Y = i * Xbar * Zbar; anticommuting Hermitian factors give
    // phase +/-i, so the result is Hermitian
    match phase {
        Phase::PlusI => Ok(SignedPauli::new(1, body)),
        Phase::MinusI => Ok(SignedPauli::new(0, body)),
        _ => Err(Error::InvalidCode(
            "logical X and Z do not anticommute; cannot derive logical Y".into(),
        )),
    }
}

fn enumerate_group(n: usize, generators: &[SignedPauli]) -> Result<Vec<SignedPauli>> {
    let mut group = vec![SignedPauli::identity(n)];
    for g in generators {
        let mut next = Vec::with_capacity(group.len() * 2);
        for e in &group {
            next.push(*e);
        }
        for e in &group {
            next.push(hermitian_mul(e, g)?);
        }
        group = next;
    }
    Ok(group)
}

/// Logical action of a physical error on a concatenation stack
/// (outermost code first): each component of the innermost code's blocks
/// decodes to a letter, and the resulting string feeds the next level up.
pub fn nested_logical_action(codes: &[&StabilizerCode], letters: &[Letter]) -> Result<Letter> {
    let (outer, rest) = codes.split_first().ok_or_else(|| {
        Error::InvalidCode("concatenation stack is empty".into())
    })?;
    if rest.is_empty() {
        if letters.len() != outer.n() {
            return Err(Error::DimensionMismatch(outer.n(), letters.len()));
        }
        return outer.logical_action(&PauliString::from_letters(letters));
    }
    let block: usize = rest.iter().map(|c| c.n()).product();
    if letters.len() != outer.n() * block {
        return Err(Error::DimensionMismatch(outer.n() * block, letters.len()));
    }
    let decoded: Vec<Letter> = letters
        .chunks(block)
        .map(|chunk| nested_logical_action(rest, chunk))
        .collect::<Result<_>>()?;
    outer.logical_action(&PauliString::from_letters(&decoded))
}

/// The probability that an i.i.d. symmetric Pauli error (each qubit hit
/// by X, Y or Z with probability p/3) decodes to the logical identity,
/// as ascending polynomial coefficients in p.
///
/// Counts correctable errors per weight by exhausting all 4^N error
/// strings, then expands `sum_w c_w (p/3)^w (1-p)^(N-w)`.
pub fn correctable_polynomial(codes: &[&StabilizerCode]) -> Result<Vec<f64>> {
    let n_total: usize = codes.iter().map(|c| c.n()).product();
    if n_total > 12 {
        return Err(Error::Domain(format!(
            "correctable-error enumeration over 4^{n_total} strings is too large"
        )));
    }
    let mut counts = vec![0u64; n_total + 1];
    let mut letters = vec![Letter::I; n_total];
    for mut word in 0..(1usize << (2 * n_total)) {
        let mut weight = 0usize;
        for slot in letters.iter_mut() {
            *slot = [Letter::I, Letter::X, Letter::Y, Letter::Z][word & 3];
            weight += usize::from(word & 3 != 0);
            word >>= 2;
        }
        if nested_logical_action(codes, &letters)? == Letter::I {
            counts[weight] += 1;
        }
    }
    // expand the weight enumerator into ascending powers of p
    let mut coeffs = vec![0.0f64; n_total + 1];
    for (w, &c_w) in counts.iter().enumerate() {
        if c_w == 0 {
            continue;
        }
        let scale = c_w as f64 / 3f64.powi(w as i32);
        // (1-p)^(N-w) via Pascal recurrence
        let m = n_total - w;
        let mut binom = 1.0f64;
        for k in 0..=m {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            coeffs[w + k] += scale * sign * binom;
            binom = binom * (m - k) as f64 / (k + 1) as f64;
        }
    }
    Ok(coeffs)
}

fn parse_syndrome_key(key: &str, bits: usize) -> Result<usize> {
    if key.len() != bits {
        return Err(Error::Recovery(format!(
            "syndrome {key:?} must have {bits} bits"
        )));
    }
    let mut s = 0usize;
    for (k, c) in key.chars().enumerate() {
        match c {
            '0' => {}
            '1' => s |= 1 << k,
            _ => {
                return Err(Error::Recovery(format!(
                    "syndrome {key:?} contains {c:?}; expected 0 or 1"
                )))
            }
        }
    }
    Ok(s)
}

/// Format a syndrome with bit `k` at character position `k`.
pub fn format_syndrome(s: usize, bits: usize) -> String {
    (0..bits)
        .map(|k| if s >> k & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Enumerates all unsigned Pauli strings of a fixed weight, in a
/// deterministic order.
struct WeightEnumerator {
    n: usize,
    positions: Vec<usize>,
    letters: Vec<u8>, // 0 = X, 1 = Y, 2 = Z per chosen position
    done: bool,
}

impl WeightEnumerator {
    fn new(n: usize, w: u32) -> Self {
        let w = w as usize;
        if w > n {
            return WeightEnumerator { n, positions: vec![], letters: vec![], done: true };
        }
        WeightEnumerator {
            n,
            positions: (0..w).collect(),
            letters: vec![0; w],
            done: false,
        }
    }

    fn current(&self) -> PauliString {
        let mut x = 0u64;
        let mut z = 0u64;
        for (&pos, &l) in self.positions.iter().zip(&self.letters) {
            match l {
                0 => x |= 1 << pos,
                1 => {
                    x |= 1 << pos;
                    z |= 1 << pos;
                }
                _ => z |= 1 << pos,
            }
        }
        PauliString::from_masks(self.n, x, z)
    }

    fn advance(&mut self) {
        // odometer over letters, then next position combination
        for l in self.letters.iter_mut() {
            if *l < 2 {
                *l += 1;
                return;
            }
            *l = 0;
        }
        let w = self.positions.len();
        if w == 0 {
            self.done = true;
            return;
        }
        let mut i = w;
        loop {
            if i == 0 {
                self.done = true;
                return;
            }
            i -= 1;
            if self.positions[i] < self.n - (w - i) {
                self.positions[i] += 1;
                for j in i + 1..w {
                    self.positions[j] = self.positions[j - 1] + 1;
                }
                return;
            }
        }
    }
}

impl Iterator for WeightEnumerator {
    type Item = PauliString;

    fn next(&mut self) -> Option<PauliString> {
        if self.done {
            return None;
        }
        let item = self.current();
        self.advance();
        Some(item)
    }
}

// ---------------------------------------------------------------------------
// Code-spec file format
// ---------------------------------------------------------------------------

/// JSON code specification: either a stabilizer table or a concatenation
/// recipe (component names, outermost first).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum CodeSpec {
    Concat {
        name: String,
        concat: Vec<String>,
    },
    Stabilizer {
        name: String,
        n: usize,
        generators: Vec<String>,
        logical_x: String,
        logical_z: String,
        recovery: RecoverySpec,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RecoverySpec {
    Policy(String),
    Explicit(Vec<ExplicitRecoveryEntry>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExplicitRecoveryEntry {
    pub syndrome: String,
    pub operator: String,
}

/// Result of resolving a spec: a single code or a recipe.
#[derive(Debug)]
pub enum LoadedCode {
    Single(StabilizerCode),
    Recipe { name: String, components: Vec<String> },
}

/// Validate a parsed spec into a code or recipe.
pub fn load_code(spec: &CodeSpec) -> Result<LoadedCode> {
    match spec {
        CodeSpec::Concat { name, concat } => {
            if concat.is_empty() {
                return Err(Error::InvalidCode(format!(
                    "code {name:?}: field \"concat\" must list at least one component"
                )));
            }
            Ok(LoadedCode::Recipe { name: name.clone(), components: concat.clone() })
        }
        CodeSpec::Stabilizer { name, n, generators, logical_x, logical_z, recovery } => {
            let parse_field = |field: &str, text: &str| -> Result<SignedPauli> {
                let p = parse_pauli(text).map_err(|e| {
                    Error::InvalidCode(format!("code {name:?}, field {field:?}: {e}"))
                })?;
                if p.n() != *n {
                    return Err(Error::InvalidCode(format!(
                        "code {name:?}, field {field:?}: {text:?} has {} qubits, expected {n}",
                        p.n()
                    )));
                }
                Ok(p)
            };
            let gens = generators
                .iter()
                .enumerate()
                .map(|(i, g)| parse_field(&format!("generators[{i}]"), g))
                .collect::<Result<Vec<_>>>()?;
            let lx = parse_field("logical_x", logical_x)?;
            let lz = parse_field("logical_z", logical_z)?;
            let policy = match recovery {
                RecoverySpec::Policy(p) if p == "min_weight" => RecoveryPolicy::MinWeight,
                RecoverySpec::Policy(p) => {
                    return Err(Error::InvalidCode(format!(
                        "code {name:?}, field \"recovery\": unknown policy {p:?}"
                    )))
                }
                RecoverySpec::Explicit(entries) => RecoveryPolicy::Explicit(
                    entries
                        .iter()
                        .enumerate()
                        .map(|(i, e)| {
                            Ok((
                                e.syndrome.clone(),
                                parse_field(&format!("recovery[{i}].operator"), &e.operator)?,
                            ))
                        })
                        .collect::<Result<Vec<_>>>()?,
                ),
            };
            Ok(LoadedCode::Single(StabilizerCode::new(name.clone(), gens, lx, lz, policy)?))
        }
    }
}

/// Parse a spec from JSON text.
pub fn parse_code_spec(json: &str) -> Result<CodeSpec> {
    Ok(serde_json::from_str(json)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn bitflip() -> StabilizerCode {
        catalog::builtin("bitflip").unwrap()
    }

    #[test]
    fn bitflip_group_and_logical_y() {
        let code = bitflip();
        let bodies: Vec<String> = code.group().iter().map(|e| e.to_string()).collect();
        assert_eq!(bodies, ["III", "ZZI", "IZZ", "ZIZ"]);
        assert_eq!(code.logical(Letter::Y).to_string(), "-YYY");
    }

    #[test]
    fn bitflip_min_weight_recovery() {
        let code = bitflip();
        let ops: Vec<String> = code.recovery_table().iter().map(|r| r.to_string()).collect();
        // syndrome bit order: (eta vs ZZI, eta vs IZZ)
        assert_eq!(ops, ["III", "XII", "IIX", "IXI"]);
        assert_eq!(code.recovery_table().recovery(0b11).to_string(), "IXI");
    }

    #[test]
    fn anticommuting_generators_rejected() {
        // XXI and ZIZ overlap on exactly one anticommuting letter
        let gens = vec![parse_pauli("XXI").unwrap(), parse_pauli("ZIZ").unwrap()];
        let err = StabilizerCode::new(
            "bad",
            gens,
            parse_pauli("XXX").unwrap(),
            parse_pauli("ZZZ").unwrap(),
            RecoveryPolicy::MinWeight,
        )
        .unwrap_err();
        assert!(err.to_string().contains("anticommute"), "{err}");
    }

    #[test]
    fn dependent_generators_rejected() {
        let gens = vec![parse_pauli("ZZI").unwrap(), parse_pauli("ZZI").unwrap()];
        let err = StabilizerCode::new(
            "bad",
            gens,
            parse_pauli("XXX").unwrap(),
            parse_pauli("ZZZ").unwrap(),
            RecoveryPolicy::MinWeight,
        )
        .unwrap_err();
        assert!(err.to_string().contains("dependent"), "{err}");
    }

    #[test]
    fn alternative_logical_z_is_accepted() {
        // ZII commutes with both generators and anticommutes with XXX;
        // logical-operator choice is the user's.
        let gens = vec![parse_pauli("ZZI").unwrap(), parse_pauli("IZZ").unwrap()];
        let code = StabilizerCode::new(
            "bitflip-alt",
            gens,
            parse_pauli("XXX").unwrap(),
            parse_pauli("ZII").unwrap(),
            RecoveryPolicy::MinWeight,
        );
        assert!(code.is_ok());
    }

    #[test]
    fn five_bit_recovery_is_all_single_qubit() {
        let code = catalog::builtin("five_bit").unwrap();
        let table = code.recovery_table();
        assert_eq!(table.len(), 16);
        let mut seen = HashSet::new();
        for (s, r) in table.iter().enumerate() {
            assert!(r.body().weight() <= 1, "syndrome {s} recovery {r} has weight > 1");
            assert!(seen.insert(*r.body()));
        }
    }

    #[test]
    fn steane_corrects_x_and_z_on_separate_qubits() {
        let code = catalog::builtin("steane").unwrap();
        // X on qubit 2, Z on qubit 5
        let err_op = parse_pauli("IIXIIZI").unwrap();
        let s = code.syndrome_of(err_op.body()).unwrap();
        assert_eq!(code.recovery_table().recovery(s).body(), err_op.body());
    }

    #[test]
    fn bitflip_encoding_expansion_matches_reference() {
        let code = bitflip();
        let e = code.encoding_expansion();
        let e_i = &e[Letter::I.index()];
        assert_eq!(e_i.len(), 4);
        for mono in ["III", "IZZ", "ZIZ", "ZZI"] {
            let m = parse_pauli(mono).unwrap();
            assert_eq!(e_i.coeff(m.body()), Dyadic::new(1, 3), "coefficient of {mono}");
        }
        let e_x = &e[Letter::X.index()];
        let xyy = parse_pauli("XYY").unwrap();
        assert_eq!(e_x.coeff(xyy.body()), Dyadic::new(-1, 3));
        let xxx = parse_pauli("XXX").unwrap();
        assert_eq!(e_x.coeff(xxx.body()), Dyadic::new(1, 3));
    }

    #[test]
    fn bitflip_decoding_expansion_matches_reference() {
        let code = bitflip();
        let d = code.decoding_expansion();
        let d_i = &d[Letter::I.index()];
        assert_eq!(d_i.len(), 1);
        assert_eq!(d_i.coeff(&PauliString::identity(3)), Dyadic::ONE);

        let d_x = &d[Letter::X.index()];
        assert_eq!(d_x.len(), 1);
        assert_eq!(d_x.coeff(parse_pauli("XXX").unwrap().body()), Dyadic::ONE);

        let d_z = &d[Letter::Z.index()];
        assert_eq!(d_z.coeff(parse_pauli("ZZZ").unwrap().body()), Dyadic::new(-1, 1));
        assert_eq!(d_z.coeff(parse_pauli("ZII").unwrap().body()), Dyadic::new(1, 1));

        let d_y = &d[Letter::Y.index()];
        assert_eq!(d_y.coeff(parse_pauli("YYY").unwrap().body()), Dyadic::new(1, 1));
        assert_eq!(d_y.coeff(parse_pauli("XXY").unwrap().body()), Dyadic::new(1, 1));
    }

    #[test]
    fn explicit_recovery_validation() {
        let spec = r#"{
            "name": "bitflip-explicit", "n": 3,
            "generators": ["ZZI", "IZZ"],
            "logical_x": "XXX", "logical_z": "ZZZ",
            "recovery": [
                {"syndrome": "00", "operator": "III"},
                {"syndrome": "10", "operator": "XII"},
                {"syndrome": "11", "operator": "IXI"},
                {"syndrome": "01", "operator": "IIX"}
            ]
        }"#;
        let loaded = load_code(&parse_code_spec(spec).unwrap()).unwrap();
        match loaded {
            LoadedCode::Single(code) => {
                assert_eq!(code.recovery_table().recovery(0b01).to_string(), "XII")
            }
            _ => panic!("expected a single code"),
        }

        let bad = spec.replace("{\"syndrome\": \"10\", \"operator\": \"XII\"}",
                               "{\"syndrome\": \"10\", \"operator\": \"IIX\"}");
        let err = load_code(&parse_code_spec(&bad).unwrap()).unwrap_err();
        assert!(err.to_string().contains("actually has syndrome"), "{err}");
    }

    #[test]
    fn concat_spec_parses() {
        let spec = r#"{"name": "shor-like", "concat": ["phaseflip", "bitflip"]}"#;
        match load_code(&parse_code_spec(spec).unwrap()).unwrap() {
            LoadedCode::Recipe { components, .. } => {
                assert_eq!(components, ["phaseflip", "bitflip"])
            }
            _ => panic!("expected a recipe"),
        }
    }
}
