//! Independent dense-matrix reference implementation.
//!
//! Everything here works with explicit complex matrices on the full
//! 2^n-dimensional register space: codewords are built from the stabilizer
//! projector, noise is applied as per-qubit Kraus maps, and effective
//! channels come out of traces against the dense decoding operators.  None
//! of it shares arithmetic with the symbolic bit-mask path, which is the
//! point: the two routes agree only if both are right.

use num_complex::Complex64;

use crate::channel::DiagonalChannel;
use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::expansion::PauliExpansion;
use crate::pauli::{Letter, SignedPauli};

/// Largest register the dense path will touch (dimension 2^5 = 32).
pub const MAX_ORACLE_QUBITS: usize = 5;

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ORACLE_QUBITS {
        return Err(Error::OracleTooLarge(n));
    }
    Ok(())
}

/// A dense square complex matrix (row-major).
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    dim: usize,
    a: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(dim: usize) -> Self {
        CMat { dim, a: vec![Complex64::ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = CMat::zeros(dim);
        for i in 0..dim {
            m.a[i * dim + i] = Complex64::ONE;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.a[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.a[r * self.dim + c] = v;
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = CMat::zeros(d);
        for r in 0..d {
            for k in 0..d {
                let v = self.a[r * d + k];
                if v == Complex64::ZERO {
                    continue;
                }
                for c in 0..d {
                    out.a[r * d + c] += v * other.a[k * d + c];
                }
            }
        }
        out
    }

    pub fn dagger(&self) -> CMat {
        let d = self.dim;
        let mut out = CMat::zeros(d);
        for r in 0..d {
            for c in 0..d {
                out.a[c * d + r] = self.a[r * d + c].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> CMat {
        CMat { dim: self.dim, a: self.a.iter().map(|v| v * s).collect() }
    }

    pub fn add_scaled(&mut self, s: Complex64, other: &CMat) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for (dst, src) in self.a.iter_mut().zip(&other.a) {
            *dst += s * src;
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.a[i * self.dim + i]).sum()
    }

    /// Largest entry-wise absolute difference.
    pub fn max_abs_diff(&self, other: &CMat) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.a
            .iter()
            .zip(&other.a)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.a.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Multiply a column vector.
    pub fn apply_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.dim, v.len(), "dimension mismatch");
        let d = self.dim;
        (0..d)
            .map(|r| (0..d).map(|c| self.a[r * d + c] * v[c]).sum())
            .collect()
    }
}

/// Dense matrix of a signed Pauli; qubit `i` addresses bit `i` of the
/// basis index.
pub fn pauli_dense(p: &SignedPauli) -> CMat {
    let n = p.n();
    let dim = 1usize << n;
    let (x, z) = (p.body().x_mask(), p.body().z_mask());
    let w_y = (x & z).count_ones();
    let i_pow = match w_y % 4 {
        0 => Complex64::ONE,
        1 => Complex64::I,
        2 => -Complex64::ONE,
        _ => -Complex64::I,
    };
    let base = i_pow * Complex64::from(p.sign() as f64);
    let mut m = CMat::zeros(dim);
    for col in 0..dim {
        let row = col ^ x as usize;
        let parity = (z as usize & col).count_ones() & 1;
        let amp = if parity == 1 { -base } else { base };
        m.set(row, col, amp);
    }
    m
}

/// Dense matrix of a Pauli expansion (sum of coefficient * string).
pub fn expansion_dense(n: usize, e: &PauliExpansion) -> CMat {
    let mut m = CMat::zeros(1 << n);
    for (body, coeff) in e.iter() {
        m.add_scaled(
            Complex64::from(coeff.to_f64()),
            &pauli_dense(&SignedPauli::positive(*body)),
        );
    }
    m
}

/// The projector onto the code space, `(1/|S|) sum_k S_k`.
pub fn code_projector(code: &StabilizerCode) -> Result<CMat> {
    check_size(code.n())?;
    let dim = 1usize << code.n();
    let mut p = CMat::zeros(dim);
    let w = Complex64::from(1.0 / code.group().len() as f64);
    for s_k in code.group() {
        p.add_scaled(w, &pauli_dense(s_k));
    }
    Ok(p)
}

/// The projector onto the subspace with syndrome `j`, `R_j P_C R_j`.
pub fn syndrome_subspace_projector(code: &StabilizerCode, syndrome: usize) -> Result<CMat> {
    let p_c = code_projector(code)?;
    let r = pauli_dense(code.recovery_table().recovery(syndrome));
    Ok(r.mul(&p_c).mul(&r.dagger()))
}

/// The two codewords, as +1 and -1 logical-Z eigenvectors.
///
/// `|0>` is extracted from the rank-1 projector `P_C (1 + Zbar)/2` with
/// the phase fixed so its first significant amplitude is real positive;
/// `|1> = Xbar |0>`.
pub fn codewords(code: &StabilizerCode) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    check_size(code.n())?;
    let dim = 1usize << code.n();
    let mut p0 = code_projector(code)?;
    let z_bar = pauli_dense(&code.logical(Letter::Z));
    let half = Complex64::from(0.5);
    p0 = p0.scale(half).add_owned(p0.mul(&z_bar).scale(half));
    // rank-1 projector: any column with nonzero norm is proportional to
    // the codeword
    let mut best_col = 0;
    let mut best_norm = 0.0;
    for c in 0..dim {
        let norm: f64 = (0..dim).map(|r| p0.get(r, c).norm_sqr()).sum();
        if norm > best_norm {
            best_norm = norm;
            best_col = c;
        }
    }
    if best_norm < 1e-12 {
        return Err(Error::InvalidCode(
            "code space has no +1 logical-Z eigenvector".into(),
        ));
    }
    let mut ket0: Vec<Complex64> = (0..dim).map(|r| p0.get(r, best_col)).collect();
    let norm = ket0.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
    for v in ket0.iter_mut() {
        *v /= norm;
    }
    let lead = *ket0
        .iter()
        .find(|v| v.norm() > 1e-8)
        .expect("normalized vector has a significant entry");
    let phase = lead / lead.norm();
    for v in ket0.iter_mut() {
        *v /= phase;
    }
    let ket1 = pauli_dense(&code.logical(Letter::X)).apply_vec(&ket0);
    Ok((ket0, ket1))
}

impl CMat {
    fn add_owned(mut self, other: CMat) -> CMat {
        self.add_scaled(Complex64::ONE, &other);
        self
    }
}

fn ketbra(ket: &[Complex64], bra: &[Complex64]) -> CMat {
    let dim = ket.len();
    let mut m = CMat::zeros(dim);
    for r in 0..dim {
        for c in 0..dim {
            m.set(r, c, ket[r] * bra[c].conj());
        }
    }
    m
}

/// Dense encoding operators `[E_I, E_X, E_Y, E_Z]` built from codeword
/// dyads, so that an encoded Bloch vector enters as `rho = E_I + sum_sigma
/// <sigma> E_sigma`.
pub fn encoding_dense(code: &StabilizerCode) -> Result<[CMat; 4]> {
    let (k0, k1) = codewords(code)?;
    let half = Complex64::from(0.5);
    let e_i = ketbra(&k0, &k0).add_owned(ketbra(&k1, &k1)).scale(half);
    let e_x = ketbra(&k1, &k0).add_owned(ketbra(&k0, &k1)).scale(half);
    let e_y = ketbra(&k1, &k0)
        .scale(Complex64::I)
        .add_owned(ketbra(&k0, &k1).scale(-Complex64::I))
        .scale(half);
    let e_z = ketbra(&k0, &k0).add_owned(ketbra(&k1, &k1).scale(-Complex64::ONE)).scale(half);
    Ok([e_i, e_x, e_y, e_z])
}

/// Dense decoding operators `[D_I, D_X, D_Y, D_Z]`: measurement of the
/// logical Pauli after syndrome extraction and recovery, `D_sigma =
/// 2 sum_j R_j E_sigma_enc R_j` summed over all syndromes.
pub fn decoding_dense(code: &StabilizerCode) -> Result<[CMat; 4]> {
    let enc = encoding_dense(code)?;
    let dim = 1usize << code.n();
    let two = Complex64::from(2.0);
    let mut out = [
        CMat::zeros(dim),
        CMat::zeros(dim),
        CMat::zeros(dim),
        CMat::zeros(dim),
    ];
    for r_j in code.recovery_table().iter() {
        let r = pauli_dense(r_j);
        let r_dag = r.dagger();
        for (dst, e) in out.iter_mut().zip(&enc) {
            dst.add_scaled(two, &r_dag.mul(e).mul(&r));
        }
    }
    Ok(out)
}

/// A set of single-qubit Kraus operators.
#[derive(Debug, Clone)]
pub struct KrausSet {
    ops: Vec<CMat>,
}

impl KrausSet {
    /// Validates the completeness relation `sum_a K_a^dag K_a = 1`.
    pub fn new(ops: Vec<CMat>) -> Result<Self> {
        let mut sum = CMat::zeros(2);
        for k in &ops {
            assert_eq!(k.dim(), 2, "Kraus operators must be single-qubit");
            sum.add_scaled(Complex64::ONE, &k.dagger().mul(k));
        }
        if sum.max_abs_diff(&CMat::identity(2)) > 1e-12 {
            return Err(Error::Domain(
                "Kraus operators do not satisfy the completeness relation".into(),
            ));
        }
        Ok(KrausSet { ops })
    }

    pub fn ops(&self) -> &[CMat] {
        &self.ops
    }
}

/// Kraus operators of a physical diagonal channel: square roots of the
/// Pauli-error probabilities times the corresponding Paulis.
pub fn kraus_from_diagonal(c: &DiagonalChannel) -> Result<KrausSet> {
    let probs = c.to_pauli_probs()?;
    let single = |letter: &str| pauli_dense(&crate::pauli::parse_pauli(letter).unwrap());
    let mut ops = Vec::new();
    for (p, letter) in [
        (probs.p_identity(), "I"),
        (probs.p_x, "X"),
        (probs.p_y, "Y"),
        (probs.p_z, "Z"),
    ] {
        // clamp CP-tolerance dust
        let p = p.max(0.0);
        if p > 0.0 {
            ops.push(single(letter).scale(Complex64::from(p.sqrt())));
        }
    }
    KrausSet::new(ops)
}

/// Apply a single-qubit Kraus map to qubit `qubit` of an n-qubit density
/// matrix.
pub fn apply_kraus_on_qubit(rho: &CMat, kraus: &KrausSet, qubit: usize) -> CMat {
    let dim = rho.dim();
    let bit = 1usize << qubit;
    let mut out = CMat::zeros(dim);
    for k in kraus.ops() {
        // rho' += (K ⊗ 1_rest) rho (K ⊗ 1_rest)^dag, expanded by splitting
        // each index into the addressed bit and the rest
        for r in 0..dim {
            let rb = usize::from(r & bit != 0);
            for c in 0..dim {
                let cb = usize::from(c & bit != 0);
                let mut acc = Complex64::ZERO;
                for rb2 in 0..2usize {
                    let kr = k.get(rb, rb2);
                    if kr == Complex64::ZERO {
                        continue;
                    }
                    let r2 = (r & !bit) | (rb2 * bit);
                    for cb2 in 0..2usize {
                        let kc = k.get(cb, cb2).conj();
                        if kc == Complex64::ZERO {
                            continue;
                        }
                        let c2 = (c & !bit) | (cb2 * bit);
                        acc += kr * rho.get(r2, c2) * kc;
                    }
                }
                out.a[r * dim + c] += acc;
            }
        }
    }
    out
}

/// Apply the same single-qubit Kraus map independently to every qubit.
pub fn apply_noise(rho: &CMat, kraus: &KrausSet, n: usize) -> CMat {
    let mut out = rho.clone();
    for qubit in 0..n {
        out = apply_kraus_on_qubit(&out, kraus, qubit);
    }
    out
}

/// Raw effective-channel matrix computed entirely on the dense path:
/// `G[sigma][sigma'] = tr(D_sigma N[E_sigma'])` with the noise applied as
/// per-qubit Kraus maps.
///
/// The first row is reported as computed (it should reproduce `(1, 0, 0,
/// 0)` to numerical precision, and callers may check exactly that).
pub fn dense_effective_channel(
    code: &StabilizerCode,
    kraus: &KrausSet,
) -> Result<[[f64; 4]; 4]> {
    check_size(code.n())?;
    let enc = encoding_dense(code)?;
    let dec = decoding_dense(code)?;
    let mut g = [[0.0f64; 4]; 4];
    for (col, e) in enc.iter().enumerate() {
        let noisy = apply_noise(e, kraus, code.n());
        for (row, d) in dec.iter().enumerate() {
            let t = d.mul(&noisy).trace();
            debug_assert!(t.im.abs() < 1e-9, "effective-channel entry has imaginary part {t}");
            g[row][col] = t.re;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::pauli::{parse_pauli, pauli_mul, Phase};

    fn p(s: &str) -> SignedPauli {
        parse_pauli(s).unwrap()
    }

    #[test]
    fn pauli_dense_single_qubit() {
        let y = pauli_dense(&p("Y"));
        assert_eq!(y.get(1, 0), Complex64::I);
        assert_eq!(y.get(0, 1), -Complex64::I);
        assert_eq!(y.get(0, 0), Complex64::ZERO);

        let mz = pauli_dense(&p("-Z"));
        assert_eq!(mz.get(0, 0), -Complex64::ONE);
        assert_eq!(mz.get(1, 1), Complex64::ONE);
    }

    #[test]
    fn dense_product_matches_symbolic_phase() {
        for (a, b) in [("X", "Z"), ("ZZI", "XXX"), ("XYZ", "YZX"), ("XZZXI", "ZXIXZ")] {
            let (phase, body) = pauli_mul(&p(a), &p(b)).unwrap();
            let dense = pauli_dense(&p(a)).mul(&pauli_dense(&p(b)));
            let phase_factor = match phase {
                Phase::PlusOne => Complex64::ONE,
                Phase::PlusI => Complex64::I,
                Phase::MinusOne => -Complex64::ONE,
                Phase::MinusI => -Complex64::I,
            };
            let want = pauli_dense(&SignedPauli::positive(body)).scale(phase_factor);
            assert!(dense.max_abs_diff(&want) < 1e-14, "{a} * {b}");
        }
    }

    #[test]
    fn code_projector_properties() {
        let code = catalog::builtin("five_bit").unwrap();
        let p_c = code_projector(&code).unwrap();
        assert!((p_c.trace().re - 2.0).abs() < 1e-12);
        assert!(p_c.mul(&p_c).max_abs_diff(&p_c) < 1e-12);
    }

    #[test]
    fn syndrome_projectors_resolve_identity() {
        let code = catalog::builtin("bitflip").unwrap();
        let dim = 1usize << code.n();
        let mut sum = CMat::zeros(dim);
        for s in 0..code.recovery_table().len() {
            sum.add_scaled(
                Complex64::ONE,
                &syndrome_subspace_projector(&code, s).unwrap(),
            );
        }
        assert!(sum.max_abs_diff(&CMat::identity(dim)) < 1e-12);
    }

    #[test]
    fn bitflip_codewords() {
        let code = catalog::builtin("bitflip").unwrap();
        let (k0, k1) = codewords(&code).unwrap();
        // |0> = |000>, |1> = |111> in the bit-indexed basis
        assert!((k0[0].re - 1.0).abs() < 1e-12);
        assert!((k1[7].re - 1.0).abs() < 1e-12);
        let overlap: Complex64 = k0.iter().zip(&k1).map(|(a, b)| a.conj() * b).sum();
        assert!(overlap.norm() < 1e-12);
    }

    #[test]
    fn dense_operators_match_symbolic_expansions() {
        for name in ["bitflip", "phaseflip", "phaseflip_prime", "five_bit"] {
            let code = catalog::builtin(name).unwrap();
            let enc = encoding_dense(&code).unwrap();
            let dec = decoding_dense(&code).unwrap();
            for idx in 0..4 {
                let e_sym = expansion_dense(code.n(), &code.encoding_expansion()[idx]);
                assert!(enc[idx].max_abs_diff(&e_sym) < 1e-12, "{name} E[{idx}]");
                let d_sym = expansion_dense(code.n(), &code.decoding_expansion()[idx]);
                assert!(dec[idx].max_abs_diff(&d_sym) < 1e-12, "{name} D[{idx}]");
            }
        }
    }

    #[test]
    fn kraus_completeness_enforced() {
        assert!(kraus_from_diagonal(&DiagonalChannel::new(0.9, 0.9, 0.9)).is_ok());
        let half_x = pauli_dense(&p("X")).scale(Complex64::from(0.5));
        assert!(KrausSet::new(vec![half_x]).is_err());
    }

    #[test]
    fn dense_channel_on_bitflip_reference_point() {
        let code = catalog::builtin("bitflip").unwrap();
        let kraus = kraus_from_diagonal(&DiagonalChannel::new(0.9, 0.9, 0.9)).unwrap();
        let g = dense_effective_channel(&code, &kraus).unwrap();
        assert!((g[0][0] - 1.0).abs() < 1e-12);
        assert!((g[1][1] - 0.729).abs() < 1e-12);
        assert!((g[2][2] - 0.729).abs() < 1e-12);
        assert!((g[3][3] - 0.9855).abs() < 1e-12);
        for r in 0..4 {
            for c in 0..4 {
                if r != c {
                    assert!(g[r][c].abs() < 1e-12, "g[{r}][{c}] = {}", g[r][c]);
                }
            }
        }
    }

    #[test]
    fn size_guard() {
        let code = catalog::builtin("steane").unwrap();
        assert!(matches!(code_projector(&code), Err(Error::OracleTooLarge(7))));
    }
}
