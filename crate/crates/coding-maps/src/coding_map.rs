//! Effective channels and coding maps.
//!
//! The effective channel of a code under i.i.d. single-qubit noise has
//! matrix elements that are polynomials in the entries of the physical
//! channel, with coefficients read off the Pauli expansions of the
//! encoding and decoding operators.  For diagonal channels the map
//! collapses to three exact polynomials ([`diagonal_poly_map`]).

use crate::channel::QubitChannel;
use crate::code::StabilizerCode;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::pauli::{hermitian_mul, Letter};
use crate::polymap::{Poly, PolyMap};

/// How an effective channel was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComputationPath {
    Generic,
    Symbolic,
}

/// An effective channel together with its provenance.
#[derive(Debug, Clone)]
pub struct EffectiveChannelResult {
    pub channel: QubitChannel,
    pub code_name: String,
    pub input_description: String,
    pub path: ComputationPath,
}

/// Effective channel for an arbitrary single-qubit channel acting
/// identically on every register qubit.
///
/// `G[s][s'] = sum over expansion monomial pairs of beta * alpha *
/// prod_i n1[nu_i][mu_i]`; cost is O(16 |S|^2 n).
pub fn effective_channel_general(
    code: &StabilizerCode,
    n1: &QubitChannel,
) -> Result<EffectiveChannelResult> {
    let channels = vec![*n1; code.n()];
    let channel = effective_channel_matrix(code, &channels)?;
    Ok(EffectiveChannelResult {
        channel,
        code_name: code.name().to_string(),
        input_description: format!("{:?}", n1.matrix()),
        path: ComputationPath::Generic,
    })
}

/// Per-site variant: channel `i` acts on register qubit `i`.
pub fn effective_channel_per_site(
    code: &StabilizerCode,
    channels: &[QubitChannel],
) -> Result<EffectiveChannelResult> {
    if channels.len() != code.n() {
        return Err(Error::DimensionMismatch(code.n(), channels.len()));
    }
    let channel = effective_channel_matrix(code, channels)?;
    Ok(EffectiveChannelResult {
        channel,
        code_name: code.name().to_string(),
        input_description: format!("{} per-site channels", channels.len()),
        path: ComputationPath::Generic,
    })
}

fn effective_channel_matrix(
    code: &StabilizerCode,
    channels: &[QubitChannel],
) -> Result<QubitChannel> {
    let n = code.n();
    let e_ops = code.encoding_expansion();
    let d_ops = code.decoding_expansion();
    let mut m = [[0.0f64; 4]; 4];
    for sigma in [Letter::I, Letter::X, Letter::Y, Letter::Z] {
        for sigma_p in [Letter::I, Letter::X, Letter::Y, Letter::Z] {
            let mut acc = 0.0f64;
            for (nu, beta) in d_ops[sigma.index()].iter() {
                for (mu, alpha) in e_ops[sigma_p.index()].iter() {
                    // alpha relative to the (mu/2)-tensor basis is the
                    // stored coefficient times 2^n, i.e. +/-1
                    let mut prod = beta.to_f64() * alpha.to_f64() * (n as f64).exp2();
                    for i in 0..n {
                        prod *= channels[i].entry(nu.letter(i).index(), mu.letter(i).index());
                        if prod == 0.0 {
                            break;
                        }
                    }
                    acc += prod;
                }
            }
            m[sigma.index()][sigma_p.index()] = acc;
        }
    }
    // clean the trace-preservation row of rounding dust before the
    // constructor's exactness check
    debug_assert!((m[0][0] - 1.0).abs() < 1e-9);
    debug_assert!(m[0][1].abs() < 1e-9 && m[0][2].abs() < 1e-9 && m[0][3].abs() < 1e-9);
    m[0] = [1.0, 0.0, 0.0, 0.0];
    QubitChannel::new(m)
}

/// The exact polynomial coding map restricted to diagonal channels.
///
/// For each output axis sigma the polynomial is `sum_k (f_{k sigma}/|S|)
/// x^wX y^wY z^wZ` with the weights taken from `phi(S_k sigma_bar)`;
/// equal exponent triples merge.
pub fn diagonal_poly_map(code: &StabilizerCode) -> PolyMap {
    let group_size = code.group().len() as u32;
    let log2s = group_size.trailing_zeros();
    let mut components: [Poly; 3] = Default::default();
    for (out, sigma) in [Letter::X, Letter::Y, Letter::Z].into_iter().enumerate() {
        let bar = code.logical(sigma);
        for s_k in code.group() {
            let f = code.f_coefficient(s_k, &bar);
            if f == 0 {
                continue;
            }
            let body = hermitian_mul(s_k, &bar).expect("group element times logical");
            let (w_x, w_y, w_z) = body.body().weights();
            components[out].add_term(
                [w_x as u8, w_y as u8, w_z as u8],
                Dyadic::new(f as i128, log2s),
            );
        }
    }
    let [x, y, z] = components;
    PolyMap { x, y, z }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::channel::DiagonalChannel;
    use crate::polymap::compose_maps;

    #[test]
    fn bitflip_poly_map_is_exact() {
        let code = catalog::builtin("bitflip").unwrap();
        let m = diagonal_poly_map(&code);
        assert_eq!(m.x.to_string(), "x^3");
        assert_eq!(m.y.to_string(), "3/2 x^2 y - 1/2 y^3");
        assert_eq!(m.z.to_string(), "3/2 z - 1/2 z^3");
    }

    #[test]
    fn phaseflip_poly_map_is_exact() {
        let code = catalog::builtin("phaseflip").unwrap();
        let m = diagonal_poly_map(&code);
        assert_eq!(m.x.to_string(), "3/2 x - 1/2 x^3");
        assert_eq!(m.y.to_string(), "3/2 y z^2 - 1/2 y^3");
        assert_eq!(m.z.to_string(), "z^3");
    }

    #[test]
    fn generic_path_agrees_with_poly_map() {
        let code = catalog::builtin("bitflip").unwrap();
        let input = DiagonalChannel::new(0.9, 0.9, 0.9);
        let res = effective_channel_general(&code, &QubitChannel::from_diagonal(&input)).unwrap();
        let d = res.channel.as_diagonal(1e-12).expect("diagonal in, diagonal out");
        assert!((d.x - 0.729).abs() < 1e-12);
        assert!((d.y - 0.729).abs() < 1e-12);
        assert!((d.z - 0.9855).abs() < 1e-12);
    }

    #[test]
    fn identity_channel_maps_to_identity() {
        for name in ["bitflip", "phaseflip", "five_bit"] {
            let code = catalog::builtin(name).unwrap();
            let res = effective_channel_general(&code, &QubitChannel::identity()).unwrap();
            let d = res.channel.as_diagonal(1e-12).unwrap();
            assert!((d.x - 1.0).abs() < 1e-12, "{name}");
            assert!((d.y - 1.0).abs() < 1e-12, "{name}");
            assert!((d.z - 1.0).abs() < 1e-12, "{name}");
        }
    }

    #[test]
    fn five_bit_depolarizing_is_symmetric() {
        let code = catalog::builtin("five_bit").unwrap();
        let dep = crate::channel::depolarizing(0.17).unwrap();
        let res = effective_channel_general(&code, &QubitChannel::from_diagonal(&dep)).unwrap();
        let g = res.channel;
        assert!((g.entry(1, 1) - g.entry(2, 2)).abs() < 1e-12);
        assert!((g.entry(2, 2) - g.entry(3, 3)).abs() < 1e-12);
    }

    #[test]
    fn per_site_matches_uniform_when_identical() {
        let code = catalog::builtin("bitflip").unwrap();
        let ch = QubitChannel::from_diagonal(&DiagonalChannel::new(0.8, 0.7, 0.95));
        let uniform = effective_channel_general(&code, &ch).unwrap();
        let per_site = effective_channel_per_site(&code, &[ch, ch, ch]).unwrap();
        assert_eq!(uniform.channel, per_site.channel);
    }

    #[test]
    fn shor_composition_reference_point() {
        let bf = diagonal_poly_map(&catalog::builtin("bitflip").unwrap());
        let pf = diagonal_poly_map(&catalog::builtin("phaseflip").unwrap());
        let shor = compose_maps(&pf, &bf).unwrap();
        // R-component fixed point from the threshold analysis
        let z = 0.7297;
        assert!((shor.z.eval(0.0, 0.0, z) - z).abs() < 1e-3);
        let out = shor.eval(&DiagonalChannel::identity());
        assert_eq!((out.x, out.y, out.z), (1.0, 1.0, 1.0));
    }
}
