//! Cross-check the symbolic effective-channel path against the dense
//! density-matrix reference on random physical channels.
//!
//! The dense path builds codewords from the stabilizer projector and
//! applies the noise as per-qubit Kraus maps; it shares no arithmetic
//! with the Pauli-expansion path.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use coding_maps::catalog;
use coding_maps::channel::{DiagonalChannel, QubitChannel};
use coding_maps::coding_map::effective_channel_general;
use coding_maps::oracle::{dense_effective_channel, kraus_from_diagonal};

fn random_physical(rng: &mut StdRng) -> DiagonalChannel {
    // sample Pauli-error probabilities from the simplex for guaranteed CP
    loop {
        let (px, py, pz) = (rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>());
        if px + py + pz <= 1.0 {
            return coding_maps::PauliProbs::new(px, py, pz).unwrap().to_diagonal();
        }
    }
}

fn main() -> coding_maps::Result<()> {
    let mut rng = StdRng::seed_from_u64(7);
    for name in ["bitflip", "phaseflip", "phaseflip_prime", "five_bit"] {
        let code = catalog::builtin(name)?;
        let mut worst = 0.0f64;
        for _ in 0..10 {
            let d = random_physical(&mut rng);
            let symbolic =
                effective_channel_general(&code, &QubitChannel::from_diagonal(&d))?.channel;
            let dense = dense_effective_channel(&code, &kraus_from_diagonal(&d)?)?;
            for r in 0..4 {
                for c in 0..4 {
                    worst = worst.max((dense[r][c] - symbolic.entry(r, c)).abs());
                }
            }
        }
        println!("{name:<16} max deviation over 10 random channels: {worst:.3e}");
    }
    Ok(())
}
