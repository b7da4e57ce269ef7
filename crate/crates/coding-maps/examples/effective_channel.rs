//! Compute exact effective logical channels for catalog codes, for both
//! diagonal and general (non-diagonal) physical channels.

use coding_maps::catalog;
use coding_maps::channel::{DiagonalChannel, QubitChannel};
use coding_maps::coding_map::effective_channel_general;

fn main() -> coding_maps::Result<()> {
    // a diagonal channel through the bitflip code: Z decoherence is
    // suppressed, X and Y decoherence amplified
    let code = catalog::builtin("bitflip")?;
    let physical = DiagonalChannel::new_physical(0.9, 0.9, 0.9)?;
    let result = effective_channel_general(&code, &QubitChannel::from_diagonal(&physical))?;
    let d = result.channel.as_diagonal(1e-12).expect("diagonal in, diagonal out");
    println!("bitflip on [0.9, 0.9, 0.9]   -> [{:.6}, {:.6}, {:.6}]", d.x, d.y, d.z);

    // the five-bit code symmetrizes any diagonal channel
    let code = catalog::builtin("five_bit")?;
    let physical = DiagonalChannel::new_physical(0.95, 0.90, 0.85)?;
    let result = effective_channel_general(&code, &QubitChannel::from_diagonal(&physical))?;
    let d = result.channel.as_diagonal(1e-12).unwrap();
    println!("five_bit on [0.95, 0.9, 0.85] -> [{:.6}, {:.6}, {:.6}]", d.x, d.y, d.z);

    // a general channel: a slightly rotated amplitude-damping-like matrix;
    // nothing about the computation requires diagonality
    let mut m = [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.92, 0.05, 0.0],
        [0.0, -0.05, 0.92, 0.0],
        [0.08, 0.0, 0.0, 0.88],
    ];
    let physical = QubitChannel::new(m)?;
    let result = effective_channel_general(&catalog::builtin("steane")?, &physical)?;
    println!("steane on a non-diagonal channel:");
    for r in 0..4 {
        m[r] = [0.0; 4];
        for c in 0..4 {
            m[r][c] = result.channel.entry(r, c);
        }
        println!("  [{:>9.6}, {:>9.6}, {:>9.6}, {:>9.6}]", m[r][0], m[r][1], m[r][2], m[r][3]);
    }
    Ok(())
}
