//! Symbolic composition of coding maps under concatenation.
//!
//! The nine-qubit code is phaseflip concatenated over bitflip, so its
//! coding map is the composition of the two three-qubit maps; iterating a
//! map corresponds to adding further concatenation levels of the same
//! code.

use coding_maps::catalog;
use coding_maps::channel::depolarizing;
use coding_maps::coding_map::diagonal_poly_map;
use coding_maps::dynamics::iterate_map;
use coding_maps::polymap::compose_maps;

fn main() -> coding_maps::Result<()> {
    let bitflip = diagonal_poly_map(&catalog::builtin("bitflip")?);
    let phaseflip = diagonal_poly_map(&catalog::builtin("phaseflip")?);
    let shor = compose_maps(&phaseflip, &bitflip)?;
    println!("phaseflip(bitflip) map:");
    for line in shor.pretty().lines() {
        println!("  {line}");
    }

    // below threshold the iterates converge to the identity channel,
    // above it the stored qubit is erased
    for gamma_t in [0.08, 0.30] {
        println!("\niterating at gamma_t = {gamma_t}:");
        let mut c = depolarizing(gamma_t)?;
        for level in 0..=6 {
            println!("  level {level}: [{:.6}, {:.6}, {:.6}]", c.x, c.y, c.z);
            c = iterate_map(&shor, &c, 1);
        }
    }
    Ok(())
}
