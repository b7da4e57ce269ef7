//! Print the exact polynomial coding maps of the catalog codes.
//!
//! Each map sends a diagonal channel [x, y, z] to the effective logical
//! channel [x', y', z']; coefficients are exact dyadic rationals.

use coding_maps::catalog;
use coding_maps::coding_map::diagonal_poly_map;

fn main() -> coding_maps::Result<()> {
    for name in ["bitflip", "phaseflip", "phaseflip_prime", "steane", "five_bit"] {
        let code = catalog::builtin(name)?;
        let map = diagonal_poly_map(&code);
        println!("{name}:");
        for line in map.pretty().lines() {
            println!("  {line}");
        }
        println!();
    }
    Ok(())
}
