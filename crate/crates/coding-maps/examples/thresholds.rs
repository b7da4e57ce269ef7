//! Storage thresholds of infinitely concatenated codes under the
//! depolarizing channel.
//!
//! The threshold is set by the largest interior repelling fixed point of
//! the per-axis polynomial; below t_th the iterated map converges to the
//! identity channel and the stored qubit survives.

use coding_maps::catalog;
use coding_maps::coding_map::diagonal_poly_map;
use coding_maps::dynamics::storage_threshold;
use coding_maps::polymap::{compose_maps, PolyMap};

fn stack_map(name: &str) -> coding_maps::Result<PolyMap> {
    let mut map = PolyMap::identity();
    for code in catalog::resolve(name)?.iter().rev() {
        map = compose_maps(&diagonal_poly_map(code), &map)?;
    }
    Ok(map)
}

fn main() -> coding_maps::Result<()> {
    println!(
        "{:<12} {:>7} {:>8} {:>8} {:>8} {:>8}",
        "code", "period", "t*_X", "t*_Z", "t_th", "p_th"
    );
    for name in ["shor", "shor_prime", "steane", "five_bit"] {
        let report = storage_threshold(&stack_map(name)?)?;
        println!(
            "{name:<12} {:>7} {:>8.4} {:>8.4} {:>8.4} {:>8.4}",
            report.period, report.t_star.x, report.t_star.z, report.t_th, report.p_th
        );
    }

    // the five-bit interior fixed point is analytic: sqrt(2/3)
    let report = storage_threshold(&stack_map("five_bit")?)?;
    let v_star = (-report.t_th).exp();
    println!(
        "\nfive_bit interior fixed point {v_star:.12} vs sqrt(2/3) = {:.12}",
        (2.0f64 / 3.0).sqrt()
    );
    Ok(())
}
