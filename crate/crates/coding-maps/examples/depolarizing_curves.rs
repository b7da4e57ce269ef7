//! Sweep iterated coding maps over a depolarizing-time grid and emit CSV
//! (the same table the `curves` CLI subcommand produces).

use coding_maps::catalog;
use coding_maps::coding_map::diagonal_poly_map;
use coding_maps::dynamics::depolarizing_curves;
use coding_maps::polymap::compose_maps;

fn main() -> coding_maps::Result<()> {
    let bitflip = diagonal_poly_map(&catalog::builtin("bitflip")?);
    let phaseflip = diagonal_poly_map(&catalog::builtin("phaseflip")?);
    let shor = compose_maps(&phaseflip, &bitflip)?;

    let grid: Vec<f64> = (1..=8).map(|i| 0.05 * i as f64).collect();
    let table = depolarizing_curves(&shor, &grid, &[0, 1, 2, 3])?;
    print!("{}", table.to_csv());
    Ok(())
}
