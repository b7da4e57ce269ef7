//! Define a code from a JSON specification, including an explicit
//! recovery table, and analyze it like any catalog code.
//!
//! The example code is the three-qubit bitflip code with a deliberately
//! non-minimal recovery entry: syndrome 11 is corrected with YIY instead
//! of IXI.  The two differ by the stabilizer ZIZ times logical Z, so this
//! decoder belongs to a different logical class on that syndrome and the
//! coding map changes accordingly.

use coding_maps::code::{load_code, parse_code_spec, LoadedCode};
use coding_maps::coding_map::diagonal_poly_map;

const SPEC: &str = r#"{
    "name": "bitflip-twisted",
    "n": 3,
    "generators": ["ZZI", "IZZ"],
    "logical_x": "XXX",
    "logical_z": "ZZZ",
    "recovery": [
        {"syndrome": "00", "operator": "III"},
        {"syndrome": "10", "operator": "XII"},
        {"syndrome": "11", "operator": "YIY"},
        {"syndrome": "01", "operator": "IIX"}
    ]
}"#;

fn main() -> coding_maps::Result<()> {
    let code = match load_code(&parse_code_spec(SPEC)?)? {
        LoadedCode::Single(code) => code,
        LoadedCode::Recipe { .. } => unreachable!("spec is a stabilizer table"),
    };
    println!("loaded {} on {} qubits", code.name(), code.n());
    println!("coding map with the twisted recovery:");
    for line in diagonal_poly_map(&code).pretty().lines() {
        println!("  {line}");
    }

    // a stabilizer-equivalent substitution (IXI -> ZXZ = ZIZ * IXI) leaves
    // the map untouched
    let equivalent = SPEC.replace("YIY", "ZXZ");
    let code2 = match load_code(&parse_code_spec(&equivalent)?)? {
        LoadedCode::Single(code) => code,
        LoadedCode::Recipe { .. } => unreachable!(),
    };
    let reference = match load_code(&parse_code_spec(&SPEC.replace("YIY", "IXI"))?)? {
        LoadedCode::Single(code) => code,
        LoadedCode::Recipe { .. } => unreachable!(),
    };
    println!(
        "\nstabilizer-equivalent recovery gives the same map: {}",
        diagonal_poly_map(&code2) == diagonal_poly_map(&reference)
    );
    Ok(())
}
