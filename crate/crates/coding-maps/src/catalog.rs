//! Built-in code catalog: bitflip, phaseflip, phaseflip', Steane and
//! five-bit as stabilizer tables; Shor and Shor' as concatenation recipes
//! phaseflip(bitflip) and phaseflip'(bitflip), whose two-stage block
//! decoder is exactly what map composition reproduces.

use crate::code::{RecoveryPolicy, StabilizerCode};
use crate::error::{Error, Result};
use crate::pauli::parse_pauli;

pub const CATALOG_NAMES: [&str; 7] = [
    "bitflip",
    "phaseflip",
    "phaseflip_prime",
    "shor",
    "shor_prime",
    "steane",
    "five_bit",
];

/// A catalog entry: a single stabilizer code or a recipe (outermost
/// component first).
#[derive(Debug)]
pub enum CatalogEntry {
    Code(StabilizerCode),
    Recipe(Vec<&'static str>),
}

/// Look up a catalog entry by name.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    match name {
        "bitflip" | "phaseflip" | "phaseflip_prime" | "steane" | "five_bit" => {
            Ok(CatalogEntry::Code(builtin(name)?))
        }
        "shor" => Ok(CatalogEntry::Recipe(vec!["phaseflip", "bitflip"])),
        "shor_prime" => Ok(CatalogEntry::Recipe(vec!["phaseflip_prime", "bitflip"])),
        _ => Err(Error::UnknownCode(name.to_string(), CATALOG_NAMES.join(", "))),
    }
}

/// Resolve a catalog name to a concatenation stack, outermost component
/// first; single codes come back as a one-element stack.
pub fn resolve(name: &str) -> Result<Vec<StabilizerCode>> {
    match lookup(name)? {
        CatalogEntry::Code(code) => Ok(vec![code]),
        CatalogEntry::Recipe(parts) => parts.into_iter().map(builtin).collect(),
    }
}

/// Build one of the non-composite catalog codes.
///
/// Logical-operator signs are fixed so the Pauli expansions match the
/// standard references (e.g. the bitflip code has logical Y = -YYY).
pub fn builtin(name: &str) -> Result<StabilizerCode> {
    let (gens, lx, lz): (&[&str], &str, &str) = match name {
        "bitflip" => (&["ZZI", "IZZ"], "XXX", "ZZZ"),
        "phaseflip" => (&["XXI", "IXX"], "XXX", "ZZZ"),
        "phaseflip_prime" => (&["XXI", "IXX"], "ZZZ", "XXX"),
        "steane" => (
            &["IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"],
            "XXXXXXX",
            "ZZZZZZZ",
        ),
        "five_bit" => (&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"], "XXXXX", "ZZZZZ"),
        _ => {
            return Err(Error::UnknownCode(
                name.to_string(),
                "bitflip, phaseflip, phaseflip_prime, steane, five_bit".to_string(),
            ))
        }
    };
    let gens = gens
        .iter()
        .map(|g| parse_pauli(g))
        .collect::<Result<Vec<_>>>()?;
    StabilizerCode::new(name, gens, parse_pauli(lx)?, parse_pauli(lz)?, RecoveryPolicy::MinWeight)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_names_resolve() {
        for name in CATALOG_NAMES {
            assert!(lookup(name).is_ok(), "{name}");
        }
        assert!(lookup("nonesuch").is_err());
    }

    #[test]
    fn builtin_codes_validate() {
        for name in ["bitflip", "phaseflip", "phaseflip_prime", "steane", "five_bit"] {
            let code = builtin(name).unwrap();
            assert_eq!(code.group().len(), 1 << (code.n() - 1), "{name}");
        }
    }
}
