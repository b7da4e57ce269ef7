//! Pauli-basis expansions of register operators with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::dyadic::Dyadic;
use crate::pauli::PauliString;

/// A sum of Pauli-string monomials with exact dyadic coefficients.
///
/// Zero coefficients are never stored; all monomials share one length.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PauliExpansion {
    terms: BTreeMap<PauliString, Dyadic>,
}

impl PauliExpansion {
    pub fn new() -> Self {
        PauliExpansion { terms: BTreeMap::new() }
    }

    /// Add `coeff * monomial`, merging with an existing term.
    pub fn add(&mut self, monomial: PauliString, coeff: Dyadic) {
        if coeff.is_zero() {
            return;
        }
        if let Some(first) = self.terms.keys().next() {
            assert_eq!(first.n(), monomial.n(), "mixed monomial lengths");
        }
        let entry = self.terms.entry(monomial).or_insert(Dyadic::ZERO);
        *entry = entry.checked_add(&coeff).expect("expansion coefficient overflow");
        if entry.is_zero() {
            self.terms.remove(&monomial);
        }
    }

    pub fn coeff(&self, monomial: &PauliString) -> Dyadic {
        self.terms.get(monomial).copied().unwrap_or(Dyadic::ZERO)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PauliString, &Dyadic)> {
        self.terms.iter()
    }
}

impl fmt::Display for PauliExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mono, coeff)) in self.terms.iter().enumerate() {
            if i == 0 {
                if coeff.num < 0 {
                    write!(f, "-{} {}", coeff.neg(), mono)?;
                } else {
                    write!(f, "{coeff} {mono}")?;
                }
            } else if coeff.num < 0 {
                write!(f, " - {} {}", coeff.neg(), mono)?;
            } else {
                write!(f, " + {coeff} {mono}")?;
            }
        }
        Ok(())
    }
}
