//! Exact dyadic rationals: integers divided by a power of two.
//!
//! Every coefficient produced by the stabilizer expansions has a
//! power-of-two denominator, and dyadics are closed under the ring
//! operations used in polynomial composition, so coefficient equality can
//! be asserted exactly.  Numerators are i128 with checked arithmetic;
//! overflow surfaces as [`Error::CoefficientOverflow`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `num / 2^log2den`, normalized so `num` is odd or the value is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dyadic {
    pub num: i128,
    pub log2den: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, log2den: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, log2den: 0 };

    pub fn new(num: i128, log2den: u32) -> Self {
        Dyadic { num, log2den }.normalized()
    }

    pub fn from_int(n: i128) -> Self {
        Dyadic { num: n, log2den: 0 }
    }

    fn normalized(mut self) -> Self {
        if self.num == 0 {
            self.log2den = 0;
            return self;
        }
        while self.num % 2 == 0 && self.log2den > 0 {
            self.num /= 2;
            self.log2den -= 1;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn checked_add(&self, other: &Dyadic) -> Result<Dyadic> {
        let k = self.log2den.max(other.log2den);
        let a = shift(self.num, k - self.log2den)?;
        let b = shift(other.num, k - other.log2den)?;
        let num = a.checked_add(b).ok_or(Error::CoefficientOverflow)?;
        Ok(Dyadic { num, log2den: k }.normalized())
    }

    pub fn checked_mul(&self, other: &Dyadic) -> Result<Dyadic> {
        let num = self
            .num
            .checked_mul(other.num)
            .ok_or(Error::CoefficientOverflow)?;
        let log2den = self
            .log2den
            .checked_add(other.log2den)
            .ok_or(Error::CoefficientOverflow)?;
        Ok(Dyadic { num, log2den }.normalized())
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { num: -self.num, log2den: self.log2den }
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / (self.log2den as f64).exp2()
    }
}

fn shift(num: i128, bits: u32) -> Result<i128> {
    num.checked_shl(bits)
        .filter(|v| v >> bits == num)
        .ok_or(Error::CoefficientOverflow)
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        // compare a/2^j vs b/2^k via a*2^k vs b*2^j; fall back to floats
        // only on (unrealistic) overflow
        let k = self.log2den.max(other.log2den);
        match (
            shift(self.num, k - self.log2den),
            shift(other.num, k - other.log2den),
        ) {
            (Ok(a), Ok(b)) => a.cmp(&b),
            _ => self.to_f64().partial_cmp(&other.to_f64()).unwrap(),
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u128 << self.log2den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(Dyadic::new(4, 3), Dyadic { num: 1, log2den: 1 });
        assert_eq!(Dyadic::new(0, 7), Dyadic::ZERO);
        assert_eq!(Dyadic::new(-6, 1), Dyadic { num: -3, log2den: 0 });
    }

    #[test]
    fn ring_ops() {
        let a = Dyadic::new(3, 1); // 3/2
        let b = Dyadic::new(-1, 1); // -1/2
        assert_eq!(a.checked_add(&b).unwrap(), Dyadic::ONE);
        assert_eq!(a.checked_mul(&b).unwrap(), Dyadic::new(-3, 2));
        assert_eq!(a.to_f64(), 1.5);
    }

    #[test]
    fn display() {
        assert_eq!(Dyadic::new(3, 1).to_string(), "3/2");
        assert_eq!(Dyadic::new(-1, 2).to_string(), "-1/4");
        assert_eq!(Dyadic::from_int(2).to_string(), "2");
    }
}
