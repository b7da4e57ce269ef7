//! Exact polynomial coding maps on diagonal channels.
//!
//! A [`PolyMap`] holds three polynomials in (x, y, z) with dyadic-rational
//! coefficients, giving the output channel `[x', y', z']`.  Maps compose
//! symbolically (for concatenation) and evaluate numerically.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::channel::DiagonalChannel;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

/// Default cap on terms per polynomial during composition; symbolic degree
/// grows like 9^l for repeated Shor composition, so deep concatenation
/// should use numeric iteration instead.
pub const DEFAULT_TERM_CAP: usize = 20_000;

pub type Exponents = [u8; 3];

/// A sparse polynomial in (x, y, z) with exact dyadic coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Exponents, Dyadic>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Dyadic) -> Self {
        let mut p = Poly::zero();
        p.add_term([0, 0, 0], c);
        p
    }

    /// The bare variable with index 0 = x, 1 = y, 2 = z.
    pub fn variable(var: usize) -> Self {
        let mut e = [0u8; 3];
        e[var] = 1;
        let mut p = Poly::zero();
        p.add_term(e, Dyadic::ONE);
        p
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: Dyadic) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert(Dyadic::ZERO);
        *entry = entry.checked_add(&coeff).expect("polynomial coefficient overflow");
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, exps: Exponents) -> Dyadic {
        self.terms.get(&exps).copied().unwrap_or(Dyadic::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Dyadic)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Which of x, y, z appear with nonzero coefficient.
    pub fn variables_used(&self) -> [bool; 3] {
        let mut used = [false; 3];
        for e in self.terms.keys() {
            for v in 0..3 {
                used[v] |= e[v] > 0;
            }
        }
        used
    }

    pub fn checked_add(&self, other: &Poly, cap: usize) -> Result<Poly> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term_checked(*e, *c)?;
        }
        out.check_cap(cap)?;
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly, cap: usize) -> Result<Poly> {
        let mut out = Poly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let mut e = [0u8; 3];
                for v in 0..3 {
                    e[v] = ea[v]
                        .checked_add(eb[v])
                        .ok_or_else(|| Error::Domain("polynomial degree exceeds 255".into()))?;
                }
                out.add_term_checked(e, ca.checked_mul(cb)?)?;
            }
            out.check_cap(cap)?;
        }
        Ok(out)
    }

    pub fn checked_pow(&self, k: u8, cap: usize) -> Result<Poly> {
        let mut out = Poly::constant(Dyadic::ONE);
        for _ in 0..k {
            out = out.checked_mul(self, cap)?;
        }
        Ok(out)
    }

    fn add_term_checked(&mut self, exps: Exponents, coeff: Dyadic) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(exps).or_insert(Dyadic::ZERO);
        *entry = entry.checked_add(&coeff)?;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
        Ok(())
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.terms.len() > cap {
            return Err(Error::TermCapExceeded { cap });
        }
        Ok(())
    }

    /// Substitute polynomials for the three variables.
    pub fn substitute(&self, subs: &[Poly; 3], cap: usize) -> Result<Poly> {
        // powers computed incrementally per needed exponent
        let mut max_e = [0u8; 3];
        for e in self.terms.keys() {
            for v in 0..3 {
                max_e[v] = max_e[v].max(e[v]);
            }
        }
        let mut powers: [Vec<Poly>; 3] = Default::default();
        for v in 0..3 {
            let mut pows = vec![Poly::constant(Dyadic::ONE)];
            for k in 1..=max_e[v] as usize {
                let next = pows[k - 1].checked_mul(&subs[v], cap)?;
                pows.push(next);
            }
            powers[v] = pows;
        }
        let mut out = Poly::zero();
        for (e, c) in self.terms() {
            let mut term = Poly::constant(*c);
            for v in 0..3 {
                term = term.checked_mul(&powers[v][e[v] as usize], cap)?;
            }
            out = out.checked_add(&term, cap)?;
        }
        Ok(out)
    }

    pub fn eval(&self, x: f64, y: f64, z: f64) -> f64 {
        let mut acc = 0.0;
        for (e, c) in self.terms() {
            acc += c.to_f64() * x.powi(e[0] as i32) * y.powi(e[1] as i32) * z.powi(e[2] as i32);
        }
        acc
    }

    /// Coefficients of the univariate restriction in `var`, ascending
    /// powers; `None` if any other variable appears.
    pub fn univariate_in(&self, var: usize) -> Option<Vec<f64>> {
        let used = self.variables_used();
        for v in 0..3 {
            if v != var && used[v] {
                return None;
            }
        }
        let deg = self.terms.keys().map(|e| e[var] as usize).max().unwrap_or(0);
        let mut coeffs = vec![0.0; deg + 1];
        for (e, c) in self.terms() {
            coeffs[e[var] as usize] += c.to_f64();
        }
        Some(coeffs)
    }

    /// Coefficients of the diagonal restriction `v -> p(v, v, v)`,
    /// ascending powers.
    pub fn diagonal_univariate(&self) -> Vec<f64> {
        let deg = self
            .terms
            .keys()
            .map(|e| e[0] as usize + e[1] as usize + e[2] as usize)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![0.0; deg + 1];
        for (e, c) in self.terms() {
            coeffs[e[0] as usize + e[1] as usize + e[2] as usize] += c.to_f64();
        }
        coeffs
    }

    fn fmt_pretty(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // ascending total degree; within a degree, higher x then z powers
        // first (so x^2 y and y z^2 both print before y^3)
        let mut ordered: Vec<(&Exponents, &Dyadic)> = self.terms.iter().collect();
        ordered.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().map(|&v| v as u32).sum();
            let db: u32 = eb.iter().map(|&v| v as u32).sum();
            da.cmp(&db)
                .then(eb[0].cmp(&ea[0]))
                .then(eb[2].cmp(&ea[2]))
                .then(ea[1].cmp(&eb[1]))
        });
        for (i, (e, c)) in ordered.into_iter().enumerate() {
            let negative = c.num < 0;
            let mag = if negative { c.neg() } else { *c };
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mono = monomial_string(e);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == Dyadic::ONE {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag} {mono}")?;
            }
        }
        Ok(())
    }
}

fn monomial_string(e: &Exponents) -> String {
    let names = ["x", "y", "z"];
    let mut parts = Vec::new();
    for v in 0..3 {
        match e[v] {
            0 => {}
            1 => parts.push(names[v].to_string()),
            k => parts.push(format!("{}^{k}", names[v])),
        }
    }
    parts.join(" ")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_pretty(f)
    }
}

/// A coding map restricted to diagonal channels: exact polynomials for
/// the output x', y', z'.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    pub x: Poly,
    pub y: Poly,
    pub z: Poly,
}

impl PolyMap {
    pub fn identity() -> Self {
        PolyMap { x: Poly::variable(0), y: Poly::variable(1), z: Poly::variable(2) }
    }

    pub fn component(&self, var: usize) -> &Poly {
        match var {
            0 => &self.x,
            1 => &self.y,
            _ => &self.z,
        }
    }

    /// Evaluate at a diagonal channel.
    pub fn eval(&self, c: &DiagonalChannel) -> DiagonalChannel {
        DiagonalChannel::new(
            self.x.eval(c.x, c.y, c.z),
            self.y.eval(c.x, c.y, c.z),
            self.z.eval(c.x, c.y, c.z),
        )
    }

    /// Serialize to the interchange JSON form.
    pub fn to_json(&self) -> PolyMapJson {
        let conv = |p: &Poly| -> Vec<TermJson> {
            p.terms()
                .map(|(e, c)| TermJson { e: *e, num: c.num, log2den: c.log2den })
                .collect()
        };
        PolyMapJson { x: conv(&self.x), y: conv(&self.y), z: conv(&self.z) }
    }

    pub fn from_json(json: &PolyMapJson) -> Self {
        let conv = |terms: &[TermJson]| -> Poly {
            let mut p = Poly::zero();
            for t in terms {
                p.add_term(t.e, Dyadic::new(t.num, t.log2den));
            }
            p
        };
        PolyMap { x: conv(&json.x), y: conv(&json.y), z: conv(&json.z) }
    }

    /// Three-line human-readable form, e.g. `z' = 3/2 z - 1/2 z^3`.
    pub fn pretty(&self) -> String {
        format!("x' = {}\ny' = {}\nz' = {}", self.x, self.y, self.z)
    }
}

/// JSON form: `{"x": [{"e": [3,0,0], "num": 1, "log2den": 0}, ...], ...}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyMapJson {
    pub x: Vec<TermJson>,
    pub y: Vec<TermJson>,
    pub z: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Exponents,
    pub num: i128,
    pub log2den: u32,
}

/// Exact symbolic composition: the map applying `inner` first, then
/// `outer` (the coding map of the concatenated code outer(inner)).
pub fn compose_maps(outer: &PolyMap, inner: &PolyMap) -> Result<PolyMap> {
    compose_maps_with_cap(outer, inner, DEFAULT_TERM_CAP)
}

pub fn compose_maps_with_cap(outer: &PolyMap, inner: &PolyMap, cap: usize) -> Result<PolyMap> {
    let subs = [inner.x.clone(), inner.y.clone(), inner.z.clone()];
    Ok(PolyMap {
        x: outer.x.substitute(&subs, cap)?,
        y: outer.y.substitute(&subs, cap)?,
        z: outer.z.substitute(&subs, cap)?,
    })
}
