//! Discrete-dynamics analysis of coding maps: iteration, 1-D fixed points
//! with stability, storage thresholds (including the period-2 limit-cycle
//! case), depolarizing-curve sweeps, and the leading-order threshold
//! estimate for comparison.

use std::fmt::Write as _;

use serde::Serialize;

use crate::channel::{depolarizing, DiagonalChannel};
use crate::error::{Error, Result};
use crate::polymap::PolyMap;

/// Residual tolerance for reported fixed points.
pub const FIXED_POINT_TOL: f64 = 1e-12;
/// Window around |derivative| = 1 reported as marginal.
pub const MARGINAL_TOL: f64 = 1e-9;
/// Cells for sign-change bracketing on [0, 1].
const GRID_CELLS: usize = 10_000;

/// Escape-iteration parameters for the generic bisection fallback.
const MAX_ITERATIONS: usize = 100_000;
const SURVIVE_LEVEL: f64 = 1.0 - 1e-9;
const DEATH_LEVEL: f64 = 1e-9;
const BISECTION_WIDTH: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stability {
    Attracting,
    Repelling,
    Marginal,
}

/// A fixed point of a one-dimensional polynomial map on [0, 1].
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FixedPoint {
    pub value: f64,
    pub stability: Stability,
    pub derivative_magnitude: f64,
}

/// Evaluate a univariate polynomial given ascending coefficients.
pub fn poly_eval(coeffs: &[f64], v: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * v + c)
}

fn poly_deriv(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| k as f64 * c)
        .collect()
}

/// Substitute `inner` into `outer` (univariate composition).
pub fn compose_univariate(outer: &[f64], inner: &[f64]) -> Vec<f64> {
    let mut result = vec![0.0];
    for &c in outer.iter().rev() {
        result = mul_univariate(&result, inner);
        if result.is_empty() {
            result = vec![0.0];
        }
        result[0] += c;
    }
    result
}

fn mul_univariate(a: &[f64], b: &[f64]) -> Vec<f64> {
    if a.iter().all(|&c| c == 0.0) || b.iter().all(|&c| c == 0.0) {
        return vec![0.0];
    }
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

/// All fixed points of `v -> poly(v)` in [0, 1], found by sign-change
/// bracketing on a fine grid plus bisection; stability is classified from
/// the derivative magnitude at the root.
pub fn fixed_points_1d(coeffs: &[f64]) -> Vec<FixedPoint> {
    let g = |v: f64| poly_eval(coeffs, v) - v;
    let deriv = poly_deriv(coeffs);
    let mut roots: Vec<f64> = Vec::new();
    let push = |roots: &mut Vec<f64>, v: f64| {
        if roots.iter().all(|&r| (r - v).abs() > 1e-9) {
            roots.push(v);
        }
    };
    for endpoint in [0.0, 1.0] {
        if g(endpoint).abs() <= FIXED_POINT_TOL {
            push(&mut roots, endpoint);
        }
    }
    let h = 1.0 / GRID_CELLS as f64;
    for cell in 0..GRID_CELLS {
        let (a, b) = (cell as f64 * h, (cell + 1) as f64 * h);
        let (ga, gb) = (g(a), g(b));
        if ga.abs() <= FIXED_POINT_TOL {
            push(&mut roots, a);
            continue;
        }
        if ga * gb < 0.0 {
            push(&mut roots, bisect(&g, a, b));
        }
    }
    if g(1.0).abs() <= FIXED_POINT_TOL {
        push(&mut roots, 1.0);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
        .into_iter()
        .map(|value| {
            let d = poly_eval(&deriv, value).abs();
            let stability = if (d - 1.0).abs() <= MARGINAL_TOL {
                Stability::Marginal
            } else if d < 1.0 {
                Stability::Attracting
            } else {
                Stability::Repelling
            };
            FixedPoint { value, stability, derivative_magnitude: d }
        })
        .collect()
}

fn bisect(g: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut ga = g(a);
    for _ in 0..100 {
        let mid = 0.5 * (a + b);
        let gm = g(mid);
        if gm == 0.0 || (b - a) < 1e-16 {
            return mid;
        }
        if ga * gm < 0.0 {
            b = mid;
        } else {
            a = mid;
            ga = gm;
        }
    }
    0.5 * (a + b)
}

/// Apply `m` to the channel `levels` times.
pub fn iterate_map(m: &PolyMap, c: &DiagonalChannel, levels: usize) -> DiagonalChannel {
    let mut out = *c;
    for _ in 0..levels {
        out = m.eval(&out);
    }
    out
}

/// Per-axis fixed points and critical times for a coding map.
#[derive(Debug, Clone, Serialize)]
pub struct ThresholdReport {
    /// Filled in by callers that know the code's name.
    pub code: Option<String>,
    /// Cycle length used for the axis analysis (1 or 2).
    pub period: u32,
    pub t_star: AxisTimes,
    pub t_th: f64,
    pub p_th: f64,
    pub fixed_points: Vec<AxisFixedPoint>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct AxisTimes {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxisFixedPoint {
    pub axis: char,
    #[serde(flatten)]
    pub point: FixedPoint,
}

fn probability_from_time(t: f64) -> f64 {
    0.75 * (1.0 - (-t).exp())
}

/// Storage threshold of a coding map under the symmetric depolarizing
/// channel.
///
/// Detects the map's structure syntactically: decoupled x/z axes
/// (Shor/Steane form), crossed axes analyzed through the period-2
/// composed maps (Shor' form), a fully symmetric map analyzed on the
/// diagonal (five-bit form), or a generic bisection fallback over the
/// iterated 3-D map.  Critical times are `t_sigma = -ln v*` at the
/// largest interior repelling fixed point, with `t_Y = min(t_X, t_Z)`,
/// and `p_th = 3/4 (1 - e^{-t_th})`.
pub fn storage_threshold(m: &PolyMap) -> Result<ThresholdReport> {
    if let (Some(px), Some(pz)) = (m.x.univariate_in(0), m.z.univariate_in(2)) {
        let (tx, fx) = axis_threshold('x', &px)?;
        let (tz, fz) = axis_threshold('z', &pz)?;
        return Ok(assemble_report(1, tx, tz, [fx, fz].concat()));
    }
    if let (Some(r), Some(p)) = (m.x.univariate_in(2), m.z.univariate_in(0)) {
        // x' depends only on z and z' only on x: analyze the period-2
        // composed maps x -> R(P(x)) and z -> P(R(z))
        let (tx, fx) = axis_threshold('x', &compose_univariate(&r, &p))?;
        let (tz, fz) = axis_threshold('z', &compose_univariate(&p, &r))?;
        return Ok(assemble_report(2, tx, tz, [fx, fz].concat()));
    }
    let dx = m.x.diagonal_univariate();
    if dx == m.y.diagonal_univariate() && dx == m.z.diagonal_univariate() {
        let (t, f) = axis_threshold('x', &dx)?;
        let mut fixed_points = f.clone();
        for fp in &f {
            for axis in ['y', 'z'] {
                fixed_points.push(AxisFixedPoint { axis, point: fp.point });
            }
        }
        return Ok(assemble_report(1, t, t, fixed_points));
    }
    storage_threshold_bisection(m)
}

fn axis_threshold(axis: char, coeffs: &[f64]) -> Result<(f64, Vec<AxisFixedPoint>)> {
    let points = fixed_points_1d(coeffs);
    let interior_repelling = points
        .iter()
        .filter(|p| p.value > 1e-9 && p.value < 1.0 - 1e-9 && p.stability == Stability::Repelling)
        .map(|p| p.value)
        .fold(f64::NAN, f64::max);
    let fixed_points = points
        .iter()
        .map(|&point| AxisFixedPoint { axis, point })
        .collect();
    if interior_repelling.is_nan() {
        return Err(Error::NoThreshold(format!(
            "axis {axis}: no interior repelling fixed point in (0, 1)"
        )));
    }
    Ok((-interior_repelling.ln(), fixed_points))
}

fn assemble_report(
    period: u32,
    t_x: f64,
    t_z: f64,
    fixed_points: Vec<AxisFixedPoint>,
) -> ThresholdReport {
    let t_y = t_x.min(t_z);
    let t_th = t_y;
    ThresholdReport {
        code: None,
        period,
        t_star: AxisTimes { x: t_x, y: t_y, z: t_z },
        t_th,
        p_th: probability_from_time(t_th),
        fixed_points,
    }
}

/// Generic fallback: per-axis bisection over gamma_t on the iterated 3-D
/// map with escape thresholds, examining even iterates so period-2 limit
/// cycles classify consistently.
pub fn storage_threshold_bisection(m: &PolyMap) -> Result<ThresholdReport> {
    let survives = |t: f64| -> [bool; 3] {
        let mut c = depolarizing(t).expect("non-negative time");
        let mut verdict = [None::<bool>; 3];
        let mut iters = 0;
        while iters < MAX_ITERATIONS && verdict.iter().any(Option::is_none) {
            // two steps per round: classify on even iterates
            c = m.eval(&m.eval(&c));
            iters += 2;
            for (slot, v) in verdict.iter_mut().zip([c.x, c.y, c.z]) {
                if slot.is_none() {
                    if v > SURVIVE_LEVEL {
                        *slot = Some(true);
                    } else if v.abs() < DEATH_LEVEL {
                        *slot = Some(false);
                    }
                }
            }
        }
        verdict.map(|v| v.unwrap_or(false))
    };
    let mut t_star = [0.0f64; 3];
    for axis in 0..3 {
        let (lo, hi) = (1e-9, 20.0);
        if !survives(lo)[axis] {
            return Err(Error::NoThreshold(format!(
                "axis {}: information is lost at arbitrarily weak noise",
                ['x', 'y', 'z'][axis]
            )));
        }
        if survives(hi)[axis] {
            return Err(Error::NoThreshold(format!(
                "axis {}: no loss detected up to gamma_t = {hi}",
                ['x', 'y', 'z'][axis]
            )));
        }
        let (mut lo, mut hi) = (lo, hi);
        while hi - lo > BISECTION_WIDTH {
            let mid = 0.5 * (lo + hi);
            if survives(mid)[axis] {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        t_star[axis] = 0.5 * (lo + hi);
    }
    let t_th = t_star.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(ThresholdReport {
        code: None,
        period: 1,
        t_star: AxisTimes { x: t_star[0], y: t_star[1], z: t_star[2] },
        t_th,
        p_th: probability_from_time(t_th),
        fixed_points: Vec::new(),
    })
}

/// Leading-order threshold estimate from a correctable-error probability
/// polynomial in p (ascending coefficients, constant term 1).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LeadingOrderEstimate {
    /// Solution of the truncated 1 - c p^2 = 1 - p, i.e. 1/c.
    pub estimate: f64,
    /// Crossing of the full polynomial with 1 - p on (0, 1), if any.
    pub exact_crossing: Option<f64>,
}

pub fn leading_order_threshold(correctable_prob: &[f64]) -> Result<LeadingOrderEstimate> {
    if correctable_prob.first().map(|&c0| (c0 - 1.0).abs() > 1e-12).unwrap_or(true) {
        return Err(Error::Domain(
            "correctable-error polynomial must have constant term 1".into(),
        ));
    }
    let c = -correctable_prob.get(2).copied().unwrap_or(0.0);
    if c <= 0.0 {
        return Err(Error::Domain(format!(
            "no leading-order estimate: p^2 coefficient is {}",
            -c
        )));
    }
    // crossing of correctable_prob(p) with 1 - p
    let g = |p: f64| poly_eval(correctable_prob, p) - (1.0 - p);
    let h = 1.0 / GRID_CELLS as f64;
    let mut exact_crossing = None;
    for cell in 0..GRID_CELLS {
        let (a, b) = ((cell as f64) * h, (cell + 1) as f64 * h);
        if a > 0.0 && g(a) == 0.0 {
            exact_crossing = Some(a);
            break;
        }
        if g(a) * g(b) < 0.0 {
            exact_crossing = Some(bisect(&g, a, b));
            break;
        }
    }
    Ok(LeadingOrderEstimate { estimate: 1.0 / c, exact_crossing })
}

/// Rows of a depolarizing sweep: the channel after `level` applications
/// of the map, per grid time.
#[derive(Debug, Clone, Serialize)]
pub struct CurveRow {
    pub gamma_t: f64,
    pub level: usize,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveTable {
    pub rows: Vec<CurveRow>,
}

impl CurveTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("gamma_t,level,x,y,z\n");
        for r in &self.rows {
            writeln!(out, "{},{},{},{},{}", r.gamma_t, r.level, r.x, r.y, r.z).unwrap();
        }
        out
    }
}

/// Sweep the map over a depolarizing-time grid at the given levels.
pub fn depolarizing_curves(m: &PolyMap, t_grid: &[f64], levels: &[usize]) -> Result<CurveTable> {
    let mut rows = Vec::with_capacity(t_grid.len() * levels.len());
    for &t in t_grid {
        let base = depolarizing(t)?;
        for &level in levels {
            let c = iterate_map(m, &base, level);
            rows.push(CurveRow { gamma_t: t, level, x: c.x, y: c.y, z: c.z });
        }
    }
    Ok(CurveTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::coding_map::diagonal_poly_map;
    use crate::polymap::compose_maps;

    fn shor_map() -> PolyMap {
        let bf = diagonal_poly_map(&catalog::builtin("bitflip").unwrap());
        let pf = diagonal_poly_map(&catalog::builtin("phaseflip").unwrap());
        compose_maps(&pf, &bf).unwrap()
    }

    #[test]
    fn cubing_map_fixed_points() {
        let fps = fixed_points_1d(&[0.0, 0.0, 0.0, 1.0]);
        assert_eq!(fps.len(), 2);
        assert_eq!(fps[0].value, 0.0);
        assert_eq!(fps[0].stability, Stability::Attracting);
        assert_eq!(fps[1].value, 1.0);
        assert_eq!(fps[1].stability, Stability::Repelling);
        assert!((fps[1].derivative_magnitude - 3.0).abs() < 1e-12);
    }

    #[test]
    fn shor_z_axis_fixed_points() {
        let m = shor_map();
        let fps = fixed_points_1d(&m.z.univariate_in(2).unwrap());
        assert_eq!(fps.len(), 3);
        assert_eq!(fps[0].stability, Stability::Attracting);
        assert!((fps[1].value - 0.7297).abs() < 1e-4);
        assert_eq!(fps[1].stability, Stability::Repelling);
        assert_eq!(fps[2].value, 1.0);
        assert_eq!(fps[2].stability, Stability::Attracting);
    }

    #[test]
    fn shor_x_axis_fixed_point() {
        let m = shor_map();
        let fps = fixed_points_1d(&m.x.univariate_in(0).unwrap());
        let interior: Vec<_> = fps
            .iter()
            .filter(|p| p.value > 1e-9 && p.value < 1.0 - 1e-9)
            .collect();
        assert_eq!(interior.len(), 1);
        assert!((interior[0].value - 0.9003).abs() < 1e-4);
        assert_eq!(interior[0].stability, Stability::Repelling);
    }

    #[test]
    fn iterate_map_limits() {
        let m = shor_map();
        let c = depolarizing(0.05).unwrap();
        assert_eq!(iterate_map(&m, &c, 0), c);
        let out = iterate_map(&m, &c, 50);
        assert!(out.x > 1.0 - 1e-6 && out.y > 1.0 - 1e-6 && out.z > 1.0 - 1e-6);

        // between t_X* and t_Z*: x and y die, z survives
        let out = iterate_map(&m, &depolarizing(0.2).unwrap(), 50);
        assert!(out.x < 1e-6 && out.y.abs() < 1e-6 && out.z > 1.0 - 1e-6);
    }

    #[test]
    fn shor_threshold_report() {
        let report = storage_threshold(&shor_map()).unwrap();
        assert_eq!(report.period, 1);
        assert!((report.t_star.x - 0.1050).abs() < 1e-4);
        assert!((report.t_star.y - 0.1050).abs() < 1e-4);
        assert!((report.t_star.z - 0.3151).abs() < 1e-4);
        assert!((report.p_th - 0.0748).abs() < 1e-4);
        assert!((report.p_th - probability_from_time(report.t_th)).abs() < 1e-12);
    }

    #[test]
    fn five_bit_interior_point_is_analytic() {
        let m = diagonal_poly_map(&catalog::builtin("five_bit").unwrap());
        let report = storage_threshold(&m).unwrap();
        let v_star = (-report.t_th).exp();
        assert!((v_star - (2.0f64 / 3.0).sqrt()).abs() < 1e-10);
    }

    #[test]
    fn identity_map_has_no_threshold() {
        let err = storage_threshold(&PolyMap::identity()).unwrap_err();
        assert!(matches!(err, Error::NoThreshold(_)), "{err}");
    }

    #[test]
    fn leading_order_examples() {
        // five-bit: (1-p)^5 + 5 p (1-p)^4 = 1 - 10 p^2 + 20 p^3 - 15 p^4 + 4 p^5
        let est = leading_order_threshold(&[1.0, 0.0, -10.0, 20.0, -15.0, 4.0]).unwrap();
        assert!((est.estimate - 0.1).abs() < 1e-12);
        assert!(est.exact_crossing.unwrap() > 0.1);

        let est = leading_order_threshold(&[1.0, 0.0, -49.0 / 3.0]).unwrap();
        assert!((est.estimate - 0.0612).abs() < 1e-4);

        let est = leading_order_threshold(&[1.0, 0.0, -16.0]).unwrap();
        assert!((est.estimate - 0.0625).abs() < 1e-12);

        assert!(leading_order_threshold(&[1.0, 0.0, 2.0]).is_err());
    }

    #[test]
    fn curve_table_level_zero_rows() {
        let m = shor_map();
        let table = depolarizing_curves(&m, &[0.1, 0.2], &[0, 1]).unwrap();
        assert_eq!(table.rows.len(), 4);
        let r0 = &table.rows[0];
        assert_eq!(r0.level, 0);
        assert!((r0.x - (-0.1f64).exp()).abs() < 1e-15);
        assert!(table.to_csv().starts_with("gamma_t,level,x,y,z\n"));
    }

    #[test]
    fn bitflip_suppresses_z_and_increases_x() {
        let m = diagonal_poly_map(&catalog::builtin("bitflip").unwrap());
        for &t in &[0.05, 0.2, 0.5, 1.0] {
            let e = (-t as f64).exp();
            let out = m.eval(&depolarizing(t).unwrap());
            assert!(out.z > e);
            assert!(out.x < e);
        }
    }
}
