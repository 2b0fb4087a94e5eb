//! Isoperimetric extremals for polygons with one edge constrained to length
//! at least 1: the optimal polygon is inscribed in a circle, with `N - 1`
//! free edges of equal length `t` and one edge of length `max(1, t)`.

use crate::arc::solve_monotone;
use crate::bounds::penalty;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InscribedError {
    #[error("no inscribed polygon closes for N={n}, r={r}")]
    Infeasible { n: u32, r: f64 },
    #[error("need N >= 3, got {0}")]
    TooFewEdges(u32),
}

/// Solved inscribed polygon: `N - 1` chords of length `t` plus one of length
/// `max(1, t)`, all on the circle of radius `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InscribedPolygon {
    pub n: u32,
    pub r: f64,
    /// Free edge length.
    pub t: f64,
    /// Triangle-fan area about the circle center.
    pub area: f64,
    /// Area shortfall `0.996 - area`.
    pub x: f64,
}

impl InscribedPolygon {
    pub fn perimeter(&self) -> f64 {
        self.t.max(1.0) + (self.n as f64 - 1.0) * self.t
    }
}

/// Central angles must close up: `(N-1) 2 asin(t/2r) + 2 asin(max(1,t)/2r) = 2 pi`.
fn closure_gap(n: u32, r: f64, t: f64) -> f64 {
    let free = 2.0 * (t / (2.0 * r)).min(1.0).asin();
    let fixed = 2.0 * (t.max(1.0) / (2.0 * r)).min(1.0).asin();
    (n as f64 - 1.0) * free + fixed - 2.0 * PI
}

/// Solve the inscribed polygon for the given radius.
pub fn inscribed_polygon(n: u32, r: f64) -> Result<InscribedPolygon, InscribedError> {
    if n < 3 {
        return Err(InscribedError::TooFewEdges(n));
    }
    if 2.0 * r < 1.0 {
        // The constrained edge cannot fit on the circle at all.
        return Err(InscribedError::Infeasible { n, r });
    }
    if closure_gap(n, r, 2.0 * r) < 0.0 {
        return Err(InscribedError::Infeasible { n, r });
    }
    let t = solve_monotone(|t| closure_gap(n, r, t), 0.0, 2.0 * r, 1e-13);
    if !(t > 0.0) {
        return Err(InscribedError::Infeasible { n, r });
    }
    let half_free = (t / (2.0 * r)).min(1.0).asin();
    let half_fixed = (t.max(1.0) / (2.0 * r)).min(1.0).asin();
    let area = r * r / 2.0
        * ((n as f64 - 1.0) * (2.0 * half_free).sin() + (2.0 * half_fixed).sin());
    Ok(InscribedPolygon {
        n,
        r,
        t,
        area,
        x: 0.996 - area,
    })
}

/// Interval lower bound `g_N(a, b)` for the long-chord deficit on `r in [a, b]`:
/// perimeter at the small radius plus the penalty at the large radius's area.
/// Both `t` and the area increase with `r`, so this bounds the true margin
/// from below on the whole interval.
pub fn long_chord_margin(n: u32, a: f64, b: f64) -> Result<f64, InscribedError> {
    debug_assert!(a <= b);
    let at_a = inscribed_polygon(n, a)?;
    let at_b = inscribed_polygon(n, b)?;
    Ok(at_a.perimeter() + penalty(n, 1.0, at_b.x))
}
