//! Circular-arc geometry over straight chords.
//!
//! Every region boundary decomposes into chords, each decorated with the
//! signed area between the boundary arc and the chord (its "bulge"). The
//! kernel below answers one question in several forms: how long is a circular
//! arc that encloses a given area over a given chord?
//!
//! The parametrization is the half-angle `theta` subtended by the arc at its
//! circle's center (so `theta = pi/2` is a semicircle). For a chord of length
//! `l` and bulge `x`, `4x/l^2 = p(theta)` and the arc length is `l * q(theta)`
//! with the shape functions
//!
//! ```text
//! p(t) = (t - sin t cos t) / sin^2 t        q(t) = t / sin t
//! ```

use std::f64::consts::PI;
use thiserror::Error;

/// Half-angles are capped just below a full circle.
pub const THETA_MAX: f64 = PI - 1e-9;

/// Absolute tolerance on solved half-angles.
pub const THETA_TOL: f64 = 1e-12;

/// Below this, p and q are evaluated by series to avoid cancellation in
/// `t - sin t cos t`.
const SERIES_CROSSOVER: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ArcError {
    #[error("theta = {0} outside [0, pi)")]
    ThetaOutOfRange(f64),
    #[error("shape value {0} is negative")]
    NegativeShape(f64),
    #[error("negative chord length {0}")]
    NegativeChord(f64),
    #[error("negative area target {0}")]
    NegativeArea(f64),
    #[error("no equal-curvature configuration: {0}")]
    Infeasible(String),
}

/// Half-angle of an arc over its chord, in radians, within `[0, pi)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BulgeAngle(f64);

impl BulgeAngle {
    pub fn new(theta: f64) -> Result<Self, ArcError> {
        if !(0.0..PI).contains(&theta) {
            return Err(ArcError::ThetaOutOfRange(theta));
        }
        Ok(BulgeAngle(theta))
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// A chord plus the signed bulge area carried by the arc over it.
///
/// `chord = 0` with nonzero bulge denotes a full circle of area `|bulge|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordArc {
    pub chord: f64,
    pub bulge: f64,
}

impl ChordArc {
    pub fn new(chord: f64, bulge: f64) -> Result<Self, ArcError> {
        if chord < 0.0 {
            return Err(ArcError::NegativeChord(chord));
        }
        Ok(ChordArc { chord, bulge })
    }

    /// Length of the arc realizing this chord/bulge pair.
    pub fn arc_len(&self) -> f64 {
        arc_length(self.chord, self.bulge)
    }

    /// Half-angle of the arc; `None` for zero-bulge edges (straight segment).
    pub fn theta(&self) -> Option<BulgeAngle> {
        if self.bulge == 0.0 || self.chord == 0.0 {
            return None;
        }
        let c = 4.0 * self.bulge.abs() / (self.chord * self.chord);
        solve_bulge_angle(c).ok()
    }

    /// Curvature radius `chord / (2 sin theta)`; `None` for straight edges.
    pub fn curvature_radius(&self) -> Option<f64> {
        self.theta().map(|t| self.chord / (2.0 * t.radians().sin()))
    }
}

fn p_raw(theta: f64) -> f64 {
    if theta < SERIES_CROSSOVER {
        let t2 = theta * theta;
        return theta * (2.0 / 3.0 + t2 * (4.0 / 45.0 + t2 * (4.0 / 315.0)));
    }
    let s = theta.sin();
    (theta - s * theta.cos()) / (s * s)
}

fn q_raw(theta: f64) -> f64 {
    if theta < SERIES_CROSSOVER {
        let t2 = theta * theta;
        return 1.0 + t2 * (1.0 / 6.0 + t2 * (7.0 / 360.0));
    }
    theta / theta.sin()
}

/// Bulge shape `p(t) = (t - sin t cos t)/sin^2 t`, the bulge area of an arc
/// over a unit chord scaled by 4. Strictly increasing from 0 on `[0, pi)`.
pub fn shape_p(theta: f64) -> Result<f64, ArcError> {
    if !(0.0..PI).contains(&theta) {
        return Err(ArcError::ThetaOutOfRange(theta));
    }
    Ok(p_raw(theta))
}

/// Length shape `q(t) = t/sin t`, the arc-to-chord length ratio.
pub fn shape_q(theta: f64) -> Result<f64, ArcError> {
    if !(0.0..PI).contains(&theta) {
        return Err(ArcError::ThetaOutOfRange(theta));
    }
    Ok(q_raw(theta))
}

/// Derivative `p'(t) = 2 (1 - p(t) cot t)`, used to polish roots.
fn p_deriv(theta: f64) -> f64 {
    if theta < SERIES_CROSSOVER {
        let t2 = theta * theta;
        return 2.0 / 3.0 + t2 * (4.0 / 15.0 + t2 * (4.0 / 63.0));
    }
    2.0 * (1.0 - p_raw(theta) * theta.cos() / theta.sin())
}

/// Bracketed hybrid root finder for a strictly increasing function.
///
/// Takes a secant step when it stays well inside the bracket, otherwise
/// bisects; the bracket shrinks every iteration.
pub fn solve_monotone<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo >= 0.0 {
        return lo;
    }
    if fhi <= 0.0 {
        return hi;
    }
    let mut fhi = fhi;
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let secant = if fhi > flo {
            lo - flo * (hi - lo) / (fhi - flo)
        } else {
            mid
        };
        // Accept the secant point only if it is strictly interior.
        let cand = if secant > lo + 0.1 * tol && secant < hi - 0.1 * tol {
            secant
        } else {
            mid
        };
        let fc = f(cand);
        if fc < 0.0 {
            lo = cand;
            flo = fc;
        } else {
            hi = cand;
            fhi = fc;
        }
        // Bisect as well when the secant made little progress.
        if hi - lo > tol {
            let m = 0.5 * (lo + hi);
            let fm = f(m);
            if fm < 0.0 {
                lo = m;
                flo = fm;
            } else {
                hi = m;
                fhi = fm;
            }
        }
    }
    0.5 * (lo + hi)
}

/// Inverse of `p`: the half-angle whose shape value is `c >= 0`.
pub fn solve_bulge_angle(c: f64) -> Result<BulgeAngle, ArcError> {
    if c < 0.0 {
        return Err(ArcError::NegativeShape(c));
    }
    if c == 0.0 {
        return BulgeAngle::new(0.0);
    }
    if p_raw(THETA_MAX) < c {
        return Err(ArcError::Infeasible(format!(
            "bulge shape {c} exceeds a full circle"
        )));
    }
    let mut theta = solve_monotone(|t| p_raw(t) - c, 0.0, THETA_MAX, 1e-10);
    // Newton polish toward machine precision; p' is available in closed form.
    for _ in 0..3 {
        let d = p_deriv(theta);
        if d <= 0.0 {
            break;
        }
        let next = theta - (p_raw(theta) - c) / d;
        if next.is_finite() && next > 0.0 && next < PI {
            theta = next;
        }
    }
    BulgeAngle::new(theta.clamp(0.0, THETA_MAX))
}

/// Length of the circular arc over a chord of length `chord` enclosing area
/// `|x|` against it. `arc(l, 0) = l`; `arc(0, x) = 2 sqrt(pi |x|)` (a full
/// circle). Always at least `chord`.
pub fn arc_length(chord: f64, x: f64) -> f64 {
    assert!(chord >= 0.0, "arc_length: negative chord {chord}");
    let x = x.abs();
    if chord == 0.0 {
        return 2.0 * (PI * x).sqrt();
    }
    if x == 0.0 {
        return chord;
    }
    let c = 4.0 * x / (chord * chord);
    let theta = solve_bulge_angle(c)
        .unwrap_or_else(|e| panic!("arc_length({chord}, {x}): {e}"))
        .radians();
    chord * q_raw(theta)
}

/// Length of the shortest curve enclosing `|x|` against a straight line:
/// a semicircle, of length `sqrt(2 pi |x|)`.
pub fn dido_min_length(x: f64) -> f64 {
    (2.0 * PI * x.abs()).sqrt()
}

/// Common-curvature arc assignment over a list of chords.
///
/// Parametrized by the half-angle on one designated longest chord; every
/// other chord `l` (ties included) carries the minor arc with
/// `sin theta_l = (l / l_max) sin theta_max`, so all arcs share one curvature
/// and exactly one chord may exceed a semicircle. Total bulge is strictly
/// increasing in the parameter, which makes the inverse solve a bracketed
/// root find.
fn common_curvature_per_chord(
    chords: &[f64],
    major_idx: usize,
    theta_max: f64,
    mut visit: impl FnMut(usize, f64, f64),
) {
    let l_max = chords[major_idx];
    let sin_max = theta_max.sin();
    for (i, &l) in chords.iter().enumerate() {
        if l == 0.0 {
            continue;
        }
        let theta = if i == major_idx {
            theta_max
        } else {
            ((l / l_max) * sin_max).min(1.0).asin()
        };
        visit(i, l, theta);
    }
}

fn common_curvature_total(chords: &[f64], major_idx: usize, theta_max: f64) -> (f64, f64) {
    let mut area = 0.0;
    let mut len = 0.0;
    common_curvature_per_chord(chords, major_idx, theta_max, |_, l, theta| {
        area += 0.25 * l * l * p_raw(theta);
        len += l * q_raw(theta);
    });
    (area, len)
}

fn longest_index(chords: &[f64]) -> usize {
    let mut idx = 0;
    for (i, &l) in chords.iter().enumerate() {
        if l > chords[idx] {
            idx = i;
        }
    }
    idx
}

/// Minimal total arc length over same-sign bulge assignments on `chords`
/// with total bulge `x_total >= 0`.
pub fn min_total_arc_length(chords: &[f64], x_total: f64) -> Result<f64, ArcError> {
    if x_total < 0.0 {
        return Err(ArcError::NegativeArea(x_total));
    }
    let sum: f64 = chords.iter().sum();
    if chords.is_empty() || chords.iter().all(|&l| l == 0.0) {
        return Err(ArcError::Infeasible("all chords have length zero".into()));
    }
    if x_total == 0.0 {
        return Ok(sum);
    }
    // One designated longest chord carries any beyond-semicircle excess.
    let major = longest_index(chords);
    let (hi_area, _) = common_curvature_total(chords, major, THETA_MAX);
    if hi_area < x_total {
        return Err(ArcError::Infeasible(format!(
            "total bulge {x_total} unreachable (max {hi_area})"
        )));
    }
    let theta = solve_monotone(
        |t| common_curvature_total(chords, major, t).0 - x_total,
        0.0,
        THETA_MAX,
        THETA_TOL,
    );
    Ok(common_curvature_total(chords, major, theta).1)
}

/// Split `x_total >= 0` across two chords by arcs of common curvature.
///
/// Returns the bulge on each chord and the total arc length; this is the
/// minimizer of `arc(l1, t) + arc(l2, x_total - t)` over same-sign splits.
/// An arc exceeding a semicircle sits on the longer chord.
pub fn equal_curvature_split(
    l1: f64,
    l2: f64,
    x_total: f64,
) -> Result<(f64, f64, f64), ArcError> {
    if l1 < 0.0 {
        return Err(ArcError::NegativeChord(l1));
    }
    if l2 < 0.0 {
        return Err(ArcError::NegativeChord(l2));
    }
    if l1 == 0.0 && l2 == 0.0 {
        return Err(ArcError::Infeasible("both chords are zero".into()));
    }
    if x_total < 0.0 {
        return Err(ArcError::NegativeArea(x_total));
    }
    if x_total == 0.0 {
        return Ok((0.0, 0.0, l1 + l2));
    }
    let chords = [l1, l2];
    let major = longest_index(&chords);
    let theta = solve_monotone(
        |t| common_curvature_total(&chords, major, t).0 - x_total,
        0.0,
        THETA_MAX,
        THETA_TOL,
    );
    let mut xs = [0.0f64; 2];
    common_curvature_per_chord(&chords, major, theta, |i, l, th| {
        xs[i] = 0.25 * l * l * p_raw(th);
    });
    let total = common_curvature_total(&chords, major, theta).1;
    Ok((xs[0], xs[1], total))
}
