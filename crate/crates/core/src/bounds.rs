//! Constants and functionals of the hexagonal isoperimetric inequality:
//! the truncation, the polygon isoperimetric constant, the per-region area
//! floor, the linear penalty, the five perimeter lower bounds, and the
//! hexagonal deficit.

use crate::arc::arc_length;
use std::f64::consts::PI;
use thiserror::Error;

/// Truncation threshold for signed bulge areas.
pub const TAU0: f64 = 0.5;

/// Per-edge penalty slope; a fixed constant of the inequality.
pub const PENALTY_PER_EDGE: f64 = 0.0505;

/// `12^(1/4)`, computed from first principles so every use agrees bitwise.
/// Half the perimeter of a regular hexagon of unit area.
pub fn quad_root_12() -> f64 {
    12.0f64.sqrt().sqrt()
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("polygon constant needs N >= 3, got {0}")]
    PolygonTooFewEdges(u32),
    #[error("area floor needs M >= 2, got {0}")]
    FloorTooFewSides(u32),
    #[error("polygon bound needs alpha - X >= 0, got alpha={alpha} X={x}")]
    NegativePolygonArea { alpha: f64, x: f64 },
    #[error("chord-arc bound precondition failed: {0}")]
    ChordArcPrecondition(String),
}

/// Clamp a signed bulge area to `[-1/2, 1/2]`. Odd, 1-Lipschitz, idempotent.
pub fn truncate(x: f64) -> f64 {
    x.clamp(-TAU0, TAU0)
}

/// Isoperimetric constant `pi_N = N tan(pi/N)` of the regular N-gon;
/// `4 pi_N` is perimeter squared over area. Decreases to `pi`.
pub fn polygon_constant(n: u32) -> Result<f64, BoundsError> {
    if n < 3 {
        return Err(BoundsError::PolygonTooFewEdges(n));
    }
    let nf = n as f64;
    Ok(nf * (PI / nf).tan())
}

/// Minimum area `min(2 pi sqrt(3) / (3 M^2), 1)` a region with `M` sides must
/// have for the deficit inequality to apply.
pub fn area_floor(m: u32) -> Result<f64, BoundsError> {
    if m < 2 {
        return Err(BoundsError::FloorTooFewSides(m));
    }
    let mf = m as f64;
    Ok((2.0 * PI * 3.0f64.sqrt() / (3.0 * mf * mf)).min(1.0))
}

/// Linear penalty `T 12^(1/4) + (N-6) 0.0505 - 2 alpha 12^(1/4)`.
///
/// Its negation lower-bounds the perimeter of any admissible region.
pub fn penalty(n: u32, alpha: f64, t: f64) -> f64 {
    debug_assert!(n >= 2, "penalty: N must be at least 2");
    debug_assert!(alpha > 0.0 && alpha <= 1.0, "penalty: alpha in (0,1]");
    let c = quad_root_12();
    t * c + (n as f64 - 6.0) * PENALTY_PER_EDGE - 2.0 * alpha * c
}

/// Selector among the five perimeter lower bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// `2 sqrt((alpha - X) pi_N)`: isoperimetric bound on the chord polygon.
    PolygonIso,
    /// `2 sqrt(pi alpha)`: perimeter of the circle of area `alpha`.
    Circle,
    /// `2 sqrt((alpha - 2 X_J) pi)`: reflect negative-bulge arcs outward.
    Reflected,
    /// `X_D sqrt(2 pi / tau0)`: per-edge semicircle bound summed.
    Dido,
    /// `L * arc(1, |X|/L)` with `L` the polygon bound: valid when all chords
    /// have length at most 1 and the region is near a unit hexagon.
    ChordArc,
}

/// Per-region scalar parameters feeding the bounds and the deficit.
///
/// For `Reflected` the negative part is taken as `min(x, 0)` and for `Dido`
/// the absolute sum as `|x|`; callers outside the same-sign regime supply the
/// intended `X_J` / `X_D` through `x` directly.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct RegionParams {
    /// Directed edge count.
    pub n: u32,
    /// Truncated area `min(1, area)`.
    pub alpha: f64,
    /// Signed total bulge area.
    pub x: f64,
    /// Truncated total `sum of tau(x(e))`.
    pub t: f64,
}

impl RegionParams {
    pub fn new(n: u32, alpha: f64, x: f64, t: f64) -> Self {
        debug_assert!(t.abs() <= n as f64 * TAU0 + 1e-12);
        RegionParams { n, alpha, x, t }
    }
}

/// Evaluate one of the perimeter lower bounds at the given region parameters.
pub fn perimeter_lower_bound(kind: BoundKind, p: &RegionParams) -> Result<f64, BoundsError> {
    match kind {
        BoundKind::PolygonIso => {
            let a = p.alpha - p.x;
            if a < 0.0 {
                return Err(BoundsError::NegativePolygonArea {
                    alpha: p.alpha,
                    x: p.x,
                });
            }
            Ok(2.0 * (a * polygon_constant(p.n)?).sqrt())
        }
        BoundKind::Circle => Ok(2.0 * (PI * p.alpha).sqrt()),
        BoundKind::Reflected => {
            let xj = p.x.min(0.0);
            Ok(2.0 * ((p.alpha - 2.0 * xj) * PI).sqrt())
        }
        BoundKind::Dido => Ok(p.x.abs() * (2.0 * PI / TAU0).sqrt()),
        BoundKind::ChordArc => {
            if p.x.abs() > 0.119 {
                return Err(BoundsError::ChordArcPrecondition(format!(
                    "|X| = {} exceeds 0.119",
                    p.x.abs()
                )));
            }
            if !(0.996..=1.0).contains(&p.alpha) {
                return Err(BoundsError::ChordArcPrecondition(format!(
                    "alpha = {} outside [0.996, 1]",
                    p.alpha
                )));
            }
            if p.n > 7 {
                return Err(BoundsError::ChordArcPrecondition(format!(
                    "N = {} exceeds 7",
                    p.n
                )));
            }
            let l = perimeter_lower_bound(BoundKind::PolygonIso, p)?;
            Ok(l * arc_length(1.0, p.x.abs() / l))
        }
    }
}

/// Hexagonal deficit `Delta = L + penalty(N, alpha, T)`.
///
/// Nonnegative for every region whose area clears `area_floor(N)`, with
/// equality exactly at the regular hexagon of area 1.
pub fn hex_deficit(l: f64, p: &RegionParams) -> f64 {
    l + penalty(p.n, p.alpha, p.t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c() -> f64 {
        quad_root_12()
    }

    #[test]
    fn truncate_examples() {
        assert_eq!(truncate(0.7), 0.5);
        assert_eq!(truncate(-0.3), -0.3);
        assert_eq!(truncate(-2.0), -0.5);
    }

    #[test]
    fn polygon_constant_examples() {
        assert!((polygon_constant(4).unwrap() - 4.0).abs() < 1e-14);
        assert!((polygon_constant(6).unwrap() - 2.0 * 3.0f64.sqrt()).abs() < 1e-14);
        assert!((polygon_constant(3).unwrap() - 3.0 * 3.0f64.sqrt()).abs() < 1e-13);
        assert!(polygon_constant(2).is_err());
    }

    #[test]
    fn polygon_constant_decreases_to_pi() {
        let mut prev = f64::INFINITY;
        for n in 3..=64 {
            let v = polygon_constant(n).unwrap();
            assert!(v < prev, "pi_N not strictly decreasing at N={n}");
            assert!(v > PI);
            prev = v;
        }
        assert!(polygon_constant(64).unwrap() - PI < 3e-3);
    }

    #[test]
    fn area_floor_examples() {
        let a2 = area_floor(2).unwrap();
        assert!((a2 - PI * 3.0f64.sqrt() / 6.0).abs() < 1e-14);
        assert!(a2 > 0.25);
        assert!((area_floor(6).unwrap() - 0.10076663134634544).abs() < 1e-14);
        let mut prev = a2;
        for m in 3..200 {
            let v = area_floor(m).unwrap();
            assert!(v < prev);
            prev = v;
        }
        assert!(area_floor(1).is_err());
    }

    #[test]
    fn penalty_examples() {
        assert!((penalty(6, 1.0, 0.0) + 2.0 * c()).abs() < 1e-14);
        assert!((penalty(3, 1.0, 0.177) + 3.5444853162862551).abs() < 1e-12);
        assert!((penalty(7, 1.0, 0.0) + 3.6719194364083984).abs() < 1e-12);
    }

    #[test]
    fn penalty_monotonicities() {
        for k in 0..50 {
            let t = -2.0 + 0.1 * k as f64;
            assert!(penalty(6, 1.0, t + 0.1) > penalty(6, 1.0, t));
        }
        for n in 2..12 {
            assert!(penalty(n + 1, 0.7, 0.3) > penalty(n, 0.7, 0.3));
        }
        for k in 1..10 {
            let a = 0.1 * k as f64;
            assert!(penalty(5, a + 0.05, 0.0) < penalty(5, a, 0.0));
        }
    }

    #[test]
    fn bound_examples() {
        let hexagon = RegionParams::new(6, 1.0, 0.0, 0.0);
        let iso = perimeter_lower_bound(BoundKind::PolygonIso, &hexagon).unwrap();
        assert!((iso - 2.0 * c()).abs() < 1e-14);

        let circle = perimeter_lower_bound(BoundKind::Circle, &hexagon).unwrap();
        assert!((circle - 2.0 * PI.sqrt()).abs() < 1e-14);

        let refl = RegionParams::new(6, 1.0, -0.323, -0.323);
        let l = perimeter_lower_bound(BoundKind::Reflected, &refl).unwrap();
        assert!((l - 2.0 * (PI * 1.646).sqrt()).abs() < 1e-12);

        let dido = RegionParams::new(6, 1.0, 2.4, 2.4);
        let l = perimeter_lower_bound(BoundKind::Dido, &dido).unwrap();
        assert!((l - 2.4 * (4.0 * PI).sqrt()).abs() < 1e-12);

        let ca = perimeter_lower_bound(BoundKind::ChordArc, &hexagon).unwrap();
        assert_eq!(ca, iso);
    }

    #[test]
    fn bound_preconditions() {
        let bad = RegionParams::new(5, 0.3, 0.4, 0.4);
        assert!(matches!(
            perimeter_lower_bound(BoundKind::PolygonIso, &bad),
            Err(BoundsError::NegativePolygonArea { .. })
        ));
        let wide = RegionParams::new(6, 1.0, 0.2, 0.2);
        assert!(perimeter_lower_bound(BoundKind::ChordArc, &wide).is_err());
        let low_alpha = RegionParams::new(6, 0.9, 0.05, 0.05);
        assert!(perimeter_lower_bound(BoundKind::ChordArc, &low_alpha).is_err());
        let many = RegionParams::new(8, 1.0, 0.05, 0.05);
        assert!(perimeter_lower_bound(BoundKind::ChordArc, &many).is_err());
    }

    #[test]
    fn hex_deficit_examples() {
        let hexagon = RegionParams::new(6, 1.0, 0.0, 0.0);
        assert!(hex_deficit(2.0 * c(), &hexagon).abs() < 1e-14);
        let square = RegionParams::new(4, 1.0, 0.0, 0.0);
        assert!((hex_deficit(4.0, &square) - 0.17658056359160160).abs() < 1e-12);
        // Linear in L with slope 1.
        let d0 = hex_deficit(3.0, &square);
        let d1 = hex_deficit(4.5, &square);
        assert!((d1 - d0 - 1.5).abs() < 1e-14);
    }

    #[test]
    fn polygon_bound_concave_in_x_and_alpha() {
        // Second differences stay nonpositive: this is what justifies
        // endpoint checks in the scans.
        let pi_n = polygon_constant(5).unwrap();
        let f = |alpha: f64, x: f64| 2.0 * ((alpha - x) * pi_n).sqrt();
        let h = 1e-3;
        for i in 0..200 {
            let x = -0.18 + 0.0015 * i as f64;
            let d2 = f(1.0, x + h) - 2.0 * f(1.0, x) + f(1.0, x - h);
            assert!(d2 <= 1e-12);
            let a = 0.3 + 0.003 * i as f64;
            let d2 = f(a + h, 0.1) - 2.0 * f(a, 0.1) + f(a - h, 0.1);
            assert!(d2 <= 1e-12);
        }
        // And decreasing in X.
        for i in 0..100 {
            let x = -0.18 + 0.003 * i as f64;
            assert!(f(1.0, x + h) < f(1.0, x));
        }
    }

    #[test]
    fn chord_arc_dominates_polygon_bound() {
        for n in 3..=7 {
            for i in 0..=20 {
                let x = -0.119 + 0.238 * i as f64 / 20.0;
                for j in 0..=4 {
                    let alpha = 0.996 + 0.004 * j as f64 / 4.0;
                    let p = RegionParams::new(n, alpha, x, x);
                    let iso = perimeter_lower_bound(BoundKind::PolygonIso, &p).unwrap();
                    let ca = perimeter_lower_bound(BoundKind::ChordArc, &p).unwrap();
                    assert!(ca >= iso - 1e-12, "N={n} x={x} alpha={alpha}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn truncate_is_odd_lipschitz_idempotent(x in -3.0f64..3.0, y in -3.0f64..3.0) {
            prop_assert_eq!(truncate(-x), -truncate(x));
            prop_assert!((truncate(x) - truncate(y)).abs() <= (x - y).abs() + 1e-15);
            prop_assert_eq!(truncate(truncate(x)), truncate(x));
        }
    }
}
