//! Grid scanning machinery and positivity certificates.
//!
//! A certificate records the outcome of minimizing one branch's margin
//! function over a parameter box: the minimum seen, where it happened, and
//! whether the branch passes. Scans are plain dense grids unless a branch
//! declares concavity, in which case endpoint evaluation is exact and the
//! grid doubles as a cross-check.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Scan parameters shared by the verifier and the oracles.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ScanConfig {
    /// Grid spacing per continuous axis.
    pub step: f64,
    /// Positivity slack: a branch passes when its margin exceeds this.
    pub tol: f64,
    /// Largest edge count scanned exhaustively.
    pub n_max: u32,
    /// Seed for randomized oracles.
    pub seed: u64,
    /// Conservative mode: subtract this Lipschitz slack from every margin.
    pub slack: f64,
    /// Instance count for randomized oracles.
    pub instances: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            step: 1e-3,
            tol: 1e-9,
            n_max: 12,
            seed: 0,
            slack: 0.0,
            instances: 1000,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<(), ScanError> {
        if !(self.step > 0.0) {
            return Err(ScanError::BadConfig(format!("step {} not > 0", self.step)));
        }
        if self.n_max < 8 {
            return Err(ScanError::BadConfig(format!(
                "n_max {} below minimum 8",
                self.n_max
            )));
        }
        if self.tol < 0.0 {
            return Err(ScanError::BadConfig(format!("tol {} negative", self.tol)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScanError {
    #[error("empty scan box: {0}")]
    EmptyBox(String),
    #[error("invalid scan config: {0}")]
    BadConfig(String),
}

/// One axis of a scan box.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Axis {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
}

impl Axis {
    pub fn new(name: &str, lo: f64, hi: f64) -> Self {
        Axis {
            name: name.to_string(),
            lo,
            hi,
        }
    }

    /// Grid points at spacing <= step, endpoints included exactly.
    pub fn points(&self, step: f64) -> Vec<f64> {
        if self.hi <= self.lo {
            return vec![self.lo];
        }
        let n = ((self.hi - self.lo) / step).ceil().max(1.0) as usize;
        (0..=n)
            .map(|k| {
                if k == n {
                    self.hi
                } else {
                    self.lo + (self.hi - self.lo) * k as f64 / n as f64
                }
            })
            .collect()
    }
}

/// How a certificate's minimum was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Grid,
    EndpointConcavity,
    InequalityChain,
}

/// Named coordinate of a witness point.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AxisValue {
    pub axis: String,
    pub value: f64,
}

/// Detected exceptional sub-box of a scan, compared against a declared window.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WindowReport {
    /// The declared window the failures must stay inside.
    pub expected: Vec<Axis>,
    /// Hull of the points with non-positive margin, if any.
    pub hull: Option<Vec<Axis>>,
    /// Most negative margin seen inside the window.
    pub min_margin: f64,
    pub witness: Vec<AxisValue>,
    /// Whether every flagged point lies inside the declared window
    /// (expanded by one grid step).
    pub contained: bool,
}

/// Result of verifying one case branch over a parameter box.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub case_id: String,
    #[serde(rename = "box")]
    pub scan_box: Vec<Axis>,
    pub min_margin: f64,
    pub witness: Vec<AxisValue>,
    pub passed: bool,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceptional: Option<WindowReport>,
}

impl Certificate {
    /// Plain positivity certificate: passes iff the minimum clears `tol`.
    pub fn positivity(
        case_id: &str,
        scan_box: Vec<Axis>,
        min_margin: f64,
        witness: Vec<AxisValue>,
        method: Method,
        cfg: &ScanConfig,
    ) -> Self {
        Certificate {
            case_id: case_id.to_string(),
            scan_box,
            min_margin,
            witness,
            passed: min_margin > cfg.tol,
            method,
            note: None,
            exceptional: None,
        }
    }

    pub fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }
}

/// Outcome of a raw scan: deterministic minimum and its location.
#[derive(Debug, Clone)]
pub struct ScanOutcome {
    pub min_margin: f64,
    pub witness: Vec<f64>,
}

/// Minimize `f` over the dense grid of `axes` at the configured step.
///
/// Deterministic: ties resolve to the first point in odometer order. The
/// conservative slack, if any, is subtracted from every evaluation.
pub fn scan_positive<F: Fn(&[f64]) -> f64>(
    f: F,
    axes: &[Axis],
    cfg: &ScanConfig,
) -> Result<ScanOutcome, ScanError> {
    if axes.is_empty() {
        return Err(ScanError::EmptyBox("no axes".into()));
    }
    for a in axes {
        if a.hi < a.lo {
            return Err(ScanError::EmptyBox(format!(
                "axis {}: [{}, {}]",
                a.name, a.lo, a.hi
            )));
        }
    }
    let grids: Vec<Vec<f64>> = axes.iter().map(|a| a.points(cfg.step)).collect();
    let mut idx = vec![0usize; axes.len()];
    let mut point = vec![0.0f64; axes.len()];
    let mut best = f64::INFINITY;
    let mut best_at = vec![0.0f64; axes.len()];
    loop {
        for (d, &i) in idx.iter().enumerate() {
            point[d] = grids[d][i];
        }
        let v = f(&point) - cfg.slack;
        if v < best {
            best = v;
            best_at.copy_from_slice(&point);
        }
        // Odometer increment, last axis fastest.
        let mut d = axes.len();
        loop {
            if d == 0 {
                return Ok(ScanOutcome {
                    min_margin: best,
                    witness: best_at,
                });
            }
            d -= 1;
            idx[d] += 1;
            if idx[d] < grids[d].len() {
                break;
            }
            idx[d] = 0;
        }
    }
}

/// Minimize `f` over the corner points of the box only. Exact for margins
/// concave along every axis.
pub fn scan_endpoints<F: Fn(&[f64]) -> f64>(
    f: F,
    axes: &[Axis],
    cfg: &ScanConfig,
) -> Result<ScanOutcome, ScanError> {
    if axes.is_empty() {
        return Err(ScanError::EmptyBox("no axes".into()));
    }
    let mut best = f64::INFINITY;
    let mut best_at = vec![0.0f64; axes.len()];
    let corners = 1usize << axes.len();
    let mut point = vec![0.0f64; axes.len()];
    for mask in 0..corners {
        for (d, a) in axes.iter().enumerate() {
            point[d] = if mask & (1 << d) != 0 { a.hi } else { a.lo };
        }
        let v = f(&point) - cfg.slack;
        if v < best {
            best = v;
            best_at.copy_from_slice(&point);
        }
    }
    Ok(ScanOutcome {
        min_margin: best,
        witness: best_at,
    })
}

/// Pair scan axes with a witness point for reporting.
pub fn witness_of(axes: &[Axis], point: &[f64]) -> Vec<AxisValue> {
    axes.iter()
        .zip(point)
        .map(|(a, &v)| AxisValue {
            axis: a.name.clone(),
            value: v,
        })
        .collect()
}
