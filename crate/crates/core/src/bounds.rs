//! Approximation-ratio terms, the `alpha(r)`/`beta(r)` max-min envelopes and
//! curve sampling for CSV export.
//!
//! All terms are functions of `x`, the Hamiltonian-path weight normalized by
//! the number of strings, on the closed interval `[0, r-1]` (the point
//! `x = r` is a singularity of every denominator). The envelopes maximize the
//! pointwise minimum of the terms over that interval: a dense grid locates
//! the neighborhood of the optimum and bisection on pairwise term crossings
//! refines it, since each term is monotone in `x` and the maximum of their
//! minimum sits on a crossing or an interval endpoint.

use thiserror::Error;

/// Best known general-case approximation ratio, 2 + 11/30.
pub const GENERAL_BOUND: f64 = 2.0 + 11.0 / 30.0;

const GRID_STEP: f64 = 1e-4;
const BISECT_TOL: f64 = 1e-13;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("r = {r} too small, need r >= {min}")]
    RTooSmall { r: usize, min: usize },
    #[error("x out of domain [0, r-1]")]
    XOutOfRange,
    #[error("level {level} out of range, need 2..={max}")]
    LevelOutOfRange { level: usize, max: usize },
    #[error("bad range: r_min must not exceed r_max")]
    BadRange,
    #[error("step must be positive and finite")]
    BadStep,
}

fn check_domain(r: usize, x: f64, min_r: usize) -> Result<(), BoundsError> {
    if r < min_r {
        return Err(BoundsError::RTooSmall { r, min: min_r });
    }
    if !x.is_finite() || x < 0.0 || x > (r - 1) as f64 {
        return Err(BoundsError::XOutOfRange);
    }
    Ok(())
}

fn hier_raw(r: f64, x: f64) -> f64 {
    (4.0 + (r - 2.0) * (r - x - 1.0)) / (2.0 * (r - x))
}

fn golovnev_raw(r: f64, x: f64) -> f64 {
    (r * r - 2.0 * r + 2.0 - (r - 1.0) * x) / (r - x)
}

fn atsp_raw(r: f64, x: f64) -> f64 {
    (r - (2.0 / 3.0) * x) / (r - x)
}

fn level_raw(r: f64, x: f64, level: f64) -> f64 {
    (level * level + (r - level) * (r - x - 1.0)) / (level * (r - x))
}

/// Two-level hierarchical ratio term `(4 + (r-2)(r-x-1)) / (2(r-x))`.
pub fn hier_term(r: usize, x: f64) -> Result<f64, BoundsError> {
    check_domain(r, x, 3)?;
    Ok(hier_raw(r as f64, x))
}

/// One-level ratio term `(r^2 - 2r + 2 - (r-1)x) / (r-x)`.
pub fn golovnev_term(r: usize, x: f64) -> Result<f64, BoundsError> {
    check_domain(r, x, 2)?;
    Ok(golovnev_raw(r as f64, x))
}

/// Path-approximation ratio term `(r - 2x/3) / (r-x)`.
pub fn atsp_term(r: usize, x: f64) -> Result<f64, BoundsError> {
    check_domain(r, x, 2)?;
    Ok(atsp_raw(r as f64, x))
}

/// Ratio term for an `level`-level hierarchy, counting every used overlap at
/// the weakest level: `(level^2 + (r-level)(r-x-1)) / (level * (r-x))`.
/// Reduces exactly to [`hier_term`] at `level = 2`.
pub fn level_term(r: usize, x: f64, level: usize) -> Result<f64, BoundsError> {
    check_domain(r, x, 3)?;
    if level < 2 || level > r - 1 {
        return Err(BoundsError::LevelOutOfRange { level, max: r - 1 });
    }
    Ok(level_raw(r as f64, x, level as f64))
}

/// Envelope values for one `r`: the scalar bounds and where they are attained.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub r: usize,
    pub alpha: f64,
    pub beta: f64,
    pub argmax_x_alpha: f64,
    pub argmax_x_beta: f64,
    pub general_bound: f64,
}

/// Maximizes `x -> min(terms)` over `[0, r-1]`: dense grid plus bisection on
/// every pairwise term crossing. Returns `(max, argmax)`.
fn maximize_envelope(r: f64, terms: &[fn(f64, f64) -> f64]) -> (f64, f64) {
    let hi = r - 1.0;
    let envelope = |x: f64| terms.iter().map(|t| t(r, x)).fold(f64::INFINITY, f64::min);

    let mut best = (envelope(0.0), 0.0);
    let mut consider = |x: f64| {
        let v = envelope(x);
        if v > best.0 {
            best = (v, x);
        }
    };

    let steps = (hi / GRID_STEP).ceil() as usize;
    let mut xs = Vec::with_capacity(steps + 1);
    for i in 0..=steps {
        xs.push((i as f64 * GRID_STEP).min(hi));
    }
    for &x in &xs {
        consider(x);
    }

    for (ai, a) in terms.iter().enumerate() {
        for b in terms.iter().skip(ai + 1) {
            let diff = |x: f64| a(r, x) - b(r, x);
            for w in xs.windows(2) {
                let (mut lo, mut hi) = (w[0], w[1]);
                let (flo, fhi) = (diff(lo), diff(hi));
                if flo == 0.0 {
                    consider(lo);
                    continue;
                }
                if fhi == 0.0 || flo.signum() == fhi.signum() {
                    continue;
                }
                while hi - lo > BISECT_TOL {
                    let mid = 0.5 * (lo + hi);
                    if diff(mid).signum() == flo.signum() {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                consider(0.5 * (lo + hi));
            }
        }
    }
    best
}

/// `max_x min(golovnev, atsp)` with its argmax; defined from `r = 2` on.
pub fn alpha(r: usize) -> Result<(f64, f64), BoundsError> {
    if r < 2 {
        return Err(BoundsError::RTooSmall { r, min: 2 });
    }
    Ok(maximize_envelope(r as f64, &[golovnev_raw, atsp_raw]))
}

/// `max_x min(hier, golovnev, atsp)` with its argmax; defined from `r = 3`.
pub fn beta(r: usize) -> Result<(f64, f64), BoundsError> {
    if r < 3 {
        return Err(BoundsError::RTooSmall { r, min: 3 });
    }
    Ok(maximize_envelope(
        r as f64,
        &[hier_raw, golovnev_raw, atsp_raw],
    ))
}

/// Computes both envelopes for one `r`.
pub fn bound_report(r: usize) -> Result<BoundReport, BoundsError> {
    let (alpha_v, alpha_x) = alpha(r)?;
    let (beta_v, beta_x) = beta(r)?;
    Ok(BoundReport {
        r,
        alpha: alpha_v,
        beta: beta_v,
        argmax_x_alpha: alpha_x,
        argmax_x_beta: beta_x,
        general_bound: GENERAL_BOUND,
    })
}

/// One sampled point of a ratio curve. `extra_terms` follows the order of the
/// curve's `extra_levels`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSample {
    pub x: f64,
    pub term_hier: f64,
    pub term_golovnev: f64,
    pub term_atsp: f64,
    /// Pointwise minimum of the three base terms.
    pub envelope: f64,
    pub extra_terms: Vec<f64>,
}

/// Sampled ratio terms for one `r`, for plotting or CSV export.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioCurve {
    pub r: usize,
    /// Levels beyond 2 that were sampled as extra columns, ascending.
    pub extra_levels: Vec<usize>,
    pub samples: Vec<CurveSample>,
}

/// Samples all terms and envelopes for `r` in `r_min..=r_max` at `x` spacing
/// `step`. Levels other than 2 in `levels` become extra columns.
pub fn emit_curves(
    r_min: usize,
    r_max: usize,
    levels: &[usize],
    step: f64,
) -> Result<Vec<RatioCurve>, BoundsError> {
    if r_min < 3 {
        return Err(BoundsError::RTooSmall { r: r_min, min: 3 });
    }
    if r_min > r_max {
        return Err(BoundsError::BadRange);
    }
    if !step.is_finite() || step <= 0.0 {
        return Err(BoundsError::BadStep);
    }
    let mut extra_levels: Vec<usize> = levels.iter().copied().filter(|&l| l != 2).collect();
    extra_levels.sort_unstable();
    extra_levels.dedup();
    for &level in &extra_levels {
        if level < 2 || level > r_min - 1 {
            return Err(BoundsError::LevelOutOfRange {
                level,
                max: r_min - 1,
            });
        }
    }

    let mut curves = Vec::new();
    for r in r_min..=r_max {
        let rf = r as f64;
        let hi = rf - 1.0;
        let mut samples = Vec::new();
        let mut i = 0usize;
        loop {
            let x = i as f64 * step;
            if x > hi + 1e-9 {
                break;
            }
            let x = x.min(hi);
            let term_hier = hier_raw(rf, x);
            let term_golovnev = golovnev_raw(rf, x);
            let term_atsp = atsp_raw(rf, x);
            samples.push(CurveSample {
                x,
                term_hier,
                term_golovnev,
                term_atsp,
                envelope: term_hier.min(term_golovnev).min(term_atsp),
                extra_terms: extra_levels
                    .iter()
                    .map(|&l| level_raw(rf, x, l as f64))
                    .collect(),
            });
            i += 1;
        }
        curves.push(RatioCurve {
            r,
            extra_levels: extra_levels.clone(),
            samples,
        });
    }
    Ok(curves)
}

/// Renders curves as CSV: header
/// `r,x,term_hier,term_golovnev,term_atsp,envelope[,term_l<L>...]`, one row
/// per sample, `.` decimal separator, LF line endings. Floats are written in
/// shortest round-trip form.
pub fn curves_to_csv(curves: &[RatioCurve]) -> String {
    let mut out = String::from("r,x,term_hier,term_golovnev,term_atsp,envelope");
    if let Some(first) = curves.first() {
        for l in &first.extra_levels {
            out.push_str(&format!(",term_l{l}"));
        }
    }
    out.push('\n');
    for curve in curves {
        for s in &curve.samples {
            out.push_str(&format!(
                "{},{},{},{},{},{}",
                curve.r, s.x, s.term_hier, s.term_golovnev, s.term_atsp, s.envelope
            ));
            for t in &s.extra_terms {
                out.push_str(&format!(",{t}"));
            }
            out.push('\n');
        }
    }
    out
}
