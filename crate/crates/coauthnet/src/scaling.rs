//! Rank–value scaling analysis: fit a power law with an exponential
//! cutoff, `value(r) = C · r^(−a) · exp(−r / x_c)`, to a centrality
//! vector sorted by rank.
//!
//! The head of the curve (low ranks) is fit as a pure power law by least
//! squares in log-log space; the cutoff scale is then found by a
//! one-dimensional grid search over the full rank range with the head-fit
//! exponent and amplitude held fixed.

use crate::centrality::CentralityVector;
use std::io::Write;
use thiserror::Error;

/// Lower bound on the scores a fit needs.
pub const MIN_POSITIVE_SCORES: usize = 10;
/// Head region used for the power-law fit when none is given.
pub const DEFAULT_HEAD_CUT: usize = 500;
/// Candidate cutoff scales examined by the grid search, in addition to
/// "no cutoff".
const GRID_POINTS: usize = 400;

/// A fitted rank–value model `value(r) = C · r^(−a) · exp(−r / x_c)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankFit {
    /// Effective head length used for the power-law fit (requested value
    /// clamped to the number of positive scores).
    pub head_cut: usize,
    /// Power-law exponent `a`; positive for decaying data.
    pub exponent: f64,
    /// Amplitude `C`.
    pub amplitude: f64,
    /// Cutoff scale `x_c` in ranks; `f64::INFINITY` when the best fit has
    /// no cutoff.
    pub cutoff_scale: f64,
    /// Goodness of the log-log linear fit on the head region.
    pub r_squared_head: f64,
}

impl RankFit {
    /// Model prediction at a 1-based rank.
    pub fn model_value(&self, rank: usize) -> f64 {
        let r = rank as f64;
        self.amplitude * r.powf(-self.exponent) * (-r / self.cutoff_scale).exp()
    }
}

#[derive(Debug, Error)]
pub enum ScalingError {
    #[error("need at least {MIN_POSITIVE_SCORES} strictly positive scores, got {got}")]
    InsufficientData { got: usize },
    #[error("head_cut must be at least 2, got {got}")]
    BadHeadCut { got: usize },
}

/// The strictly positive scores of a vector, sorted descending — the
/// rank–value curve a fit runs on (rank r is 1-based index r−1).
pub fn sorted_positive_scores(v: &CentralityVector) -> Vec<f64> {
    let mut values: Vec<f64> = v.scores.iter().copied().filter(|&s| s > 0.0).collect();
    values.sort_by(|a, b| b.total_cmp(a));
    values
}

/// Fit the rank–value model to a centrality vector.
///
/// Zeros are dropped and the remaining scores sorted descending. The
/// exponent and amplitude come from least squares of log(value) on
/// log(rank) over ranks ≤ `head_cut` (default 500, clamped to the data);
/// the cutoff scale from a grid search minimizing total squared
/// log-residuals over all ranks with exponent and amplitude held fixed.
pub fn rank_fit(v: &CentralityVector, head_cut: Option<usize>) -> Result<RankFit, ScalingError> {
    let requested = head_cut.unwrap_or(DEFAULT_HEAD_CUT);
    if requested < 2 {
        return Err(ScalingError::BadHeadCut { got: requested });
    }
    let values = sorted_positive_scores(v);
    if values.len() < MIN_POSITIVE_SCORES {
        return Err(ScalingError::InsufficientData { got: values.len() });
    }
    let head = requested.min(values.len());

    // Least squares of y = ln(value) on x = ln(rank) over the head.
    let xs: Vec<f64> = (1..=head).map(|r| (r as f64).ln()).collect();
    let ys: Vec<f64> = values[..head].iter().map(|v| v.ln()).collect();
    let x_mean = xs.iter().sum::<f64>() / head as f64;
    let y_mean = ys.iter().sum::<f64>() / head as f64;
    let mut cov = 0.0;
    let mut var = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        cov += (x - x_mean) * (y - y_mean);
        var += (x - x_mean) * (x - x_mean);
    }
    let slope = cov / var;
    let intercept = y_mean - slope * x_mean;
    let exponent = if slope == 0.0 { 0.0 } else { -slope };
    let amplitude = intercept.exp();

    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - y_mean) * (y - y_mean)).sum();
    let r_squared_head = if ss_tot == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };

    // Grid search for the cutoff. Per-rank model log-residual with the
    // head fit held fixed is d_r + r/x_c where d_r = ln v_r − intercept
    // + exponent·ln r. Candidates: no cutoff first, then x_c log-spaced
    // from 1000·max_rank down to 1; ties keep the earlier (larger) scale.
    let d: Vec<f64> = values
        .iter()
        .enumerate()
        .map(|(i, v)| v.ln() - intercept + exponent * ((i + 1) as f64).ln())
        .collect();
    let sse = |x_c: f64| -> f64 {
        let gamma = if x_c.is_infinite() { 0.0 } else { x_c.recip() };
        d.iter()
            .enumerate()
            .map(|(i, d_r)| {
                let e = d_r + gamma * (i + 1) as f64;
                e * e
            })
            .sum()
    };
    let hi = (1000.0 * values.len() as f64).ln();
    let mut cutoff_scale = f64::INFINITY;
    let mut best = sse(f64::INFINITY);
    for t in 0..GRID_POINTS {
        let x_c = (hi - t as f64 * hi / (GRID_POINTS - 1) as f64).exp();
        let s = sse(x_c);
        if s < best {
            best = s;
            cutoff_scale = x_c;
        }
    }

    Ok(RankFit {
        head_cut: head,
        exponent,
        amplitude,
        cutoff_scale,
        r_squared_head,
    })
}

impl RankFit {
    /// Fit report as flat `key,value` CSV.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["key", "value"])?;
        w.write_record(["head_cut", &self.head_cut.to_string()])?;
        w.write_record(["exponent", &self.exponent.to_string()])?;
        w.write_record(["amplitude", &self.amplitude.to_string()])?;
        w.write_record(["cutoff_scale", &self.cutoff_scale.to_string()])?;
        w.write_record(["r_squared_head", &self.r_squared_head.to_string()])?;
        w.flush()?;
        Ok(())
    }
}

/// Plot data for external log-log plotting: CSV `rank,value,model_value`
/// over every positive-score rank.
pub fn write_plot_data<W: Write>(
    v: &CentralityVector,
    fit: &RankFit,
    out: W,
) -> Result<(), csv::Error> {
    let values = sorted_positive_scores(v);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["rank", "value", "model_value"])?;
    for (i, value) in values.iter().enumerate() {
        let rank = i + 1;
        w.write_record([
            &rank.to_string(),
            &value.to_string(),
            &fit.model_value(rank).to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
