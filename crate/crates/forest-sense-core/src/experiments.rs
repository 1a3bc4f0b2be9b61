//! Experiment runners: assemble analytic curves, their bounds, and Monte
//! Carlo estimates into [`CurveTable`]s, with named presets for the standard
//! parameter families.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::analytic::{
    contact_cdf, contact_cdf_loose_upper, contact_cdf_lower, contact_cdf_upper, sensing_prob,
    sensing_prob_loose_upper, sensing_prob_lower, sensing_prob_upper, EventModel, ModelError,
    NetworkModel,
};
use crate::montecarlo::{empirical_contact_cdf, empirical_sensing_prob, SeedSpec};
use crate::quad::{QuadratureError, QuadratureSpec};
use crate::table::{CurveTable, TableError};

/// Everything an experiment run needs: models, an abscissa grid, and the
/// Monte Carlo sample budget with its seed layout.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub net: NetworkModel,
    pub ev: EventModel,
    pub grid: Vec<f64>,
    pub n_samples: u64,
    pub seed: SeedSpec,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExperimentError {
    Quadrature(QuadratureError),
    Table(TableError),
    Model(ModelError),
    EmptyGrid,
    /// `ks_statistic` needs tables sharing one abscissa grid.
    MismatchedGrids,
    InvalidParameter(&'static str),
}

impl fmt::Display for ExperimentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExperimentError::Quadrature(e) => write!(f, "{e}"),
            ExperimentError::Table(e) => write!(f, "{e}"),
            ExperimentError::Model(e) => write!(f, "{e}"),
            ExperimentError::EmptyGrid => write!(f, "experiment grid is empty"),
            ExperimentError::MismatchedGrids => {
                write!(f, "tables do not share an abscissa grid")
            }
            ExperimentError::InvalidParameter(what) => write!(f, "{what}"),
        }
    }
}

impl core::error::Error for ExperimentError {}

impl From<QuadratureError> for ExperimentError {
    fn from(e: QuadratureError) -> Self {
        ExperimentError::Quadrature(e)
    }
}

impl From<TableError> for ExperimentError {
    fn from(e: TableError) -> Self {
        ExperimentError::Table(e)
    }
}

impl From<ModelError> for ExperimentError {
    fn from(e: ModelError) -> Self {
        ExperimentError::Model(e)
    }
}

/// `n` evenly spaced points from `lo` to `hi` with both endpoints exact.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// Default probe-radius grid: 101 points over `[0, 2 r_d]`, covering both
/// the integral branch and the saturation branch of the CDF.
pub fn default_r_grid(net: &NetworkModel) -> Vec<f64> {
    linspace(0.0, 2.0 * net.forest_radius(), 101)
}

/// Default time grid: 101 points over `[0, t_max]` where the effective
/// radius reaches `2 r_d` at `t_max`. Falls back to `[0, 1]` when the event
/// does not grow or already starts saturated.
pub fn default_t_grid(net: &NetworkModel, ev: &EventModel) -> Vec<f64> {
    let span = 2.0 * net.forest_radius() - net.sensing_radius();
    let t_max = if ev.expansion_speed() > 0.0 && span > 0.0 {
        span / ev.expansion_speed()
    } else {
        1.0
    };
    linspace(0.0, t_max, 101)
}

fn require_grid(grid: &[f64]) -> Result<(), ExperimentError> {
    if grid.is_empty() {
        Err(ExperimentError::EmptyGrid)
    } else {
        Ok(())
    }
}

/// Contact-distance CDF with its three bounds and a Monte Carlo estimate,
/// all on the spec's `r` grid.
pub fn run_cdf_experiment(
    spec: &ExperimentSpec,
    q: &QuadratureSpec,
) -> Result<CurveTable, ExperimentError> {
    require_grid(&spec.grid)?;
    let mc = empirical_contact_cdf(&spec.net, &spec.grid, spec.n_samples, &spec.seed)?;
    let mut rows = Vec::with_capacity(spec.grid.len());
    for (j, &r) in spec.grid.iter().enumerate() {
        rows.push(vec![
            r,
            contact_cdf(r, &spec.net, q)?,
            contact_cdf_upper(r, &spec.net),
            contact_cdf_lower(r, &spec.net),
            contact_cdf_loose_upper(r, &spec.net),
            mc.rows()[j][1],
            mc.rows()[j][2],
        ]);
    }
    Ok(CurveTable::new(
        labels(&["r", "cdf", "upper", "lower", "loose_upper", "mc_estimate", "mc_std_error"]),
        rows,
    )?)
}

/// Deviation of the closed-form bounds from the exact CDF:
/// `upper - exact` and `exact - lower` per grid point. Sub-tolerance
/// quadrature jitter is truncated at zero so the columns stay nonnegative.
pub fn run_bound_deviation(
    spec: &ExperimentSpec,
    q: &QuadratureSpec,
) -> Result<CurveTable, ExperimentError> {
    require_grid(&spec.grid)?;
    let mut rows = Vec::with_capacity(spec.grid.len());
    for &r in &spec.grid {
        let exact = contact_cdf(r, &spec.net, q)?;
        rows.push(vec![
            r,
            (contact_cdf_upper(r, &spec.net) - exact).max(0.0),
            (exact - contact_cdf_lower(r, &spec.net)).max(0.0),
        ]);
    }
    Ok(CurveTable::new(
        labels(&["r", "upper_minus_exact", "exact_minus_lower"]),
        rows,
    )?)
}

/// Event-sensing probability over the spec's `t` grid, with bounds and a
/// Monte Carlo estimate.
pub fn run_sensing_curve(
    spec: &ExperimentSpec,
    q: &QuadratureSpec,
) -> Result<CurveTable, ExperimentError> {
    require_grid(&spec.grid)?;
    let mc = empirical_sensing_prob(&spec.net, &spec.ev, &spec.grid, spec.n_samples, &spec.seed)?;
    let mut rows = Vec::with_capacity(spec.grid.len());
    for (j, &t) in spec.grid.iter().enumerate() {
        rows.push(vec![
            t,
            sensing_prob(t, &spec.net, &spec.ev, q)?,
            sensing_prob_upper(t, &spec.net, &spec.ev),
            sensing_prob_lower(t, &spec.net, &spec.ev),
            sensing_prob_loose_upper(t, &spec.net, &spec.ev),
            mc.rows()[j][1],
            mc.rows()[j][2],
        ]);
    }
    Ok(CurveTable::new(
        labels(&[
            "t",
            "sensing_prob",
            "upper",
            "lower",
            "loose_upper",
            "mc_estimate",
            "mc_std_error",
        ]),
        rows,
    )?)
}

/// One analytic sensing-probability column per sensing radius in `rs_list`,
/// over the spec's `t` grid.
pub fn run_range_sweep(
    spec: &ExperimentSpec,
    rs_list: &[f64],
    q: &QuadratureSpec,
) -> Result<CurveTable, ExperimentError> {
    require_grid(&spec.grid)?;
    if rs_list.is_empty() {
        return Err(ExperimentError::InvalidParameter(
            "sensing-radius list is empty",
        ));
    }
    let mut columns = vec!["t".to_string()];
    let mut nets = Vec::with_capacity(rs_list.len());
    for &rs in rs_list {
        columns.push(format!("sensing_rs_{rs}"));
        nets.push(NetworkModel::new(
            spec.net.forest_radius(),
            spec.net.mean_sensor_count(),
            rs,
        )?);
    }
    let mut rows = Vec::with_capacity(spec.grid.len());
    for &t in &spec.grid {
        let mut row = vec![t];
        for net in &nets {
            row.push(sensing_prob(t, net, &spec.ev, q)?);
        }
        rows.push(row);
    }
    Ok(CurveTable::new(columns, rows)?)
}

/// Sensor-count versus sensing-range tradeoff at a fixed total sensing area:
/// each `m` gets `r_s = sqrt(total_area / (pi m))` and one analytic
/// sensing-probability column over the spec's `t` grid.
pub fn run_tradeoff(
    total_area: f64,
    m_list: &[f64],
    spec: &ExperimentSpec,
    q: &QuadratureSpec,
) -> Result<CurveTable, ExperimentError> {
    require_grid(&spec.grid)?;
    if !(total_area.is_finite() && total_area > 0.0) {
        return Err(ExperimentError::InvalidParameter(
            "total sensing area must be positive and finite",
        ));
    }
    if m_list.is_empty() {
        return Err(ExperimentError::InvalidParameter(
            "sensor-count list is empty",
        ));
    }
    let mut columns = vec!["t".to_string()];
    let mut nets = Vec::with_capacity(m_list.len());
    for &m in m_list {
        if !(m.is_finite() && m > 0.0) {
            return Err(ExperimentError::InvalidParameter(
                "sensor counts in the tradeoff must be positive",
            ));
        }
        let rs = libm::sqrt(total_area / (core::f64::consts::PI * m));
        columns.push(format!("sensing_m_{m}"));
        nets.push(NetworkModel::new(spec.net.forest_radius(), m, rs)?);
    }
    let mut rows = Vec::with_capacity(spec.grid.len());
    for &t in &spec.grid {
        let mut row = vec![t];
        for net in &nets {
            row.push(sensing_prob(t, net, &spec.ev, q)?);
        }
        rows.push(row);
    }
    Ok(CurveTable::new(columns, rows)?)
}

/// Largest pointwise absolute gap between the first value columns of two
/// tables sharing one abscissa grid.
pub fn ks_statistic(a: &CurveTable, b: &CurveTable) -> Result<f64, ExperimentError> {
    if a.n_rows() != b.n_rows() || a.n_columns() < 2 || b.n_columns() < 2 {
        return Err(ExperimentError::MismatchedGrids);
    }
    let mut gap = 0.0f64;
    for (ra, rb) in a.rows().iter().zip(b.rows()) {
        if ra[0] != rb[0] {
            return Err(ExperimentError::MismatchedGrids);
        }
        gap = gap.max((ra[1] - rb[1]).abs());
    }
    Ok(gap)
}

/// Named parameter presets, one per standard figure of merit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// Contact-distance CDF and bounds, `m = 5`, forest radii 5 and 10,
    /// with Monte Carlo columns; one column group per radius.
    Fig2,
    /// Sensing-probability curve and bounds, `r_d = 10`, `m = 10`,
    /// `r_s = 1`, speed 1, with Monte Carlo columns.
    Fig4,
    /// Sensing-radius sweep `r_s in {1, 2, 4}`, `r_d = 40`, `m = 40`,
    /// speed 0.5.
    Fig6,
    /// Count-versus-range tradeoff at total sensing area 40,
    /// `m in {5, 10, 20, 40}`, `r_d = 40`, speed 0.5.
    Fig7,
}

impl Figure {
    pub fn from_name(name: &str) -> Option<Figure> {
        match name {
            "fig2" => Some(Figure::Fig2),
            "fig4" => Some(Figure::Fig4),
            "fig6" => Some(Figure::Fig6),
            "fig7" => Some(Figure::Fig7),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Figure::Fig2 => "fig2",
            Figure::Fig4 => "fig4",
            Figure::Fig6 => "fig6",
            Figure::Fig7 => "fig7",
        }
    }

    pub const ALL: [Figure; 4] = [Figure::Fig2, Figure::Fig4, Figure::Fig6, Figure::Fig7];
}

/// Runs a preset with the given sample budget and seed layout.
pub fn run_figure(
    fig: Figure,
    n_samples: u64,
    seed: SeedSpec,
    q: &QuadratureSpec,
) -> Result<CurveTable, ExperimentError> {
    match fig {
        Figure::Fig2 => {
            // Shared grid out to twice the larger forest radius; the rows
            // beyond a curve's own saturation radius sit on its closed-form
            // branch.
            let grid = linspace(0.0, 20.0, 101);
            let mut columns = vec!["r".to_string()];
            let mut merged: Vec<Vec<f64>> = grid.iter().map(|&r| vec![r]).collect();
            for rd in [5.0, 10.0] {
                let spec = ExperimentSpec {
                    net: NetworkModel::new(rd, 5.0, 0.0)?,
                    ev: EventModel::new(1.0)?,
                    grid: grid.clone(),
                    n_samples,
                    seed,
                };
                let part = run_cdf_experiment(&spec, q)?;
                for label in &part.columns()[1..] {
                    columns.push(format!("{label}_rd_{rd}"));
                }
                for (row, part_row) in merged.iter_mut().zip(part.rows()) {
                    row.extend_from_slice(&part_row[1..]);
                }
            }
            Ok(CurveTable::new(columns, merged)?)
        }
        Figure::Fig4 => {
            let net = NetworkModel::new(10.0, 10.0, 1.0)?;
            let ev = EventModel::new(1.0)?;
            let spec = ExperimentSpec {
                grid: default_t_grid(&net, &ev),
                net,
                ev,
                n_samples,
                seed,
            };
            run_sensing_curve(&spec, q)
        }
        Figure::Fig6 => {
            let net = NetworkModel::new(40.0, 40.0, 1.0)?;
            let ev = EventModel::new(0.5)?;
            let spec = ExperimentSpec {
                grid: default_t_grid(&net, &ev),
                net,
                ev,
                n_samples,
                seed,
            };
            run_range_sweep(&spec, &[1.0, 2.0, 4.0], q)
        }
        Figure::Fig7 => {
            let net = NetworkModel::new(40.0, 40.0, 1.0)?;
            let ev = EventModel::new(0.5)?;
            let spec = ExperimentSpec {
                // Covers the critical time 10 with room to show the crossing.
                grid: linspace(0.0, 20.0, 101),
                net,
                ev,
                n_samples,
                seed,
            };
            run_tradeoff(40.0, &[5.0, 10.0, 20.0, 40.0], &spec, q)
        }
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}
