//! Ground-truth simulator: samples sensor deployments and event origins,
//! measures contact and nearest-neighbor distances and detection times, and
//! turns them into estimators with binomial standard errors.
//!
//! Sampling is deterministic given a [`SeedSpec`]: shard `i` draws from a
//! ChaCha stream selected by `(master_seed, i)`, and shard results are merged
//! as plain sums of counts, so estimates are bit-identical no matter how the
//! shards are scheduled. Radii are drawn by inversion (`r_d * sqrt(U)`) so
//! every realization consumes a fixed number of draws per point, keeping
//! streams aligned across parameter sweeps.
//!
//! Empty deployments have no nearest sensor; their contact distance is
//! [`f64::INFINITY`], never a finite sentinel, and estimators count them as
//! "not within range" at every threshold.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::num::NonZeroU32;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analytic::{EventModel, NetworkModel};
use crate::geometry::Point2;
use crate::table::{CurveTable, TableError};

/// Master seed plus shard layout for reproducible estimation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedSpec {
    master_seed: u64,
    shard_count: NonZeroU32,
}

impl SeedSpec {
    pub fn new(master_seed: u64, shard_count: NonZeroU32) -> Self {
        Self {
            master_seed,
            shard_count,
        }
    }

    /// Single-shard spec, handy for tests and small runs.
    pub fn single(master_seed: u64) -> Self {
        Self::new(master_seed, NonZeroU32::MIN)
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn shard_count(&self) -> u32 {
        self.shard_count.get()
    }

    /// The private RNG stream of one shard.
    pub fn shard_rng(&self, shard_index: u32) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed);
        rng.set_stream(shard_index as u64);
        rng
    }

    /// Split `n` samples across shards: the first `n % shards` shards take
    /// one extra.
    fn shard_sizes(&self, n: u64) -> Vec<u64> {
        let k = self.shard_count.get() as u64;
        (0..k).map(|i| n / k + u64::from(i < n % k)).collect()
    }
}

/// Uniform draw in `[0, 1)` with 53 random bits.
fn next_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Poisson sample: sequential inversion below mean 30, transformed rejection
/// with squeeze above.
pub fn sample_poisson(mean: f64, rng: &mut impl RngCore) -> u64 {
    assert!(
        mean.is_finite() && mean >= 0.0,
        "Poisson mean must be nonnegative and finite, got {mean}"
    );
    if mean == 0.0 {
        return 0;
    }
    if mean < 30.0 {
        poisson_inversion(mean, rng)
    } else {
        poisson_ptrs(mean, rng)
    }
}

fn poisson_inversion(mean: f64, rng: &mut impl RngCore) -> u64 {
    let u = next_f64(rng);
    let mut k = 0u64;
    let mut p = libm::exp(-mean);
    let mut cum = p;
    // The cap only matters if `u` lands inside the last few ulps of the CDF.
    let cap = 200 + (10.0 * mean) as u64;
    while u > cum && k < cap {
        k += 1;
        p *= mean / k as f64;
        cum += p;
    }
    k
}

/// Hörmann's PTRS transformed-rejection sampler.
fn poisson_ptrs(mean: f64, rng: &mut impl RngCore) -> u64 {
    let b = 0.931 + 2.53 * libm::sqrt(mean);
    let a = -0.059 + 0.02483 * b;
    let inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    let v_r = 0.9277 - 3.6224 / (b - 2.0);
    let ln_mean = libm::log(mean);
    loop {
        let u = next_f64(rng) - 0.5;
        let v = next_f64(rng);
        let us = 0.5 - u.abs();
        let k = libm::floor((2.0 * a / us + b) * u + mean + 0.43);
        if us >= 0.07 && v <= v_r {
            return k as u64;
        }
        if k < 0.0 || (us < 0.013 && v > us) {
            continue;
        }
        let accept = libm::log(v * inv_alpha / (a / (us * us) + b))
            <= k * ln_mean - mean - libm::lgamma(k + 1.0);
        if accept {
            return k as u64;
        }
    }
}

/// Uniform point in the disk of radius `rd`: radius by inversion, then angle.
fn sample_disk_point(rd: f64, rng: &mut impl RngCore) -> Point2 {
    let r = rd * libm::sqrt(next_f64(rng));
    let theta = 2.0 * PI * next_f64(rng);
    Point2::new(r * libm::cos(theta), r * libm::sin(theta))
}

/// One deployment: Poisson count, then i.i.d. uniform positions in the disk.
pub fn sample_fhppp(net: &NetworkModel, rng: &mut impl RngCore) -> Vec<Point2> {
    let count = sample_poisson(net.mean_sensor_count(), rng);
    (0..count)
        .map(|_| sample_disk_point(net.forest_radius(), rng))
        .collect()
}

/// Uniform event origin in the deployment disk, independent of any
/// deployment.
pub fn sample_event_origin(net: &NetworkModel, rng: &mut impl RngCore) -> Point2 {
    sample_disk_point(net.forest_radius(), rng)
}

/// One sampled deployment together with one event origin.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    pub sensors: Vec<Point2>,
    pub event_origin: Point2,
}

impl Realization {
    /// Draws the deployment first, then the origin, in a fixed number of
    /// uniforms per point so shard streams stay aligned.
    pub fn sample(net: &NetworkModel, rng: &mut impl RngCore) -> Self {
        let sensors = sample_fhppp(net, rng);
        let event_origin = sample_event_origin(net, rng);
        Self {
            sensors,
            event_origin,
        }
    }
}

/// Distance from the event origin to the nearest sensor;
/// [`f64::INFINITY`] when the deployment is empty.
pub fn contact_distance(real: &Realization) -> f64 {
    real.sensors
        .iter()
        .map(|s| s.distance(&real.event_origin))
        .fold(f64::INFINITY, f64::min)
}

/// Per-sensor nearest-neighbor distances; a lone sensor gets
/// [`f64::INFINITY`].
pub fn nearest_neighbor_distances(sensors: &[Point2]) -> Vec<f64> {
    sensors
        .iter()
        .enumerate()
        .map(|(i, a)| {
            sensors
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, b)| a.distance(b))
                .fold(f64::INFINITY, f64::min)
        })
        .collect()
}

/// Whether the event has been sensed by time `t`: some sensor lies within
/// the effective radius `sensing_radius + speed * t` of the origin
/// (tangency counts).
pub fn is_detected(real: &Realization, net: &NetworkModel, ev: &EventModel, t: f64) -> bool {
    assert!(t >= 0.0, "time must be nonnegative, got {t}");
    contact_distance(real) <= ev.envelope_radius(net, t)
}

/// A Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimatorResult {
    pub estimate: f64,
    pub std_error: f64,
    pub n_samples: u64,
}

/// Binomial (Wald) estimate of a probability from `successes` out of `n`.
pub fn binomial_estimate(successes: u64, n: u64) -> EstimatorResult {
    assert!(n >= 1, "estimator needs at least one sample");
    assert!(successes <= n, "successes {successes} exceed samples {n}");
    let p = successes as f64 / n as f64;
    EstimatorResult {
        estimate: p,
        std_error: libm::sqrt(p * (1.0 - p) / n as f64),
        n_samples: n,
    }
}

fn check_grid(grid: &[f64]) -> Result<(), TableError> {
    if let Some(first) = grid.first() {
        if !first.is_finite() {
            return Err(TableError::AbscissaNotIncreasing { row: 0 });
        }
    }
    for (i, w) in grid.windows(2).enumerate() {
        if !(w[1] > w[0]) {
            return Err(TableError::AbscissaNotIncreasing { row: i + 1 });
        }
    }
    Ok(())
}

/// Shared core of the threshold estimators: counts realizations whose
/// contact distance is at or below `thresholds[j]`, using the same
/// realizations for every grid point (common random numbers), and emits
/// `[abscissa, estimate, std_error]` rows.
fn empirical_threshold_cdf(
    net: &NetworkModel,
    label: &str,
    grid: &[f64],
    thresholds: &[f64],
    n: u64,
    seed: &SeedSpec,
) -> Result<CurveTable, TableError> {
    check_grid(grid)?;
    assert!(n >= 1, "estimator needs at least one sample");
    let mut first_bin = vec![0u64; thresholds.len() + 1];
    for (shard, size) in seed.shard_sizes(n).into_iter().enumerate() {
        let mut rng = seed.shard_rng(shard as u32);
        for _ in 0..size {
            let real = Realization::sample(net, &mut rng);
            let d = contact_distance(&real);
            // First grid index whose threshold reaches d (closed condition).
            let idx = thresholds.partition_point(|&th| th < d);
            first_bin[idx] += 1;
        }
    }
    let mut rows = Vec::with_capacity(grid.len());
    let mut within = 0u64;
    for (j, &x) in grid.iter().enumerate() {
        within += first_bin[j];
        let est = binomial_estimate(within, n);
        rows.push(vec![x, est.estimate, est.std_error]);
    }
    CurveTable::new(
        vec![label.to_string(), "estimate".to_string(), "std_error".to_string()],
        rows,
    )
}

/// Empirical CDF of the contact distance on `r_grid`.
///
/// Infinite contact distances (empty deployments) are never counted, so the
/// estimate tops out at the fraction of nonempty deployments.
pub fn empirical_contact_cdf(
    net: &NetworkModel,
    r_grid: &[f64],
    n: u64,
    seed: &SeedSpec,
) -> Result<CurveTable, TableError> {
    empirical_threshold_cdf(net, "r", r_grid, r_grid, n, seed)
}

/// Empirical CDF of the nearest-neighbor distance of a typical sensor.
///
/// Averages per-sensor indicators across realizations: the numerator counts
/// sensors whose nearest neighbor is within `r`, the denominator counts all
/// sensors. Lone sensors enter the denominator only (their neighbor distance
/// is infinite); empty deployments contribute nothing.
pub fn empirical_nn_cdf(
    net: &NetworkModel,
    r_grid: &[f64],
    n: u64,
    seed: &SeedSpec,
) -> Result<CurveTable, TableError> {
    check_grid(r_grid)?;
    assert!(n >= 1, "estimator needs at least one sample");
    let mut first_bin = vec![0u64; r_grid.len() + 1];
    let mut denominator = 0u64;
    for (shard, size) in seed.shard_sizes(n).into_iter().enumerate() {
        let mut rng = seed.shard_rng(shard as u32);
        for _ in 0..size {
            let real = Realization::sample(net, &mut rng);
            denominator += real.sensors.len() as u64;
            for d in nearest_neighbor_distances(&real.sensors) {
                let idx = r_grid.partition_point(|&r| r < d);
                first_bin[idx] += 1;
            }
        }
    }
    let mut rows = Vec::with_capacity(r_grid.len());
    let mut within = 0u64;
    for (j, &r) in r_grid.iter().enumerate() {
        within += first_bin[j];
        let est = if denominator == 0 {
            // No sensors ever materialized; the estimate is vacuously zero.
            EstimatorResult {
                estimate: 0.0,
                std_error: 0.0,
                n_samples: 0,
            }
        } else {
            binomial_estimate(within, denominator)
        };
        rows.push(vec![r, est.estimate, est.std_error]);
    }
    CurveTable::new(
        vec!["r".to_string(), "estimate".to_string(), "std_error".to_string()],
        rows,
    )
}

/// Empirical event-sensing probability on `t_grid`.
///
/// Uses one set of realizations for the whole grid, so the curve is monotone
/// in `t` by construction and equals [`empirical_contact_cdf`] evaluated at
/// the effective radii when run with the same seed.
pub fn empirical_sensing_prob(
    net: &NetworkModel,
    ev: &EventModel,
    t_grid: &[f64],
    n: u64,
    seed: &SeedSpec,
) -> Result<CurveTable, TableError> {
    if let Some(&t0) = t_grid.first() {
        assert!(t0 >= 0.0, "time grid must be nonnegative, got {t0}");
    }
    let thresholds: Vec<f64> = t_grid.iter().map(|&t| ev.envelope_radius(net, t)).collect();
    empirical_threshold_cdf(net, "t", t_grid, &thresholds, n, seed)
}

/// Per-realization detection times:
/// `max(0, (contact - sensing_radius) / speed)`, or [`f64::INFINITY`] for
/// empty deployments. Requires a growing event.
pub fn empirical_detection_time(
    net: &NetworkModel,
    ev: &EventModel,
    n: u64,
    seed: &SeedSpec,
) -> Vec<f64> {
    assert!(
        ev.expansion_speed() > 0.0,
        "detection times need a positive expansion speed"
    );
    let mut times = Vec::with_capacity(n as usize);
    for (shard, size) in seed.shard_sizes(n).into_iter().enumerate() {
        let mut rng = seed.shard_rng(shard as u32);
        for _ in 0..size {
            let real = Realization::sample(net, &mut rng);
            let d = contact_distance(&real);
            times.push(if d.is_infinite() {
                f64::INFINITY
            } else {
                ((d - net.sensing_radius()) / ev.expansion_speed()).max(0.0)
            });
        }
    }
    times
}

#[cfg(test)]
mod tests {
    use super::*;

    const ONE_MINUS_E5: f64 = 0.9932620530009145;

    fn net(rd: f64, m: f64, rs: f64) -> NetworkModel {
        NetworkModel::new(rd, m, rs).unwrap()
    }

    fn seeded(seed: u64) -> ChaCha8Rng {
        SeedSpec::single(seed).shard_rng(0)
    }

    #[test]
    fn poisson_zero_mean_is_zero() {
        let mut rng = seeded(1);
        for _ in 0..100 {
            assert_eq!(sample_poisson(0.0, &mut rng), 0);
        }
    }

    #[test]
    fn poisson_inversion_mean_and_variance() {
        let mut rng = seeded(2);
        let n = 100_000u64;
        let (mut sum, mut sumsq) = (0.0, 0.0);
        for _ in 0..n {
            let k = sample_poisson(10.0, &mut rng) as f64;
            sum += k;
            sumsq += k * k;
        }
        let mean = sum / n as f64;
        let var = sumsq / n as f64 - mean * mean;
        let tol = 3.0 * libm::sqrt(10.0 / n as f64);
        assert!((mean - 10.0).abs() < tol, "mean {mean}");
        assert!((var - 10.0).abs() < 0.4, "variance {var}");
    }

    #[test]
    fn poisson_ptrs_mean_and_variance() {
        let mut rng = seeded(3);
        let n = 50_000u64;
        let (mut sum, mut sumsq) = (0.0, 0.0);
        for _ in 0..n {
            let k = sample_poisson(100.0, &mut rng) as f64;
            sum += k;
            sumsq += k * k;
        }
        let mean = sum / n as f64;
        let var = sumsq / n as f64 - mean * mean;
        let tol = 3.0 * libm::sqrt(100.0 / n as f64);
        assert!((mean - 100.0).abs() < tol, "mean {mean}");
        assert!((var - 100.0).abs() < 4.0, "variance {var}");
    }

    #[test]
    fn void_probability_matches_poisson_mass() {
        let n = net(5.0, 5.0, 0.0);
        let mut rng = seeded(4);
        let trials = 100_000u64;
        let empties = (0..trials)
            .filter(|_| sample_fhppp(&n, &mut rng).is_empty())
            .count() as u64;
        let p0 = libm::exp(-5.0);
        let sigma = libm::sqrt(p0 * (1.0 - p0) / trials as f64);
        let frac = empties as f64 / trials as f64;
        assert!((frac - p0).abs() <= 3.0 * sigma, "{frac} vs {p0}");
    }

    #[test]
    fn fhppp_points_stay_in_disk() {
        let n = net(3.0, 20.0, 0.0);
        let mut rng = seeded(5);
        for _ in 0..200 {
            for p in sample_fhppp(&n, &mut rng) {
                assert!(p.norm() <= 3.0 + 1e-12);
            }
        }
    }

    #[test]
    fn event_origin_radius_distribution() {
        // KS test against the CDF y^2 / r_d^2 plus a check of the mean
        // 2 r_d / 3 (the radial density is 2y / r_d^2).
        let n = net(5.0, 5.0, 0.0);
        let mut rng = seeded(6);
        let samples = 100_000usize;
        let mut radii: Vec<f64> = (0..samples)
            .map(|_| sample_event_origin(&n, &mut rng).norm())
            .collect();
        radii.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut ks = 0.0f64;
        for (i, &y) in radii.iter().enumerate() {
            let f = (y / 5.0) * (y / 5.0);
            ks = ks.max((f - i as f64 / samples as f64).abs());
            ks = ks.max(((i + 1) as f64 / samples as f64 - f).abs());
        }
        assert!(ks < 1.63 / libm::sqrt(samples as f64), "KS statistic {ks}");

        let mean = radii.iter().sum::<f64>() / samples as f64;
        // Var of the radius is r_d^2 / 18.
        let se = 5.0 / libm::sqrt(18.0 * samples as f64);
        assert!((mean - 2.0 * 5.0 / 3.0).abs() < 3.0 * se, "mean {mean}");
    }

    #[test]
    fn contact_distance_cases() {
        let empty = Realization {
            sensors: vec![],
            event_origin: Point2::new(0.0, 0.0),
        };
        assert!(contact_distance(&empty).is_infinite());

        let single = Realization {
            sensors: vec![Point2::new(0.0, 0.0)],
            event_origin: Point2::new(3.0, 4.0),
        };
        assert_eq!(contact_distance(&single), 5.0);

        let pair = Realization {
            sensors: vec![Point2::new(1.0, 0.0), Point2::new(0.0, 2.0)],
            event_origin: Point2::new(0.0, 0.0),
        };
        assert_eq!(contact_distance(&pair), 1.0);
    }

    #[test]
    fn nearest_neighbor_cases() {
        assert!(nearest_neighbor_distances(&[]).is_empty());
        let lone = nearest_neighbor_distances(&[Point2::new(1.0, 1.0)]);
        assert_eq!(lone.len(), 1);
        assert!(lone[0].is_infinite());
        // A forced pair at distance d: both sensors report exactly d.
        let pair = nearest_neighbor_distances(&[Point2::new(0.0, 0.0), Point2::new(0.0, 2.5)]);
        assert_eq!(pair, vec![2.5, 2.5]);
    }

    #[test]
    fn detection_indicator_cases() {
        let n = net(10.0, 10.0, 1.0);
        let ev = EventModel::new(1.0).unwrap();
        let empty = Realization {
            sensors: vec![],
            event_origin: Point2::new(0.0, 0.0),
        };
        for t in [0.0, 5.0, 100.0] {
            assert!(!is_detected(&empty, &n, &ev, t));
        }
        // Sensor exactly at the effective radius: closed condition, detected.
        let tangent = Realization {
            sensors: vec![Point2::new(3.0, 0.0)],
            event_origin: Point2::new(0.0, 0.0),
        };
        assert!(is_detected(&tangent, &n, &ev, 2.0));
        assert!(!is_detected(&tangent, &n, &ev, 1.9));
        // Zero sensing radius at t = 0 misses any displaced sensor.
        let bare = net(10.0, 10.0, 0.0);
        assert!(!is_detected(&tangent, &bare, &ev, 0.0));
    }

    #[test]
    fn binomial_estimate_basics() {
        let r = binomial_estimate(0, 100);
        assert_eq!(r.estimate, 0.0);
        assert_eq!(r.std_error, 0.0);
        let r = binomial_estimate(100, 100);
        assert_eq!(r.estimate, 1.0);
        assert_eq!(r.std_error, 0.0);
        let r = binomial_estimate(50, 100);
        assert_eq!(r.estimate, 0.5);
        assert!((r.std_error - 0.05).abs() < 1e-12);
        assert_eq!(r.n_samples, 100);
    }

    #[test]
    fn empirical_cdf_endpoints() {
        let n = net(5.0, 5.0, 0.0);
        let seed = SeedSpec::single(7);
        let t = empirical_contact_cdf(&n, &[0.0, 12.0], 50_000, &seed).unwrap();
        assert_eq!(t.rows()[0][1], 0.0);
        let est = t.rows()[1][1];
        let se = t.rows()[1][2];
        assert!((est - ONE_MINUS_E5).abs() <= 3.0 * se, "{est}");
    }

    #[test]
    fn empirical_cdf_is_deterministic() {
        let n = net(5.0, 5.0, 0.0);
        let grid = [0.5, 1.0, 2.0, 4.0];
        for shards in [1u32, 4] {
            let seed = SeedSpec::new(99, NonZeroU32::new(shards).unwrap());
            let a = empirical_contact_cdf(&n, &grid, 20_000, &seed).unwrap();
            let b = empirical_contact_cdf(&n, &grid, 20_000, &seed).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn empirical_cdf_rejects_bad_grid() {
        let n = net(5.0, 5.0, 0.0);
        let seed = SeedSpec::single(1);
        assert!(empirical_contact_cdf(&n, &[1.0, 1.0], 10, &seed).is_err());
        assert!(empirical_contact_cdf(&n, &[2.0, 1.0], 10, &seed).is_err());
    }

    #[test]
    fn sensing_matches_contact_at_effective_radii() {
        let n = net(5.0, 5.0, 1.0);
        let ev = EventModel::new(2.0).unwrap();
        let seed = SeedSpec::new(42, NonZeroU32::new(3).unwrap());
        let t_grid = [0.0, 0.5, 1.0, 2.0, 4.5];
        let r_grid: Vec<f64> = t_grid.iter().map(|&t| ev.envelope_radius(&n, t)).collect();
        let sense = empirical_sensing_prob(&n, &ev, &t_grid, 20_000, &seed).unwrap();
        let contact = empirical_contact_cdf(&n, &r_grid, 20_000, &seed).unwrap();
        for (a, b) in sense.rows().iter().zip(contact.rows()) {
            assert_eq!(a[1], b[1]);
            assert_eq!(a[2], b[2]);
        }
        // Monotone by construction under common random numbers.
        for w in sense.rows().windows(2) {
            assert!(w[1][1] >= w[0][1]);
        }
    }

    #[test]
    fn detection_times_match_sensing_curve() {
        let n = net(5.0, 5.0, 1.0);
        let ev = EventModel::new(2.0).unwrap();
        let seed = SeedSpec::new(11, NonZeroU32::new(2).unwrap());
        let samples = 10_000u64;
        let times = empirical_detection_time(&n, &ev, samples, &seed);
        assert_eq!(times.len(), samples as usize);
        let t_grid = [0.0, 0.5, 1.0, 2.0, 4.5];
        let sense = empirical_sensing_prob(&n, &ev, &t_grid, samples, &seed).unwrap();
        for (j, &t) in t_grid.iter().enumerate() {
            let frac = times.iter().filter(|&&x| x <= t).count() as f64 / samples as f64;
            assert_eq!(frac, sense.rows()[j][1], "at t={t}");
        }
    }

    #[test]
    fn detection_time_formula_cases() {
        // Contact within the sensing radius: detected at occurrence.
        let real = Realization {
            sensors: vec![Point2::new(1.0, 0.0)],
            event_origin: Point2::new(0.0, 0.0),
        };
        let d = contact_distance(&real);
        assert_eq!(((d - 2.0) / 0.5).max(0.0), 0.0);
        // Linear growth beyond the sensing radius.
        let far = Realization {
            sensors: vec![Point2::new(4.5, 0.0)],
            event_origin: Point2::new(0.0, 0.0),
        };
        let d = contact_distance(&far);
        assert_eq!((d - 2.0) / 0.5, 5.0);
    }

    #[test]
    fn nn_cdf_agrees_with_contact_cdf() {
        // The two distance distributions coincide for this deployment model;
        // compare the estimators pointwise under a pooled 3-sigma envelope.
        let n = net(5.0, 5.0, 0.0);
        let seed = SeedSpec::single(21);
        let grid: Vec<f64> = (0..=20).map(|i| 0.5 * i as f64).collect();
        let samples = 20_000u64;
        let contact = empirical_contact_cdf(&n, &grid, samples, &seed).unwrap();
        let nn = empirical_nn_cdf(&n, &grid, samples, &seed).unwrap();
        for (a, b) in contact.rows().iter().zip(nn.rows()) {
            let gap = (a[1] - b[1]).abs();
            let pooled = libm::sqrt(a[2] * a[2] + b[2] * b[2]);
            assert!(gap <= 3.0 * pooled, "r={} gap={gap} pooled={pooled}", a[0]);
        }
    }

    #[test]
    fn shard_sizes_partition_evenly() {
        let seed = SeedSpec::new(0, NonZeroU32::new(4).unwrap());
        assert_eq!(seed.shard_sizes(10), vec![3, 3, 2, 2]);
        assert_eq!(seed.shard_sizes(3), vec![1, 1, 1, 0]);
        assert_eq!(SeedSpec::single(0).shard_sizes(5), vec![5]);
    }
}
