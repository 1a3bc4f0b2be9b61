//! Closed-form and quadrature-based quantities for a sensor network deployed
//! as a finite homogeneous Poisson process on a disk: the contact-distance
//! CDF, three bounds on it, its asymptotic limits, and the event-sensing
//! probability with its bounds.
//!
//! Every probability here reduces to integrals of `exp(-intensity * area)`
//! against the radial density of a uniform point in the disk, where `area`
//! is a circle–circle intersection from [`crate::geometry`]. A deployment is
//! empty with probability `e^-m`; that mass sits at infinite contact
//! distance, so every CDF saturates at `1 - e^-m` once the probe radius
//! reaches twice the forest radius.
//!
//! # Bound evaluation
//!
//! The upper bound replaces the lens area by the smaller of the bounding
//! rectangle area and the contained-disk area `min(pi r^2, pi r_d^2)`; the
//! lower bound replaces it by the inscribed-circle area. Both have exact
//! closed forms, and both also have `_by_quadrature` twins that integrate the
//! bounding-area integrand directly so the closed forms can be cross-checked.
//! [`contact_cdf_upper_printed`] evaluates the rectangle bound *without* the
//! contained-disk clamp; it is kept for comparison because it rises above the
//! loose bound near saturation and therefore does not satisfy the bound
//! ordering the rest of the crate guarantees.

use core::f64::consts::PI;
use core::fmt;

use crate::geometry::{circ_lower_raw, lens_area_raw, rect_upper_raw};
use crate::quad::{integrate, QuadratureError, QuadratureSpec};

/// Invalid model parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelError {
    pub name: &'static str,
    pub requirement: &'static str,
    pub value: f64,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} must be {}, got {}",
            self.name, self.requirement, self.value
        )
    }
}

impl core::error::Error for ModelError {}

/// The deployment region and sensor population: a disk of given radius
/// holding on average `mean_sensor_count` sensors, each sensing a fixed
/// radius around itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkModel {
    forest_radius: f64,
    mean_sensor_count: f64,
    sensing_radius: f64,
    intensity: f64,
}

impl NetworkModel {
    pub fn new(
        forest_radius: f64,
        mean_sensor_count: f64,
        sensing_radius: f64,
    ) -> Result<Self, ModelError> {
        if !(forest_radius.is_finite() && forest_radius > 0.0) {
            return Err(ModelError {
                name: "forest_radius",
                requirement: "positive and finite",
                value: forest_radius,
            });
        }
        if !(mean_sensor_count.is_finite() && mean_sensor_count >= 0.0) {
            return Err(ModelError {
                name: "mean_sensor_count",
                requirement: "nonnegative and finite",
                value: mean_sensor_count,
            });
        }
        if !(sensing_radius.is_finite() && sensing_radius >= 0.0) {
            return Err(ModelError {
                name: "sensing_radius",
                requirement: "nonnegative and finite",
                value: sensing_radius,
            });
        }
        Ok(Self {
            forest_radius,
            mean_sensor_count,
            sensing_radius,
            intensity: mean_sensor_count / (PI * forest_radius * forest_radius),
        })
    }

    /// Radius of the deployment disk.
    pub fn forest_radius(&self) -> f64 {
        self.forest_radius
    }

    /// Mean number of deployed sensors (the Poisson mean).
    pub fn mean_sensor_count(&self) -> f64 {
        self.mean_sensor_count
    }

    /// Sensing radius of an individual sensor.
    pub fn sensing_radius(&self) -> f64 {
        self.sensing_radius
    }

    /// Sensor density inside the disk: `mean_sensor_count / (pi r_d^2)`.
    pub fn intensity(&self) -> f64 {
        self.intensity
    }
}

/// A growing circular event: the envelope expands at constant speed, so at
/// time `t` the set of sensor positions that can pick it up is a disk of
/// radius `speed * t + sensing_radius` around the event origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EventModel {
    expansion_speed: f64,
}

impl EventModel {
    pub fn new(expansion_speed: f64) -> Result<Self, ModelError> {
        if !(expansion_speed.is_finite() && expansion_speed >= 0.0) {
            return Err(ModelError {
                name: "expansion_speed",
                requirement: "nonnegative and finite",
                value: expansion_speed,
            });
        }
        Ok(Self { expansion_speed })
    }

    pub fn expansion_speed(&self) -> f64 {
        self.expansion_speed
    }

    /// Effective detection radius at time `t`: the Minkowski sum of the
    /// event envelope and a sensing disk, `speed * t + sensing_radius`.
    pub fn envelope_radius(&self, net: &NetworkModel, t: f64) -> f64 {
        self.expansion_speed * t + net.sensing_radius()
    }
}

fn clamp_prob(p: f64) -> f64 {
    p.clamp(0.0, 1.0)
}

/// Probability mass reached once every deployment with at least one sensor
/// is counted: `1 - e^-m`.
fn saturation(net: &NetworkModel) -> f64 {
    -libm::expm1(-net.mean_sensor_count())
}

/// Radial density of the event origin: `2y / r_d^2` on `[0, r_d]`, else 0.
pub fn event_radius_pdf(y: f64, net: &NetworkModel) -> f64 {
    let rd = net.forest_radius();
    if (0.0..=rd).contains(&y) {
        2.0 * y / (rd * rd)
    } else {
        0.0
    }
}

/// CDF of the distance from a uniformly random event origin to the nearest
/// sensor of the deployment.
///
/// For `r < 2 r_d` this is `1 - E[exp(-intensity * lens(r, r_d, |Y|))]`,
/// integrated over the radial density of the origin with the integration
/// domain split at `|r - r_d|` where the lens formula has a kink. For
/// `r >= 2 r_d` only empty deployments remain unsensed, giving `1 - e^-m`.
pub fn contact_cdf(
    r: f64,
    net: &NetworkModel,
    q: &QuadratureSpec,
) -> Result<f64, QuadratureError> {
    assert!(r >= 0.0, "contact radius must be nonnegative, got {r}");
    let rd = net.forest_radius();
    if r >= 2.0 * rd {
        return Ok(saturation(net));
    }
    if r == 0.0 {
        return Ok(0.0);
    }
    let lam = net.intensity();
    let integrand = |y: f64| -libm::expm1(-lam * lens_area_raw(r, rd, y)) * 2.0 * y / (rd * rd);
    let value = integrate(integrand, 0.0, rd, &[(r - rd).abs()], q)?;
    Ok(clamp_prob(value))
}

/// Quantities shared by the closed-form bounds at probe radius `r`.
struct BoundParams {
    lam: f64,
    /// `2 * intensity * min(r, r_d)`.
    alpha: f64,
    /// `min(pi r^2, pi r_d^2)`, the area once one disk contains the other.
    contained: f64,
    /// Contribution of origins with `|Y| <= |r - r_d|`, where the lens
    /// saturates at `contained`.
    containment_term: f64,
}

impl BoundParams {
    fn new(r: f64, net: &NetworkModel) -> Self {
        let rd = net.forest_radius();
        let lam = net.intensity();
        let mn = r.min(rd);
        let contained = PI * mn * mn;
        let containment_term = libm::exp(-lam * contained) * (rd - r) * (rd - r) / (rd * rd);
        BoundParams {
            lam,
            alpha: 2.0 * lam * mn,
            contained,
            containment_term,
        }
    }
}

/// Upper bound on [`contact_cdf`], from replacing the lens area by
/// `min(pi r^2, pi r_d^2, rectangle area)`.
///
/// Closed form; equals [`contact_cdf_upper_by_quadrature`] to roughly
/// machine precision and never exceeds [`contact_cdf_loose_upper`].
pub fn contact_cdf_upper(r: f64, net: &NetworkModel) -> f64 {
    assert!(r >= 0.0, "contact radius must be nonnegative, got {r}");
    let rd = net.forest_radius();
    if r >= 2.0 * rd {
        return saturation(net);
    }
    if r == 0.0 || net.intensity() == 0.0 {
        return 0.0;
    }
    let p = BoundParams::new(r, net);
    let lens_lo = (r - rd).abs();
    // The rectangle area exceeds `contained` for origins closer than
    // `cross`, so the min saturates there.
    let cross = (r + rd - 0.5 * PI * r.min(rd)).min(rd);
    let sat_term =
        libm::exp(-p.lam * p.contained) * (cross * cross - lens_lo * lens_lo) / (rd * rd);
    let rect_term = if cross < rd {
        2.0 / (p.alpha * rd * rd)
            * (libm::exp(-p.alpha * r) * (rd - 1.0 / p.alpha)
                - libm::exp(-p.alpha * (r + rd - cross)) * (cross - 1.0 / p.alpha))
    } else {
        0.0
    };
    clamp_prob(1.0 - (p.containment_term + sat_term + rect_term))
}

/// The rectangle-bound closed form *without* the contained-disk clamp.
///
/// Kept for cross-checking: it agrees with quadrature of the raw rectangle
/// integrand, but near `r = 2 r_d` it rises above the loose upper bound, so
/// [`contact_cdf_upper`] (the clamped form) is what the bound ordering uses.
pub fn contact_cdf_upper_printed(r: f64, net: &NetworkModel) -> f64 {
    assert!(r >= 0.0, "contact radius must be nonnegative, got {r}");
    let rd = net.forest_radius();
    if r >= 2.0 * rd {
        return saturation(net);
    }
    if r == 0.0 || net.intensity() == 0.0 {
        return 0.0;
    }
    let p = BoundParams::new(r, net);
    let bracket = p.containment_term
        + 2.0 / (p.alpha * rd * rd)
            * (libm::exp(-p.alpha * r) * (rd - 1.0 / p.alpha)
                + libm::exp(-p.alpha * p.alpha / p.lam) * (1.0 / p.alpha - (rd - r).abs()));
    clamp_prob(1.0 - bracket)
}

/// Lower bound on [`contact_cdf`], from replacing the lens area by the
/// inscribed-circle area. Closed form in terms of `erf`.
pub fn contact_cdf_lower(r: f64, net: &NetworkModel) -> f64 {
    assert!(r >= 0.0, "contact radius must be nonnegative, got {r}");
    let rd = net.forest_radius();
    if r >= 2.0 * rd {
        return saturation(net);
    }
    if r == 0.0 || net.intensity() == 0.0 {
        return 0.0;
    }
    let p = BoundParams::new(r, net);
    let sqrt_lam = libm::sqrt(p.lam);
    let erf_term = 2.0 * (rd + r) / (rd * rd * sqrt_lam)
        * (libm::erf(-0.5 * r * libm::sqrt(p.lam * PI))
            - libm::erf(-0.5 * p.alpha * libm::sqrt(PI / p.lam)));
    let exp_term = 4.0 / (PI * rd * rd * p.lam)
        * (libm::exp(-PI * p.alpha * p.alpha / (4.0 * p.lam))
            - libm::exp(-p.lam * PI * r * r / 4.0));
    clamp_prob(1.0 - (p.containment_term + erf_term + exp_term))
}

/// Loose upper bound: replace the lens area by `min(pi r^2, pi r_d^2)`
/// everywhere, which collapses the integral to a single exponential.
pub fn contact_cdf_loose_upper(r: f64, net: &NetworkModel) -> f64 {
    assert!(r >= 0.0, "contact radius must be nonnegative, got {r}");
    let rd = net.forest_radius();
    if r >= 2.0 * rd {
        return saturation(net);
    }
    let contained = PI * r.min(rd) * r.min(rd);
    clamp_prob(-libm::expm1(-net.intensity() * contained))
}

/// Quadrature twin of [`contact_cdf_upper`]: integrates
/// `1 - exp(-intensity * min(pi r^2, pi r_d^2, rectangle area))` directly.
pub fn contact_cdf_upper_by_quadrature(
    r: f64,
    net: &NetworkModel,
    q: &QuadratureSpec,
) -> Result<f64, QuadratureError> {
    bound_by_quadrature(r, net, q, |r, rd, y| {
        rect_upper_raw(r, rd, y).min(PI * r.min(rd) * r.min(rd))
    })
}

/// Quadrature twin of [`contact_cdf_lower`]: integrates
/// `1 - exp(-intensity * inscribed-circle area)` directly.
pub fn contact_cdf_lower_by_quadrature(
    r: f64,
    net: &NetworkModel,
    q: &QuadratureSpec,
) -> Result<f64, QuadratureError> {
    bound_by_quadrature(r, net, q, circ_lower_raw)
}

fn bound_by_quadrature(
    r: f64,
    net: &NetworkModel,
    q: &QuadratureSpec,
    lens_bound: impl Fn(f64, f64, f64) -> f64,
) -> Result<f64, QuadratureError> {
    assert!(r >= 0.0, "contact radius must be nonnegative, got {r}");
    let rd = net.forest_radius();
    if r >= 2.0 * rd {
        return Ok(saturation(net));
    }
    if r == 0.0 {
        return Ok(0.0);
    }
    let lam = net.intensity();
    let contained = PI * r.min(rd) * r.min(rd);
    let lens_lo = (r - rd).abs();
    let integrand = |y: f64| {
        let area = if y <= lens_lo {
            contained
        } else {
            lens_bound(r, rd, y)
        };
        -libm::expm1(-lam * area) * 2.0 * y / (rd * rd)
    };
    // Split where the bounding area changes shape: the containment edge and,
    // for the clamped rectangle, the point where the clamp disengages.
    let cross = (r + rd - 0.5 * PI * r.min(rd)).min(rd);
    let value = integrate(integrand, 0.0, rd, &[lens_lo.min(cross), lens_lo.max(cross)], q)?;
    Ok(clamp_prob(value))
}

/// Limit of [`contact_cdf`] as the forest shrinks with `m` fixed: every
/// probe radius beyond the (vanishing) forest sees `1 - e^-m`.
pub fn contact_cdf_limit_small_rd(net: &NetworkModel) -> f64 {
    saturation(net)
}

/// Limit of [`contact_cdf`] as the forest grows with the intensity fixed:
/// the deployment converges to an unbounded homogeneous Poisson process,
/// whose contact CDF is `1 - exp(-intensity * pi r^2)`.
pub fn contact_cdf_limit_large_rd(r: f64, net: &NetworkModel) -> f64 {
    assert!(r >= 0.0, "contact radius must be nonnegative, got {r}");
    clamp_prob(-libm::expm1(-net.intensity() * PI * r * r))
}

/// Probability that an event started at distance `y` from the center has
/// been sensed by time `t`, conditioned on that distance.
///
/// This is the capacity functional of the sensed region evaluated at the
/// event envelope: `1 - exp(-intensity * lens(r_d, r_F(t), y))` with
/// `r_F(t) = speed * t + sensing_radius`.
pub fn conditional_sensing_prob(t: f64, y: f64, net: &NetworkModel, ev: &EventModel) -> f64 {
    assert!(t >= 0.0, "time must be nonnegative, got {t}");
    let rd = net.forest_radius();
    assert!(
        (0.0..=rd).contains(&y),
        "origin distance {y} outside [0, {rd}]"
    );
    let rf = ev.envelope_radius(net, t);
    clamp_prob(-libm::expm1(-net.intensity() * lens_area_raw(rd, rf, y)))
}

/// Probability that an event occurring at a uniformly random point has been
/// sensed by time `t`.
///
/// Averaging [`conditional_sensing_prob`] over the origin density gives
/// exactly the contact CDF at the effective radius `r_F(t)`, so this
/// delegates to [`contact_cdf`].
pub fn sensing_prob(
    t: f64,
    net: &NetworkModel,
    ev: &EventModel,
    q: &QuadratureSpec,
) -> Result<f64, QuadratureError> {
    assert!(t >= 0.0, "time must be nonnegative, got {t}");
    contact_cdf(ev.envelope_radius(net, t), net, q)
}

/// Probability that a uniformly random point is inside the sensed region:
/// [`sensing_prob`] at `t = 0`.
pub fn coverage_prob(net: &NetworkModel, q: &QuadratureSpec) -> Result<f64, QuadratureError> {
    contact_cdf(net.sensing_radius(), net, q)
}

/// Upper bound on [`sensing_prob`]: the contact-CDF upper bound at `r_F(t)`.
pub fn sensing_prob_upper(t: f64, net: &NetworkModel, ev: &EventModel) -> f64 {
    assert!(t >= 0.0, "time must be nonnegative, got {t}");
    contact_cdf_upper(ev.envelope_radius(net, t), net)
}

/// Lower bound on [`sensing_prob`]: the contact-CDF lower bound at `r_F(t)`.
pub fn sensing_prob_lower(t: f64, net: &NetworkModel, ev: &EventModel) -> f64 {
    assert!(t >= 0.0, "time must be nonnegative, got {t}");
    contact_cdf_lower(ev.envelope_radius(net, t), net)
}

/// Loose upper bound on [`sensing_prob`] at `r_F(t)`.
pub fn sensing_prob_loose_upper(t: f64, net: &NetworkModel, ev: &EventModel) -> f64 {
    assert!(t >= 0.0, "time must be nonnegative, got {t}");
    contact_cdf_loose_upper(ev.envelope_radius(net, t), net)
}
