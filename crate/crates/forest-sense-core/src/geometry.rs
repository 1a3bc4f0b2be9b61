//! Planar geometry primitives: points, disks, and the circle–circle
//! intersection ("lens") area together with the closed-form upper and lower
//! bounds on it that the analytic integrands rely on.

use core::f64::consts::PI;
use core::fmt;

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Euclidean distance to `other`.
    pub fn distance(&self, other: &Point2) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        libm::sqrt(dx * dx + dy * dy)
    }

    /// Distance from the origin.
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.x * self.x + self.y * self.y)
    }
}

/// A closed disk given by center and radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Point2,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Point2, radius: f64) -> Self {
        Self { center, radius }
    }

    pub fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.center.distance(p) <= self.radius
    }

    /// Closed intersection test: tangency counts as intersecting.
    pub fn intersects(&self, other: &Disk) -> bool {
        self.center.distance(&other.center) <= self.radius + other.radius
    }
}

/// Domain errors for the area operations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeometryError {
    /// A length argument was negative or not finite.
    InvalidLength { name: &'static str, value: f64 },
    /// The center distance lies outside `[|r1 - r2|, r1 + r2]`, where the
    /// bound formulas are defined.
    OutsideLensRegime { d: f64, lo: f64, hi: f64 },
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::InvalidLength { name, value } => {
                write!(f, "{name} must be a finite nonnegative length, got {value}")
            }
            GeometryError::OutsideLensRegime { d, lo, hi } => {
                write!(f, "center distance {d} outside the lens regime [{lo}, {hi}]")
            }
        }
    }
}

impl core::error::Error for GeometryError {}

fn check_length(name: &'static str, value: f64) -> Result<(), GeometryError> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(GeometryError::InvalidLength { name, value })
    }
}

/// Area of the intersection of two disks with radii `r1`, `r2` whose centers
/// are `d` apart.
///
/// Returns the area of the smaller disk when one contains the other
/// (`d <= |r1 - r2|`), zero when they are disjoint (`d >= r1 + r2`), and the
/// two-arccos lens formula in between. The result is clamped to
/// `[0, min(pi r1^2, pi r2^2)]`.
pub fn lens_area(r1: f64, r2: f64, d: f64) -> Result<f64, GeometryError> {
    check_length("r1", r1)?;
    check_length("r2", r2)?;
    check_length("d", d)?;
    Ok(lens_area_raw(r1, r2, d))
}

/// Unchecked lens area; callers guarantee finite nonnegative arguments.
pub(crate) fn lens_area_raw(r1: f64, r2: f64, d: f64) -> f64 {
    let rmin = r1.min(r2);
    let contained = PI * rmin * rmin;
    if d <= (r1 - r2).abs() {
        return contained;
    }
    if d >= r1 + r2 {
        return 0.0;
    }
    // Arguments can overshoot [-1, 1] by ~1e-16 near tangency; clamp before
    // acos to avoid NaN.
    let a1 = ((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1)).clamp(-1.0, 1.0);
    let a2 = ((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2)).clamp(-1.0, 1.0);
    let s = ((r1 + r2) * (r1 + r2) - d * d) * (d * d - (r1 - r2) * (r1 - r2));
    let triangle = 0.5 * libm::sqrt(s.max(0.0));
    let area = r1 * r1 * libm::acos(a1) + r2 * r2 * libm::acos(a2) - triangle;
    area.clamp(0.0, contained)
}

/// Rectangle upper bound on [`lens_area`]: `(r1 + r2 - d) * min(2 r1, 2 r2)`.
///
/// Only defined on the lens regime `|r1 - r2| <= d <= r1 + r2`.
pub fn lens_area_rect_upper(r1: f64, r2: f64, d: f64) -> Result<f64, GeometryError> {
    check_lens_regime(r1, r2, d)?;
    Ok(rect_upper_raw(r1, r2, d))
}

pub(crate) fn rect_upper_raw(r1: f64, r2: f64, d: f64) -> f64 {
    (r1 + r2 - d) * 2.0 * r1.min(r2)
}

/// Inscribed-circle lower bound on [`lens_area`]: the circle of radius
/// `(r1 + r2 - d) / 2` fits inside the lens, so its area bounds it from below.
///
/// Only defined on the lens regime `|r1 - r2| <= d <= r1 + r2`.
pub fn lens_area_circ_lower(r1: f64, r2: f64, d: f64) -> Result<f64, GeometryError> {
    check_lens_regime(r1, r2, d)?;
    Ok(circ_lower_raw(r1, r2, d))
}

pub(crate) fn circ_lower_raw(r1: f64, r2: f64, d: f64) -> f64 {
    let half = 0.5 * (r1 + r2 - d);
    PI * half * half
}

fn check_lens_regime(r1: f64, r2: f64, d: f64) -> Result<(), GeometryError> {
    check_length("r1", r1)?;
    check_length("r2", r2)?;
    check_length("d", d)?;
    let lo = (r1 - r2).abs();
    let hi = r1 + r2;
    if d < lo || d > hi {
        return Err(GeometryError::OutsideLensRegime { d, lo, hi });
    }
    Ok(())
}

/// Radius of the Minkowski sum of two disks: the sums of the radii.
pub fn minkowski_ball_radius(r_a: f64, r_b: f64) -> Result<f64, GeometryError> {
    check_length("r_a", r_a)?;
    check_length("r_b", r_b)?;
    Ok(r_a + r_b)
}
