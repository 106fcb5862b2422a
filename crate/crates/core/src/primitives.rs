//! Scalar and planar primitives shared by every other module, plus the
//! comparison tolerance policy.

use crate::error::{Result, TaijiError};

/// Default absolute comparison tolerance.
pub const DEFAULT_ABS_EPS: f64 = 1e-12;
/// Default target error for adaptive quadrature.
pub const DEFAULT_QUAD_EPS: f64 = 1e-10;

/// A double constrained to `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitValue(f64);

impl UnitValue {
    pub const ZERO: UnitValue = UnitValue(0.0);
    pub const ONE: UnitValue = UnitValue(1.0);
    pub const HALF: UnitValue = UnitValue(0.5);

    /// Strict constructor: no snapping.
    pub fn new(v: f64) -> Result<Self> {
        if !v.is_finite() {
            return Err(TaijiError::NonFinite(v));
        }
        if !(0.0..=1.0).contains(&v) {
            return Err(TaijiError::OutOfUnitInterval(v));
        }
        Ok(UnitValue(v))
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `1 - self`, which never leaves the interval.
    #[inline]
    pub fn complement(self) -> UnitValue {
        UnitValue(1.0 - self.0)
    }
}

impl From<UnitValue> for f64 {
    fn from(u: UnitValue) -> f64 {
        u.0
    }
}

/// A point with finite coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        for v in [x, y] {
            if !v.is_finite() {
                return Err(TaijiError::NonFinite(v));
            }
        }
        Ok(Point2 { x, y })
    }

    pub fn distance(self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Tolerance policy: absolute comparison epsilon and quadrature target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    abs_eps: f64,
    quad_eps: f64,
}

impl Tolerance {
    pub fn new(abs_eps: f64, quad_eps: f64) -> Result<Self> {
        for (name, v) in [("abs_eps", abs_eps), ("quad_eps", quad_eps)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(TaijiError::InvalidTolerance(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(Tolerance { abs_eps, quad_eps })
    }

    pub fn abs_eps(&self) -> f64 {
        self.abs_eps
    }

    pub fn quad_eps(&self) -> f64 {
        self.quad_eps
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_eps: DEFAULT_ABS_EPS,
            quad_eps: DEFAULT_QUAD_EPS,
        }
    }
}

/// Accepts `v` in `[0, 1]` unchanged and snaps values within `abs_eps`
/// outside the interval to the nearest bound.
pub fn clamp_unit(v: f64, tol: Tolerance) -> Result<UnitValue> {
    if !v.is_finite() {
        return Err(TaijiError::NonFinite(v));
    }
    if v < -tol.abs_eps || v > 1.0 + tol.abs_eps {
        return Err(TaijiError::OutOfUnitInterval(v));
    }
    Ok(UnitValue(v.clamp(0.0, 1.0)))
}

/// `|a - b| <= abs_eps`.
pub fn approx_eq(a: f64, b: f64, tol: Tolerance) -> bool {
    (a - b).abs() <= tol.abs_eps
}
