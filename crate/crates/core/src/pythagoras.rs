//! Right-triangle complementarity and the trigonometric membership pair.
//!
//! For legs `a`, `b` and hypotenuse `c`, the quotients `a²/c²` (yang) and
//! `b²/c²` (yin) always sum to one. Parameterised by the angle `α`, the same
//! pair becomes `P(α) = sin²α` and `N(α) = cos²α`.

use crate::error::{Result, TaijiError};
use crate::primitives::{clamp_unit, Tolerance, UnitValue};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RightTriangle {
    a: f64,
    b: f64,
    c: f64,
}

impl RightTriangle {
    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Hypotenuse.
    pub fn c(&self) -> f64 {
        self.c
    }
}

/// Yang/yin quotient pair. `yang + yin = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplementPair {
    pub yang: UnitValue,
    pub yin: UnitValue,
}

impl ComplementPair {
    pub fn sum(&self) -> f64 {
        self.yang.get() + self.yin.get()
    }
}

/// Angle in radians; any finite value.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AngleRadians(f64);

impl AngleRadians {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() {
            Ok(AngleRadians(alpha))
        } else {
            Err(TaijiError::NonFinite(alpha))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Builds the right triangle with legs `a`, `b`; `c = hypot(a, b)`.
pub fn make_triangle(a: f64, b: f64) -> Result<RightTriangle> {
    for leg in [a, b] {
        if !leg.is_finite() {
            return Err(TaijiError::NonFinite(leg));
        }
        if leg <= 0.0 {
            return Err(TaijiError::NonPositiveLeg(leg));
        }
    }
    Ok(RightTriangle {
        a,
        b,
        c: a.hypot(b),
    })
}

pub fn complement_pair(t: &RightTriangle) -> ComplementPair {
    let tol = Tolerance::default();
    let c2 = t.c * t.c;
    // Both quotients are in (0, 1) mathematically; snapping absorbs rounding.
    let yang = clamp_unit(t.a * t.a / c2, tol).expect("leg shorter than hypotenuse");
    let yin = clamp_unit(t.b * t.b / c2, tol).expect("leg shorter than hypotenuse");
    ComplementPair { yang, yin }
}

/// `P(α) = sin²α`, the yang membership.
pub fn membership_p(alpha: AngleRadians) -> UnitValue {
    let s = alpha.0.sin();
    clamp_unit(s * s, Tolerance::default()).expect("sin² lies in [0, 1]")
}

/// `N(α) = cos²α`, the yin membership.
pub fn membership_n(alpha: AngleRadians) -> UnitValue {
    let c = alpha.0.cos();
    clamp_unit(c * c, Tolerance::default()).expect("cos² lies in [0, 1]")
}

/// Half-angle form of `P`: `(1 - cos 2α) / 2`.
pub fn membership_p_half_angle(alpha: AngleRadians) -> f64 {
    (1.0 - (2.0 * alpha.0).cos()) / 2.0
}

/// Half-angle form of `N`: `(1 + cos 2α) / 2`.
pub fn membership_n_half_angle(alpha: AngleRadians) -> f64 {
    (1.0 + (2.0 * alpha.0).cos()) / 2.0
}
