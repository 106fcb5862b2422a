//! The S-curve dividing the inscribed circle of the unit square.
//!
//! At abscissa `x` the vertical through the circle `(x-½)² + (y-½)² = ¼`
//! meets it at `y1 = ½ - R` and `y2 = ½ + R`, with `R = √(¼ - (x-½)²)`.
//! Weighting those two ordinates as a balanced lever, `y = x·y1 + (1-x)·y2`,
//! gives the closed form `y = ½ + (1 - 2x)·R` on `[0, 1]`.
//!
//! The curve reaches its maximum `3/4` at `x = ½ - √2/4` and its minimum
//! `1/4` at `x = ½ + √2/4`. These are extrema of `y(x)` (sometimes called
//! the "inflexion" points of the diagram); the fish eyes sit directly
//! below/above them on the horizontal diameter.

use std::f64::consts::SQRT_2;

use crate::error::{Result, TaijiError};
use crate::exec::{self, Execution};
use crate::primitives::{Point2, Tolerance, UnitValue};

/// Lower and upper ordinates of the inscribed circle at one abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordPair {
    pub x: UnitValue,
    pub y1: f64,
    pub y2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Lever,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSample {
    pub x: UnitValue,
    pub y: f64,
    pub method: Method,
}

impl CurveSample {
    pub fn point(&self) -> Point2 {
        Point2 {
            x: self.x.get(),
            y: self.y,
        }
    }
}

/// Extrema and fish-eye positions, from closed-form expressions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Landmarks {
    pub x_max: f64,
    pub x_min: f64,
    pub y_max: f64,
    pub y_min: f64,
    pub eye_left: Point2,
    pub eye_right: Point2,
}

/// Anything that can stand in for the closed-form curve in the
/// verification suite.
pub trait CurveModel: Sync {
    fn ordinate(&self, x: UnitValue) -> f64;
    fn slope(&self, x: UnitValue) -> Result<f64>;
}

/// The closed-form S-curve.
#[derive(Debug, Clone, Copy, Default)]
pub struct StandardCurve;

impl CurveModel for StandardCurve {
    fn ordinate(&self, x: UnitValue) -> f64 {
        s_curve(x).y
    }

    fn slope(&self, x: UnitValue) -> Result<f64> {
        s_curve_derivative(x)
    }
}

/// Half-chord `R(x) = √(¼ - (x-½)²)`, radicand clamped at zero.
#[inline]
pub fn half_chord(x: f64) -> f64 {
    let t = x - 0.5;
    (0.25 - t * t).max(0.0).sqrt()
}

pub fn chord_at(x: UnitValue) -> ChordPair {
    let r = half_chord(x.get());
    ChordPair {
        x,
        y1: 0.5 - r,
        y2: 0.5 + r,
    }
}

/// Lever-balance weighting of the chord ordinates: `x·y1 + (1-x)·y2`.
pub fn lever_interpolate(x: UnitValue, chord: &ChordPair) -> Result<f64> {
    let xv = x.get();
    if (chord.x.get() - xv).abs() > Tolerance::default().abs_eps() {
        return Err(TaijiError::ChordMismatch {
            x: xv,
            chord: chord.x.get(),
        });
    }
    Ok(xv * chord.y1 + (1.0 - xv) * chord.y2)
}

pub fn s_curve(x: UnitValue) -> CurveSample {
    let xv = x.get();
    CurveSample {
        x,
        y: 0.5 + (1.0 - 2.0 * xv) * half_chord(xv),
        method: Method::ClosedForm,
    }
}

/// The same ordinate, computed through the chord and the lever.
pub fn s_curve_lever(x: UnitValue) -> CurveSample {
    let y = lever_interpolate(x, &chord_at(x)).expect("chord built at x");
    CurveSample {
        x,
        y,
        method: Method::Lever,
    }
}

/// `y'(x) = -2R + (1-2x)² / (2R)`; undefined where `R = 0`.
pub fn s_curve_derivative(x: UnitValue) -> Result<f64> {
    let xv = x.get();
    if xv <= 0.0 || xv >= 1.0 {
        return Err(TaijiError::EndpointSingularity(xv));
    }
    let r = half_chord(xv);
    let u = 1.0 - 2.0 * xv;
    Ok(-2.0 * r + u * u / (2.0 * r))
}

pub fn landmarks() -> Landmarks {
    let offset = SQRT_2 / 4.0;
    Landmarks {
        x_max: 0.5 - offset,
        x_min: 0.5 + offset,
        y_max: 0.75,
        y_min: 0.25,
        eye_left: Point2 {
            x: 0.5 - offset,
            y: 0.5,
        },
        eye_right: Point2 {
            x: 0.5 + offset,
            y: 0.5,
        },
    }
}

/// `i / (n - 1)` for `i` in `0..n`; the last abscissa is exactly 1.
pub fn uniform_abscissa(i: usize, n: usize) -> UnitValue {
    debug_assert!(n >= 2 && i < n);
    UnitValue::new(i as f64 / (n - 1) as f64).expect("i < n")
}

pub fn sample_curve(n: usize) -> Result<Vec<CurveSample>> {
    sample_curve_with(n, Execution::default())
}

pub fn sample_curve_with(n: usize, exec: Execution) -> Result<Vec<CurveSample>> {
    if n < 2 {
        return Err(TaijiError::TooFewSamples(n));
    }
    Ok(exec::map_range(n, exec, |i| {
        s_curve(uniform_abscissa(i, n))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const EPS: f64 = 1e-12;

    fn u(v: f64) -> UnitValue {
        UnitValue::new(v).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= EPS
    }

    #[test]
    fn chord_examples() {
        let c = chord_at(u(0.5));
        assert_eq!((c.y1, c.y2), (0.0, 1.0));
        let c = chord_at(u(0.0));
        assert_eq!((c.y1, c.y2), (0.5, 0.5));
        let c = chord_at(u(1.0));
        assert_eq!((c.y1, c.y2), (0.5, 0.5));

        // Radicand 1/8 at x = 1/2 - √2/4; the endpoints must lie on the circle.
        let x = 0.5 - SQRT_2 / 4.0;
        let c = chord_at(u(x));
        assert!(close(c.y1, 0.5 - SQRT_2 / 4.0));
        assert!(close(c.y2, 0.5 + SQRT_2 / 4.0));
        for y in [c.y1, c.y2] {
            assert!(close((x - 0.5).powi(2) + (y - 0.5).powi(2), 0.25));
        }
    }

    #[test]
    fn lever_examples() {
        let c = ChordPair {
            x: u(0.0),
            y1: 0.2,
            y2: 0.9,
        };
        assert_eq!(lever_interpolate(u(0.0), &c).unwrap(), 0.9);
        let c = ChordPair {
            x: u(1.0),
            y1: 0.2,
            y2: 0.9,
        };
        assert_eq!(lever_interpolate(u(1.0), &c).unwrap(), 0.2);
        let c = ChordPair {
            x: u(0.5),
            y1: 0.0,
            y2: 1.0,
        };
        assert_eq!(lever_interpolate(u(0.5), &c).unwrap(), 0.5);
    }

    #[test]
    fn lever_rejects_foreign_chord() {
        let c = chord_at(u(0.3));
        assert!(matches!(
            lever_interpolate(u(0.4), &c),
            Err(TaijiError::ChordMismatch { .. })
        ));
    }

    #[test]
    fn lever_satisfies_moment_balance() {
        for &x in &[0.1, 0.25, 0.5, 0.7, 0.93] {
            let c = chord_at(u(x));
            let y = lever_interpolate(u(x), &c).unwrap();
            let lhs = (1.0 - x) / x;
            let rhs = (y - c.y1) / (c.y2 - y);
            assert!((lhs - rhs).abs() <= 1e-9 * lhs.max(1.0), "x = {x}");
        }
    }

    #[test]
    fn s_curve_examples() {
        assert_eq!(s_curve(u(0.0)).y, 0.5);
        assert_eq!(s_curve(u(1.0)).y, 0.5);
        assert_eq!(s_curve(u(0.5)).y, 0.5);
        assert!(close(s_curve(u(0.5 - SQRT_2 / 4.0)).y, 0.75));
        assert!(close(s_curve(u(0.5 + SQRT_2 / 4.0)).y, 0.25));
        assert_eq!(s_curve(u(0.3)).method, Method::ClosedForm);
        assert_eq!(s_curve_lever(u(0.3)).method, Method::Lever);
    }

    #[test]
    fn derivative_examples() {
        assert!(close(s_curve_derivative(u(0.5)).unwrap(), -1.0));
        assert!(s_curve_derivative(u(0.5 - SQRT_2 / 4.0)).unwrap().abs() <= EPS);
        assert!(s_curve_derivative(u(0.5 + SQRT_2 / 4.0)).unwrap().abs() <= EPS);
        assert_eq!(
            s_curve_derivative(u(0.0)),
            Err(TaijiError::EndpointSingularity(0.0))
        );
        assert_eq!(
            s_curve_derivative(u(1.0)),
            Err(TaijiError::EndpointSingularity(1.0))
        );
    }

    #[test]
    fn derivative_at_center_matches_finite_difference() {
        let h = 1e-6;
        let fd = (s_curve(u(0.5 + h)).y - s_curve(u(0.5 - h)).y) / (2.0 * h);
        assert!((fd + 1.0).abs() <= 1e-6);
    }

    #[test]
    fn landmark_values() {
        let l = landmarks();
        assert!((l.x_max - 0.146_446_609_4).abs() < 1e-10);
        assert!((l.eye_right.x - 0.853_553_390_6).abs() < 1e-10);
        assert_eq!((l.y_max, l.y_min), (0.75, 0.25));
        assert!(close(l.x_max + l.x_min, 1.0));
        assert!(close(l.y_max + l.y_min, 1.0));
        assert_eq!((l.eye_left.y, l.eye_right.y), (0.5, 0.5));
        assert_eq!(l.eye_left.x, l.x_max);
    }

    #[test]
    fn sampling_examples() {
        let two = sample_curve(2).unwrap();
        assert_eq!(
            two.iter().map(|s| (s.x.get(), s.y)).collect::<Vec<_>>(),
            vec![(0.0, 0.5), (1.0, 0.5)]
        );
        let three = sample_curve(3).unwrap();
        assert_eq!(
            three.iter().map(|s| (s.x.get(), s.y)).collect::<Vec<_>>(),
            vec![(0.0, 0.5), (0.5, 0.5), (1.0, 0.5)]
        );
        // y(1/4) = 1/2 + √3/8 by hand: R = √(1/4 - 1/16) = √3/4, (1 - 2x) = 1/2.
        let five = sample_curve(5).unwrap();
        assert_eq!(five[1].x.get(), 0.25);
        assert!(close(five[1].y, 0.5 + 3f64.sqrt() / 8.0));
        assert!((five[1].y - 0.716_506_350_946).abs() < 1e-11);
        assert_eq!(sample_curve(1), Err(TaijiError::TooFewSamples(1)));
        assert_eq!(sample_curve(0), Err(TaijiError::TooFewSamples(0)));
    }

    #[test]
    fn sampling_is_mode_independent() {
        let a = sample_curve_with(1001, Execution::Sequential).unwrap();
        let b = sample_curve_with(1001, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0].x < w[1].x));
    }

    proptest! {
        #[test]
        fn point_symmetry(x in 0.0f64..=1.0) {
            let s = s_curve(u(x)).y + s_curve(u(x).complement()).y;
            prop_assert!((s - 1.0).abs() <= EPS);
        }

        #[test]
        fn lever_reproduces_closed_form(x in 0.0f64..=1.0) {
            prop_assert!((s_curve_lever(u(x)).y - s_curve(u(x)).y).abs() <= EPS);
        }

        #[test]
        fn containment_and_ordering(x in 0.0f64..=1.0) {
            let s = s_curve(u(x));
            let c = chord_at(u(x));
            prop_assert!((0.0..=1.0).contains(&s.y));
            prop_assert!((x - 0.5).powi(2) + (s.y - 0.5).powi(2) <= 0.25 + EPS);
            prop_assert!(c.y1 - EPS <= s.y && s.y <= c.y2 + EPS);
            prop_assert!(c.y1 <= 0.5 && 0.5 <= c.y2);
            prop_assert!((c.y1 + c.y2 - 1.0).abs() <= EPS);
        }

        #[test]
        fn sign_structure(x in 1e-9f64..0.5 - 1e-9) {
            prop_assert!(s_curve(u(x)).y > 0.5);
            prop_assert!(s_curve(u(1.0 - x)).y < 0.5);
        }

        #[test]
        fn derivative_matches_finite_difference(x in 0.01f64..=0.99) {
            let h = 1e-6;
            let fd = (s_curve(u(x + h)).y - s_curve(u(x - h)).y) / (2.0 * h);
            prop_assert!((s_curve_derivative(u(x)).unwrap() - fd).abs() <= 1e-6);
        }
    }
}
