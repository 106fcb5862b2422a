//! The full battery of identity and invariant checks, each reduced to a
//! maximum absolute residual against a declared tolerance.
//!
//! Checks that depend on the curve go through a [`CurveModel`], so the
//! suite can be pointed at a deliberately broken curve to show it is not
//! vacuous.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8, PI, SQRT_2};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{find_extrema_of, region_areas_of};
use crate::curve::{
    chord_at, landmarks, lever_interpolate, sample_curve_with, uniform_abscissa, CurveModel,
};
use crate::exec::{self, Execution};
use crate::primitives::{Tolerance, UnitValue};
use crate::pythagoras::{
    complement_pair, make_triangle, membership_n, membership_n_half_angle, membership_p,
    membership_p_half_angle, AngleRadians,
};
use crate::raster::rasterize_region;
use crate::render::{eye_clearance, render_diagram, DiagramSpec};

/// Random sweeps use this many points.
pub const SWEEP: usize = 10_000;
/// Points for the derivative comparison.
pub const DERIVATIVE_POINTS: usize = 1_000;
/// Central difference step.
pub const FD_STEP: f64 = 1e-6;
/// Raster grid side for the area split.
pub const RASTER_GRID: usize = 1024;

pub const TOL_IDENTITY: f64 = 1e-12;
pub const TOL_EXTREMA: f64 = 1e-9;
pub const TOL_DERIVATIVE: f64 = 1e-6;
pub const TOL_AREA: f64 = 1e-8;
pub const TOL_RASTER: f64 = 0.005;

const SEED: u64 = 0x7a1_715;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    /// Numbered acceptance criterion this check discharges, if any.
    pub criterion: Option<u8>,
    pub max_abs_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckResult {
    fn new(name: &'static str, criterion: Option<u8>, residual: f64, tolerance: f64) -> Self {
        CheckResult {
            name,
            criterion,
            max_abs_residual: residual,
            tolerance,
            // NaN compares false, so a broken computation always fails.
            passed: residual <= tolerance,
        }
    }
}

/// Identity checks reported by `analyze`.
pub const IDENTITY_CHECKS: [&str; 5] = [
    "complement-sum",
    "membership-sum",
    "lever-vs-closed-form",
    "point-symmetry",
    "containment",
];

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

fn unit(x: f64) -> UnitValue {
    UnitValue::new(x.clamp(0.0, 1.0)).expect("clamped")
}

fn random_units(stream: u64, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    let mut r = rng(stream);
    (0..n).map(|_| r.gen_range(lo..=hi)).collect()
}

fn uniform_units(n: usize) -> Vec<f64> {
    (0..n).map(|i| uniform_abscissa(i, n).get()).collect()
}

/// Runs every check. Rendering checks use the library renderer directly;
/// all curve checks go through `model`.
pub fn run_checks(model: &dyn CurveModel, exec: Execution) -> Vec<CheckResult> {
    let mut out = pythagoras_checks(exec);
    out.extend(curve_checks(model, exec));
    out.extend(analysis_checks(model, exec));
    out.extend(render_checks(exec));
    out
}

/// The subset listed in [`IDENTITY_CHECKS`], in that order.
pub fn identity_checks(model: &dyn CurveModel, exec: Execution) -> Vec<CheckResult> {
    let mut all = pythagoras_checks(exec);
    all.extend(curve_checks(model, exec));
    IDENTITY_CHECKS
        .iter()
        .map(|name| {
            all.iter()
                .find(|c| c.name == *name)
                .cloned()
                .expect("identity check present")
        })
        .collect()
}

pub fn pythagoras_checks(exec: Execution) -> Vec<CheckResult> {
    let mut r = rng(1);
    // Log-uniform legs over (1e-3, 1e3).
    let legs: Vec<(f64, f64, f64)> = (0..SWEEP)
        .map(|_| {
            let a = 10f64.powf(r.gen_range(-3.0..3.0));
            let b = 10f64.powf(r.gen_range(-3.0..3.0));
            let k = 10f64.powf(r.gen_range(-3.0..3.0));
            (a, b, k)
        })
        .collect();
    let alphas = random_units(2, SWEEP, -10.0, 10.0);

    let complement = exec::max_over(&legs, exec, |&(a, b, _)| match make_triangle(a, b) {
        Ok(t) => (complement_pair(&t).sum() - 1.0).abs(),
        Err(_) => f64::NAN,
    });
    let scale = exec::max_over(&legs, exec, |&(a, b, k)| {
        match (make_triangle(a, b), make_triangle(k * a, k * b)) {
            (Ok(t), Ok(s)) => {
                let (p, q) = (complement_pair(&t), complement_pair(&s));
                (p.yang.get() - q.yang.get())
                    .abs()
                    .max((p.yin.get() - q.yin.get()).abs())
            }
            _ => f64::NAN,
        }
    });
    let angle = |a: f64| AngleRadians::new(a).expect("finite");
    let membership = exec::max_over(&alphas, exec, |&a| {
        (membership_p(angle(a)).get() + membership_n(angle(a)).get() - 1.0).abs()
    });
    let half_angle = exec::max_over(&alphas, exec, |&a| {
        (membership_p(angle(a)).get() - membership_p_half_angle(angle(a)))
            .abs()
            .max((membership_n(angle(a)).get() - membership_n_half_angle(angle(a))).abs())
    });
    let period = exec::max_over(&alphas, exec, |&a| {
        (membership_p(angle(a)).get() - membership_p(angle(a + PI)).get())
            .abs()
            .max((membership_n(angle(a)).get() - membership_n(angle(a + PI)).get()).abs())
    });

    vec![
        CheckResult::new("complement-sum", Some(5), complement, TOL_IDENTITY),
        CheckResult::new("complement-scale-invariance", None, scale, TOL_IDENTITY),
        CheckResult::new("membership-sum", Some(5), membership, TOL_IDENTITY),
        CheckResult::new("membership-half-angle", None, half_angle, TOL_IDENTITY),
        CheckResult::new("membership-period", None, period, TOL_IDENTITY),
    ]
}

pub fn curve_checks(model: &dyn CurveModel, exec: Execution) -> Vec<CheckResult> {
    let y = |x: f64| model.ordinate(unit(x));
    let l = landmarks();
    let grid = uniform_units(SWEEP);
    let random = random_units(3, SWEEP, 0.0, 1.0);

    let extrema_values = (y(l.x_max) - 0.75).abs().max((y(l.x_min) - 0.25).abs());

    // Independent closed forms: (2 ∓ √2) / 4.
    let eye_left = ((2.0 - SQRT_2) / 4.0, 0.5);
    let eye_right = ((2.0 + SQRT_2) / 4.0, 0.5);
    let eyes = [
        (l.eye_left.x - eye_left.0).abs(),
        (l.eye_left.y - eye_left.1).abs(),
        (l.eye_right.x - eye_right.0).abs(),
        (l.eye_right.y - eye_right.1).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);

    let lever = exec::max_over(&grid, exec, |&x| {
        let u = unit(x);
        match lever_interpolate(u, &chord_at(u)) {
            Ok(v) => (v - y(x)).abs(),
            Err(_) => f64::NAN,
        }
    });
    let symmetry = exec::max_over(&random, exec, |&x| (y(x) + y(1.0 - x) - 1.0).abs());
    let containment = exec::max_over(&grid, exec, |&x| {
        let v = y(x);
        let outside_disk = (x - 0.5).powi(2) + (v - 0.5).powi(2) - 0.25;
        let outside_unit = (-v).max(v - 1.0);
        outside_disk.max(outside_unit).max(0.0)
    });
    let ordering = exec::max_over(&grid, exec, |&x| {
        let c = chord_at(unit(x));
        let v = y(x);
        (c.y1 - v).max(v - c.y2).max(0.0)
    });
    let sign_violations = exec::max_over(&grid, exec, |&x| {
        let v = y(x);
        let bad = (x > 0.0 && x < 0.5 && v <= 0.5) || (x > 0.5 && x < 1.0 && v >= 0.5);
        f64::from(u8::from(bad))
    });
    let derivative_points = random_units(4, DERIVATIVE_POINTS, 0.01, 0.99);
    let derivative = exec::max_over(&derivative_points, exec, |&x| {
        let fd = (y(x + FD_STEP) - y(x - FD_STEP)) / (2.0 * FD_STEP);
        match model.slope(unit(x)) {
            Ok(d) => (d - fd).abs(),
            Err(_) => f64::NAN,
        }
    });

    vec![
        CheckResult::new("extrema-values", Some(1), extrema_values, TOL_IDENTITY),
        CheckResult::new("fish-eye-coordinates", Some(3), eyes, TOL_IDENTITY),
        CheckResult::new("lever-vs-closed-form", Some(4), lever, TOL_IDENTITY),
        CheckResult::new("point-symmetry", Some(7), symmetry, TOL_IDENTITY),
        CheckResult::new("containment", None, containment, TOL_IDENTITY),
        CheckResult::new("boundary-ordering", None, ordering, TOL_IDENTITY),
        CheckResult::new("sign-structure", None, sign_violations, 0.0),
        CheckResult::new(
            "derivative-finite-difference",
            Some(8),
            derivative,
            TOL_DERIVATIVE,
        ),
    ]
}

pub fn analysis_checks(model: &dyn CurveModel, exec: Execution) -> Vec<CheckResult> {
    let tol = Tolerance::default();
    let mut out = Vec::new();
    match find_extrema_of(model, tol) {
        Ok(e) => {
            let location = (e.x_at_max - (0.5 - SQRT_2 / 4.0))
                .abs()
                .max((e.x_at_min - (0.5 + SQRT_2 / 4.0)).abs())
                .max((e.y_at_max - 0.75).abs())
                .max((e.y_at_min - 0.25).abs());
            out.push(CheckResult::new(
                "extrema-locations",
                Some(2),
                location,
                TOL_EXTREMA,
            ));
            out.push(CheckResult::new(
                "extrema-residual",
                Some(2),
                e.residual,
                TOL_EXTREMA,
            ));
        }
        Err(_) => {
            out.push(CheckResult::new(
                "extrema-locations",
                Some(2),
                f64::NAN,
                TOL_EXTREMA,
            ));
            out.push(CheckResult::new(
                "extrema-residual",
                Some(2),
                f64::NAN,
                TOL_EXTREMA,
            ));
        }
    }
    match region_areas_of(model, tol, exec) {
        Ok(a) => {
            let below = a.area_below_curve_in_disk;
            let above = a.area_above_curve_in_disk;
            out.push(CheckResult::new(
                "area-below-pi-over-8",
                Some(6),
                (below - FRAC_PI_8).abs(),
                TOL_AREA,
            ));
            out.push(CheckResult::new(
                "area-above-pi-over-8",
                Some(6),
                (above - FRAC_PI_8).abs(),
                TOL_AREA,
            ));
            out.push(CheckResult::new(
                "area-sum-pi-over-4",
                Some(6),
                (below + above - FRAC_PI_4).abs(),
                TOL_AREA,
            ));
            out.push(CheckResult::new(
                "curve-integral-one-half",
                None,
                (a.integral_of_curve_over_unit_interval - 0.5).abs(),
                TOL_AREA,
            ));
        }
        Err(_) => {
            for name in [
                "area-below-pi-over-8",
                "area-above-pi-over-8",
                "area-sum-pi-over-4",
            ] {
                out.push(CheckResult::new(name, Some(6), f64::NAN, TOL_AREA));
            }
            out.push(CheckResult::new(
                "curve-integral-one-half",
                None,
                f64::NAN,
                TOL_AREA,
            ));
        }
    }
    out
}

pub fn render_checks(exec: Execution) -> Vec<CheckResult> {
    let spec = DiagramSpec::default();
    let mut out = Vec::new();

    let first = render_diagram(&spec);
    let second = render_diagram(&spec);
    let same = matches!((&first, &second), (Ok(a), Ok(b)) if a == b);
    out.push(CheckResult::new(
        "render-determinism",
        Some(9),
        f64::from(u8::from(!same)),
        0.0,
    ));

    let a = sample_curve_with(257, exec);
    let b = sample_curve_with(257, exec);
    let same = matches!((&a, &b), (Ok(a), Ok(b)) if a == b);
    out.push(CheckResult::new(
        "sample-determinism",
        Some(9),
        f64::from(u8::from(!same)),
        0.0,
    ));

    let fraction = first
        .ok()
        .and_then(|bytes| String::from_utf8(bytes).ok())
        .and_then(|svg| rasterize_region(&svg, "fish-dark", "circle", RASTER_GRID, exec).ok())
        .map_or(f64::NAN, |c| (c.fraction() - 0.5).abs());
    out.push(CheckResult::new(
        "dark-fraction-one-half",
        Some(9),
        fraction,
        TOL_RASTER,
    ));

    let (left, right) = eye_clearance(&spec);
    // Positive margin means the eye disk is strictly inside its fish.
    let margin = left.min(right) - spec.eye_radius;
    let violation = if margin > 0.0 {
        0.0
    } else {
        -margin + f64::MIN_POSITIVE
    };
    out.push(CheckResult::new("eye-containment", None, violation, 0.0));
    out
}
