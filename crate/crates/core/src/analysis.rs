//! Numerical kernels used to confirm the closed-form constants
//! independently: adaptive Simpson quadrature for the fish areas and
//! bisection for the zeros of the slope.

use crate::curve::{chord_at, CurveModel, StandardCurve};
use crate::error::{Result, TaijiError};
use crate::exec::{self, Execution};
use crate::primitives::{Tolerance, UnitValue};

/// Recursion cap for adaptive Simpson.
pub const MAX_DEPTH: u32 = 60;

/// Distance kept from the endpoints when bracketing slope zeros.
pub const BRACKET_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub err_estimate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaReport {
    pub area_below_curve_in_disk: f64,
    pub area_above_curve_in_disk: f64,
    pub disk_area: f64,
    pub integral_of_curve_over_unit_interval: f64,
    pub quadrature_error_estimate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremaReport {
    pub x_at_max: f64,
    pub y_at_max: f64,
    pub x_at_min: f64,
    pub y_at_min: f64,
    /// Largest `|y'|` at the located points.
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootReport {
    pub root: f64,
    pub lo: f64,
    pub hi: f64,
    pub iterations: u32,
}

/// Adaptive Simpson quadrature of `f` over `[lo, hi]`.
///
/// Each panel is accepted once the two-half Simpson estimate differs from
/// the whole-panel estimate by at most `15·ε`, where `ε` starts at
/// `quad_eps` and halves with every split; accepted panels get the
/// Richardson correction `δ/15`. The returned error estimate is the sum of
/// `|δ|/15` over accepted panels.
pub fn integrate<F>(f: F, lo: f64, hi: f64, tol: Tolerance) -> Result<Quadrature>
where
    F: Fn(f64) -> f64,
{
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(TaijiError::InvalidInterval { lo, hi });
    }
    let fa = f(lo);
    let fb = f(hi);
    let fm = f(0.5 * (lo + hi));
    let whole = simpson(lo, hi, fa, fm, fb);
    let mut acc = Quadrature {
        value: 0.0,
        err_estimate: 0.0,
    };
    let panel = Panel {
        a: lo,
        b: hi,
        fa,
        fm,
        fb,
        whole,
    };
    refine(&f, panel, tol.quad_eps(), 0, &mut acc)?;
    Ok(acc)
}

#[derive(Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn refine<F>(f: &F, p: Panel, eps: f64, depth: u32, acc: &mut Quadrature) -> Result<()>
where
    F: Fn(f64) -> f64,
{
    let m = 0.5 * (p.a + p.b);
    let flm = f(0.5 * (p.a + m));
    let frm = f(0.5 * (m + p.b));
    let left = simpson(p.a, m, p.fa, flm, p.fm);
    let right = simpson(m, p.b, p.fm, frm, p.fb);
    let delta = left + right - p.whole;
    if !delta.is_finite() {
        return Err(TaijiError::NonFinite(delta));
    }
    if delta.abs() <= 15.0 * eps {
        acc.value += left + right + delta / 15.0;
        acc.err_estimate += delta.abs() / 15.0;
        return Ok(());
    }
    if depth >= MAX_DEPTH {
        return Err(TaijiError::MaxDepthExceeded {
            depth,
            lo: p.a,
            hi: p.b,
        });
    }
    let l = Panel {
        a: p.a,
        b: m,
        fa: p.fa,
        fm: flm,
        fb: p.fm,
        whole: left,
    };
    let r = Panel {
        a: m,
        b: p.b,
        fa: p.fm,
        fm: frm,
        fb: p.fb,
        whole: right,
    };
    refine(f, l, eps / 2.0, depth + 1, acc)?;
    refine(f, r, eps / 2.0, depth + 1, acc)
}

/// Bisection on a sign change of `f` over `[lo, hi]`.
///
/// Runs `max_iter` halvings, stopping early on an exact zero or once the
/// bracket can no longer be split in double precision.
pub fn bisect<F>(f: F, mut lo: f64, mut hi: f64, max_iter: u32) -> Result<RootReport>
where
    F: Fn(f64) -> f64,
{
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo.is_nan()
        || f_hi.is_nan()
        || f_lo.signum() == f_hi.signum() && f_lo != 0.0 && f_hi != 0.0
    {
        return Err(TaijiError::NoSignChange { lo, hi });
    }
    if f_lo == 0.0 {
        return Ok(RootReport {
            root: lo,
            lo,
            hi: lo,
            iterations: 0,
        });
    }
    if f_hi == 0.0 {
        return Ok(RootReport {
            root: hi,
            lo: hi,
            hi,
            iterations: 0,
        });
    }
    let lo_negative = f_lo < 0.0;
    let mut iterations = 0;
    while iterations < max_iter {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        let f_mid = f(mid);
        if f_mid.is_nan() {
            return Err(TaijiError::NonFinite(f_mid));
        }
        if f_mid == 0.0 {
            return Ok(RootReport {
                root: mid,
                lo: mid,
                hi: mid,
                iterations,
            });
        }
        if (f_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RootReport {
        root: 0.5 * (lo + hi),
        lo,
        hi,
        iterations,
    })
}

/// Areas of the two fish inside the inscribed disk.
pub fn region_areas(tol: Tolerance) -> Result<AreaReport> {
    region_areas_of(&StandardCurve, tol, Execution::default())
}

pub fn region_areas_of(
    model: &dyn CurveModel,
    tol: Tolerance,
    exec: Execution,
) -> Result<AreaReport> {
    let y = |x: f64| model.ordinate(unit(x));
    let below = |x: f64| y(x) - chord_at(unit(x)).y1;
    let above = |x: f64| chord_at(unit(x)).y2 - y(x);
    let (lower, upper) = exec::join(
        exec,
        || integrate(below, 0.0, 1.0, tol),
        || integrate(above, 0.0, 1.0, tol),
    );
    let (lower, upper) = (lower?, upper?);
    let whole = integrate(y, 0.0, 1.0, tol)?;
    Ok(AreaReport {
        area_below_curve_in_disk: lower.value,
        area_above_curve_in_disk: upper.value,
        disk_area: std::f64::consts::FRAC_PI_4,
        integral_of_curve_over_unit_interval: whole.value,
        quadrature_error_estimate: lower.err_estimate + upper.err_estimate + whole.err_estimate,
    })
}

/// Locates the maximum (left bracket) and minimum (right bracket) of the curve.
pub fn find_extrema(tol: Tolerance) -> Result<ExtremaReport> {
    find_extrema_of(&StandardCurve, tol)
}

pub fn find_extrema_of(model: &dyn CurveModel, _tol: Tolerance) -> Result<ExtremaReport> {
    let slope = |x: f64| model.slope(unit(x)).unwrap_or(f64::NAN);
    let left = bisect(slope, BRACKET_MARGIN, 0.5 - BRACKET_MARGIN, 200)?;
    let right = bisect(slope, 0.5 + BRACKET_MARGIN, 1.0 - BRACKET_MARGIN, 200)?;
    let residual = slope(left.root).abs().max(slope(right.root).abs());
    Ok(ExtremaReport {
        x_at_max: left.root,
        y_at_max: model.ordinate(unit(left.root)),
        x_at_min: right.root,
        y_at_min: model.ordinate(unit(right.root)),
        residual,
    })
}

fn unit(x: f64) -> UnitValue {
    UnitValue::new(x.clamp(0.0, 1.0)).expect("clamped")
}
