//! Geometry, numerical verification and SVG rendering of the standard
//! double-fish yin-yang diagram.
//!
//! The diagram's dividing curve is `y = ½ + (1 - 2x)·√(¼ - (x - ½)²)` on
//! the unit square's inscribed circle; [`curve`] builds it both in closed
//! form and by lever-balance weighting of the circle's chord ordinates.

pub mod analysis;
pub mod curve;
pub mod error;
pub mod exec;
pub mod numfmt;
pub mod primitives;
pub mod pythagoras;
pub mod raster;
pub mod render;
pub mod verify;

pub use error::{Result, TaijiError};
pub use exec::Execution;
pub use primitives::{approx_eq, clamp_unit, Point2, Tolerance, UnitValue};
