//! Reads emitted SVG back and measures it by point-in-path testing, so the
//! area split can be checked on the actual bytes rather than on the
//! geometry that produced them.

use std::f64::consts::PI;

use crate::error::{Result, TaijiError};
use crate::exec::{self, Execution};
use crate::primitives::Point2;

/// Maximum angle per flattened arc segment.
const ARC_STEP: f64 = PI / 1024.0;

/// Value of attribute `key` on the element carrying `id="<id>"`.
pub fn element_attr<'a>(svg: &'a str, id: &str, key: &str) -> Option<&'a str> {
    let at = svg.find(&format!("id=\"{id}\""))?;
    let start = svg[..at].rfind('<')?;
    let end = start + svg[start..].find('>')?;
    let element = &svg[start..end];
    let needle = format!(" {key}=\"");
    let k = element.find(&needle)? + needle.len();
    let len = element[k..].find('"')?;
    Some(&element[k..k + len])
}

/// Canvas width and height from the root `viewBox`.
pub fn view_box(svg: &str) -> Result<(f64, f64)> {
    let k = svg
        .find("viewBox=\"")
        .ok_or_else(|| TaijiError::MalformedPath("missing viewBox".into()))?
        + 9;
    let body = &svg[k..k + svg[k..].find('"').unwrap_or(0)];
    let nums = parse_numbers(body)?;
    match nums.as_slice() {
        [_, _, w, h] => Ok((*w, *h)),
        _ => Err(TaijiError::MalformedPath(format!("bad viewBox {body:?}"))),
    }
}

fn parse_numbers(s: &str) -> Result<Vec<f64>> {
    s.split(|c: char| c.is_ascii_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| TaijiError::MalformedPath(format!("bad number {t:?}")))
        })
        .collect()
}

/// Flattens absolute `M`/`L`/`A`/`Z` path data into closed polygons.
pub fn flatten_path(d: &str) -> Result<Vec<Vec<Point2>>> {
    let tokens: Vec<&str> = d.split_ascii_whitespace().collect();
    let mut polys: Vec<Vec<Point2>> = Vec::new();
    let mut current: Vec<Point2> = Vec::new();
    let mut i = 0;
    let num = |i: usize| -> Result<f64> {
        tokens
            .get(i)
            .ok_or_else(|| TaijiError::MalformedPath("truncated path".into()))?
            .parse::<f64>()
            .map_err(|_| TaijiError::MalformedPath(format!("bad number {:?}", tokens[i])))
    };
    while i < tokens.len() {
        match tokens[i] {
            "M" => {
                if current.len() > 1 {
                    polys.push(std::mem::take(&mut current));
                }
                current = vec![Point2 {
                    x: num(i + 1)?,
                    y: num(i + 2)?,
                }];
                i += 3;
            }
            "L" => {
                current.push(Point2 {
                    x: num(i + 1)?,
                    y: num(i + 2)?,
                });
                i += 3;
            }
            "A" => {
                let from = *current
                    .last()
                    .ok_or_else(|| TaijiError::MalformedPath("arc without start".into()))?;
                let arc = SvgArc {
                    rx: num(i + 1)?,
                    ry: num(i + 2)?,
                    rotation_deg: num(i + 3)?,
                    large_arc: num(i + 4)? != 0.0,
                    sweep: num(i + 5)? != 0.0,
                    to: Point2 {
                        x: num(i + 6)?,
                        y: num(i + 7)?,
                    },
                };
                current.extend(arc.flatten(from));
                i += 8;
            }
            "Z" | "z" => {
                if let Some(&first) = current.first() {
                    if current.last() != Some(&first) {
                        current.push(first);
                    }
                }
                polys.push(std::mem::take(&mut current));
                i += 1;
            }
            other => {
                return Err(TaijiError::MalformedPath(format!(
                    "unsupported command {other:?}"
                )))
            }
        }
    }
    if current.len() > 1 {
        polys.push(current);
    }
    Ok(polys)
}

struct SvgArc {
    rx: f64,
    ry: f64,
    rotation_deg: f64,
    large_arc: bool,
    sweep: bool,
    to: Point2,
}

impl SvgArc {
    /// Endpoint-to-centre conversion as in the SVG implementation notes,
    /// then uniform sampling of the angle. Excludes `from`, includes `to`.
    fn flatten(&self, from: Point2) -> Vec<Point2> {
        let (mut rx, mut ry) = (self.rx.abs(), self.ry.abs());
        if rx == 0.0 || ry == 0.0 || from == self.to {
            return vec![self.to];
        }
        let phi = self.rotation_deg.to_radians();
        let (sin_phi, cos_phi) = phi.sin_cos();
        let hx = (from.x - self.to.x) / 2.0;
        let hy = (from.y - self.to.y) / 2.0;
        let x1 = cos_phi * hx + sin_phi * hy;
        let y1 = -sin_phi * hx + cos_phi * hy;

        let lambda = (x1 * x1) / (rx * rx) + (y1 * y1) / (ry * ry);
        if lambda > 1.0 {
            rx *= lambda.sqrt();
            ry *= lambda.sqrt();
        }
        let num = rx * rx * ry * ry - rx * rx * y1 * y1 - ry * ry * x1 * x1;
        let den = rx * rx * y1 * y1 + ry * ry * x1 * x1;
        let mut coef = (num / den).max(0.0).sqrt();
        if self.large_arc == self.sweep {
            coef = -coef;
        }
        let cxp = coef * rx * y1 / ry;
        let cyp = -coef * ry * x1 / rx;
        let cx = cos_phi * cxp - sin_phi * cyp + (from.x + self.to.x) / 2.0;
        let cy = sin_phi * cxp + cos_phi * cyp + (from.y + self.to.y) / 2.0;

        let u = ((x1 - cxp) / rx, (y1 - cyp) / ry);
        let v = ((-x1 - cxp) / rx, (-y1 - cyp) / ry);
        let theta1 = u.1.atan2(u.0);
        let mut delta = (u.0 * v.1 - u.1 * v.0).atan2(u.0 * v.0 + u.1 * v.1);
        if !self.sweep && delta > 0.0 {
            delta -= 2.0 * PI;
        } else if self.sweep && delta < 0.0 {
            delta += 2.0 * PI;
        }

        let steps = ((delta.abs() / ARC_STEP).ceil() as usize).max(1);
        let mut out: Vec<Point2> = (1..steps)
            .map(|k| {
                let t = theta1 + delta * k as f64 / steps as f64;
                let (s, c) = t.sin_cos();
                Point2 {
                    x: cx + cos_phi * rx * c - sin_phi * ry * s,
                    y: cy + sin_phi * rx * c + cos_phi * ry * s,
                }
            })
            .collect();
        out.push(self.to);
        out
    }
}

/// Result of sampling a filled region on a regular grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RasterCount {
    /// Grid points inside the disk.
    pub disk: usize,
    /// Grid points inside both the disk and the region.
    pub region_in_disk: usize,
    /// Grid points inside the region but outside the disk.
    pub region_outside_disk: usize,
}

impl RasterCount {
    pub fn fraction(&self) -> f64 {
        self.region_in_disk as f64 / self.disk as f64
    }
}

/// Even-odd point-in-path test of the `path` element `region_id` at the
/// centres of a `grid × grid` lattice over the canvas, against the disk
/// described by the `circle` element `disk_id`.
pub fn rasterize_region(
    svg: &str,
    region_id: &str,
    disk_id: &str,
    grid: usize,
    exec: Execution,
) -> Result<RasterCount> {
    let (w, h) = view_box(svg)?;
    let d = element_attr(svg, region_id, "d")
        .ok_or_else(|| TaijiError::MalformedPath(format!("no path {region_id:?}")))?;
    let polys = flatten_path(d)?;
    let circle = |k: &str| -> Result<f64> {
        element_attr(svg, disk_id, k)
            .ok_or_else(|| TaijiError::MalformedPath(format!("no circle {disk_id:?}")))?
            .parse()
            .map_err(|_| TaijiError::MalformedPath(format!("bad circle attribute {k}")))
    };
    let (cx, cy, r) = (circle("cx")?, circle("cy")?, circle("r")?);

    let edges: Vec<(Point2, Point2)> = polys
        .iter()
        .flat_map(|p| p.windows(2).map(|w| (w[0], w[1])))
        .collect();

    let rows = exec::map_range(grid, exec, |j| {
        let y = (j as f64 + 0.5) * h / grid as f64;
        let mut crossings: Vec<f64> = edges
            .iter()
            .filter(|(a, b)| (a.y <= y) != (b.y <= y))
            .map(|(a, b)| a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x))
            .collect();
        crossings.sort_by(f64::total_cmp);
        let mut count = RasterCount {
            disk: 0,
            region_in_disk: 0,
            region_outside_disk: 0,
        };
        let mut next = 0;
        for i in 0..grid {
            let x = (i as f64 + 0.5) * w / grid as f64;
            while next < crossings.len() && crossings[next] < x {
                next += 1;
            }
            let inside_region = next % 2 == 1;
            let inside_disk = (x - cx).powi(2) + (y - cy).powi(2) <= r * r;
            count.disk += usize::from(inside_disk);
            count.region_in_disk += usize::from(inside_disk && inside_region);
            count.region_outside_disk += usize::from(!inside_disk && inside_region);
        }
        count
    });
    Ok(rows.into_iter().fold(
        RasterCount {
            disk: 0,
            region_in_disk: 0,
            region_outside_disk: 0,
        },
        |a, b| RasterCount {
            disk: a.disk + b.disk,
            region_in_disk: a.region_in_disk + b.region_in_disk,
            region_outside_disk: a.region_outside_disk + b.region_outside_disk,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn attributes_by_id() {
        let svg = r#"<svg viewBox="0 0 10 20"><circle id="c" cx="1.5" cy="2" r="3"/><path id="p" d="M 0 0 Z"/></svg>"#;
        assert_eq!(element_attr(svg, "c", "cx"), Some("1.5"));
        assert_eq!(element_attr(svg, "p", "d"), Some("M 0 0 Z"));
        assert_eq!(element_attr(svg, "p", "cx"), None);
        assert_eq!(element_attr(svg, "q", "d"), None);
        assert_eq!(view_box(svg).unwrap(), (10.0, 20.0));
    }

    #[test]
    fn semicircle_arcs() {
        // Lower screen half (positive sweep) and upper half (negative sweep).
        for (sweep, sign) in [(1, 1.0), (0, -1.0)] {
            let polys = flatten_path(&format!("M 2 1 A 1 1 0 0 {sweep} 0 1 Z")).unwrap();
            let pts = &polys[0];
            assert_eq!(pts.first(), pts.last());
            for p in &pts[1..pts.len() - 2] {
                assert!(((p.x - 1.0).powi(2) + (p.y - 1.0).powi(2) - 1.0).abs() < 1e-12);
                assert!(sign * (p.y - 1.0) > 0.0);
            }
        }
    }

    #[test]
    fn quarter_arc_with_offset_centre() {
        let polys = flatten_path("M 1 0 A 1 1 0 0 1 0 1").unwrap();
        for p in &polys[0] {
            assert!((p.x.hypot(p.y) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_unknown_commands() {
        assert!(flatten_path("M 0 0 C 1 1 2 2 3 3").is_err());
        assert!(flatten_path("M 0 0 L 1").is_err());
    }

    #[test]
    fn square_half_of_disk() {
        let svg = r#"<svg viewBox="0 0 100 100"><circle id="c" cx="50" cy="50" r="50"/><path id="p" d="M 0 0 L 100 0 L 100 50 L 0 50 Z"/></svg>"#;
        for exec in [Execution::Sequential, Execution::Parallel] {
            let c = rasterize_region(svg, "p", "c", 400, exec).unwrap();
            assert!((c.fraction() - 0.5).abs() < 1e-3, "{c:?}");
            assert!(c.region_outside_disk > 0);
        }
    }
}
