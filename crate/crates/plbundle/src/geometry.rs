//! Planar points, polylines, bundles and the two segment-vs-subpolyline
//! distance decisions (Hausdorff and Fréchet) that define shortcut validity.

use crate::error::{Error, Result};

/// A point in the plane. Coordinates are abstract planar reals; no geodesic
/// correction is applied to geographic inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist(&self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// A simple polyline, stored as indices into a bundle's point table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyline {
    pub points: Vec<usize>,
}

impl Polyline {
    pub fn new(points: Vec<usize>) -> Self {
        Polyline { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> usize {
        self.points[0]
    }

    pub fn last(&self) -> usize {
        *self.points.last().unwrap()
    }
}

/// Distance function governing shortcut validity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Hausdorff,
    Frechet,
}

impl std::fmt::Display for Metric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Metric::Hausdorff => write!(f, "hausdorff"),
            Metric::Frechet => write!(f, "frechet"),
        }
    }
}

impl std::str::FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hausdorff" | "h" => Ok(Metric::Hausdorff),
            "frechet" | "fréchet" | "f" => Ok(Metric::Frechet),
            other => Err(format!("unknown metric '{other}'")),
        }
    }
}

/// A set of points plus the polylines over them. The distance threshold δ is
/// a runtime parameter, not part of the bundle.
#[derive(Debug, Clone, PartialEq)]
pub struct Bundle {
    pub points: Vec<Point>,
    pub lines: Vec<Polyline>,
}

impl Bundle {
    pub fn new(points: Vec<Point>, lines: Vec<Polyline>) -> Result<Self> {
        let bundle = Bundle { points, lines };
        bundle.validate()?;
        Ok(bundle)
    }

    /// Number of points.
    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// Number of polylines.
    pub fn ell(&self) -> usize {
        self.lines.len()
    }

    pub fn point(&self, idx: usize) -> Point {
        self.points[idx]
    }

    /// Checks the structural invariants: finite coordinates, lines of length
    /// at least two, indices in range, no repeated point within a line.
    pub fn validate(&self) -> Result<()> {
        for (i, p) in self.points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::InvalidBundle(format!("point {i} is not finite")));
            }
        }
        let mut seen = vec![usize::MAX; self.points.len()];
        for (li, line) in self.lines.iter().enumerate() {
            if line.len() < 2 {
                return Err(Error::InvalidBundle(format!(
                    "line {li} has fewer than 2 points"
                )));
            }
            for &p in &line.points {
                if p >= self.points.len() {
                    return Err(Error::InvalidBundle(format!(
                        "line {li} refers to point {p} out of range"
                    )));
                }
                if seen[p] == li {
                    return Err(Error::InvalidBundle(format!(
                        "line {li} visits point {p} twice (not simple)"
                    )));
                }
                seen[p] = li;
            }
        }
        Ok(())
    }

    /// Indices that are the first or last point of some line.
    pub fn endpoint_set(&self) -> std::collections::BTreeSet<usize> {
        let mut s = std::collections::BTreeSet::new();
        for line in &self.lines {
            s.insert(line.first());
            s.insert(line.last());
        }
        s
    }

    /// Line degree of a point: the number of polylines that contain it.
    pub fn line_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.points.len()];
        for line in &self.lines {
            for &p in &line.points {
                deg[p] += 1;
            }
        }
        deg
    }

    /// The coordinates of a line's sub-polyline between positions `i..=j`.
    pub fn sub_coords(&self, line: usize, i: usize, j: usize) -> Vec<Point> {
        self.lines[line].points[i..=j]
            .iter()
            .map(|&p| self.points[p])
            .collect()
    }
}

/// Euclidean distance from `p` to the closed segment `ab` (`a == b` allowed).
pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    let t = t.clamp(0.0, 1.0);
    let proj = Point::new(a.x + t * dx, a.y + t * dy);
    p.dist(proj)
}

fn check_endpoints(seg: (Point, Point), sub: &[Point]) -> Result<()> {
    if sub.len() < 2 {
        return Err(Error::EndpointMismatch);
    }
    if sub[0] != seg.0 || *sub.last().unwrap() != seg.1 {
        return Err(Error::EndpointMismatch);
    }
    Ok(())
}

/// Hausdorff validity of the shortcut `seg` against the sub-polyline `sub`.
///
/// Exact here because the sub-polyline shares its endpoints with the segment
/// and point-to-segment distance is convex along each sub-edge, so the
/// maximum is attained at a vertex. Runs in O(|sub|).
pub fn hausdorff_ok(seg: (Point, Point), sub: &[Point], delta: f64) -> Result<bool> {
    check_endpoints(seg, sub)?;
    Ok(sub
        .iter()
        .all(|&p| point_segment_distance(p, seg.0, seg.1) <= delta))
}

/// Fréchet decision for one segment against a sub-polyline with matching
/// endpoints.
///
/// The free space between a segment and an m-vertex polyline is a single
/// column of convex cells, so a monotone traversal exists iff the chords of
/// the radius-δ disks around the vertices, projected onto the segment
/// parameter, can be visited in order. We propagate the running lower bound
/// of the feasible parameter and reject when it passes a chord's right end.
/// Runs in O(|sub|).
pub fn frechet_ok(seg: (Point, Point), sub: &[Point], delta: f64) -> Result<bool> {
    check_endpoints(seg, sub)?;
    if delta < 0.0 {
        return Ok(false);
    }
    let (a, b) = seg;
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        // Degenerate segment: every vertex must lie within delta of the point.
        return Ok(sub.iter().all(|&p| p.dist(a) <= delta));
    }
    let mut t_min = 0.0f64;
    for &v in &sub[1..sub.len() - 1] {
        // Chord of the delta-disk around v on the segment parameter axis.
        let c = ((v.x - a.x) * dx + (v.y - a.y) * dy) / len2;
        let d2 = {
            let px = a.x + c * dx - v.x;
            let py = a.y + c * dy - v.y;
            px * px + py * py
        };
        let r2 = (delta * delta / len2) - d2 / len2;
        if r2 < 0.0 {
            return Ok(false);
        }
        let half = r2.sqrt();
        let lo = (c - half).max(0.0);
        let hi = (c + half).min(1.0);
        if lo > hi {
            return Ok(false);
        }
        t_min = t_min.max(lo);
        if t_min > hi {
            return Ok(false);
        }
    }
    Ok(t_min <= 1.0)
}

/// Metric-dispatched shortcut validity check.
pub fn metric_ok(metric: Metric, seg: (Point, Point), sub: &[Point], delta: f64) -> Result<bool> {
    match metric {
        Metric::Hausdorff => hausdorff_ok(seg, sub, delta),
        Metric::Frechet => frechet_ok(seg, sub, delta),
    }
}

/// Maximum vertex distance from `sub` to the segment; the achieved Hausdorff
/// distance of a shortcut.
pub fn hausdorff_distance(seg: (Point, Point), sub: &[Point]) -> f64 {
    sub.iter()
        .map(|&p| point_segment_distance(p, seg.0, seg.1))
        .fold(0.0, f64::max)
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orient(a, b, p) == 0.0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Whether closed segments `ab` and `cd` share any point.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(c, d, a))
        || (d2 == 0.0 && on_segment(c, d, b))
        || (d3 == 0.0 && on_segment(a, b, c))
        || (d4 == 0.0 && on_segment(a, b, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn point_segment_basic() {
        let a = p(0.0, 0.0);
        let b = p(10.0, 0.0);
        assert_eq!(point_segment_distance(p(5.0, 3.0), a, b), 3.0);
        assert_eq!(point_segment_distance(p(-3.0, 4.0), a, b), 5.0);
        assert_eq!(point_segment_distance(p(5.0, 0.0), a, b), 0.0);
        // a == b falls back to point distance
        assert_eq!(point_segment_distance(p(3.0, 4.0), a, a), 5.0);
    }

    #[test]
    fn hausdorff_vertex_max() {
        let seg = (p(0.0, 0.0), p(10.0, 0.0));
        let sub = vec![p(0.0, 0.0), p(5.0, 3.0), p(10.0, 0.0)];
        assert!(hausdorff_ok(seg, &sub, 3.0).unwrap());
        assert!(!hausdorff_ok(seg, &sub, 2.9).unwrap());

        // Backtracking sub-polyline: max vertex distance is 0.1.
        let zig = vec![p(0.0, 0.0), p(6.0, 0.1), p(4.0, -0.1), p(10.0, 0.0)];
        assert!(hausdorff_ok(seg, &zig, 0.2).unwrap());
    }

    #[test]
    fn hausdorff_endpoint_mismatch() {
        let seg = (p(0.0, 0.0), p(10.0, 0.0));
        let sub = vec![p(0.0, 0.0), p(9.0, 0.0)];
        assert!(matches!(
            hausdorff_ok(seg, &sub, 1.0),
            Err(Error::EndpointMismatch)
        ));
    }

    #[test]
    fn frechet_monotone_equals_hausdorff() {
        let seg = (p(0.0, 0.0), p(10.0, 0.0));
        let sub = vec![p(0.0, 0.0), p(5.0, 3.0), p(10.0, 0.0)];
        assert!(frechet_ok(seg, &sub, 3.0).unwrap());
        assert!(!frechet_ok(seg, &sub, 2.9).unwrap());
    }

    #[test]
    fn frechet_rejects_backtracking() {
        // Hausdorff-valid at 0.2 but the feasible chords [5.827, 6.173] then
        // [3.827, 4.173] cannot be visited monotonically.
        let seg = (p(0.0, 0.0), p(10.0, 0.0));
        let zig = vec![p(0.0, 0.0), p(6.0, 0.1), p(4.0, -0.1), p(10.0, 0.0)];
        assert!(hausdorff_ok(seg, &zig, 0.2).unwrap());
        assert!(!frechet_ok(seg, &zig, 0.2).unwrap());
    }

    #[test]
    fn frechet_degenerate_sub() {
        let seg = (p(1.0, 2.0), p(3.0, 4.0));
        let sub = vec![p(1.0, 2.0), p(3.0, 4.0)];
        assert!(frechet_ok(seg, &sub, 0.0).unwrap());
    }

    #[test]
    fn segment_intersection() {
        assert!(segments_intersect(
            p(0.0, 0.0),
            p(2.0, 2.0),
            p(0.0, 2.0),
            p(2.0, 0.0)
        ));
        assert!(!segments_intersect(
            p(0.0, 0.0),
            p(1.0, 0.0),
            p(0.0, 1.0),
            p(1.0, 1.0)
        ));
        // Sharing an endpoint counts as intersecting; callers exempt shared
        // polyline vertices themselves.
        assert!(segments_intersect(
            p(0.0, 0.0),
            p(1.0, 0.0),
            p(1.0, 0.0),
            p(2.0, 1.0)
        ));
    }

    #[test]
    fn bundle_invariants() {
        let pts = vec![p(0.0, 0.0), p(1.0, 0.0)];
        assert!(Bundle::new(pts.clone(), vec![Polyline::new(vec![0, 1])]).is_ok());
        assert!(Bundle::new(pts.clone(), vec![Polyline::new(vec![0])]).is_err());
        assert!(Bundle::new(pts.clone(), vec![Polyline::new(vec![0, 2])]).is_err());
        assert!(Bundle::new(pts, vec![Polyline::new(vec![0, 1, 0])]).is_err());
    }
}
