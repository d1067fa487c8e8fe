//! Paths on the integer grid, the representation verifier, line compaction,
//! the representation file format and rendering.
//!
//! Two paths intersect iff they share a unit grid edge. Sharing a grid point
//! only is not an intersection.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

pub type Point = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path needs at least one unit edge")]
    TooShort,
    #[error("zero-length step at index {0}")]
    ZeroStep(usize),
    #[error("diagonal step at index {0}")]
    Diagonal(usize),
    #[error("grid point {0:?} visited twice")]
    RepeatedPoint(Point),
}

/// A vertex-simple lattice path stored by its corners: the two endpoints and
/// every bend point. Consecutive segments alternate orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridPath {
    corners: Vec<Point>,
}

/// A maximal straight run of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub from: Point,
    pub to: Point,
}

impl Segment {
    pub fn is_horizontal(&self) -> bool {
        self.from.1 == self.to.1
    }

    /// `(line, lo, hi)`: the fixed coordinate and the covered range.
    pub fn span(&self) -> (i64, i64, i64) {
        if self.is_horizontal() {
            (self.from.1, self.from.0.min(self.to.0), self.from.0.max(self.to.0))
        } else {
            (self.from.0, self.from.1.min(self.to.1), self.from.1.max(self.to.1))
        }
    }

    fn touches(&self, o: &Segment) -> bool {
        let (l1, a1, b1) = self.span();
        let (l2, a2, b2) = o.span();
        if self.is_horizontal() == o.is_horizontal() {
            l1 == l2 && a1.max(a2) <= b1.min(b2)
        } else {
            a1 <= l2 && l2 <= b1 && a2 <= l1 && l1 <= b2
        }
    }
}

fn sign(v: i64) -> i64 {
    v.signum()
}

impl GridPath {
    /// Canonicalizes a lattice-point sequence: merges collinear runs and
    /// checks that the result is vertex-simple.
    pub fn new<I: IntoIterator<Item = Point>>(points: I) -> Result<Self, PathError> {
        let pts: Vec<Point> = points.into_iter().collect();
        if pts.len() < 2 {
            return Err(PathError::TooShort);
        }
        let mut corners = vec![pts[0]];
        let mut dir: Option<(i64, i64)> = None;
        for i in 1..pts.len() {
            let (dx, dy) = (pts[i].0 - pts[i - 1].0, pts[i].1 - pts[i - 1].1);
            if dx == 0 && dy == 0 {
                return Err(PathError::ZeroStep(i));
            }
            if dx != 0 && dy != 0 {
                return Err(PathError::Diagonal(i));
            }
            let d = (sign(dx), sign(dy));
            match dir {
                Some(p) if p == d => {
                    *corners.last_mut().unwrap() = pts[i];
                }
                Some(p) if p == (-d.0, -d.1) => {
                    return Err(PathError::RepeatedPoint((pts[i - 1].0 + d.0, pts[i - 1].1 + d.1)));
                }
                _ => corners.push(pts[i]),
            }
            dir = Some(d);
        }
        let path = GridPath { corners };
        path.check_simple()?;
        Ok(path)
    }

    /// Builds from corners already in canonical form. Builders use this on
    /// their own output; the verifier still checks the result.
    pub(crate) fn from_corners(corners: Vec<Point>) -> Self {
        debug_assert!(GridPath::new(corners.iter().copied()).map(|p| p.corners == corners).unwrap_or(false),
            "non-canonical corners {corners:?}");
        GridPath { corners }
    }

    fn check_simple(&self) -> Result<(), PathError> {
        let segs: Vec<Segment> = self.segments().collect();
        for i in 0..segs.len() {
            for j in i + 2..segs.len() {
                if segs[i].touches(&segs[j]) {
                    return Err(PathError::RepeatedPoint(first_common_point(&segs[i], &segs[j])));
                }
            }
        }
        Ok(())
    }

    pub fn corners(&self) -> &[Point] {
        &self.corners
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.corners.windows(2).map(|w| Segment { from: w[0], to: w[1] })
    }

    pub fn bends(&self) -> usize {
        self.corners.len() - 2
    }

    /// Ascending in both coordinates in one of the two traversal directions.
    pub fn is_monotonic(&self) -> bool {
        let steps = || self.corners.windows(2).map(|w| (w[1].0 - w[0].0, w[1].1 - w[0].1));
        steps().all(|(dx, dy)| dx >= 0 && dy >= 0) || steps().all(|(dx, dy)| dx <= 0 && dy <= 0)
    }

    /// Unit edges covered, as `(lower-left point, horizontal?)`.
    pub fn edge_set(&self) -> BTreeSet<(Point, bool)> {
        let mut out = BTreeSet::new();
        for s in self.segments() {
            let (line, lo, hi) = s.span();
            for t in lo..hi {
                out.insert(if s.is_horizontal() { ((t, line), true) } else { ((line, t), false) });
            }
        }
        out
    }

    pub fn reversed(&self) -> GridPath {
        GridPath { corners: self.corners.iter().rev().copied().collect() }
    }

    pub fn translated(&self, dx: i64, dy: i64) -> GridPath {
        GridPath { corners: self.corners.iter().map(|&(x, y)| (x + dx, y + dy)).collect() }
    }

    /// Applies `f` to every corner. `f` must be an isometry of the grid.
    pub fn mapped(&self, f: impl Fn(Point) -> Point) -> GridPath {
        GridPath { corners: self.corners.iter().map(|&p| f(p)).collect() }
    }
}

fn first_common_point(a: &Segment, b: &Segment) -> Point {
    let (l1, a1, _) = a.span();
    let (l2, a2, _) = b.span();
    match (a.is_horizontal(), b.is_horizontal()) {
        (true, true) => (a1.max(a2), l1),
        (false, false) => (l1, a1.max(a2)),
        (true, false) => (l2, l1),
        (false, true) => (l1, l2),
    }
}

pub fn count_bends(p: &GridPath) -> usize {
    p.bends()
}

pub fn is_monotonic(p: &GridPath) -> bool {
    p.is_monotonic()
}

/// True iff the paths share a unit grid edge.
pub fn intersects(p: &GridPath, q: &GridPath) -> bool {
    for s in p.segments() {
        for t in q.segments() {
            if s.is_horizontal() == t.is_horizontal() {
                let (l1, a1, b1) = s.span();
                let (l2, a2, b2) = t.span();
                if l1 == l2 && a1.max(a2) < b1.min(b2) {
                    return true;
                }
            }
        }
    }
    false
}

/// A map from vertex id to its path.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EpgRepresentation {
    pub paths: BTreeMap<usize, GridPath>,
}

impl EpgRepresentation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: usize, p: GridPath) {
        self.paths.insert(v, p);
    }

    pub fn get(&self, v: usize) -> Option<&GridPath> {
        self.paths.get(&v)
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// `(max x, max y)` over all corners, or `(0, 0)` when empty.
    pub fn extent(&self) -> (i64, i64) {
        let mut e = (0, 0);
        for p in self.paths.values() {
            for &(x, y) in p.corners() {
                e = (e.0.max(x), e.1.max(y));
            }
        }
        e
    }

    fn min_corner(&self) -> (i64, i64) {
        let mut e = (i64::MAX, i64::MAX);
        for p in self.paths.values() {
            for &(x, y) in p.corners() {
                e = (e.0.min(x), e.1.min(y));
            }
        }
        e
    }

    pub fn max_bends(&self) -> usize {
        self.paths.values().map(GridPath::bends).max().unwrap_or(0)
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Self {
        EpgRepresentation {
            paths: self.paths.iter().map(|(&v, p)| (v, p.translated(dx, dy))).collect(),
        }
    }

    /// Moves the bounding box to the origin.
    pub fn normalized(&self) -> Self {
        if self.is_empty() {
            return self.clone();
        }
        let (mx, my) = self.min_corner();
        self.translated(-mx, -my)
    }

    /// Applies `f` to every corner. Grid isometries keep every
    /// intersection and bend count; monotonicity survives those that send
    /// the direction (1, 1) to itself or to (-1, -1).
    pub fn mapped(&self, f: impl Fn(Point) -> Point + Copy) -> Self {
        EpgRepresentation { paths: self.paths.iter().map(|(&v, p)| (v, p.mapped(f))).collect() }
    }

    /// All unordered vertex pairs whose paths share a unit edge.
    pub fn intersection_pairs(&self) -> BTreeSet<(usize, usize)> {
        // per grid line: (lo, hi, vertex)
        let mut lines: HashMap<(bool, i64), Vec<(i64, i64, usize)>> = HashMap::new();
        for (&v, p) in &self.paths {
            for s in p.segments() {
                let (line, lo, hi) = s.span();
                lines.entry((s.is_horizontal(), line)).or_default().push((lo, hi, v));
            }
        }
        let mut pairs = BTreeSet::new();
        for segs in lines.values_mut() {
            segs.sort_unstable();
            let mut active: Vec<(i64, usize)> = Vec::new();
            for &(lo, hi, v) in segs.iter() {
                active.retain(|&(h, _)| h > lo);
                for &(_, w) in &active {
                    if w != v {
                        pairs.insert((v.min(w), v.max(w)));
                    }
                }
                active.push((hi, v));
            }
        }
        pairs
    }

    /// Serializes to the representation file format. Paths are listed by
    /// ascending vertex id; `cols`/`rows` count grid lines from 0 to the
    /// extent.
    pub fn to_json(&self) -> String {
        let (mx, my) = self.extent();
        let (cols, rows) = if self.is_empty() { (0, 0) } else { (mx + 1, my + 1) };
        let mut s = format!("{{\"grid\":{{\"cols\":{cols},\"rows\":{rows}}},\"paths\":{{");
        for (i, (v, p)) in self.paths.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "\"{v}\":[").unwrap();
            for (j, (x, y)) in p.corners().iter().enumerate() {
                if j > 0 {
                    s.push(',');
                }
                write!(s, "[{x},{y}]").unwrap();
            }
            s.push(']');
        }
        s.push_str("}}\n");
        s
    }

    pub fn from_json(text: &str) -> Result<Self, RepError> {
        let doc: serde_json::Value = serde_json::from_str(text).map_err(|e| RepError::Json(e.to_string()))?;
        let grid = doc.get("grid").ok_or(RepError::Field("grid"))?;
        let cols = grid.get("cols").and_then(|c| c.as_i64()).ok_or(RepError::Field("grid.cols"))?;
        let rows = grid.get("rows").and_then(|c| c.as_i64()).ok_or(RepError::Field("grid.rows"))?;
        let paths = doc.get("paths").and_then(|p| p.as_object()).ok_or(RepError::Field("paths"))?;
        let mut rep = EpgRepresentation::new();
        for (key, pts) in paths {
            let v: usize = key.parse().map_err(|_| RepError::Key(key.clone()))?;
            let arr = pts.as_array().ok_or(RepError::Field("paths.*"))?;
            let mut points = Vec::with_capacity(arr.len());
            for pt in arr {
                let xy = pt.as_array().filter(|a| a.len() == 2).ok_or(RepError::Field("point"))?;
                let x = xy[0].as_i64().ok_or(RepError::Field("point.x"))?;
                let y = xy[1].as_i64().ok_or(RepError::Field("point.y"))?;
                if x < 0 || y < 0 || x >= cols || y >= rows {
                    return Err(RepError::OutOfGrid { vertex: v, point: (x, y) });
                }
                points.push((x, y));
            }
            let path = GridPath::new(points).map_err(|e| RepError::Path { vertex: v, source: e })?;
            rep.insert(v, path);
        }
        Ok(rep)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("missing or malformed field `{0}`")]
    Field(&'static str),
    #[error("path key {0:?} is not a vertex id")]
    Key(String),
    #[error("vertex {vertex}: point {point:?} outside the declared grid")]
    OutOfGrid { vertex: usize, point: Point },
    #[error("vertex {vertex}: {source}")]
    Path { vertex: usize, source: PathError },
}

/// Outcome of [`verify`]; `pass` holds iff every offending list is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub max_bends_seen: usize,
    pub monotonic_all: bool,
    pub missing_vertices: Vec<usize>,
    pub unknown_vertices: Vec<usize>,
    pub extra_intersections: Vec<(usize, usize)>,
    pub missing_intersections: Vec<(usize, usize)>,
    pub too_many_bends: Vec<usize>,
    pub non_monotonic: Vec<usize>,
}

/// Checks that `rep` is an EPG representation of `g`, optionally with at most
/// `max_bends` bends per path and only monotonic paths.
pub fn verify(g: &Graph, rep: &EpgRepresentation, max_bends: Option<usize>, monotonic: bool) -> VerificationReport {
    let missing_vertices: Vec<usize> = g.vertices().filter(|v| !rep.paths.contains_key(v)).collect();
    let unknown_vertices: Vec<usize> = rep.paths.keys().copied().filter(|&v| v == 0 || v > g.n()).collect();
    let pairs = rep.intersection_pairs();
    let extra_intersections: Vec<_> =
        pairs.iter().copied().filter(|&(u, v)| v <= g.n() && u >= 1 && !g.has_edge(u, v)).collect();
    let missing_intersections: Vec<_> = g
        .edges()
        .filter(|&(u, v)| rep.paths.contains_key(&u) && rep.paths.contains_key(&v) && !pairs.contains(&(u, v)))
        .collect();
    let too_many_bends: Vec<usize> = match max_bends {
        Some(k) => rep.paths.iter().filter(|(_, p)| p.bends() > k).map(|(&v, _)| v).collect(),
        None => Vec::new(),
    };
    let non_mono: Vec<usize> = rep.paths.iter().filter(|(_, p)| !p.is_monotonic()).map(|(&v, _)| v).collect();
    let monotonic_all = non_mono.is_empty();
    let non_monotonic = if monotonic { non_mono } else { Vec::new() };
    let pass = missing_vertices.is_empty()
        && unknown_vertices.is_empty()
        && extra_intersections.is_empty()
        && missing_intersections.is_empty()
        && too_many_bends.is_empty()
        && non_monotonic.is_empty();
    VerificationReport {
        pass,
        max_bends_seen: rep.max_bends(),
        monotonic_all,
        missing_vertices,
        unknown_vertices,
        extra_intersections,
        missing_intersections,
        too_many_bends,
        non_monotonic,
    }
}

/// Deletes every grid line that carries no corner. Corner coordinates are
/// replaced by their rank on each axis, which keeps the order of all
/// coordinates and therefore every intersection, bend and monotonicity flag.
pub fn compact(rep: &EpgRepresentation) -> EpgRepresentation {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for p in rep.paths.values() {
        for &(x, y) in p.corners() {
            xs.push(x);
            ys.push(y);
        }
    }
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    let rank = |v: &[i64], c: i64| v.binary_search(&c).unwrap() as i64;
    EpgRepresentation {
        paths: rep
            .paths
            .iter()
            .map(|(&v, p)| (v, GridPath { corners: p.corners().iter().map(|&(x, y)| (rank(&xs, x), rank(&ys, y))).collect() }))
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Ascii,
}

impl std::str::FromStr for RenderFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "svg" => Ok(RenderFormat::Svg),
            "ascii" => Ok(RenderFormat::Ascii),
            other => Err(format!("unsupported format {other:?}")),
        }
    }
}

pub fn render(rep: &EpgRepresentation, format: RenderFormat) -> String {
    match format {
        RenderFormat::Svg => render_svg(rep),
        RenderFormat::Ascii => render_ascii(rep),
    }
}

const CELL: f64 = 40.0;
const MARGIN: f64 = 20.0;

fn color(v: usize) -> String {
    let hue = (v as f64 * 137.508) % 360.0;
    format!("hsl({hue:.1},70%,42%)")
}

fn render_svg(rep: &EpgRepresentation) -> String {
    let (mx, my) = rep.extent();
    let w = mx as f64 * CELL + 2.0 * MARGIN;
    let h = my as f64 * CELL + 2.0 * MARGIN;
    let px = |x: f64| MARGIN + x * CELL;
    let py = |y: f64| MARGIN + (my as f64 - y) * CELL;
    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(s, r##"<g stroke="#ddd" stroke-width="1">"##).unwrap();
    for x in 0..=mx {
        writeln!(s, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, px(x as f64), py(0.0), py(my as f64)).unwrap();
    }
    for y in 0..=my {
        writeln!(s, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, py(y as f64), px(0.0), px(mx as f64)).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    for (&v, p) in &rep.paths {
        // parallel tracks: shift each path by -0.12, 0 or +0.12 cells
        let off = ((v % 3) as f64 - 1.0) * 0.12;
        let pts: Vec<String> = p
            .corners()
            .iter()
            .map(|&(x, y)| format!("{:.1},{:.1}", px(x as f64 + off), py(y as f64 + off)))
            .collect();
        writeln!(
            s,
            r#"<polyline fill="none" stroke="{}" stroke-width="3" points="{}"><title>{v}</title></polyline>"#,
            color(v),
            pts.join(" ")
        )
        .unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    s
}

const GLYPHS: &[u8] = b"123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

fn render_ascii(rep: &EpgRepresentation) -> String {
    let (mx, my) = rep.extent();
    let w = (2 * mx + 1) as usize;
    let h = (2 * my + 1) as usize;
    let mut cells = vec![vec![b' '; w]; h];
    for (r, row) in cells.iter_mut().enumerate() {
        if r % 2 == 0 {
            for c in (0..w).step_by(2) {
                row[c] = b'.';
            }
        }
    }
    for (&v, p) in &rep.paths {
        let glyph = GLYPHS[(v - 1) % GLYPHS.len()];
        let mut mine = BTreeSet::new();
        for s in p.segments() {
            let (line, lo, hi) = s.span();
            for t in 2 * lo..=2 * hi {
                mine.insert(if s.is_horizontal() { (t, 2 * line) } else { (2 * line, t) });
            }
        }
        for (x, y) in mine {
            let cell = &mut cells[h - 1 - y as usize][x as usize];
            *cell = if *cell == b'.' || *cell == b' ' { glyph } else { b'*' };
        }
    }
    let mut s = String::new();
    for row in cells {
        s.push_str(String::from_utf8(row).unwrap().trim_end());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(pts: &[Point]) -> GridPath {
        GridPath::new(pts.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(path(&[(0, 0), (1, 0), (2, 0)]).corners(), &[(0, 0), (2, 0)]);
        assert_eq!(path(&[(0, 0), (1, 0), (1, 1)]).bends(), 1);
        assert_eq!(GridPath::new([(0, 0), (1, 0), (0, 0)]), Err(PathError::RepeatedPoint((0, 0))));
        assert_eq!(GridPath::new([(0, 0), (0, 0)]), Err(PathError::ZeroStep(1)));
        assert_eq!(GridPath::new([(0, 0), (1, 1)]), Err(PathError::Diagonal(1)));
        assert_eq!(GridPath::new([(0, 0)]), Err(PathError::TooShort));
        // a spiral that comes back onto its first segment
        assert!(GridPath::new([(0, 0), (3, 0), (3, 2), (1, 2), (1, -1)]).is_err());
    }

    #[test]
    fn bends_and_monotonicity() {
        assert_eq!(count_bends(&path(&[(0, 0), (5, 0)])), 0);
        assert!(is_monotonic(&path(&[(0, 0), (1, 0), (1, 1)])));
        assert!(!is_monotonic(&path(&[(0, 1), (1, 1), (1, 0)])));
        let s = path(&[(0, 0), (2, 0), (2, 2), (4, 2)]);
        assert!(s.is_monotonic() && s.bends() == 2);
        assert!(s.reversed().is_monotonic());
    }

    #[test]
    fn point_contact_is_not_intersection() {
        assert!(intersects(&path(&[(0, 0), (2, 0)]), &path(&[(1, 0), (3, 0)])));
        assert!(!intersects(&path(&[(0, 0), (1, 0)]), &path(&[(1, 0), (1, 1)])));
        assert!(!intersects(&path(&[(0, 0), (1, 0)]), &path(&[(1, 0), (2, 0)])));
        assert!(!intersects(&path(&[(0, 0), (2, 0)]), &path(&[(1, -1), (1, 1)])));
        assert!(!intersects(&path(&[(0, 0), (1, 0)]), &path(&[(5, 5), (6, 5)])));
    }

    #[test]
    fn verify_k3_and_missing_vertex() {
        let g = Graph::from_edges(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let mut rep = EpgRepresentation::new();
        for v in 1..=3 {
            rep.insert(v, path(&[(1, 1), (2, 1)]));
        }
        let r = verify(&g, &rep, Some(0), false);
        assert!(r.pass, "{r:?}");
        rep.paths.remove(&2);
        let r = verify(&g, &rep, Some(0), false);
        assert!(!r.pass);
        assert_eq!(r.missing_vertices, vec![2]);
    }

    #[test]
    fn compaction() {
        let mut rep = EpgRepresentation::new();
        rep.insert(1, path(&[(3, 5), (900, 5)]));
        let c = compact(&rep);
        assert_eq!(c.get(1).unwrap().corners(), &[(0, 0), (1, 0)]);
        assert_eq!(compact(&c), c);
    }

    #[test]
    fn json_round_trip() {
        let mut rep = EpgRepresentation::new();
        rep.insert(10, path(&[(0, 0), (1, 0), (1, 2)]));
        rep.insert(2, path(&[(0, 0), (1, 0)]));
        let text = rep.to_json();
        assert_eq!(text, "{\"grid\":{\"cols\":2,\"rows\":3},\"paths\":{\"2\":[[0,0],[1,0]],\"10\":[[0,0],[1,0],[1,2]]}}\n");
        assert_eq!(EpgRepresentation::from_json(&text).unwrap(), rep);
        assert!(matches!(
            EpgRepresentation::from_json("{\"grid\":{\"cols\":1,\"rows\":1},\"paths\":{\"1\":[[0,0],[1,0]]}}"),
            Err(RepError::OutOfGrid { .. })
        ));
    }

    #[test]
    fn render_smoke() {
        let empty = EpgRepresentation::new();
        assert!(render(&empty, RenderFormat::Svg).contains("<svg"));
        let mut rep = EpgRepresentation::new();
        for v in 1..=3 {
            rep.insert(v, path(&[(0, 0), (1, 0)]));
        }
        let svg = render(&rep, RenderFormat::Svg);
        assert_eq!(svg.matches("<polyline").count(), 3);
        assert_eq!(render(&rep, RenderFormat::Ascii), "***\n");
    }
}
