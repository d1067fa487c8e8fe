//! Maximal outerplanar graphs: the dual tree of inner faces, the reduced
//! graph of central triangles, interval (0-bend) and 1-bend constructions,
//! the vertex assignment that decides 1-bend representability, and the
//! resulting bend-number classification.
//!
//! Dual vertices are indices into [`DualTree::faces`], which are sorted
//! lexicographically by their (sorted) vertex triple.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::b2m::build_b2m;
use crate::coords::{Axis, Line};
use crate::embedding::{test_outerplanar, NotOuterplanar, OuterplanarEmbedding};
use crate::graph::Graph;
use crate::grid::{compact, EpgRepresentation, GridPath};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MaxOutError {
    #[error(transparent)]
    NotOuterplanar(#[from] NotOuterplanar),
    #[error("not maximal outerplanar: n = {n}, m = {m}, expected n >= 3 and m = 2n - 3")]
    NotMaximalOuterplanar { n: usize, m: usize },
    #[error("dual tree is not a path (dual vertex {0} has degree 3)")]
    DualNotPath(usize),
    #[error("assignment does not fit the dual tree: {0}")]
    BadAssignment(String),
}

/// Inner faces of a maximal outerplanar graph and their adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTree {
    pub faces: Vec<[usize; 3]>,
    pub adjacency: Vec<Vec<usize>>,
}

impl DualTree {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn degree(&self, f: usize) -> usize {
        self.adjacency[f].len()
    }

    pub fn contains(&self, f: usize, v: usize) -> bool {
        self.faces[f].contains(&v)
    }

    /// The graph edge shared by two adjacent faces, smaller id first.
    pub fn shared(&self, f: usize, h: usize) -> [usize; 2] {
        let s: Vec<usize> = self.faces[f].iter().copied().filter(|v| self.faces[h].contains(v)).collect();
        debug_assert_eq!(s.len(), 2);
        [s[0], s[1]]
    }

    /// The vertex of face `f` outside the pair `e`.
    pub fn apex(&self, f: usize, e: [usize; 2]) -> usize {
        *self.faces[f].iter().find(|v| !e.contains(v)).expect("face has a third vertex")
    }

    /// Faces in path order, starting at the end whose face has the smaller
    /// minimum vertex id (ties: smaller face index).
    pub fn path_order(&self) -> Result<Vec<usize>, MaxOutError> {
        if let Some(f) = (0..self.len()).find(|&f| self.degree(f) > 2) {
            return Err(MaxOutError::DualNotPath(f));
        }
        if self.len() == 1 {
            return Ok(vec![0]);
        }
        let start = (0..self.len())
            .filter(|&f| self.degree(f) == 1)
            .min_by_key(|&f| (self.faces[f][0], f))
            .expect("a path has two ends");
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&nx) = self.adjacency[cur].iter().find(|&&h| h != prev) {
            order.push(nx);
            prev = cur;
            cur = nx;
        }
        Ok(order)
    }
}

/// `m = 2n - 3`, `n >= 3`, and outerplanar.
pub fn is_maximal_outerplanar(g: &Graph) -> bool {
    g.n() >= 3 && g.m() == 2 * g.n() - 3 && test_outerplanar(g).is_ok()
}

/// The dual tree of inner faces. Every triangle of a maximal outerplanar
/// graph bounds an inner face, so the faces are exactly its triangles.
pub fn almost_dual(g: &Graph, emb: &OuterplanarEmbedding) -> Result<DualTree, MaxOutError> {
    let (n, m) = (g.n(), g.m());
    let connected_block = emb.blocks.len() == 1 && emb.blocks[0].len() == n;
    if n < 3 || m != 2 * n - 3 || !connected_block {
        return Err(MaxOutError::NotMaximalOuterplanar { n, m });
    }
    let mut faces = Vec::new();
    for (u, v) in g.edges() {
        for &w in g.neighbors(v) {
            if w > v && g.has_edge(u, w) {
                faces.push([u, v, w]);
            }
        }
    }
    faces.sort_unstable();
    if faces.len() != n - 2 {
        return Err(MaxOutError::NotMaximalOuterplanar { n, m });
    }
    let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for (x, y) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
            by_edge.entry((x, y)).or_default().push(i);
        }
    }
    let mut adjacency = vec![Vec::new(); faces.len()];
    for fs in by_edge.values() {
        if let [p, q] = fs[..] {
            adjacency[p].push(q);
            adjacency[q].push(p);
        }
    }
    for a in &mut adjacency {
        a.sort_unstable();
    }
    Ok(DualTree { faces, adjacency })
}

/// Degree-3 dual vertices with their triangles: the central triangles of the
/// copies of the 3-sun.
pub fn s3_centers(dual: &DualTree) -> Vec<(usize, [usize; 3])> {
    (0..dual.len()).filter(|&f| dual.degree(f) == 3).map(|f| (f, dual.faces[f])).collect()
}

/// Union of the central triangles.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReducedGraph {
    pub kept_vertices: Vec<usize>,
    pub kept_edges: Vec<(usize, usize)>,
    pub triangles: Vec<[usize; 3]>,
}

pub fn reduced_graph(_g: &Graph, dual: &DualTree) -> ReducedGraph {
    let triangles: Vec<[usize; 3]> = s3_centers(dual).into_iter().map(|(_, t)| t).collect();
    let mut vs = BTreeSet::new();
    let mut es = BTreeSet::new();
    for t in &triangles {
        vs.extend(t.iter().copied());
        es.extend([(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]);
    }
    ReducedGraph { kept_vertices: vs.into_iter().collect(), kept_edges: es.into_iter().collect(), triangles }
}

/// Interval representation along the dual path: every path lies on row 1 and
/// vertex `v` covers columns `min i .. max i + 1` over the faces `i` (counted
/// from 1) that contain it.
pub fn build_b0(g: &Graph, dual: &DualTree) -> Result<EpgRepresentation, MaxOutError> {
    let order = dual.path_order()?;
    let mut span: Vec<Option<(i64, i64)>> = vec![None; g.n() + 1];
    for (i, &f) in order.iter().enumerate() {
        let i = i as i64 + 1;
        for &v in &dual.faces[f] {
            let s = span[v].get_or_insert((i, i));
            s.1 = i;
        }
    }
    let mut rep = EpgRepresentation::new();
    for v in g.vertices() {
        let (lo, hi) = span[v].ok_or_else(|| MaxOutError::NotMaximalOuterplanar { n: g.n(), m: g.m() })?;
        rep.insert(v, GridPath::from_corners(vec![(lo, 1), (hi + 1, 1)]));
    }
    Ok(rep)
}

/// Where the assignment run stopped on a graph that is not M-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StopSite {
    /// Serving a pair of neighbored degree-3 dual vertices.
    Neighbored,
    /// Serving a dual vertex that touches served ones.
    Surrounding,
}

/// Evidence that the reduced graph contains `M1` or some `M1^ell`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Error)]
#[error("not M-free: vertex {vertex} already assigned to dual vertex {holder} when serving {dual_vertices:?}")]
pub struct NotMFree {
    pub site: StopSite,
    pub dual_vertices: Vec<usize>,
    pub vertex: usize,
    pub holder: usize,
}

/// Two vertices of its triangle for every degree-3 dual vertex, no graph
/// vertex used twice.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment {
    pub assigned: BTreeMap<usize, [usize; 2]>,
    pub level: BTreeMap<usize, u32>,
    /// Indexed by graph vertex.
    pub delta: Vec<Option<usize>>,
    /// Dual vertices served while pairing neighbored centers, in order.
    pub served_neighbored: Vec<usize>,
    /// Dual vertices reached from the neighbored pairs before any free choice.
    pub served_surrounding: Vec<usize>,
    /// Dual vertices served with a free choice, or reached from one.
    pub served_free: Vec<usize>,
}

impl Assignment {
    /// Invariants: each pair lies in its triangle, every center is served,
    /// and `delta` is exactly the inverse of `assigned`.
    pub fn check(&self, dual: &DualTree) -> bool {
        let centers: BTreeSet<usize> = s3_centers(dual).into_iter().map(|(f, _)| f).collect();
        if self.assigned.keys().copied().collect::<BTreeSet<_>>() != centers {
            return false;
        }
        let mut inverse = vec![None; self.delta.len()];
        for (&f, pair) in &self.assigned {
            if pair[0] == pair[1] || !pair.iter().all(|&x| dual.contains(f, x)) {
                return false;
            }
            for &x in pair {
                if x >= inverse.len() || inverse[x].is_some() {
                    return false;
                }
                inverse[x] = Some(f);
            }
        }
        inverse == self.delta
    }
}

fn sorted_pair(x: usize, y: usize) -> [usize; 2] {
    [x.min(y), x.max(y)]
}

/// Serves every degree-3 dual vertex with two vertices of its triangle, or
/// reports that `G` is not M-free. Choices are deterministic: dual vertices
/// in ascending index, the smallest vertex id where a free vertex is dropped.
pub fn compute_assignment(g: &Graph, dual: &DualTree) -> Result<Assignment, NotMFree> {
    let centers: Vec<usize> = s3_centers(dual).into_iter().map(|(f, _)| f).collect();
    let is_center = |f: usize| dual.degree(f) == 3;
    let mut asg = Assignment { delta: vec![None; g.n() + 1], ..Assignment::default() };

    let give = |asg: &mut Assignment, f: usize, pair: [usize; 2], level: u32| {
        for x in pair {
            asg.delta[x] = Some(f);
        }
        asg.assigned.insert(f, pair);
        asg.level.insert(f, level);
    };
    let taken = |asg: &Assignment, f: usize| dual.faces[f].iter().find_map(|&x| asg.delta[x].map(|h| (x, h)));

    for &v in &centers {
        if asg.assigned.contains_key(&v) {
            continue;
        }
        let Some(&w) = dual.adjacency[v].iter().find(|&&h| is_center(h)) else {
            continue;
        };
        if let Some((x, h)) = taken(&asg, v).or_else(|| taken(&asg, w)) {
            return Err(NotMFree { site: StopSite::Neighbored, dual_vertices: vec![v, w], vertex: x, holder: h });
        }
        let [a, b] = dual.shared(v, w);
        let c = dual.apex(v, [a, b]);
        let d = dual.apex(w, [a, b]);
        give(&mut asg, v, sorted_pair(a, c), 0);
        give(&mut asg, w, sorted_pair(b, d), 0);
        asg.served_neighbored.extend([v, w]);
    }

    loop {
        loop {
            let touching = centers.iter().copied().find(|&f| {
                !asg.assigned.contains_key(&f) && dual.faces[f].iter().any(|&x| asg.delta[x].is_some())
            });
            let Some(v) = touching else { break };
            let a = *dual.faces[v]
                .iter()
                .filter(|&&x| asg.delta[x].is_some())
                .min_by_key(|&&x| (asg.level[&asg.delta[x].unwrap()], x))
                .unwrap();
            if let Some(&x) = dual.faces[v].iter().find(|&&x| x != a && asg.delta[x].is_some()) {
                let h = asg.delta[x].unwrap();
                return Err(NotMFree { site: StopSite::Surrounding, dual_vertices: vec![v, h], vertex: x, holder: h });
            }
            let rest: Vec<usize> = dual.faces[v].iter().copied().filter(|&x| x != a).collect();
            let level = asg.level[&asg.delta[a].unwrap()] + 1;
            give(&mut asg, v, [rest[0], rest[1]], level);
            if asg.served_free.is_empty() {
                asg.served_surrounding.push(v);
            } else {
                asg.served_free.push(v);
            }
        }
        let Some(&v) = centers.iter().find(|f| !asg.assigned.contains_key(f)) else { break };
        let t = dual.faces[v];
        give(&mut asg, v, [t[1], t[2]], 0);
        asg.served_free.push(v);
    }
    Ok(asg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    Front,
    Back,
}

/// Free area next to the common end of two paths: both paths end at `pos`
/// on `line` with their last segment on `line`, and nothing lies on `line`
/// beyond `pos` in direction `forward`.
#[derive(Debug, Clone, Copy)]
struct Region {
    horizontal: bool,
    line: Line,
    pos: Line,
    forward: bool,
    ends: [(usize, End); 2],
}

struct B1Builder {
    cols: Axis,
    rows: Axis,
    paths: Vec<VecDeque<(Line, Line)>>,
    bends: Vec<usize>,
}

impl B1Builder {
    fn along(&mut self, r: &Region) -> &mut Axis {
        if r.horizontal {
            &mut self.cols
        } else {
            &mut self.rows
        }
    }

    fn across(&mut self, r: &Region) -> &mut Axis {
        if r.horizontal {
            &mut self.rows
        } else {
            &mut self.cols
        }
    }

    /// Fresh position just past `from` in the region's direction.
    fn step(&mut self, r: &Region, from: Line) -> Line {
        let fw = r.forward;
        let ax = self.along(r);
        if fw {
            ax.after(from)
        } else {
            ax.before(from)
        }
    }

    /// Fresh line parallel to the region's line, on side `up`.
    fn side(&mut self, r: &Region, up: bool) -> Line {
        let line = r.line;
        let ax = self.across(r);
        if up {
            ax.after(line)
        } else {
            ax.before(line)
        }
    }

    fn pt(r: &Region, along: Line, across: Line) -> (Line, Line) {
        if r.horizontal {
            (along, across)
        } else {
            (across, along)
        }
    }

    fn extend(&mut self, (v, end): (usize, End), p: (Line, Line)) {
        match end {
            End::Front => self.paths[v].push_front(p),
            End::Back => self.paths[v].push_back(p),
        }
    }

    fn draw(&mut self, v: usize, pts: &[(Line, Line)]) {
        debug_assert!(self.paths[v].is_empty());
        self.paths[v].extend(pts.iter().copied());
    }

    fn end_of(r: &Region, v: usize) -> (usize, End) {
        *r.ends.iter().find(|e| e.0 == v).expect("vertex owns an end in the region")
    }
}

/// 1-bend representation from a successful assignment. The dual tree is
/// walked from a leaf; every worklist item carries the free region where the
/// two paths of the shared edge end. Paths bend only inside the triangle
/// they are assigned to.
pub fn build_b1(g: &Graph, dual: &DualTree, asg: &Assignment) -> Result<EpgRepresentation, MaxOutError> {
    if !asg.check(dual) {
        return Err(MaxOutError::BadAssignment("invariants violated".into()));
    }
    let mut b = B1Builder { cols: Axis::new(), rows: Axis::new(), paths: vec![VecDeque::new(); g.n() + 1], bends: vec![0; g.n() + 1] };
    let row0 = b.rows.first();
    let x0 = b.cols.first();
    let x1 = b.cols.after(x0);
    if dual.len() == 1 {
        for v in dual.faces[0] {
            b.draw(v, &[(x0, row0), (x1, row0)]);
        }
        return Ok(finish_b1(&b));
    }
    let root = (0..dual.len()).find(|&f| dual.degree(f) == 1).expect("a tree has a leaf");
    let first = dual.adjacency[root][0];
    let [a, bb] = dual.shared(root, first);
    let c = dual.apex(root, [a, bb]);
    let x2 = b.cols.after(x1);
    b.draw(c, &[(x0, row0), (x1, row0)]);
    b.draw(a, &[(x0, row0), (x2, row0)]);
    b.draw(bb, &[(x0, row0), (x2, row0)]);
    let start = Region { horizontal: true, line: row0, pos: x2, forward: true, ends: [(a, End::Back), (bb, End::Back)] };
    let mut work = VecDeque::from([(first, root, start)]);

    while let Some((u, v, r)) = work.pop_front() {
        let e = dual.shared(u, v);
        let d = dual.apex(u, e);
        let others: Vec<usize> = dual.adjacency[u].iter().copied().filter(|&h| h != v).collect();
        match others[..] {
            [] => {
                let t1 = b.step(&r, r.pos);
                let p = B1Builder::pt(&r, t1, r.line);
                b.draw(d, &[B1Builder::pt(&r, r.pos, r.line), p]);
                b.extend(r.ends[0], p);
                b.extend(r.ends[1], p);
            }
            [w] => {
                let ap = if dual.contains(w, e[0]) { e[0] } else { e[1] };
                let bp = if ap == e[0] { e[1] } else { e[0] };
                let t1 = b.step(&r, r.pos);
                let t2 = b.step(&r, t1);
                let p2 = B1Builder::pt(&r, t2, r.line);
                b.extend(B1Builder::end_of(&r, bp), B1Builder::pt(&r, t1, r.line));
                let ea = B1Builder::end_of(&r, ap);
                b.extend(ea, p2);
                b.draw(d, &[B1Builder::pt(&r, r.pos, r.line), p2]);
                work.push_back((w, u, Region { pos: t2, ends: [ea, (d, End::Back)], ..r }));
            }
            [w1, w2] => {
                let pair = asg.assigned.get(&u).ok_or_else(|| MaxOutError::BadAssignment(format!("dual vertex {u} unassigned")))?;
                let ap = *pair.iter().find(|x| e.contains(x)).expect("pair meets every edge of its triangle");
                let bp = if ap == e[0] { e[1] } else { e[0] };
                let (w, w_) = if dual.contains(w1, ap) { (w1, w2) } else { (w2, w1) };
                let (ea, eb) = (B1Builder::end_of(&r, ap), B1Builder::end_of(&r, bp));
                let m = b.step(&r, r.pos);
                let corner = B1Builder::pt(&r, m, r.line);
                let turned = |pos: Line, forward: bool, ends| Region { horizontal: !r.horizontal, line: m, pos, forward, ends };
                if pair.contains(&bp) {
                    let up = b.side(&r, true);
                    let down = b.side(&r, false);
                    let (pu, pd) = (B1Builder::pt(&r, m, up), B1Builder::pt(&r, m, down));
                    b.extend(ea, corner);
                    b.extend(ea, pu);
                    b.extend(eb, corner);
                    b.extend(eb, pd);
                    b.draw(d, &[pd, pu]);
                    b.bends[ap] += 1;
                    b.bends[bp] += 1;
                    work.push_back((w, u, turned(up, true, [ea, (d, End::Back)])));
                    work.push_back((w_, u, turned(down, false, [eb, (d, End::Front)])));
                } else {
                    let t = b.step(&r, m);
                    let down = b.side(&r, false);
                    let pd = B1Builder::pt(&r, m, down);
                    let pt = B1Builder::pt(&r, t, r.line);
                    b.extend(ea, corner);
                    b.extend(ea, pd);
                    b.extend(eb, pt);
                    b.draw(d, &[pd, corner, pt]);
                    b.bends[ap] += 1;
                    b.bends[d] += 1;
                    work.push_back((w, u, turned(down, false, [ea, (d, End::Front)])));
                    work.push_back((w_, u, Region { pos: t, ends: [eb, (d, End::Back)], ..r }));
                }
            }
            _ => unreachable!("dual degree is at most 3"),
        }
    }
    debug_assert!(b.bends.iter().all(|&k| k <= 1));
    Ok(finish_b1(&b))
}

fn finish_b1(b: &B1Builder) -> EpgRepresentation {
    let cr = b.cols.ranks();
    let rr = b.rows.ranks();
    let mut rep = EpgRepresentation::new();
    for (v, pts) in b.paths.iter().enumerate().skip(1) {
        let pts = pts.iter().map(|&(c, r)| (Axis::rank_of(&cr, c), Axis::rank_of(&rr, r)));
        rep.insert(v, GridPath::new(pts).expect("construction yields simple paths"));
    }
    compact(&rep)
}

/// Why the bend number is not smaller.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MaxOutObstruction {
    /// A copy of the 3-sun; its central triangle.
    S3Present { center: [usize; 3] },
    NotMFree(NotMFree),
}

/// Bend number `b` and monotonic bend number `bm`, with a representation
/// attaining `b` and, for `b > 0`, the obstruction ruling out `b - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxOutClassification {
    pub b: u8,
    pub bm: u8,
    pub representation: EpgRepresentation,
    pub obstruction: Option<MaxOutObstruction>,
}

pub fn classify(g: &Graph) -> Result<MaxOutClassification, MaxOutError> {
    let emb = test_outerplanar(g)?;
    let dual = almost_dual(g, &emb)?;
    let centers = s3_centers(&dual);
    let Some(&(_, center)) = centers.first() else {
        return Ok(MaxOutClassification { b: 0, bm: 0, representation: build_b0(g, &dual)?, obstruction: None });
    };
    match compute_assignment(g, &dual) {
        Ok(asg) => Ok(MaxOutClassification {
            b: 1,
            bm: 2,
            representation: build_b1(g, &dual, &asg)?,
            obstruction: Some(MaxOutObstruction::S3Present { center }),
        }),
        Err(e) => Ok(MaxOutClassification {
            b: 2,
            bm: 2,
            representation: build_b2m(g).map_err(|_| MaxOutError::NotMaximalOuterplanar { n: g.n(), m: g.m() })?,
            obstruction: Some(MaxOutObstruction::NotMFree(e)),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_triangulations, gen_named, gen_random, is_induced_embedding, Named, RandomFamily};
    use crate::grid::verify;

    const NINE: &[(usize, usize)] = &[
        (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (3, 6), (5, 6),
        (5, 7), (6, 7), (5, 8), (7, 8), (5, 9), (8, 9),
    ];

    fn dual_of(g: &Graph) -> DualTree {
        almost_dual(g, &test_outerplanar(g).unwrap()).unwrap()
    }

    fn s3() -> Graph {
        gen_named(Named::NSun(3)).unwrap()
    }

    #[test]
    fn nine_vertex_dual_and_intervals() {
        let g = Graph::from_edges(9, NINE.iter().copied()).unwrap();
        let dual = dual_of(&g);
        assert_eq!(
            dual.faces,
            vec![[1, 2, 3], [2, 3, 4], [3, 4, 5], [3, 5, 6], [5, 6, 7], [5, 7, 8], [5, 8, 9]]
        );
        assert!(s3_centers(&dual).is_empty());
        let rep = build_b0(&g, &dual).unwrap();
        let spans: Vec<(i64, i64)> = rep.paths.values().map(|p| (p.corners()[0].0, p.corners()[1].0)).collect();
        assert_eq!(spans, vec![(1, 2), (1, 3), (1, 5), (2, 4), (3, 8), (4, 6), (5, 7), (6, 8), (7, 8)]);
        assert!(verify(&g, &rep, Some(0), true).pass);
    }

    #[test]
    fn s3_assignment_and_b1() {
        let g = s3();
        let dual = dual_of(&g);
        assert_eq!(s3_centers(&dual), vec![(0, [1, 2, 3])]);
        assert!(matches!(build_b0(&g, &dual), Err(MaxOutError::DualNotPath(0))));
        let asg = compute_assignment(&g, &dual).unwrap();
        assert_eq!(asg.assigned[&0], [2, 3]);
        let rep = build_b1(&g, &dual, &asg).unwrap();
        assert!(verify(&g, &rep, Some(1), false).pass);
        let c = classify(&g).unwrap();
        assert_eq!((c.b, c.bm), (1, 2));
    }

    #[test]
    fn m1_reduced_instance() {
        // M1 with an ear on each outer edge: all three faces become central.
        let g = Graph::from_edges(
            10,
            [(1, 2), (1, 3), (2, 3), (3, 4), (4, 2), (4, 5), (5, 2), (1, 6), (3, 6), (3, 7), (4, 7), (4, 8), (5, 8), (5, 9), (2, 9), (1, 10), (2, 10)],
        )
        .unwrap();
        let dual = dual_of(&g);
        assert_eq!(reduced_graph(&g, &dual).triangles, vec![[1, 2, 3], [2, 3, 4], [2, 4, 5]]);
        let err = compute_assignment(&g, &dual).unwrap_err();
        assert_eq!(err.site, StopSite::Neighbored);
        let c = classify(&g).unwrap();
        assert_eq!((c.b, c.bm), (2, 2));
        assert!(verify(&g, &c.representation, Some(2), true).pass);
    }

    #[test]
    fn non_maximal_rejected() {
        let c4 = gen_named(Named::Cycle(4)).unwrap();
        let emb = test_outerplanar(&c4).unwrap();
        assert!(matches!(almost_dual(&c4, &emb), Err(MaxOutError::NotMaximalOuterplanar { .. })));
    }

    #[test]
    fn k3_is_a_single_face() {
        let g = gen_named(Named::Cycle(3)).unwrap();
        let dual = dual_of(&g);
        assert_eq!(dual.faces, vec![[1, 2, 3]]);
        let rep = build_b0(&g, &dual).unwrap();
        assert!(rep.paths.values().all(|p| p.corners() == [(1, 1), (2, 1)]));
    }

    #[test]
    fn exhaustive_small_triangulations() {
        for n in 3..=10 {
            for g in all_triangulations(n) {
                let c = classify(&g).unwrap();
                let rep = verify(&g, &c.representation, Some(c.b as usize), c.b == 0);
                assert!(rep.pass, "n={n} b={} {:?} {:?}", c.b, g, rep);
                if let Ok(asg) = compute_assignment(&g, &dual_of(&g)) {
                    assert!(asg.check(&dual_of(&g)));
                }
            }
        }
    }

    /// Central triangles of induced 3-sun copies, by brute force over the
    /// three apex choices.
    fn s3_triangles_brute(g: &Graph) -> Vec<[usize; 3]> {
        let s3 = gen_named(Named::NSun(3)).unwrap();
        let common = |u: usize, v: usize| g.neighbors(u).iter().copied().filter(|&w| g.has_edge(v, w)).collect::<Vec<_>>();
        let mut out = Vec::new();
        for (a, b) in g.edges() {
            for c in common(a, b).into_iter().filter(|&c| c > b) {
                let found = common(a, b).iter().any(|&x| {
                    common(b, c).iter().any(|&y| common(c, a).iter().any(|&z| is_induced_embedding(g, &s3, &[a, b, c, x, y, z])))
                });
                if found {
                    out.push([a, b, c]);
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn centers_and_served_sets() {
        let mut graphs: Vec<Graph> = (3..=10).flat_map(all_triangulations).collect();
        graphs.extend((0..100).map(|s| gen_random(RandomFamily::MaximalOuterplanar, 11 + s as usize % 2, s).unwrap()));
        for g in graphs {
            let dual = dual_of(&g);
            let centers = s3_centers(&dual);
            let mut tris: Vec<[usize; 3]> = centers.iter().map(|&(_, t)| t).collect();
            tris.sort();
            assert_eq!(tris, s3_triangles_brute(&g));
            let Ok(asg) = compute_assignment(&g, &dual) else { continue };
            let shared = |s: &[usize; 3], t: &[usize; 3]| s.iter().filter(|v| t.contains(v)).count();
            let neighbored: BTreeSet<usize> = centers
                .iter()
                .filter(|(f, t)| centers.iter().any(|(h, u)| f != h && shared(t, u) == 2))
                .map(|&(f, _)| f)
                .collect();
            let mut reach = neighbored.clone();
            loop {
                let more: Vec<usize> = centers
                    .iter()
                    .filter(|(f, t)| !reach.contains(f) && centers.iter().any(|(h, u)| reach.contains(h) && shared(t, u) == 1))
                    .map(|&(f, _)| f)
                    .collect();
                if more.is_empty() {
                    break;
                }
                reach.extend(more);
            }
            let served_n: BTreeSet<usize> = asg.served_neighbored.iter().copied().collect();
            let served_s: BTreeSet<usize> = asg.served_surrounding.iter().copied().collect();
            assert_eq!(served_n, neighbored);
            assert_eq!(served_s, reach.difference(&neighbored).copied().collect());
        }
    }

    #[test]
    fn random_triangulations_b1() {
        let mut ones = 0;
        for seed in 0..300 {
            let g = gen_random(RandomFamily::MaximalOuterplanar, 12 + (seed as usize % 40), seed).unwrap();
            let dual = dual_of(&g);
            if let Ok(asg) = compute_assignment(&g, &dual) {
                let rep = build_b1(&g, &dual, &asg).unwrap();
                assert!(verify(&g, &rep, Some(1), false).pass, "seed {seed}");
                ones += 1;
            }
        }
        assert!(ones > 0);
    }
}
