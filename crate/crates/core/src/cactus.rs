//! Cacti: block decomposition, the forbidden patterns for interval
//! representations, a 0-bend construction for graphs avoiding them, and a
//! monotonic 1-bend construction for every cactus.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::coords::{Axis, Line};
use crate::embedding::biconnected_blocks;
use crate::graph::{Graph, ObstructionKind, Witness};
use crate::grid::{compact, EpgRepresentation, GridPath};

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NotCactus {
    #[error("graph is disconnected: {u} and {v} lie in different components")]
    Disconnected { u: usize, v: usize },
    #[error("cycles {first:?} and {second:?} share two or more vertices")]
    SharedCycles { first: Vec<usize>, second: Vec<usize> },
    #[error("graph has no vertices")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CactusError {
    #[error(transparent)]
    NotCactus(#[from] NotCactus),
    #[error("not MC-free: contains {:?}", .0.kind)]
    NotMcFree(Witness),
}

/// Cycles (in cyclic order) and bridges of a connected cactus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusDecomposition {
    pub cycles: Vec<Vec<usize>>,
    pub bridges: Vec<(usize, usize)>,
    /// Indices into `cycles` of the cycles through each vertex.
    pub vertex_cycles: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

pub fn decompose_cactus(g: &Graph) -> Result<CactusDecomposition, NotCactus> {
    if g.n() == 0 {
        return Err(NotCactus::Empty);
    }
    let comps = g.components();
    if comps.len() > 1 {
        return Err(NotCactus::Disconnected { u: comps[0][0], v: comps[1][0] });
    }
    let mut cycles = Vec::new();
    let mut bridges = Vec::new();
    let mut count = vec![0usize; g.n() + 1];
    for (verts, edges) in biconnected_blocks(g) {
        for &v in &verts {
            count[v] += 1;
        }
        match verts.len() {
            1 => {}
            2 => bridges.push((verts[0], verts[1])),
            k if edges.len() == k => cycles.push(walk_cycle(&verts, &edges)),
            _ => return Err(two_cycles(g, &verts)),
        }
    }
    cycles.sort();
    bridges.sort_unstable();
    let mut vertex_cycles = vec![Vec::new(); g.n() + 1];
    for (i, c) in cycles.iter().enumerate() {
        for &v in c {
            vertex_cycles[v].push(i);
        }
    }
    let cut_vertices = g.vertices().filter(|&v| count[v] > 1).collect();
    Ok(CactusDecomposition { cycles, bridges, vertex_cycles, cut_vertices })
}

/// Cyclic order of a block that is a cycle, starting at its smallest vertex
/// and continuing toward the smaller neighbor.
fn walk_cycle(verts: &[usize], edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::with_capacity(verts.len());
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let start = verts[0];
    let mut out = vec![start];
    let mut prev = start;
    let mut cur = *adj[&start].iter().min().unwrap();
    while cur != start {
        out.push(cur);
        let nx = *adj[&cur].iter().find(|&&w| w != prev).unwrap();
        prev = cur;
        cur = nx;
    }
    out
}

/// A block with more edges than vertices: a cycle plus an ear, closed into a
/// second cycle through one arc.
fn two_cycles(g: &Graph, verts: &[usize]) -> NotCactus {
    let inside = |w: usize| verts.binary_search(&w).is_ok();
    let n = g.n();
    // BFS tree of the block, then the fundamental cycle of one non-tree edge.
    let root = verts[0];
    let mut parent = vec![0usize; n + 1];
    let mut depth = vec![usize::MAX; n + 1];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut extra = None;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !inside(w) {
                continue;
            }
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            } else if w != parent[v] && extra.is_none() && v < w {
                extra = Some((v, w));
            }
        }
    }
    let (mut a, mut b) = extra.expect("block with a cycle");
    let (mut left, mut right) = (vec![a], vec![b]);
    while a != b {
        if depth[a] >= depth[b] {
            a = parent[a];
            left.push(a);
        } else {
            b = parent[b];
            right.push(b);
        }
    }
    right.pop();
    right.reverse();
    left.extend(right);
    let cycle = left;
    let on_cycle = |w: usize| cycle.contains(&w);
    let idx = |w: usize| cycle.iter().position(|&x| x == w).unwrap();
    // An edge leaving the cycle (or a chord), then a path back to the cycle
    // that avoids its start.
    for (i, &c1) in cycle.iter().enumerate() {
        let prev = cycle[(i + cycle.len() - 1) % cycle.len()];
        let next = cycle[(i + 1) % cycle.len()];
        for &x in g.neighbors(c1) {
            if !inside(x) || x == prev || x == next {
                continue;
            }
            let ear = if on_cycle(x) {
                vec![c1, x]
            } else {
                let mut from = vec![0usize; n + 1];
                let mut seen = vec![false; n + 1];
                seen[c1] = true;
                seen[x] = true;
                let mut q = VecDeque::from([x]);
                let mut hit = None;
                while let Some(v) = q.pop_front() {
                    if on_cycle(v) {
                        hit = Some(v);
                        break;
                    }
                    for &w in g.neighbors(v) {
                        if inside(w) && !seen[w] {
                            seen[w] = true;
                            from[w] = v;
                            q.push_back(w);
                        }
                    }
                }
                let Some(mut c2) = hit else { continue };
                let mut back = vec![c2];
                while c2 != x {
                    c2 = from[c2];
                    back.push(c2);
                }
                back.push(c1);
                back.reverse();
                back
            };
            let (i1, i2) = (idx(ear[0]), idx(*ear.last().unwrap()));
            let mut second = ear.clone();
            let k = cycle.len();
            let mut j = (i2 + 1) % k;
            while j != i1 {
                second.push(cycle[j]);
                j = (j + 1) % k;
            }
            return NotCactus::SharedCycles { first: cycle.clone(), second };
        }
    }
    unreachable!("a block with a chord or ear")
}

/// No cycle of length at least 4, no induced `M3`, no induced `M2`; the first
/// obstruction found is returned.
pub fn is_mc_free(g: &Graph, dec: &CactusDecomposition) -> Result<(), Witness> {
    if let Some(c) = dec.cycles.iter().find(|c| c.len() >= 4) {
        return Err(Witness { kind: ObstructionKind::CycleGe4, vertex_map: c.clone(), ell: None });
    }
    // Two vertices of a triangle never share an outside neighbor in a
    // cactus, so one outside neighbor per corner gives an induced M3.
    for c in &dec.cycles {
        let outside = |v: usize| g.neighbors(v).iter().copied().find(|w| !c.contains(w));
        if let [Some(d), Some(e), Some(f)] = [outside(c[0]), outside(c[1]), outside(c[2])] {
            return Err(Witness { kind: ObstructionKind::M3, vertex_map: vec![c[0], c[1], c[2], d, e, f], ell: None });
        }
    }
    for a in g.vertices() {
        let mut legs: Vec<(usize, usize)> = Vec::new();
        for &x in g.neighbors(a) {
            if legs.iter().any(|&(y, _)| g.has_edge(x, y)) {
                continue;
            }
            let far = g.neighbors(x).iter().copied().find(|&w| w != a && !g.has_edge(w, a));
            if let Some(w) = far {
                legs.push((x, w));
            }
            if legs.len() == 3 {
                let [(b, e), (c, f), (d, h)] = [legs[0], legs[1], legs[2]];
                return Err(Witness { kind: ObstructionKind::M2, vertex_map: vec![a, b, c, d, e, f, h], ell: None });
            }
        }
    }
    Ok(())
}

/// Interval representation on row 0. One degree-2 vertex of every triangle
/// is set aside, the remaining tree is a caterpillar whose spine is laid out
/// as a chain of overlapping intervals; leaves get a private unit of their
/// neighbor's interval, and each set-aside vertex the unit shared by its two
/// neighbors.
pub fn build_b0_cactus(g: &Graph, dec: &CactusDecomposition) -> Result<EpgRepresentation, CactusError> {
    is_mc_free(g, dec).map_err(CactusError::NotMcFree)?;
    let n = g.n();
    let mut removed = vec![false; n + 1];
    let mut stripped = Vec::new();
    for c in &dec.cycles {
        let v = *c.iter().filter(|&&v| g.degree(v) == 2).min().expect("MC-free triangles have a degree-2 vertex");
        removed[v] = true;
        let others: Vec<usize> = c.iter().copied().filter(|&w| w != v).collect();
        stripped.push((v, others[0], others[1]));
    }
    let deg = |v: usize| g.neighbors(v).iter().filter(|&&w| !removed[w]).count();
    let kept: Vec<usize> = g.vertices().filter(|&v| !removed[v]).collect();
    let mut leaf = vec![false; n + 1];
    for &v in &kept {
        leaf[v] = deg(v) == 1;
    }
    let mut spine_set: Vec<usize> = kept.iter().copied().filter(|&v| !leaf[v]).collect();
    if spine_set.is_empty() {
        spine_set.push(kept[0]);
        leaf[kept[0]] = false;
    }
    let on_spine = |v: usize| !removed[v] && !leaf[v];
    let spine_deg = |v: usize| g.neighbors(v).iter().filter(|&&w| on_spine(w)).count();
    let start = *spine_set.iter().find(|&&v| spine_deg(v) <= 1).expect("spine is a path");
    let mut spine = vec![start];
    let mut prev = 0;
    let mut cur = start;
    while let Some(&nx) = g.neighbors(cur).iter().find(|&&w| on_spine(w) && w != prev) {
        spine.push(nx);
        prev = cur;
        cur = nx;
    }
    assert_eq!(spine.len(), spine_set.len(), "MC-free cactus has a caterpillar core");

    let mut span = vec![(0i64, 0i64); n + 1];
    let mut unit: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut x = 0i64;
    for (i, &w) in spine.iter().enumerate() {
        let s = if i == 0 { x } else { x - 1 };
        for &l in g.neighbors(w).iter().filter(|&&l| !removed[l] && leaf[l]) {
            span[l] = (x, x + 1);
            unit.insert(key(w, l), x);
            x += 1;
        }
        if let Some(&nx) = spine.get(i + 1) {
            unit.insert(key(w, nx), x);
        }
        x += 1;
        span[w] = (s, x.max(s + 1));
    }
    for &(v, a, b) in &stripped {
        let u = unit[&key(a, b)];
        span[v] = (u, u + 1);
    }
    let mut rep = EpgRepresentation::new();
    for v in g.vertices() {
        rep.insert(v, GridPath::from_corners(vec![(span[v].0, 0), (span[v].1, 0)]));
    }
    Ok(compact(&rep))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    Gray,
    Green,
    Red,
}

/// Part of a path where nothing else has a grid edge: the path runs along
/// `line` from `lo` up to the next line that existed when the region was
/// made, and new paths grow from it on the side of increasing perpendicular
/// coordinate (or, for 4-cycles, both sides). Fresh lines are inserted
/// right after a cursor starting at `lo`, so they stay inside.
#[derive(Debug, Clone, Copy)]
struct Region {
    horizontal: bool,
    line: Line,
    lo: Line,
}

struct Explorer<'a> {
    g: &'a Graph,
    dec: &'a CactusDecomposition,
    cols: Axis,
    rows: Axis,
    color: Vec<Color>,
    region: Vec<Option<Region>>,
    paths: Vec<Vec<(Line, Line)>>,
}

/// Cursor over fresh positions inside a region, in increasing order.
struct Slots {
    region: Region,
    cursor: Line,
}

impl Explorer<'_> {
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

    fn next(&mut self, s: &mut Slots) -> Line {
        let r = s.region;
        let l = self.along(&r).after(s.cursor);
        s.cursor = l;
        l
    }

    fn above(&mut self, r: &Region, base: Line) -> Line {
        self.across(r).after(base)
    }

    fn below(&mut self, r: &Region, base: Line) -> Line {
        self.across(r).before(base)
    }

    fn draw(&mut self, r: &Region, u: usize, pts: &[(Line, Line)], own: Region) {
        debug_assert_eq!(self.color[u], Color::Gray);
        self.paths[u] = pts.iter().map(|&(a, b)| if r.horizontal { (a, b) } else { (b, a) }).collect();
        self.region[u] = Some(own);
        self.color[u] = Color::Green;
    }

    fn explore(&mut self, v: usize) {
        let r = self.region[v].expect("green vertices own a region");
        let turned = |line: Line, lo: Line| Region { horizontal: !r.horizontal, line, lo };
        let same = |line: Line, lo: Line| Region { horizontal: r.horizontal, line, lo };
        let l = r.line;
        let mut s = Slots { region: r, cursor: r.lo };

        let mut cycles = Vec::new();
        let mut in_cycle = vec![false; self.g.n() + 1];
        for &ci in &self.dec.vertex_cycles[v] {
            let c = &self.dec.cycles[ci];
            let gray = c.iter().filter(|&&w| w != v && self.color[w] == Color::Gray).count();
            assert!(gray == 0 || gray == c.len() - 1, "cycle through {v} is partly explored");
            if gray > 0 {
                for &w in c {
                    in_cycle[w] = true;
                }
                cycles.push(cycle_from(c, v));
            }
        }
        let c0: Vec<usize> = self.g.neighbors(v).iter().copied().filter(|&u| self.color[u] == Color::Gray && !in_cycle[u]).collect();

        for u in c0 {
            let (c1, c2) = (self.next(&mut s), self.next(&mut s));
            let t = self.above(&r, l);
            self.draw(&r, u, &[(c1, l), (c2, l), (c2, t)], turned(c2, l));
        }
        for us in cycles {
            match us[..] {
                [u1, u2] => {
                    let c: Vec<Line> = (0..4).map(|_| self.next(&mut s)).collect();
                    let (t1, t2) = (self.above(&r, l), self.above(&r, l));
                    self.draw(&r, u1, &[(c[0], l), (c[2], l), (c[2], t1)], turned(c[2], l));
                    self.draw(&r, u2, &[(c[1], l), (c[3], l), (c[3], t2)], turned(c[3], l));
                }
                [u1, u2, u3] => {
                    let (ca, x, e2, z) = (self.next(&mut s), self.next(&mut s), self.next(&mut s), self.next(&mut s));
                    let b2 = self.below(&r, l);
                    let b3 = self.below(&r, b2);
                    let rr = self.above(&r, l);
                    let top = self.above(&r, rr);
                    self.draw(&r, u1, &[(ca, l), (x, l), (x, top)], turned(x, rr));
                    self.draw(&r, u2, &[(x, b2), (x, rr), (e2, rr)], same(rr, x));
                    self.draw(&r, u3, &[(x, b3), (x, l), (z, l)], turned(x, b3));
                }
                _ => {
                    let k = us.len();
                    let ca = self.next(&mut s);
                    let x1 = self.next(&mut s);
                    // p[j], q[j]: where u_j starts and ends on the shared row.
                    let mut p = vec![x1; k + 1];
                    let mut q = vec![x1; k + 1];
                    for j in 3..=k - 1 {
                        p[j] = self.next(&mut s);
                        q[j - 1] = self.next(&mut s);
                    }
                    let s_last = self.next(&mut s);
                    let xe = self.next(&mut s);
                    q[k - 1] = xe;
                    let s2 = self.above(&r, l);
                    let rr = self.above(&r, s2);
                    let te = self.above(&r, rr);
                    let top = self.above(&r, te);
                    let u = |j: usize| us[j - 1];
                    self.draw(&r, u(1), &[(ca, l), (x1, l), (x1, top)], turned(x1, rr));
                    self.draw(&r, u(2), &[(x1, s2), (x1, rr), (q[2], rr)], same(rr, x1));
                    for j in 3..=k - 2 {
                        self.draw(&r, u(j), &[(p[j], rr), (q[j], rr)], same(rr, q[j - 1]));
                    }
                    self.draw(&r, u(k - 1), &[(p[k - 1], rr), (xe, rr), (xe, te)], same(rr, q[k - 2]));
                    self.draw(&r, u(k), &[(s_last, l), (xe, l), (xe, top)], turned(xe, te));
                }
            }
        }
        self.color[v] = Color::Red;
    }
}

/// The other vertices of a cycle through `v`, walking from `v` toward its
/// smaller neighbor on the cycle.
fn cycle_from(c: &[usize], v: usize) -> Vec<usize> {
    let k = c.len();
    let i = c.iter().position(|&w| w == v).unwrap();
    let fwd: Vec<usize> = (1..k).map(|d| c[(i + d) % k]).collect();
    if fwd[0] < fwd[k - 2] {
        fwd
    } else {
        fwd.into_iter().rev().collect()
    }
}

/// Monotonic 1-bend representation of any cactus. Vertices are explored in
/// increasing id among the constructed ones, starting from vertex 1; each
/// new path grows out of the free part of the explored vertex's path.
pub fn build_b1m_cactus(g: &Graph, dec: &CactusDecomposition) -> Result<EpgRepresentation, CactusError> {
    if !g.is_connected() || g.n() == 0 {
        return Err(decompose_cactus(g).err().unwrap_or(NotCactus::Empty).into());
    }
    let n = g.n();
    let mut ex = Explorer {
        g,
        dec,
        cols: Axis::new(),
        rows: Axis::new(),
        color: vec![Color::Gray; n + 1],
        region: vec![None; n + 1],
        paths: vec![Vec::new(); n + 1],
    };
    let row = ex.rows.first();
    let x0 = ex.cols.first();
    let x1 = ex.cols.after(x0);
    let whole = Region { horizontal: true, line: row, lo: x0 };
    ex.draw(&whole, 1, &[(x0, row), (x1, row)], whole);
    while let Some(v) = (1..=n).find(|&v| ex.color[v] == Color::Green) {
        ex.explore(v);
    }
    debug_assert!(ex.color[1..].iter().all(|&c| c == Color::Red));
    let cr = ex.cols.ranks();
    let rr = ex.rows.ranks();
    let mut rep = EpgRepresentation::new();
    for v in 1..=n {
        let pts = ex.paths[v].iter().map(|&(c, r)| (Axis::rank_of(&cr, c), Axis::rank_of(&rr, r)));
        rep.insert(v, GridPath::new(pts).expect("construction yields simple paths"));
    }
    Ok(compact(&rep))
}

/// Bend number and monotonic bend number (always equal for cacti), with the
/// representation attaining them and, when both are 1, the obstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusClassification {
    pub b: u8,
    pub bm: u8,
    pub representation: EpgRepresentation,
    pub obstruction: Option<Witness>,
}

pub fn classify_cactus(g: &Graph) -> Result<CactusClassification, CactusError> {
    let dec = decompose_cactus(g)?;
    match is_mc_free(g, &dec) {
        Ok(()) => Ok(CactusClassification { b: 0, bm: 0, representation: build_b0_cactus(g, &dec)?, obstruction: None }),
        Err(w) => Ok(CactusClassification { b: 1, bm: 1, representation: build_b1m_cactus(g, &dec)?, obstruction: Some(w) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_induced, gen_named, gen_random, Named, RandomFamily};
    use crate::grid::verify;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let k3 = gen_named(Named::Cycle(3)).unwrap();
        let d = decompose_cactus(&k3).unwrap();
        assert_eq!((d.cycles.len(), d.bridges.len()), (1, 0));
        let k4 = g(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        let Err(NotCactus::SharedCycles { first, second }) = decompose_cactus(&k4) else { panic!() };
        let common = first.iter().filter(|v| second.contains(v)).count();
        assert!(common >= 2);
        let bowtie = g(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]);
        let d = decompose_cactus(&bowtie).unwrap();
        assert_eq!(d.cycles, vec![vec![1, 2, 3], vec![3, 4, 5]]);
        assert_eq!(d.cut_vertices, vec![3]);
        assert!(matches!(decompose_cactus(&Graph::empty(2)), Err(NotCactus::Disconnected { .. })));
    }

    #[test]
    fn mc_free_examples() {
        let c5 = gen_named(Named::Cycle(5)).unwrap();
        let w = is_mc_free(&c5, &decompose_cactus(&c5).unwrap()).unwrap_err();
        assert_eq!(w.kind, ObstructionKind::CycleGe4);
        assert!(w.verify(&c5));
        for (named, kind) in [(Named::M2, ObstructionKind::M2), (Named::M3, ObstructionKind::M3)] {
            let h = gen_named(named).unwrap();
            let w = is_mc_free(&h, &decompose_cactus(&h).unwrap()).unwrap_err();
            assert_eq!(w.kind, kind);
            assert!(w.verify(&h));
        }
        let caterpillar = g(7, &[(1, 2), (2, 3), (3, 4), (2, 5), (3, 6), (3, 7)]);
        assert!(is_mc_free(&caterpillar, &decompose_cactus(&caterpillar).unwrap()).is_ok());
    }

    #[test]
    fn b0_small() {
        for h in [
            gen_named(Named::Path(4)).unwrap(),
            g(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]),
            g(1, &[]),
            gen_named(Named::Cycle(3)).unwrap(),
            g(8, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6), (6, 7), (2, 8)]),
        ] {
            let rep = build_b0_cactus(&h, &decompose_cactus(&h).unwrap()).unwrap();
            assert!(verify(&h, &rep, Some(0), true).pass, "{h:?}");
        }
        let m3 = gen_named(Named::M3).unwrap();
        assert!(matches!(build_b0_cactus(&m3, &decompose_cactus(&m3).unwrap()), Err(CactusError::NotMcFree(_))));
    }

    #[test]
    fn b1m_small() {
        let c4 = gen_named(Named::Cycle(4)).unwrap();
        let rep = build_b1m_cactus(&c4, &decompose_cactus(&c4).unwrap()).unwrap();
        assert!(verify(&c4, &rep, Some(1), true).pass);
        assert_eq!(rep.max_bends(), 1);
        for k in 3..=9 {
            let c = gen_named(Named::Cycle(k)).unwrap();
            assert!(verify(&c, &build_b1m_cactus(&c, &decompose_cactus(&c).unwrap()).unwrap(), Some(1), true).pass);
        }
    }

    #[test]
    fn random_cacti() {
        for seed in 0..400 {
            let h = gen_random(RandomFamily::Cactus, 1 + seed as usize % 30, seed).unwrap();
            let dec = decompose_cactus(&h).unwrap();
            let rep = build_b1m_cactus(&h, &dec).unwrap();
            let report = verify(&h, &rep, Some(1), true);
            assert!(report.pass, "seed {seed}: {report:?}");
            let c = classify_cactus(&h).unwrap();
            assert!(verify(&h, &c.representation, Some(c.b as usize), true).pass, "seed {seed}");
            if h.n() <= 14 {
                let slow = find_induced(&h, &gen_named(Named::M2).unwrap()).is_some()
                    || find_induced(&h, &gen_named(Named::M3).unwrap()).is_some()
                    || (4..=h.n()).any(|r| find_induced(&h, &gen_named(Named::Cycle(r)).unwrap()).is_some());
                assert_eq!(slow, c.b == 1, "seed {seed}");
            }
        }
    }
}
