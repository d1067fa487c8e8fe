//! Ground-truth engines used to check the constructive side: interval
//! recognition, an exhaustive bounded grid search, a direct M-freeness test
//! and exact bend numbers for small graphs.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::grid::{compact, verify, EpgRepresentation, GridPath, Point, Segment};
use crate::maxouter::{almost_dual, reduced_graph, MaxOutError};

pub const DEFAULT_INTERVAL_LIMIT: usize = 10;
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, the exact interval test is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    NotMaximalOuterplanar(#[from] MaxOutError),
}

pub fn is_interval(g: &Graph) -> Result<bool, OracleError> {
    is_interval_with_limit(g, DEFAULT_INTERVAL_LIMIT)
}

/// Searches for a vertex order in which every vertex is adjacent to all
/// vertices placed after it and before any later neighbor. A placed vertex
/// stays open while it is adjacent to everything after it; a new vertex may
/// only have open neighbors. The search runs over (placed, open) pairs.
pub fn is_interval_with_limit(g: &Graph, limit: usize) -> Result<bool, OracleError> {
    let n = g.n();
    if n > limit || n > 63 {
        return Err(OracleError::TooLarge { n, limit });
    }
    let nbr: Vec<u64> = (0..n).map(|i| g.neighbors(i + 1).iter().fold(0, |m, &w| m | 1 << (w - 1))).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut dead = HashSet::new();
    fn go(placed: u64, open: u64, full: u64, nbr: &[u64], dead: &mut HashSet<(u64, u64)>) -> bool {
        if placed == full {
            return true;
        }
        if dead.contains(&(placed, open)) {
            return false;
        }
        let closed = placed & !open;
        for w in 0..nbr.len() {
            if placed >> w & 1 == 1 || nbr[w] & closed != 0 {
                continue;
            }
            if go(placed | 1 << w, (open & nbr[w]) | 1 << w, full, nbr, dead) {
                return true;
            }
        }
        dead.insert((placed, open));
        false
    }
    Ok(go(0, 0, full, &nbr, &mut dead))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchStatus {
    Found,
    NoneWithinBound,
    BudgetExceeded,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    #[serde(skip)]
    pub rep: Option<EpgRepresentation>,
    pub k: usize,
    pub monotonic: bool,
    pub bound: usize,
    pub nodes_expanded: u64,
}

/// A representation with at most `k` bends per path uses at most
/// `n * (k + 2)` distinct coordinates per axis once compacted.
pub fn default_bound(n: usize, k: usize) -> usize {
    2 * n * (k + 1)
}

/// Exhaustive search for a representation with at most `k` bends per path
/// whose compacted form fits in `[0, bound]` on both axes.
///
/// States are order types: after every placement all coordinates are
/// replaced by their ranks, and a state is skipped when an isometric copy
/// has been seen. A new path must share an edge with a placed neighbor, so
/// one of its segments (the anchor) overlaps a segment of that neighbor;
/// the rest of the path grows from both ends of the anchor. Ranks are
/// spread by `k + 3` before placing, which leaves room for every relative
/// position the new corners can take.
pub fn bounded_grid_search(g: &Graph, k: usize, monotonic: bool, bound: usize, budget: u64) -> SearchOutcome {
    let mut nodes = 0u64;
    let mut rep = EpgRepresentation::new();
    let mut offset = 0i64;
    let mut status = SearchStatus::Found;
    for comp in g.components() {
        let mut s = Search::new(g, &comp, k, monotonic, bound, budget.saturating_sub(nodes));
        let found = s.run();
        nodes += s.nodes;
        match found {
            Ok(Some(paths)) => {
                let mut width = 0;
                for (i, p) in paths.iter().enumerate() {
                    width = width.max(p.corners().iter().map(|c| c.0).max().unwrap());
                    rep.insert(s.order[i], p.translated(offset, 0));
                }
                offset += width + 1;
            }
            Ok(None) => {
                status = SearchStatus::NoneWithinBound;
                break;
            }
            Err(Exhausted) => {
                status = SearchStatus::BudgetExceeded;
                break;
            }
        }
    }
    let rep = if status == SearchStatus::Found {
        let rep = compact(&rep);
        debug_assert!(verify(g, &rep, Some(k), monotonic).pass);
        Some(rep)
    } else {
        None
    };
    SearchOutcome { status, rep, k, monotonic, bound, nodes_expanded: nodes }
}

struct Exhausted;

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    k: usize,
    monotonic: bool,
    bound: i64,
    budget: u64,
    nodes: u64,
    seen: HashSet<Vec<Vec<Point>>>,
}

const SEEN_CAP: usize = 4_000_000;

impl<'a> Search<'a> {
    fn new(g: &'a Graph, comp: &[usize], k: usize, monotonic: bool, bound: usize, budget: u64) -> Self {
        let mut order: Vec<usize> = Vec::with_capacity(comp.len());
        let mut rest: Vec<usize> = comp.to_vec();
        while !rest.is_empty() {
            let key = |v: usize| {
                let placed = g.neighbors(v).iter().filter(|w| order.contains(w)).count();
                (placed, g.degree(v), std::cmp::Reverse(v))
            };
            let i = (0..rest.len()).max_by_key(|&i| key(rest[i])).unwrap();
            order.push(rest.remove(i));
        }
        Search { g, order, k, monotonic, bound: bound as i64, budget, nodes: 0, seen: HashSet::new() }
    }

    /// Deepens the extent limit geometrically up to the bound, so
    /// small representations are found without touching wide order types.
    fn run(&mut self) -> Result<Option<Vec<GridPath>>, Exhausted> {
        let full = self.bound;
        let mut b = full.min(1);
        loop {
            self.bound = b;
            self.seen.clear();
            if let Some(found) = self.extend(&[])? {
                return Ok(Some(found));
            }
            if b == full {
                return Ok(None);
            }
            b = (b * 3 / 2).max(b + 1).min(full);
        }
    }

    fn extend(&mut self, state: &[GridPath]) -> Result<Option<Vec<GridPath>>, Exhausted> {
        if state.len() == self.order.len() {
            return Ok(Some(state.to_vec()));
        }
        let s = self.k as i64 + 3;
        let scaled: Vec<GridPath> = state.iter().map(|p| p.mapped(|(x, y)| (x * s, y * s))).collect();
        let w = self.order[state.len()];
        let adjacent: Vec<bool> = self.order[..state.len()].iter().map(|&u| self.g.has_edge(u, w)).collect();
        let mut cands = Vec::new();
        let grow = Generator::new(&scaled, &adjacent, self.k, s);
        if state.is_empty() {
            grow.grow_from(true, 0, 0, s, &mut cands);
        } else {
            for (i, p) in scaled.iter().enumerate() {
                if !adjacent[i] {
                    continue;
                }
                for seg in p.segments() {
                    let (line, lo, hi) = seg.span();
                    let (rlo, rhi) = grow.range(seg.is_horizontal());
                    for a in rlo..hi {
                        for b in (a + 1).max(lo + 1)..=rhi {
                            grow.grow_from(seg.is_horizontal(), line, a, b, &mut cands);
                        }
                    }
                }
            }
        }
        let mut local = HashSet::new();
        for cand in cands {
            if self.monotonic && !cand.is_monotonic() {
                continue;
            }
            if !scaled.iter().zip(&adjacent).all(|(p, &adj)| crate::grid::intersects(p, &cand) == adj) {
                continue;
            }
            let mut next = scaled.clone();
            next.push(cand);
            let next = compact_paths(&next);
            let (w, h) = extent(&next);
            if w > self.bound || h > self.bound {
                continue;
            }
            let key = canonical_key(&next, self.monotonic);
            if !local.insert(key.clone()) {
                continue;
            }
            if self.seen.contains(&key) {
                continue;
            }
            if self.seen.len() < SEEN_CAP {
                self.seen.insert(key);
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Exhausted);
            }
            if let Some(found) = self.extend(&next)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Enumerates candidate paths around a fixed anchor segment. Every partial
/// path is checked against the placed paths it must not touch.
struct Generator {
    forbidden: Vec<Segment>,
    k: usize,
    xr: (i64, i64),
    yr: (i64, i64),
}

impl Generator {
    fn new(placed: &[GridPath], adjacent: &[bool], k: usize, s: i64) -> Self {
        let forbidden = placed.iter().zip(adjacent).filter(|(_, &a)| !a).flat_map(|(p, _)| p.segments()).collect();
        let pts = placed.iter().flat_map(|p| p.corners().iter().copied());
        let (mut xr, mut yr) = ((0, s), (0, 0));
        for (i, (x, y)) in pts.enumerate() {
            if i == 0 {
                xr = (x, x);
                yr = (y, y);
            }
            xr = (xr.0.min(x), xr.1.max(x));
            yr = (yr.0.min(y), yr.1.max(y));
        }
        let pad = s - 1;
        Generator { forbidden, k, xr: (xr.0 - pad, xr.1 + pad), yr: (yr.0 - pad, yr.1 + pad) }
    }

    fn range(&self, horizontal: bool) -> (i64, i64) {
        if horizontal {
            self.xr
        } else {
            self.yr
        }
    }

    fn clashes(&self, from: Point, to: Point) -> bool {
        let seg = Segment { from, to };
        let (line, lo, hi) = seg.span();
        self.forbidden.iter().any(|f| {
            let (l, a, b) = f.span();
            f.is_horizontal() == seg.is_horizontal() && l == line && a.max(lo) < b.min(hi)
        })
    }

    fn grow_from(&self, horizontal: bool, line: i64, a: i64, b: i64, out: &mut Vec<GridPath>) {
        let (p, q) = if horizontal { ((a, line), (b, line)) } else { ((line, a), (line, b)) };
        if self.clashes(p, q) {
            return;
        }
        let mut tail = Vec::new();
        self.grow_tail(vec![p, q], &mut tail, self.k);
        for path in tail {
            let used = path.len() - 2;
            let start = path.clone();
            let mut heads = Vec::new();
            let rev: Vec<Point> = start.iter().rev().copied().collect();
            self.grow_tail(rev, &mut heads, self.k - used);
            for h in heads {
                if let Ok(gp) = GridPath::new(h) {
                    out.push(gp);
                }
            }
        }
    }

    /// Appends up to `left` more segments at the end of `path`, pushing every
    /// prefix (including `path` itself) to `out`.
    fn grow_tail(&self, path: Vec<Point>, out: &mut Vec<Vec<Point>>, left: usize) {
        out.push(path.clone());
        if left == 0 {
            return;
        }
        let n = path.len();
        let (last, prev) = (path[n - 1], path[n - 2]);
        let horizontal = last.1 == prev.1;
        let (lo, hi) = self.range(!horizontal);
        for c in lo..=hi {
            let next = if horizontal { (last.0, c) } else { (c, last.1) };
            if next == last || self.clashes(last, next) {
                continue;
            }
            let mut p = path.clone();
            p.push(next);
            self.grow_tail(p, out, left - 1);
        }
    }
}

/// Rank compaction on plain corner lists.
fn compact_corners(paths: &[Vec<Point>]) -> Vec<Vec<Point>> {
    let mut xs: Vec<i64> = paths.iter().flatten().map(|p| p.0).collect();
    let mut ys: Vec<i64> = paths.iter().flatten().map(|p| p.1).collect();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    let rank = |v: &[i64], c: i64| v.binary_search(&c).unwrap() as i64;
    paths.iter().map(|p| p.iter().map(|&(x, y)| (rank(&xs, x), rank(&ys, y))).collect()).collect()
}

fn compact_paths(paths: &[GridPath]) -> Vec<GridPath> {
    let corners: Vec<Vec<Point>> = paths.iter().map(|p| p.corners().to_vec()).collect();
    compact_corners(&corners).into_iter().map(GridPath::from_corners).collect()
}

fn extent(paths: &[GridPath]) -> (i64, i64) {
    let pts = paths.iter().flat_map(|p| p.corners().iter());
    pts.fold((0, 0), |(w, h), &(x, y)| (w.max(x), h.max(y)))
}

/// Smallest encoding over the grid isometries allowed by the constraint,
/// with each path read in its smaller direction.
fn canonical_key(paths: &[GridPath], monotonic: bool) -> Vec<Vec<Point>> {
    let maps: &[fn(Point) -> Point] = if monotonic {
        &[|(x, y)| (x, y), |(x, y)| (-x, -y), |(x, y)| (y, x), |(x, y)| (-y, -x)]
    } else {
        &[
            |(x, y)| (x, y),
            |(x, y)| (-x, y),
            |(x, y)| (x, -y),
            |(x, y)| (-x, -y),
            |(x, y)| (y, x),
            |(x, y)| (-y, x),
            |(x, y)| (y, -x),
            |(x, y)| (-y, -x),
        ]
    };
    maps.iter()
        .map(|f| {
            let mapped: Vec<Vec<Point>> = paths.iter().map(|p| p.corners().iter().map(|&c| f(c)).collect()).collect();
            compact_corners(&mapped)
                .into_iter()
                .map(|c| {
                    if c.last() < c.first() {
                        c.into_iter().rev().collect()
                    } else {
                        c
                    }
                })
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap()
}

/// Contact structure of the central triangles: `touching[i]` and
/// `neighbored[i]` list the triangles sharing exactly a vertex, resp. an
/// edge, with triangle `i`.
struct Contacts {
    neighbored: Vec<Vec<usize>>,
    touching: Vec<Vec<usize>>,
}

fn contacts(g: &Graph) -> Result<Contacts, OracleError> {
    let emb = crate::embedding::test_outerplanar(g).map_err(MaxOutError::from)?;
    let dual = almost_dual(g, &emb)?;
    let tris = reduced_graph(g, &dual).triangles;
    let mut c = Contacts { neighbored: vec![Vec::new(); tris.len()], touching: vec![Vec::new(); tris.len()] };
    for i in 0..tris.len() {
        for j in 0..tris.len() {
            let shared = tris[i].iter().filter(|v| tris[j].contains(v)).count();
            if i != j && shared == 2 {
                c.neighbored[i].push(j);
            } else if i != j && shared == 1 {
                c.touching[i].push(j);
            }
        }
    }
    Ok(c)
}

/// M-freeness read directly off the central triangles: no triangle has two
/// neighbored partners, and no chain of touching or neighbored triangles
/// joins two different neighbored pairs.
pub fn m_free_direct(g: &Graph) -> Result<bool, OracleError> {
    let c = contacts(g)?;
    if c.neighbored.iter().any(|ns| ns.len() >= 2) {
        return Ok(false);
    }
    let t = c.neighbored.len();
    let mut comp = vec![usize::MAX; t];
    for s in 0..t {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = s;
        let mut pairs = 0;
        while let Some(i) = stack.pop() {
            pairs += c.neighbored[i].len();
            for &j in c.neighbored[i].iter().chain(&c.touching[i]) {
                if comp[j] == usize::MAX {
                    comp[j] = s;
                    stack.push(j);
                }
            }
        }
        if pairs / 2 >= 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Length of a longest cycle of central triangles in which only consecutive
/// triangles touch or are neighbored, or `None` if every such cycle is a
/// triangle. Found as a chordless cycle of the contact graph.
pub fn longest_reduced_contact_cycle(g: &Graph) -> Result<Option<usize>, OracleError> {
    let c = contacts(g)?;
    let adj: Vec<Vec<usize>> = (0..c.neighbored.len())
        .map(|i| {
            let mut a: Vec<usize> = c.neighbored[i].iter().chain(&c.touching[i]).copied().collect();
            a.sort_unstable();
            a
        })
        .collect();
    let mut best = None;
    for s in 0..adj.len() {
        let mut path = vec![s];
        chordless_from(&adj, &mut path, &mut best);
    }
    Ok(best)
}

fn chordless_from(adj: &[Vec<usize>], path: &mut Vec<usize>, best: &mut Option<usize>) {
    let s = path[0];
    let last = *path.last().unwrap();
    for &w in &adj[last] {
        if w <= s || path.contains(&w) {
            continue;
        }
        if path.len() > 2 && path[1..path.len() - 1].iter().any(|&p| adj[w].contains(&p)) {
            continue;
        }
        if path.len() > 1 && adj[w].contains(&s) {
            if path.len() + 1 >= 4 {
                *best = Some(best.unwrap_or(0).max(path.len() + 1));
            }
            continue;
        }
        path.push(w);
        chordless_from(adj, path, best);
        path.pop();
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactBends {
    /// Bend number, if every smaller value was refuted within the budget.
    pub b: Option<usize>,
    pub bm: Option<usize>,
    /// Largest value known not to suffice plus one.
    pub b_lower: usize,
    pub bm_lower: usize,
    pub nodes_expanded: u64,
}

pub const EXACT_MAX_K: usize = 3;

/// Bend number and monotonic bend number by increasing `k`. The interval
/// test settles `k = 0`; every other level is a full grid search at the
/// default bound. A level that runs out of budget leaves the value open.
pub fn bend_number_exact(g: &Graph, budget: u64) -> ExactBends {
    let mut out = ExactBends { b: None, bm: None, b_lower: 0, bm_lower: 0, nodes_expanded: 0 };
    let interval = is_interval_with_limit(g, 20).ok();
    let level = |k: usize, monotonic: bool, out: &mut ExactBends| -> SearchStatus {
        if k == 0 {
            if let Some(i) = interval {
                return if i { SearchStatus::Found } else { SearchStatus::NoneWithinBound };
            }
        }
        let r = bounded_grid_search(g, k, monotonic, default_bound(g.n(), k), budget);
        out.nodes_expanded += r.nodes_expanded;
        r.status
    };
    for k in 0..=EXACT_MAX_K {
        match level(k, false, &mut out) {
            SearchStatus::Found => {
                out.b = Some(k);
                break;
            }
            SearchStatus::NoneWithinBound => out.b_lower = k + 1,
            SearchStatus::BudgetExceeded => break,
        }
    }
    out.bm_lower = out.b_lower;
    let start = out.b.unwrap_or(out.b_lower);
    if out.b == Some(0) {
        out.bm = Some(0);
        return out;
    }
    for k in start..=EXACT_MAX_K {
        match level(k, true, &mut out) {
            SearchStatus::Found => {
                out.bm = Some(k);
                break;
            }
            SearchStatus::NoneWithinBound => out.bm_lower = k + 1,
            SearchStatus::BudgetExceeded => break,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_triangulations, gen_named, parse_graph, Named};
    use crate::maxouter::{classify, compute_assignment};

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn interval_examples() {
        assert!(!is_interval(&gen_named(Named::Cycle(4)).unwrap()).unwrap());
        assert!(is_interval(&g(3, &[(1, 2), (2, 3), (1, 3)])).unwrap());
        assert!(!is_interval(&gen_named(Named::NSun(3)).unwrap()).unwrap());
        // Claw and the asteroidal-triple tree.
        assert!(is_interval(&g(4, &[(1, 2), (1, 3), (1, 4)])).unwrap());
        assert!(!is_interval(&g(7, &[(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])).unwrap());
        assert!(is_interval_with_limit(&Graph::empty(11), 10).is_err());
    }

    #[test]
    fn search_examples() {
        let k3 = g(3, &[(1, 2), (2, 3), (1, 3)]);
        let r = bounded_grid_search(&k3, 0, false, default_bound(3, 0), DEFAULT_BUDGET);
        assert_eq!(r.status, SearchStatus::Found);
        let c4 = gen_named(Named::Cycle(4)).unwrap();
        let r = bounded_grid_search(&c4, 0, false, 8, DEFAULT_BUDGET);
        assert_eq!(r.status, SearchStatus::NoneWithinBound);
        let r = bounded_grid_search(&c4, 1, true, default_bound(4, 1), DEFAULT_BUDGET);
        assert_eq!(r.status, SearchStatus::Found);
        assert!(verify(&c4, r.rep.as_ref().unwrap(), Some(1), true).pass);
        let s3 = gen_named(Named::NSun(3)).unwrap();
        let r = bounded_grid_search(&s3, 1, false, default_bound(6, 1), DEFAULT_BUDGET);
        assert_eq!(r.status, SearchStatus::Found);
        assert!(verify(&s3, r.rep.as_ref().unwrap(), Some(1), false).pass);
        let two = g(4, &[(1, 2), (3, 4)]);
        assert_eq!(bounded_grid_search(&two, 0, false, 8, 100).status, SearchStatus::Found);
    }

    #[test]
    fn exact_small() {
        let k3 = g(3, &[(1, 2), (2, 3), (1, 3)]);
        let e = bend_number_exact(&k3, DEFAULT_BUDGET);
        assert_eq!((e.b, e.bm), (Some(0), Some(0)));
        let e = bend_number_exact(&gen_named(Named::Cycle(4)).unwrap(), DEFAULT_BUDGET);
        assert_eq!((e.b, e.bm), (Some(1), Some(1)));
    }

    #[test]
    fn m_free_examples() {
        let nine = parse_graph(crate::graph::tests::NINE).unwrap();
        assert!(m_free_direct(&nine).unwrap());
        assert!(m_free_direct(&gen_named(Named::NSun(3)).unwrap()).unwrap());
        assert!(m_free_direct(&gen_named(Named::Cycle(5)).unwrap()).is_err());
    }

    #[test]
    fn m_free_matches_assignment() {
        for n in 3..=10 {
            for t in all_triangulations(n) {
                let emb = crate::embedding::test_outerplanar(&t).unwrap();
                let dual = almost_dual(&t, &emb).unwrap();
                let direct = m_free_direct(&t).unwrap();
                assert_eq!(compute_assignment(&t, &dual).is_ok(), direct, "{:?}", t.to_edge_list());
                if direct {
                    assert_eq!(longest_reduced_contact_cycle(&t).unwrap(), None);
                }
            }
        }
    }

    #[test]
    fn exact_agrees_on_small_triangulations() {
        for n in 3..=6 {
            for t in all_triangulations(n) {
                let c = classify(&t).unwrap();
                let e = bend_number_exact(&t, 3_000);
                if let Some(b) = e.b {
                    assert_eq!(b, c.b as usize, "{:?}", t.to_edge_list());
                }
                if let Some(bm) = e.bm {
                    assert_eq!(bm, c.bm as usize, "{:?}", t.to_edge_list());
                }
            }
        }
    }
}
