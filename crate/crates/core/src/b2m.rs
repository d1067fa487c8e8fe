//! Monotonic 2-bend representations of outerplanar graphs, and the explicit
//! construction for `n`-suns.
//!
//! Vertices are explored in the order of a nice labeling. Every path is
//! horizontal-vertical-horizontal and ascending. Each green (constructed but
//! unexplored) vertex `g` owns a free interval `[a_g, b_g]` at the right end
//! of its lower horizontal segment, on row `y_g`; no other path has a
//! horizontal edge on row `y_g` right of `a_g`. Listed by label, the greens
//! have strictly increasing rows and strictly increasing, disjoint free
//! intervals.
//!
//! Exploring `v` with current neighbors `c_1 < ... < c_l`:
//!
//! * `c_1 .. c_{l-1}` get a lower segment on a fresh row just below `y_v`,
//!   a vertical on a fresh column, and an upper segment on row `y_v` inside
//!   the free interval of `v`. The upper segment of `c_{j-1}` is stretched
//!   past the vertical of `c_j` exactly when the two are adjacent.
//! * `c_l` runs along row `y_v` from inside the free interval to a fresh
//!   column past `b_v` (overlapping `c_{l-1}` when adjacent). If it is
//!   adjacent to the second smallest green `g*`, it instead continues to a
//!   fresh column inside the free interval of `g*`, climbs to row `y_g*` and
//!   takes the left end of that interval.
//!
//! All new lines are fresh, so paths can only share edges where a segment is
//! deliberately placed on an existing row.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::coords::{Axis, Line};
use crate::embedding::{nice_labeling, test_outerplanar, NotOuterplanar};
use crate::graph::Graph;
use crate::grid::{compact, EpgRepresentation, GridPath};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum B2mError {
    #[error("graph is not outerplanar: {0}")]
    NotOuterplanar(#[from] NotOuterplanar),
    #[error("n-sun needs n >= 3, got {0}")]
    SunTooSmall(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Gray,
    Green,
    /// Explored and removed from the residual graph.
    Done,
}

#[derive(Debug, Clone, Copy)]
struct Free {
    row: Line,
    a: Line,
    b: Line,
}

/// State of one run on a connected outerplanar graph. Vertices are referred
/// to by their label `1..=n`.
#[derive(Debug, Clone)]
pub struct BuilderState {
    /// `vertex[label]`: original vertex id.
    vertex: Vec<usize>,
    /// Residual graph `G'` in label space.
    residual: Vec<BTreeSet<usize>>,
    color: Vec<Color>,
    green: BTreeSet<usize>,
    free: HashMap<usize, Free>,
    cols: Axis,
    rows: Axis,
    corners: Vec<Vec<(Line, Line)>>,
    /// Neighbor list and `i*` of the last exploration, consumed by `update`.
    last: Option<(usize, Vec<usize>, Option<usize>)>,
}

impl BuilderState {
    /// Starts a run from `order` (`order[i]` is the vertex with label `i+1`):
    /// the path of label 1 is a horizontal segment and label 1 is green.
    pub fn new(g: &Graph, order: &[usize]) -> Self {
        let n = order.len();
        let mut label = vec![0; g.n() + 1];
        for (i, &v) in order.iter().enumerate() {
            label[v] = i + 1;
        }
        let mut residual = vec![BTreeSet::new(); n + 1];
        for (i, &v) in order.iter().enumerate() {
            residual[i + 1] = g.neighbors(v).iter().map(|&w| label[w]).collect();
        }
        let mut vertex = vec![0];
        vertex.extend_from_slice(order);
        let mut cols = Axis::new();
        let mut rows = Axis::new();
        let a = cols.first();
        let b = cols.after(a);
        let row = rows.first();
        let mut corners = vec![Vec::new(); n + 1];
        corners[1] = vec![(a, row), (b, row)];
        let mut color = vec![Color::Gray; n + 1];
        color[1] = Color::Green;
        let mut free = HashMap::new();
        free.insert(1, Free { row, a, b });
        BuilderState {
            vertex,
            residual,
            color,
            green: BTreeSet::from([1]),
            free,
            cols,
            rows,
            corners,
            last: None,
        }
    }

    /// Smallest green label `i` and the second smallest `i*`.
    pub fn next_green(&self) -> Option<(usize, Option<usize>)> {
        let mut it = self.green.iter().copied();
        it.next().map(|i| (i, it.next()))
    }

    pub fn color(&self, label: usize) -> Color {
        self.color[label]
    }

    /// Constructs the paths of all current neighbors of `v`, which must be
    /// the smallest green label.
    pub fn explore(&mut self, v: usize) {
        let (i, istar) = self.next_green().expect("a green vertex to explore");
        assert_eq!(i, v, "explore must take the smallest green label");
        let nbrs: Vec<usize> = self.residual[v].iter().copied().collect();
        for &c in &nbrs {
            assert_eq!(self.color[c], Color::Gray, "neighbor {c} of {v} is already constructed");
        }
        let l = nbrs.len();
        let fv = self.free[&v];
        let adj = |s: &Self, j: usize| j >= 1 && s.residual[nbrs[j - 1]].contains(&nbrs[j]);
        let star = istar.filter(|&s| l > 0 && self.residual[nbrs[l - 1]].contains(&s));

        // rows of the regular neighbors, ascending, just below row(v)
        let mut low_rows = Vec::with_capacity(l.saturating_sub(1));
        for j in 0..l.saturating_sub(1) {
            let r = if j == 0 { self.rows.before(fv.row) } else { self.rows.after(low_rows[j - 1]) };
            low_rows.push(r);
        }
        // columns inside the free interval of v, left to right
        let mut cursor = fv.a;
        let mut fresh = |cols: &mut Axis| {
            cursor = cols.after(cursor);
            cursor
        };
        let mut p = vec![None; l];
        let mut x = vec![None; l];
        let mut e: Vec<Option<Line>> = vec![None; l];
        let mut start_last = None;
        for j in 0..l.saturating_sub(1) {
            p[j] = Some(fresh(&mut self.cols));
            x[j] = Some(fresh(&mut self.cols));
            if j >= 1 && adj(self, j) {
                e[j - 1] = Some(fresh(&mut self.cols));
            }
            if j + 2 < l && !adj(self, j + 1) {
                e[j] = Some(fresh(&mut self.cols));
            }
        }
        if l >= 2 {
            if adj(self, l - 1) {
                start_last = Some(fresh(&mut self.cols));
                e[l - 2] = Some(fresh(&mut self.cols));
            } else {
                e[l - 2] = Some(fresh(&mut self.cols));
                start_last = Some(fresh(&mut self.cols));
            }
        } else if l == 1 {
            start_last = Some(fresh(&mut self.cols));
        }
        for j in 0..l.saturating_sub(1) {
            let c = nbrs[j];
            let (pj, xj, ej, lr) = (p[j].unwrap(), x[j].unwrap(), e[j].unwrap(), low_rows[j]);
            self.corners[c] = vec![(pj, lr), (xj, lr), (xj, fv.row), (ej, fv.row)];
            self.free.insert(c, Free { row: lr, a: pj, b: xj });
        }
        if l >= 1 {
            let c = nbrs[l - 1];
            let s = start_last.unwrap();
            match star {
                Some(gs) => {
                    let fs = self.free[&gs];
                    let xl = self.cols.after(fs.a);
                    let el = self.cols.after(xl);
                    self.corners[c] = vec![(s, fv.row), (xl, fv.row), (xl, fs.row), (el, fs.row)];
                    self.free.insert(c, Free { row: fv.row, a: fv.b, b: xl });
                    self.free.insert(gs, Free { a: el, ..fs });
                }
                None => {
                    let xl = self.cols.after(fv.b);
                    self.corners[c] = vec![(s, fv.row), (xl, fv.row)];
                    self.free.insert(c, Free { row: fv.row, a: fv.b, b: xl });
                }
            }
        }
        for &c in &nbrs {
            self.color[c] = Color::Green;
        }
        self.last = Some((v, nbrs, istar));
    }

    /// Removes `v`, the edges between consecutive neighbors and the edge from
    /// the last neighbor to `i*`: exactly the adjacencies the preceding
    /// `explore` realized. Returns the removed edges in label space.
    pub fn update(&mut self, v: usize) -> Vec<(usize, usize)> {
        let (u, nbrs, istar) = self.last.take().expect("update follows explore");
        assert_eq!(u, v);
        let mut removed = Vec::new();
        for &c in &nbrs {
            self.residual[c].remove(&v);
            removed.push((v, c));
        }
        self.residual[v].clear();
        for w in nbrs.windows(2) {
            if self.residual[w[0]].remove(&w[1]) {
                self.residual[w[1]].remove(&w[0]);
                removed.push((w[0], w[1]));
            }
        }
        if let (Some(&last), Some(s)) = (nbrs.last(), istar) {
            if self.residual[last].remove(&s) {
                self.residual[s].remove(&last);
                removed.push((last, s));
            }
        }
        self.color[v] = Color::Done;
        self.green.remove(&v);
        self.free.remove(&v);
        self.green.extend(nbrs.iter().copied());
        removed
    }

    /// Checks the free-interval ordering over the current green vertices.
    pub fn free_regions_ordered(&self) -> bool {
        let cr = self.cols.ranks();
        let rr = self.rows.ranks();
        let regions: Vec<(i64, i64, i64)> = self
            .green
            .iter()
            .map(|g| {
                let f = self.free[g];
                (Axis::rank_of(&rr, f.row), Axis::rank_of(&cr, f.a), Axis::rank_of(&cr, f.b))
            })
            .collect();
        regions.iter().all(|&(_, a, b)| a < b)
            && regions.windows(2).all(|w| w[0].0 < w[1].0 && w[0].2 < w[1].1)
    }

    /// Paths keyed by original vertex id, on integer coordinates.
    pub fn finish(&self) -> EpgRepresentation {
        let cr = self.cols.ranks();
        let rr = self.rows.ranks();
        let mut rep = EpgRepresentation::new();
        for label in 1..self.corners.len() {
            let pts = self.corners[label]
                .iter()
                .map(|&(c, r)| (Axis::rank_of(&cr, c), Axis::rank_of(&rr, r)))
                .collect();
            rep.insert(self.vertex[label], GridPath::from_corners(pts));
        }
        rep
    }

    /// Runs the whole exploration.
    pub fn run(mut self) -> EpgRepresentation {
        while let Some((i, _)) = self.next_green() {
            self.explore(i);
            self.update(i);
        }
        debug_assert!(self.residual.iter().all(BTreeSet::is_empty));
        self.finish()
    }
}

/// Builds a compacted monotonic 2-bend representation of any outerplanar
/// graph. Components are placed along the diagonal.
pub fn build_b2m(g: &Graph) -> Result<EpgRepresentation, B2mError> {
    test_outerplanar(g)?;
    let mut rep = EpgRepresentation::new();
    let (mut ox, mut oy) = (0, 0);
    for comp in g.components() {
        let part = if comp.len() == 1 {
            let mut r = EpgRepresentation::new();
            r.insert(comp[0], GridPath::from_corners(vec![(0, 0), (1, 0)]));
            r
        } else {
            let sub = g.induced(&comp);
            let emb = test_outerplanar(&sub)?;
            let lab = nice_labeling(&sub, &emb).expect("component is connected");
            let local = compact(&BuilderState::new(&sub, &lab.order).run());
            EpgRepresentation { paths: local.paths.into_iter().map(|(v, p)| (comp[v - 1], p)).collect() }
        };
        let (mx, my) = part.extent();
        for (v, p) in part.paths {
            rep.insert(v, p.translated(ox, oy));
        }
        ox += mx + 1;
        oy += my + 1;
    }
    Ok(rep)
}

/// The `n`-sun with `x_i = i` and `y_i = n + i`. Every `x`-path climbs the
/// shared column 0 and turns right on row `2i`; `y_i` joins row `2i` to row
/// `2i + 2` and `y_n` joins rows 2 and `2n` on column 1.
pub fn build_nsun_b2m(n: usize) -> Result<EpgRepresentation, B2mError> {
    if n < 3 {
        return Err(B2mError::SunTooSmall(n));
    }
    let mut rep = EpgRepresentation::new();
    for s in 1..=n {
        let t = 2 * s as i64;
        rep.insert(s, GridPath::from_corners(vec![(0, 0), (0, t), (t + 2, t)]));
        if s < n {
            rep.insert(n + s, GridPath::from_corners(vec![(t, t), (t + 1, t), (t + 1, t + 2), (t + 2, t + 2)]));
        }
    }
    let top = 2 * n as i64;
    rep.insert(2 * n, GridPath::from_corners(vec![(0, 2), (1, 2), (1, top), (2, top)]));
    Ok(rep)
}

/// Recognizes an `n`-sun under any labeling. Returns `perm` with `perm[v]`
/// the standard label of `v` (`x_i = i`, `y_i = n + i`).
pub fn sun_labels(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n() / 2;
    if n < 3 || g.n() != 2 * n || g.m() != n * (n - 1) / 2 + 2 * n {
        return None;
    }
    let rays: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
    let centers: Vec<usize> = g.vertices().filter(|&v| g.degree(v) != 2).collect();
    if rays.len() != n || centers.iter().any(|&c| g.degree(c) != n + 1) {
        return None;
    }
    if rays.iter().any(|&r| g.neighbors(r).iter().any(|&w| g.degree(w) == 2)) {
        return None;
    }
    let mut perm = vec![0; g.n() + 1];
    let (mut x, mut prev_ray) = (centers[0], 0);
    for i in 1..=n {
        if perm[x] != 0 {
            return None;
        }
        perm[x] = i;
        let ray = *g.neighbors(x).iter().find(|&&r| g.degree(r) == 2 && r != prev_ray && perm[r] == 0)?;
        perm[ray] = n + i;
        x = *g.neighbors(ray).iter().find(|&&w| w != x)?;
        prev_ray = ray;
    }
    if x != centers[0] || perm.iter().skip(1).any(|&p| p == 0) {
        return None;
    }
    Some(perm)
}

/// [`build_nsun_b2m`] for an `n`-sun with arbitrary vertex ids.
pub fn build_sun_b2m(g: &Graph) -> Option<EpgRepresentation> {
    let perm = sun_labels(g)?;
    let rep = build_nsun_b2m(g.n() / 2).ok()?;
    let mut out = EpgRepresentation::new();
    for v in g.vertices() {
        out.insert(v, rep.get(perm[v])?.clone());
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_named, gen_random, Named, RandomFamily};
    use crate::grid::verify;

    fn check(g: &Graph) {
        let rep = build_b2m(g).unwrap();
        let r = verify(g, &rep, Some(2), true);
        assert!(r.pass, "{g:?}\n{r:?}\n{}", rep.to_json());
    }

    #[test]
    fn small_cases() {
        check(&gen_named(Named::Path(3)).unwrap());
        check(&gen_named(Named::Cycle(3)).unwrap());
        check(&gen_named(Named::Cycle(7)).unwrap());
        check(&Graph::from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap());
        check(&Graph::from_edges(5, [(1, 2), (3, 4)]).unwrap());
        check(&gen_named(Named::NSun(3)).unwrap());
    }

    #[test]
    fn isolated_vertex_is_one_unit_edge() {
        let rep = build_b2m(&Graph::empty(1)).unwrap();
        assert_eq!(rep.get(1).unwrap().corners(), &[(0, 0), (1, 0)]);
    }

    #[test]
    fn s4_is_rejected() {
        assert!(matches!(build_b2m(&gen_named(Named::NSun(4)).unwrap()), Err(B2mError::NotOuterplanar(_))));
    }

    #[test]
    fn k3_exploration_of_first_vertex() {
        let g = gen_named(Named::Cycle(3)).unwrap();
        let mut st = BuilderState::new(&g, &[1, 2, 3]);
        st.explore(1);
        assert_eq!(st.color(2), Color::Green);
        let removed = st.update(1);
        assert_eq!(removed, vec![(1, 2), (1, 3), (2, 3)]);
        assert!(st.free_regions_ordered());
    }

    #[test]
    fn free_regions_stay_ordered() {
        for seed in 0..40 {
            let g = gen_random(RandomFamily::ConnectedOuterplanar, 30, seed).unwrap();
            let emb = test_outerplanar(&g).unwrap();
            let lab = nice_labeling(&g, &emb).unwrap();
            let mut st = BuilderState::new(&g, &lab.order);
            while let Some((i, _)) = st.next_green() {
                st.explore(i);
                st.update(i);
                assert!(st.free_regions_ordered(), "seed {seed}");
            }
        }
    }

    #[test]
    fn random_outerplanar() {
        for seed in 0..200 {
            check(&gen_random(RandomFamily::ConnectedOuterplanar, 5 + seed as usize % 40, seed).unwrap());
            check(&gen_random(RandomFamily::MaximalOuterplanar, 3 + seed as usize % 30, seed).unwrap());
        }
    }

    #[test]
    fn suns() {
        for n in 3..=12 {
            let g = gen_named(Named::NSun(n)).unwrap();
            let rep = build_nsun_b2m(n).unwrap();
            assert!(verify(&g, &rep, Some(2), true).pass, "n={n}");
            assert!((1..=n).all(|s| rep.get(s).unwrap().bends() == 1));
        }
        assert!(build_nsun_b2m(2).is_err());
    }

    #[test]
    fn relabeled_suns() {
        for n in 3..=9 {
            let g = gen_named(Named::NSun(n)).unwrap();
            let perm: Vec<usize> = std::iter::once(0).chain((1..=2 * n).map(|v| 2 * n - (v + 2) % (2 * n))).collect();
            let h = g.relabel(&perm);
            let rep = build_sun_b2m(&h).unwrap();
            assert!(verify(&h, &rep, Some(2), true).pass, "n={n}");
        }
        assert!(sun_labels(&gen_named(Named::Cycle(6)).unwrap()).is_none());
        assert!(sun_labels(&gen_named(Named::M1).unwrap()).is_none());
    }
}
