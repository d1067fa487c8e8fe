//! Outerplanarity testing, outer-boundary embeddings, nice labelings and the
//! separation checks.
//!
//! A biconnected outerplanar block has a unique Hamiltonian outer cycle. It
//! is recovered by repeatedly removing a degree-2 vertex `v` and joining its
//! two neighbors, then reinserting the removed vertices in reverse order. The
//! candidate cycle is accepted only if every block edge is a non-crossing
//! chord of it, so a positive answer always carries a certificate; for an
//! outerplanar block the reduction cannot get stuck, so a stuck reduction or
//! a crossing chord proves non-outerplanarity.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum NotOuterplanar {
    #[error("{m} edges exceed the outerplanar bound 2n - 3 = {bound}")]
    EdgeExcess { m: usize, bound: usize },
    /// Some block has no outer Hamiltonian cycle with non-crossing chords,
    /// i.e. the graph plus a universal apex vertex is not planar.
    #[error("block {block:?} admits no outerplanar embedding (apex-augmented graph is not planar)")]
    ApexNonplanar { block: Vec<usize> },
}

/// Outer-face structure of an outerplanar graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterplanarEmbedding {
    /// Biconnected blocks. A block of three or more vertices is listed in the
    /// cyclic order of its outer face; bridges have two vertices, isolated
    /// vertices one.
    pub blocks: Vec<Vec<usize>>,
    /// Block ids containing each vertex (index 0 unused).
    pub vertex_blocks: Vec<Vec<usize>>,
    /// Per component (ordered by smallest vertex): vertices in the order of
    /// first appearance along the outer face walk, starting at the smallest
    /// vertex.
    pub walks: Vec<Vec<usize>>,
}

impl OuterplanarEmbedding {
    pub fn cut_vertices(&self) -> Vec<usize> {
        (1..self.vertex_blocks.len()).filter(|&v| self.vertex_blocks[v].len() > 1).collect()
    }

    /// Counterclockwise order of the neighbors of `v`: the vertices of a
    /// component are placed on a circle in walk order and every edge is drawn
    /// as a chord.
    pub fn rotation(&self, g: &Graph, v: usize) -> Vec<usize> {
        let walk = self.walks.iter().find(|w| w.contains(&v)).expect("vertex in some component");
        let k = walk.len();
        let mut pos = std::collections::HashMap::new();
        for (i, &w) in walk.iter().enumerate() {
            pos.insert(w, i);
        }
        let pv = pos[&v];
        let mut nb = g.neighbors(v).to_vec();
        nb.sort_by_key(|w| (pos[w] + k - pv) % k);
        nb
    }
}

/// Tests outerplanarity and returns the outer-face structure.
pub fn test_outerplanar(g: &Graph) -> Result<OuterplanarEmbedding, NotOuterplanar> {
    let n = g.n();
    if n >= 2 && g.m() > 2 * n - 3 {
        return Err(NotOuterplanar::EdgeExcess { m: g.m(), bound: 2 * n - 3 });
    }
    let raw = biconnected_blocks(g);
    let mut blocks = Vec::with_capacity(raw.len());
    for (verts, edges) in raw {
        if verts.len() <= 2 {
            blocks.push(verts);
        } else {
            match outer_cycle(&verts, &edges) {
                Some(c) => blocks.push(c),
                None => {
                    let mut b = verts;
                    b.sort_unstable();
                    return Err(NotOuterplanar::ApexNonplanar { block: b });
                }
            }
        }
    }
    let mut vertex_blocks = vec![Vec::new(); n + 1];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            vertex_blocks[v].push(i);
        }
    }
    let walks = outer_walks(n, &blocks, &vertex_blocks);
    Ok(OuterplanarEmbedding { blocks, vertex_blocks, walks })
}

/// Biconnected components as (vertices, edges). Isolated vertices form
/// singleton blocks.
pub(crate) fn biconnected_blocks(g: &Graph) -> Vec<(Vec<usize>, Vec<(usize, usize)>)> {
    let n = g.n();
    let mut disc = vec![0usize; n + 1];
    let mut low = vec![0usize; n + 1];
    let mut time = 0;
    let mut out = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in g.vertices() {
        if disc[root] != 0 {
            continue;
        }
        if g.degree(root) == 0 {
            time += 1;
            disc[root] = time;
            out.push((vec![root], Vec::new()));
            continue;
        }
        time += 1;
        disc[root] = time;
        low[root] = time;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, 0usize, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == 0 {
                    edge_stack.push((v, w));
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut edges = Vec::new();
                        let mut verts = HashSet::new();
                        while let Some(e) = edge_stack.pop() {
                            edges.push(e);
                            verts.insert(e.0);
                            verts.insert(e.1);
                            if e == (p, v) {
                                break;
                            }
                        }
                        let mut vs: Vec<usize> = verts.into_iter().collect();
                        vs.sort_unstable();
                        out.push((vs, edges));
                    }
                }
            }
        }
    }
    out
}

/// Outer Hamiltonian cycle of a biconnected block, if the block is
/// outerplanar.
fn outer_cycle(verts: &[usize], edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let k = verts.len();
    if edges.len() > 2 * k - 3 {
        return None;
    }
    let local: std::collections::HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj: Vec<HashSet<usize>> = vec![HashSet::new(); k];
    for &(a, b) in edges {
        let (a, b) = (local[&a], local[&b]);
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut removed = vec![false; k];
    let mut queue: VecDeque<usize> = (0..k).filter(|&v| adj[v].len() == 2).collect();
    let mut records = Vec::with_capacity(k);
    let mut remaining = k;
    while remaining > 3 {
        let v = queue.pop_front()?;
        if removed[v] || adj[v].len() != 2 {
            continue;
        }
        let mut it = adj[v].iter().copied();
        let (u, w) = (it.next().unwrap(), it.next().unwrap());
        adj[u].remove(&v);
        adj[w].remove(&v);
        adj[v].clear();
        removed[v] = true;
        remaining -= 1;
        if adj[u].insert(w) {
            adj[w].insert(u);
        }
        for x in [u, w] {
            match adj[x].len() {
                0 | 1 => return None,
                2 => queue.push_back(x),
                _ => {}
            }
        }
        records.push((v, u, w));
    }
    let tri: Vec<usize> = (0..k).filter(|&v| !removed[v]).collect();
    if tri.iter().any(|&v| adj[v].len() != 2) {
        return None;
    }
    let mut next = vec![usize::MAX; k];
    let mut prev = vec![usize::MAX; k];
    for i in 0..3 {
        next[tri[i]] = tri[(i + 1) % 3];
        prev[tri[(i + 1) % 3]] = tri[i];
    }
    for &(v, u, w) in records.iter().rev() {
        let (a, b) = if next[u] == w {
            (u, w)
        } else if next[w] == u {
            (w, u)
        } else {
            return None;
        };
        next[a] = v;
        prev[v] = a;
        next[v] = b;
        prev[b] = v;
    }
    let mut cycle = Vec::with_capacity(k);
    let mut x = 0;
    for _ in 0..k {
        cycle.push(x);
        x = next[x];
    }
    if x != 0 {
        return None;
    }
    let mut pos = vec![0; k];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let spans = edges.iter().map(|&(a, b)| {
        let (p, q) = (pos[local[&a]], pos[local[&b]]);
        (p.min(q), p.max(q))
    });
    if !non_crossing(spans) {
        return None;
    }
    let mut out: Vec<usize> = cycle.into_iter().map(|i| verts[i]).collect();
    // canonical rotation: start at the smallest vertex, continue towards the
    // smaller of its two cycle neighbors
    let s = (0..k).min_by_key(|&i| out[i]).unwrap();
    out.rotate_left(s);
    if out[k - 1] < out[1] {
        out[1..].reverse();
    }
    Some(out)
}

/// Whether the position spans `(lo, hi)` are pairwise laminar (nested or
/// interior-disjoint), i.e. the chords do not cross.
fn non_crossing(spans: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut s: Vec<(usize, usize)> = spans.collect();
    s.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut stack: Vec<usize> = Vec::new();
    for (lo, hi) in s {
        while stack.last().is_some_and(|&top| top <= lo) {
            stack.pop();
        }
        if stack.last().is_some_and(|&top| top < hi) {
            return false;
        }
        stack.push(hi);
    }
    true
}

/// First-appearance order along the outer face walk of each component.
fn outer_walks(n: usize, blocks: &[Vec<usize>], vertex_blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n + 1];
    let mut block_done = vec![false; blocks.len()];
    let mut walks = Vec::new();
    for root in 1..=n {
        if seen[root] {
            continue;
        }
        let mut walk = Vec::new();
        // frames: (cycle of the block being walked, next index)
        let mut frames: Vec<(Vec<usize>, usize)> = Vec::new();
        seen[root] = true;
        walk.push(root);
        push_child_blocks(root, blocks, vertex_blocks, &mut block_done, &mut frames);
        while let Some((cycle, idx)) = frames.last_mut() {
            if *idx >= cycle.len() {
                frames.pop();
                continue;
            }
            let w = cycle[*idx];
            *idx += 1;
            if !seen[w] {
                seen[w] = true;
                walk.push(w);
                push_child_blocks(w, blocks, vertex_blocks, &mut block_done, &mut frames);
            }
        }
        walks.push(walk);
    }
    walks
}

/// Pushes the unvisited blocks at `v` so that they are walked one after the
/// other, smallest block id first, each starting right after `v`.
fn push_child_blocks(
    v: usize,
    blocks: &[Vec<usize>],
    vertex_blocks: &[Vec<usize>],
    done: &mut [bool],
    frames: &mut Vec<(Vec<usize>, usize)>,
) {
    let mut mine: Vec<usize> = vertex_blocks[v].iter().copied().filter(|&b| !done[b]).collect();
    mine.sort_unstable_by_key(|&b| {
        let c = &blocks[b];
        c.iter().copied().filter(|&w| w != v).min().unwrap_or(0)
    });
    for &b in &mine {
        done[b] = true;
    }
    // a stack: push in reverse so that the first block is walked first
    for &b in mine.iter().rev() {
        let c = &blocks[b];
        let k = c.len();
        let i = c.iter().position(|&w| w == v).unwrap();
        let mut cyc: Vec<usize> = (1..k).map(|d| c[(i + d) % k]).collect();
        if k >= 3 && cyc[k - 2] < cyc[0] {
            cyc.reverse();
        }
        frames.push((cyc, 0));
    }
}

/// A permutation `v_1, ..., v_n` of the vertices with the separation
/// property, read off the outer face walk starting at vertex 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NiceLabeling {
    /// `order[i]` is `v_{i+1}`.
    pub order: Vec<usize>,
    /// `position[v]` is the 1-based label of vertex `v` (index 0 unused).
    pub position: Vec<usize>,
}

impl NiceLabeling {
    pub fn from_order(order: Vec<usize>) -> Result<Self, LabelingError> {
        let n = order.len();
        let mut position = vec![0; n + 1];
        for (i, &v) in order.iter().enumerate() {
            if v == 0 || v > n || position[v] != 0 {
                return Err(LabelingError::NotAPermutation);
            }
            position[v] = i + 1;
        }
        Ok(NiceLabeling { order, position })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("order is not a permutation of 1..=n")]
    NotAPermutation,
}

pub fn nice_labeling(g: &Graph, emb: &OuterplanarEmbedding) -> Result<NiceLabeling, LabelingError> {
    if emb.walks.len() != 1 || !g.is_connected() {
        return Err(LabelingError::Disconnected);
    }
    NiceLabeling::from_order(emb.walks[0].clone())
}

/// A pair of disjoint edges whose labels interleave.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationViolation {
    pub edge: (usize, usize),
    pub other: (usize, usize),
}

/// Checks the separation property of `order` (`order[i]` = `v_{i+1}`).
/// Edges are scanned in lexicographic order and the first violating pair is
/// reported.
pub fn check_separation(g: &Graph, order: &[usize]) -> Result<Result<(), SeparationViolation>, LabelingError> {
    let lab = NiceLabeling::from_order(order.to_vec())?;
    if order.len() != g.n() {
        return Err(LabelingError::NotAPermutation);
    }
    let pos = &lab.position;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for &(a, b) in &edges {
        let (i, j) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
        for &(c, d) in &edges {
            if c == a || c == b || d == a || d == b {
                continue;
            }
            let inside = |v: usize| i < pos[v] && pos[v] < j;
            if inside(c) != inside(d) {
                return Ok(Err(SeparationViolation { edge: (a, b), other: (c, d) }));
            }
        }
    }
    Ok(Ok(()))
}

/// A path whose end labels separate the two ends of an edge not on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathSeparationViolation {
    pub path: Vec<usize>,
    pub edge: (usize, usize),
}

/// Checks the path separation property. For each edge `{k, l}` the graph
/// minus `k` and `l` is split into components; a violation exists iff some
/// component has a vertex labeled strictly between the labels of `k` and `l`
/// and another labeled outside that range.
pub fn check_path_separation(
    g: &Graph,
    order: &[usize],
) -> Result<Result<(), PathSeparationViolation>, LabelingError> {
    let lab = NiceLabeling::from_order(order.to_vec())?;
    if order.len() != g.n() {
        return Err(LabelingError::NotAPermutation);
    }
    let pos = &lab.position;
    let n = g.n();
    for (k, l) in g.edges() {
        let (p, q) = (pos[k].min(pos[l]), pos[k].max(pos[l]));
        let mut comp = vec![usize::MAX; n + 1];
        for s in g.vertices() {
            if s == k || s == l || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = s;
            let mut queue = VecDeque::from([s]);
            let mut middle = None;
            let mut outer = None;
            while let Some(v) = queue.pop_front() {
                if p < pos[v] && pos[v] < q {
                    middle.get_or_insert(v);
                } else {
                    outer.get_or_insert(v);
                }
                for &w in g.neighbors(v) {
                    if w != k && w != l && comp[w] == usize::MAX {
                        comp[w] = s;
                        queue.push_back(w);
                    }
                }
            }
            if let (Some(a), Some(b)) = (middle, outer) {
                let path = bfs_path(g, a, b, k, l);
                return Ok(Err(PathSeparationViolation { path, edge: (k, l) }));
            }
        }
    }
    Ok(Ok(()))
}

fn bfs_path(g: &Graph, a: usize, b: usize, k: usize, l: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; g.n() + 1];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if w != k && w != l && parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![b];
    let mut x = b;
    while x != a {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_named, parse_graph, Named};

    fn cycle(n: usize) -> Graph {
        gen_named(Named::Cycle(n)).unwrap()
    }

    #[test]
    fn k4_is_not_outerplanar() {
        let k4 = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(test_outerplanar(&k4).is_err());
        let k23 = Graph::from_edges(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        assert!(matches!(test_outerplanar(&k23), Err(NotOuterplanar::ApexNonplanar { .. })));
    }

    #[test]
    fn c4_boundary() {
        let emb = test_outerplanar(&cycle(4)).unwrap();
        assert_eq!(emb.blocks, vec![vec![1, 2, 3, 4]]);
        let lab = nice_labeling(&cycle(4), &emb).unwrap();
        assert_eq!(lab.order, vec![1, 2, 3, 4]);
    }

    #[test]
    fn separation_examples() {
        let c4 = cycle(4);
        assert_eq!(check_separation(&c4, &[1, 2, 3, 4]).unwrap(), Ok(()));
        assert_eq!(
            check_separation(&c4, &[1, 3, 2, 4]).unwrap(),
            Err(SeparationViolation { edge: (1, 2), other: (3, 4) })
        );
        assert!(check_path_separation(&c4, &[1, 3, 2, 4]).unwrap().is_err());
        assert!(check_separation(&c4, &[1, 1, 2, 3]).is_err());
        let star = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(check_separation(&star, &[3, 1, 4, 2]).unwrap(), Ok(()));
        let edge = gen_named(Named::Path(2)).unwrap();
        assert_eq!(check_path_separation(&edge, &[2, 1]).unwrap(), Ok(()));
    }

    #[test]
    fn nine_vertex_triangulation_is_outerplanar() {
        let g = parse_graph("9 15\n1 2\n2 4\n3 6\n6 7\n7 8\n4 5\n1 3\n2 3\n3 4\n3 5\n5 6\n5 7\n5 8\n8 9\n5 9\n").unwrap();
        let emb = test_outerplanar(&g).unwrap();
        let lab = nice_labeling(&g, &emb).unwrap();
        assert_eq!(check_separation(&g, &lab.order).unwrap(), Ok(()));
        assert_eq!(emb.rotation(&g, 1), vec![2, 3]);
    }

    #[test]
    fn disconnected_labeling_is_an_error() {
        let g = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        let emb = test_outerplanar(&g).unwrap();
        assert_eq!(emb.walks.len(), 2);
        assert_eq!(nice_labeling(&g, &emb), Err(LabelingError::Disconnected));
    }
}
