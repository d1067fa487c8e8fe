//! Simple undirected graphs on vertices `1..=n`, the edge-list text format,
//! generators for the named families and random instances, and induced
//! subgraph search.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Undirected simple graph. Vertices are `1..=n`; adjacency lists are sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    Duplicate(usize, usize),
    #[error("vertex {0} out of range 1..={1}")]
    OutOfRange(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed line {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![Vec::new(); n + 1] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(GraphError::OutOfRange(w, self.n));
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::Duplicate(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != 0 && u <= self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vs`, relabeled `1..=vs.len()` in the given order.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut pos = vec![0; self.n + 1];
        for (i, &v) in vs.iter().enumerate() {
            pos[v] = i + 1;
        }
        let mut g = Graph::empty(vs.len());
        for (i, &v) in vs.iter().enumerate() {
            g.adj[i + 1] = self.adj[v].iter().filter(|&&w| pos[w] != 0).map(|&w| pos[w]).collect();
            g.adj[i + 1].sort_unstable();
        }
        g
    }

    /// `perm[v]` is the new name of vertex `v`; `perm[0]` is ignored.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in self.vertices() {
            g.adj[perm[v]] = self.adj[v].iter().map(|&w| perm[w]).collect();
            g.adj[perm[v]].sort_unstable();
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Serializes to the edge-list format accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Parses `"n m"` followed by `m` lines `"u v"`. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let two = |line: usize, l: &str| -> Result<(usize, usize), ParseError> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(ParseError::Malformed { line, text: l.to_string() }),
        }
    };
    let (hl, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = two(hl, header)?;
    let mut g = Graph::empty(n);
    let mut found = 0;
    for (line, l) in lines {
        let (u, v) = two(line, l)?;
        g.add_edge(u, v).map_err(|e| match e {
            GraphError::Loop(vertex) => ParseError::Loop { line, vertex },
            GraphError::Duplicate(u, v) => ParseError::Duplicate { line, u, v },
            GraphError::OutOfRange(vertex, n) => ParseError::OutOfRange { line, vertex, n },
        })?;
        found += 1;
    }
    if found != m {
        return Err(ParseError::EdgeCount { expected: m, found });
    }
    Ok(g)
}

/// Named graph families: suns, cycles, paths and the forbidden patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    /// `n`-sun: `x_i = i`, `y_i = n + i`.
    NSun(usize),
    Cycle(usize),
    Path(usize),
    /// `d1..d5 = 1..5`.
    M1,
    /// `a1..a4 = 1..4`, then `b2, b3, b4`, then `b1` (unless `ell = 0`), then `c1..c_{2ell-1}`.
    M1Ell(usize),
    /// `a..g = 1..7`.
    M2,
    /// `a..f = 1..6`.
    M3,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{family}: parameter {got} below minimum {min}")]
pub struct ParamError {
    pub family: &'static str,
    pub got: usize,
    pub min: usize,
}

fn at_least(family: &'static str, got: usize, min: usize) -> Result<(), ParamError> {
    if got < min {
        Err(ParamError { family, got, min })
    } else {
        Ok(())
    }
}

pub fn gen_named(family: Named) -> Result<Graph, ParamError> {
    let edges: Vec<(usize, usize)>;
    let n;
    match family {
        Named::NSun(k) => {
            at_least("nsun", k, 3)?;
            n = 2 * k;
            let mut e = Vec::new();
            for i in 1..=k {
                for j in i + 1..=k {
                    e.push((i, j));
                }
            }
            for i in 1..=k {
                e.push((i, k + i));
                e.push((i % k + 1, k + i));
            }
            edges = e;
        }
        Named::Cycle(r) => {
            at_least("cycle", r, 3)?;
            n = r;
            edges = (1..=r).map(|i| (i, i % r + 1)).collect();
        }
        Named::Path(k) => {
            at_least("path", k, 1)?;
            n = k;
            edges = (1..k).map(|i| (i, i + 1)).collect();
        }
        Named::M1 => {
            n = 5;
            edges = vec![(1, 2), (1, 3), (2, 3), (3, 4), (4, 2), (4, 5), (5, 2)];
        }
        Named::M1Ell(ell) => {
            let (a1, a2, a3, a4) = (1, 2, 3, 4);
            let (b2, b3, b4) = (5, 6, 7);
            let b1 = if ell == 0 { a1 } else { 8 };
            let first_c = 9;
            n = if ell == 0 { 7 } else { 7 + 2 * ell };
            let c = |i: usize| -> usize {
                if i == 0 {
                    a1
                } else if i == 2 * ell {
                    b1
                } else {
                    first_c + i - 1
                }
            };
            let mut e = vec![(a1, a2), (a2, a3), (a3, a4), (a4, a1), (a1, a3)];
            e.extend([(b1, b2), (b2, b3), (b3, b4), (b4, b1), (b1, b3)]);
            for i in 1..=ell {
                let (p, q, r) = (c(2 * i - 2), c(2 * i - 1), c(2 * i));
                e.extend([(p, q), (p, r), (q, r)]);
            }
            edges = e;
        }
        Named::M2 => {
            n = 7;
            edges = vec![(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)];
        }
        Named::M3 => {
            n = 6;
            edges = vec![(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)];
        }
    }
    Ok(Graph::from_edges(n, edges).expect("generator emits a simple graph"))
}

/// Random instance families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomFamily {
    MaximalOuterplanar,
    Cactus,
    ConnectedOuterplanar,
}

impl RandomFamily {
    fn tag(self) -> u64 {
        match self {
            RandomFamily::MaximalOuterplanar => 0x6d6f70,
            RandomFamily::Cactus => 0x636163,
            RandomFamily::ConnectedOuterplanar => 0x636f70,
        }
    }
}

pub fn gen_random(family: RandomFamily, n: usize, seed: u64) -> Result<Graph, ParamError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ family.tag().rotate_left(40));
    match family {
        RandomFamily::MaximalOuterplanar => {
            at_least("maximal_outerplanar", n, 3)?;
            Ok(random_triangulation(n, &mut rng))
        }
        RandomFamily::ConnectedOuterplanar => {
            at_least("connected_outerplanar", n, 1)?;
            if n < 3 {
                return Ok(gen_named(Named::Path(n)).unwrap());
            }
            let t = random_triangulation(n, &mut rng);
            let keep: f64 = rng.gen();
            let mut edges: Vec<_> = t.edges().collect();
            edges.shuffle(&mut rng);
            let mut dsu: Vec<usize> = (0..=n).collect();
            fn find(d: &mut [usize], mut x: usize) -> usize {
                while d[x] != x {
                    d[x] = d[d[x]];
                    x = d[x];
                }
                x
            }
            let mut g = Graph::empty(n);
            for (u, v) in edges {
                let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
                if ru != rv {
                    dsu[ru] = rv;
                    g.add_edge(u, v).unwrap();
                } else if rng.gen_bool(keep) {
                    g.add_edge(u, v).unwrap();
                }
            }
            Ok(g.relabel(&random_perm(n, &mut rng)))
        }
        RandomFamily::Cactus => {
            at_least("cactus", n, 1)?;
            Ok(random_cactus(n, &mut rng))
        }
    }
}

fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..=n).collect();
    p[1..].shuffle(rng);
    p
}

/// Uniform triangulation of the convex polygon `1..=n` through a uniformly
/// random Lukasiewicz word: shuffle `n - 2` internal and `n - 1` leaf
/// symbols, then take the unique rotation whose proper prefixes stay
/// nonnegative.
fn random_triangulation(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut word: Vec<bool> = std::iter::repeat(true)
        .take(n - 2)
        .chain(std::iter::repeat(false).take(n - 1))
        .collect();
    word.shuffle(rng);
    let (mut sum, mut min, mut at) = (0i64, 0i64, 0usize);
    for (i, &internal) in word.iter().enumerate() {
        sum += if internal { 1 } else { -1 };
        if sum < min {
            min = sum;
            at = i + 1;
        }
    }
    let len = word.len();
    word.rotate_left(at % len);
    triangulation_from_word(n, &word)
}

/// Decodes a preorder Lukasiewicz word (`true` = internal node) of a full
/// binary tree into the triangulation of the polygon `1..=n`.
fn triangulation_from_word(n: usize, word: &[bool]) -> Graph {
    let len = word.len();
    let mut leaves = vec![0usize; len];
    let mut stack = Vec::new();
    for i in (0..len).rev() {
        if word[i] {
            let l = stack.pop().unwrap();
            let r = stack.pop().unwrap();
            leaves[i] = l + r;
        } else {
            leaves[i] = 1;
        }
        stack.push(leaves[i]);
    }
    let mut g = Graph::empty(n);
    g.add_edge(1, n).unwrap();
    let mut pending = vec![(1usize, n)];
    for i in 0..len {
        let (a, b) = pending.pop().unwrap();
        if word[i] {
            let k = a + leaves[i + 1];
            g.add_edge(a, k).unwrap();
            g.add_edge(k, b).unwrap();
            pending.push((k, b));
            pending.push((a, k));
        }
    }
    g
}

/// All triangulations of the convex polygon `1..=n` (`n >= 3`), each labeled
/// by polygon order. There are Catalan(n - 2) of them.
pub fn all_triangulations(n: usize) -> Vec<Graph> {
    assert!(n >= 3);
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(2 * n - 3);
    fn rec(word: &mut Vec<bool>, open: usize, internal_left: usize, n: usize, out: &mut Vec<Graph>) {
        // open = number of subtrees still to be filled
        if open == 0 {
            if internal_left == 0 {
                out.push(triangulation_from_word(n, word));
            }
            return;
        }
        if internal_left > 0 {
            word.push(true);
            rec(word, open + 1, internal_left - 1, n, out);
            word.pop();
        }
        if open > 1 || internal_left == 0 {
            word.push(false);
            rec(word, open - 1, internal_left, n, out);
            word.pop();
        }
    }
    rec(&mut word, 1, n - 2, n, &mut out);
    out
}

/// Random tree skeleton (parents drawn from a sliding window so that both
/// path-like and bushy trees occur), then tree paths closed into cycles as
/// long as no tree edge is reused.
fn random_cactus(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let window = *[1usize, 2, 3, 6, n].choose(rng).unwrap();
    let mut parent = vec![0usize; n + 1];
    let mut depth = vec![0usize; n + 1];
    for v in 2..=n {
        let lo = v.saturating_sub(window).max(1);
        parent[v] = rng.gen_range(lo..v);
        depth[v] = depth[parent[v]] + 1;
    }
    let mut g = Graph::empty(n);
    for v in 2..=n {
        g.add_edge(parent[v], v).unwrap();
    }
    // used[v]: tree edge (v, parent[v]) already lies on a cycle
    let mut used = vec![false; n + 1];
    let density: f64 = rng.gen_range(0.0..1.0);
    let attempts = (n as f64 * density) as usize;
    for _ in 0..attempts {
        let u = rng.gen_range(1..=n);
        let len = rng.gen_range(2..=6usize);
        if depth[u] < len {
            continue;
        }
        let mut w = u;
        let mut ok = true;
        for _ in 0..len {
            if used[w] {
                ok = false;
                break;
            }
            w = parent[w];
        }
        if !ok || g.has_edge(u, w) {
            continue;
        }
        let mut x = u;
        while x != w {
            used[x] = true;
            x = parent[x];
        }
        g.add_edge(u, w).unwrap();
    }
    g.relabel(&random_perm(n, rng))
}

/// Isomorphism-invariant encoding: the lexicographically smallest upper
/// adjacency triangle over all vertex orders that respect a stable color
/// refinement. Exponential in the size of the largest color class; meant
/// for the small graphs of exhaustive checks.
pub fn canonical_form(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut color = vec![0usize; n + 1];
    for v in g.vertices() {
        color[v] = g.degree(v);
    }
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..=n)
            .map(|v| {
                if v == 0 {
                    return (0, Vec::new());
                }
                let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                ns.sort_unstable();
                (color[v], ns)
            })
            .collect();
        let mut keys: Vec<&(usize, Vec<usize>)> = sig[1..].iter().collect();
        keys.sort();
        keys.dedup();
        let next: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { keys.binary_search(&&sig[v]).unwrap() }).collect();
        let classes = |c: &[usize]| c[1..].iter().collect::<std::collections::BTreeSet<_>>().len();
        let done = classes(&next) == classes(&color);
        color = next;
        if done {
            break;
        }
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut by_color: Vec<usize> = g.vertices().collect();
    by_color.sort_by_key(|&v| (color[v], v));
    for v in by_color {
        match cells.last_mut() {
            Some(c) if color[c[0]] == color[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let encode = |order: &[usize]| -> Vec<bool> {
        let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                bits.push(g.has_edge(order[i], order[j]));
            }
        }
        bits
    };
    let mut best: Option<Vec<bool>> = None;
    fn permute(cells: &mut [Vec<usize>], idx: usize, k: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if idx == cells.len() {
            visit(cells);
            return;
        }
        if k == cells[idx].len() {
            permute(cells, idx + 1, 0, visit);
            return;
        }
        for i in k..cells[idx].len() {
            cells[idx].swap(k, i);
            permute(cells, idx, k + 1, visit);
            cells[idx].swap(k, i);
        }
    }
    permute(&mut cells, 0, 0, &mut |cs| {
        let order: Vec<usize> = cs.iter().flatten().copied().collect();
        let bits = encode(&order);
        if best.as_ref().is_none_or(|b| bits < *b) {
            best = Some(bits);
        }
    });
    best.unwrap_or_default()
}

/// Connected graphs on `n` vertices, one per isomorphism class. Enumerates
/// all labeled graphs, so only practical for `n <= 6`.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n));
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        if (mask.count_ones() as usize) < n - 1 {
            continue;
        }
        let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
        if g.is_connected() && seen.insert(canonical_form(&g)) {
            out.push(g);
        }
    }
    out
}

/// Cacti on `n` vertices, one per isomorphism class: every cactus with at
/// least two vertices arises from a smaller one by attaching a pendant edge
/// or a new cycle at a single vertex.
pub fn all_cacti(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut by_size: Vec<Vec<Graph>> = vec![Vec::new(); n + 1];
    by_size[1].push(Graph::empty(1));
    for m in 2..=n {
        let mut seen = std::collections::HashSet::new();
        let mut found = Vec::new();
        for h in 1..m {
            let added = m - h;
            for base in &by_size[h] {
                for v in base.vertices() {
                    let mut g = Graph::empty(m);
                    for (a, b) in base.edges() {
                        g.add_edge(a, b).unwrap();
                    }
                    let mut prev = v;
                    for w in h + 1..=m {
                        g.add_edge(prev, w).unwrap();
                        prev = w;
                    }
                    if added >= 2 {
                        g.add_edge(prev, v).unwrap();
                    }
                    if seen.insert(canonical_form(&g)) {
                        found.push(g);
                    }
                }
            }
        }
        by_size[m] = found;
    }
    std::mem::take(&mut by_size[n])
}

/// Forbidden-subgraph tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ObstructionKind {
    S3,
    M1,
    M1Ell,
    M2,
    M3,
    CycleGe4,
}

/// An induced copy of a named pattern: `vertex_map[i]` is the host vertex for
/// pattern vertex `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: ObstructionKind,
    pub vertex_map: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
}

impl Witness {
    /// The pattern graph this witness refers to.
    pub fn pattern(&self) -> Graph {
        match self.kind {
            ObstructionKind::S3 => gen_named(Named::NSun(3)).unwrap(),
            ObstructionKind::M1 => gen_named(Named::M1).unwrap(),
            ObstructionKind::M1Ell => gen_named(Named::M1Ell(self.ell.unwrap_or(0))).unwrap(),
            ObstructionKind::M2 => gen_named(Named::M2).unwrap(),
            ObstructionKind::M3 => gen_named(Named::M3).unwrap(),
            ObstructionKind::CycleGe4 => gen_named(Named::Cycle(self.vertex_map.len())).unwrap(),
        }
    }

    /// Re-checks that the map is an induced embedding of the pattern.
    pub fn verify(&self, host: &Graph) -> bool {
        is_induced_embedding(host, &self.pattern(), &self.vertex_map)
    }
}

pub fn is_induced_embedding(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.n() {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !map.iter().all(|&v| v >= 1 && v <= host.n() && seen.insert(v)) {
        return false;
    }
    for i in 1..=pattern.n() {
        for j in i + 1..=pattern.n() {
            if pattern.has_edge(i, j) != host.has_edge(map[i - 1], map[j - 1]) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest induced embedding of `pattern` into `host`
/// (pattern vertices mapped in ascending order), if any.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    let mut map = Vec::with_capacity(k);
    let mut used = vec![false; host.n() + 1];
    fn rec(host: &Graph, pat: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len() + 1;
        if i > pat.n() {
            return true;
        }
        for v in host.vertices() {
            if used[v] || host.degree(v) < pat.degree(i) {
                continue;
            }
            let fits = map
                .iter()
                .enumerate()
                .all(|(j, &w)| pat.has_edge(i, j + 1) == host.has_edge(v, w));
            if !fits {
                continue;
            }
            used[v] = true;
            map.push(v);
            if rec(host, pat, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
    if rec(host, pattern, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}
