//! Finite multigraphs, their oriented arcs, basic invariants and the plain
//! text edge-list format.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num::Zero;
use serde::Serialize;

use crate::error::{Error, ParseErrorKind, Result};
use crate::matrix::IntMatrix;

/// Undirected multigraph on vertices `0..vertex_count`. Loops and parallel
/// edges are allowed; edge order is significant because it fixes the arc order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&bad) = edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .find(|&x| x >= vertex_count)
            .as_ref()
        {
            return Err(Error::InfeasibleParameters(format!(
                "endpoint {bad} out of range for {vertex_count} vertices"
            )));
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree of every vertex; a loop contributes 2.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Neighbour lists with edge ids; a loop appears twice at its vertex.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let adj = self.incidence();
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// Length of the shortest essential cycle, `None` for a forest.
    ///
    /// Loops give 1 and parallel pairs give 2. Otherwise a BFS runs from every
    /// root; a non-tree edge `(v, w)` closes a cycle of length at most
    /// `d(v) + d(w) + 1`, and the minimum over all roots is exact.
    pub fn girth(&self) -> Option<usize> {
        if self.edges.iter().any(|&(u, v)| u == v) {
            return Some(1);
        }
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.edges {
            if !seen.insert((u.min(v), u.max(v))) {
                return Some(2);
            }
        }
        let adj = self.incidence();
        let mut best: Option<usize> = None;
        for root in 0..self.vertex_count {
            let mut dist = vec![usize::MAX; self.vertex_count];
            let mut parent_edge = vec![usize::MAX; self.vertex_count];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[v] >= b) {
                    break;
                }
                for &(w, id) in &adj[v] {
                    if id == parent_edge[v] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent_edge[w] = id;
                        queue.push_back(w);
                    } else {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn stats(&self) -> GraphStats {
        compute_stats(self)
    }
}

/// The `2m` arcs in the order `e_1, e_1^-1, ..., e_m, e_m^-1`: arc `2i` runs
/// along edge `i` as written (`u -> v`), arc `2i + 1` is its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcTable {
    origin: Vec<usize>,
    terminus: Vec<usize>,
}

impl ArcTable {
    pub fn arc_count(&self) -> usize {
        self.origin.len()
    }

    pub fn origin(&self, arc: usize) -> usize {
        self.origin[arc]
    }

    pub fn terminus(&self, arc: usize) -> usize {
        self.terminus[arc]
    }

    pub fn inverse(&self, arc: usize) -> usize {
        arc ^ 1
    }

    pub fn edge_of(&self, arc: usize) -> usize {
        arc / 2
    }

    /// Arcs leaving each vertex, in arc order.
    pub fn out_arcs(&self, vertex_count: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); vertex_count];
        for (arc, &o) in self.origin.iter().enumerate() {
            out[o].push(arc);
        }
        out
    }
}

pub fn build_arc_table(g: &Graph) -> ArcTable {
    let mut origin = Vec::with_capacity(2 * g.edge_count());
    let mut terminus = Vec::with_capacity(2 * g.edge_count());
    for &(u, v) in &g.edges {
        origin.extend([u, v]);
        terminus.extend([v, u]);
    }
    ArcTable { origin, terminus }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    /// Common degree when the graph is regular.
    pub regular_degree: Option<usize>,
    /// `None` means infinite girth (a forest).
    pub girth: Option<usize>,
    pub connected: bool,
    /// `m - n + 1`, only defined for connected graphs.
    pub betti: Option<i64>,
}

impl GraphStats {
    pub fn is_regular(&self) -> bool {
        self.regular_degree.is_some()
    }

    pub fn girth_exceeds(&self, bound: usize) -> bool {
        self.girth.is_none_or(|g| g > bound)
    }
}

pub fn compute_stats(g: &Graph) -> GraphStats {
    let degrees = g.degrees();
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    let regular_degree = match degrees.first() {
        Some(&d) if degrees.iter().all(|&x| x == d) => Some(d),
        _ => None,
    };
    let connected = g.is_connected();
    let betti = connected.then(|| g.edge_count() as i64 - g.vertex_count() as i64 + 1);
    GraphStats {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        degrees,
        min_degree,
        regular_degree,
        girth: g.girth(),
        connected,
        betti,
    }
}

/// Strongly connected components (Tarjan, iterative), in the order they close.
pub fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        // (vertex, position in its adjacency list)
        let mut call = vec![(root, 0usize)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = adj[v].get(*pos) {
                *pos += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// Whether the digraph of a square matrix (row `e` -> column `f` on a nonzero
/// entry) is one strongly connected component. The empty and single-vertex
/// digraphs count as strongly connected.
pub fn strongly_connected(m: &IntMatrix) -> Result<bool> {
    let n = m.ensure_square()?;
    if n <= 1 {
        return Ok(true);
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| !m[(i, j)].is_zero()).collect())
        .collect();
    Ok(tarjan_scc(&adj).len() == 1)
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Lines starting with `#` and blank lines are skipped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse_err = |line, kind| Error::Parse { line, kind };
    let number = |line: usize, tok: &str| -> Result<usize> {
        tok.parse::<usize>()
            .map_err(|_| parse_err(line, ParseErrorKind::InvalidToken(tok.to_string())))
    };

    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, ParseErrorKind::MissingHeader))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(hline, ParseErrorKind::MalformedHeader));
    }
    let n = number(hline, toks[0])?;
    let m = number(hline, toks[1])?;

    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, text) in lines {
        last_line = line;
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(line, ParseErrorKind::MalformedEdge));
        }
        let u = number(line, toks[0])?;
        let v = number(line, toks[1])?;
        for endpoint in [u, v] {
            if endpoint >= n {
                return Err(parse_err(
                    line,
                    ParseErrorKind::EndpointOutOfRange {
                        endpoint,
                        vertex_count: n,
                    },
                ));
            }
        }
        if edges.len() == m {
            return Err(parse_err(
                line,
                ParseErrorKind::EdgeCountMismatch {
                    expected: m,
                    found: m + 1,
                },
            ));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            ParseErrorKind::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            },
        ));
    }
    Graph::new(n, edges)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count, g.edge_count());
    for &(u, v) in &g.edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
