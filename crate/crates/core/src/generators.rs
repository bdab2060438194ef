//! Named graph families. Every generator emits its edges as `(min, max)` pairs
//! in lexicographic order, so the arc order of a family member is canonical.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_RETRY_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    Heawood,
    McGee,
    Circulant { n: usize, connections: Vec<usize> },
    RandomRegular(RandomRegular),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomRegular {
    pub n: usize,
    pub k: usize,
    pub min_girth: usize,
    pub seed: u64,
    pub retry_cap: usize,
}

impl RandomRegular {
    pub fn new(n: usize, k: usize, min_girth: usize, seed: u64) -> Self {
        Self {
            n,
            k,
            min_girth,
            seed,
            retry_cap: DEFAULT_RETRY_CAP,
        }
    }
}

pub fn generate(family: &Family) -> Result<Graph> {
    match family {
        Family::Cycle(n) => cycle(*n),
        Family::Complete(n) => complete(*n),
        Family::CompleteBipartite(a, b) => complete_bipartite(*a, *b),
        Family::Petersen => petersen(),
        Family::Heawood => lcf(14, &[5, -5]),
        Family::McGee => lcf(24, &[12, 7, -7]),
        Family::Circulant { n, connections } => circulant(*n, connections),
        Family::RandomRegular(params) => random_regular(params),
    }
}

/// Sorts an edge list into the canonical lexicographic `(min, max)` order.
fn canonical(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    Graph::new(n, edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    match n {
        0 => Err(Error::InfeasibleParameters(
            "cycle needs at least one vertex".into(),
        )),
        1 => Graph::new(1, vec![(0, 0)]),
        _ => canonical(n, (0..n).map(|i| (i, (i + 1) % n))),
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    canonical(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    canonical(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))))
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Result<Graph> {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    canonical(10, outer.chain(spokes).chain(inner))
}

/// Cubic graph from LCF notation `[shifts]^(n / len)` on a Hamiltonian cycle.
pub fn lcf(n: usize, shifts: &[i64]) -> Result<Graph> {
    if n < 3 || shifts.is_empty() || !n.is_multiple_of(shifts.len()) {
        return Err(Error::InfeasibleParameters(format!(
            "LCF pattern of length {} does not tile {n} vertices",
            shifts.len()
        )));
    }
    let mut edges = BTreeSet::new();
    let ni = n as i64;
    for i in 0..n {
        edges.insert((i.min((i + 1) % n), i.max((i + 1) % n)));
        let j = (i as i64 + shifts[i % shifts.len()]).rem_euclid(ni) as usize;
        edges.insert((i.min(j), i.max(j)));
    }
    canonical(n, edges)
}

pub fn circulant(n: usize, connections: &[usize]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InfeasibleParameters(
            "circulant needs at least one vertex".into(),
        ));
    }
    if let Some(&bad) = connections.iter().find(|&&s| s == 0 || s > n / 2) {
        return Err(Error::InfeasibleParameters(format!(
            "connection {bad} outside 1..={}",
            n / 2
        )));
    }
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for &s in connections {
            let j = (i + s) % n;
            edges.insert((i.min(j), i.max(j)));
        }
    }
    canonical(n, edges)
}

/// Pairing-model sample of a simple `k`-regular graph with girth at least
/// `min_girth`, retried until one passes or the retry cap is spent.
pub fn random_regular(params: &RandomRegular) -> Result<Graph> {
    let RandomRegular {
        n,
        k,
        min_girth,
        seed,
        retry_cap,
    } = *params;
    if (n * k) % 2 == 1 {
        return Err(Error::InfeasibleParameters(format!("n*k = {} is odd", n * k)));
    }
    if k >= n && n > 0 {
        return Err(Error::InfeasibleParameters(format!(
            "a simple {k}-regular graph needs more than {k} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    for _ in 0..retry_cap {
        points.shuffle(&mut rng);
        let mut edges = BTreeSet::new();
        let mut simple = true;
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !edges.insert((u, v)) {
                simple = false;
                break;
            }
        }
        if !simple {
            continue;
        }
        let g = canonical(n, edges)?;
        if g.girth().is_none_or(|gi| gi >= min_girth) {
            return Ok(g);
        }
    }
    Err(Error::RetryCapExceeded(retry_cap))
}
