//! Problem instances: simple undirected graphs on at most 64 vertices,
//! vertex subsets as bitmasks, independent-set predicates and the classical
//! baselines (minimum-degree greedy and an exact branch-and-bound solver).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seed::{seeded_rng, unit_f64};

/// Vertex masks are `u64`, so graphs are capped at 64 vertices.
pub const MAX_VERTICES: usize = 64;

/// Default cap on the number of independent sets [`Graph::enumerate_independent_sets`]
/// will materialise.
pub const DEFAULT_IS_LIMIT: usize = 1 << 24;

/// Default vertex-count guard for [`Graph::exact_mis`].
pub const DEFAULT_EXACT_MIS_LIMIT: usize = 40;

/// A subset of vertices; bit `i` set means vertex `i` is selected (atom `i`
/// excited). Doubles as the computational-basis index.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    /// The first `n` vertices.
    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    /// True when no bit at or above position `n` is set.
    pub fn fits(self, n: usize) -> bool {
        self.0 & !low_bits(n) == 0
    }

    /// Selected vertices in ascending order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        Bits(self.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over set bit positions, lowest first.
#[derive(Clone, Copy)]
struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Simple undirected graph. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted ascending, each pair with `i < j`.
    edges: Vec<(usize, usize)>,
    neighbors: Vec<u64>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and endpoints
    /// outside `0..n`. Edge orientation is irrelevant.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: format!("graph with {n} vertices"),
                limit: MAX_VERTICES,
            });
        }
        let mut neighbors = vec![0u64; n];
        let mut list = Vec::new();
        for (a, b) in edges {
            let (i, j) = if a <= b { (a, b) } else { (b, a) };
            if j >= n {
                return Err(Error::Domain(format!("edge ({a}, {b}) has an endpoint outside 0..{n}")));
            }
            if i == j {
                return Err(Error::Domain(format!("self-loop at vertex {i}")));
            }
            if neighbors[i] & (1u64 << j) != 0 {
                return Err(Error::Domain(format!("duplicate edge ({i}, {j})")));
            }
            neighbors[i] |= 1u64 << j;
            neighbors[j] |= 1u64 << i;
            list.push((i, j));
        }
        list.sort_unstable();
        Ok(Graph { n, edges: list, neighbors })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// Erdős–Rényi `G(n, p)`: each of the `n(n-1)/2` pairs, visited in
    /// lexicographic order `(0,1), (0,2), …`, is kept when a uniform
    /// 53-bit draw from `ChaCha8Rng::seed_from_u64(seed)` is below `p`.
    pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!("edge probability {p} outside [0, 1]")));
        }
        let mut rng = seeded_rng(seed);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if unit_f64(&mut rng) < p {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbour bitmask of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.neighbors[v]
    }

    pub fn neighbor_masks(&self) -> &[u64] {
        &self.neighbors
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.neighbors[i] & (1u64 << j) != 0
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        debug_assert!(s.fits(self.n));
        s.vertices().all(|v| self.neighbors[v] & s.mask() == 0)
    }

    /// Number of edges with both endpoints in `s`.
    pub fn violated_edges(&self, s: VertexSet) -> usize {
        debug_assert!(s.fits(self.n));
        let twice: u32 = s
            .vertices()
            .map(|v| (self.neighbors[v] & s.mask()).count_ones())
            .sum();
        (twice / 2) as usize
    }

    /// Independent and no vertex can be added.
    pub fn is_maximal_independent(&self, s: VertexSet) -> bool {
        if !self.is_independent(s) {
            return false;
        }
        (0..self.n)
            .filter(|&v| !s.contains(v))
            .all(|v| self.neighbors[v] & s.mask() != 0)
    }

    /// All independent sets, ascending by mask, empty set first.
    pub fn enumerate_independent_sets(&self) -> Result<Vec<VertexSet>> {
        self.enumerate_independent_sets_with_limit(DEFAULT_IS_LIMIT)
    }

    pub fn enumerate_independent_sets_with_limit(&self, limit: usize) -> Result<Vec<VertexSet>> {
        let mut out = Vec::new();
        self.collect_sets(low_bits(self.n), 0, limit, &mut out)?;
        out.sort_unstable();
        Ok(out.into_iter().map(VertexSet).collect())
    }

    fn collect_sets(&self, cand: u64, current: u64, limit: usize, out: &mut Vec<u64>) -> Result<()> {
        if out.len() >= limit {
            return Err(Error::Capacity {
                what: "independent-set enumeration".into(),
                limit,
            });
        }
        out.push(current);
        for v in Bits(cand) {
            // Only extend with higher labels so each set is produced once.
            let higher = cand & !low_bits(v + 1);
            self.collect_sets(higher & !self.neighbors[v], current | (1u64 << v), limit, out)?;
        }
        Ok(())
    }

    /// Minimum-degree greedy: repeatedly take the vertex of least degree in
    /// the residual induced subgraph (smallest label on ties), then delete it
    /// and its residual neighbours.
    pub fn greedy_mis(&self) -> VertexSet {
        VertexSet(greedy_within(&self.neighbors, low_bits(self.n)))
    }

    /// A maximum independent set; among all maximum sets the one whose sorted
    /// vertex list is lexicographically smallest.
    pub fn exact_mis(&self) -> Result<VertexSet> {
        self.exact_mis_with_limit(DEFAULT_EXACT_MIS_LIMIT)
    }

    pub fn exact_mis_with_limit(&self, max_vertices: usize) -> Result<VertexSet> {
        if self.n > max_vertices {
            return Err(Error::Capacity {
                what: format!("exact MIS on {} vertices", self.n),
                limit: max_vertices,
            });
        }
        let solver = MisSolver { nbr: &self.neighbors };
        let mut residual = low_bits(self.n);
        let mut remaining = solver.alpha(residual);
        let mut chosen = 0u64;
        // Walk labels upwards, keeping a vertex whenever an optimum survives.
        for v in 0..self.n {
            if remaining == 0 {
                break;
            }
            if residual & (1u64 << v) == 0 {
                continue;
            }
            let without_closed = residual & !(self.neighbors[v] | (1u64 << v));
            if 1 + solver.alpha(without_closed) == remaining {
                chosen |= 1u64 << v;
                residual = without_closed;
                remaining -= 1;
            } else {
                residual &= !(1u64 << v);
            }
        }
        Ok(VertexSet(chosen))
    }

    /// Independence number α(g).
    pub fn independence_number(&self) -> Result<usize> {
        Ok(self.exact_mis()?.len())
    }

    /// Text form: `n m`, then one `i j` line per edge in ascending order.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(i, j) in &self.edges {
            s.push_str(&format!("{i} {j}\n"));
        }
        s
    }

    /// Parses the text form. Blank lines and `#` comments are skipped; edges
    /// may come in any order but must not repeat.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        if n > MAX_VERTICES {
            return Err(Error::Parse {
                line: hline,
                message: format!("{n} vertices exceeds the limit of {MAX_VERTICES}"),
            });
        }

        let mut seen = vec![0u64; n];
        let mut edges = Vec::with_capacity(m);
        let mut last_line = hline;
        for (line, body) in lines {
            last_line = line;
            let (a, b) = parse_pair(line, body)?;
            let bad = |message: String| Error::Parse { line, message };
            if a >= n || b >= n {
                return Err(bad(format!("endpoint outside 0..{n}")));
            }
            if a == b {
                return Err(bad(format!("self-loop at vertex {a}")));
            }
            if seen[a] & (1u64 << b) != 0 {
                return Err(bad(format!("duplicate edge ({a}, {b})")));
            }
            seen[a] |= 1u64 << b;
            seen[b] |= 1u64 << a;
            edges.push((a, b));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: last_line,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::from_text(s)
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("expected two integers, got `{body}`"),
        })?;
        tok.parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("`{tok}` is not a nonnegative integer"),
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, got `{body}`"),
        });
    }
    Ok((a, b))
}

/// Minimum-degree greedy on the subgraph induced by `cand`.
fn greedy_within(nbr: &[u64], mut cand: u64) -> u64 {
    let mut chosen = 0u64;
    while cand != 0 {
        let mut best = usize::MAX;
        let mut best_deg = u32::MAX;
        for v in Bits(cand) {
            let d = (nbr[v] & cand).count_ones();
            if d < best_deg {
                best_deg = d;
                best = v;
            }
        }
        chosen |= 1u64 << best;
        cand &= !(nbr[best] | (1u64 << best));
    }
    chosen
}

/// Branch-and-bound for the independence number of induced subgraphs.
struct MisSolver<'a> {
    nbr: &'a [u64],
}

impl MisSolver<'_> {
    fn alpha(&self, cand: u64) -> usize {
        let mut best = greedy_within(self.nbr, cand).count_ones() as usize;
        self.branch(cand, 0, &mut best);
        best
    }

    fn branch(&self, cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + self.clique_cover(cand) <= *best {
            return;
        }
        let (v, deg) = Bits(cand)
            .map(|v| (v, (self.nbr[v] & cand).count_ones()))
            .min_by_key(|&(_, d)| d)
            .expect("cand is nonempty");
        if deg <= 1 {
            // Some maximum set contains a vertex of degree at most one.
            self.branch(cand & !(self.nbr[v] | (1u64 << v)), size + 1, best);
            return;
        }
        // Every maximal set meets the closed neighbourhood of v.
        for u in Bits((self.nbr[v] | (1u64 << v)) & cand) {
            self.branch(cand & !(self.nbr[u] | (1u64 << u)), size + 1, best);
        }
    }

    /// Size of a greedy clique cover of `cand`; an upper bound on α.
    fn clique_cover(&self, cand: u64) -> usize {
        let mut cliques: [u64; 64] = [0; 64];
        let mut count = 0;
        for v in Bits(cand) {
            match cliques[..count].iter_mut().find(|c| **c & !self.nbr[v] == 0) {
                Some(c) => *c |= 1u64 << v,
                None => {
                    cliques[count] = 1u64 << v;
                    count += 1;
                }
            }
        }
        count
    }
}
