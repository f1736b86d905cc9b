//! Simple undirected graphs and the two random ensembles used by the experiments.
//!
//! Vertices are labeled `1..=n` at every interface. Internally adjacency is
//! stored per vertex in a 0-based vector, but nothing outside this module sees
//! that.

use std::collections::BTreeSet;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use rand::seq::index;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// 1-based vertex label.
pub type Vertex = usize;

/// Identifier of the pseudo-random generator used by every sampler in this crate.
pub const RNG_ID: &str = "ChaCha8Rng/rand_chacha-0.3";

/// Restart budget for generators that can paint themselves into a corner.
pub const MAX_RESTARTS: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("no simple {k}-regular graph on {n} vertices")]
    ImpossibleDegreeSequence { n: usize, k: usize },
    #[error("average degree {d} on {n} vertices needs more edges than a simple graph has")]
    TooManyEdges { n: usize, d: usize },
    #[error("average degree {d} on {n} vertices gives an odd degree sum")]
    OddHandshake { n: usize, d: usize },
    #[error("generator gave up after {0} restarts")]
    GenerationFailed(usize),
    #[error("graph file line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for GraphError {
    fn from(e: std::io::Error) -> Self {
        GraphError::Io(e.to_string())
    }
}

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair stored as `(u, v)` with `u < v`.
    edges: Vec<(Vertex, Vertex)>,
    /// `adj[v - 1]` is the sorted neighbor list of `v`.
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from unordered vertex pairs, rejecting loops, repeated
    /// pairs and out-of-range labels.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut seen = BTreeSet::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
        }
        Ok(Self::from_sorted_unique(n, seen.into_iter().collect()))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Self::from_sorted_unique(n, Vec::new())
    }

    fn from_sorted_unique(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn neighbors(&self, v: Vertex) -> Result<&[Vertex], GraphError> {
        self.check_vertex(v)?;
        Ok(&self.adj[v - 1])
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.neighbors(v).map(<[Vertex]>::len)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Re-checks the structural invariants: no loops, no parallel edges, and
    /// adjacency consistent with the edge list.
    pub fn validate(&self) -> Result<(), GraphError> {
        let mut seen = BTreeSet::new();
        for &(u, v) in &self.edges {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        for v in self.vertices() {
            for &u in &self.adj[v - 1] {
                if !seen.contains(&(u.min(v), u.max(v))) {
                    return Err(GraphError::Parse {
                        line: 0,
                        msg: format!("adjacency {v}-{u} has no matching edge"),
                    });
                }
            }
        }
        let adjacency_total: usize = self.adj.iter().map(Vec::len).sum();
        if adjacency_total != 2 * self.edges.len() {
            return Err(GraphError::Parse {
                line: 0,
                msg: "adjacency lists disagree with edge count".into(),
            });
        }
        Ok(())
    }

    /// Writes the `n m` / `u v` text format.
    pub fn write_to<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "{} {}", self.n, self.edges.len())?;
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}")?;
        }
        Ok(())
    }

    /// Reads the text format. Lines starting with `#` and blank lines are skipped.
    pub fn read_from<R: BufRead>(input: R) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut pairs = Vec::new();
        let mut last_line = 0;
        for (i, line) in input.lines().enumerate() {
            let line = line?;
            let lineno = i + 1;
            last_line = lineno;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (a, b) = parse_pair(trimmed, lineno)?;
            match header {
                None => header = Some((a, b)),
                Some((n, _)) => {
                    if a >= b {
                        return Err(GraphError::Parse {
                            line: lineno,
                            msg: format!("edge must be written with u < v, got {a} {b}"),
                        });
                    }
                    if b > n {
                        return Err(GraphError::VertexOutOfRange { vertex: b, n });
                    }
                    pairs.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: last_line,
            msg: "missing `n m` header".into(),
        })?;
        if pairs.len() != m {
            return Err(GraphError::Parse {
                line: last_line,
                msg: format!("header declares {m} edges, found {}", pairs.len()),
            });
        }
        Graph::from_edge_list(n, pairs)
    }
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), GraphError> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = fields.next().ok_or(GraphError::Parse {
            line: lineno,
            msg: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line: lineno,
            msg: format!("not a nonnegative integer: {tok:?}"),
        })
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(GraphError::Parse {
            line: lineno,
            msg: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut buf = Vec::new();
        self.write_to(&mut buf).map_err(|_| fmt::Error)?;
        f.write_str(&String::from_utf8_lossy(&buf))
    }
}

/// Which random graph family to draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnsembleKind {
    /// Every vertex has degree `k`.
    Regular(usize),
    /// Uniform over simple graphs with exactly `d * n / 2` edges.
    AverageDegree(usize),
}

impl EnsembleKind {
    /// Checks the parity (and simple-graph feasibility) constraints for size `n`.
    pub fn check_size(&self, n: usize) -> Result<(), GraphError> {
        match *self {
            EnsembleKind::Regular(k) => {
                if (n * k) % 2 == 1 || k >= n {
                    Err(GraphError::ImpossibleDegreeSequence { n, k })
                } else {
                    Ok(())
                }
            }
            EnsembleKind::AverageDegree(d) => {
                if (n * d) % 2 == 1 {
                    Err(GraphError::OddHandshake { n, d })
                } else if n * d / 2 > n * n.saturating_sub(1) / 2 {
                    Err(GraphError::TooManyEdges { n, d })
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn sample(
        &self,
        n: usize,
        strategy: RegularStrategy,
        rng: &mut ChaCha8Rng,
    ) -> Result<Graph, GraphError> {
        match *self {
            EnsembleKind::Regular(k) => random_regular_with(n, k, strategy, rng),
            EnsembleKind::AverageDegree(d) => random_average_degree_with(n, d, rng),
        }
    }
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnsembleKind::Regular(k) => write!(f, "regular-{k}"),
            EnsembleKind::AverageDegree(d) => write!(f, "avg-degree-{d}"),
        }
    }
}

/// How random regular graphs are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RegularStrategy {
    /// Repeatedly join a random pair of still-deficient, non-adjacent vertices.
    #[default]
    Greedy,
    /// Random perfect matching of degree stubs, rejecting loops and multi-edges.
    /// Uniform over labeled k-regular graphs.
    Pairing,
}

impl fmt::Display for RegularStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegularStrategy::Greedy => "greedy",
            RegularStrategy::Pairing => "pairing",
        })
    }
}

impl FromStr for RegularStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "greedy" => Ok(RegularStrategy::Greedy),
            "pairing" | "configuration" => Ok(RegularStrategy::Pairing),
            other => Err(format!("unknown generator strategy {other:?}")),
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random simple `k`-regular graph with the default (greedy) strategy.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph, GraphError> {
    random_regular_with(n, k, RegularStrategy::Greedy, &mut rng_from_seed(seed))
}

pub fn random_regular_with(
    n: usize,
    k: usize,
    strategy: RegularStrategy,
    rng: &mut ChaCha8Rng,
) -> Result<Graph, GraphError> {
    EnsembleKind::Regular(k).check_size(n)?;
    for _ in 0..MAX_RESTARTS {
        let attempt = match strategy {
            RegularStrategy::Greedy => greedy_attempt(n, k, rng),
            RegularStrategy::Pairing => pairing_attempt(n, k, rng),
        };
        if let Some(edges) = attempt {
            return Ok(Graph::from_sorted_unique(n, sorted(edges)));
        }
    }
    Err(GraphError::GenerationFailed(MAX_RESTARTS))
}

fn sorted(mut edges: Vec<(Vertex, Vertex)>) -> Vec<(Vertex, Vertex)> {
    edges.sort_unstable();
    edges
}

/// One run of the edge-addition process. `None` when the deficient vertices
/// left over are all mutually adjacent.
fn greedy_attempt(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(Vertex, Vertex)>> {
    let mut degree = vec![0usize; n];
    // adjacency bitsets, 0-based
    let words = n.div_ceil(64);
    let mut adj = vec![0u64; n * words];
    let mut edges = Vec::with_capacity(n * k / 2);
    let mut candidates = Vec::new();
    while edges.len() < n * k / 2 {
        candidates.clear();
        for u in 0..n {
            if degree[u] >= k {
                continue;
            }
            for v in (u + 1)..n {
                if degree[v] < k && adj[u * words + v / 64] & (1 << (v % 64)) == 0 {
                    candidates.push((u, v));
                }
            }
        }
        let &(u, v) = candidates.choose(rng)?;
        adj[u * words + v / 64] |= 1 << (v % 64);
        adj[v * words + u / 64] |= 1 << (u % 64);
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u + 1, v + 1));
    }
    Some(edges)
}

fn pairing_attempt(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(Vertex, Vertex)>> {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(k)).collect();
    stubs.shuffle(rng);
    let mut seen = BTreeSet::new();
    for pair in stubs.chunks_exact(2) {
        let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
        if u == v || !seen.insert((u + 1, v + 1)) {
            return None;
        }
    }
    Some(seen.into_iter().collect())
}

/// Uniformly random simple graph on `n` vertices with exactly `d * n / 2` edges.
pub fn random_average_degree(n: usize, d: usize, seed: u64) -> Result<Graph, GraphError> {
    random_average_degree_with(n, d, &mut rng_from_seed(seed))
}

pub fn random_average_degree_with(
    n: usize,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Graph, GraphError> {
    EnsembleKind::AverageDegree(d).check_size(n)?;
    let m = n * d / 2;
    let all_pairs: Vec<(Vertex, Vertex)> = (1..=n)
        .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
        .collect();
    let picked = index::sample(rng, all_pairs.len(), m);
    let edges = picked.into_iter().map(|i| all_pairs[i]).collect();
    Ok(Graph::from_sorted_unique(n, sorted(edges)))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn prism() -> Graph {
        Graph::from_edge_list(
            6,
            [(1, 2), (1, 4), (1, 6), (2, 3), (2, 6), (3, 4), (3, 5), (4, 5), (5, 6)],
        )
        .unwrap()
    }

    #[test]
    fn single_edge() {
        let g = Graph::from_edge_list(2, [(1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 1]);
        assert_eq!(g.degree(1).unwrap(), 1);
    }

    #[test]
    fn prism_is_cubic() {
        let g = prism();
        assert!(g.vertices().all(|v| g.degree(v).unwrap() == 3));
        assert_eq!(g.degree(1).unwrap(), 3);
        g.validate().unwrap();
    }

    #[test]
    fn figure_seven_degrees() {
        let g = Graph::from_edge_list(
            6,
            [(1, 2), (1, 5), (1, 6), (2, 4), (2, 5), (3, 5), (3, 6), (4, 5), (5, 6)],
        )
        .unwrap();
        assert_eq!(g.degree(5).unwrap(), 5);
        assert_eq!(g.degree(3).unwrap(), 2);
        assert_eq!(g.degree(4).unwrap(), 2);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edge_list(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edge_list(3, [(1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge(1, 2))
        );
        assert_eq!(
            Graph::from_edge_list(3, [(1, 4)]),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert!(matches!(
            prism().degree(7),
            Err(GraphError::VertexOutOfRange { vertex: 7, .. })
        ));
        assert!(prism().degree(0).is_err());
    }

    #[test]
    fn regular_parity() {
        assert_eq!(
            random_regular(5, 3, 9),
            Err(GraphError::ImpossibleDegreeSequence { n: 5, k: 3 })
        );
        assert!(random_regular(3, 3, 9).is_err());
    }

    #[test]
    fn regular_four_is_k4() {
        for strategy in [RegularStrategy::Greedy, RegularStrategy::Pairing] {
            for seed in 0..20 {
                let g = random_regular_with(4, 3, strategy, &mut rng_from_seed(seed)).unwrap();
                assert_eq!(g.edges(), &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
            }
        }
    }

    #[test]
    fn regular_degrees_and_determinism() {
        for strategy in [RegularStrategy::Greedy, RegularStrategy::Pairing] {
            for n in (6..=40).step_by(2) {
                let a = random_regular_with(n, 3, strategy, &mut rng_from_seed(n as u64)).unwrap();
                let b = random_regular_with(n, 3, strategy, &mut rng_from_seed(n as u64)).unwrap();
                assert_eq!(a, b);
                a.validate().unwrap();
                assert!(a.degrees().iter().all(|&d| d == 3));
            }
        }
    }

    #[test]
    fn average_degree_edge_count() {
        let g = random_average_degree(6, 3, 4).unwrap();
        assert_eq!(g.num_edges(), 9);
        assert_eq!(g.degrees().iter().sum::<usize>(), 18);
        g.validate().unwrap();
        assert_eq!(random_average_degree(2, 1, 0).unwrap().edges(), &[(1, 2)]);
        assert_eq!(
            random_average_degree(5, 3, 0),
            Err(GraphError::OddHandshake { n: 5, d: 3 })
        );
        assert_eq!(
            random_average_degree(4, 4, 0),
            Err(GraphError::TooManyEdges { n: 4, d: 4 })
        );
        let any_irregular = (0..200)
            .map(|s| random_average_degree(6, 3, s).unwrap())
            .any(|g| g.degrees().iter().any(|&d| d != 3));
        assert!(any_irregular);
    }

    #[test]
    fn text_format_roundtrip_and_comments() {
        let g = prism();
        let text = format!("# prism\n{g}");
        let back = Graph::read_from(text.as_bytes()).unwrap();
        assert_eq!(back, g);
        assert!(Graph::read_from("2 1\n2 1\n".as_bytes()).is_err());
        assert!(Graph::read_from("2 2\n1 2\n".as_bytes()).is_err());
        assert!(Graph::read_from("".as_bytes()).is_err());
        assert!(matches!(
            Graph::read_from("3 1\n1 x\n".as_bytes()),
            Err(GraphError::Parse { line: 2, .. })
        ));
    }
}
