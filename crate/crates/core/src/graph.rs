//! Prime-vertex graphs and their construction from character degree sets.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::factor::{distinct_prime_factors, is_prime};
use crate::{Error, Result};

/// A non-empty set of positive integers standing for the character degrees
/// of a group. Multiplicities are irrelevant, so duplicates collapse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSet(BTreeSet<u64>);

impl DegreeSet {
    pub fn new<I: IntoIterator<Item = u64>>(degrees: I) -> Result<Self> {
        let degrees: BTreeSet<u64> = degrees.into_iter().collect();
        if degrees.is_empty() {
            return Err(Error::EmptyInput);
        }
        if degrees.contains(&0) {
            return Err(Error::NonPositiveDegree("0".into()));
        }
        Ok(Self(degrees))
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, degree: u64) -> bool {
        self.0.contains(&degree)
    }
}

/// Parses whitespace- or comma-separated decimal degrees.
pub fn parse_degrees(text: &str) -> Result<DegreeSet> {
    let mut degrees = BTreeSet::new();
    for token in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        degrees.insert(parse_degree(token)?);
    }
    DegreeSet::new(degrees)
}

fn parse_degree(token: &str) -> Result<u64> {
    let (negative, digits) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token.strip_prefix('+').unwrap_or(token)),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidToken(token.to_string()));
    }
    if negative || digits.bytes().all(|b| b == b'0') {
        return Err(Error::NonPositiveDegree(token.to_string()));
    }
    digits
        .parse::<u64>()
        .map_err(|_| Error::DegreeTooLarge(token.to_string()))
}

/// An undirected loop-free graph whose vertices are distinct primes.
///
/// Edges are stored as `(p, q)` with `p < q`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PrimeGraph {
    vertices: BTreeSet<u64>,
    edges: BTreeSet<(u64, u64)>,
}

impl PrimeGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a graph after checking that every vertex is prime, that no
    /// edge is a loop, and that every edge endpoint is a declared vertex.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = u64>,
        E: IntoIterator<Item = (u64, u64)>,
    {
        let vertices: BTreeSet<u64> = vertices.into_iter().collect();
        if let Some(&p) = vertices.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        let mut normalized = BTreeSet::new();
        for (p, q) in edges {
            for v in [p, q] {
                if !vertices.contains(&v) {
                    return Err(Error::UnknownVertex(v));
                }
            }
            if p == q {
                return Err(Error::SelfLoop(p));
            }
            normalized.insert((p.min(q), p.max(q)));
        }
        Ok(Self {
            vertices,
            edges: normalized,
        })
    }

    pub fn vertices(&self) -> &BTreeSet<u64> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(u64, u64)> {
        &self.edges
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        self.edges.contains(&(p.min(q), p.max(q)))
    }

    fn adjacency(&self) -> BTreeMap<u64, Vec<u64>> {
        let mut adj: BTreeMap<u64, Vec<u64>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(p, q) in &self.edges {
            adj.entry(p).or_default().push(q);
            adj.entry(q).or_default().push(p);
        }
        adj
    }

    /// Renders the graph in Graphviz DOT syntax.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "    {v};");
        }
        for (p, q) in &self.edges {
            let _ = writeln!(out, "    {p} -- {q};");
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the character degree graph of a degree set: the vertices are the
/// primes dividing some degree, and distinct primes `p`, `q` are adjacent
/// when `p * q` divides some degree.
pub fn build_graph(degrees: &DegreeSet) -> PrimeGraph {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for d in degrees.iter() {
        let primes = distinct_prime_factors(d);
        for (i, &p) in primes.iter().enumerate() {
            vertices.insert(p);
            for &q in &primes[i + 1..] {
                edges.insert((p, q));
            }
        }
    }
    PrimeGraph { vertices, edges }
}

/// Connected components ordered by descending size, ties broken by the
/// smallest prime in each component.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<BTreeSet<u64>>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(BTreeSet::len).collect()
    }
}

pub fn connected_components(g: &PrimeGraph) -> ComponentDecomposition {
    let adj = g.adjacency();
    let mut seen = BTreeSet::new();
    let mut components = Vec::new();
    for &start in &g.vertices {
        if !seen.insert(start) {
            continue;
        }
        let mut component = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[&v] {
                if seen.insert(w) {
                    component.insert(w);
                    queue.push_back(w);
                }
            }
        }
        components.push(component);
    }
    components.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.first().cmp(&b.first()))
    });
    ComponentDecomposition { components }
}

pub fn complement(g: &PrimeGraph) -> PrimeGraph {
    let vs: Vec<u64> = g.vertices.iter().copied().collect();
    let mut edges = BTreeSet::new();
    for (i, &p) in vs.iter().enumerate() {
        for &q in &vs[i + 1..] {
            if !g.edges.contains(&(p, q)) {
                edges.insert((p, q));
            }
        }
    }
    PrimeGraph {
        vertices: g.vertices.clone(),
        edges,
    }
}

/// Whether every pair of `set` is adjacent in `g`. Sets of size at most one
/// are trivially cliques.
pub fn is_clique(g: &PrimeGraph, set: &BTreeSet<u64>) -> Result<bool> {
    if let Some(&v) = set.iter().find(|v| !g.vertices.contains(v)) {
        return Err(Error::UnknownVertex(v));
    }
    Ok(missing_edge(g, set).is_none())
}

/// First non-adjacent pair inside `set`, if any.
pub(crate) fn missing_edge(g: &PrimeGraph, set: &BTreeSet<u64>) -> Option<(u64, u64)> {
    let vs: Vec<u64> = set.iter().copied().collect();
    for (i, &p) in vs.iter().enumerate() {
        for &q in &vs[i + 1..] {
            if !g.edges.contains(&(p, q)) {
                return Some((p, q));
            }
        }
    }
    None
}

/// Parses an edge list: one `p q` edge per line, isolated vertices declared
/// as `v p`. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<PrimeGraph> {
    let mut vertices = BTreeSet::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| Error::EdgeList { line, message };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let label = |t: &str| -> Result<u64> {
            let p: u64 = t
                .parse()
                .map_err(|_| err(format!("invalid vertex label `{t}`")))?;
            if !is_prime(p) {
                return Err(err(format!("{p} is not a prime")));
            }
            Ok(p)
        };
        match tokens.as_slice() {
            ["v", p] => {
                vertices.insert(label(p)?);
            }
            [p, q] => {
                let (p, q) = (label(p)?, label(q)?);
                if p == q {
                    return Err(err(format!("self-loop on {p}")));
                }
                vertices.insert(p);
                vertices.insert(q);
                edges.push((p, q));
            }
            _ => return Err(err(format!("expected `p q` or `v p`, got `{content}`"))),
        }
    }
    PrimeGraph::new(vertices, edges)
}
