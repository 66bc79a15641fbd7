//! Simple graphs and signed complete graphs.
//!
//! A [`SignedCompleteGraph`] is `K_n` with the edges of a subgraph `H` made
//! negative and every other pair positive. Only the negative edge set is
//! stored. Vertices are `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge(a, b)),
            std::cmp::Ordering::Greater => Ok(Edge(b, a)),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    fn check(self, order: usize) -> Result<Self> {
        if self.1 >= order {
            return Err(Error::VertexOutOfRange {
                vertex: self.1,
                order,
            });
        }
        Ok(self)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "positive",
            Sign::Negative => "negative",
        })
    }
}

fn check_vertices(vertices: &[usize], order: usize) -> Result<()> {
    match vertices.iter().find(|&&v| v >= order) {
        Some(&vertex) => Err(Error::VertexOutOfRange { vertex, order }),
        None => Ok(()),
    }
}

/// Undirected graph without loops or multi-edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    order: usize,
    edges: BTreeSet<Edge>,
}

impl SimpleGraph {
    pub fn empty(order: usize) -> Self {
        SimpleGraph {
            order,
            edges: BTreeSet::new(),
        }
    }

    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::empty(order);
        for (a, b) in edges {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    /// Adds `ab`; returns whether it was new.
    pub fn insert_edge(&mut self, a: usize, b: usize) -> Result<bool> {
        let e = Edge::new(a, b)?.check(self.order)?;
        Ok(self.edges.insert(e))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        Edge::new(a, b).is_ok_and(|e| self.edges.contains(&e))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v || e.1 == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| match (e.0 == v, e.1 == v) {
                (true, _) => Some(e.1),
                (_, true) => Some(e.0),
                _ => None,
            })
            .collect()
    }

    /// Adjacency lists, one sorted list per vertex.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for e in &self.edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order
    }

    /// Dimension of the cycle space: `|E| - |V| + components`.
    pub fn cyclomatic_number(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.order).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = self.order;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.0), find(&mut parent, e.1));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        self.edges.len() + components - self.order
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<SimpleGraph> {
        check_permutation(perm, self.order)?;
        SimpleGraph::new(self.order, self.edges.iter().map(|e| (perm[e.0], perm[e.1])))
    }

    /// Vertices incident to at least one edge.
    pub fn support(&self) -> BTreeSet<usize> {
        self.edges.iter().flat_map(|e| [e.0, e.1]).collect()
    }
}

fn check_permutation(perm: &[usize], order: usize) -> Result<()> {
    if perm.len() != order {
        return Err(Error::InvalidParameters(format!(
            "permutation has length {} but order is {order}",
            perm.len()
        )));
    }
    let mut seen = vec![false; order];
    for &p in perm {
        if p >= order {
            return Err(Error::VertexOutOfRange { vertex: p, order });
        }
        if std::mem::replace(&mut seen[p], true) {
            return Err(Error::NotDistinct(perm.to_vec()));
        }
    }
    Ok(())
}

/// `(K_n, H^-)`: the complete graph on `n` vertices whose negative edges are
/// exactly the edges of `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedCompleteGraph {
    order: usize,
    negative: BTreeSet<Edge>,
}

impl SignedCompleteGraph {
    /// Embeds `h` on the first `h.order()` vertices of `K_n`.
    pub fn new(n: usize, h: &SimpleGraph) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let negative = h
            .edges()
            .map(|e| e.check(n))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(SignedCompleteGraph { order: n, negative })
    }

    pub fn from_negative_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let negative = edges
            .into_iter()
            .map(|(a, b)| Edge::new(a, b).and_then(|e| e.check(n)))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(SignedCompleteGraph { order: n, negative })
    }

    /// `(K_n, +)`.
    pub fn all_positive(n: usize) -> Result<Self> {
        Self::from_negative_edges(n, [])
    }

    /// `(K_n, -)`.
    pub fn all_negative(n: usize) -> Result<Self> {
        let pairs: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Self::from_negative_edges(n, pairs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.negative.iter().copied()
    }

    pub fn negative_count(&self) -> usize {
        self.negative.len()
    }

    /// Positive edges, derived from the complement of the negative set.
    pub fn positive_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.order;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| Edge(i, j)))
            .filter(|e| !self.negative.contains(e))
    }

    /// Sign of the edge `ab`.
    pub fn sign(&self, a: usize, b: usize) -> Result<Sign> {
        let e = Edge::new(a, b)?.check(self.order)?;
        Ok(if self.negative.contains(&e) {
            Sign::Negative
        } else {
            Sign::Positive
        })
    }

    fn sign_unchecked(&self, a: usize, b: usize) -> Sign {
        let e = if a < b { Edge(a, b) } else { Edge(b, a) };
        if self.negative.contains(&e) {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    /// The negative subgraph `H` on all `n` vertices.
    pub fn negative_subgraph(&self) -> SimpleGraph {
        SimpleGraph {
            order: self.order,
            edges: self.negative.clone(),
        }
    }

    /// Signed adjacency matrix: zero diagonal, `-1` on negative edges, `+1`
    /// elsewhere.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.order;
        let mut a = vec![vec![1i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 0;
        }
        for e in &self.negative {
            a[e.0][e.1] = -1;
            a[e.1][e.0] = -1;
        }
        a
    }

    /// Switches at every vertex of `set`: edges with exactly one endpoint in
    /// `set` change sign.
    pub fn switch(&self, set: &[usize]) -> Result<Self> {
        check_vertices(set, self.order)?;
        let mut inside = vec![false; self.order];
        for &v in set {
            inside[v] = true;
        }
        let n = self.order;
        let negative = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| Edge(i, j)))
            .filter(|e| {
                let crosses = inside[e.0] != inside[e.1];
                self.negative.contains(e) != crosses
            })
            .collect();
        Ok(SignedCompleteGraph { order: n, negative })
    }

    /// The relocation `R(u, v, w)`: the positive edge `uv` becomes negative and
    /// the negative edge `uw` becomes positive.
    pub fn relocate(&self, u: usize, v: usize, w: usize) -> Result<Self> {
        check_vertices(&[u, v, w], self.order)?;
        if u == v || u == w || v == w {
            return Err(Error::NotDistinct(vec![u, v, w]));
        }
        let uv = self.sign_unchecked(u, v);
        if uv != Sign::Positive {
            return Err(Error::SignPrecondition {
                edge: (u.min(v), u.max(v)),
                expected: Sign::Positive,
                actual: uv,
            });
        }
        let uw = self.sign_unchecked(u, w);
        if uw != Sign::Negative {
            return Err(Error::SignPrecondition {
                edge: (u.min(w), u.max(w)),
                expected: Sign::Negative,
                actual: uw,
            });
        }
        let mut negative = self.negative.clone();
        negative.remove(&Edge::new(u, w)?);
        negative.insert(Edge::new(u, v)?);
        Ok(SignedCompleteGraph {
            order: self.order,
            negative,
        })
    }

    /// `Γ[X]`, relabelled `0..|X|` in ascending order of the original labels.
    pub fn induced(&self, set: &[usize]) -> Result<Self> {
        check_vertices(set, self.order)?;
        let kept: BTreeSet<usize> = set.iter().copied().collect();
        if kept.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut relabel = vec![usize::MAX; self.order];
        for (new, &old) in kept.iter().enumerate() {
            relabel[old] = new;
        }
        let negative = self
            .negative
            .iter()
            .filter(|e| kept.contains(&e.0) && kept.contains(&e.1))
            .map(|e| Edge(relabel[e.0], relabel[e.1]))
            .collect();
        Ok(SignedCompleteGraph {
            order: kept.len(),
            negative,
        })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.order)?;
        let negative = self
            .negative
            .iter()
            .map(|e| Edge::new(perm[e.0], perm[e.1]))
            .collect::<Result<_>>()?;
        Ok(SignedCompleteGraph {
            order: self.order,
            negative,
        })
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            format_version: FORMAT_VERSION,
            n: self.order,
            negative_edges: self.negative.iter().map(|e| [e.0, e.1]).collect(),
        }
    }
}

pub const FORMAT_VERSION: u32 = 1;

fn default_format_version() -> u32 {
    FORMAT_VERSION
}

/// Interchange form of a signed complete graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default = "default_format_version")]
    pub format_version: u32,
    pub n: usize,
    pub negative_edges: Vec<[usize; 2]>,
}

impl TryFrom<&GraphDocument> for SignedCompleteGraph {
    type Error = Error;

    fn try_from(doc: &GraphDocument) -> Result<Self> {
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported format_version {}",
                doc.format_version
            )));
        }
        SignedCompleteGraph::from_negative_edges(doc.n, doc.negative_edges.iter().map(|e| (e[0], e[1])))
    }
}
