//! Canonical labelling of small simple graphs.
//!
//! The code of a graph is the lexicographically smallest upper-triangle bit
//! string (read column by column) over all vertex orderings that respect an
//! isomorphism-invariant colour refinement. Orderings are explored depth
//! first and a branch is cut as soon as its code prefix exceeds the best one.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    code: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    /// The canonically labelled representative.
    pub fn graph(&self) -> SimpleGraph {
        let n = self.order;
        let total = n * n.saturating_sub(1) / 2;
        let mut g = SimpleGraph::empty(n);
        let mut bit = 0;
        for col in 1..n {
            for row in 0..col {
                if (self.code >> (total - 1 - bit)) & 1 == 1 {
                    g.insert_edge(row, col).expect("valid pair");
                }
                bit += 1;
            }
        }
        g
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:x}", self.order, self.code)
    }
}

impl FromStr for CanonicalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed canonical form {s:?}"));
        let (order, code) = s.split_once(':').ok_or_else(bad)?;
        let order: usize = order.parse().map_err(|_| bad())?;
        let code = u64::from_str_radix(code, 16).map_err(|_| bad())?;
        if order > MAX_CANONICAL_ORDER {
            return Err(bad());
        }
        let total = order * order.saturating_sub(1) / 2;
        if total < 64 && code >> total != 0 {
            return Err(bad());
        }
        Ok(CanonicalForm { order, code })
    }
}

/// Iterated colour refinement starting from vertex degrees. Colours are
/// ranks of sorted signatures, so they are isomorphism invariant.
fn refine_colours(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    let mut classes = 0;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colour[w])
                    .collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colour = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    adj: &'a [u32],
    slot_class: Vec<usize>,
    colour: Vec<usize>,
    total: usize,
    perm: Vec<usize>,
    used: u32,
    best: Option<u64>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, prefix: u64, bits: usize) {
        let n = self.adj.len();
        if pos == n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.colour[v] != self.slot_class[pos] {
                continue;
            }
            let mut code = prefix;
            for &u in &self.perm {
                code = (code << 1) | u64::from(self.adj[u] >> v & 1);
            }
            let len = bits + pos;
            if let Some(best) = self.best {
                if len > 0 && code > best >> (self.total - len) {
                    continue;
                }
            }
            self.perm.push(v);
            self.used |= 1 << v;
            self.run(pos + 1, code, len);
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::Capacity {
            what: "canonicalization order",
            limit: MAX_CANONICAL_ORDER,
            got: n,
        });
    }
    let mut adj = vec![0u32; n];
    for e in g.edges() {
        adj[e.lo()] |= 1 << e.hi();
        adj[e.hi()] |= 1 << e.lo();
    }
    let colour = refine_colours(&adj);
    let mut slot_class = colour.clone();
    slot_class.sort_unstable();
    let mut search = Search {
        adj: &adj,
        slot_class,
        colour,
        total: n * n.saturating_sub(1) / 2,
        perm: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.run(0, 0, 0);
    Ok(CanonicalForm {
        order: n,
        code: search.best.unwrap_or(0),
    })
}
