//! Exhaustive generation of trees, unicyclic graphs and cacti up to
//! isomorphism. Outputs are sorted by canonical form.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canonical::{canonical_form, CanonicalForm, MAX_CANONICAL_ORDER};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const MAX_UNICYCLIC_ORDER: usize = 9;
pub const MAX_CACTUS_EDGES: usize = 9;

/// Rooted trees on `n` vertices as level sequences (root at level 0), each
/// exactly once, in the successor order of Beyer and Hedetniemi.
pub fn rooted_level_sequences(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let mut levels: Vec<usize> = (0..n).collect();
    let mut out = vec![levels.clone()];
    loop {
        // last position whose level exceeds 1
        let Some(p) = (0..n).rev().find(|&i| levels[i] > 1) else {
            return out;
        };
        let q = (0..p).rev().find(|&i| levels[i] == levels[p] - 1).expect("parent level exists");
        for i in p..n {
            levels[i] = levels[i - (p - q)];
        }
        out.push(levels.clone());
    }
}

/// The tree encoded by a level sequence: each vertex hangs from the nearest
/// earlier vertex one level up.
pub fn tree_from_levels(levels: &[usize]) -> SimpleGraph {
    let mut g = SimpleGraph::empty(levels.len());
    for i in 1..levels.len() {
        let parent = (0..i).rev().find(|&j| levels[j] + 1 == levels[i]).expect("valid level sequence");
        g.insert_edge(parent, i).expect("tree edge");
    }
    g
}

fn dedup_sorted(graphs: impl IntoIterator<Item = (CanonicalForm, SimpleGraph)>) -> Vec<SimpleGraph> {
    let unique: BTreeMap<CanonicalForm, SimpleGraph> = graphs.into_iter().collect();
    unique.into_keys().map(|c| c.graph()).collect()
}

fn check_order(what: &'static str, order: usize, limit: usize) -> Result<()> {
    if order > limit {
        return Err(Error::Capacity {
            what,
            limit,
            got: order,
        });
    }
    Ok(())
}

/// Non-isomorphic free trees on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<SimpleGraph>> {
    check_order("tree order", n, MAX_CANONICAL_ORDER)?;
    let trees = rooted_level_sequences(n)
        .into_iter()
        .map(|l| {
            let t = tree_from_levels(&l);
            (canonical_form(&t).expect("order checked"), t)
        })
        .collect::<Vec<_>>();
    Ok(dedup_sorted(trees))
}

fn non_edges(g: &SimpleGraph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !g.has_edge(i, j))
        .collect()
}

/// Connected graphs with `k` vertices and `k` edges, once each up to
/// isomorphism. Built as spanning tree plus one edge.
pub fn enumerate_unicyclic(k: usize) -> Result<Vec<SimpleGraph>> {
    if !(3..=MAX_UNICYCLIC_ORDER).contains(&k) {
        return Err(Error::Capacity {
            what: "unicyclic order (supported 3..=9)",
            limit: MAX_UNICYCLIC_ORDER,
            got: k,
        });
    }
    let trees = enumerate_trees(k)?;
    let graphs: Vec<_> = trees
        .par_iter()
        .flat_map_iter(|t| {
            non_edges(t).into_iter().map(move |(a, b)| {
                let mut g = t.clone();
                g.insert_edge(a, b).expect("non-edge");
                (canonical_form(&g).expect("order checked"), g)
            })
        })
        .collect();
    let out = dedup_sorted(graphs);
    debug_assert!(out.iter().all(|g| g.is_connected() && g.cyclomatic_number() == 1));
    Ok(out)
}

/// Blocks (biconnected components) as `(vertex count, edge count)`.
pub fn blocks(g: &SimpleGraph) -> Vec<(usize, usize)> {
    struct State {
        adj: Vec<Vec<usize>>,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<(usize, usize)>,
    }
    fn visit(s: &mut State, v: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[v] = s.time;
        s.low[v] = s.time;
        for i in 0..s.adj[v].len() {
            let w = s.adj[v][i];
            if s.disc[w] == 0 {
                s.stack.push((v, w));
                visit(s, w, Some(v));
                s.low[v] = s.low[v].min(s.low[w]);
                if s.low[w] >= s.disc[v] {
                    let mut verts = std::collections::BTreeSet::new();
                    let mut edges = 0;
                    while let Some((a, b)) = s.stack.pop() {
                        verts.insert(a);
                        verts.insert(b);
                        edges += 1;
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    s.out.push((verts.len(), edges));
                }
            } else if Some(w) != parent && s.disc[w] < s.disc[v] {
                s.stack.push((v, w));
                s.low[v] = s.low[v].min(s.disc[w]);
            }
        }
    }
    let n = g.order();
    let mut s = State {
        adj: g.adjacency_lists(),
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            visit(&mut s, v, None);
        }
    }
    s.out
}

/// Connected, and every block is a single edge or a cycle.
pub fn is_cactus(g: &SimpleGraph) -> bool {
    g.is_connected()
        && blocks(g)
            .into_iter()
            .all(|(v, e)| e == 1 || (v >= 3 && e == v))
}

/// Cacti with `k` edges and `t` cycles (hence `k - t + 1` vertices), once
/// each up to isomorphism. Built as spanning tree plus `t` edges, filtered by
/// block structure.
pub fn enumerate_cacti(k: usize, t: usize) -> Result<Vec<SimpleGraph>> {
    if k > MAX_CACTUS_EDGES {
        return Err(Error::Capacity {
            what: "cactus edge count",
            limit: MAX_CACTUS_EDGES,
            got: k,
        });
    }
    if t > k {
        return Err(Error::InvalidParameters(format!("{t} cycles need more than {k} edges")));
    }
    let order = k - t + 1;
    check_order("cactus order", order, MAX_CANONICAL_ORDER)?;
    if 3 * t > k {
        return Ok(Vec::new());
    }
    let trees = enumerate_trees(order)?;
    let graphs: Vec<_> = trees
        .par_iter()
        .flat_map_iter(|tree| {
            let extra = non_edges(tree);
            combinations(extra.len(), t).filter_map(move |choice| {
                let mut g = tree.clone();
                for &i in &choice {
                    g.insert_edge(extra[i].0, extra[i].1).expect("non-edge");
                }
                is_cactus(&g).then(|| (canonical_form(&g).expect("order checked"), g))
            })
        })
        .collect();
    Ok(dedup_sorted(graphs))
}

/// `r`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, r: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (r <= n).then(|| (0..r).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let c = current.as_mut().expect("present");
        match (0..r).rev().find(|&i| c[i] < n - r + i) {
            Some(i) => {
                c[i] += 1;
                for j in i + 1..r {
                    c[j] = c[j - 1] + 1;
                }
            }
            None => current = None,
        }
        Some(out)
    })
}
