//! Minimum degree, local and global vertex connectivity, and k-separation
//! extraction.
//!
//! Local connectivity of a non-adjacent pair is computed as unit-capacity
//! max-flow on the split digraph: vertex v becomes in(v) = 2v and
//! out(v) = 2v+1 with a capacity-1 arc between them, and each graph edge xy
//! becomes out(x)->in(y) and out(y)->in(x). Adjacent pairs recurse on the
//! graph minus the connecting edge and add one. Every tie is broken by
//! ascending index, so results and witness cuts are deterministic.

use crate::graph::{Graph, GraphError};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("local connectivity requires two distinct vertices")]
    IdenticalEndpoints,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Global connectivity summary. `witness_cut` is present exactly when the
/// graph is not complete; removing it disconnects the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub min_degree: usize,
    pub kappa: usize,
    pub witness_cut: Option<Vec<usize>>,
}

/// A separation (A, B): both sides cover the graph and no edge joins
/// A \ B to B \ A.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl Separation {
    pub fn order(&self) -> usize {
        self.intersection().len()
    }

    pub fn intersection(&self) -> Vec<usize> {
        self.side_a
            .iter()
            .filter(|v| self.side_b.binary_search(v).is_ok())
            .copied()
            .collect()
    }
}

pub fn min_degree(g: &Graph) -> Result<usize, GraphError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok((0..g.vertex_count()).map(|v| g.degree(v)).min().unwrap())
}

/// Maximum number of internally disjoint u-v paths.
pub fn local_connectivity(g: &Graph, u: usize, v: usize) -> Result<usize, ConnectivityError> {
    check_pair(g, u, v)?;
    if g.has_edge(u, v) {
        Ok(1 + local_connectivity(&g.without_edge(u, v), u, v)?)
    } else {
        Ok(SplitFlow::new(g, u, v).max_flow(usize::MAX))
    }
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<(), ConnectivityError> {
    if u == v {
        return Err(ConnectivityError::IdenticalEndpoints);
    }
    for x in [u, v] {
        if x >= g.vertex_count() {
            return Err(ConnectivityError::Graph(GraphError::VertexOutOfRange {
                vertex: x,
                n: g.vertex_count(),
            }));
        }
    }
    Ok(())
}

/// Global vertex connectivity with a witness cut.
///
/// Complete graphs report kappa = n-1 and no witness. Otherwise kappa is the
/// minimum local connectivity over the standard candidate pairs: a fixed
/// minimum-degree vertex against its non-neighbors, plus non-adjacent pairs
/// inside its neighborhood.
pub fn vertex_connectivity(g: &Graph) -> Result<ConnectivityReport, GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let min_deg = min_degree(g)?;
    if n == 1 {
        return Ok(ConnectivityReport {
            min_degree: 0,
            kappa: 0,
            witness_cut: None,
        });
    }
    let v0 = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for w in 0..n {
        if w != v0 && !g.has_edge(v0, w) {
            candidates.push((v0, w));
        }
    }
    let nbrs: Vec<usize> = g.neighbors(v0).collect();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                candidates.push((x, y));
            }
        }
    }
    if candidates.is_empty() {
        // v0 is universal and its neighborhood is a clique
        return Ok(ConnectivityReport {
            min_degree: min_deg,
            kappa: n - 1,
            witness_cut: None,
        });
    }
    let mut best = usize::MAX;
    let mut cut = Vec::new();
    for (s, t) in candidates {
        let mut flow = SplitFlow::new(g, s, t);
        let value = flow.max_flow(best);
        if value < best {
            best = value;
            cut = flow.min_vertex_cut();
            debug_assert_eq!(cut.len(), best);
            if best == 0 {
                break;
            }
        }
    }
    Ok(ConnectivityReport {
        min_degree: min_deg,
        kappa: best,
        witness_cut: Some(cut),
    })
}

/// A separation of order at most `max_order` with both private sides
/// nonempty, derived from the connectivity witness cut; `None` when the
/// graph is complete or kappa exceeds `max_order`.
pub fn find_separation(g: &Graph, max_order: usize) -> Result<Option<Separation>, GraphError> {
    let report = vertex_connectivity(g)?;
    let cut = match report.witness_cut {
        Some(c) if report.kappa <= max_order => c,
        _ => return Ok(None),
    };
    let n = g.vertex_count();
    let in_cut = |v: usize| cut.binary_search(&v).is_ok();
    let seed = (0..n).find(|&v| !in_cut(v)).expect("cut cannot cover graph");
    // component of `seed` in G - cut
    let mut comp = vec![false; n];
    comp[seed] = true;
    let mut stack = vec![seed];
    while let Some(x) = stack.pop() {
        for y in g.neighbors(x) {
            if !comp[y] && !in_cut(y) {
                comp[y] = true;
                stack.push(y);
            }
        }
    }
    let side_a: Vec<usize> = (0..n).filter(|&v| comp[v] || in_cut(v)).collect();
    let side_b: Vec<usize> = (0..n).filter(|&v| !comp[v]).collect();
    Ok(Some(Separation { side_a, side_b }))
}

// ---------------------------------------------------------------------------
// unit-capacity Dinic on the split digraph
// ---------------------------------------------------------------------------

struct Arc {
    to: u32,
    cap: u8,
}

struct SplitFlow {
    n: usize,
    source: usize,
    sink: usize,
    head: Vec<Vec<u32>>, // per node, arc indices in insertion order
    arcs: Vec<Arc>,      // arc 2k and 2k+1 are mutual reverses
    level: Vec<i32>,
    it: Vec<usize>,
}

impl SplitFlow {
    /// Network for internally disjoint u-v paths; u and v must be
    /// non-adjacent.
    fn new(g: &Graph, u: usize, v: usize) -> SplitFlow {
        let n = g.vertex_count();
        let mut f = SplitFlow {
            n,
            source: 2 * u + 1, // out(u)
            sink: 2 * v,       // in(v)
            head: vec![Vec::new(); 2 * n],
            arcs: Vec::new(),
            level: vec![0; 2 * n],
            it: vec![0; 2 * n],
        };
        for w in 0..n {
            f.add_arc(2 * w, 2 * w + 1, 1);
        }
        for x in 0..n {
            for y in g.neighbors(x) {
                if x < y {
                    f.add_arc(2 * x + 1, 2 * y, 1);
                    f.add_arc(2 * y + 1, 2 * x, 1);
                }
            }
        }
        f
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u8) {
        let idx = self.arcs.len() as u32;
        self.arcs.push(Arc { to: to as u32, cap });
        self.arcs.push(Arc {
            to: from as u32,
            cap: 0,
        });
        self.head[from].push(idx);
        self.head[to].push(idx + 1);
    }

    fn bfs(&mut self) -> bool {
        self.level.fill(-1);
        self.level[self.source] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(self.source);
        while let Some(x) = queue.pop_front() {
            for &ai in &self.head[x] {
                let a = &self.arcs[ai as usize];
                if a.cap > 0 && self.level[a.to as usize] < 0 {
                    self.level[a.to as usize] = self.level[x] + 1;
                    queue.push_back(a.to as usize);
                }
            }
        }
        self.level[self.sink] >= 0
    }

    fn dfs(&mut self, x: usize) -> bool {
        if x == self.sink {
            return true;
        }
        while self.it[x] < self.head[x].len() {
            let ai = self.head[x][self.it[x]] as usize;
            let (to, cap) = (self.arcs[ai].to as usize, self.arcs[ai].cap);
            if cap > 0 && self.level[to] == self.level[x] + 1 && self.dfs(to) {
                self.arcs[ai].cap -= 1;
                self.arcs[ai ^ 1].cap += 1;
                return true;
            }
            self.it[x] += 1;
        }
        false
    }

    /// Augment until exhausted or the value reaches `cap`.
    fn max_flow(&mut self, cap: usize) -> usize {
        let mut flow = 0;
        while flow < cap && self.bfs() {
            self.it.fill(0);
            while flow < cap && self.dfs(self.source) {
                flow += 1;
            }
        }
        flow
    }

    /// Extract the vertex cut determined by residual reachability from the
    /// source. Must be called after `max_flow` ran to exhaustion.
    fn min_vertex_cut(&self) -> Vec<usize> {
        let mut seen = vec![false; 2 * self.n];
        seen[self.source] = true;
        let mut stack = vec![self.source];
        while let Some(x) = stack.pop() {
            for &ai in &self.head[x] {
                let a = &self.arcs[ai as usize];
                if a.cap > 0 && !seen[a.to as usize] {
                    seen[a.to as usize] = true;
                    stack.push(a.to as usize);
                }
            }
        }
        let u = self.source / 2;
        let v = self.sink / 2;
        let mut cut = Vec::new();
        for w in 0..self.n {
            if w == u || w == v {
                continue;
            }
            // crossing split arc in(w) -> out(w)
            if seen[2 * w] && !seen[2 * w + 1] {
                cut.push(w);
                continue;
            }
            // crossing edge arc out(x) -> in(w): odd indices in head[in(w)]
            // are reverse arcs whose target is the forward arc's origin
            if !seen[2 * w] {
                let crossed = self.head[2 * w]
                    .iter()
                    .any(|&ai| ai % 2 == 1 && seen[self.arcs[ai as usize].to as usize]);
                if crossed {
                    cut.push(w);
                }
            }
        }
        cut
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, complete_graph};

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((0, n - 1));
        build_graph(n, &e).unwrap()
    }

    #[test]
    fn min_degree_basics() {
        assert_eq!(min_degree(&complete_graph(5)).unwrap(), 4);
        let p4 = build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(min_degree(&p4).unwrap(), 1);
        assert_eq!(min_degree(&complete_graph(0)), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn local_connectivity_examples() {
        let k5 = complete_graph(5);
        assert_eq!(local_connectivity(&k5, 0, 3).unwrap(), 4);
        let c6 = cycle(6);
        assert_eq!(local_connectivity(&c6, 0, 3).unwrap(), 2);
        assert_eq!(
            local_connectivity(&k5, 2, 2),
            Err(ConnectivityError::IdenticalEndpoints)
        );
    }

    #[test]
    fn kappa_examples() {
        let pet = build_graph(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        let r = vertex_connectivity(&pet).unwrap();
        assert_eq!(r.kappa, 3);
        assert_eq!(r.min_degree, 3);
        let cut = r.witness_cut.unwrap();
        assert_eq!(cut.len(), 3);
        // removing the cut disconnects
        let keep: Vec<usize> = (0..10).filter(|v| !cut.contains(v)).collect();
        let mut seen = vec![false; 10];
        seen[keep[0]] = true;
        let mut stack = vec![keep[0]];
        while let Some(x) = stack.pop() {
            for y in pet.neighbors(x) {
                if keep.contains(&y) && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        assert!(keep.iter().any(|&v| !seen[v]));

        let two = build_graph(2, &[]).unwrap();
        let r = vertex_connectivity(&two).unwrap();
        assert_eq!(r.kappa, 0);
        assert_eq!(r.witness_cut, Some(vec![]));

        let k6 = complete_graph(6);
        let r = vertex_connectivity(&k6).unwrap();
        assert_eq!(r.kappa, 5);
        assert_eq!(r.witness_cut, None);
    }

    #[test]
    fn kappa_at_most_min_degree() {
        for n in 2..7 {
            let g = cycle(n.max(3));
            let r = vertex_connectivity(&g).unwrap();
            assert!(r.kappa <= r.min_degree);
        }
    }

    #[test]
    fn separation_of_overlapping_cliques() {
        // two K4 sharing vertices {0,1}
        let mut b = crate::graph::GraphBuilder::new(6);
        b.add_clique(&[0, 1, 2, 3]);
        b.add_clique(&[0, 1, 4, 5]);
        let g = b.freeze();
        let sep = find_separation(&g, 2).unwrap().unwrap();
        assert_eq!(sep.order(), 2);
        assert_eq!(sep.intersection(), vec![0, 1]);
        // no edges across private sides
        for &a in &sep.side_a {
            for &b2 in &sep.side_b {
                if !sep.side_b.contains(&a) && !sep.side_a.contains(&b2) {
                    assert!(!g.has_edge(a, b2));
                }
            }
        }
        assert!(find_separation(&complete_graph(6), 4).unwrap().is_none());
    }
}
