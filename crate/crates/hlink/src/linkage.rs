//! Complete, budgeted decision procedures for disjoint-path systems:
//! realizing a pattern for a fixed terminal injection, H-linkedness over
//! all injections, linked pairs, and obstructions.
//!
//! Semantics: every internal vertex of every path must avoid all terminal
//! images and all vertices of all other paths; two paths sharing a pattern
//! endpoint share exactly that graph vertex. A pattern edge whose endpoint
//! images are adjacent may be realized by the bare edge, but parallel
//! copies of the same pattern edge may use the bare edge at most once.
//!
//! The search is depth-first over pattern edges ordered by ascending
//! degree product of their endpoint images. Paths grow neighbor by
//! neighbor in ascending index order. Branches are cut by (a) used-vertex
//! marking, (b) a residual reachability check that every unrealized edge's
//! endpoints stay connected, and (c) a twin rule: when several mutually
//! interchangeable vertices (equal neighborhoods) are free, only the
//! lowest-indexed one is tried, since any solution through a higher twin
//! maps to one through the lowest by swapping the two. The search is
//! deterministic, and raising the budget can only turn BudgetExceeded into
//! a definite verdict, never flip Found and NoLinkage.

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphBuilder};
use crate::pattern::PatternMultigraph;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinkageError {
    #[error("injection has {got} images but the pattern has {want} vertices")]
    InjectionLength { got: usize, want: usize },
    #[error("injection image {0} is out of range")]
    ImageOutOfRange(usize),
    #[error("injection repeats image {0}")]
    NotInjective(usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("expected distinct vertices")]
    DistinctVerticesRequired,
    #[error("triple {0:?} must name three distinct vertices")]
    MalformedTriple([usize; 3]),
    #[error("a linked-pair query needs at least two distinct vertices")]
    SetTooSmall,
}

/// Node budget for a single search. Raising the budget is monotone: it can
/// resolve `BudgetExceeded` but never flips a definite verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchBudget {
    Unbounded,
    MaxNodes(u64),
}

impl SearchBudget {
    fn limit(self) -> u64 {
        match self {
            SearchBudget::Unbounded => u64::MAX,
            SearchBudget::MaxNodes(m) => m,
        }
    }
}

/// Injective assignment of pattern vertices to graph vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TerminalInjection {
    images: Vec<usize>,
}

impl TerminalInjection {
    pub fn new(images: Vec<usize>) -> Self {
        TerminalInjection { images }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, pattern_vertex: usize) -> usize {
        self.images[pattern_vertex]
    }

    fn validate(&self, h: &PatternMultigraph, g: &Graph) -> Result<(), LinkageError> {
        if self.images.len() != h.vertex_count() {
            return Err(LinkageError::InjectionLength {
                got: self.images.len(),
                want: h.vertex_count(),
            });
        }
        let mut seen = vec![false; g.vertex_count()];
        for &x in &self.images {
            if x >= g.vertex_count() {
                return Err(LinkageError::ImageOutOfRange(x));
            }
            if seen[x] {
                return Err(LinkageError::NotInjective(x));
            }
            seen[x] = true;
        }
        Ok(())
    }
}

/// One path per pattern edge, in the pattern's edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    pub paths: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkageVerdict {
    Found(PathSystem),
    NoLinkage,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub verdict: LinkageVerdict,
    pub nodes_expanded: u64,
}

impl SolveOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self.verdict, LinkageVerdict::Found(_))
    }
}

// ---------------------------------------------------------------------------
// core search
// ---------------------------------------------------------------------------

#[derive(Debug, PartialEq, Eq)]
enum Step {
    Found,
    Exhausted,
    Budget,
}

pub(crate) enum RawVerdict {
    Found(Vec<Vec<usize>>),
    Exhausted,
    Budget,
}

/// Reusable search state bound to one graph; twin classes and scratch
/// buffers are computed once and shared across solves.
pub(crate) struct DisjointPathSolver<'g> {
    g: &'g Graph,
    words: usize,
    twins: Vec<Vec<usize>>,
    blocked: VertexSet,
    bare_used: Vec<(usize, usize)>,
    pairs: Vec<(usize, usize)>,
    paths: Vec<Vec<usize>>,
    nodes: u64,
    limit: u64,
    visit: Vec<u64>,
    frontier: Vec<u64>,
    nxt: Vec<u64>,
}

impl<'g> DisjointPathSolver<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        let words = n.div_ceil(64).max(1);
        DisjointPathSolver {
            g,
            words,
            twins: twin_lists(g),
            blocked: VertexSet::empty(n),
            bare_used: Vec::new(),
            pairs: Vec::new(),
            paths: Vec::new(),
            nodes: 0,
            limit: 0,
            visit: vec![0; words],
            frontier: vec![0; words],
            nxt: vec![0; words],
        }
    }

    /// Decide whether `pairs` can be joined by fully internally disjoint
    /// paths whose internal vertices avoid `forbidden` (which must contain
    /// every pair endpoint). A pair with equal endpoints is a zero-length
    /// path occupying just that vertex.
    pub fn solve(
        &mut self,
        pairs: &[(usize, usize)],
        forbidden: impl IntoIterator<Item = usize>,
        budget: SearchBudget,
    ) -> (RawVerdict, u64) {
        self.blocked.clear();
        for v in forbidden {
            self.blocked.insert(v);
        }
        for &(s, t) in pairs {
            self.blocked.insert(s);
            self.blocked.insert(t);
        }
        self.pairs = pairs.to_vec();
        self.paths.clear();
        self.bare_used.clear();
        self.nodes = 0;
        self.limit = budget.limit();
        let step = self.place(0);
        let raw = match step {
            Step::Found => RawVerdict::Found(std::mem::take(&mut self.paths)),
            Step::Exhausted => RawVerdict::Exhausted,
            Step::Budget => RawVerdict::Budget,
        };
        (raw, self.nodes)
    }

    fn place(&mut self, idx: usize) -> Step {
        if idx == self.pairs.len() {
            return Step::Found;
        }
        let (s, t) = self.pairs[idx];
        if s == t {
            self.paths.push(vec![s]);
            let r = self.place(idx + 1);
            if r == Step::Exhausted {
                self.paths.pop();
            }
            return r;
        }
        self.paths.push(vec![s]);
        let r = self.extend(idx, t);
        if r == Step::Exhausted {
            self.paths.pop();
        }
        r
    }

    fn extend(&mut self, idx: usize, t: usize) -> Step {
        let s = self.pairs[idx].0;
        let f = *self.paths[idx].last().unwrap();
        for wi in 0..self.words {
            let mut bits = self.g.row(f)[wi];
            while bits != 0 {
                let w = (wi << 6) | bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if w == t {
                    let bare = self.paths[idx].len() == 1;
                    let key = (s.min(t), s.max(t));
                    if bare && self.bare_used.contains(&key) {
                        continue; // the bare edge already realizes a parallel copy
                    }
                    self.nodes += 1;
                    if self.nodes > self.limit {
                        return Step::Budget;
                    }
                    self.paths[idx].push(t);
                    if bare {
                        self.bare_used.push(key);
                    }
                    let r = self.place(idx + 1);
                    if r == Step::Exhausted {
                        if bare {
                            self.bare_used.pop();
                        }
                        self.paths[idx].pop();
                        continue;
                    }
                    return r;
                }
                if self.blocked.contains(w) {
                    continue;
                }
                if self.twins[w]
                    .iter()
                    .take_while(|&&x| x < w)
                    .any(|&x| !self.blocked.contains(x))
                {
                    continue; // an interchangeable lower twin is still free
                }
                self.nodes += 1;
                if self.nodes > self.limit {
                    return Step::Budget;
                }
                self.blocked.insert(w);
                self.paths[idx].push(w);
                let r = if self.feasible(idx, t) {
                    self.extend(idx, t)
                } else {
                    Step::Exhausted
                };
                if r == Step::Exhausted {
                    self.paths[idx].pop();
                    self.blocked.remove(w);
                    continue;
                }
                return r;
            }
        }
        Step::Exhausted
    }

    /// Every unrealized pair must stay connected in the residual graph.
    fn feasible(&mut self, idx: usize, t: usize) -> bool {
        let f = *self.paths[idx].last().unwrap();
        if !self.reachable(f, t) {
            return false;
        }
        for j in idx + 1..self.pairs.len() {
            let (sj, tj) = self.pairs[j];
            if sj != tj && !self.reachable(sj, tj) {
                return false;
            }
        }
        true
    }

    /// Is `to` reachable from `from` through unblocked internal vertices?
    fn reachable(&mut self, from: usize, to: usize) -> bool {
        if self.g.has_edge(from, to) {
            return true;
        }
        let words = self.words;
        self.visit[..words].fill(0);
        self.frontier[..words].fill(0);
        self.visit[from >> 6] |= 1 << (from & 63);
        self.frontier[from >> 6] |= 1 << (from & 63);
        let trow_mask = |buf: &[u64], g: &Graph| -> bool {
            let trow = g.row(to);
            buf.iter().zip(trow).any(|(&b, &t)| b & t != 0)
        };
        loop {
            self.nxt[..words].fill(0);
            for wi in 0..words {
                let mut bits = self.frontier[wi];
                while bits != 0 {
                    let v = (wi << 6) | bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let row = self.g.row(v);
                    for k in 0..words {
                        self.nxt[k] |= row[k];
                    }
                }
            }
            let mut any = false;
            for k in 0..words {
                self.nxt[k] &= !self.blocked.words()[k] & !self.visit[k];
                any |= self.nxt[k] != 0;
            }
            if !any {
                return false;
            }
            if trow_mask(&self.nxt[..words], self.g) {
                return true;
            }
            for k in 0..words {
                self.visit[k] |= self.nxt[k];
            }
            std::mem::swap(&mut self.frontier, &mut self.nxt);
        }
    }
}

/// Vertices with equal neighborhoods (with or without each other) are
/// interchangeable by an automorphism that fixes everything else.
fn twin_lists(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut lists = vec![Vec::new(); n];
    let mut closed: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    let mut open: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for v in 0..n {
        let mut row = g.row(v).to_vec();
        open.entry(row.clone()).or_default().push(v);
        row[v >> 6] |= 1 << (v & 63);
        closed.entry(row).or_default().push(v);
    }
    for group in closed.values().chain(open.values()) {
        if group.len() > 1 {
            for &v in group {
                for &w in group {
                    if w != v {
                        lists[v].push(w);
                    }
                }
            }
        }
    }
    for l in &mut lists {
        l.sort_unstable();
        l.dedup();
    }
    lists
}

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

/// Decide whether the pattern can be realized for the given injection.
pub fn solve_linkage(
    g: &Graph,
    h: &PatternMultigraph,
    tau: &TerminalInjection,
    budget: SearchBudget,
) -> Result<SolveOutcome, LinkageError> {
    tau.validate(h, g)?;
    let imgs = tau.images();
    let mut order: Vec<usize> = (0..h.edge_count()).collect();
    order.sort_by_key(|&i| {
        let (u, v) = h.edges()[i];
        (g.degree(imgs[u]) * g.degree(imgs[v]), i)
    });
    let pairs: Vec<(usize, usize)> = order
        .iter()
        .map(|&i| {
            let (u, v) = h.edges()[i];
            (imgs[u], imgs[v])
        })
        .collect();
    let mut solver = DisjointPathSolver::new(g);
    let (raw, nodes) = solver.solve(&pairs, imgs.iter().copied(), budget);
    let verdict = match raw {
        RawVerdict::Found(mut found) => {
            let mut paths = vec![Vec::new(); found.len()];
            for (&slot, path) in order.iter().zip(found.drain(..)) {
                paths[slot] = path;
            }
            let sys = PathSystem { paths };
            debug_assert_eq!(validate_path_system(g, h, tau, &sys), Ok(()));
            LinkageVerdict::Found(sys)
        }
        RawVerdict::Exhausted => LinkageVerdict::NoLinkage,
        RawVerdict::Budget => LinkageVerdict::BudgetExceeded,
    };
    Ok(SolveOutcome {
        verdict,
        nodes_expanded: nodes,
    })
}

/// Independent check of the path-system invariants; used to cross-examine
/// every positive answer the solver produces.
pub fn validate_path_system(
    g: &Graph,
    h: &PatternMultigraph,
    tau: &TerminalInjection,
    sys: &PathSystem,
) -> Result<(), String> {
    let imgs = tau.images();
    if sys.paths.len() != h.edge_count() {
        return Err(format!(
            "{} paths for {} pattern edges",
            sys.paths.len(),
            h.edge_count()
        ));
    }
    let terminals: std::collections::HashSet<usize> = imgs.iter().copied().collect();
    let mut bare_pairs: Vec<(usize, usize)> = Vec::new();
    for (i, path) in sys.paths.iter().enumerate() {
        let (u, v) = h.edges()[i];
        if path.len() < 2 {
            return Err(format!("path {i} has fewer than one edge"));
        }
        if path[0] != imgs[u] || *path.last().unwrap() != imgs[v] {
            return Err(format!("path {i} does not join its terminal images"));
        }
        for w in path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(format!("path {i} uses a non-edge ({}, {})", w[0], w[1]));
            }
        }
        let mut set = std::collections::HashSet::new();
        for &x in path {
            if !set.insert(x) {
                return Err(format!("path {i} repeats vertex {x}"));
            }
        }
        for &x in &path[1..path.len() - 1] {
            if terminals.contains(&x) {
                return Err(format!("path {i} passes through terminal image {x}"));
            }
        }
        if path.len() == 2 {
            let key = (path[0].min(path[1]), path[0].max(path[1]));
            if bare_pairs.contains(&key) {
                return Err(format!("bare edge {key:?} realized twice"));
            }
            bare_pairs.push(key);
        }
    }
    for i in 0..sys.paths.len() {
        for j in i + 1..sys.paths.len() {
            let pj: std::collections::HashSet<usize> = sys.paths[j].iter().copied().collect();
            for &x in &sys.paths[i][1..sys.paths[i].len() - 1] {
                if pj.contains(&x) {
                    return Err(format!("internal vertex {x} of path {i} reused by path {j}"));
                }
            }
            let pi: std::collections::HashSet<usize> = sys.paths[i].iter().copied().collect();
            for &x in &sys.paths[j][1..sys.paths[j].len() - 1] {
                if pi.contains(&x) {
                    return Err(format!("internal vertex {x} of path {j} reused by path {i}"));
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HLinkedVerdict {
    Yes,
    /// Not H-linked; carries the lexicographically least injection known to
    /// fail (absent when the graph is smaller than the pattern).
    No(Option<TerminalInjection>),
    Unknown,
}

/// Decide H-linkedness by enumerating injections in lexicographic order,
/// pruned modulo the automorphisms of the pattern.
pub fn is_h_linked(g: &Graph, h: &PatternMultigraph, budget: SearchBudget) -> HLinkedVerdict {
    let n = g.vertex_count();
    let hn = h.vertex_count();
    if n < hn {
        return HLinkedVerdict::No(None);
    }
    let auts: Vec<Vec<usize>> = h
        .automorphisms()
        .into_iter()
        .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
        .collect();
    let mut solver = DisjointPathSolver::new(g);
    let edges = h.edges();
    let mut tau: Vec<usize> = Vec::with_capacity(hn);
    let mut used = vec![false; n];
    let mut any_budget = false;

    fn rec(
        tau: &mut Vec<usize>,
        used: &mut Vec<bool>,
        hn: usize,
        n: usize,
        auts: &[Vec<usize>],
        edges: &[(usize, usize)],
        g: &Graph,
        solver: &mut DisjointPathSolver<'_>,
        budget: SearchBudget,
        any_budget: &mut bool,
    ) -> Option<TerminalInjection> {
        if tau.len() == hn {
            // canonical representative: no automorphism produces a
            // lexicographically smaller image sequence
            for sigma in auts {
                let smaller = (0..hn)
                    .map(|i| tau[sigma[i]].cmp(&tau[i]))
                    .find(|o| o.is_ne());
                if smaller == Some(std::cmp::Ordering::Less) {
                    return None;
                }
            }
            let mut order: Vec<usize> = (0..edges.len()).collect();
            order.sort_by_key(|&i| {
                let (u, v) = edges[i];
                (g.degree(tau[u]) * g.degree(tau[v]), i)
            });
            let pairs: Vec<(usize, usize)> = order
                .iter()
                .map(|&i| (tau[edges[i].0], tau[edges[i].1]))
                .collect();
            let (raw, _) = solver.solve(&pairs, tau.iter().copied(), budget);
            return match raw {
                RawVerdict::Exhausted => Some(TerminalInjection::new(tau.clone())),
                RawVerdict::Budget => {
                    *any_budget = true;
                    None
                }
                RawVerdict::Found(_) => None,
            };
        }
        for x in 0..n {
            if used[x] {
                continue;
            }
            used[x] = true;
            tau.push(x);
            let hit = rec(tau, used, hn, n, auts, edges, g, solver, budget, any_budget);
            tau.pop();
            used[x] = false;
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    if let Some(witness) = rec(
        &mut tau,
        &mut used,
        hn,
        n,
        &auts,
        edges,
        g,
        &mut solver,
        budget,
        &mut any_budget,
    ) {
        return HLinkedVerdict::No(Some(witness));
    }
    if any_budget {
        HLinkedVerdict::Unknown
    } else {
        HLinkedVerdict::Yes
    }
}

/// A pairing of chosen set vertices, each pair to be joined by a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkedPairVerdict {
    Yes,
    No(Pairing),
    Unknown,
}

/// Is (G, X) linked: for every k and every pairing of 2k distinct vertices
/// of X, do k fully disjoint paths exist whose internal vertices avoid all
/// of X?
pub fn is_linked_pair(
    g: &Graph,
    x: &[usize],
    budget: SearchBudget,
) -> Result<LinkedPairVerdict, LinkageError> {
    let mut xs = x.to_vec();
    xs.sort_unstable();
    for w in xs.windows(2) {
        if w[0] == w[1] {
            return Err(LinkageError::DistinctVerticesRequired);
        }
    }
    if xs.len() < 2 {
        return Err(LinkageError::SetTooSmall);
    }
    for &v in &xs {
        if v >= g.vertex_count() {
            return Err(LinkageError::VertexOutOfRange(v));
        }
    }
    let mut solver = DisjointPathSolver::new(g);
    let mut any_budget = false;
    for k in 1..=xs.len() / 2 {
        for subset in subsets(&xs, 2 * k) {
            for pairing in perfect_matchings(&subset) {
                let (raw, _) = solver.solve(&pairing, xs.iter().copied(), budget);
                match raw {
                    RawVerdict::Exhausted => {
                        return Ok(LinkedPairVerdict::No(Pairing { pairs: pairing }))
                    }
                    RawVerdict::Budget => any_budget = true,
                    RawVerdict::Found(_) => {}
                }
            }
        }
    }
    Ok(if any_budget {
        LinkedPairVerdict::Unknown
    } else {
        LinkedPairVerdict::Yes
    })
}

fn subsets(xs: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(xs: &[usize], from: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in from..xs.len() {
            if xs.len() - i < size - cur.len() {
                break;
            }
            cur.push(xs[i]);
            rec(xs, i + 1, size, cur, out);
            cur.pop();
        }
    }
    rec(xs, 0, size, &mut cur, &mut out);
    out
}

fn perfect_matchings(xs: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut rest: Vec<usize> = xs.to_vec();
    let mut cur = Vec::new();
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        let first = rest[0];
        for i in 1..rest.len() {
            let partner = rest[i];
            let mut next: Vec<usize> = rest[1..].to_vec();
            next.remove(i - 1);
            cur.push((first, partner));
            rec(&mut next, cur, out);
            cur.pop();
        }
    }
    rec(&mut rest, &mut cur, &mut out);
    out
}

/// Append twins of `b` and `c`: the new vertices copy the old
/// neighborhoods as evaluated in the input graph, so b' is not adjacent to
/// b nor to c'.
pub fn double_vertices(g: &Graph, b: usize, c: usize) -> Result<(Graph, usize, usize), LinkageError> {
    if b == c {
        return Err(LinkageError::DistinctVerticesRequired);
    }
    for v in [b, c] {
        if v >= g.vertex_count() {
            return Err(LinkageError::VertexOutOfRange(v));
        }
    }
    let n = g.vertex_count();
    let mut bld = GraphBuilder::new(n + 2);
    for (u, v) in g.edges() {
        bld.add_edge(u, v);
    }
    for w in g.neighbors(b) {
        bld.add_edge(n, w);
    }
    for w in g.neighbors(c) {
        bld.add_edge(n + 1, w);
    }
    Ok((bld.freeze(), n, n + 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObstructionVerdict {
    Yes,
    /// Three disjoint paths avoiding the a-to-a' pairing exist.
    No(Vec<Vec<usize>>),
    Unknown,
}

/// Is (G, {b,b'}, {c,c'}, (a,a')) an obstruction: does every system of
/// three vertex-disjoint paths from {a,b,b'} to {a',c,c'} route a to a'?
/// Decided by trying each bijection that avoids the a-to-a' assignment.
#[allow(clippy::too_many_arguments)]
pub fn is_obstruction(
    g: &Graph,
    a: usize,
    b: usize,
    b_prime: usize,
    a_prime: usize,
    c: usize,
    c_prime: usize,
    budget: SearchBudget,
) -> Result<ObstructionVerdict, LinkageError> {
    let src = [a, b, b_prime];
    let dst = [a_prime, c, c_prime];
    for triple in [src, dst] {
        for &v in &triple {
            if v >= g.vertex_count() {
                return Err(LinkageError::VertexOutOfRange(v));
            }
        }
        if triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2] {
            return Err(LinkageError::MalformedTriple(triple));
        }
    }
    let mut solver = DisjointPathSolver::new(g);
    let mut any_budget = false;
    for perm in [[1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        // perm[0] != 0 in all cases: a never maps to a'
        let pairs: Vec<(usize, usize)> = (0..3).map(|i| (src[i], dst[perm[i]])).collect();
        let collision = (0..3).any(|i| (0..3).any(|j| i != j && pairs[i].0 == pairs[j].1));
        if collision {
            continue; // two paths would share an endpoint: impossible
        }
        let forbidden = src.iter().chain(dst.iter()).copied();
        let (raw, _) = solver.solve(&pairs, forbidden, budget);
        match raw {
            RawVerdict::Found(paths) => return Ok(ObstructionVerdict::No(paths)),
            RawVerdict::Budget => any_budget = true,
            RawVerdict::Exhausted => {}
        }
    }
    Ok(if any_budget {
        ObstructionVerdict::Unknown
    } else {
        ObstructionVerdict::Yes
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, complete_graph};
    use crate::pattern::make_pattern;

    #[test]
    fn complete_graph_links_p4() {
        let g = complete_graph(6);
        let h = make_pattern("p4").unwrap();
        let tau = TerminalInjection::new(vec![0, 2, 4, 5]);
        let out = solve_linkage(&g, &h, &tau, SearchBudget::Unbounded).unwrap();
        match out.verdict {
            LinkageVerdict::Found(sys) => {
                assert_eq!(validate_path_system(&g, &h, &tau, &sys), Ok(()));
            }
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn invalid_injections_rejected() {
        let g = complete_graph(4);
        let h = make_pattern("p4").unwrap();
        let bad = TerminalInjection::new(vec![0, 1, 1, 2]);
        assert_eq!(
            solve_linkage(&g, &h, &bad, SearchBudget::Unbounded),
            Err(LinkageError::NotInjective(1))
        );
        let short = TerminalInjection::new(vec![0, 1]);
        assert!(matches!(
            solve_linkage(&g, &h, &short, SearchBudget::Unbounded),
            Err(LinkageError::InjectionLength { .. })
        ));
    }

    #[test]
    fn double_edge_needs_a_third_vertex() {
        let c2 = make_pattern("c2").unwrap();
        let k2 = complete_graph(2);
        let tau = TerminalInjection::new(vec![0, 1]);
        let out = solve_linkage(&k2, &c2, &tau, SearchBudget::Unbounded).unwrap();
        assert_eq!(out.verdict, LinkageVerdict::NoLinkage);

        let k3 = complete_graph(3);
        let out = solve_linkage(&k3, &c2, &tau, SearchBudget::Unbounded).unwrap();
        assert!(out.is_found());
    }

    #[test]
    fn budget_is_monotone() {
        let g = complete_graph(6);
        let h = make_pattern("p3+p3").unwrap();
        let tau = TerminalInjection::new(vec![0, 1, 2, 3, 4, 5]);
        let full = solve_linkage(&g, &h, &tau, SearchBudget::Unbounded).unwrap();
        let mut seen_budget = false;
        for cap in 0..full.nodes_expanded + 2 {
            let out = solve_linkage(&g, &h, &tau, SearchBudget::MaxNodes(cap)).unwrap();
            match out.verdict {
                LinkageVerdict::BudgetExceeded => seen_budget = true,
                ref v => assert_eq!(*v, full.verdict),
            }
        }
        assert!(seen_budget);
    }

    #[test]
    fn k5_is_k3_linked() {
        let g = complete_graph(5);
        let h = make_pattern("k3").unwrap();
        assert_eq!(
            is_h_linked(&g, &h, SearchBudget::Unbounded),
            HLinkedVerdict::Yes
        );
    }

    #[test]
    fn smaller_graph_is_never_linked() {
        let g = complete_graph(3);
        let h = make_pattern("p4").unwrap();
        assert_eq!(
            is_h_linked(&g, &h, SearchBudget::Unbounded),
            HLinkedVerdict::No(None)
        );
    }

    #[test]
    fn star_center_blocks_linked_pair() {
        // K_{1,6}: center 0, leaves 1..=6
        let edges: Vec<(usize, usize)> = (1..=6).map(|i| (0, i)).collect();
        let g = build_graph(7, &edges).unwrap();
        let x: Vec<usize> = (1..=6).collect();
        match is_linked_pair(&g, &x, SearchBudget::Unbounded).unwrap() {
            LinkedPairVerdict::No(p) => {
                assert_eq!(p.pairs.len(), 2, "first failure should be a 2-pairing");
            }
            v => panic!("expected No, got {v:?}"),
        }
    }

    #[test]
    fn complete_graph_linked_pair() {
        let g = complete_graph(7);
        let x = [0, 1, 2, 3, 4, 5];
        assert_eq!(
            is_linked_pair(&g, &x, SearchBudget::Unbounded).unwrap(),
            LinkedPairVerdict::Yes
        );
    }

    #[test]
    fn doubling_a_triangle() {
        let g = complete_graph(3);
        let (d, b1, c1) = double_vertices(&g, 0, 1).unwrap();
        assert_eq!(d.vertex_count(), 5);
        assert_eq!((b1, c1), (3, 4));
        assert_eq!(d.neighbors(3).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(d.neighbors(4).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(d.degree(3), g.degree(0));
        assert_eq!(d.degree(4), g.degree(1));
    }

    #[test]
    fn complete_graph_is_never_an_obstruction() {
        let g = complete_graph(8);
        let v = is_obstruction(&g, 0, 1, 2, 3, 4, 5, SearchBudget::Unbounded).unwrap();
        assert!(matches!(v, ObstructionVerdict::No(_)));
    }

    #[test]
    fn malformed_triples_rejected() {
        let g = complete_graph(8);
        assert!(matches!(
            is_obstruction(&g, 0, 0, 2, 3, 4, 5, SearchBudget::Unbounded),
            Err(LinkageError::MalformedTriple(_))
        ));
    }
}
