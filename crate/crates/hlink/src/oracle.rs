//! Brute-force reference implementations used by the test suites to
//! cross-check the production algorithms. Everything here enumerates
//! directly from definitions and shares no code with the solver or the
//! flow machinery.

use crate::graph::Graph;
use crate::linkage::TerminalInjection;
use crate::pattern::PatternMultigraph;
use std::collections::HashMap;

/// All simple s-t paths whose internal vertices avoid `forbidden_internal`,
/// in depth-first ascending order.
pub fn simple_paths(
    g: &Graph,
    s: usize,
    t: usize,
    forbidden_internal: &[usize],
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = vec![s];
    let mut used = vec![false; g.vertex_count()];
    used[s] = true;
    fn rec(
        g: &Graph,
        t: usize,
        forbidden: &[usize],
        path: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for w in g.neighbors(last) {
            if w == t {
                path.push(t);
                out.push(path.clone());
                path.pop();
            } else if !used[w] && !forbidden.contains(&w) {
                used[w] = true;
                path.push(w);
                rec(g, t, forbidden, path, used, out);
                path.pop();
                used[w] = false;
            }
        }
    }
    rec(g, t, forbidden_internal, &mut path, &mut used, &mut out);
    out
}

/// Do fully internally disjoint paths exist joining every pair, internal
/// vertices avoiding `forbidden_internal`, with each bare edge used at most
/// once per vertex pair? Naive product enumeration over per-pair path
/// tuples.
pub fn disjoint_path_tuple(
    g: &Graph,
    pairs: &[(usize, usize)],
    forbidden_internal: &[usize],
) -> Option<Vec<Vec<usize>>> {
    fn rec(
        g: &Graph,
        pairs: &[(usize, usize)],
        forbidden: &[usize],
        idx: usize,
        taken: &mut Vec<Vec<usize>>,
        bare: &mut Vec<(usize, usize)>,
    ) -> bool {
        if idx == pairs.len() {
            return true;
        }
        let (s, t) = pairs[idx];
        if s == t {
            if taken.iter().any(|p| p.contains(&s)) {
                return false;
            }
            taken.push(vec![s]);
            if rec(g, pairs, forbidden, idx + 1, taken, bare) {
                return true;
            }
            taken.pop();
            return false;
        }
        for cand in simple_paths(g, s, t, forbidden) {
            let internals = &cand[1..cand.len() - 1];
            if internals
                .iter()
                .any(|x| taken.iter().any(|p| p.contains(x)))
            {
                continue;
            }
            if taken
                .iter()
                .flat_map(|p| p[1..p.len() - 1].iter())
                .any(|x| cand.contains(x))
            {
                continue;
            }
            let key = (s.min(t), s.max(t));
            let is_bare = cand.len() == 2;
            if is_bare && bare.contains(&key) {
                continue;
            }
            if is_bare {
                bare.push(key);
            }
            taken.push(cand);
            if rec(g, pairs, forbidden, idx + 1, taken, bare) {
                return true;
            }
            taken.pop();
            if is_bare {
                bare.pop();
            }
        }
        false
    }
    let mut taken = Vec::new();
    let mut bare = Vec::new();
    if rec(g, pairs, forbidden_internal, 0, &mut taken, &mut bare) {
        Some(taken)
    } else {
        None
    }
}

/// Naive linkage decision: enumerate path tuples directly.
pub fn naive_solve_linkage(
    g: &Graph,
    h: &PatternMultigraph,
    tau: &TerminalInjection,
) -> Option<Vec<Vec<usize>>> {
    let imgs = tau.images();
    let pairs: Vec<(usize, usize)> = h
        .edges()
        .iter()
        .map(|&(u, v)| (imgs[u], imgs[v]))
        .collect();
    disjoint_path_tuple(g, &pairs, imgs)
}

/// Minimum u-v vertex cut by subset enumeration; adjacent pairs recurse on
/// the graph minus the edge and add one.
pub fn brute_min_vertex_cut(g: &Graph, u: usize, v: usize) -> usize {
    if g.has_edge(u, v) {
        return 1 + brute_min_vertex_cut(&g.without_edge(u, v), u, v);
    }
    let n = g.vertex_count();
    let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    for size in 0..=others.len() {
        for mask in 0u64..(1 << others.len()) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let removed: Vec<usize> = others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            if !connected_avoiding(g, u, v, &removed) {
                return size;
            }
        }
    }
    unreachable!("removing all other vertices must disconnect a non-adjacent pair");
}

fn connected_avoiding(g: &Graph, u: usize, v: usize, removed: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    seen[u] = true;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for y in g.neighbors(x) {
            if y == v {
                return true;
            }
            if !seen[y] && !removed.contains(&y) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

/// Maximum number of internally disjoint u-v paths, by dynamic programming
/// over the set of still-available internal vertices.
pub fn brute_max_disjoint_paths(g: &Graph, u: usize, v: usize) -> usize {
    let n = g.vertex_count();
    let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    let full: u64 = (1 << others.len()) - 1;
    let mut memo: HashMap<(u64, bool), usize> = HashMap::new();
    fn rec(
        g: &Graph,
        u: usize,
        v: usize,
        others: &[usize],
        avail: u64,
        bare_used: bool,
        memo: &mut HashMap<(u64, bool), usize>,
    ) -> usize {
        if let Some(&r) = memo.get(&(avail, bare_used)) {
            return r;
        }
        let mut best = 0;
        if g.has_edge(u, v) && !bare_used {
            best = best.max(1 + rec(g, u, v, others, avail, true, memo));
        }
        // enumerate simple u-v paths with internals drawn from avail
        let allowed: Vec<usize> = others
            .iter()
            .enumerate()
            .filter(|(i, _)| avail >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        let blocked: Vec<usize> = (0..g.vertex_count())
            .filter(|&x| x != u && x != v && !allowed.contains(&x))
            .collect();
        for p in simple_paths(g, u, v, &blocked) {
            if p.len() < 3 {
                continue; // the bare edge is handled above
            }
            let mut next = avail;
            for x in &p[1..p.len() - 1] {
                let i = others.iter().position(|y| y == x).unwrap();
                next &= !(1 << i);
            }
            best = best.max(1 + rec(g, u, v, others, next, bare_used, memo));
        }
        memo.insert((avail, bare_used), best);
        best
    }
    rec(g, u, v, &others, full, false, &mut memo)
}

/// Global vertex connectivity by subset enumeration.
pub fn brute_vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n >= 1);
    if (0..n).all(|u| (0..n).all(|v| u == v || g.has_edge(u, v))) {
        return n - 1;
    }
    for size in 0..n {
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let removed: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
            let kept: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 0).collect();
            if kept.len() < 2 {
                continue;
            }
            if !all_connected(g, &kept) {
                return size;
            }
        }
    }
    unreachable!("non-complete graph must have a cut");
}

fn all_connected(g: &Graph, kept: &[usize]) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    seen[kept[0]] = true;
    let mut stack = vec![kept[0]];
    while let Some(x) = stack.pop() {
        for y in g.neighbors(x) {
            if kept.contains(&y) && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    kept.iter().all(|&x| seen[x])
}

/// Does a simple path visit the given waypoints in order? Enumerates all
/// simple paths between the first and last waypoint and tests the interior
/// order.
pub fn has_ordered_path(g: &Graph, waypoints: &[usize]) -> bool {
    assert!(waypoints.len() >= 2);
    let s = waypoints[0];
    let t = *waypoints.last().unwrap();
    for p in simple_paths(g, s, t, &[]) {
        let mut positions = Vec::new();
        let mut ok = true;
        for w in waypoints {
            match p.iter().position(|x| x == w) {
                Some(i) => positions.push(i),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && positions.windows(2).all(|w| w[0] < w[1]) {
            return true;
        }
    }
    false
}

/// Direct k-linked test from the definition: every pairing of 2k distinct
/// vertices is joined by k disjoint paths.
pub fn is_k_linked_direct(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n < 2 * k {
        return false;
    }
    let verts: Vec<usize> = (0..n).collect();
    for subset in choose(&verts, 2 * k) {
        for pairing in all_matchings(&subset) {
            let terminals: Vec<usize> = subset.clone();
            if disjoint_path_tuple(g, &pairing, &terminals).is_none() {
                return false;
            }
        }
    }
    true
}

/// Direct k-ordered test: a cycle through every k vertices in prescribed
/// cyclic order. Tuples are canonicalized up to rotation and reflection.
pub fn is_k_ordered_direct(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n < k {
        return false;
    }
    let mut tuple = Vec::new();
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        k: usize,
        tuple: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = g.vertex_count();
        if tuple.len() == k {
            // canonical: first is minimal, second smaller than last
            if tuple[1] > tuple[k - 1] {
                return true; // reflection already covered
            }
            let mut pairs: Vec<(usize, usize)> =
                tuple.windows(2).map(|w| (w[0], w[1])).collect();
            pairs.push((tuple[k - 1], tuple[0]));
            return disjoint_path_tuple(g, &pairs, tuple).is_some();
        }
        for x in 0..n {
            if used[x] {
                continue;
            }
            if !tuple.is_empty() && x < tuple[0] {
                continue; // rotations: anchor the minimum at position 0
            }
            used[x] = true;
            tuple.push(x);
            let ok = rec(g, k, tuple, used);
            tuple.pop();
            used[x] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    rec(g, k, &mut tuple, &mut used)
}

pub fn choose(xs: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(xs: &[usize], from: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in from..xs.len() {
            cur.push(xs[i]);
            rec(xs, i + 1, size, cur, out);
            cur.pop();
        }
    }
    rec(xs, 0, size, &mut cur, &mut out);
    out
}

pub fn all_matchings(xs: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    fn rec(rest: &[usize], cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
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
            rec(&next, cur, out);
            cur.pop();
        }
    }
    rec(xs, &mut Vec::new(), &mut out);
    out
}
