//! Generators for the lower-bound extremal graphs.
//!
//! Each generator returns the graph together with a per-vertex label
//! table, the claimed size / minimum degree / connectivity triple, and a
//! witness (pattern, injection) that is expected to admit no linkage.
//! Clique chains share marked pairs or triples between consecutive
//! cliques; labels follow the figure vocabulary (`p1`, `x0`, `v3`, ...),
//! so command-line callers can name terminals directly.

use crate::graph::{Graph, GraphBuilder};
use crate::graph6::encode_graph6;
use crate::linkage::TerminalInjection;
use crate::pattern::{make_pattern, PatternMultigraph};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{family}: parameter {param}={got} must be at least {min}")]
    ParamTooSmall {
        family: &'static str,
        param: &'static str,
        got: usize,
        min: usize,
    },
}

/// A generated extremal graph with its claimed metadata and the terminal
/// placement that should not be linkable.
#[derive(Clone, Debug)]
pub struct ConstructedInstance {
    pub graph: Graph,
    pub labels: Vec<String>,
    pub family: &'static str,
    pub params: BTreeMap<&'static str, u64>,
    pub claimed_n: usize,
    pub claimed_min_degree: usize,
    pub claimed_kappa: usize,
    pub witness_pattern: PatternMultigraph,
    pub witness_pattern_expr: String,
    pub witness_tau: TerminalInjection,
}

#[derive(Serialize)]
pub struct WitnessMetadata {
    pub pattern: String,
    pub tau_by_label: Vec<String>,
}

#[derive(Serialize)]
pub struct InstanceMetadata {
    pub family: &'static str,
    pub params: BTreeMap<&'static str, u64>,
    pub labels: Vec<String>,
    pub claimed_n: usize,
    pub claimed_min_degree: usize,
    pub claimed_kappa: usize,
    pub witness: WitnessMetadata,
    pub graph6: String,
}

impl ConstructedInstance {
    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn metadata(&self) -> InstanceMetadata {
        InstanceMetadata {
            family: self.family,
            params: self.params.clone(),
            labels: self.labels.clone(),
            claimed_n: self.claimed_n,
            claimed_min_degree: self.claimed_min_degree,
            claimed_kappa: self.claimed_kappa,
            witness: WitnessMetadata {
                pattern: self.witness_pattern_expr.clone(),
                tau_by_label: self
                    .witness_tau
                    .images()
                    .iter()
                    .map(|&v| self.labels[v].clone())
                    .collect(),
            },
            graph6: encode_graph6(&self.graph),
        }
    }
}

fn computed_min_degree(g: &Graph) -> usize {
    (0..g.vertex_count()).map(|v| g.degree(v)).min().unwrap()
}

// ---------------------------------------------------------------------------
// two overlapping cliques
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoCliquesVariant {
    P4,
    K2P3,
    P3P3,
}

impl TwoCliquesVariant {
    fn overlap(self) -> usize {
        match self {
            TwoCliquesVariant::P4 | TwoCliquesVariant::K2P3 => 2,
            TwoCliquesVariant::P3P3 => 3,
        }
    }

    fn min_n(self) -> usize {
        match self {
            TwoCliquesVariant::P4 | TwoCliquesVariant::K2P3 => 10,
            TwoCliquesVariant::P3P3 => 12,
        }
    }
}

/// Two cliques of sizes ceil((n+s)/2) and floor((n+s)/2) overlapping in s
/// vertices, plus the variant's cross edges. The witness asks for the
/// ordering or split that the shared vertices cannot carry.
pub fn two_cliques(
    n: usize,
    variant: TwoCliquesVariant,
) -> Result<ConstructedInstance, ConstructionError> {
    if n < variant.min_n() {
        return Err(ConstructionError::ParamTooSmall {
            family: "two-cliques",
            param: "n",
            got: n,
            min: variant.min_n(),
        });
    }
    let s = variant.overlap();
    let size1 = (n + s).div_ceil(2);
    let size2 = (n + s) / 2;
    let shared: Vec<usize> = (0..s).collect();
    let g1_private: Vec<usize> = (s..size1).collect();
    let g2_private: Vec<usize> = (size1..size1 + size2 - s).collect();
    debug_assert_eq!(size1 + size2 - s, n);

    let mut labels = vec![String::new(); n];
    for (i, &v) in shared.iter().enumerate() {
        labels[v] = format!("s{}", i + 1);
    }
    for (i, &v) in g1_private.iter().enumerate() {
        labels[v] = format!("g1_{i}");
    }
    for (i, &v) in g2_private.iter().enumerate() {
        labels[v] = format!("g2_{i}");
    }

    let mut b = GraphBuilder::new(n);
    let clique1: Vec<usize> = shared.iter().chain(&g1_private).copied().collect();
    let clique2: Vec<usize> = shared.iter().chain(&g2_private).copied().collect();
    b.add_clique(&clique1);
    b.add_clique(&clique2);

    let (pattern_expr, tau, param_variant) = match variant {
        TwoCliquesVariant::P4 => {
            let (p1, p3) = (g1_private[0], g1_private[1]);
            let (p4, p2) = (g2_private[0], g2_private[1]);
            b.add_edge(p1, p4);
            for (v, name) in [(p1, "p1"), (p2, "p2"), (p3, "p3"), (p4, "p4")] {
                labels[v] = name.into();
            }
            ("p4", vec![p1, p2, p3, p4], "p4")
        }
        TwoCliquesVariant::K2P3 => {
            let (a, p2) = (g1_private[0], g1_private[1]);
            let (p1, bb, p3) = (g2_private[0], g2_private[1], g2_private[2]);
            b.add_edge(p2, bb);
            b.add_edge(p1, a);
            for (v, name) in [(a, "a"), (bb, "b"), (p1, "p1"), (p2, "p2"), (p3, "p3")] {
                labels[v] = name.into();
            }
            ("k2+p3", vec![a, bb, p1, p2, p3], "k2p3")
        }
        TwoCliquesVariant::P3P3 => {
            let p: Vec<usize> = g1_private[..3].to_vec();
            let q: Vec<usize> = g2_private[..3].to_vec();
            for i in 0..3 {
                b.add_edge(p[i], q[i]);
                labels[p[i]] = format!("p{}", i + 1);
                labels[q[i]] = format!("q{}", i + 1);
            }
            ("p3+p3", vec![p[0], q[1], p[2], q[0], p[1], q[2]], "p3p3")
        }
    };
    let graph = b.freeze();
    let claimed_min_degree = computed_min_degree(&graph);
    let claimed_kappa = crate::connectivity::vertex_connectivity(&graph)
        .expect("nonempty")
        .kappa;
    let mut params = BTreeMap::new();
    params.insert("n", n as u64);
    params.insert(
        "variant",
        match param_variant {
            "p4" => 0,
            "k2p3" => 1,
            _ => 2,
        },
    );
    Ok(ConstructedInstance {
        graph,
        labels,
        family: match param_variant {
            "p4" => "two-cliques-p4",
            "k2p3" => "two-cliques-k2p3",
            _ => "two-cliques-p3p3",
        },
        params,
        claimed_n: n,
        claimed_min_degree,
        claimed_kappa,
        witness_pattern: make_pattern(pattern_expr).unwrap(),
        witness_pattern_expr: pattern_expr.into(),
        witness_tau: TerminalInjection::new(tau),
    })
}

// ---------------------------------------------------------------------------
// three cliques hanging off two independent vertices
// ---------------------------------------------------------------------------

/// Three balanced cliques on n-2 vertices in total, every clique vertex
/// joined to two additional independent vertices. Placing one triangle
/// terminal in each clique leaves only two crossing points for three
/// pairwise paths.
pub fn three_cliques_k3(n: usize) -> Result<ConstructedInstance, ConstructionError> {
    if n < 8 {
        return Err(ConstructionError::ParamTooSmall {
            family: "three-cliques-k3",
            param: "n",
            got: n,
            min: 8,
        });
    }
    let total = n - 2;
    let base = total / 3;
    let rem = total % 3;
    let sizes = [
        base + usize::from(rem > 0),
        base + usize::from(rem > 1),
        base,
    ];
    let mut b = GraphBuilder::new(n);
    let mut labels = vec![String::new(); n];
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for (ci, &size) in sizes.iter().enumerate() {
        let members: Vec<usize> = (next..next + size).collect();
        next += size;
        for (i, &v) in members.iter().enumerate() {
            labels[v] = format!("c{}_{}", ci + 1, i);
        }
        b.add_clique(&members);
        cliques.push(members);
    }
    let (u, w) = (n - 2, n - 1);
    labels[u] = "u".into();
    labels[w] = "w".into();
    for hub in [u, w] {
        for clique in &cliques {
            for &v in clique {
                b.add_edge(hub, v);
            }
        }
    }
    let graph = b.freeze();
    let claimed_min_degree = sizes[2] - 1 + 2;
    debug_assert_eq!(computed_min_degree(&graph), claimed_min_degree);
    let tau = vec![cliques[0][0], cliques[1][0], cliques[2][0]];
    let mut params = BTreeMap::new();
    params.insert("n", n as u64);
    Ok(ConstructedInstance {
        graph,
        labels,
        family: "three-cliques-k3",
        params,
        claimed_n: n,
        claimed_min_degree,
        claimed_kappa: 2,
        witness_pattern: make_pattern("k3").unwrap(),
        witness_pattern_expr: "k3".into(),
        witness_tau: TerminalInjection::new(tau),
    })
}

// ---------------------------------------------------------------------------
// 4-connected family for the four-vertex path, N = delta^2
// ---------------------------------------------------------------------------

/// Chain of delta-1 cliques of size delta+1 with marked quadruples, the
/// first a identified with the second b, and two extra vertices p1, p4
/// attached to the ends of the spine path. No path visits p1, a_last, b1,
/// p4 in order.
pub fn construct_p4_k4(delta: usize) -> Result<ConstructedInstance, ConstructionError> {
    if delta < 4 {
        return Err(ConstructionError::ParamTooSmall {
            family: "p4-k4",
            param: "delta",
            got: delta,
            min: 4,
        });
    }
    let n = delta * delta;
    let mut b = GraphBuilder::new(n);
    let mut labels = vec![String::new(); n];
    let k = delta - 1; // number of cliques
    let mut a = vec![0usize; k + 1]; // 1-based
    let mut bb = vec![0usize; k + 1];
    let mut x = vec![0usize; k + 1];
    let mut y = vec![0usize; k + 1];
    let p1 = 0;
    let p4 = 1;
    labels[p1] = "p1".into();
    labels[p4] = "p4".into();
    let mut next = 2;
    let mut alloc = |count: usize, next: &mut usize| -> Vec<usize> {
        let vs: Vec<usize> = (*next..*next + count).collect();
        *next += count;
        vs
    };
    for i in 1..=k {
        // the second clique reuses a1 as its b-vertex
        let fresh = if i == 2 { delta } else { delta + 1 };
        let vs = alloc(fresh, &mut next);
        let mut members = vs.clone();
        let mut slot = 0;
        a[i] = members[slot];
        labels[a[i]] = format!("a{i}");
        slot += 1;
        if i == 2 {
            bb[2] = a[1];
            members.push(a[1]);
        } else {
            bb[i] = members[slot];
            labels[bb[i]] = format!("b{i}");
            slot += 1;
        }
        x[i] = vs[slot];
        labels[x[i]] = format!("x{i}");
        slot += 1;
        y[i] = vs[slot];
        labels[y[i]] = format!("y{i}");
        slot += 1;
        for (j, &v) in vs[slot..].iter().enumerate() {
            labels[v] = format!("z{i}_{j}");
        }
        b.add_clique(&members);
    }
    debug_assert_eq!(next, n);
    for i in 1..=k - 1 {
        if a[i] != bb[i + 1] {
            b.add_edge(a[i], bb[i + 1]);
        }
        b.add_edge(x[i], x[i + 1]);
        b.add_edge(y[i], y[i + 1]);
    }
    // spine path b1 b2 a2 b3 a3 ... b_{k} a_{k}, where b2 = a1
    let mut spine = vec![bb[1]];
    for i in 2..=k {
        spine.push(bb[i]);
        spine.push(a[i]);
    }
    debug_assert_eq!(spine.len(), 2 * delta - 3);
    b.add_edge(p1, p4);
    for &v in &spine[..delta - 1] {
        b.add_edge(p1, v);
    }
    for &v in &spine[spine.len() - (delta - 1)..] {
        b.add_edge(p4, v);
    }
    let graph = b.freeze();
    assert_eq!(computed_min_degree(&graph), delta);
    let mut params = BTreeMap::new();
    params.insert("delta", delta as u64);
    Ok(ConstructedInstance {
        graph,
        labels,
        family: "p4-k4",
        params,
        claimed_n: n,
        claimed_min_degree: delta,
        claimed_kappa: 4,
        witness_pattern: make_pattern("p4").unwrap(),
        witness_pattern_expr: "p4".into(),
        witness_tau: TerminalInjection::new(vec![p1, a[k], bb[1], p4]),
    })
}

// ---------------------------------------------------------------------------
// 5-connected family for the four-vertex path, N = 4d^3 - 33d^2 + 84d - 58
// ---------------------------------------------------------------------------

/// Three-level construction: four terminals on a path, a spine of r
/// vertices fanned out from the terminals, and a long chain of cliques
/// sharing marked pairs, with one chain vertex per clique fanned out from
/// the r spine. No path visits p3, p1, p4, p2 in order.
pub fn construct_p4_k5(delta: usize) -> Result<ConstructedInstance, ConstructionError> {
    if delta < 6 {
        return Err(ConstructionError::ParamTooSmall {
            family: "p4-k5",
            param: "delta",
            got: delta,
            min: 6,
        });
    }
    let d = delta;
    let r_count = 4 * d - 13;
    let chain_len = 4 * d * d - 29 * d + 51;
    let n = 4 * d * d * d - 33 * d * d + 84 * d - 58;

    let mut b = GraphBuilder::new(n);
    let mut labels = vec![String::new(); n];
    let (p1, p2, p3, p4) = (0, 1, 2, 3);
    for (v, name) in [(p1, "p1"), (p2, "p2"), (p3, "p3"), (p4, "p4")] {
        labels[v] = name.into();
    }
    let r: Vec<usize> = (4..4 + r_count).collect(); // r[s-1] is r_s
    for (i, &v) in r.iter().enumerate() {
        labels[v] = format!("r{}", i + 1);
    }
    let mut next = 4 + r_count;

    // clique chain: pair (x_t, y_t) is shared between cliques t and t+1
    let mut x = vec![0usize; chain_len + 1];
    let mut y = vec![0usize; chain_len + 1];
    let mut v = vec![0usize; chain_len + 1];
    x[0] = next;
    y[0] = next + 1;
    labels[x[0]] = "x0".into();
    labels[y[0]] = "y0".into();
    next += 2;
    for t in 1..=chain_len {
        v[t] = next;
        x[t] = next + 1;
        y[t] = next + 2;
        labels[v[t]] = format!("v{t}");
        labels[x[t]] = format!("x{t}");
        labels[y[t]] = format!("y{t}");
        next += 3;
        let fills: Vec<usize> = (next..next + (d - 4)).collect();
        next += d - 4;
        for (j, &f) in fills.iter().enumerate() {
            labels[f] = format!("z{t}_{j}");
        }
        let mut members = vec![x[t - 1], y[t - 1], v[t], x[t], y[t]];
        members.extend(fills);
        debug_assert_eq!(members.len(), d + 1);
        b.add_clique(&members);
    }
    assert_eq!(next, n);

    for t in 1..chain_len {
        b.add_edge(v[t], v[t + 1]);
    }
    for s in 0..r_count - 1 {
        b.add_edge(r[s], r[s + 1]);
    }
    b.add_path(&[p1, p2, p3, p4]);

    // terminal-to-spine fans; the three junction positions carry two fans
    let junction1 = d - 3;
    let junction2 = 2 * d - 6;
    let junction3 = 3 * d - 9;
    for s in 1..=junction1 {
        b.add_edge(p1, r[s - 1]);
    }
    for s in junction1..=junction2 {
        b.add_edge(p2, r[s - 1]);
    }
    for s in junction2..=junction3 {
        b.add_edge(p3, r[s - 1]);
    }
    for s in junction3..=r_count {
        b.add_edge(p4, r[s - 1]);
    }

    // spine-to-chain fans: runs of v vertices, adjacent runs share one
    let mut start = 1usize;
    for s in 1..=r_count {
        let len = if s == 1 || s == r_count { d - 4 } else { d - 3 };
        for j in start..start + len {
            b.add_edge(r[s - 1], v[j]);
        }
        start = start + len - 1;
    }
    debug_assert_eq!(start, chain_len);

    // anchors tying the terminals to the free pairs at both chain ends
    for t in [p1, r[0]] {
        b.add_edge(t, x[0]);
        b.add_edge(t, y[0]);
    }
    for t in [p4, r[r_count - 1]] {
        b.add_edge(t, x[chain_len]);
        b.add_edge(t, y[chain_len]);
    }

    let graph = b.freeze();
    assert_eq!(computed_min_degree(&graph), d);
    let mut params = BTreeMap::new();
    params.insert("delta", d as u64);
    Ok(ConstructedInstance {
        graph,
        labels,
        family: "p4-k5",
        params,
        claimed_n: n,
        claimed_min_degree: d,
        claimed_kappa: 5,
        witness_pattern: make_pattern("p4").unwrap(),
        witness_pattern_expr: "p4".into(),
        witness_tau: TerminalInjection::new(vec![p3, p1, p4, p2]),
    })
}

// ---------------------------------------------------------------------------
// 5-connected family for K2 u P3, N = 2d^2 - 9d + 11
// ---------------------------------------------------------------------------

/// Chain of 2d-7 cliques of size d+1 sharing marked pairs, externals a and
/// p2, terminals p1/p3 on the top free pair and b on the bottom one. There
/// is no a-b path disjoint from a p1-p2-p3 path.
pub fn construct_k2p3_k5(delta: usize) -> Result<ConstructedInstance, ConstructionError> {
    if delta < 5 {
        return Err(ConstructionError::ParamTooSmall {
            family: "k2p3-k5",
            param: "delta",
            got: delta,
            min: 5,
        });
    }
    let d = delta;
    let chain_len = 2 * d - 7;
    let n = 2 * d * d - 9 * d + 11;
    let mut b = GraphBuilder::new(n);
    let mut labels = vec![String::new(); n];
    let a = 0;
    let p2 = 1;
    labels[a] = "a".into();
    labels[p2] = "p2".into();
    let mut next = 2;
    let mut x = vec![0usize; chain_len + 1];
    let mut y = vec![0usize; chain_len + 1];
    let mut v = vec![0usize; chain_len + 1];
    x[0] = next;
    y[0] = next + 1;
    next += 2;
    for t in 1..=chain_len {
        v[t] = next;
        x[t] = next + 1;
        y[t] = next + 2;
        next += 3;
        labels[v[t]] = format!("v{t}");
        let fills: Vec<usize> = (next..next + (d - 4)).collect();
        next += d - 4;
        for (j, &f) in fills.iter().enumerate() {
            labels[f] = format!("z{t}_{j}");
        }
        let mut members = vec![x[t - 1], y[t - 1], v[t], x[t], y[t]];
        members.extend(fills);
        b.add_clique(&members);
    }
    assert_eq!(next, n);
    // terminal names live on chain vertices
    let p1 = x[chain_len];
    let p3 = y[chain_len];
    let bb = x[0];
    labels[bb] = "b".into();
    labels[y[0]] = "y0".into();
    labels[p1] = "p1".into();
    labels[p3] = "p3".into();
    for t in 1..chain_len {
        labels[x[t]] = format!("x{t}");
        labels[y[t]] = format!("y{t}");
    }
    for t in 1..chain_len {
        b.add_edge(v[t], v[t + 1]);
    }
    for (s, t) in [(a, p1), (a, p2), (a, p3), (bb, p1), (bb, p2), (bb, p3)] {
        b.add_edge(s, t);
    }
    b.add_edge(p2, y[0]);
    for j in 1..=d - 3 {
        b.add_edge(a, v[2 * d - 6 - j]);
        b.add_edge(p2, v[j]);
    }
    let graph = b.freeze();
    assert_eq!(computed_min_degree(&graph), d);
    let mut params = BTreeMap::new();
    params.insert("delta", d as u64);
    Ok(ConstructedInstance {
        graph,
        labels,
        family: "k2p3-k5",
        params,
        claimed_n: n,
        claimed_min_degree: d,
        claimed_kappa: 5,
        witness_pattern: make_pattern("k2+p3").unwrap(),
        witness_pattern_expr: "k2+p3".into(),
        witness_tau: TerminalInjection::new(vec![a, bb, p1, p2, p3]),
    })
}

// ---------------------------------------------------------------------------
// 7-connected family for P3 u P3, N = 2d^2 - 13d + 23
// ---------------------------------------------------------------------------

/// Chain of 2d-9 cliques of size d+1 sharing marked triples, externals p2
/// and q2, terminal pairs split across the two free triples. The crossed
/// placement p1-q2-p3 / q1-p2-q3 admits no disjoint realization.
pub fn construct_p3p3_k7(delta: usize) -> Result<ConstructedInstance, ConstructionError> {
    if delta < 7 {
        return Err(ConstructionError::ParamTooSmall {
            family: "p3p3-k7",
            param: "delta",
            got: delta,
            min: 7,
        });
    }
    let d = delta;
    let chain_len = 2 * d - 9;
    let n = 2 * d * d - 13 * d + 23;
    let mut b = GraphBuilder::new(n);
    let mut labels = vec![String::new(); n];
    let p2 = 0;
    let q2 = 1;
    labels[p2] = "p2".into();
    labels[q2] = "q2".into();
    let mut next = 2;
    let mut x = vec![0usize; chain_len + 1];
    let mut y = vec![0usize; chain_len + 1];
    let mut z = vec![0usize; chain_len + 1];
    let mut v = vec![0usize; chain_len + 1];
    x[0] = next;
    y[0] = next + 1;
    z[0] = next + 2;
    next += 3;
    labels[z[0]] = "z0".into();
    for t in 1..=chain_len {
        v[t] = next;
        x[t] = next + 1;
        y[t] = next + 2;
        z[t] = next + 3;
        next += 4;
        labels[v[t]] = format!("v{t}");
        let fills: Vec<usize> = (next..next + (d - 6)).collect();
        next += d - 6;
        for (j, &f) in fills.iter().enumerate() {
            labels[f] = format!("w{t}_{j}");
        }
        let mut members = vec![x[t - 1], y[t - 1], z[t - 1], v[t], x[t], y[t], z[t]];
        members.extend(fills);
        debug_assert_eq!(members.len(), d + 1);
        b.add_clique(&members);
    }
    assert_eq!(next, n);
    let p1 = x[chain_len];
    let p3 = y[chain_len];
    let q1 = x[0];
    let q3 = y[0];
    labels[p1] = "p1".into();
    labels[p3] = "p3".into();
    labels[q1] = "q1".into();
    labels[q3] = "q3".into();
    labels[z[chain_len]] = format!("z{chain_len}");
    for t in 1..chain_len {
        labels[x[t]] = format!("x{t}");
        labels[y[t]] = format!("y{t}");
        labels[z[t]] = format!("z{t}");
    }
    for t in 1..chain_len {
        b.add_edge(v[t], v[t + 1]);
    }
    for (s, t) in [
        (p1, q1),
        (p2, q2),
        (p3, q3),
        (p1, p2),
        (p2, p3),
        (p2, z[chain_len]),
        (q1, q2),
        (q2, q3),
        (q2, z[0]),
    ] {
        b.add_edge(s, t);
    }
    for j in 1..=d - 4 {
        b.add_edge(q2, v[j]);
        b.add_edge(p2, v[2 * d - 8 - j]);
    }
    let graph = b.freeze();
    assert_eq!(computed_min_degree(&graph), d);
    let mut params = BTreeMap::new();
    params.insert("delta", d as u64);
    Ok(ConstructedInstance {
        graph,
        labels,
        family: "p3p3-k7",
        params,
        claimed_n: n,
        claimed_min_degree: d,
        claimed_kappa: 7,
        witness_pattern: make_pattern("p3+p3").unwrap(),
        witness_pattern_expr: "p3+p3".into(),
        witness_tau: TerminalInjection::new(vec![p1, q2, p3, q1, p2, q3]),
    })
}

// ---------------------------------------------------------------------------
// universal augmentation
// ---------------------------------------------------------------------------

/// Append `t` vertices adjacent to every other vertex (including each
/// other). On a non-complete base this raises connectivity by exactly t.
pub fn universal_augment(g: &Graph, t: usize) -> Graph {
    let n = g.vertex_count();
    let mut b = GraphBuilder::new(n + t);
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    for i in 0..t {
        for v in 0..n + i {
            b.add_edge(n + i, v);
        }
    }
    b.freeze()
}

// ---------------------------------------------------------------------------
// the planar base asset and the matching lower-bound families
// ---------------------------------------------------------------------------

/// Edge list of a 24-vertex, 5-regular, 5-connected planar polyhedron
/// whose faces are 32 triangles and 6 quadrilaterals (a snub cube,
/// vertices ordered lexicographically by coordinate). Quadrilateral faces,
/// in cyclic order:
///
/// ```text
/// (0, 2, 3, 1)   (4, 12, 16, 8)   (5, 13, 18, 10)
/// (6, 14, 17, 9) (7, 15, 19, 11)  (20, 22, 23, 21)
/// ```
///
/// Triangular faces: (0,1,4) (0,4,8) (0,5,2) (0,8,5) (1,3,6) (1,6,9)
/// (1,9,4) (2,5,10) (2,7,3) (2,10,7) (3,7,11) (3,11,6) (4,9,12) (5,8,13)
/// (6,11,14) (7,10,15) (8,16,13) (9,17,12) (10,18,15) (11,19,14)
/// (12,17,20) (12,20,16) (13,16,21) (13,21,18) (14,19,22) (14,22,17)
/// (15,18,23) (15,23,19) (16,20,21) (17,22,20) (18,21,23) (19,23,22).
pub const SNUB_CUBE_EDGES: [(usize, usize); 60] = [
    (0, 1), (0, 2), (0, 4), (0, 5), (0, 8), (1, 3), (1, 4), (1, 6), (1, 9), (2, 3),
    (2, 5), (2, 7), (2, 10), (3, 6), (3, 7), (3, 11), (4, 8), (4, 9), (4, 12), (5, 8),
    (5, 10), (5, 13), (6, 9), (6, 11), (6, 14), (7, 10), (7, 11), (7, 15), (8, 13), (8, 16),
    (9, 12), (9, 17), (10, 15), (10, 18), (11, 14), (11, 19), (12, 16), (12, 17), (12, 20), (13, 16),
    (13, 18), (13, 21), (14, 17), (14, 19), (14, 22), (15, 18), (15, 19), (15, 23), (16, 20), (16, 21),
    (17, 20), (17, 22), (18, 21), (18, 23), (19, 22), (19, 23), (20, 21), (20, 22), (21, 23), (22, 23),
];

/// The quadrilateral faces of the base asset, each in cyclic order.
pub const SNUB_CUBE_SQUARES: [[usize; 4]; 6] = [
    [0, 2, 3, 1],
    [4, 12, 16, 8],
    [5, 13, 18, 10],
    [6, 14, 17, 9],
    [7, 15, 19, 11],
    [20, 22, 23, 21],
];

pub fn snub_cube() -> Graph {
    crate::graph::build_graph(24, &SNUB_CUBE_EDGES).expect("asset edge list is valid")
}

fn verify_base_asset(g: &Graph) {
    assert_eq!(g.vertex_count(), 24);
    assert!((0..24).all(|v| g.degree(v) == 5), "asset must be 5-regular");
    for sq in &SNUB_CUBE_SQUARES {
        for i in 0..4 {
            assert!(g.has_edge(sq[i], sq[(i + 1) % 4]));
        }
        assert!(!g.has_edge(sq[0], sq[2]) && !g.has_edge(sq[1], sq[3]));
    }
    let kappa = crate::connectivity::vertex_connectivity(g)
        .expect("nonempty")
        .kappa;
    assert_eq!(kappa, 5, "base asset must be 5-connected");
}

/// Planar 5-connected base plus 2l-4 universal vertices: (2l+1)-connected
/// but not l-linked. The witness pairs the quadrilateral face crosswise
/// and puts the remaining pairs on universal vertices.
pub fn lk2_lower_bound_graph(l: usize) -> Result<ConstructedInstance, ConstructionError> {
    if l < 2 {
        return Err(ConstructionError::ParamTooSmall {
            family: "lk2",
            param: "l",
            got: l,
            min: 2,
        });
    }
    let base = snub_cube();
    verify_base_asset(&base);
    let t = 2 * l - 4;
    let graph = universal_augment(&base, t);
    let mut labels: Vec<String> = (0..24).map(|i| format!("v{i}")).collect();
    for i in 0..t {
        labels.push(format!("u{}", i + 1));
    }
    let sq = SNUB_CUBE_SQUARES[0];
    let mut tau = vec![sq[0], sq[2], sq[1], sq[3]];
    for i in 0..t {
        tau.push(24 + i);
    }
    let expr = format!("matching:{l}");
    let mut params = BTreeMap::new();
    params.insert("l", l as u64);
    Ok(ConstructedInstance {
        graph,
        labels,
        family: "lk2",
        params,
        claimed_n: 24 + t,
        claimed_min_degree: 5 + t,
        claimed_kappa: 2 * l + 1,
        witness_pattern: make_pattern(&expr).unwrap(),
        witness_pattern_expr: expr,
        witness_tau: TerminalInjection::new(tau),
    })
}

/// Universal augmentation of the K2 u P3 chain family by 2l-2 vertices;
/// the new vertices become the terminals of the extra pairs.
pub fn lk2p3_lower_bound_graph(
    l: usize,
    delta: usize,
) -> Result<ConstructedInstance, ConstructionError> {
    if l < 1 {
        return Err(ConstructionError::ParamTooSmall {
            family: "lk2p3",
            param: "l",
            got: l,
            min: 1,
        });
    }
    let base = construct_k2p3_k5(delta)?;
    let t = 2 * l - 2;
    let graph = universal_augment(&base.graph, t);
    let mut labels = base.labels.clone();
    for i in 0..t {
        labels.push(format!("u{}", i + 1));
    }
    let expr = format!("{l}*k2+p3");
    let base_tau = base.witness_tau.images();
    // pattern vertex order: l pairs, then the three path vertices
    let mut tau = vec![base_tau[0], base_tau[1]];
    for i in 0..t {
        tau.push(base.claimed_n + i);
    }
    tau.extend_from_slice(&base_tau[2..5]);
    let mut params = BTreeMap::new();
    params.insert("l", l as u64);
    params.insert("delta", delta as u64);
    Ok(ConstructedInstance {
        graph,
        labels,
        family: "lk2p3",
        params,
        claimed_n: base.claimed_n + t,
        claimed_min_degree: delta + t,
        claimed_kappa: 2 * l + 3,
        witness_pattern: make_pattern(&expr).unwrap(),
        witness_pattern_expr: expr,
        witness_tau: TerminalInjection::new(tau),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{min_degree, vertex_connectivity};

    #[test]
    fn two_cliques_shapes() {
        let inst = two_cliques(14, TwoCliquesVariant::P4).unwrap();
        assert_eq!(inst.graph.vertex_count(), 14);
        assert_eq!(inst.claimed_min_degree, 7);
        let inst = two_cliques(15, TwoCliquesVariant::P3P3).unwrap();
        // cliques of 9 and 9 sharing 3
        assert_eq!(inst.graph.vertex_count(), 15);
        let s: Vec<usize> = vec![0, 1, 2];
        for &v in &s {
            assert!(inst.graph.degree(v) >= 11);
        }
        assert!(two_cliques(9, TwoCliquesVariant::P4).is_err());
    }

    #[test]
    fn three_cliques_shapes() {
        let inst = three_cliques_k3(11).unwrap();
        assert_eq!(inst.claimed_min_degree, 4);
        assert_eq!(inst.claimed_kappa, 2);
        let r = vertex_connectivity(&inst.graph).unwrap();
        assert_eq!(r.kappa, 2);
        // removing u and w disconnects
        assert_eq!(r.witness_cut.as_deref(), Some(&[9, 10][..]));
        let inst8 = three_cliques_k3(8).unwrap();
        assert_eq!(inst8.claimed_min_degree, 3);
        assert!(three_cliques_k3(7).is_err());
    }

    #[test]
    fn p4_k4_formulas() {
        for delta in [4usize, 5, 6] {
            let inst = construct_p4_k4(delta).unwrap();
            assert_eq!(inst.graph.vertex_count(), delta * delta);
            assert_eq!(min_degree(&inst.graph).unwrap(), delta);
        }
        assert!(construct_p4_k4(3).is_err());
    }

    #[test]
    fn p4_k4_is_4_connected() {
        let inst = construct_p4_k4(4).unwrap();
        assert_eq!(vertex_connectivity(&inst.graph).unwrap().kappa, 4);
        assert!(crate::connectivity::find_separation(&inst.graph, 3)
            .unwrap()
            .is_none());
    }

    #[test]
    fn p4_k5_formulas() {
        assert_eq!(construct_p4_k5(6).unwrap().graph.vertex_count(), 122);
        assert_eq!(construct_p4_k5(7).unwrap().graph.vertex_count(), 285);
        assert_eq!(min_degree(&construct_p4_k5(6).unwrap().graph).unwrap(), 6);
        assert!(construct_p4_k5(5).is_err());
    }

    #[test]
    fn k2p3_k5_formulas() {
        for (delta, n) in [(5usize, 16usize), (6, 29), (7, 46)] {
            let inst = construct_k2p3_k5(delta).unwrap();
            assert_eq!(inst.graph.vertex_count(), n);
            assert_eq!(min_degree(&inst.graph).unwrap(), delta);
        }
        let inst = construct_k2p3_k5(5).unwrap();
        assert_eq!(vertex_connectivity(&inst.graph).unwrap().kappa, 5);
        assert!(construct_k2p3_k5(4).is_err());
    }

    #[test]
    fn p3p3_k7_formulas() {
        for (delta, n) in [(7usize, 30usize), (8, 47)] {
            let inst = construct_p3p3_k7(delta).unwrap();
            assert_eq!(inst.graph.vertex_count(), n);
            assert_eq!(min_degree(&inst.graph).unwrap(), delta);
        }
        assert!(construct_p3p3_k7(6).is_err());
    }

    #[test]
    fn universal_augmentation() {
        // wheel: cycle plus one universal vertex
        let c5 = crate::graph::build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let w5 = universal_augment(&c5, 1);
        assert_eq!(vertex_connectivity(&w5).unwrap().kappa, 3);
        assert_eq!(universal_augment(&c5, 0), c5);
        let aug = universal_augment(&snub_cube(), 2);
        assert_eq!(vertex_connectivity(&aug).unwrap().kappa, 7);
    }

    #[test]
    fn snub_cube_asset() {
        let g = snub_cube();
        verify_base_asset(&g);
        assert_eq!(g.edge_count(), 60);
    }

    #[test]
    fn lk2_family() {
        let inst = lk2_lower_bound_graph(2).unwrap();
        assert_eq!(inst.claimed_n, 24);
        assert_eq!(vertex_connectivity(&inst.graph).unwrap().kappa, 5);
        let inst = lk2_lower_bound_graph(3).unwrap();
        assert_eq!(inst.claimed_n, 26);
        assert_eq!(vertex_connectivity(&inst.graph).unwrap().kappa, 7);
        assert_eq!(inst.claimed_kappa, 5 + (2 * 3 - 4));
        assert!(lk2_lower_bound_graph(1).is_err());
    }

    #[test]
    fn lk2p3_family() {
        let base = construct_k2p3_k5(5).unwrap();
        let same = lk2p3_lower_bound_graph(1, 5).unwrap();
        assert_eq!(same.graph, base.graph);
        let inst = lk2p3_lower_bound_graph(2, 5).unwrap();
        assert_eq!(inst.claimed_n, 18);
        assert_eq!(vertex_connectivity(&inst.graph).unwrap().kappa, 7);
        assert_eq!(lk2p3_lower_bound_graph(2, 6).unwrap().claimed_n, 31);
    }

    #[test]
    fn metadata_covers_witness_labels() {
        for inst in [
            two_cliques(14, TwoCliquesVariant::K2P3).unwrap(),
            construct_p4_k4(4).unwrap(),
            construct_k2p3_k5(5).unwrap(),
            construct_p3p3_k7(7).unwrap(),
            lk2p3_lower_bound_graph(2, 5).unwrap(),
        ] {
            let meta = inst.metadata();
            for name in &meta.witness.tau_by_label {
                assert!(!name.is_empty());
                assert!(inst.label_index(name).is_some(), "label {name} resolvable");
            }
            assert_eq!(meta.claimed_n, inst.graph.vertex_count());
        }
    }
}
