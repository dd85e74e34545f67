//! Pattern multigraphs and the textual mini-grammar that names them.
//!
//! A pattern is the multigraph whose edges must be realized by internally
//! disjoint paths. Parallel edges are allowed (`c2` is a double edge),
//! isolated vertices are not.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr := term ("+" term)*
//! term := [INT "*"] atom
//! atom := "k2" | "k3" | "p" INT | "c" INT
//!       | "star:" INT | "matching:" INT | "me:" INT
//! ```
//!
//! `cN` is a cycle for N >= 3 and the double edge for N = 2; `me:k` is a
//! k-fold multi-edge; `matching:l` is shorthand for `l*k2`.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct PatternParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("pattern loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("pattern vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("pattern must have at least one vertex")]
    Empty,
}

/// Loopless multigraph without isolated vertices; edges are an ordered
/// multiset of unordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternMultigraph {
    n: usize,
    edges: Vec<(usize, usize)>, // each stored with u < v, in construction order
}

impl PatternMultigraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, PatternError> {
        let p = Self::with_isolated_allowed(n, edges)?;
        let mut covered = vec![false; n];
        for &(u, v) in &p.edges {
            covered[u] = true;
            covered[v] = true;
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(PatternError::IsolatedVertex(v));
        }
        Ok(p)
    }

    /// The standing no-isolated-vertex restriction is lifted internally for
    /// the index-shift consistency check, which appends a lone vertex.
    pub(crate) fn with_isolated_allowed(
        n: usize,
        edges: &[(usize, usize)],
    ) -> Result<Self, PatternError> {
        if n == 0 {
            return Err(PatternError::Empty);
        }
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(PatternError::LoopEdge(u));
            }
            for x in [u, v] {
                if x >= n {
                    return Err(PatternError::VertexOutOfRange { vertex: x, n });
                }
            }
            norm.push((u.min(v), u.max(v)));
        }
        Ok(PatternMultigraph { n, edges: norm })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Edge multiset in canonical order, for comparisons up to relabeling.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// Multiplicity of the edge between `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    /// All automorphisms, found by brute force over vertex permutations.
    /// Patterns larger than 8 vertices return only the identity; the
    /// enumeration this feeds is impractical at that size anyway.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        if n > 8 {
            return vec![(0..n).collect()];
        }
        let canon = self.sorted_edges();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        permute(&mut perm, 0, &mut |p| {
            let mut mapped: Vec<(usize, usize)> = self
                .edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            mapped.sort_unstable();
            if mapped == canon {
                out.push(p.to_vec());
            }
        });
        out
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Disjoint union; the second pattern's vertices are relabeled upward.
pub fn pattern_union(p: &PatternMultigraph, q: &PatternMultigraph) -> PatternMultigraph {
    let off = p.n;
    let mut edges = p.edges.clone();
    edges.extend(q.edges.iter().map(|&(u, v)| (u + off, v + off)));
    PatternMultigraph {
        n: p.n + q.n,
        edges,
    }
}

/// Parse an expression of the pattern mini-grammar.
pub fn make_pattern(spec: &str) -> Result<PatternMultigraph, PatternParseError> {
    Parser {
        s: spec.as_bytes(),
        pos: 0,
    }
    .parse()
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, pos: usize, message: impl Into<String>) -> Result<T, PatternParseError> {
        Err(PatternParseError {
            position: pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<PatternMultigraph, PatternParseError> {
        let mut acc = self.term()?;
        while let Some(b'+') = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = pattern_union(&acc, &t);
        }
        self.skip_ws();
        if self.pos != self.s.len() {
            return self.err(self.pos, "unexpected trailing input");
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<PatternMultigraph, PatternParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let at = self.pos;
                let m = self.integer()?;
                if m == 0 {
                    return self.err(at, "multiplier must be at least 1");
                }
                match self.peek() {
                    Some(b'*') => self.pos += 1,
                    _ => return self.err(self.pos, "expected '*' after multiplier"),
                }
                let atom = self.atom()?;
                let mut acc = atom.clone();
                for _ in 1..m {
                    acc = pattern_union(&acc, &atom);
                }
                Ok(acc)
            }
            _ => self.atom(),
        }
    }

    fn integer(&mut self) -> Result<usize, PatternParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected an integer");
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse::<usize>()
            .map_err(|_| PatternParseError {
                position: start,
                message: "integer too large".into(),
            })
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn atom(&mut self) -> Result<PatternMultigraph, PatternParseError> {
        let at = match self.peek() {
            Some(_) => self.pos,
            None => return self.err(self.pos, "expected a pattern atom"),
        };
        if self.keyword("star:") {
            let k = self.integer()?;
            if k == 0 {
                return self.err(at, "star needs at least one edge");
            }
            let edges: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
            return Ok(PatternMultigraph::new(k + 1, &edges).unwrap());
        }
        if self.keyword("matching:") {
            let l = self.integer()?;
            if l == 0 {
                return self.err(at, "matching needs at least one edge");
            }
            let edges: Vec<(usize, usize)> = (0..l).map(|i| (2 * i, 2 * i + 1)).collect();
            return Ok(PatternMultigraph::new(2 * l, &edges).unwrap());
        }
        if self.keyword("me:") {
            let k = self.integer()?;
            if k == 0 {
                return self.err(at, "multi-edge needs multiplicity at least 1");
            }
            let edges = vec![(0, 1); k];
            return Ok(PatternMultigraph::new(2, &edges).unwrap());
        }
        if self.keyword("cycle:") {
            let k = self.integer()?;
            return self.cycle(at, k);
        }
        if self.keyword("k") {
            let k = self.integer()?;
            return match k {
                2 => Ok(PatternMultigraph::new(2, &[(0, 1)]).unwrap()),
                3 => Ok(PatternMultigraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()),
                _ => self.err(at, format!("unsupported clique k{k} (only k2 and k3)")),
            };
        }
        if self.keyword("p") {
            let k = self.integer()?;
            if k < 2 {
                return self.err(at, format!("path p{k} would have an isolated vertex"));
            }
            let edges: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
            return Ok(PatternMultigraph::new(k, &edges).unwrap());
        }
        if self.keyword("c") {
            let k = self.integer()?;
            return self.cycle(at, k);
        }
        self.err(at, "unknown pattern atom")
    }

    fn cycle(&self, at: usize, k: usize) -> Result<PatternMultigraph, PatternParseError> {
        match k {
            0 | 1 => self.err(at, format!("cycle c{k} is degenerate")),
            2 => Ok(PatternMultigraph::new(2, &[(0, 1), (0, 1)]).unwrap()),
            _ => {
                let mut edges: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
                edges.push((0, k - 1));
                Ok(PatternMultigraph::new(k, &edges).unwrap())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_patterns() {
        let p = make_pattern("k2+p3").unwrap();
        assert_eq!(p.vertex_count(), 5);
        assert_eq!(p.edge_count(), 3);

        let c2 = make_pattern("c2").unwrap();
        assert_eq!(c2.vertex_count(), 2);
        assert_eq!(c2.multiplicity(0, 1), 2);

        let m = make_pattern("3*k2").unwrap();
        assert_eq!(m.vertex_count(), 6);
        assert_eq!(m.edge_count(), 3);
        assert!((0..6).all(|v| m.degree(v) == 1));
        assert_eq!(m, make_pattern("matching:3").unwrap());
    }

    #[test]
    fn stars_and_cycles() {
        for k in 1..6 {
            let s = make_pattern(&format!("star:{k}")).unwrap();
            assert_eq!(s.vertex_count(), k + 1);
            assert_eq!(s.edge_count(), k);
        }
        for k in 3..7 {
            let c = make_pattern(&format!("c{k}")).unwrap();
            assert_eq!(c.vertex_count(), k);
            assert_eq!(c.edge_count(), k);
            assert!((0..k).all(|v| c.degree(v) == 2));
        }
        assert_eq!(make_pattern("cycle:2").unwrap(), make_pattern("c2").unwrap());
    }

    #[test]
    fn unions() {
        let k2 = make_pattern("k2").unwrap();
        let p3 = make_pattern("p3").unwrap();
        let u = pattern_union(&k2, &p3);
        assert_eq!(u, make_pattern("k2+p3").unwrap());

        let pp = pattern_union(&p3, &p3);
        assert_eq!(pp.vertex_count(), 6);
        assert_eq!(pp.edge_count(), 4);

        let c2 = make_pattern("c2").unwrap();
        let kc = pattern_union(&k2, &c2);
        assert_eq!(kc.vertex_count(), 4);
        assert_eq!(kc.edge_count(), 3);
    }

    #[test]
    fn union_associative_up_to_relabeling() {
        let a = make_pattern("p4").unwrap();
        let b = make_pattern("c3").unwrap();
        let c = make_pattern("me:2").unwrap();
        let left = pattern_union(&pattern_union(&a, &b), &c);
        let right = pattern_union(&a, &pattern_union(&b, &c));
        assert_eq!(left.vertex_count(), right.vertex_count());
        assert_eq!(left.sorted_edges(), right.sorted_edges());
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = make_pattern("p1").unwrap_err();
        assert_eq!(e.position, 0);
        let e = make_pattern("k2+zzz").unwrap_err();
        assert_eq!(e.position, 3);
        assert!(make_pattern("0*k2").is_err());
        assert!(make_pattern("k4").is_err());
        assert!(make_pattern("").is_err());
        assert!(make_pattern("star:0").is_err());
        assert!(make_pattern("c1").is_err());
        assert!(make_pattern("k2 trailing").is_err());
    }

    #[test]
    fn whitespace_ignored() {
        let p = make_pattern(" 2 * k2 + p 3 ").unwrap();
        assert_eq!(p.vertex_count(), 7);
        assert_eq!(p.edge_count(), 4);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(make_pattern("k3").unwrap().automorphisms().len(), 6);
        assert_eq!(make_pattern("p3+p3").unwrap().automorphisms().len(), 8);
        assert_eq!(make_pattern("c2").unwrap().automorphisms().len(), 2);
        assert_eq!(make_pattern("star:3").unwrap().automorphisms().len(), 6);
        assert_eq!(make_pattern("p4").unwrap().automorphisms().len(), 2);
    }

    #[test]
    fn isolated_rejected_in_public_ctor() {
        assert_eq!(
            PatternMultigraph::new(3, &[(0, 1)]),
            Err(PatternError::IsolatedVertex(2))
        );
        assert!(PatternMultigraph::with_isolated_allowed(3, &[(0, 1)]).is_ok());
    }
}
