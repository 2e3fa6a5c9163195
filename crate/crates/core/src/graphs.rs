//! Graph families and the immutable graph type shared by every other module.
//!
//! Vertices are dense indices `0..n`. Each vertex carries a [`Label`] tying it
//! back to the combinatorial object it stands for, so that constructions
//! phrased in terms of vectors, subsets or Petersen coordinates can be mapped
//! onto indices without ambiguity.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::hales;

/// Largest graph for which a dense adjacency bitset is materialised.
pub const DENSE_LIMIT: usize = 4096;

/// Combinatorial label of a vertex.
///
/// * `Word(w)`: an `n`-vector over `[q]` packed in base `q`, coordinate `j`
///   (1-based) stored as digit `j-1`, digits taking values `0..q`. For `q = 2`
///   this is a bitmask with bit `j-1` equal to the `j`-th coordinate.
/// * `Subset(m)`: a subset of `[n]`, element `i` stored as bit `i-1`.
/// * `Outer(i)` / `Inner(i)`: the generalized Petersen vertices `v_i` / `u_i`,
///   `1 <= i <= n`.
/// * `Plain(i)`: no combinatorial meaning, used for ad hoc graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    Word(u64),
    Subset(u64),
    Outer(usize),
    Inner(usize),
    Plain(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Hamming,
    Johnson,
    BipartiteKneser,
    Petersen,
}

/// Parameters of one of the four structured families.
///
/// Unused fields are ignored: `t` and `q` only matter for Hamming graphs, `k`
/// only for the other three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: FamilyKind,
    pub t: usize,
    pub q: usize,
    pub n: usize,
    pub k: usize,
}

impl FamilySpec {
    pub fn hamming(t: usize, q: usize, n: usize) -> Self {
        FamilySpec { family: FamilyKind::Hamming, t, q, n, k: 0 }
    }

    pub fn johnson(n: usize, k: usize) -> Self {
        FamilySpec { family: FamilyKind::Johnson, t: 0, q: 0, n, k }
    }

    pub fn bipartite_kneser(n: usize, k: usize) -> Self {
        FamilySpec { family: FamilyKind::BipartiteKneser, t: 0, q: 0, n, k }
    }

    pub fn petersen(n: usize, k: usize) -> Self {
        FamilySpec { family: FamilyKind::Petersen, t: 0, q: 0, n, k }
    }

    pub fn validate(&self) -> Result<()> {
        let FamilySpec { t, q, n, k, .. } = *self;
        match self.family {
            FamilyKind::Hamming => {
                if t < 1 || q < 2 || n < 1 {
                    return param(format!("hamming needs t >= 1, q >= 2, n >= 1 (got t={t}, q={q}, n={n})"));
                }
                let bits = (q as f64).log2() * n as f64;
                if bits > 40.0 {
                    return param(format!("hamming graph with q^n = {q}^{n} vertices is too large"));
                }
            }
            FamilyKind::Johnson => {
                if !(k >= 1 && n > k) || n > 63 {
                    return param(format!("johnson needs n > k >= 1 (got n={n}, k={k})"));
                }
            }
            FamilyKind::BipartiteKneser => {
                if k < 1 || n < 2 * k + 1 || n > 63 {
                    return param(format!("bipartite kneser needs k >= 1, n >= 2k+1 (got n={n}, k={k})"));
                }
            }
            FamilyKind::Petersen => {
                if n < 3 || k < 1 || 2 * k >= n {
                    return param(format!("generalized petersen needs 1 <= k < n/2, n >= 3 (got n={n}, k={k})"));
                }
            }
        }
        Ok(())
    }

    pub fn generate(&self) -> Result<Graph> {
        match self.family {
            FamilyKind::Hamming => gen_hamming(self.t, self.q, self.n),
            FamilyKind::Johnson => gen_johnson(self.n, self.k),
            FamilyKind::BipartiteKneser => gen_bipartite_kneser(self.n, self.k),
            FamilyKind::Petersen => gen_petersen(self.n, self.k),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            FamilyKind::Hamming => write!(f, "H({},{},{})", self.t, self.q, self.n),
            FamilyKind::Johnson => write!(f, "J({},{})", self.n, self.k),
            FamilyKind::BipartiteKneser => write!(f, "BK({},{})", self.n, self.k),
            FamilyKind::Petersen => write!(f, "G({},{})", self.n, self.k),
        }
    }
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Vec<Label>,
    edge_count: usize,
    family: Option<FamilySpec>,
    dense: OnceLock<Option<Vec<Vec<u64>>>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj && self.labels == other.labels
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph on `n` vertices labelled `Plain(0..n)`.
    ///
    /// Duplicate edges are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..n).map(Label::Plain).collect();
        Self::from_labelled_edges(labels, edges.iter().copied(), None)
    }

    pub(crate) fn from_labelled_edges(
        labels: Vec<Label>,
        edges: impl IntoIterator<Item = (usize, usize)>,
        family: Option<FamilySpec>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Structural(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::Structural(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        let mut seen = std::collections::HashSet::with_capacity(n);
        for l in &labels {
            if !seen.insert(*l) {
                return Err(Error::Structural(format!("duplicate vertex label {l:?}")));
            }
        }
        Ok(Graph { adj, labels, edge_count: edge_count / 2, family, dense: OnceLock::new() })
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self::from_edges(n, &edges).expect("complete graph edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn label(&self, v: usize) -> Label {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        self.family.as_ref()
    }

    pub fn label_index(&self) -> HashMap<Label, usize> {
        self.labels.iter().enumerate().map(|(i, l)| (*l, i)).collect()
    }

    /// Dense adjacency row of `v` as 64-bit words, available up to
    /// [`DENSE_LIMIT`] vertices. Built on first use.
    pub fn dense_row(&self, v: usize) -> Option<&[u64]> {
        self.dense
            .get_or_init(|| {
                let n = self.vertex_count();
                (n <= DENSE_LIMIT).then(|| {
                    let words = n.div_ceil(64);
                    self.adj
                        .iter()
                        .map(|list| {
                            let mut row = vec![0u64; words];
                            for &w in list {
                                row[w / 64] |= 1 << (w % 64);
                            }
                            row
                        })
                        .collect()
                })
            })
            .as_ref()
            .map(|rows| rows[v].as_slice())
    }

    /// Adjacency as one bitmask per vertex; only for graphs with at most 64
    /// vertices, which is where the exhaustive oracles live.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        crate::error::check_cap("adjacency mask", self.vertex_count(), 64)?;
        Ok(self.adj.iter().map(|list| list.iter().fold(0u64, |m, &w| m | 1 << w)).collect())
    }

    /// Subgraph induced on `vertices`, keeping labels and the given vertex order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let pos: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = vertices.iter().map(|&v| self.labels[v]).collect();
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let pos = &pos;
            self.adj[v].iter().filter_map(move |w| pos.get(w).copied().filter(|&j| j > i).map(|j| (i, j)))
        });
        Graph::from_labelled_edges(labels, edges.collect::<Vec<_>>(), None).expect("induced subgraph is simple")
    }

    /// Supergraph on the same vertices with `extra` edges added.
    pub fn with_extra_edges(&self, extra: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let edges: Vec<_> = self.edges().chain(extra).collect();
        Graph::from_labelled_edges(self.labels.clone(), edges, None)
    }

    /// Whether `set` induces a connected subgraph. The empty set is not connected.
    pub fn is_connected_subset(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else { return false };
        let inside: std::collections::HashSet<usize> = set.iter().copied().collect();
        let mut seen = std::collections::HashSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if inside.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == inside.len()
    }

    pub fn is_isomorphic_as_labelled(&self, other: &Graph) -> bool {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let idx = other.label_index();
        let map: Option<Vec<usize>> = self.labels.iter().map(|l| idx.get(l).copied()).collect();
        let Some(map) = map else { return false };
        self.edges().all(|(u, v)| other.has_edge(map[u], map[v]))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Word(w) => write!(f, "word:{w}"),
            Label::Subset(m) => {
                let elems: Vec<String> = (0..64).filter(|i| m >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
                write!(f, "{{{}}}", elems.join(","))
            }
            Label::Outer(i) => write!(f, "v{i}"),
            Label::Inner(i) => write!(f, "u{i}"),
            Label::Plain(i) => write!(f, "x{i}"),
        }
    }
}

/// Digits `a_1..a_n` of a packed q-ary word.
pub fn word_digits(word: u64, q: usize, n: usize) -> Vec<usize> {
    let mut w = word;
    (0..n)
        .map(|_| {
            let d = (w % q as u64) as usize;
            w /= q as u64;
            d
        })
        .collect()
}

pub fn pack_word(digits: &[usize], q: usize) -> u64 {
    digits.iter().rev().fold(0u64, |acc, &d| acc * q as u64 + d as u64)
}

pub fn hamming_distance(a: u64, b: u64, q: usize, n: usize) -> usize {
    if q == 2 {
        return (a ^ b).count_ones() as usize;
    }
    let (mut a, mut b, q) = (a, b, q as u64);
    let mut d = 0;
    for _ in 0..n {
        if a % q != b % q {
            d += 1;
        }
        a /= q;
        b /= q;
    }
    d
}

/// Generalized Hamming graph H(t,q,n): q-ary n-vectors, adjacent iff their
/// Hamming distance is between 1 and t.
///
/// For `q = 2` vertex `i` is the `i`-th row of the Hales ordering, otherwise
/// vertices are listed lexicographically in `(a_1, ..., a_n)`.
pub fn gen_hamming(t: usize, q: usize, n: usize) -> Result<Graph> {
    let spec = FamilySpec::hamming(t, q, n);
    spec.validate()?;
    let count = q.pow(n as u32);
    let words: Vec<u64> = if q == 2 {
        hales::hales_order(n)?.sequence().iter().map(|&w| w as u64).collect()
    } else {
        (0..count)
            .map(|i| {
                // a_1 is the most significant position of the lexicographic index.
                let mut rest = i;
                let mut digits = vec![0; n];
                for j in (0..n).rev() {
                    digits[j] = rest % q;
                    rest /= q;
                }
                pack_word(&digits, q)
            })
            .collect()
    };
    let index: HashMap<u64, usize> = words.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let radius = t.min(n);
    let mut edges = Vec::new();
    for (i, &w) in words.iter().enumerate() {
        let digits = word_digits(w, q, n);
        for_each_within(&digits, q, radius, &mut |nb| {
            let j = index[&pack_word(nb, q)];
            if j > i {
                edges.push((i, j));
            }
        });
    }
    Graph::from_labelled_edges(words.into_iter().map(Label::Word).collect(), edges, Some(spec))
}

/// Calls `f` on every vector at Hamming distance `1..=radius` from `digits`.
fn for_each_within(digits: &[usize], q: usize, radius: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(cur: &mut Vec<usize>, orig: &[usize], from: usize, left: usize, changed: usize, q: usize, f: &mut impl FnMut(&[usize])) {
        if changed > 0 {
            f(cur);
        }
        if left == 0 {
            return;
        }
        for pos in from..orig.len() {
            for d in 0..q {
                if d == orig[pos] {
                    continue;
                }
                cur[pos] = d;
                rec(cur, orig, pos + 1, left - 1, changed + 1, q, f);
            }
            cur[pos] = orig[pos];
        }
    }
    let mut cur = digits.to_vec();
    rec(&mut cur, digits, 0, radius, 0, q, f);
}

/// Johnson graph J(n,k): k-subsets of [n], adjacent iff they share k-1
/// elements. Vertex order follows the weight-k slice of the Hales ordering.
pub fn gen_johnson(n: usize, k: usize) -> Result<Graph> {
    let spec = FamilySpec::johnson(n, k);
    spec.validate()?;
    let rows = hales::slice_order(n, k)?.rows;
    let index: HashMap<u64, usize> = rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut edges = Vec::new();
    for (i, &m) in rows.iter().enumerate() {
        let outside = full & !m;
        for a in bits(m) {
            for b in bits(outside) {
                let j = index[&(m & !(1 << a) | 1 << b)];
                if j > i {
                    edges.push((i, j));
                }
            }
        }
    }
    Graph::from_labelled_edges(rows.into_iter().map(Label::Subset).collect(), edges, Some(spec))
}

/// Bipartite Kneser graph BK(n,k): k-subsets (left, indices `0..C(n,k)`) and
/// (n-k)-subsets (right), adjacent under inclusion.
pub fn gen_bipartite_kneser(n: usize, k: usize) -> Result<Graph> {
    let spec = FamilySpec::bipartite_kneser(n, k);
    spec.validate()?;
    let left = hales::slice_order(n, k)?.rows;
    let right = hales::slice_order(n, n - k)?.rows;
    let offset = left.len();
    let mut edges = Vec::new();
    for (i, &a) in left.iter().enumerate() {
        for (j, &b) in right.iter().enumerate() {
            if a & b == a {
                edges.push((i, offset + j));
            }
        }
    }
    let labels = left.into_iter().chain(right).map(Label::Subset).collect();
    Graph::from_labelled_edges(labels, edges, Some(spec))
}

/// Generalized Petersen graph G(n,k). Vertex `i-1` is `v_i`, vertex `n+i-1`
/// is `u_i`.
pub fn gen_petersen(n: usize, k: usize) -> Result<Graph> {
    let spec = FamilySpec::petersen(n, k);
    spec.validate()?;
    let v = |i: usize| (i - 1) % n;
    let u = |i: usize| n + (i - 1) % n;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 1..=n {
        edges.push((v(i), u(i)));
        edges.push((v(i), v(i + 1)));
        edges.push((u(i), u(i + k)));
    }
    let labels = (1..=n).map(Label::Outer).chain((1..=n).map(Label::Inner)).collect();
    Graph::from_labelled_edges(labels, edges, Some(spec))
}

/// Index of `v_i` (1-based, taken modulo `n`) in [`gen_petersen`] output.
pub fn petersen_outer(n: usize, i: usize) -> usize {
    (i + n - 1) % n
}

/// Index of `u_i` (1-based, taken modulo `n`) in [`gen_petersen`] output.
pub fn petersen_inner(n: usize, i: usize) -> usize {
    n + (i + n - 1) % n
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros();
            m &= m - 1;
            b
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn hypercube_q3() {
        let g = gen_hamming(1, 2, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.regular_degree()), (8, 12, Some(3)));
    }

    #[test]
    fn distance_two_cube() {
        // pairs at distance <= 2 from a fixed vertex: C(3,1) + C(3,2) = 6
        let g = gen_hamming(2, 2, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.regular_degree()), (8, 24, Some(6)));
    }

    #[test]
    fn large_t_is_complete() {
        for (q, n) in [(2, 3), (3, 2), (4, 2)] {
            let g = gen_hamming(n + 2, q, n).unwrap();
            let v = g.vertex_count();
            assert_eq!(v, q.pow(n as u32));
            assert_eq!(g.edge_count(), v * (v - 1) / 2);
        }
    }

    #[test]
    fn hamming_degree_closed_form() {
        for (t, q, n) in [(1, 3, 3), (2, 3, 3), (2, 4, 2), (3, 2, 5)] {
            let g = gen_hamming(t, q, n).unwrap();
            let d: usize = (1..=t.min(n)).map(|i| binom(n, i) * (q - 1).pow(i as u32)).sum();
            assert_eq!(g.regular_degree(), Some(d));
            assert_eq!(g.edge_count(), g.vertex_count() * d / 2);
        }
    }

    #[test]
    fn hamming_q_ary_is_lexicographic() {
        let g = gen_hamming(1, 3, 2).unwrap();
        let firsts: Vec<Vec<usize>> = (0..4)
            .map(|i| match g.label(i) {
                Label::Word(w) => word_digits(w, 3, 2),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(firsts, vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0]]);
    }

    #[test]
    fn hamming_edges_monotone_in_t() {
        let g1 = gen_hamming(1, 2, 5).unwrap();
        let g2 = gen_hamming(2, 2, 5).unwrap();
        assert!(g1.edges().all(|(u, v)| g2.has_edge(u, v)));
    }

    #[test]
    fn johnson_5_2() {
        let g = gen_johnson(5, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.regular_degree()), (10, 30, Some(6)));
    }

    #[test]
    fn johnson_k1_is_complete() {
        let g = gen_johnson(6, 1).unwrap();
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn johnson_is_weight_slice_of_h22n() {
        for (n, k) in [(5, 2), (6, 3), (4, 1)] {
            let j = gen_johnson(n, k).unwrap();
            let h = gen_hamming(2, 2, n).unwrap();
            let slice: Vec<usize> = (0..h.vertex_count())
                .filter(|&v| matches!(h.label(v), Label::Word(w) if w.count_ones() as usize == k))
                .collect();
            let induced = h.induced(&slice);
            // Word and Subset labels share the bit convention.
            let relabelled: Vec<(usize, usize)> = induced.edges().collect();
            assert_eq!(induced.vertex_count(), j.vertex_count());
            for (a, b) in relabelled {
                let (Label::Word(x), Label::Word(y)) = (induced.label(a), induced.label(b)) else { unreachable!() };
                let idx = j.label_index();
                assert!(j.has_edge(idx[&Label::Subset(x)], idx[&Label::Subset(y)]));
            }
            assert_eq!(induced.edge_count(), j.edge_count());
        }
    }

    #[test]
    fn desargues() {
        let g = gen_bipartite_kneser(5, 2).unwrap();
        assert_eq!((g.vertex_count(), g.regular_degree()), (20, Some(3)));
        // left part is independent
        assert!((0..10).all(|u| g.neighbors(u).iter().all(|&w| w >= 10)));
    }

    #[test]
    fn kneser_degree_is_binomial() {
        for (n, k) in [(7, 3), (12, 2), (9, 2)] {
            let g = gen_bipartite_kneser(n, k).unwrap();
            assert_eq!(g.regular_degree(), Some(binom(n - k, k)));
            assert_eq!(g.vertex_count(), 2 * binom(n, k));
        }
    }

    #[test]
    fn petersen_graphs() {
        let p = gen_petersen(5, 2).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        let prism = gen_petersen(4, 1).unwrap();
        assert_eq!((prism.vertex_count(), prism.edge_count()), (8, 12));
        for (n, k) in [(7, 3), (12, 5), (100, 7)] {
            let g = gen_petersen(n, k).unwrap();
            assert_eq!(g.regular_degree(), Some(3));
            assert_eq!(g.edge_count(), 3 * n);
        }
        assert!(p.has_edge(petersen_inner(5, 1), petersen_inner(5, 3)));
        assert!(p.has_edge(petersen_outer(5, 5), petersen_outer(5, 1)));
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(gen_hamming(0, 2, 3), Err(Error::Parameter(_))));
        assert!(matches!(gen_hamming(1, 1, 3), Err(Error::Parameter(_))));
        assert!(gen_johnson(3, 3).is_err());
        assert!(gen_bipartite_kneser(4, 2).is_err());
        assert!(gen_petersen(4, 2).is_err());
    }

    #[test]
    fn rejects_loops() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn dense_rows_match_lists() {
        let g = gen_petersen(40, 3).unwrap();
        for v in 0..g.vertex_count() {
            let row = g.dense_row(v).unwrap();
            let ones: Vec<usize> = (0..g.vertex_count()).filter(|&w| row[w / 64] >> (w % 64) & 1 == 1).collect();
            assert_eq!(ones, g.neighbors(v));
        }
    }
}
