//! Tree and path decompositions: validation, explicit constructions, and
//! chordal completions.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::graphs::{gen_bipartite_kneser, gen_hamming, gen_johnson, petersen_inner, petersen_outer, word_digits, FamilyKind, Graph, Label};
use crate::hales::Ordering;

/// Bags over vertex indices plus the tree joining them. Bags are kept sorted
/// and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    bags: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Decomposition {
    pub fn new(bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Decomposition { bags, edges }
    }

    /// Bags joined consecutively.
    pub fn path(bags: Vec<Vec<usize>>) -> Self {
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        Self::new(bags, edges)
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_path(&self) -> bool {
        self.edges.iter().enumerate().all(|(i, &(a, b))| (a, b) == (i, i + 1) || (a, b) == (i + 1, i))
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Largest bag size minus one; `0` for an empty decomposition.
    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }
}

/// Everything wrong with a decomposition, or its width when nothing is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub missing_vertices: Vec<usize>,
    pub uncovered_edges: Vec<(usize, usize)>,
    pub disconnected_vertices: Vec<usize>,
    pub width: usize,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.missing_vertices.is_empty() && self.uncovered_edges.is_empty() && self.disconnected_vertices.is_empty()
    }

    pub fn width_if_ok(&self) -> Option<usize> {
        self.is_ok().then_some(self.width)
    }
}

/// Checks coverage of vertices and edges and connectivity of every vertex's
/// bags. The shape must be a tree over the bag indices, otherwise a
/// structural error is returned.
pub fn validate_decomposition(g: &Graph, d: &Decomposition) -> Result<ValidationReport> {
    let n = g.vertex_count();
    let nb = d.bags.len();
    if nb == 0 {
        if n == 0 {
            return Ok(ValidationReport { missing_vertices: vec![], uncovered_edges: vec![], disconnected_vertices: vec![], width: 0 });
        }
        return Err(Error::Structural("decomposition has no bags".into()));
    }
    check_tree(nb, &d.edges)?;
    let mut traces: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in d.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(Error::Structural(format!("bag {i} holds vertex {v} of a {n}-vertex graph")));
            }
            traces[v].push(i);
        }
    }
    let missing_vertices: Vec<usize> = (0..n).filter(|&v| traces[v].is_empty()).collect();
    let uncovered_edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| {
            let (a, b) = if traces[u].len() <= traces[v].len() { (u, v) } else { (v, u) };
            !traces[a].iter().any(|&i| d.bags[i].binary_search(&b).is_ok())
        })
        .collect();
    // On a tree, a vertex's bags are connected iff the tree edges inside them
    // number one less than the bags.
    let mut inner_edges = vec![0usize; n];
    for &(a, b) in &d.edges {
        let (small, large) = if d.bags[a].len() <= d.bags[b].len() { (a, b) } else { (b, a) };
        for &v in &d.bags[small] {
            if d.bags[large].binary_search(&v).is_ok() {
                inner_edges[v] += 1;
            }
        }
    }
    let disconnected_vertices = (0..n).filter(|&v| !traces[v].is_empty() && inner_edges[v] + 1 != traces[v].len()).collect();
    Ok(ValidationReport { missing_vertices, uncovered_edges, disconnected_vertices, width: d.width() })
}

fn check_tree(nodes: usize, edges: &[(usize, usize)]) -> Result<()> {
    if edges.len() + 1 != nodes {
        return Err(Error::Structural(format!("{} tree edges for {nodes} bags", edges.len())));
    }
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in edges {
        if a >= nodes || b >= nodes || a == b {
            return Err(Error::Structural(format!("bad tree edge ({a},{b})")));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; nodes];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    if count != nodes {
        return Err(Error::Structural("tree edges do not connect all bags".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PetersenMode {
    /// The sweep exactly as stated, opening with `{v_1..v_k}` and
    /// `{v_k..v_2k}`.
    Verbatim,
    /// The second opening bag is dropped and the sweep starts `k - 1` steps
    /// earlier, which covers the spokes the verbatim sweep misses.
    Repaired,
}

impl std::str::FromStr for PetersenMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "verbatim" => Ok(PetersenMode::Verbatim),
            "repaired" => Ok(PetersenMode::Repaired),
            _ => param(format!("unknown mode {s:?} (expected verbatim or repaired)")),
        }
    }
}

impl std::fmt::Display for PetersenMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PetersenMode::Verbatim => "verbatim",
            PetersenMode::Repaired => "repaired",
        })
    }
}

/// Path decomposition of G(n,k) sweeping the outer cycle while holding a
/// window of `k` inner vertices.
///
/// The set `{v_1, u_1, ..., u_k}` is added to every bag. After the opening
/// bags, the sweep repeats for `i` up to `n - 2k`:
/// `Y_i = X_i + u_{2k+i}`, `Z_i = Y_i - u_{k+i}`, `W_i = Z_i + v_{2k+i}`,
/// `X_{i+1} = W_i - v_{2k+i-1}`, starting from
/// `X = {u_{k+i}, ..., u_{2k+i-1}, v_{2k+i-1}}`.
pub fn petersen_pd(n: usize, k: usize, mode: PetersenMode) -> Result<Decomposition> {
    if k < 1 || 2 * k >= n {
        return param(format!("petersen decomposition needs 1 <= k < n/2 (got n={n}, k={k})"));
    }
    let (n_i, k_i) = (n as i64, k as i64);
    let v = |i: i64| petersen_outer(n, i.rem_euclid(n_i) as usize);
    let u = |i: i64| petersen_inner(n, i.rem_euclid(n_i) as usize);
    let anchor: Vec<usize> = std::iter::once(v(1)).chain((1..=k_i).map(u)).collect();

    let mut bags: Vec<BTreeSet<usize>> = vec![(1..=k_i).map(v).collect()];
    let start = match mode {
        PetersenMode::Verbatim => {
            bags.push((k_i..=2 * k_i).map(v).collect());
            1
        }
        PetersenMode::Repaired => 1 - k_i,
    };
    let mut x: BTreeSet<usize> = (k_i + start..2 * k_i + start).map(u).collect();
    x.insert(v(2 * k_i + start - 1));
    bags.push(x.clone());
    for i in start..=n_i - 2 * k_i {
        let mut y = x.clone();
        y.insert(u(2 * k_i + i));
        let mut z = y.clone();
        z.remove(&u(k_i + i));
        let mut w = z.clone();
        w.insert(v(2 * k_i + i));
        x = w.clone();
        x.remove(&v(2 * k_i + i - 1));
        bags.extend([y, z, w, x.clone()]);
    }
    let bags = bags
        .into_iter()
        .map(|mut b| {
            b.extend(anchor.iter().copied());
            b.into_iter().collect()
        })
        .collect();
    Ok(Decomposition::path(bags))
}

/// Star decomposition: a centre bag `V \ I` and one leaf bag `(V \ I) + v`
/// per `v` in the independent set `I`. Width `|V| - |I|`.
pub fn independent_set_td(g: &Graph, independent: &[usize]) -> Result<Decomposition> {
    if independent.is_empty() {
        return Err(Error::Precondition("independent set is empty".into()));
    }
    let n = g.vertex_count();
    let mut inside = vec![false; n];
    for &v in independent {
        if v >= n || inside[v] {
            return Err(Error::Precondition(format!("vertex {v} is out of range or repeated")));
        }
        inside[v] = true;
    }
    for &v in independent {
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| inside[w]) {
            return Err(Error::Precondition(format!("vertices {v} and {w} are adjacent")));
        }
    }
    let centre: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    let mut bags = vec![centre.clone()];
    let mut edges = Vec::new();
    for (i, &v) in independent.iter().enumerate() {
        let mut bag = centre.clone();
        bag.push(v);
        bags.push(bag);
        edges.push((0, i + 1));
    }
    Ok(Decomposition::new(bags, edges))
}

/// Carries a path decomposition of H(t,2,n) over to H(t,q,n).
///
/// Each coordinate value `i` in `1..=q` is sent to `0` when `i <= ceil(q/2)`
/// and to `1` otherwise; every bag is replaced by the union of the preimages
/// of its vertices. Vertex indices of the result follow [`gen_hamming`].
pub fn lift_pd(source: &Graph, pd: &Decomposition, q: usize) -> Result<(Graph, Decomposition)> {
    let spec = source
        .family()
        .filter(|f| f.family == FamilyKind::Hamming && f.q == 2)
        .copied()
        .ok_or_else(|| Error::Precondition("source graph is not a binary Hamming graph".into()))?;
    if q < 2 {
        return param("lift needs q >= 2");
    }
    let report = validate_decomposition(source, pd)?;
    if !report.is_ok() {
        return Err(Error::Precondition(format!("input decomposition is invalid: {report:?}")));
    }
    let target = gen_hamming(spec.t, q, spec.n)?;
    let source_index = source.label_index();
    let half = q.div_ceil(2);
    let mut preimages: Vec<Vec<usize>> = vec![Vec::new(); source.vertex_count()];
    for x in 0..target.vertex_count() {
        let Label::Word(word) = target.label(x) else { unreachable!("hamming labels are words") };
        // Digit d stands for the value d + 1.
        let image = word_digits(word, q, spec.n)
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, &d)| if d < half { acc } else { acc | 1 << j });
        preimages[source_index[&Label::Word(image)]].push(x);
    }
    let bags = pd.bags().iter().map(|bag| bag.iter().flat_map(|&y| preimages[y].iter().copied()).collect()).collect();
    Ok((target, Decomposition::new(bags, pd.edges().to_vec())))
}

/// Path decomposition read off a vertex ordering: bag `i` holds the `i`-th
/// vertex and every earlier vertex with a neighbour at position `>= i`.
/// Its width is the vertex separation of the ordering.
pub fn pd_from_order(g: &Graph, order: &Ordering) -> Decomposition {
    let n = g.vertex_count();
    let mut last = vec![0usize; n];
    for v in 0..n {
        last[v] = g.neighbors(v).iter().map(|&w| order.position(w)).max().unwrap_or(0).max(order.position(v));
    }
    let mut bags = Vec::with_capacity(n);
    let mut open: BTreeSet<usize> = BTreeSet::new();
    for (i, &v) in order.sequence().iter().enumerate() {
        open.retain(|&w| last[w] >= i);
        let mut bag: Vec<usize> = open.iter().copied().collect();
        bag.push(v);
        bags.push(bag);
        open.insert(v);
    }
    Decomposition::path(bags)
}

/// Chordal supergraph with a perfect elimination ordering and its clique
/// number.
#[derive(Debug, Clone)]
pub struct ChordalCertificate {
    pub graph: Graph,
    pub peo: Vec<usize>,
    pub omega: usize,
}

/// Eliminates vertices in `order`, joining the remaining neighbours of each
/// eliminated vertex into a clique.
pub fn fillin_chordal(g: &Graph, order: &[usize]) -> Result<ChordalCertificate> {
    let n = g.vertex_count();
    let ordering = Ordering::from_sequence(order.to_vec())?;
    if ordering.len() != n {
        return Err(Error::Precondition(format!("order has {} vertices, graph has {n}", order.len())));
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut fill = Vec::new();
    let mut omega = if n == 0 { 0 } else { 1 };
    for &v in order {
        let later: Vec<usize> = adj[v].iter().copied().filter(|&w| ordering.position(w) > ordering.position(v)).collect();
        omega = omega.max(later.len() + 1);
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                if adj[a].insert(b) {
                    adj[b].insert(a);
                    fill.push((a, b));
                }
            }
        }
    }
    let graph = g.with_extra_edges(fill)?;
    Ok(ChordalCertificate { graph, peo: order.to_vec(), omega })
}

/// Tree decomposition from an elimination order: each vertex's bag is the
/// vertex with its later neighbours in the filled graph, attached to the bag
/// of the earliest of those neighbours.
pub fn td_from_elimination(g: &Graph, order: &[usize]) -> Result<Decomposition> {
    let cert = fillin_chordal(g, order)?;
    let ordering = Ordering::from_sequence(order.to_vec())?;
    let h = &cert.graph;
    let mut bags = Vec::with_capacity(order.len());
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = h.neighbors(v).iter().copied().filter(|&w| ordering.position(w) > i).collect();
        match later.iter().map(|&w| ordering.position(w)).min() {
            Some(p) => edges.push((i, p)),
            None => roots.push(i),
        }
        let mut bag = later;
        bag.push(v);
        bags.push(bag);
    }
    // One root per component; chain them to obtain a single tree.
    for pair in roots.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    Ok(Decomposition::new(bags, edges))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "chordal", rename_all = "snake_case")]
pub enum Chordality {
    /// Perfect elimination ordering.
    Yes { peo: Vec<usize> },
    /// Vertices of a chordless cycle of length at least 4, in cycle order.
    No { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Yes { .. })
    }
}

/// Chordality test by maximum cardinality search followed by a zero-fill
/// check of the resulting order.
pub fn is_chordal(g: &Graph) -> Chordality {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    let mut buckets: Vec<BTreeSet<usize>> = vec![(0..n).collect()];
    let mut top = 0;
    for _ in 0..n {
        while buckets[top].is_empty() {
            top -= 1;
        }
        let v = *buckets[top].iter().next().unwrap();
        buckets[top].remove(&v);
        numbered[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                buckets[weight[w]].remove(&w);
                weight[w] += 1;
                if buckets.len() <= weight[w] {
                    buckets.push(BTreeSet::new());
                }
                buckets[weight[w]].insert(w);
                top = top.max(weight[w]);
            }
        }
    }
    visit.reverse();
    if is_perfect_elimination(g, &visit) {
        Chordality::Yes { peo: visit }
    } else {
        Chordality::No { cycle: chordless_cycle(g).expect("a graph failing the zero-fill test has a chordless cycle") }
    }
}

/// Whether the later neighbours of every vertex in `order` form a clique.
pub fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    let Ok(ordering) = Ordering::from_sequence(order.to_vec()) else { return false };
    if ordering.len() != g.vertex_count() {
        return false;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| ordering.position(w) > ordering.position(v)).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| ordering.position(w)) else { return true };
        later.iter().all(|&w| w == parent || g.has_edge(parent, w))
    })
}

/// Clique number of a chordal graph from a perfect elimination ordering.
pub fn chordal_clique_number(g: &Graph, peo: &[usize]) -> Result<usize> {
    if !is_perfect_elimination(g, peo) {
        return Err(Error::Precondition("order is not a perfect elimination ordering".into()));
    }
    let ordering = Ordering::from_sequence(peo.to_vec())?;
    Ok(peo
        .iter()
        .map(|&v| 1 + g.neighbors(v).iter().filter(|&&w| ordering.position(w) > ordering.position(v)).count())
        .max()
        .unwrap_or(0))
}

/// Finds `v` with non-adjacent neighbours `x`, `y` joined by a path avoiding
/// the rest of `N[v]`; a shortest such path closes a chordless cycle with `v`.
fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    for v in 0..n {
        let nb = g.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let mut blocked = vec![false; n];
                blocked[v] = true;
                for &w in nb {
                    blocked[w] = w != x && w != y;
                }
                if let Some(path) = shortest_path(g, x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    prev.insert(from, from);
    while let Some(a) = queue.pop_front() {
        if a == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[&cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &b in g.neighbors(a) {
            if !blocked[b] && !prev.contains_key(&b) {
                prev.insert(b, a);
                queue.push_back(b);
            }
        }
    }
    None
}

/// BK(2k+1,k) with the edges of a chordal supergraph `h` of J(2k+1,k) added
/// inside the left part. Vertices are matched through their subset labels.
pub fn bk_prime(n: usize, k: usize, h: &ChordalCertificate) -> Result<Graph> {
    if k < 1 || n != 2 * k + 1 {
        return param(format!("bk_prime needs n = 2k+1, k >= 1 (got n={n}, k={k})"));
    }
    if !is_perfect_elimination(&h.graph, &h.peo) {
        return Err(Error::Precondition("completion is not chordal under its elimination order".into()));
    }
    let johnson = gen_johnson(n, k)?;
    let bk = gen_bipartite_kneser(n, k)?;
    let h_index = h.graph.label_index();
    let bk_index = bk.label_index();
    if h.graph.vertex_count() != johnson.vertex_count() {
        return Err(Error::Precondition("completion has the wrong number of vertices".into()));
    }
    for l in johnson.labels() {
        if !h_index.contains_key(l) {
            return Err(Error::Precondition(format!("completion lacks the vertex labelled {l}")));
        }
    }
    for (a, b) in johnson.edges() {
        if !h.graph.has_edge(h_index[&johnson.label(a)], h_index[&johnson.label(b)]) {
            return Err(Error::Precondition("completion does not contain every Johnson edge".into()));
        }
    }
    let extra: Vec<(usize, usize)> = h.graph.edges().map(|(a, b)| (bk_index[&h.graph.label(a)], bk_index[&h.graph.label(b)])).collect();
    bk.with_extra_edges(extra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{gen_petersen, Graph};
    use crate::oracles::{exact_pathwidth, exact_treewidth};
    use proptest::prelude::*;

    #[test]
    fn single_bag() {
        let g = gen_petersen(5, 2).unwrap();
        let d = Decomposition::path(vec![(0..10).collect()]);
        assert_eq!(validate_decomposition(&g, &d).unwrap().width_if_ok(), Some(9));
    }

    #[test]
    fn c4_path_misses_closing_edge() {
        let g = Graph::cycle(4);
        let d = Decomposition::path(vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let r = validate_decomposition(&g, &d).unwrap();
        assert_eq!(r.uncovered_edges, vec![(0, 3)]);
        assert!(r.missing_vertices.is_empty() && r.disconnected_vertices.is_empty());
    }

    #[test]
    fn reports_all_violations() {
        let g = Graph::path(5);
        let d = Decomposition::path(vec![vec![0, 1], vec![2], vec![1]]);
        let r = validate_decomposition(&g, &d).unwrap();
        assert_eq!(r.missing_vertices, vec![3, 4]);
        assert_eq!(r.uncovered_edges, vec![(1, 2), (2, 3), (3, 4)]);
        assert_eq!(r.disconnected_vertices, vec![1]);
    }

    #[test]
    fn malformed_shape() {
        let g = Graph::path(3);
        let cyclic = Decomposition::new(vec![vec![0, 1], vec![1, 2], vec![2]], vec![(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(validate_decomposition(&g, &cyclic), Err(Error::Structural(_))));
        let split = Decomposition::new(vec![vec![0, 1], vec![1, 2], vec![2], vec![0]], vec![(0, 1), (2, 3), (2, 3)]);
        assert!(validate_decomposition(&g, &split).is_err());
        let out_of_range = Decomposition::path(vec![vec![0, 7]]);
        assert!(validate_decomposition(&g, &out_of_range).is_err());
    }

    fn spokes(n: usize, js: impl Iterator<Item = usize>) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = js.map(|j| (petersen_outer(n, j), petersen_inner(n, j))).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn petersen_examples() {
        let g = gen_petersen(5, 1).unwrap();
        let r = validate_decomposition(&g, &petersen_pd(5, 1, PetersenMode::Verbatim).unwrap()).unwrap();
        assert_eq!(r.width_if_ok(), Some(4));

        let g = gen_petersen(5, 2).unwrap();
        let r = validate_decomposition(&g, &petersen_pd(5, 2, PetersenMode::Verbatim).unwrap()).unwrap();
        assert_eq!(r.uncovered_edges, spokes(5, 3..=3));
        assert!(r.missing_vertices.is_empty() && r.disconnected_vertices.is_empty());

        let r = validate_decomposition(&g, &petersen_pd(5, 2, PetersenMode::Repaired).unwrap()).unwrap();
        assert_eq!(r.width_if_ok(), Some(6));
    }

    #[test]
    fn petersen_grid() {
        for k in 1..=5 {
            for n in 2 * k + 1..=120 {
                let g = gen_petersen(n, k).unwrap();
                let r = validate_decomposition(&g, &petersen_pd(n, k, PetersenMode::Repaired).unwrap()).unwrap();
                assert_eq!(r.width_if_ok(), Some(2 * k + 2), "n={n} k={k}");
                let verbatim = validate_decomposition(&g, &petersen_pd(n, k, PetersenMode::Verbatim).unwrap()).unwrap();
                if k == 1 {
                    assert_eq!(verbatim.width_if_ok(), Some(4));
                } else if k <= 3 {
                    assert_eq!(verbatim.uncovered_edges, spokes(n, k + 1..=2 * k - 1), "n={n} k={k}");
                    assert!(verbatim.disconnected_vertices.is_empty());
                }
            }
        }
    }

    #[test]
    fn petersen_parameters() {
        assert!(petersen_pd(4, 2, PetersenMode::Repaired).is_err());
        assert!(petersen_pd(5, 0, PetersenMode::Repaired).is_err());
        assert_eq!("repaired".parse::<PetersenMode>().unwrap(), PetersenMode::Repaired);
        assert!("other".parse::<PetersenMode>().is_err());
    }

    #[test]
    fn independent_set_examples() {
        let c4 = Graph::cycle(4);
        let d = independent_set_td(&c4, &[0, 2]).unwrap();
        assert_eq!(validate_decomposition(&c4, &d).unwrap().width_if_ok(), Some(2));
        let bk = gen_bipartite_kneser(5, 2).unwrap();
        let left: Vec<usize> = (0..10).collect();
        let d = independent_set_td(&bk, &left).unwrap();
        assert_eq!(validate_decomposition(&bk, &d).unwrap().width_if_ok(), Some(10));
        assert!(matches!(independent_set_td(&c4, &[]), Err(Error::Precondition(_))));
        assert!(matches!(independent_set_td(&c4, &[0, 1]), Err(Error::Precondition(_))));
    }

    #[test]
    fn lift_examples() {
        let h = gen_hamming(1, 2, 1).unwrap();
        let (k4, d) = lift_pd(&h, &Decomposition::path(vec![vec![0, 1]]), 4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(validate_decomposition(&k4, &d).unwrap().width_if_ok(), Some(3));

        let h = gen_hamming(1, 2, 2).unwrap();
        let pw = exact_pathwidth(&h).unwrap();
        let pd = pd_from_order(&h, &Ordering::from_sequence(pw.order).unwrap());
        assert_eq!(pd.width(), 2);
        let (g4, lifted) = lift_pd(&h, &pd, 4).unwrap();
        assert_eq!(validate_decomposition(&g4, &lifted).unwrap().width_if_ok(), Some(11));
        let (g3, lifted) = lift_pd(&h, &pd, 3).unwrap();
        let w = validate_decomposition(&g3, &lifted).unwrap().width_if_ok().unwrap();
        assert!(w + 1 <= 3 * 4);

        let broken = Decomposition::path(vec![vec![0, 1]]);
        assert!(matches!(lift_pd(&h, &broken, 4), Err(Error::Precondition(_))));
    }

    #[test]
    fn lift_width_formula() {
        for (t, n) in [(1, 3), (2, 3), (1, 2)] {
            let h = gen_hamming(t, 2, n).unwrap();
            let pd = pd_from_order(&h, &Ordering::identity(h.vertex_count()));
            let w = validate_decomposition(&h, &pd).unwrap().width_if_ok().unwrap();
            for q in [2, 4] {
                let (g, lifted) = lift_pd(&h, &pd, q).unwrap();
                let lw = validate_decomposition(&g, &lifted).unwrap().width_if_ok().unwrap();
                assert_eq!(lw + 1, (w + 1) * (q / 2).pow(n as u32));
            }
            let (g, lifted) = lift_pd(&h, &pd, 3).unwrap();
            let lw = validate_decomposition(&g, &lifted).unwrap().width_if_ok().unwrap();
            assert!(lw + 1 <= (w + 1) * 2usize.pow(n as u32));
        }
    }

    #[test]
    fn fillin_examples() {
        let c4 = Graph::cycle(4);
        let cert = fillin_chordal(&c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(cert.graph.edge_count(), 5);
        assert_eq!(cert.omega, 3);
        assert!(is_chordal(&cert.graph).is_chordal());

        let tree = Graph::from_edges(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let cert = fillin_chordal(&tree, &[1, 3, 4, 2, 0]).unwrap();
        assert_eq!((cert.graph.edge_count(), cert.omega), (4, 2));

        let j = gen_johnson(5, 2).unwrap();
        let tw = exact_treewidth(&j).unwrap();
        let cert = fillin_chordal(&j, &tw.order).unwrap();
        assert_eq!(cert.omega - 1, tw.width);
    }

    #[test]
    fn chordality_examples() {
        match is_chordal(&Graph::cycle(4)) {
            Chordality::No { cycle } => assert_eq!(cycle.len(), 4),
            other => panic!("{other:?}"),
        }
        let chorded = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_chordal(&chorded).is_chordal());
        assert!(is_chordal(&Graph::complete(5)).is_chordal());
        match is_chordal(&gen_petersen(5, 2).unwrap()) {
            Chordality::No { cycle } => assert_eq!(cycle.len(), 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bk_prime_chain() {
        let j = gen_johnson(5, 2).unwrap();
        let tw = exact_treewidth(&j).unwrap();
        let h = fillin_chordal(&j, &tw.order).unwrap();
        let g = bk_prime(5, 2, &h).unwrap();
        let Chordality::Yes { peo } = is_chordal(&g) else { panic!("bk_prime output is not chordal") };
        let omega = chordal_clique_number(&g, &peo).unwrap();
        assert!(omega <= h.omega.max(4));
        let bk = gen_bipartite_kneser(5, 2).unwrap();
        assert!(exact_treewidth(&bk).unwrap().width <= omega - 1);
        assert!(bk_prime(6, 2, &h).is_err());
    }

    #[test]
    fn elimination_decomposition_is_valid() {
        for g in [gen_johnson(5, 2).unwrap(), gen_petersen(6, 2).unwrap(), Graph::cycle(7)] {
            let tw = exact_treewidth(&g).unwrap();
            let d = td_from_elimination(&g, &tw.order).unwrap();
            assert_eq!(validate_decomposition(&g, &d).unwrap().width_if_ok(), Some(tw.width));
        }
        let two_parts = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let d = td_from_elimination(&two_parts, &[0, 1, 2, 3]).unwrap();
        assert!(validate_decomposition(&two_parts, &d).unwrap().is_ok());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| {
                let edges: Vec<_> = pairs.into_iter().filter(|(a, b)| a != b).collect();
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn prop_fillin_is_chordal_and_matches_width(g in arb_graph(9), seed in any::<u64>()) {
            let n = g.vertex_count();
            let mut order: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                order.swap(i, (s >> 33) as usize % (i + 1));
            }
            let cert = fillin_chordal(&g, &order).unwrap();
            prop_assert!(is_chordal(&cert.graph).is_chordal());
            prop_assert!(is_perfect_elimination(&cert.graph, &cert.peo));
            let d = td_from_elimination(&g, &order).unwrap();
            prop_assert_eq!(validate_decomposition(&g, &d).unwrap().width_if_ok(), Some(cert.omega - 1));
        }

        #[test]
        fn prop_optimal_fillin_gives_treewidth(g in arb_graph(9)) {
            let tw = exact_treewidth(&g).unwrap();
            prop_assert_eq!(fillin_chordal(&g, &tw.order).unwrap().omega - 1, tw.width);
        }

        #[test]
        fn prop_chordless_witness(g in arb_graph(9)) {
            if let Chordality::No { cycle } = is_chordal(&g) {
                prop_assert!(cycle.len() >= 4);
                let len = cycle.len();
                for i in 0..len {
                    for j in i + 1..len {
                        let consecutive = j == i + 1 || (i == 0 && j == len - 1);
                        prop_assert_eq!(g.has_edge(cycle[i], cycle[j]), consecutive);
                    }
                }
            }
        }

        #[test]
        fn prop_order_decomposition_width(g in arb_graph(10)) {
            let pw = exact_pathwidth(&g).unwrap();
            let order = Ordering::from_sequence(pw.order).unwrap();
            let d = pd_from_order(&g, &order);
            prop_assert_eq!(validate_decomposition(&g, &d).unwrap().width_if_ok(), Some(pw.width));
        }
    }
}
