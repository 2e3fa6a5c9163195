//! Exhaustive solvers used as ground truth on small graphs.
//!
//! Everything here works on `u64` vertex masks and is exponential in the
//! number of vertices. Each solver refuses inputs above its cap instead of
//! falling back to a heuristic.

use serde::{Deserialize, Serialize};

use crate::bounds::Hypergraph;
use crate::error::{check_cap, Error, Result};
use crate::graphs::{bits, Graph};
use crate::hales::Ordering;

pub const TREEWIDTH_CAP: usize = 25;
pub const PATHWIDTH_CAP: usize = 25;
pub const BANDWIDTH_CAP: usize = 12;
pub const BV_CAP: usize = 20;
pub const SEPARATOR_CAP: usize = 18;
pub const CROSS_FAMILY_CAP: usize = 21;
pub const TRANSVERSAL_EDGE_CAP: usize = 64;

/// Enumerates the subsets of `0..universe` as masks.
#[derive(Debug, Clone, Copy)]
pub struct SubsetCounter {
    universe: usize,
}

impl SubsetCounter {
    pub fn new(universe: usize, cap: usize) -> Result<Self> {
        check_cap("subset universe", universe, cap.min(63))?;
        Ok(SubsetCounter { universe })
    }

    /// Every subset once, in increasing mask order.
    pub fn by_mask(&self) -> impl Iterator<Item = u64> {
        0..1u64 << self.universe
    }

    /// Every subset of size `size` once, in increasing mask order.
    pub fn of_size(&self, size: usize) -> impl Iterator<Item = u64> {
        let limit = 1u64 << self.universe;
        let mut next = if size > self.universe { None } else { Some((1u64 << size) - 1) };
        std::iter::from_fn(move || {
            let cur = next?;
            if cur >= limit {
                return None;
            }
            next = if cur == 0 {
                None
            } else {
                // Next mask with the same popcount.
                let low = cur & cur.wrapping_neg();
                let ripple = cur + low;
                Some((((ripple ^ cur) >> 2) / low) | ripple)
            };
            Some(cur)
        })
    }
}

fn neighbourhood(adj: &[u64], set: u64) -> u64 {
    bits(set).fold(0, |acc, v| acc | adj[v as usize])
}

/// Vertices outside `set` with a neighbour inside it.
pub fn phi_mask(adj: &[u64], set: u64) -> usize {
    (neighbourhood(adj, set) & !set).count_ones() as usize
}

/// Outer vertex boundary `|N(S) \ S|` for any graph size.
pub fn phi(g: &Graph, set: &[usize]) -> usize {
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    let mut hit = vec![false; g.vertex_count()];
    let mut count = 0;
    for &v in set {
        for &w in g.neighbors(v) {
            if !inside[w] && !hit[w] {
                hit[w] = true;
                count += 1;
            }
        }
    }
    count
}

/// `b_v(l)` for every `l` in `0..=|V|`.
pub fn b_v_profile(g: &Graph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    check_cap("b_v graph", n, BV_CAP)?;
    let adj: Vec<u32> = g.adjacency_masks()?.into_iter().map(|m| m as u32).collect();
    let mut profile = vec![usize::MAX; n + 1];
    let mut nb = vec![0u32; 1 << n];
    for mask in 0usize..1 << n {
        if mask > 0 {
            let low = mask.trailing_zeros() as usize;
            nb[mask] = nb[mask & (mask - 1)] | adj[low];
        }
        let size = mask.count_ones() as usize;
        let phi = (nb[mask] & !(mask as u32)).count_ones() as usize;
        profile[size] = profile[size].min(phi);
    }
    Ok(profile)
}

/// Minimum outer boundary over `l`-subsets.
pub fn b_v(l: usize, g: &Graph) -> Result<usize> {
    if l > g.vertex_count() {
        return Err(Error::Parameter(format!("subset size {l} exceeds {} vertices", g.vertex_count())));
    }
    Ok(b_v_profile(g)?[l])
}

/// Width value with the ordering that attains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthCertificate {
    pub width: usize,
    pub order: Vec<usize>,
}

/// Exact treewidth by dynamic programming over eliminated sets.
///
/// `best[S]` is the least possible maximum elimination degree when exactly
/// the vertices of `S` are eliminated first. Eliminating `v` after `S` gives
/// it the degree `|Q(S, v)|`: the vertices outside `S + v` reachable from
/// `v` through `S`. The returned elimination order is rebuilt backwards,
/// preferring the smallest vertex index at each step.
pub fn exact_treewidth(g: &Graph) -> Result<WidthCertificate> {
    exact_treewidth_capped(g, TREEWIDTH_CAP)
}

pub fn exact_treewidth_capped(g: &Graph, cap: usize) -> Result<WidthCertificate> {
    let n = g.vertex_count();
    check_cap("treewidth graph", n, cap.min(32))?;
    if n == 0 {
        return Ok(WidthCertificate { width: 0, order: vec![] });
    }
    let adj = g.adjacency_masks()?;
    let full = (1u64 << n) - 1;
    let mut best = vec![u8::MAX; 1 << n];
    best[0] = 0;
    for s in 0..=full {
        let cur = best[s as usize];
        if cur == u8::MAX {
            continue;
        }
        for v in bits(full & !s) {
            let q = elimination_degree(&adj, s, v as usize);
            let val = cur.max(q as u8);
            let slot = &mut best[(s | 1 << v) as usize];
            if val < *slot {
                *slot = val;
            }
        }
    }
    let width = best[full as usize] as usize;
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = best[s as usize];
        let v = bits(s)
            .find(|&v| {
                let rest = s & !(1 << v);
                best[rest as usize].max(elimination_degree(&adj, rest, v as usize) as u8) == target
            })
            .expect("some vertex realises the optimum");
        order.push(v as usize);
        s &= !(1 << v);
    }
    order.reverse();
    Ok(WidthCertificate { width, order })
}

/// `|Q(S, v)|`.
fn elimination_degree(adj: &[u64], s: u64, v: usize) -> u32 {
    let mut comp = 1u64 << v;
    let mut frontier = comp;
    let mut reach = 0u64;
    while frontier != 0 {
        let nb = neighbourhood(adj, frontier);
        reach |= nb;
        frontier = nb & s & !comp;
        comp |= frontier;
    }
    (reach & !s & !(1u64 << v)).count_ones()
}

/// Exact pathwidth as the vertex separation number.
///
/// `best[S]` is the least possible maximum of `|boundary(P)|` over the
/// prefixes `P` of an ordering of `S`, where `boundary(P)` is the set of
/// vertices of `P` with a neighbour outside `P`.
pub fn exact_pathwidth(g: &Graph) -> Result<WidthCertificate> {
    exact_pathwidth_capped(g, PATHWIDTH_CAP)
}

pub fn exact_pathwidth_capped(g: &Graph, cap: usize) -> Result<WidthCertificate> {
    let n = g.vertex_count();
    check_cap("pathwidth graph", n, cap.min(32))?;
    if n == 0 {
        return Ok(WidthCertificate { width: 0, order: vec![] });
    }
    let adj = g.adjacency_masks()?;
    let full = (1u64 << n) - 1;
    let boundary = |s: u64| bits(s).filter(|&v| adj[v as usize] & !s != 0).count() as u8;
    let mut best = vec![0u8; 1 << n];
    for s in 1..=full {
        let inner = bits(s).map(|v| best[(s & !(1 << v)) as usize]).min().unwrap_or(0);
        best[s as usize] = inner.max(boundary(s));
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = best[s as usize];
        let v = bits(s)
            .find(|&v| best[(s & !(1 << v)) as usize].max(boundary(s)) == target)
            .expect("some vertex realises the optimum");
        order.push(v as usize);
        s &= !(1 << v);
    }
    order.reverse();
    Ok(WidthCertificate { width: best[full as usize] as usize, order })
}

/// Vertex separation of a fixed order: the largest number of placed vertices
/// that still have an unplaced neighbour.
pub fn vertex_separation(g: &Graph, order: &Ordering) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    let mut open = 0usize;
    let mut remaining: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut placed = vec![false; n];
    for &v in order.sequence() {
        placed[v] = true;
        let mut later = 0;
        for &w in g.neighbors(v) {
            if placed[w] {
                remaining[w] -= 1;
                if remaining[w] == 0 {
                    open -= 1;
                }
            } else {
                later += 1;
            }
        }
        remaining[v] = later;
        if later > 0 {
            open += 1;
        }
        best = best.max(open);
    }
    best
}

/// Exact bandwidth by iterative deepening over the target width, placing
/// vertices left to right and pruning on neighbour deadlines.
pub fn exact_bandwidth(g: &Graph) -> Result<WidthCertificate> {
    exact_bandwidth_capped(g, BANDWIDTH_CAP)
}

pub fn exact_bandwidth_capped(g: &Graph, cap: usize) -> Result<WidthCertificate> {
    let n = g.vertex_count();
    check_cap("bandwidth graph", n, cap.min(63))?;
    if g.edge_count() == 0 {
        return Ok(WidthCertificate { width: 0, order: (0..n).collect() });
    }
    let adj = g.adjacency_masks()?;
    let lower = g.max_degree().div_ceil(2).max(1);
    for b in lower..n {
        let mut pos = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        if place(&adj, b, 0, &mut pos, &mut order) {
            return Ok(WidthCertificate { width: b, order });
        }
    }
    unreachable!("width n-1 is always feasible")
}

fn place(adj: &[u64], b: usize, placed: u64, pos: &mut [usize], order: &mut Vec<usize>) -> bool {
    let n = adj.len();
    let i = order.len();
    if i == n {
        return true;
    }
    // Every placed vertex with unplaced neighbours must fit them all in its window.
    for &u in order.iter() {
        let pending = (adj[u] & !placed).count_ones() as usize;
        if pending > 0 && pos[u] + b < i + pending - 1 {
            return false;
        }
    }
    let unplaced = ((1u64 << n) - 1) & !placed;
    for v in bits(unplaced) {
        let v = v as usize;
        if bits(adj[v] & placed).any(|w| i - pos[w as usize] > b) {
            continue;
        }
        pos[v] = i;
        order.push(v);
        if place(adj, b, placed | 1 << v, pos, order) {
            return true;
        }
        order.pop();
        pos[v] = usize::MAX;
    }
    false
}

/// Separator `x` with the remaining vertices split into `a` and `b`, no edge
/// between `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separator {
    pub x: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

/// Smallest `X` (at most `size_cap` vertices) such that `V \ X` splits into
/// two sides of at most `2|V \ X| / 3` vertices each with no edge between
/// them. Sets are scanned by size, then by mask.
pub fn min_balanced_separator(g: &Graph, size_cap: usize) -> Result<Option<Separator>> {
    let n = g.vertex_count();
    let counter = SubsetCounter::new(n, SEPARATOR_CAP)?;
    let adj = g.adjacency_masks()?;
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    for size in 0..=size_cap.min(n) {
        for x in counter.of_size(size) {
            if let Some((a, b)) = balanced_split(&adj, full & !x) {
                let list = |m: u64| bits(m).map(|v| v as usize).collect::<Vec<_>>();
                return Ok(Some(Separator { x: list(x), a: list(a), b: list(b) }));
            }
        }
    }
    Ok(None)
}

fn balanced_split(adj: &[u64], rest: u64) -> Option<(u64, u64)> {
    let r = rest.count_ones() as usize;
    let mut comps = Vec::new();
    let mut left = rest;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        loop {
            let grown = comp | (neighbourhood(adj, comp) & rest);
            if grown == comp {
                break;
            }
            comp = grown;
        }
        comps.push(comp);
        left &= !comp;
    }
    // reachable[s] holds a union of components of total size s.
    let mut reachable: Vec<Option<u64>> = vec![None; r + 1];
    reachable[0] = Some(0);
    for &c in &comps {
        let sz = c.count_ones() as usize;
        for s in (sz..=r).rev() {
            if reachable[s].is_none() {
                if let Some(m) = reachable[s - sz] {
                    reachable[s] = Some(m | c);
                }
            }
        }
    }
    (0..=r).find_map(|s| {
        let ok = 3 * s <= 2 * r && 3 * (r - s) <= 2 * r;
        reachable[s].filter(|_| ok).map(|a| (a, rest & !a))
    })
}

/// Largest `|A| + |C|` over families of `k`-subsets of `[n]` where `A` is
/// nonempty and `C` is the nonempty family of all `k`-sets meeting every
/// member of `A`.
pub fn max_cross_intersecting_sum(n: usize, k: usize) -> Result<usize> {
    if k < 1 || k > n || n > 63 {
        return Err(Error::Parameter(format!("cross-intersecting families need 1 <= k <= n (got n={n}, k={k})")));
    }
    let sets: Vec<u64> = (0u64..1 << n).filter(|m| m.count_ones() as usize == k).collect();
    let m = sets.len();
    check_cap("cross-intersecting family size", m, CROSS_FAMILY_CAP)?;
    let meets: Vec<u32> = sets
        .iter()
        .map(|&a| sets.iter().enumerate().filter(|(_, &b)| a & b != 0).fold(0u32, |acc, (j, _)| acc | 1 << j))
        .collect();
    let all = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut forced = vec![0u32; 1 << m];
    forced[0] = all;
    let mut best = 0;
    for fam in 1usize..1 << m {
        let low = fam.trailing_zeros() as usize;
        forced[fam] = forced[fam & (fam - 1)] & meets[low];
        if forced[fam] != 0 {
            best = best.max(fam.count_ones() as usize + forced[fam].count_ones() as usize);
        }
    }
    Ok(best)
}

/// 2-colouring of `g`, or `None` if it has an odd cycle.
pub fn two_colouring(g: &Graph) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let c = colour[v].unwrap();
            for &w in g.neighbors(v) {
                match colour[w] {
                    None => {
                        colour[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(cw) if cw == c => return None,
                    _ => {}
                }
            }
        }
    }
    Some(colour.into_iter().map(Option::unwrap).collect())
}

/// Maximum matching of a bipartite graph by augmenting paths.
pub fn maximum_bipartite_matching(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let colour = two_colouring(g).ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
    let n = g.vertex_count();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    fn augment(g: &Graph, v: usize, seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for &w in g.neighbors(v) {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if mate[w].map_or(true, |u| augment(g, u, seen, mate)) {
                mate[w] = Some(v);
                mate[v] = Some(w);
                return true;
            }
        }
        false
    }
    for v in (0..n).filter(|&v| !colour[v]) {
        let mut seen = vec![false; n];
        augment(g, v, &mut seen, &mut mate);
    }
    Ok((0..n).filter(|&v| !colour[v]).filter_map(|v| mate[v].map(|w| (v, w))).collect())
}

/// A perfect matching if one exists.
pub fn bipartite_perfect_matching(g: &Graph) -> Result<Option<Vec<(usize, usize)>>> {
    let m = maximum_bipartite_matching(g)?;
    Ok((2 * m.len() == g.vertex_count()).then_some(m))
}

/// Minimum transversal (hitting set) by branching on the smallest uncovered
/// edge.
pub fn exact_transversal(h: &Hypergraph) -> Result<(usize, Vec<usize>)> {
    let edges = h.edges();
    check_cap("transversal edges", edges.len(), TRANSVERSAL_EDGE_CAP)?;
    if edges.iter().any(Vec::is_empty) {
        return Err(Error::Precondition("hypergraph has an empty edge".into()));
    }
    let mut hits = vec![0u64; h.vertex_count()];
    for (i, e) in edges.iter().enumerate() {
        for &v in e {
            hits[v] |= 1 << i;
        }
    }
    let all = if edges.len() == 64 { u64::MAX } else { (1u64 << edges.len()) - 1 };
    let mut best: Vec<usize> = {
        // Greedy start gives an initial upper bound.
        let mut covered = 0u64;
        let mut pick = Vec::new();
        while covered != all {
            let v = (0..hits.len()).max_by_key(|&v| ((hits[v] & !covered).count_ones(), std::cmp::Reverse(v))).unwrap();
            pick.push(v);
            covered |= hits[v];
        }
        pick
    };
    let mut cur = Vec::new();
    hit_search(edges, &hits, all, 0, &mut cur, &mut best);
    best.sort_unstable();
    Ok((best.len(), best))
}

fn hit_search(edges: &[Vec<usize>], hits: &[u64], all: u64, covered: u64, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    if covered == all {
        if cur.len() < best.len() {
            *best = cur.clone();
        }
        return;
    }
    if cur.len() + 1 >= best.len() {
        return;
    }
    let open = all & !covered;
    let e = bits(open).min_by_key(|&i| edges[i as usize].len()).unwrap() as usize;
    for &v in &edges[e] {
        cur.push(v);
        hit_search(edges, hits, all, covered | hits[v], cur, best);
        cur.pop();
    }
}
