//! Weight-slice orderings of binary vectors and the Hales numbering check.
//!
//! A binary `n`-vector `(a_1, ..., a_n)` is stored as a mask with bit `j-1`
//! equal to `a_j`.

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, param, Error, Result};
use crate::graphs::Graph;
use crate::oracles;

/// Largest dimension for which the full ordering of `2^n` vectors is built.
pub const HALES_ORDER_CAP: usize = 26;

/// Largest slice materialised by [`slice_order`].
pub const SLICE_ROW_CAP: usize = 1 << 26;

/// Bijection between vertices `0..len` and ranks `0..len`.
///
/// Ranks are stored 0-based; [`Ordering::rank`] adds one for the 1-based
/// numbering used in the width definitions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ordering {
    sequence: Vec<usize>,
    position: Vec<usize>,
}

impl Ordering {
    /// `sequence[i]` is the vertex placed at 0-based position `i`.
    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self> {
        let len = sequence.len();
        let mut position = vec![usize::MAX; len];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= len || position[v] != usize::MAX {
                return Err(Error::Structural(format!("ordering is not a bijection at position {i} (vertex {v})")));
            }
            position[v] = i;
        }
        Ok(Ordering { sequence, position })
    }

    pub fn identity(len: usize) -> Self {
        Ordering { sequence: (0..len).collect(), position: (0..len).collect() }
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// 0-based position of `v`.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// 1-based rank of `v`.
    pub fn rank(&self, v: usize) -> usize {
        self.position[v] + 1
    }

    pub fn reversed(&self) -> Self {
        let seq: Vec<usize> = self.sequence.iter().rev().copied().collect();
        Ordering::from_sequence(seq).expect("reversal of a bijection")
    }

    /// Largest `|pos(u) - pos(v)|` over the edges of `g`.
    pub fn bandwidth(&self, g: &Graph) -> usize {
        g.edges().map(|(u, v)| self.position[u].abs_diff(self.position[v])).max().unwrap_or(0)
    }
}

/// Rows of the weight-`k` slice of binary `n`-vectors in recursive order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceOrder {
    pub n: usize,
    pub k: usize,
    pub rows: Vec<u64>,
}

/// Weight-`k` vectors of length `n`, ordered so that for `0 < k < n` the rows
/// of the `(n-1, k-1)` slice extended by `a_n = 1` come first, followed by the
/// rows of the `(n-1, k)` slice extended by `a_n = 0`.
pub fn slice_order(n: usize, k: usize) -> Result<SliceOrder> {
    if n < 1 || n > 63 || k > n {
        return param(format!("slice order needs 1 <= n <= 63 and 0 <= k <= n (got n={n}, k={k})"));
    }
    let size = crate::widthcalc::binom_u128(n as u64, k as u64);
    check_cap("slice order rows", usize::try_from(size).unwrap_or(usize::MAX), SLICE_ROW_CAP)?;

    // Built bottom-up over the dimension; at dimension m only the weights that
    // can still reach k are kept.
    let window = |m: usize| (k.saturating_sub(n - m), k.min(m));
    let (lo, hi) = window(1);
    let mut levels: Vec<Vec<u64>> = (lo..=hi).map(|w| vec![if w == 1 { 1 } else { 0 }]).collect();
    let mut base = lo;
    for m in 2..=n {
        let (lo, hi) = window(m);
        let top = 1u64 << (m - 1);
        let get = |w: usize| -> &[u64] {
            if w < base || w >= base + levels.len() { &[] } else { &levels[w - base] }
        };
        let next: Vec<Vec<u64>> = (lo..=hi)
            .map(|w| {
                if w == 0 {
                    vec![0]
                } else if w == m {
                    vec![(top << 1) - 1]
                } else {
                    get(w - 1).iter().map(|r| r | top).chain(get(w).iter().copied()).collect()
                }
            })
            .collect();
        levels = next;
        base = lo;
    }
    let rows = levels.swap_remove(k - base);
    Ok(SliceOrder { n, k, rows })
}

/// All `2^n` binary vectors, weight slices stacked by increasing weight. The
/// ordering's vertices are the vector masks themselves.
pub fn hales_order(n: usize) -> Result<Ordering> {
    if n < 1 {
        return param("hales order needs n >= 1");
    }
    check_cap("hales order dimension", n, HALES_ORDER_CAP)?;
    let mut seq = Vec::with_capacity(1 << n);
    for k in 0..=n {
        seq.extend(slice_order(n, k)?.rows.into_iter().map(|r| r as usize));
    }
    Ordering::from_sequence(seq)
}

/// `a_1 a_2 ... a_n` as a 0/1 string.
pub fn vector_string(mask: u64, n: usize) -> String {
    (0..n).map(|j| if mask >> j & 1 == 1 { '1' } else { '0' }).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HalesCondition {
    /// Outer boundary of the prefix is not the minimum for its size.
    OuterBoundary,
    /// Inner boundary of the prefix is not the minimum over sets of its size.
    InnerBoundary,
    /// The interior of the prefix is not an initial segment.
    InteriorFirst,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HalesReport {
    Ok,
    Violation { prefix: usize, condition: HalesCondition, found: usize, optimum: usize },
}

impl HalesReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, HalesReport::Ok)
    }
}

/// Checks every prefix `S_l` of `ordering` against the exhaustive vertex
/// isoperimetric profile of `g`.
///
/// Both boundary conventions are tested: the outer boundary `|N(S_l) \ S_l|`
/// against `b_v(l)`, and the inner boundary (vertices of `S_l` with a
/// neighbour outside) against its minimum over `l`-sets, which is
/// `b_v(|V| - l)`. The interior of every prefix must also be the initial
/// segment of matching length. Reports the first failing prefix.
pub fn verify_hales_property(g: &Graph, ordering: &Ordering, limit: usize) -> Result<HalesReport> {
    let n = g.vertex_count();
    check_cap("hales property graph", n, limit)?;
    if ordering.len() != n {
        return Err(Error::Precondition(format!("ordering has {} entries for {n} vertices", ordering.len())));
    }
    let profile = oracles::b_v_profile(g)?;
    let adj = g.adjacency_masks()?;
    let mut prefix = 0u64;
    for l in 1..=n {
        prefix |= 1 << ordering.sequence()[l - 1];
        let outer = oracles::phi_mask(&adj, prefix);
        if outer != profile[l] {
            return Ok(HalesReport::Violation { prefix: l, condition: HalesCondition::OuterBoundary, found: outer, optimum: profile[l] });
        }
        let interior = interior_mask(&adj, prefix);
        let inner = (prefix & !interior).count_ones() as usize;
        if inner != profile[n - l] {
            return Ok(HalesReport::Violation { prefix: l, condition: HalesCondition::InnerBoundary, found: inner, optimum: profile[n - l] });
        }
        let m = interior.count_ones() as usize;
        let initial = ordering.sequence()[..m].iter().fold(0u64, |acc, &v| acc | 1 << v);
        if initial != interior {
            return Ok(HalesReport::Violation { prefix: l, condition: HalesCondition::InteriorFirst, found: m, optimum: m });
        }
    }
    Ok(HalesReport::Ok)
}

fn interior_mask(adj: &[u64], set: u64) -> u64 {
    crate::graphs::bits(set).filter(|&v| adj[v as usize] & !set == 0).fold(0, |acc, v| acc | 1 << v)
}

/// Largest outer boundary over the prefixes of `ordering`.
pub fn max_prefix_boundary(g: &Graph, ordering: &Ordering) -> usize {
    let n = g.vertex_count();
    let mut inside = vec![false; n];
    let mut outside_hits = vec![0usize; n];
    let mut boundary = 0usize;
    let mut best = 0;
    for &v in ordering.sequence() {
        if outside_hits[v] > 0 {
            boundary -= 1;
        }
        inside[v] = true;
        for &w in g.neighbors(v) {
            if !inside[w] {
                if outside_hits[w] == 0 {
                    boundary += 1;
                }
                outside_hits[w] += 1;
            }
        }
        best = best.max(boundary);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{gen_hamming, Label};
    use proptest::prelude::*;

    fn vectors(rows: &[u64], n: usize) -> Vec<String> {
        rows.iter().map(|&r| vector_string(r, n)).collect()
    }

    #[test]
    fn small_slices() {
        assert_eq!(vectors(&slice_order(1, 0).unwrap().rows, 1), ["0"]);
        assert_eq!(vectors(&slice_order(2, 1).unwrap().rows, 2), ["01", "10"]);
        assert_eq!(vectors(&slice_order(3, 1).unwrap().rows, 3), ["001", "010", "100"]);
        assert_eq!(vectors(&slice_order(3, 2).unwrap().rows, 3), ["011", "101", "110"]);
    }

    #[test]
    fn order_n2() {
        let o = hales_order(2).unwrap();
        let v: Vec<String> = o.sequence().iter().map(|&m| vector_string(m as u64, 2)).collect();
        assert_eq!(v, ["00", "01", "10", "11"]);
        let o = hales_order(1).unwrap();
        assert_eq!(o.sequence(), [0, 1]);
    }

    #[test]
    fn out_of_range() {
        assert!(slice_order(3, 4).is_err());
        assert!(slice_order(0, 0).is_err());
        assert!(hales_order(0).is_err());
    }

    /// Independent recursive transcription used as the oracle for the
    /// iterative builder.
    fn slice_recursive(n: usize, k: usize) -> Vec<u64> {
        if k == 0 {
            return vec![0];
        }
        if k == n {
            return vec![(1 << n) - 1];
        }
        let mut out: Vec<u64> = slice_recursive(n - 1, k - 1).into_iter().map(|r| r | 1 << (n - 1)).collect();
        out.extend(slice_recursive(n - 1, k));
        out
    }

    #[test]
    fn matches_recursive_definition() {
        for n in 1..=12 {
            for k in 0..=n {
                assert_eq!(slice_order(n, k).unwrap().rows, slice_recursive(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn slices_distinct_with_correct_weight() {
        for n in 1..=20 {
            for k in 0..=n {
                let rows = slice_order(n, k).unwrap().rows;
                assert_eq!(rows.len() as u128, crate::widthcalc::binom_u128(n as u64, k as u64));
                assert!(rows.iter().all(|r| r.count_ones() as usize == k));
                let mut sorted = rows.clone();
                sorted.sort_unstable();
                sorted.dedup();
                assert_eq!(sorted.len(), rows.len());
            }
        }
    }

    #[test]
    fn prefixes_are_weight_balls() {
        for n in 1..=12 {
            let o = hales_order(n).unwrap();
            let mut end = 0;
            for k in 0..=n {
                end += crate::widthcalc::binom_u128(n as u64, k as u64) as usize;
                assert!(o.sequence()[..end].iter().all(|&m| m.count_ones() as usize <= k));
                assert!(o.sequence()[end..].iter().all(|&m| m.count_ones() as usize > k));
            }
        }
    }

    #[test]
    fn hales_property_on_small_cubes() {
        for (t, n) in [(1, 3), (2, 3), (1, 4), (2, 4), (3, 4)] {
            let g = gen_hamming(t, 2, n).unwrap();
            let report = verify_hales_property(&g, &Ordering::identity(g.vertex_count()), 20).unwrap();
            assert!(report.is_ok(), "t={t} n={n}: {report:?}");
        }
    }

    #[test]
    fn reversed_binary_is_not_hales() {
        let g = gen_hamming(1, 2, 3).unwrap();
        let mut seq: Vec<usize> = (0..8).collect();
        let word = |v: usize| match g.label(v) {
            Label::Word(w) => w,
            _ => unreachable!(),
        };
        seq.sort_by_key(|&v| std::cmp::Reverse(word(v)));
        let report = verify_hales_property(&g, &Ordering::from_sequence(seq).unwrap(), 20).unwrap();
        assert!(!report.is_ok());
    }

    #[test]
    fn hales_check_respects_limit() {
        let g = gen_hamming(1, 2, 5).unwrap();
        assert!(matches!(
            verify_hales_property(&g, &Ordering::identity(32), 20),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn ordering_rejects_non_bijection() {
        assert!(Ordering::from_sequence(vec![0, 0, 1]).is_err());
        assert!(Ordering::from_sequence(vec![0, 3, 1]).is_err());
        let o = Ordering::from_sequence(vec![2, 0, 1]).unwrap();
        assert_eq!((o.rank(2), o.rank(0), o.rank(1)), (1, 2, 3));
    }

    proptest! {
        #[test]
        fn prop_slice_restriction_of_global_order(n in 1usize..=10, k in 0usize..=10) {
            prop_assume!(k <= n);
            let o = hales_order(n).unwrap();
            let restricted: Vec<u64> = o.sequence().iter().filter(|m| m.count_ones() as usize == k).map(|&m| m as u64).collect();
            prop_assert_eq!(restricted, slice_order(n, k).unwrap().rows);
        }

        #[test]
        fn prop_ordering_roundtrip(perm in Just((0..30usize).collect::<Vec<_>>()).prop_shuffle()) {
            let o = Ordering::from_sequence(perm.clone()).unwrap();
            for (i, &v) in perm.iter().enumerate() {
                prop_assert_eq!(o.position(v), i);
            }
        }
    }
}
