//! Treewidth lower bounds: brambles and their transversals, minimum degree,
//! and the spectral bound with exactly certified spectra.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{check_cap, param, Error, Result};
use crate::graphs::{petersen_inner, petersen_outer, Graph};
use crate::widthcalc::{binom_ext, floor_rational};

pub const SPECTRUM_VERTEX_CAP: usize = 400;

/// Hypergraph on vertices `0..vertex_count` with non-empty edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::Structural(format!("hyperedge {i} is empty")));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::Structural(format!("hyperedge {i} holds vertex {v} outside 0..{vertex_count}")));
            }
        }
        Ok(Hypergraph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Largest number of edges through one vertex.
    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.vertex_count];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg.into_iter().max().unwrap_or(0)
    }
}

/// Family of vertex sets of a host graph, expected to be connected and
/// pairwise touching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bramble {
    pub sets: Vec<Vec<usize>>,
}

impl Bramble {
    pub fn hypergraph(&self, host: &Graph) -> Result<Hypergraph> {
        Hypergraph::new(host.vertex_count(), self.sets.clone())
    }
}

/// Length parameter `ceil(n / (2k+2))` of the Petersen bramble.
pub fn petersen_bramble_span(n: usize, k: usize) -> usize {
    n.div_ceil(2 * k + 2)
}

/// The `n` sets `{v_i, ..., v_{i+t}, u_{i+t}, u_{i+t+k}, ..., u_{i+t+tk}}` of
/// G(n,k) with `t = ceil(n / (2k+2))`, indices modulo `n`.
pub fn petersen_bramble(n: usize, k: usize) -> Result<Bramble> {
    if k < 1 || 2 * k >= n {
        return param(format!("petersen bramble needs 1 <= k < n/2 (got n={n}, k={k})"));
    }
    let t = petersen_bramble_span(n, k);
    let sets = (1..=n)
        .map(|i| {
            let mut set: Vec<usize> = (0..=t)
                .map(|j| petersen_outer(n, (i + j) % n))
                .chain((0..=t).map(|j| petersen_inner(n, (i + t + j * k) % n)))
                .collect();
            set.sort_unstable();
            set.dedup();
            set
        })
        .collect();
    Ok(Bramble { sets })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BrambleReport {
    Ok,
    /// Index of the first set that is empty or does not induce a connected subgraph.
    NotConnected { set: usize },
    /// First pair of sets, by index, that neither meet nor are joined by an edge.
    NotTouching { first: usize, second: usize },
}

impl BrambleReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, BrambleReport::Ok)
    }
}

/// Checks that every set is connected and every pair touches.
pub fn validate_bramble(g: &Graph, b: &Bramble) -> Result<BrambleReport> {
    let n = g.vertex_count();
    for (i, set) in b.sets.iter().enumerate() {
        if let Some(&v) = set.iter().find(|&&v| v >= n) {
            return Err(Error::Structural(format!("set {i} holds vertex {v} outside the graph")));
        }
        if !g.is_connected_subset(set) {
            return Ok(BrambleReport::NotConnected { set: i });
        }
    }
    let words = n.div_ceil(64);
    let as_bits = |set: &[usize], closed: bool| {
        let mut m = vec![0u64; words];
        for &v in set {
            m[v / 64] |= 1 << (v % 64);
            if closed {
                for &w in g.neighbors(v) {
                    m[w / 64] |= 1 << (w % 64);
                }
            }
        }
        m
    };
    let members: Vec<Vec<u64>> = b.sets.iter().map(|s| as_bits(s, false)).collect();
    for (i, set) in b.sets.iter().enumerate() {
        let reach = as_bits(set, true);
        for (j, other) in members.iter().enumerate().skip(i + 1) {
            if reach.iter().zip(other).all(|(a, b)| a & b == 0) {
                return Ok(BrambleReport::NotTouching { first: i, second: j });
            }
        }
    }
    Ok(BrambleReport::Ok)
}

/// `m(H) / Delta(H)`: edge count over maximum vertex degree, a lower bound
/// on the transversal number.
pub fn transversal_fraction_bound(h: &Hypergraph) -> Result<BigRational> {
    if h.edges().is_empty() {
        return Err(Error::Precondition("hypergraph has no edges".into()));
    }
    Ok(BigRational::new(BigInt::from(h.edges().len()), BigInt::from(h.max_degree())))
}

/// `ceil(n / (t+1))` with `t = ceil(n / (2k+2))`, the order bound of the
/// Petersen bramble. Only claimed when `n >= 8(2k+2)^2`, and then it must be
/// at least `2k+2`.
pub fn petersen_order_lower_bound(n: usize, k: usize) -> Result<usize> {
    if k < 1 {
        return param("petersen order bound needs k >= 1");
    }
    let need = 8 * (2 * k + 2) * (2 * k + 2);
    if n < need {
        return Err(Error::Precondition(format!("bound requires n >= 8(2k+2)^2 = {need} (got n={n})")));
    }
    let t = petersen_bramble_span(n, k);
    let value = n.div_ceil(t + 1);
    if value < 2 * k + 2 {
        return Err(Error::Infeasible(format!("order bound {value} is below 2k+2 = {} at n={n}", 2 * k + 2)));
    }
    Ok(value)
}

/// Minimum degree, a lower bound on treewidth.
pub fn degree_lower_bound(g: &Graph) -> usize {
    g.min_degree()
}

/// Integer adjacency spectrum as `(eigenvalue, multiplicity)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub pairs: Vec<(i64, u64)>,
}

impl Spectrum {
    pub fn total_multiplicity(&self) -> u64 {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    /// Eigenvalues in decreasing order, repeated by multiplicity.
    pub fn sorted_values(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.pairs.iter().flat_map(|&(l, m)| std::iter::repeat(l).take(m as usize)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// `sum m * lambda^p`, or `None` on overflow.
    pub fn moment(&self, p: u32) -> Option<i128> {
        self.pairs.iter().try_fold(0i128, |acc, &(l, m)| (l as i128).checked_pow(p)?.checked_mul(m as i128).and_then(|x| acc.checked_add(x)))
    }
}

/// Spectrum of the middle-levels graph BK(2k+1,k): `±i` with multiplicity
/// `C(2k+1, k+1-i) - C(2k+1, k-i)` for `i = 1..=k+1`.
pub fn bk_spectrum(k: usize) -> Result<Spectrum> {
    if k < 1 {
        return param("bk spectrum needs k >= 1");
    }
    let (n, k) = ((2 * k + 1) as i64, k as i64);
    let mut pairs = Vec::new();
    for i in (1..=k + 1).rev() {
        let m = binom_ext(n, k + 1 - i) - binom_ext(n, k - i);
        let m: u64 = m.try_into().map_err(|_| Error::Parameter("multiplicity overflows u64".into()))?;
        pairs.push((i, m));
        pairs.push((-i, m));
    }
    pairs.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(Spectrum { pairs })
}

/// Outcome of comparing spectral moments with closed-walk counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentReport {
    pub p_max: u32,
    /// `(p, trace(A^p), sum m lambda^p)` for every mismatching power.
    pub mismatches: Vec<(u32, i128, i128)>,
    vertex_count: usize,
    degree: Option<usize>,
    spectrum: Spectrum,
}

impl MomentReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn first_failure(&self) -> Option<u32> {
        self.mismatches.first().map(|m| m.0)
    }

    /// The spectrum, usable by [`spectral_lower_bound`] only when every
    /// moment matched.
    pub fn into_verified(self) -> Result<VerifiedSpectrum> {
        match self.first_failure() {
            None => Ok(VerifiedSpectrum { spectrum: self.spectrum, vertex_count: self.vertex_count, degree: self.degree }),
            Some(p) => Err(Error::Precondition(format!("spectrum fails the trace check at p = {p}"))),
        }
    }
}

/// A spectrum whose moments have been matched against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifiedSpectrum {
    spectrum: Spectrum,
    vertex_count: usize,
    degree: Option<usize>,
}

impl VerifiedSpectrum {
    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }
}

/// Compares `trace(A^p)`, computed as closed-walk counts, with
/// `sum m lambda^p` for `p = 0..=p_max` in exact integer arithmetic.
pub fn verify_spectrum_moments(g: &Graph, spectrum: &Spectrum, p_max: u32) -> Result<MomentReport> {
    let n = g.vertex_count();
    check_cap("spectrum graph", n, SPECTRUM_VERTEX_CAP)?;
    if p_max < 2 {
        return param("moment check needs p_max >= 2");
    }
    let overflow = || Error::Undefined("walk count overflows 128 bits".into());
    let mut traces = vec![0i128; p_max as usize + 1];
    for v in 0..n {
        let mut walk = vec![0i128; n];
        walk[v] = 1;
        traces[0] += 1;
        for p in 1..=p_max as usize {
            let mut next = vec![0i128; n];
            for (a, &count) in walk.iter().enumerate() {
                if count != 0 {
                    for &b in g.neighbors(a) {
                        next[b] = next[b].checked_add(count).ok_or_else(overflow)?;
                    }
                }
            }
            walk = next;
            traces[p] = traces[p].checked_add(walk[v]).ok_or_else(overflow)?;
        }
    }
    let mut mismatches = Vec::new();
    for (p, &tr) in traces.iter().enumerate() {
        let m = spectrum.moment(p as u32).ok_or_else(overflow)?;
        if m != tr {
            mismatches.push((p as u32, tr, m));
        }
    }
    Ok(MomentReport { p_max, mismatches, vertex_count: n, degree: g.regular_degree(), spectrum: spectrum.clone() })
}

/// `floor((3|V|/4) * mu / (d + 2 mu)) - 1` where `d` is the degree and `mu`
/// the gap between `d` and the second largest eigenvalue.
pub fn spectral_lower_bound(g: &Graph, spectrum: &VerifiedSpectrum) -> Result<BigInt> {
    let d = g.regular_degree().ok_or_else(|| Error::Precondition("graph is not regular".into()))?;
    if spectrum.vertex_count != g.vertex_count() || spectrum.degree != Some(d) {
        return Err(Error::Precondition("spectrum was verified against a different graph".into()));
    }
    let values = spectrum.spectrum.sorted_values();
    if values.first() != Some(&(d as i64)) || values.len() < 2 {
        return Err(Error::Precondition("largest eigenvalue is not the degree".into()));
    }
    let mu = d as i64 - values[1];
    let num = BigInt::from(3 * g.vertex_count() as i64 * mu);
    let den = BigInt::from(4 * (d as i64 + 2 * mu));
    Ok(floor_rational(&BigRational::new(num, den)) - 1)
}

/// `floor((3/2) C(2k+1,k) / (k+3)) - 1`.
pub fn bk_spectral_lb(k: usize) -> Result<BigInt> {
    if k < 1 {
        return param("bk spectral bound needs k >= 1");
    }
    let c = binom_ext(2 * k as i64 + 1, k as i64);
    Ok(floor_rational(&BigRational::new(3 * c, BigInt::from(2 * (k + 3)))) - 1)
}
