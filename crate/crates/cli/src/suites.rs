//! Named verification suites. Each suite expands its grid into instances,
//! checks every instance (optionally on a worker pool) and returns the
//! records in instance order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use widthlab::bounds::{
    bk_spectral_lb, bk_spectrum, degree_lower_bound, petersen_bramble, petersen_order_lower_bound, spectral_lower_bound,
    transversal_fraction_bound, validate_bramble, verify_spectrum_moments, BrambleReport, Spectrum,
};
use widthlab::decomp::{
    bk_prime, chordal_clique_number, fillin_chordal, independent_set_td, is_chordal, petersen_pd, validate_decomposition,
    Chordality, PetersenMode,
};
use widthlab::graphs::{gen_bipartite_kneser, gen_hamming, gen_johnson, gen_petersen, petersen_inner, petersen_outer};
use widthlab::hales::{verify_hales_property, Ordering};
use widthlab::oracles::{
    b_v_profile, bipartite_perfect_matching, exact_bandwidth_capped, exact_pathwidth_capped, exact_transversal,
    exact_treewidth_capped, max_cross_intersecting_sum, min_balanced_separator, BANDWIDTH_CAP, PATHWIDTH_CAP, SEPARATOR_CAP,
    TREEWIDTH_CAP,
};
use widthlab::widthcalc::{
    assemble_full, binom_ext, bw_closed, bw_recursion, diagonal_distance, harper_lower_bound, johnson_slice_bandwidth,
    johnson_slice_ratio, matrix_bandwidth, radius_closed, radius_closed_branches, radius_direct, radius_recursive,
    ParamTuple, Radius,
};
use widthlab::{FamilyKind, Graph};

use crate::{CliError, CliResult, Record};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    HypercubeChain,
    BlockRadius,
    BandwidthRecursion,
    Hales,
    Petersen,
    Bramble,
    Kneser,
    Spectrum,
    Limit,
    Oracles,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::HypercubeChain,
        Suite::BlockRadius,
        Suite::BandwidthRecursion,
        Suite::Hales,
        Suite::Petersen,
        Suite::Bramble,
        Suite::Kneser,
        Suite::Spectrum,
        Suite::Limit,
        Suite::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HypercubeChain => "theorem1",
            Suite::BlockRadius => "appendixA",
            Suite::BandwidthRecursion => "appendixB",
            Suite::Hales => "hales",
            Suite::Petersen => "petersen",
            Suite::Bramble => "bramble",
            Suite::Kneser => "kneser",
            Suite::Spectrum => "spectrum",
            Suite::Limit => "limit",
            Suite::Oracles => "oracles",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let alias = match s {
            "hypercube" => Some(Suite::HypercubeChain),
            "radius" => Some(Suite::BlockRadius),
            "recursion" => Some(Suite::BandwidthRecursion),
            _ => None,
        };
        alias.or_else(|| Suite::ALL.into_iter().find(|x| x.name() == s)).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// Grid and resources for one suite run. `t`, `n` and `k` are upper ends of
/// the sweep; `None` picks the suite's default range.
#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    pub t: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub mode: Option<PetersenMode>,
    /// Vertex cap handed to the exhaustive oracles.
    pub cap: Option<usize>,
    pub workers: usize,
}

impl SuiteConfig {
    fn tw_cap(&self) -> usize {
        self.cap.unwrap_or(TREEWIDTH_CAP)
    }

    fn pw_cap(&self) -> usize {
        self.cap.unwrap_or(PATHWIDTH_CAP)
    }

    fn bw_cap(&self) -> usize {
        self.cap.unwrap_or(BANDWIDTH_CAP)
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> CliResult<Vec<Record>> {
    if cfg.workers == 0 {
        return Err(CliError::Usage("--workers must be at least 1".into()));
    }
    if cfg.cap == Some(0) {
        return Err(CliError::Usage("--cap must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    pool.install(|| match suite {
        Suite::HypercubeChain => hypercube_chain(cfg),
        Suite::BlockRadius => block_radius(cfg),
        Suite::BandwidthRecursion => bandwidth_recursion(cfg),
        Suite::Hales => hales(cfg),
        Suite::Petersen => petersen(cfg),
        Suite::Bramble => bramble(cfg),
        Suite::Kneser => kneser(cfg),
        Suite::Spectrum => spectrum(cfg),
        Suite::Limit => limit(cfg),
        Suite::Oracles => oracles(cfg),
    })
}

/// Checks every item in parallel; the output keeps the order of `items`.
fn sweep<T: Sync>(items: &[T], check: impl Fn(&T) -> CliResult<Vec<Record>> + Sync + Send) -> CliResult<Vec<Record>> {
    let parts: Vec<CliResult<Vec<Record>>> = items.par_iter().map(check).collect();
    let mut out = Vec::new();
    for part in parts {
        out.extend(part?);
    }
    Ok(out)
}

fn hamming_name(t: usize, n: usize) -> String {
    format!("H({t},2,{n})")
}

fn hypercube_chain(cfg: &SuiteConfig) -> CliResult<Vec<Record>> {
    let (t_max, n_max) = (cfg.t.unwrap_or(3), cfg.n.unwrap_or(4));
    let grid: Vec<(usize, usize)> = (1..=t_max).flat_map(|t| (t + 1..=n_max).map(move |n| (t, n))).collect();
    sweep(&grid, |&(t, n)| {
        let inst = hamming_name(t, n);
        let closed = bw_closed(t, n);
        let g = gen_hamming(t, 2, n)?;
        let mut out = vec![
            Record::new(&inst, "bw_closed = matrix_bandwidth", &closed, matrix_bandwidth(&assemble_full(t, n)?)?),
            Record::new(&inst, "bw_closed = pathwidth", &closed, exact_pathwidth_capped(&g, cfg.pw_cap())?.width),
        ];
        if g.vertex_count() <= cfg.bw_cap() {
            out.push(Record::new(&inst, "bw_closed = bandwidth", &closed, exact_bandwidth_capped(&g, cfg.bw_cap())?.width));
        }
        Ok(out)
    })
}

fn block_radius(cfg: &SuiteConfig) -> CliResult<Vec<Record>> {
    let tuples: Vec<ParamTuple> = ParamTuple::all(cfg.n.unwrap_or(10)).into_iter().filter(ParamTuple::is_valid).collect();
    sweep(&tuples, |p| {
        let inst = format!("(t={},n={},k={},s={})", p.t, p.n, p.k, p.s);
        let branches = radius_closed_branches(p.t, p.n, p.k, p.s)?;
        let closed = radius_closed(p.t, p.n, p.k, p.s)?;
        let rec = radius_recursive(p.t, p.n, p.k, p.offset());
        let direct = radius_direct(p.t, p.n, p.k, p.s)?;
        let mut out = vec![
            Record::new(&inst, "closed = recursive", &closed, &rec),
            Record::new(&inst, "recursive = direct", &rec, &direct),
        ];
        if branches.len() > 1 {
            let lo = branches.iter().map(|b| &b.1).min().unwrap();
            let hi = branches.iter().map(|b| &b.1).max().unwrap();
            out.push(Record::new(&inst, "overlapping branches agree", lo, hi));
        }
        Ok(out)
    })
}

fn bandwidth_recursion(cfg: &SuiteConfig) -> CliResult<Vec<Record>> {
    let (t_max, n_max) = (cfg.t.unwrap_or(6), cfg.n.unwrap_or(12));
    let grid: Vec<(usize, usize)> = (1..=t_max).flat_map(|t| (1..=n_max).map(move |n| (t, n))).collect();
    let mut out = sweep(&grid, |&(t, n)| {
        let inst = format!("(t={t},n={n})");
        let mut recs = vec![Record::new(&inst, "bw_closed = bw_recursion", bw_closed(t, n), bw_recursion(t, n))];
        if t < n {
            let values: Vec<Radius> = (0..=n - t).map(|k| diagonal_distance(t, n, k, t)).collect();
            let top = values.iter().max().unwrap();
            recs.push(Record::new(&inst, "diagonal maximum at k=floor((n-t)/2)", &values[(n - t) / 2], top));
        }
        Ok(recs)
    })?;
    for n in 1..=n_max.max(30) {
        let sum: BigInt = (0..n as i64).map(|m| binom_ext(m, m / 2)).sum();
        out.push(Record::new(format!("(t=1,n={n})"), "bw_closed = central binomial sum", bw_closed(1, n), sum));
    }
    Ok(out)
}

fn hales(cfg: &SuiteConfig) -> CliResult<Vec<Record>> {
    let (t_max, n_max) = (cfg.t.unwrap_or(3), cfg.n.unwrap_or(4));
    let grid: Vec<(usize, usize)> = (1..=t_max).flat_map(|t| (1..=n_max).map(move |n| (t, n))).collect();
    sweep(&grid, |&(t, n)| {
        let inst = hamming_name(t, n);
        let g = gen_hamming(t, 2, n)?;
        let report = verify_hales_property(&g, &Ordering::identity(g.vertex_count()), n_max.max(20))?;
        let profile = b_v_profile(&g)?;
        let top = *profile.iter().max().unwrap();
        let pw = exact_pathwidth_capped(&g, cfg.pw_cap())?.width;
        let mut harper_violations = 0;
        for m in 1..=g.vertex_count() {
            let h = harper_lower_bound(t, 2, n, m as u64)?;
            if h.floor as usize > profile[m] {
                harper_violations += 1;
            }
        }
        Ok(vec![
            Record::relation(&inst, "hales property", format!("{report:?}"), "Ok", report.is_ok()),
            Record::new(&inst, "max b_v = bw_closed", top, bw_closed(t, n)),
            Record::relation(&inst, "max b_v <= pathwidth", top, pw, top <= pw),
            Record::new(&inst, "harper floor above b_v (count)", harper_violations, 0),
        ])
    })
}

fn edge_list(g: &Graph, edges: &[(usize, usize)]) -> String {
    let names: Vec<String> = edges.iter().map(|&(a, b)| format!("{}{}", g.label(a), g.label(b))).collect();
    format!("{{{}}}", names.join(","))
}

fn petersen(cfg: &SuiteConfig) -> CliResult<Vec<Record>> {
    let (k_max, n_max) = (cfg.k.unwrap_or(5), cfg.n.unwrap_or(200));
    let modes = match cfg.mode {
        Some(m) => vec![m],
        None => vec![PetersenMode::Verbatim, PetersenMode::Repaired],
    };
    let grid: Vec<(usize, usize)> = (1..=k_max).flat_map(|k| (2 * k + 1..=n_max).map(move |n| (n, k))).collect();
    sweep(&grid, |&(n, k)| {
        let inst = format!("G({n},{k})");
        let g = gen_petersen(n, k)?;
        let mut out = Vec::new();
        for &mode in &modes {
            let report = validate_decomposition(&g, &petersen_pd(n, k, mode)?)?;
            let width = report.width_if_ok().map_or("invalid".to_string(), |w| w.to_string());
            if mode == PetersenMode::Verbatim && k >= 2 {
                let mut gap: Vec<_> = (k + 1..2 * k).map(|j| (petersen_outer(n, j), petersen_inner(n, j))).collect();
                gap.sort_unstable();
                let mut rec = Record::new(&inst, "verbatim uncovered edges", edge_list(&g, &report.uncovered_edges), "{}");
                rec.known = report.uncovered_edges == gap
                    && report.missing_vertices.is_empty()
                    && report.disconnected_vertices.is_empty();
                out.push(rec);
            } else {
                out.push(Record::new(&inst, &format!("{mode} width"), width, 2 * k + 2));
            }
        }
        Ok(out)
    })
}

fn bramble(cfg: &SuiteConfig) -> CliResult<Vec<Record>> {
    let (k_max, n_max) = (cfg.k.unwrap_or(4), cfg.n.unwrap_or(500));
    let grid: Vec<(usize, usize)> = (1..=k_max).flat_map(|k| (2 * k + 2..=n_max).map(move |n| (n, k))).collect();
    let mut out = sweep(&grid, |&(n, k)| {
        let g = gen_petersen(n, k)?;
        let report = validate_bramble(&g, &petersen_bramble(n, k)?)?;
        let detail = match &report {
            BrambleReport::Ok => "Ok".to_string(),
            BrambleReport::NotConnected { set } => format!("set {} not connected", set + 1),
            BrambleReport::NotTouching { first, second } => format!("sets {} and {} do not touch", first + 1, second + 1),
        };
        Ok(vec![Record::new(format!("G({n},{k})"), "bramble valid", detail, "Ok")])
    })?;
    for (n, k, want) in [(288, 1, 4), (800, 2, 6)] {
        if k <= k_max {
            out.push(Record::new(format!("G({n},{k})"), "order lower bound", petersen_order_lower_bound(n, k)?, want));
        }
    }
    let g = gen_petersen(5, 2)?;
    let b = petersen_bramble(5, 2)?;
    let tau = exact_transversal(&b.hypergraph(&g)?)?.0;
    let tw = exact_treewidth_capped(&g, cfg.tw_cap())?.width;
    out.push(Record::new("G(5,2)", "bramble transversal", tau, 3));
    out.push(Record::new("G(5,2)", "treewidth", tw, 4));
    out.push(Record::relation("G(5,2)", "transversal - 1 <= treewidth", tau - 1, tw, tau <= tw + 1));
    Ok(out)
}

fn kneser(cfg: &SuiteConfig) -> CliResult<Vec<Record>> {
    let mut out = Vec::new();
    let j = gen_johnson(5, 2)?;
    let bk = gen_bipartite_kneser(5, 2)?;
    let tw_j = exact_treewidth_capped(&j, cfg.tw_cap())?;
    let tw_bk = exact_treewidth_capped(&bk, cfg.tw_cap())?.width;
    let h = fillin_chordal(&j, &tw_j.order)?;
    let prime = bk_prime(5, 2, &h)?;
    match is_chordal(&prime) {
        Chordality::Yes { peo } => {
            let omega = chordal_clique_number(&prime, &peo)?;
            out.push(Record::relation("BK'(5,2)", "chordal", "yes", "yes", true));
            out.push(Record::relation("BK'(5,2)", "omega - 1 >= tw(BK(5,2))", omega - 1, tw_bk, omega > tw_bk));
        }
        Chordality::No { cycle } => out.push(Record::relation("BK'(5,2)", "chordal", format!("cycle {cycle:?}"), "yes", false)),
    }
    out.push(Record::relation("(5,2)", "tw(BK) <= tw(J)", tw_bk, tw_j.width, tw_bk <= tw_j.width));
    let deg = degree_lower_bound(&j);
    out.push(Record::relation("J(5,2)", "degree bound <= tw", deg, tw_j.width, deg <= tw_j.width));
    let lb = bk_spectral_lb(2)?;
    out.push(Record::relation("BK(5,2)", "spectral bound <= tw", &lb, tw_bk, lb <= BigInt::from(tw_bk)));
    let slice = johnson_slice_bandwidth(5, 2)?;
    out.push(Record::relation("J(5,2)", "tw <= slice bandwidth", tw_j.width, &slice, slice >= BigInt::from(tw_j.width)));
    for (n, k) in [(5, 2), (7, 3), (12, 2)] {
        let m = bipartite_perfect_matching(&gen_bipartite_kneser(n, k)?)?;
        out.push(Record::new(format!("BK({n},{k})"), "perfect matching", if m.is_some() { "yes" } else { "no" }, "yes"));
    }
    let g = gen_bipartite_kneser(12, 2)?;
    let left: Vec<usize> = (0..66).collect();
    let report = validate_decomposition(&g, &independent_set_td(&g, &left)?)?;
    out.push(Record::new(
        "BK(12,2)",
        "star decomposition width",
        report.width_if_ok().map_or("invalid".to_string(), |w| w.to_string()),
        66,
    ));
    for n in 4..=7 {
        let want = binom_ext(n as i64, 2) - binom_ext(n as i64 - 2, 2) + 1;
        out.push(Record::new(format!("(n={n},k=2)"), "max cross-intersecting sum", max_cross_intersecting_sum(n, 2)?, want));
    }
    Ok(out)
}

fn spectrum(cfg: &SuiteConfig) -> CliResult<Vec<Record>> {
    let ks: Vec<usize> = (1..=cfg.k.unwrap_or(3)).collect();
    sweep(&ks, |&k| {
        let inst = format!("BK({},{k})", 2 * k + 1);
        let g = gen_bipartite_kneser(2 * k + 1, k)?;
        let report = verify_spectrum_moments(&g, &bk_spectrum(k)?, 2 * (k as u32 + 1))?;
        let failure = report.first_failure().map_or("none".to_string(), |p| format!("p={p}"));
        let mut out = vec![Record::new(&inst, "first moment mismatch", failure, "none")];
        if report.is_ok() {
            let composed = spectral_lower_bound(&g, &report.into_verified()?)?;
            out.push(Record::new(&inst, "spectral bound = closed form", composed, bk_spectral_lb(k)?));
        }
        Ok(out)
    })
}

fn limit(cfg: &SuiteConfig) -> CliResult<Vec<Record>> {
    let k_max = cfg.k.unwrap_or(16);
    let (lo, hi) = (BigRational::new(2.into(), 5.into()), BigRational::new(3.into(), 5.into()));
    let half = BigRational::new(1.into(), 2.into());
    let mut out = Vec::new();
    let mut prev: Option<BigRational> = None;
    for k in 8..=k_max {
        let inst = format!("k={k}");
        let r = johnson_slice_ratio(k)?;
        out.push(Record::relation(&inst, "ratio in [2/5, 3/5]", &r, "[2/5, 3/5]", r >= lo && r <= hi));
        let d = if r > half { &r - &half } else { &half - &r };
        if let Some(p) = &prev {
            out.push(Record::relation(&inst, "distance to 1/2 non-increasing", &d, p, &d <= p));
        }
        prev = Some(d);
    }
    Ok(out)
}

fn known_spectrum(name: &str) -> CliResult<Option<Spectrum>> {
    let pairs = match name {
        "K4" => vec![(3, 1), (-1, 3)],
        "C4" => vec![(2, 1), (0, 2), (-2, 1)],
        "Q3" => vec![(3, 1), (1, 3), (-1, 3), (-3, 1)],
        "G(5,2)" => vec![(3, 1), (1, 5), (-2, 4)],
        "BK(5,2)" => return Ok(Some(bk_spectrum(2)?)),
        _ => return Ok(None),
    };
    Ok(Some(Spectrum { pairs }))
}

/// Every small instance used by the other suites.
pub fn oracle_instances() -> CliResult<Vec<(String, Graph)>> {
    let mut out = vec![
        ("P5".to_string(), Graph::path(5)),
        ("C4".to_string(), Graph::cycle(4)),
        ("C5".to_string(), Graph::cycle(5)),
        ("K4".to_string(), Graph::complete(4)),
        ("Q3".to_string(), gen_hamming(1, 2, 3)?),
    ];
    for (t, n) in [(2, 3), (1, 4), (2, 4), (3, 4)] {
        out.push((hamming_name(t, n), gen_hamming(t, 2, n)?));
    }
    for q in [3, 4] {
        out.push((format!("H(1,{q},2)"), gen_hamming(1, q, 2)?));
    }
    for (n, k) in [(5, 2), (6, 2)] {
        out.push((format!("J({n},{k})"), gen_johnson(n, k)?));
    }
    out.push(("BK(5,2)".to_string(), gen_bipartite_kneser(5, 2)?));
    for (n, k) in [(5, 1), (5, 2), (6, 1), (6, 2), (7, 2), (7, 3), (8, 3), (10, 4), (12, 5)] {
        out.push((format!("G({n},{k})"), gen_petersen(n, k)?));
    }
    Ok(out)
}

fn oracles(cfg: &SuiteConfig) -> CliResult<Vec<Record>> {
    let instances: Vec<(String, Graph)> =
        oracle_instances()?.into_iter().filter(|(_, g)| g.vertex_count() <= cfg.tw_cap().min(cfg.pw_cap())).collect();
    sweep(&instances, |(name, g)| {
        let tw = exact_treewidth_capped(g, cfg.tw_cap())?.width;
        let pw = exact_pathwidth_capped(g, cfg.pw_cap())?.width;
        let mut out = vec![Record::relation(name, "tw <= pw", tw, pw, tw <= pw)];
        if g.vertex_count() <= cfg.bw_cap() {
            let bw = exact_bandwidth_capped(g, cfg.bw_cap())?.width;
            out.push(Record::relation(name, "pw <= bw", pw, bw, pw <= bw));
        }
        let deg = degree_lower_bound(g);
        out.push(Record::relation(name, "min degree <= tw", deg, tw, deg <= tw));
        if g.vertex_count() <= SEPARATOR_CAP {
            let sep = min_balanced_separator(g, tw + 1)?;
            let size = sep.as_ref().map_or("none".to_string(), |s| s.x.len().to_string());
            out.push(Record::relation(name, "balanced separator <= tw + 1", size, tw + 1, sep.is_some()));
        }
        if let Some(s) = known_spectrum(name)? {
            let report = verify_spectrum_moments(g, &s, 2 * (g.max_degree() as u32 + 1))?;
            let lb = spectral_lower_bound(g, &report.into_verified()?)?;
            out.push(Record::relation(name, "spectral bound <= tw", &lb, tw, lb <= BigInt::from(tw)));
        }
        if let Some(spec) = g.family().filter(|f| f.family == FamilyKind::Petersen) {
            let b = petersen_bramble(spec.n, spec.k)?;
            if validate_bramble(g, &b)?.is_ok() {
                let h = b.hypergraph(g)?;
                let tau = exact_transversal(&h)?.0;
                out.push(Record::relation(name, "bramble order <= tw + 1", tau, tw + 1, tau <= tw + 1));
                let frac = transversal_fraction_bound(&h)?;
                let holds = frac <= BigRational::from_integer(BigInt::from(tau));
                out.push(Record::relation(name, "edge/degree bound <= transversal", &frac, tau, holds));
            }
        }
        Ok(out)
    })
}
