//! Formula tables over a parameter grid, in a fixed row order.

use std::fmt;
use std::str::FromStr;

use widthlab::bounds::{bk_spectral_lb, petersen_bramble_span};
use widthlab::decomp::{petersen_pd, validate_decomposition, PetersenMode};
use widthlab::graphs::gen_petersen;
use widthlab::widthcalc::{
    binom_ext, bw_closed, johnson_slice_bandwidth, johnson_slice_ratio, radius_closed, rational_to_f64, ParamTuple,
};

use crate::{CliResult, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    BwClosed,
    RadiusClosed,
    BkSpectralLb,
    JohnsonSliceBandwidth,
    PetersenBounds,
}

impl Formula {
    pub const ALL: [Formula; 5] = [
        Formula::BwClosed,
        Formula::RadiusClosed,
        Formula::BkSpectralLb,
        Formula::JohnsonSliceBandwidth,
        Formula::PetersenBounds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::BwClosed => "bw_closed",
            Formula::RadiusClosed => "radius_closed",
            Formula::BkSpectralLb => "bk_spectral_lb",
            Formula::JohnsonSliceBandwidth => "johnson_slice_bandwidth",
            Formula::PetersenBounds => "petersen_bounds",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Formula::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<_> = Formula::ALL.iter().map(|x| x.name()).collect();
            format!("unknown formula `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// Upper ends of the grid; `None` picks the formula's default.
#[derive(Debug, Clone, Copy, Default)]
pub struct Grid {
    pub t: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
}

pub fn emit_table(formula: Formula, grid: Grid) -> CliResult<Table> {
    match formula {
        Formula::BwClosed => {
            let (t_max, n_max) = (grid.t.unwrap_or(3), grid.n.unwrap_or(10));
            let mut rows = Vec::new();
            for t in 1..=t_max {
                for n in t + 1..=n_max {
                    rows.push(vec![t.to_string(), n.to_string(), bw_closed(t, n).to_string()]);
                }
            }
            Ok(Table { columns: vec!["t", "n", "bw"], rows })
        }
        Formula::RadiusClosed => {
            let mut rows = Vec::new();
            for p in ParamTuple::all(grid.n.unwrap_or(10)) {
                if grid.t.is_some_and(|t| p.t > t) {
                    continue;
                }
                let r = radius_closed(p.t, p.n, p.k, p.s)?;
                rows.push(vec![p.t.to_string(), p.n.to_string(), p.k.to_string(), p.s.to_string(), r.to_string()]);
            }
            Ok(Table { columns: vec!["t", "n", "k", "s", "radius"], rows })
        }
        Formula::BkSpectralLb => {
            let rows = (1..=grid.k.unwrap_or(10))
                .map(|k| Ok(vec![k.to_string(), binom_ext(2 * k as i64 + 1, k as i64).to_string(), bk_spectral_lb(k)?.to_string()]))
                .collect::<CliResult<_>>()?;
            Ok(Table { columns: vec!["k", "vertices_per_side", "lower_bound"], rows })
        }
        Formula::JohnsonSliceBandwidth => {
            let rows = (1..=grid.k.unwrap_or(12))
                .map(|k| {
                    let ratio = johnson_slice_ratio(k)?;
                    Ok(vec![
                        k.to_string(),
                        (2 * k + 1).to_string(),
                        johnson_slice_bandwidth(2 * k + 1, k)?.to_string(),
                        binom_ext(2 * k as i64 + 1, k as i64).to_string(),
                        ratio.to_string(),
                        format!("{:.6}", rational_to_f64(&ratio)),
                    ])
                })
                .collect::<CliResult<_>>()?;
            Ok(Table { columns: vec!["k", "n", "bandwidth", "binomial", "ratio", "ratio_approx"], rows })
        }
        Formula::PetersenBounds => {
            let (k_max, n_max) = (grid.k.unwrap_or(3), grid.n.unwrap_or(40));
            let mut rows = Vec::new();
            for k in 1..=k_max {
                for n in 2 * k + 2..=n_max {
                    let t = petersen_bramble_span(n, k);
                    let report = validate_decomposition(&gen_petersen(n, k)?, &petersen_pd(n, k, PetersenMode::Repaired)?)?;
                    let width = report.width_if_ok().map_or("invalid".to_string(), |w| w.to_string());
                    rows.push(vec![
                        n.to_string(),
                        k.to_string(),
                        (2 * k + 1).to_string(),
                        n.div_ceil(t + 1).to_string(),
                        width,
                    ]);
                }
            }
            Ok(Table { columns: vec!["n", "k", "tw_lower", "bramble_order", "construction_width"], rows })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in Formula::ALL {
            assert_eq!(f.name().parse::<Formula>(), Ok(f));
        }
        assert!("bw".parse::<Formula>().is_err());
    }

    #[test]
    fn radius_table_respects_t() {
        let full = emit_table(Formula::RadiusClosed, Grid { n: Some(4), ..Grid::default() }).unwrap();
        let small = emit_table(Formula::RadiusClosed, Grid { t: Some(1), n: Some(4), k: None }).unwrap();
        assert!(small.rows.len() < full.rows.len());
        assert!(small.rows.iter().all(|r| r[0] == "1"));
    }

    #[test]
    fn spectral_table() {
        let t = emit_table(Formula::BkSpectralLb, Grid { k: Some(3), ..Grid::default() }).unwrap();
        let lbs: Vec<&str> = t.rows.iter().map(|r| r[2].as_str()).collect();
        assert_eq!(lbs, ["0", "2", "7"]);
    }
}
