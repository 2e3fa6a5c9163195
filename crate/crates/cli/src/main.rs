use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use widthlab::bounds::{
    bk_spectral_lb, bk_spectrum, petersen_bramble, petersen_bramble_span, petersen_order_lower_bound, spectral_lower_bound,
    validate_bramble, verify_spectrum_moments,
};
use widthlab::decomp::{petersen_pd, validate_decomposition, PetersenMode};
use widthlab::graphs::gen_hamming;
use widthlab::hales::{hales_order, vector_string, verify_hales_property, Ordering};
use widthlab::oracles::{
    b_v_profile, exact_bandwidth_capped, exact_pathwidth_capped, exact_treewidth_capped, min_balanced_separator,
    BANDWIDTH_CAP, PATHWIDTH_CAP, SEPARATOR_CAP, TREEWIDTH_CAP,
};
use widthlab::pace::{read_gr, read_td_checked, write_gr, write_td};
use widthlab::widthcalc::{
    assemble_full, bw_closed, bw_recursion, matrix_bandwidth, radius_closed, radius_direct, radius_recursive, ParamTuple,
    FULL_MATRIX_CAP,
};
use widthlab::{FamilyKind, FamilySpec, Graph};
use widthlab_cli::report::emit;
use widthlab_cli::{emit_table, run_suite, CliError, CliResult, Format, Formula, Grid, Report, Suite, SuiteConfig, Table};

#[derive(Parser)]
#[command(name = "widthlab", version, about = "Width parameters of Hamming, Johnson, Kneser and Petersen graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Params {
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args, Clone)]
struct Output {
    /// text, csv or json
    #[arg(long, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family graph as a PACE .gr file.
    Gen {
        #[arg(value_parser = parse_family)]
        family: FamilyKind,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Hales numbering of the n-cube and check it on H(t,2,n).
    Hales {
        #[command(flatten)]
        params: Params,
        /// Largest cube dimension to check exhaustively.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Bandwidth of H(t,2,n) from the closed form, the recursion and the matrix.
    Bw {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        output: Output,
    },
    /// Manhattan radius of one block, three ways.
    Radius {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        s: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Build or check a path decomposition of G(n,k).
    Decomp {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value = "repaired")]
        mode: PetersenMode,
        /// Check this .td file against --graph instead of building one.
        #[arg(long, requires = "graph")]
        td: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Validate the Petersen bramble and report its order bound.
    Bramble {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        output: Output,
    },
    /// Certify the middle-levels spectrum and the spectral treewidth bound.
    Spectrum {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        output: Output,
    },
    /// Run an exact oracle on a family graph or a .gr file.
    Oracle {
        /// treewidth, pathwidth, bandwidth, bv or separator
        which: String,
        #[arg(long, value_parser = parse_family)]
        family: Option<FamilyKind>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Run a named verification suite.
    Suite {
        name: Suite,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        mode: Option<PetersenMode>,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Tabulate a formula over a grid.
    Table {
        formula: Formula,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        output: Output,
    },
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    match s {
        "hamming" => Ok(FamilyKind::Hamming),
        "johnson" => Ok(FamilyKind::Johnson),
        "bipartite_kneser" | "kneser" => Ok(FamilyKind::BipartiteKneser),
        "petersen" => Ok(FamilyKind::Petersen),
        _ => Err(format!("unknown family `{s}` (expected hamming, johnson, bipartite_kneser or petersen)")),
    }
}

fn need(v: Option<usize>, flag: &str) -> CliResult<usize> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required")))
}

fn family_graph(family: FamilyKind, p: &Params) -> CliResult<Graph> {
    let spec = match family {
        FamilyKind::Hamming => FamilySpec::hamming(p.t.unwrap_or(1), p.q.unwrap_or(2), need(p.n, "n")?),
        FamilyKind::Johnson => FamilySpec::johnson(need(p.n, "n")?, need(p.k, "k")?),
        FamilyKind::BipartiteKneser => FamilySpec::bipartite_kneser(need(p.n, "n")?, need(p.k, "k")?),
        FamilyKind::Petersen => FamilySpec::petersen(need(p.n, "n")?, need(p.k, "k")?),
    };
    Ok(spec.generate()?)
}

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(CliError::Io)
}

fn pairs(items: Vec<(&'static str, String)>) -> Table {
    let (columns, row): (Vec<_>, Vec<_>) = items.into_iter().unzip();
    Table { columns, rows: vec![row] }
}

fn show(table: &Table, output: &Output) -> CliResult<()> {
    emit(&table.render(output.format)?, output.out.as_deref())
}

/// Runs one command; `Ok(false)` means a check ran and failed.
fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Gen { family, params, out } => {
            let g = family_graph(family, &params)?;
            emit(&write_gr(&g), out.as_deref())?;
            Ok(true)
        }
        Command::Hales { params, cap, output } => {
            let n = need(params.n, "n")?;
            let order = hales_order(n)?;
            let mut rows = Vec::new();
            for (i, &v) in order.sequence().iter().enumerate() {
                rows.push(vec![(i + 1).to_string(), vector_string(v as u64, n)]);
            }
            let mut table = Table { columns: vec!["rank", "vector"], rows };
            let mut ok = true;
            if let Some(t) = params.t {
                // Vertex i of H(t,2,n) is already the i-th vector of the numbering.
                let g = gen_hamming(t, 2, n)?;
                let order = Ordering::identity(g.vertex_count());
                let report = verify_hales_property(&g, &order, cap.unwrap_or(20))?;
                ok = report.is_ok();
                table = pairs(vec![
                    ("graph", format!("H({t},2,{n})")),
                    ("report", format!("{report:?}")),
                    ("ordering_bandwidth", order.bandwidth(&g).to_string()),
                    ("bw_closed", bw_closed(t, n).to_string()),
                ]);
            }
            show(&table, &output)?;
            Ok(ok)
        }
        Command::Bw { params, output } => {
            let (t, n) = (need(params.t, "t")?, need(params.n, "n")?);
            let closed = bw_closed(t, n);
            let recursion = bw_recursion(t, n);
            let matrix = if n <= FULL_MATRIX_CAP {
                matrix_bandwidth(&assemble_full(t, n)?)?.to_string()
            } else {
                "skipped".to_string()
            };
            let ok = closed == recursion && (matrix == "skipped" || matrix == closed.to_string());
            let table = pairs(vec![
                ("t", t.to_string()),
                ("n", n.to_string()),
                ("closed", closed.to_string()),
                ("recursion", recursion.to_string()),
                ("matrix", matrix),
            ]);
            show(&table, &output)?;
            Ok(ok)
        }
        Command::Radius { params, s, output } => {
            let (t, n, k) = (need(params.t, "t")?, need(params.n, "n")?, need(params.k, "k")?);
            let mut rows = Vec::new();
            let mut ok = true;
            for s in s.map_or(0..=t / 2, |s| s..=s) {
                let p = ParamTuple { t, n, k, s };
                let closed = radius_closed(t, n, k, s)?;
                let rec = radius_recursive(t, n, k, p.offset());
                let direct = radius_direct(t, n, k, s)?;
                ok &= closed == rec && rec == direct;
                rows.push(vec![s.to_string(), closed.to_string(), rec.to_string(), direct.to_string()]);
            }
            show(&Table { columns: vec!["s", "closed", "recursive", "direct"], rows }, &output)?;
            Ok(ok)
        }
        Command::Decomp { params, mode, td, graph, output } => {
            if let (Some(td), Some(graph)) = (td, graph) {
                let g = read_gr(&read_file(&graph)?)?;
                let (_, report) = read_td_checked(&read_file(&td)?, &g)?;
                let table = pairs(vec![
                    ("valid", report.is_ok().to_string()),
                    ("width", report.width.to_string()),
                    ("missing_vertices", report.missing_vertices.len().to_string()),
                    ("uncovered_edges", report.uncovered_edges.len().to_string()),
                    ("disconnected_vertices", report.disconnected_vertices.len().to_string()),
                ]);
                show(&table, &output)?;
                return Ok(report.is_ok());
            }
            let (n, k) = (need(params.n, "n")?, need(params.k, "k")?);
            let d = petersen_pd(n, k, mode)?;
            let g = widthlab::graphs::gen_petersen(n, k)?;
            let report = validate_decomposition(&g, &d)?;
            if output.out.is_some() {
                emit(&write_td(&d, g.vertex_count()), output.out.as_deref())?;
            } else {
                let uncovered: Vec<String> =
                    report.uncovered_edges.iter().map(|&(a, b)| format!("{}{}", g.label(a), g.label(b))).collect();
                let table = pairs(vec![
                    ("graph", format!("G({n},{k})")),
                    ("mode", mode.to_string()),
                    ("bags", d.bags().len().to_string()),
                    ("width", d.width().to_string()),
                    ("valid", report.is_ok().to_string()),
                    ("uncovered", uncovered.join(" ")),
                ]);
                show(&table, &Output { out: None, ..output })?;
            }
            Ok(report.is_ok())
        }
        Command::Bramble { params, output } => {
            let (n, k) = (need(params.n, "n")?, need(params.k, "k")?);
            let g = widthlab::graphs::gen_petersen(n, k)?;
            let report = validate_bramble(&g, &petersen_bramble(n, k)?)?;
            let bound = match petersen_order_lower_bound(n, k) {
                Ok(v) => v.to_string(),
                Err(e) => format!("n/a ({e})"),
            };
            let table = pairs(vec![
                ("graph", format!("G({n},{k})")),
                ("span", petersen_bramble_span(n, k).to_string()),
                ("report", format!("{report:?}")),
                ("order_bound", bound),
            ]);
            show(&table, &output)?;
            Ok(report.is_ok())
        }
        Command::Spectrum { params, output } => {
            let k = need(params.k, "k")?;
            let g = widthlab::graphs::gen_bipartite_kneser(2 * k + 1, k)?;
            let spectrum = bk_spectrum(k)?;
            let report = verify_spectrum_moments(&g, &spectrum, 2 * (k as u32 + 1))?;
            let ok = report.is_ok();
            let failure = report.first_failure().map_or("none".to_string(), |p| p.to_string());
            let composed = if ok { spectral_lower_bound(&g, &report.into_verified()?)?.to_string() } else { "n/a".into() };
            let values: Vec<String> = spectrum.pairs.iter().map(|(v, m)| format!("{v}^{m}")).collect();
            let table = pairs(vec![
                ("graph", format!("BK({},{k})", 2 * k + 1)),
                ("spectrum", values.join(" ")),
                ("first_mismatch", failure),
                ("spectral_bound", composed),
                ("closed_form", bk_spectral_lb(k)?.to_string()),
            ]);
            show(&table, &output)?;
            Ok(ok)
        }
        Command::Oracle { which, family, graph, params, cap, output } => {
            let g = match (family, graph) {
                (_, Some(path)) => read_gr(&read_file(&path)?)?,
                (Some(f), None) => family_graph(f, &params)?,
                (None, None) => return Err(CliError::Usage("give --family or --graph".into())),
            };
            let value = match which.as_str() {
                "treewidth" => exact_treewidth_capped(&g, cap.unwrap_or(TREEWIDTH_CAP))?.width.to_string(),
                "pathwidth" => exact_pathwidth_capped(&g, cap.unwrap_or(PATHWIDTH_CAP))?.width.to_string(),
                "bandwidth" => exact_bandwidth_capped(&g, cap.unwrap_or(BANDWIDTH_CAP))?.width.to_string(),
                "bv" => {
                    let p = b_v_profile(&g)?;
                    p.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
                }
                "separator" => {
                    let cap = cap.unwrap_or(SEPARATOR_CAP);
                    if g.vertex_count() > cap {
                        return Err(widthlab::Error::SizeCap { what: "separator graph", actual: g.vertex_count(), cap }.into());
                    }
                    match min_balanced_separator(&g, g.vertex_count())? {
                        Some(s) => s.x.len().to_string(),
                        None => "none".to_string(),
                    }
                }
                other => return Err(CliError::Usage(format!("unknown oracle `{other}`"))),
            };
            show(&pairs(vec![("vertices", g.vertex_count().to_string()), (oracle_column(&which), value)]), &output)?;
            Ok(true)
        }
        Command::Suite { name, params, mode, cap, workers, output } => {
            let cfg = SuiteConfig { t: params.t, n: params.n, k: params.k, mode, cap, workers };
            let report = Report::new(name.name(), run_suite(name, &cfg)?);
            emit(&report.render(output.format)?, output.out.as_deref())?;
            let failures = report.failures();
            eprintln!("{name}: {} records, {failures} failed, {} known", report.records.len(), report.known());
            Ok(failures == 0)
        }
        Command::Table { formula, params, output } => {
            let table = emit_table(formula, Grid { t: params.t, n: params.n, k: params.k })?;
            show(&table, &output)?;
            Ok(true)
        }
    }
}

fn oracle_column(s: &str) -> &'static str {
    match s {
        "treewidth" => "treewidth",
        "pathwidth" => "pathwidth",
        "bandwidth" => "bandwidth",
        "bv" => "bv_profile",
        _ => "separator",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
