//! PACE text formats: `.gr` for graphs and `.td` for tree decompositions.
//!
//! Vertex numbers in files are 1-based. Graph files written here carry the
//! vertex labels and family parameters as comment lines
//! (`c label <v> <kind> <value>`, `c family <kind> <t> <q> <n> <k>`) so that a
//! round trip restores the labelled graph; other readers simply skip them.

use std::fmt::Write as _;

use crate::decomp::{validate_decomposition, Decomposition, ValidationReport};
use crate::error::{Error, Result};
use crate::graphs::{FamilyKind, FamilySpec, Graph, Label};

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

fn label_text(l: Label) -> String {
    match l {
        Label::Word(w) => format!("word {w}"),
        Label::Subset(m) => format!("subset {m}"),
        Label::Outer(i) => format!("outer {i}"),
        Label::Inner(i) => format!("inner {i}"),
        Label::Plain(i) => format!("plain {i}"),
    }
}

fn family_name(f: FamilyKind) -> &'static str {
    match f {
        FamilyKind::Hamming => "hamming",
        FamilyKind::Johnson => "johnson",
        FamilyKind::BipartiteKneser => "bipartite_kneser",
        FamilyKind::Petersen => "petersen",
    }
}

pub fn write_gr(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(f) = g.family() {
        let _ = writeln!(out, "c family {} {} {} {} {}", family_name(f.family), f.t, f.q, f.n, f.k);
    }
    for (v, &l) in g.labels().iter().enumerate() {
        if l != Label::Plain(v) {
            let _ = writeln!(out, "c label {} {}", v + 1, label_text(l));
        }
    }
    let _ = writeln!(out, "p tw {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    match tok.map(str::parse) {
        Some(Ok(x)) => Ok(x),
        _ => parse_err(line, format!("expected {what}")),
    }
}

pub fn read_gr(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, Label, usize)> = Vec::new();
    let mut family = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None => continue,
            Some("c") => match toks.next() {
                Some("label") => {
                    let v: usize = parse_num(toks.next(), line, "vertex number")?;
                    let kind = toks.next();
                    let value: u64 = parse_num(toks.next(), line, "label value")?;
                    let l = match kind {
                        Some("word") => Label::Word(value),
                        Some("subset") => Label::Subset(value),
                        Some("outer") => Label::Outer(value as usize),
                        Some("inner") => Label::Inner(value as usize),
                        Some("plain") => Label::Plain(value as usize),
                        _ => return parse_err(line, "unknown label kind"),
                    };
                    labels.push((v, l, line));
                }
                Some("family") => {
                    let kind = match toks.next() {
                        Some("hamming") => FamilyKind::Hamming,
                        Some("johnson") => FamilyKind::Johnson,
                        Some("bipartite_kneser") => FamilyKind::BipartiteKneser,
                        Some("petersen") => FamilyKind::Petersen,
                        _ => return parse_err(line, "unknown family"),
                    };
                    let mut nums = [0usize; 4];
                    for x in &mut nums {
                        *x = parse_num(toks.next(), line, "family parameter")?;
                    }
                    family = Some(FamilySpec { family: kind, t: nums[0], q: nums[1], n: nums[2], k: nums[3] });
                }
                _ => {}
            },
            Some("p") => {
                if header.is_some() {
                    return parse_err(line, "second problem line");
                }
                if toks.next() != Some("tw") {
                    return parse_err(line, "expected `p tw <n> <m>`");
                }
                let n = parse_num(toks.next(), line, "vertex count")?;
                let m = parse_num(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return parse_err(line, "trailing tokens in problem line");
                }
                header = Some((n, m));
            }
            Some(first) => {
                let Some((n, _)) = header else { return parse_err(line, "edge before the problem line") };
                let u: usize = parse_num(Some(first), line, "edge endpoint")?;
                let v: usize = parse_num(toks.next(), line, "edge endpoint")?;
                if toks.next().is_some() {
                    return parse_err(line, "trailing tokens in edge line");
                }
                if u < 1 || v < 1 || u > n || v > n || u == v {
                    return parse_err(line, format!("invalid edge {u} {v}"));
                }
                edges.push((u - 1, v - 1));
            }
        }
    }
    let Some((n, m)) = header else { return parse_err(1, "missing problem line") };
    if edges.len() != m {
        return parse_err(text.lines().count().max(1), format!("header announces {m} edges, found {}", edges.len()));
    }
    let mut vertex_labels: Vec<Label> = (0..n).map(Label::Plain).collect();
    for (v, l, line) in labels {
        if v < 1 || v > n {
            return parse_err(line, format!("label for vertex {v} out of range"));
        }
        vertex_labels[v - 1] = l;
    }
    Graph::from_labelled_edges(vertex_labels, edges, family)
}

pub fn write_td(d: &Decomposition, vertex_count: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "s td {} {} {}", d.bags().len(), d.max_bag_size(), vertex_count);
    for (i, bag) in d.bags().iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in d.edges() {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

/// Parses a `.td` file. Returns the decomposition and the vertex count from
/// the header.
pub fn read_td(text: &str) -> Result<(Decomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("s") => {
                if header.is_some() {
                    return parse_err(line, "second solution line");
                }
                if toks.next() != Some("td") {
                    return parse_err(line, "expected `s td <bags> <max bag> <n>`");
                }
                let nb = parse_num(toks.next(), line, "bag count")?;
                let width = parse_num(toks.next(), line, "max bag size")?;
                let n = parse_num(toks.next(), line, "vertex count")?;
                header = Some((nb, width, n));
                bags = vec![None; nb];
            }
            Some("b") => {
                let Some((nb, _, n)) = header else { return parse_err(line, "bag before the solution line") };
                let i: usize = parse_num(toks.next(), line, "bag number")?;
                if i < 1 || i > nb || bags[i - 1].is_some() {
                    return parse_err(line, format!("bag number {i} out of range or repeated"));
                }
                let mut bag = Vec::new();
                for tok in toks {
                    let v: usize = parse_num(Some(tok), line, "vertex")?;
                    if v < 1 || v > n {
                        return parse_err(line, format!("vertex {v} out of range"));
                    }
                    bag.push(v - 1);
                }
                bags[i - 1] = Some(bag);
            }
            Some(first) => {
                let Some((nb, _, _)) = header else { return parse_err(line, "tree edge before the solution line") };
                let a: usize = parse_num(Some(first), line, "bag number")?;
                let b: usize = parse_num(toks.next(), line, "bag number")?;
                if a < 1 || b < 1 || a > nb || b > nb || toks.next().is_some() {
                    return parse_err(line, format!("invalid tree edge {a} {b}"));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let Some((_, max_bag, n)) = header else { return parse_err(1, "missing solution line") };
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::Parse { line: text.lines().count().max(1), message: format!("bag {} missing", i + 1) }))
        .collect::<Result<_>>()?;
    let d = Decomposition::new(bags, edges);
    if d.max_bag_size() != max_bag {
        return parse_err(1, format!("header announces max bag size {max_bag}, found {}", d.max_bag_size()));
    }
    Ok((d, n))
}

/// Reads a `.td` file and validates it against `g`.
pub fn read_td_checked(text: &str, g: &Graph) -> Result<(Decomposition, ValidationReport)> {
    let (d, n) = read_td(text)?;
    if n != g.vertex_count() {
        return parse_err(1, format!("decomposition is for {n} vertices, graph has {}", g.vertex_count()));
    }
    let report = validate_decomposition(g, &d)?;
    Ok((d, report))
}
