use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use radial_moore::bounds::{bounds_report, BoundsReport};
use radial_moore::canon::{automorphism_group_order, DEFAULT_AUT_BUDGET};
use radial_moore::gd::{build_gd, gd_automorphisms, verify_gd};
use radial_moore::graph::{
    check_structural_props, graph6, radius_diameter, status_vector, verify_radial_moore, Violation,
};
use radial_moore::recurrence::{central_bound_table, central_upper_bound, noncentral_lower_bound};
use radial_moore::roots::{cauchy_bound_check, cubic_roots, laguerre_interval, CubicRoots};
use radial_moore::search::{
    census, edge_swap_experiment, hoffman_singleton, rank_by_status, GraphSource,
};
use radial_moore::{Error, Graph};

#[derive(Parser)]
#[command(
    name = "radial-moore",
    version,
    about = "Bounds, constructions and searches for radial Moore graphs"
)]
struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true, env = "RADIAL_MOORE_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Graph6,
}

#[derive(Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct InputArg {
    /// graph6 file, one graph per line; `-` or absent reads stdin.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Gd,
    HoffmanSingleton,
}

#[derive(Subcommand)]
enum Command {
    /// Every closed-form bound for one (d, k).
    Bounds {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Grid of central-vertex upper bounds with Moore bounds in parentheses.
    Table {
        /// `4-7`, `4..7` or a single value.
        #[arg(long = "d-range", visible_alias = "d", default_value = "4-7", value_parser = parse_range)]
        d_range: RangeInclusive<u64>,
        #[arg(long = "k-range", visible_alias = "k", default_value = "3-7", value_parser = parse_range)]
        k_range: RangeInclusive<u64>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Emit G_d or the Hoffman-Singleton graph.
    Construct {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        d: Option<usize>,
        /// Check the construction before printing it.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Radial Moore checks for every graph in a graph6 stream.
    Verify {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Radial Moore census of all d-regular graphs of order M(d, k).
    Census {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Rank a graph6 stream by status.
    Rank {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Automorphism group order.
    Aut {
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[arg(long)]
        d: Option<usize>,
        #[command(flatten)]
        input: InputArg,
        /// Search-node budget.
        #[arg(long, default_value_t = DEFAULT_AUT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Roots of the cubic factor of the recurrence polynomial.
    Roots {
        #[arg(long)]
        d: u64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Try every two-edge swap of a graph.
    SwapSearch {
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// List every swap, not just the summary.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .or_else(|| s.split_once('-'))
    {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => (parse(s)?, parse(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

/// Exit status 1: a requested check failed. Exit status 2: bad input or
/// parameters outside the supported domain.
enum Failure {
    Check(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) | Error::NotRadialMoore { .. } | Error::Timeout { .. } => {
                Failure::Check(e.to_string())
            }
            Error::CensusNeedsStream { .. } => Failure::Usage(format!("{e} (use --input)")),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// What a subcommand printed and whether every check passed.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

type CmdResult = Result<Output, Failure>;

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_rows<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn unsupported(format: Format, cmd: &str) -> Failure {
    let name = format
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_owned();
    Failure::Usage(format!("{cmd} does not support --format {name}"))
}

/// Graphs tagged with their line numbers, and messages for lines that
/// failed to parse.
type ReadGraphs = (Vec<(usize, Graph)>, Vec<String>);

fn read_graphs(input: &InputArg) -> Result<ReadGraphs, Failure> {
    let reader: Box<dyn BufRead> = match input.input.as_deref() {
        None | Some("-") => Box::new(BufReader::new(io::stdin())),
        Some(path) => Box::new(BufReader::new(
            File::open(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?,
        )),
    };
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for (line, parsed) in graph6::read_stream(reader) {
        match parsed {
            Ok(g) => graphs.push((line, g)),
            Err(e) => errors.push(format!("line {line}: {e}")),
        }
    }
    Ok((graphs, errors))
}

fn report_parse_errors(errors: &[String]) {
    for e in errors {
        eprintln!("error: {e}");
    }
}

#[derive(Serialize)]
struct BoundsOut {
    #[serde(flatten)]
    report: BoundsReport,
    /// Only defined for d >= 4 and k >= 2.
    central_upper_bound: Option<String>,
    noncentral_lower_bound: Option<String>,
}

fn cmd_bounds(d: u64, k: u64, format: Format) -> CmdResult {
    let report = bounds_report(d, k)?;
    let recurrence = (d >= 4 && k >= 2).then(|| {
        Ok::<_, Error>((
            central_upper_bound(d, k)?.to_string(),
            noncentral_lower_bound(d, k)?.to_string(),
        ))
    });
    let (central, noncentral) = match recurrence.transpose()? {
        Some((c, n)) => (Some(c), Some(n)),
        None => (None, None),
    };
    let out = BoundsOut {
        report,
        central_upper_bound: central,
        noncentral_lower_bound: noncentral,
    };
    let text = match format {
        Format::Json => json(&out)?,
        Format::Csv => {
            let value = serde_json::to_value(&out)?;
            let map = value.as_object().expect("struct serializes to a map");
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(map.keys())?;
            w.write_record(map.values().map(|v| match v {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Null => String::new(),
                other => other.to_string(),
            }))?;
            String::from_utf8(w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?)
                .expect("utf-8")
        }
        Format::Text => {
            let r = &out.report;
            let mut s = String::new();
            writeln!(s, "d = {}, k = {}", r.d, r.k).unwrap();
            writeln!(s, "moore_bound: {}", r.moore_bound).unwrap();
            writeln!(s, "moore_status: {}", r.moore_status).unwrap();
            if let (Some(c), Some(n)) = (&out.central_upper_bound, &out.noncentral_lower_bound) {
                writeln!(s, "central_upper_bound: {c}").unwrap();
                writeln!(s, "noncentral_lower_bound: {n}").unwrap();
            }
            writeln!(s, "vertex_status_upper: {}", r.vertex_status_upper).unwrap();
            writeln!(
                s,
                "central_neighbor_status_upper: {}",
                r.central_neighbor_status_upper
            )
            .unwrap();
            let flag = if r.total_status_variants_differ {
                " (variants differ)"
            } else {
                ""
            };
            writeln!(
                s,
                "total_status_upper (ceiling): {}{flag}",
                r.total_status_upper_ceiling
            )
            .unwrap();
            writeln!(
                s,
                "total_status_upper (consistent): {}{flag}",
                r.total_status_upper_consistent
            )
            .unwrap();
            writeln!(s, "gamma2_lower: {}", r.gamma2_lower).unwrap();
            writeln!(
                s,
                "gamma2_lower (neighbor of central): {}",
                r.gamma2_lower_central_neighbor
            )
            .unwrap();
            writeln!(s, "min_attach: {}", r.min_attach).unwrap();
            s
        }
        Format::Graph6 => return Err(unsupported(format, "bounds")),
    };
    Ok(Output::ok(text))
}

fn cmd_table(ds: RangeInclusive<u64>, ks: RangeInclusive<u64>, format: Format) -> CmdResult {
    if *ds.start() < 4 {
        return Err(Failure::Usage(format!(
            "d = {} is outside the recurrence domain; the table needs d >= 4",
            ds.start()
        )));
    }
    let cells = central_bound_table(ds.clone(), ks)?;
    let text = match format {
        Format::Json => json(&cells)?,
        Format::Csv => csv_rows(&cells)?,
        Format::Text => {
            let rendered: Vec<String> = cells
                .iter()
                .map(|c| format!("{} ({})", c.bound, c.moore))
                .collect();
            let width = rendered.iter().map(String::len).max().unwrap_or(0);
            let mut s = format!("{:>4}", "k\\d");
            for d in ds.clone() {
                write!(s, "  {d:>width$}").unwrap();
            }
            s.push('\n');
            let cols = ds.count();
            for (row, chunk) in cells.chunks(cols).zip(rendered.chunks(cols)) {
                write!(s, "{:>4}", row[0].k).unwrap();
                for cell in chunk {
                    write!(s, "  {cell:>width$}").unwrap();
                }
                s.push('\n');
            }
            s
        }
        Format::Graph6 => return Err(unsupported(format, "table")),
    };
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct ConstructOut {
    family: &'static str,
    graph6: String,
    order: usize,
    edges: usize,
    status_vector: Option<String>,
    checks: Vec<String>,
}

fn cmd_construct(family: Family, d: Option<usize>, verify: bool, format: Format) -> CmdResult {
    let (name, graph) = match family {
        Family::Gd => {
            let d = d.ok_or_else(|| Failure::Usage("construct gd needs --d".into()))?;
            ("gd", build_gd(d)?.graph)
        }
        Family::HoffmanSingleton => ("hoffman-singleton", hoffman_singleton()),
    };
    let mut checks = Vec::new();
    let mut ok = true;
    let mut vector = None;
    if verify {
        match family {
            Family::Gd => match verify_gd(d.expect("checked above")) {
                Ok(r) => {
                    checks.push(format!(
                        "radial-moore d={} k=2, central vertices {:?}",
                        r.d, r.central_vertices
                    ));
                    vector = Some(r.status_vector.to_string());
                }
                Err(e) => {
                    ok = false;
                    checks.push(e.to_string());
                }
            },
            Family::HoffmanSingleton => {
                let sv = status_vector(&graph)?;
                let (r, diam) = radius_diameter(&graph)?;
                let pass = graph.order() == 50
                    && graph.regular_degree() == Some(7)
                    && (r, diam) == (2, 2)
                    && sv.entries == [(91, 50)]
                    && graph.girth() == Some(5);
                checks.push(format!(
                    "{} vertices, {}-regular, radius {r}, diameter {diam}, girth {}",
                    graph.order(),
                    graph
                        .regular_degree()
                        .map_or("not ".to_string(), |d| d.to_string()),
                    graph.girth().map_or("none".to_string(), |g| g.to_string())
                ));
                if !pass {
                    checks.push("not a Moore graph of degree 7 and diameter 2".into());
                }
                ok = pass;
                vector = Some(sv.to_string());
            }
        }
    }
    let out = ConstructOut {
        family: name,
        graph6: graph6::encode(&graph),
        order: graph.order(),
        edges: graph.edge_count(),
        status_vector: vector,
        checks,
    };
    let text = match format {
        Format::Json => json(&out)?,
        Format::Graph6 => {
            for c in &out.checks {
                eprintln!("{c}");
            }
            if let Some(v) = &out.status_vector {
                eprintln!("status vector {v}");
            }
            format!("{}\n", out.graph6)
        }
        Format::Text => {
            let mut s = format!("{}\n", out.graph6);
            for c in &out.checks {
                writeln!(s, "{c}").unwrap();
            }
            if let Some(v) = &out.status_vector {
                writeln!(s, "status vector {v}").unwrap();
            }
            s
        }
        Format::Csv => return Err(unsupported(format, "construct")),
    };
    Ok(Output { text, ok })
}

#[derive(Serialize)]
struct VerifyLine {
    line: usize,
    graph6: String,
    is_radial_moore: bool,
    central_count: usize,
    status_vector: Option<String>,
    failure: Option<String>,
    violations: Vec<Violation>,
}

#[derive(Serialize)]
struct VerifyOut {
    d: usize,
    k: usize,
    checked: usize,
    radial_moore: usize,
    parse_errors: Vec<String>,
    graphs: Vec<VerifyLine>,
}

fn cmd_verify(input: &InputArg, d: usize, k: usize, format: Format) -> CmdResult {
    let (graphs, errors) = read_graphs(input)?;
    report_parse_errors(&errors);
    let lines: Vec<VerifyLine> = graphs
        .iter()
        .map(|(line, g)| {
            let report = verify_radial_moore(g, d, k);
            let violations = if report.is_radial_moore {
                check_structural_props(g, k).unwrap_or_default()
            } else {
                Vec::new()
            };
            VerifyLine {
                line: *line,
                graph6: graph6::encode(g),
                is_radial_moore: report.is_radial_moore,
                central_count: report.central_count(),
                status_vector: status_vector(g).ok().map(|v| v.to_string()),
                failure: report.failure_reason(),
                violations,
            }
        })
        .collect();
    let out = VerifyOut {
        d,
        k,
        checked: lines.len(),
        radial_moore: lines.iter().filter(|l| l.is_radial_moore).count(),
        parse_errors: errors,
        graphs: lines,
    };
    let ok = out.parse_errors.is_empty()
        && out
            .graphs
            .iter()
            .all(|l| l.is_radial_moore && l.violations.is_empty());
    let text = match format {
        Format::Json => json(&out)?,
        Format::Csv => csv_rows(out.graphs.iter().map(|l| {
            (
                l.line,
                &l.graph6,
                l.is_radial_moore,
                l.central_count,
                l.status_vector.clone().unwrap_or_default(),
                l.violations.len(),
                l.failure.clone().unwrap_or_default(),
            )
        }))
        .map(|body| {
            format!("line,graph6,is_radial_moore,central,status_vector,violations,failure\n{body}")
        })?,
        Format::Text => {
            let mut s = String::new();
            for l in &out.graphs {
                let status = l.status_vector.as_deref().unwrap_or("n/a");
                if l.is_radial_moore {
                    writeln!(
                        s,
                        "line {}: radial-moore d={d} k={k}, central={}, status={status}",
                        l.line, l.central_count
                    )
                    .unwrap();
                    for v in &l.violations {
                        writeln!(s, "  violation: {v:?}").unwrap();
                    }
                } else {
                    let why = l.failure.as_deref().unwrap_or("unknown");
                    writeln!(s, "line {}: not radial-moore ({why})", l.line).unwrap();
                }
            }
            writeln!(
                s,
                "checked {} graphs: {} radial-moore, {} parse errors",
                out.checked,
                out.radial_moore,
                out.parse_errors.len()
            )
            .unwrap();
            s
        }
        Format::Graph6 => out
            .graphs
            .iter()
            .filter(|l| l.is_radial_moore)
            .map(|l| format!("{}\n", l.graph6))
            .collect(),
    };
    Ok(Output { text, ok })
}

fn ranking_csv(ranking: &[radial_moore::search::RankedGraph]) -> Result<String, Failure> {
    let body = csv_rows(ranking.iter().enumerate().map(|(i, r)| {
        (
            i + 1,
            &r.graph6,
            r.status_vector.total,
            r.status_vector.to_string(),
            r.central_count,
        )
    }))?;
    Ok(format!(
        "rank,graph6,total_status,status_vector,central\n{body}"
    ))
}

fn ranking_text(ranking: &[radial_moore::search::RankedGraph]) -> String {
    let mut s = String::new();
    for (i, r) in ranking.iter().enumerate() {
        writeln!(
            s,
            "{:>4}  {}  total={}  central={}  status={}",
            i + 1,
            r.graph6,
            r.status_vector.total,
            r.central_count,
            r.status_vector
        )
        .unwrap();
    }
    s
}

fn cmd_census(d: usize, k: usize, input: &InputArg, format: Format) -> CmdResult {
    let mut errors = Vec::new();
    let source = if input.input.is_some() {
        let (graphs, errs) = read_graphs(input)?;
        report_parse_errors(&errs);
        errors = errs;
        GraphSource::Graphs(graphs.into_iter().map(|(_, g)| g).collect())
    } else {
        GraphSource::Internal
    };
    let result = census(d, k, source)?;
    let ok = errors.is_empty() && result.ranking.iter().all(|r| r.violations.is_empty());
    let text = match format {
        Format::Json => json(&result)?,
        Format::Csv => ranking_csv(&result.ranking)?,
        Format::Graph6 => result
            .ranking
            .iter()
            .map(|r| format!("{}\n", r.graph6))
            .collect(),
        Format::Text => {
            let mut s = format!(
                "census d={d} k={k}: {} regular graphs, {} radial-moore, max_central {}\n",
                result.total_regular, result.radial_moore, result.max_central
            );
            s.push_str(&ranking_text(&result.ranking));
            s
        }
    };
    Ok(Output { text, ok })
}

fn cmd_rank(input: &InputArg, format: Format) -> CmdResult {
    let (graphs, errors) = read_graphs(input)?;
    report_parse_errors(&errors);
    let graphs: Vec<Graph> = graphs.into_iter().map(|(_, g)| g).collect();
    let ranking = rank_by_status(&graphs)?;
    let text = match format {
        Format::Json => json(&ranking)?,
        Format::Csv => ranking_csv(&ranking)?,
        Format::Graph6 => ranking.iter().map(|r| format!("{}\n", r.graph6)).collect(),
        Format::Text => ranking_text(&ranking),
    };
    Ok(Output {
        text,
        ok: errors.is_empty(),
    })
}

#[derive(Serialize)]
struct AutLine {
    source: String,
    group_order: String,
}

fn cmd_aut(
    family: Option<Family>,
    d: Option<usize>,
    input: &InputArg,
    budget: u64,
    format: Format,
) -> CmdResult {
    let mut errors = Vec::new();
    let lines = match family {
        Some(Family::Gd) => {
            let d = d.ok_or_else(|| Failure::Usage("aut --family gd needs --d".into()))?;
            let report = gd_automorphisms(d, budget)?;
            vec![AutLine {
                source: format!("G_{d}"),
                group_order: report.group_order.to_string(),
            }]
        }
        Some(Family::HoffmanSingleton) => vec![AutLine {
            source: "hoffman-singleton".into(),
            group_order: automorphism_group_order(&hoffman_singleton(), budget)?.to_string(),
        }],
        None => {
            let (graphs, errs) = read_graphs(input)?;
            report_parse_errors(&errs);
            errors = errs;
            graphs
                .iter()
                .map(|(line, g)| {
                    Ok(AutLine {
                        source: format!("line {line}"),
                        group_order: automorphism_group_order(g, budget)?.to_string(),
                    })
                })
                .collect::<Result<_, Error>>()?
        }
    };
    let text = match format {
        Format::Json if lines.len() == 1 && family.is_some() => json(&lines[0])?,
        Format::Json => json(&lines)?,
        Format::Csv => format!(
            "source,group_order\n{}",
            csv_rows(lines.iter().map(|l| (&l.source, &l.group_order)))?
        ),
        Format::Text if family.is_some() => format!("{}\n", lines[0].group_order),
        Format::Text => lines
            .iter()
            .map(|l| format!("{}: {}\n", l.source, l.group_order))
            .collect(),
        Format::Graph6 => return Err(unsupported(format, "aut")),
    };
    Ok(Output {
        text,
        ok: errors.is_empty(),
    })
}

fn number(x: f64) -> String {
    let s = format!("{x:.9}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

#[derive(Serialize)]
struct RootsOut {
    #[serde(flatten)]
    roots: CubicRoots,
    cubic: String,
    laguerre_interval: Option<(f64, f64)>,
    cauchy_check: Option<bool>,
}

fn cmd_roots(d: u64, format: Format) -> CmdResult {
    let roots = cubic_roots(d)?;
    let cubic = radial_moore::recurrence::characteristic_polynomial(d)?.cubic_string();
    let laguerre = laguerre_interval(d).ok();
    let cauchy = cauchy_bound_check(d).ok();
    let ok = cauchy != Some(false)
        && laguerre.is_none_or(|(lo, hi)| roots.real_roots.iter().all(|&r| lo <= r && r <= hi));
    let out = RootsOut {
        roots,
        cubic,
        laguerre_interval: laguerre,
        cauchy_check: cauchy,
    };
    let text = match format {
        Format::Json => json(&out)?,
        Format::Text => {
            let real: Vec<String> = out.roots.real_roots.iter().map(|&r| number(r)).collect();
            let mut s = format!("real: {}", real.join(", "));
            if let Some(c) = out.roots.complex_pair {
                let im = if (c.im - 1.0).abs() < 1e-9 {
                    "i".to_string()
                } else {
                    format!("{}i", number(c.im))
                };
                write!(s, "; complex: {}±{im}", number(c.re)).unwrap();
            }
            writeln!(s, "; Δ={}", out.roots.discriminant).unwrap();
            writeln!(s, "cubic: {}", out.cubic).unwrap();
            if let Some((lo, hi)) = out.laguerre_interval {
                writeln!(s, "laguerre interval: [{}, {}]", number(lo), number(hi)).unwrap();
            }
            if let Some(c) = out.cauchy_check {
                writeln!(s, "cauchy check: {}", if c { "pass" } else { "fail" }).unwrap();
            }
            s
        }
        Format::Csv => {
            let all = out.roots.all();
            format!(
                "d,root,re,im\n{}",
                csv_rows(all.iter().enumerate().map(|(i, z)| (d, i + 1, z.re, z.im)))?
            )
        }
        Format::Graph6 => return Err(unsupported(format, "roots")),
    };
    Ok(Output { text, ok })
}

#[derive(Serialize)]
struct SwapSummary {
    d: usize,
    k: usize,
    tried: usize,
    radial_moore_count: usize,
    max_central: Option<usize>,
    /// Radial Moore results by central count.
    central_histogram: std::collections::BTreeMap<usize, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    results: Option<Vec<radial_moore::search::SwapResult>>,
}

fn cmd_swap_search(
    family: Option<Family>,
    input: &InputArg,
    d: Option<usize>,
    k: Option<usize>,
    all: bool,
    format: Format,
) -> CmdResult {
    let (graph, d, k) = match family {
        Some(Family::HoffmanSingleton) => (hoffman_singleton(), d.unwrap_or(7), k.unwrap_or(2)),
        Some(Family::Gd) => {
            let d = d.ok_or_else(|| Failure::Usage("swap-search --family gd needs --d".into()))?;
            (build_gd(d)?.graph, d, k.unwrap_or(2))
        }
        None => {
            let (mut graphs, errors) = read_graphs(input)?;
            if let Some(e) = errors.first() {
                return Err(Failure::Usage(e.clone()));
            }
            if graphs.len() != 1 {
                return Err(Failure::Usage(format!(
                    "swap-search expects one input graph, got {}",
                    graphs.len()
                )));
            }
            let g = graphs.remove(0).1;
            let d = d
                .or(g.regular_degree())
                .ok_or_else(|| Failure::Usage("input graph is not regular".into()))?;
            let k = k.ok_or_else(|| Failure::Usage("swap-search on input needs --k".into()))?;
            (g, d, k)
        }
    };
    let scan = edge_swap_experiment(&graph, d, k)?;
    let mut histogram = std::collections::BTreeMap::new();
    for r in scan.results.iter().filter(|r| r.is_radial_moore) {
        *histogram.entry(r.central_count).or_insert(0) += 1;
    }
    let summary = SwapSummary {
        d,
        k,
        tried: scan.tried,
        radial_moore_count: scan.radial_moore_count,
        max_central: scan.max_central,
        central_histogram: histogram,
        results: all.then_some(scan.results),
    };
    let text = match format {
        Format::Json => json(&summary)?,
        Format::Csv => {
            let rows = summary.results.as_deref().unwrap_or_default();
            let body = csv_rows(rows.iter().map(|r| {
                let [(a, b), (c, e)] = r.removed;
                let [(f, g), (h, i)] = r.added;
                (a, b, c, e, f, g, h, i, r.central_count, r.is_radial_moore)
            }))?;
            format!("removed_u1,removed_v1,removed_u2,removed_v2,added_u1,added_v1,added_u2,added_v2,central,is_radial_moore\n{body}")
        }
        Format::Text => {
            let mut s = format!(
                "swap search d={d} k={k}: {} rewirings, {} radial-moore, max_central {}\n",
                summary.tried,
                summary.radial_moore_count,
                summary
                    .max_central
                    .map_or("none".to_string(), |m| m.to_string())
            );
            for (central, count) in &summary.central_histogram {
                writeln!(s, "  central={central}: {count}").unwrap();
            }
            for r in summary.results.iter().flatten() {
                writeln!(
                    s,
                    "  remove {:?} add {:?}: central={} radial_moore={}",
                    r.removed, r.added, r.central_count, r.is_radial_moore
                )
                .unwrap();
            }
            s
        }
        Format::Graph6 => return Err(unsupported(format, "swap-search")),
    };
    Ok(Output::ok(text))
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Bounds { d, k, fmt } => cmd_bounds(d, k, fmt.format),
        Command::Table {
            d_range,
            k_range,
            fmt,
        } => cmd_table(d_range, k_range, fmt.format),
        Command::Construct {
            family,
            d,
            verify,
            fmt,
        } => cmd_construct(family, d, verify, fmt.format),
        Command::Verify { input, d, k, fmt } => cmd_verify(&input, d, k, fmt.format),
        Command::Census { d, k, input, fmt } => cmd_census(d, k, &input, fmt.format),
        Command::Rank { input, fmt } => cmd_rank(&input, fmt.format),
        Command::Aut {
            family,
            d,
            input,
            budget,
            fmt,
        } => cmd_aut(family, d, &input, budget, fmt.format),
        Command::Roots { d, fmt } => cmd_roots(d, fmt.format),
        Command::SwapSearch {
            family,
            input,
            d,
            k,
            all,
            fmt,
        } => cmd_swap_search(family, &input, d, k, all, fmt.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(out.text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
