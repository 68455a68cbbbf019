//! Command-line front end for distance-regular graph and code analysis.
//!
//! `analyze` reports the distance partition, complete regularity, quotient
//! matrix, code spectrum, and strength; `classify` adds the Q-polynomial,
//! Leonard, harmonic, and arithmetic verdicts plus the feasibility filters;
//! `feasibility` runs the parameter-level filters on a candidate without any
//! vertex-level code; `coset` builds the coset graph of an additive code;
//! `generate` writes graph and generator-matrix files.
//!
//! Exit status: 0 on success, 1 when the verdict is "not completely regular"
//! or "infeasible", 2 on input errors.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use drcodes::classify::{classify, Classification, ClassificationReport};
use drcodes::code::{
    code_spectrum, distance_partition, is_completely_regular, strength, QuotientMatrix,
};
use drcodes::coset::{self, AdditiveCode};
use drcodes::error::{Error, Result};
use drcodes::graph::Family;
use drcodes::leonard::harmonic_test;
use drcodes::scalar::rat_int;
use drcodes::Tolerances;

use input::{load_code, load_generators, GraphSpec, LoadedCode};
use report::{emit, json_doc, pass_fail, scalar, scalar_list, scalars, table, yes_no};

#[derive(Parser)]
#[command(name = "drcodes", version, about = "completely regular codes in distance-regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Graph spec: "hamming 7 2", "johnson 5 2", "halved-cube 6",
    /// "folded-cube 6", "doubled-odd 3", "cycle 6", or "file <path>".
    /// Overrides the header line of a code file.
    #[arg(long, global = true, value_name = "SPEC")]
    graph: Option<String>,

    /// Code file (analyze, classify) or generator matrix file (coset).
    #[arg(long, global = true, value_name = "FILE")]
    code: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the report (or generated file) here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Tolerance for matching scalars against known eigenvalues.
    #[arg(long, global = true, value_name = "EPS", default_value_t = 1e-9)]
    tolerance_eigen: f64,

    /// Relative zero threshold for Krein parameters and expansion
    /// coefficients.
    #[arg(long, global = true, value_name = "EPS", default_value_t = 1e-8)]
    tolerance_zero: f64,

    /// Report all orderings found by search, or only the natural descending
    /// one.
    #[arg(long, global = true, value_enum, default_value_t = OrderingView::Search)]
    ordering: OrderingView,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderingView {
    Natural,
    Search,
}

#[derive(Subcommand)]
enum Command {
    /// Distance partition, complete regularity, quotient matrix, code
    /// spectrum, strength.
    Analyze,
    /// Everything analyze reports plus the Q-polynomial, Leonard, harmonic,
    /// and arithmetic verdicts and the feasibility filters.
    Classify,
    /// Parameter-level feasibility filters on a candidate eigenvalue index
    /// set or quotient matrix; needs --graph but no code.
    Feasibility {
        /// Candidate S* as comma-separated spectrum indices, e.g. "1,3".
        #[arg(long, value_name = "LIST", conflicts_with = "quotient")]
        sstar: Option<String>,
        /// Candidate quotient matrix as semicolon-separated
        /// "gamma,alpha,beta" rows, e.g. "0,0,7;1,6,0".
        #[arg(long, value_name = "ROWS")]
        quotient: Option<String>,
    },
    /// Coset graph of an additive code given by a generator matrix file,
    /// with the quotient relation check.
    Coset,
    /// Write a graph or a generator matrix to a file.
    Generate {
        #[command(subcommand)]
        target: Target,
    },
}

#[derive(Subcommand)]
enum Target {
    /// Explicit edge list of a named family, e.g. `generate graph hamming 4 2`.
    Graph {
        #[arg(required = true, value_name = "SPEC")]
        spec: Vec<String>,
    },
    /// Generator matrix of the binary code with parity checks indexed by
    /// weight-l columns of length m.
    RifaZinoviev { m: u32, l: u32 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let tol = Tolerances {
        eigen: cli.tolerance_eigen,
        krein_zero_rel: cli.tolerance_zero,
        ..Tolerances::default()
    };
    match &cli.command {
        Command::Analyze => cmd_analyze(cli, &tol),
        Command::Classify => cmd_classify(cli, &tol),
        Command::Feasibility { sstar, quotient } => {
            cmd_feasibility(cli, &tol, sstar.as_deref(), quotient.as_deref())
        }
        Command::Coset => cmd_coset(cli, &tol),
        Command::Generate { target } => cmd_generate(cli, target),
    }
}

fn require_code(cli: &Cli) -> Result<&PathBuf> {
    cli.code
        .as_ref()
        .ok_or_else(|| Error::InvalidParameters("--code is required here".into()))
}

fn require_graph(cli: &Cli) -> Result<&str> {
    cli.graph
        .as_deref()
        .ok_or_else(|| Error::InvalidParameters("--graph is required here".into()))
}

fn int_array(v: &[usize]) -> Value {
    Value::Array(v.iter().map(|&x| json!(x)).collect())
}

fn quotient_rows(u: &QuotientMatrix) -> Value {
    Value::Array(
        u.rows()
            .iter()
            .map(|r| json!([r[0], r[1], r[2]]))
            .collect(),
    )
}

fn cmd_analyze(cli: &Cli, tol: &Tolerances) -> Result<u8> {
    let lc = load_code(require_code(cli)?, cli.graph.as_deref())?;
    let LoadedCode { graph, array, code, .. } = &lc;
    let dp = distance_partition(graph, code);
    let cell_sizes = dp.cell_sizes();
    let verdict = is_completely_regular(graph, code);

    let mut rows: Vec<(&str, String)> = vec![
        ("graph", lc.graph_name.clone()),
        ("code", format!("{} ({})", lc.code_name, report::words(code.len()))),
        ("covering radius", dp.rho().to_string()),
        ("cell sizes", format!("{cell_sizes:?}")),
    ];
    let mut doc = json!({
        "graph": lc.graph_name,
        "code": lc.code_name,
        "cr": verdict.is_ok(),
        "witness": Value::Null,
        "rho": dp.rho(),
        "cell_sizes": int_array(&cell_sizes),
        "quotient_matrix": Value::Null,
        "spectrum": Value::Null,
        "sstar": Value::Null,
        "strength": Value::Null,
    });

    let status = match verdict {
        Err(w) => {
            eprintln!("not completely regular: {w}");
            rows.push(("completely regular", format!("no ({w})")));
            doc["witness"] = Value::String(w.to_string());
            1
        }
        Ok(u) => {
            let spec = array.spectrum(tol)?;
            let cs = code_spectrum(&u, &spec, tol)?;
            let natural: Vec<usize> = (1..=array.diameter()).collect();
            let str_t = strength(&cs, &natural);
            rows.push(("completely regular", "yes".into()));
            rows.push(("quotient matrix", u.to_string()));
            rows.push(("spectrum", scalar_list(&cs.etas)));
            rows.push(("S*", format!("{:?}", cs.sstar)));
            rows.push(("strength", str_t.to_string()));
            doc["quotient_matrix"] = quotient_rows(&u);
            doc["spectrum"] = scalars(&cs.etas);
            doc["sstar"] = int_array(&cs.sstar);
            doc["strength"] = json!(str_t);
            0
        }
    };

    let text = match cli.format {
        Format::Json => json_doc(&doc),
        Format::Table => table(&rows),
    };
    emit(&text, cli.out.as_deref())?;
    Ok(status)
}

/// Orderings surviving the view: everything under `search`, only the
/// ascending-index (natural) one under `natural`.
fn view_orderings(view: OrderingView, orderings: &[Vec<usize>]) -> Vec<Vec<usize>> {
    orderings
        .iter()
        .filter(|o| {
            view == OrderingView::Search || o.windows(2).all(|w| w[0] < w[1])
        })
        .cloned()
        .collect()
}

fn cmd_classify(cli: &Cli, tol: &Tolerances) -> Result<u8> {
    let lc = load_code(require_code(cli)?, cli.graph.as_deref())?;
    let r = match classify(&lc.graph, &lc.array, &lc.code, tol)? {
        Classification::NotCompletelyRegular(w) => {
            eprintln!("not completely regular: {w}");
            let doc = not_cr_doc(&lc);
            let text = match cli.format {
                Format::Json => json_doc(&doc),
                Format::Table => table(&[
                    ("graph", lc.graph_name.clone()),
                    ("code", lc.code_name.clone()),
                    ("completely regular", format!("no ({w})")),
                ]),
            };
            emit(&text, cli.out.as_deref())?;
            return Ok(1);
        }
        Classification::Report(r) => r,
    };
    let doc = report_doc(cli, &lc, &r);
    let text = match cli.format {
        Format::Json => json_doc(&doc),
        Format::Table => report_table(cli, &lc, &r),
    };
    emit(&text, cli.out.as_deref())?;
    Ok(0)
}

fn not_cr_doc(lc: &LoadedCode) -> Value {
    json!({
        "graph": lc.graph_name,
        "code": lc.code_name,
        "cr": false,
        "rho": Value::Null,
        "quotient_matrix": Value::Null,
        "spectrum": Value::Null,
        "sstar": Value::Null,
        "strength": Value::Null,
        "qpoly": Value::Null,
        "leonard": Value::Null,
        "harmonic_t": Value::Null,
        "arithmetic_t": Value::Null,
        "filters": Value::Null,
        "expansions": Value::Null,
    })
}

/// The classification under the requested ordering view: surviving code
/// orderings, Leonard witness eigenvalues, and the harmonic parameter.
struct ReportView {
    qpoly_orderings: Vec<Vec<usize>>,
    qpoly_flag: bool,
    leonard_etas: Vec<drcodes::Scalar>,
    leonard_flag: bool,
    harmonic_t: Option<usize>,
}

fn view_of(cli: &Cli, lc: &LoadedCode, r: &ClassificationReport) -> ReportView {
    let qpoly_orderings = view_orderings(cli.ordering, &r.qpoly.orderings);
    let leonard_etas: Vec<_> = r
        .leonard
        .iter()
        .filter(|l| !view_orderings(cli.ordering, &l.orderings).is_empty())
        .map(|l| r.spectrum.etas[l.theta_index].clone())
        .collect();
    let rho = r.rho();
    let harmonic_t = match cli.ordering {
        OrderingView::Search => r.harmonic_t,
        OrderingView::Natural => {
            let natural: Vec<usize> = (1..=lc.array.diameter()).collect();
            if r.graph_orderings.contains(&natural) {
                harmonic_test(&r.spectrum, &natural)
            } else {
                None
            }
        }
    };
    ReportView {
        qpoly_flag: rho == 0 || !qpoly_orderings.is_empty(),
        qpoly_orderings,
        leonard_flag: rho == 0 || !leonard_etas.is_empty(),
        leonard_etas,
        harmonic_t,
    }
}

fn report_doc(cli: &Cli, lc: &LoadedCode, r: &ClassificationReport) -> Value {
    let v = view_of(cli, lc, r);
    let etas = &r.spectrum.etas;
    let orderings_json = Value::Array(
        v.qpoly_orderings
            .iter()
            .map(|o| Value::Array(o.iter().map(|&j| scalar(&etas[j])).collect()))
            .collect(),
    );
    json!({
        "graph": lc.graph_name,
        "code": lc.code_name,
        "cr": true,
        "rho": r.rho(),
        "quotient_matrix": quotient_rows(&r.quotient),
        "spectrum": scalars(etas),
        "sstar": int_array(&r.spectrum.sstar),
        "strength": r.strength,
        "qpoly": { "flag": v.qpoly_flag, "orderings": orderings_json },
        "leonard": { "flag": v.leonard_flag, "thetas": scalars(&v.leonard_etas) },
        "harmonic_t": v.harmonic_t,
        "arithmetic_t": r.arithmetic_t.as_ref().map(scalar),
        "filters": {
            "lloyd": r.filters.lloyd,
            "gap": r.filters.gap,
            "parity": r.filters.parity,
        },
        "expansions": r.expansions.as_ref().map(|e| json!({
            "lambda": scalars(&e.lambdas),
            "tau": scalars(&e.taus),
        })),
    })
}

fn report_table(cli: &Cli, lc: &LoadedCode, r: &ClassificationReport) -> String {
    let v = view_of(cli, lc, r);
    let etas = &r.spectrum.etas;
    let orderings_text = v
        .qpoly_orderings
        .iter()
        .map(|o| {
            let vals: Vec<String> = o.iter().map(|&j| etas[j].to_string()).collect();
            format!("[{}]", vals.join(", "))
        })
        .collect::<Vec<_>>()
        .join(" ");
    let opt = |x: &Option<String>| x.clone().unwrap_or_else(|| "absent".into());
    let mut rows: Vec<(&str, String)> = vec![
        ("graph", lc.graph_name.clone()),
        ("code", format!("{} ({})", lc.code_name, report::words(lc.code.len()))),
        ("completely regular", "yes".into()),
        ("covering radius", r.rho().to_string()),
        ("cell sizes", format!("{:?}", r.cell_sizes)),
        ("quotient matrix", r.quotient.to_string()),
        ("spectrum", scalar_list(etas)),
        ("S*", format!("{:?}", r.spectrum.sstar)),
        ("strength", r.strength.to_string()),
        ("Q-polynomial", format!("{} {}", yes_no(v.qpoly_flag), orderings_text)),
        (
            "Leonard",
            format!("{} {}", yes_no(v.leonard_flag), scalar_list(&v.leonard_etas)),
        ),
        ("harmonic", opt(&v.harmonic_t.map(|t| format!("t = {t}")))),
        (
            "arithmetic",
            opt(&r.arithmetic_t.as_ref().map(|t| format!("t = {t}"))),
        ),
    ];
    let parity = match r.filters.parity {
        None => "parity n/a".to_string(),
        Some(p) => format!("parity {}", pass_fail(p)),
    };
    rows.push((
        "filters",
        format!(
            "lloyd {}, gap {}, {}",
            pass_fail(r.filters.lloyd),
            pass_fail(r.filters.gap),
            parity
        ),
    ));
    table(&rows)
}

fn parse_sstar(text: &str, d: usize) -> Result<Vec<usize>> {
    let mut v = text
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad spectrum index '{t}'")))
        })
        .collect::<Result<Vec<usize>>>()?;
    v.sort_unstable();
    if v.is_empty() || v[0] < 1 || v[v.len() - 1] > d {
        return Err(Error::InvalidParameters(format!(
            "S* indices must lie in 1..={d}"
        )));
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParameters("S* indices must be distinct".into()));
    }
    Ok(v)
}

fn parse_quotient(text: &str) -> Result<QuotientMatrix> {
    let (mut gamma, mut alpha, mut beta) = (Vec::new(), Vec::new(), Vec::new());
    for row in text.split(';') {
        let nums = row
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad quotient entry '{t}'")))
            })
            .collect::<Result<Vec<i64>>>()?;
        if nums.len() != 3 {
            return Err(Error::Parse(format!(
                "quotient row '{row}' needs exactly gamma,alpha,beta"
            )));
        }
        gamma.push(nums[0]);
        alpha.push(nums[1]);
        beta.push(nums[2]);
    }
    QuotientMatrix::new(gamma, alpha, beta)
}

/// Code-free parity filter for antipodal 2-covers: a feasible S* has either
/// all indices even or indices alternating odd, even, odd, ...
fn parity_pattern(sstar: &[usize]) -> bool {
    sstar.iter().all(|&i| i % 2 == 0)
        || sstar.iter().enumerate().all(|(j, &i)| i % 2 == (j + 1) % 2)
}

fn cmd_feasibility(
    cli: &Cli,
    tol: &Tolerances,
    sstar_arg: Option<&str>,
    quotient_arg: Option<&str>,
) -> Result<u8> {
    let gspec = GraphSpec::parse(require_graph(cli)?)?;
    let array = gspec.array()?;
    let spec = array.spectrum(tol)?;
    let d = array.diameter();
    let antipodal = array.valencies().last() == Some(&rat_int(1));

    // (sstar, candidate spectrum, lloyd) per input mode.
    let (sstar, cand, lloyd, quotient) = match (sstar_arg, quotient_arg) {
        (Some(s), None) => {
            let sstar = parse_sstar(s, d)?;
            let mut cand = vec![spec.thetas[0].clone()];
            cand.extend(sstar.iter().map(|&i| spec.thetas[i].clone()));
            (Some(sstar), Some(cand), true, None)
        }
        (None, Some(q)) => {
            let u = parse_quotient(q)?;
            match code_spectrum(&u, &spec, tol) {
                Ok(cs) => (Some(cs.sstar), Some(cs.etas), true, Some(u)),
                Err(Error::LloydViolation(msg)) => {
                    eprintln!("lloyd filter: {msg}");
                    (None, None, false, Some(u))
                }
                Err(e) => return Err(e),
            }
        }
        _ => {
            return Err(Error::InvalidParameters(
                "feasibility needs exactly one of --sstar or --quotient".into(),
            ))
        }
    };

    let gap = sstar.as_deref().map(drcodes::leonard::gap_filter);
    let parity = match &sstar {
        Some(v) if antipodal => Some(parity_pattern(v)),
        _ => None,
    };
    let feasible = lloyd && gap.unwrap_or(true) && parity.unwrap_or(true);
    if !feasible {
        let mut failed = Vec::new();
        if !lloyd {
            failed.push("lloyd");
        }
        if gap == Some(false) {
            failed.push("gap");
        }
        if parity == Some(false) {
            failed.push("parity");
        }
        eprintln!("infeasible: {} filter violated", failed.join(", "));
    }

    let doc = json!({
        "graph": gspec.name(),
        "sstar": sstar.as_deref().map(int_array),
        "quotient_matrix": quotient.as_ref().map(quotient_rows),
        "spectrum": cand.as_deref().map(scalars),
        "filters": { "lloyd": lloyd, "gap": gap, "parity": parity },
        "feasible": feasible,
    });
    let opt_flag = |f: Option<bool>| match f {
        None => "n/a".to_string(),
        Some(b) => pass_fail(b).to_string(),
    };
    let rows = vec![
        ("graph", gspec.name()),
        ("candidate S*", format!("{:?}", sstar.as_deref().unwrap_or(&[]))),
        (
            "candidate spectrum",
            cand.as_deref().map(scalar_list).unwrap_or_else(|| "-".into()),
        ),
        ("lloyd", pass_fail(lloyd).to_string()),
        ("gap", opt_flag(gap)),
        ("parity", opt_flag(parity)),
        (
            "verdict",
            if feasible { "feasible" } else { "infeasible" }.to_string(),
        ),
    ];
    let text = match cli.format {
        Format::Json => json_doc(&doc),
        Format::Table => table(&rows),
    };
    emit(&text, cli.out.as_deref())?;
    Ok(if feasible { 0 } else { 1 })
}

fn cmd_coset(cli: &Cli, tol: &Tolerances) -> Result<u8> {
    let gspec = GraphSpec::parse(require_graph(cli)?)?;
    let GraphSpec::Family(Family::Hamming { n, q }) = gspec else {
        return Err(Error::InvalidParameters(
            "coset analysis needs a Hamming graph, whose translations the code must respect".into(),
        ));
    };
    let (graph, _) = gspec.build()?;
    let text = load_generators(require_code(cli)?)?;
    let ac = AdditiveCode::parse_generators(q, n, &text)?;
    let code = ac.to_code(&graph)?;
    let cg = coset::coset_graph(&graph, &ac)?;
    let cosets = (ac.ambient_size() / ac.len() as u64) as usize;
    let graph_text = cg.graph.to_edge_list();

    let verdict = is_completely_regular(&graph, &code);
    let (relation, qspec) = match &verdict {
        Ok(u) => (
            Some(coset::quotient_relation_check(u, &cg.graph)),
            Some(coset::quotient_spectrum(&cg.graph, tol)?),
        ),
        Err(w) => {
            eprintln!("not completely regular: {w}");
            (None, None)
        }
    };

    let code_name = require_code(cli)?.display().to_string();
    match cli.format {
        Format::Json => {
            let doc = json!({
                "graph": gspec.name(),
                "code": code_name,
                "dimension": ac.dimension(),
                "cosets": cosets,
                "multiplicity": cg.multiplicity,
                "cr": verdict.is_ok(),
                "quotient_matrix": verdict.as_ref().ok().map(quotient_rows),
                "relation": relation,
                "quotient_spectrum": qspec.as_deref().map(scalars),
                "coset_graph": graph_text,
            });
            emit(&json_doc(&doc), cli.out.as_deref())?;
        }
        Format::Table => {
            let opt_flag = |f: Option<bool>| match f {
                None => "n/a".to_string(),
                Some(b) => yes_no(b).to_string(),
            };
            let rows = vec![
                ("graph", gspec.name()),
                ("code", format!("{code_name} ({})", report::words(ac.len()))),
                ("dimension", ac.dimension().to_string()),
                ("cosets", cosets.to_string()),
                (
                    "edge multiplicity",
                    cg.multiplicity
                        .map(|m| m.to_string())
                        .unwrap_or_else(|| "nonuniform".into()),
                ),
                ("completely regular", yes_no(verdict.is_ok()).to_string()),
                ("quotient relation", opt_flag(relation)),
                (
                    "quotient spectrum",
                    qspec.as_deref().map(scalar_list).unwrap_or_else(|| "-".into()),
                ),
            ];
            // The edge list is the payload: it goes to --out when given,
            // stdout otherwise, with the summary on the other stream.
            match cli.out.as_deref() {
                Some(p) => {
                    emit(&graph_text, Some(p))?;
                    print!("{}", table(&rows));
                }
                None => {
                    eprint!("{}", table(&rows));
                    print!("{graph_text}");
                }
            }
        }
    }
    Ok(if verdict.is_ok() { 0 } else { 1 })
}

fn cmd_generate(cli: &Cli, target: &Target) -> Result<u8> {
    let text = match target {
        Target::Graph { spec } => {
            let fam = Family::parse(&spec.join(" "))?;
            fam.generate()?.to_edge_list()
        }
        Target::RifaZinoviev { m, l } => coset::rifa_zinoviev(*m, *l)?.generator_matrix(),
    };
    emit(&text, cli.out.as_deref())?;
    Ok(0)
}
