//! The `seifert` command line.
//!
//! Every command reads a file (or `-` for stdin), processes it line by line
//! in file order, and keeps going past bad lines; bad lines are reported as
//! error records and make the exit code nonzero. `--json` output is a single
//! document tagged `"schema": 1`.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fixtures::{parse_fixture_text, parse_matrix_text, FixtureEntry, LineError};
use crate::laurent::alexander_from_blocks;
use crate::pd::{parse_pd_line, PlanarDiagram};
use crate::seifert_matrix::{seifert_matrices, BlockSeifertMatrix};
use crate::seifert_state::{
    block_decompose, build_seifert_graph, classify_diagram, seifert_smooth,
};
use crate::verdicts::{
    analyze, analyze_matrix, check_basis_invariance, check_breadth_inv, check_matrix,
    verify_report, Status, Summary, TheoremId, TheoremVerdict,
};
use crate::wirtinger::{alexander_via_fox, wirtinger_from_pd};

const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "seifert",
    version,
    about = "Seifert surfaces, Seifert matrices and Alexander polynomials of knot diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// fixture file, one PD line per diagram (`-` reads stdin)
    pub path: PathBuf,
    /// emit one JSON document instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate PD lines and print signs, writhe and a canonical form
    Parse(Input),
    /// Seifert-surface and Alexander-polynomial invariants per diagram
    Invariants(Input),
    /// Seifert circles, Seifert graph blocks and diagram classification
    Decompose(Input),
    /// Block Seifert matrices with their symmetric and intersection forms
    Matrix(Input),
    /// Alexander polynomial by Fox calculus on the Wirtinger presentation
    Oracle(Input),
    /// Run every applicable theorem check on each diagram
    Verify(Input),
    /// Determinant, rank and breadth of explicit Seifert matrices
    MatrixAnalyze(Input),
    /// Seeded random checks of the breadth/invertibility equivalence and
    /// of basis-change invariance
    Selftest {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Parses arguments, runs, and returns the process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Error::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Runs one command, writing its report to `out`. `Ok(false)` means the
/// report contains an error record or a failed verdict.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let report = match &cli.command {
        Command::Parse(i) => per_diagram("parse", i, parse_record)?,
        Command::Invariants(i) => invariants(i)?,
        Command::Decompose(i) => per_diagram("decompose", i, decompose_record)?,
        Command::Matrix(i) => per_diagram("matrix", i, matrix_record)?,
        Command::Oracle(i) => per_diagram("oracle", i, oracle_record)?,
        Command::Verify(i) => verify(i)?,
        Command::MatrixAnalyze(i) => matrix_analyze(i)?,
        Command::Selftest { seed, trials, json } => selftest(*seed, *trials, *json)?,
    };
    out.write_all(report.text.as_bytes()).map_err(io_error)?;
    Ok(report.ok)
}

fn io_error(e: io::Error) -> Error {
    Error::Usage(format!("i/o error: {e}"))
}

struct Report {
    text: String,
    ok: bool,
}

fn read_input(path: &PathBuf) -> Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map_err(io_error)?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn json_document(command: &str, extra: Value, results: Vec<Value>, errors: &[LineError]) -> String {
    let mut doc = json!({ "schema": SCHEMA, "command": command });
    if let (Value::Object(d), Value::Object(e)) = (&mut doc, extra) {
        d.extend(e);
    }
    doc["results"] = Value::Array(results);
    doc["errors"] = serde_json::to_value(errors).expect("plain data");
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data");
    s.push('\n');
    s
}

fn error_lines(errors: &[LineError]) -> String {
    errors
        .iter()
        .map(|e| format!("error: line {}: {}\n", e.line, e.message))
        .collect()
}

/// One text block and one JSON value per diagram.
type Record = (String, Value);

fn per_diagram(
    command: &str,
    input: &Input,
    f: fn(&FixtureEntry) -> Result<Record>,
) -> Result<Report> {
    let text = read_input(&input.path)?;
    let mut records = vec![];
    let mut errors = vec![];
    for entry in parse_fixture_text(&text) {
        match entry.and_then(|e| {
            f(&e).map_err(|err| LineError {
                line: e.line,
                message: err.to_string(),
            })
        }) {
            Ok(r) => records.push(r),
            Err(e) => errors.push(e),
        }
    }
    let ok = errors.is_empty();
    let text = if input.json {
        json_document(
            command,
            json!({}),
            records.into_iter().map(|r| r.1).collect(),
            &errors,
        )
    } else {
        let mut s: String = records.into_iter().map(|r| r.0).collect();
        s.push_str(&error_lines(&errors));
        s
    };
    Ok(Report { text, ok })
}

fn signs_string(d: &PlanarDiagram) -> String {
    d.signs()
        .iter()
        .map(|s| if s.value() > 0 { '+' } else { '-' })
        .collect()
}

fn parse_record(e: &FixtureEntry) -> Result<Record> {
    let d = &e.diagram;
    let text = format!(
        "{}: {} crossings, {} components, writhe {}, signs {}, {}\n  {}\n",
        d.name(),
        d.crossing_count(),
        d.component_count(),
        d.writhe(),
        if d.crossing_count() == 0 {
            "none".to_string()
        } else {
            signs_string(d)
        },
        if d.is_alternating() {
            "alternating"
        } else {
            "non-alternating"
        },
        d.to_pd_line(),
    );
    let value = json!({
        "name": d.name(),
        "line": e.line,
        "crossings": d.crossing_count(),
        "components": d.component_count(),
        "writhe": d.writhe(),
        "signs": d.signs(),
        "alternating": d.is_alternating(),
        "pd": d.to_pd_line(),
        "annotations": e.annotations,
    });
    Ok((text, value))
}

fn list<T: std::fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn decompose_record(e: &FixtureEntry) -> Result<Record> {
    let d = &e.diagram;
    let circles = seifert_smooth(d);
    let g = build_seifert_graph(d);
    let dec = block_decompose(&g);
    let class = classify_diagram(d);
    let mut text = format!(
        "{}: {} circles, {} crossings, {} blocks, cut circles {}\n",
        d.name(),
        g.vertex_count,
        d.crossing_count(),
        dec.blocks.len(),
        list(&dec.cut_vertices)
    );
    for c in &circles {
        let _ = writeln!(
            text,
            "  circle {}: arcs {} crossings {}",
            c.id,
            list(c.arcs()),
            list(&g.rotation[c.id])
        );
    }
    for (i, b) in dec.blocks.iter().enumerate() {
        let sign = match b.uniform_sign {
            Some(s) => format!("{:+}", s.value()),
            None => "mixed".into(),
        };
        let _ = writeln!(
            text,
            "  block {i}: crossings {} circles {} sign {sign}",
            list(&b.edges),
            list(&b.vertices)
        );
    }
    let _ = writeln!(
        text,
        "  alternating {}, homogeneous {}, special {}",
        class.alternating, class.homogeneous, class.special
    );
    let value = json!({
        "name": d.name(),
        "line": e.line,
        "circles": circles,
        "graph": g,
        "decomposition": dec,
        "classification": class,
    });
    Ok((text, value))
}

fn matrix_text(name: &str, v: &BlockSeifertMatrix) -> String {
    let mut text = format!(
        "{name}: {} blocks, total size {}\n",
        v.blocks.len(),
        v.size()
    );
    for (i, b) in v.blocks.iter().enumerate() {
        let sign = b
            .uniform_sign
            .map_or("mixed".to_string(), |s| format!("{:+}", s.value()));
        let _ = writeln!(
            text,
            "  block {i}: crossings {} sign {sign} size {} det {} {}",
            list(&b.crossings),
            b.size(),
            b.det(),
            b.definiteness()
        );
        if b.size() > 0 {
            let _ = writeln!(text, "    V = {}\n    S = {}\n    J = {}", b.v, b.s, b.j);
        }
    }
    if !v.coupling.is_empty() {
        let entries: Vec<String> = v
            .coupling
            .iter()
            .map(|(i, j, x)| format!("({i},{j})={x}"))
            .collect();
        let _ = writeln!(text, "  coupling {}", entries.join(" "));
    }
    text
}

fn matrix_record(e: &FixtureEntry) -> Result<Record> {
    let v = seifert_matrices(&e.diagram)?;
    let mut value = serde_json::to_value(&v).expect("plain data");
    value["name"] = json!(e.name());
    value["line"] = json!(e.line);
    value["assembled"] = serde_json::to_value(v.assembled()).expect("plain data");
    if e.diagram.is_knot() {
        value["alexander"] = serde_json::to_value(alexander_from_blocks(&v)?).expect("plain data");
    }
    Ok((matrix_text(e.name(), &v), value))
}

fn oracle_record(e: &FixtureEntry) -> Result<Record> {
    let d = &e.diagram;
    let delta = alexander_via_fox(d)?;
    let generators = if d.crossing_count() == 0 {
        0
    } else {
        wirtinger_from_pd(d)?.generators
    };
    let text = format!("{}: {delta}  ({generators} generators)\n", d.name());
    Ok((
        text,
        json!({ "name": d.name(), "line": e.line, "generators": generators, "alexander": delta }),
    ))
}

fn invariants(input: &Input) -> Result<Report> {
    let text = read_input(&input.path)?;
    let mut reports = vec![];
    let mut errors = vec![];
    for entry in parse_fixture_text(&text) {
        match entry.and_then(|e| {
            analyze(&e.diagram).map_err(|err| LineError {
                line: e.line,
                message: err.to_string(),
            })
        }) {
            Ok(r) => reports.push(r),
            Err(e) => errors.push(e),
        }
    }
    let ok = errors.is_empty();
    let text = if input.json {
        let results = reports
            .iter()
            .map(|r| serde_json::to_value(r).expect("plain data"))
            .collect();
        json_document("invariants", json!({}), results, &errors)
    } else {
        let header = [
            "name",
            "c",
            "s",
            "betti",
            "genus_F",
            "breadth",
            "determined",
            "alexander",
        ];
        let rows: Vec<Vec<String>> = reports
            .iter()
            .map(|r| {
                vec![
                    r.name.clone(),
                    r.crossings.to_string(),
                    r.circles.to_string(),
                    r.betti.to_string(),
                    r.genus_f.to_string(),
                    r.breadth.to_string(),
                    if r.genus_determined { "yes" } else { "no" }.to_string(),
                    r.alexander.to_string(),
                ]
            })
            .collect();
        let mut s = if rows.is_empty() {
            String::new()
        } else {
            aligned(&header, &rows)
        };
        s.push_str(&error_lines(&errors));
        s
    };
    Ok(Report { text, ok })
}

/// Left-aligned columns; the last column is not padded.
fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                let _ = write!(s, "{c:<w$}  ", w = widths[i]);
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn verdict_text(verdicts: &[TheoremVerdict]) -> String {
    let rows: Vec<Vec<String>> = verdicts
        .iter()
        .map(|v| {
            vec![
                v.diagram.clone(),
                v.theorem.to_string(),
                v.status.to_string(),
                v.details.clone(),
            ]
        })
        .collect();
    if rows.is_empty() {
        String::new()
    } else {
        aligned(&["diagram", "check", "status", "details"], &rows)
    }
}

fn summary_line(s: &Summary) -> String {
    format!(
        "summary: pass {}, fail {}, not-applicable {}\n",
        s.pass, s.fail, s.not_applicable
    )
}

fn verify(input: &Input) -> Result<Report> {
    let text = read_input(&input.path)?;
    let mut verdicts = vec![];
    let mut errors = vec![];
    for entry in parse_fixture_text(&text) {
        let result = entry.and_then(|e| {
            analyze(&e.diagram)
                .map(|r| verify_report(&r, e.annotations.genus_paper))
                .map_err(|err| LineError {
                    line: e.line,
                    message: err.to_string(),
                })
        });
        match result {
            Ok(v) => verdicts.extend(v),
            Err(e) => errors.push(e),
        }
    }
    let summary = Summary::of(&verdicts);
    let ok = errors.is_empty() && summary.fail == 0;
    let text = if input.json {
        let results = verdicts
            .iter()
            .map(|v| serde_json::to_value(v).expect("plain data"))
            .collect();
        json_document("verify", json!({ "summary": summary }), results, &errors)
    } else {
        let mut s = verdict_text(&verdicts);
        s.push_str(&error_lines(&errors));
        s.push_str(&summary_line(&summary));
        s
    };
    Ok(Report { text, ok })
}

fn matrix_analyze(input: &Input) -> Result<Report> {
    let text = read_input(&input.path)?;
    let mut reports = vec![];
    let mut verdicts = vec![];
    let mut errors = vec![];
    for entry in parse_matrix_text(&text) {
        let result = entry.and_then(|m| {
            analyze_matrix(&m.name, &m.matrix).map_err(|err| LineError {
                line: m.line,
                message: err.to_string(),
            })
        });
        match result {
            Ok(r) => {
                verdicts.push(check_matrix(&r));
                reports.push(r);
            }
            Err(e) => errors.push(e),
        }
    }
    let summary = Summary::of(&verdicts);
    let ok = errors.is_empty() && summary.fail == 0;
    let text = if input.json {
        let results = reports
            .iter()
            .zip(&verdicts)
            .map(|(r, v)| {
                let mut x = serde_json::to_value(r).expect("plain data");
                x["verdict"] = serde_json::to_value(v).expect("plain data");
                x
            })
            .collect();
        json_document(
            "matrix-analyze",
            json!({ "summary": summary }),
            results,
            &errors,
        )
    } else {
        let mut s = String::new();
        for (r, v) in reports.iter().zip(&verdicts) {
            let breadth = r
                .breadth
                .map_or("undefined (zero polynomial)".to_string(), |b| b.to_string());
            let _ = writeln!(
                s,
                "{}: size {}, det {}, rank {}, {}, det(V - tV^T) = {}, breadth {} ({} size) -> {} {}",
                r.name,
                r.size,
                r.det,
                r.rank,
                if r.invertible { "invertible" } else { "singular" },
                r.alexander,
                breadth,
                if r.breadth_below_size { "<" } else { "=" },
                v.theorem,
                v.status,
            );
        }
        s.push_str(&error_lines(&errors));
        s.push_str(&summary_line(&summary));
        s
    };
    Ok(Report { text, ok })
}

const SELFTEST_DIAGRAMS: [&str; 3] = [
    "trefoil PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
    "figure_eight PD: X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
    "granny PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
];

/// Random closed braids on up to four strands that close to knots, with
/// the block-matrix and Fox-calculus polynomials compared.
fn random_oracle_check(rng: &mut ChaCha8Rng, samples: usize) -> Result<TheoremVerdict> {
    let name = "random-braids";
    let mut done = 0;
    let mut attempts = 0;
    while done < samples && attempts < 50 * samples {
        attempts += 1;
        let strands = rng.gen_range(2..=4);
        let len = rng.gen_range(2..=10);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let Ok(d) = PlanarDiagram::from_braid(name, &word, strands) else {
            continue;
        };
        if !d.is_knot() {
            continue;
        }
        let fox = alexander_via_fox(&d)?;
        let blocks = alexander_from_blocks(&seifert_matrices(&d)?)?;
        if fox != blocks {
            return Ok(TheoremVerdict {
                diagram: name.into(),
                theorem: TheoremId::OracleEquivalence,
                status: Status::Fail,
                details: format!("braid {word:?}: blocks {blocks}, Fox {fox}"),
            });
        }
        done += 1;
    }
    Ok(TheoremVerdict {
        diagram: name.into(),
        theorem: TheoremId::OracleEquivalence,
        status: if done == samples {
            Status::Pass
        } else {
            Status::Fail
        },
        details: format!("{done} braid closures: Seifert-matrix and Fox polynomials agree"),
    })
}

fn selftest(seed: u64, trials: usize, json: bool) -> Result<Report> {
    let mut verdicts = check_breadth_inv(trials, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for line in SELFTEST_DIAGRAMS {
        let mut d = parse_pd_line(line)?;
        if d.name() == "granny" {
            d = d.connected_sum(&d)?.with_name("granny");
        }
        verdicts.push(check_basis_invariance(
            d.name(),
            &seifert_matrices(&d)?,
            100,
            &mut rng,
        )?);
    }
    verdicts.push(random_oracle_check(&mut rng, trials.min(100))?);
    let summary = Summary::of(&verdicts);
    let text = if json {
        let results = verdicts
            .iter()
            .map(|v| serde_json::to_value(v).expect("plain data"))
            .collect();
        json_document(
            "selftest",
            json!({ "seed": seed, "trials": trials, "summary": summary }),
            results,
            &[],
        )
    } else {
        let mut s = format!("selftest seed {seed} trials {trials}\n");
        s.push_str(&verdict_text(&verdicts));
        s.push_str(&summary_line(&summary));
        s
    };
    Ok(Report {
        text,
        ok: summary.fail == 0,
    })
}
