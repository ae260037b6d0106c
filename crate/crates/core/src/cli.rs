//! Command-line front end. Every subcommand writes deterministic output to
//! stdout or `--out`; exit code 0 on success, 1 on a failed certificate or
//! check, 2 on a usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checks::{run_checks, Level};
use crate::error::SpectralError;
use crate::io::{parse_record, GraphRecord};
use crate::lie::{BracketExpr, FreeLie, GradedAlphabet, LieVector};
use crate::pushforward::{in_filtration, pushforward_traced, rational_component_count};
use crate::spectral::{certify_nonvanishing, e1_table, f1_table, LieComplex, VSpaceElement};
use crate::strata::{annotate, build_t_lg, count_trees, for_each_tree, stratum_classes, AnnotatedTree};

/// Largest n for which `enumerate` without `--orbits` lists numbered trees.
const LIST_LIMIT: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "hyperstrata", version, about = "Strata of M̄_{0,2g+2}, admissible covers and the Lie row of the spectral sequence")]
pub struct Cli {
    /// Worker threads (default: HYPERSTRATA_JOBS or all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct TreeInput {
    /// Tree in the graph JSON format.
    #[arg(long, conflicts_with = "tlg")]
    tree: Option<PathBuf>,
    /// The star tree T_{l,g}, given as `l,g`.
    #[arg(long, value_parser = parse_pair)]
    tlg: Option<(u32, u32)>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    E1,
    F1,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stable trees of type (0,n); numbered trees are listed for n <= 8.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges: Option<usize>,
        /// One line per S_n-orbit class.
        #[arg(long)]
        orbits: bool,
        /// Keep good trees only (n even).
        #[arg(long)]
        good: bool,
    },
    /// Parities, ρ and ν of a tree with an even number of leaves.
    Annotate(TreeInput),
    /// Stabilized dual graph of the admissible double cover, with its trace.
    Pushforward(TreeInput),
    /// Lyndon basis of a multidegree component.
    Lyndon {
        #[arg(long, default_value = "a:odd,b:even")]
        alphabet: String,
        /// Letter counts, e.g. `3,2`.
        #[arg(long)]
        degree: String,
    },
    /// Normal form of a bracket expression in the Lyndon basis.
    Normalize {
        #[arg(long, default_value = "a:odd,b:even")]
        alphabet: String,
        #[arg(long)]
        expr: String,
    },
    /// d₁ of ω_g, or of a vector `c·w …` over the edge alphabet.
    D1 {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        expr: Option<String>,
    },
    /// Nonvanishing certificate as JSON; the proof log goes to stderr.
    Certify {
        #[arg(long)]
        genus: u32,
    },
    /// First-page dimension table as CSV.
    Tables {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Leaf count m for e1.
        #[arg(long)]
        n: Option<usize>,
        /// Genus g for f1.
        #[arg(long)]
        genus: Option<u32>,
    },
    /// Runs the invariant suite.
    Check {
        #[arg(long, value_enum, default_value = "quick")]
        level: LevelArg,
    },
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or("expected l,g")?;
    let p = |x: &str| x.trim().parse::<u32>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

fn parse_degree(s: &str) -> Result<Vec<u32>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::usage(format!("bad --degree '{s}'"), "give letter counts like --degree 3,2"))
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
    hint: Option<String>,
}

impl Failure {
    fn usage(message: impl Into<String>, hint: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
            hint: Some(hint.into()),
        }
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::usage(e.to_string(), "check the argument ranges in --help")
    }
}

/// Output of a subcommand: the main text and an optional log for stderr.
struct Emitted {
    text: String,
    log: Option<String>,
    failed: Option<String>,
}

impl Emitted {
    fn text(text: String) -> Self {
        Emitted {
            text,
            log: None,
            failed: None,
        }
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn load_tree(input: &TreeInput) -> Result<AnnotatedTree, Failure> {
    match (&input.tree, input.tlg) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display()), "pass a readable JSON file to --tree"))?;
            Ok(parse_record(&text)?.to_annotated()?)
        }
        (None, Some((l, g))) => Ok(build_t_lg(l, g)?),
        (None, None) => Err(Failure::usage("no tree given", "use --tree <file.json> or --tlg l,g")),
    }
}

fn enumerate(n: usize, edges: Option<usize>, orbits: bool, good: bool) -> Result<Emitted, Failure> {
    if good && n % 2 == 1 {
        return Err(Failure::usage("--good needs an even n", "good trees have 2g+2 leaves"));
    }
    let keep = |t: &crate::graph::NumberedGraph| !good || annotate(t).map(|a| a.is_good()).unwrap_or(false);
    if orbits {
        let classes: Vec<Value> = stratum_classes(n, edges)?
            .into_iter()
            .filter(|c| keep(&c.representative))
            .map(|c| {
                json!({
                    "edges": c.edge_count,
                    "orbit_size": c.orbit_size,
                    "key": c.canonical_key.to_hex(),
                    "graph": GraphRecord::from_numbered(&c.representative).to_value(),
                })
            })
            .collect();
        let total: u64 = classes.iter().map(|c| c["orbit_size"].as_u64().unwrap_or(0)).sum();
        return Ok(Emitted::text(json_text(&json!({
            "format": 1,
            "n": n,
            "classes": classes.len(),
            "numbered_total": total,
            "orbits": classes,
        }))));
    }
    if n > LIST_LIMIT {
        if edges.is_some() || good {
            return Err(Failure::usage(
                format!("numbered listing is limited to n <= {LIST_LIMIT}"),
                "add --orbits for larger n",
            ));
        }
        return Ok(Emitted::text(json_text(&json!({"format": 1, "n": n, "count": count_trees(n)?}))));
    }
    let mut trees = Vec::new();
    for_each_tree(n, edges, |t| {
        if keep(t) {
            trees.push((t.canonical_form(), GraphRecord::from_numbered(t).to_value()));
        }
    })?;
    trees.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Emitted::text(json_text(&json!({
        "format": 1,
        "n": n,
        "count": trees.len(),
        "trees": trees.into_iter().map(|t| t.1).collect::<Vec<_>>(),
    }))))
}

fn run_pushforward(t: &AnnotatedTree) -> Result<Emitted, Failure> {
    let (image, trace) = pushforward_traced(t)?;
    let v = json!({
        "format": 1,
        "genus": image.genus().ok(),
        "rational_components": rational_component_count(t),
        "no_rational_components": in_filtration(t, 0),
        "graph": GraphRecord::from_graph(&image).to_value(),
        "trace": trace,
    });
    Ok(Emitted::text(json_text(&v)))
}

fn run_d1(genus: u32, expr: Option<&str>) -> Result<Emitted, Failure> {
    let cx = LieComplex::new();
    let x = match expr {
        None => cx.omega(genus)?,
        Some(s) => {
            let vector = LieVector::parse(s, cx.lie().alphabet())?;
            let Some(md) = vector.multidegree(cx.lie().alphabet()) else {
                return Ok(Emitted::text("0\n".into()));
            };
            let l = md[1];
            if md[0] + 2 * l != 2 * genus + 1 {
                return Err(Failure::usage(
                    format!("multidegree {md:?} is not (2g-2l+1, l) for g = {genus}"),
                    "use words with 2g+1 letters counting b twice",
                ));
            }
            VSpaceElement { g: genus, l, vector }
        }
    };
    Ok(Emitted::text(format!("{}\n", cx.d1(&x)?.format())))
}

fn run_certify(genus: u32) -> Result<Emitted, Failure> {
    match certify_nonvanishing(genus) {
        Ok(c) => Ok(Emitted {
            text: json_text(&c.to_json()),
            log: Some(c.log()),
            failed: None,
        }),
        Err(SpectralError::FailedCertificate(c)) => Ok(Emitted {
            text: json_text(&c.to_json()),
            log: Some(c.log()),
            failed: Some(format!("certificate failed: {}", c.failed_checks().join(", "))),
        }),
        Err(e) => Err(e.into()),
    }
}

fn run_tables(kind: Kind, n: Option<usize>, genus: Option<u32>) -> Result<Emitted, Failure> {
    let table = match (kind, n, genus) {
        (Kind::E1, Some(m), _) => e1_table(m)?,
        (Kind::F1, _, Some(g)) => f1_table(g)?,
        (Kind::E1, None, _) => return Err(Failure::usage("e1 needs --n", "e.g. tables --kind e1 --n 6")),
        (Kind::F1, _, None) => return Err(Failure::usage("f1 needs --genus", "e.g. tables --kind f1 --genus 3")),
    };
    let mut text = format!("# format: 1, kind: {}, m: {}\n", table.kind, table.m);
    text += &table.to_csv();
    let violations = table.bound_violations();
    Ok(Emitted {
        text,
        log: None,
        failed: (!violations.is_empty()).then(|| format!("cells outside the vanishing bounds: {violations:?}")),
    })
}

fn run_check(level: LevelArg) -> Emitted {
    let level = match level {
        LevelArg::Quick => Level::Quick,
        LevelArg::Full => Level::Full,
    };
    let outcomes = run_checks(level);
    let mut text = String::new();
    for o in &outcomes {
        let mark = if o.passed { "PASS" } else { "FAIL" };
        text += &format!("{mark} {}: {}\n", o.name, o.detail);
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name).collect();
    let timings: String = outcomes.iter().map(|o| format!("{}: {} ms\n", o.name, o.millis)).collect();
    Emitted {
        text,
        log: Some(timings),
        failed: (!failed.is_empty()).then(|| format!("failed checks: {}", failed.join(", "))),
    }
}

fn dispatch(cli: &Cli) -> Result<Emitted, Failure> {
    match &cli.command {
        Command::Enumerate { n, edges, orbits, good } => enumerate(*n, *edges, *orbits, *good),
        Command::Annotate(input) => {
            let t = load_tree(input)?;
            Ok(Emitted::text(json_text(&GraphRecord::from_annotated(&t).to_value())))
        }
        Command::Pushforward(input) => run_pushforward(&load_tree(input)?),
        Command::Lyndon { alphabet, degree } => {
            let alpha = GradedAlphabet::parse(alphabet)?;
            let md = parse_degree(degree)?;
            if md.len() != alpha.len() {
                return Err(Failure::usage(
                    format!("--degree has {} entries for {} letters", md.len(), alpha.len()),
                    "give one count per letter",
                ));
            }
            let lie = FreeLie::new(alpha.clone());
            let basis: Vec<Value> = lie
                .basis(&md)
                .iter()
                .map(|k| json!({"key": k.show(&alpha), "bracketing": k.to_expr().show(&alpha)}))
                .collect();
            Ok(Emitted::text(json_text(&json!({
                "format": 1,
                "alphabet": alpha.to_string(),
                "degree": md,
                "dimension": basis.len(),
                "basis": basis,
            }))))
        }
        Command::Normalize { alphabet, expr } => {
            let alpha = GradedAlphabet::parse(alphabet)?;
            let e = BracketExpr::parse(expr, &alpha)?;
            let v = FreeLie::new(alpha.clone()).normalize(&e)?;
            Ok(Emitted::text(format!("{}\n", v.format(&alpha))))
        }
        Command::D1 { genus, expr } => run_d1(*genus, expr.as_deref()),
        Command::Certify { genus } => run_certify(*genus),
        Command::Tables { kind, n, genus } => run_tables(*kind, *n, *genus),
        Command::Check { level } => Ok(run_check(*level)),
    }
}

fn configure_jobs(jobs: Option<usize>) -> Result<(), Failure> {
    let jobs = match jobs {
        Some(j) => Some(j),
        None => match std::env::var("HYPERSTRATA_JOBS") {
            Ok(s) => Some(s.trim().parse::<usize>().map_err(|_| {
                Failure::usage(format!("HYPERSTRATA_JOBS = '{s}'"), "set it to a positive integer")
            })?),
            Err(_) => None,
        },
    };
    if let Some(j) = jobs {
        if j == 0 {
            return Err(Failure::usage("--jobs 0", "use at least one worker"));
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = configure_jobs(cli.jobs).and_then(|_| dispatch(&cli));
    match result {
        Ok(out) => {
            if let Some(log) = &out.log {
                eprint!("{log}");
            }
            let written = match &cli.out {
                Some(path) => fs::write(path, &out.text).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            match out.failed {
                Some(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            if let Some(h) = f.hint {
                eprintln!("hint: {h}");
            }
            ExitCode::from(f.code)
        }
    }
}
