//! Single binary exposing the library's computations and identity checks
//! as subcommands, with text and JSON output.
//!
//! Exit codes: 0 success or verified, 1 verification failure (with a
//! counterexample report), 2 enumeration budget refusal, 64 usage error.

mod config;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hurwitz_core::cutjoin;
use hurwitz_core::oracle;
use hurwitz_core::perm::CycleType;
use hurwitz_core::rat::{format_rat, rat_int};
use hurwitz_core::rng::SplitMix64;
use hurwitz_core::spectral::{
    self, eval_sumsign, exp_r_part, hurwitz_closed, r_part, rho, tree_poly, TreeMethod,
};
use hurwitz_core::surfaces::{
    self, connected_multigraph_classes, decoration_sum, decorations, MultiGraph,
};
use hurwitz_core::wring::{collect, EdgeVar, WPolynomial};
use hurwitz_core::Error;

use config::RunConfig;

const EXIT_OK: i32 = 0;
const EXIT_FAILED: i32 = 1;
const EXIT_BUDGET: i32 = 2;
const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "hurwitz",
    about = "Exact Hurwitz polynomials of cycle factorizations, graph embeddings, and the identities relating them",
    version
)]
struct Cli {
    /// Output format (config key: format)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Enumeration budget in leaf visits (config key: budget)
    #[arg(long, global = true)]
    budget: Option<u128>,

    /// Worker threads; 0 picks the machine default (config key: threads)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Seed for randomized scans (config key: seed)
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Config file with key=value lines; default ./hurwitz.conf if present
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Cache directory memoizing enumerated polynomials as JSON
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the factorization polynomial for an n-cycle target, or a
    /// class target when --lambda is given
    HurwitzPoly {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        g: i64,
        /// Target cycle type, e.g. 2,1 (overrides --n with its weight)
        #[arg(long)]
        lambda: Option<String>,
    },
    /// The factorization count weighted by symmetry: P(1) / n!
    HurwitzNumber {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        g: i64,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// The labeled-tree polynomial
    TreePoly {
        #[arg(long)]
        n: usize,
        /// kirchhoff (reduced determinant) or pruefer (explicit sum)
        #[arg(long, default_value = "kirchhoff")]
        method: String,
    },
    /// The degree-2g part of det phi of the Laplacian (R), or of its log (r)
    Rgn {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        n: usize,
        /// Print as a combination of graph classes
        #[arg(long)]
        collect: bool,
        /// Which family: R (default) or r
        #[arg(long, default_value = "R")]
        kind: String,
    },
    /// Check the product formula: enumeration vs (n+2g-1)! T_n R_{g,n}
    VerifyDiv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: u32,
    },
    /// Closed form for the weighted count, with the series coefficient rho
    HurwitzClosed {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: u32,
    },
    /// Embedding counts of a multigraph: total, one-faced, face histogram
    Embeddings {
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Inline edge list, e.g. "1-2;1-2;2-3" (loops as "1-1")
        #[arg(long)]
        edges: Option<String>,
    },
    /// Enumerate decorations of a multigraph and their weight sum
    Decorations {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        edges: Option<String>,
    },
    /// Check decoration_sum * embeddings = one-faced count
    VerifySpiders {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        edges: Option<String>,
        /// Sweep every connected multigraph up to --max-edges instead
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
    },
    /// Check the cut-and-join equation on a truncation
    VerifyCutjoin {
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
        /// Report format; alias for --format
        #[arg(long, value_enum)]
        report: Option<Format>,
    },
    /// Numeric eigenvalue cross-check of the signed-sum formula
    Sumsign {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: u32,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Relative tolerance
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Scan collected R coefficients for a negative one
    PositivityScan {
        #[arg(long)]
        g_max: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        /// Exit 1 when a counterexample is found
        #[arg(long)]
        strict: bool,
    },
}

fn main() {
    // Die quietly when stdout is a closed pipe (e.g. piped into head).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::FacesCyclesMismatch(_) => EXIT_FAILED,
        Error::Parse(_)
        | Error::BadCycleType(_)
        | Error::VertexRange(..)
        | Error::InvalidTask(_) => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

fn run(cli: Cli) -> i32 {
    let cfg = match RunConfig::resolve(
        cli.config.as_deref(),
        cli.budget,
        cli.threads,
        cli.seed,
        cli.format.map(|f| matches!(f, Format::Json)),
    ) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    if cfg.threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build_global();
    }
    match dispatch(&cli, &cfg) {
        Ok(code) => code,
        Err(err) => {
            let code = exit_code_for(&err);
            if code == EXIT_BUDGET {
                eprintln!("refused: {err}");
            } else {
                eprintln!("error: {err}");
            }
            code
        }
    }
}

fn parse_lambda(s: &str) -> hurwitz_core::Result<CycleType> {
    CycleType::parse(s)
}

fn load_graph(path: Option<&PathBuf>, edges: Option<&String>) -> hurwitz_core::Result<MultiGraph> {
    match (path, edges) {
        (Some(p), None) => {
            let text = fs::read_to_string(p)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display())))?;
            MultiGraph::parse(&text)
        }
        (None, Some(s)) => MultiGraph::parse(s),
        _ => Err(Error::Parse(
            "give exactly one of --graph FILE or --edges LIST".into(),
        )),
    }
}

/// Fetch a memoized polynomial or compute and store it.
fn oracle_poly_cached(
    cache: Option<&PathBuf>,
    lambda: Option<&CycleType>,
    n: usize,
    g: i64,
    budget: u128,
) -> hurwitz_core::Result<WPolynomial> {
    let key = match lambda {
        Some(l) => format!(
            "poly_lambda{}_g{}.json",
            l.parts()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("-"),
            g
        ),
        None => format!("poly_n{n}_g{g}.json"),
    };
    if let Some(dir) = cache {
        let path = dir.join(&key);
        if let Ok(text) = fs::read_to_string(&path) {
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("bad cache file {}: {e}", path.display())))?;
            return WPolynomial::from_json(&value);
        }
    }
    let poly = match lambda {
        Some(l) => oracle::hurwitz_poly_lambda(l, g, budget)?,
        None => {
            if g < 0 {
                return Err(Error::InvalidTask(
                    "the n-cycle target needs g >= 0; use --lambda for negative genus".into(),
                ));
            }
            oracle::hurwitz_poly(n, g as u32, budget)?
        }
    };
    if let Some(dir) = cache {
        let _ = fs::create_dir_all(dir);
        let _ = fs::write(dir.join(&key), serde_json::to_string_pretty(&poly.to_json()).unwrap());
    }
    Ok(poly)
}

fn require_n(n: Option<usize>, lambda: Option<&CycleType>) -> hurwitz_core::Result<usize> {
    match (n, lambda) {
        (_, Some(l)) => Ok(l.n()),
        (Some(n), None) if n >= 1 => Ok(n),
        _ => Err(Error::Parse("--n (or --lambda) is required".into())),
    }
}

fn print_poly(p: &WPolynomial, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&p.to_json()).unwrap());
    } else {
        println!("{p}");
    }
}

fn dispatch(cli: &Cli, cfg: &RunConfig) -> hurwitz_core::Result<i32> {
    let json = cfg.json;
    match &cli.command {
        Command::HurwitzPoly { n, g, lambda } => {
            let lambda = lambda.as_deref().map(parse_lambda).transpose()?;
            let n = require_n(*n, lambda.as_ref())?;
            let p = oracle_poly_cached(cli.cache.as_ref(), lambda.as_ref(), n, *g, cfg.budget)?;
            print_poly(&p, json);
            Ok(EXIT_OK)
        }
        Command::HurwitzNumber { n, g, lambda } => {
            let lambda = lambda.as_deref().map(parse_lambda).transpose()?;
            let n = require_n(*n, lambda.as_ref())?;
            let p = oracle_poly_cached(cli.cache.as_ref(), lambda.as_ref(), n, *g, cfg.budget)?;
            let h = p.eval_ones() / hurwitz_core::rat::factorial_rat(n);
            if json {
                println!("{}", json!({ "n": n, "g": g, "h": format_rat(&h) }));
            } else {
                println!("{}", format_rat(&h));
            }
            Ok(EXIT_OK)
        }
        Command::TreePoly { n, method } => {
            let method = match method.as_str() {
                "kirchhoff" => TreeMethod::Kirchhoff,
                "pruefer" => TreeMethod::Pruefer,
                other => return Err(Error::Parse(format!("unknown method {other:?}"))),
            };
            if *n < 1 {
                return Err(Error::Parse("--n must be positive".into()));
            }
            print_poly(&tree_poly(*n, method), json);
            Ok(EXIT_OK)
        }
        Command::Rgn { g, n, collect: do_collect, kind } => {
            let poly = match kind.as_str() {
                "R" => exp_r_part(*g, *n),
                "r" => r_part(*g, *n),
                other => return Err(Error::Parse(format!("unknown kind {other:?}, want r or R"))),
            };
            if *do_collect {
                let series = collect(&poly)?;
                if json {
                    println!("{}", serde_json::to_string_pretty(&series.to_json()).unwrap());
                } else {
                    println!("{series}");
                }
            } else {
                print_poly(&poly, json);
            }
            Ok(EXIT_OK)
        }
        Command::VerifyDiv { n, g } => {
            let check = spectral::verify_div(*n, *g, cfg.budget)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "n": n,
                        "g": g,
                        "equal": check.equal,
                        "difference": check.difference.to_json(),
                    })
                );
            } else if check.equal {
                println!(
                    "verified: enumeration equals (n+2g-1)! T_n R_g at n={n}, g={g} ({} terms)",
                    check.enumerated.num_terms()
                );
            } else {
                println!("FAILED at n={n}, g={g}; difference = {}", check.difference);
            }
            Ok(if check.equal { EXIT_OK } else { EXIT_FAILED })
        }
        Command::HurwitzClosed { n, g } => {
            let h = hurwitz_closed(*g, *n);
            let r = rho(*g, *n);
            if json {
                println!(
                    "{}",
                    json!({ "n": n, "g": g, "h": format_rat(&h), "rho": format_rat(&r) })
                );
            } else {
                println!("h = {}   (rho = {})", format_rat(&h), format_rat(&r));
            }
            Ok(EXIT_OK)
        }
        Command::Embeddings { graph, edges } => {
            let g = load_graph(graph.as_ref(), edges.as_ref())?;
            let hist = surfaces::face_count_distribution(&g, cfg.budget)?;
            let one_faced = hist.get(&1).copied().unwrap_or(0);
            if json {
                println!(
                    "{}",
                    json!({
                        "v": g.v(),
                        "edges": g.edge_count(),
                        "beta1": g.beta1(),
                        "emb": g.emb_count().to_string(),
                        "one_faced": one_faced,
                        "faces_histogram": hist
                            .iter()
                            .map(|(f, c)| json!({ "faces": f, "count": c }))
                            .collect::<Vec<_>>(),
                    })
                );
            } else {
                println!("graph {g}: v={}, e={}, beta1={}", g.v(), g.edge_count(), g.beta1());
                println!("embeddings: {}", g.emb_count());
                for (f, c) in &hist {
                    println!("  {f} faces: {c}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Decorations { graph, edges } => {
            let g = load_graph(graph.as_ref(), edges.as_ref())?;
            let decs = decorations(&g)?;
            let sum = decoration_sum(&g)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "count": decs.len(),
                        "sum": format_rat(&sum),
                        "decorations": decs
                            .iter()
                            .map(|d| json!({
                                "weight": format_rat(&d.weight),
                                "chosen": d
                                    .chosen
                                    .iter()
                                    .map(|(v, hs)| json!({ "vertex": v, "half_edges": hs }))
                                    .collect::<Vec<_>>(),
                            }))
                            .collect::<Vec<_>>(),
                    })
                );
            } else {
                println!("{} decorations, weight sum {}", decs.len(), format_rat(&sum));
                for d in &decs {
                    let parts: Vec<String> = d
                        .chosen
                        .iter()
                        .map(|(v, hs)| format!("vertex {v}: half-edges {hs:?}"))
                        .collect();
                    println!("  weight {}: {}", format_rat(&d.weight), parts.join("; "));
                }
            }
            Ok(EXIT_OK)
        }
        Command::VerifySpiders { graph, edges, exhaustive, max_edges } => {
            if *exhaustive {
                let classes = connected_multigraph_classes(*max_edges, true, Some(&[2, 4]));
                let mut failures = Vec::new();
                for class in &classes {
                    let report = surfaces::verify_spiders(class, cfg.budget)?;
                    if !report.check {
                        failures.push((class.edges_string(), report));
                    }
                }
                if json {
                    println!(
                        "{}",
                        json!({
                            "classes": classes.len(),
                            "failures": failures
                                .iter()
                                .map(|(g, r)| json!({ "graph": g, "report": r.to_json() }))
                                .collect::<Vec<_>>(),
                        })
                    );
                } else if failures.is_empty() {
                    println!(
                        "verified: decoration identity holds on all {} classes (<= {max_edges} edges)",
                        classes.len()
                    );
                } else {
                    for (g, r) in &failures {
                        println!(
                            "FAILED on {g}: {} * {} != {}",
                            format_rat(&r.decoration_sum),
                            r.emb,
                            r.one_faced
                        );
                    }
                }
                Ok(if failures.is_empty() { EXIT_OK } else { EXIT_FAILED })
            } else {
                let g = load_graph(graph.as_ref(), edges.as_ref())?;
                let report = surfaces::verify_spiders(&g, cfg.budget)?;
                if json {
                    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
                } else if report.check {
                    println!(
                        "verified: {} x {} = {}",
                        format_rat(&report.decoration_sum),
                        report.emb,
                        report.one_faced
                    );
                } else {
                    println!(
                        "FAILED: {} x {} != {}",
                        format_rat(&report.decoration_sum),
                        report.emb,
                        report.one_faced
                    );
                }
                Ok(if report.check { EXIT_OK } else { EXIT_FAILED })
            }
        }
        Command::VerifyCutjoin { n_max, m_max, report } => {
            let json = match report {
                Some(f) => matches!(f, Format::Json),
                None => json,
            };
            let n_max = n_max.unwrap_or(cfg.n_max);
            let m_max = m_max.unwrap_or(cfg.m_max);
            let report = cutjoin::verify_cutjoin(n_max, m_max, cfg.budget)?;
            if json {
                let diff = report.first_diff.as_ref().map(|(l, m, a, b)| {
                    json!({
                        "lambda": l.to_string(),
                        "monomial": m.edges_string(),
                        "derivative_side": format_rat(a),
                        "operator_side": format_rat(b),
                    })
                });
                println!(
                    "{}",
                    json!({
                        "n_max": n_max,
                        "m_max": m_max,
                        "equal": report.equal,
                        "first_diff": diff,
                    })
                );
            } else if report.equal {
                println!("verified: cut-and-join exact on n_max={n_max}, m_max={m_max}");
            } else {
                let (l, m, a, b) = report.first_diff.as_ref().unwrap();
                println!(
                    "FAILED: first differing coefficient at p[{l}] {m}: {} vs {}",
                    format_rat(a),
                    format_rat(b)
                );
            }
            Ok(if report.equal { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Sumsign { n, g, trials, tol } => {
            let exact = oracle::hurwitz_poly(*n, *g, cfg.budget)?;
            let tree = tree_poly(*n, TreeMethod::Kirchhoff);
            let mut rng = SplitMix64::new(cfg.seed);
            let mut worst = 0.0f64;
            let mut worst_kirchhoff = 0.0f64;
            let mut warnings = 0usize;
            for _ in 0..*trials {
                let mut assign = BTreeMap::new();
                for i in 1..*n {
                    for j in i + 1..=*n {
                        assign.insert(EdgeVar::new(i, j).unwrap(), rng.positive_rat(9));
                    }
                }
                let report = eval_sumsign(*n, *g, &assign, &exact, &tree)?;
                worst = worst.max(report.rel_err);
                worst_kirchhoff = worst_kirchhoff.max(report.kirchhoff_rel_err);
                if report.multiplicity_warning {
                    warnings += 1;
                }
            }
            let ok = worst < *tol && worst_kirchhoff < *tol;
            if json {
                println!(
                    "{}",
                    json!({
                        "n": n,
                        "g": g,
                        "trials": trials,
                        "seed": cfg.seed,
                        "worst_rel_err": worst,
                        "worst_product_rel_err": worst_kirchhoff,
                        "multiplicity_warnings": warnings,
                        "ok": ok,
                    })
                );
            } else {
                println!(
                    "{} trials at n={n}, g={g}: worst rel err {worst:.3e}, worst product rel err {worst_kirchhoff:.3e}{}",
                    trials,
                    if warnings > 0 {
                        format!(" ({warnings} near-multiplicity warnings)")
                    } else {
                        String::new()
                    }
                );
                println!("{}", if ok { "verified" } else { "FAILED" });
            }
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::PositivityScan { g_max, n_max, strict } => {
            let g_max = g_max.unwrap_or(cfg.g_max);
            let n_max = n_max.unwrap_or(5.max(cfg.n_max));
            let mut scanned = 0usize;
            let mut counterexamples = Vec::new();
            for g in 1..=g_max {
                for n in 2..=n_max {
                    let series = collect(&exp_r_part(g, n))?;
                    for (class, c) in series.terms() {
                        scanned += 1;
                        if c <= &rat_int(0) {
                            counterexamples.push((g, n, class.edges_string(), format_rat(c)));
                        }
                    }
                }
            }
            if json {
                println!(
                    "{}",
                    json!({
                        "g_max": g_max,
                        "n_max": n_max,
                        "coefficients_scanned": scanned,
                        "counterexamples": counterexamples
                            .iter()
                            .map(|(g, n, class, c)| json!({
                                "g": g, "n": n, "class": class, "coeff": c,
                            }))
                            .collect::<Vec<_>>(),
                    })
                );
            } else if counterexamples.is_empty() {
                println!("all {scanned} collected R coefficients positive (g <= {g_max}, n <= {n_max})");
            } else {
                for (g, n, class, c) in &counterexamples {
                    println!("NEGATIVE coefficient {c} of {class} in R (g={g}, n={n})");
                }
            }
            Ok(if counterexamples.is_empty() || !*strict {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
    }
}
