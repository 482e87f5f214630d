//! Command-line front end: graph analysis reports, generators for the
//! structured families, the verification harness, and direct access to
//! the sign-pattern oracle.
//!
//! Exit codes: 0 success, 1 verification failures, 2 input/parameter
//! errors, 3 internal inconsistency.

mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fiedler::graph::Graph;
use fiedler::harness::{run_suite, HarnessConfig, SuiteOutcome, SUITE_NAMES};
use fiedler::join_theory::{
    classify_imbalance, extremal_kjoin, fiedler_multiplicity, recognize_kjoin,
};
use fiedler::regular::decide_imbalance_two;
use fiedler::sign_oracle::{bisection_report_seeded, enumerate_sign_cells_opts};
use fiedler::spectra::{adjacency_spectrum, algebraic_connectivity, fiedler_eigenspace};
use fiedler::three_eigs::{self, ThreeEigsForm};
use fiedler::threshold::{build_threshold, is_threshold, CreationSequence};
use fiedler::Error as CoreError;
use report::*;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fiedler",
    version,
    about = "Sign-pattern imbalance of Fiedler vectors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a graph: spectra, imbalance verdict with certificate,
    /// join decomposition, regular imbalance-2 decision, bisection
    /// balance. Emits a JSON report on stdout.
    Analyze(AnalyzeArgs),
    /// Generate a structured graph and print its graph6 encoding.
    Generate(GenerateArgs),
    /// Run verification suites over internal corpora (and an optional
    /// external graph6 corpus).
    Verify(VerifyArgs),
    /// Enumerate the achievable sign patterns of an eigenspace.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Read the graph from this file instead of stdin.
    #[arg(long)]
    file: Option<std::path::PathBuf>,
    /// Input format; `auto` sniffs edge-list headers.
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Auto,
    Graph6,
    Edges,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Seed for the randomized stages of the bisection search.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    kind: GenerateKind,
}

#[derive(Subcommand)]
enum GenerateKind {
    /// Extremal k-join with exactly ELL minimum-degree vertices.
    Kjoin { ell: usize, k: usize },
    /// Threshold graph from a creation sequence over {i, d}, e.g. iiid.
    Threshold { sequence: String },
    /// K_p joined with q copies of N_r.
    ThreeEigs { p: usize, q: usize, r: usize },
    /// Named family: complete | empty | cycle | path | cocktail | star.
    Named { family: String, param: usize },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// External graph6 corpus file folded into the sweeps.
    #[arg(long)]
    corpus: Option<std::path::PathBuf>,
    /// Seed for the randomized sweeps.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit a JSON summary instead of text lines.
    #[arg(long)]
    json: bool,
    /// List the available suites and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Enumerate over the least-adjacency eigenspace instead of the
    /// Fiedler eigenspace.
    #[arg(long)]
    least_adjacency: bool,
    /// Seed for the randomized enumeration stages.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sign-classification tolerance, relative to max |entry|.
    #[arg(long, default_value_t = fiedler::spectra::SIGN_TOL)]
    tol: f64,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e.downcast_ref::<CoreError>() {
                Some(CoreError::Inconsistency(_)) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

type AnyError = Box<dyn std::error::Error>;

fn run(cli: Cli) -> Result<ExitCode, AnyError> {
    match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Generate(args) => generate(args),
        Command::Verify(args) => verify(args),
        Command::Oracle(args) => oracle(args),
    }
}

fn read_graph(input: &InputArgs) -> Result<Graph, AnyError> {
    let text = match &input.file {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut buffer = String::new();
            std::io::stdin().read_to_string(&mut buffer)?;
            buffer
        }
    };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err("empty input".into());
    }
    let graph = match input.format {
        Format::Graph6 => Graph::parse_graph6(trimmed.lines().next().unwrap_or_default())?,
        Format::Edges => Graph::parse_edge_list(trimmed)?,
        Format::Auto => {
            // An edge list starts with a bare vertex count.
            let first = trimmed.lines().next().unwrap_or_default().trim();
            if first.parse::<usize>().is_ok() {
                Graph::parse_edge_list(trimmed)?
            } else {
                Graph::parse_graph6(first)?
            }
        }
    };
    Ok(graph)
}

fn analyze(args: AnalyzeArgs) -> Result<ExitCode, AnyError> {
    let g = read_graph(&args.input)?;
    if g.n() < 2 {
        return Err("analysis needs at least two vertices".into());
    }
    let ac = algebraic_connectivity(&g)?;
    let cert = classify_imbalance(&g)?;
    cert.revalidate(&g)?;

    let regular = match g.regular_degree() {
        Some(r) if g.is_connected() => {
            let decision = decide_imbalance_two(&g)?;
            Some((r, decision))
        }
        _ => None,
    };
    let regular_two = regular.as_ref().map(|(_, c)| c.yes);
    let verdict = verdict_string(cert.verdict, regular_two);

    let kjoin = if g.is_connected() && !g.is_complete() {
        match recognize_kjoin(&g)? {
            Some(d) => {
                let formula = fiedler_multiplicity(&d, g.n())?;
                if formula != ac.multiplicity {
                    return Err(CoreError::Inconsistency(format!(
                        "multiplicity formula {formula} vs spectral {}",
                        ac.multiplicity
                    ))
                    .into());
                }
                Some(kjoin_report(&d, formula))
            }
            None => None,
        }
    } else {
        None
    };

    let (three, three_status) = if g.is_connected() && !g.is_complete() {
        let form = three_eigs::recognize(&g)?.map(|form| ThreeEigsReport {
            p: form.p,
            q: form.q,
            r: form.r,
            alpha: form.alpha(),
            multiplicity: form.multiplicity(),
            clique_number: form.clique_number(),
        });
        let status = match three_eigs::spectral_triple_status(&g)? {
            three_eigs::SpectralTriple::WithLargestN => Some("largest-n".to_string()),
            three_eigs::SpectralTriple::LargestBelowN => Some("non-join".to_string()),
            three_eigs::SpectralTriple::Other => None,
        };
        (form, status)
    } else {
        (None, None)
    };

    let bisection = if g.is_connected() {
        Some(BisectionSummary::from(&bisection_report_seeded(
            &g, args.seed,
        )?))
    } else {
        None
    };

    let report = AnalyzeReport {
        graph6: g.to_graph6(),
        n: g.n(),
        edge_count: g.edge_count(),
        min_degree: g.min_degree(),
        regular_degree: g.regular_degree(),
        tolerances: Tolerances::default(),
        alpha: AlphaReport {
            value: ac.alpha,
            multiplicity: ac.multiplicity,
        },
        imbalance: imbalance_report(&cert, verdict),
        kjoin,
        three_eigenvalues: three,
        three_eigenvalue_status: three_status,
        regular: regular.map(|(r, c)| regular_report(r, &c)),
        bisection,
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(ExitCode::SUCCESS)
}

fn generate(args: GenerateArgs) -> Result<ExitCode, AnyError> {
    let g = match args.kind {
        GenerateKind::Kjoin { ell, k } => {
            let g = extremal_kjoin(ell, k)?;
            // self-check through the recognizer
            let d = recognize_kjoin(&g)?.ok_or_else(|| {
                CoreError::Inconsistency("generated k-join not recognized".into())
            })?;
            if d.k != k || d.ell != ell {
                return Err(CoreError::Inconsistency(format!(
                    "generated k-join recognized as (ell={}, k={})",
                    d.ell, d.k
                ))
                .into());
            }
            g
        }
        GenerateKind::Threshold { sequence } => {
            let seq = CreationSequence::parse(&sequence)?;
            let g = build_threshold(&seq)?;
            if is_threshold(&g).is_none() {
                return Err(
                    CoreError::Inconsistency("generated threshold not recognized".into()).into(),
                );
            }
            g
        }
        GenerateKind::ThreeEigs { p, q, r } => {
            let form = ThreeEigsForm { p, q, r };
            let g = form.build()?;
            let recognized = three_eigs::recognize(&g)?
                .ok_or_else(|| CoreError::Inconsistency("generated form not recognized".into()))?;
            if recognized != form {
                return Err(CoreError::Inconsistency("generated form mismatch".into()).into());
            }
            g
        }
        GenerateKind::Named { family, param } => match family.as_str() {
            "complete" => Graph::complete(param),
            "empty" => Graph::empty(param),
            "cycle" => Graph::cycle(param)?,
            "path" => Graph::path(param)?,
            "cocktail" => Graph::cocktail(param)?,
            "star" => Graph::star(param)?,
            other => return Err(format!("unknown family {other:?}").into()),
        },
    };
    println!("{}", g.to_graph6());
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode, AnyError> {
    if args.list {
        for name in SUITE_NAMES {
            println!("{name}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let corpus = match &args.corpus {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            text.lines()
                .filter(|l| !l.trim().is_empty())
                .map(Graph::parse_graph6)
                .collect::<Result<Vec<_>, _>>()?
        }
        None => Vec::new(),
    };
    let config = HarnessConfig {
        seed: args.seed,
        corpus,
    };
    let outcomes: Vec<SuiteOutcome> = if args.suite == "all" {
        let mut results = Vec::new();
        for name in SUITE_NAMES {
            results.push(run_suite(name, &config)?);
        }
        results
    } else {
        vec![run_suite(&args.suite, &config)?]
    };
    let mut all_passed = true;
    if args.json {
        let reports: Vec<SuiteReport> = outcomes
            .iter()
            .map(|o| SuiteReport {
                suite: o.name.to_string(),
                cases: o.cases,
                passed: o.passed(),
                failures: o.failures.clone(),
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&reports)?);
        all_passed = outcomes.iter().all(|o| o.passed());
    } else {
        for o in &outcomes {
            let status = if o.passed() { "PASS" } else { "FAIL" };
            println!("[{status}] {} ({} cases)", o.name, o.cases);
            for failure in &o.failures {
                println!("    {failure}");
            }
            all_passed &= o.passed();
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn oracle(args: OracleArgs) -> Result<ExitCode, AnyError> {
    let g = read_graph(&args.input)?;
    if g.n() < 2 {
        return Err("oracle needs at least two vertices".into());
    }
    let (matrix, eigenvalue, basis) = if args.least_adjacency {
        let spectrum = adjacency_spectrum(&g)?;
        let group = spectrum.smallest();
        (
            "adjacency-least".to_string(),
            group.value,
            group.basis.clone(),
        )
    } else {
        let (alpha, basis) = fiedler_eigenspace(&g)?;
        ("laplacian-fiedler".to_string(), alpha, basis)
    };
    let cells = enumerate_sign_cells_opts(&basis, args.seed, args.tol)?;
    let (min, _, coeffs) = cells.min_imbalance();
    let witness: Vec<f64> = {
        let mut x = vec![0.0; g.n()];
        for (k, b) in basis.iter().enumerate() {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += coeffs[k] * bi;
            }
        }
        x
    };
    let report = OracleReport {
        graph6: g.to_graph6(),
        matrix,
        eigenvalue,
        dimension: cells.dim,
        exact: cells.exact,
        pattern_count: cells.patterns.len(),
        min_imbalance: min,
        witness,
        achievable_imbalances: cells.imbalances().into_iter().collect(),
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(ExitCode::SUCCESS)
}
