//! Command-line front end: certificate and lemma suites, discharging replay,
//! corpus scans, and catalog export.

use clap::{Parser, Subcommand};
use square7_core::catalog::{build_config, export_catalog};
use square7_core::discharge::verify_graph_discharge;
use square7_core::embed::PlaneGraph;
use square7_core::lemmas::{verify_lemma, DEFAULT_SEED, DEFAULT_TRIALS};
use square7_core::listcolor::CheckMode;
use square7_core::localcases::local_case_report;
use square7_core::nullstellensatz::{coefficient, identity_order};
use square7_core::poly::Monomial;
use square7_core::scan::{scan_corpus, ScanOptions};
use square7_core::suite::run_suite;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "square7",
    about = "verification toolkit for list coloring squares of subcubic planar graphs",
    version
)]
struct Cli {
    /// write the report to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficient of a monomial in the graph polynomial of a configuration's square
    Coeff {
        /// catalog name, e.g. H3 or H5
        config: String,
        /// comma-separated exponent vector, e.g. 2,1,2,4,4,5,2,3,4,2,1
        monomial: String,
    },
    /// Run the nonzero-coefficient certificate suite of a lemma
    Certify {
        /// lemma id: reducible-H3 or reducible-H6
        lemma: String,
    },
    /// Verify one lemma (exhaustive, sampled, or certificate-based)
    Lemma {
        id: String,
        /// force exhaustive or sampled case checking
        #[arg(long)]
        mode: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Replay the local charge case analysis or a whole embedded graph
    Discharge {
        /// center face length for local enumeration (3..=12)
        #[arg(long)]
        local: Option<usize>,
        /// planar_code file with embedded graphs
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Scan a graph6 corpus for the hypothesis class and check squares
    Scan {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// print a human summary table instead of records
        #[arg(long)]
        summary: bool,
    },
    /// Run a named suite: certificates, lemmas, discharging, all
    Suite { name: String },
    /// Export the configuration catalog as text
    Catalog,
}

fn emit(out: &Option<PathBuf>, content: &str) {
    match out {
        Some(path) => fs::write(path, content).expect("write report"),
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Coeff { config, monomial } => {
            let cfg = match build_config(&config) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::FAILURE;
                }
            };
            let exps: Result<Vec<u8>, _> = monomial.split(',').map(|s| s.trim().parse()).collect();
            let exps = match exps {
                Ok(v) => v,
                Err(e) => {
                    eprintln!("bad monomial: {e}");
                    return ExitCode::FAILURE;
                }
            };
            let square = cfg.pattern.square();
            if exps.len() != square.n() {
                eprintln!(
                    "monomial has {} exponents, {} has {} vertices",
                    exps.len(),
                    config,
                    square.n()
                );
                return ExitCode::FAILURE;
            }
            let order = identity_order(square.n());
            let started = Instant::now();
            match coefficient(&square, &order, &Monomial(exps.clone())) {
                Ok(c) => {
                    emit(
                        &cli.out,
                        &format!(
                            "{}\n",
                            serde_json::json!({
                                "config": config,
                                "monomial": exps,
                                "coefficient": c,
                            })
                        ),
                    );
                    eprintln!("computed in {:?}", started.elapsed());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::FAILURE
                }
            }
        }
        Command::Certify { lemma } => {
            match square7_core::nullstellensatz::certificate_suite(&lemma) {
                Ok(certs) => {
                    let mut content = String::new();
                    for c in &certs {
                        content.push_str(&square7_core::nullstellensatz::certificate_record(c));
                        content.push('\n');
                    }
                    let ok = certs.iter().all(|c| c.passed());
                    emit(&cli.out, &content);
                    eprintln!(
                        "{}: {} certificates, {}",
                        lemma,
                        certs.len(),
                        if ok { "all pass" } else { "FAILURES PRESENT" }
                    );
                    if ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::FAILURE
                    }
                }
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::FAILURE
                }
            }
        }
        Command::Lemma {
            id,
            mode,
            trials,
            seed,
        } => {
            let mode_override = match mode.as_deref() {
                None => None,
                Some("exhaustive") => Some(CheckMode::Exhaustive),
                Some("sampled") => Some(CheckMode::Sampled { trials, seed }),
                Some(other) => {
                    eprintln!("unknown mode {other}; use exhaustive or sampled");
                    return ExitCode::FAILURE;
                }
            };
            let started = Instant::now();
            match verify_lemma(&id, mode_override) {
                Ok(rep) => {
                    let mut content = String::new();
                    for c in &rep.certificates {
                        content.push_str(&square7_core::nullstellensatz::certificate_record(c));
                        content.push('\n');
                    }
                    for case in &rep.cases {
                        content.push_str(&serde_json::to_string(case).unwrap());
                        content.push('\n');
                    }
                    emit(&cli.out, &content);
                    eprintln!(
                        "{id}: {} in {:?}",
                        if rep.passed() { "pass" } else { "FAIL" },
                        started.elapsed()
                    );
                    if rep.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::FAILURE
                    }
                }
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::FAILURE
                }
            }
        }
        Command::Discharge { local, graph } => {
            let mut content = String::new();
            let mut ok = true;
            match (local, graph) {
                (Some(d), None) => {
                    if !(3..=12).contains(&d) {
                        eprintln!("--local takes a face length in 3..=12");
                        return ExitCode::FAILURE;
                    }
                    let r = local_case_report(d);
                    content.push_str(&serde_json::to_string(&r).unwrap());
                    content.push('\n');
                }
                (None, Some(path)) => {
                    let data = match fs::read(&path) {
                        Ok(d) => d,
                        Err(e) => {
                            eprintln!("cannot read {}: {e}", path.display());
                            return ExitCode::FAILURE;
                        }
                    };
                    let graphs = match PlaneGraph::from_planar_code(&data) {
                        Ok(g) => g,
                        Err(e) => {
                            eprintln!("{e}");
                            return ExitCode::FAILURE;
                        }
                    };
                    for (i, pg) in graphs.iter().enumerate() {
                        let result = verify_graph_discharge(pg);
                        let value = match &result {
                            Ok(rep) => serde_json::json!({"index": i, "report": rep}),
                            Err(v) => serde_json::json!({"index": i, "hypothesis_violation": v}),
                        };
                        content.push_str(&serde_json::to_string(&value).unwrap());
                        content.push('\n');
                        if result.is_ok() {
                            // a surviving input would contradict the verified analysis
                            ok = false;
                        }
                    }
                }
                _ => {
                    eprintln!("discharge needs exactly one of --local or --graph");
                    return ExitCode::FAILURE;
                }
            }
            emit(&cli.out, &content);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Scan {
            file,
            jobs,
            summary,
        } => {
            let input = match fs::read_to_string(&file) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("cannot read {}: {e}", file.display());
                    return ExitCode::FAILURE;
                }
            };
            let started = Instant::now();
            match scan_corpus(
                &input,
                &ScanOptions {
                    jobs,
                    ..Default::default()
                },
            ) {
                Ok(records) => {
                    let mut content = String::new();
                    if summary {
                        content.push_str(&format!(
                            "{:>6}  {:<26} {:>4} {:>6} {:>8} {:>5}\n",
                            "line", "outcome", "n", "edges", "chi(G^2)", "pass"
                        ));
                        for r in &records {
                            content.push_str(&format!(
                                "{:>6}  {:<26} {:>4} {:>6} {:>8} {:>5}\n",
                                r.index,
                                r.outcome,
                                r.n.map_or("-".into(), |v| v.to_string()),
                                r.edges.map_or("-".into(), |v| v.to_string()),
                                r.chi_square.map_or("-".into(), |v| v.to_string()),
                                r.pass.map_or("-".into(), |v| v.to_string()),
                            ));
                        }
                    } else {
                        for r in &records {
                            content.push_str(&serde_json::to_string(r).unwrap());
                            content.push('\n');
                        }
                    }
                    emit(&cli.out, &content);
                    eprintln!("scanned {} graphs in {:?}", records.len(), started.elapsed());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::FAILURE
                }
            }
        }
        Command::Suite { name } => {
            let started = Instant::now();
            match run_suite(&name, None) {
                Some(result) => {
                    emit(&cli.out, &result.report);
                    eprintln!(
                        "suite {name}: {} in {:?}",
                        if result.ok { "pass" } else { "FAIL" },
                        started.elapsed()
                    );
                    if let Some(f) = &result.first_failure {
                        eprintln!("first failing item: {f}");
                    }
                    if result.ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::FAILURE
                    }
                }
                None => {
                    eprintln!("unknown suite {name}; use certificates, lemmas, discharging, all");
                    ExitCode::FAILURE
                }
            }
        }
        Command::Catalog => {
            emit(&cli.out, &export_catalog());
            ExitCode::SUCCESS
        }
    }
}
