use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use crsphere::suite::{self, AnalyzeOptions, SuiteConfig};

#[derive(Parser)]
#[command(name = "crsphere", version, about = "Exact CR calculus on odd-dimensional spheres")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a JSON report.
    Verify {
        /// TOML file with keys n, degree, suites, samples, seed, output.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        degree: Option<u32>,
        /// Comma-separated: ring, spectral, frames, variation, oracle3, all.
        #[arg(long, value_delimiter = ',')]
        suites: Option<Vec<String>>,
        /// Monte-Carlo samples (0 disables the floating-point check).
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Analyze a deformation file.
    Analyze {
        file: PathBuf,
        /// Cross-check against the S^3 structure-equation oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print sub-Laplacian eigenvalues and conformal Hessian factors.
    Spectrum {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
    /// Print the normalization conventions in force.
    Conventions {
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

fn write_json<T: serde::Serialize>(value: &T, path: Option<&PathBuf>) -> crsphere::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    match path {
        Some(p) => std::fs::write(p, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> crsphere::Result<bool> {
    match cli.command {
        Command::Verify { config, n, degree, suites, samples, seed, output } => {
            let mut cfg = match config {
                Some(p) => SuiteConfig::load(&p)?,
                None => SuiteConfig::default(),
            };
            cfg.n = n.unwrap_or(cfg.n);
            cfg.degree = degree.unwrap_or(cfg.degree);
            cfg.suites = suites.unwrap_or(cfg.suites);
            cfg.samples = samples.unwrap_or(cfg.samples);
            cfg.seed = seed.or(cfg.seed);
            cfg.output = output.or(cfg.output);
            let report = suite::run_suite(&cfg)?;
            for s in &report.suites {
                println!("{:<10} {} ({} cases, {} failed)", s.name, verdict(s.pass), s.cases, s.failures);
                for f in s.records.iter().filter(|r| !r.pass).take(5) {
                    println!("    {} [{}]: expected {}, got {}", f.name, f.input, f.expected, f.actual);
                }
            }
            if let Some(mc) = &report.monte_carlo {
                let bad = mc.records.iter().filter(|r| !r.within_3se).count();
                println!("montecarlo {} ({} samples, {} outside 3 SE, informational)", verdict(mc.pass), mc.samples, bad);
            }
            match &cfg.output {
                Some(p) => {
                    write_json(&report, Some(p))?;
                    println!("report written to {}", p.display());
                }
                None => println!("no output path given; report not written"),
            }
            Ok(report.pass)
        }
        Command::Analyze { file, oracle, output } => {
            let report = suite::analyze_deformation(&file, &AnalyzeOptions { oracle })?;
            write_json(&report, output.as_ref())?;
            Ok(report.pass)
        }
        Command::Spectrum { n, degree } => {
            let sp = suite::spectrum(n, degree);
            println!("{:>3} {:>3} lambda", "p", "q");
            for row in &sp.table {
                println!("{:>3} {:>3} {}", row.p, row.q, row.lambda);
            }
            println!("conformal Hessian / ||v||^2 on H_(p,q):");
            for (p, q, f) in &sp.conformal_factors {
                println!("{p:>3} {q:>3} {f}");
            }
            println!("kernel: {:?}", sp.kernel);
            Ok(true)
        }
        Command::Conventions { n } => {
            write_json(&suite::conventions(n), None)?;
            Ok(true)
        }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
