use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use kaonbell::bell::{mixing_from_delta, optimal_alpha, uchiyama_assessment, BellAssessment};
use kaonbell::decoherence::{propagate_delta_uncertainty, ZetaBasis, ZetaBoundResult};
use kaonbell::quasispin::mixing_from_epsilon;
use kaonbell::report::{reproduce, round_sig12, ExperimentalInputs};
use kaonbell::tagging_mc::{sample_kl_tags, McConfig, McResult, GENERATOR};

const EXIT_CLAIM_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "kaonbell",
    version,
    about = "Bell inequality and CP violation for entangled neutral kaons"
)]
struct Cli {
    /// JSON file with experimental inputs; missing fields take published values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Recompute every published number and check it.
    Reproduce,
    /// Evaluate Uchiyama's inequality for p = 1 + eps, q = 1 - eps.
    Bi {
        #[arg(long, allow_hyphen_values = true)]
        epsilon_mag: f64,
        #[arg(long, allow_hyphen_values = true)]
        epsilon_phase_deg: f64,
        /// CP phase in degrees; the optimal phase when omitted.
        #[arg(long, allow_hyphen_values = true)]
        alpha_deg: Option<f64>,
    },
    /// Lower bound on the decoherence parameter for a leptonic asymmetry.
    ZetaBound {
        #[arg(long, allow_hyphen_values = true)]
        delta: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, value_parser = parse_basis)]
        basis: ZetaBasis,
    },
    /// Monte Carlo estimate of the leptonic asymmetry from K_L tags.
    McDelta {
        #[arg(long, allow_hyphen_values = true)]
        delta: f64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_basis(s: &str) -> Result<ZetaBasis, String> {
    s.parse().map_err(|e: kaonbell::KaonError| e.to_string())
}

enum Failure {
    Usage(String),
    Io(String),
}

struct Output {
    text: String,
    all_pass: bool,
}

// Flat records so the same struct serves JSON and a single CSV row.
#[derive(Serialize)]
struct BiOutput {
    epsilon_re: f64,
    epsilon_im: f64,
    delta: f64,
    alpha_used: f64,
    lhs: f64,
    rhs: f64,
    margin: f64,
    violated: bool,
}

impl BiOutput {
    fn new(eps: Complex64, delta: f64, a: &BellAssessment) -> Self {
        Self {
            epsilon_re: eps.re,
            epsilon_im: eps.im,
            delta,
            alpha_used: a.alpha_used,
            lhs: a.lhs,
            rhs: a.rhs,
            margin: a.margin,
            violated: a.violated,
        }
    }
}

#[derive(Serialize)]
struct McOutput {
    delta_analytic: f64,
    n_events: u64,
    seed: u64,
    generator: &'static str,
    n_plus: u64,
    n_minus: u64,
    delta_hat: f64,
    std_error: f64,
}

impl McOutput {
    fn new(delta_analytic: f64, seed: u64, r: &McResult) -> Self {
        Self {
            delta_analytic,
            n_events: r.n_events(),
            seed,
            generator: GENERATOR,
            n_plus: r.n_plus,
            n_minus: r.n_minus,
            delta_hat: r.delta_hat,
            std_error: r.std_error,
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn csv_row<T: Serialize>(value: &T) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.serialize(value).expect("output serializes");
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 csv")
}

fn finite(name: &str, x: f64) -> Result<f64, Failure> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Failure::Usage(format!("--{name} must be finite")))
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let inputs = match &cli.config {
        Some(path) => ExperimentalInputs::load(path).map_err(|e| Failure::Usage(e.to_string()))?,
        None => ExperimentalInputs::default(),
    };
    let usage = |e: kaonbell::KaonError| Failure::Usage(e.to_string());

    match cli.command {
        Command::Reproduce => {
            let rep = reproduce(&inputs);
            if cli.format != Format::Table {
                for n in &rep.notes {
                    eprintln!("note: {n}");
                }
            }
            let text = match cli.format {
                Format::Table => rep.report.to_table(&rep.notes),
                Format::Json => rep.report.to_json(),
                Format::Csv => rep.report.claims_to_csv(),
            };
            Ok(Output {
                text,
                all_pass: rep.report.all_pass(),
            })
        }
        Command::Bi {
            epsilon_mag,
            epsilon_phase_deg,
            alpha_deg,
        } => {
            let mag = finite("epsilon-mag", epsilon_mag)?;
            let phase = finite("epsilon-phase-deg", epsilon_phase_deg)?;
            if mag < 0.0 {
                return Err(Failure::Usage("--epsilon-mag must be non-negative".into()));
            }
            let eps = Complex64::from_polar(mag, phase.to_radians());
            let mix = mixing_from_epsilon(eps).map_err(usage)?;
            let alpha = match alpha_deg {
                Some(a) => finite("alpha-deg", a)?.to_radians(),
                None => optimal_alpha(&mix),
            };
            let assessment = uchiyama_assessment(&mix, alpha, false).map_err(usage)?;
            let out = BiOutput::new(eps, mix.delta(), &assessment);
            let text = match cli.format {
                Format::Table => {
                    let mut s = String::new();
                    let _ = writeln!(s, "epsilon   = {:e} {:+e}i", eps.re, eps.im);
                    let _ = writeln!(s, "alpha     = {:.6} deg", alpha.to_degrees());
                    let _ = writeln!(s, "lhs       = {:.15}", assessment.lhs);
                    let _ = writeln!(s, "rhs       = {:.15}", assessment.rhs);
                    let _ = writeln!(s, "margin    = {:e}", assessment.margin);
                    let _ = writeln!(s, "violated  = {}", assessment.violated);
                    s
                }
                Format::Json => json(&out),
                Format::Csv => csv_row(&out),
            };
            Ok(Output {
                text,
                all_pass: true,
            })
        }
        Command::ZetaBound {
            delta,
            sigma,
            basis,
        } => {
            let r: ZetaBoundResult = propagate_delta_uncertainty(
                finite("delta", delta)?,
                finite("sigma", sigma)?,
                basis,
            )
            .map_err(usage)?;
            let text = match cli.format {
                Format::Table => {
                    let mut s = String::new();
                    let _ = writeln!(s, "basis      = {}", r.basis);
                    let _ = writeln!(s, "delta      = {:e}", r.delta_in);
                    let _ = writeln!(s, "exact      = {:.12}", r.exact_bound);
                    let _ = writeln!(s, "expansion  = {:.12}", r.expansion_bound);
                    let _ = writeln!(s, "numeric    = {:.12}", r.numeric_bound);
                    let _ = writeln!(s, "uncertainty= {:.1e}", r.uncertainty);
                    let _ = writeln!(
                        s,
                        "bound: {:.4} ± {:.4} <= zeta",
                        r.exact_bound, r.uncertainty
                    );
                    s
                }
                Format::Json => json(&r),
                Format::Csv => csv_row(&r),
            };
            Ok(Output {
                text,
                all_pass: true,
            })
        }
        Command::McDelta { delta, n, seed } => {
            let delta = finite("delta", delta)?;
            let mix = mixing_from_delta(delta, 0.0).map_err(usage)?;
            let cfg = McConfig::new(n, seed, mix).map_err(usage)?;
            let result = sample_kl_tags(&cfg);
            let out = McOutput::new(round_sig12(mix.delta()), seed, &result);
            let text = match cli.format {
                Format::Table => {
                    let mut s = String::new();
                    let _ = writeln!(s, "n_plus     = {}", result.n_plus);
                    let _ = writeln!(s, "n_minus    = {}", result.n_minus);
                    let _ = writeln!(
                        s,
                        "delta_hat  = {:e} ± {:e}",
                        result.delta_hat, result.std_error
                    );
                    let _ = writeln!(s, "analytic   = {:e}", round_sig12(mix.delta()));
                    let _ = writeln!(s, "generator  = {GENERATOR}, seed {seed}");
                    s
                }
                Format::Json => json(&out),
                Format::Csv => csv_row(&out),
            };
            Ok(Output {
                text,
                all_pass: true,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_IO);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &out.text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{}", out.text);
            Ok(())
        }
    };
    if let Err(Failure::Io(msg) | Failure::Usage(msg)) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_IO);
    }
    if out.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CLAIM_FAILURE)
    }
}
