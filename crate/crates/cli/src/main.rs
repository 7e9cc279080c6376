use std::panic::AssertUnwindSafe;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_traits::{ToPrimitive, Zero};

use qk_eigenlab::config::{Format, SuiteConfig, MAX_TRUNCATION};
use qk_eigenlab::{output, run_plan, EXIT_FAILURES, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE};
use qk_eigenlab_core::exact::{
    fraction_string, hermite2_eval, hermite2_poly, hyp2f1_terminating, parse_rational,
    plain_complex_string,
};
use qk_eigenlab_core::fock::{
    eigen_state_qk, entangled_state_vector, norm_growth_diagnostic, overlap_boundary_term,
    overlap_qk, EigenstateParams,
};
use qk_eigenlab_core::{ComplexRational, Rational, Record, Report, Status, ToComplex64, C64};

#[derive(Parser)]
#[command(
    name = "qk-eigenlab",
    version,
    about = "Exact checks for two-mode |q,k> eigenstates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print H_{m,n} in the slots (x, y) = (xi, xi*), or its exact value.
    Hermite {
        m: u32,
        n: u32,
        /// Evaluate at xi = re + i*im, e.g. `1,0` or `1/2,-3/4`.
        #[arg(long, value_name = "RE,IM")]
        eval: Option<String>,
    },
    /// Exact terminating 2F1(-n, beta; gamma; z).
    Hyp2f1 {
        n: u32,
        #[arg(allow_hyphen_values = true)]
        beta: String,
        #[arg(allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value = "2/1", allow_hyphen_values = true)]
        z: String,
    },
    /// Layer table of |q,k> truncated at N.
    State {
        q: u32,
        #[arg(allow_hyphen_values = true)]
        k: String,
        truncation: u32,
        #[arg(long, default_value = "table")]
        format: TableFormat,
    },
    /// <xi|q,k> by the Hermite series and by the Fock inner product.
    Overlap {
        q: u32,
        #[arg(allow_hyphen_values = true)]
        k: String,
        truncation: u32,
        #[arg(long, value_name = "RE,IM", allow_hyphen_values = true)]
        xi: String,
    },
    /// Run the suites of a JSON config and write the report.
    Verify {
        config: PathBuf,
        /// Overrides `output_path`.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Overrides `format`.
        #[arg(long)]
        format: Option<Format>,
    },
    /// Partial sums of the |q,k> norm and the growth diagnostics.
    NormDiag {
        q: u32,
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(long, default_value_t = 60)]
        max_n: u32,
        #[arg(long, default_value = "table")]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum TableFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(anyhow::Error),
}

impl From<qk_eigenlab_core::Error> for Failure {
    fn from(e: qk_eigenlab_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<qk_eigenlab::ConfigError> for Failure {
    fn from(e: qk_eigenlab::ConfigError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Internal(e)
    }
}

fn parse_pair(s: &str) -> Result<(Rational, Rational), Failure> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| Failure::Usage(format!("expected RE,IM, got {s:?}")))?;
    Ok((parse_rational(re)?, parse_rational(im)?))
}

fn parse_float_pair(s: &str) -> Result<C64, Failure> {
    let bad = || Failure::Usage(format!("expected RE,IM as decimals, got {s:?}"));
    let (re, im) = s.split_once(',').ok_or_else(bad)?;
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    Ok(C64::new(re, im))
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn print_table(format: TableFormat, header: &[&str], rows: &[Vec<String>]) -> anyhow::Result<()> {
    match format {
        TableFormat::Table => {
            println!("{}", header.join("\t"));
            for row in rows {
                println!("{}", row.join("\t"));
            }
        }
        TableFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(std::io::stdout());
            w.write_record(header)?;
            for row in rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            let objects: Vec<serde_json::Map<String, serde_json::Value>> = rows
                .iter()
                .map(|row| {
                    header
                        .iter()
                        .zip(row)
                        .map(|(h, v)| (h.to_string(), serde_json::Value::String(v.clone())))
                        .collect()
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&objects)?);
        }
    }
    Ok(())
}

fn summary(report: &Report) -> String {
    format!(
        "{} records: {} pass, {} fail, {} boundary-expected",
        report.records.len(),
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::BoundaryExpected)
    )
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Hermite { m, n, eval } => {
            if m > MAX_TRUNCATION || n > MAX_TRUNCATION {
                return Err(Failure::Usage(format!(
                    "indices must be <= {MAX_TRUNCATION}"
                )));
            }
            match eval {
                None => println!("{}", hermite2_poly(m, n).render("x", "y")),
                Some(point) => {
                    let (re, im) = parse_pair(&point)?;
                    let value = hermite2_eval(m, n, &ComplexRational::new(re, im));
                    println!("{}", plain_complex_string(&value));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Hyp2f1 { n, beta, gamma, z } => {
            let value = hyp2f1_terminating(
                n,
                &parse_rational(&beta)?,
                &parse_rational(&gamma)?,
                &parse_rational(&z)?,
            )?;
            println!("{}", fraction_string(&value));
            Ok(EXIT_OK)
        }
        Command::State {
            q,
            k,
            truncation,
            format,
        } => {
            let params = EigenstateParams::new(q, parse_rational(&k)?, truncation);
            let values = params.hyp_values(0)?;
            let state = eigen_state_qk(&params)?;
            let rows: Vec<Vec<String>> = values
                .iter()
                .enumerate()
                .map(|(n, f)| {
                    let n = n as u32;
                    let amp = state.get(qk_eigenlab_core::fock::FockIndex::new(n + q, n));
                    vec![
                        n.to_string(),
                        (n + q).to_string(),
                        fraction_string(f),
                        format!("{:.15e}", amp.to_c64().re),
                    ]
                })
                .collect();
            print_table(format, &["n", "n_plus_q", "hyp", "amplitude"], &rows)?;
            Ok(EXIT_OK)
        }
        Command::Overlap {
            q,
            k,
            truncation,
            xi,
        } => {
            let params = EigenstateParams::new(q, parse_rational(&k)?, truncation);
            let xi = parse_float_pair(&xi)?;
            let direct = overlap_qk(xi, &params)?;
            let ket = eigen_state_qk(&params)?.to_c64();
            let via = entangled_state_vector(xi, truncation).inner(&ket);
            let boundary = overlap_boundary_term(xi, &params)?;
            let scale = direct.norm().max(via.norm());
            let rel = if scale.is_zero() {
                0.0
            } else {
                (direct - via).norm() / scale
            };
            let c = |z: C64| format!("{:.15e} {:+.15e}i", z.re, z.im);
            println!("series\t{}", c(direct));
            println!("fock\t{}", c(via));
            println!("relative-difference\t{rel:.3e}");
            println!("truncation-term\t{}", c(boundary));
            Ok(EXIT_OK)
        }
        Command::Verify {
            config,
            output: out,
            format,
        } => {
            let cfg = SuiteConfig::load(&config)?;
            let mut plan = cfg.validate()?;
            if let Some(path) = out {
                plan.output_path = path;
            }
            if let Some(f) = format {
                plan.format = f;
            }
            let report = run_plan(&plan)?;
            output::write(&report, plan.format, &plan.output_path)?;
            for record in report.failures() {
                eprintln!(
                    "FAIL {} {} [{}]: {}",
                    record.suite, record.case, record.identity, record.residual
                );
            }
            println!("{}", summary(&report));
            println!("report written to {}", plan.output_path.display());
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILURES
            })
        }
        Command::NormDiag {
            q,
            k,
            max_n,
            format,
        } => {
            let params = EigenstateParams::new(q, parse_rational(&k)?, max_n);
            let list: Vec<u32> = (0..=max_n).collect();
            let growth = norm_growth_diagnostic(&params, &list);
            let rows: Vec<Vec<String>> = growth
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        format!("{:.10e}", to_f64(&r.term)),
                        format!("{:.10e}", to_f64(&r.partial_sum)),
                        fraction_string(&r.partial_sum),
                    ]
                })
                .collect();
            print_table(
                format,
                &["n", "term", "partial_sum", "partial_sum_exact"],
                &rows,
            )?;
            for Record {
                status,
                identity,
                residual,
                ..
            } in &growth.report.records
            {
                let status = serde_json::to_value(status).map_err(anyhow::Error::from)?;
                eprintln!("{} {identity}: {residual}", status.as_str().unwrap_or("?"));
            }
            Ok(if growth.report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILURES
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match std::panic::catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(code)) => code,
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Ok(Err(Failure::Internal(e))) => {
            eprintln!("internal error: {e:#}");
            EXIT_INTERNAL
        }
        Err(_) => EXIT_INTERNAL,
    };
    ExitCode::from(code as u8)
}
