use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use arwords::export::{self, PathReport};
use arwords::geometry::{discrepancy_series, fractal_cloud, imbalance_scan};
use arwords::independence::{dependence_probe, spread_sequence};
use arwords::witness::{build_winfty_directive, WinftyOptions, DEFAULT_CAP};
use arwords::{accessibility_path, far_expand, frequency_estimate, standard_prefix, AbelianVector, Directive};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Parser)]
#[command(name = "arwords", version, about = "Arnoux-Rauzy words with prescribed factor differences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct Output {
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Output {
    fn writer(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
            None => Box::new(io::stdout().lock()),
        })
    }

    /// Summary lines go to stdout when the data goes to a file, else stderr.
    fn summary(&self, line: &str) {
        if self.out.is_some() {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Prefix of the standard word of a directive.
    Prefix {
        #[arg(long)]
        directive: Directive,
        #[arg(long, default_value_t = 100_000)]
        length: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Letter frequency estimate at a given depth.
    Frequency {
        #[arg(long)]
        directive: Directive,
        #[arg(long, default_value_t = 40)]
        depth: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Continued fraction expansion of a nonnegative rational triple.
    Far {
        /// Three entries, integers or p/q, separated by commas.
        #[arg(long)]
        vector: String,
        #[arg(long, default_value_t = 1000)]
        max_steps: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Difference-graph path from the origin to a target.
    Path {
        #[arg(long, allow_hyphen_values = true)]
        target: AbelianVector,
        #[command(flatten)]
        output: Output,
    },
    /// Two factors with a prescribed abelian difference.
    Witness {
        #[arg(long, allow_hyphen_values = true)]
        target: AbelianVector,
        /// Largest host word to materialize.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Directive of a word realizing the first K enumerated differences.
    Winfty {
        #[arg(long = "targets", short = 'k')]
        k: usize,
        /// Extra target realized after the enumerated ones; repeatable.
        #[arg(long, allow_hyphen_values = true)]
        inject: Vec<AbelianVector>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Largest accepted path per stage.
        #[arg(long, default_value_t = 100_000)]
        max_path_edges: usize,
        /// Also scan the imbalance of a generated prefix of this length.
        #[arg(long)]
        length: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Broken line and its projection (Rauzy fractal approximation).
    Fractal {
        #[arg(long)]
        directive: Directive,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 40)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Discrepancy of every prefix.
    Discrepancy {
        #[arg(long)]
        directive: Directive,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 40)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Imbalance per factor length of a prefix.
    Imbalance {
        #[arg(long)]
        directive: Directive,
        #[arg(long)]
        length: usize,
        /// Largest factor length scanned.
        #[arg(long, default_value_t = 200)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Spread of a column vector pushed through the directive.
    Spread {
        #[arg(long)]
        directive: Directive,
        #[arg(long, allow_hyphen_values = true)]
        l0: AbelianVector,
        /// Number of steps; defaults to the directive length.
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Inner products of a frequency estimate with small integer vectors.
    Probe {
        #[arg(long)]
        directive: Directive,
        #[arg(long, default_value_t = 3)]
        bound: i64,
        #[arg(long, default_value_t = 40)]
        depth: usize,
        #[command(flatten)]
        output: Output,
    },
}

fn parse_rational_triple(s: &str) -> Result<[BigRational; 3]> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        bail!("expected three entries separated by commas, got {s:?}");
    }
    let mut out: [BigRational; 3] = Default::default();
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = match p.split_once('/') {
            Some((n, d)) => {
                let d: BigInt = d.parse().with_context(|| format!("bad denominator in {p:?}"))?;
                if d == BigInt::from(0) {
                    bail!("zero denominator in {p:?}");
                }
                BigRational::new(n.parse().with_context(|| format!("bad numerator in {p:?}"))?, d)
            }
            None => BigRational::from_integer(p.parse().with_context(|| format!("bad integer {p:?}"))?),
        };
    }
    Ok(out)
}

fn series_json<T: serde::Serialize>(values: impl Iterator<Item = T>) -> serde_json::Value {
    values.enumerate().map(|(n, v)| serde_json::json!({"n": n, "value": v})).collect()
}

/// Runs a command; `Ok(false)` means an internal verification failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Prefix { directive, length, output } => {
            let w = standard_prefix(&directive, length)?;
            let mut out = output.writer()?;
            writeln!(out, "{w}")?;
            Ok(true)
        }
        Command::Frequency { directive, depth, output } => {
            let f = frequency_estimate(&directive, depth)?;
            export::write_json(output.writer()?, &f)?;
            Ok(true)
        }
        Command::Far { vector, max_steps, output } => {
            let v = parse_rational_triple(&vector)?;
            let e = far_expand(&v, max_steps)?;
            export::write_json(output.writer()?, &e)?;
            Ok(true)
        }
        Command::Path { target, output } => {
            let report = PathReport::new(target.clone(), accessibility_path(&target)?);
            export::write_json(output.writer()?, &report)?;
            output.summary(&format!("{} edges, reached {} (target {target})", report.path.len(), report.reached));
            Ok(report.ok)
        }
        Command::Witness { target, cap, output } => {
            let report = export::witness_report(&target, cap)?;
            export::write_json(output.writer()?, &report)?;
            if let Some(notice) = &report.witness.notice {
                output.summary(notice);
            }
            Ok(report.ok)
        }
        Command::Winfty { k, inject, cap, max_path_edges, length, output } => {
            let opts = WinftyOptions { cap, max_path_edges, inject };
            let report = build_winfty_directive(k, &opts)?;
            export::write_json(output.writer()?, &report)?;
            let [c1, c2, c3] = report.occurrences();
            output.summary(&format!(
                "{} stages, directive length {}, occurrences ({c1},{c2},{c3}), all verified: {}",
                report.stages.len(),
                report.directive.indices().len(),
                report.all_verified()
            ));
            if let Some(len) = length {
                let w = report.generated_prefix(len)?;
                let scan = imbalance_scan(&w, len.min(200))?;
                output.summary(&format!("imbalance of a {len}-letter prefix: {}", scan.iter().max().unwrap_or(&0)));
            }
            Ok(report.all_verified())
        }
        Command::Fractal { directive, length, depth, format, output } => {
            let cloud = fractal_cloud(&directive, length, depth)?;
            match format {
                Format::Csv => export::write_cloud_csv(output.writer()?, &cloud)?,
                Format::Json => {
                    let rows: Vec<_> = cloud
                        .broken_line
                        .iter()
                        .zip(&cloud.points)
                        .map(|(raw, p)| {
                            serde_json::json!({
                                "k": p.index,
                                "raw": raw,
                                "projected": p.coords.clone().map(|x| x.to_string()),
                            })
                        })
                        .collect();
                    export::write_json(output.writer()?, &rows)?;
                }
            }
            let diameter = cloud.points.iter().map(|p| p.sup_norm()).max().unwrap_or_default();
            output.summary(&format!(
                "{} points, frequency depth {}, max sup-norm {:.6}",
                cloud.points.len(),
                depth,
                num_traits::ToPrimitive::to_f64(&diameter).unwrap_or(f64::NAN)
            ));
            Ok(true)
        }
        Command::Discrepancy { directive, length, depth, format, output } => {
            let series = discrepancy_series(&directive, length, depth)?;
            match format {
                Format::Csv => export::write_rational_series_csv(output.writer()?, &series)?,
                Format::Json => {
                    export::write_json(output.writer()?, &series_json(series.iter().map(|x| x.to_string())))?
                }
            }
            let max = series.iter().max().cloned().unwrap_or_default();
            output.summary(&format!(
                "{} terms, max {:.6}",
                series.len(),
                num_traits::ToPrimitive::to_f64(&max).unwrap_or(f64::NAN)
            ));
            Ok(true)
        }
        Command::Imbalance { directive, length, max_len, format, output } => {
            let w = standard_prefix(&directive, length)?;
            let scan = imbalance_scan(&w, max_len.min(length))?;
            match format {
                Format::Csv => export::write_integer_series_csv(output.writer()?, &scan)?,
                Format::Json => export::write_json(output.writer()?, &series_json(scan.iter()))?,
            }
            output.summary(&format!(
                "imbalance over lengths <= {}: {}",
                scan.len() - 1,
                scan.iter().max().unwrap_or(&0)
            ));
            Ok(true)
        }
        Command::Spread { directive, l0, steps, format, output } => {
            let steps = match (steps, directive.available()) {
                (Some(s), _) => s,
                (None, Some(len)) => len,
                (None, None) => directive.indices().len(),
            };
            let trace = spread_sequence(&directive, &l0, steps)?;
            match format {
                Format::Csv => export::write_trace_csv(output.writer()?, &trace)?,
                Format::Json => {
                    let rows: Vec<_> = trace
                        .vectors
                        .iter()
                        .zip(&trace.spreads)
                        .enumerate()
                        .map(|(m, (l, d))| serde_json::json!({"m": m, "l": l, "D": d.to_string()}))
                        .collect();
                    export::write_json(output.writer()?, &rows)?;
                }
            }
            let monotone = trace.spreads.windows(2).all(|w| w[1] <= w[0]);
            output.summary(&format!("{} steps, spreads non-increasing: {monotone}", steps));
            Ok(true)
        }
        Command::Probe { directive, bound, depth, output } => {
            let report = dependence_probe(&directive, bound, depth)?;
            export::write_json(output.writer()?, &report)?;
            output.summary(&format!("min |f.l0| = {:.6e} at {}", report.min_abs_float, report.argmin));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: verification failed");
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
