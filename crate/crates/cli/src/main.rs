use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use msv_complexity::complexity::max_complexity;
use msv_complexity::constructions::{compose_antidiagonal, witness};
use msv_complexity::diagrams::{bundle, opposite_rothe};
use msv_complexity::ideal::{minor_count, rank_conditions};
use msv_complexity::render::{render, RenderSpec, RenderTarget};
use msv_complexity::survey::{
    enumerate_reports, load_cache, sample_reports, sampled_spectrum, save_cache, spectrum, verify_spectrum,
    write_reports_csv, Execution, DEFAULT_EXHAUSTIVE_LIMIT,
};
use msv_complexity::{analyze, analyze_with, AnalyzeOptions, ComplexityReport, Error, Permutation, SpectrumResult};
use msv_complexity::{CellSet, TheoremId};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_LIMIT: u8 = 3;

/// Complexity of matrix Schubert varieties under the two-sided torus action.
///
/// Permutations are given in one-line notation, either comma separated
/// ("3,4,1,2", optionally in brackets) or, for n < 10, as a compact word
/// ("3412"). Diagrams use matrix coordinates: row 1 is the top row.
///
/// Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
/// 3 resource limit exceeded.
#[derive(Debug, Parser)]
#[command(name = "msv", version)]
struct Cli {
    /// Worker threads for parallel surveys (default: all cores).
    #[arg(long, global = true, env = "MSV_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the full complexity report for a permutation.
    Compute {
        perm: Permutation,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Also compute the cone dimension by exact rank of its generators.
        #[arg(long)]
        rank: bool,
    },
    /// Draw the diagrams of a permutation as ASCII art or a TikZ document.
    Render {
        perm: Permutation,
        /// Comma-separated layers: dots, lasers, opposite_rothe, essential,
        /// dominant, southwest, l, l_prime, graph.
        #[arg(long, default_value = "dots,lasers,opposite_rothe")]
        layers: String,
        #[arg(long, value_enum, default_value_t = Target::Ascii)]
        target: Target,
        /// Print cell coordinates next to the drawing.
        #[arg(long)]
        labels: bool,
        /// Write to a file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Tabulate the achieved complexities in S_n with witnesses.
    Spectrum {
        n: usize,
        /// Enumerate all of S_n (the default unless --sample is given).
        #[arg(long, conflicts_with = "sample")]
        exhaustive: bool,
        /// Analyze this many uniformly random permutations instead.
        #[arg(long, value_name = "COUNT")]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0, requires = "sample")]
        seed: u64,
        /// Directory holding spectrum-n{N}.json; read if present (and
        /// re-verified), written otherwise.
        #[arg(long, value_name = "PATH", conflicts_with = "sample")]
        cache: Option<PathBuf>,
        /// Largest n enumerated exhaustively.
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
        max_n: usize,
        /// Also write every per-permutation report to this CSV file.
        #[arg(long, value_name = "FILE")]
        reports_csv: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SpectrumFormat::Human)]
        format: SpectrumFormat,
        /// Scan on a single thread.
        #[arg(long)]
        serial: bool,
    },
    /// Check a theorem exhaustively for each n in a range such as 4..7.
    Verify {
        /// max, unique, spectrum, no-one, or all.
        theorem: String,
        /// A single n, or an inclusive range "a..b".
        range: String,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
        max_n: usize,
        #[arg(long)]
        serial: bool,
    },
    /// Construct a permutation in S_n of complexity d and re-verify it.
    Witness {
        n: usize,
        d: usize,
        #[arg(long, value_enum, default_value_t = SpectrumFormat::Human)]
        format: SpectrumFormat,
    },
    /// Place beta in the south-west corner of alpha and compare the
    /// complexity with d(alpha) - |D°(beta)|.
    Compose { alpha: Permutation, beta: Permutation, k: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpectrumFormat {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Ascii,
    Tikz,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(workers) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global() {
            eprintln!("msv: cannot configure {workers} workers: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("msv: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::ExhaustiveLimit { .. } | Error::TooManyMinors { .. } | Error::TooLarge { .. }) => EXIT_LIMIT,
        Some(Error::WitnessCheck { .. } | Error::CacheVerification(_)) => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

fn execution(serial: bool) -> Execution {
    if serial {
        Execution::Serial
    } else {
        Execution::Parallel
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    let mut out = io::stdout().lock();
    match command {
        Command::Compute { perm, format, rank } => {
            let report = analyze_with(&perm, AnalyzeOptions { verify_rank: rank });
            match format {
                Format::Human => write_human_report(&mut out, &report)?,
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
                Format::Csv => {
                    writeln!(out, "{}", ComplexityReport::CSV_HEADER)?;
                    writeln!(out, "{}", report.to_csv_row())?;
                }
            }
            if !report.is_consistent() {
                eprintln!("msv: internal cross-check failed for {perm}");
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
        }
        Command::Render { perm, layers, target, labels, output } => {
            let target = match target {
                Target::Ascii => RenderTarget::Ascii,
                Target::Tikz => RenderTarget::Tikz,
            };
            let spec = RenderSpec::new(target, RenderSpec::parse_layers(&layers)?, labels)?;
            let text = render(&perm, &spec);
            match output {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Spectrum { n, exhaustive: _, sample, seed, cache, max_n, reports_csv, format, serial } => {
            let result = match sample {
                Some(count) => {
                    if let Some(path) = &reports_csv {
                        let file = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
                        write_reports_csv(io::BufWriter::new(file), sample_reports(n, count, seed)?)?;
                    }
                    sampled_spectrum(n, count, seed)?
                }
                None => {
                    let result = match &cache {
                        Some(dir) => match load_cache(n, dir) {
                            Ok(result) => {
                                eprintln!("msv: loaded and re-verified cache in {}", dir.display());
                                result
                            }
                            Err(Error::CacheNotFound(_)) => {
                                let result = spectrum(n, max_n, execution(serial))?;
                                let path = save_cache(&result, dir)?;
                                eprintln!("msv: wrote {}", path.display());
                                result
                            }
                            Err(e) => return Err(e.into()),
                        },
                        None => spectrum(n, max_n, execution(serial))?,
                    };
                    if let Some(path) = &reports_csv {
                        let file = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
                        write_reports_csv(io::BufWriter::new(file), enumerate_reports(n, max_n)?)?;
                    }
                    result
                }
            };
            match format {
                SpectrumFormat::Human => write_human_spectrum(&mut out, &result, sample.map(|c| (c, seed)))?,
                SpectrumFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&result)?)?,
            }
        }
        Command::Verify { theorem, range, max_n, serial } => {
            let theorems = if theorem.eq_ignore_ascii_case("all") {
                TheoremId::ALL.to_vec()
            } else {
                vec![theorem.parse::<TheoremId>().map_err(anyhow::Error::msg)?]
            };
            let (lo, hi) = parse_range(&range)?;
            let mut failed = false;
            for n in lo..=hi {
                let result = spectrum(n, max_n, execution(serial))?;
                for &t in &theorems {
                    let outcome = verify_spectrum(t, &result)?;
                    failed |= !outcome.passed;
                    writeln!(out, "{outcome}")?;
                }
            }
            if failed {
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
        }
        Command::Witness { n, d, format } => {
            let w = witness(n, d)?;
            match format {
                SpectrumFormat::Human => writeln!(out, "{w}, verified d={d}")?,
                SpectrumFormat::Json => {
                    let value = serde_json::json!({ "n": n, "d": d, "w": w, "verified": true });
                    writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?
                }
            }
        }
        Command::Compose { alpha, beta, k } => {
            let w = compose_antidiagonal(&alpha, &beta, k)?;
            let d_alpha = analyze(&alpha).complexity;
            let shrink = opposite_rothe(&beta).len();
            let d = analyze(&w).complexity;
            let expected = d_alpha as i64 - shrink as i64;
            writeln!(out, "{w}")?;
            writeln!(out, "d(alpha) = {d_alpha}, |D°(beta)| = {shrink}, d = {d} (expected {expected})")?;
            if d as i64 != expected {
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_range(text: &str) -> anyhow::Result<(usize, usize)> {
    let parse = |s: &str| s.trim().parse::<usize>().with_context(|| format!("invalid n {s:?} in range {text:?}"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = parse(text)?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        bail!("empty or invalid range {text:?}");
    }
    Ok((lo, hi))
}

fn cells(set: &CellSet) -> String {
    if set.is_empty() {
        return "{}".into();
    }
    set.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn write_human_report(out: &mut impl Write, r: &ComplexityReport) -> anyhow::Result<()> {
    let b = bundle(&r.w);
    writeln!(out, "w = {}  (n = {}, length {})", r.w, r.n, r.length)?;
    writeln!(out, "D°(w)    {:>3}  {}", r.card_opposite_rothe, cells(&b.opposite_rothe))?;
    writeln!(out, "ess(w)   {:>3}  {}", r.card_essential, cells(&b.essential))?;
    writeln!(out, "dom(w)   {:>3}  {}", r.card_dominant, cells(&b.dominant))?;
    writeln!(out, "sw(w)    {:>3}", r.card_southwest)?;
    writeln!(out, "L(w)     {:>3}", r.card_l)?;
    writeln!(out, "L'(w)    {:>3}", r.card_l_prime)?;
    write!(out, "G(w)     |V| = {}, |comp| = {}, cone dim = {}", r.vertex_count, r.component_count, r.cone_dim)?;
    match r.cone_dim_rank {
        Some(rank) => writeln!(out, " (rank {rank})")?,
        None => writeln!(out)?,
    }
    writeln!(out, "dim MSV_w = {}, dim Y_w = {}", r.dim_msv, r.dim_y)?;
    let conditions: Vec<String> =
        rank_conditions(&r.w).iter().map(|rc| format!("rk{} <= {}", rc.cell, rc.bound)).collect();
    if !conditions.is_empty() {
        writeln!(out, "rank conditions: {}  ({} minors)", conditions.join(", "), minor_count(&r.w))?;
    }
    writeln!(out, "complexity d = {}", r.complexity)?;
    Ok(())
}

fn write_human_spectrum(
    out: &mut impl Write,
    s: &SpectrumResult,
    sampling: Option<(usize, u64)>,
) -> anyhow::Result<()> {
    match sampling {
        Some((count, seed)) => writeln!(out, "S_{}: {count} sampled permutations (seed {seed})", s.n)?,
        None => writeln!(out, "S_{}: {} permutations, exhaustive", s.n, s.total_enumerated)?,
    }
    writeln!(out, "{:>4}  {:>10}  witness", "d", "count")?;
    for (d, w) in &s.witnesses {
        writeln!(out, "{d:>4}  {:>10}  {w}", s.counts.get(d).copied().unwrap_or(0))?;
    }
    let maximizers: Vec<String> = s.maximizers.iter().map(|w| w.to_string()).collect();
    writeln!(out, "max complexity {} ({})", s.max_complexity, maximizers.join(" "))?;
    if sampling.is_none() && s.n >= 4 {
        writeln!(out, "bound (n-1)(n-3) = {}", max_complexity(s.n))?;
    }
    Ok(())
}
