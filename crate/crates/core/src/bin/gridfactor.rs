use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use gridfactor::output::{OutputFormat, OutputRecord};
use gridfactor::report::Report;
use gridfactor::series::{conjectures, estimate_spectrum, fit_family, tabulated_order};
use gridfactor::transfer::cache::{load_or_build, CacheOptions, CacheStatus};
use gridfactor::transfer::DEFAULT_MAX_M;
use gridfactor::{oracle, tables, Counter, Error, GraphFamily, Result};

#[derive(Parser)]
#[command(name = "gridfactor", version, about = "Count 2-factors of grids, thick cylinders and Moebius strips")]
struct Cli {
    #[arg(long, global = true, default_value = "plain", value_parser = parse_format)]
    format: OutputFormat,
    /// Directory for cached transfer digraphs.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Rebuild the digraphs without reading or writing the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Largest height accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_M)]
    max_m: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Rg,
    Tkc,
    Ms,
}

impl From<Family> for GraphFamily {
    fn from(f: Family) -> GraphFamily {
        match f {
            Family::Rg => GraphFamily::RG,
            Family::Tkc => GraphFamily::TkC,
            Family::Ms => GraphFamily::MS,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    Structure,
    Conjectures,
    Tables,
    Oracle,
}

#[derive(Subcommand)]
enum Cmd {
    /// Number of 2-factors for one length.
    Count {
        family: Family,
        m: usize,
        n: usize,
        #[arg(long)]
        split: bool,
    },
    /// Counts for lengths 1..=nmax.
    Series {
        family: Family,
        m: usize,
        nmax: usize,
        #[arg(long)]
        split: bool,
    },
    /// Minimal recurrence and generating function.
    Gfun { family: Family, m: usize },
    /// Run a group of checks over a range of heights such as 2..10.
    Verify {
        scope: Scope,
        #[arg(value_parser = parse_range)]
        range: (usize, usize),
        /// Longest length compared in the oracle scope.
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
    /// Growth constant and leading coefficient.
    Eig {
        family: Family,
        m: usize,
        #[arg(long, default_value_t = 120)]
        nmax: usize,
    },
}

fn parse_format(s: &str) -> std::result::Result<OutputFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let bad = || format!("expected a height or a range like 2..10, got {s:?}");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

struct Ctx {
    cache: CacheOptions,
}

impl Ctx {
    fn counter(&self, m: usize) -> Result<(Counter, CacheStatus)> {
        let (t, status) = load_or_build(m, &self.cache)?;
        Ok((Counter::from_arc(Arc::new(t)), status))
    }
}

fn cache_note(s: CacheStatus) -> String {
    let s = serde_json::to_value(s).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
    format!("cache {s}")
}

fn run(cli: &Cli) -> Result<(OutputRecord, bool)> {
    let ctx = Ctx { cache: CacheOptions { dir: cli.cache_dir.clone(), enabled: !cli.no_cache, limit: cli.max_m } };
    match cli.cmd {
        Cmd::Count { family, m, n, split } => {
            let (k, st) = ctx.counter(m)?;
            let r = k.count_result(family.into(), n, split)?;
            Ok((OutputRecord::count(&r).with_note(cache_note(st)), true))
        }
        Cmd::Series { family, m, nmax, split } => {
            let family = GraphFamily::from(family);
            if nmax == 0 {
                return Err(Error::Parameter("nmax must be at least 1".into()));
            }
            let (k, st) = ctx.counter(m)?;
            let rec = if split && family != GraphFamily::RG {
                let s = k.split_series(family, nmax)?;
                OutputRecord::series(family, m, &s.totals(), Some(&s))
            } else {
                OutputRecord::series(family, m, &k.series(family, nmax)?, None)
            };
            Ok((rec.with_note(cache_note(st)), true))
        }
        Cmd::Gfun { family, m } => {
            let family = GraphFamily::from(family);
            let (k, st) = ctx.counter(m)?;
            let model = fit_family(&k, family, tabulated_order(family, m))?;
            Ok((OutputRecord::gfun(&model).with_note(cache_note(st)), true))
        }
        Cmd::Eig { family, m, nmax } => {
            let family = GraphFamily::from(family);
            let (k, st) = ctx.counter(m)?;
            let e = estimate_spectrum(family, m, &k.series(family, nmax)?)?;
            let mut rec = OutputRecord::eig(&e).with_note(cache_note(st));
            if !e.converged {
                rec = rec.with_note("unconverged: increase --nmax");
            }
            Ok((rec, true))
        }
        Cmd::Verify { scope, range: (lo, hi), nmax } => {
            let mut report = Report::default();
            for m in lo..=hi {
                match scope {
                    Scope::Oracle => report.extend(oracle::verify_against_transfer(m, nmax)?),
                    _ => {
                        let (t, _) = load_or_build(m, &ctx.cache)?;
                        report.extend(match scope {
                            Scope::Structure => t.check_structure(),
                            Scope::Conjectures => conjectures::verify_conjectures(&t),
                            _ => tables::verify_tables(&t),
                        });
                    }
                }
            }
            let name = ["structure", "conjectures", "tables", "oracle"][scope as usize];
            let ok = report.passed();
            let mut rec = OutputRecord::verify(name, lo, hi, &report);
            if scope == Scope::Conjectures {
                rec = rec.with_note("conjecture checks are empirical findings");
            }
            Ok((rec, ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((rec, ok)) => {
            if cli.format != OutputFormat::Json {
                for n in &rec.notes {
                    eprintln!("# {n}");
                }
            }
            let _ = writeln!(std::io::stdout(), "{}", rec.render(cli.format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
