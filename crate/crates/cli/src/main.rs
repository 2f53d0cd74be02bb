mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use psc_core::analysis::{self, ScanFamily};
use psc_core::groups::{self, GroupSpec, ScreenKind};
use psc_core::io::{self, Fixtures, SpectrumFile};
use psc_core::numtheory;
use psc_core::oracle::{self, MatrixVariant};
use psc_core::{Error, PrimeComplex, PrimeSimplex, Result};

#[derive(Parser)]
#[command(name = "psc", version, about = "Prime simplicial complexes of finite groups")]
struct Cli {
    /// Directory of spectrum fixtures (overrides PSC_FIXTURES).
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexFormat {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    /// Largest simplex and smallest maximal simplex of each sporadic fixture.
    Sporadic,
    /// Simple groups of order coprime to 5, evaluated over prime powers.
    Coprime5,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Gl,
    Sl,
    Psl,
}

#[derive(Subcommand)]
enum Command {
    /// Print the complex of a group, complex file or spectrum file.
    Complex {
        group: String,
        #[arg(long, value_enum, default_value = "json")]
        format: ComplexFormat,
    },
    /// Decide purity of a group's complex.
    Purity {
        group: String,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Purity over a parameter range, e.g. `psc scan sym 1..200`.
    Scan {
        /// sym, alt, psl2, psl3, psu3, sz or 2g2
        family: String,
        /// Inclusive range `lo..hi`.
        range: String,
        #[arg(long, value_enum, default_value = "markdown")]
        format: TableFormat,
    },
    /// Compare two complexes given as groups or files.
    Compare { left: String, right: String },
    /// Multiplicative orders of candidate characteristics modulo allowed primes.
    Screen {
        #[arg(long, value_delimiter = ',', required = true)]
        allowed: Vec<u64>,
        #[arg(long, value_enum, default_value = "markdown")]
        format: TableFormat,
    },
    /// Reproduce a reference table.
    Tables {
        #[arg(value_enum)]
        table: Table,
        /// Largest q evaluated by the coprime-to-5 table.
        #[arg(long, default_value_t = 30)]
        q_max: u64,
        #[arg(long, value_enum, default_value = "markdown")]
        format: TableFormat,
    },
    /// Brute-force spectra of small groups.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Number theory utilities.
    Nt {
        #[command(subcommand)]
        command: NtCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Element orders of S_n.
    Sn { n: u64 },
    /// Element orders of A_n.
    An { n: u64 },
    /// Element orders of GL_n(q), SL_n(q) or PSL_n(q) by enumeration.
    Matrix {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum)]
        variant: Variant,
    },
}

#[derive(Subcommand)]
enum NtCommand {
    /// Prime factorization.
    Factor { n: BigUint },
    /// Primality test.
    Prime { n: BigUint },
    /// Multiplicative order of q modulo the prime r.
    Order { q: u64, r: u64 },
    /// Primitive prime divisors of a^n - 1.
    Ppd { a: u64, n: u32 },
    /// Maximal torus order of PSL_n(q) for a partition of n.
    Torus {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<u32>,
    },
    /// Whether odd primes lie in a common simplex of PSL_n(q).
    Criterion {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
    },
    /// The prime-sum inequality behind symmetric group impurity.
    Pn { n: u64 },
    /// Prime powers q in rank-two families with pure complexes of size two.
    Pure2 {
        #[arg(value_enum)]
        kind: Pure2Kind,
        limit: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Pure2Kind {
    Psl3Odd,
    Psu3Odd,
    Psu3Char2,
}

fn parse_range(text: &str) -> Result<(u64, u64)> {
    let (lo, hi) = text
        .split_once("..=")
        .or_else(|| text.split_once(".."))
        .or_else(|| text.split_once('-'))
        .ok_or_else(|| Error::InvalidInput(format!("range `{text}` is not of the form lo..hi")))?;
    let num = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Error::InvalidInput(format!("`{s}` is not a natural number")))
    };
    let (lo, hi) = (num(lo)?, num(hi)?);
    if lo > hi {
        return Err(Error::InvalidInput(format!("empty range {lo}..{hi}")));
    }
    Ok((lo, hi))
}

/// Loads a complex from a file path or a group description.
fn resolve(arg: &str, fixtures: &Fixtures) -> Result<PrimeComplex> {
    let path = Path::new(arg);
    if arg.ends_with(".json") || path.is_file() {
        let (c, reduced) = io::load_complex_or_spectrum(path)?;
        if reduced {
            eprintln!("warning: {arg}: non-maximal simplices were dropped");
        }
        return Ok(c);
    }
    groups::complex_of(&arg.parse::<GroupSpec>()?, fixtures)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<()> {
    let fixtures = cli.fixtures.map(Fixtures::new).unwrap_or_else(Fixtures::from_env);
    let text = match cli.command {
        Command::Complex { group, format } => {
            let c = resolve(&group, &fixtures)?;
            match format {
                ComplexFormat::Json => io::complex_json(&c),
                ComplexFormat::Dot => io::emit_dot(&c.prime_graph(), &group),
                ComplexFormat::Text => render::complex_text(&c),
            }
        }
        Command::Purity { group, format } => {
            let spec: GroupSpec = group.parse()?;
            if let GroupSpec::Ree(m) = spec {
                let w = groups::ree2g2_purity(m)?;
                match format {
                    ReportFormat::Text => w.describe() + "\n",
                    ReportFormat::Json => render::json(&w),
                }
            } else {
                let report = analysis::purity_report(&spec, &fixtures)?;
                match format {
                    ReportFormat::Text => report.summary() + "\n",
                    ReportFormat::Json => render::json(&report),
                }
            }
        }
        Command::Scan { family, range, format } => {
            let (lo, hi) = parse_range(&range)?;
            if matches!(family.to_ascii_lowercase().as_str(), "2g2" | "ree") {
                let lo = u32::try_from(lo.max(1)).map_err(|_| Error::InvalidInput("m too large".into()))?;
                let hi = u32::try_from(hi).map_err(|_| Error::InvalidInput("m too large".into()))?;
                let rows = (lo..=hi).map(groups::ree2g2_purity).collect::<Result<Vec<_>>>()?;
                render::ree_scan(&rows, format)
            } else {
                let reports = analysis::purity_scan(ScanFamily::parse(&family)?, lo, hi)?;
                render::purity_scan(&reports, format)
            }
        }
        Command::Compare { left, right } => {
            let diff = analysis::compare(&resolve(&left, &fixtures)?, &resolve(&right, &fixtures)?);
            render::diff(&diff)
        }
        Command::Screen { allowed, format } => {
            let allowed = PrimeSimplex::new(allowed)?;
            let rows = analysis::characteristic_screen(&allowed)?;
            render::screen(&allowed, &rows, format)
        }
        Command::Tables { table, q_max, format } => match table {
            Table::Sporadic => render::sporadic(&analysis::table_sporadic_sizes(&fixtures)?, format),
            Table::Coprime5 => render::coprime5(q_max, format)?,
        },
        Command::Oracle { command } => {
            let (name, spectrum) = match command {
                OracleCommand::Sn { n } => (format!("Sym({n})"), oracle::sn_spectrum(n)?),
                OracleCommand::An { n } => (format!("Alt({n})"), oracle::an_spectrum(n)?),
                OracleCommand::Matrix { n, q, variant } => {
                    let (label, v) = match variant {
                        Variant::Gl => ("GL", MatrixVariant::Gl),
                        Variant::Sl => ("SL", MatrixVariant::Sl),
                        Variant::Psl => ("PSL", MatrixVariant::Psl),
                    };
                    (format!("{label}({n},{q})"), oracle::matrix_group_spectrum(n, q, v)?)
                }
            };
            io::spectrum_json(&SpectrumFile::new(name, &spectrum, "exhaustive enumeration"))?
        }
        Command::Nt { command } => nt(command)?,
    };
    out.write_all(text.as_bytes()).map_err(|source| Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn nt(command: NtCommand) -> Result<String> {
    Ok(match command {
        NtCommand::Factor { n } => {
            if n == BigUint::ZERO {
                return Err(Error::InvalidInput("0 has no factorization".into()));
            }
            format!("{n} = {}\n", numtheory::factorize(&n)?)
        }
        NtCommand::Prime { n } => {
            let f = numtheory::Factorizer::new(*numtheory::FactorConfig::global());
            format!("{}\n", f.is_prime(&n)?)
        }
        NtCommand::Order { q, r } => format!("{}\n", numtheory::multiplicative_order(q, r)?),
        NtCommand::Ppd { a, n } => render::json(&numtheory::primitive_prime_divisors(a, n)?),
        NtCommand::Torus { n, q, partition } => render::json(&groups::torus_order(n, q, &partition)?),
        NtCommand::Criterion { n, q, primes } => render::json(&groups::torus_readings(n, q, &primes)?),
        NtCommand::Pn { n } => render::json(&analysis::pn_check(n)?),
        NtCommand::Pure2 { kind, limit } => {
            let kind = match kind {
                Pure2Kind::Psl3Odd => ScreenKind::Psl3Odd,
                Pure2Kind::Psu3Odd => ScreenKind::Psu3Odd,
                Pure2Kind::Psu3Char2 => ScreenKind::Psu3Char2,
            };
            render::json(&groups::pure2_parameter_screen(kind, limit))
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
