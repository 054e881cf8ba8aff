//! Command-line definitions.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genseq_core::{Grid, Params, SeqIndex};

#[derive(Debug, Parser)]
#[command(name = "genseq", version, about = "Generalized Fibonacci and Lucas numbers F^i_{r,s}(k,n), L^i_{r,s}(k,n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate F or L at an index or an inclusive range `a..b`.
    Eval(EvalArgs),
    /// Enumerate or count the tilings behind F or L.
    Tilings(TilingsArgs),
    /// Check registry identities over a parameter grid.
    Verify(VerifyArgs),
    /// Print the rational generating function or its series coefficients.
    Genfun(GenfunArgs),
    /// Matrix generators, determinants and the Cassini value.
    Matrix(MatrixArgs),
    /// Compare a named sequence against reference terms.
    Oeis(OeisArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum SeqKindArg {
    #[default]
    F,
    L,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Backend {
    #[default]
    Recurrence,
    Closed,
    Genfun,
    Matrix,
    Tilings,
}

/// The four sequence parameters; r and s default to 1.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Length of the first rectangle kind (first recurrence step).
    #[arg(short = 'i', allow_negative_numbers = true)]
    pub i: i64,
    /// Length of the second rectangle kind (second recurrence step).
    #[arg(short = 'k', allow_negative_numbers = true)]
    pub k: i64,
    /// Colors of the first kind (first coefficient).
    #[arg(short = 'r', default_value_t = 1, allow_negative_numbers = true)]
    pub r: i64,
    /// Colors of the second kind (second coefficient).
    #[arg(short = 's', default_value_t = 1, allow_negative_numbers = true)]
    pub s: i64,
}

impl ParamArgs {
    pub fn params(&self) -> genseq_core::Result<Params> {
        Params::new(self.i, self.k, self.r, self.s)
    }
}

/// A single index `n` or an inclusive range `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub lo: SeqIndex,
    pub hi: SeqIndex,
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("`{t}` is not an integer"));
        match s.split_once("..") {
            Some((a, b)) => {
                let (lo, hi) = (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?);
                if lo > hi {
                    return Err(format!("empty range {lo}..{hi}"));
                }
                Ok(Self { lo, hi })
            }
            None => {
                let n = parse(s)?;
                Ok(Self { lo: n, hi: n })
            }
        }
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Index `n` or inclusive range `a..b` (n ≥ -1).
    #[arg(short = 'n', allow_hyphen_values = true)]
    pub n: IndexRange,
    #[arg(long, value_enum, default_value_t)]
    pub kind: SeqKindArg,
    #[arg(long, value_enum, default_value_t)]
    pub backend: Backend,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct TilingsArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(short = 'n', allow_hyphen_values = true)]
    pub n: SeqIndex,
    /// Print only the number of tilings.
    #[arg(long, conflicts_with = "render")]
    pub count_only: bool,
    /// Which tilings: all type-F tilings, or the type-L subset (needs k > i).
    #[arg(long = "type", value_enum, default_value_t)]
    pub kind: SeqKindArg,
    /// List one rendering per line (the default when --count-only is absent).
    #[arg(long)]
    pub render: bool,
    /// Stop listing after this many tilings.
    #[arg(long, default_value_t = 1000)]
    pub limit: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity id (see `--list`), `all` for the whole registry, or
    /// `corollaries` for the named-sequence corollary checks.
    #[arg(long, default_value = "all")]
    pub identity: String,
    /// List the registry and exit.
    #[arg(long)]
    pub list: bool,
    #[arg(long, default_value_t = Grid::acceptance().imax)]
    pub imax: i64,
    #[arg(long, default_value_t = Grid::acceptance().kmax)]
    pub kmax: i64,
    #[arg(long, default_value_t = Grid::acceptance().rmax)]
    pub rmax: i64,
    #[arg(long, default_value_t = Grid::acceptance().smax)]
    pub smax: i64,
    #[arg(long, default_value_t = Grid::acceptance().nmax)]
    pub nmax: i64,
    /// Upper bound for unbounded auxiliary parameters (m of ID-BREAK and ID-SHIFT-MK).
    #[arg(long, default_value_t = Grid::acceptance().aux_max)]
    pub aux_max: i64,
    /// Also run the as-printed alternative readings; their failures are
    /// reported but do not affect the exit code.
    #[arg(long)]
    pub diagnostic: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

impl VerifyArgs {
    pub fn grid(&self) -> Grid {
        Grid {
            imax: self.imax,
            kmax: self.kmax,
            rmax: self.rmax,
            smax: self.smax,
            nmax: self.nmax,
            aux_max: self.aux_max,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenfunArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Print the first N series coefficients instead of the fraction.
    #[arg(long)]
    pub coeffs: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Print Q^e.
    #[arg(long, value_name = "E")]
    pub power: Option<u64>,
    /// Print A Q^(n+1), whose entries are shifted F values.
    #[arg(long, value_name = "N", allow_hyphen_values = true)]
    pub generator: Option<SeqIndex>,
    /// Print det Q (computed, and checked against the closed form).
    #[arg(long)]
    pub det: bool,
    /// Print det A (computed; for i = 1 also checked against the closed form).
    #[arg(long)]
    pub det_a: bool,
    /// Print the Cassini value det(A Q^(n+1)) (i = 1), checked against the determinant.
    #[arg(long, value_name = "N")]
    pub cassini: Option<SeqIndex>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct OeisArgs {
    /// Sequence name or A-number (Fibonacci, Lucas, Pell, Jacobsthal, Padovan, Narayana, A003269).
    pub name: String,
    /// Reference b-file; defaults to the bundled one.
    #[arg(long)]
    pub bfile: Option<PathBuf>,
    /// Inclusive index range to compare; defaults to the first 30 terms.
    #[arg(long)]
    pub range: Option<IndexRange>,
    /// Print the terms instead of comparing.
    #[arg(long)]
    pub values: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}
