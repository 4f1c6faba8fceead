use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use moebius_core::cells::ZeroPattern;
use moebius_core::gram::GramOrdering;
use moebius_core::repcount::FieldSpec;
use moebius_core::Family;
use serde::Serialize;

#[derive(Parser, Debug, Clone)]
#[command(name = "moebius", version, about = "Exact computations with Moebius strip diagram algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct GlobalOpts {
    /// JSON parameter file with `p_alpha`, `p_beta`, `p_gamma` and `q`.
    #[arg(long, global = true)]
    pub params: Option<PathBuf>,
    /// Constant evaluation numerators over `1 - T`, used when no parameter file is given.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha0: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub beta0: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub gamma0: Option<String>,
    /// Leave out timing and cache metadata so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub stable: bool,
    #[arg(long, global = true, env = "MOEBIUS_CACHE_DIR")]
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    /// Seed for the randomized parts of `selftest`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZeroPatternArg {
    AllZero,
    SomeNonzero,
}

impl From<ZeroPatternArg> for ZeroPattern {
    fn from(z: ZeroPatternArg) -> ZeroPattern {
        match z {
            ZeroPatternArg::AllZero => ZeroPattern::AllZero,
            ZeroPatternArg::SomeNonzero => ZeroPattern::SomeNonzero,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderingArg {
    Enumeration,
    DotGrouped,
}

impl From<OrderingArg> for GramOrdering {
    fn from(o: OrderingArg) -> GramOrdering {
        match o {
            OrderingArg::Enumeration => GramOrdering::Enumeration,
            OrderingArg::DotGrouped => GramOrdering::DotGrouped,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvalsArg {
    /// Every closed component evaluates to 1.
    Ones,
    /// Every closed component evaluates to 0.
    Zeros,
    /// Read 0/1 values off the parameters.
    Params,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// `d1 ∘ d2`, with `d2` applied first.
    Compose {
        d1: String,
        d2: String,
    },
    /// Moebius normalization and handle linearization of one diagram.
    Normalize {
        d: String,
    },
    Tensor {
        d1: String,
        d2: String,
    },
    Star {
        d: String,
    },
    /// Bottom half, middle and top half.
    Factorize {
        d: String,
        #[arg(long = "K")]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Families containing the diagram, or membership in one family.
    Member {
        d: String,
        #[arg(long)]
        family: Option<Family>,
    },
    /// Left cell sizes for every admissible through-strand count.
    Dims {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long = "K", default_value_t = 1)]
        k: usize,
        /// Cross-check against half-diagram enumeration.
        #[arg(long)]
        check: bool,
    },
    /// Green's cells of the decorated monoid, brute force against the sandwich description.
    Cells {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long = "K", default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum, default_value_t = EvalsArg::Ones)]
        evals: EvalsArg,
    },
    Apex {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        zero_pattern: Option<ZeroPatternArg>,
    },
    /// Searches every J-cell for a strict pseudo-idempotent.
    Idempotents {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        zero_pattern: Option<ZeroPatternArg>,
    },
    MonoidM {
        #[arg(long = "K")]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Generalized conjugacy classes of `M(K, r)` or of a symmetric group.
    Conjugacy {
        #[arg(long = "K", requires = "r", conflicts_with = "symmetric")]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        symmetric: Option<usize>,
    },
    WreathTypes {
        #[arg(long = "K")]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        lambda: usize,
    },
    CountSimples {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: usize,
        #[arg(long, default_value = "char0")]
        #[serde(serialize_with = "crate::output::display")]
        field: FieldSpec,
        #[arg(long, default_value_t = 1)]
        r: u64,
    },
    Gram {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: usize,
        /// Keep only halves without dots.
        #[arg(long)]
        undecorated: bool,
        #[arg(long, value_enum, default_value_t = OrderingArg::Enumeration)]
        ordering: OrderingArg,
        /// Report the rank only, without the matrix.
        #[arg(long)]
        summary: bool,
    },
    /// Rank and determinant of a CSV matrix of rationals.
    Rank {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Closed-form `det(G_0)` for the rook family.
    GramDet {
        #[arg(long)]
        n: usize,
        /// Also build the matrix and compare determinants.
        #[arg(long)]
        check: bool,
    },
    Deligne {
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
        #[arg(long, allow_hyphen_values = true)]
        sqrt_lam: String,
    },
    /// Quick consistency battery.
    Selftest,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Compose { .. } => "compose",
            Command::Normalize { .. } => "normalize",
            Command::Tensor { .. } => "tensor",
            Command::Star { .. } => "star",
            Command::Factorize { .. } => "factorize",
            Command::Member { .. } => "member",
            Command::Dims { .. } => "dims",
            Command::Cells { .. } => "cells",
            Command::Apex { .. } => "apex",
            Command::Idempotents { .. } => "idempotents",
            Command::MonoidM { .. } => "monoid-m",
            Command::Conjugacy { .. } => "conjugacy",
            Command::WreathTypes { .. } => "wreath-types",
            Command::CountSimples { .. } => "count-simples",
            Command::Gram { .. } => "gram",
            Command::Rank { .. } => "rank",
            Command::GramDet { .. } => "gram-det",
            Command::Deligne { .. } => "deligne",
            Command::Selftest => "selftest",
        }
    }
}
