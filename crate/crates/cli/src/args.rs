use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "tanglekit",
    version,
    about = "Exact counts, bijection checks, and asymptotics for k-noncrossing tangled diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Count a family for n = 1..N by one or more methods
    Count { what: CountTarget },
    /// Exhaustive count of a diagram class (two-regular, matching, partition, braid, general)
    Oracle { class: String },
    /// Check the diagram/tableau bijection and the partition/braid map exhaustively
    BijectionCheck,
    /// Check the reflection-principle walk counts against the shape DP
    ReflectCheck,
    /// Evaluate `p32` or a literal `rec "c0, c1, ..." seeds s1,s2,... [shift S]`.
    /// Put `--` before a literal whose coefficients start with a minus sign.
    Recurrence {
        spec: Vec<String>,
    },
    /// Asymptotic expansion of `p32` or a literal recurrence
    Asym {
        spec: Vec<String>,
    },
    /// Reproduce a table: d, p32, or subexp
    Table { which: TableKind },
    /// Write an SVG drawing of a diagram literal such as `n=4; arcs=(1,3)(2,4); crossed=`
    Render {
        diagram: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountTarget {
    P32,
    D,
    Matchings,
    Partitions,
    Braids,
    Tangled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    D,
    P32,
    Subexp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Sum,
    Rec,
    Dp,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Sum => "sum",
            Method::Rec => "rec",
            Method::Dp => "dp",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    #[default]
    Text,
}

#[derive(Debug, Args)]
pub struct Opts {
    /// Largest n (same as --n-max)
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Largest n; each verb has its own default
    #[arg(long, global = true)]
    pub n_max: Option<usize>,
    /// Numbers of degree-two vertices, comma separated
    #[arg(long, global = true, value_delimiter = ',')]
    pub ell: Vec<usize>,
    /// Noncrossing bound: no k arcs mutually cross. `count` defaults to 3, `oracle` to none
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Counting methods to run side by side, comma separated
    #[arg(long, global = true, value_delimiter = ',')]
    pub method: Vec<Method>,
    /// Number of correction terms in the asymptotic expansion
    #[arg(long, global = true, default_value_t = 3)]
    pub corrections: usize,
    /// Index at which the constant K is fitted
    #[arg(long, global = true, default_value_t = 2000)]
    pub fit_n: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Opts {
    /// Upper end of the `1..=N` range: `--n-max`, else `--n`, else `default`.
    pub fn upper(&self, default: usize) -> usize {
        self.n_max.or(self.n).unwrap_or(default)
    }
}
