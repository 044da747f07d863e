mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use trefoil_tight::{ExceptionalMode, Sign, Slope};

use render::Report;

#[derive(Parser, Debug)]
#[command(name = "trefoil-tight", version, about = "Tight contact structures on surgeries on the right-handed trefoil")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest denominator visited by `sweep`
    #[arg(long, global = true, default_value_t = 200)]
    pub bound: i64,

    /// Half-open interval `[a, b)` swept by `sweep`
    #[arg(long, global = true, num_args = 2, value_names = ["A", "B"], value_parser = parse_slope, allow_hyphen_values = true)]
    pub interval: Option<Vec<Slope>>,

    /// Exit with status 4 if any structure is not covered by a known result
    #[arg(long, global = true)]
    pub strict: bool,

    /// Drop exceptional slopes excluded in the published arguments
    #[arg(long, global = true, alias = "paper-mode")]
    pub published_mode: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Φ(r) for r in (0, 1)
    Phi {
        #[arg(value_parser = parse_slope)]
        r: Slope,
    },
    /// Minus continued fraction of x > 1
    Cf {
        #[arg(value_parser = parse_slope)]
        x: Slope,
    },
    /// Minimal clockwise path from a to b
    Path {
        #[arg(value_parser = parse_slope, allow_hyphen_values = true)]
        a: Slope,
        #[arg(value_parser = parse_slope, allow_hyphen_values = true)]
        b: Slope,
    },
    /// Surgery slope (pq ± 1)/p² on the (p, q)-cable
    CableSlope {
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
        #[arg(value_parser = parse_sign, allow_hyphen_values = true, default_value = "-")]
        sign: Sign,
    },
    /// Re-gluing matrix for surgery on the (p, q)-cable
    CableMap {
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
        #[arg(value_parser = parse_sign, allow_hyphen_values = true, default_value = "-")]
        sign: Sign,
    },
    /// Number of tight structures on the solid torus from r to s
    Count {
        #[arg(value_parser = parse_slope, allow_hyphen_values = true)]
        r: Slope,
        #[arg(value_parser = parse_slope, allow_hyphen_values = true)]
        s: Slope,
    },
    /// All tight structures on r-surgery, with their mixed tori
    Enumerate {
        #[arg(value_parser = parse_slope)]
        r: Slope,
    },
    /// Fillability verdict of every structure on r-surgery
    Classify {
        #[arg(value_parser = parse_slope)]
        r: Slope,
        /// Only this row
        #[arg(long)]
        k: Option<i64>,
        /// Only this offset
        #[arg(long)]
        l: Option<i64>,
    },
    /// Verdict tallies on r-surgery
    Summary {
        #[arg(value_parser = parse_slope)]
        r: Slope,
    },
    /// Verdict tallies for every r = p/q in an interval
    Sweep,
    /// Graphviz rendering of a path or a classification triangle
    Dot {
        #[command(subcommand)]
        what: DotTarget,
    },
}

#[derive(Subcommand, Debug)]
pub enum DotTarget {
    Path {
        #[arg(value_parser = parse_slope, allow_hyphen_values = true)]
        a: Slope,
        #[arg(value_parser = parse_slope, allow_hyphen_values = true)]
        b: Slope,
    },
    Triangle {
        #[arg(value_parser = parse_slope)]
        r: Slope,
    },
}

fn parse_slope(s: &str) -> Result<Slope, String> {
    s.parse().map_err(|e: trefoil_tight::Error| e.to_string())
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" | "+1" | "1" | "plus" => Ok(Sign::Plus),
        "-" | "-1" | "minus" => Ok(Sign::Minus),
        _ => Err(format!("cannot parse sign from {s:?}")),
    }
}

impl Cli {
    pub fn mode(&self) -> ExceptionalMode {
        if self.published_mode {
            ExceptionalMode::Published
        } else {
            ExceptionalMode::Raw
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match render::run(&cli) {
        Ok(Report { text, not_covered }) => {
            print!("{text}");
            if cli.strict && not_covered {
                eprintln!("error: some structures are not covered by a known result");
                return ExitCode::from(4);
            }
            ExitCode::SUCCESS
        }
        Err(render::Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(render::Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
