//! Command-line surface.

use clap::{Parser, Subcommand, ValueEnum};
use pqk_core::{Chirality, Side};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "pqk",
    version,
    about = "Split-quaternion calculus: exact algebra, regularity checks, \
             and conformally flat almost epsilon-Kahler structures"
)]
pub struct Cli {
    /// Offset of the quasi-random sampler; identical seeds give identical
    /// reports.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the produced document to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Multiply two elements given in the text form `a+b*i1+c*i2+d*i3`.
    Mul {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },

    /// Classify an element: invertibility, zero divisor, nilpotent,
    /// idempotent, plus its squared norm and norm.
    Classify {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },

    /// Decide one-sided regularity of a polynomial-map file. Prints
    /// `Regular` (exit 0) or the residual map (exit 1).
    Check {
        #[arg(long, value_enum)]
        side: SideArg,
        file: PathBuf,
    },

    /// Assemble a one-sided regular generator from `INDICES:COEFF` terms
    /// (for example `--term 12:1+i3`) and write the polynomial-map
    /// document.
    Fueter {
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long = "term", value_name = "INDICES:COEFF", required = true)]
        terms: Vec<String>,
    },

    /// Build an almost epsilon-Kahler structure from a regular map on a
    /// box and write the structure document.
    Build {
        /// Built-in demonstration map.
        #[arg(long, value_enum, value_name = "WHICH")]
        example: Option<ExampleArg>,
        /// Polynomial-map file with zero real part.
        #[arg(long, value_name = "FILE")]
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        chirality: SideArg,
        /// Domain box `LO:HI,LO:HI,LO:HI,LO:HI` with rational or decimal
        /// endpoints.
        #[arg(long = "box", value_name = "BOX", allow_hyphen_values = true)]
        box_spec: String,
    },

    /// Verify a structure file symbolically and at sampled points, and
    /// write the report. Exits 0 exactly when every check passes.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long = "weyl-step", default_value_t = 1e-3)]
        weyl_step: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

impl SideArg {
    pub fn side(self) -> Side {
        match self {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }

    pub fn chirality(self) -> Chirality {
        match self {
            SideArg::Left => Chirality::LeftJ,
            SideArg::Right => Chirality::RightJ,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExampleArg {
    A,
    B,
}
